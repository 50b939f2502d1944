#include "rews/formulas.hpp"

#include <stdexcept>

#include "rews/state.hpp"

namespace rews {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact: out is B(n-k+i, i) after this step
  }
  return out;
}

BigInt pow2(std::uint64_t e) {
  BigInt out = 1;
  out <<= e;
  return out;
}

BigInt count_fully_separable_formula(unsigned n) {
  check_qubits(n, 62, "count_fully_separable_formula");
  return pow2(n + 1);
}

BigInt count_two_separable_balanced_formula(unsigned n) {
  if (n < 2 || n > 16) throw RangeError("count_two_separable_balanced_formula: n in [2, 16]");
  BigInt twice = 0;
  for (unsigned k = 1; k + 1 <= n; ++k) {
    const std::uint64_t rest = std::uint64_t{1} << (n - k);
    const BigInt central = binomial(rest, rest / 2);
    if (central % 2 != 0) throw std::logic_error("central binomial is odd");
    const BigInt bracket = pow2(rest) - central / 2;
    twice += binomial(n, k) * binomial(std::uint64_t{1} << k, std::uint64_t{1} << (k - 1)) * bracket;
  }
  if (twice % 2 != 0) throw std::logic_error("balanced two-separable sum is odd");
  return twice / 2;
}

BigInt count_two_separable_classD_formula(unsigned n, std::uint64_t degree) {
  check_qubits(n, 62, "count_two_separable_classD_formula");
  if (degree > (std::uint64_t{1} << n) ||
      classify_degree(n, degree) != StructuralClass::kEvenLow) {
    throw DomainError("degree " + std::to_string(degree) + " is not in class D for n = " +
                      std::to_string(n));
  }
  return BigInt(n) * binomial(std::uint64_t{1} << (n - 1), degree / 2);
}

std::string FractionReport::ratio_text() const {
  return separable_count.str() + "/" + total.str();
}

FractionReport entangled_fraction_report(unsigned n, std::uint64_t degree) {
  check_qubits(n, 62, "entangled_fraction_report");
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (degree > dim) throw DomainError("degree exceeds 2^n");
  const StructuralClass cls = classify_degree(n, degree);
  if (cls != StructuralClass::kEvenLow && cls != StructuralClass::kEvenLowMirror) {
    throw DomainError("degree " + std::to_string(degree) + " is not in class D or E for n = " +
                      std::to_string(n));
  }
  const std::uint64_t low = cls == StructuralClass::kEvenLow ? degree : dim - degree;
  FractionReport out;
  out.n = n;
  out.degree = degree;
  out.separable_count = BigInt(n) * binomial(dim / 2, low / 2);
  out.total = binomial(dim, low);
  out.ratio = Rational(out.separable_count, out.total);
  return out;
}

FractionSeries entangled_fraction_series(unsigned n_from, unsigned n_to, std::uint64_t gap) {
  FractionSeries out;
  for (unsigned n = n_from; n <= n_to; ++n) {
    out.points.push_back(entangled_fraction_report(n, (std::uint64_t{1} << n) - gap));
  }
  out.strictly_decreasing = true;
  for (std::size_t i = 1; i < out.points.size(); ++i) {
    if (!(out.points[i].ratio < out.points[i - 1].ratio)) out.strictly_decreasing = false;
  }
  return out;
}

}  // namespace rews
