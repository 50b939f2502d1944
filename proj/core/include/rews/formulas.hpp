#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rews {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient B(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt pow2(std::uint64_t e);

/// Number of fully separable n-qubit states: 2^(n+1).
BigInt count_fully_separable_formula(unsigned n);

/// Closed-form count of 2-separable balanced n-qubit states,
///   1/2 sum_{k=1}^{n-1} B(n,k) B(2^k, 2^(k-1)) [2^(2^(n-k)) - 1/2 B(2^(n-k), 2^(n-k-1))].
/// Requires 2 <= n <= 16.
BigInt count_two_separable_balanced_formula(unsigned n);

/// n * B(2^(n-1), M/2): count of 2-separable states with M minus signs,
/// M in the even-low class. Throws DomainError otherwise.
BigInt count_two_separable_classD_formula(unsigned n, std::uint64_t degree);

/// Share of 2-separable states among all states with degree M, for M in
/// the even-low class or its mirror. Both counts are kept unreduced.
struct FractionReport {
  unsigned n = 0;
  std::uint64_t degree = 0;
  BigInt separable_count;  // n B(2^(n-1), m/2), m = min(M, 2^n - M)
  BigInt total;            // B(2^n, M)
  Rational ratio;

  std::string ratio_text() const;  // "separable_count/total"
};

FractionReport entangled_fraction_report(unsigned n, std::uint64_t degree);

/// Reports for n = n_from..n_to at fixed gap 2^n - M.
struct FractionSeries {
  std::vector<FractionReport> points;
  bool strictly_decreasing = false;
};
FractionSeries entangled_fraction_series(unsigned n_from, unsigned n_to, std::uint64_t gap);

/// One formula-versus-enumeration comparison.
struct FormulaReport {
  std::string id;
  unsigned n = 0;
  std::optional<std::uint64_t> degree;
  BigInt formula_value;
  std::optional<BigInt> brute_value;
  std::string note;

  std::optional<bool> match() const {
    if (!brute_value) return std::nullopt;
    return formula_value == *brute_value;
  }
};

}  // namespace rews
