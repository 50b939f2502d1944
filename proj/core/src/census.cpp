#include "rews/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "rews/separability.hpp"

namespace rews {

namespace {

unsigned delta_of(const Rews& r, DeltaMethod method) {
  if (method == DeltaMethod::kBrute) return separable_degree_brute(r).delta;
  return separable_degree(r).delta;
}

// Runs body(begin, end, shard) over `workers` contiguous shards of [0, total).
template <typename Body>
void run_sharded(std::uint64_t total, unsigned workers, Body&& body) {
  workers = std::max(1u, workers);
  const std::uint64_t shards = std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1));
  if (shards == 1) {
    body(std::uint64_t{0}, total, std::size_t{0});
    return;
  }
  std::vector<std::jthread> threads;
  for (std::uint64_t s = 0; s < shards; ++s) {
    const std::uint64_t begin = total * s / shards;
    const std::uint64_t end = total * (s + 1) / shards;
    threads.emplace_back([&body, begin, end, s] { body(begin, end, static_cast<std::size_t>(s)); });
  }
}

}  // namespace

std::uint64_t state_count(unsigned n) {
  check_qubits(n, kMaxEnumerationQubits, "enumeration");
  return std::uint64_t{1} << (std::uint64_t{1} << n);
}

std::vector<Rews> enumerate_all(unsigned n) {
  if (n > kMaxEnumerationQubits) {
    throw RangeError("enumerate_all: n = " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxEnumerationQubits) + "; use sample_random instead");
  }
  std::vector<Rews> out;
  out.reserve(state_count(n));
  for_each_state(n, 0, state_count(n), [&](Rews r) { out.push_back(std::move(r)); });
  return out;
}

BigInt CensusTable::total() const {
  BigInt sum = 0;
  for (const auto& [key, count] : rows) sum += count;
  return sum;
}

BigInt CensusTable::count_degree(std::uint64_t degree) const {
  BigInt sum = 0;
  for (const auto& [key, count] : rows) {
    if (key.degree == degree) sum += count;
  }
  return sum;
}

BigInt CensusTable::count_class(StructuralClass c) const {
  BigInt sum = 0;
  for (const auto& [key, count] : rows) {
    if (key.cls == c) sum += count;
  }
  return sum;
}

BigInt CensusTable::count_delta(unsigned delta) const {
  BigInt sum = 0;
  for (const auto& [key, count] : rows) {
    if (key.delta == delta) sum += count;
  }
  return sum;
}

void CensusTable::merge(const CensusTable& other) {
  for (const auto& [key, count] : other.rows) rows[key] += count;
}

unsigned default_workers() {
  if (const char* env = std::getenv("REWS_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CensusTable census(unsigned n, DeltaMethod method, unsigned workers) {
  const std::uint64_t total = state_count(n);
  if (workers == 0) workers = default_workers();
  std::vector<CensusTable> partial(std::min<std::uint64_t>(std::max(1u, workers), total));
  run_sharded(total, static_cast<unsigned>(partial.size()),
              [&](std::uint64_t begin, std::uint64_t end, std::size_t shard) {
                std::map<CensusKey, std::uint64_t> local;
                for_each_state(n, begin, end, [&](const Rews& r) {
                  const std::uint64_t degree = structural_degree(r);
                  ++local[{degree, classify_degree(n, degree), delta_of(r, method)}];
                });
                auto& table = partial[shard];
                table.n = n;
                for (const auto& [key, count] : local) table.rows[key] += count;
              });
  CensusTable out;
  out.n = n;
  for (const auto& p : partial) out.merge(p);
  return out;
}

std::vector<std::uint8_t> separable_degree_table(unsigned n, DeltaMethod method,
                                                 unsigned workers) {
  const std::uint64_t total = state_count(n);
  if (workers == 0) workers = default_workers();
  std::vector<std::uint8_t> out(total);
  run_sharded(total, workers, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    for_each_state(n, begin, end, [&](const Rews& r) {
      out[r.to_integer()] = static_cast<std::uint8_t>(delta_of(r, method));
    });
  });
  return out;
}

}  // namespace rews
