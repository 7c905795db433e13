#ifndef SIGGB_BENCH_HPP
#define SIGGB_BENCH_HPP

// Benchmark families and the suite runner.

#include "siggb/engine.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace siggb {

struct BenchmarkSystem {
  std::string name;
  Ring ring;
  std::vector<Polynomial> polys;
  std::optional<std::size_t> expected_gb_size;
};

/// cyclic-n over GF(modulus) in x1..xn, grevlex.
BenchmarkSystem cyclic(std::size_t n, std::uint64_t modulus = PrimeField::kDefaultModulus);

/// katsura-k over GF(modulus) in x0..xk, grevlex.
BenchmarkSystem katsura(std::size_t k, std::uint64_t modulus = PrimeField::kDefaultModulus);

struct RandomIdealShape {
  std::size_t nvars = 3;
  std::size_t max_generators = 4;
  unsigned max_degree = 3;
  std::size_t max_terms = 4;
  std::uint64_t modulus = 7;
};

/// A pseudo-random ideal determined by seed and shape: between 1 and
/// max_generators nonzero polynomials, grevlex.
BenchmarkSystem random_ideal(std::uint32_t seed, const RandomIdealShape& shape = {});

struct SuiteRow {
  std::string system;
  std::string config;
  RunStats stats;
  /// extract_gb agrees with the reduced Buchberger basis.
  bool verdict = false;
  std::size_t admissibility_violations = 0;
};

/// One row per (system, config), systems outermost. The reference basis is
/// computed once per system. Engine errors propagate.
std::vector<SuiteRow> run_suite(const std::vector<BenchmarkSystem>& systems,
                                const std::vector<EngineConfig>& configs);

} // namespace siggb

#endif
