#include "siggb/bench.hpp"

#include "siggb/errors.hpp"
#include "siggb/oracle.hpp"

#include <cstdlib>
#include <random>

namespace siggb {

namespace {

std::vector<std::string> var_names(std::size_t count, std::size_t first) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i)
    names.push_back("x" + std::to_string(first + i));
  return names;
}

} // namespace

BenchmarkSystem cyclic(std::size_t n, std::uint64_t modulus) {
  if (n < 2)
    throw PreconditionError("cyclic-n needs n >= 2");
  Ring ring(PrimeField(modulus), var_names(n, 1), TermOrder(TermOrderKind::GrevLex, n));
  std::vector<Polynomial> polys;
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Term> terms;
    for (std::size_t start = 0; start < n; ++start) {
      Monomial m(n);
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t v = (start + j) % n;
        m.set(v, m[v] + 1u);
      }
      terms.push_back({ring.field().one(), m});
    }
    polys.push_back(ring.make(std::move(terms)));
  }
  Monomial all(n);
  for (std::size_t v = 0; v < n; ++v)
    all.set(v, 1);
  polys.push_back(ring.sub(ring.term(ring.field().one(), all), ring.constant(1)));
  return {"cyclic" + std::to_string(n), std::move(ring), std::move(polys), std::nullopt};
}

BenchmarkSystem katsura(std::size_t k, std::uint64_t modulus) {
  if (k < 1)
    throw PreconditionError("katsura-k needs k >= 1");
  const std::size_t n = k + 1;
  Ring ring(PrimeField(modulus), var_names(n, 0), TermOrder(TermOrderKind::GrevLex, n));
  const PrimeField& field = ring.field();
  std::vector<Polynomial> polys;

  std::vector<Term> linear{{field.from_integer(-1), ring.one()}, {field.one(), ring.var(0)}};
  for (std::size_t i = 1; i < n; ++i)
    linear.push_back({field.from_integer(2), ring.var(i)});
  polys.push_back(ring.make(std::move(linear)));

  const long kk = static_cast<long>(k);
  for (long m = 0; m < kk; ++m) {
    std::vector<Term> terms{{field.from_integer(-1), ring.var(static_cast<std::size_t>(m))}};
    for (long i = -kk; i <= kk; ++i) {
      long a = std::labs(i);
      long b = std::labs(m - i);
      if (b > kk)
        continue;
      terms.push_back({field.one(), mono_mul(ring.var(static_cast<std::size_t>(a)),
                                             ring.var(static_cast<std::size_t>(b)))});
    }
    polys.push_back(ring.make(std::move(terms)));
  }
  return {"katsura" + std::to_string(k), std::move(ring), std::move(polys), std::nullopt};
}

BenchmarkSystem random_ideal(std::uint32_t seed, const RandomIdealShape& shape) {
  if (shape.nvars == 0 || shape.max_generators == 0 || shape.max_terms == 0)
    throw PreconditionError("random ideal shape must be nonempty");
  Ring ring(PrimeField(shape.modulus), shape.nvars, TermOrderKind::GrevLex);
  std::mt19937 rng(seed);
  auto uniform = [&rng](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };

  std::vector<Polynomial> polys;
  const std::size_t count = uniform(1, shape.max_generators);
  while (polys.size() < count) {
    std::vector<Term> terms;
    const std::size_t nterms = uniform(1, shape.max_terms);
    for (std::size_t t = 0; t < nterms; ++t) {
      Monomial m(shape.nvars);
      const std::uint64_t degree = uniform(0, shape.max_degree);
      for (std::uint64_t d = 0; d < degree; ++d) {
        std::size_t v = uniform(0, shape.nvars - 1);
        m.set(v, m[v] + 1u);
      }
      terms.push_back({ring.field().from_integer(static_cast<std::int64_t>(uniform(1, shape.modulus - 1))), m});
    }
    Polynomial p = ring.make(std::move(terms));
    if (!p.is_zero())
      polys.push_back(std::move(p));
  }
  return {"random" + std::to_string(seed), std::move(ring), std::move(polys), std::nullopt};
}

std::vector<SuiteRow> run_suite(const std::vector<BenchmarkSystem>& systems,
                                const std::vector<EngineConfig>& configs) {
  std::vector<SuiteRow> rows;
  for (const BenchmarkSystem& sys : systems) {
    if (configs.empty())
      continue;
    const std::vector<Polynomial> reference = reduce_gb(sys.ring, buchberger(sys.ring, sys.polys));
    for (const EngineConfig& cfg : configs) {
      RunResult r = gbgc(sys.ring, sys.polys, cfg);
      rows.push_back({sys.name, cfg.label(), r.stats, r.groebner_basis == reference,
                      r.violations.size()});
    }
  }
  return rows;
}

} // namespace siggb
