#include "siggb/bench.hpp"
#include "siggb/engine.hpp"
#include "siggb/errors.hpp"
#include "siggb/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace siggb;
using siggb::test::P;
using siggb::test::Ps;
using siggb::test::ring_of;

TEST_CASE("Buchberger") {
  const Ring r = ring_of(7, {"x", "y"});
  const auto gb = buchberger(r, Ps(r, {"x^2 - 1", "x*y - 1"}));
  CHECK(is_groebner_basis(r, gb));
  CHECK(reduce_gb(r, gb) == Ps(r, {"x - y", "y^2 - 1"}));
  CHECK(reduce_gb(r, buchberger(r, Ps(r, {"x"}))) == Ps(r, {"x"}));
  CHECK(reduce_gb(r, buchberger(r, Ps(r, {"x", "x^2"}))) == Ps(r, {"x"}));
  CHECK(buchberger(r, std::vector<Polynomial>{Polynomial()}).empty());
  CHECK_FALSE(is_groebner_basis(r, Ps(r, {"x^2 - 1", "x*y - 1"})));
}

TEST_CASE("reduced bases") {
  const Ring r = ring_of(7, {"x", "y"});
  CHECK(reduce_gb(r, Ps(r, {"x - y", "x^2 - 1", "y^2 - 1"})) == Ps(r, {"x - y", "y^2 - 1"}));
  CHECK(reduce_gb(r, Ps(r, {"x - y", "y^2 - 1"})) == Ps(r, {"x - y", "y^2 - 1"}));
  CHECK(reduce_gb(r, Ps(r, {"2*x"})) == Ps(r, {"x"}));

  // Independent of generator order.
  const BenchmarkSystem c4 = cyclic(4);
  auto gb = buchberger(c4.ring, c4.polys);
  const auto once = reduce_gb(c4.ring, gb);
  std::reverse(gb.begin(), gb.end());
  CHECK(reduce_gb(c4.ring, gb) == once);
  CHECK(reduce_gb(c4.ring, once) == once);
}

TEST_CASE("basis equality") {
  const Ring r = ring_of(7, {"x", "y"});
  const auto f = Ps(r, {"x^2 - 1", "x*y - 1"});
  const RunResult res = gbgc(r, f, EngineConfig{});
  CHECK(gb_equal(r, res.groebner_basis, buchberger(r, f)));
  CHECK_FALSE(gb_equal(r, Ps(r, {"x"}), Ps(r, {"y"})));
  CHECK(gb_equal(r, f, f));
}

namespace {

struct Run {
  Ring ring = ring_of(7, {"x", "y"});
  RunResult result;

  explicit Run(ModuleOrderKind mo) : result(make(mo)) {}

  RunResult make(ModuleOrderKind mo) {
    EngineConfig cfg;
    cfg.module_order = mo;
    return gbgc(ring, Ps(ring, {"x^2 - 1", "x*y - 1"}), cfg);
  }
};

} // namespace

TEST_CASE("standard representations") {
  for (auto kind : {ModuleOrderKind::Pot, ModuleOrderKind::Schreyer}) {
    Run run(kind);
    const Ring& r = run.ring;
    const Basis& g = run.result.basis;
    const ModuleOrder& mo = run.result.module_order;

    // A member times a monomial.
    const LabeledPoly& e = g.elements().back();
    const Term t{r.field().from_integer(3), Monomial{1, 2}};
    WorkingElement multiple{sig_mul(t.mono, e.sig), r.field().mul(t.coeff, e.sig_lc),
                            r.term_scale(t, e.poly), module_scale(r, t, *e.vector)};
    CHECK(has_standard_representation(r, mo, multiple, g));

    // Every pair of the final basis.
    SpotcheckReport report = sgb_spotcheck(r, mo, g);
    CHECK(report.passed());
    CHECK(report.pairs_checked == g.elements().size() * (g.elements().size() - 1) / 2);
  }
}

TEST_CASE("a lead divisible by nothing has no standard representation") {
  const Ring r = ring_of(7, {"x", "y"});
  const auto f = Ps(r, {"x^2 - 1", "x*y - 1"});
  const ModuleOrder pot = ModuleOrder::pot(r.order(), 2);
  Basis raw(2);
  for (std::size_t i = 0; i < 2; ++i)
    raw.add({Serial{}, Signature{static_cast<std::uint32_t>(i), r.one()}, r.field().one(), f[i],
             unit_vector(r, 2, i)});
  // y*f1 - x*f2 = x - y, whose lead x no input lead divides.
  ModuleVector u(2);
  u[0] = P(r, "y");
  u[1] = P(r, "-x");
  WorkingElement s{Signature{0, {0, 1}}, r.field().one(), P(r, "x - y"), u};
  CHECK_FALSE(has_standard_representation(r, pot, s, raw));

  SpotcheckReport report = sgb_spotcheck(r, pot, raw);
  CHECK_FALSE(report.passed());
  CHECK(report.failures.size() == 1);

  Basis single(2);
  single.add({Serial{}, Signature{0, r.one()}, r.field().one(), f[0], unit_vector(r, 2, 0)});
  CHECK(sgb_spotcheck(r, pot, single).passed());
  CHECK(sgb_spotcheck(r, pot, single).pairs_checked == 0);
}

TEST_CASE("the search refuses oversized instances") {
  Run run(ModuleOrderKind::Pot);
  StandardRepLimits tight;
  tight.max_unknowns = 1;
  CHECK_THROWS_AS(sgb_spotcheck(run.ring, run.result.module_order, run.result.basis, tight),
                  SizeError);

  Run lean(ModuleOrderKind::Pot);
  EngineConfig cfg;
  cfg.full_vector = false;
  RunResult sigonly = gbgc(lean.ring, Ps(lean.ring, {"x^2 - 1", "x*y - 1"}), cfg);
  CHECK_THROWS_AS(sgb_spotcheck(lean.ring, sigonly.module_order, sigonly.basis), PreconditionError);
}
