#include "siggb/errors.hpp"
#include "siggb/poly.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace siggb;
using siggb::test::P;
using siggb::test::ring_of;

TEST_CASE("lead term") {
  const Ring r = ring_of(32003, {"x", "y"});
  CHECK(P(r, "x^2 + x*y + y").lead().mono == Monomial{2, 0});
  const Term c = P(r, "5").lead();
  CHECK(c.mono == Monomial{0, 0});
  CHECK(c.coeff == FieldElement{5});
  CHECK(P(r, "x*y - 1").lead_mono() == Monomial{1, 1});
  CHECK_THROWS_AS(Polynomial().lead(), EmptyPolynomialError);
  CHECK_FALSE(Polynomial().lpp().has_value());
}

TEST_CASE("addition and term scaling") {
  const Ring r7 = ring_of(7, {"x", "y"});
  CHECK(r7.add(P(r7, "x + y"), P(r7, "x - y")) == P(r7, "2*x"));
  const Polynomial p = P(r7, "3*x^2 - y + 4");
  CHECK(r7.add(p, r7.neg(p)).is_zero());

  const Ring r = ring_of(32003, {"x", "y", "z"});
  const Term y{r.field().one(), Monomial{0, 1, 0}};
  CHECK(r.term_scale(y, P(r, "x*y - z^2")) == P(r, "x*y^2 - y*z^2"));
}

TEST_CASE("arithmetic across rings is rejected") {
  const Ring a = ring_of(7, {"x", "y"});
  const Ring b = ring_of(7, {"x", "y", "z"});
  CHECK_THROWS_AS(a.add(P(a, "x"), P(b, "z")), DimensionError);
}

TEST_CASE("S-polynomials") {
  const Ring r = ring_of(32003, {"x", "y", "z"});
  CHECK(r.spoly(P(r, "x*y - z^2"), P(r, "y^2 - x*z")) == P(r, "x^2*z - y*z^2"));
  const Polynomial f = P(r, "x^3 + 2*y*z + 1");
  CHECK(r.spoly(f, f).is_zero());
  CHECK_THROWS_AS(r.spoly(Polynomial(), f), EmptyPolynomialError);

  const Ring r7 = ring_of(7, {"x", "y"});
  CHECK(r7.spoly(P(r7, "x^2 - 1"), P(r7, "x*y - 1")) == P(r7, "x - y"));
}

TEST_CASE("normal form") {
  const Ring r = ring_of(32003, {"x", "y"});
  const std::vector<Polynomial> b{P(r, "x - y")};
  CHECK(r.normal_form(P(r, "x^2"), b) == P(r, "y^2"));
  const Polynomial p = P(r, "x^3 + 7*x*y + 2");
  CHECK(r.normal_form(p, {}) == p);
  CHECK(r.normal_form(P(r, "x - y"), b).is_zero());
  CHECK_THROWS_AS(r.normal_form(p, std::vector<Polynomial>{Polynomial()}), PreconditionError);
  // Tail terms are reduced too, not just the lead.
  CHECK(r.normal_form(P(r, "y^3 + x"), b) == P(r, "y^3 + y"));
}

TEST_CASE("rendering") {
  const Ring r = ring_of(7, {"x", "y"});
  CHECK(r.render(P(r, "x - y")) == "1*x + 6*y");
  CHECK(r.render(P(r, "y^2 - 1")) == "1*y^2 + 6");
  CHECK(r.render(P(r, "3*x^2*y + 2")) == "3*x^2*y + 2");
  CHECK(r.render(Polynomial()) == "0");
  CHECK(r.render(Monomial{0, 0}) == "1");
}

TEST_CASE("pow, monic and make") {
  const Ring r = ring_of(7, {"x", "y"});
  CHECK(r.pow(P(r, "x + y"), 7) == P(r, "x^7 + y^7"));
  CHECK(r.monic(P(r, "3*x + 1")) == P(r, "x + 5"));
  CHECK(r.make({{FieldElement{3}, Monomial{1, 0}}, {FieldElement{4}, Monomial{1, 0}}}).is_zero());
  CHECK(r.is_canonical(P(r, "x^3 + x*y + 1")));
}

TEST_CASE("geobucket accumulation") {
  const Ring r = ring_of(7, {"x", "y"});
  const Monomial one{0, 0};
  // Runs of three sizes: a long one led by x^6, a medium one led by y^3 and
  // a single term -y^3.
  const Polynomial big = P(r, "x^6 + x^5 + x^4 + x^3 + x^2 + x + x^5*y + x^4*y + x^3*y + x^2*y + "
                              "x*y + x^4*y^2 + x^3*y^2 + x^2*y^2 + x*y^2 + x^3*y^3 + x^2*y^3 + 1");
  const Polynomial medium = P(r, "y^3 + x*y + y^2 + x + 2");
  GeoBucket b(r, big);
  b.sub_mul(FieldElement{6}, one, medium.terms());
  b.sub_mul(FieldElement{1}, one, P(r, "y^3").terms());

  // The y^3 terms cancel while the lead is found in the long run.
  REQUIRE(b.lead() != nullptr);
  CHECK(b.lead()->mono == Monomial{6, 0});
  const Polynomial sum = b.take();
  CHECK(r.is_canonical(sum));
  CHECK(sum == r.add(big, P(r, "x*y + y^2 + x + 2")));
  CHECK(b.take().is_zero());

  GeoBucket c(r, P(r, "x*y + 3"));
  c.pop_lead();
  CHECK(c.take() == P(r, "3"));
  GeoBucket empty(r);
  CHECK(empty.lead() == nullptr);
  CHECK_THROWS_AS(empty.pop_lead(), PreconditionError);
}

TEST_CASE("multiplication") {
  const Ring r = ring_of(7, {"x", "y"});
  CHECK(r.mul(P(r, "x + y"), P(r, "x - y")) == P(r, "x^2 - y^2"));
  CHECK(r.mul(P(r, "x + 1"), P(r, "x^2 + 6*x + 1")) == P(r, "x^3 + 1"));
  CHECK(r.mul(P(r, "x"), Polynomial()).is_zero());
}
