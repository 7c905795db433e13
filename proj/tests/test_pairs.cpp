#include "siggb/errors.hpp"
#include "siggb/pairs.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace siggb;
using siggb::test::P;
using siggb::test::ring_of;

namespace {

struct TwoPoly {
  Ring ring = ring_of(7, {"x", "y"});
  ModuleOrder pot = ModuleOrder::pot(ring.order(), 2);
  Basis basis{2};
  Serial a{}, b{};

  TwoPoly() {
    a = basis.add({Serial{}, Signature{0, ring.one()}, ring.field().one(), P(ring, "x^2 - 1"),
                   unit_vector(ring, 2, 0)});
    b = basis.add({Serial{}, Signature{1, ring.one()}, ring.field().one(), P(ring, "x*y - 1"),
                   unit_vector(ring, 2, 1)});
  }
};

CriticalPair pair_with(Signature lead, Monomial lcm, std::uint32_t first) {
  return CriticalPair{{Monomial(2), Serial{first}}, {Monomial(2), Serial{first + 1}}, lcm, lead,
                      lead};
}

} // namespace

TEST_CASE("make_pair orients by signature") {
  TwoPoly t;
  const LabeledPoly& a = t.basis.element(t.a);
  const LabeledPoly& b = t.basis.element(t.b);
  CriticalPair p = make_pair(a, b, t.pot);
  CHECK(p.lcm == Monomial{2, 1});
  CHECK(p.first.id == t.a);
  CHECK(p.first.multiplier == Monomial{0, 1});
  CHECK(p.second.id == t.b);
  CHECK(p.second.multiplier == Monomial{1, 0});
  CHECK(p.lead_sig == Signature{0, {0, 1}});
  CHECK(p.second_sig == Signature{1, {1, 0}});

  CriticalPair q = make_pair(b, a, t.pot);
  CHECK(q.first.id == p.first.id);
  CHECK(q.lead_sig == p.lead_sig);
  CHECK(q.second_sig == p.second_sig);

  CriticalPair self = make_pair(a, a, t.pot);
  CHECK(self.lcm == Monomial{2, 0});
  CHECK(self.first.multiplier == Monomial{0, 0});
  CHECK(self.lead_sig == self.second_sig);
  CHECK(classify(self, t.basis, t.ring.field()) == PairClass::NonRegular);

  LabeledPoly zero{Serial{9}, Signature{0, t.ring.one()}, {1}, Polynomial(), std::nullopt};
  CHECK_THROWS_AS(make_pair(a, zero, t.pot), PreconditionError);
}

TEST_CASE("classification") {
  const Ring r = ring_of(7, {"x", "y"});
  const ModuleOrder pot = ModuleOrder::pot(r.order(), 2);
  Basis g(2);
  auto add = [&](const char* poly, bool with_vector) {
    return g.add({Serial{}, Signature{0, r.one()}, r.field().one(), P(r, poly),
                  with_vector ? std::optional(unit_vector(r, 2, 0)) : std::nullopt});
  };
  const Serial u = add("x*y + 1", true);
  const Serial v = add("x*y + 2", true);     // c = 1, the leads cancel
  const Serial w = add("4*x*y", true);       // c = 1/4 = 2 in GF(7)
  const Serial s = add("x*y + 3", false);

  CHECK(classify(make_pair(g.element(u), g.element(v), pot), g, r.field()) == PairClass::NonRegular);
  CHECK(classify(make_pair(g.element(u), g.element(w), pot), g, r.field()) ==
        PairClass::SuperRegular);
  CHECK(classify(make_pair(g.element(u), g.element(s), pot), g, r.field()) == PairClass::NonRegular);

  TwoPoly t;
  CriticalPair p = make_pair(t.basis.element(t.a), t.basis.element(t.b), t.pot);
  CHECK(classify(p, t.basis, t.ring.field()) == PairClass::Regular);
  CHECK(classify(p, t.basis, t.ring.field()) == PairClass::Regular);

  p.first.id = Serial{42};
  CHECK_THROWS_AS(classify(p, t.basis, t.ring.field()), LookupError);
}

TEST_CASE("queue strategies") {
  const Ring r = ring_of(7, {"x", "y"});
  const ModuleOrder pot = ModuleOrder::pot(r.order(), 2);

  PairQueue by_sig(Strategy::MinimalSignature, pot, false);
  by_sig.insert(pair_with({0, {0, 1}}, {2, 1}, 0));
  by_sig.insert(pair_with({1, {1, 0}}, {2, 3}, 2));
  CHECK(by_sig.pop()->lead_sig == Signature{1, {1, 0}});
  CHECK(by_sig.pop()->lead_sig == Signature{0, {0, 1}});
  CHECK_FALSE(by_sig.pop());

  PairQueue by_deg(Strategy::MinimalDegree, pot, false);
  by_deg.insert(pair_with({0, {0, 1}}, {2, 3}, 0));
  by_deg.insert(pair_with({0, {0, 2}}, {2, 1}, 2));
  CHECK(by_deg.pop()->lcm.degree() == 3);

  PairQueue fifo(Strategy::Fifo, pot, false);
  fifo.insert(pair_with({0, {3, 0}}, {4, 1}, 0));
  fifo.insert(pair_with({1, {0, 0}}, {1, 1}, 2));
  CHECK(fifo.pop()->first.id == Serial{0});

  // Ties fall back to insertion order.
  PairQueue ties(Strategy::MinimalSignature, pot, false);
  ties.insert(pair_with({0, {1, 0}}, {2, 0}, 4));
  ties.insert(pair_with({0, {1, 0}}, {2, 0}, 0));
  CHECK(ties.pop()->first.id == Serial{4});
}

TEST_CASE("signature deduplication") {
  const Ring r = ring_of(7, {"x", "y"});
  const ModuleOrder pot = ModuleOrder::pot(r.order(), 2);

  PairQueue plain(Strategy::MinimalSignature, pot, false);
  CHECK(plain.insert(pair_with({0, {1, 0}}, {2, 0}, 0)) == PairQueue::InsertOutcome::Inserted);
  CHECK(plain.insert(pair_with({0, {1, 0}}, {2, 0}, 0)) == PairQueue::InsertOutcome::Inserted);
  CHECK(plain.size() == 2);

  auto smaller_serial_is_less = [](Serial in, Serial inc) { return to_index(in) < to_index(inc); };
  PairQueue dedup(Strategy::MinimalSignature, pot, true);
  CHECK(dedup.insert(pair_with({0, {1, 0}}, {2, 0}, 5), smaller_serial_is_less) ==
        PairQueue::InsertOutcome::Inserted);
  CHECK(dedup.insert(pair_with({0, {1, 0}}, {2, 0}, 2), smaller_serial_is_less) ==
        PairQueue::InsertOutcome::ReplacedIncumbent);
  CHECK(dedup.insert(pair_with({0, {1, 0}}, {2, 0}, 7), smaller_serial_is_less) ==
        PairQueue::InsertOutcome::DroppedIncoming);
  // Equal under the order: the earlier pair stays.
  CHECK(dedup.insert(pair_with({0, {1, 0}}, {2, 0}, 2), smaller_serial_is_less) ==
        PairQueue::InsertOutcome::DroppedIncoming);
  CHECK(dedup.insert(pair_with({1, {1, 0}}, {2, 0}, 9), smaller_serial_is_less) ==
        PairQueue::InsertOutcome::Inserted);
  CHECK(dedup.size() == 2);
  auto first = dedup.pop();
  CHECK(first->first.id == Serial{9});
  CHECK(dedup.pop()->first.id == Serial{2});
  CHECK(dedup.empty());
  // After popping, the signature may be queued again.
  CHECK(dedup.insert(pair_with({0, {1, 0}}, {2, 0}, 3), smaller_serial_is_less) ==
        PairQueue::InsertOutcome::Inserted);
}

TEST_CASE("strategy names") {
  CHECK(to_string(Strategy::MinimalSignature) == "sig");
  CHECK(to_string(Strategy::MinimalDegree) == "deg");
  CHECK(to_string(Strategy::Fifo) == "fifo");
  CHECK(to_string(PairClass::SuperRegular) == "super-regular");
}
