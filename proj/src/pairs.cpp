#include "siggb/pairs.hpp"

#include "siggb/errors.hpp"

namespace siggb {

std::string_view to_string(PairClass c) {
  switch (c) {
  case PairClass::NonRegular:
    return "non-regular";
  case PairClass::SuperRegular:
    return "super-regular";
  case PairClass::Regular:
    return "regular";
  }
  return "?";
}

std::string_view to_string(Strategy s) {
  switch (s) {
  case Strategy::MinimalSignature:
    return "sig";
  case Strategy::MinimalDegree:
    return "deg";
  case Strategy::Fifo:
    return "fifo";
  }
  return "?";
}

CriticalPair make_pair(const LabeledPoly& a, const LabeledPoly& b, const ModuleOrder& mo) {
  if (a.poly.is_zero() || b.poly.is_zero())
    throw PreconditionError("critical pair with a zero polynomial part");
  Monomial lcm = mono_lcm(a.poly.lead_mono(), b.poly.lead_mono());
  PairSide sa{mono_div(lcm, a.poly.lead_mono()), a.serial};
  PairSide sb{mono_div(lcm, b.poly.lead_mono()), b.serial};
  Signature siga = sig_mul(sa.multiplier, a.sig);
  Signature sigb = sig_mul(sb.multiplier, b.sig);
  auto c = mo.compare(siga, sigb);
  bool a_first = c > 0 || (c == 0 && to_index(a.serial) <= to_index(b.serial));
  if (a_first)
    return {std::move(sa), std::move(sb), std::move(lcm), std::move(siga), std::move(sigb)};
  return {std::move(sb), std::move(sa), std::move(lcm), std::move(sigb), std::move(siga)};
}

PairClass classify(const CriticalPair& p, const Basis& basis, const PrimeField& field) {
  const LabeledPoly& u = basis.element(p.first.id);
  const LabeledPoly& v = basis.element(p.second.id);
  if (!(p.lead_sig == p.second_sig))
    return PairClass::Regular;
  if (!u.vector || !v.vector)
    return PairClass::NonRegular;
  FieldElement c = field.div(u.poly.lead_coeff(), v.poly.lead_coeff());
  if (u.sig_lc == field.mul(c, v.sig_lc))
    return PairClass::NonRegular;
  return PairClass::SuperRegular;
}

bool PairQueue::EntryLess::operator()(const Entry& a, const Entry& b) const {
  switch (strategy) {
  case Strategy::MinimalSignature: {
    auto c = mo->compare(a.pair.lead_sig, b.pair.lead_sig);
    if (c != 0)
      return c < 0;
    break;
  }
  case Strategy::MinimalDegree:
    if (a.pair.lcm.degree() != b.pair.lcm.degree())
      return a.pair.lcm.degree() < b.pair.lcm.degree();
    break;
  case Strategy::Fifo:
    break;
  }
  return a.seq < b.seq;
}

PairQueue::PairQueue(Strategy strategy, const ModuleOrder& mo, bool dedup)
    : strategy_(strategy), dedup_(dedup), entries_(EntryLess{strategy, &mo}) {}

PairQueue::InsertOutcome PairQueue::insert(CriticalPair p, const FirstLess& first_less) {
  if (!dedup_) {
    entries_.insert(Entry{std::move(p), next_seq_++});
    return InsertOutcome::Inserted;
  }
  auto found = by_sig_.find(p.lead_sig);
  if (found == by_sig_.end()) {
    Signature key = p.lead_sig;
    auto it = entries_.insert(Entry{std::move(p), next_seq_++}).first;
    by_sig_.emplace(std::move(key), it);
    return InsertOutcome::Inserted;
  }
  const Serial incumbent = found->second->pair.first.id;
  if (!first_less || !first_less(p.first.id, incumbent))
    return InsertOutcome::DroppedIncoming;
  entries_.erase(found->second);
  found->second = entries_.insert(Entry{std::move(p), next_seq_++}).first;
  return InsertOutcome::ReplacedIncumbent;
}

std::optional<CriticalPair> PairQueue::pop() {
  if (entries_.empty())
    return std::nullopt;
  auto node = entries_.extract(entries_.begin());
  if (dedup_)
    by_sig_.erase(node.value().pair.lead_sig);
  return std::move(node.value().pair);
}

} // namespace siggb
