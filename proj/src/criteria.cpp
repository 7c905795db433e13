#include "siggb/criteria.hpp"

#include "siggb/errors.hpp"
#include "siggb/reduction.hpp"

namespace siggb {

std::string_view to_string(PartialOrderKind kind) {
  switch (kind) {
  case PartialOrderKind::F5:
    return "f5";
  case PartialOrderKind::Ratio:
    return "ratio";
  case PartialOrderKind::EarlierUnsound:
    return "earlier-unsound";
  }
  return "?";
}

bool unsound_order_available() {
#ifdef SIGGB_UNSOUND_ORDER
  return true;
#else
  return false;
#endif
}

namespace {

// Shared first clause of the F5 and unsound orders: a syzygy is below every
// nonzero element. Returns nullopt when both or neither are syzygies.
std::optional<bool> syzygy_clause(const OrderView& a, const OrderView& b) {
  const bool a_zero = a.lead == nullptr;
  const bool b_zero = b.lead == nullptr;
  if (a_zero != b_zero)
    return a_zero;
  return std::nullopt;
}

} // namespace

bool po_less(const OrderView& a, const OrderView& b, PartialOrderKind kind,
             const TermOrder& order) {
  if (a.serial == b.serial)
    return false;
  switch (kind) {
  case PartialOrderKind::F5:
    if (auto z = syzygy_clause(a, b))
      return *z;
    return to_index(a.serial) > to_index(b.serial);

  case PartialOrderKind::Ratio: {
    if (a.sig->index != b.sig->index)
      return false;
    std::strong_ordering c = std::strong_ordering::equal;
    if (a.lead == nullptr || b.lead == nullptr) {
      // lpp(0) = 0 is below every power product.
      c = (a.lead != nullptr) <=> (b.lead != nullptr);
    } else {
      // lpp(t'f') vs lpp(tf) with t'*sig(a) = t*sig(b) = lcm of the two
      // signatures, multiplied through by sig(a)*sig(b)/lcm.
      c = order.compare(mono_mul(*a.lead, b.sig->mono), mono_mul(*b.lead, a.sig->mono));
    }
    if (c != 0)
      return c < 0;
    return to_index(a.serial) > to_index(b.serial);
  }

  case PartialOrderKind::EarlierUnsound:
#ifdef SIGGB_UNSOUND_ORDER
    if (auto z = syzygy_clause(a, b))
      return *z;
    return to_index(a.serial) < to_index(b.serial);
#else
    throw ConfigError("the earlier-unsound order is only available in test builds");
#endif
  }
  return false;
}

std::optional<RewriteWitness> gen_rewritable(const Monomial& t, const LabeledPoly& a,
                                             const Basis& basis, PartialOrderKind kind,
                                             const TermOrder& order) {
  if (a.poly.is_zero())
    throw PreconditionError("gen-rewritable query on a zero polynomial part");
  const Signature s = sig_mul(t, a.sig);
  const std::uint64_t s_mask = divmask(s.mono);
  const OrderView av = view(a);
  const auto syz_masks = basis.syzygy_masks();
  for (std::uint32_t pos : basis.syzygies_at(s.index)) {
    if (divmask_excludes(syz_masks[pos], s_mask))
      continue;
    const SyzygyRecord& rec = basis.syzygies()[pos];
    if (mono_divides(rec.sig.mono, s.mono) && po_less(view(rec), av, kind, order))
      return RewriteWitness{rec.serial, rec.sig, RewriteWitness::Reason::SyzygyDivisor};
  }
  const auto elements = basis.elements();
  const auto sig_masks = basis.sig_masks();
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (divmask_excludes(sig_masks[k], s_mask))
      continue;
    const LabeledPoly& w = elements[k];
    if (sig_divides(w.sig, s) && po_less(view(w), av, kind, order))
      return RewriteWitness{w.serial, w.sig, RewriteWitness::Reason::OrderSmaller};
  }
  return std::nullopt;
}

bool pair_rewritable(const CriticalPair& p, const Basis& basis, PartialOrderKind kind,
                     const TermOrder& order) {
  return gen_rewritable(p.first.multiplier, basis.element(p.first.id), basis, kind, order) ||
         gen_rewritable(p.second.multiplier, basis.element(p.second.id), basis, kind, order);
}

bool gvw_divisible(const Monomial& t, const LabeledPoly& a, const Basis& basis) {
  if (a.poly.is_zero())
    throw PreconditionError("GVW-divisibility query on a zero polynomial part");
  const Signature s = sig_mul(t, a.sig);
  const std::uint64_t s_mask = divmask(s.mono);
  const auto syz_masks = basis.syzygy_masks();
  for (std::uint32_t pos : basis.syzygies_at(s.index)) {
    if (!divmask_excludes(syz_masks[pos], s_mask) &&
        mono_divides(basis.syzygies()[pos].sig.mono, s.mono))
      return true;
  }
  return false;
}

bool eventually_super_top_reducible(const Ring& ring, const ModuleOrder& mo, const Monomial& t,
                                    const LabeledPoly& a, Basis& basis,
                                    const ReducerIndex* index) {
  if (a.poly.is_zero())
    throw PreconditionError("super top-reducibility query on a zero polynomial part");
  const Term scale{ring.field().one(), t};
  WorkingElement w{sig_mul(t, a.sig), a.sig_lc, ring.term_scale(scale, a.poly), std::nullopt};
  if (a.vector)
    w.vector = module_scale(ring, scale, *a.vector);

  const ReductionContext ctx{ring, mo, basis, index};
  if (!sig_reduce_step(ctx, w))
    return false;
  w = sig_reduce(ctx, std::move(w));

  if (w.poly.is_zero()) {
    SyzygyRecord rec;
    rec.sig = w.sig;
    rec.origin = SyzygyOrigin::ZeroReduction;
    rec.source = to_index(a.serial);
    rec.vector = std::move(w.vector);
    basis.add_syzygy(std::move(rec));
    return false;
  }

  const PrimeField& field = ring.field();
  const Monomial& h_lead = w.poly.lead_mono();
  for (const LabeledPoly& e : basis.elements()) {
    if (!sig_divides(e.sig, w.sig) || !mono_divides(e.poly.lead_mono(), h_lead))
      continue;
    if (!(mono_div(w.sig.mono, e.sig.mono) == mono_div(h_lead, e.poly.lead_mono())))
      continue;
    if (w.vector && e.vector &&
        field.mul(w.sig_lc, e.poly.lead_coeff()) != field.mul(w.poly.lead_coeff(), e.sig_lc))
      continue;
    return true;
  }
  return false;
}

bool AdmissibilityMonitor::check(const OrderView& parent, const OrderView& child,
                                 PartialOrderKind kind, const TermOrder& order) {
  if (!enabled_)
    return true;
  ++checks_;
  if (po_less(child, parent, kind, order))
    return true;
  log_.push_back({parent.serial, child.serial, kind});
  return false;
}

} // namespace siggb
