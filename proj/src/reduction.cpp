#include "siggb/reduction.hpp"

#include "siggb/errors.hpp"

#include <algorithm>

namespace siggb {

namespace {

const LabeledPoly* find_reducer(const ReductionContext& ctx, const Term& lead, const Signature& sig,
                                FieldElement sig_lc, bool has_vector) {
  const Ring& ring = ctx.ring;
  const std::uint64_t lead_mask = divmask(lead.mono);
  const auto elements = ctx.basis.elements();
  const auto masks = ctx.basis.lead_masks();
  const std::uint64_t sig_key = ctx.mo.coarse_key(sig.index, sig.mono.degree());
  const LabeledPoly* best = nullptr;
  Signature best_sig;
  std::uint64_t best_key = 0;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (divmask_excludes(masks[k], lead_mask))
      continue;
    const LabeledPoly& v = elements[k];
    const Monomial& gl = v.poly.lead_mono();
    if (!mono_divides(gl, lead.mono))
      continue;
    const std::uint64_t key =
        ctx.mo.coarse_key(v.sig.index, lead.mono.degree() - gl.degree() + v.sig.mono.degree());
    if (key > sig_key || (best != nullptr && key > best_key))
      continue;
    Signature scaled = sig_mul(mono_div(lead.mono, gl), v.sig);
    auto c = key < sig_key ? std::strong_ordering::less : ctx.mo.compare(scaled, sig);
    if (c > 0)
      continue;
    if (c == 0) {
      // Equal signatures: the module lead survives only if lc(u) != c*lc(v),
      // which is decidable only with honest module data.
      if (!has_vector || !v.vector)
        continue;
      FieldElement ratio = ring.field().div(lead.coeff, v.poly.lead_coeff());
      if (ring.field().mul(ratio, v.sig_lc) == sig_lc)
        continue;
    }
    if (best == nullptr || key < best_key || ctx.mo.compare(scaled, best_sig) < 0) {
      best = &v;
      best_sig = std::move(scaled);
      best_key = key;
    }
  }
  return best;
}

const LabeledPoly* find_indexed(const ReductionContext& ctx, const Term& lead, const Signature& sig,
                                FieldElement sig_lc, bool has_vector) {
  const Ring& ring = ctx.ring;
  const auto elements = ctx.basis.elements();
  const std::uint64_t lead_mask = divmask(lead.mono);
  const std::uint64_t sig_key = ctx.mo.coarse_key(sig.index, sig.mono.degree());
  const ReducerIndex::Member* best = nullptr;
  Signature best_sig;
  std::uint64_t best_key = 0;
  const auto groups = ctx.index->groups();
  const auto masks = ctx.index->masks();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (divmask_excludes(masks[k], lead_mask))
      continue;
    const ReducerIndex::Group& g = groups[k];
    if (!mono_divides(g.lead, lead.mono))
      continue;
    const Monomial t = mono_div(lead.mono, g.lead);
    // Members ascend by signature, hence by t*sig and by coarse key, so the
    // first usable member is the best one in the group.
    for (const ReducerIndex::Member& m : g.members) {
      const std::uint64_t key = ctx.mo.coarse_key(m.sig.index, t.degree() + m.sig.mono.degree());
      if (key > sig_key || (best != nullptr && key > best_key))
        break;
      Signature scaled = sig_mul(t, m.sig);
      auto c = key < sig_key ? std::strong_ordering::less : ctx.mo.compare(scaled, sig);
      if (c > 0)
        break;
      if (c == 0) {
        const LabeledPoly& v = elements[m.position];
        if (!has_vector || !v.vector)
          continue;
        FieldElement ratio = ring.field().div(lead.coeff, v.poly.lead_coeff());
        if (ring.field().mul(ratio, v.sig_lc) == sig_lc)
          continue;
      }
      bool better = best == nullptr || key < best_key;
      if (!better) {
        auto b = ctx.mo.compare(scaled, best_sig);
        better = b < 0 || (b == 0 && to_index(m.serial) < to_index(best->serial));
      }
      if (better) {
        best = &m;
        best_sig = std::move(scaled);
        best_key = key;
      }
      break;
    }
  }
  return best == nullptr ? nullptr : &elements[best->position];
}

const LabeledPoly* find_any(const ReductionContext& ctx, const Term& lead, const Signature& sig,
                            FieldElement sig_lc, bool has_vector) {
  if (ctx.index != nullptr && ctx.index->size() == ctx.basis.elements().size())
    return find_indexed(ctx, lead, sig, sig_lc, has_vector);
  return find_reducer(ctx, lead, sig, sig_lc, has_vector);
}

} // namespace

void ReducerIndex::add(const LabeledPoly& element, std::uint32_t position) {
  if (element.poly.is_zero())
    throw PreconditionError("reducer index of a zero polynomial");
  const Monomial& lead = element.poly.lead_mono();
  auto group = std::find_if(groups_.begin(), groups_.end(),
                            [&lead](const Group& g) { return g.lead == lead; });
  if (group == groups_.end()) {
    groups_.push_back({lead, divmask(lead), {}});
    masks_.push_back(groups_.back().mask);
    group = groups_.end() - 1;
  }
  Member m{element.sig, element.serial, position};
  auto at = std::upper_bound(group->members.begin(), group->members.end(), m,
                             [this](const Member& a, const Member& b) {
                               auto c = mo_->compare(a.sig, b.sig);
                               return c < 0 || (c == 0 && to_index(a.serial) < to_index(b.serial));
                             });
  group->members.insert(at, std::move(m));
  ++size_;
}

const LabeledPoly* find_sig_reducer(const ReductionContext& ctx, const WorkingElement& a) {
  if (a.poly.is_zero())
    throw PreconditionError("signature reduction of a zero polynomial");
  return find_any(ctx, a.poly.lead(), a.sig, a.sig_lc, a.vector.has_value());
}

bool sig_reduce_step(const ReductionContext& ctx, WorkingElement& a) {
  const LabeledPoly* v = find_sig_reducer(ctx, a);
  if (v == nullptr)
    return false;
  const Ring& ring = ctx.ring;
  const FieldElement c = ring.field().div(a.poly.lead_coeff(), v->poly.lead_coeff());
  const Monomial t = mono_div(a.poly.lead_mono(), v->poly.lead_mono());
  if (sig_mul(t, v->sig) == a.sig)
    a.sig_lc = ring.field().sub(a.sig_lc, ring.field().mul(c, v->sig_lc));
  if (a.vector) {
    if (!v->vector)
      throw PreconditionError("full-vector reduction by an element without a module vector");
    module_sub_mul_inplace(ring, *a.vector, c, t, *v->vector);
  }
  ring.sub_mul_inplace(a.poly, c, t, v->poly);
  return true;
}

WorkingElement sig_reduce(const ReductionContext& ctx, WorkingElement a) {
  if (a.poly.is_zero())
    return a;
  // Same steps as repeated sig_reduce_step, with the sums kept in buckets.
  const Ring& ring = ctx.ring;
  GeoBucket poly(ring, a.poly);
  std::vector<GeoBucket> vector;
  if (a.vector) {
    for (const Polynomial& ui : *a.vector)
      vector.emplace_back(ring, ui);
  }
  bool reduced = false;
  while (const Term* lead = poly.lead()) {
    const LabeledPoly* v = find_any(ctx, *lead, a.sig, a.sig_lc, a.vector.has_value());
    if (v == nullptr)
      break;
    reduced = true;
    const FieldElement c = ring.field().div(lead->coeff, v->poly.lead_coeff());
    const Monomial t = mono_div(lead->mono, v->poly.lead_mono());
    if (sig_mul(t, v->sig) == a.sig)
      a.sig_lc = ring.field().sub(a.sig_lc, ring.field().mul(c, v->sig_lc));
    if (a.vector) {
      if (!v->vector)
        throw PreconditionError("full-vector reduction by an element without a module vector");
      if (v->vector->size() != vector.size())
        throw DimensionError("module vectors of different rank");
      for (std::size_t i = 0; i < vector.size(); ++i)
        vector[i].sub_mul(c, t, (*v->vector)[i].terms());
    }
    // The leading terms cancel exactly, so only the tail of v is subtracted.
    poly.pop_lead();
    poly.sub_mul(c, t, v->poly.terms().subspan(1));
  }
  if (!reduced)
    return a;
  a.poly = poly.take();
  if (a.vector) {
    for (std::size_t i = 0; i < vector.size(); ++i)
      (*a.vector)[i] = vector[i].take();
  }
  return a;
}

} // namespace siggb
