#include "siggb/sig.hpp"

#include "siggb/errors.hpp"

#include <numeric>

namespace siggb {

Signature sig_mul(const Monomial& t, const Signature& s) { return {s.index, mono_mul(t, s.mono)}; }

bool sig_divides(const Signature& s, const Signature& t) {
  return s.index == t.index && mono_divides(s.mono, t.mono);
}

std::string render(const Ring& ring, const Signature& s) {
  std::string out = s.mono.is_one() ? std::string() : ring.render(s.mono) + "*";
  return out + "e" + std::to_string(s.index + 1);
}

ModuleOrder ModuleOrder::pot(const TermOrder& order, std::size_t rank) {
  std::vector<std::size_t> precedence(rank);
  std::iota(precedence.begin(), precedence.end(), std::size_t{0});
  return pot(order, std::move(precedence));
}

ModuleOrder ModuleOrder::pot(const TermOrder& order, std::vector<std::size_t> precedence) {
  ModuleOrder mo(ModuleOrderKind::Pot, order);
  mo.rank_.assign(precedence.size(), UINT32_MAX);
  for (std::size_t k = 0; k < precedence.size(); ++k) {
    std::size_t i = precedence[k];
    if (i >= precedence.size() || mo.rank_[i] != UINT32_MAX)
      throw DimensionError("generator precedence is not a permutation");
    mo.rank_[i] = static_cast<std::uint32_t>(k);
  }
  return mo;
}

ModuleOrder ModuleOrder::schreyer(const TermOrder& order, std::vector<Monomial> weights) {
  ModuleOrder mo(ModuleOrderKind::Schreyer, order);
  for (const Monomial& w : weights) {
    if (w.size() != order.nvars())
      throw DimensionError("Schreyer weight has the wrong number of variables");
  }
  mo.rank_.resize(weights.size());
  std::iota(mo.rank_.begin(), mo.rank_.end(), 0u);
  mo.weights_ = std::move(weights);
  return mo;
}

void ModuleOrder::throw_bad_index() const {
  throw IndexError("signature index outside the module rank " + std::to_string(rank_.size()));
}

std::optional<std::pair<Signature, FieldElement>> module_lead(const ModuleOrder& mo,
                                                              const ModuleVector& u) {
  std::optional<std::pair<Signature, FieldElement>> best;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero())
      continue;
    Signature s{static_cast<std::uint32_t>(i), u[i].lead_mono()};
    if (!best || mo.compare(s, best->first) > 0)
      best = {{std::move(s), u[i].lead_coeff()}};
  }
  return best;
}

void module_sub_mul_inplace(const Ring& ring, ModuleVector& u, FieldElement c, const Monomial& t,
                            const ModuleVector& v) {
  if (u.size() != v.size())
    throw DimensionError("module vectors of different rank");
  for (std::size_t i = 0; i < u.size(); ++i)
    ring.sub_mul_inplace(u[i], c, t, v[i]);
}

ModuleVector module_scale(const Ring& ring, const Term& t, const ModuleVector& u) {
  ModuleVector out;
  out.reserve(u.size());
  for (const Polynomial& p : u)
    out.push_back(ring.term_scale(t, p));
  return out;
}

ModuleVector unit_vector(const Ring& ring, std::size_t rank, std::size_t index) {
  ModuleVector e(rank);
  e.at(index) = ring.constant(1);
  return e;
}

Polynomial module_evaluate(const Ring& ring, const ModuleVector& u,
                           std::span<const Polynomial> generators) {
  if (u.size() != generators.size())
    throw DimensionError("module vector rank differs from the generator count");
  Polynomial sum;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].is_zero())
      sum = ring.add(sum, ring.mul(u[i], generators[i]));
  }
  return sum;
}

std::vector<SyzygyRecord> principal_syzygies(const Ring& ring, std::span<const Polynomial> inputs,
                                             const ModuleOrder& mo, bool full_vector) {
  std::vector<SyzygyRecord> out;
  const std::size_t m = inputs.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (inputs[i].is_zero() || inputs[j].is_zero())
        throw PreconditionError("principal syzygy of a zero generator");
      // The two module terms sit in different components and cannot cancel.
      Signature a{static_cast<std::uint32_t>(i), inputs[j].lead_mono()};
      Signature b{static_cast<std::uint32_t>(j), inputs[i].lead_mono()};
      SyzygyRecord rec;
      rec.origin = SyzygyOrigin::PrincipalInput;
      rec.source = static_cast<std::uint32_t>(j);
      rec.sig = mo.compare(a, b) > 0 ? a : b;
      if (full_vector) {
        ModuleVector v(m);
        v[i] = inputs[j];
        v[j] = ring.neg(inputs[i]);
        rec.vector = std::move(v);
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::optional<SyzygyRecord> koszul_syzygy(const Ring& ring, const LabeledPoly& added,
                                          std::size_t i, const Polynomial& fi,
                                          const ModuleOrder& mo) {
  const Polynomial& h = added.poly;
  if (h.is_zero())
    throw PreconditionError("Koszul syzygy of an element with zero polynomial part");
  if (fi.is_zero())
    throw PreconditionError("Koszul syzygy against a zero generator");
  if (i >= mo.rank())
    throw IndexError("generator index outside the module rank");

  SyzygyRecord rec;
  rec.origin = SyzygyOrigin::Koszul;
  rec.source = to_index(added.serial);

  rec.component = static_cast<std::uint32_t>(i);

  if (added.vector) {
    ModuleVector v = koszul_vector(ring, added, i, fi);
    auto lead = module_lead(mo, v);
    if (!lead)
      return std::nullopt;
    rec.sig = lead->first;
    rec.vector = std::move(v);
    return rec;
  }

  Signature from_h{static_cast<std::uint32_t>(i), h.lead_mono()};
  Signature from_w = sig_mul(fi.lead_mono(), added.sig);
  auto c = mo.compare(from_h, from_w);
  if (c == 0)
    return std::nullopt;
  rec.sig = c > 0 ? std::move(from_h) : std::move(from_w);
  return rec;
}

ModuleVector koszul_vector(const Ring& ring, const LabeledPoly& added, std::size_t i,
                           const Polynomial& fi) {
  if (!added.vector)
    throw PreconditionError("Koszul vector of an element without a module vector");
  const ModuleVector& w = *added.vector;
  ModuleVector v;
  v.reserve(w.size());
  for (const Polynomial& wj : w)
    v.push_back(ring.neg(ring.mul(fi, wj)));
  v.at(i) = ring.add(v[i], added.poly);
  return v;
}

std::optional<Signature> koszul_signature(const Ring& ring, const LabeledPoly& added,
                                          std::size_t i, const Polynomial& fi,
                                          const ModuleOrder& mo) {
  const Polynomial& h = added.poly;
  if (h.is_zero())
    throw PreconditionError("Koszul syzygy of an element with zero polynomial part");
  if (fi.is_zero())
    throw PreconditionError("Koszul syzygy against a zero generator");
  if (i >= mo.rank())
    throw IndexError("generator index outside the module rank");
  if (!added.vector)
    throw PreconditionError("Koszul signature of an element without a module vector");

  // The lead of f_i*w is lpp(f_i)*sig(w) with coefficient lc(f_i)*sig_lc(w).
  Signature from_h{static_cast<std::uint32_t>(i), h.lead_mono()};
  Signature from_w = sig_mul(fi.lead_mono(), added.sig);
  auto c = mo.compare(from_h, from_w);
  if (c != 0)
    return c > 0 ? from_h : from_w;
  const PrimeField& field = ring.field();
  if (h.lead_coeff() != field.mul(fi.lead_coeff(), added.sig_lc))
    return from_h;
  auto lead = module_lead(mo, koszul_vector(ring, added, i, fi));
  if (!lead)
    return std::nullopt;
  return lead->first;
}

} // namespace siggb
