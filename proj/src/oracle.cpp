#include "siggb/oracle.hpp"

#include "siggb/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <tuple>

namespace siggb {

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0)
      return false;
  }
  return true;
}

} // namespace

std::vector<Polynomial> buchberger(const Ring& ring, std::span<const Polynomial> inputs) {
  std::vector<Polynomial> g;
  // (lcm degree, arrival, i, j)
  std::set<std::tuple<std::uint32_t, std::uint64_t, std::size_t, std::size_t>> pairs;
  std::uint64_t arrival = 0;

  auto add = [&](Polynomial p) {
    const std::size_t j = g.size();
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& a = g[i].lead_mono();
      const Monomial& b = p.lead_mono();
      if (coprime(a, b))
        continue;
      pairs.emplace(mono_lcm(a, b).degree(), arrival++, i, j);
    }
    g.push_back(std::move(p));
  };

  for (const Polynomial& f : inputs) {
    if (f.is_zero())
      continue;
    Polynomial r = ring.normal_form(f, g);
    if (!r.is_zero())
      add(ring.monic(r));
  }
  while (!pairs.empty()) {
    auto [deg, seq, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    Polynomial r = ring.normal_form(ring.spoly(g[i], g[j]), g);
    if (!r.is_zero())
      add(ring.monic(r));
  }
  return g;
}

std::vector<Polynomial> reduce_gb(const Ring& ring, std::span<const Polynomial> gb) {
  std::vector<Polynomial> p;
  for (const Polynomial& f : gb) {
    if (!f.is_zero())
      p.push_back(f);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(p.size() - 1);
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (j != i)
          others.push_back(p[j]);
      }
      Polynomial r = ring.normal_form(p[i], others);
      if (r == p[i])
        continue;
      changed = true;
      if (r.is_zero()) {
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(i));
        --i;
      } else {
        p[i] = std::move(r);
      }
    }
  }
  for (Polynomial& f : p)
    f = ring.monic(f);
  std::sort(p.begin(), p.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return ring.compare(a.lead_mono(), b.lead_mono()) < 0;
  });
  return p;
}

bool is_groebner_basis(const Ring& ring, std::span<const Polynomial> polys) {
  std::vector<Polynomial> g;
  for (const Polynomial& f : polys) {
    if (!f.is_zero())
      g.push_back(f);
  }
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!ring.normal_form(ring.spoly(g[i], g[j]), g).is_zero())
        return false;
    }
  }
  return true;
}

bool gb_equal(const Ring& ring, std::span<const Polynomial> a, std::span<const Polynomial> b) {
  return reduce_gb(ring, buchberger(ring, a)) == reduce_gb(ring, buchberger(ring, b));
}

namespace {

// A sparse module vector as (signature, coefficient), strictly descending.
using SparseRow = std::vector<std::pair<Signature, FieldElement>>;

SparseRow to_row(const ModuleOrder& mo, const ModuleVector& u, const Monomial& t) {
  SparseRow row;
  for (std::size_t j = 0; j < u.size(); ++j) {
    for (const Term& term : u[j].terms())
      row.emplace_back(Signature{static_cast<std::uint32_t>(j), mono_mul(t, term.mono)},
                       term.coeff);
  }
  std::sort(row.begin(), row.end(),
            [&mo](const auto& a, const auto& b) { return mo.compare(a.first, b.first) > 0; });
  return row;
}

// row <- row - c*pivot, both descending.
SparseRow sub_scaled(const ModuleOrder& mo, const PrimeField& field, const SparseRow& row,
                     FieldElement c, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    std::strong_ordering cmp = std::strong_ordering::equal;
    if (i == row.size())
      cmp = std::strong_ordering::less;
    else if (j == pivot.size())
      cmp = std::strong_ordering::greater;
    else
      cmp = mo.compare(row[i].first, pivot[j].first);
    if (cmp > 0) {
      out.push_back(row[i++]);
    } else if (cmp < 0) {
      out.emplace_back(pivot[j].first, field.neg(field.mul(c, pivot[j].second)));
      ++j;
    } else {
      FieldElement v = field.sub(row[i].second, field.mul(c, pivot[j].second));
      if (!v.is_zero())
        out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

// Echelon form keyed by leading signature; each stored row has a distinct lead.
class Echelon {
public:
  Echelon(const ModuleOrder& mo, const PrimeField& field)
      : mo_(mo), field_(field), pivots_(SignatureKeyLess{}) {}

  // Top-reduces row against the pivots; what is left is returned.
  SparseRow reduce(SparseRow row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end())
        break;
      FieldElement c = field_.div(row.front().second, it->second.front().second);
      row = sub_scaled(mo_, field_, row, c, it->second);
    }
    return row;
  }

  void insert(SparseRow row) {
    row = reduce(std::move(row));
    if (!row.empty()) {
      Signature lead = row.front().first;
      pivots_.emplace(std::move(lead), std::move(row));
    }
  }

private:
  const ModuleOrder& mo_;
  const PrimeField& field_;
  std::map<Signature, SparseRow, SignatureKeyLess> pivots_;
};

void monomials_up_to(std::size_t nvars, unsigned max_degree, std::vector<Monomial>& out) {
  Monomial m(nvars);
  // Depth-first over exponent vectors with total degree <= max_degree.
  auto rec = [&](auto& self, std::size_t var, unsigned left) -> void {
    if (var == nvars) {
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(var, e);
      self(self, var + 1, left - e);
    }
    m.set(var, 0);
  };
  rec(rec, 0, max_degree);
}

struct Candidate {
  const ModuleVector* vector;
  Signature sig;
  const Monomial* lead; // null for a syzygy
};

// Largest degree of an admissible multiplier for c, or nullopt if unbounded.
// A negative value means no multiplier is admissible.
std::optional<long> degree_bound(const Ring& ring, const ModuleOrder& mo, const Candidate& c,
                                 const Signature& sig, const Polynomial& f) {
  std::optional<long> bound;
  auto tighten = [&bound](long b) { bound = bound ? std::min(*bound, b) : b; };
  const bool graded = ring.order().is_graded();
  if (c.lead != nullptr) {
    if (f.is_zero())
      return -1;
    if (graded)
      tighten(static_cast<long>(f.lead_mono().degree()) - static_cast<long>(c.lead->degree()));
  }
  if (!graded)
    return bound;
  if (mo.kind() == ModuleOrderKind::Schreyer) {
    long target = static_cast<long>(sig.mono.degree()) + mo.weights()[sig.index].degree();
    long base = static_cast<long>(c.sig.mono.degree()) + mo.weights()[c.sig.index].degree();
    tighten(target - base);
  } else if (c.sig.index == sig.index) {
    tighten(static_cast<long>(sig.mono.degree()) - static_cast<long>(c.sig.mono.degree()));
  } else if (mo.compare(Signature{c.sig.index, ring.one()}, Signature{sig.index, ring.one()}) > 0) {
    return -1;
  }
  return bound;
}

} // namespace

bool has_standard_representation(const Ring& ring, const ModuleOrder& mo,
                                 const WorkingElement& elem, const Basis& basis,
                                 const StandardRepLimits& limits) {
  if (!elem.vector)
    throw PreconditionError("standard representation check needs the module vector");
  const ModuleVector& u = *elem.vector;
  auto lead = module_lead(mo, u);
  if (!lead)
    return elem.poly.is_zero();
  const Signature& sig = lead->first;
  const Polynomial& f = elem.poly;

  std::vector<Candidate> candidates;
  for (const LabeledPoly& e : basis.elements()) {
    if (!e.vector)
      throw PreconditionError("basis element without a module vector");
    candidates.push_back({&*e.vector, e.sig, &e.poly.lead_mono()});
  }
  std::deque<ModuleVector> rebuilt;
  for (const SyzygyRecord& s : basis.syzygies()) {
    if (s.vector) {
      candidates.push_back({&*s.vector, s.sig, nullptr});
      continue;
    }
    if (s.origin != SyzygyOrigin::Koszul)
      throw PreconditionError("syzygy record without a module vector");
    // Generator i is the basis element with serial i.
    const LabeledPoly& added = basis.element(Serial{s.source});
    const Polynomial& fi = basis.element(Serial{s.component}).poly;
    rebuilt.push_back(koszul_vector(ring, added, s.component, fi));
    candidates.push_back({&rebuilt.back(), s.sig, nullptr});
  }

  long min_lead = std::numeric_limits<long>::max();
  for (const LabeledPoly& e : basis.elements())
    min_lead = std::min<long>(min_lead, e.poly.lead_mono().degree());
  long gap = f.is_zero() || min_lead == std::numeric_limits<long>::max()
                 ? 0
                 : static_cast<long>(f.lead_mono().degree()) - min_lead;
  const long cap =
      std::max(gap, static_cast<long>(sig.mono.degree())) + static_cast<long>(limits.slack);

  std::map<long, std::vector<Monomial>> by_degree;
  auto multipliers = [&](long d) -> const std::vector<Monomial>& {
    auto it = by_degree.find(d);
    if (it == by_degree.end()) {
      std::vector<Monomial> ms;
      monomials_up_to(ring.nvars(), static_cast<unsigned>(d), ms);
      it = by_degree.emplace(d, std::move(ms)).first;
    }
    return it->second;
  };

  bool truncated = false;
  std::size_t unknowns = 0;
  Echelon echelon(mo, ring.field());
  for (const Candidate& c : candidates) {
    std::optional<long> bound = degree_bound(ring, mo, c, sig, f);
    if (bound && *bound < 0)
      continue;
    long d = cap;
    if (!bound || *bound > cap)
      truncated = true;
    else
      d = *bound;
    for (const Monomial& t : multipliers(d)) {
      if (mo.compare(sig_mul(t, c.sig), sig) > 0)
        continue;
      if (c.lead != nullptr && ring.compare(mono_mul(t, *c.lead), f.lead_mono()) > 0)
        continue;
      if (++unknowns > limits.max_unknowns)
        throw SizeError("standard representation search exceeds " +
                        std::to_string(limits.max_unknowns) + " candidate products");
      echelon.insert(to_row(mo, *c.vector, t));
    }
  }

  const bool found = echelon.reduce(to_row(mo, u, ring.one())).empty();
  if (found) {
    // A representation forces a reducer of the polynomial lead.
    if (!f.is_zero()) {
      const bool divisor = std::any_of(
          basis.elements().begin(), basis.elements().end(), [&](const LabeledPoly& e) {
            if (!mono_divides(e.poly.lead_mono(), f.lead_mono()))
              return false;
            Monomial t = mono_div(f.lead_mono(), e.poly.lead_mono());
            return mo.compare(sig_mul(t, e.sig), sig) <= 0;
          });
      if (!divisor)
        throw Error("standard representation found without a lead divisor");
    }
    return true;
  }
  if (truncated)
    throw SizeError("no standard representation within multiplier degree " +
                    std::to_string(cap));
  return false;
}

SpotcheckReport sgb_spotcheck(const Ring& ring, const ModuleOrder& mo, const Basis& basis,
                              const StandardRepLimits& limits) {
  SpotcheckReport report;
  const PrimeField& field = ring.field();
  auto elems = basis.elements();
  for (std::size_t j = 0; j < elems.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const LabeledPoly& a = elems[i];
      const LabeledPoly& b = elems[j];
      if (!a.vector || !b.vector)
        throw PreconditionError("spot check needs full-vector mode");
      Monomial lcm = mono_lcm(a.poly.lead_mono(), b.poly.lead_mono());
      Monomial ta = mono_div(lcm, a.poly.lead_mono());
      Monomial tb = mono_div(lcm, b.poly.lead_mono());
      FieldElement c = field.div(a.poly.lead_coeff(), b.poly.lead_coeff());
      WorkingElement w;
      w.poly = ring.term_scale(Term{field.one(), ta}, a.poly);
      ring.sub_mul_inplace(w.poly, c, tb, b.poly);
      w.vector = module_scale(ring, Term{field.one(), ta}, *a.vector);
      module_sub_mul_inplace(ring, *w.vector, c, tb, *b.vector);
      if (auto lead = module_lead(mo, *w.vector)) {
        w.sig = lead->first;
        w.sig_lc = lead->second;
      }
      ++report.pairs_checked;
      if (!has_standard_representation(ring, mo, w, basis, limits))
        report.failures.emplace_back(a.serial, b.serial);
    }
  }
  return report;
}

} // namespace siggb
