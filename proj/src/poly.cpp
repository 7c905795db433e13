#include "siggb/poly.hpp"

#include "siggb/errors.hpp"

#include <algorithm>
#include <sstream>

namespace siggb {

void Polynomial::throw_empty() {
  throw EmptyPolynomialError("leading term of the zero polynomial");
}

std::optional<Monomial> Polynomial::lpp() const {
  if (terms_.empty())
    return std::nullopt;
  return terms_.front().mono;
}

namespace {

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i)
    names.push_back("x" + std::to_string(i + 1));
  return names;
}

} // namespace

Ring::Ring(PrimeField field, std::vector<std::string> names, TermOrder order)
    : field_(field), names_(std::move(names)), order_(std::move(order)) {
  if (order_.nvars() != names_.size())
    throw DimensionError("term order and variable list disagree on the variable count");
  if (names_.size() > Monomial::kMaxVariables)
    throw DimensionError("at most " + std::to_string(Monomial::kMaxVariables) +
                         " variables are supported");
}

Ring::Ring(PrimeField field, std::size_t nvars, TermOrderKind order)
    : Ring(field, default_names(nvars), TermOrder(order, nvars)) {}

Monomial Ring::var(std::size_t i, unsigned exponent) const {
  Monomial m = one();
  m.set(i, exponent);
  return m;
}

void Ring::check(const Polynomial& p) const {
  if (!p.is_zero() && p.lead_mono().size() != nvars())
    throw DimensionError("polynomial does not belong to a ring in " + std::to_string(nvars()) +
                         " variables");
}

Polynomial Ring::make(std::vector<Term> terms) const {
  for (const Term& t : terms) {
    if (t.mono.size() != nvars())
      throw DimensionError("term monomial has the wrong number of variables");
  }
  std::sort(terms.begin(), terms.end(), [this](const Term& a, const Term& b) {
    return order_.compare_unchecked(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    t.coeff = field_.from_integer(t.coeff.value);
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
      continue;
    }
    if (!out.empty() && out.back().coeff.is_zero())
      out.pop_back();
    out.push_back(std::move(t));
  }
  if (!out.empty() && out.back().coeff.is_zero())
    out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial Ring::constant(std::int64_t c) const { return term(field_.from_integer(c), one()); }

Polynomial Ring::variable(std::size_t i) const { return term(field_.one(), var(i)); }

Polynomial Ring::term(FieldElement c, const Monomial& m) const {
  if (m.size() != nvars())
    throw DimensionError("monomial has the wrong number of variables");
  if (c.is_zero())
    return {};
  return Polynomial({Term{c, m}});
}

void Ring::sub_mul_inplace(Polynomial& f, FieldElement c, const Monomial& t,
                           const Polynomial& g) const {
  check(f);
  check(g);
  if (c.is_zero() || g.is_zero())
    return;
  if (t.size() != nvars())
    throw DimensionError("multiplier has the wrong number of variables");
  const FieldElement nc = field_.neg(c);
  std::vector<Term>& ft = f.mutable_terms();
  std::span<const Term> gt = g.terms();
  std::vector<Term> out;
  out.reserve(ft.size() + gt.size());
  std::size_t i = 0, j = 0;
  Monomial m;
  if (j < gt.size())
    m = mono_mul(t, gt[j].mono);
  while (i < ft.size() && j < gt.size()) {
    auto cmp = order_.compare_unchecked(ft[i].mono, m);
    if (cmp > 0) {
      out.push_back(std::move(ft[i++]));
      continue;
    }
    if (cmp < 0) {
      out.push_back({field_.mul(nc, gt[j].coeff), m});
    } else {
      FieldElement v = field_.add(ft[i].coeff, field_.mul(nc, gt[j].coeff));
      if (!v.is_zero())
        out.push_back({v, m});
      ++i;
    }
    if (++j < gt.size())
      m = mono_mul(t, gt[j].mono);
  }
  for (; i < ft.size(); ++i)
    out.push_back(std::move(ft[i]));
  for (; j < gt.size(); ++j)
    out.push_back({field_.mul(nc, gt[j].coeff), mono_mul(t, gt[j].mono)});
  ft.swap(out);
}

Polynomial Ring::add(const Polynomial& p, const Polynomial& q) const {
  Polynomial r = p;
  sub_mul_inplace(r, field_.neg(field_.one()), one(), q);
  return r;
}

Polynomial Ring::sub(const Polynomial& p, const Polynomial& q) const {
  Polynomial r = p;
  sub_mul_inplace(r, field_.one(), one(), q);
  return r;
}

Polynomial Ring::neg(const Polynomial& p) const { return scale(field_.neg(field_.one()), p); }

Polynomial Ring::scale(FieldElement c, const Polynomial& p) const {
  check(p);
  if (c.is_zero())
    return {};
  std::vector<Term> out(p.terms().begin(), p.terms().end());
  for (Term& t : out)
    t.coeff = field_.mul(c, t.coeff);
  return Polynomial(std::move(out));
}

Polynomial Ring::term_scale(const Term& t, const Polynomial& p) const {
  check(p);
  if (t.mono.size() != nvars())
    throw DimensionError("term has the wrong number of variables");
  if (t.coeff.is_zero())
    return {};
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& s : p.terms())
    out.push_back({field_.mul(t.coeff, s.coeff), mono_mul(t.mono, s.mono)});
  return Polynomial(std::move(out));
}

Polynomial Ring::mul(const Polynomial& p, const Polynomial& q) const {
  check(p);
  check(q);
  if (p.is_zero() || q.is_zero())
    return {};
  if (p.size() == 1)
    return term_scale(p.lead(), q);
  if (q.size() == 1)
    return term_scale(q.lead(), p);
  // The longer factor scaled by each term of the shorter one.
  const Polynomial& shorter = p.size() <= q.size() ? p : q;
  const Polynomial& longer = p.size() <= q.size() ? q : p;
  GeoBucket sum(*this);
  for (const Term& a : shorter.terms())
    sum.sub_mul(field_.neg(a.coeff), a.mono, longer.terms());
  return sum.take();
}

Polynomial Ring::pow(const Polynomial& p, unsigned e) const {
  Polynomial result = constant(1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1u)
      result = mul(result, base);
    e >>= 1;
    if (e > 0)
      base = mul(base, base);
  }
  return result;
}

Polynomial Ring::monic(const Polynomial& p) const {
  if (p.is_zero())
    return p;
  return scale(field_.inv(p.lead_coeff()), p);
}

Polynomial Ring::spoly(const Polynomial& f, const Polynomial& g) const {
  if (f.is_zero() || g.is_zero())
    throw EmptyPolynomialError("S-polynomial of a zero polynomial");
  check(f);
  check(g);
  const Monomial l = mono_lcm(f.lead_mono(), g.lead_mono());
  Polynomial r = term_scale({field_.one(), mono_div(l, f.lead_mono())}, f);
  sub_mul_inplace(r, field_.div(f.lead_coeff(), g.lead_coeff()), mono_div(l, g.lead_mono()), g);
  return r;
}

Polynomial Ring::normal_form(const Polynomial& p, std::span<const Polynomial> basis) const {
  check(p);
  for (const Polynomial& b : basis) {
    if (b.is_zero())
      throw PreconditionError("normal form against a zero polynomial");
    check(b);
  }
  std::vector<Term> remainder;
  Polynomial work = p;
  // Terms before `head` in work are irreducible and already moved out.
  std::size_t head = 0;
  while (head < work.size()) {
    const Term lead = work.terms()[head];
    const Polynomial* reducer = nullptr;
    for (const Polynomial& b : basis) {
      if (mono_divides(b.lead_mono(), lead.mono)) {
        reducer = &b;
        break;
      }
    }
    if (reducer == nullptr) {
      remainder.push_back(lead);
      ++head;
      continue;
    }
    std::vector<Term>& terms = work.mutable_terms();
    terms.erase(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(head));
    head = 0;
    sub_mul_inplace(work, field_.div(lead.coeff, reducer->lead_coeff()),
                    mono_div(lead.mono, reducer->lead_mono()), *reducer);
  }
  return Polynomial(std::move(remainder));
}

bool Ring::is_canonical(const Polynomial& p) const {
  std::span<const Term> t = p.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].mono.size() != nvars() || t[i].coeff.is_zero() || !field_.contains(t[i].coeff))
      return false;
    if (i > 0 && order_.compare_unchecked(t[i - 1].mono, t[i].mono) <= 0)
      return false;
  }
  return true;
}

std::string Ring::render(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += names_[i];
    if (m[i] > 1)
      out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Ring::render(const Polynomial& p) const {
  if (p.is_zero())
    return "0";
  std::string out;
  for (const Term& t : p.terms()) {
    if (!out.empty())
      out += " + ";
    out += std::to_string(t.coeff.value);
    if (!t.mono.is_one())
      out += '*' + render(t.mono);
  }
  return out;
}

GeoBucket::GeoBucket(const Ring& ring, const Polynomial& p) : ring_(&ring) {
  insert(Run(p.terms().rbegin(), p.terms().rend()));
}

void GeoBucket::sub_mul(FieldElement c, const Monomial& t, std::span<const Term> g) {
  if (g.empty())
    return;
  const PrimeField& field = ring_->field();
  const FieldElement nc = field.neg(c);
  Run run;
  run.reserve(g.size());
  for (auto it = g.rbegin(); it != g.rend(); ++it)
    run.push_back({field.mul(nc, it->coeff), mono_mul(t, it->mono)});
  insert(std::move(run));
}

const Term* GeoBucket::lead() {
  while (lead_run_ < 0) {
    std::ptrdiff_t best = -1;
    for (std::size_t j = 0; j < runs_.size(); ++j) {
      if (runs_[j].empty())
        continue;
      if (best < 0) {
        best = static_cast<std::ptrdiff_t>(j);
        continue;
      }
      Term& top = runs_[best].back();
      auto cmp = ring_->compare(runs_[j].back().mono, top.mono);
      if (cmp > 0) {
        best = static_cast<std::ptrdiff_t>(j);
      } else if (cmp == 0) {
        top.coeff = ring_->field().add(top.coeff, runs_[j].back().coeff);
        runs_[j].pop_back();
      }
    }
    if (best < 0)
      return nullptr;
    if (runs_[best].back().coeff.is_zero()) {
      runs_[best].pop_back();
      continue;
    }
    lead_run_ = best;
  }
  return &runs_[lead_run_].back();
}

void GeoBucket::pop_lead() {
  if (lead() == nullptr)
    throw PreconditionError("leading term of the zero polynomial");
  runs_[lead_run_].pop_back();
  lead_run_ = -1;
}

Polynomial GeoBucket::take() {
  Run all;
  for (Run& run : runs_)
    all = merge(std::move(all), std::move(run));
  runs_.clear();
  lead_run_ = -1;
  // lead() can leave a cancelled leading term behind in a run it did not pick.
  std::erase_if(all, [](const Term& t) { return t.coeff.is_zero(); });
  std::reverse(all.begin(), all.end());
  return Polynomial(std::move(all));
}

void GeoBucket::insert(Run run) {
  lead_run_ = -1;
  auto capacity = [](std::size_t k) { return std::size_t{4} << (2 * k); };
  std::size_t k = 0;
  while (capacity(k) < run.size())
    ++k;
  for (;; ++k) {
    if (runs_.size() <= k)
      runs_.resize(k + 1);
    run = merge(std::move(runs_[k]), std::move(run));
    runs_[k].clear();
    if (run.size() <= capacity(k)) {
      runs_[k] = std::move(run);
      return;
    }
  }
}

// Ascending merge that adds coefficients of equal monomials and drops zeros.
GeoBucket::Run GeoBucket::merge(Run a, Run b) const {
  if (a.empty())
    return b;
  if (b.empty())
    return a;
  Run out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = ring_->compare(a[i].mono, b[j].mono);
    if (cmp < 0) {
      out.push_back(std::move(a[i++]));
    } else if (cmp > 0) {
      out.push_back(std::move(b[j++]));
    } else {
      FieldElement s = ring_->field().add(a[i].coeff, b[j].coeff);
      if (!s.is_zero())
        out.push_back({s, a[i].mono});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), std::make_move_iterator(a.begin() + static_cast<std::ptrdiff_t>(i)),
             std::make_move_iterator(a.end()));
  out.insert(out.end(), std::make_move_iterator(b.begin() + static_cast<std::ptrdiff_t>(j)),
             std::make_move_iterator(b.end()));
  return out;
}

} // namespace siggb
