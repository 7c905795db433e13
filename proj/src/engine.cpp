#include "siggb/engine.hpp"

#include "siggb/errors.hpp"
#include "siggb/reduction.hpp"

#include <algorithm>
#include <chrono>
#include <memory>

namespace siggb {

std::string_view to_string(CriterionMode mode) {
  switch (mode) {
  case CriterionMode::F5:
    return "f5";
  case CriterionMode::Ratio:
    return "ratio";
  case CriterionMode::Gvw:
    return "gvw";
  case CriterionMode::None:
    return "none";
  case CriterionMode::EarlierUnsound:
    return "earlier-unsound";
  }
  return "?";
}

EngineConfig EngineConfig::for_criterion(CriterionMode mode) {
  EngineConfig cfg;
  switch (mode) {
  case CriterionMode::F5:
    cfg.order = PartialOrderKind::F5;
    break;
  case CriterionMode::Ratio:
    cfg.order = PartialOrderKind::Ratio;
    break;
  case CriterionMode::Gvw:
    cfg.order = PartialOrderKind::Ratio;
    cfg.gvw_second = true;
    cfg.dedup = true;
    break;
  case CriterionMode::None:
    cfg.order = std::nullopt;
    break;
  case CriterionMode::EarlierUnsound:
    cfg.order = PartialOrderKind::EarlierUnsound;
    break;
  }
  return cfg;
}

void EngineConfig::validate() const {
  if (iteration_cap < 1)
    throw ConfigError("iteration cap must be at least 1");
  if (gvw_second && order != PartialOrderKind::Ratio)
    throw ConfigError("GVW's second criterion requires the ratio order");
  if (dedup && !order)
    throw ConfigError("pair deduplication needs a partial order to choose the survivor");
  if (order == PartialOrderKind::EarlierUnsound && !unsound_order_available())
    throw ConfigError("the earlier-unsound order is only available in test builds");
  if (verify_vectors && !full_vector)
    throw ConfigError("vector verification needs full-vector mode");
}

std::string EngineConfig::label() const {
  std::string s;
  if (!order)
    s = "none";
  else if (gvw_second)
    s = "gvw";
  else
    s = std::string(to_string(*order));
  s += "/";
  s += to_string(strategy);
  s += module_order == ModuleOrderKind::Pot ? "/pot" : "/schreyer";
  s += full_vector ? "/full" : "/sigonly";
  if (!koszul)
    s += "/no-koszul";
  if (dedup && !gvw_second)
    s += "/dedup";
  return s;
}

ModuleOrder make_module_order(ModuleOrderKind kind, const TermOrder& order,
                              std::span<const Polynomial> generators) {
  if (kind == ModuleOrderKind::Pot)
    return ModuleOrder::pot(order, generators.size());
  std::vector<Monomial> weights;
  weights.reserve(generators.size());
  for (const Polynomial& f : generators)
    weights.push_back(f.lead_mono());
  return ModuleOrder::schreyer(order, std::move(weights));
}

namespace {

class Engine {
public:
  Engine(const Ring& ring, std::vector<Polynomial> generators, const EngineConfig& cfg)
      : ring_(ring),
        cfg_(cfg),
        result_{std::move(generators),
                make_module_order(cfg.module_order, ring.order(), {}),
                Basis(0),
                {},
                {},
                0,
                {},
                {}},
        index_(result_.module_order),
        queue_(nullptr),
        monitor_(cfg.check_admissible && cfg.order.has_value()) {
    result_.module_order = make_module_order(cfg.module_order, ring.order(), result_.generators);
    result_.basis = Basis(result_.generators.size());
  }

  RunResult run();

private:
  const ModuleOrder& mo() const { return result_.module_order; }
  Basis& basis() { return result_.basis; }

  void enqueue(CriticalPair p);
  Serial add_syzygy(SyzygyRecord rec);
  Serial add_element(LabeledPoly elem);
  void audit(const Signature& sig, FieldElement sig_lc, const Polynomial& poly,
             const ModuleVector& u);
  bool rejected_by_criterion(const CriticalPair& p);
  void process(const CriticalPair& p);

  const Ring& ring_;
  const EngineConfig& cfg_;
  RunResult result_;
  ReducerIndex index_;
  std::unique_ptr<PairQueue> queue_;
  AdmissibilityMonitor monitor_;
};

void Engine::audit(const Signature& sig, FieldElement sig_lc, const Polynomial& poly,
                   const ModuleVector& u) {
  if (!cfg_.verify_vectors)
    return;
  ++result_.audit.checked;
  bool ok = module_evaluate(ring_, u, result_.generators) == poly;
  auto lead = module_lead(mo(), u);
  ok = ok && lead && lead->first == sig && lead->second == sig_lc;
  if (!ok)
    ++result_.audit.failures;
}

void Engine::enqueue(CriticalPair p) {
  ++result_.stats.pairs_generated;
  auto first_less = [this](Serial incoming, Serial incumbent) {
    return po_less(basis().element(incoming), basis().element(incumbent), *cfg_.order,
                   ring_.order());
  };
  auto outcome = queue_->insert(std::move(p), first_less);
  if (outcome != PairQueue::InsertOutcome::Inserted)
    ++result_.stats.rejected_criterion;
}

Serial Engine::add_syzygy(SyzygyRecord rec) {
  if (rec.vector) {
    // A syzygy's leading coefficient is whatever u has; only the signature
    // and u . f = 0 are checked.
    auto lead = module_lead(mo(), *rec.vector);
    audit(rec.sig, lead ? lead->second : FieldElement{0}, Polynomial{}, *rec.vector);
  }
  return basis().add_syzygy(std::move(rec));
}

Serial Engine::add_element(LabeledPoly elem) {
  if (elem.vector)
    audit(elem.sig, elem.sig_lc, elem.poly, *elem.vector);
  const Serial s = basis().add(std::move(elem));
  const auto position = static_cast<std::uint32_t>(basis().elements().size() - 1);
  index_.add(basis().elements()[position], position);
  return s;
}

bool Engine::rejected_by_criterion(const CriticalPair& p) {
  if (!cfg_.order)
    return false;
  if (cfg_.gvw_second) {
    const LabeledPoly& first = basis().element(p.first.id);
    if (gvw_divisible(p.first.multiplier, first, basis()))
      return true;
    // Appending a syzygy record leaves the element storage, and so `first`, intact.
    return eventually_super_top_reducible(ring_, mo(), p.first.multiplier, first, basis(),
                                          &index_);
  }
  return pair_rewritable(p, basis(), *cfg_.order, ring_.order());
}

void Engine::process(const CriticalPair& p) {
  const PrimeField& field = ring_.field();
  const LabeledPoly& u = basis().element(p.first.id);
  const LabeledPoly& v = basis().element(p.second.id);
  const FieldElement c = field.div(u.poly.lead_coeff(), v.poly.lead_coeff());
  const Term tf{field.one(), p.first.multiplier};

  WorkingElement w{p.lead_sig, u.sig_lc, ring_.term_scale(tf, u.poly), std::nullopt};
  ring_.sub_mul_inplace(w.poly, c, p.second.multiplier, v.poly);
  if (cfg_.full_vector) {
    w.vector = module_scale(ring_, tf, *u.vector);
    module_sub_mul_inplace(ring_, *w.vector, c, p.second.multiplier, *v.vector);
  }
  const Serial parent = p.first.id;

  w = sig_reduce(ReductionContext{ring_, mo(), basis(), &index_}, std::move(w));

  if (w.poly.is_zero()) {
    ++result_.stats.zero_reductions;
    SyzygyRecord rec;
    rec.sig = w.sig;
    rec.origin = SyzygyOrigin::ZeroReduction;
    rec.source = to_index(parent);
    rec.vector = std::move(w.vector);
    Signature sig = rec.sig;
    const Serial child = add_syzygy(std::move(rec));
    if (monitor_.enabled())
      monitor_.check(view(basis().element(parent)), OrderView{child, &sig, nullptr}, *cfg_.order,
                     ring_.order());
    return;
  }

  LabeledPoly elem{Serial{}, std::move(w.sig), w.sig_lc, std::move(w.poly), std::move(w.vector)};
  const Serial child = add_element(std::move(elem));
  if (monitor_.enabled())
    monitor_.check(view(basis().element(parent)), view(basis().element(child)), *cfg_.order,
                   ring_.order());

  // Pairs against every earlier nonzero element, then the Koszul relations.
  const std::size_t count = basis().elements().size();
  for (std::size_t k = 0; k + 1 < count; ++k)
    enqueue(make_pair(basis().elements()[count - 1], basis().elements()[k], mo()));
  if (cfg_.koszul) {
    const LabeledPoly added = basis().elements()[count - 1];
    for (std::size_t i = 0; i < result_.generators.size(); ++i) {
      if (!cfg_.full_vector) {
        if (auto rec = koszul_syzygy(ring_, added, i, result_.generators[i], mo()))
          add_syzygy(std::move(*rec));
        continue;
      }
      // The expanded relation is large and vanishes by construction, so only
      // its signature is kept; has_standard_representation rebuilds it.
      if (auto sig = koszul_signature(ring_, added, i, result_.generators[i], mo())) {
        SyzygyRecord rec;
        rec.sig = std::move(*sig);
        rec.origin = SyzygyOrigin::Koszul;
        rec.source = to_index(added.serial);
        rec.component = static_cast<std::uint32_t>(i);
        add_syzygy(std::move(rec));
      }
    }
  }
}

RunResult Engine::run() {
  cfg_.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t m = result_.generators.size();
  queue_ = std::make_unique<PairQueue>(cfg_.strategy, mo(), cfg_.dedup);

  for (std::size_t i = 0; i < m; ++i) {
    LabeledPoly e{Serial{}, Signature{static_cast<std::uint32_t>(i), ring_.one()},
                  ring_.field().one(), result_.generators[i], std::nullopt};
    if (cfg_.full_vector)
      e.vector = unit_vector(ring_, m, i);
    add_element(std::move(e));
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i)
      enqueue(make_pair(basis().elements()[j], basis().elements()[i], mo()));
  }
  if (cfg_.koszul) {
    for (SyzygyRecord& rec : principal_syzygies(ring_, result_.generators, mo(), cfg_.full_vector))
      add_syzygy(std::move(rec));
  }

  std::uint64_t iterations = 0;
  while (auto p = queue_->pop()) {
    if (++iterations > cfg_.iteration_cap)
      throw CapExceededError("more than " + std::to_string(cfg_.iteration_cap) +
                             " critical pairs selected");
    if (classify(*p, basis(), ring_.field()) != PairClass::Regular) {
      ++result_.stats.rejected_nonregular;
      continue;
    }
    if (rejected_by_criterion(*p)) {
      ++result_.stats.rejected_criterion;
      continue;
    }
    ++result_.stats.reduced;
    process(*p);
  }

  result_.stats.basis_nonzero = basis().elements().size();
  result_.groebner_basis = extract_gb(ring_, basis());
  result_.stats.reduced_gb_size = result_.groebner_basis.size();
  result_.violations = monitor_.violations();
  result_.admissibility_checks = monitor_.checks();
  result_.stats.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start)
          .count());
  return std::move(result_);
}

} // namespace

RunResult gbgc(const Ring& ring, std::span<const Polynomial> inputs, const EngineConfig& cfg) {
  std::vector<Polynomial> generators;
  for (const Polynomial& f : inputs) {
    if (f.is_zero())
      continue;
    if (f.lead_mono().size() != ring.nvars())
      throw DimensionError("input polynomial from a different ring");
    generators.push_back(f);
  }
  Engine engine(ring, std::move(generators), cfg);
  return engine.run();
}

std::vector<Polynomial> extract_gb(const Ring& ring, std::span<const Polynomial> polys) {
  std::vector<Polynomial> monic;
  for (const Polynomial& p : polys) {
    if (!p.is_zero())
      monic.push_back(ring.monic(p));
  }
  std::stable_sort(monic.begin(), monic.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return ring.compare(a.lead_mono(), b.lead_mono()) < 0;
  });
  // A divisor's lead is never larger, so one ascending pass keeps exactly
  // the elements with minimal leads.
  std::vector<Polynomial> minimal;
  for (Polynomial& p : monic) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&p](const Polynomial& q) {
      return mono_divides(q.lead_mono(), p.lead_mono());
    });
    if (!redundant)
      minimal.push_back(std::move(p));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i)
        others.push_back(minimal[j]);
    }
    reduced.push_back(ring.normal_form(minimal[i], others));
  }
  return reduced;
}

std::vector<Polynomial> extract_gb(const Ring& ring, const Basis& basis) {
  std::vector<Polynomial> parts;
  for (const LabeledPoly& e : basis.elements())
    parts.push_back(e.poly);
  return extract_gb(ring, parts);
}

} // namespace siggb
