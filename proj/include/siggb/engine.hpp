#ifndef SIGGB_ENGINE_HPP
#define SIGGB_ENGINE_HPP

#include "siggb/basis.hpp"
#include "siggb/criteria.hpp"
#include "siggb/pairs.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace siggb {

/// The criterion families selectable from the command line.
enum class CriterionMode { F5, Ratio, Gvw, None, EarlierUnsound };

std::string_view to_string(CriterionMode mode);

struct EngineConfig {
  ModuleOrderKind module_order = ModuleOrderKind::Schreyer;
  /// Partial order behind the rewritable criterion; nullopt reduces every
  /// regular pair.
  std::optional<PartialOrderKind> order = PartialOrderKind::Ratio;
  /// Replace the rewritable criterion by GVW's first and second criteria on
  /// the first pair element. Requires the ratio order.
  bool gvw_second = false;
  /// GVW's third criterion: one pending pair per lead signature.
  bool dedup = false;
  Strategy strategy = Strategy::MinimalSignature;
  bool full_vector = true;
  bool koszul = true;
  std::uint64_t iteration_cap = 1'000'000;
  bool check_admissible = true;
  /// Recompute u . f and lpp(u) for every element inserted into G.
  bool verify_vectors = false;

  static EngineConfig for_criterion(CriterionMode mode);

  /// ConfigError on inconsistent settings.
  void validate() const;
  std::string label() const;
};

struct RunStats {
  std::uint64_t pairs_generated = 0;
  std::uint64_t rejected_nonregular = 0;
  std::uint64_t rejected_criterion = 0;
  std::uint64_t reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t basis_nonzero = 0;
  std::uint64_t reduced_gb_size = 0;
  std::uint64_t elapsed_ms = 0;

  /// pairs_generated = rejected_nonregular + rejected_criterion + reduced.
  bool conserved() const {
    return pairs_generated == rejected_nonregular + rejected_criterion + reduced;
  }
  friend bool operator==(const RunStats&, const RunStats&) = default;
};

/// Tally of the u . f = f and lpp(u) = sig checks made with verify_vectors.
struct VectorAudit {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
};

struct RunResult {
  std::vector<Polynomial> generators; // the nonzero inputs, in order
  ModuleOrder module_order;
  Basis basis;
  RunStats stats;
  std::vector<AdmissibilityViolation> violations;
  std::uint64_t admissibility_checks = 0;
  VectorAudit audit;
  std::vector<Polynomial> groebner_basis; // extract_gb(basis)
};

ModuleOrder make_module_order(ModuleOrderKind kind, const TermOrder& order,
                              std::span<const Polynomial> generators);

/// Runs the signature-based completion. Zero inputs are dropped. Throws
/// ConfigError for a bad configuration and CapExceededError when more than
/// iteration_cap pairs are popped.
RunResult gbgc(const Ring& ring, std::span<const Polynomial> inputs, const EngineConfig& cfg);

/// Polynomial parts of G, made monic and interreduced to the reduced
/// Groebner basis, sorted by increasing leading monomial.
std::vector<Polynomial> extract_gb(const Ring& ring, const Basis& basis);
std::vector<Polynomial> extract_gb(const Ring& ring, std::span<const Polynomial> polys);

} // namespace siggb

#endif
