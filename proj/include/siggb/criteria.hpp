#ifndef SIGGB_CRITERIA_HPP
#define SIGGB_CRITERIA_HPP

// The generalized rewritable criterion over a pluggable partial order on G,
// its F5 and ratio instances, and the dedicated GVW criteria.

#include "siggb/basis.hpp"
#include "siggb/pairs.hpp"
#include "siggb/reduction.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace siggb {

enum class PartialOrderKind {
  /// Syzygies below nonzero elements, otherwise later-added is smaller.
  F5,
  /// Same-index elements compared by lpp(t'f') vs lpp(tf) after aligning
  /// signatures, later-added smaller on a tie. Different indices are
  /// incomparable.
  Ratio,
  /// Earlier-added is smaller. Not admissible; only available when the
  /// library is built with SIGGB_UNSOUND_ORDER (test builds).
  EarlierUnsound,
};

std::string_view to_string(PartialOrderKind kind);
/// Whether EarlierUnsound was compiled in.
bool unsound_order_available();

/// What a partial order needs to know about an element of G.
struct OrderView {
  Serial serial{};
  const Signature* sig = nullptr;
  const Monomial* lead = nullptr; // null: zero polynomial part
};

inline OrderView view(const LabeledPoly& a) { return {a.serial, &a.sig, &a.poly.lead_mono()}; }
inline OrderView view(const SyzygyRecord& s) { return {s.serial, &s.sig, nullptr}; }

/// a < b under kind. Throws ConfigError for EarlierUnsound in builds
/// without it.
bool po_less(const OrderView& a, const OrderView& b, PartialOrderKind kind,
             const TermOrder& order);
inline bool po_less(const LabeledPoly& a, const LabeledPoly& b, PartialOrderKind kind,
                    const TermOrder& order) {
  return po_less(view(a), view(b), kind, order);
}

struct RewriteWitness {
  enum class Reason { SyzygyDivisor, OrderSmaller };

  Serial serial{};
  Signature sig;
  Reason reason = Reason::SyzygyDivisor;
};

/// Is t*(u, f) gen-rewritable by G: some w in G with sig(w) | t*sig(a) and
/// w < a. Syzygy records are searched first, then nonzero elements by
/// ascending serial; the first hit is returned.
std::optional<RewriteWitness> gen_rewritable(const Monomial& t, const LabeledPoly& a,
                                             const Basis& basis, PartialOrderKind kind,
                                             const TermOrder& order);

/// Either side of the pair is gen-rewritable.
bool pair_rewritable(const CriticalPair& p, const Basis& basis, PartialOrderKind kind,
                     const TermOrder& order);

/// Some syzygy record's signature divides t*sig(a).
bool gvw_divisible(const Monomial& t, const LabeledPoly& a, const Basis& basis);

/// Reduces t*(u, f) by G and asks whether the result (w, h) is super
/// top-reducible: some nonzero (u', f') with sig(u') | sig(w), lpp(f') |
/// lpp(h), equal cofactors and (full-vector mode) equal coefficient ratios.
/// A reduction to zero records a ZeroReduction syzygy in G and answers false.
/// `index`, when given, must cover the nonzero elements of `basis`.
bool eventually_super_top_reducible(const Ring& ring, const ModuleOrder& mo, const Monomial& t,
                                    const LabeledPoly& a, Basis& basis,
                                    const ReducerIndex* index = nullptr);

struct AdmissibilityViolation {
  Serial parent{};
  Serial child{};
  PartialOrderKind kind = PartialOrderKind::F5;
};

/// Checks, event by event, that every freshly reduced element sits below the
/// pair element that produced it.
class AdmissibilityMonitor {
public:
  explicit AdmissibilityMonitor(bool enabled = true) : enabled_(enabled) {}

  bool enabled() const { return enabled_; }
  std::size_t checks() const { return checks_; }
  const std::vector<AdmissibilityViolation>& violations() const { return log_; }

  /// po_less(child, parent); a false answer is logged. Always true when
  /// disabled.
  bool check(const OrderView& parent, const OrderView& child, PartialOrderKind kind,
             const TermOrder& order);

private:
  bool enabled_;
  std::size_t checks_ = 0;
  std::vector<AdmissibilityViolation> log_;
};

} // namespace siggb

#endif
