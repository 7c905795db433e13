#ifndef SIGGB_REDUCTION_HPP
#define SIGGB_REDUCTION_HPP

#include "siggb/basis.hpp"

#include <optional>
#include <span>
#include <vector>

namespace siggb {

/// A module element under reduction: signature, its coefficient, the
/// polynomial part and (full-vector mode) the module vector.
struct WorkingElement {
  Signature sig;
  FieldElement sig_lc{1};
  Polynomial poly;
  std::optional<ModuleVector> vector;
};

/// Nonzero basis elements grouped by leading power product, each group in
/// ascending signature order, then serial. Reducer search over the index
/// returns the same element as a scan of the basis.
class ReducerIndex {
public:
  struct Member {
    Signature sig;
    Serial serial;
    std::uint32_t position; // in Basis::elements()
  };
  struct Group {
    Monomial lead;
    std::uint64_t mask;
    std::vector<Member> members;
  };

  explicit ReducerIndex(const ModuleOrder& mo) : mo_(&mo) {}

  /// Indexes the element stored at `position` of the basis.
  void add(const LabeledPoly& element, std::uint32_t position);
  std::span<const Group> groups() const { return groups_; }
  /// masks()[g] == groups()[g].mask, stored contiguously for scanning.
  std::span<const std::uint64_t> masks() const { return masks_; }
  /// Number of elements indexed.
  std::size_t size() const { return size_; }

private:
  const ModuleOrder* mo_;
  std::vector<Group> groups_;
  std::vector<std::uint64_t> masks_;
  std::size_t size_ = 0;
};

struct ReductionContext {
  const Ring& ring;
  const ModuleOrder& mo;
  const Basis& basis;
  /// Used when it covers every element of `basis`; otherwise the basis is scanned.
  const ReducerIndex* index = nullptr;
};

/// The reducer a one-step signature-preserving reduction of `a` would use:
/// a nonzero basis element whose lead divides lpp(a.poly) and whose scaled
/// signature t*sig(v) is below sig(a), or equal to it with a surviving lead
/// coefficient (full-vector mode only). Among those the smallest t*sig(v),
/// then the lowest serial.
const LabeledPoly* find_sig_reducer(const ReductionContext& ctx, const WorkingElement& a);

/// One step a <- a - c*t*(v, g). Returns false, leaving `a` untouched, when
/// no reducer exists. PreconditionError if a.poly is zero.
bool sig_reduce_step(const ReductionContext& ctx, WorkingElement& a);

/// Top-reduces to a fixpoint. The signature never changes; the polynomial
/// part may end at zero.
WorkingElement sig_reduce(const ReductionContext& ctx, WorkingElement a);

} // namespace siggb

#endif
