#ifndef SIGGB_SIG_HPP
#define SIGGB_SIG_HPP

// Signatures (module monomials t*e_i), the module order, and labeled
// module elements (u, f) with u . (f_1..f_m) = f.

#include "siggb/poly.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace siggb {

/// t*e_index. Generator indices are zero-based.
struct Signature {
  std::uint32_t index = 0;
  Monomial mono;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Total order on (index, raw exponents) for use as a container key only.
struct SignatureKeyLess {
  bool operator()(const Signature& a, const Signature& b) const {
    if (a.index != b.index)
      return a.index < b.index;
    return key_less(a.mono, b.mono);
  }
};

Signature sig_mul(const Monomial& t, const Signature& s);
/// Same index and the monomial of s divides that of t.
bool sig_divides(const Signature& s, const Signature& t);
std::string render(const Ring& ring, const Signature& s);

enum class ModuleOrderKind { Pot, Schreyer };

/// The order on R^m used for signatures.
///
/// Pot compares generator precedence first and then the monomial. Schreyer
/// compares t*lpp(f_i) against s*lpp(f_j) under the term order, and on a tie
/// the larger index is the smaller signature.
class ModuleOrder {
public:
  /// e_1 > e_2 > ... > e_m.
  static ModuleOrder pot(const TermOrder& order, std::size_t rank);
  /// precedence[k] is the k-th most significant generator index.
  static ModuleOrder pot(const TermOrder& order, std::vector<std::size_t> precedence);
  static ModuleOrder schreyer(const TermOrder& order, std::vector<Monomial> weights);

  ModuleOrderKind kind() const { return kind_; }
  std::size_t rank() const { return rank_.size(); }
  const TermOrder& term_order() const { return order_; }
  std::span<const Monomial> weights() const { return weights_; }

  /// Throws IndexError for an index outside [0, rank).
  std::strong_ordering compare(const Signature& a, const Signature& b) const {
    if (a.index >= rank_.size() || b.index >= rank_.size())
      throw_bad_index();
    if (kind_ == ModuleOrderKind::Pot) {
      if (a.index != b.index)
        return rank_[b.index] <=> rank_[a.index];
      return order_.compare(a.mono, b.mono);
    }
    if (a.index == b.index)
      return order_.compare(a.mono, b.mono);
    if (order_.is_graded()) {
      // Weighted degrees decide most comparisons without forming products.
      const std::uint32_t da = a.mono.degree() + weights_[a.index].degree();
      const std::uint32_t db = b.mono.degree() + weights_[b.index].degree();
      if (da != db)
        return da <=> db;
    }
    auto c = order_.compare(mono_mul(a.mono, weights_[a.index]),
                            mono_mul(b.mono, weights_[b.index]));
    if (c != 0)
      return c;
    return b.index <=> a.index;
  }
  bool less(const Signature& a, const Signature& b) const { return compare(a, b) < 0; }

  /// A coarse rank for a signature with this index and monomial degree:
  /// coarse_key(a) < coarse_key(b) implies a < b, while equal keys say
  /// nothing. Lets callers discard candidates before forming products.
  std::uint64_t coarse_key(std::uint32_t index, std::uint32_t degree) const {
    const bool graded = order_.is_graded();
    if (kind_ == ModuleOrderKind::Pot) {
      const std::uint64_t position = rank_.size() - 1 - rank_[index];
      return position << 32 | (graded ? degree : 0u);
    }
    return graded ? std::uint64_t{degree} + weights_[index].degree() : 0u;
  }
private:
  ModuleOrder(ModuleOrderKind kind, TermOrder order) : kind_(kind), order_(std::move(order)) {}
  [[noreturn]] void throw_bad_index() const;

  ModuleOrderKind kind_;
  TermOrder order_;
  // Pot: rank_[i] is the position of e_i in the precedence (0 = largest).
  std::vector<std::uint32_t> rank_;
  std::vector<Monomial> weights_;
};

/// Element of R^m, one polynomial per generator.
using ModuleVector = std::vector<Polynomial>;

/// Leading module term of u: (signature, coefficient), or nullopt for u = 0.
std::optional<std::pair<Signature, FieldElement>> module_lead(const ModuleOrder& mo,
                                                              const ModuleVector& u);
/// u <- u - c*t*v.
void module_sub_mul_inplace(const Ring& ring, ModuleVector& u, FieldElement c, const Monomial& t,
                            const ModuleVector& v);
ModuleVector module_scale(const Ring& ring, const Term& t, const ModuleVector& u);
ModuleVector unit_vector(const Ring& ring, std::size_t rank, std::size_t index);
/// u . f
Polynomial module_evaluate(const Ring& ring, const ModuleVector& u,
                           std::span<const Polynomial> generators);

/// Serials number every element of a basis in creation order.
enum class Serial : std::uint32_t {};

inline std::uint32_t to_index(Serial s) { return static_cast<std::uint32_t>(s); }

/// (u, f) as stored by the engine. In signature-only mode `vector` is
/// absent and sig_lc stays 1.
struct LabeledPoly {
  Serial serial{};
  Signature sig;
  FieldElement sig_lc{1};
  Polynomial poly;
  std::optional<ModuleVector> vector;
};

enum class SyzygyOrigin { PrincipalInput, Koszul, ZeroReduction };

/// A module element (u, 0) known by its signature.
struct SyzygyRecord {
  Serial serial{};
  Signature sig;
  SyzygyOrigin origin = SyzygyOrigin::PrincipalInput;
  // Koszul: the basis element the relation was built from. Principal: the
  // larger of the two generator indices.
  std::uint32_t source = 0;
  // Koszul only: the generator index i of h*e_i - f_i*w.
  std::uint32_t component = 0;
  std::optional<ModuleVector> vector;
};

/// f_j*e_i - f_i*e_j for all i < j. Vectors are attached when full_vector is
/// set. Serials are left for the basis to assign.
std::vector<SyzygyRecord> principal_syzygies(const Ring& ring, std::span<const Polynomial> inputs,
                                             const ModuleOrder& mo, bool full_vector);

/// h*e_i - f_i*w for the new element (w, h).
///
/// With the module vector of `added` present the relation is built exactly.
/// Otherwise the two candidate leads lpp(h)*e_i and lpp(f_i)*sig(w) are
/// compared; when they coincide the lead may cancel and nothing is returned.
std::optional<SyzygyRecord> koszul_syzygy(const Ring& ring, const LabeledPoly& added,
                                          std::size_t i, const Polynomial& fi,
                                          const ModuleOrder& mo);

/// h*e_i - f_i*w for an element carrying its module vector.
/// PreconditionError without one.
ModuleVector koszul_vector(const Ring& ring, const LabeledPoly& added, std::size_t i,
                           const Polynomial& fi);

/// Signature of h*e_i - f_i*w from the two leading module terms; the vector
/// is expanded only when those terms cancel. nullopt for the zero relation.
/// Requires the module vector of `added`.
std::optional<Signature> koszul_signature(const Ring& ring, const LabeledPoly& added,
                                          std::size_t i, const Polynomial& fi,
                                          const ModuleOrder& mo);

} // namespace siggb

#endif
