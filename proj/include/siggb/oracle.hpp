#ifndef SIGGB_ORACLE_HPP
#define SIGGB_ORACLE_HPP

// Classical reference computations used to check the engine.

#include "siggb/basis.hpp"
#include "siggb/reduction.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace siggb {

/// Buchberger's algorithm with normal selection (smallest lcm degree first)
/// and the coprime-lead criterion only. Zero inputs are ignored. The result
/// is a Groebner basis, not necessarily reduced.
std::vector<Polynomial> buchberger(const Ring& ring, std::span<const Polynomial> inputs);

/// The reduced Groebner basis of a Groebner basis: monic, interreduced,
/// sorted by increasing leading monomial.
std::vector<Polynomial> reduce_gb(const Ring& ring, std::span<const Polynomial> gb);

/// Every S-polynomial reduces to zero.
bool is_groebner_basis(const Ring& ring, std::span<const Polynomial> polys);

/// The two lists generate the same ideal.
bool gb_equal(const Ring& ring, std::span<const Polynomial> a, std::span<const Polynomial> b);

struct StandardRepLimits {
  /// Extra multiplier degree beyond the lead-degree gap.
  unsigned slack = 2;
  /// Largest number of candidate products t*(v, g) the search will set up.
  std::size_t max_unknowns = 60000;
};

/// Whether elem = sum p_i (v_i, g_i) over G (nonzero elements and syzygy
/// records) with lpp(p_i v_i) <= sig(elem) and lpp(p_i g_i) <= lpp(elem.poly).
///
/// Decided by linear algebra over the candidate products t*(v_i, g_i)
/// allowed by both bounds. Multipliers are searched up to a degree bound;
/// when that bound cut off candidates and no representation was found the
/// answer is unknown and SizeError is thrown. Requires module vectors on
/// elem and every member of G (PreconditionError otherwise).
bool has_standard_representation(const Ring& ring, const ModuleOrder& mo,
                                 const WorkingElement& elem, const Basis& basis,
                                 const StandardRepLimits& limits = {});

struct SpotcheckReport {
  std::size_t pairs_checked = 0;
  std::vector<std::pair<Serial, Serial>> failures;

  bool passed() const { return failures.empty(); }
};

/// Runs has_standard_representation on the S-polynomial of every pair of
/// nonzero members of G.
SpotcheckReport sgb_spotcheck(const Ring& ring, const ModuleOrder& mo, const Basis& basis,
                              const StandardRepLimits& limits = {});

} // namespace siggb

#endif
