#ifndef SIGGB_PROBLEM_HPP
#define SIGGB_PROBLEM_HPP

// The text format for ideal descriptions:
//
//   field 32003
//   vars x,y,z
//   order grevlex
//   polys:
//   x^2 - 1
//   x*y - 1
//
// `#` starts a comment. After `polys:` each nonblank line is one polynomial.
// The order of the `vars` line is the variable precedence.

#include "siggb/poly.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace siggb {

struct ProblemFile {
  std::uint64_t modulus = PrimeField::kDefaultModulus;
  std::vector<std::string> vars;
  TermOrderKind order = TermOrderKind::GrevLex;
  std::vector<Polynomial> polys;

  Ring ring() const;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Throws ParseError with the offending line number. `field` and `vars`
/// are required; `order` defaults to grevlex.
ProblemFile parse_problem(std::string_view text);

/// Text that parse_problem reads back to an equal ProblemFile.
std::string render_problem(const ProblemFile& problem);

/// Parses a single polynomial expression over ring; ParseError reports
/// `line` as the location.
Polynomial parse_polynomial(const Ring& ring, std::string_view text, std::size_t line = 1);


} // namespace siggb

#endif
