#ifndef SIGGB_POLY_HPP
#define SIGGB_POLY_HPP

#include "siggb/ground.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace siggb {

struct Term {
  FieldElement coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A sparse polynomial: terms strictly descending under the ring's term
/// order, no zero coefficients. The empty term list is the zero polynomial.
/// Arithmetic lives on Ring, which owns the order that keeps terms sorted.
class Polynomial {
public:
  Polynomial() = default;
  /// Takes terms that are already canonical; use Ring::make otherwise.
  explicit Polynomial(std::vector<Term> canonical_terms) : terms_(std::move(canonical_terms)) {}

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  /// Throws EmptyPolynomialError on zero.
  const Term& lead() const {
    if (terms_.empty())
      throw_empty();
    return terms_.front();
  }
  const Monomial& lead_mono() const { return lead().mono; }
  FieldElement lead_coeff() const { return lead().coeff; }
  /// lpp with the convention lpp(0) = 0, represented as nullopt.
  std::optional<Monomial> lpp() const;

  std::vector<Term>& mutable_terms() { return terms_; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  [[noreturn]] static void throw_empty();

  std::vector<Term> terms_;
};

/// K[x1..xn] with a fixed term order: the context for all polynomial
/// arithmetic. Immutable once built.
class Ring {
public:
  Ring(PrimeField field, std::vector<std::string> names, TermOrder order);
  /// Variables named x1..xn.
  Ring(PrimeField field, std::size_t nvars, TermOrderKind order);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const TermOrder& order() const { return order_; }
  const std::vector<std::string>& names() const { return names_; }

  Monomial one() const { return Monomial(nvars()); }
  Monomial var(std::size_t i, unsigned exponent = 1) const;
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b);
  }

  /// Sorts, merges like terms and drops zeros.
  Polynomial make(std::vector<Term> terms) const;
  Polynomial constant(std::int64_t c) const;
  Polynomial variable(std::size_t i) const;
  Polynomial term(FieldElement c, const Monomial& m) const;

  Polynomial add(const Polynomial& p, const Polynomial& q) const;
  Polynomial sub(const Polynomial& p, const Polynomial& q) const;
  Polynomial neg(const Polynomial& p) const;
  Polynomial scale(FieldElement c, const Polynomial& p) const;
  Polynomial term_scale(const Term& t, const Polynomial& p) const;
  Polynomial mul(const Polynomial& p, const Polynomial& q) const;
  Polynomial pow(const Polynomial& p, unsigned e) const;
  Polynomial monic(const Polynomial& p) const;

  /// f <- f - c*t*g, the single primitive behind every reduction step.
  void sub_mul_inplace(Polynomial& f, FieldElement c, const Monomial& t,
                       const Polynomial& g) const;

  /// t_f*f - c*t_g*g with c = lc(f)/lc(g); throws EmptyPolynomialError on a zero input.
  Polynomial spoly(const Polynomial& f, const Polynomial& g) const;

  /// Full reduction of every term by the leads of basis. Zero members are
  /// rejected with PreconditionError.
  Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis) const;

  /// Checks the canonical-form invariant.
  bool is_canonical(const Polynomial& p) const;

  /// Renders as "c*x^e*y + c" with canonical residues; "0" for zero.
  std::string render(const Polynomial& p) const;
  std::string render(const Monomial& m) const;

  friend bool operator==(const Ring&, const Ring&) = default;

private:
  void check(const Polynomial& p) const;

  PrimeField field_;
  std::vector<std::string> names_;
  TermOrder order_;
};

/// A polynomial accumulated as runs of geometrically growing length, so that
/// many small updates to a long sum stay cheap. Runs keep their terms in
/// ascending order with the leading term at the back. The ring must outlive
/// the bucket.
class GeoBucket {
public:
  explicit GeoBucket(const Ring& ring) : ring_(&ring) {}
  GeoBucket(const Ring& ring, const Polynomial& p);

  /// this -= c*t*g over the given terms of g, which are in descending order.
  void sub_mul(FieldElement c, const Monomial& t, std::span<const Term> g);
  /// The leading term after combining equal leads across runs; null for zero.
  const Term* lead();
  /// Drops the leading term; PreconditionError on zero.
  void pop_lead();
  /// The accumulated polynomial; leaves the bucket empty.
  Polynomial take();

private:
  using Run = std::vector<Term>;

  void insert(Run run);
  Run merge(Run a, Run b) const;

  const Ring* ring_;
  std::vector<Run> runs_;
  std::ptrdiff_t lead_run_ = -1;
};

} // namespace siggb

#endif
