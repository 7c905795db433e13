#include "siggb/ground.hpp"

#include "siggb/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace siggb {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d : {2u, 3u, 5u}) {
    if (n % d == 0)
      return n == d;
  }
  for (std::uint64_t d = 7; d <= n / d; d += 2) {
    if (n % d == 0)
      return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) {
  if (modulus > std::numeric_limits<std::uint32_t>::max())
    throw NotPrimeError("field modulus " + std::to_string(modulus) + " exceeds 32 bits");
  if (!is_prime(modulus))
    throw NotPrimeError("field modulus " + std::to_string(modulus) + " is not prime");
  p_ = static_cast<std::uint32_t>(modulus);
}

FieldElement PrimeField::from_integer(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0)
    r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.value == 0)
    throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(p_) + ")");
  // Extended Euclid on (a, p); only the coefficient of a is tracked.
  std::int64_t r0 = p_, r1 = a.value;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return from_integer(s0);
}

void Monomial::throw_too_many_variables(std::size_t nvars) {
  throw DimensionError("at most " + std::to_string(kMaxVariables) + " variables are supported, got " +
                       std::to_string(nvars));
}

void Monomial::throw_size_mismatch(const Monomial& a, const Monomial& b) {
  throw DimensionError("monomials in " + std::to_string(a.size()) + " and " +
                       std::to_string(b.size()) + " variables");
}

void Monomial::throw_overflow() { throw OverflowError("exponent overflow in monomial product"); }

void Monomial::throw_not_divisible() {
  throw DivisibilityError("monomial quotient with a non-divisor");
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents)
    set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i)
    m.set(i, exponents[i]);
  return m;
}

void Monomial::set(std::size_t i, unsigned exponent) {
  if (i >= nvars_)
    throw DimensionError("variable index " + std::to_string(i) + " out of range");
  if (exponent > std::numeric_limits<Exponent>::max())
    throw OverflowError("exponent " + std::to_string(exponent) + " overflows");
  degree_ = degree_ - exps_[i] + exponent;
  exps_[i] = static_cast<Exponent>(exponent);
}

std::string_view to_string(TermOrderKind kind) {
  switch (kind) {
  case TermOrderKind::Lex:
    return "lex";
  case TermOrderKind::GrLex:
    return "grlex";
  case TermOrderKind::GrevLex:
    return "grevlex";
  }
  return "?";
}

TermOrder::TermOrder(TermOrderKind kind, std::size_t nvars)
    : TermOrder(kind, [nvars] {
        std::vector<std::size_t> p(nvars);
        std::iota(p.begin(), p.end(), std::size_t{0});
        return p;
      }()) {}

TermOrder::TermOrder(TermOrderKind kind, std::vector<std::size_t> precedence) : kind_(kind) {
  if (precedence.size() > Monomial::kMaxVariables)
    throw DimensionError("at most " + std::to_string(Monomial::kMaxVariables) +
                         " variables are supported");
  std::vector<bool> seen(precedence.size(), false);
  for (std::size_t k = 0; k < precedence.size(); ++k) {
    std::size_t v = precedence[k];
    if (v >= precedence.size() || seen[v])
      throw DimensionError("variable precedence is not a permutation");
    seen[v] = true;
    precedence_.push_back(static_cast<std::uint8_t>(v));
    identity_ = identity_ && v == k;
  }
}

void TermOrder::throw_size_mismatch() const {
  throw DimensionError("monomial length does not match the term order's " +
                       std::to_string(precedence_.size()) + " variables");
}

} // namespace siggb
