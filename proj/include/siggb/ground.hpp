#ifndef SIGGB_GROUND_HPP
#define SIGGB_GROUND_HPP

// Prime-field coefficients, exponent-vector monomials and term orders.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace siggb {

/// A residue in [0, p) of the owning PrimeField.
struct FieldElement {
  std::uint32_t value = 0;

  bool is_zero() const { return value == 0; }
  friend bool operator==(FieldElement, FieldElement) = default;
};

/// GF(p) for a prime p < 2^32, so that products fit in 64 bits.
class PrimeField {
public:
  static constexpr std::uint32_t kDefaultModulus = 32003;

  /// Throws NotPrimeError unless modulus is a prime below 2^32.
  explicit PrimeField(std::uint64_t modulus = kDefaultModulus);

  std::uint32_t modulus() const { return p_; }

  FieldElement from_integer(std::int64_t value) const;
  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint64_t s = std::uint64_t{a.value} + b.value;
    return {static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + (p_ - b.value)};
  }
  FieldElement neg(FieldElement a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
  }
  /// Multiplicative inverse; throws DivisionByZeroError on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  bool contains(FieldElement a) const { return a.value < p_; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

using Exponent = std::uint16_t;

/// Exponent vector of a power product. Storage is inline; the number of
/// ring variables is capped at kMaxVariables.
class Monomial {
public:
  static constexpr std::size_t kMaxVariables = 16;

  Monomial() = default;
  /// The monomial 1 in a ring with nvars variables.
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVariables)
      throw_too_many_variables(nvars);
  }
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial from_exponents(std::span<const unsigned> exponents);

  std::size_t size() const { return nvars_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::span<const Exponent> exponents() const { return {exps_.data(), nvars_}; }

  /// Sets one exponent; throws OverflowError past the exponent width.
  void set(std::size_t i, unsigned exponent);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  /// Lexicographic comparison of raw exponent vectors, for use as a map key
  /// only. It is not a term order.
  friend bool key_less(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_)
      return a.nvars_ < b.nvars_;
    return a.exps_ < b.exps_;
  }

  friend Monomial mono_mul(const Monomial& a, const Monomial& b);
  friend Monomial mono_div(const Monomial& a, const Monomial& b);
  friend Monomial mono_lcm(const Monomial& a, const Monomial& b);
  friend bool mono_divides(const Monomial& a, const Monomial& b);

private:
  [[noreturn]] static void throw_too_many_variables(std::size_t nvars);
  [[noreturn]] static void throw_size_mismatch(const Monomial& a, const Monomial& b);
  [[noreturn]] static void throw_overflow();
  [[noreturn]] static void throw_not_divisible();
  static void require_same_size(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_)
      throw_size_mismatch(a, b);
  }

  // Slots past nvars_ stay zero, so the loops below run over all of them.
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

// All four throw DimensionError on length mismatch. mono_mul throws
// OverflowError, mono_div throws DivisibilityError.
inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial::require_same_size(a, b);
  Monomial r;
  r.nvars_ = a.nvars_;
  bool overflow = false;
  for (std::size_t i = 0; i < Monomial::kMaxVariables; ++i) {
    Exponent e = static_cast<Exponent>(a.exps_[i] + b.exps_[i]);
    overflow |= e < a.exps_[i];
    r.exps_[i] = e;
  }
  if (overflow)
    Monomial::throw_overflow();
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial::require_same_size(a, b);
  Monomial r;
  r.nvars_ = a.nvars_;
  bool bad = false;
  for (std::size_t i = 0; i < Monomial::kMaxVariables; ++i) {
    bad |= b.exps_[i] > a.exps_[i];
    r.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
  }
  if (bad)
    Monomial::throw_not_divisible();
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial::require_same_size(a, b);
  Monomial r;
  r.nvars_ = a.nvars_;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < Monomial::kMaxVariables; ++i) {
    r.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  Monomial::require_same_size(a, b);
  if (a.degree_ > b.degree_)
    return false;
  bool ok = true;
  for (std::size_t i = 0; i < Monomial::kMaxVariables; ++i)
    ok &= a.exps_[i] <= b.exps_[i];
  return ok;
}

/// Four threshold bits per variable (exponent >= 1, 2, 4, 8). If a divides b
/// then divmask(a) is a subset of divmask(b), so a nonempty
/// divmask(a) & ~divmask(b) rules divisibility out.
inline std::uint64_t divmask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < Monomial::kMaxVariables; ++i) {
    const unsigned e = m[i];
    const std::uint64_t bits = std::uint64_t{e >= 1} | std::uint64_t{e >= 2} << 1 |
                               std::uint64_t{e >= 4} << 2 | std::uint64_t{e >= 8} << 3;
    mask |= bits << (4 * i);
  }
  return mask;
}

inline bool divmask_excludes(std::uint64_t divisor, std::uint64_t multiple) {
  return (divisor & ~multiple) != 0;
}

enum class TermOrderKind { Lex, GrLex, GrevLex };

std::string_view to_string(TermOrderKind kind);

/// A total, multiplicative well-order on monomials.
class TermOrder {
public:
  /// Variable precedence x1 > x2 > ... > xn.
  TermOrder(TermOrderKind kind, std::size_t nvars);
  /// precedence[k] is the k-th most significant variable.
  TermOrder(TermOrderKind kind, std::vector<std::size_t> precedence);

  TermOrderKind kind() const { return kind_; }
  std::size_t nvars() const { return precedence_.size(); }
  std::span<const std::uint8_t> precedence() const { return precedence_; }

  /// Throws DimensionError when the lengths differ.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    check_sizes(a, b);
    return compare_unchecked(a, b);
  }
  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const {
    if (kind_ != TermOrderKind::Lex && a.degree() != b.degree())
      return a.degree() <=> b.degree();
    const std::size_t n = precedence_.size();
    if (kind_ == TermOrderKind::GrevLex) {
      // Equal degree: the smaller exponent in the least significant differing
      // variable wins.
      for (std::size_t k = n; k-- > 0;) {
        std::size_t i = identity_ ? k : precedence_[k];
        if (a[i] != b[i])
          return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t i = identity_ ? k : precedence_[k];
      if (a[i] != b[i])
        return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool is_graded() const { return kind_ != TermOrderKind::Lex; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
  void check_sizes(const Monomial& a, const Monomial& b) const {
    if (a.size() != precedence_.size() || b.size() != precedence_.size())
      throw_size_mismatch();
  }
  [[noreturn]] void throw_size_mismatch() const;

  TermOrderKind kind_;
  std::vector<std::uint8_t> precedence_;
  bool identity_ = true;
};

} // namespace siggb

#endif
