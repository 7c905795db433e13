#ifndef SIGGB_BASIS_HPP
#define SIGGB_BASIS_HPP

#include "siggb/sig.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace siggb {

/// The set G: nonzero elements (u, f) plus syzygy records (u, 0), sharing one
/// serial counter. Append-only; nothing is ever removed.
class Basis {
public:
  explicit Basis(std::size_t rank) : syz_by_index_(rank) {}

  std::size_t rank() const { return syz_by_index_.size(); }

  /// Assigns the next serial and stores the element; returns the serial.
  Serial add(LabeledPoly element);
  /// Leaves references to nonzero elements valid.
  Serial add_syzygy(SyzygyRecord record);

  std::span<const LabeledPoly> elements() const { return elements_; }
  std::span<const SyzygyRecord> syzygies() const { return syzygies_; }
  /// divmask of each element's lead power product and signature monomial,
  /// and of each syzygy record's signature monomial, by position.
  std::span<const std::uint64_t> lead_masks() const { return lead_masks_; }
  std::span<const std::uint64_t> sig_masks() const { return sig_masks_; }
  std::span<const std::uint64_t> syzygy_masks() const { return syzygy_masks_; }
  /// Positions in syzygies() of the records whose signature has this index.
  std::span<const std::uint32_t> syzygies_at(std::uint32_t index) const {
    return syz_by_index_.at(index);
  }

  std::size_t size() const { return by_serial_.size(); }
  bool contains(Serial s) const { return to_index(s) < by_serial_.size(); }
  bool is_syzygy(Serial s) const;

  /// The nonzero element with this serial; LookupError otherwise.
  const LabeledPoly& element(Serial s) const;
  const SyzygyRecord& syzygy(Serial s) const;

private:
  struct Locator {
    bool syzygy;
    std::uint32_t position;
  };

  std::vector<LabeledPoly> elements_;
  std::vector<SyzygyRecord> syzygies_;
  std::vector<std::uint64_t> lead_masks_;
  std::vector<std::uint64_t> sig_masks_;
  std::vector<std::uint64_t> syzygy_masks_;
  std::vector<Locator> by_serial_;
  std::vector<std::vector<std::uint32_t>> syz_by_index_;
};

} // namespace siggb

#endif
