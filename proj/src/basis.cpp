#include "siggb/basis.hpp"

#include "siggb/errors.hpp"

#include <string>

namespace siggb {

Serial Basis::add(LabeledPoly element) {
  if (element.poly.is_zero())
    throw PreconditionError("zero polynomial parts are stored as syzygy records");
  if (element.sig.index >= rank())
    throw IndexError("signature index outside the module rank");
  Serial s{static_cast<std::uint32_t>(by_serial_.size())};
  element.serial = s;
  by_serial_.push_back({false, static_cast<std::uint32_t>(elements_.size())});
  lead_masks_.push_back(divmask(element.poly.lead_mono()));
  sig_masks_.push_back(divmask(element.sig.mono));
  elements_.push_back(std::move(element));
  return s;
}

Serial Basis::add_syzygy(SyzygyRecord record) {
  if (record.sig.index >= rank())
    throw IndexError("signature index outside the module rank");
  Serial s{static_cast<std::uint32_t>(by_serial_.size())};
  record.serial = s;
  auto position = static_cast<std::uint32_t>(syzygies_.size());
  by_serial_.push_back({true, position});
  syz_by_index_[record.sig.index].push_back(position);
  syzygy_masks_.push_back(divmask(record.sig.mono));
  syzygies_.push_back(std::move(record));
  return s;
}

bool Basis::is_syzygy(Serial s) const {
  if (!contains(s))
    throw LookupError("no basis element with serial " + std::to_string(to_index(s)));
  return by_serial_[to_index(s)].syzygy;
}

const LabeledPoly& Basis::element(Serial s) const {
  if (!contains(s) || by_serial_[to_index(s)].syzygy)
    throw LookupError("no nonzero basis element with serial " + std::to_string(to_index(s)));
  return elements_[by_serial_[to_index(s)].position];
}

const SyzygyRecord& Basis::syzygy(Serial s) const {
  if (!contains(s) || !by_serial_[to_index(s)].syzygy)
    throw LookupError("no syzygy record with serial " + std::to_string(to_index(s)));
  return syzygies_[by_serial_[to_index(s)].position];
}

} // namespace siggb
