#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "renyi/carrier.hpp"

namespace renyi {

/// A measurable set on a carrier: a subset of its atoms.
///
/// The empty event is representable; it is needed to state the first bunch
/// axiom even though it can never be a condition.
class Event {
 public:
  /// Builds the event {labels...}. Unknown labels throw Error.
  Event(Carrier carrier, const std::vector<std::string>& member_labels);

  static Event empty(Carrier carrier);
  static Event full(Carrier carrier);
  static Event singleton(Carrier carrier, std::size_t atom_index);
  static Event from_mask(Carrier carrier, std::vector<bool> mask);

  const Carrier& carrier() const { return carrier_; }
  const std::vector<bool>& mask() const { return mask_; }

  bool contains(std::size_t atom_index) const { return mask_[atom_index]; }
  bool is_empty() const;
  std::size_t count() const;

  /// Member labels in carrier order.
  std::vector<std::string> member_labels() const;

  /// Rendering like "{2 4 6}", members in carrier order.
  std::string str() const;

  bool subset_of(const Event& other) const;

  Event operator|(const Event& other) const;  // union
  Event operator&(const Event& other) const;  // intersection
  Event complement() const;

  friend bool operator==(const Event& a, const Event& b) {
    return a.carrier_ == b.carrier_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const Event& a, const Event& b) { return !(a == b); }

  /// Canonical order used to make bunch listings and reports deterministic:
  /// lexicographic on the membership mask in atom order.
  static bool mask_less(const Event& a, const Event& b) { return a.mask_ < b.mask_; }

 private:
  Event(Carrier carrier, std::vector<bool> mask)
      : carrier_(std::move(carrier)), mask_(std::move(mask)) {}

  Carrier carrier_;
  std::vector<bool> mask_;
};

}  // namespace renyi
