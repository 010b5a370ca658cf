#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace renyi {

/// Finite ordered collection of distinct atom labels.
///
/// The atom order is the declaration order and is stable; every table in the
/// library (weights, function values, event masks) is indexed by it. Copies
/// share storage, so passing carriers by value is cheap.
class Carrier {
 public:
  explicit Carrier(std::vector<std::string> atoms);

  std::size_t size() const { return data_->atoms.size(); }
  const std::vector<std::string>& atoms() const { return data_->atoms; }
  const std::string& atom(std::size_t i) const { return data_->atoms[i]; }

  std::optional<std::size_t> find(std::string_view label) const;

  /// Like find(), but throws Error when the label is unknown.
  std::size_t index_of(std::string_view label) const;

  /// Carriers are equal when they list the same atoms in the same order.
  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.data_ == b.data_ || a.data_->atoms == b.data_->atoms;
  }
  friend bool operator!=(const Carrier& a, const Carrier& b) { return !(a == b); }

 private:
  struct Data {
    std::vector<std::string> atoms;
    std::map<std::string, std::size_t, std::less<>> index;
  };

  std::shared_ptr<const Data> data_;
};

/// Throws CarrierMismatchError unless a and b are equal. `what` names the
/// operation for the diagnostic.
void require_same_carrier(const Carrier& a, const Carrier& b, const char* what);

}  // namespace renyi
