#include "renyi/carrier.hpp"

#include "renyi/error.hpp"

namespace renyi {

Carrier::Carrier(std::vector<std::string> atoms) {
  if (atoms.empty()) throw Error("carrier must have at least one atom");
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    auto [it, inserted] = data->index.emplace(atoms[i], i);
    if (!inserted) throw Error("duplicate atom '" + atoms[i] + "' in carrier");
  }
  data->atoms = std::move(atoms);
  data_ = std::move(data);
}

std::optional<std::size_t> Carrier::find(std::string_view label) const {
  auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Carrier::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) throw Error("unknown atom '" + std::string(label) + "'");
  return *i;
}

void require_same_carrier(const Carrier& a, const Carrier& b, const char* what) {
  if (a != b) {
    throw CarrierMismatchError(std::string(what) + ": operands live on different carriers");
  }
}

}  // namespace renyi
