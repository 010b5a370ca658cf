#include "renyi/event.hpp"

#include <algorithm>

#include "renyi/error.hpp"

namespace renyi {

Event::Event(Carrier carrier, const std::vector<std::string>& member_labels)
    : carrier_(std::move(carrier)), mask_(carrier_.size(), false) {
  for (const auto& label : member_labels) {
    mask_[carrier_.index_of(label)] = true;
  }
}

Event Event::empty(Carrier carrier) {
  std::vector<bool> mask(carrier.size(), false);
  return Event(std::move(carrier), std::move(mask));
}

Event Event::full(Carrier carrier) {
  std::vector<bool> mask(carrier.size(), true);
  return Event(std::move(carrier), std::move(mask));
}

Event Event::singleton(Carrier carrier, std::size_t atom_index) {
  std::vector<bool> mask(carrier.size(), false);
  mask.at(atom_index) = true;
  return Event(std::move(carrier), std::move(mask));
}

Event Event::from_mask(Carrier carrier, std::vector<bool> mask) {
  if (mask.size() != carrier.size()) throw Error("event mask does not match carrier size");
  return Event(std::move(carrier), std::move(mask));
}

bool Event::is_empty() const {
  return std::find(mask_.begin(), mask_.end(), true) == mask_.end();
}

std::size_t Event::count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<std::string> Event::member_labels() const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) labels.push_back(carrier_.atom(i));
  }
  return labels;
}

std::string Event::str() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (!mask_[i]) continue;
    if (!first) out += ' ';
    out += carrier_.atom(i);
    first = false;
  }
  out += '}';
  return out;
}

bool Event::subset_of(const Event& other) const {
  require_same_carrier(carrier_, other.carrier_, "subset_of");
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i] && !other.mask_[i]) return false;
  }
  return true;
}

Event Event::operator|(const Event& other) const {
  require_same_carrier(carrier_, other.carrier_, "event union");
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) mask[i] = mask_[i] || other.mask_[i];
  return Event(carrier_, std::move(mask));
}

Event Event::operator&(const Event& other) const {
  require_same_carrier(carrier_, other.carrier_, "event intersection");
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) mask[i] = mask_[i] && other.mask_[i];
  return Event(carrier_, std::move(mask));
}

Event Event::complement() const {
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) mask[i] = !mask_[i];
  return Event(carrier_, std::move(mask));
}

}  // namespace renyi
