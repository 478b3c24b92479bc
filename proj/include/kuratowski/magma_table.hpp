#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kuratowski/element_set.hpp"
#include "kuratowski/error.hpp"

namespace kuratowski {

/// Full composition table of a finite magma. entry(i, k) is i∘k: the column
/// factor acts on the argument first, the row factor second.
class MagmaTable {
 public:
  MagmaTable() = default;

  /// Takes a square array of ids; throws InputError on ragged rows or ids
  /// out of range and CapacityError beyond kMaxOrder.
  explicit MagmaTable(std::vector<std::vector<ElementId>> rows,
                      std::vector<std::string> names = {})
      : order_(rows.size()), names_(std::move(names)) {
    if (order_ == 0) throw InputError("magma table must have positive order");
    if (order_ > kMaxOrder) {
      throw CapacityError("magma table order " + std::to_string(order_) +
                          " exceeds limit " + std::to_string(kMaxOrder));
    }
    entries_.reserve(order_ * order_);
    for (std::size_t i = 0; i < order_; ++i) {
      if (rows[i].size() != order_) {
        throw InputError("row " + std::to_string(i) + " has " +
                         std::to_string(rows[i].size()) + " entries, expected " +
                         std::to_string(order_));
      }
      for (auto v : rows[i]) {
        if (v >= order_) {
          throw InputError("entry " + std::to_string(v) + " in row " +
                           std::to_string(i) + " is out of range");
        }
        entries_.push_back(v);
      }
    }
    if (names_.empty()) {
      for (std::size_t i = 0; i < order_; ++i) names_.push_back("s" + std::to_string(i));
    } else if (names_.size() != order_) {
      throw InputError("names list length does not match table order");
    }
  }

  std::size_t order() const { return order_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(ElementId id) const { return names_.at(id); }

  /// Unchecked access; use compose() for validated lookups.
  ElementId entry(ElementId i, ElementId k) const { return entries_[i * order_ + k]; }
  void set_entry(ElementId i, ElementId k, ElementId v) {
    check_id(i);
    check_id(k);
    check_id(v);
    entries_[i * order_ + k] = v;
  }

  ElementSet all() const { return ElementSet::full(order_); }

  void check_id(ElementId id) const {
    if (id >= order_) {
      throw InputError("element id " + std::to_string(id) +
                       " out of range for table of order " + std::to_string(order_));
    }
  }
  void check_subset(ElementSet s) const {
    if (!s.subset_of(all())) throw InputError("subset contains ids outside the table");
  }

  std::vector<std::vector<ElementId>> rows() const {
    std::vector<std::vector<ElementId>> out(order_);
    for (std::size_t i = 0; i < order_; ++i) {
      out[i].assign(entries_.begin() + i * order_, entries_.begin() + (i + 1) * order_);
    }
    return out;
  }

  bool operator==(const MagmaTable& o) const {
    return order_ == o.order_ && entries_ == o.entries_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<ElementId> entries_;
  std::vector<std::string> names_;
};

}  // namespace kuratowski
