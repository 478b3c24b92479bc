#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "kuratowski/error.hpp"

namespace kuratowski {

/// Index of an element within a fixed MagmaTable.
using ElementId = std::uint32_t;

/// Largest table order supported by the engine.
inline constexpr std::size_t kMaxOrder = 20;

/// A subset of the elements 0..n-1 of a magma, stored as a bit mask.
class ElementSet {
 public:
  using mask_type = std::uint32_t;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(mask_type bits) : bits_(bits) {}
  ElementSet(std::initializer_list<ElementId> ids) {
    for (auto id : ids) insert(id);
  }

  static ElementSet from_ids(const std::vector<ElementId>& ids) {
    ElementSet s;
    for (auto id : ids) {
      if (id >= kMaxOrder) throw CapacityError("element id " + std::to_string(id) + " out of range");
      s.insert(id);
    }
    return s;
  }
  /// {0, 1, ..., n-1}
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 32 ? ~mask_type{0} : ((mask_type{1} << n) - 1));
  }
  static constexpr ElementSet single(ElementId id) {
    return ElementSet(mask_type{1} << id);
  }

  constexpr mask_type bits() const { return bits_; }
  constexpr bool contains(ElementId id) const { return (bits_ >> id) & 1u; }
  constexpr void insert(ElementId id) { bits_ |= mask_type{1} << id; }
  constexpr void erase(ElementId id) { bits_ &= ~(mask_type{1} << id); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return std::popcount(bits_); }
  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Least member; undefined on the empty set.
  constexpr ElementId front() const { return std::countr_zero(bits_); }

  std::vector<ElementId> ids() const {
    std::vector<ElementId> out;
    out.reserve(size());
    for (mask_type b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  /// Calls f(id) for each member in ascending order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (mask_type b = bits_; b != 0; b &= b - 1) {
      f(static_cast<ElementId>(std::countr_zero(b)));
    }
  }

  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(bits_ | o.bits_);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(bits_ & o.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;

 private:
  mask_type bits_ = 0;
};

/// Orders by size first, then by bit pattern.
constexpr bool size_then_bits_less(ElementSet a, ElementSet b) {
  auto sa = a.size(), sb = b.size();
  return sa != sb ? sa < sb : a.bits() < b.bits();
}

/// "<2,3,8>" style rendering of a sorted id list.
inline std::string angle_name(const std::vector<ElementId>& ids) {
  std::string out = "<";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out + '>';
}

inline std::string angle_name(ElementSet s) { return angle_name(s.ids()); }

}  // namespace kuratowski
