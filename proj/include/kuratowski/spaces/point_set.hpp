#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kuratowski/error.hpp"

namespace kuratowski::spaces {

/// Largest supported number of points; operators are tabulated over 2^n sets.
inline constexpr std::size_t kMaxPoints = 16;

/// A subset of the points 0..n-1 of a finite space.
class PointSet {
 public:
  using mask_type = std::uint32_t;

  constexpr PointSet() = default;
  constexpr explicit PointSet(mask_type bits) : bits_(bits) {}

  static constexpr PointSet full(std::size_t n) { return PointSet((mask_type{1} << n) - 1); }
  static constexpr PointSet single(std::size_t p) { return PointSet(mask_type{1} << p); }
  static PointSet of(std::initializer_list<std::size_t> points) {
    PointSet s;
    for (auto p : points) s.insert(p);
    return s;
  }

  constexpr mask_type bits() const { return bits_; }
  constexpr bool contains(std::size_t p) const { return (bits_ >> p) & 1u; }
  constexpr void insert(std::size_t p) { bits_ |= mask_type{1} << p; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return std::popcount(bits_); }
  constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }
  /// Complement relative to the n-point space.
  constexpr PointSet complement(std::size_t n) const {
    return PointSet(~bits_ & full(n).bits_);
  }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet& operator|=(PointSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr auto operator<=>(const PointSet&) const = default;

  std::vector<std::size_t> points() const {
    std::vector<std::size_t> out;
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Little-endian bitstring: character p is '1' iff point p is a member.
  std::string to_bitstring(std::size_t n) const {
    std::string s(n, '0');
    for (std::size_t p = 0; p < n; ++p) {
      if (contains(p)) s[p] = '1';
    }
    return s;
  }

  static PointSet from_bitstring(std::string_view s) {
    if (s.size() > kMaxPoints) throw CapacityError("bitstring longer than 16 points");
    PointSet out;
    for (std::size_t p = 0; p < s.size(); ++p) {
      if (s[p] == '1') out.insert(p);
      else if (s[p] != '0') throw InputError("bitstring may only contain 0 and 1");
    }
    return out;
  }

 private:
  mask_type bits_ = 0;
};

}  // namespace kuratowski::spaces
