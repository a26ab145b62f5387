#pragma once

#include "howe/rational.hpp"

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace howe {

// Coordinate vector in the standard e_i basis of a weight space.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<Rational>(rank)); }
  static Weight from_integers(std::span<const int> coords);
  // Comma-separated exact rationals, e.g. "-3/2, -7/2".
  static Weight parse(std::string_view text);

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;

  // Integer coordinates when every entry is integral.
  std::optional<std::vector<int>> integral() const;

  // "a, b, c"; a block split inserts " | " after that many entries.
  std::string to_string(std::optional<std::size_t> block_split = std::nullopt) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

private:
  std::vector<Rational> coords_;
};

Rational dot(const Weight& a, const Weight& b);

}  // namespace howe
