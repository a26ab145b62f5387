#include "howe/weight.hpp"

#include <stdexcept>

namespace howe {

namespace {

void require_same_size(const Weight& a, const Weight& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("weight dimension mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
}

}  // namespace

Weight Weight::from_integers(std::span<const int> coords) {
  std::vector<Rational> out;
  out.reserve(coords.size());
  for (int c : coords) out.emplace_back(c);
  return Weight(std::move(out));
}

Weight Weight::parse(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start);
    out.push_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Weight(std::move(out));
}

Weight& Weight::operator+=(const Weight& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

std::optional<std::vector<int>> Weight::integral() const {
  std::vector<int> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    if (!c.is_integer() || !c.numerator().fits_sint_p()) return std::nullopt;
    out.push_back(static_cast<int>(c.numerator().get_si()));
  }
  return out;
}

std::string Weight::to_string(std::optional<std::size_t> block_split) const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += (block_split && *block_split == i) ? " | " : ", ";
    out += coords_[i].to_string();
  }
  return out;
}

Rational dot(const Weight& a, const Weight& b) {
  require_same_size(a, b);
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace howe
