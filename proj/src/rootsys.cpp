#include "howe/rootsys.hpp"

#include <stdexcept>

namespace howe {

namespace {

std::vector<int> unit_combo(std::size_t rank, std::size_t i, int ci, std::size_t j, int cj) {
  std::vector<int> v(rank, 0);
  v[i] += ci;
  v[j] += cj;
  return v;
}

std::string basis_term(int coeff, std::size_t index, bool leading) {
  std::string out;
  if (coeff < 0) out += leading ? "-" : " - ";
  else if (!leading) out += " + ";
  const int mag = coeff < 0 ? -coeff : coeff;
  if (mag != 1) out += std::to_string(mag);
  out += "e" + std::to_string(index + 1);
  return out;
}

}  // namespace

int Root::norm2() const {
  int s = 0;
  for (int c : coords) s += c * c;
  return s;
}

std::string Root::label() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) out += basis_term(coords[i], i, out.empty());
  return out.empty() ? "0" : out;
}

RootSystem::RootSystem(RootKind kind, std::size_t rank, int first, int second,
                       std::vector<Root> roots)
    : kind_(kind), rank_(rank), first_block_(first), second_block_(second),
      roots_(std::move(roots)), rho_(Weight::zero(rank)) {
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i].coords, i);
  for (const auto& r : roots_)
    if (r.positive) rho_ += r.as_weight();
  for (std::size_t i = 0; i < rank_; ++i) rho_[i] /= Rational(2);
}

std::string RootSystem::name() const {
  if (kind_ == RootKind::GL)
    return "GL(" + std::to_string(first_block_) + "," + std::to_string(second_block_) + ")";
  return "SP(" + std::to_string(first_block_) + ")";
}

std::vector<Root> RootSystem::compact_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (r.compact) out.push_back(r);
  return out;
}

std::vector<Root> RootSystem::noncompact_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (!r.compact) out.push_back(r);
  return out;
}

std::vector<Root> RootSystem::positive_compact_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (r.positive && r.compact) out.push_back(r);
  return out;
}

std::vector<Root> RootSystem::positive_noncompact_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (r.positive && !r.compact) out.push_back(r);
  return out;
}

std::vector<Root> RootSystem::simple_roots() const {
  std::vector<Root> positive;
  for (const auto& r : roots_)
    if (r.positive) positive.push_back(r);
  std::vector<Root> out;
  for (const auto& r : positive) {
    bool decomposable = false;
    for (const auto& s : positive) {
      std::vector<int> diff(rank_);
      for (std::size_t i = 0; i < rank_; ++i) diff[i] = r.coords[i] - s.coords[i];
      const Root* t = find(diff);
      if (t != nullptr && t->positive) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(r);
  }
  return out;
}

const Root* RootSystem::find(std::span<const int> coords) const {
  if (coords.size() != rank_) return nullptr;
  const auto it = index_.find(std::vector<int>(coords.begin(), coords.end()));
  return it == index_.end() ? nullptr : &roots_[it->second];
}

RootSystem build_gl_root_system(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("GL(n,m) needs n, m >= 1 (got n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ")");
  const auto rank = static_cast<std::size_t>(n + m);
  const auto block = [n](std::size_t i) { return static_cast<int>(i) < n ? 0 : 1; };
  std::vector<Root> roots;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      if (i == j) continue;
      roots.push_back({unit_combo(rank, i, 1, j, -1), i < j, block(i) == block(j)});
    }
  return RootSystem(RootKind::GL, rank, n, m, std::move(roots));
}

RootSystem build_sp_root_system(int p) {
  if (p < 1) throw std::invalid_argument("SP(p) needs p >= 1 (got p=" + std::to_string(p) + ")");
  const auto rank = static_cast<std::size_t>(p);
  std::vector<Root> roots;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      if (i != j) roots.push_back({unit_combo(rank, i, 1, j, -1), i < j, true});
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      roots.push_back({unit_combo(rank, i, 1, j, 1), true, false});
      roots.push_back({unit_combo(rank, i, -1, j, -1), false, false});
    }
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<int> v(rank, 0);
    v[i] = 2;
    roots.push_back({v, true, false});
    v[i] = -2;
    roots.push_back({v, false, false});
  }
  return RootSystem(RootKind::SP, rank, p, 0, std::move(roots));
}

Rational pairing(const Weight& lambda, const Root& alpha) {
  if (lambda.size() != alpha.coords.size())
    throw std::invalid_argument("pairing: weight has length " + std::to_string(lambda.size()) +
                                ", root has length " + std::to_string(alpha.coords.size()));
  const int n2 = alpha.norm2();
  if (n2 == 0) throw std::invalid_argument("pairing with the zero vector");
  Rational ip;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (alpha.coords[i] != 0) ip += lambda[i] * Rational(alpha.coords[i]);
  return Rational(2) * ip / Rational(n2);
}

Weight reflect(const Root& alpha, const Weight& v) {
  const Rational c = pairing(v, alpha);
  Weight out = v;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (alpha.coords[i] != 0) out[i] -= c * Rational(alpha.coords[i]);
  return out;
}

Weight reflect(const Root& alpha, const Root& gamma) { return reflect(alpha, gamma.as_weight()); }

std::optional<RootClass> classify_root(const RootSystem& rs, std::span<const int> coords) {
  if (coords.size() != rs.rank())
    throw std::invalid_argument("classify_root: expected " + std::to_string(rs.rank()) +
                                " coordinates, got " + std::to_string(coords.size()));
  const Root* r = rs.find(coords);
  if (r == nullptr) return std::nullopt;
  return RootClass{r->positive, r->compact};
}

}  // namespace howe
