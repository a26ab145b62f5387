#include "howe/jantzen.hpp"

#include <stdexcept>

namespace howe {

std::string to_string(Status s) {
  switch (s) {
    case Status::Irreducible: return "Irreducible";
    case Status::Reducible: return "Reducible";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

Status status_from_string(const std::string& s) {
  if (s == "Irreducible") return Status::Irreducible;
  if (s == "Reducible") return Status::Reducible;
  if (s == "Unknown") return Status::Unknown;
  throw std::invalid_argument("unknown verdict status '" + s + "'");
}

namespace {

void require_rank(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.rank())
    throw std::invalid_argument("weight of length " + std::to_string(lambda.size()) + " given for " +
                                rs.name() + " of rank " + std::to_string(rs.rank()));
}

std::optional<Root> find_rescue(const RootSystem& rs, const Weight& shifted, const Root& alpha) {
  for (const auto& gamma : rs.roots()) {
    if (gamma.compact || pairing(shifted, gamma).sign() != 0) continue;
    const auto image = reflect(alpha, gamma).integral();
    if (!image) continue;
    const Root* r = rs.find(*image);
    if (r != nullptr && r->compact) return gamma;
  }
  return std::nullopt;
}

}  // namespace

Verdict check_irreducible(const RootSystem& rs, const Weight& lambda) {
  require_rank(rs, lambda);
  const Weight shifted = lambda + rs.rho();
  Verdict v;
  bool all_rescued = true;
  for (const auto& alpha : rs.roots()) {
    if (!alpha.positive || alpha.compact) continue;
    Rational value = pairing(shifted, alpha);
    if (!value.is_positive_integer()) continue;
    auto rescue = find_rescue(rs, shifted, alpha);
    all_rescued = all_rescued && rescue.has_value();
    v.witnesses.push_back({alpha, std::move(value), std::move(rescue)});
  }
  if (all_rescued) v.status = Status::Irreducible;
  else v.status = rs.kind() == RootKind::GL ? Status::Reducible : Status::Unknown;
  return v;
}

bool dominance_check(const RootSystem& rs, const Weight& lambda) {
  require_rank(rs, lambda);
  for (const auto& alpha : rs.roots())
    if (alpha.positive && alpha.compact && pairing(lambda, alpha).sign() < 0) return false;
  return true;
}

Rational max_noncompact_pairing(const RootSystem& rs, const Weight& lambda) {
  require_rank(rs, lambda);
  const Weight shifted = lambda + rs.rho();
  std::optional<Rational> best;
  for (const auto& alpha : rs.roots()) {
    if (!alpha.positive || alpha.compact) continue;
    Rational value = pairing(shifted, alpha);
    if (!best || value > *best) best = std::move(value);
  }
  return best.value_or(Rational(0));
}

}  // namespace howe
