#include "wfm/dt_invariants.hpp"

#include <numeric>
#include <stdexcept>

namespace wfm {

namespace {

Charge divide(const Charge& c, std::int64_t m) { return {c[0] / m, c[1] / m, c[2] / m}; }

std::string charge_string(const Charge& c) {
  return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
}

template <typename Weight>
Rational divisor_sum(const InvariantTable& table, const Charge& c, Weight weight) {
  const std::int64_t g = charge_gcd(c);
  if (g == 0) throw std::invalid_argument("multicover sum undefined for the zero charge");
  Rational total = 0;
  for (std::int64_t m = 1; m <= g; ++m) {
    if (g % m != 0) continue;
    const Rational w = weight(m);
    if (w == 0) continue;
    const Charge sub = divide(c, m);
    auto it = table.entries.find(sub);
    if (it == table.entries.end())
      throw std::out_of_range("missing table entry at " + charge_string(sub));
    total += w * it->second / (m * m);
  }
  return total;
}

}  // namespace

const char* to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::DT: return "DT";
    case InvariantKind::Omega: return "Omega";
    case InvariantKind::GV: return "GV";
  }
  return "?";
}

InvariantKind parse_invariant_kind(std::string_view name) {
  if (name == "DT") return InvariantKind::DT;
  if (name == "Omega") return InvariantKind::Omega;
  if (name == "GV") return InvariantKind::GV;
  throw std::invalid_argument("unknown invariant kind '" + std::string{name} + "'");
}

const char* to_string(Space space) { return space == Space::Xhat ? "Xhat" : "X"; }

const Rational& InvariantTable::at(const Charge& c) const {
  auto it = entries.find(c);
  if (it == entries.end()) throw std::out_of_range("missing table entry at " + charge_string(c));
  return it->second;
}

std::int64_t charge_gcd(const Charge& c) {
  return std::gcd(std::gcd(std::abs(c[0]), std::abs(c[1])), std::abs(c[2]));
}

std::int64_t moebius(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("moebius needs m >= 1");
  std::int64_t result = 1;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    result = -result;
  }
  if (m > 1) result = -result;
  return result;
}

Rational dt_from_omega(const InvariantTable& omega, const Charge& c) {
  if (omega.kind != InvariantKind::Omega) throw std::invalid_argument("dt_from_omega expects an Omega table");
  return divisor_sum(omega, c, [](std::int64_t) { return Rational{1}; });
}

Rational omega_from_dt(const InvariantTable& dt, const Charge& c) {
  if (dt.kind != InvariantKind::DT) throw std::invalid_argument("omega_from_dt expects a DT table");
  return divisor_sum(dt, c, [](std::int64_t m) { return Rational{moebius(m)}; });
}

InvariantTable dt_table_from_omega(const InvariantTable& omega) {
  InvariantTable out{InvariantKind::DT, omega.space, {}, omega.notes};
  for (const auto& [c, _] : omega.entries) out.entries.emplace(c, dt_from_omega(omega, c));
  return out;
}

InvariantTable omega_table_from_dt(const InvariantTable& dt) {
  InvariantTable out{InvariantKind::Omega, dt.space, {}, dt.notes};
  for (const auto& [c, _] : dt.entries) out.entries.emplace(c, omega_from_dt(dt, c));
  return out;
}

InvariantTable gv_from_z(const ZSeries& z) {
  InvariantTable out{InvariantKind::GV, Space::Xhat, {}, z.notes};
  out.notes.push_back("n counted from the lowest nonzero coefficient; grading shift " + to_string(z.grading_shift));
  const QSeries& s = z.series;
  for (std::size_t i = 0; i < s.precision(); ++i) {
    if (!is_integer(s[i]))
      throw std::domain_error("non-integral GV coefficient " + to_string(s[i]) + " at slot " + std::to_string(i));
    out.entries.emplace(Charge{z.r, static_cast<std::int64_t>(i), 1}, s[i]);
  }
  return out;
}

InvariantTable fm_relabel(const InvariantTable& table) {
  InvariantTable out{table.kind, table.space == Space::Xhat ? Space::X : Space::Xhat, {}, table.notes};
  out.notes.push_back(table.space == Space::Xhat
                          ? "relabeled (r,n,k) on Xhat -> (r,k-r,n) on X -> tensor shift -> (r,k,n)"
                          : "relabeled (r,k,n) on X -> (r,n,k) on Xhat");
  for (const auto& [c, v] : table.entries) out.entries.emplace(Charge{c[0], c[2], c[1]}, v);
  return out;
}

bool is_k_translation_invariant(const InvariantTable& table) {
  for (const auto& [c, v] : table.entries) {
    auto it = table.entries.find(Charge{c[0], c[1], c[2] + 1});
    if (it != table.entries.end() && it->second != v) return false;
  }
  return true;
}

bool is_k_independent(const InvariantTable& table) {
  std::map<std::pair<std::int64_t, std::int64_t>, Rational> seen;
  for (const auto& [c, v] : table.entries) {
    auto [it, inserted] = seen.emplace(std::make_pair(c[0], c[1]), v);
    if (!inserted && it->second != v) return false;
  }
  return true;
}

}  // namespace wfm
