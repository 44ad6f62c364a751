#pragma once

// Tables of DT, Omega and genus-zero GV invariants indexed by (r, n, k),
// the multicover formula relating DT and Omega, and the Fourier-Mukai
// relabeling between tables on X^ and X.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wfm/modular_forms.hpp"
#include "wfm/rational.hpp"

namespace wfm {

enum class InvariantKind { DT, Omega, GV };
enum class Space { Xhat, X };

const char* to_string(InvariantKind kind);
InvariantKind parse_invariant_kind(std::string_view name);
const char* to_string(Space space);

using Charge = std::array<std::int64_t, 3>;  // (r, n, k)

struct InvariantTable {
  InvariantKind kind = InvariantKind::Omega;
  Space space = Space::Xhat;
  std::map<Charge, Rational> entries;
  /// Free-form provenance, e.g. the Delta convention of a GV table.
  std::vector<std::string> notes;

  /// Throws std::out_of_range for a missing entry.
  const Rational& at(const Charge& c) const;
  bool contains(const Charge& c) const { return entries.count(c) != 0; }
  bool operator==(const InvariantTable& o) const {
    return kind == o.kind && space == o.space && entries == o.entries;
  }
};

/// gcd(|r|, |n|, |k|) with zero components ignored; zero for the zero charge.
std::int64_t charge_gcd(const Charge& c);

/// DT(g) = sum_{m | gcd(g)} Omega(g/m) / m^2.
Rational dt_from_omega(const InvariantTable& omega, const Charge& c);

/// Omega(g) = sum_{m | gcd(g)} mu(m) DT(g/m) / m^2.
Rational omega_from_dt(const InvariantTable& dt, const Charge& c);

/// Whole-table versions; every divisor charge must be present.
InvariantTable dt_table_from_omega(const InvariantTable& omega);
InvariantTable omega_table_from_dt(const InvariantTable& dt);

std::int64_t moebius(std::int64_t m);

/// GV table of kind GV on X^: n_0(r, n) stored at (r, n, 1), with n counted
/// from the lowest nonzero slot of the series. Throws std::domain_error on a
/// non-integral coefficient.
InvariantTable gv_from_z(const ZSeries& z);

/// Omega(X^; r, n, k) = Omega(X; r, k - r, n) = Omega(X; r, k, n):
/// swaps n and k and toggles the space tag. Self-inverse.
InvariantTable fm_relabel(const InvariantTable& table);

/// Entries at (r, n, k) and (r, n, k + 1) agree whenever both are present.
bool is_k_translation_invariant(const InvariantTable& table);

/// For fixed (r, n) all present k give the same value.
bool is_k_independent(const InvariantTable& table);

}  // namespace wfm
