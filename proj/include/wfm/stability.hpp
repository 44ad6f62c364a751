#pragma once

// Slope and Gieseker numerics for two-dimensional sheaves on X and
// one-dimensional sheaves on the dual fibration, the finite destabilizer
// sets used for the large-s threshold, and the K3-pencil wall bounds.
//
// Polarizations are omega = t Theta - s p^*K_B with s > t > 0.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wfm/base_geometry.hpp"
#include "wfm/rational.hpp"
#include "wfm/weierstrass_lattice.hpp"

namespace wfm {

struct KahlerParams {
  Rational t;
  Rational s;

  bool is_valid() const { return s > t && t > 0; }
  bool in_large_s_regime() const { return s > 1; }
};

void require_valid(const KahlerParams& omega);

/// ch_1 = p^*C, ch_2 = sigma_*(alpha) + (k2/2) f, ch_3 = -n ch_3(O_x).
/// The fiber coefficient is stored doubled so everything stays integral.
struct Dim2Chern {
  BaseClass C;
  BaseClass alpha;
  std::int64_t k2 = 0;
  std::int64_t n = 0;

  bool vertical() const { return alpha.is_zero(); }
  Rational k() const { return make_rational(k2, 2); }
  bool operator==(const Dim2Chern&) const = default;
};

/// Vertical invariants need k = K_B.C / 2 mod Z, i.e. k2 = K_B.C mod 2.
bool satisfies_parity(const BaseSurface& base, const Dim2Chern& gamma);

/// ch_2 = sigma^_*C + m f^, chi.
struct Dim1Chern {
  BaseClass C;
  std::int64_t m = 0;
  std::int64_t chi = 0;
  bool operator==(const Dim1Chern&) const = default;
};

/// ch_1 = r D, ch_2 = m Xi + l f, ch_3 = -n ch_3(O_x) over F0 / F1, D = p^*Xi.
struct K3Invariants {
  std::int64_t r = 1;
  std::int64_t m = 0;
  std::int64_t l = 0;
  std::int64_t n = 0;
  bool operator==(const K3Invariants&) const = default;
};

// ---------------------------------------------------------------------------
// Slopes

/// omega.ch_2 / (omega^2.ch_1 / 2) through the intersection ring.
Rational slope_dim2_ring(const BasePtr& base, const Dim2Chern& gamma, const KahlerParams& omega);

/// [(t - s) K_B.alpha + t k] / [t (2s - t) |K_B.C| / 2].
Rational slope_dim2_closed_form(const BasePtr& base, const Dim2Chern& gamma, const KahlerParams& omega);

/// Both routes, checked against each other. Throws std::invalid_argument
/// when C is zero or not effective, or omega is not a valid polarization.
Rational slope_dim2(const BasePtr& base, const Dim2Chern& gamma, const KahlerParams& omega);

/// chi / (omega^2.ch_1 / 2).
Rational nu_dim2(const BasePtr& base, const Dim2Chern& gamma, const Rational& chi,
                 const KahlerParams& omega);

/// Riemann-Roch on the Calabi-Yau with c_2(X).p^*C = 12 c_1(B).C:
/// chi = -n + c_1(B).C. Not part of the published numerics; the explicit
/// chi overloads should be preferred where chi is known.
Rational chi_dim2(const BasePtr& base, const Dim2Chern& gamma);

/// chi / (omega.ch_2) for a one-dimensional sheaf on X^.
Rational slope_dim1(const BasePtr& base, const Dim1Chern& gamma, const KahlerParams& omega);

/// chi(F|_Z) = Z.ch_2(F) = H.alpha for Z = p^{-1}(H).
std::int64_t restriction_chi(const BasePtr& base, const Dim2Chern& gamma, const BaseClass& H);

struct SectionRestriction {
  BaseClass ch1;
  Rational ch2;  // multiple of the point class on B
  Rational chi;
};

/// Numerical invariants of G_B = sigma^* G: (C, c + K_B.alpha, c + K_B.alpha + |K_B.C|/2).
SectionRestriction section_restriction(const BasePtr& base, const Dim2Chern& gamma);

enum class Ordering { below, equal_below, equal_equal, above };

const char* to_string(Ordering o);

/// Lexicographic comparison of (mu, nu) of sub against whole.
Ordering check_destabilizer(const BasePtr& base, const Dim2Chern& sub, const Rational& chi_sub,
                            const Dim2Chern& whole, const Rational& chi_whole,
                            const KahlerParams& omega);

// ---------------------------------------------------------------------------
// Destabilizer sets and the large-s threshold

struct SElement {
  BaseClass c_prime;
  std::int64_t l = 0;
  std::int64_t m = 0;
  bool operator==(const SElement&) const = default;
  auto operator<=>(const SElement&) const = default;
};

/// Context (C, k, n) of a vertical sheaf; chi = k - K_B.C / 2.
struct SContext {
  BasePtr base;
  BaseClass C;
  std::int64_t k2 = 0;
  std::int64_t n = 0;

  /// Validates C effective nonzero, parity, chi >= 1, n >= 0.
  SContext(BasePtr base, BaseClass C, std::int64_t k2, std::int64_t n);

  std::int64_t chi() const { return chi_; }
  std::int64_t abs_kc() const { return abs_kc_; }
  std::int64_t abs_k(const BaseClass& c) const;

  /// |K_B.C| l - |K_B.C'| chi
  std::int64_t d1(const SElement& e) const;
  /// n l - m chi
  std::int64_t d2(const SElement& e) const;

 private:
  std::int64_t chi_ = 0;
  std::int64_t abs_kc_ = 0;
};

std::vector<SElement> enumerate_S(const SContext& ctx);
std::vector<SElement> enumerate_Sprime(const SContext& ctx);

bool in_Sprime(const SContext& ctx, const SElement& e);

/// f_s = (s - 1) d1 + d2. Throws if e is not in S'.
Rational f_s_value(const SContext& ctx, const Rational& s, const SElement& e);

/// Exact infimum s_1 >= 1 such that f_s < 0 on all of S' for every s > s_1.
Rational compute_s1(const SContext& ctx);

// ---------------------------------------------------------------------------
// K3 pencils: discriminants, wall bounds, t_2

/// delta = n - m (m - l) / r.
Rational delta_discriminant(const K3Invariants& v);

/// delta >= 0, the Bogomolov-type constraint for slope-semistable sheaves.
bool bogomolov_holds(const K3Invariants& v);

/// n + ch_1^2 / (2 r).
Rational bogomolov_Delta(std::int64_t r, const Rational& ch1_sq, std::int64_t n);

/// 2 / (1 + r^3 delta). Requires r >= 1 and delta >= 0.
Rational wall_bound_ts(std::int64_t r, const Rational& delta);

/// delta(E) - delta(E_1) - delta(E_2) for an extension with the given
/// sub/quotient invariants: a (a - b) / (r1 r2 (r1 + r2)),
/// a = r1 m2 - r2 m1, b = r1 l2 - r2 l1.
Rational delta_deficit(const K3Invariants& sub, const K3Invariants& quotient);

/// Same quantity as -alpha^2 / (2 r1 r2 (r1 + r2)) for alpha = a Xi + b f on a
/// smooth K3 fiber (Xi^2 = -2, Xi.f = 1, f^2 = 0).
Rational delta_deficit_from_alpha(std::int64_t r1, std::int64_t r2, const Rational& a, const Rational& b);

/// b forced by the slope equality alpha.omega|_S = 0: b = 2 a (1 - s/t).
Rational slope_equality_b(const Rational& a, const KahlerParams& omega);

/// Ordered tuples ((n_1, r_1), ..., (n_j, r_j)) with r_i >= 1, n_i >= 0,
/// summing to (n, r), 1 <= j <= r. Sorted by j, then lexicographically.
using GammaElement = std::vector<std::pair<std::int64_t, std::int64_t>>;
std::vector<GammaElement> enumerate_Gamma(std::int64_t n, std::int64_t r);

/// 2 s / (1 + r^3 n).
Rational t2_closed_form(std::int64_t r, std::int64_t n, const Rational& s);

/// s * min over all parts in Gamma(n, r) of 2 / (1 + r_i^3 n_i); cross-checked
/// against the closed form. Strict threshold: use 0 < t < t_2.
Rational compute_t2(std::int64_t r, std::int64_t n, const Rational& s);

struct WallRoot {
  enum class Kind { root, identically_zero, none };
  Kind kind = Kind::none;
  Rational t;  // valid for Kind::root
};

/// eta(t'') = (2m'/r') s - ((2m' - l')/r' + l/r) t''.
Rational eta_value(const K3Invariants& sub, const K3Invariants& whole, const Rational& s,
                   const Rational& t);
WallRoot eta_wall(const K3Invariants& sub, const K3Invariants& whole, const Rational& s);

/// Consequences of a Jordan-Holder filtration at irrational t/s: parts sum
/// to the whole and each part has m_i = 0, l_i / r_i = l / r.
bool jh_constraints(const K3Invariants& whole, const std::vector<K3Invariants>& parts);

/// Dim2Chern view of K3 invariants over a pencil base: C = r Xi, alpha = m Xi, k = l.
Dim2Chern to_dim2(const BasePtr& base, const K3Invariants& v);

}  // namespace wfm
