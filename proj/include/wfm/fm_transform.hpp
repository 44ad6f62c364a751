#pragma once

// Fourier-Mukai transform between X and its dual X^ on numerical
// invariants.
//
// Two levels are exposed. The complex level acts linearly on Chern
// character vectors, and Phi^ o Phi = -Id there. The sheaf level tracks
// the WIT sheaves: a vertical two-dimensional E is WIT_1 for Phi^, so its
// sheaf transform Phi^1(E) carries the negated complex-level class.
//
// ch_3 is stored as the coefficient of ch_3(O_x), so ch_3(E) = -n gives ch3 = -n.

#include <string>
#include <vector>

#include "wfm/base_geometry.hpp"
#include "wfm/rational.hpp"
#include "wfm/stability.hpp"
#include "wfm/weierstrass_lattice.hpp"

namespace wfm {

struct ChernVector {
  Rational ch0;
  DivisorX ch1;
  CurveX ch2;
  Rational ch3;

  static ChernVector zero(const BasePtr& base);
  ChernVector operator-() const;
  bool operator==(const ChernVector& o) const;
};

/// (0, p^*C, (chi + K_B.C/2) f, -m) for ch_2 = sigma^_*C + m f^, ch_3 = chi.
ChernVector fm_to_X(const ChernVector& on_dual);

/// (0, 0, -sigma^_*C - n f^, -k + K_B.C/2) for ch_1 = p^*C, ch_2 = k f, ch_3 = -n.
/// Throws std::invalid_argument unless the input is vertical of dimension two.
ChernVector fm_to_Xhat(const ChernVector& on_X);

ChernVector chern_vector(const BasePtr& base, const Dim1Chern& gamma_hat);
ChernVector chern_vector(const BasePtr& base, const Dim2Chern& gamma);

/// phi(g1, g2, g3) = (g1, g3 + K_B.g1/2, g2) with k stored doubled.
Dim2Chern phi_map(const BasePtr& base, const Dim1Chern& gamma_hat);
Dim1Chern phi_inverse(const BasePtr& base, const Dim2Chern& gamma);

struct Dim1ToDim2 {
  ChernVector complex_level;
  Dim2Chern sheaf_level;
};

struct Dim2ToDim1 {
  ChernVector complex_level;
  Dim1Chern sheaf_level;
  /// ch_2 of the transform is effective only when n >= 0 (and C effective).
  bool effective = false;
};

Dim1ToDim2 fm_dim1_to_dim2(const BasePtr& base, const Dim1Chern& gamma_hat);
Dim2ToDim1 fm_dim2_to_dim1(const BasePtr& base, const Dim2Chern& gamma);

/// Complex level composes to -Id, sheaf level to Id.
bool roundtrip_check(const BasePtr& base, const Dim1Chern& gamma_hat);
bool roundtrip_check(const BasePtr& base, const Dim2Chern& gamma);

/// Vertical invariants (r Xi, k2 = 2(k - r), n) for gamma^ = (r Xi, n, k) on F0 / F1.
Dim2Chern pencil_invariants(const BasePtr& base, std::int64_t r, std::int64_t n, std::int64_t k);

/// Tensor by p^*O_B(-C0). On K3 data: l -> l - r and n -> n + m,
/// from ch(E (x) L) = ch(E) ch(L) with D.D0 = f, Xi.D0 = 1.
K3Invariants tensor_shift(const K3Invariants& v);
K3Invariants tensor_unshift(const K3Invariants& v);

/// Same on a Dim2Chern supported on K3 fibers (C = r Xi, alpha = m Xi).
Dim2Chern tensor_shift(const BasePtr& base, const Dim2Chern& gamma);

/// The shift computed directly from the Chern character product in the ring.
ChernVector tensor_by_pullback(const ChernVector& v, const BaseClass& eta);

}  // namespace wfm
