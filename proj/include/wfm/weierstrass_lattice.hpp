#pragma once

// Divisor and curve lattices of a Weierstrass threefold p: X -> B with
// section Theta, and the intersection products between them.
//
//   H_4(X) = Z<Theta> + p^* H_2(B),   H_2(X) = Z<f> + sigma_* H_2(B)
//
// Ring relations (torsion ignored):
//   Theta.Theta     = sigma_*(K_B)
//   Theta.p^*eta    = sigma_*(eta)
//   p^*eta.p^*eta'  = (eta.eta') f
//   Theta.f = 1,  Theta.sigma_*C = K_B.C,  p^*eta.f = 0,  p^*eta.sigma_*C = eta.C
//
// The dual fibration X^ is isomorphic to X, so the same types serve both.

#include <string>
#include <vector>

#include "wfm/base_geometry.hpp"
#include "wfm/rational.hpp"

namespace wfm {

struct DivisorX {
  BasePtr base;
  Rational theta;            // coefficient of Theta
  RationalBaseClass pullback;  // eta in p^* eta

  static DivisorX zero(BasePtr base);
  static DivisorX section(BasePtr base);
  static DivisorX pullback_of(BasePtr base, const BaseClass& eta);
  static DivisorX pullback_of(BasePtr base, RationalBaseClass eta);
  /// omega = t Theta - s p^* K_B.
  static DivisorX kahler(BasePtr base, const Rational& t, const Rational& s);

  bool is_integral() const;
  DivisorX operator+(const DivisorX& o) const;
  DivisorX operator-(const DivisorX& o) const;
  friend DivisorX operator*(const Rational& c, const DivisorX& d);
  bool operator==(const DivisorX& o) const;
};

struct CurveX {
  BasePtr base;
  Rational fiber;           // coefficient of f
  RationalBaseClass section;  // C in sigma_* C

  static CurveX zero(BasePtr base);
  static CurveX fiber_class(BasePtr base);
  static CurveX section_push(BasePtr base, const BaseClass& c);
  static CurveX section_push(BasePtr base, RationalBaseClass c);

  bool is_integral() const;
  CurveX operator+(const CurveX& o) const;
  CurveX operator-(const CurveX& o) const;
  friend CurveX operator*(const Rational& c, const CurveX& d);
  bool operator==(const CurveX& o) const;
};

/// Divisor times divisor as a curve class.
CurveX multiply(const DivisorX& a, const DivisorX& b);

Rational pair(const DivisorX& d, const CurveX& c);

/// Fully symmetric triple intersection number.
Rational triple(const DivisorX& a, const DivisorX& b, const DivisorX& c);

struct IntersectionMatrixX {
  // rows: Theta, p^*C_1..p^*C_r; columns: f, sigma_*C_1..sigma_*C_r
  std::vector<std::vector<std::int64_t>> entries;
  std::int64_t determinant = 0;
};

IntersectionMatrixX intersection_matrix(const BasePtr& base);

/// t > 0 and eta + t K_B ample on B, for omega = t Theta + p^* eta.
bool is_ample(const DivisorX& omega);

/// Integral curve classes only: effective iff sigma-part effective on B and fiber >= 0.
bool is_effective(const CurveX& curve);

struct PencilRelation {
  std::string name;  // e.g. "D0.D = f"
  bool holds = false;
};

/// Checks the six K3-pencil relations (D = p^*Xi, D0 = p^*C0) on F0 or F1.
/// Throws std::invalid_argument for other bases.
std::vector<PencilRelation> k3_pencil_relations(const BasePtr& base);

/// Index of the fiber class Xi in the F0/F1 basis (C0, Xi).
BaseClass pencil_fiber_class(const BasePtr& base);
BaseClass pencil_section_class(const BasePtr& base);
bool is_pencil_base(const BaseSurface& base);

}  // namespace wfm
