#include "wfm/fm_transform.hpp"

#include <stdexcept>

namespace wfm {

namespace {

Rational half_kc(const BasePtr& base, const RationalBaseClass& c) {
  return base->pair(to_rational_vector(base->canonical().coords), c) / 2;
}

BaseClass integral_class(const RationalBaseClass& c) {
  BaseClass out;
  for (const auto& x : c) out.coords.push_back(to_int64(x));
  return out;
}

}  // namespace

ChernVector ChernVector::zero(const BasePtr& base) {
  return ChernVector{0, DivisorX::zero(base), CurveX::zero(base), 0};
}

ChernVector ChernVector::operator-() const {
  return ChernVector{-ch0, Rational{-1} * ch1, Rational{-1} * ch2, -ch3};
}

bool ChernVector::operator==(const ChernVector& o) const {
  return ch0 == o.ch0 && ch1 == o.ch1 && ch2 == o.ch2 && ch3 == o.ch3;
}

ChernVector fm_to_X(const ChernVector& on_dual) {
  const BasePtr& base = on_dual.ch2.base;
  if (on_dual.ch0 != 0 || !(on_dual.ch1 == DivisorX::zero(base)))
    throw std::invalid_argument("fm_to_X expects a class of dimension at most one on X^");
  const RationalBaseClass& C = on_dual.ch2.section;
  const Rational& m = on_dual.ch2.fiber;
  const Rational& l = on_dual.ch3;
  return ChernVector{0, DivisorX::pullback_of(base, C), (l + half_kc(base, C)) * CurveX::fiber_class(base),
                     -m};
}

ChernVector fm_to_Xhat(const ChernVector& on_X) {
  const BasePtr& base = on_X.ch2.base;
  if (on_X.ch0 != 0 || on_X.ch1.theta != 0)
    throw std::invalid_argument("fm_to_Xhat expects ch_0 = 0 and ch_1 in p^*Pic(B)");
  for (const auto& x : on_X.ch2.section)
    if (x != 0) throw std::invalid_argument("fm_to_Xhat expects a vertical class (ch_2 a multiple of f)");
  const RationalBaseClass& C = on_X.ch1.pullback;
  const Rational& k = on_X.ch2.fiber;
  const Rational n = -on_X.ch3;
  CurveX ch2 = Rational{-1} * CurveX::section_push(base, C) - n * CurveX::fiber_class(base);
  return ChernVector{0, DivisorX::zero(base), std::move(ch2), -k + half_kc(base, C)};
}

ChernVector chern_vector(const BasePtr& base, const Dim1Chern& gamma_hat) {
  return ChernVector{0, DivisorX::zero(base),
                     CurveX::section_push(base, gamma_hat.C) + Rational{gamma_hat.m} * CurveX::fiber_class(base),
                     gamma_hat.chi};
}

ChernVector chern_vector(const BasePtr& base, const Dim2Chern& gamma) {
  return ChernVector{0, DivisorX::pullback_of(base, gamma.C),
                     CurveX::section_push(base, gamma.alpha) + gamma.k() * CurveX::fiber_class(base),
                     -gamma.n};
}

Dim2Chern phi_map(const BasePtr& base, const Dim1Chern& gamma_hat) {
  return Dim2Chern{gamma_hat.C, base->zero(), 2 * gamma_hat.chi + base->canonical_degree(gamma_hat.C),
                   gamma_hat.m};
}

Dim1Chern phi_inverse(const BasePtr& base, const Dim2Chern& gamma) {
  if (!gamma.vertical()) throw std::invalid_argument("phi is only defined on vertical invariants");
  if (!satisfies_parity(*base, gamma)) throw std::invalid_argument("k must be congruent to K_B.C/2 mod Z");
  return Dim1Chern{gamma.C, gamma.n, (gamma.k2 - base->canonical_degree(gamma.C)) / 2};
}

Dim1ToDim2 fm_dim1_to_dim2(const BasePtr& base, const Dim1Chern& gamma_hat) {
  ChernVector image = fm_to_X(chern_vector(base, gamma_hat));
  // Phi^0 of a WIT_0 sheaf: sheaf level equals complex level.
  Dim2Chern sheaf{gamma_hat.C, base->zero(), to_int64(2 * image.ch2.fiber), to_int64(-image.ch3)};
  return Dim1ToDim2{std::move(image), std::move(sheaf)};
}

Dim2ToDim1 fm_dim2_to_dim1(const BasePtr& base, const Dim2Chern& gamma) {
  if (!gamma.vertical()) throw std::invalid_argument("fm_dim2_to_dim1 needs vertical invariants (alpha = 0)");
  ChernVector image = fm_to_Xhat(chern_vector(base, gamma));
  // WIT_1: the sheaf Phi^1(E) carries the negated class.
  const ChernVector sheaf_class = -image;
  Dim1Chern sheaf{integral_class(sheaf_class.ch2.section), to_int64(sheaf_class.ch2.fiber),
                  to_int64(sheaf_class.ch3)};
  const bool effective = sheaf.m >= 0 && base->is_effective(sheaf.C);
  return Dim2ToDim1{std::move(image), std::move(sheaf), effective};
}

bool roundtrip_check(const BasePtr& base, const Dim1Chern& gamma_hat) {
  const ChernVector v = chern_vector(base, gamma_hat);
  if (!(fm_to_Xhat(fm_to_X(v)) == -v)) return false;
  const Dim2Chern there = fm_dim1_to_dim2(base, gamma_hat).sheaf_level;
  return fm_dim2_to_dim1(base, there).sheaf_level == gamma_hat;
}

bool roundtrip_check(const BasePtr& base, const Dim2Chern& gamma) {
  const ChernVector v = chern_vector(base, gamma);
  if (!(fm_to_X(fm_to_Xhat(v)) == -v)) return false;
  const Dim1Chern there = fm_dim2_to_dim1(base, gamma).sheaf_level;
  return fm_dim1_to_dim2(base, there).sheaf_level == gamma;
}

Dim2Chern pencil_invariants(const BasePtr& base, std::int64_t r, std::int64_t n, std::int64_t k) {
  if (r < 1 || k < 1 || n < 0) throw std::invalid_argument("pencil invariants need r, k >= 1 and n >= 0");
  const BaseClass xi = pencil_fiber_class(base);
  Dim2Chern gamma{r * xi, base->zero(), 2 * (k - r), n};
  if (!(gamma == phi_map(base, Dim1Chern{r * xi, n, k})))
    throw std::logic_error("pencil invariants disagree with phi");
  return gamma;
}

K3Invariants tensor_shift(const K3Invariants& v) {
  if (v.r < 1) throw std::invalid_argument("tensor shift needs r >= 1");
  return K3Invariants{v.r, v.m, v.l - v.r, v.n + v.m};
}

K3Invariants tensor_unshift(const K3Invariants& v) {
  if (v.r < 1) throw std::invalid_argument("tensor shift needs r >= 1");
  return K3Invariants{v.r, v.m, v.l + v.r, v.n - v.m};
}

Dim2Chern tensor_shift(const BasePtr& base, const Dim2Chern& gamma) {
  const BaseClass xi = pencil_fiber_class(base);
  const std::int64_t r = gamma.C.coords[1];
  const std::int64_t m = gamma.alpha.coords[1];
  if (r < 1 || !(gamma.C == r * xi) || !(gamma.alpha == m * xi))
    throw std::invalid_argument("tensor shift needs support on K3 fibers: C = r Xi, r >= 1, alpha = m Xi");
  if (gamma.k2 % 2 != 0) throw std::invalid_argument("K3 fiber data need integral k");
  const K3Invariants shifted = tensor_shift(K3Invariants{r, m, gamma.k2 / 2, gamma.n});
  return to_dim2(base, shifted);
}

ChernVector tensor_by_pullback(const ChernVector& v, const BaseClass& eta) {
  const BasePtr& base = v.ch2.base;
  const DivisorX L = DivisorX::pullback_of(base, eta);
  const DivisorX ch1 = v.ch1 + v.ch0 * L;
  const CurveX ch2 = v.ch2 + multiply(v.ch1, L) + (v.ch0 / 2) * multiply(L, L);
  const Rational ch3 = v.ch3 + pair(L, v.ch2) + triple(v.ch1, L, L) / 2 + v.ch0 * triple(L, L, L) / 6;
  return ChernVector{v.ch0, ch1, ch2, ch3};
}

}  // namespace wfm
