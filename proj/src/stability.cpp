#include "wfm/stability.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wfm {

namespace {

void require_support(const BasePtr& base, const BaseClass& C) {
  if (C.is_zero()) throw std::invalid_argument("support class C must be nonzero");
  if (!base->is_effective(C)) throw std::invalid_argument("support class C must be effective");
}

// omega^2.ch_1 / 2 through the ring.
Rational half_volume(const BasePtr& base, const BaseClass& C, const KahlerParams& omega) {
  const DivisorX w = DivisorX::kahler(base, omega.t, omega.s);
  return triple(w, w, DivisorX::pullback_of(base, C)) / 2;
}

CurveX ch2_curve(const BasePtr& base, const Dim2Chern& gamma) {
  return CurveX::section_push(base, gamma.alpha) + gamma.k() * CurveX::fiber_class(base);
}

}  // namespace

void require_valid(const KahlerParams& omega) {
  if (!omega.is_valid())
    throw std::invalid_argument("invalid polarization: need s > t > 0, got t=" + to_string(omega.t) +
                                " s=" + to_string(omega.s));
}

bool satisfies_parity(const BaseSurface& base, const Dim2Chern& gamma) {
  return ((gamma.k2 - base.canonical_degree(gamma.C)) % 2) == 0;
}

Rational slope_dim2_ring(const BasePtr& base, const Dim2Chern& gamma, const KahlerParams& omega) {
  const DivisorX w = DivisorX::kahler(base, omega.t, omega.s);
  return pair(w, ch2_curve(base, gamma)) / half_volume(base, gamma.C, omega);
}

Rational slope_dim2_closed_form(const BasePtr& base, const Dim2Chern& gamma, const KahlerParams& omega) {
  const Rational& t = omega.t;
  const Rational& s = omega.s;
  const Rational k_alpha = base->canonical_degree(gamma.alpha);
  const Rational abs_kc = abs(Rational{base->canonical_degree(gamma.C)});
  return ((t - s) * k_alpha + t * gamma.k()) / (t * (2 * s - t) * abs_kc / 2);
}

Rational slope_dim2(const BasePtr& base, const Dim2Chern& gamma, const KahlerParams& omega) {
  require_support(base, gamma.C);
  require_valid(omega);
  Rational ring = slope_dim2_ring(base, gamma, omega);
  if (ring != slope_dim2_closed_form(base, gamma, omega))
    throw std::logic_error("slope mismatch between ring and closed form");
  return ring;
}

Rational nu_dim2(const BasePtr& base, const Dim2Chern& gamma, const Rational& chi,
                 const KahlerParams& omega) {
  require_support(base, gamma.C);
  require_valid(omega);
  return chi / half_volume(base, gamma.C, omega);
}

Rational chi_dim2(const BasePtr& base, const Dim2Chern& gamma) {
  // c_1(B) = -K_B
  return Rational{-gamma.n - base->canonical_degree(gamma.C)};
}

Rational slope_dim1(const BasePtr& base, const Dim1Chern& gamma, const KahlerParams& omega) {
  const DivisorX w = DivisorX::kahler(base, omega.t, omega.s);
  const CurveX ch2 = CurveX::section_push(base, gamma.C) + Rational{gamma.m} * CurveX::fiber_class(base);
  const Rational degree = pair(w, ch2);
  if (degree == 0) throw std::invalid_argument("slope_dim1: omega.ch_2 vanishes");
  return Rational{gamma.chi} / degree;
}

std::int64_t restriction_chi(const BasePtr& base, const Dim2Chern& gamma, const BaseClass& H) {
  return base->pair(H, gamma.alpha);
}

SectionRestriction section_restriction(const BasePtr& base, const Dim2Chern& gamma) {
  require_support(base, gamma.C);
  const Rational ch2 = gamma.k() + base->canonical_degree(gamma.alpha);
  const Rational chi = ch2 + make_rational(std::abs(base->canonical_degree(gamma.C)), 2);
  return SectionRestriction{gamma.C, ch2, chi};
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::below: return "below";
    case Ordering::equal_below: return "equal_below";
    case Ordering::equal_equal: return "equal_equal";
    case Ordering::above: return "above";
  }
  return "?";
}

Ordering check_destabilizer(const BasePtr& base, const Dim2Chern& sub, const Rational& chi_sub,
                            const Dim2Chern& whole, const Rational& chi_whole,
                            const KahlerParams& omega) {
  const Rational mu_sub = slope_dim2(base, sub, omega);
  const Rational mu_whole = slope_dim2(base, whole, omega);
  if (mu_sub < mu_whole) return Ordering::below;
  if (mu_sub > mu_whole) return Ordering::above;
  const Rational nu_sub = nu_dim2(base, sub, chi_sub, omega);
  const Rational nu_whole = nu_dim2(base, whole, chi_whole, omega);
  if (nu_sub < nu_whole) return Ordering::equal_below;
  if (nu_sub == nu_whole) return Ordering::equal_equal;
  return Ordering::above;
}

// ---------------------------------------------------------------------------

SContext::SContext(BasePtr b, BaseClass c, std::int64_t k2_, std::int64_t n_)
    : base(std::move(b)), C(std::move(c)), k2(k2_), n(n_) {
  require_support(base, C);
  const std::int64_t kc = base->canonical_degree(C);
  if ((k2 - kc) % 2 != 0)
    throw std::invalid_argument("parity violated: k must be congruent to K_B.C/2 mod Z");
  chi_ = (k2 - kc) / 2;
  abs_kc_ = std::abs(kc);
  if (chi_ < 1) throw std::invalid_argument("chi = k - K_B.C/2 must be >= 1, got " + std::to_string(chi_));
  if (n < 0) throw std::invalid_argument("n must be >= 0");
}

std::int64_t SContext::abs_k(const BaseClass& c) const { return std::abs(base->canonical_degree(c)); }

std::int64_t SContext::d1(const SElement& e) const { return abs_kc_ * e.l - abs_k(e.c_prime) * chi_; }

std::int64_t SContext::d2(const SElement& e) const { return n * e.l - e.m * chi_; }

std::vector<SElement> enumerate_S(const SContext& ctx) {
  std::vector<SElement> out;
  for (const auto& cp : ctx.base->enumerate_subeffective(ctx.C)) {
    // l >= 0 with |K.C| l <= |K.C'| chi
    const std::int64_t l_max = ctx.abs_k(cp) * ctx.chi() / ctx.abs_kc();
    for (std::int64_t l = 0; l <= l_max; ++l)
      for (std::int64_t m = 0; m <= ctx.n; ++m) out.push_back(SElement{cp, l, m});
  }
  return out;
}

bool in_Sprime(const SContext& ctx, const SElement& e) {
  if (e.l < 0 || e.m < 0 || e.m > ctx.n) return false;
  if (!ctx.base->is_effective(e.c_prime) || !ctx.base->is_effective(ctx.C - e.c_prime)) return false;
  return ctx.d1(e) <= -1;
}

std::vector<SElement> enumerate_Sprime(const SContext& ctx) {
  auto all = enumerate_S(ctx);
  std::vector<SElement> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [&](const SElement& e) { return ctx.d1(e) <= -1; });
  return out;
}

Rational f_s_value(const SContext& ctx, const Rational& s, const SElement& e) {
  if (!in_Sprime(ctx, e)) throw std::invalid_argument("f_s is only defined on S'");
  return (s - 1) * ctx.d1(e) + ctx.d2(e);
}

Rational compute_s1(const SContext& ctx) {
  // f_s < 0  <=>  s > 1 + d2 / |d1|  since d1 <= -1 on S'.
  Rational s1 = 1;
  for (const auto& e : enumerate_Sprime(ctx)) {
    Rational candidate = 1 + Rational{ctx.d2(e)} / Rational{-ctx.d1(e)};
    if (candidate > s1) s1 = candidate;
  }
  return s1;
}

// ---------------------------------------------------------------------------

Rational delta_discriminant(const K3Invariants& v) {
  if (v.r < 1) throw std::invalid_argument("discriminant needs r >= 1");
  return Rational{v.n} - make_rational(v.m * (v.m - v.l), v.r);
}

bool bogomolov_holds(const K3Invariants& v) { return delta_discriminant(v) >= 0; }

Rational bogomolov_Delta(std::int64_t r, const Rational& ch1_sq, std::int64_t n) {
  if (r < 1) throw std::invalid_argument("Bogomolov discriminant needs r >= 1");
  return Rational{n} + ch1_sq / (2 * Rational{r});
}

Rational wall_bound_ts(std::int64_t r, const Rational& delta) {
  if (r < 1) throw std::invalid_argument("wall bound needs r >= 1");
  if (delta < 0) throw std::invalid_argument("wall bound needs delta >= 0");
  const Rational r3 = Rational{r} * r * r;
  return Rational{2} / (1 + r3 * delta);
}

Rational delta_deficit(const K3Invariants& sub, const K3Invariants& quotient) {
  const std::int64_t r1 = sub.r, r2 = quotient.r;
  if (r1 < 1 || r2 < 1) throw std::invalid_argument("delta_deficit needs r1, r2 >= 1");
  const Rational a = r1 * quotient.m - r2 * sub.m;
  const Rational b = r1 * quotient.l - r2 * sub.l;
  return a * (a - b) / (Rational{r1} * r2 * (r1 + r2));
}

Rational delta_deficit_from_alpha(std::int64_t r1, std::int64_t r2, const Rational& a, const Rational& b) {
  if (r1 < 1 || r2 < 1) throw std::invalid_argument("delta_deficit needs r1, r2 >= 1");
  const Rational alpha_sq = -2 * a * a + 2 * a * b;
  return -alpha_sq / (2 * Rational{r1} * r2 * (r1 + r2));
}

Rational slope_equality_b(const Rational& a, const KahlerParams& omega) {
  return 2 * a * (1 - omega.s / omega.t);
}

std::vector<GammaElement> enumerate_Gamma(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 1) return {};
  std::vector<GammaElement> out;
  for (std::int64_t j = 1; j <= r; ++j) {
    std::vector<GammaElement> level;
    GammaElement current;
    // Depth-first over parts; remaining totals must stay feasible.
    auto recurse = [&](auto&& self, std::int64_t parts_left, std::int64_t n_left, std::int64_t r_left) -> void {
      if (parts_left == 0) {
        if (n_left == 0 && r_left == 0) level.push_back(current);
        return;
      }
      const std::int64_t r_hi = r_left - (parts_left - 1);
      for (std::int64_t ni = parts_left == 1 ? n_left : 0; ni <= n_left; ++ni)
        for (std::int64_t ri = parts_left == 1 ? r_left : 1; ri <= r_hi; ++ri) {
          current.emplace_back(ni, ri);
          self(self, parts_left - 1, n_left - ni, r_left - ri);
          current.pop_back();
        }
    };
    recurse(recurse, j, n, r);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Rational t2_closed_form(std::int64_t r, std::int64_t n, const Rational& s) {
  const Rational r3 = Rational{r} * r * r;
  return 2 * s / (1 + r3 * n);
}

Rational compute_t2(std::int64_t r, std::int64_t n, const Rational& s) {
  if (r < 1 || n < 0) throw std::invalid_argument("t2 needs r >= 1 and n >= 0");
  if (s <= 0) throw std::invalid_argument("t2 needs s > 0");
  std::optional<Rational> least;
  for (const auto& element : enumerate_Gamma(n, r))
    for (const auto& [ni, ri] : element) {
      Rational bound = wall_bound_ts(ri, Rational{ni});
      if (!least || bound < *least) least = bound;
    }
  const Rational t2 = s * *least;
  if (t2 != t2_closed_form(r, n, s)) throw std::logic_error("t2 enumeration disagrees with closed form");
  return t2;
}

Rational eta_value(const K3Invariants& sub, const K3Invariants& whole, const Rational& s,
                   const Rational& t) {
  if (sub.r < 1 || whole.r < 1) throw std::invalid_argument("eta needs r, r' >= 1");
  const Rational intercept = make_rational(2 * sub.m, sub.r) * s;
  const Rational coefficient = make_rational(2 * sub.m - sub.l, sub.r) + make_rational(whole.l, whole.r);
  return intercept - coefficient * t;
}

WallRoot eta_wall(const K3Invariants& sub, const K3Invariants& whole, const Rational& s) {
  const Rational intercept = eta_value(sub, whole, s, 0);
  const Rational coefficient = intercept - eta_value(sub, whole, s, 1);
  if (coefficient == 0) {
    if (intercept == 0) return WallRoot{WallRoot::Kind::identically_zero, 0};
    return WallRoot{WallRoot::Kind::none, 0};
  }
  return WallRoot{WallRoot::Kind::root, intercept / coefficient};
}

bool jh_constraints(const K3Invariants& whole, const std::vector<K3Invariants>& parts) {
  if (parts.empty()) return false;
  std::int64_t r = 0, n = 0, l = 0;
  for (const auto& p : parts) {
    if (p.r < 1 || p.m != 0 || p.l * whole.r != whole.l * p.r) return false;
    r += p.r;
    n += p.n;
    l += p.l;
  }
  return r == whole.r && n == whole.n && l == whole.l;
}

Dim2Chern to_dim2(const BasePtr& base, const K3Invariants& v) {
  const BaseClass xi = pencil_fiber_class(base);
  return Dim2Chern{v.r * xi, v.m * xi, 2 * v.l, v.n};
}

}  // namespace wfm
