// Acceptance suite: one line per criterion, exact arithmetic, wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "wfm/dt_invariants.hpp"
#include "wfm/fm_transform.hpp"
#include "wfm/modular_forms.hpp"
#include "wfm/stability.hpp"
#include "wfm/weierstrass_lattice.hpp"

using namespace wfm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

// Contexts for the S-set criteria: nonzero effective C with |K.C| <= 6,
// 1 <= chi <= 4, 0 <= n <= 4, on F1 and P2.
template <typename F>
void for_each_context(F&& f) {
  for (const auto* name : {"F1", "P2"}) {
    const BasePtr b = make_base(name);
    for (std::int64_t x = 0; x <= 6; ++x)
      for (std::int64_t y = 0; y <= (b->rank() == 2 ? 6 : 0); ++y) {
        const BaseClass C = b->rank() == 2 ? BaseClass{{x, y}} : BaseClass{{x}};
        if (C.is_zero() || std::abs(b->canonical_degree(C)) > 6) continue;
        for (std::int64_t chi = 1; chi <= 4; ++chi)
          for (std::int64_t n = 0; n <= 4; ++n) f(b, SContext(b, C, 2 * chi + b->canonical_degree(C), n));
      }
  }
}

void check_lattice_unimodular(Outcome& o) {
  for (const auto& name : base_preset_names()) {
    const auto m = intersection_matrix(make_base(name));
    std::vector<std::vector<oracle::Z>> zm;
    for (const auto& row : m.entries) zm.emplace_back(row.begin(), row.end());
    const oracle::Z d = oracle::det(zm);
    if (abs(d) != 1 || d != m.determinant) o.fail(name + ": det = " + d.get_str());
  }
}

void check_slope_reproduction(Outcome& o) {
  gen::Gen g(1001);
  for (const auto& p : oracle::presets()) {
    const BasePtr b = make_base(p.name);
    for (int i = 0; i < 1000; ++i) {
      const Dim2Chern gamma{g.nonzero_effective(*b, 5), g.any(*b, 5), g.integer(-12, 12), g.integer(0, 6)};
      const KahlerParams w = g.kahler();
      const Rational ring = slope_dim2_ring(b, gamma, w);
      const Rational ka = oracle::dot(p.gram, p.K, gamma.alpha.coords);
      const Rational akc = std::abs(oracle::dot(p.gram, p.K, gamma.C.coords));
      if (ring != oracle::slope_contra(w.t, w.s, ka, gamma.k(), akc) ||
          ring != oracle::slope_adiabatic(w.t, w.s, ka, gamma.k(), akc) ||
          ring != slope_dim2_closed_form(b, gamma, w))
        o.fail(p.name + ": slope mismatch at sample " + std::to_string(i));
    }
  }
}

void check_fm_roundtrip(Outcome& o) {
  gen::Gen g(1002);
  for (const auto& name : base_preset_names()) {
    const BasePtr b = make_base(name);
    for (int i = 0; i < 500; ++i) {
      const Dim1Chern x{g.any(*b, 8), g.integer(-20, 20), g.integer(-20, 20)};
      const ChernVector v = chern_vector(b, x);
      if (!(fm_to_Xhat(fm_to_X(v)) == -v)) o.fail(name + ": complex level on Xhat is not -Id");
      const Dim2Chern y = fm_dim1_to_dim2(b, x).sheaf_level;
      if (!(fm_dim2_to_dim1(b, y).sheaf_level == x)) o.fail(name + ": sheaf level on Xhat is not Id");
      const ChernVector w = chern_vector(b, y);
      if (!(fm_to_X(fm_to_Xhat(w)) == -w)) o.fail(name + ": complex level on X is not -Id");
      if (!(fm_dim1_to_dim2(b, fm_dim2_to_dim1(b, y).sheaf_level).sheaf_level == y))
        o.fail(name + ": sheaf level on X is not Id");
    }
  }
}

void check_s_set_bounds(Outcome& o) {
  std::size_t contexts = 0;
  for_each_context([&](const BasePtr& b, const SContext& ctx) {
    ++contexts;
    const std::int64_t chi = ctx.chi(), n = ctx.n;
    const auto s = enumerate_S(ctx);
    std::set<oracle::SRow> rows;
    for (const auto& e : s) {
      rows.insert({e.c_prime.coords, e.l, e.m});
      if (e.l < 0 || e.l > chi || std::abs(n * e.l - e.m * chi) > n * chi)
        o.fail(b->name() + ": bound violated");
    }
    if (rows != oracle::s_scan(oracle::preset(b->name()), ctx.C.coords, ctx.k2, n))
      o.fail(b->name() + ": S differs from brute scan");
  });
  if (contexts == 0) o.fail("no contexts");
}

void check_s1_soundness(Outcome& o) {
  for_each_context([&](const BasePtr& b, const SContext& ctx) {
    const Rational s = compute_s1(ctx) + 1;
    for (const auto& e : enumerate_Sprime(ctx))
      if (f_s_value(ctx, s, e) >= 0) o.fail(b->name() + ": f_s >= 0 at s1 + 1");
  });
}

void check_t2_closed_form(Outcome& o) {
  for (std::int64_t r = 1; r <= 4; ++r)
    for (std::int64_t n = 0; n <= 6; ++n)
      for (const Rational& s : {Rational(2), Rational(3), make_rational(7, 2)}) {
        Rational least = 2;
        for (const auto& e : oracle::gamma_scan(n, r))
          for (const auto& [ni, ri] : e) {
            const Rational bound = make_rational(2, 1 + ri * ri * ri * ni);
            if (bound < least) least = bound;
          }
        const Rational closed = 2 * s / (1 + r * r * r * n);
        if (compute_t2(r, n, s) != closed || s * least != closed)
          o.fail("r=" + std::to_string(r) + " n=" + std::to_string(n));
      }
}

void check_series_oracles(Outcome& o) {
  const std::size_t order = 500;
  const QSeries e = eta24(order);
  const auto brute = oracle::euler_power_brute(order - 1, 24);
  for (std::size_t i = 0; i < brute.size(); ++i)
    if (e[i] != Rational(brute[i])) o.fail("eta^24 at q^" + std::to_string(i + 1));
  const QSeries inv = inverse_eta24(order);
  const auto brute_inv = oracle::euler_power_brute(order + 1, -24);
  for (std::size_t i = 0; i < brute_inv.size(); ++i)
    if (inv[i] != Rational(brute_inv[i])) o.fail("eta^-24 at slot " + std::to_string(i));
  if (!(eisenstein(10, 200) == eisenstein(4, 200) * eisenstein(6, 200))) o.fail("E10 != E4 E6");
  const auto sigma = divisor_sigma_table(9, 500);
  for (std::int64_t n = 1; n <= 500; ++n)
    if (sigma[n] != oracle::sigma_trial(9, n)) o.fail("sigma_9(" + std::to_string(n) + ")");
}

void check_sieve_partition(Outcome& o) {
  gen::Gen g(1008);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> c;
    const std::size_t len = static_cast<std::size_t>(g.integer(1, 60));
    for (std::size_t j = 0; j < len; ++j) c.push_back(g.rational(-100, 100, 9));
    const QSeries f{Rational(g.integer(-10, 10)), std::move(c)};
    for (std::int64_t r = 1; r <= 12; ++r) {
      QSeries total = sieve(f, r, 0);
      for (std::int64_t k = 1; k < r; ++k) total = total + sieve(f, r, k);
      if (!(total == f) || total.valid_until() != f.valid_until()) o.fail("partition fails, r=" + std::to_string(r));
    }
  }
}

void check_z_consistency(Outcome& o) {
  for (auto conv : {DeltaConvention::cusp, DeltaConvention::paper}) {
    // Delta itself, inverted here rather than taken from inverse_delta.
    const QSeries delta = conv == DeltaConvention::cusp ? eta24(102) : inverse_eta24(102);
    const QSeries direct = Rational(-2) * series_mul(series_inverse(delta), eisenstein(10, 102));
    for (std::int64_t k : {1, 2, 5}) {
      const ZSeries z = z_series(1, k, 100, conv);
      if (!z.series.agrees_with(direct.truncated_through(100)) || z.series.valid_until() != 101)
        o.fail(std::string{"r=1 mismatch, convention "} + to_string(conv));
    }
  }
  for (std::int64_t r = 1; r <= 3; ++r)
    for (auto conv : {DeltaConvention::cusp, DeltaConvention::paper})
      if (!z_series(r, 1, 60, conv).series.all_integral()) o.fail("non-integral Z, r=" + std::to_string(r));
}

void check_multicover_roundtrip(Outcome& o) {
  gen::Gen g(1010);
  for (int rep = 0; rep < 3; ++rep) {
    InvariantTable omega{InvariantKind::Omega, Space::Xhat, {}, {}};
    std::int64_t max_gcd = 0;
    for (std::int64_t r = 1; r <= 12; ++r)
      for (std::int64_t n = 0; n <= 12; ++n)
        for (std::int64_t k = 0; k <= 12; ++k) {
          omega.entries[{r, n, k}] = g.rational(-1000, 1000, 13);
          max_gcd = std::max(max_gcd, charge_gcd({r, n, k}));
        }
    if (max_gcd != 12) o.fail("table does not reach gcd 12");
    const InvariantTable dt = dt_table_from_omega(omega);
    if (!(omega_table_from_dt(dt) == omega)) o.fail("omega -> DT -> omega");
    InvariantTable dt2 = omega;
    dt2.kind = InvariantKind::DT;
    if (!(dt_table_from_omega(omega_table_from_dt(dt2)) == dt2)) o.fail("DT -> omega -> DT");
  }
}

void check_wall_monotonicity(Outcome& o) {
  for (std::int64_t r = 1; r <= 8; ++r)
    for (std::int64_t i = 0; i <= 40; ++i) {
      const Rational d = make_rational(i, 4);
      const Rational here = wall_bound_ts(r, d);
      if (!(wall_bound_ts(r, d + make_rational(1, 4)) < here)) o.fail("not decreasing in delta");
      const Rational next_r = wall_bound_ts(r + 1, d);
      if (d > 0 ? !(next_r < here) : !(next_r <= here)) o.fail("not decreasing in r");
    }
  gen::Gen g(1011);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t r1 = g.integer(1, 8), r2 = g.integer(1, 8);
    const KahlerParams w = g.kahler();
    const Rational a = g.rational(-20, 20, 5);
    const Rational b = slope_equality_b(a, w);
    const Rational d = delta_deficit_from_alpha(r1, r2, a, b);
    const Rational direct = a * (a - b) / (r1 * r2 * (r1 + r2));
    if (d < 0 || d != direct) o.fail("deficit negative or inconsistent at sample " + std::to_string(i));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Lattice unimodularity |det I_X| = 1 for P2, F0, F1", 1, check_lattice_unimodular},
      {2, "Slope formula: ring path equals both closed forms (1000 per base)", 5, check_slope_reproduction},
      {3, "FM round trip: complex -Id, sheaf Id (500 per base)", 1, check_fm_roundtrip},
      {4, "S-set bounds 0 <= l <= chi, |nl - m chi| <= n chi", 10, check_s_set_bounds},
      {5, "s1 soundness: f_s < 0 on S' at s = s1 + 1", 5, check_s1_soundness},
      {6, "t2 closed form 2s/(1 + r^3 n) from Gamma(n, r)", 5, check_t2_closed_form},
      {7, "Series oracles: eta^{+-24} to 500, E10 = E4 E6 to 200, sigma_9 to 500", 30, check_series_oracles},
      {8, "Sieve partition sum_k f_{r,k} = f, r <= 12", 5, check_sieve_partition},
      {9, "Z consistency (r = 1, both conventions) and integrality (r <= 3)", 30, check_z_consistency},
      {10, "Multicover round trip, gcd up to 12", 1, check_multicover_roundtrip},
      {11, "Wall-bound monotonicity and nonnegative delta deficit", 5, check_wall_monotonicity},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.fail(std::string{"exception: "} + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && elapsed >= c.limit_seconds)
      o.fail("runtime " + std::to_string(elapsed) + " s exceeds limit");
    if (!o.ok) ++failures;
    std::printf("[%s] %2d. %s (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), elapsed,
                c.limit_seconds, o.ok ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
