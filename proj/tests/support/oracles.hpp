#pragma once

// Independent reference computations. Nothing here calls into the library
// except for the Rational/Integer aliases; the point is to recompute values
// by a different (usually dumber) route.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

// Hard-coded presets, written out by hand: gram matrix in the standard basis,
// canonical class, generators of the effective cone are the basis vectors.
struct Preset {
  std::string name;
  Mat gram;
  Vec K;
};

inline const std::vector<Preset>& presets() {
  static const std::vector<Preset> all{
      {"P2", {{1}}, {-3}},
      {"F0", {{0, 1}, {1, 0}}, {-2, -2}},
      {"F1", {{-1, 1}, {1, 0}}, {-2, -3}},
  };
  return all;
}

inline const Preset& preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  throw std::invalid_argument("no preset " + name);
}

inline std::int64_t dot(const Mat& g, const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g[i][j] * b[j];
  return s;
}

inline bool nonneg(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Laplace expansion, fine for the tiny matrices we use.
inline Z det(const std::vector<std::vector<Z>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Z total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Z>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Z> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return total;
}

// Every lattice point v in a generous box with v and C - v effective.
inline std::set<Vec> subeffective_scan(const Vec& C) {
  std::int64_t bound = 1;
  for (auto x : C) bound = std::max(bound, std::abs(x) + 2);
  std::set<Vec> out;
  Vec v(C.size(), -bound);
  while (true) {
    if (nonneg(v) && nonneg(sub(C, v))) out.insert(v);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] > bound) v[i++] = -bound;
    if (i == v.size()) break;
  }
  return out;
}

struct SRow {
  Vec c_prime;
  std::int64_t l, m;
  bool operator<(const SRow& o) const { return std::tie(c_prime, l, m) < std::tie(o.c_prime, o.l, o.m); }
  bool operator==(const SRow& o) const { return c_prime == o.c_prime && l == o.l && m == o.m; }
};

// Direct scan of the destabilizer set S(C, k, n) with l over a wide window.
inline std::set<SRow> s_scan(const Preset& p, const Vec& C, std::int64_t k2, std::int64_t n) {
  const std::int64_t kc = dot(p.gram, p.K, C);
  const std::int64_t chi = (k2 - kc) / 2;
  const std::int64_t akc = std::abs(kc);
  std::set<SRow> out;
  for (const auto& cp : subeffective_scan(C)) {
    const std::int64_t akcp = std::abs(dot(p.gram, p.K, cp));
    for (std::int64_t l = -3; l <= chi * akc + 3; ++l)
      for (std::int64_t m = -2; m <= n + 2; ++m)
        if (l >= 0 && akc * l - akcp * chi <= 0 && m >= 0 && m <= n) out.insert({cp, l, m});
  }
  return out;
}

// Gamma(n, r): compositions of r via bitmasks, n distributed by an odometer.
inline std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> gamma_scan(std::int64_t n, std::int64_t r) {
  std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> out;
  for (std::uint64_t mask = 0; mask < (1ull << (r - 1)); ++mask) {
    std::vector<std::int64_t> parts{1};
    for (std::int64_t i = 0; i < r - 1; ++i) {
      if (mask >> i & 1)
        parts.push_back(1);
      else
        ++parts.back();
    }
    std::vector<std::int64_t> ns(parts.size(), 0);
    while (true) {
      std::int64_t total = 0;
      for (auto x : ns) total += x;
      if (total == n) {
        std::vector<std::pair<std::int64_t, std::int64_t>> e;
        for (std::size_t i = 0; i < parts.size(); ++i) e.emplace_back(ns[i], parts[i]);
        out.insert(e);
      }
      std::size_t i = 0;
      while (i < ns.size() && ++ns[i] > n) ns[i++] = 0;
      if (i == ns.size()) break;
    }
  }
  return out;
}

// Slope closed forms as written in the two lemmas; |K.C| > 0 assumed.
inline Q slope_contra(const Q& t, const Q& s, const Q& k_alpha, const Q& k, const Q& abs_kc) {
  return ((1 - s / t) * k_alpha + k) / ((s - t / 2) * abs_kc);
}

inline Q slope_adiabatic(const Q& t, const Q& s, const Q& k_alpha, const Q& k, const Q& abs_kc) {
  return -s / (t * (s - t / 2)) * k_alpha / abs_kc + 1 / (s - t / 2) * (k + k_alpha) / abs_kc;
}

// Coefficients c[0..order] of prod_{n>=1} (1 - q^n)^e, e = +-24, by repeated
// multiplication (or division) with single factors.
inline std::vector<Z> euler_power_brute(std::size_t order, int e) {
  std::vector<Z> c(order + 1, 0);
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n)
    for (int rep = 0; rep < std::abs(e); ++rep) {
      if (e > 0) {
        for (std::size_t i = order; i >= n; --i) c[i] -= c[i - n];
      } else {
        for (std::size_t i = n; i <= order; ++i) c[i] += c[i - n];
      }
    }
  return c;
}

inline Z sigma_trial(unsigned power, std::int64_t n) {
  Z total = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) {
      Z p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), power);
      total += p;
    }
  return total;
}

inline Q delta(std::int64_t r, std::int64_t m, std::int64_t l, std::int64_t n) {
  Q q(m * (m - l), r);
  q.canonicalize();
  return Q(n) - q;
}

inline std::int64_t mobius_trial(std::int64_t m) {
  std::int64_t primes = 0;
  for (std::int64_t p = 2; p <= m; ++p) {
    if (m % p) continue;
    std::int64_t e = 0;
    while (m % p == 0) m /= p, ++e;
    if (e > 1) return 0;
    ++primes;
  }
  return primes % 2 ? -1 : 1;
}

}  // namespace oracle
