#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "wfm/weierstrass_lattice.hpp"

using namespace wfm;

namespace {

BaseClass bc(std::vector<std::int64_t> v) { return BaseClass{std::move(v)}; }

// (a1 Th + p*e1)(a2 Th + p*e2)(a3 Th + p*e3) expanded with Th^3 = K^2,
// Th^2 p*e = K.e, Th p*e p*e' = e.e', (p*)^3 = 0.
Rational triple_expand(const oracle::Preset& p, const DivisorX& x, const DivisorX& y, const DivisorX& z) {
  auto dot = [&](const RationalBaseClass& a, const RationalBaseClass& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * p.gram[i][j] * b[j];
    return s;
  };
  const RationalBaseClass K = to_rational_vector(p.K);
  const Rational &a1 = x.theta, &a2 = y.theta, &a3 = z.theta;
  const auto &e1 = x.pullback, &e2 = y.pullback, &e3 = z.pullback;
  return a1 * a2 * a3 * dot(K, K) + a1 * a2 * dot(K, e3) + a1 * a3 * dot(K, e2) + a2 * a3 * dot(K, e1) +
         a1 * dot(e2, e3) + a2 * dot(e1, e3) + a3 * dot(e1, e2);
}

DivisorX random_divisor(gen::Gen& g, const BasePtr& b) {
  RationalBaseClass eta;
  for (std::size_t i = 0; i < b->rank(); ++i) eta.push_back(g.rational(-3, 3));
  return g.rational(-3, 3) * DivisorX::section(b) + DivisorX::pullback_of(b, eta);
}

}  // namespace

TEST_CASE("divisor products follow the ring relations") {
  const BasePtr f1 = make_base("F1");
  const DivisorX Th = DivisorX::section(f1);
  const BaseClass K = f1->canonical();
  CHECK(multiply(Th, DivisorX::pullback_of(f1, -K)) == CurveX::section_push(f1, -K));
  CHECK(multiply(Th, Th) == CurveX::section_push(f1, K));
  CHECK(multiply(DivisorX::pullback_of(f1, bc({0, 1})), DivisorX::pullback_of(f1, bc({1, 0}))) ==
        CurveX::fiber_class(f1));
}

TEST_CASE("divisor-curve pairing examples") {
  const BasePtr f1 = make_base("F1");
  const DivisorX Th = DivisorX::section(f1);
  CHECK(pair(Th, CurveX::fiber_class(f1)) == 1);
  CHECK(pair(DivisorX::pullback_of(f1, bc({3, -1})), CurveX::fiber_class(f1)) == 0);
  CHECK(pair(Th, CurveX::section_push(f1, bc({0, 1}))) == -2);
  CHECK(pair(DivisorX::pullback_of(f1, bc({1, 0})), CurveX::section_push(f1, bc({0, 1}))) == 1);
}

TEST_CASE("triple products") {
  const BasePtr f1 = make_base("F1");
  const DivisorX Th = DivisorX::section(f1);
  CHECK(triple(Th, Th, Th) == 8);
  const DivisorX e = DivisorX::pullback_of(f1, bc({1, 2})), e2 = DivisorX::pullback_of(f1, bc({0, 1}));
  CHECK(triple(Th, e, e2) == f1->pair(bc({1, 2}), bc({0, 1})));
  CHECK(triple(e, e, e2) == 0);
  CHECK(triple(e, e, e) == 0);
  CHECK(triple(DivisorX::section(make_base("P2")), DivisorX::section(make_base("P2")),
               DivisorX::section(make_base("P2"))) == 9);
}

TEST_CASE("triple products agree with the hand expansion and are symmetric") {
  gen::Gen g(21);
  for (const auto& p : oracle::presets()) {
    const BasePtr b = make_base(p.name);
    for (int i = 0; i < 150; ++i) {
      const DivisorX x = random_divisor(g, b), y = random_divisor(g, b), z = random_divisor(g, b);
      const Rational v = triple(x, y, z);
      CHECK(v == triple_expand(p, x, y, z));
      CHECK(v == triple(z, x, y));
      CHECK(v == triple(y, x, z));
      CHECK(v == pair(x, multiply(y, z)));
    }
  }
}

TEST_CASE("intersection matrix") {
  const auto p2 = intersection_matrix(make_base("P2"));
  CHECK(p2.entries == std::vector<std::vector<std::int64_t>>{{1, -3}, {0, 1}});
  CHECK(std::abs(p2.determinant) == 1);
  for (const auto& name : base_preset_names()) {
    const BasePtr b = make_base(name);
    const auto m = intersection_matrix(b);
    CHECK(m.entries.size() == b->rank() + 1);
    std::vector<std::vector<oracle::Z>> zm;
    for (const auto& row : m.entries) zm.emplace_back(row.begin(), row.end());
    CHECK(m.determinant == oracle::det(zm));
    CHECK(std::abs(m.determinant) == 1);
  }
}

TEST_CASE("ampleness of t Theta - s p*K") {
  const BasePtr f1 = make_base("F1");
  CHECK(is_ample(DivisorX::kahler(f1, 1, 2)));
  CHECK_FALSE(is_ample(DivisorX::kahler(f1, 2, 1)));
  CHECK_FALSE(is_ample(DivisorX::kahler(f1, 1, 1)));
  CHECK_FALSE(is_ample(DivisorX::pullback_of(f1, -f1->canonical())));
  CHECK(is_ample(DivisorX::kahler(f1, make_rational(1, 3), make_rational(1, 2))));
}

TEST_CASE("curve effectivity") {
  const BasePtr f1 = make_base("F1");
  const CurveX xi = CurveX::section_push(f1, bc({0, 1}));
  CHECK(is_effective(xi + Rational(3) * CurveX::fiber_class(f1)));
  CHECK_FALSE(is_effective(xi - CurveX::fiber_class(f1)));
  CHECK(is_effective(CurveX::zero(f1)));
  CHECK_THROWS_AS(is_effective(make_rational(1, 2) * CurveX::fiber_class(f1)), std::invalid_argument);
}

TEST_CASE("K3 pencil relations") {
  for (const auto* name : {"F0", "F1"}) {
    const BasePtr b = make_base(name);
    const auto rel = k3_pencil_relations(b);
    CHECK(rel.size() == 6);
    for (const auto& r : rel) CHECK_MESSAGE(r.holds, r.name);
    const DivisorX D = DivisorX::pullback_of(b, pencil_fiber_class(b));
    CHECK(multiply(D, D) == CurveX::zero(b));
    CHECK(multiply(DivisorX::pullback_of(b, pencil_section_class(b)), D) == CurveX::fiber_class(b));
    CHECK(pair(D, CurveX::section_push(b, pencil_section_class(b))) == 1);
  }
  CHECK_THROWS_AS(k3_pencil_relations(make_base("P2")), std::invalid_argument);
}

TEST_CASE("mixing bases is rejected") {
  CHECK_THROWS_AS(DivisorX::section(make_base("F0")) + DivisorX::section(make_base("F1")), std::invalid_argument);
  CHECK_THROWS_AS(DivisorX::pullback_of(make_base("F1"), bc({1})), std::invalid_argument);
}
