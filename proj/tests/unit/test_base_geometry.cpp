#include <set>

#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "wfm/base_geometry.hpp"

using namespace wfm;

namespace {
BaseClass bc(std::vector<std::int64_t> v) { return BaseClass{std::move(v)}; }
}  // namespace

TEST_CASE("presets carry the expected gram matrix and canonical class") {
  for (const auto& p : oracle::presets()) {
    const BasePtr b = make_base(p.name);
    CHECK(b->name() == p.name);
    CHECK(b->gram() == p.gram);
    CHECK(b->canonical().coords == p.K);
  }
  const BasePtr f1 = make_base("F1");
  CHECK(f1->pair(f1->canonical(), f1->canonical()) == 8);
  const BasePtr p2 = make_base("P2");
  CHECK(p2->pair(p2->canonical(), p2->canonical()) == 9);
  const BasePtr f0 = make_base("F0");
  CHECK(f0->pair(f0->canonical(), f0->canonical()) == 8);
}

TEST_CASE("K^2 and pairings agree with hand matrix arithmetic") {
  gen::Gen g(11);
  for (const auto& p : oracle::presets()) {
    const BasePtr b = make_base(p.name);
    for (int i = 0; i < 200; ++i) {
      const BaseClass x = g.any(*b), y = g.any(*b);
      CHECK(b->pair(x, y) == oracle::dot(p.gram, x.coords, y.coords));
      CHECK(b->pair(x, y) == b->pair(y, x));
    }
  }
}

TEST_CASE("pairing examples") {
  const BasePtr f1 = make_base("F1");
  const BaseClass xi = bc({0, 1}), c0 = bc({1, 0});
  CHECK(f1->pair(xi, xi) == 0);
  CHECK(f1->pair(f1->canonical(), xi) == -2);
  CHECK(f1->pair(f1->canonical(), c0) == -1);
  CHECK(f1->pair(c0, c0) == -1);
  const BasePtr p2 = make_base("P2");
  CHECK(p2->pair(bc({1}), bc({1})) == 1);
  CHECK(p2->pair(to_rational_vector({1}), to_rational_vector({2})) == 2);
}

TEST_CASE("effectivity") {
  const BasePtr f1 = make_base("F1");
  CHECK(f1->is_effective(bc({1, 2})));
  CHECK_FALSE(f1->is_effective(bc({0, -1})));
  CHECK(f1->is_effective(bc({0, 0})));
  CHECK_FALSE(f1->is_effective(bc({2, -1})));
  CHECK_THROWS_AS(f1->is_effective(bc({1})), std::invalid_argument);
}

TEST_CASE("subeffective enumeration examples") {
  const BasePtr f1 = make_base("F1");
  CHECK(f1->enumerate_subeffective(bc({0, 1})) == std::vector<BaseClass>{bc({0, 0}), bc({0, 1})});
  CHECK(f1->enumerate_subeffective(bc({1, 1})) ==
        std::vector<BaseClass>{bc({0, 0}), bc({0, 1}), bc({1, 0}), bc({1, 1})});
  const BasePtr p2 = make_base("P2");
  CHECK(p2->enumerate_subeffective(bc({2})) == std::vector<BaseClass>{bc({0}), bc({1}), bc({2})});
  CHECK_THROWS_AS(f1->enumerate_subeffective(bc({-1, 0})), std::invalid_argument);
}

TEST_CASE("subeffective enumeration matches a brute lattice scan") {
  gen::Gen g(12);
  for (const auto& p : oracle::presets()) {
    const BasePtr b = make_base(p.name);
    for (int i = 0; i < 40; ++i) {
      const BaseClass c = g.effective(*b, 5);
      const auto got = b->enumerate_subeffective(c);
      std::set<oracle::Vec> as_set;
      for (const auto& x : got) as_set.insert(x.coords);
      CHECK(as_set.size() == got.size());
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(as_set == oracle::subeffective_scan(c.coords));
    }
  }
}

TEST_CASE("ampleness on the base") {
  const BasePtr f1 = make_base("F1");
  CHECK(f1->is_ample(to_rational_vector({2, 3})));
  CHECK_FALSE(f1->is_ample(to_rational_vector({0, 1})));
  CHECK(f1->is_ample(RationalBaseClass{make_rational(1, 2), make_rational(2, 3)}));
  CHECK_FALSE(f1->is_ample(to_rational_vector({1, 1})));  // (C0+Xi).C0 = 0
  const BasePtr p2 = make_base("P2");
  CHECK(p2->is_ample(to_rational_vector({2})));
  CHECK_FALSE(p2->is_ample(to_rational_vector({-1})));
}

TEST_CASE("determinants of the presets are unimodular") {
  for (const auto& p : oracle::presets()) {
    const BasePtr b = make_base(p.name);
    std::vector<std::vector<oracle::Z>> m;
    for (const auto& row : p.gram) m.emplace_back(row.begin(), row.end());
    CHECK(b->determinant() == oracle::det(m));
    CHECK(std::abs(b->determinant()) == 1);
  }
  CHECK(determinant(IntMatrix{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}) == 4);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("custom bases are validated") {
  CHECK_NOTHROW(make_base("custom", {{1}}, bc({-3}), {bc({1})}));
  // not unimodular
  CHECK_THROWS_AS(make_base("bad", {{2}}, bc({-3}), {bc({1})}), std::invalid_argument);
  // not symmetric
  CHECK_THROWS_AS(make_base("bad", {{0, 1}, {2, 0}}, bc({-2, -2}), {bc({1, 0}), bc({0, 1})}),
                  std::invalid_argument);
  // K.g >= 0 violates the Fano assumption
  CHECK_THROWS_AS(make_base("bad", {{1}}, bc({3}), {bc({1})}), std::invalid_argument);
  // dependent generators: not a simplicial cone
  CHECK_THROWS_AS(make_base("bad", {{0, 1}, {1, 0}}, bc({-2, -2}), {bc({1, 0}), bc({2, 0})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_base("nowhere"), std::invalid_argument);
  CHECK(base_preset_names() == std::vector<std::string>{"P2", "F0", "F1"});
}
