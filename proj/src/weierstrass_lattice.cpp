#include "wfm/weierstrass_lattice.hpp"

#include <stdexcept>

namespace wfm {

namespace {

void require_same_base(const BasePtr& a, const BasePtr& b) {
  if (!a || !b) throw std::invalid_argument("class without a base surface");
  if (a != b && !(*a == *b)) throw std::invalid_argument("classes live over different bases");
}

RationalBaseClass add(const RationalBaseClass& a, const RationalBaseClass& b, const Rational& sign) {
  if (a.size() != b.size()) throw std::invalid_argument("rank mismatch");
  RationalBaseClass out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += sign * b[i];
  return out;
}

RationalBaseClass scale(const Rational& c, RationalBaseClass v) {
  for (auto& x : v) x *= c;
  return v;
}

bool all_integral(const RationalBaseClass& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

RationalBaseClass canonical_of(const BasePtr& base) {
  return to_rational_vector(base->canonical().coords);
}

}  // namespace

DivisorX DivisorX::zero(BasePtr base) {
  const auto r = base->rank();
  return DivisorX{std::move(base), 0, RationalBaseClass(r, Rational{0})};
}

DivisorX DivisorX::section(BasePtr base) {
  auto d = zero(std::move(base));
  d.theta = 1;
  return d;
}

DivisorX DivisorX::pullback_of(BasePtr base, const BaseClass& eta) {
  return pullback_of(std::move(base), to_rational_vector(eta.coords));
}

DivisorX DivisorX::pullback_of(BasePtr base, RationalBaseClass eta) {
  if (eta.size() != base->rank()) throw std::invalid_argument("pullback class rank mismatch");
  return DivisorX{std::move(base), 0, std::move(eta)};
}

DivisorX DivisorX::kahler(BasePtr base, const Rational& t, const Rational& s) {
  RationalBaseClass eta = scale(-s, canonical_of(base));
  return DivisorX{std::move(base), t, std::move(eta)};
}

bool DivisorX::is_integral() const { return is_integer(theta) && all_integral(pullback); }

DivisorX DivisorX::operator+(const DivisorX& o) const {
  require_same_base(base, o.base);
  return DivisorX{base, theta + o.theta, add(pullback, o.pullback, 1)};
}

DivisorX DivisorX::operator-(const DivisorX& o) const {
  require_same_base(base, o.base);
  return DivisorX{base, theta - o.theta, add(pullback, o.pullback, -1)};
}

DivisorX operator*(const Rational& c, const DivisorX& d) {
  return DivisorX{d.base, c * d.theta, scale(c, d.pullback)};
}

bool DivisorX::operator==(const DivisorX& o) const {
  require_same_base(base, o.base);
  return theta == o.theta && pullback == o.pullback;
}

CurveX CurveX::zero(BasePtr base) {
  const auto r = base->rank();
  return CurveX{std::move(base), 0, RationalBaseClass(r, Rational{0})};
}

CurveX CurveX::fiber_class(BasePtr base) {
  auto c = zero(std::move(base));
  c.fiber = 1;
  return c;
}

CurveX CurveX::section_push(BasePtr base, const BaseClass& c) {
  return section_push(std::move(base), to_rational_vector(c.coords));
}

CurveX CurveX::section_push(BasePtr base, RationalBaseClass c) {
  if (c.size() != base->rank()) throw std::invalid_argument("section class rank mismatch");
  return CurveX{std::move(base), 0, std::move(c)};
}

bool CurveX::is_integral() const { return is_integer(fiber) && all_integral(section); }

CurveX CurveX::operator+(const CurveX& o) const {
  require_same_base(base, o.base);
  return CurveX{base, fiber + o.fiber, add(section, o.section, 1)};
}

CurveX CurveX::operator-(const CurveX& o) const {
  require_same_base(base, o.base);
  return CurveX{base, fiber - o.fiber, add(section, o.section, -1)};
}

CurveX operator*(const Rational& c, const CurveX& d) {
  return CurveX{d.base, c * d.fiber, scale(c, d.section)};
}

bool CurveX::operator==(const CurveX& o) const {
  require_same_base(base, o.base);
  return fiber == o.fiber && section == o.section;
}

CurveX multiply(const DivisorX& a, const DivisorX& b) {
  require_same_base(a.base, b.base);
  const BaseSurface& B = *a.base;
  // (t Theta + p^*eta)(t' Theta + p^*eta')
  //   = t t' sigma_*K_B + t sigma_*eta' + t' sigma_*eta + (eta.eta') f
  RationalBaseClass section = scale(a.theta * b.theta, canonical_of(a.base));
  section = add(section, scale(a.theta, b.pullback), 1);
  section = add(section, scale(b.theta, a.pullback), 1);
  return CurveX{a.base, B.pair(a.pullback, b.pullback), std::move(section)};
}

Rational pair(const DivisorX& d, const CurveX& c) {
  require_same_base(d.base, c.base);
  const BaseSurface& B = *d.base;
  // Theta.f = 1, Theta.sigma_*C = K_B.C, p^*eta.f = 0, p^*eta.sigma_*C = eta.C
  return d.theta * c.fiber + d.theta * B.pair(canonical_of(d.base), c.section) +
         B.pair(d.pullback, c.section);
}

Rational triple(const DivisorX& a, const DivisorX& b, const DivisorX& c) {
  return pair(c, multiply(a, b));
}

IntersectionMatrixX intersection_matrix(const BasePtr& base) {
  const std::size_t r = base->rank();
  std::vector<DivisorX> rows{DivisorX::section(base)};
  std::vector<CurveX> cols{CurveX::fiber_class(base)};
  for (std::size_t i = 0; i < r; ++i) {
    rows.push_back(DivisorX::pullback_of(base, base->basis(i)));
    cols.push_back(CurveX::section_push(base, base->basis(i)));
  }
  IntersectionMatrixX out;
  IntMatrix m(r + 1, std::vector<std::int64_t>(r + 1, 0));
  for (std::size_t i = 0; i <= r; ++i)
    for (std::size_t j = 0; j <= r; ++j) m[i][j] = to_int64(pair(rows[i], cols[j]));
  out.determinant = determinant(m).get_si();
  out.entries = std::move(m);
  return out;
}

bool is_ample(const DivisorX& omega) {
  if (omega.theta <= 0) return false;
  return omega.base->is_ample(add(omega.pullback, scale(omega.theta, canonical_of(omega.base)), 1));
}

bool is_effective(const CurveX& curve) {
  if (!curve.is_integral()) throw std::invalid_argument("effectivity test needs an integral curve class");
  BaseClass c;
  for (const auto& x : curve.section) c.coords.push_back(to_int64(x));
  return curve.fiber >= 0 && curve.base->is_effective(c);
}

bool is_pencil_base(const BaseSurface& base) {
  // Basis (C0, Xi) with Xi^2 = 0, C0.Xi = 1, C0^2 = -a for a in {0, 1}.
  if (base.rank() != 2) return false;
  if (base.gram() == IntMatrix{{0, 1}, {1, 0}}) return base.canonical() == BaseClass{{-2, -2}};
  if (base.gram() == IntMatrix{{-1, 1}, {1, 0}}) return base.canonical() == BaseClass{{-2, -3}};
  return false;
}

BaseClass pencil_fiber_class(const BasePtr& base) {
  if (!is_pencil_base(*base)) throw std::invalid_argument("base '" + base->name() + "' is not F0 or F1");
  return BaseClass{{0, 1}};
}

BaseClass pencil_section_class(const BasePtr& base) {
  if (!is_pencil_base(*base)) throw std::invalid_argument("base '" + base->name() + "' is not F0 or F1");
  return BaseClass{{1, 0}};
}

std::vector<PencilRelation> k3_pencil_relations(const BasePtr& base) {
  const BaseClass xi = pencil_fiber_class(base);
  const BaseClass c0 = pencil_section_class(base);
  const DivisorX D = DivisorX::pullback_of(base, xi);
  const DivisorX D0 = DivisorX::pullback_of(base, c0);
  const DivisorX Theta = DivisorX::section(base);
  const CurveX f = CurveX::fiber_class(base);
  const CurveX Xi = CurveX::section_push(base, xi);
  const CurveX C0 = CurveX::section_push(base, c0);

  return {
      {"D0.D = f", multiply(D0, D) == f},
      {"D.D = 0", multiply(D, D) == CurveX::zero(base)},
      {"Theta.D = Xi", multiply(Theta, D) == Xi},
      {"C0.D = 1", pair(D, C0) == 1},
      {"Xi.D = 0", pair(D, Xi) == 0},
      {"f.D = 0", pair(D, f) == 0},
  };
}

}  // namespace wfm
