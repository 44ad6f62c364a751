#include "wfm/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace wfm {

namespace {

Integer common_denominator(const std::vector<Rational>& v) {
  Integer d = 1;
  for (const auto& x : v) {
    if (x.get_den() == 1) continue;
    Integer g;
    mpz_lcm(g.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
    d = g;
  }
  return d;
}

// Truncated product c_i = sum_{j<=i} a_j b_{i-j}, i < n. Scales both sides to
// integers first; mpz convolution is much cheaper than canonicalizing mpq.
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t n) {
  const Integer da = common_denominator(a);
  const Integer db = common_denominator(b);
  std::vector<Integer> ia(std::min(n, a.size())), ib(std::min(n, b.size()));
  for (std::size_t i = 0; i < ia.size(); ++i) ia[i] = Rational(a[i] * da).get_num();
  for (std::size_t i = 0; i < ib.size(); ++i) ib[i] = Rational(b[i] * db).get_num();

  std::vector<Rational> out(n);
  Integer acc;
  const Integer scale = da * db;
  for (std::size_t i = 0; i < n; ++i) {
    acc = 0;
    const std::size_t lo = i >= ib.size() ? i - ib.size() + 1 : 0;
    const std::size_t hi = std::min(i, ia.size() - 1);
    for (std::size_t j = lo; j <= hi && j < ia.size(); ++j) {
      if (ia[j] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), ia[j].get_mpz_t(), ib[i - j].get_mpz_t());
    }
    out[i] = Rational{acc, scale};
    out[i].canonicalize();
  }
  return out;
}

Rational exponent_gap(const QSeries& a, const QSeries& b) {
  Rational gap = b.offset() - a.offset();
  if (!is_integer(gap))
    throw std::invalid_argument("series offsets " + to_string(a.offset()) + " and " + to_string(b.offset()) +
                                " differ by a non-integer");
  return gap;
}

}  // namespace

QSeries::QSeries(Rational offset, std::vector<Rational> coeffs)
    : offset_(std::move(offset)), coeffs_(std::move(coeffs)) {}

QSeries QSeries::one(std::size_t precision) {
  std::vector<Rational> c(precision, Rational{0});
  if (precision > 0) c[0] = 1;
  return QSeries{0, std::move(c)};
}

QSeries QSeries::monomial(const Rational& c, const Rational& exponent, const Rational& last) {
  Rational span = last - exponent;
  if (!is_integer(span) || span < 0) throw std::invalid_argument("monomial: bad truncation bound");
  std::vector<Rational> coeffs(to_int64(span) + 1, Rational{0});
  coeffs[0] = c;
  return QSeries{exponent, std::move(coeffs)};
}

QSeries QSeries::from_integers(const Rational& offset, const std::vector<Integer>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& z : coeffs) c.emplace_back(z);
  return QSeries{offset, std::move(c)};
}

Rational QSeries::coefficient(const Rational& exponent) const {
  Rational index = exponent - offset_;
  if (!is_integer(index) || index < 0) return 0;
  if (exponent >= valid_until())
    throw std::out_of_range("coefficient of q^" + to_string(exponent) + " is beyond the series precision");
  return coeffs_[to_int64(index)];
}

bool QSeries::all_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return is_integer(x); });
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x == 0; });
}

QSeries QSeries::normalized() const {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == 0) return *this;
  return QSeries{offset_ + Rational(static_cast<long>(lead)),
                 std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead), coeffs_.end())};
}

QSeries QSeries::truncated_through(const Rational& last) const {
  const Rational span = last - offset_;
  if (span < 0) return QSeries{offset_, {}};
  Integer floor_span;
  mpz_fdiv_q(floor_span.get_mpz_t(), span.get_num().get_mpz_t(), span.get_den().get_mpz_t());
  const std::size_t n = floor_span >= static_cast<unsigned long>(coeffs_.size())
                            ? coeffs_.size()
                            : static_cast<std::size_t>(floor_span.get_ui()) + 1;
  return QSeries{offset_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n))};
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const Rational gap = exponent_gap(a, b);
  const Rational offset = gap >= 0 ? a.offset() : b.offset();
  const Rational until = std::min(a.valid_until(), b.valid_until());
  const Rational span = until - offset;
  std::vector<Rational> out(span > 0 ? to_int64(span) : 0, Rational{0});
  for (const QSeries* s : {&a, &b}) {
    const std::int64_t shift = to_int64(s->offset() - offset);
    for (std::size_t i = 0; i < s->precision(); ++i) {
      const std::int64_t at = shift + static_cast<std::int64_t>(i);
      if (at >= static_cast<std::int64_t>(out.size())) break;
      out[at] += (*s)[i];
    }
  }
  return QSeries{offset, std::move(out)};
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  return QSeries{a.offset() + b.offset(), convolve(a.coeffs(), b.coeffs(), n)};
}

QSeries operator*(const Rational& c, const QSeries& a) {
  QSeries out = a;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

bool QSeries::agrees_with(const QSeries& other) const {
  const QSeries a = normalized();
  const QSeries b = other.normalized();
  const Rational until = std::min(valid_until(), other.valid_until());
  // A series that is zero through its precision agrees with anything that
  // vanishes on the same range.
  Rational lo = std::min(a.offset(), b.offset());
  if (a.precision() == 0) lo = b.offset();
  if (b.precision() == 0) lo = a.offset();
  if (!is_integer(a.offset() - b.offset()) && a.precision() > 0 && b.precision() > 0) return false;
  for (Rational e = lo; e < until; e += 1)
    if (a.coefficient(e) != b.coefficient(e)) return false;
  return true;
}

bool QSeries::operator==(const QSeries& other) const {
  const QSeries a = normalized();
  const QSeries b = other.normalized();
  return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
}

QSeries series_add(const QSeries& a, const QSeries& b) { return a + b; }

QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries series_inverse(const QSeries& f) {
  const QSeries g = f.normalized();
  if (g.precision() == 0 || g[0] == 0)
    throw std::domain_error("series_inverse: leading coefficient is zero");
  const std::size_t n = g.precision();
  const Integer den = common_denominator(g.coeffs());
  std::vector<Integer> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = Rational(g[i] * den).get_num();

  // h = 1/g  <=>  sum_{j<=i} c_j h_{i-j} = den [i == 0]. When the scaled
  // leading coefficient is a unit the recursion stays integral.
  const bool unit_lead = c[0] == 1 || c[0] == -1;
  std::vector<Rational> h(n);
  if (unit_lead) {
    std::vector<Integer> hi(n);  // h = den * hi / c0
    Integer acc;
    for (std::size_t i = 0; i < n; ++i) {
      acc = i == 0 ? Integer{1} : Integer{0};
      for (std::size_t j = 1; j <= i; ++j)
        if (c[j] != 0) mpz_submul(acc.get_mpz_t(), c[j].get_mpz_t(), hi[i - j].get_mpz_t());
      hi[i] = acc * c[0];
    }
    for (std::size_t i = 0; i < n; ++i) {
      h[i] = Rational{hi[i] * den};
      h[i].canonicalize();
    }
  } else {
    const Rational lead = Rational{c[0]} / den;
    for (std::size_t i = 0; i < n; ++i) {
      Rational acc = i == 0 ? Rational{1} : Rational{0};
      for (std::size_t j = 1; j <= i; ++j)
        if (g[j] != 0) acc -= g[j] * h[i - j];
      h[i] = acc / lead;
    }
  }
  return QSeries{-g.offset(), std::move(h)};
}

QSeries series_pow(const QSeries& f, std::int64_t e) {
  if (e < 0) return series_pow(series_inverse(f), -e);
  const QSeries base = f.normalized();
  if (e == 0) return QSeries::one(base.precision());
  QSeries result;
  bool have = false;
  QSeries square = base;
  while (e > 0) {
    if (e & 1) {
      result = have ? result * square : square;
      have = true;
    }
    e >>= 1;
    if (e > 0) square = square * square;
  }
  return result;
}

}  // namespace wfm
