#pragma once

// Truncated formal Laurent series with exact rational coefficients.
//
// A QSeries stores the coefficients of q^(offset + i) for 0 <= i < precision.
// Everything at or above q^(offset + precision) is unknown; arithmetic tracks
// this bound so that every stored coefficient is exact.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wfm/rational.hpp"

namespace wfm {

class QSeries {
 public:
  QSeries() = default;
  QSeries(Rational offset, std::vector<Rational> coeffs);

  /// 1 + O(q^precision).
  static QSeries one(std::size_t precision);
  /// c q^exponent known through q^last (inclusive).
  static QSeries monomial(const Rational& c, const Rational& exponent, const Rational& last);
  /// Integer coefficients, offset given.
  static QSeries from_integers(const Rational& offset, const std::vector<Integer>& coeffs);

  const Rational& offset() const { return offset_; }
  std::size_t precision() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

  /// First unknown exponent.
  Rational valid_until() const { return offset_ + Rational(static_cast<long>(coeffs_.size())); }

  /// Coefficient of q^exponent; zero below the offset or off the exponent
  /// grid, throws std::out_of_range at or beyond valid_until().
  Rational coefficient(const Rational& exponent) const;

  bool has_integral_offset() const { return is_integer(offset_); }
  bool all_integral() const;
  bool is_zero() const;

  /// Drops leading zero coefficients, moving the offset up.
  QSeries normalized() const;
  /// Keeps terms with exponent <= last.
  QSeries truncated_through(const Rational& last) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& c, const QSeries& a);

  /// Exact equality of offset (after normalization) and of all terms known
  /// in both; the shorter precision bounds the comparison.
  bool agrees_with(const QSeries& other) const;
  bool operator==(const QSeries& other) const;

 private:
  Rational offset_{0};
  std::vector<Rational> coeffs_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);

/// Requires a nonzero leading coefficient after normalization; throws
/// std::domain_error otherwise.
QSeries series_inverse(const QSeries& f);

/// Integer powers, negative exponents through the inverse.
QSeries series_pow(const QSeries& f, std::int64_t e);

}  // namespace wfm
