#include "wfm/modular_forms.hpp"

#include <stdexcept>

namespace wfm {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t r) {
  std::int64_t m = a % r;
  return m < 0 ? m + r : m;
}

std::int64_t floor_div(std::int64_t a, std::int64_t r) { return (a - floor_mod(a, r)) / r; }

std::int64_t ceil_div(std::int64_t a, std::int64_t r) { return -floor_div(-a, r); }

}  // namespace

std::vector<Integer> divisor_sigma_table(unsigned power, std::size_t max_n) {
  std::vector<Integer> sigma(max_n + 1, Integer{0});
  Integer dp;
  for (std::size_t d = 1; d <= max_n; ++d) {
    mpz_ui_pow_ui(dp.get_mpz_t(), d, power);
    for (std::size_t m = d; m <= max_n; m += d) sigma[m] += dp;
  }
  return sigma;
}

Rational bernoulli(unsigned n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, k)
    for (unsigned k = 0; k < m; ++k) {
      acc += binom * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -acc / (m + 1);
  }
  return b[n];
}

QSeries euler_product(std::size_t order) {
  std::vector<Integer> c(order + 1, Integer{0});
  // sum_k (-1)^k q^{k(3k-1)/2}, k = 0, 1, -1, 2, -2, ...
  c[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t e1 = k * (3 * k - 1) / 2;
    const std::int64_t e2 = k * (3 * k + 1) / 2;
    if (e1 > static_cast<std::int64_t>(order)) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    c[e1] += sign;
    if (e2 <= static_cast<std::int64_t>(order)) c[e2] += sign;
  }
  return QSeries::from_integers(0, c);
}

QSeries eta24(std::size_t order) {
  if (order < 1) return QSeries{1, {}};
  QSeries p24 = series_pow(euler_product(order - 1), 24);
  return QSeries{1, p24.coeffs()};
}

QSeries inverse_eta24(std::size_t order) {
  QSeries inv = series_inverse(series_pow(euler_product(order + 1), 24));
  return QSeries{-1, inv.coeffs()};
}

Rational eisenstein_constant(unsigned weight) {
  if (weight < 4 || weight % 2 != 0) throw std::invalid_argument("Eisenstein weight must be even and >= 4");
  return Rational{-2 * static_cast<long>(weight)} / bernoulli(weight);
}

QSeries eisenstein(unsigned weight, std::size_t order) {
  if (weight != 4 && weight != 6 && weight != 10)
    throw std::invalid_argument("unsupported Eisenstein weight " + std::to_string(weight));
  const Rational c = eisenstein_constant(weight);
  const auto sigma = divisor_sigma_table(weight - 1, order);
  std::vector<Rational> coeffs(order + 1);
  coeffs[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) coeffs[n] = c * sigma[n];
  QSeries e{0, std::move(coeffs)};
  if (weight == 10 && !(eisenstein(4, order) * eisenstein(6, order) == e))
    throw std::logic_error("E_10 != E_4 E_6");
  return e;
}

QSeries sieve(const QSeries& f, std::int64_t r, std::int64_t k) {
  if (r < 1) throw std::invalid_argument("sieve modulus must be >= 1");
  if (!f.has_integral_offset()) throw std::invalid_argument("sieve needs an integral exponent offset");
  const std::int64_t residue = floor_mod(k, r);
  const std::int64_t o = to_int64(f.offset());
  std::vector<Rational> out = f.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i)
    if (floor_mod(o + static_cast<std::int64_t>(i), r) != residue) out[i] = 0;
  return QSeries{f.offset(), std::move(out)};
}

QSeries collapse(const QSeries& f, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("collapse modulus must be >= 1");
  if (!f.has_integral_offset()) throw std::invalid_argument("collapse needs an integral exponent offset");
  const std::int64_t o = to_int64(f.offset());
  for (std::size_t i = 0; i < f.precision(); ++i) {
    const std::int64_t e = o + static_cast<std::int64_t>(i);
    if (f[i] != 0 && floor_mod(e, r) != 0)
      throw std::domain_error("collapse: nonzero coefficient at u^" + std::to_string(e) +
                              ", not divisible by " + std::to_string(r));
  }
  const std::int64_t first = ceil_div(o, r);
  const std::int64_t last = floor_div(o + static_cast<std::int64_t>(f.precision()) - 1, r);
  std::vector<Rational> out;
  for (std::int64_t j = first; j <= last; ++j) out.push_back(f[static_cast<std::size_t>(r * j - o)]);
  return QSeries{first, std::move(out)};
}

const char* to_string(DeltaConvention c) { return c == DeltaConvention::cusp ? "cusp" : "paper"; }

DeltaConvention parse_delta_convention(std::string_view name) {
  if (name == "cusp") return DeltaConvention::cusp;
  if (name == "paper") return DeltaConvention::paper;
  throw std::invalid_argument("unknown Delta convention '" + std::string{name} + "' (cusp|paper)");
}

QSeries inverse_delta(DeltaConvention convention, std::size_t order) {
  return convention == DeltaConvention::cusp ? inverse_eta24(order) : eta24(order);
}

ZSeries z_series(std::int64_t r, std::int64_t k, std::int64_t order, DeltaConvention convention) {
  if (r < 1) throw std::invalid_argument("z_series needs r >= 1");
  if (order < 1) throw std::invalid_argument("z_series needs order >= 1");

  // Work in u through u^{r order}; two spare terms absorb the u^{-1} pole.
  const std::size_t u_order = static_cast<std::size_t>(r * order + 2);
  const QSeries inv_delta = inverse_delta(convention, u_order);
  const QSeries e10 = eisenstein(10, u_order);

  QSeries total;
  for (std::int64_t l = 0; l < r; ++l) {
    QSeries term = sieve(inv_delta, r, l - 1) * sieve(e10, r, 1 - l);
    total = l == 0 ? term : total + term;
  }
  total = Rational{-2} * total;

  ZSeries z;
  z.r = r;
  z.k = k;
  z.order = order;
  z.convention = convention;
  z.series = collapse(total, r).truncated_through(order).normalized();
  z.grading_shift = z.series.precision() == 0 ? Rational{0} : make_rational(-r, 2) - z.series.offset();
  z.notes = {
      std::string{"Delta convention: "} + to_string(convention) +
          (convention == DeltaConvention::cusp ? " (Delta = eta^24, 1/Delta has a u^-1 pole)"
                                               : " (Delta = 1/eta^24 taken literally)"),
      "sieve keeps all exponents in the residue class, including the polar term",
      "coefficients are raw; multiply by q^grading_shift to start at q^{-r/2}",
      "k does not enter the formula; recorded for bookkeeping only",
  };
  return z;
}

}  // namespace wfm
