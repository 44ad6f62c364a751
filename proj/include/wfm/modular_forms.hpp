#pragma once

// q-expansions of eta powers and Eisenstein series, the residue-class sieve
// f_{r,k}, and assembly of the K3-pencil generating series Z_{X,r,k}.
//
// "order" arguments are inclusive: a series built to order N knows every
// coefficient through q^N.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wfm/qseries.hpp"
#include "wfm/rational.hpp"

namespace wfm {

/// sigma_power(n) = sum of d^power over divisors d of n, for 0 <= n <= max_n
/// (entry 0 is zero). Computed by a multiples sieve.
std::vector<Integer> divisor_sigma_table(unsigned power, std::size_t max_n);

/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(unsigned n);

/// prod_{n>=1} (1 - q^n) through q^order, via the pentagonal number theorem.
QSeries euler_product(std::size_t order);

/// q prod_{n>=1} (1 - q^n)^24 through q^order.
QSeries eta24(std::size_t order);

/// q^{-1} prod (1 - q^n)^{-24} through q^order.
QSeries inverse_eta24(std::size_t order);

/// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n for k in {4, 6, 10}.
/// E_10 is additionally checked against E_4 E_6. Throws std::invalid_argument
/// for other weights.
QSeries eisenstein(unsigned weight, std::size_t order);

/// Constant -2k/B_k multiplying the divisor sums in E_k.
Rational eisenstein_constant(unsigned weight);

/// Keeps coefficients at exponents congruent to k mod r (all exponents,
/// including negative ones). Requires an integral offset.
QSeries sieve(const QSeries& f, std::int64_t r, std::int64_t k);

/// Substitutes u^r = q. Every nonzero coefficient must sit at an exponent
/// divisible by r; throws std::domain_error on a stray exponent.
QSeries collapse(const QSeries& f, std::int64_t r);

enum class DeltaConvention {
  cusp,   // Delta = eta^24, so 1/Delta = q^{-1} + 24 + ...
  paper,  // Delta = 1 / eta^24 taken literally, so 1/Delta = eta^24
};

const char* to_string(DeltaConvention c);
DeltaConvention parse_delta_convention(std::string_view name);

struct ZSeries {
  std::int64_t r = 1;
  std::int64_t k = 1;
  std::int64_t order = 0;
  DeltaConvention convention = DeltaConvention::cusp;
  /// Raw series in q = u^r, normalized so the offset is the first nonzero term.
  QSeries series;
  /// Monomial exponent e with q^e * series starting at q^{-r/2}, the lowest
  /// slot of the grading sum_n Omega q^{n - r/2}. Reported, not applied.
  Rational grading_shift;
  std::vector<std::string> notes;
};

/// 1/Delta(u) under the chosen convention, through u^order.
QSeries inverse_delta(DeltaConvention convention, std::size_t order);

/// Z = -2 sum_{l=0}^{r-1} (1/Delta)_{r, l-1} (E_10)_{r, 1-l} with q = u^r,
/// through q^order.
ZSeries z_series(std::int64_t r, std::int64_t k, std::int64_t order,
                 DeltaConvention convention = DeltaConvention::cusp);

}  // namespace wfm
