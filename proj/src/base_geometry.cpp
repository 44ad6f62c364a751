#include "wfm/base_geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace wfm {

namespace {

using RationalMatrix = std::vector<RationalVector>;

std::size_t rational_rank(RationalMatrix m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Gauss-Jordan inverse of a square nonsingular matrix.
RationalMatrix invert(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, RationalVector(n, Rational{0}));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular matrix in cone solve");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= factor * m[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

IntMatrix preset_gram(std::string_view name) {
  if (name == "P2") return {{1}};
  if (name == "F0") return {{0, 1}, {1, 0}};
  if (name == "F1") return {{-1, 1}, {1, 0}};
  throw std::invalid_argument("unknown base preset '" + std::string{name} + "'");
}

}  // namespace

bool BaseClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](auto x) { return x == 0; });
}

BaseClass BaseClass::operator+(const BaseClass& other) const {
  if (other.rank() != rank()) throw std::invalid_argument("base class rank mismatch");
  BaseClass out = *this;
  for (std::size_t i = 0; i < rank(); ++i) out.coords[i] += other.coords[i];
  return out;
}

BaseClass BaseClass::operator-(const BaseClass& other) const { return *this + (-other); }

BaseClass BaseClass::operator-() const {
  BaseClass out = *this;
  for (auto& x : out.coords) x = -x;
  return out;
}

BaseClass operator*(std::int64_t c, const BaseClass& a) {
  BaseClass out = a;
  for (auto& x : out.coords) x *= c;
  return out;
}

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  RationalMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("determinant of non-square matrix");
    a[i] = to_rational_vector(m[i]);
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det.get_num();
}

BaseSurface::BaseSurface(std::string name, IntMatrix gram, BaseClass canonical,
                         std::vector<BaseClass> effective_generators)
    : name_(std::move(name)),
      gram_(std::move(gram)),
      canonical_(std::move(canonical)),
      effective_(std::move(effective_generators)) {
  const std::size_t n = gram_.size();
  if (n == 0) throw std::invalid_argument("base surface needs positive Picard rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw std::invalid_argument("gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("gram matrix is not symmetric");
  }
  if (abs(wfm::determinant(gram_)) != 1)
    throw std::invalid_argument("intersection form is not unimodular (|det| != 1)");
  require_rank(canonical_);
  if (effective_.empty()) throw std::invalid_argument("no effective generators given");
  for (const auto& g : effective_) {
    require_rank(g);
    if (g.is_zero()) throw std::invalid_argument("zero effective generator");
    if (pair(canonical_, g) >= 0)
      throw std::invalid_argument("Fano condition fails: -K_B is not positive on an effective generator");
  }

  // Simplicial cone: generators linearly independent. Choose rows of the
  // (rank x p) generator matrix that give an invertible p x p block.
  const std::size_t p = effective_.size();
  RationalMatrix chosen;
  for (std::size_t row = 0; row < n && chosen.size() < p; ++row) {
    RationalVector candidate(p);
    for (std::size_t j = 0; j < p; ++j) candidate[j] = effective_[j].coords[row];
    auto trial = chosen;
    trial.push_back(candidate);
    if (rational_rank(trial) == trial.size()) {
      chosen = std::move(trial);
      pivot_rows_.push_back(row);
    }
  }
  if (chosen.size() != p)
    throw std::invalid_argument("effective cone is not simplicial (generators are linearly dependent)");
  pivot_inverse_ = invert(chosen);
}

void BaseSurface::require_rank(const BaseClass& c) const {
  if (c.rank() != rank())
    throw std::invalid_argument("class has " + std::to_string(c.rank()) + " coordinates, base '" +
                                name_ + "' has rank " + std::to_string(rank()));
}

std::int64_t BaseSurface::pair(const BaseClass& a, const BaseClass& b) const {
  require_rank(a);
  require_rank(b);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) total += a.coords[i] * gram_[i][j] * b.coords[j];
  return total;
}

Rational BaseSurface::pair(const RationalBaseClass& a, const RationalBaseClass& b) const {
  if (a.size() != rank() || b.size() != rank())
    throw std::invalid_argument("rational class rank mismatch on base '" + name_ + "'");
  Rational total = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (gram_[i][j] != 0) total += a[i] * gram_[i][j] * b[j];
  return total;
}

std::int64_t BaseSurface::determinant() const { return wfm::determinant(gram_).get_si(); }

std::optional<RationalVector> BaseSurface::cone_coordinates(const BaseClass& c) const {
  require_rank(c);
  const std::size_t p = effective_.size();
  RationalVector coeffs(p, Rational{0});
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) coeffs[i] += pivot_inverse_[i][j] * c.coords[pivot_rows_[j]];
  // The remaining rows must agree, otherwise c is outside the span.
  for (std::size_t row = 0; row < rank(); ++row) {
    Rational value = 0;
    for (std::size_t j = 0; j < p; ++j) value += coeffs[j] * effective_[j].coords[row];
    if (value != c.coords[row]) return std::nullopt;
  }
  return coeffs;
}

bool BaseSurface::is_effective(const BaseClass& c) const {
  auto coeffs = cone_coordinates(c);
  if (!coeffs) return false;
  return std::all_of(coeffs->begin(), coeffs->end(),
                     [](const Rational& x) { return x >= 0 && is_integer(x); });
}

std::vector<BaseClass> BaseSurface::enumerate_subeffective(const BaseClass& c) const {
  auto coeffs = cone_coordinates(c);
  if (!coeffs || !is_effective(c))
    throw std::invalid_argument("enumerate_subeffective: class is not effective");
  std::vector<std::int64_t> bounds;
  for (const auto& x : *coeffs) bounds.push_back(to_int64(x));

  std::vector<BaseClass> out;
  std::vector<std::int64_t> counter(bounds.size(), 0);
  while (true) {
    BaseClass sub = zero();
    for (std::size_t j = 0; j < counter.size(); ++j) sub = sub + counter[j] * effective_[j];
    out.push_back(std::move(sub));
    std::size_t j = 0;
    while (j < counter.size() && counter[j] == bounds[j]) counter[j++] = 0;
    if (j == counter.size()) break;
    ++counter[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool BaseSurface::is_ample(const RationalBaseClass& eta) const {
  for (const auto& g : effective_)
    if (pair(eta, to_rational_vector(g.coords)) <= 0) return false;
  return pair(eta, eta) > 0;
}

BaseClass BaseSurface::basis(std::size_t i) const {
  BaseClass e = zero();
  e.coords.at(i) = 1;
  return e;
}

bool BaseSurface::operator==(const BaseSurface& other) const {
  return name_ == other.name_ && gram_ == other.gram_ && canonical_ == other.canonical_ &&
         effective_ == other.effective_;
}

BasePtr make_base(std::string_view preset) {
  IntMatrix gram = preset_gram(preset);
  if (preset == "P2")
    return make_base("P2", std::move(gram), BaseClass{{-3}}, {BaseClass{{1}}});
  if (preset == "F0")
    return make_base("F0", std::move(gram), BaseClass{{-2, -2}}, {BaseClass{{1, 0}}, BaseClass{{0, 1}}});
  // F1: C0 the (-1)-section, Xi the fiber of the ruling.
  return make_base("F1", std::move(gram), BaseClass{{-2, -3}}, {BaseClass{{1, 0}}, BaseClass{{0, 1}}});
}

BasePtr make_base(std::string name, IntMatrix gram, BaseClass canonical,
                  std::vector<BaseClass> effective_generators) {
  return std::make_shared<const BaseSurface>(std::move(name), std::move(gram), std::move(canonical),
                                             std::move(effective_generators));
}

std::vector<std::string> base_preset_names() { return {"P2", "F0", "F1"}; }

}  // namespace wfm
