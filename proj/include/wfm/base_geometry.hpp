#pragma once

// Fano base surfaces of Weierstrass fibrations: Picard lattice, canonical
// class and a simplicial effective cone.
//
// Curve and divisor classes on B share one coordinate vector. The
// intersection form is unimodular so Pic(B) and H_2(B, Z) are identified.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wfm/rational.hpp"

namespace wfm {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct BaseClass {
  std::vector<std::int64_t> coords;

  bool operator==(const BaseClass&) const = default;
  auto operator<=>(const BaseClass&) const = default;

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;

  BaseClass operator+(const BaseClass& other) const;
  BaseClass operator-(const BaseClass& other) const;
  BaseClass operator-() const;
  friend BaseClass operator*(std::int64_t c, const BaseClass& a);
};

using RationalBaseClass = RationalVector;

class BaseSurface {
 public:
  /// Validates unimodularity, symmetry, simpliciality of the effective cone
  /// and the Fano condition. Throws std::invalid_argument on violation.
  BaseSurface(std::string name, IntMatrix gram, BaseClass canonical,
              std::vector<BaseClass> effective_generators);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return gram_.size(); }
  const IntMatrix& gram() const { return gram_; }
  const BaseClass& canonical() const { return canonical_; }
  const std::vector<BaseClass>& effective_generators() const { return effective_; }

  /// a^T * gram * b.
  std::int64_t pair(const BaseClass& a, const BaseClass& b) const;
  Rational pair(const RationalBaseClass& a, const RationalBaseClass& b) const;

  std::int64_t canonical_degree(const BaseClass& c) const { return pair(canonical_, c); }
  std::int64_t determinant() const;

  /// Zero is effective.
  bool is_effective(const BaseClass& c) const;

  /// All C' with C' and C - C' effective, sorted lexicographically by coordinates.
  std::vector<BaseClass> enumerate_subeffective(const BaseClass& c) const;

  /// Nakai test against the effective generators: eta.g > 0 for all g and eta^2 > 0.
  bool is_ample(const RationalBaseClass& eta) const;

  /// Coefficients of c in the effective generators, when c lies in their span.
  std::optional<RationalVector> cone_coordinates(const BaseClass& c) const;

  BaseClass zero() const { return BaseClass{std::vector<std::int64_t>(rank(), 0)}; }
  BaseClass basis(std::size_t i) const;

  bool operator==(const BaseSurface& other) const;

 private:
  void require_rank(const BaseClass& c) const;

  std::string name_;
  IntMatrix gram_;
  BaseClass canonical_;
  std::vector<BaseClass> effective_;
  // Row-reduced data for solving generator combinations.
  std::vector<std::size_t> pivot_rows_;
  std::vector<RationalVector> pivot_inverse_;
};

using BasePtr = std::shared_ptr<const BaseSurface>;

/// Presets: "P2" (basis h), "F0" and "F1" (basis C0, Xi with Xi the fiber class).
BasePtr make_base(std::string_view preset);
BasePtr make_base(std::string name, IntMatrix gram, BaseClass canonical,
                  std::vector<BaseClass> effective_generators);

std::vector<std::string> base_preset_names();

/// Exact determinant by fraction-free elimination.
Integer determinant(const IntMatrix& m);

}  // namespace wfm
