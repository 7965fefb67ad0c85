#pragma once

// Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q with
// integral coefficients, their standard invariants, the (u, r, s, t)
// coordinate changes between them, p-minimal models and point counts over
// prime fields.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "tamagawa/arith.hpp"

namespace tamagawa {

class SingularCurveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonIntegralModelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BadReductionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class Num>
using Coefficients = std::array<Num, 5>;

/// b-, c-invariants and discriminant of a model with coefficients in Num.
template <class Num>
struct BasicInvariants {
  Num b2, b4, b6, b8, c4, c6, discriminant;
};

template <class Num>
BasicInvariants<Num> basic_invariants(const Coefficients<Num>& a) {
  const auto& [a1, a2, a3, a4, a6] = a;
  BasicInvariants<Num> inv;
  inv.b2 = a1 * a1 + 4 * a2;
  inv.b4 = 2 * a4 + a1 * a3;
  inv.b6 = a3 * a3 + 4 * a6;
  inv.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  inv.c4 = inv.b2 * inv.b2 - 24 * inv.b4;
  inv.c6 = -inv.b2 * inv.b2 * inv.b2 + 36 * inv.b2 * inv.b4 - 216 * inv.b6;
  inv.discriminant = -inv.b2 * inv.b2 * inv.b8 - 8 * inv.b4 * inv.b4 * inv.b4 -
                     27 * inv.b6 * inv.b6 + 9 * inv.b2 * inv.b4 * inv.b6;
  return inv;
}

struct Invariants : BasicInvariants<Integer> {
  Rational j;
};

class WeierstrassCurve {
 public:
  /// Throws SingularCurveError when the discriminant vanishes.
  WeierstrassCurve(Integer a1, Integer a2, Integer a3, Integer a4, Integer a6);
  explicit WeierstrassCurve(const Coefficients<Integer>& a)
      : WeierstrassCurve(a[0], a[1], a[2], a[3], a[4]) {}

  const Integer& a1() const { return a_[0]; }
  const Integer& a2() const { return a_[1]; }
  const Integer& a3() const { return a_[2]; }
  const Integer& a4() const { return a_[3]; }
  const Integer& a6() const { return a_[4]; }
  const Coefficients<Integer>& ainvs() const { return a_; }

  const Invariants& invariants() const { return inv_; }
  const Integer& discriminant() const { return inv_.discriminant; }

  /// "[a1,a2,a3,a4,a6]"
  std::string to_string() const;

  friend bool operator==(const WeierstrassCurve& x, const WeierstrassCurve& y) { return x.a_ == y.a_; }

 private:
  Coefficients<Integer> a_;
  Invariants inv_;
};

/// Throws SingularCurveError when the discriminant is zero.
Invariants compute_invariants(const Coefficients<Integer>& a);
inline const Invariants& compute_invariants(const WeierstrassCurve& curve) { return curve.invariants(); }

/// Parses "a1,a2,a3,a4,a6" (optionally bracketed); throws std::invalid_argument.
WeierstrassCurve parse_ainvs(const std::string& text);

/// Change of coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
struct IsomorphismData {
  Rational u{1}, r{0}, s{0}, t{0};

  static IsomorphismData identity() { return {}; }

  /// Apply *this, then `next`.
  IsomorphismData then(const IsomorphismData& next) const;
  IsomorphismData inverse() const;
  bool is_identity() const { return u == 1 && r == 0 && s == 0 && t == 0; }

  friend bool operator==(const IsomorphismData&, const IsomorphismData&) = default;
};

/// Coefficients of the transformed model; any nonzero rational u is allowed.
Coefficients<Rational> transform_coefficients(const Coefficients<Rational>& a, const IsomorphismData& iso);

/// The transformed integral model. Throws NonIntegralModelError when some new
/// coefficient is not an integer and std::invalid_argument when u == 0.
WeierstrassCurve transform(const WeierstrassCurve& curve, const IsomorphismData& iso);

struct MinimalModel {
  WeierstrassCurve curve;
  /// Takes the input model to `curve`.
  IsomorphismData iso;
};

/// A model minimal at p together with the transformation reaching it.
MinimalModel minimal_model_at(const WeierstrassCurve& curve, const Integer& p);

/// A model minimal at every prime.
MinimalModel global_minimal_model(const WeierstrassCurve& curve);

struct PointCount {
  std::int64_t count;  // including the point at infinity
  std::int64_t trace;  // ell + 1 - count
};

/// #E(F_ell) by enumeration. ell must be prime and of good reduction for the
/// minimal model at ell; otherwise BadReductionError.
PointCount count_points_mod(const WeierstrassCurve& curve, std::uint32_t ell);

}  // namespace tamagawa
