#include "tamagawa/curve.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace tamagawa {

Invariants compute_invariants(const Coefficients<Integer>& a) {
  Invariants inv;
  static_cast<BasicInvariants<Integer>&>(inv) = basic_invariants(a);
  if (inv.discriminant == 0) {
    throw SingularCurveError("singular Weierstrass model: discriminant is zero");
  }
  inv.j = Rational(inv.c4 * inv.c4 * inv.c4, inv.discriminant);
  inv.j.canonicalize();
  return inv;
}

WeierstrassCurve::WeierstrassCurve(Integer a1, Integer a2, Integer a3, Integer a4, Integer a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)},
      inv_(compute_invariants(a_)) {}

std::string WeierstrassCurve::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) out << ',';
    out << a_[i].get_str();
  }
  out << ']';
  return out.str();
}

WeierstrassCurve parse_ainvs(const std::string& text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch != '[' && ch != ']' && ch != ' ' && ch != '\t') cleaned += ch;
  }
  Coefficients<Integer> a;
  std::size_t count = 0, start = 0;
  while (true) {
    const std::size_t comma = cleaned.find(',', start);
    const std::string field = cleaned.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (count == a.size()) throw std::invalid_argument("expected 5 coefficients in '" + text + "'");
    if (field.empty()) throw std::invalid_argument("empty coefficient in '" + text + "'");
    try {
      a[count++] = Integer(field, 10);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad coefficient '" + field + "' in '" + text + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (count != a.size()) throw std::invalid_argument("expected 5 coefficients in '" + text + "'");
  return WeierstrassCurve(a);
}

IsomorphismData IsomorphismData::then(const IsomorphismData& next) const {
  IsomorphismData out;
  out.u = u * next.u;
  out.r = r + u * u * next.r;
  out.s = s + u * next.s;
  out.t = t + u * u * u * next.t + s * u * u * next.r;
  return out;
}

IsomorphismData IsomorphismData::inverse() const {
  if (u == 0) throw std::invalid_argument("isomorphism with u = 0");
  IsomorphismData out;
  out.u = 1 / u;
  out.r = -r / (u * u);
  out.s = -s / u;
  out.t = (r * s - t) / (u * u * u);
  return out;
}

Coefficients<Rational> transform_coefficients(const Coefficients<Rational>& a, const IsomorphismData& iso) {
  if (iso.u == 0) throw std::invalid_argument("isomorphism with u = 0");
  const auto& [a1, a2, a3, a4, a6] = a;
  const auto& [u, r, s, t] = iso;
  const Rational u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  Coefficients<Rational> out;
  out[0] = (a1 + 2 * s) / u;
  out[1] = (a2 - s * a1 + 3 * r - s * s) / u2;
  out[2] = (a3 + r * a1 + 2 * t) / u3;
  out[3] = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u4;
  out[4] = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6;
  for (auto& c : out) c.canonicalize();
  return out;
}

WeierstrassCurve transform(const WeierstrassCurve& curve, const IsomorphismData& iso) {
  Coefficients<Rational> a;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = curve.ainvs()[i];
  const auto out = transform_coefficients(a, iso);
  Coefficients<Integer> integral;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].get_den() != 1) {
      throw NonIntegralModelError("transformed coefficient a" + std::to_string(i == 4 ? 6 : i + 1) +
                                  " = " + out[i].get_str() + " is not integral");
    }
    integral[i] = out[i].get_num();
  }
  return WeierstrassCurve(integral);
}

namespace {

// One u = p step for p >= 5, valid whenever v_p(disc) >= 12 and v_p(c4) >= 4.
// Clears a1 mod p, then a2 mod p^2, then a3 mod p^3; the remaining
// divisibilities follow from those of c4 and c6.
IsomorphismData reduce_step_large(const WeierstrassCurve& curve, const Integer& p) {
  const Integer p2 = p * p, p3 = p2 * p;
  IsomorphismData step;
  step.s = mod(-curve.a1() * inverse_mod(2, p), p);
  WeierstrassCurve c = transform(curve, step);
  IsomorphismData shift_r;
  shift_r.r = mod(-c.a2() * inverse_mod(3, p2), p2);
  c = transform(c, shift_r);
  IsomorphismData shift_t;
  shift_t.t = mod(-c.a3() * inverse_mod(2, p3), p3);
  IsomorphismData scale;
  scale.u = p;
  return step.then(shift_r).then(shift_t).then(scale);
}

// Exhaustive search over (r mod p^2, s mod p, t mod p^3) for a u = p
// transformation with integral result, for p = 2, 3. Complete because two
// solutions differing by an integral (1, r', s', t') are equivalent.
std::optional<IsomorphismData> reduce_step_small(const WeierstrassCurve& curve, const Integer& p) {
  const auto& [a1, a2, a3, a4, a6] = curve.ainvs();
  const Integer p2 = p * p, p3 = p2 * p, p4 = p2 * p2, p6 = p3 * p3;
  auto divides = [](const Integer& d, const Integer& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
  };
  for (Integer s = 0; s < p; ++s) {
    if (!divides(p, a1 + 2 * s)) continue;
    for (Integer r = 0; r < p2; ++r) {
      if (!divides(p2, a2 - s * a1 + 3 * r - s * s)) continue;
      for (Integer t = 0; t < p3; ++t) {
        if (!divides(p3, a3 + r * a1 + 2 * t)) continue;
        if (!divides(p4, a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t)) continue;
        if (!divides(p6, a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1)) continue;
        IsomorphismData iso;
        iso.u = p;
        iso.r = r;
        iso.s = s;
        iso.t = t;
        return iso;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

MinimalModel minimal_model_at(const WeierstrassCurve& curve, const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("minimal_model_at: " + p.get_str() + " is not prime");
  MinimalModel out{curve, IsomorphismData::identity()};
  while (valuation(out.curve.discriminant(), p) >= 12) {
    IsomorphismData step;
    if (p >= 5) {
      if (valuation(out.curve.invariants().c4, p) < 4) break;
      step = reduce_step_large(out.curve, p);
    } else {
      auto found = reduce_step_small(out.curve, p);
      if (!found) break;
      step = *found;
    }
    out.curve = transform(out.curve, step);
    out.iso = out.iso.then(step);
  }
  return out;
}

MinimalModel global_minimal_model(const WeierstrassCurve& curve) {
  MinimalModel out{curve, IsomorphismData::identity()};
  for (const auto& [p, e] : factor(curve.discriminant())) {
    if (e < 12) continue;
    auto local = minimal_model_at(out.curve, p);
    out.curve = local.curve;
    out.iso = out.iso.then(local.iso);
  }
  return out;
}

PointCount count_points_mod(const WeierstrassCurve& curve, std::uint32_t ell) {
  if (!is_prime(Integer(ell))) {
    throw std::invalid_argument("count_points_mod: " + std::to_string(ell) + " is not prime");
  }
  if (ell >= (1u << 31)) throw std::invalid_argument("count_points_mod: prime too large for enumeration");
  const Integer L(ell);
  const WeierstrassCurve* model = &curve;
  std::optional<WeierstrassCurve> minimal;
  if (mpz_divisible_ui_p(curve.discriminant().get_mpz_t(), ell)) {
    minimal = minimal_model_at(curve, L).curve;
    if (mpz_divisible_ui_p(minimal->discriminant().get_mpz_t(), ell)) {
      throw BadReductionError("curve " + curve.to_string() + " has bad reduction at " + std::to_string(ell));
    }
    model = &*minimal;
  }
  const std::int64_t l = ell;
  auto reduce = [&](const Integer& x) { return to_int64(mod(x, L)); };
  std::int64_t count = 1;
  if (ell == 2) {
    const auto a = model->ainvs();
    std::array<std::int64_t, 5> r{};
    for (std::size_t i = 0; i < 5; ++i) r[i] = reduce(a[i]);
    for (std::int64_t x = 0; x < 2; ++x) {
      for (std::int64_t y = 0; y < 2; ++y) {
        const std::int64_t lhs = y * y + r[0] * x * y + r[2] * y;
        const std::int64_t rhs = x * x * x + r[1] * x * x + r[3] * x + r[4];
        if ((lhs - rhs) % 2 == 0) ++count;
      }
    }
  } else {
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    const auto& inv = model->invariants();
    const std::int64_t b2 = reduce(inv.b2), b4 = reduce(inv.b4), b6 = reduce(inv.b6);
    std::vector<std::int8_t> chi(ell, -1);
    chi[0] = 0;
    for (std::int64_t y = 1; y < l; ++y) chi[(y * y) % l] = 1;
    for (std::int64_t x = 0; x < l; ++x) {
      const std::int64_t f = (((4 * x + b2) % l * x + 2 * b4) % l * x + b6) % l;
      count += 1 + chi[f];
    }
  }
  return {count, l + 1 - count};
}

}  // namespace tamagawa
