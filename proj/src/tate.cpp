#include "tamagawa/tate.hpp"

#include <stdexcept>

namespace tamagawa {

std::string KodairaType::to_string() const {
  switch (family) {
    case Family::I: return "I" + std::to_string(n);
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::IStar: return "I" + std::to_string(n) + "*";
    case Family::IVStar: return "IV*";
    case Family::IIIStar: return "III*";
    case Family::IIStar: return "II*";
  }
  return "?";
}

KodairaType KodairaType::parse(std::string_view text) {
  if (text == "II") return {Family::II, 0};
  if (text == "III") return {Family::III, 0};
  if (text == "IV") return {Family::IV, 0};
  if (text == "IV*") return {Family::IVStar, 0};
  if (text == "III*") return {Family::IIIStar, 0};
  if (text == "II*") return {Family::IIStar, 0};
  const bool star = !text.empty() && text.back() == '*';
  std::string_view digits = text.substr(0, text.size() - (star ? 1 : 0));
  if (digits.size() < 2 || digits.front() != 'I') throw std::invalid_argument("bad Kodaira symbol '" + std::string(text) + "'");
  digits.remove_prefix(1);
  int n = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad Kodaira symbol '" + std::string(text) + "'");
    n = n * 10 + (ch - '0');
  }
  if (digits.size() > 1 && digits.front() == '0') throw std::invalid_argument("bad Kodaira symbol '" + std::string(text) + "'");
  return {star ? Family::IStar : Family::I, n};
}

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::Good: return "good";
    case ReductionKind::SplitMultiplicative: return "split_multiplicative";
    case ReductionKind::NonsplitMultiplicative: return "nonsplit_multiplicative";
    case ReductionKind::Additive: return "additive";
  }
  return "?";
}

namespace {

// Mutable working model for the algorithm; only u = 1 changes are applied.
struct WorkingModel {
  Integer a1, a2, a3, a4, a6;

  explicit WorkingModel(const WeierstrassCurve& c) : a1(c.a1()), a2(c.a2()), a3(c.a3()), a4(c.a4()), a6(c.a6()) {}

  Integer b2() const { return a1 * a1 + 4 * a2; }
  Integer b6() const { return a3 * a3 + 4 * a6; }
  Integer b8() const { return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }

  void rst(const Integer& r, const Integer& s, const Integer& t) {
    const Integer n1 = a1 + 2 * s;
    const Integer n2 = a2 - s * a1 + 3 * r - s * s;
    const Integer n3 = a3 + r * a1 + 2 * t;
    const Integer n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
    const Integer n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    a1 = n1;
    a2 = n2;
    a3 = n3;
    a4 = n4;
    a6 = n6;
  }
};

bool divisible(const Integer& x, const Integer& p) { return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0; }

// Translate so the singular point of the reduction mod p is (0, 0).
void move_singular_point_to_origin(WorkingModel& m, const Integer& p) {
  const auto inv = basic_invariants<Integer>({m.a1, m.a2, m.a3, m.a4, m.a6});
  Integer r, t;
  if (p == 2) {
    if (divisible(inv.b2, p)) {
      r = m.a4;
      t = ((r + m.a2) * r + m.a4) * r + m.a6;
    } else {
      r = m.a3;  // a1 is odd, so a1^{-1} = 1 mod 2
      t = m.a4 + r * r;
    }
  } else if (p == 3) {
    r = divisible(inv.b2, p) ? Integer(-inv.b6) : Integer(-inverse_mod(inv.b2, p) * inv.b4);
    t = m.a1 * r + m.a3;
  } else {
    if (divisible(inv.c4, p)) {
      r = -inverse_mod(12, p) * inv.b2;
    } else {
      r = -inverse_mod(12 * inv.c4, p) * (inv.c6 + inv.b2 * inv.c4);
    }
    t = -inverse_mod(2, p) * (m.a1 * r + m.a3);
  }
  m.rst(mod(r, p), 0, mod(t, p));
  if (!divisible(m.a3, p) || !divisible(m.a4, p) || !divisible(m.a6, p)) {
    throw std::logic_error("Tate's algorithm: singular point not moved to the origin at p = " + p.get_str());
  }
}

// (Z/2)^2 with Frobenius permuting the three nonzero elements like it
// permutes the roots of the auxiliary cubic.
ComponentGroupModel klein_model(int rational_roots) {
  const FiniteAbelianGroup klein({2, 2});
  switch (rational_roots) {
    case 3: return {klein, GroupAutomorphism::identity(klein)};
    case 1: return {klein, GroupAutomorphism(klein, {{0, 1}, {1, 0}})};
    case 0: return {klein, GroupAutomorphism(klein, {{0, 1}, {1, 1}})};
    default: throw std::logic_error("Tate's algorithm: cubic with a repeated root in the I0* branch");
  }
}

// I_n*, n >= 1: Z/4 for n odd, (Z/2)^2 for n even; Frobenius is trivial
// exactly when all four far components are rational.
ComponentGroupModel i_star_model(int n, bool all_rational) {
  if (n % 2 == 1) return ComponentGroupModel::cyclic(4, !all_rational);
  const FiniteAbelianGroup klein({2, 2});
  if (all_rational) return {klein, GroupAutomorphism::identity(klein)};
  return {klein, GroupAutomorphism(klein, {{0, 1}, {1, 0}})};
}

// Tate's algorithm on a p-minimal model with p | disc.
LocalData classify_bad_fibre(const WeierstrassCurve& minimal, const Integer& p, int v_disc) {
  LocalData ld;
  ld.p = p;
  ld.v_disc = v_disc;
  ld.kind = ReductionKind::Additive;

  const Integer p2 = p * p, p3 = p2 * p, p4 = p2 * p2;
  const Integer half = p == 2 ? Integer(0) : inverse_mod(2, p);
  auto val = [&p](const Integer& x) { return valuation(x, p); };

  WorkingModel m(minimal);
  move_singular_point_to_origin(m, p);

  if (!divisible(m.b2(), p)) {
    // Node at the origin: split iff its tangent directions y^2 + a1 xy - a2 x^2 are rational.
    const bool split = has_root_mod_p(1, m.a1, -m.a2, p);
    ld.kind = split ? ReductionKind::SplitMultiplicative : ReductionKind::NonsplitMultiplicative;
    ld.kodaira = KodairaType::multiplicative(v_disc);
    ld.conductor_exponent = 1;
    ld.tamagawa = split ? v_disc : (v_disc % 2 == 0 ? 2 : 1);
    ld.phi = ComponentGroupModel::cyclic(v_disc, !split);
    return ld;
  }

  if (val(m.a6) < 2) {
    ld.kodaira = {KodairaType::Family::II, 0};
    ld.conductor_exponent = v_disc;
    ld.tamagawa = 1;
    ld.phi = ComponentGroupModel::trivial();
    return ld;
  }
  if (val(m.b8()) < 3) {
    ld.kodaira = {KodairaType::Family::III, 0};
    ld.conductor_exponent = v_disc - 1;
    ld.tamagawa = 2;
    ld.phi = ComponentGroupModel::cyclic(2, false);
    return ld;
  }
  if (val(m.b6()) < 3) {
    const bool rational = has_root_mod_p(1, exact_div(m.a3, p), -exact_div(m.a6, p2), p);
    ld.kodaira = {KodairaType::Family::IV, 0};
    ld.conductor_exponent = v_disc - 2;
    ld.tamagawa = rational ? 3 : 1;
    ld.phi = ComponentGroupModel::cyclic(3, !rational);
    return ld;
  }

  // Arrange p | a1, a2; p^2 | a3, a4; p^3 | a6.
  {
    Integer s, t;
    if (p == 2) {
      s = mod(m.a2, p);
      t = p * mod(exact_div(m.a6, p2), p);
    } else if (p == 3) {
      s = m.a1;
      t = m.a3;
    } else {
      s = -m.a1 * half;
      t = -m.a3 * half;
    }
    m.rst(0, s, t);
  }

  // Auxiliary cubic T^3 + b T^2 + c T + d.
  const Integer b = exact_div(m.a2, p), c = exact_div(m.a4, p2), d = exact_div(m.a6, p3);
  const Integer w = 27 * d * d - b * b * c * c + 4 * b * b * b * d - 18 * b * c * d + 4 * c * c * c;
  const Integer x = 3 * c - b * b;

  if (!divisible(w, p)) {
    const int roots = count_cubic_roots_mod_p(b, c, d, p);
    ld.kodaira = KodairaType::i_star(0);
    ld.conductor_exponent = v_disc - 4;
    ld.tamagawa = 1 + roots;
    ld.phi = klein_model(roots);
    return ld;
  }

  if (!divisible(x, p)) {
    // Double root: move it to T = 0 and run the I_n* subprocedure.
    Integer r;
    if (p == 2) {
      r = mod(c, p);
    } else if (p == 3) {
      r = c * inverse_mod(b, p);
    } else {
      r = (b * c - 9 * d) * inverse_mod(2 * x, p);
    }
    m.rst(p * mod(r, p), 0, 0);

    int ix = 3, iy = 3;
    Integer mx = p2, my = p2;
    bool all_rational = false;
    while (true) {
      Integer a2t = exact_div(m.a2, p);
      Integer a3t = exact_div(m.a3, my);
      Integer a4t = exact_div(m.a4, p * mx);
      Integer a6t = exact_div(m.a6, mx * my);
      if (!divisible(a3t * a3t + 4 * a6t, p)) {
        all_rational = has_root_mod_p(1, a3t, -a6t, p);
        break;
      }
      const Integer t = p == 2 ? Integer(my * mod(a6t, p)) : Integer(my * mod(-a3t * half, p));
      m.rst(0, 0, t);
      my *= p;
      ++iy;
      a2t = exact_div(m.a2, p);
      a3t = exact_div(m.a3, my);
      a4t = exact_div(m.a4, p * mx);
      a6t = exact_div(m.a6, mx * my);
      if (!divisible(a4t * a4t - 4 * a6t * a2t, p)) {
        all_rational = has_root_mod_p(a2t, a4t, a6t, p);
        break;
      }
      const Integer r2 = p == 2 ? Integer(mx * mod(a6t * inverse_mod(a2t, p), p))
                                : Integer(mx * mod(-a4t * inverse_mod(2 * a2t, p), p));
      m.rst(r2, 0, 0);
      mx *= p;
      ++ix;
    }
    const int n = ix + iy - 5;
    ld.kodaira = KodairaType::i_star(n);
    ld.conductor_exponent = v_disc - ix - iy + 1;
    ld.tamagawa = all_rational ? 4 : 2;
    ld.phi = i_star_model(n, all_rational);
    return ld;
  }

  // Triple root: move it to T = 0.
  {
    Integer r;
    if (p == 2) {
      r = b;
    } else if (p == 3) {
      r = -d;
    } else {
      r = -b * inverse_mod(3, p);
    }
    m.rst(p * mod(r, p), 0, 0);
  }
  const Integer x3 = exact_div(m.a3, p2), x6 = exact_div(m.a6, p4);
  if (!divisible(x3 * x3 + 4 * x6, p)) {
    const bool rational = has_root_mod_p(1, x3, -x6, p);
    ld.kodaira = {KodairaType::Family::IVStar, 0};
    ld.conductor_exponent = v_disc - 6;
    ld.tamagawa = rational ? 3 : 1;
    ld.phi = ComponentGroupModel::cyclic(3, !rational);
    return ld;
  }
  {
    const Integer t = p == 2 ? Integer(-p2 * mod(x6, p)) : Integer(p2 * mod(-x3 * half, p));
    m.rst(0, 0, t);
  }
  if (val(m.a4) < 4) {
    ld.kodaira = {KodairaType::Family::IIIStar, 0};
    ld.conductor_exponent = v_disc - 7;
    ld.tamagawa = 2;
    ld.phi = ComponentGroupModel::cyclic(2, false);
    return ld;
  }
  if (val(m.a6) < 6) {
    ld.kodaira = {KodairaType::Family::IIStar, 0};
    ld.conductor_exponent = v_disc - 8;
    ld.tamagawa = 1;
    ld.phi = ComponentGroupModel::trivial();
    return ld;
  }
  throw std::logic_error("Tate's algorithm reached the non-minimal branch on a model reported minimal at p = " +
                         p.get_str());
}

}  // namespace

ReductionKind reduction_kind(const WeierstrassCurve& curve, const Integer& p) {
  const WeierstrassCurve minimal = minimal_model_at(curve, p).curve;
  if (!divisible(minimal.discriminant(), p)) return ReductionKind::Good;
  if (divisible(minimal.invariants().c4, p)) return ReductionKind::Additive;
  WorkingModel m(minimal);
  move_singular_point_to_origin(m, p);
  return has_root_mod_p(1, m.a1, -m.a2, p) ? ReductionKind::SplitMultiplicative
                                           : ReductionKind::NonsplitMultiplicative;
}

LocalData tate_local_data(const WeierstrassCurve& curve, const Integer& p) {
  const WeierstrassCurve minimal = minimal_model_at(curve, p).curve;
  const int v_disc = valuation(minimal.discriminant(), p);
  if (v_disc == 0) {
    LocalData ld;
    ld.p = p;
    ld.kodaira = KodairaType::good();
    ld.phi = ComponentGroupModel::trivial();
    return ld;
  }
  return classify_bad_fibre(minimal, p, v_disc);
}

std::vector<LocalData> all_local_data(const WeierstrassCurve& curve) {
  const WeierstrassCurve minimal = global_minimal_model(curve).curve;
  std::vector<LocalData> out;
  for (const auto& p : prime_divisors(minimal.discriminant())) {
    out.push_back(classify_bad_fibre(minimal, p, valuation(minimal.discriminant(), p)));
  }
  return out;
}

Integer conductor(const std::vector<LocalData>& local) {
  Integer n = 1;
  for (const auto& ld : local) {
    Integer pf;
    mpz_pow_ui(pf.get_mpz_t(), ld.p.get_mpz_t(), static_cast<unsigned long>(ld.conductor_exponent));
    n *= pf;
  }
  return n;
}

Integer tamagawa_product(const std::vector<LocalData>& local) {
  Integer c = 1;
  for (const auto& ld : local) c *= ld.tamagawa;
  return c;
}

}  // namespace tamagawa
