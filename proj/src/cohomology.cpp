#include "tamagawa/cohomology.hpp"

#include <numeric>
#include <string>

namespace tamagawa {

namespace {

using Membership = std::vector<bool>;

std::int64_t count_members(const Membership& set) {
  std::int64_t n = 0;
  for (bool b : set) n += b ? 1 : 0;
  return n;
}

// Structure of numerator / denominator for subgroups denominator <= numerator
// of `group`, both given by membership tables. The m-torsion of the quotient
// is {x in numerator : m x in denominator} / denominator.
FiniteAbelianGroup subquotient(const FiniteAbelianGroup& group, const Membership& numerator,
                               const Membership& denominator) {
  const std::int64_t num = count_members(numerator), den = count_members(denominator);
  if (den == 0 || num % den != 0) throw std::logic_error("subquotient: denominator is not a subgroup");
  return group_from_torsion_counts(num / den, [&](std::int64_t m) {
    std::int64_t hits = 0;
    for (std::int64_t x = 0; x < group.order(); ++x) {
      if (numerator[x] && denominator[group.multiply(m, x)]) ++hits;
    }
    return hits / den;
  });
}

Membership image_of_sigma_minus_one(const FiniteAbelianGroup& group, const GroupAutomorphism& sigma) {
  Membership image(static_cast<std::size_t>(group.order()), false);
  for (std::int64_t x = 0; x < group.order(); ++x) {
    image[group.add(sigma.apply(group, x), group.negate(x))] = true;
  }
  return image;
}

void require_cyclic_sign_model(const ComponentGroupModel& model, std::int64_t& n, bool& negates) {
  if (model.group.rank() == 0) {
    n = 1;
    negates = false;
    return;
  }
  if (model.group.rank() != 1) {
    throw UnsupportedModelError("pairing check needs a cyclic component group, got " + model.group.to_string());
  }
  n = model.group.factors()[0];
  const std::int64_t entry = model.frobenius.matrix()[0][0];
  if (entry == 1 % n) {
    negates = false;
  } else if (entry == (n - 1) % n) {
    negates = true;
  } else {
    throw UnsupportedModelError("pairing check needs Frobenius = +1 or -1 on Z/" + std::to_string(n));
  }
}

}  // namespace

FiniteAbelianGroup invariants_subgroup(const ComponentGroupModel& model) {
  const auto& g = model.group;
  Membership fixed(static_cast<std::size_t>(g.order()), false), zero(static_cast<std::size_t>(g.order()), false);
  for (std::int64_t x = 0; x < g.order(); ++x) fixed[x] = model.frobenius.apply(g, x) == x;
  zero[0] = true;
  return subquotient(g, fixed, zero);
}

FiniteAbelianGroup coinvariants_quotient(const ComponentGroupModel& model) {
  const auto& g = model.group;
  const Membership all(static_cast<std::size_t>(g.order()), true);
  return subquotient(g, all, image_of_sigma_minus_one(g, model.frobenius));
}

FiniteAbelianGroup cyclic_h1(const FiniteAbelianGroup& group, const GroupAutomorphism& sigma, std::int64_t m) {
  if (m < 1) throw PreconditionError("cyclic_h1: m must be positive");
  if (sigma.matrix().size() != group.rank()) throw PreconditionError("cyclic_h1: automorphism does not match group");
  // N = 1 when m = 1, so ker N = 0 whatever sigma is
  if (m == 1) return FiniteAbelianGroup::trivial();
  if (!sigma.power(group, m).is_identity(group)) {
    throw PreconditionError("cyclic_h1: sigma^" + std::to_string(m) + " is not the identity");
  }
  Membership norm_kernel(static_cast<std::size_t>(group.order()), false);
  for (std::int64_t x = 0; x < group.order(); ++x) {
    std::int64_t sum = 0, y = x;
    for (std::int64_t i = 0; i < m; ++i) {
      sum = group.add(sum, y);
      y = sigma.apply(group, y);
    }
    norm_kernel[x] = sum == 0;
  }
  return subquotient(group, norm_kernel, image_of_sigma_minus_one(group, sigma));
}

std::int64_t stabilization_degree(const ComponentGroupModel& model) {
  const auto& g = model.group;
  const std::int64_t d = model.frobenius_order();
  // N_{kd} = k * N_d once sigma^d = id
  std::int64_t k = 1;
  for (std::int64_t x = 0; x < g.order(); ++x) {
    std::int64_t sum = 0, y = x;
    for (std::int64_t i = 0; i < d; ++i) {
      sum = g.add(sum, y);
      y = model.frobenius.apply(g, y);
    }
    std::int64_t additive_order = 1;
    for (std::int64_t z = sum; z != 0; z = g.add(z, sum)) ++additive_order;
    k = std::lcm(k, additive_order);
  }
  return k * d;
}

FiniteAbelianGroup tamagawa_torsor_group(const LocalData& local) {
  auto tt = coinvariants_quotient(local.phi);
  if (tt.order() != local.tamagawa) {
    throw std::logic_error("torsor group of order " + std::to_string(tt.order()) + " at p = " + local.p.get_str() +
                           " disagrees with Tamagawa number " + std::to_string(local.tamagawa));
  }
  return tt;
}

FiniteAbelianGroup tamagawa_torsor_group(const WeierstrassCurve& curve, const Integer& p) {
  return tamagawa_torsor_group(tate_local_data(curve, p));
}

ComponentGroupModel dual_model(const ComponentGroupModel& model) {
  const auto& g = model.group;
  const auto& d = g.factors();
  const auto& m = model.frobenius.matrix();
  // f = (f_i) means x -> sum f_i x_i / d_i; (f o sigma)_j = d_j * sum_i f_i M_ij / d_i
  std::vector<std::vector<std::int64_t>> dual(g.rank(), std::vector<std::int64_t>(g.rank()));
  for (std::size_t i = 0; i < g.rank(); ++i) {
    for (std::size_t j = 0; j < g.rank(); ++j) dual[j][i] = (m[i][j] * d[j] / d[i]) % d[j];
  }
  return {g, GroupAutomorphism(g, std::move(dual))};
}

bool duality_check(const ComponentGroupModel& model) {
  return invariants_subgroup(dual_model(model)) == coinvariants_quotient(model);
}

Rational grothendieck_pairing_In(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 1) throw std::invalid_argument("grothendieck_pairing_In: n must be positive");
  const Integer prod = mod(Integer(a) * Integer(b), Integer(n));
  Rational out(prod, Integer(n));
  out.canonicalize();
  return out;
}

bool induced_pairing_check(const ComponentGroupModel& model) {
  std::int64_t n = 1;
  bool negates = false;
  require_cyclic_sign_model(model, n, negates);
  if (n == 1) return true;

  std::vector<std::int64_t> invariants;
  for (std::int64_t x = 0; x < n; ++x) {
    if ((negates ? (n - x) % n : x) == x) invariants.push_back(x);
  }
  // (Fr - 1) Phi is 0 for the trivial action and 2 Phi for negation.
  Membership image(static_cast<std::size_t>(n), false);
  for (std::int64_t y = 0; y < n; ++y) image[negates ? (2 * y) % n : 0] = true;

  // Well defined: pairing with the image vanishes.
  for (std::int64_t x : invariants) {
    for (std::int64_t i = 0; i < n; ++i) {
      if (image[i] && grothendieck_pairing_In(n, x, i) != 0) return false;
    }
  }
  // Coset representatives of Phi / image.
  std::vector<std::int64_t> cosets;
  Membership covered(static_cast<std::size_t>(n), false);
  for (std::int64_t y = 0; y < n; ++y) {
    if (covered[y]) continue;
    cosets.push_back(y);
    for (std::int64_t i = 0; i < n; ++i) {
      if (image[i]) covered[(y + i) % n] = true;
    }
  }
  if (cosets.size() != invariants.size()) return false;
  // Perfect: both annihilators are trivial.
  for (std::int64_t x : invariants) {
    if (x == 0) continue;
    bool detected = false;
    for (std::int64_t y : cosets) detected = detected || grothendieck_pairing_In(n, x, y) != 0;
    if (!detected) return false;
  }
  for (std::int64_t y : cosets) {
    if (y == 0) continue;
    bool detected = false;
    for (std::int64_t x : invariants) detected = detected || grothendieck_pairing_In(n, x, y) != 0;
    if (!detected) return false;
  }
  return true;
}

}  // namespace tamagawa
