#pragma once

// Galois cohomology of component groups over finite fields.
//
// The absolute Galois group of F_p is procyclic, generated by Frobenius, so
// H^0 of a finite module is its Frobenius invariants and H^1 its
// coinvariants Phi / (Fr - 1) Phi. The Tamagawa torsor group at p (torsors
// split by an unramified extension) is H^1 of the component group, realized
// here as those coinvariants.

#include <stdexcept>
#include <vector>

#include "tamagawa/curve.hpp"
#include "tamagawa/group.hpp"
#include "tamagawa/tate.hpp"

namespace tamagawa {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {x : Fr(x) = x}, canonical form.
FiniteAbelianGroup invariants_subgroup(const ComponentGroupModel& model);

/// Phi / (Fr - 1) Phi, canonical form.
FiniteAbelianGroup coinvariants_quotient(const ComponentGroupModel& model);

/// H^1 of the cyclic group <sigma> of order dividing m acting on `group`:
/// ker(1 + sigma + ... + sigma^{m-1}) / im(sigma - 1). Throws
/// PreconditionError unless sigma^m = id and m >= 1.
FiniteAbelianGroup cyclic_h1(const FiniteAbelianGroup& group, const GroupAutomorphism& sigma, std::int64_t m);

/// Least m >= 1 with sigma^m = id and 1 + sigma + ... + sigma^{m-1} = 0, i.e.
/// the degree of the unramified extension over which the finite-level H^1
/// already equals the coinvariants. Every multiple of it has the same H^1.
/// Equals k * (order of Frobenius), k the exponent of the norm image.
std::int64_t stabilization_degree(const ComponentGroupModel& model);

/// The group of Tamagawa torsors at p, canonical form. Throws
/// std::logic_error if its order disagrees with c_p from Tate's algorithm.
FiniteAbelianGroup tamagawa_torsor_group(const LocalData& local);
FiniteAbelianGroup tamagawa_torsor_group(const WeierstrassCurve& curve, const Integer& p);

/// Hom(Phi, Q/Z) with Frobenius acting by f -> f o Fr, on the same
/// coordinates (f_i in Z/d_i pairs with x as sum f_i x_i / d_i).
ComponentGroupModel dual_model(const ComponentGroupModel& model);

/// Invariants of the dual module are isomorphic to the coinvariants of the
/// module, as abstract groups. For a self-dual module (every elliptic-curve
/// model) this is invariants ~ coinvariants; for general modules that
/// stronger statement can fail, e.g. Z/2 x Z/4 with (x, y) -> (x, y + 2x).
bool duality_check(const ComponentGroupModel& model);

/// a*b/n mod 1, in [0, 1).
Rational grothendieck_pairing_In(std::int64_t n, std::int64_t a, std::int64_t b);

/// For a cyclic model with Frobenius = +1 or -1: the pairing
/// (x, y) -> x*y/n restricted to invariants x coinvariants is well defined
/// and perfect. Throws UnsupportedModelError for other models.
bool induced_pairing_check(const ComponentGroupModel& model);

}  // namespace tamagawa
