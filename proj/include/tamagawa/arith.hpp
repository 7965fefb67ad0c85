#pragma once

// Exact integer helpers shared by the curve and reduction code. Everything
// here works on GMP integers; nothing touches floating point.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace tamagawa {

using Integer = mpz_class;
using Rational = mpq_class;

/// Valuation reported for zero.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// p-adic valuation of x; kInfiniteValuation when x == 0.
int valuation(const Integer& x, const Integer& p);

/// p-adic valuation of a nonzero rational; kInfiniteValuation for zero.
int valuation(const Rational& x, const Integer& p);

/// Least nonnegative residue of x modulo m (m > 0).
Integer mod(const Integer& x, const Integer& m);

/// Inverse of x modulo m; throws std::domain_error when gcd(x, m) != 1.
Integer inverse_mod(const Integer& x, const Integer& m);

/// a / d, throwing std::logic_error if d does not divide a. Used where the
/// algorithm guarantees divisibility, so a throw is always a bug.
Integer exact_div(const Integer& a, const Integer& d);

bool is_prime(const Integer& n);

/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, int>> factor(const Integer& n);

/// The primes dividing n, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

/// Product of the distinct primes dividing n.
Integer radical(const Integer& n);

/// Whether a*x^2 + b*x + c has a root in F_p.
bool has_root_mod_p(const Integer& a, const Integer& b, const Integer& c, const Integer& p);

/// Number of distinct roots in F_p of the monic cubic x^3 + b*x^2 + c*x + d.
int count_cubic_roots_mod_p(const Integer& b, const Integer& c, const Integer& d, const Integer& p);

/// All primes <= bound in ascending order (sieve).
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

/// The integer as int64, throwing std::overflow_error if it does not fit.
std::int64_t to_int64(const Integer& x);

}  // namespace tamagawa
