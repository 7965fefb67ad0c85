#include "tamagawa/arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tamagawa {

int valuation(const Integer& x, const Integer& p) {
  if (x == 0) return kInfiniteValuation;
  if (p < 2) throw std::invalid_argument("valuation: modulus must be >= 2");
  Integer rest = x;
  int v = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rational& x, const Integer& p) {
  if (x == 0) return kInfiniteValuation;
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

Integer mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& x, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("inverse_mod: " + x.get_str() + " is not invertible mod " + m.get_str());
  }
  return r;
}

Integer exact_div(const Integer& a, const Integer& d) {
  if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
    throw std::logic_error("exact_div: " + d.get_str() + " does not divide " + a.get_str());
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

// Brent's variant of Pollard rho; n composite and odd.
Integer find_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    constexpr unsigned long kBatch = 128;
    auto step = [&](const Integer& v) { return mod(v * v + c, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mod(q * abs(x - y), n);
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Integer d = find_factor(n);
  factor_into(d, primes);
  factor_into(exact_div(n, d), primes);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor(const Integer& n) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  Integer rest = abs(n);
  std::vector<Integer> primes;
  for (unsigned long q = 2; q < 10000 && rest > 1; q += (q == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
      primes.emplace_back(q);
      rest /= q;
    }
  }
  factor_into(rest, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, int>> out;
  for (const auto& q : primes) {
    if (!out.empty() && out.back().first == q) {
      ++out.back().second;
    } else {
      out.emplace_back(q, 1);
    }
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (auto& [q, e] : factor(n)) out.push_back(q);
  return out;
}

Integer radical(const Integer& n) {
  Integer r = 1;
  for (const auto& q : prime_divisors(n)) r *= q;
  return r;
}

bool has_root_mod_p(const Integer& a, const Integer& b, const Integer& c, const Integer& p) {
  const Integer ar = mod(a, p), br = mod(b, p), cr = mod(c, p);
  if (ar == 0) return br != 0 || cr == 0;
  if (p == 2) {
    // x = 0 or x = 1
    return cr == 0 || mod(ar + br + cr, p) == 0;
  }
  const Integer disc = mod(br * br - 4 * ar * cr, p);
  return mpz_legendre(disc.get_mpz_t(), p.get_mpz_t()) != -1;
}

namespace {

// Polynomials over F_p, coefficient of x^i at index i, no trailing zeros.
using Poly = std::vector<Integer>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

// Remainder of f modulo g (g nonzero).
Poly poly_rem(Poly f, const Poly& g, const Integer& p) {
  trim(f);
  const Integer lead_inv = inverse_mod(g.back(), p);
  while (degree(f) >= degree(g)) {
    const Integer coef = mod(f.back() * lead_inv, p);
    const int shift = degree(f) - degree(g);
    for (int i = 0; i <= degree(g); ++i) {
      f[shift + i] = mod(f[shift + i] - coef * g[i], p);
    }
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  for (auto& c : prod) c = mod(c, p);
  return poly_rem(std::move(prod), m, p);
}

}  // namespace

int count_cubic_roots_mod_p(const Integer& b, const Integer& c, const Integer& d, const Integer& p) {
  const Integer br = mod(b, p), cr = mod(c, p), dr = mod(d, p);
  if (p < 64) {
    int roots = 0;
    for (Integer x = 0; x < p; ++x) {
      if (mod(((x + br) * x + cr) * x + dr, p) == 0) ++roots;
    }
    return roots;
  }
  // deg gcd(x^p - x, f) counts the distinct roots in F_p.
  const Poly f{dr, cr, br, 1};
  Poly result{1};
  Poly base{0, 1};
  const std::size_t bits = mpz_sizeinbase(p.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = poly_mulmod(result, result, f, p);
    if (mpz_tstbit(p.get_mpz_t(), i)) result = poly_mulmod(result, base, f, p);
  }
  result.resize(std::max<std::size_t>(result.size(), 2), 0);
  result[1] = mod(result[1] - 1, p);
  trim(result);
  Poly a = f, g = result;
  while (!g.empty()) {
    Poly r = poly_rem(a, g, p);
    a = std::move(g);
    g = std::move(r);
  }
  return degree(a);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint32_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::int64_t to_int64(const Integer& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t())) {
    throw std::overflow_error("integer " + x.get_str() + " does not fit in 64 bits");
  }
  return mpz_get_si(x.get_mpz_t());
}

}  // namespace tamagawa
