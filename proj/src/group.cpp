#include "tamagawa/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tamagawa {

namespace {

std::vector<std::pair<std::int64_t, int>> factor_small(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t mod_pos(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix multiply_unchecked(const FiniteAbelianGroup& group, const Matrix& a, const Matrix& b) {
  const std::size_t k = group.rank();
  Matrix out(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t d = group.factors()[i];
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l < k; ++l) acc = (acc + a[i][l] * b[l][j]) % d;
      out[i][j] = acc;
    }
  }
  return out;
}

bool is_identity_matrix(const FiniteAbelianGroup& group, const Matrix& m) {
  for (std::size_t i = 0; i < group.rank(); ++i) {
    const std::int64_t d = group.factors()[i];
    for (std::size_t j = 0; j < group.rank(); ++j) {
      if (mod_pos(m[i][j], d) != mod_pos(i == j ? 1 : 0, d)) return false;
    }
  }
  return true;
}

Matrix identity_matrix(const FiniteAbelianGroup& group) {
  const std::size_t k = group.rank();
  Matrix m(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = mod_pos(1, group.factors()[i]);
  return m;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  for (std::int64_t d : factors_) {
    if (d < 1) throw std::invalid_argument("cyclic factor orders must be >= 1");
    if (order_ > kMaxGroupOrder / d) throw std::invalid_argument("group order exceeds enumeration limit");
    order_ *= d;
  }
}

FiniteAbelianGroup FiniteAbelianGroup::canonical() const {
  return group_from_torsion_counts(order_, [this](std::int64_t m) { return torsion_count(m); });
}

bool FiniteAbelianGroup::is_canonical() const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) return false;
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0) return false;
  }
  return true;
}

std::int64_t FiniteAbelianGroup::torsion_count(std::int64_t m) const {
  std::int64_t count = 1;
  for (std::int64_t d : factors_) count *= std::gcd(m, d);
  return count;
}

std::vector<std::int64_t> FiniteAbelianGroup::decode(std::int64_t index) const {
  std::vector<std::int64_t> coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    coords[i] = index % factors_[i];
    index /= factors_[i];
  }
  return coords;
}

std::int64_t FiniteAbelianGroup::encode(const std::vector<std::int64_t>& coords) const {
  std::int64_t index = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) index = index * factors_[i] + mod_pos(coords[i], factors_[i]);
  return index;
}

std::int64_t FiniteAbelianGroup::add(std::int64_t x, std::int64_t y) const {
  std::int64_t out = 0, place = 1;
  for (std::int64_t d : factors_) {
    out += ((x % d + y % d) % d) * place;
    x /= d;
    y /= d;
    place *= d;
  }
  return out;
}

std::int64_t FiniteAbelianGroup::negate(std::int64_t x) const {
  std::int64_t out = 0, place = 1;
  for (std::int64_t d : factors_) {
    out += ((d - x % d) % d) * place;
    x /= d;
    place *= d;
  }
  return out;
}

std::int64_t FiniteAbelianGroup::multiply(std::int64_t m, std::int64_t x) const {
  std::int64_t out = 0, place = 1;
  for (std::int64_t d : factors_) {
    out += mod_pos((m % d) * (x % d), d) * place;
    x /= d;
    place *= d;
  }
  return out;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out << " x ";
    out << "Z/" << factors_[i];
  }
  return out.str();
}

FiniteAbelianGroup group_from_torsion_counts(std::int64_t order,
                                             const std::function<std::int64_t(std::int64_t)>& torsion_count) {
  // Per prime q: t_k = log_q #G[q^k] = sum_i min(k, e_i), so t_k - t_{k-1}
  // counts the elementary divisors q^{e_i} with e_i >= k.
  std::vector<std::vector<std::int64_t>> per_prime;  // elementary divisors, descending
  for (const auto& [q, e] : factor_small(order)) {
    std::vector<int> at_least(e + 2, 0);
    int previous = 0;
    std::int64_t qk = 1;
    for (int k = 1; k <= e; ++k) {
      qk *= q;
      std::int64_t count = torsion_count(qk);
      int t = 0;
      while (count % q == 0) {
        count /= q;
        ++t;
      }
      if (count != 1 || t < previous) throw std::logic_error("torsion counts are not those of an abelian group");
      at_least[k] = t - previous;
      previous = t;
    }
    if (previous != e) throw std::logic_error("torsion counts do not exhaust the group order");
    std::vector<std::int64_t> divisors;
    for (int k = e; k >= 1; --k) {
      const int exactly = at_least[k] - at_least[k + 1];
      if (exactly < 0) throw std::logic_error("torsion counts are not those of an abelian group");
      std::int64_t power = 1;
      for (int i = 0; i < k; ++i) power *= q;
      for (int i = 0; i < exactly; ++i) divisors.push_back(power);
    }
    per_prime.push_back(std::move(divisors));
  }
  std::size_t length = 0;
  for (const auto& d : per_prime) length = std::max(length, d.size());
  std::vector<std::int64_t> factors(length, 1);
  // Largest invariant factor gathers the largest power of each prime.
  for (const auto& divisors : per_prime) {
    for (std::size_t i = 0; i < divisors.size(); ++i) factors[length - 1 - i] *= divisors[i];
  }
  return FiniteAbelianGroup(std::move(factors));
}

GroupAutomorphism::GroupAutomorphism(const FiniteAbelianGroup& group, std::vector<std::vector<std::int64_t>> matrix)
    : matrix_(std::move(matrix)) {
  const std::size_t k = group.rank();
  if (matrix_.size() != k) throw std::invalid_argument("automorphism matrix has wrong number of rows");
  for (std::size_t i = 0; i < k; ++i) {
    if (matrix_[i].size() != k) throw std::invalid_argument("automorphism matrix is not square");
    for (auto& entry : matrix_[i]) entry = mod_pos(entry, group.factors()[i]);
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      if ((matrix_[i][j] * group.factors()[j]) % group.factors()[i] != 0) {
        throw std::invalid_argument("matrix does not define a homomorphism of " + group.to_string());
      }
    }
  }
  std::vector<bool> hit(static_cast<std::size_t>(group.order()), false);
  for (std::int64_t x = 0; x < group.order(); ++x) {
    const auto y = static_cast<std::size_t>(apply(group, x));
    if (hit[y]) throw std::invalid_argument("matrix is not invertible on " + group.to_string());
    hit[y] = true;
  }
}

GroupAutomorphism GroupAutomorphism::identity(const FiniteAbelianGroup& group) {
  GroupAutomorphism out;
  out.matrix_ = identity_matrix(group);
  return out;
}

GroupAutomorphism GroupAutomorphism::negation(const FiniteAbelianGroup& group) {
  GroupAutomorphism out;
  out.matrix_ = identity_matrix(group);
  for (std::size_t i = 0; i < group.rank(); ++i) out.matrix_[i][i] = mod_pos(-1, group.factors()[i]);
  return out;
}

std::int64_t GroupAutomorphism::apply(const FiniteAbelianGroup& group, std::int64_t x) const {
  if (group.rank() == 0) return 0;
  const auto coords = group.decode(x);
  std::int64_t out = 0, place = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::int64_t d = group.factors()[i];
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < coords.size(); ++j) acc = (acc + matrix_[i][j] * coords[j]) % d;
    out += acc * place;
    place *= d;
  }
  return out;
}

GroupAutomorphism GroupAutomorphism::compose(const FiniteAbelianGroup& group, const GroupAutomorphism& inner) const {
  GroupAutomorphism out;
  out.matrix_ = multiply_unchecked(group, matrix_, inner.matrix_);
  return out;
}

GroupAutomorphism GroupAutomorphism::power(const FiniteAbelianGroup& group, std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("negative automorphism power");
  Matrix result = identity_matrix(group);
  Matrix base = matrix_;
  while (k > 0) {
    if (k & 1) result = multiply_unchecked(group, result, base);
    base = multiply_unchecked(group, base, base);
    k >>= 1;
  }
  GroupAutomorphism out;
  out.matrix_ = std::move(result);
  return out;
}

bool GroupAutomorphism::is_identity(const FiniteAbelianGroup& group) const {
  return is_identity_matrix(group, matrix_);
}

std::int64_t GroupAutomorphism::order(const FiniteAbelianGroup& group) const {
  Matrix current = matrix_;
  for (std::int64_t d = 1;; ++d) {
    if (is_identity_matrix(group, current)) return d;
    current = multiply_unchecked(group, current, matrix_);
  }
}

ComponentGroupModel ComponentGroupModel::cyclic(std::int64_t n, bool frobenius_negates) {
  const auto group = FiniteAbelianGroup::cyclic(n);
  return {group, frobenius_negates ? GroupAutomorphism::negation(group) : GroupAutomorphism::identity(group)};
}

}  // namespace tamagawa
