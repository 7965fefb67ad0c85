#pragma once

// Finite abelian groups presented as products of cyclic factors, their
// automorphisms as integer matrices, and component groups with Frobenius.
//
// Elements are encoded as a single index in mixed radix (first factor is the
// least significant digit); every computation on them is exhaustive, so the
// group order is capped at kMaxGroupOrder.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tamagawa {

inline constexpr std::int64_t kMaxGroupOrder = 1'000'000;

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Each factor must be >= 1; the product must not exceed kMaxGroupOrder.
  explicit FiniteAbelianGroup(std::vector<std::int64_t> factors);

  static FiniteAbelianGroup trivial() { return {}; }
  static FiniteAbelianGroup cyclic(std::int64_t n) { return FiniteAbelianGroup({n}); }

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  /// Invariant factors d_1 | d_2 | ... | d_k, all > 1 (empty for the trivial group).
  FiniteAbelianGroup canonical() const;
  bool is_canonical() const;

  /// #{x : m x = 0}.
  std::int64_t torsion_count(std::int64_t m) const;

  // Element arithmetic on encoded indices.
  std::vector<std::int64_t> decode(std::int64_t index) const;
  std::int64_t encode(const std::vector<std::int64_t>& coords) const;
  std::int64_t add(std::int64_t x, std::int64_t y) const;
  std::int64_t negate(std::int64_t x) const;
  std::int64_t multiply(std::int64_t m, std::int64_t x) const;

  /// "Z/2 x Z/4", "0" for the trivial group.
  std::string to_string() const;

  /// Same factor list (compare canonical() forms for isomorphism).
  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
};

/// The group of the given order whose m-torsion has torsion_count(m)
/// elements, for every m; returned in canonical form. The callback is
/// queried only at prime powers dividing the order.
FiniteAbelianGroup group_from_torsion_counts(std::int64_t order,
                                             const std::function<std::int64_t(std::int64_t)>& torsion_count);

/// Endomorphism of a FiniteAbelianGroup given by an integer matrix acting
/// on coordinate columns; row i is read modulo the i-th factor.
class GroupAutomorphism {
 public:
  GroupAutomorphism() = default;
  /// Throws std::invalid_argument unless the matrix is a well-defined
  /// bijection of `group`.
  GroupAutomorphism(const FiniteAbelianGroup& group, std::vector<std::vector<std::int64_t>> matrix);

  static GroupAutomorphism identity(const FiniteAbelianGroup& group);
  static GroupAutomorphism negation(const FiniteAbelianGroup& group);

  /// Entries reduced into [0, d_i).
  const std::vector<std::vector<std::int64_t>>& matrix() const { return matrix_; }

  std::int64_t apply(const FiniteAbelianGroup& group, std::int64_t x) const;

  GroupAutomorphism compose(const FiniteAbelianGroup& group, const GroupAutomorphism& inner) const;
  GroupAutomorphism power(const FiniteAbelianGroup& group, std::int64_t k) const;
  bool is_identity(const FiniteAbelianGroup& group) const;

  /// Least d >= 1 with sigma^d = id.
  std::int64_t order(const FiniteAbelianGroup& group) const;

  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;

 private:
  std::vector<std::vector<std::int64_t>> matrix_;
};

/// Component group of the special fibre over the algebraic closure of the
/// residue field, with the action of Frobenius.
struct ComponentGroupModel {
  FiniteAbelianGroup group;
  GroupAutomorphism frobenius;

  static ComponentGroupModel trivial() { return {FiniteAbelianGroup::trivial(), GroupAutomorphism{}}; }
  static ComponentGroupModel cyclic(std::int64_t n, bool frobenius_negates);

  /// Splitting degree: the order of Frobenius.
  std::int64_t frobenius_order() const { return frobenius.order(group); }

  friend bool operator==(const ComponentGroupModel&, const ComponentGroupModel&) = default;
};

}  // namespace tamagawa
