#pragma once

// Tate's algorithm over Q: Kodaira type, conductor exponent, Tamagawa number
// and the component group with its Frobenius action at a prime p.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tamagawa/curve.hpp"
#include "tamagawa/group.hpp"

namespace tamagawa {

struct KodairaType {
  enum class Family { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

  Family family = Family::I;
  int n = 0;  // only for I_n and I_n*

  static KodairaType good() { return {Family::I, 0}; }
  static KodairaType multiplicative(int n) { return {Family::I, n}; }
  static KodairaType i_star(int n) { return {Family::IStar, n}; }

  bool is_good() const { return family == Family::I && n == 0; }
  bool is_multiplicative() const { return family == Family::I && n > 0; }
  bool is_additive() const { return family != Family::I; }

  /// "I0", "I5", "II", "III", "IV", "I0*", "I5*", "IV*", "III*", "II*".
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument.
  static KodairaType parse(std::string_view text);

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

enum class ReductionKind { Good, SplitMultiplicative, NonsplitMultiplicative, Additive };

std::string to_string(ReductionKind kind);

struct LocalData {
  Integer p;
  KodairaType kodaira;
  ReductionKind kind = ReductionKind::Good;
  int v_disc = 0;              // v_p of the minimal discriminant
  int conductor_exponent = 0;  // f_p
  std::int64_t tamagawa = 1;   // c_p
  ComponentGroupModel phi;
};

/// Reduction type at p, computed on a p-minimal model.
ReductionKind reduction_kind(const WeierstrassCurve& curve, const Integer& p);

/// Full local data at p. The input need not be minimal.
LocalData tate_local_data(const WeierstrassCurve& curve, const Integer& p);

/// Local data at every prime dividing the minimal discriminant, ascending.
std::vector<LocalData> all_local_data(const WeierstrassCurve& curve);

/// prod p^{f_p}
Integer conductor(const std::vector<LocalData>& local);
inline Integer conductor(const WeierstrassCurve& curve) { return conductor(all_local_data(curve)); }

/// prod c_p
Integer tamagawa_product(const std::vector<LocalData>& local);

}  // namespace tamagawa
