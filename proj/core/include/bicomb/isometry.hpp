#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bicomb/point.hpp"
#include "bicomb/rational.hpp"

namespace bicomb {

class Space;
class Isometry;

struct IdentityIso {};

// Index shift on star-seq: e_i -> e_{i+power}.
struct ShiftIso {
  std::int64_t power = 1;
};

// Planar rotation about the origin. Exact turn fractions keep orbit points periodic.
struct RotationIso {
  std::optional<Rational> turns;
  double angle = 0.0;  // radians, used when turns is empty
};

struct TranslationIso {
  std::vector<double> vector;
};

// Sends leg i to leg perm[i].
struct LegPermutationIso {
  std::vector<int> perm;
};

// Applies parts[0] first.
struct CompositionIso {
  std::vector<Isometry> parts;
};

class Isometry {
 public:
  using Variant =
      std::variant<IdentityIso, ShiftIso, RotationIso, TranslationIso, LegPermutationIso, CompositionIso>;

  Isometry() = default;
  Isometry(Variant v) : v_(std::move(v)) {}

  static Isometry identity() { return Isometry(IdentityIso{}); }
  static Isometry shift(std::int64_t power = 1) { return Isometry(ShiftIso{power}); }
  static Isometry rotation_turns(const Rational& turns);
  static Isometry rotation_angle(double radians) { return Isometry(RotationIso{std::nullopt, radians}); }
  static Isometry translation(std::vector<double> v) { return Isometry(TranslationIso{std::move(v)}); }
  static Isometry leg_permutation(std::vector<int> perm) { return Isometry(LegPermutationIso{std::move(perm)}); }
  static Isometry compose(std::vector<Isometry> parts) { return Isometry(CompositionIso{std::move(parts)}); }

  const Variant& variant() const { return v_; }

  // k-fold iterate, computed in closed form where possible. k >= 0.
  Isometry power(std::int64_t k) const;

  std::string describe() const;

 private:
  Variant v_;
};

// Throws KindMismatch or InvalidArgument if `iso` is not an isometry of `space`.
void validate_isometry(const Space& space, const Isometry& iso);

Point apply_isometry(const Space& space, const Isometry& iso, const Point& x);

}  // namespace bicomb
