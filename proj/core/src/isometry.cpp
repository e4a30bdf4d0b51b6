#include "bicomb/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bicomb/errors.hpp"
#include "bicomb/space.hpp"

namespace bicomb {

namespace {

Rational frac_part(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

// cos and sin of 2 pi t, exact for the common denominators.
std::pair<double, double> turn_cos_sin(const Rational& t) {
  Rational f = frac_part(t);
  const double h = std::sqrt(3.0) / 2.0;
  const double s = std::sqrt(0.5);
  if (f.get_den() <= 12) {
    long n = f.get_num().get_si(), d = f.get_den().get_si();
    if (12 % d == 0) {
      long k = n * (12 / d);
      static const double c12[12] = {1, h, 0.5, 0, -0.5, -h, -1, -h, -0.5, 0, 0.5, h};
      static const double s12[12] = {0, 0.5, h, 1, h, 0.5, 0, -0.5, -h, -1, -h, -0.5};
      return {c12[k], s12[k]};
    }
    if (d == 8) {
      static const double c8[8] = {1, s, 0, -s, -1, -s, 0, s};
      static const double s8[8] = {0, s, 1, s, 0, -s, -1, -s};
      return {c8[n], s8[n]};
    }
  }
  double a = 2.0 * std::numbers::pi * to_double(f);
  return {std::cos(a), std::sin(a)};
}

std::vector<int> compose_perm(const std::vector<int>& first, const std::vector<int>& second) {
  std::vector<int> out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

}  // namespace

Isometry Isometry::rotation_turns(const Rational& turns) {
  return Isometry(RotationIso{frac_part(turns), 0.0});
}

Isometry Isometry::power(std::int64_t k) const {
  if (k < 0) throw InvalidArgument("negative isometry power");
  if (k == 0) return identity();
  return std::visit(
      [&](const auto& v) -> Isometry {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IdentityIso>) {
          return identity();
        } else if constexpr (std::is_same_v<T, ShiftIso>) {
          return shift(v.power * k);
        } else if constexpr (std::is_same_v<T, RotationIso>) {
          if (v.turns) return rotation_turns(*v.turns * Rational(k));
          return rotation_angle(std::remainder(v.angle * static_cast<double>(k), 2.0 * std::numbers::pi));
        } else if constexpr (std::is_same_v<T, TranslationIso>) {
          std::vector<double> w = v.vector;
          for (double& c : w) c *= static_cast<double>(k);
          return translation(std::move(w));
        } else if constexpr (std::is_same_v<T, LegPermutationIso>) {
          std::vector<int> acc(v.perm.size());
          for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = static_cast<int>(i);
          std::vector<int> base = v.perm;
          for (std::int64_t e = k; e > 0; e >>= 1) {
            if (e & 1) acc = compose_perm(acc, base);
            base = compose_perm(base, base);
          }
          return leg_permutation(std::move(acc));
        } else {
          std::vector<Isometry> parts;
          parts.reserve(v.parts.size() * static_cast<std::size_t>(k));
          for (std::int64_t i = 0; i < k; ++i)
            for (const auto& p : v.parts) parts.push_back(p);
          return compose(std::move(parts));
        }
      },
      v_);
}

std::string Isometry::describe() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IdentityIso>) {
          return "identity";
        } else if constexpr (std::is_same_v<T, ShiftIso>) {
          return "shift^" + std::to_string(v.power);
        } else if constexpr (std::is_same_v<T, RotationIso>) {
          if (v.turns) return "rotation(" + to_string(*v.turns) + " turn)";
          return "rotation(" + std::to_string(v.angle) + " rad)";
        } else if constexpr (std::is_same_v<T, TranslationIso>) {
          std::string s = "translation(";
          for (std::size_t i = 0; i < v.vector.size(); ++i) s += (i ? ", " : "") + std::to_string(v.vector[i]);
          return s + ")";
        } else if constexpr (std::is_same_v<T, LegPermutationIso>) {
          std::string s = "legs[";
          for (std::size_t i = 0; i < v.perm.size(); ++i) s += (i ? " " : "") + std::to_string(v.perm[i]);
          return s + "]";
        } else {
          std::string s = "compose(";
          for (std::size_t i = 0; i < v.parts.size(); ++i) s += (i ? ", " : "") + v.parts[i].describe();
          return s + ")";
        }
      },
      v_);
}

void validate_isometry(const Space& space, const Isometry& iso) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        auto need = [&](SpaceKind k, const char* what) {
          if (space.kind() != k)
            throw KindMismatch(std::string(what) + " is not an isometry of a " + to_string(space.kind()) + " space");
        };
        if constexpr (std::is_same_v<T, ShiftIso>) {
          need(SpaceKind::star_seq, "shift");
        } else if constexpr (std::is_same_v<T, RotationIso>) {
          need(SpaceKind::euclidean, "rotation");
          if (space.dim() != 2) throw InvalidArgument("rotation requires dimension 2");
          if (!v.turns && !std::isfinite(v.angle)) throw InvalidArgument("non-finite rotation angle");
        } else if constexpr (std::is_same_v<T, TranslationIso>) {
          need(SpaceKind::euclidean, "translation");
          if (static_cast<int>(v.vector.size()) != space.dim())
            throw InvalidArgument("translation vector has wrong dimension");
          for (double c : v.vector)
            if (!std::isfinite(c)) throw InvalidArgument("non-finite translation");
        } else if constexpr (std::is_same_v<T, LegPermutationIso>) {
          need(SpaceKind::tree, "leg permutation");
          const int k = space.legs();
          if (static_cast<int>(v.perm.size()) != k) throw InvalidArgument("leg permutation has wrong size");
          std::vector<bool> seen(k, false);
          for (int i = 0; i < k; ++i) {
            int j = v.perm[i];
            if (j < 0 || j >= k || seen[j]) throw InvalidArgument("leg permutation is not a bijection");
            seen[j] = true;
            if (space.leg_length(i) != space.leg_length(j))
              throw InvalidArgument("leg permutation maps legs of different lengths");
          }
        } else if constexpr (std::is_same_v<T, CompositionIso>) {
          for (const auto& p : v.parts) validate_isometry(space, p);
        }
      },
      iso.variant());
}

Point apply_isometry(const Space& space, const Isometry& iso, const Point& x) {
  space.validate(x);
  return std::visit(
      [&](const auto& v) -> Point {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IdentityIso>) {
          return x;
        } else if constexpr (std::is_same_v<T, ShiftIso>) {
          if (space.kind() != SpaceKind::star_seq) throw KindMismatch("shift applied outside star-seq");
          return std::get<SparseSeq>(x).shifted(v.power);
        } else if constexpr (std::is_same_v<T, RotationIso>) {
          validate_isometry(space, iso);
          auto [c, s] = v.turns ? turn_cos_sin(*v.turns) : std::pair{std::cos(v.angle), std::sin(v.angle)};
          const auto& p = std::get<EuclidPoint>(x).coords;
          return EuclidPoint{{c * p[0] - s * p[1], s * p[0] + c * p[1]}};
        } else if constexpr (std::is_same_v<T, TranslationIso>) {
          validate_isometry(space, iso);
          auto p = std::get<EuclidPoint>(x);
          for (std::size_t i = 0; i < p.coords.size(); ++i) p.coords[i] += v.vector[i];
          return p;
        } else if constexpr (std::is_same_v<T, LegPermutationIso>) {
          validate_isometry(space, iso);
          const auto& t = std::get<TreePoint>(x);
          if (t.is_center()) return TreePoint{};
          return TreePoint{v.perm[t.leg], t.r};
        } else {
          Point y = x;
          for (const auto& p : v.parts) y = apply_isometry(space, p, y);
          return y;
        }
      },
      iso.variant());
}

}  // namespace bicomb
