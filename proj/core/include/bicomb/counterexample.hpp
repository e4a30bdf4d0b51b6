#pragma once

#include <cstdint>
#include <vector>

#include "bicomb/checks.hpp"
#include "bicomb/sparse_seq.hpp"

namespace bicomb {

// x = sum_i coeffs[i] e_{offsets[i]} with coeffs a probability vector.
struct HullSample {
  std::vector<Rational> coeffs;
  std::vector<std::int64_t> offsets;
  SparseSeq x;
};

// Throws InvalidArgument unless coeffs are non-negative, sum to 1 and the
// offsets are distinct.
HullSample hull_point(std::vector<Rational> coeffs, std::vector<std::int64_t> offsets);
HullSample random_hull_point(Rng& rng, int max_support);

// x_n = (1/n) sum_{k<n} e_k and its shift displacement T x_n - x_n.
struct DisplacementDecay {
  std::int64_t n = 0;
  Rational l1;       // |T x_n - x_n|_1
  Rational star_sq;  // |T x_n - x_n|_*^2
  double star = 0.0;
};
DisplacementDecay displacement_decay(std::int64_t n);

struct VerificationBundle {
  std::vector<PropertyReport> checks;
  std::uint64_t seed = 0;
  bool pass = false;
};

// Seven checks: strict convexity, norm equivalence, hull bounds, shift
// invariance, zero excluded, displacement decay, Busemann convexity.
VerificationBundle verify_counterexample(std::int64_t samples, int max_support, std::uint64_t seed);

}  // namespace bicomb
