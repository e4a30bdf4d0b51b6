#include "bicomb/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "bicomb/errors.hpp"
#include "bicomb/io.hpp"

namespace bicomb {

HullSample hull_point(std::vector<Rational> coeffs, std::vector<std::int64_t> offsets) {
  if (coeffs.empty() || coeffs.size() != offsets.size())
    throw InvalidArgument("hull point needs matching, non-empty coefficients and offsets");
  Rational total = 0;
  std::vector<SparseSeq::Entry> entries;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i].canonicalize();
    if (coeffs[i] < 0) throw InvalidArgument("negative hull coefficient");
    total += coeffs[i];
    entries.emplace_back(offsets[i], coeffs[i]);
  }
  if (total != 1) throw InvalidArgument("hull coefficients must sum to 1");
  HullSample s;
  s.x = SparseSeq::from_entries(std::move(entries));
  s.coeffs = std::move(coeffs);
  s.offsets = std::move(offsets);
  return s;
}

HullSample random_hull_point(Rng& rng, int max_support) {
  if (max_support < 1) throw InvalidArgument("max_support must be positive");
  std::uniform_int_distribution<int> size(1, max_support), weight(1, 12), start(-40, 40), layout(0, 1);
  const int s = size(rng);
  std::vector<std::int64_t> offsets;
  if (layout(rng) == 0) {
    std::int64_t a = start(rng);
    for (int i = 0; i < s; ++i) offsets.push_back(a + i);
  } else {
    std::set<std::int64_t> used;
    while (static_cast<int>(used.size()) < s) used.insert(start(rng));
    offsets.assign(used.begin(), used.end());
  }
  std::vector<long> w(s);
  long total = 0;
  for (auto& v : w) total += v = weight(rng);
  std::vector<Rational> coeffs;
  for (long v : w) {
    Rational q(v, total);
    q.canonicalize();
    coeffs.push_back(q);
  }
  return hull_point(std::move(coeffs), std::move(offsets));
}

DisplacementDecay displacement_decay(std::int64_t n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  Rational w(1, n);
  w.canonicalize();
  std::vector<SparseSeq::Entry> e;
  e.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) e.emplace_back(k, w);
  SparseSeq x = SparseSeq::from_entries(std::move(e));
  SparseSeq d = x.shifted(1) - x;
  DisplacementDecay out;
  out.n = n;
  out.l1 = d.l1_norm();
  out.star_sq = d.star_norm_sq();
  out.star = std::sqrt(to_double(out.star_sq));
  return out;
}

namespace {

PropertyReport exact_report(const std::string& name, std::uint64_t seed) {
  PropertyReport r;
  r.name = name;
  r.seed = seed;
  r.tolerance = 0.0;
  return r;
}

// Records a failed exact comparison; violation is its size as a double.
void violate(PropertyReport& r, double violation, json witness) {
  violation = std::max(violation, std::numeric_limits<double>::min());
  if (violation > r.margin) {
    r.margin = violation;
    r.witness = std::move(witness);
  }
  r.pass = false;
}

json sample_json(const HullSample& s) {
  json c = json::array();
  for (const auto& q : s.coeffs) c.push_back(to_string(q));
  return {{"coeffs", c}, {"offsets", s.offsets}};
}

PropertyReport norm_equivalence(std::int64_t samples, std::uint64_t seed) {
  PropertyReport r = exact_report("norm-equivalence", seed);
  Space space = Space::star_seq(-20, 20);
  Rng rng(seed);
  for (std::int64_t i = 0; i < samples; ++i) {
    SparseSeq x = std::get<SparseSeq>(space.random_point(rng));
    Rational l1 = x.l1_norm(), star = x.star_norm_sq();
    ++r.samples;
    // |x|_* / sqrt(2) <= |x|_1 <= |x|_*
    if (star > 2 * l1 * l1 || l1 * l1 > star)
      violate(r, std::fabs(to_double(star - 2 * l1 * l1)), {{"x", point_to_json(x)}});
  }
  return r;
}

PropertyReport hull_bounds(std::int64_t samples, int max_support, std::uint64_t seed) {
  PropertyReport r = exact_report("hull-bounds", seed);
  Rng rng(seed);
  Rational lo = 2, hi = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    HullSample s = random_hull_point(rng, max_support);
    Rational sq = s.x.star_norm_sq();
    Rational expect = 1;
    for (const auto& a : s.coeffs) expect += a * a;
    lo = std::min(lo, sq);
    hi = std::max(hi, sq);
    ++r.samples;
    if (sq != expect || sq < 1 || sq > 2)
      violate(r, std::max(std::fabs(to_double(sq - expect)), to_double(sq - 2)), sample_json(s));
  }
  r.details["min_star_norm"] = std::sqrt(to_double(lo));
  r.details["max_star_norm"] = std::sqrt(to_double(hi));
  return r;
}

PropertyReport shift_invariance(std::int64_t samples, int max_support, std::uint64_t seed) {
  PropertyReport r = exact_report("shift-invariance", seed);
  Rng rng(seed);
  for (std::int64_t i = 0; i < samples; ++i) {
    HullSample s = random_hull_point(rng, max_support);
    std::vector<std::int64_t> moved = s.offsets;
    for (auto& o : moved) ++o;
    HullSample t = hull_point(s.coeffs, moved);
    SparseSeq tx = s.x.shifted(1);
    ++r.samples;
    if (!(tx == t.x) || tx.star_norm_sq() != s.x.star_norm_sq())
      violate(r, star_dist(tx, t.x), sample_json(s));
  }
  return r;
}

PropertyReport zero_excluded(std::int64_t samples, int max_support, std::uint64_t seed) {
  PropertyReport r = exact_report("zero-excluded", seed);
  Rng rng(seed);
  Rational closest = 2;
  for (std::int64_t i = 0; i < samples; ++i) {
    HullSample s = random_hull_point(rng, max_support);
    Rational sq = s.x.star_norm_sq();
    closest = std::min(closest, sq);
    ++r.samples;
    if (sq < 1) violate(r, 1.0 - to_double(sq), sample_json(s));
  }
  r.details["min_distance_to_zero"] = std::sqrt(to_double(closest));
  return r;
}

PropertyReport displacement(std::int64_t samples, int max_support, std::uint64_t seed) {
  PropertyReport r = exact_report("displacement-decay", seed);
  Rng rng(seed);
  Rational smallest = -1;
  for (std::int64_t i = 0; i < samples; ++i) {
    HullSample s = random_hull_point(rng, max_support);
    Rational sq = (s.x.shifted(1) - s.x).star_norm_sq();
    if (smallest < 0 || sq < smallest) smallest = sq;
    ++r.samples;
    if (sq <= 0) violate(r, 1.0, sample_json(s));
  }
  // Uniform consecutive samples: |T x - x|_1 = 2/n and |T x - x|_*^2 = 6/n^2.
  json decay = json::array();
  std::vector<std::int64_t> ns;
  for (int n = 1; n <= max_support; ++n) ns.push_back(n);
  for (std::int64_t n : {100, 1000, 10000}) ns.push_back(n);
  for (std::int64_t n : ns) {
    DisplacementDecay d = displacement_decay(n);
    Rational l1(2, n), sq(6, n * n);
    l1.canonicalize();
    sq.canonicalize();
    ++r.samples;
    if (d.l1 != l1 || d.star_sq != sq) violate(r, std::fabs(d.star - std::sqrt(6.0) / n), {{"n", n}});
    if (n <= max_support && sq < smallest) smallest = sq;
    decay.push_back({{"n", n}, {"star", d.star}});
  }
  r.details["min_sampled_displacement"] = std::sqrt(to_double(smallest));
  r.details["uniform_decay"] = decay;
  return r;
}

PropertyReport busemann_on_hull(std::int64_t samples, int max_support, std::uint64_t seed) {
  PropertyReport r;
  r.name = "busemann-hull";
  r.seed = seed;
  r.tolerance = kDefaultCheckTolerance;
  Rng rng(seed);
  std::uniform_int_distribution<long> den(2, 24);
  for (std::int64_t i = 0; i < samples; ++i) {
    HullSample a = random_hull_point(rng, max_support), b = random_hull_point(rng, max_support);
    HullSample c = random_hull_point(rng, max_support), d = random_hull_point(rng, max_support);
    long q = den(rng);
    std::uniform_int_distribution<long> num(0, q);
    std::array<long, 3> t = {num(rng), num(rng), num(rng)};
    std::sort(t.begin(), t.end());
    ++r.samples;
    if (t[0] == t[2]) continue;
    auto f = [&](long p) {
      Rational s(p, q);
      s.canonicalize();
      return star_dist(SparseSeq::affine(a.x, b.x, s), SparseSeq::affine(c.x, d.x, s));
    };
    double f0 = f(t[0]), f1 = f(t[1]), f2 = f(t[2]);
    double chord = (static_cast<double>(t[2] - t[1]) * f0 + static_cast<double>(t[1] - t[0]) * f2) /
                   static_cast<double>(t[2] - t[0]);
    double v = f1 - chord;
    if (v > r.margin) {
      r.margin = v;
      if (v > r.tolerance)
        r.witness = json{{"x", sample_json(a)}, {"y", sample_json(b)}, {"x'", sample_json(c)},
                         {"y'", sample_json(d)}, {"t", {t[0], t[1], t[2]}}, {"denominator", q}};
    }
  }
  r.pass = r.margin <= r.tolerance;
  if (r.pass) r.witness.reset();
  return r;
}

}  // namespace

VerificationBundle verify_counterexample(std::int64_t samples, int max_support, std::uint64_t seed) {
  if (samples < 1) throw InvalidArgument("samples must be positive");
  if (max_support < 1) throw InvalidArgument("max_support must be positive");
  VerificationBundle b;
  b.seed = seed;
  b.checks.push_back(strict_convexity_check(samples, seed));
  b.checks.push_back(norm_equivalence(samples, seed + 1));
  b.checks.push_back(hull_bounds(samples, max_support, seed + 2));
  b.checks.push_back(shift_invariance(samples, max_support, seed + 3));
  b.checks.push_back(zero_excluded(samples, max_support, seed + 4));
  b.checks.push_back(displacement(samples, max_support, seed + 5));
  b.checks.push_back(busemann_on_hull(samples, max_support, seed + 6));
  b.pass = std::all_of(b.checks.begin(), b.checks.end(), [](const PropertyReport& r) { return r.pass; });
  return b;
}

}  // namespace bicomb
