#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Dense>

#include "bicomb/barycenter.hpp"
#include "bicomb/errors.hpp"

namespace bicomb {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Wolfe's algorithm: the point of least euclidean norm in the hull of the columns of P.
VectorXd min_norm_weights(const MatrixXd& P) {
  const int m = static_cast<int>(P.cols());
  double scale = 0.0;
  for (int i = 0; i < m; ++i) scale = std::max(scale, P.col(i).squaredNorm());
  const double eps = 1e-15 * std::max(scale, 1e-300);

  VectorXd lambda = VectorXd::Zero(m);
  std::vector<int> S;
  int start = 0;
  for (int i = 1; i < m; ++i)
    if (P.col(i).squaredNorm() < P.col(start).squaredNorm()) start = i;
  S.push_back(start);
  lambda[start] = 1.0;
  VectorXd x = P.col(start);

  for (int major = 0; major < 10 * m + 10; ++major) {
    int j = 0;
    VectorXd dots = P.transpose() * x;
    for (int i = 1; i < m; ++i)
      if (dots[i] < dots[j]) j = i;
    if (dots[j] >= x.squaredNorm() - eps) break;
    if (std::find(S.begin(), S.end(), j) != S.end()) break;
    S.push_back(j);
    for (int minor = 0; minor < 10 * m + 10; ++minor) {
      const int s = static_cast<int>(S.size());
      MatrixXd A(s + 1, s + 1);
      VectorXd rhs = VectorXd::Zero(s + 1);
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) A(a, b) = P.col(S[a]).dot(P.col(S[b]));
      for (int a = 0; a < s; ++a) A(a, s) = A(s, a) = 1.0;
      A(s, s) = 0.0;
      rhs[s] = 1.0;
      VectorXd sol = A.completeOrthogonalDecomposition().solve(rhs);
      VectorXd alpha = sol.head(s);
      bool interior = true;
      for (int a = 0; a < s; ++a)
        if (alpha[a] <= 1e-14) interior = false;
      if (interior) {
        lambda.setZero();
        for (int a = 0; a < s; ++a) lambda[S[a]] = alpha[a];
        break;
      }
      double theta = 1.0;
      for (int a = 0; a < s; ++a)
        if (alpha[a] <= 1e-14) {
          double den = lambda[S[a]] - alpha[a];
          if (den > 0) theta = std::min(theta, lambda[S[a]] / den);
        }
      for (int a = 0; a < s; ++a) lambda[S[a]] += theta * (alpha[a] - lambda[S[a]]);
      std::vector<int> keep;
      for (int a = 0; a < s; ++a)
        if (lambda[S[a]] > 1e-14) keep.push_back(S[a]);
        else lambda[S[a]] = 0.0;
      S = keep;
      if (S.empty()) {
        lambda[j] = 1.0;
        S.push_back(j);
      }
    }
    double total = lambda.sum();
    lambda /= total;
    x = P * lambda;
  }
  return lambda;
}

double star_value(const VectorXd& r) {
  double l1 = r.cwiseAbs().sum();
  return std::sqrt(l1 * l1 + r.squaredNorm());
}

LocalityCertificate euclid_distance(const AtomicMeasure& mu, const Point& c) {
  const int d = mu.space().dim();
  const auto& cc = std::get<EuclidPoint>(c).coords;
  MatrixXd P(d, mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const auto& x = std::get<EuclidPoint>(mu.atoms()[i].point).coords;
    for (int k = 0; k < d; ++k) P(k, static_cast<int>(i)) = x[k] - cc[k];
  }
  VectorXd w = min_norm_weights(P);
  return {(P * w).norm(), true, "min-norm point"};
}

// sum_k r_k^2 (1 + 1 / l_k) over the simplex in l equals the squared star norm;
// alternate between the weights l and a weighted min-norm solve.
LocalityCertificate star_distance(const AtomicMeasure& mu, const Point& c) {
  std::vector<SparseSeq::Index> idx;
  for (const auto& a : mu.atoms())
    for (const auto& [i, v] : std::get<SparseSeq>(a.point).entries()) idx.push_back(i);
  for (const auto& [i, v] : std::get<SparseSeq>(c).entries()) idx.push_back(i);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  const int d = std::max<int>(1, static_cast<int>(idx.size()));
  const int m = static_cast<int>(mu.size());
  auto pos = [&](SparseSeq::Index i) { return std::lower_bound(idx.begin(), idx.end(), i) - idx.begin(); };
  MatrixXd P = MatrixXd::Zero(d, m);
  for (int i = 0; i < m; ++i)
    for (const auto& [k, v] : std::get<SparseSeq>(mu.atoms()[i].point).entries()) P(pos(k), i) += to_double(v);
  for (const auto& [k, v] : std::get<SparseSeq>(c).entries())
    for (int i = 0; i < m; ++i) P(pos(k), i) -= to_double(v);

  VectorXd weight = VectorXd::Constant(d, 1.0 + d);
  double best = std::numeric_limits<double>::infinity();
  for (int round = 0; round < 60; ++round) {
    MatrixXd Q = weight.cwiseSqrt().asDiagonal() * P;
    VectorXd lam = min_norm_weights(Q);
    VectorXd r = P * lam;
    double v = star_value(r);
    if (v < best * (1.0 - 1e-12)) best = v;
    else if (round > 5) break;
    if (v == 0.0) break;
    double l1 = r.cwiseAbs().sum();
    double floor = 1e-9 * l1 / d;
    VectorXd l = r.cwiseAbs().array() + floor;
    l /= l.sum();
    weight = (1.0 + l.array().inverse()).matrix();
  }
  return {best, true, "reweighted min-norm point"};
}

LocalityCertificate tree_distance(const AtomicMeasure& mu, const Point& c) {
  std::map<int, std::pair<double, double>> legs;  // leg -> (min r, max r)
  bool center = false;
  for (const auto& a : mu.atoms()) {
    const auto& t = std::get<TreePoint>(a.point);
    if (t.is_center()) {
      center = true;
      continue;
    }
    auto [it, fresh] = legs.try_emplace(t.leg, t.r, t.r);
    if (!fresh) {
      it->second.first = std::min(it->second.first, t.r);
      it->second.second = std::max(it->second.second, t.r);
    }
  }
  const auto& p = std::get<TreePoint>(c);
  double d = 0.0;
  if (legs.size() == 1 && !center) {
    auto [leg, range] = *legs.begin();
    if (p.leg == leg || p.is_center()) {
      double r = p.is_center() ? 0.0 : p.r;
      d = r < range.first ? range.first - r : (r > range.second ? r - range.second : 0.0);
    } else {
      d = p.r + range.first;
    }
  } else if (!p.is_center()) {
    auto it = legs.find(p.leg);
    d = it == legs.end() ? p.r : std::max(0.0, p.r - it->second.second);
  }
  return {d, true, "spanned subtree"};
}

}  // namespace

LocalityCertificate locality_certificate(const AtomicMeasure& mu, const Point& candidate, double tol) {
  mu.space().validate(candidate);
  LocalityCertificate out;
  switch (mu.space().kind()) {
    case SpaceKind::euclidean: out = euclid_distance(mu, candidate); break;
    case SpaceKind::star_seq: out = star_distance(mu, candidate); break;
    case SpaceKind::tree: out = tree_distance(mu, mu.space().canonical(candidate)); break;
  }
  out.pass = out.distance <= tol;
  return out;
}

}  // namespace bicomb
