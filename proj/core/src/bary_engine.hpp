#pragma once

// Recursive evaluation of b_n on flat coordinate charts.
//
// A tuple is a set of distinct group points with multiplicities. Nodes of the
// recursion are (frame, counts): a frame owns the group points of one
// iteration and a table indexed by the mixed-radix counts vector, so every
// sub-multiset of a frame is evaluated once. Frames live on a LIFO arena.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "bicomb/barycenter.hpp"
#include "bicomb/errors.hpp"

namespace bicomb::detail {

inline constexpr int kMaxGroups = 32;

struct EuclidChart {
  int d = 0;
  int dim() const { return d; }
  double dist2(const double* a, const double* b) const {
    double s = 0;
    for (int i = 0; i < d; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
  }
  void midpoint(const double* a, const double* b, double* out) const {
    for (int i = 0; i < d; ++i) out[i] = 0.5 * (a[i] + b[i]);
  }
  // Medial triangle of p = (a, b, c) into q; returns its squared diameter.
  double medial(const double* p, double* q) const {
    const double *a = p, *b = p + d, *c = p + 2 * d;
    double *qa = q, *qb = q + d, *qc = q + 2 * d;
    double s0 = 0, s1 = 0, s2 = 0;
    for (int i = 0; i < d; ++i) {
      qa[i] = 0.5 * (b[i] + c[i]);
      qb[i] = 0.5 * (a[i] + c[i]);
      qc[i] = 0.5 * (a[i] + b[i]);
      double u = qa[i] - qb[i], v = qa[i] - qc[i], w = qb[i] - qc[i];
      s0 += u * u;
      s1 += v * v;
      s2 += w * w;
    }
    return std::max(s0, std::max(s1, s2));
  }
};

// Dense coordinates of star-seq points over a fixed index set.
struct StarChart {
  int d = 0;
  int dim() const { return d; }
  double dist2(const double* a, const double* b) const {
    double l1 = 0, l2 = 0;
    for (int i = 0; i < d; ++i) {
      double v = std::fabs(a[i] - b[i]);
      l1 += v;
      l2 += v * v;
    }
    return l1 * l1 + l2;
  }
  void midpoint(const double* a, const double* b, double* out) const {
    for (int i = 0; i < d; ++i) out[i] = 0.5 * (a[i] + b[i]);
  }
  double medial(const double* p, double* q) const {
    const double *a = p, *b = p + d, *c = p + 2 * d;
    double *qa = q, *qb = q + d, *qc = q + 2 * d;
    double l0 = 0, l1 = 0, l2 = 0, s0 = 0, s1 = 0, s2 = 0;
    for (int i = 0; i < d; ++i) {
      qa[i] = 0.5 * (b[i] + c[i]);
      qb[i] = 0.5 * (a[i] + c[i]);
      qc[i] = 0.5 * (a[i] + b[i]);
      double u = std::fabs(qa[i] - qb[i]), v = std::fabs(qa[i] - qc[i]), w = std::fabs(qb[i] - qc[i]);
      l0 += u;
      l1 += v;
      l2 += w;
      s0 += u * u;
      s1 += v * v;
      s2 += w * w;
    }
    return std::max(l0 * l0 + s0, std::max(l1 * l1 + s1, l2 * l2 + s2));
  }
};

// (leg, r) pairs; the center is (0, 0).
struct TreeChart {
  int dim() const { return 2; }
  double dist2(const double* a, const double* b) const {
    double d = a[0] == b[0] ? a[1] - b[1] : a[1] + b[1];
    return d * d;
  }
  void midpoint(const double* a, const double* b, double* out) const {
    if (a[0] == b[0] || a[1] == 0.0 || b[1] == 0.0) {
      double leg = a[1] == 0.0 ? b[0] : a[0];
      double r = 0.5 * (a[1] + b[1]);
      out[0] = r == 0.0 ? 0.0 : leg;
      out[1] = r;
      return;
    }
    double half = 0.5 * (a[1] + b[1]);
    if (a[1] > half) {
      out[0] = a[0];
      out[1] = a[1] - half;
    } else if (b[1] > half) {
      out[0] = b[0];
      out[1] = b[1] - half;
    } else {
      out[0] = 0.0;
      out[1] = 0.0;
    }
  }
  double medial(const double* p, double* q) const {
    midpoint(p + 2, p + 4, q);
    midpoint(p, p + 4, q + 2);
    midpoint(p, p + 2, q + 4);
    return std::max(dist2(q, q + 2), std::max(dist2(q, q + 4), dist2(q + 2, q + 4)));
  }
};

template <class Chart>
class Engine {
 public:
  Engine(const Chart& chart, const BaryConfig& cfg, BaryStats& stats)
      : chart_(chart),
        cfg_(cfg),
        stats_(stats),
        dim_(chart.dim()),
        tol2_(cfg.tuple_tol * cfg.tuple_tol),
        stall2_(cfg.stall_tol * cfg.stall_tol),
        ratio2_(cfg.stall_ratio * cfg.stall_ratio) {}

  // points: m distinct points (m * dim values), counts: positive multiplicities.
  std::vector<double> evaluate(const std::vector<double>& points, const std::vector<int>& counts) {
    const int m = static_cast<int>(counts.size());
    if (m == 0) throw InvalidArgument("barycenter of an empty tuple");
    if (m > kMaxGroups) throw InvalidArgument("too many distinct points for the recursion");
    int n = 0;
    for (int c : counts) n += c;
    pool_.clear();
    table_.clear();
    std::vector<int> c = counts;
    Frame root = push_frame(points.data(), c.data(), m);
    std::size_t off = value(root, c.data(), n);
    std::vector<double> out(pool_.begin() + off, pool_.begin() + off + dim_);
    pool_.clear();
    table_.clear();
    return out;
  }

 private:
  using Buf = boost::container::small_vector<double, 64>;
  using IntBuf = boost::container::small_vector<int, kMaxGroups>;

  struct Frame {
    int m = 0;
    std::size_t pts = 0;
    std::size_t tab = 0;
    std::array<std::int64_t, kMaxGroups> stride{};
  };

  const double* at(std::size_t off) const { return pool_.data() + off; }

  Frame push_frame(const double* pts, const int* counts, int m) {
    Frame f;
    f.m = m;
    f.pts = pool_.size();
    pool_.insert(pool_.end(), pts, pts + static_cast<std::size_t>(m) * dim_);
    f.tab = table_.size();
    std::int64_t size = 1;
    for (int i = 0; i < m; ++i) {
      f.stride[i] = size;
      size *= counts[i] + 1;
    }
    table_.resize(f.tab + static_cast<std::size_t>(size), -1);
    return f;
  }

  void pop_frame(const Frame& f) {
    pool_.resize(f.pts);
    table_.resize(f.tab);
  }

  std::size_t append(const double* p) {
    std::size_t off = pool_.size();
    pool_.insert(pool_.end(), p, p + dim_);
    return off;
  }

  // Squared diameter.
  double diameter2(const double* pts, int r) const {
    double d = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) d = std::max(d, chart_.dist2(pts + i * dim_, pts + j * dim_));
    return d;
  }

  // Merges exactly equal points, summing counts. Returns the new group count.
  int merge(double* pts, IntBuf& counts, int r) const {
    int out = 0;
    for (int i = 0; i < r; ++i) {
      int j = 0;
      for (; j < out; ++j)
        if (std::memcmp(&pts[i * dim_], &pts[j * dim_], sizeof(double) * dim_) == 0) break;
      if (j < out) {
        counts[j] += counts[i];
      } else {
        if (out != i) {
          std::memcpy(&pts[out * dim_], &pts[i * dim_], sizeof(double) * dim_);
          counts[out] = counts[i];
        }
        ++out;
      }
    }
    return out;
  }

  void count_evaluation() {
    if (++stats_.evaluations > cfg_.max_work)
      throw BudgetExceeded("barycenter recursion exceeded its work budget of " + std::to_string(cfg_.max_work));
  }

  // Returns true when the iteration should stop at squared diameter d2
  // (previous diam2).
  bool stop(int n, int iter, double d2, double diam2) {
    if (d2 < tol2_) return true;
    if (d2 > ratio2_ * diam2 && d2 < stall2_) {
      ++stats_.stalls;
      stats_.worst_stall = std::max(stats_.worst_stall, std::sqrt(d2));
      return true;
    }
    if (iter >= cfg_.max_iterations)
      throw ConvergenceError("b_" + std::to_string(n) + " did not reach the tuple tolerance", std::sqrt(d2));
    return false;
  }

  // b_3 by plain iteration on the explicit triple.
  void b3(const double* a, const double* b, const double* c, double* out) {
    count_evaluation();
    Buf buf(static_cast<std::size_t>(6) * dim_, boost::container::default_init);
    double* p = buf.data();
    double* q = p + 3 * dim_;
    std::memcpy(p, a, sizeof(double) * dim_);
    std::memcpy(p + dim_, b, sizeof(double) * dim_);
    std::memcpy(p + 2 * dim_, c, sizeof(double) * dim_);
    double diam = diameter2(p, 3);
    if (!(diam < tol2_)) {
      for (int iter = 1;; ++iter) {
        double d = chart_.medial(p, q);
        stats_.midpoints += 3;
        std::swap(p, q);
        if (stop(3, iter, d, diam)) break;
        diam = d;
      }
    }
    std::memcpy(out, p, sizeof(double) * dim_);
  }

  // b_n of the sub-multiset of frame f with counts c (length f.m, sum n).
  std::size_t value(const Frame& f, int* c, int n) {
    std::size_t idx = f.tab;
    for (int i = 0; i < f.m; ++i) idx += static_cast<std::size_t>(c[i] * f.stride[i]);
    if (table_[idx] >= 0) {
      ++stats_.memo_hits;
      return static_cast<std::size_t>(table_[idx]);
    }
    std::array<int, kMaxGroups> act;
    int r = 0;
    for (int i = 0; i < f.m; ++i)
      if (c[i] > 0) act[r++] = i;
    if (r == 1) {
      std::size_t off = f.pts + static_cast<std::size_t>(act[0]) * dim_;
      table_[idx] = static_cast<std::int64_t>(off);
      return off;
    }
    if (n == 2) {
      std::size_t off = pool_.size();
      pool_.resize(off + dim_);
      chart_.midpoint(at(f.pts + act[0] * dim_), at(f.pts + act[1] * dim_), pool_.data() + off);
      ++stats_.midpoints;
      table_[idx] = static_cast<std::int64_t>(off);
      return off;
    }
    if (n == 3) {
      std::array<std::size_t, 3> tuple;
      int k = 0;
      for (int j = 0; j < r; ++j)
        for (int e = 0; e < c[act[j]]; ++e) tuple[k++] = f.pts + act[j] * dim_;
      std::size_t off = pool_.size();
      pool_.resize(off + dim_);
      b3(at(tuple[0]), at(tuple[1]), at(tuple[2]), pool_.data() + off);
      table_[idx] = static_cast<std::int64_t>(off);
      return off;
    }
    count_evaluation();

    Buf buf(static_cast<std::size_t>(2 * r) * dim_, boost::container::default_init);
    double* cur = buf.data();
    double* next = cur + r * dim_;
    IntBuf cc(r);
    for (int j = 0; j < r; ++j) {
      std::memcpy(&cur[j * dim_], at(f.pts + act[j] * dim_), sizeof(double) * dim_);
      cc[j] = c[act[j]];
    }
    double diam = diameter2(cur, r);
    if (!(diam < tol2_)) {
      for (int j = 0; j < r; ++j) {
        --c[act[j]];
        std::size_t off = value(f, c, n - 1);
        ++c[act[j]];
        std::memcpy(&next[j * dim_], at(off), sizeof(double) * dim_);
      }
      for (int iter = 1;; ++iter) {
        std::swap(cur, next);
        r = merge(cur, cc, r);
        if (r == 1) break;
        double d = diameter2(cur, r);
        if (stop(n, iter, d, diam)) break;
        diam = d;
        Frame g = push_frame(cur, cc.data(), r);
        for (int j = 0; j < r; ++j) {
          --cc[j];
          std::size_t off = value(g, cc.data(), n - 1);
          ++cc[j];
          std::memcpy(&next[j * dim_], at(off), sizeof(double) * dim_);
        }
        pop_frame(g);
      }
    }
    std::size_t off = append(cur);
    table_[idx] = static_cast<std::int64_t>(off);
    return off;
  }

  Chart chart_;
  const BaryConfig& cfg_;
  BaryStats& stats_;
  int dim_;
  double tol2_, stall2_, ratio2_;
  std::vector<double> pool_;
  std::vector<std::int64_t> table_;
};

}  // namespace bicomb::detail
