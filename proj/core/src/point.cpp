#include "bicomb/point.hpp"

#include <cstdio>

namespace bicomb {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::euclidean: return "euclidean";
    case SpaceKind::star_seq: return "star-seq";
    case SpaceKind::tree: return "tree";
  }
  return "?";
}

SpaceKind kind_of(const Point& p) {
  switch (p.index()) {
    case 0: return SpaceKind::euclidean;
    case 1: return SpaceKind::star_seq;
    default: return SpaceKind::tree;
  }
}

namespace {

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string describe(const Point& p) {
  if (auto e = std::get_if<EuclidPoint>(&p)) {
    std::string s = "(";
    for (std::size_t i = 0; i < e->coords.size(); ++i) s += (i ? ", " : "") + fmt_double(e->coords[i]);
    return s + ")";
  }
  if (auto q = std::get_if<SparseSeq>(&p)) return q->to_string();
  const auto& t = std::get<TreePoint>(p);
  return "leg " + std::to_string(t.leg) + " r " + fmt_double(t.r);
}

}  // namespace bicomb
