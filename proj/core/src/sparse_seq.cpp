#include "bicomb/sparse_seq.hpp"

#include <algorithm>
#include <cmath>

#include "bicomb/errors.hpp"

namespace bicomb {

SparseSeq SparseSeq::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseSeq out;
  out.entries_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].first == entries[i - 1].first)
      throw InvalidArgument("repeated index " + std::to_string(entries[i].first) + " in sequence");
    if (entries[i].second == 0) continue;
    entries[i].second.canonicalize();
    out.entries_.push_back(std::move(entries[i]));
  }
  return out;
}

SparseSeq SparseSeq::unit(Index index, const Rational& value) {
  SparseSeq out;
  if (value != 0) out.entries_.emplace_back(index, value);
  return out;
}

Rational SparseSeq::at(Index index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, Index i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

SparseSeq SparseSeq::shifted(Index m) const {
  SparseSeq out = *this;
  for (auto& e : out.entries_) e.first += m;
  return out;
}

Rational SparseSeq::l1_norm() const {
  Rational s = 0;
  for (const auto& e : entries_) s += abs(e.second);
  return s;
}

Rational SparseSeq::l2_norm_sq() const {
  Rational s = 0;
  for (const auto& e : entries_) s += e.second * e.second;
  return s;
}

Rational SparseSeq::star_norm_sq() const {
  Rational l1 = l1_norm();
  return l1 * l1 + l2_norm_sq();
}

namespace {

template <class Op>
std::vector<SparseSeq::Entry> merge(const std::vector<SparseSeq::Entry>& a,
                                    const std::vector<SparseSeq::Entry>& b, Op op) {
  std::vector<SparseSeq::Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, op(Rational(0), b[j].second));
      ++j;
    } else {
      Rational v = op(a[i].second, b[j].second);
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseSeq& SparseSeq::operator+=(const SparseSeq& other) {
  entries_ = merge(entries_, other.entries_,
                   [](const Rational& x, const Rational& y) { return Rational(x + y); });
  return *this;
}

SparseSeq& SparseSeq::operator-=(const SparseSeq& other) {
  entries_ = merge(entries_, other.entries_,
                   [](const Rational& x, const Rational& y) { return Rational(x - y); });
  return *this;
}

SparseSeq& SparseSeq::operator*=(const Rational& s) {
  if (s == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= s;
  return *this;
}

SparseSeq SparseSeq::affine(const SparseSeq& x, const SparseSeq& y, const Rational& t) {
  if (t == 0) return x;
  if (t == 1) return y;
  return Rational(1 - t) * x + t * y;
}

std::string SparseSeq::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(entries_[i].first) + ": " + bicomb::to_string(entries_[i].second);
  }
  return s + "}";
}

double star_norm(const SparseSeq& x) { return std::sqrt(to_double(x.star_norm_sq())); }

double star_dist(const SparseSeq& x, const SparseSeq& y) { return star_norm(x - y); }

}  // namespace bicomb
