#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bicomb/rational.hpp"

namespace bicomb {

// Finitely supported rational sequence on the integers.
// Entries are kept sorted by index with no zero values.
class SparseSeq {
 public:
  using Index = std::int64_t;
  using Entry = std::pair<Index, Rational>;

  SparseSeq() = default;

  // Throws InvalidArgument on repeated indices. Zero values are dropped.
  static SparseSeq from_entries(std::vector<Entry> entries);
  static SparseSeq unit(Index index, const Rational& value = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  Rational at(Index index) const;

  SparseSeq shifted(Index m) const;

  Rational l1_norm() const;
  Rational l2_norm_sq() const;
  // (sum |x_k|)^2 + sum |x_k|^2
  Rational star_norm_sq() const;

  SparseSeq& operator+=(const SparseSeq& other);
  SparseSeq& operator-=(const SparseSeq& other);
  SparseSeq& operator*=(const Rational& s);

  friend SparseSeq operator+(SparseSeq a, const SparseSeq& b) { return a += b; }
  friend SparseSeq operator-(SparseSeq a, const SparseSeq& b) { return a -= b; }
  friend SparseSeq operator*(const Rational& s, SparseSeq a) { return a *= s; }
  friend bool operator==(const SparseSeq& a, const SparseSeq& b) { return a.entries_ == b.entries_; }

  // (1-t) x + t y
  static SparseSeq affine(const SparseSeq& x, const SparseSeq& y, const Rational& t);

  std::string to_string() const;

 private:
  std::vector<Entry> entries_;
};

double star_norm(const SparseSeq& x);
double star_dist(const SparseSeq& x, const SparseSeq& y);

}  // namespace bicomb
