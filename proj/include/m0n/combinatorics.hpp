#pragma once

// Marking-set arithmetic for M_{0,n}: label subsets as bitmasks, complements,
// and boundary indices canonical modulo complementation.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace m0n {

inline constexpr int kMaxLabel = 63;

// Smallest n with a nontrivial moduli space (M_{0,4} is P^1).
inline constexpr int kMinMarkings = 4;
// Boundary enumerations are exponential in n; stay at desk scale.
inline constexpr int kMaxMarkings = 20;

// A finite set of positive labels, stored as a bitmask (label l <-> bit l-1).
// Iteration and printing are in increasing label order; ordering between sets
// is lexicographic on the increasing label sequences.
class LabelSet {
 public:
  constexpr LabelSet() = default;
  LabelSet(std::initializer_list<int> labels);
  explicit LabelSet(const std::vector<int>& labels);

  static constexpr LabelSet from_mask(std::uint64_t mask) {
    LabelSet s;
    s.mask_ = mask;
    return s;
  }
  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static LabelSet interval(int lo, int hi);
  // {1..n}
  static LabelSet universe(int n) { return interval(1, n); }

  std::uint64_t mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int label) const;
  int min() const;  // precondition: nonempty
  int max() const;  // precondition: nonempty

  LabelSet& insert(int label);
  LabelSet& erase(int label);
  LabelSet with(int label) const { return LabelSet(*this).insert(label); }
  LabelSet without(int label) const { return LabelSet(*this).erase(label); }

  bool is_subset_of(LabelSet other) const { return (mask_ & ~other.mask_) == 0; }
  bool disjoint_from(LabelSet other) const { return (mask_ & other.mask_) == 0; }

  std::vector<int> labels() const;

  friend LabelSet operator|(LabelSet a, LabelSet b) { return from_mask(a.mask_ | b.mask_); }
  friend LabelSet operator&(LabelSet a, LabelSet b) { return from_mask(a.mask_ & b.mask_); }
  friend LabelSet operator-(LabelSet a, LabelSet b) { return from_mask(a.mask_ & ~b.mask_); }
  friend bool operator==(LabelSet a, LabelSet b) { return a.mask_ == b.mask_; }
  friend std::strong_ordering operator<=>(LabelSet a, LabelSet b);

 private:
  std::uint64_t mask_ = 0;
};

// "{1,2,5}"
std::string to_string(LabelSet s);

// Parses "1,2,5", "{1,2,5}" or "" (empty set). Throws LabelError on junk.
LabelSet parse_label_set(const std::string& text);

// The marking set {1..n}.
struct MarkingSet {
  int n = 0;

  LabelSet all() const { return LabelSet::universe(n); }
  LabelSet complement(LabelSet s) const { return all() - s; }
};

// Checks kMinMarkings <= n <= kMaxMarkings; throws SizeError otherwise.
void require_marking_count(int n);
// Checks 1 <= label <= n; throws LabelError otherwise.
void require_label(int n, int label);
// Checks s is a subset of {1..n}; throws LabelError otherwise.
void require_labels(int n, LabelSet s);

// Boundary divisor index E_I = E_{I*}, stored as the side containing label 1.
class BoundaryIndex {
 public:
  int n() const { return n_; }
  LabelSet rep() const { return rep_; }
  LabelSet complement() const { return LabelSet::universe(n_) - rep_; }
  // The one of {rep, complement} that contains `label`.
  LabelSet side_containing(int label) const;

  friend bool operator==(const BoundaryIndex&, const BoundaryIndex&) = default;
  friend std::strong_ordering operator<=>(const BoundaryIndex& a, const BoundaryIndex& b);

 private:
  friend BoundaryIndex canonical_boundary(int n, LabelSet subset);
  BoundaryIndex(int n, LabelSet rep) : n_(n), rep_(rep) {}

  int n_;
  LabelSet rep_;
};

std::string to_string(const BoundaryIndex& b);

// Canonical representative of {I, I*}: the side containing label 1.
// Throws SizeError unless 2 <= |I| <= n-2, LabelError for labels outside 1..n.
BoundaryIndex canonical_boundary(int n, LabelSet subset);

// All boundary indices for n markings, lexicographically sorted.
// There are 2^(n-1) - n - 1 of them.
std::vector<BoundaryIndex> enumerate_boundaries(int n);

// 2^(n-1) - n - 1
std::uint64_t boundary_count(int n);

}  // namespace m0n
