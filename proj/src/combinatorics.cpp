#include "m0n/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "m0n/errors.hpp"

namespace m0n {

namespace {

std::uint64_t bit(int label) {
  if (label < 1 || label > kMaxLabel) {
    throw LabelError("label " + std::to_string(label) + " outside 1.." +
                     std::to_string(kMaxLabel));
  }
  return std::uint64_t{1} << (label - 1);
}

}  // namespace

LabelSet::LabelSet(std::initializer_list<int> labels) {
  for (int l : labels) insert(l);
}

LabelSet::LabelSet(const std::vector<int>& labels) {
  for (int l : labels) insert(l);
}

LabelSet LabelSet::interval(int lo, int hi) {
  LabelSet s;
  for (int l = lo; l <= hi; ++l) s.insert(l);
  return s;
}

int LabelSet::size() const { return std::popcount(mask_); }

bool LabelSet::contains(int label) const {
  if (label < 1 || label > kMaxLabel) return false;
  return (mask_ >> (label - 1)) & 1U;
}

int LabelSet::min() const { return std::countr_zero(mask_) + 1; }

int LabelSet::max() const { return 64 - std::countl_zero(mask_); }

LabelSet& LabelSet::insert(int label) {
  mask_ |= bit(label);
  return *this;
}

LabelSet& LabelSet::erase(int label) {
  mask_ &= ~bit(label);
  return *this;
}

std::vector<int> LabelSet::labels() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

std::strong_ordering operator<=>(LabelSet a, LabelSet b) {
  // Lexicographic on increasing label sequences; a proper prefix sorts first.
  std::uint64_t x = a.mask_;
  std::uint64_t y = b.mask_;
  while (x != 0 && y != 0) {
    int lx = std::countr_zero(x);
    int ly = std::countr_zero(y);
    if (lx != ly) return lx <=> ly;
    x &= x - 1;
    y &= y - 1;
  }
  return (x != 0) <=> (y != 0);
}

std::string to_string(LabelSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int l : s.labels()) {
    if (!first) os << ',';
    os << l;
    first = false;
  }
  os << '}';
  return os.str();
}

LabelSet parse_label_set(const std::string& text) {
  LabelSet out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw LabelError("cannot parse label '" + token + "'");
    }
    if (used != token.size()) throw LabelError("cannot parse label '" + token + "'");
    if (out.contains(value)) throw LabelError("label " + token + " repeated");
    out.insert(value);
    token.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      token.push_back(c);
    } else if (c == ',' || c == ' ') {
      flush();
    } else if (c != '{' && c != '}') {
      throw LabelError(std::string("unexpected character '") + c + "' in label set");
    }
  }
  flush();
  return out;
}

void require_marking_count(int n) {
  if (n < kMinMarkings || n > kMaxMarkings) {
    throw SizeError("marking count n=" + std::to_string(n) + " outside " +
                    std::to_string(kMinMarkings) + ".." + std::to_string(kMaxMarkings));
  }
}

void require_label(int n, int label) {
  if (label < 1 || label > n) {
    throw LabelError("label " + std::to_string(label) + " outside 1.." + std::to_string(n));
  }
}

void require_labels(int n, LabelSet s) {
  if (!s.is_subset_of(LabelSet::universe(n))) {
    throw LabelError("labels " + to_string(s - LabelSet::universe(n)) + " outside 1.." +
                     std::to_string(n));
  }
}

LabelSet BoundaryIndex::side_containing(int label) const {
  return rep_.contains(label) ? rep_ : complement();
}

std::strong_ordering operator<=>(const BoundaryIndex& a, const BoundaryIndex& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return a.rep_ <=> b.rep_;
}

std::string to_string(const BoundaryIndex& b) { return "E" + to_string(b.rep()); }

BoundaryIndex canonical_boundary(int n, LabelSet subset) {
  require_marking_count(n);
  require_labels(n, subset);
  const int k = subset.size();
  if (k < 2 || k > n - 2) {
    throw SizeError("boundary index " + to_string(subset) + " has size " + std::to_string(k) +
                    "; need 2.." + std::to_string(n - 2));
  }
  LabelSet rep = subset.contains(1) ? subset : LabelSet::universe(n) - subset;
  return BoundaryIndex(n, rep);
}

std::vector<BoundaryIndex> enumerate_boundaries(int n) {
  require_marking_count(n);
  std::vector<BoundaryIndex> out;
  out.reserve(boundary_count(n));
  // Every canonical rep contains label 1, so walk subsets of {2..n}.
  const std::uint64_t rest = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m < rest; ++m) {
    LabelSet s = LabelSet::from_mask((m << 1) | 1U);
    int k = s.size();
    if (k >= 2 && k <= n - 2) out.push_back(canonical_boundary(n, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t boundary_count(int n) {
  return (std::uint64_t{1} << (n - 1)) - static_cast<std::uint64_t>(n) - 1;
}

}  // namespace m0n
