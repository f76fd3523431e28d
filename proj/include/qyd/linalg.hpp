#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qyd/poly.hpp"
#include "qyd/rational.hpp"

namespace qyd {

// Sparse integer row: (column, value) pairs sorted by column, no zero values.
using SparseIntRow = std::vector<std::pair<std::uint64_t, Integer>>;

// Divide a row by the gcd of its entries and make the leading entry positive.
void row_normalize(SparseIntRow& r);

// alpha*r - beta*p, with the entry at skip_col removed. Requires alpha != 0.
SparseIntRow row_combine(const SparseIntRow& r, const Integer& alpha, const SparseIntRow& p,
                         const Integer& beta, std::uint64_t skip_col);

// ---------------------------------------------------------------------------
// Incremental exact echelon form over the integers (equivalently, over the
// rationals after clearing denominators). Stored pivot rows are kept mutually
// reduced: a stored row has no entry at any other stored row's pivot column,
// every row is content-free and starts with a positive pivot entry. All
// arithmetic is exact; iteration order is deterministic.
// ---------------------------------------------------------------------------
class Echelon {
 public:
  // Returns true when the row was independent of the current span (rank grew).
  bool add_row(SparseIntRow row);

  int rank() const { return static_cast<int>(rows_.size()); }

  // Fully reduce a row against the stored pivots (exact, fraction-free).
  SparseIntRow reduce(SparseIntRow row) const;

  // True iff the row lies in the rational span of the rows added so far.
  bool in_span(const SparseIntRow& row) const { return reduce(row).empty(); }

  const std::map<std::uint64_t, SparseIntRow>& pivot_rows() const { return rows_; }

 private:
  void reduce_tail(SparseIntRow& r) const;  // clear entries at pivot columns past the lead
  std::map<std::uint64_t, SparseIntRow> rows_;  // pivot column -> row (lead at that column)
};

// Batch exact rank by fraction-free elimination in increasing column order,
// choosing each pivot among the candidate rows by smallest leading-entry
// bit-length (ties: first input row). Sparse, deterministic, sequential.
int rank_sparse(std::vector<SparseIntRow> rows);

// ---------------------------------------------------------------------------
// Stable dense column numbering for polynomial keys, assigned in first-seen
// order so matrices built from deterministic polynomial iteration are
// themselves deterministic.
// ---------------------------------------------------------------------------
template <class K>
class KeyIndex {
 public:
  std::uint64_t id(const K& k) {
    auto it = ids_.find(k);
    if (it != ids_.end()) return it->second;
    std::uint64_t v = keys_.size();
    ids_.emplace(k, v);
    keys_.push_back(k);
    return v;
  }
  const K& key(std::uint64_t id) const { return keys_.at(id); }
  std::size_t size() const { return keys_.size(); }

 private:
  std::map<K, std::uint64_t> ids_;
  std::vector<K> keys_;
};

// Clear denominators (LCM) and map each key of the polynomial to a column.
SparseIntRow row_from_comm(const CommPoly& p, KeyIndex<Monomial>& cols);
SparseIntRow row_from_nc(const NCPoly& p, KeyIndex<NCWord>& cols);

int rank_of_comm(const std::vector<CommPoly>& ps);
int rank_of_nc(const std::vector<NCPoly>& ps);

// True iff v lies in the rational span of basis (rank does not grow with v).
bool span_contains(const std::vector<CommPoly>& basis, const CommPoly& v);
bool span_contains(const std::vector<NCPoly>& basis, const NCPoly& v);

// ---------------------------------------------------------------------------
// Sparse rational matrix.
// ---------------------------------------------------------------------------
struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, Rational> entries;  // (row, col) -> nonzero value

  void set(int r, int c, const Rational& v);
  Rational get(int r, int c) const;
};

RatMatrix transpose(const RatMatrix& m);
int rank(const RatMatrix& m);

}  // namespace qyd
