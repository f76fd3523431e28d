#include "qyd/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qyd {

void row_normalize(SparseIntRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : r) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  if (g != 1)
    for (auto& [c, v] : r) v /= g;
  if (r.front().second < 0)
    for (auto& [c, v] : r) v = -v;
}

SparseIntRow row_combine(const SparseIntRow& r, const Integer& alpha, const SparseIntRow& p,
                         const Integer& beta, std::uint64_t skip_col) {
  SparseIntRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() && j < p.size()) {
    if (r[i].first == p[j].first) {
      if (r[i].first != skip_col) {
        Integer v = alpha * r[i].second - beta * p[j].second;
        if (v != 0) out.emplace_back(r[i].first, std::move(v));
      }
      ++i;
      ++j;
    } else if (r[i].first < p[j].first) {
      out.emplace_back(r[i].first, alpha * r[i].second);
      ++i;
    } else {
      out.emplace_back(p[j].first, -(beta * p[j].second));
      ++j;
    }
  }
  for (; i < r.size(); ++i) out.emplace_back(r[i].first, alpha * r[i].second);
  for (; j < p.size(); ++j) out.emplace_back(p[j].first, -(beta * p[j].second));
  return out;
}

namespace {

// Zero out r's entry at the pivot row's lead column (fraction-free).
void eliminate_against(SparseIntRow& r, const SparseIntRow& p, std::uint64_t col,
                       const Integer& r_entry) {
  Integer g = gcd(r_entry, p.front().second);
  Integer alpha = p.front().second / g;
  Integer beta = r_entry / g;
  r = row_combine(r, alpha, p, beta, col);
  row_normalize(r);
}

}  // namespace

void Echelon::reduce_tail(SparseIntRow& r) const {
  // Stored rows carry no entries at other pivot columns, so one pass in
  // increasing column order clears every pivot column past the lead.
  if (r.empty()) return;
  for (auto it = rows_.upper_bound(r.front().first); it != rows_.end(); ++it) {
    auto pos = std::lower_bound(r.begin(), r.end(), it->first,
                                [](const auto& e, std::uint64_t col) { return e.first < col; });
    if (pos == r.end()) break;
    if (pos->first != it->first) continue;
    eliminate_against(r, it->second, it->first, pos->second);
    if (r.empty()) return;
  }
}

bool Echelon::add_row(SparseIntRow r) {
  row_normalize(r);
  while (!r.empty()) {
    auto it = rows_.find(r.front().first);
    if (it == rows_.end()) break;
    eliminate_against(r, it->second, it->first, r.front().second);
  }
  if (r.empty()) return false;
  reduce_tail(r);
  std::uint64_t c = r.front().first;
  // Back-reduce: clear column c from already stored rows (their pivots are
  // the only columns < c they can lead with, and only rows with pivot < c
  // can touch column c at all).
  for (auto it = rows_.begin(); it != rows_.end() && it->first < c; ++it) {
    SparseIntRow& q = it->second;
    auto pos = std::lower_bound(q.begin(), q.end(), c,
                                [](const auto& e, std::uint64_t col) { return e.first < col; });
    if (pos == q.end() || pos->first != c) continue;
    eliminate_against(q, r, c, pos->second);
  }
  rows_.emplace(c, std::move(r));
  return true;
}

SparseIntRow Echelon::reduce(SparseIntRow r) const {
  row_normalize(r);
  while (!r.empty()) {
    auto it = rows_.find(r.front().first);
    if (it == rows_.end()) break;
    eliminate_against(r, it->second, it->first, r.front().second);
  }
  reduce_tail(r);
  return r;
}

int rank_sparse(std::vector<SparseIntRow> rows) {
  for (auto& r : rows) row_normalize(r);
  // Bucket rows by leading column; eliminate columns left to right, picking
  // the pivot with the smallest leading entry by bit-length.
  std::map<std::uint64_t, std::vector<std::size_t>> by_lead;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty()) by_lead[rows[i].front().first].push_back(i);
  int rk = 0;
  while (!by_lead.empty()) {
    auto bucket = by_lead.begin();
    std::uint64_t col = bucket->first;
    std::vector<std::size_t> idxs = std::move(bucket->second);
    by_lead.erase(bucket);
    std::size_t piv = idxs[0];
    long best = bit_length(rows[piv].front().second);
    for (std::size_t k = 1; k < idxs.size(); ++k) {
      long bl = bit_length(rows[idxs[k]].front().second);
      if (bl < best) {
        best = bl;
        piv = idxs[k];
      }
    }
    ++rk;
    for (std::size_t i : idxs) {
      if (i == piv) continue;
      eliminate_against(rows[i], rows[piv], col, rows[i].front().second);
      if (!rows[i].empty()) by_lead[rows[i].front().first].push_back(i);
    }
  }
  return rk;
}

namespace {

template <class Terms, class MakeCol>
SparseIntRow row_from_terms(const Terms& terms, MakeCol make_col) {
  Integer den_lcm = 1;
  for (const auto& [k, v] : terms) den_lcm = lcm(den_lcm, Integer(v.get_den()));
  SparseIntRow r;
  r.reserve(terms.size());
  for (const auto& [k, v] : terms)
    r.emplace_back(make_col(k), Integer(v.get_num()) * (den_lcm / Integer(v.get_den())));
  std::sort(r.begin(), r.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

}  // namespace

SparseIntRow row_from_comm(const CommPoly& p, KeyIndex<Monomial>& cols) {
  return row_from_terms(p.terms, [&](const Monomial& m) { return cols.id(m); });
}

SparseIntRow row_from_nc(const NCPoly& p, KeyIndex<NCWord>& cols) {
  return row_from_terms(p.terms, [&](const NCWord& w) { return cols.id(w); });
}

int rank_of_comm(const std::vector<CommPoly>& ps) {
  KeyIndex<Monomial> cols;
  std::vector<SparseIntRow> rows;
  rows.reserve(ps.size());
  for (const auto& p : ps) rows.push_back(row_from_comm(p, cols));
  return rank_sparse(std::move(rows));
}

int rank_of_nc(const std::vector<NCPoly>& ps) {
  KeyIndex<NCWord> cols;
  std::vector<SparseIntRow> rows;
  rows.reserve(ps.size());
  for (const auto& p : ps) rows.push_back(row_from_nc(p, cols));
  return rank_sparse(std::move(rows));
}

bool span_contains(const std::vector<CommPoly>& basis, const CommPoly& v) {
  KeyIndex<Monomial> cols;
  Echelon e;
  for (const auto& p : basis) e.add_row(row_from_comm(p, cols));
  return e.in_span(row_from_comm(v, cols));
}

bool span_contains(const std::vector<NCPoly>& basis, const NCPoly& v) {
  KeyIndex<NCWord> cols;
  Echelon e;
  for (const auto& p : basis) e.add_row(row_from_nc(p, cols));
  return e.in_span(row_from_nc(v, cols));
}

void RatMatrix::set(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::invalid_argument("RatMatrix::set: index out of range");
  if (v == 0)
    entries.erase({r, c});
  else
    entries[{r, c}] = v;
}

Rational RatMatrix::get(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Rational(0) : it->second;
}

RatMatrix transpose(const RatMatrix& m) {
  RatMatrix t;
  t.rows = m.cols;
  t.cols = m.rows;
  for (const auto& [rc, v] : m.entries) t.entries[{rc.second, rc.first}] = v;
  return t;
}

int rank(const RatMatrix& m) {
  std::vector<SparseIntRow> rows(m.rows);
  // entries iterate in (row, col) order, so each row arrives column-sorted
  std::map<int, Integer> den_lcm;
  for (const auto& [rc, v] : m.entries) {
    auto it = den_lcm.find(rc.first);
    if (it == den_lcm.end())
      den_lcm.emplace(rc.first, Integer(v.get_den()));
    else
      it->second = lcm(it->second, Integer(v.get_den()));
  }
  for (const auto& [rc, v] : m.entries) {
    if (v == 0) continue;
    const Integer& L = den_lcm.at(rc.first);
    rows[rc.first].emplace_back(static_cast<std::uint64_t>(rc.second),
                                Integer(v.get_num()) * (L / Integer(v.get_den())));
  }
  return rank_sparse(std::move(rows));
}

}  // namespace qyd
