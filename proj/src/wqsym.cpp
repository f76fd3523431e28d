#include "qyd/wqsym.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "qyd/linalg.hpp"

namespace qyd {

// ---------------------------------------------------------------------------
// Basis-indexed elements.
// ---------------------------------------------------------------------------

WQSymElement WQSymElement::basis(const PackedWord& u, const Rational& c) {
  if (!is_packed(u)) throw std::invalid_argument("WQSymElement::basis: index is not packed");
  WQSymElement f;
  if (c != 0) f.coeffs.emplace(u, c);
  return f;
}

WQSymElement WQSymElement::one() { return basis({}, 1); }

Rational WQSymElement::coeff(const PackedWord& u) const {
  auto it = coeffs.find(u);
  return it == coeffs.end() ? Rational(0) : it->second;
}

bool WQSymElement::is_homogeneous(int* length) const {
  int len = coeffs.empty() ? 0 : static_cast<int>(coeffs.begin()->first.size());
  for (const auto& [u, c] : coeffs)
    if (static_cast<int>(u.size()) != len) return false;
  if (length) *length = len;
  return true;
}

bool WQSymElement::audit_no_zero_terms() const {
  for (const auto& [u, c] : coeffs)
    if (c == 0) return false;
  return true;
}

WQSymElement& WQSymElement::operator+=(const WQSymElement& o) {
  if (&o == this) {
    for (auto& [u, c] : coeffs) c *= 2;
    return *this;
  }
  for (const auto& [u, c] : o.coeffs) {
    auto it = coeffs.find(u);
    if (it == coeffs.end()) {
      coeffs.emplace(u, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  return *this;
}

WQSymElement& WQSymElement::operator-=(const WQSymElement& o) {
  if (&o == this) {
    coeffs.clear();
    return *this;
  }
  for (const auto& [u, c] : o.coeffs) {
    auto it = coeffs.find(u);
    if (it == coeffs.end()) {
      coeffs.emplace(u, -c);
    } else {
      it->second -= c;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  return *this;
}

WQSymElement WQSymElement::operator-() const {
  WQSymElement out;
  for (const auto& [u, c] : coeffs) out.coeffs.emplace(u, -c);
  return out;
}

WQSymElement& WQSymElement::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs.clear();
    return *this;
  }
  for (auto& [u, v] : coeffs) v *= c;
  return *this;
}

WQSymElement operator+(WQSymElement a, const WQSymElement& b) {
  a += b;
  return a;
}

WQSymElement operator-(WQSymElement a, const WQSymElement& b) {
  a -= b;
  return a;
}

WQSymElement operator*(const Rational& c, WQSymElement f) {
  f *= c;
  return f;
}

std::string WQSymElement::str() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [u, c] : coeffs) {
    if (!s.empty()) s += " + ";
    s += rat_str(c) + "*P:" + (u.empty() ? std::string("()") : word_str(u));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Expansions.
// ---------------------------------------------------------------------------

NCPoly p_expand(const PackedWord& u, int n_vars) {
  if (n_vars < 0) throw std::invalid_argument("p_expand: negative letter count");
  if (!is_packed(u)) throw std::invalid_argument("p_expand: index is not packed");
  if (u.empty()) return NCPoly::constant(1);
  const int d = *std::max_element(u.begin(), u.end());
  NCPoly out;
  if (n_vars < d) return out;
  // Every strictly increasing choice of d letter values realizes the pattern.
  std::vector<int> S(static_cast<std::size_t>(d));
  for (int t = 0; t < d; ++t) S[static_cast<std::size_t>(t)] = t + 1;
  while (true) {
    NCWord w;
    w.reserve(u.size());
    for (int letter : u) w.push_back(Letter{'a', S[static_cast<std::size_t>(letter) - 1]});
    out.terms.emplace(std::move(w), Rational(1));
    int t = d - 1;
    while (t >= 0 && S[static_cast<std::size_t>(t)] == n_vars - (d - 1 - t)) --t;
    if (t < 0) break;
    ++S[static_cast<std::size_t>(t)];
    for (int z = t + 1; z < d; ++z) S[static_cast<std::size_t>(z)] = S[static_cast<std::size_t>(z) - 1] + 1;
  }
  return out;
}

NCPoly wq_expand(const WQSymElement& f, int n_vars) {
  NCPoly out;
  for (const auto& [u, c] : f.coeffs) out += c * p_expand(u, n_vars);
  return out;
}

NCAlphabetSpec virtual_a(int n) {
  if (n < 0) throw std::invalid_argument("virtual_a: negative letter count");
  NCAlphabetSpec a;
  a.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) a.push_back({i % 2 ? -1 : +1, Letter{'a', i}});
  return a;
}

NCPoly p_expand_on(const PackedWord& u, const NCAlphabetSpec& alph) {
  if (!is_packed(u)) throw std::invalid_argument("p_expand_on: index is not packed");
  for (const NCAlphabetEntry& e : alph)
    if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("p_expand_on: entry sign must be +1 or -1");
  const PackedWord us = sorted_word(u);
  const Composition parts = word_eval(us);
  std::vector<int> signs;
  signs.reserve(alph.size());
  for (const NCAlphabetEntry& e : alph) signs.push_back(e.sign);
  NCPoly res = detail::signed_block_dp<NCPoly>(
      parts, signs, NCPoly::constant(1),
      [&alph](const NCPoly& cell, int j, int s) {
        return cell * NCPoly::word(NCWord(static_cast<std::size_t>(s),
                                          alph[static_cast<std::size_t>(j)].letter));
      });
  if (us != u) res = res.position_action(sorting_perm(u));
  return res;
}

NCPoly p_virtual_expand(const PackedWord& u, int n) { return p_expand_on(u, virtual_a(n)); }

NCPoly wq_virtual_expand(const WQSymElement& f, int n) {
  NCPoly out;
  for (const auto& [u, c] : f.coeffs) out += c * p_virtual_expand(u, n);
  return out;
}

// ---------------------------------------------------------------------------
// Functional equation for noncommutative truncation families.
// ---------------------------------------------------------------------------

FuncEqReport check_functional_eq_nc(const std::function<NCPoly(int)>& family, int n_max) {
  if (n_max < 0) throw std::invalid_argument("check_functional_eq_nc: negative n_max");
  std::vector<NCPoly> E;
  E.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) E.push_back(family(n));
  for (int n = 1; n <= n_max; ++n)
    if (E[static_cast<std::size_t>(n)].drop_letter(Letter{'a', n}) != E[static_cast<std::size_t>(n) - 1])
      return {false, "stability", n, 0};
  const NCPoly T = NCPoly::letter(Letter{'c', 1});
  for (int n = 2; n <= n_max; ++n)
    for (int i = 1; i < n; ++i) {
      NCPoly lhs = E[static_cast<std::size_t>(n)].substitute(
          {{Letter{'a', i}, T}, {Letter{'a', i + 1}, T}});
      std::map<Letter, Letter> ren;
      for (int j = i; j <= n - 2; ++j) ren[Letter{'a', j}] = Letter{'a', j + 2};
      NCPoly rhs = E[static_cast<std::size_t>(n) - 2].rename(ren);
      if (lhs != rhs) return {false, "equation", n, i};
    }
  return {};
}

// ---------------------------------------------------------------------------
// Product by expansion and re-expansion.
// ---------------------------------------------------------------------------

namespace {

// Rewrite a sum of equal-length words as a combination of basis expansions by
// peeling the packed pattern of the least remaining word. For a genuine
// product of expansions the least word is always packed and each pattern is
// peeled exactly once; anything else is an internal inconsistency.
WQSymElement reexpand_in_basis(NCPoly X, int n_letters) {
  WQSymElement out;
  while (!X.is_zero()) {
    const auto& [w0, c0] = *X.terms.begin();
    PackedWord idx;
    idx.reserve(w0.size());
    for (const Letter& l : w0) {
      if (l.fam != 'a') throw std::logic_error("wq_product: unexpected letter family in re-expansion");
      idx.push_back(l.idx);
    }
    if (!is_packed(idx)) throw std::logic_error("wq_product: remainder is not re-expandable in the basis");
    const Rational c = c0;
    if (!out.coeffs.emplace(idx, c).second)
      throw std::logic_error("wq_product: re-expansion revisited a basis index");
    X -= c * p_expand(idx, n_letters);
  }
  return out;
}

}  // namespace

WQSymElement wq_product(const WQSymElement& U, const WQSymElement& V) {
  WQSymElement out;
  for (const auto& [u, cu] : U.coeffs)
    for (const auto& [v, cv] : V.coeffs) {
      const int L = static_cast<int>(u.size() + v.size());
      NCPoly X = p_expand(u, L) * p_expand(v, L);
      out += (cu * cv) * reexpand_in_basis(std::move(X), L);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Position action and the deletion operator.
// ---------------------------------------------------------------------------

NCPoly sn_action(const NCPoly& f, const Permutation& s) { return f.position_action(s); }

WQSymElement sn_action(const WQSymElement& f, const Permutation& s) {
  WQSymElement out;
  for (const auto& [u, c] : f.coeffs) {
    if (static_cast<int>(u.size()) != s.n())
      throw std::invalid_argument("sn_action: word length does not match the permutation size");
    out.coeffs.emplace(word_action(u, s), c);
  }
  return out;
}

WQSymElement delta_op(const WQSymElement& f) {
  WQSymElement out;
  for (const auto& [u, c] : f.coeffs) {
    if (u.empty()) continue;  // the unit is annihilated
    const int top = *std::max_element(u.begin(), u.end());
    if (u.back() != top) continue;
    if (std::count(u.begin(), u.end(), top) != 1) continue;
    PackedWord v(u.begin(), u.end() - 1);
    out += WQSymElement::basis(v, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Letter changes between the alternating alphabet and the two-row letters.
// ---------------------------------------------------------------------------

NCPoly phi_a_to_bd(const NCPoly& f, int m) {
  if (m < 0) throw std::invalid_argument("phi_a_to_bd: negative width");
  for (const auto& [w, c] : f.terms)
    for (const Letter& l : w)
      if (l.fam != 'a' || l.idx < 1 || l.idx > 2 * m + 1)
        throw std::invalid_argument("phi_a_to_bd: input letter outside a1..a(2m+1)");
  std::map<Letter, NCPoly> bind;
  for (int ell = 1; ell <= 2 * m + 1; ++ell) {
    const int i = ell / 2;
    NCPoly s;
    const int d_from = (ell % 2) ? i + 1 : i;
    for (int t = d_from; t <= m; ++t) s += NCPoly::letter(Letter{'d', t});
    for (int t = 1; t <= i; ++t) s -= NCPoly::letter(Letter{'b', t});
    bind[Letter{'a', ell}] = std::move(s);
  }
  return f.substitute(bind);
}

NCPoly phi_bd_to_a(const NCPoly& f, int m) {
  if (m < 0) throw std::invalid_argument("phi_bd_to_a: negative width");
  for (const auto& [w, c] : f.terms)
    for (const Letter& l : w)
      if ((l.fam != 'b' && l.fam != 'd') || l.idx < 1 || l.idx > m)
        throw std::invalid_argument("phi_bd_to_a: input letter outside b1..bm, d1..dm");
  std::map<Letter, NCPoly> bind;
  for (int i = 1; i <= m; ++i) {
    bind[Letter{'b', i}] =
        NCPoly::letter(Letter{'a', 2 * i - 1}) - NCPoly::letter(Letter{'a', 2 * i});
    bind[Letter{'d', i}] =
        NCPoly::letter(Letter{'a', 2 * i}) - NCPoly::letter(Letter{'a', 2 * i + 1});
  }
  return f.substitute(bind);
}

// ---------------------------------------------------------------------------
// Dense convolution for letter-change images of basis expansions.
//
// Words of a fixed length over the 2w two-row letters are encoded as base-2w
// numerals (letter order b1..bw, d1..dw; leftmost position most significant),
// and the block rule is run with dense overflow-checked integer rows as the
// DP cells, multiplying by cached sparse powers of each alphabet letter's
// image linear form. This computes the same polynomial as expanding on the
// alternating alphabet and substituting, without materializing huge
// intermediate rational maps.
// ---------------------------------------------------------------------------

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("wqsym: dense accumulation overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("wqsym: dense accumulation overflow");
  return r;
}

std::uint64_t upow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int k = 0; k < exp; ++k) {
    if (base != 0 && r > UINT64_MAX / base)
      throw std::overflow_error("wqsym: dense index space overflow");
    r *= base;
  }
  return r;
}

// Image of the alphabet letter of index ell at width w, as (digit, +-1) pairs:
// odd ell = 2i+1 maps to (d_{i+1}+...+d_w) - (b_1+...+b_i), even ell = 2i to
// (d_i+...+d_w) - (b_1+...+b_i). Digits: b_t -> t-1, d_t -> w+t-1.
std::vector<std::pair<int, int>> phi_letter_form(int ell, int w) {
  std::vector<std::pair<int, int>> form;
  const int i = ell / 2;
  for (int t = 1; t <= i; ++t) form.emplace_back(t - 1, -1);
  const int d_from = (ell % 2) ? i + 1 : i;
  for (int t = d_from; t <= w; ++t) form.emplace_back(w + t - 1, +1);
  return form;
}

using SparseVec = std::vector<std::pair<std::uint64_t, long long>>;

// pows[j][s]: the s-th concatenation power of the image form of letter j+1,
// indexed in the base-2w space of s-letter words.
std::vector<std::vector<SparseVec>> phi_letter_powers(int w, int max_pow) {
  const std::uint64_t B = 2 * static_cast<std::uint64_t>(w);
  const int letters = 2 * w + 1;
  std::vector<std::vector<SparseVec>> pows(static_cast<std::size_t>(letters));
  for (int j = 0; j < letters; ++j) {
    auto& tab = pows[static_cast<std::size_t>(j)];
    tab.resize(static_cast<std::size_t>(max_pow) + 1);
    tab[0] = {{0, 1}};
    const auto form = phi_letter_form(j + 1, w);
    for (int s = 1; s <= max_pow; ++s) {
      SparseVec next;
      next.reserve(tab[static_cast<std::size_t>(s) - 1].size() * form.size());
      for (const auto& [idx, c] : tab[static_cast<std::size_t>(s) - 1])
        for (const auto& [dg, fc] : form)
          next.emplace_back(idx * B + static_cast<std::uint64_t>(dg), checked_mul(c, fc));
      std::sort(next.begin(), next.end());
      tab[static_cast<std::size_t>(s)] = std::move(next);
    }
  }
  return pows;
}

// Dense integer row over fixed-length words; deg < 0 marks an unreached cell.
struct DenseCell {
  int deg = -1;
  std::vector<long long> v;

  DenseCell& operator+=(const DenseCell& o) {
    if (o.deg < 0) return *this;
    if (deg < 0) {
      *this = o;
      return *this;
    }
    if (deg != o.deg || v.size() != o.v.size())
      throw std::logic_error("wqsym: dense cell degree mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(v[i], o.v[i]);
    return *this;
  }

  DenseCell operator-() const {
    DenseCell out = *this;
    for (long long& x : out.v) x = checked_mul(x, -1);
    return out;
  }
};

// Image row of the basis expansion of the nondecreasing word with letter
// multiplicities `parts`, over n-letter two-row words at width w.
DenseCell dense_phi_pattern_row(const Composition& parts, int w, int n) {
  const std::uint64_t B = 2 * static_cast<std::uint64_t>(w);
  const auto pows = phi_letter_powers(w, n);
  std::vector<int> signs;
  signs.reserve(static_cast<std::size_t>(2 * w) + 1);
  for (int i = 1; i <= 2 * w + 1; ++i) signs.push_back(i % 2 ? -1 : +1);
  DenseCell one;
  one.deg = 0;
  one.v = {1};
  return detail::signed_block_dp<DenseCell>(
      parts, signs, one, [&pows, B](const DenseCell& cell, int j, int s) {
        DenseCell out;
        out.deg = cell.deg + s;
        out.v.assign(upow(B, out.deg), 0);
        const std::uint64_t shift = upow(B, s);
        const SparseVec& pw = pows[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
        for (std::uint64_t idx = 0; idx < cell.v.size(); ++idx) {
          const long long c = cell.v[idx];
          if (c == 0) continue;
          const std::uint64_t base = idx * shift;
          for (const auto& [jd, cc] : pw)
            out.v[base + jd] = checked_add(out.v[base + jd], checked_mul(c, cc));
        }
        return out;
      });
}

// Digits of the dense index, leftmost word position first.
std::vector<int> decode_digits(std::uint64_t idx, std::uint64_t B, int n) {
  std::vector<int> g(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    g[static_cast<std::size_t>(k)] = static_cast<int>(idx % B);
    idx /= B;
  }
  return g;
}

std::uint64_t encode_digits(const std::vector<int>& g, std::uint64_t B) {
  std::uint64_t idx = 0;
  for (int dg : g) idx = idx * B + static_cast<std::uint64_t>(dg);
  return idx;
}

// Image row of a general basis index: the pattern row with every word's
// positions permuted by the sorting permutation.
SparseVec sparse_phi_row(const PackedWord& u, int w, const DenseCell& pattern) {
  const std::uint64_t B = 2 * static_cast<std::uint64_t>(w);
  const int n = static_cast<int>(u.size());
  SparseVec row;
  if (pattern.deg < 0) return row;
  const Permutation s = sorting_perm(u);
  bool identity = true;
  for (int k = 1; k <= n; ++k)
    if (s(k) != k) identity = false;
  for (std::uint64_t idx = 0; idx < pattern.v.size(); ++idx) {
    const long long c = pattern.v[idx];
    if (c == 0) continue;
    if (identity) {
      row.emplace_back(idx, c);
      continue;
    }
    const auto g = decode_digits(idx, B, n);
    std::vector<int> g2(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) g2[static_cast<std::size_t>(k) - 1] = g[static_cast<std::size_t>(s(k)) - 1];
    row.emplace_back(encode_digits(g2, B), c);
  }
  if (!identity) std::sort(row.begin(), row.end());
  return row;
}

// Value of the permuted row at one target word, read off the pattern row.
long long dense_query(const PackedWord& u, int w, const DenseCell& pattern,
                      const std::vector<int>& target_digits) {
  if (pattern.deg < 0) return 0;
  const std::uint64_t B = 2 * static_cast<std::uint64_t>(w);
  const int n = static_cast<int>(u.size());
  const Permutation s = sorting_perm(u);
  std::vector<int> g(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    g[static_cast<std::size_t>(s(k)) - 1] = target_digits[static_cast<std::size_t>(k) - 1];
  return pattern.v[encode_digits(g, B)];
}

Letter digit_letter(int dg, int w) {
  return dg < w ? Letter{'b', dg + 1} : Letter{'d', dg - w + 1};
}

// Word positions of each block, alternating b/d letters with increasing
// index: block 2t-1 carries b_t, block 2t carries d_t (blocks in list order).
std::vector<int> block_word_digits(const SetComposition& K, int w, int n) {
  std::vector<int> digits(static_cast<std::size_t>(n), -1);
  for (std::size_t j = 0; j < K.size(); ++j) {
    const int dg = (j % 2 == 0) ? static_cast<int>(j / 2) : w + static_cast<int>(j / 2);
    for (int v : K[j]) digits[static_cast<std::size_t>(v) - 1] = dg;
  }
  return digits;
}

// Nondecreasing word with the given letter multiplicities.
PackedWord pattern_word(const Composition& parts) {
  PackedWord us;
  for (std::size_t t = 0; t < parts.size(); ++t)
    us.insert(us.end(), static_cast<std::size_t>(parts[t]), static_cast<int>(t) + 1);
  return us;
}

constexpr std::uint64_t kFullRankColumns = 30000;   // full-echelon cutoff
constexpr std::uint64_t kDenseImageMax = 1u << 22;  // dense row hard cap

}  // namespace

NCPoly phi_p_virtual_image(const PackedWord& u, int m) {
  if (m < 0) throw std::invalid_argument("phi_p_virtual_image: negative width");
  if (!is_packed(u)) throw std::invalid_argument("phi_p_virtual_image: index is not packed");
  const int n = static_cast<int>(u.size());
  const std::uint64_t B = 2 * static_cast<std::uint64_t>(m);
  if (n > 0 && B == 0) return NCPoly();
  if (upow(B == 0 ? 1 : B, n) > kDenseImageMax)
    throw std::domain_error("phi_p_virtual_image: dense image too large");
  const DenseCell pattern = dense_phi_pattern_row(word_eval(sorted_word(u)), m, n);
  NCPoly out;
  for (const auto& [idx, c] : sparse_phi_row(u, m, pattern)) {
    NCWord word;
    word.reserve(static_cast<std::size_t>(n));
    for (int dg : decode_digits(idx, B, n)) word.push_back(digit_letter(dg, m));
    out.terms.emplace(std::move(word), Rational(static_cast<long>(c)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kernel and image dimensions.
// ---------------------------------------------------------------------------

namespace {

SparseIntRow row_from_wq(const WQSymElement& f, const std::map<PackedWord, std::uint64_t>& col) {
  Integer den = 1;
  for (const auto& [u, c] : f.coeffs)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  SparseIntRow row;
  row.reserve(f.coeffs.size());
  for (const auto& [u, c] : f.coeffs) {
    Rational scaled = c * Rational(den);
    row.emplace_back(col.at(u), scaled.get_num());
  }
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

}  // namespace

int kernel_ideal_dimension(int n) {
  if (n < 0) throw std::invalid_argument("kernel_ideal_dimension: negative degree");
  if (n == 0) return 0;  // the generating set is empty in degree zero
  std::map<PackedWord, std::uint64_t> col;
  {
    std::uint64_t id = 0;
    for (const PackedWord& u : packed_words(n)) col.emplace(u, id++);
  }
  const WQSymElement P1 = WQSymElement::basis({1});
  const auto perms = all_permutations(n);
  Echelon ech;
  std::set<SparseIntRow> seen;
  for (const PackedWord& u : packed_words(n - 1)) {
    const WQSymElement R = wq_product(WQSymElement::basis(u), P1);
    for (const Permutation& s : perms) {
      SparseIntRow row = row_from_wq(sn_action(R, s), col);
      if (seen.insert(row).second) ech.add_row(std::move(row));
    }
  }
  return ech.rank();
}

namespace {

// Exact rank of the letter-change images of all degree-n basis expansions at
// width w. Small word spaces take a direct echelon. Larger ones are certified
// by squeezing: the permuted-ideal dimension bounds the rank from above
// (each ideal generator's image is zero, witnessed by the three checks below),
// and the rank of the column restriction to the set-composition words bounds
// it from below; the certificate throws unless the bounds meet.
int phi_image_rank_at_width(int n, int w, int& ideal_dim_memo) {
  const std::uint64_t B = 2 * static_cast<std::uint64_t>(w);
  const std::uint64_t D = upow(B, n);
  const auto patterns = compositions_of(n);
  std::map<Composition, DenseCell> pattern_rows;
  for (const Composition& I : patterns) pattern_rows.emplace(I, dense_phi_pattern_row(I, w, n));
  const auto words = packed_words(n);

  if (D <= kFullRankColumns) {
    std::vector<SparseIntRow> rows;
    rows.reserve(words.size());
    for (const PackedWord& u : words) {
      const DenseCell& pat = pattern_rows.at(word_eval(sorted_word(u)));
      SparseIntRow r;
      for (const auto& [idx, c] : sparse_phi_row(u, w, pat))
        r.emplace_back(idx, Integer(static_cast<long>(c)));
      rows.push_back(std::move(r));
    }
    return rank_sparse(std::move(rows));
  }

  if (D > kDenseImageMax)
    throw std::domain_error("phi_kernel_dimension: width too large for the exact certificate");

  const int letters = 2 * w + 1;
  // The one-letter expansion maps to zero.
  if (!phi_a_to_bd(p_virtual_expand({1}, letters), w).is_zero())
    throw std::logic_error("phi_kernel_dimension: one-letter image certificate failed");
  // Alphabet evaluation turns the product with the one-letter element into a
  // concatenation product, for every left factor of degree n-1.
  const WQSymElement P1 = WQSymElement::basis({1});
  const NCPoly PA1 = p_virtual_expand({1}, letters);
  for (const PackedWord& W : packed_words(n - 1)) {
    const WQSymElement pw = WQSymElement::basis(W);
    if (wq_virtual_expand(wq_product(pw, P1), letters) != wq_virtual_expand(pw, letters) * PA1)
      throw std::logic_error("phi_kernel_dimension: product certificate failed");
  }
  // Nondecreasing-pattern expansions are invariant under position swaps
  // inside equal-letter runs, which extends the zero images across the whole
  // permutation orbit of every ideal generator.
  for (const Composition& I : patterns) {
    const PackedWord us = pattern_word(I);
    const NCPoly X = p_virtual_expand(us, letters);
    for (int k = 1; k < n; ++k) {
      if (us[static_cast<std::size_t>(k) - 1] != us[static_cast<std::size_t>(k)]) continue;
      Permutation tau = perm_identity(n);
      std::swap(tau.img[static_cast<std::size_t>(k) - 1], tau.img[static_cast<std::size_t>(k)]);
      if (X.position_action(tau) != X)
        throw std::logic_error("phi_kernel_dimension: symmetry certificate failed");
    }
  }
  if (ideal_dim_memo < 0) ideal_dim_memo = kernel_ideal_dimension(n);
  const int r_up = static_cast<int>(words.size()) - ideal_dim_memo;

  const auto evens = set_compositions(n, BlockParity::even);
  std::vector<std::vector<int>> col_digits;
  col_digits.reserve(evens.size());
  for (const SetComposition& K : evens) col_digits.push_back(block_word_digits(K, w, n));
  std::vector<SparseIntRow> rows;
  rows.reserve(words.size());
  for (const PackedWord& u : words) {
    const DenseCell& pat = pattern_rows.at(word_eval(sorted_word(u)));
    SparseIntRow r;
    for (std::size_t c = 0; c < col_digits.size(); ++c) {
      const long long val = dense_query(u, w, pat, col_digits[c]);
      if (val != 0) r.emplace_back(c, Integer(static_cast<long>(val)));
    }
    rows.push_back(std::move(r));
  }
  const int r_low = rank_sparse(std::move(rows));
  if (r_low != r_up)
    throw std::logic_error("phi_kernel_dimension: rank bound certificates disagree");
  return r_up;
}

}  // namespace

int phi_kernel_dimension(int n, int m) {
  if (n < 1) throw std::invalid_argument("phi_kernel_dimension: need degree >= 1");
  if (m < n) throw std::invalid_argument("phi_kernel_dimension: truncation width below degree");
  int ideal_dim_memo = -1;
  const int r0 = phi_image_rank_at_width(n, m, ideal_dim_memo);
  const int r1 = phi_image_rank_at_width(n, m + 1, ideal_dim_memo);
  if (r0 != r1)
    throw std::logic_error("phi_kernel_dimension: rank unstable across consecutive widths");
  return static_cast<int>(packed_words(n).size()) - r0;
}

// ---------------------------------------------------------------------------
// Noncommutative solution-space membership.
// ---------------------------------------------------------------------------

FuncEqReport check_solprime_nc(const std::function<NCPoly(int)>& family, int m_max) {
  if (m_max < 0) throw std::invalid_argument("check_solprime_nc: negative m_max");
  std::vector<NCPoly> H;
  H.reserve(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) H.push_back(family(m));
  for (int m = 1; m <= m_max; ++m)
    if (H[static_cast<std::size_t>(m)].drop_letter(Letter{'b', m}).drop_letter(Letter{'d', m}) !=
        H[static_cast<std::size_t>(m) - 1])
      return {false, "stability", m, 0};
  for (int m = 1; m <= m_max; ++m)
    for (int i = 1; i <= m; ++i) {
      const NCPoly lhs = H[static_cast<std::size_t>(m)].drop_letter(Letter{'d', i});
      NCPoly rhs;
      if (i == m) {
        rhs = H[static_cast<std::size_t>(m) - 1];
      } else {
        std::map<Letter, NCPoly> bind;
        bind[Letter{'b', i}] = NCPoly::letter(Letter{'b', i}) + NCPoly::letter(Letter{'b', i + 1});
        for (int j = i + 1; j <= m - 1; ++j) bind[Letter{'b', j}] = NCPoly::letter(Letter{'b', j + 1});
        for (int j = i; j <= m - 1; ++j) bind[Letter{'d', j}] = NCPoly::letter(Letter{'d', j + 1});
        rhs = H[static_cast<std::size_t>(m) - 1].substitute(bind);
      }
      if (lhs != rhs) return {false, "d-zero", m, i};
    }
  for (int m = 1; m <= m_max; ++m)
    for (int i = 1; i <= m; ++i) {
      const NCPoly lhs = H[static_cast<std::size_t>(m)].drop_letter(Letter{'b', i});
      std::map<Letter, NCPoly> bind;
      if (i == 1) {
        for (int j = 1; j <= m - 1; ++j) {
          bind[Letter{'b', j}] = NCPoly::letter(Letter{'b', j + 1});
          bind[Letter{'d', j}] = NCPoly::letter(Letter{'d', j + 1});
        }
      } else {
        for (int j = i; j <= m - 1; ++j) bind[Letter{'b', j}] = NCPoly::letter(Letter{'b', j + 1});
        bind[Letter{'d', i - 1}] =
            NCPoly::letter(Letter{'d', i - 1}) + NCPoly::letter(Letter{'d', i});
        for (int j = i; j <= m - 1; ++j) bind[Letter{'d', j}] = NCPoly::letter(Letter{'d', j + 1});
      }
      const NCPoly rhs = H[static_cast<std::size_t>(m) - 1].substitute(bind);
      if (lhs != rhs) return {false, "b-zero", m, i};
    }
  return {};
}

}  // namespace qyd
