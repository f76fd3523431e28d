#include "qyd/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qyd {

int comp_weight(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative weight");
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  for (int first = 1; first <= n; ++first) {
    for (const Composition& rest : compositions_of(n - first)) {
      Composition c;
      c.reserve(rest.size() + 1);
      c.push_back(first);
      c.insert(c.end(), rest.begin(), rest.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

Composition comp_mirror(Composition c) {
  std::reverse(c.begin(), c.end());
  return c;
}

std::vector<Composition> coarsenings(const Composition& c) {
  if (c.empty()) return {Composition{}};
  int gaps = static_cast<int>(c.size()) - 1;
  std::vector<Composition> out;
  out.reserve(1u << gaps);
  for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
    Composition j;
    int acc = c[0];
    for (int g = 0; g < gaps; ++g) {
      if (mask & (1u << g)) {
        acc += c[static_cast<std::size_t>(g) + 1];  // merge across gap g
      } else {
        j.push_back(acc);
        acc = c[static_cast<std::size_t>(g) + 1];
      }
    }
    j.push_back(acc);
    out.push_back(std::move(j));
  }
  return out;
}

namespace {

void add_to(std::map<Composition, long>& m, const Composition& head, const std::map<Composition, long>& tails) {
  for (const auto& [t, mult] : tails) {
    Composition c;
    c.reserve(head.size() + t.size());
    c = head;
    c.insert(c.end(), t.begin(), t.end());
    m[c] += mult;
  }
}

std::map<Composition, long> shuffle_rec(const Composition& a, const Composition& b, bool quasi) {
  if (a.empty()) return {{b, 1}};
  if (b.empty()) return {{a, 1}};
  Composition ta(a.begin() + 1, a.end());
  Composition tb(b.begin() + 1, b.end());
  std::map<Composition, long> out;
  add_to(out, {a[0]}, shuffle_rec(ta, b, quasi));
  add_to(out, {b[0]}, shuffle_rec(a, tb, quasi));
  if (quasi) add_to(out, {a[0] + b[0]}, shuffle_rec(ta, tb, quasi));
  return out;
}

}  // namespace

std::map<Composition, long> quasi_shuffle(const Composition& a, const Composition& b) {
  return shuffle_rec(a, b, true);
}

std::map<Composition, long> shuffle(const Composition& a, const Composition& b) {
  return shuffle_rec(a, b, false);
}

std::string comp_str(const Composition& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(c[i]);
  }
  return s;
}

Composition comp_parse(const std::string& s) {
  Composition c;
  if (s.empty() || s == "()") return c;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t dot = s.find('.', pos);
    std::string tok = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v <= 0) throw std::invalid_argument("");
      c.push_back(v);
    } catch (...) {
      throw std::invalid_argument("comp_parse: bad composition '" + s + "'");
    }
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return c;
}

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

namespace {

void partitions_rec(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int wmax) {
  std::vector<Partition> out;
  for (int n = 0; n <= wmax; ++n) {
    auto pn = partitions_of(n);
    out.insert(out.end(), pn.begin(), pn.end());
  }
  return out;
}

Partition conjugate(const Partition& p) {
  Partition q;
  if (p.empty()) return q;
  q.resize(static_cast<std::size_t>(p[0]), 0);
  for (int row : p)
    for (int j = 0; j < row; ++j) q[static_cast<std::size_t>(j)] += 1;
  return q;
}

Permutation perm_identity(int n) {
  Permutation s;
  s.img.resize(static_cast<std::size_t>(n));
  std::iota(s.img.begin(), s.img.end(), 1);
  return s;
}

Permutation perm_product(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("perm_product: size mismatch");
  Permutation r;
  r.img.resize(a.img.size());
  for (int i = 1; i <= a.n(); ++i) r.img[static_cast<std::size_t>(i) - 1] = b(a(i));
  return r;
}

Permutation perm_inverse(const Permutation& s) {
  Permutation r;
  r.img.resize(s.img.size());
  for (int i = 1; i <= s.n(); ++i) r.img[static_cast<std::size_t>(s(i)) - 1] = i;
  return r;
}

std::vector<std::vector<int>> perm_cycles(const Permutation& s) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(s.img.size(), false);
  for (int i = 1; i <= s.n(); ++i) {
    if (seen[static_cast<std::size_t>(i) - 1]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      cyc.push_back(j);
      seen[static_cast<std::size_t>(j) - 1] = true;
      j = s(j);
    } while (j != i);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

int perm_sign(const Permutation& s) {
  int c = static_cast<int>(perm_cycles(s).size());
  return ((s.n() - c) % 2 == 0) ? 1 : -1;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation s = perm_identity(n);
  do {
    out.push_back(s);
  } while (std::next_permutation(s.img.begin(), s.img.end()));
  return out;
}

std::string perm_str(const Permutation& s) {
  std::string r = "[";
  for (std::size_t i = 0; i < s.img.size(); ++i) {
    if (i) r += ',';
    r += std::to_string(s.img[i]);
  }
  return r + "]";
}

Partition cycle_type(const Permutation& s) {
  Partition t;
  for (const auto& c : perm_cycles(s)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end(), std::greater<int>());
  return t;
}

std::vector<std::pair<Permutation, Permutation>> two_factorizations(const Permutation& pi) {
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const Permutation& sigma : all_permutations(pi.n())) {
    // σ·τ = π with "apply σ, then τ" forces τ = σ^{-1}·π.
    Permutation tau = perm_product(perm_inverse(sigma), pi);
    out.emplace_back(sigma, tau);
  }
  return out;
}

namespace {

void packed_words_rec(int n, int pos, int maxv, int used, PackedWord& cur, std::vector<PackedWord>& out) {
  if (pos == n) {
    if (used == maxv) out.push_back(cur);
    return;
  }
  int remaining = n - pos;
  for (int v = 1; v <= n; ++v) {
    int nmax = std::max(maxv, v);
    int nused = used + ((v <= maxv && std::find(cur.begin(), cur.end(), v) == cur.end()) || v > maxv ? 1 : 0);
    // Prune: every value 1..nmax must still be able to appear.
    if (nmax - nused > remaining - 1) continue;
    cur.push_back(v);
    packed_words_rec(n, pos + 1, nmax, nused, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool is_packed(const PackedWord& w) {
  int mx = 0;
  for (int v : w) {
    if (v <= 0) return false;
    mx = std::max(mx, v);
  }
  std::vector<bool> seen(static_cast<std::size_t>(mx) + 1, false);
  for (int v : w) seen[static_cast<std::size_t>(v)] = true;
  for (int v = 1; v <= mx; ++v)
    if (!seen[static_cast<std::size_t>(v)]) return false;
  return true;
}

PackedWord pack(const std::vector<int>& w) {
  std::vector<int> vals(w);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  PackedWord out;
  out.reserve(w.size());
  for (int v : w) {
    auto it = std::lower_bound(vals.begin(), vals.end(), v);
    out.push_back(static_cast<int>(it - vals.begin()) + 1);
  }
  return out;
}

std::vector<PackedWord> packed_words(int n) {
  if (n < 0) throw std::invalid_argument("packed_words: negative length");
  if (n == 0) return {PackedWord{}};
  std::vector<PackedWord> out;
  PackedWord cur;
  packed_words_rec(n, 0, 0, 0, cur, out);
  return out;
}

Composition word_eval(const PackedWord& u) {
  if (!is_packed(u)) throw std::invalid_argument("word_eval: word is not packed");
  int mx = u.empty() ? 0 : *std::max_element(u.begin(), u.end());
  Composition c(static_cast<std::size_t>(mx), 0);
  for (int v : u) c[static_cast<std::size_t>(v) - 1] += 1;
  return c;
}

PackedWord sorted_word(PackedWord u) {
  std::sort(u.begin(), u.end());
  return u;
}

Permutation sorting_perm(const PackedWord& u) {
  PackedWord up = sorted_word(u);
  std::size_t n = u.size();
  Permutation s;
  s.img.resize(n);
  std::vector<bool> taken(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    // least unused position j in u↑ holding the value u_k
    for (std::size_t j = 0; j < n; ++j) {
      if (!taken[j] && up[j] == u[k]) {
        taken[j] = true;
        s.img[k] = static_cast<int>(j) + 1;
        break;
      }
    }
  }
  return s;
}

std::vector<int> word_action(const std::vector<int>& w, const Permutation& s) {
  if (static_cast<int>(w.size()) != s.n()) throw std::invalid_argument("word_action: size mismatch");
  std::vector<int> out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out[k] = w[static_cast<std::size_t>(s(static_cast<int>(k) + 1)) - 1];
  return out;
}

std::string word_str(const PackedWord& w) {
  bool wide = std::any_of(w.begin(), w.end(), [](int v) { return v > 9; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i) s += '.';
    s += std::to_string(w[i]);
  }
  return s;
}

PackedWord word_parse(const std::string& s) {
  PackedWord w;
  if (s.empty()) return w;
  if (s.find('.') != std::string::npos) {
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t dot = s.find('.', pos);
      std::string tok = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v <= 0) throw std::invalid_argument("");
        w.push_back(v);
      } catch (...) {
        throw std::invalid_argument("word_parse: bad word '" + s + "'");
      }
      if (dot == std::string::npos) break;
      pos = dot + 1;
    }
  } else {
    for (char ch : s) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("word_parse: bad word '" + s + "'");
      w.push_back(ch - '0');
    }
  }
  return w;
}

std::vector<SetComposition> set_compositions(int n, BlockParity parity) {
  if (n < 0) throw std::invalid_argument("set_compositions: negative ground size");
  std::vector<SetComposition> out;
  for (const PackedWord& w : packed_words(n)) {
    int blocks = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
    if (parity == BlockParity::odd && blocks % 2 == 0) continue;
    if (parity == BlockParity::even && blocks % 2 == 1) continue;
    SetComposition k(static_cast<std::size_t>(blocks));
    for (int i = 1; i <= n; ++i) k[static_cast<std::size_t>(w[static_cast<std::size_t>(i) - 1]) - 1].push_back(i);
    out.push_back(std::move(k));
  }
  return out;
}

std::string setcomp_str(const SetComposition& k) {
  std::string s;
  for (std::size_t b = 0; b < k.size(); ++b) {
    if (b) s += '|';
    s += '{';
    for (std::size_t i = 0; i < k[b].size(); ++i) {
      if (i) s += ',';
      s += std::to_string(k[b][i]);
    }
    s += '}';
  }
  return s;
}

SetComposition setcomp_parse(const std::string& s) {
  SetComposition k;
  if (s.empty()) return k;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '{') throw std::invalid_argument("setcomp_parse: bad set composition '" + s + "'");
    std::size_t close = s.find('}', pos);
    if (close == std::string::npos) throw std::invalid_argument("setcomp_parse: bad set composition '" + s + "'");
    std::vector<int> block;
    std::size_t p = pos + 1;
    while (p < close) {
      std::size_t comma = std::min(s.find(',', p), close);
      try {
        std::size_t used = 0;
        std::string tok = s.substr(p, comma - p);
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v <= 0) throw std::invalid_argument("");
        block.push_back(v);
      } catch (...) {
        throw std::invalid_argument("setcomp_parse: bad set composition '" + s + "'");
      }
      p = comma + 1;
    }
    if (block.empty()) throw std::invalid_argument("setcomp_parse: empty block in '" + s + "'");
    std::sort(block.begin(), block.end());
    k.push_back(std::move(block));
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != '|') throw std::invalid_argument("setcomp_parse: bad set composition '" + s + "'");
      ++pos;
    }
  }
  return k;
}

Integer ordered_bell(int n) {
  std::vector<Integer> ob(static_cast<std::size_t>(n) + 1);
  ob[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (int j = 1; j <= m; ++j) acc += binomial(m, j) * ob[static_cast<std::size_t>(m - j)];
    ob[static_cast<std::size_t>(m)] = acc;
  }
  return ob[static_cast<std::size_t>(n)];
}

}  // namespace qyd
