#include "qyd/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qyd {

int fam_rank(char fam) {
  switch (fam) {
    case 'x': return 0;
    case 'y': return 1;
    case 'u': return 2;
    case 'p': return 3;
    case 'q': return 4;
    case 'Q': return 5;  // q'
    case 't': return 6;
    default: throw std::invalid_argument(std::string("unknown variable family '") + fam + "'");
  }
}

bool operator<(const Var& a, const Var& b) {
  int ra = fam_rank(a.fam), rb = fam_rank(b.fam);
  if (ra != rb) return ra < rb;
  return a.idx < b.idx;
}

std::string var_str(const Var& v) {
  std::string f = v.fam == 'Q' ? "q'" : std::string(1, v.fam);
  return f + std::to_string(v.idx);
}

Var var_parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("var_parse: bad variable '" + s + "'");
  char fam = s[0];
  std::size_t digits = 1;
  if (fam == 'q' && s[1] == '\'') {
    fam = 'Q';
    digits = 2;
  }
  fam_rank(fam);  // validates
  std::string num = s.substr(digits);
  std::size_t used = 0;
  int idx;
  try {
    idx = std::stoi(num, &used);
  } catch (...) {
    throw std::invalid_argument("var_parse: bad variable '" + s + "'");
  }
  if (used != num.size() || idx <= 0) throw std::invalid_argument("var_parse: bad variable '" + s + "'");
  return Var{fam, idx};
}

std::string mono_str(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += '*';
    s += var_str(m[i].first);
    if (m[i].second != 1) s += "^" + std::to_string(m[i].second);
  }
  return s;
}

CommPoly CommPoly::constant(const Rational& c) {
  CommPoly p;
  if (c != 0) p.terms[{}] = c;
  return p;
}

CommPoly CommPoly::variable(const Var& v, int exp) {
  if (exp < 0) throw std::invalid_argument("CommPoly::variable: negative exponent");
  CommPoly p;
  if (exp == 0)
    p.terms[{}] = 1;
  else
    p.terms[{{v, exp}}] = 1;
  return p;
}

int CommPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms) {
    int t = 0;
    for (const auto& [v, e] : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

std::set<Var> CommPoly::variables() const {
  std::set<Var> out;
  for (const auto& [m, c] : terms)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

Rational CommPoly::coeff(const Monomial& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Rational(0) : it->second;
}

bool CommPoly::audit_no_zero_terms() const {
  for (const auto& [m, c] : terms)
    if (c == 0) return false;
  return true;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  if (&o == this) {
    for (auto& [m, c] : terms) c *= 2;
    return *this;
  }
  for (const auto& [m, c] : o.terms) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  if (&o == this) {
    terms.clear();
    return *this;
  }
  for (const auto& [m, c] : o.terms) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

CommPoly CommPoly::operator-() const {
  CommPoly p;
  for (const auto& [m, c] : terms) p.terms.emplace(m, -c);
  return p;
}

CommPoly& CommPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

CommPoly operator+(CommPoly a, const CommPoly& b) {
  a += b;
  return a;
}

CommPoly operator-(CommPoly a, const CommPoly& b) {
  a -= b;
  return a;
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      r.push_back(a[i++]);
    } else {
      r.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back(b[j]);
  return r;
}

}  // namespace

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Monomial m = mono_mul(ma, mb);
      auto it = out.terms.find(m);
      if (it == out.terms.end()) {
        out.terms.emplace(std::move(m), ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  return out;
}

CommPoly operator*(const Rational& c, CommPoly p) {
  p *= c;
  return p;
}

CommPoly CommPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("CommPoly::pow: negative exponent");
  CommPoly r = CommPoly::constant(1);
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

CommPoly CommPoly::mul_monomial(const Monomial& m, const Rational& c) const {
  CommPoly out;
  if (c == 0) return out;
  for (const auto& [mm, cc] : terms) out.terms.emplace(mono_mul(mm, m), cc * c);
  return out;
}

namespace {

// One-variable substitution by Horner's rule: split f along the exponent of v
// and fold the slices around g. Far cheaper than per-monomial products when f
// is large.
CommPoly substitute_one(const CommPoly& f, const Var& v, const CommPoly& g) {
  int maxe = 0;
  for (const auto& [m, c] : f.terms)
    for (const auto& [w, e] : m)
      if (w == v) maxe = std::max(maxe, e);
  if (maxe == 0) return f;
  std::vector<CommPoly> slice(static_cast<std::size_t>(maxe) + 1);
  for (const auto& [m, c] : f.terms) {
    Monomial rest;
    int e = 0;
    for (const auto& [w, we] : m) {
      if (w == v)
        e = we;
      else
        rest.emplace_back(w, we);
    }
    slice[static_cast<std::size_t>(e)].terms.emplace(std::move(rest), c);
  }
  CommPoly acc = std::move(slice[static_cast<std::size_t>(maxe)]);
  for (int e = maxe - 1; e >= 0; --e) acc = acc * g + slice[static_cast<std::size_t>(e)];
  return acc;
}

}  // namespace

CommPoly CommPoly::substitute(const std::map<Var, CommPoly>& bind) const {
  // When no replacement mentions a substituted variable, sequential
  // one-variable substitution agrees with simultaneous substitution.
  bool disjoint = true;
  for (const auto& [v, g] : bind) {
    for (const Var& w : g.variables())
      if (bind.count(w)) {
        disjoint = false;
        break;
      }
    if (!disjoint) break;
  }
  if (disjoint) {
    CommPoly cur = *this;
    for (const auto& [v, g] : bind) cur = substitute_one(cur, v, g);
    return cur;
  }

  CommPoly out;
  std::map<std::pair<Var, int>, CommPoly> powers;  // cache of replacement powers
  for (const auto& [m, c] : terms) {
    Monomial passthrough;
    CommPoly acc = CommPoly::constant(1);
    bool any = false;
    for (const auto& [v, e] : m) {
      auto it = bind.find(v);
      if (it == bind.end()) {
        passthrough.emplace_back(v, e);
        continue;
      }
      any = true;
      auto key = std::make_pair(v, e);
      auto pit = powers.find(key);
      if (pit == powers.end()) pit = powers.emplace(key, it->second.pow(e)).first;
      acc = acc * pit->second;
    }
    if (!any) {
      auto it = out.terms.find(m);
      if (it == out.terms.end()) {
        out.terms.emplace(m, c);
      } else {
        it->second += c;
        if (it->second == 0) out.terms.erase(it);
      }
    } else {
      out += acc.mul_monomial(passthrough, c);
    }
  }
  return out;
}

CommPoly CommPoly::rename(const std::map<Var, Var>& names) const {
  CommPoly out;
  for (const auto& [m, c] : terms) {
    Monomial nm;
    nm.reserve(m.size());
    for (const auto& [v, e] : m) {
      auto it = names.find(v);
      nm.emplace_back(it == names.end() ? v : it->second, e);
    }
    std::sort(nm.begin(), nm.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < nm.size(); ++i)
      if (nm[i].first == nm[i - 1].first)
        throw std::invalid_argument("CommPoly::rename: renaming collides inside a monomial");
    auto it = out.terms.find(nm);
    if (it == out.terms.end()) {
      out.terms.emplace(std::move(nm), c);
    } else {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

CommPoly CommPoly::drop_var(const Var& v) const {
  CommPoly out;
  for (const auto& [m, c] : terms) {
    bool has = false;
    for (const auto& [w, e] : m)
      if (w == v) {
        has = true;
        break;
      }
    if (!has) out.terms.emplace(m, c);
  }
  return out;
}

Rational CommPoly::evaluate(const std::map<Var, Rational>& vals) const {
  Rational total = 0;
  for (const auto& [m, c] : terms) {
    Rational t = c;
    for (const auto& [v, e] : m) {
      auto it = vals.find(v);
      if (it == vals.end())
        throw std::invalid_argument("CommPoly::evaluate: unbound variable " + var_str(v));
      for (int k = 0; k < e; ++k) t *= it->second;
    }
    total += t;
  }
  return total;
}

std::string CommPoly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms) {
    if (!s.empty()) s += " + ";
    s += rat_str(c);
    if (!m.empty()) s += "*" + mono_str(m);
  }
  return s;
}

// ---------------------------------------------------------------------------

bool operator<(const Letter& a, const Letter& b) {
  if (a.fam != b.fam) return a.fam < b.fam;
  return a.idx < b.idx;
}

std::string letter_str(const Letter& l) { return std::string(1, l.fam) + std::to_string(l.idx); }

std::string ncword_str(const NCWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += letter_str(w[i]);
  }
  return s;
}

NCPoly NCPoly::constant(const Rational& c) {
  NCPoly p;
  if (c != 0) p.terms[{}] = c;
  return p;
}

NCPoly NCPoly::letter(const Letter& l) {
  NCPoly p;
  p.terms[{l}] = 1;
  return p;
}

NCPoly NCPoly::word(const NCWord& w, const Rational& c) {
  NCPoly p;
  if (c != 0) p.terms[w] = c;
  return p;
}

int NCPoly::max_word_length() const {
  int m = 0;
  for (const auto& [w, c] : terms) m = std::max<int>(m, static_cast<int>(w.size()));
  return m;
}

bool NCPoly::is_homogeneous(int* length) const {
  int len = -1;
  for (const auto& [w, c] : terms) {
    if (len < 0)
      len = static_cast<int>(w.size());
    else if (len != static_cast<int>(w.size()))
      return false;
  }
  if (length && len >= 0) *length = len;
  if (length && len < 0) *length = 0;
  return true;
}

Rational NCPoly::coeff(const NCWord& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Rational(0) : it->second;
}

bool NCPoly::audit_no_zero_terms() const {
  for (const auto& [w, c] : terms)
    if (c == 0) return false;
  return true;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (&o == this) {
    for (auto& [w, c] : terms) c *= 2;
    return *this;
  }
  for (const auto& [w, c] : o.terms) {
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  if (&o == this) {
    terms.clear();
    return *this;
  }
  for (const auto& [w, c] : o.terms) {
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly p;
  for (const auto& [w, c] : terms) p.terms.emplace(w, -c);
  return p;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [w, v] : terms) v *= c;
  return *this;
}

NCPoly operator+(NCPoly a, const NCPoly& b) {
  a += b;
  return a;
}

NCPoly operator-(NCPoly a, const NCPoly& b) {
  a -= b;
  return a;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      NCWord w;
      w.reserve(wa.size() + wb.size());
      w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      auto it = out.terms.find(w);
      if (it == out.terms.end()) {
        out.terms.emplace(std::move(w), ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  return out;
}

NCPoly operator*(const Rational& c, NCPoly p) {
  p *= c;
  return p;
}

NCPoly NCPoly::substitute(const std::map<Letter, NCPoly>& bind) const {
  NCPoly out;
  for (const auto& [w, c] : terms) {
    NCPoly acc = NCPoly::constant(c);
    for (const Letter& l : w) {
      auto it = bind.find(l);
      if (it == bind.end())
        acc = acc * NCPoly::letter(l);
      else
        acc = acc * it->second;
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

NCPoly NCPoly::rename(const std::map<Letter, Letter>& names) const {
  NCPoly out;
  for (const auto& [w, c] : terms) {
    NCWord nw;
    nw.reserve(w.size());
    for (const Letter& l : w) {
      auto it = names.find(l);
      nw.push_back(it == names.end() ? l : it->second);
    }
    auto it = out.terms.find(nw);
    if (it == out.terms.end()) {
      out.terms.emplace(std::move(nw), c);
    } else {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

NCPoly NCPoly::drop_letter(const Letter& l) const {
  NCPoly out;
  for (const auto& [w, c] : terms) {
    if (std::find(w.begin(), w.end(), l) == w.end()) out.terms.emplace(w, c);
  }
  return out;
}

NCPoly NCPoly::position_action(const Permutation& s) const {
  NCPoly out;
  for (const auto& [w, c] : terms) {
    if (static_cast<int>(w.size()) != s.n())
      throw std::invalid_argument("NCPoly::position_action: word length != permutation size");
    NCWord nw(w.size());
    for (std::size_t k = 0; k < w.size(); ++k)
      nw[k] = w[static_cast<std::size_t>(s(static_cast<int>(k) + 1)) - 1];
    auto it = out.terms.find(nw);
    if (it == out.terms.end()) {
      out.terms.emplace(std::move(nw), c);
    } else {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

std::string NCPoly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms) {
    if (!s.empty()) s += " + ";
    s += rat_str(c);
    if (!w.empty()) s += "*" + ncword_str(w);
  }
  return s;
}

CommPoly commutative_image(const NCPoly& p, char comm_fam) {
  CommPoly out;
  for (const auto& [w, c] : p.terms) {
    std::map<int, int> exps;
    for (const Letter& l : w) exps[l.idx] += 1;
    Monomial m;
    m.reserve(exps.size());
    for (const auto& [idx, e] : exps) m.emplace_back(Var{comm_fam, idx}, e);
    auto it = out.terms.find(m);
    if (it == out.terms.end()) {
      out.terms.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

CommPoly commutative_image(const NCPoly& p, const std::map<char, char>& fam_map) {
  CommPoly out;
  for (const auto& [w, c] : p.terms) {
    std::map<Var, int> exps;
    for (const Letter& l : w) {
      auto fit = fam_map.find(l.fam);
      if (fit == fam_map.end())
        throw std::invalid_argument("commutative_image: unmapped letter family");
      exps[Var{fit->second, l.idx}] += 1;
    }
    Monomial m(exps.begin(), exps.end());
    auto it = out.terms.find(m);
    if (it == out.terms.end()) {
      out.terms.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

}  // namespace qyd
