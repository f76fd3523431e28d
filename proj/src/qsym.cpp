#include "qyd/qsym.hpp"

#include <stdexcept>

#include "qyd/linalg.hpp"

namespace qyd {

QSymElement QSymElement::monomial(const Composition& I, const Rational& c) {
  QSymElement f;
  if (c != 0) f.coeffs.emplace(I, c);
  return f;
}

QSymElement QSymElement::one() { return monomial({}, 1); }

Rational QSymElement::coeff(const Composition& I) const {
  auto it = coeffs.find(I);
  return it == coeffs.end() ? Rational(0) : it->second;
}

int QSymElement::max_weight() const {
  int w = 0;
  for (const auto& [I, c] : coeffs) w = std::max(w, comp_weight(I));
  return w;
}

QSymElement QSymElement::homogeneous(int w) const {
  QSymElement out;
  for (const auto& [I, c] : coeffs)
    if (comp_weight(I) == w) out.coeffs.emplace(I, c);
  return out;
}

bool QSymElement::audit_no_zero_terms() const {
  for (const auto& [I, c] : coeffs)
    if (c == 0) return false;
  return true;
}

QSymElement& QSymElement::operator+=(const QSymElement& o) {
  if (&o == this) {
    for (auto& [I, c] : coeffs) c *= 2;
    return *this;
  }
  for (const auto& [I, c] : o.coeffs) {
    auto it = coeffs.find(I);
    if (it == coeffs.end()) {
      coeffs.emplace(I, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& o) {
  if (&o == this) {
    coeffs.clear();
    return *this;
  }
  for (const auto& [I, c] : o.coeffs) {
    auto it = coeffs.find(I);
    if (it == coeffs.end()) {
      coeffs.emplace(I, -c);
    } else {
      it->second -= c;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  return *this;
}

QSymElement QSymElement::operator-() const {
  QSymElement out;
  for (const auto& [I, c] : coeffs) out.coeffs.emplace(I, -c);
  return out;
}

QSymElement& QSymElement::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs.clear();
    return *this;
  }
  for (auto& [I, v] : coeffs) v *= c;
  return *this;
}

QSymElement operator+(QSymElement a, const QSymElement& b) {
  a += b;
  return a;
}

QSymElement operator-(QSymElement a, const QSymElement& b) {
  a -= b;
  return a;
}

QSymElement operator*(const Rational& c, QSymElement f) {
  f *= c;
  return f;
}

std::string QSymElement::str() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [I, c] : coeffs) {
    if (!s.empty()) s += " + ";
    s += rat_str(c) + "*M:" + (I.empty() ? std::string("()") : comp_str(I));
  }
  return s;
}

QSymElement qsym_product(const QSymElement& f, const QSymElement& g) {
  QSymElement out;
  for (const auto& [I, a] : f.coeffs)
    for (const auto& [J, b] : g.coeffs) {
      Rational ab = a * b;
      for (const auto& [K, mult] : quasi_shuffle(I, J)) {
        auto it = out.coeffs.find(K);
        Rational add = ab * Rational(mult);
        if (it == out.coeffs.end()) {
          out.coeffs.emplace(K, add);
        } else {
          it->second += add;
          if (it->second == 0) out.coeffs.erase(it);
        }
      }
    }
  return out;
}

TensorTerms qsym_coproduct(const QSymElement& f) {
  TensorTerms out;
  for (const auto& [I, c] : f.coeffs) {
    for (std::size_t k = 0; k <= I.size(); ++k) {
      Composition left(I.begin(), I.begin() + static_cast<std::ptrdiff_t>(k));
      Composition right(I.begin() + static_cast<std::ptrdiff_t>(k), I.end());
      auto key = std::make_pair(std::move(left), std::move(right));
      auto it = out.find(key);
      if (it == out.end()) {
        out.emplace(std::move(key), c);
      } else {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

QSymElement antipode(const QSymElement& f) {
  QSymElement out;
  for (const auto& [I, c] : f.coeffs) {
    Rational s = (I.size() % 2) ? -c : c;
    for (const Composition& J : coarsenings(I)) {
      Composition m = comp_mirror(J);
      auto it = out.coeffs.find(m);
      if (it == out.coeffs.end()) {
        out.coeffs.emplace(std::move(m), s);
      } else {
        it->second += s;
        if (it->second == 0) out.coeffs.erase(it);
      }
    }
  }
  return out;
}

SignedAlphabet virtual_x(int n) {
  if (n < 0) throw std::invalid_argument("virtual_x: negative length");
  SignedAlphabet a;
  a.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    a.push_back(i % 2 ? minus_var(Var{'x', i}) : plus_var(Var{'x', i}));
  return a;
}

namespace {

std::vector<int> alphabet_signs(const SignedAlphabet& a) {
  std::vector<int> s;
  s.reserve(a.size());
  for (const auto& e : a) s.push_back(e.sign);
  return s;
}

}  // namespace

CommPoly expand_on_alphabet(const QSymElement& f, const SignedAlphabet& a) {
  std::vector<int> signs = alphabet_signs(a);
  std::function<CommPoly(const CommPoly&, int, int)> mul =
      [&a](const CommPoly& c, int j, int sum) {
        const AlphabetEntry& e = a[static_cast<std::size_t>(j)];
        if (e.symbolic) return c.mul_monomial({{e.var, sum}}, 1);
        Rational v = 1;
        for (int t = 0; t < sum; ++t) v *= e.value;
        CommPoly out = c;
        out *= v;
        return out;
      };
  CommPoly out;
  for (const auto& [I, c] : f.coeffs) {
    CommPoly e = detail::signed_block_dp<CommPoly>(I, signs, CommPoly::constant(1), mul);
    e *= c;
    out += e;
  }
  return out;
}

Rational evaluate_on_alphabet(const QSymElement& f, const SignedAlphabet& a) {
  for (const auto& e : a)
    if (e.symbolic)
      throw std::invalid_argument("evaluate_on_alphabet: symbolic entry in numeric evaluation");
  std::vector<int> signs = alphabet_signs(a);
  std::function<Rational(const Rational&, int, int)> mul =
      [&a](const Rational& c, int j, int sum) {
        Rational v = c;
        const Rational& x = a[static_cast<std::size_t>(j)].value;
        for (int t = 0; t < sum; ++t) v *= x;
        return v;
      };
  Rational out = 0;
  for (const auto& [I, c] : f.coeffs)
    out += c * detail::signed_block_dp<Rational>(I, signs, Rational(1), mul);
  return out;
}

FuncEqReport check_functional_eq(const std::function<CommPoly(int)>& family, int n_max) {
  if (n_max < 0) throw std::invalid_argument("check_functional_eq: negative n_max");
  std::vector<CommPoly> E;
  E.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) E.push_back(family(n));
  for (int n = 1; n <= n_max; ++n)
    if (E[static_cast<std::size_t>(n)].drop_var(Var{'x', n}) != E[static_cast<std::size_t>(n) - 1])
      return {false, "stability", n, 0};
  CommPoly T = CommPoly::variable(Var{'t', 1});
  for (int n = 2; n <= n_max; ++n)
    for (int i = 1; i < n; ++i) {
      CommPoly lhs = E[static_cast<std::size_t>(n)].substitute(
          {{Var{'x', i}, T}, {Var{'x', i + 1}, T}});
      std::map<Var, Var> ren;
      for (int j = i; j <= n - 2; ++j) ren[Var{'x', j}] = Var{'x', j + 2};
      CommPoly rhs = E[static_cast<std::size_t>(n) - 2].rename(ren);
      if (lhs != rhs) return {false, "equation", n, i};
    }
  return {};
}

FuncEqReport check_functional_eq(const QSymElement& f, int n_max) {
  return check_functional_eq(
      [&f](int n) { return expand_on_alphabet(f, virtual_x(n)); }, n_max);
}

int solve_dimension(int n) {
  if (n < 1) throw std::invalid_argument("solve_dimension: need n >= 1");
  SignedAlphabet X = virtual_x(2 * n + 1);
  std::vector<CommPoly> rows;
  for (const Composition& I : compositions_of(n))
    rows.push_back(expand_on_alphabet(QSymElement::monomial(I), X));
  return rank_of_comm(rows);
}

}  // namespace qyd
