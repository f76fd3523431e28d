#include "qyd/stanley.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qyd {

Var pvar(int i) { return Var{'p', i}; }
Var qvar(int i) { return Var{'q', i}; }
Var qpvar(int i) { return Var{'Q', i}; }

namespace {

void require_fams_below(const CommPoly& f, const std::string& fams, int m, const char* who) {
  for (const Var& v : f.variables())
    if (fams.find(v.fam) != std::string::npos && v.idx > m)
      throw std::invalid_argument(std::string(who) + ": variable " + var_str(v) +
                                  " exceeds width " + std::to_string(m));
}

// Interlacing coordinate x_j as a linear form in p_1..p_m, q_1..q_m.
CommPoly x_form(int j, int m) {
  const int i = j / 2;  // x_{2i} and x_{2i+1} share the p prefix p_1..p_i
  CommPoly f;
  for (int t = (j % 2 == 1) ? i + 1 : i; t <= m; ++t) f += CommPoly::variable(qvar(t));
  for (int t = 1; t <= i; ++t) f -= CommPoly::variable(pvar(t));
  return f;
}

}  // namespace

CommPoly q_to_qprime(const CommPoly& f, int m) {
  require_fams_below(f, "q", m, "q_to_qprime");
  std::map<Var, CommPoly> bind;
  for (int i = 1; i <= m; ++i) {
    CommPoly v = CommPoly::variable(qpvar(i));
    if (i < m) v -= CommPoly::variable(qpvar(i + 1));
    bind[qvar(i)] = v;
  }
  return f.substitute(bind);
}

CommPoly qprime_to_q(const CommPoly& f, int m) {
  require_fams_below(f, "Q", m, "qprime_to_q");
  std::map<Var, CommPoly> bind;
  for (int i = 1; i <= m; ++i) {
    CommPoly v;
    for (int j = i; j <= m; ++j) v += CommPoly::variable(qvar(j));
    bind[qpvar(i)] = v;
  }
  return f.substitute(bind);
}

PQFamily pq_family_h(const Composition& I) {
  return PQFamily{[I](int m) { return h_eval(I, m); }, true};
}

PQFamily pq_family_phi(QSymElement f) {
  return PQFamily{[f = std::move(f)](int m) { return phi_x_to_pq(f, m); }, false};
}

PQFamily pq_family_product(const PQFamily& a, const PQFamily& b) {
  return PQFamily{[a, b](int m) {
                    CommPoly bt = b.truncation(m);
                    if (a.in_qprime != b.in_qprime)
                      bt = a.in_qprime ? q_to_qprime(bt, m) : qprime_to_q(bt, m);
                    return a.truncation(m) * bt;
                  },
                  a.in_qprime};
}

SolPrimeReport check_solprime(const PQFamily& h, int m_max) {
  auto trunc_q = [&](int m) {
    return h.in_qprime ? qprime_to_q(h.truncation(m), m) : h.truncation(m);
  };
  auto trunc_qp = [&](int m) {
    return h.in_qprime ? h.truncation(m) : q_to_qprime(h.truncation(m), m);
  };

  for (int m = 0; m < m_max; ++m) {
    std::map<Var, CommPoly> kill;
    kill[pvar(m + 1)] = CommPoly{};
    kill[h.in_qprime ? qpvar(m + 1) : qvar(m + 1)] = CommPoly{};
    if (h.truncation(m + 1).substitute(kill) != h.truncation(m))
      return {false, "stability", m + 1, 0};
  }

  // Collapsing a zero row gap: q_i = 0 merges column counts p_i and p_{i+1}.
  for (int m = 1; m <= m_max; ++m) {
    const CommPoly hm = trunc_q(m);
    const CommPoly hm1 = trunc_q(m - 1);
    for (int i = 1; i <= m; ++i) {
      CommPoly lhs = hm.drop_var(qvar(i));
      std::map<Var, CommPoly> bind;
      for (int j = 1; j <= m - 1; ++j) {
        if (i < m) {
          if (j == i)
            bind[pvar(j)] = CommPoly::variable(pvar(i)) + CommPoly::variable(pvar(i + 1));
          else
            bind[pvar(j)] = CommPoly::variable(pvar(j < i ? j : j + 1));
          bind[qvar(j)] = CommPoly::variable(qvar(j < i ? j : j + 1));
        } else {
          bind[pvar(j)] = CommPoly::variable(pvar(j));
          bind[qvar(j)] = CommPoly::variable(qvar(j));
        }
      }
      if (lhs != hm1.substitute(bind)) return {false, "q-zero", m, i};
    }
  }

  // Removing an empty column group: p_i = 0 erases slot i in the q' picture.
  for (int m = 1; m <= m_max; ++m) {
    const CommPoly hm = trunc_qp(m);
    const CommPoly hm1 = trunc_qp(m - 1);
    for (int i = 1; i <= m; ++i) {
      CommPoly lhs = hm.drop_var(pvar(i));
      std::map<Var, CommPoly> bind;
      for (int j = 1; j <= m - 1; ++j) {
        const int jj = j < i ? j : j + 1;
        bind[pvar(j)] = CommPoly::variable(pvar(jj));
        bind[qpvar(j)] = CommPoly::variable(qpvar(jj));
      }
      if (lhs != hm1.substitute(bind)) return {false, "p-zero", m, i};
    }
  }

  return {true, "", 0, 0};
}

CommPoly x_to_pq(const CommPoly& f, int m) {
  require_fams_below(f, "x", 2 * m + 1, "x_to_pq");
  std::map<Var, CommPoly> bind;
  for (int j = 1; j <= 2 * m + 1; ++j) bind[Var{'x', j}] = x_form(j, m);
  return f.substitute(bind);
}

CommPoly pq_to_x(const CommPoly& h, int m) {
  require_fams_below(h, "pqQ", m, "pq_to_x");
  auto xv = [](int j) { return CommPoly::variable(Var{'x', j}); };
  std::map<Var, CommPoly> bind;
  for (int i = 1; i <= m; ++i) {
    bind[pvar(i)] = xv(2 * i - 1) - xv(2 * i);
    bind[qvar(i)] = xv(2 * i) - xv(2 * i + 1);
    CommPoly qp;
    for (int j = i; j <= m; ++j) qp += xv(2 * j) - xv(2 * j + 1);
    bind[qpvar(i)] = qp;
  }
  return h.substitute(bind);
}

CommPoly phi_x_to_pq(const QSymElement& f, int m) {
  if (m < 0) throw std::invalid_argument("phi_x_to_pq: negative width");
  const int N = 2 * m + 1;
  int maxdeg = 0;
  for (const auto& [I, c] : f.coeffs) maxdeg = std::max(maxdeg, comp_weight(I));

  std::vector<std::vector<CommPoly>> pw(static_cast<std::size_t>(N) + 1);
  for (int j = 1; j <= N; ++j) {
    auto& col = pw[static_cast<std::size_t>(j)];
    col.resize(static_cast<std::size_t>(maxdeg) + 1);
    col[0] = CommPoly::constant(1);
    const CommPoly form = x_form(j, m);
    for (int d = 1; d <= maxdeg; ++d)
      col[static_cast<std::size_t>(d)] = col[static_cast<std::size_t>(d - 1)] * form;
  }

  std::vector<int> signs(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) signs[static_cast<std::size_t>(j)] = (j % 2 == 0) ? -1 : +1;

  CommPoly out;
  for (const auto& [I, c] : f.coeffs) {
    CommPoly term = detail::signed_block_dp<CommPoly>(
        I, signs, CommPoly::constant(1), [&](const CommPoly& cell, int j, int s) {
          return cell * pw[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(s)];
        });
    out += c * term;
  }
  return out;
}

CommPoly phi_pq_to_x(const PQFamily& h, int m) { return pq_to_x(h.truncation(m), m); }

CommPoly h_eval(const Composition& I, int m) {
  if (m < 0) throw std::invalid_argument("h_eval: negative width");
  if (I.empty()) return CommPoly::constant(1);
  if (I.back() < 2) throw std::invalid_argument("h_eval: last part must be at least 2");
  const int n = static_cast<int>(I.size());
  std::vector<int> pre(static_cast<std::size_t>(n) + 1, 0);
  for (int t = 0; t < n; ++t)
    pre[static_cast<std::size_t>(t) + 1] = pre[static_cast<std::size_t>(t)] + I[static_cast<std::size_t>(t)];

  std::vector<CommPoly> dp(static_cast<std::size_t>(n) + 1);
  std::vector<char> live(static_cast<std::size_t>(n) + 1, 0);
  dp[0] = CommPoly::constant(1);
  live[0] = 1;
  for (int k = 1; k <= m; ++k) {
    std::vector<CommPoly> nd = dp;
    std::vector<char> nl = live;
    for (int j = 0; j < n; ++j) {
      if (!live[static_cast<std::size_t>(j)]) continue;
      Rational fall = 1;
      for (int r = 1; j + r <= n; ++r) {
        fall /= r;  // running 1 / r!
        const int s = pre[static_cast<std::size_t>(j + r)] - pre[static_cast<std::size_t>(j)];
        Monomial mo;
        mo.push_back({pvar(k), r});
        if (s - r > 0) mo.push_back({qpvar(k), s - r});
        nd[static_cast<std::size_t>(j + r)] += dp[static_cast<std::size_t>(j)].mul_monomial(mo, fall);
        nl[static_cast<std::size_t>(j + r)] = 1;
      }
    }
    dp = std::move(nd);
    live = std::move(nl);
  }
  return live[static_cast<std::size_t>(n)] ? dp[static_cast<std::size_t>(n)] : CommPoly{};
}

std::string hexp_str(const HExpansion& e) {
  if (e.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [I, c] : e.coeffs) {
    if (!out.empty()) out += " + ";
    out += rat_str(c) + "*H:" + (I.empty() ? "()" : comp_str(I));
  }
  return out;
}

bool hexp_valid(const HExpansion& e) {
  for (const auto& [I, c] : e.coeffs) {
    if (c == 0) return false;
    if (!I.empty() && I.back() < 2) return false;
  }
  return true;
}

HExpansion h_expand(const PQFamily& h, int max_degree) {
  CommPoly t = h.truncation(max_degree);
  if (!h.in_qprime) t = q_to_qprime(t, max_degree);
  return h_expand_poly(t, max_degree);
}

HExpansion h_expand_poly(const CommPoly& h_m, int max_degree) {
  const int m = max_degree;
  for (const Var& v : h_m.variables())
    if ((v.fam != 'p' && v.fam != 'Q') || v.idx > m)
      throw std::invalid_argument("h_expand: expected p/q' variables of index at most " +
                                  std::to_string(m));
  CommPoly rem = h_m;
  HExpansion out;

  const Rational c0 = rem.coeff(Monomial{});
  if (c0 != 0) {
    out.coeffs[Composition{}] = c0;
    rem -= CommPoly::constant(c0);
  }

  for (int w = 2; w <= max_degree; ++w) {
    std::vector<Composition> comps;
    for (const Composition& I : compositions_of(w))
      if (I.back() >= 2) comps.push_back(I);
    std::stable_sort(comps.begin(), comps.end(),
                     [](const Composition& a, const Composition& b) { return a.size() < b.size(); });
    for (const Composition& I : comps) {
      Monomial key;
      for (int t = 0; t < static_cast<int>(I.size()); ++t) key.push_back({pvar(t + 1), 1});
      for (int t = 0; t < static_cast<int>(I.size()); ++t)
        if (I[static_cast<std::size_t>(t)] > 1) key.push_back({qpvar(t + 1), I[static_cast<std::size_t>(t)] - 1});
      const Rational c = rem.coeff(key);
      if (c != 0) {
        rem -= c * h_eval(I, m);
        out.coeffs[I] = c;
      }
    }
  }

  if (!rem.is_zero())
    throw std::domain_error("h_expand: nonzero remainder, input is outside the span of the basis");
  return out;
}

HExpansion h_shuffle_product(const HExpansion& a, const HExpansion& b) {
  HExpansion out;
  for (const auto& [I, ci] : a.coeffs)
    for (const auto& [J, cj] : b.coeffs)
      for (const auto& [K, mult] : shuffle(I, J)) {
        Rational& slot = out.coeffs[K];
        slot += ci * cj * mult;
        if (slot == 0) out.coeffs.erase(K);
      }
  return out;
}

HExpansion mk_h_expansion(int k) {
  if (k < 2) throw std::invalid_argument("mk_h_expansion: weight must be at least 2");
  return h_expand(pq_family_phi(QSymElement::monomial({k})), k);
}

QSymElement collapse_to_y(const Composition& I) {
  if (I.empty()) return QSymElement::one();
  QSymElement out;
  for (const Composition& L : compositions_of(static_cast<int>(I.size()))) {
    Composition K;
    Rational c = 1;
    std::size_t pos = 0;
    for (int len : L) {
      int s = 0;
      for (int t = 0; t < len; ++t) s += I[pos++];
      K.push_back(s);
      c /= Rational(factorial(len));
    }
    out += QSymElement::monomial(K, c);
  }
  return out;
}

}  // namespace qyd
