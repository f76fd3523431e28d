#include "qyd/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qyd {

namespace {

int partition_weight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

Integer mn_rec(const Partition& lam, const Partition& rho,
               std::map<std::pair<Partition, Partition>, Integer>& memo) {
  if (rho.empty()) return 1;  // weights match, so lam is empty too
  const auto key = std::make_pair(lam, rho);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = rho.front();
  const Partition rest(rho.begin() + 1, rho.end());
  const int m = static_cast<int>(lam.size());

  // first-column distances: strictly decreasing nonnegative integers
  std::vector<int> beta(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) beta[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + (m - 1 - i);

  Integer total = 0;
  for (int i = 0; i < m; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int nb = b - r;
    if (nb < 0) continue;
    bool clash = false;
    int height = 0;
    for (int j = 0; j < m; ++j) {
      const int other = beta[static_cast<std::size_t>(j)];
      if (other == nb) clash = true;
      if (nb < other && other < b) ++height;
    }
    if (clash) continue;

    std::vector<int> nbeta = beta;
    nbeta[static_cast<std::size_t>(i)] = nb;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
    Partition nlam;
    for (int j = 0; j < m; ++j) {
      const int part = nbeta[static_cast<std::size_t>(j)] - (m - 1 - j);
      if (part > 0) nlam.push_back(part);
    }

    const Integer sub = mn_rec(nlam, rest, memo);
    if (height % 2)
      total -= sub;
    else
      total += sub;
  }

  memo.emplace(key, total);
  return total;
}

}  // namespace

Integer mn_character(const Partition& lam, const Partition& rho) {
  if (!is_partition(lam) || !is_partition(rho))
    throw std::invalid_argument("mn_character: arguments must be partitions");
  if (partition_weight(lam) != partition_weight(rho))
    throw std::invalid_argument("mn_character: arguments must have equal weight");
  static std::map<std::pair<Partition, Partition>, Integer> memo;
  return mn_rec(lam, rho, memo);
}

Permutation cycle_type_rep(const Partition& mu) {
  if (!is_partition(mu)) throw std::invalid_argument("cycle_type_rep: not a partition");
  Permutation pi;
  int base = 0;
  for (int part : mu) {
    for (int j = 1; j <= part; ++j)
      pi.img.push_back(j < part ? base + j + 1 : base + 1);  // cycle on base+1..base+part
    base += part;
  }
  return pi;
}

HExpansion ch_h_expansion_from(const Permutation& pi) {
  if (pi.n() == 0) throw std::invalid_argument("ch_h_expansion: empty permutation");
  HExpansion out;
  for (const auto& [sigma, tau] : two_factorizations(pi)) {
    const auto scycles = perm_cycles(sigma);
    const auto tcycles = perm_cycles(tau);
    const int nc = static_cast<int>(scycles.size());
    const int sign = perm_sign(tau);

    // which sigma-cycles each tau-cycle meets
    std::vector<std::vector<int>> meets(tcycles.size());
    std::vector<int> owner(static_cast<std::size_t>(pi.n()) + 1, 0);
    for (int ci = 0; ci < nc; ++ci)
      for (int x : scycles[static_cast<std::size_t>(ci)]) owner[static_cast<std::size_t>(x)] = ci;
    for (std::size_t tj = 0; tj < tcycles.size(); ++tj) {
      std::vector<char> seen(static_cast<std::size_t>(nc), 0);
      for (int x : tcycles[tj]) seen[static_cast<std::size_t>(owner[static_cast<std::size_t>(x)])] = 1;
      for (int ci = 0; ci < nc; ++ci)
        if (seen[static_cast<std::size_t>(ci)]) meets[tj].push_back(ci);
    }

    for (const Permutation& phi : all_permutations(nc)) {
      Composition I(static_cast<std::size_t>(nc), 1);
      for (std::size_t tj = 0; tj < tcycles.size(); ++tj) {
        int psi = 0;
        for (int ci : meets[tj]) psi = std::max(psi, phi(ci + 1));
        I[static_cast<std::size_t>(psi - 1)] += 1;
      }
      Rational& slot = out.coeffs[I];
      slot += sign;
      if (slot == 0) out.coeffs.erase(I);
    }
  }
  return out;
}

HExpansion ch_h_expansion(const Partition& mu) {
  if (mu.empty()) throw std::invalid_argument("ch_h_expansion: mu must be nonempty");
  return ch_h_expansion_from(cycle_type_rep(mu));
}

Rational ch_eval(const Partition& mu, const YoungDiagram& lam) {
  if (mu.empty()) return 1;
  const HExpansion e = ch_h_expansion(mu);
  const MultirectCoords c = multirect_coords(lam);
  const int m = static_cast<int>(c.p.size());
  std::map<Var, Rational> vals;
  const std::vector<int> qp = c.qprime();
  for (int i = 1; i <= m; ++i) {
    vals[pvar(i)] = c.p[static_cast<std::size_t>(i - 1)];
    vals[qpvar(i)] = qp[static_cast<std::size_t>(i - 1)];
  }
  Rational total = 0;
  for (const auto& [I, coef] : e.coeffs) total += coef * h_eval(I, m).evaluate(vals);
  return total;
}

Rational ch_oracle(const Partition& mu, const YoungDiagram& lam) {
  if (mu.empty()) return 1;
  const int n = partition_weight(lam);
  const int k = partition_weight(mu);
  if (n < k) return 0;
  Integer falling = 1;
  for (int t = 0; t < k; ++t) falling *= (n - t);
  Partition rho = mu;
  for (int t = 0; t < n - k; ++t) rho.push_back(1);
  const Integer chi = mn_character(lam, rho);
  const Integer dim = mn_character(lam, Partition(static_cast<std::size_t>(n), 1));
  return Rational(falling * chi) / Rational(dim);
}

}  // namespace qyd
