#include "qyd/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qyd/linalg.hpp"

namespace qyd {

std::string diagram_str(const YoungDiagram& lam) {
  if (lam.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lam[i]);
  }
  return s;
}

YoungDiagram diagram_parse(const std::string& s) {
  if (s.empty() || s == "()") return {};
  YoungDiagram lam;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (...) {
      throw std::invalid_argument("diagram_parse: bad row list '" + s + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("diagram_parse: bad row list '" + s + "'");
    lam.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (!is_partition(lam))
    throw std::invalid_argument("diagram_parse: rows must be weakly decreasing positive");
  return lam;
}

MultirectCoords multirect_coords(const YoungDiagram& lam) {
  MultirectCoords c;
  std::size_t i = 0;
  while (i < lam.size()) {
    std::size_t j = i;
    while (j < lam.size() && lam[j] == lam[i]) ++j;
    c.p.push_back(static_cast<int>(j - i));
    int next = j < lam.size() ? lam[j] : 0;
    c.q.push_back(lam[i] - next);
    i = j;
  }
  return c;
}

std::vector<int> MultirectCoords::qprime() const {
  std::vector<int> qp(q.size());
  int tail = 0;
  for (std::size_t i = q.size(); i-- > 0;) {
    tail += q[i];
    qp[i] = tail;
  }
  return qp;
}

std::vector<int> multirect_to_interlacing(const MultirectCoords& c) {
  if (c.p.size() != c.q.size())
    throw std::invalid_argument("multirect_to_interlacing: p and q lengths differ");
  const int m = static_cast<int>(c.p.size());
  std::vector<int> xs(static_cast<std::size_t>(2 * m + 1));
  int qtail = 0;  // q_{i+1} + ... + q_m while walking i = m..0
  int psum = std::accumulate(c.p.begin(), c.p.end(), 0);
  for (int i = m; i >= 0; --i) {
    xs[static_cast<std::size_t>(2 * i)] = qtail - psum;  // x_{2i+1}, 0-based slot 2i
    if (i > 0) {
      xs[static_cast<std::size_t>(2 * i - 1)] = qtail + c.q[static_cast<std::size_t>(i - 1)] - psum;
      qtail += c.q[static_cast<std::size_t>(i - 1)];
      psum -= c.p[static_cast<std::size_t>(i - 1)];
    }
  }
  return xs;
}

std::vector<int> interlacing_coords(const YoungDiagram& lam) {
  return multirect_to_interlacing(multirect_coords(lam));
}

MultirectCoords interlacing_to_multirect(const std::vector<int>& xs) {
  if (xs.size() % 2 == 0)
    throw std::invalid_argument("interlacing_to_multirect: even-length coordinate list");
  MultirectCoords c;
  const int m = static_cast<int>(xs.size() / 2);
  for (int i = 1; i <= m; ++i) {
    c.p.push_back(xs[static_cast<std::size_t>(2 * i - 2)] - xs[static_cast<std::size_t>(2 * i - 1)]);
    c.q.push_back(xs[static_cast<std::size_t>(2 * i - 1)] - xs[static_cast<std::size_t>(2 * i)]);
  }
  return c;
}

YoungDiagram diagram_from_interlacing(std::vector<int> xs) {
  // erase equal adjacent values pairwise (a stack absorbs cascades)
  std::vector<int> r;
  for (int v : xs) {
    if (!r.empty() && r.back() == v)
      r.pop_back();
    else
      r.push_back(v);
  }
  if (r.size() % 2 == 0)
    throw std::invalid_argument("diagram_from_interlacing: even length after erasure");
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    if (r[i] <= r[i + 1])
      throw std::invalid_argument("diagram_from_interlacing: coordinates must decrease");
  int alt = 0;
  for (std::size_t i = 0; i < r.size(); ++i) alt += (i % 2 ? -r[i] : r[i]);
  if (alt != 0)
    throw std::invalid_argument("diagram_from_interlacing: alternating sum must vanish");
  MultirectCoords c = interlacing_to_multirect(r);
  YoungDiagram lam;
  std::vector<int> qp = c.qprime();
  for (std::size_t i = 0; i < c.p.size(); ++i) {
    if (qp[i] <= 0)
      throw std::invalid_argument("diagram_from_interlacing: negative row length");
    for (int t = 0; t < c.p[i]; ++t) lam.push_back(qp[i]);
  }
  return lam;
}

YoungDiagram diagram_from_multirect(const MultirectCoords& c) {
  for (int v : c.p)
    if (v < 0) throw std::invalid_argument("diagram_from_multirect: negative entry");
  for (int v : c.q)
    if (v < 0) throw std::invalid_argument("diagram_from_multirect: negative entry");
  return diagram_from_interlacing(multirect_to_interlacing(c));
}

FrobeniusCoords frobenius_coords(const YoungDiagram& lam) {
  FrobeniusCoords f;
  YoungDiagram conj = conjugate(lam);
  for (int i = 1; i <= static_cast<int>(lam.size()); ++i) {
    if (lam[static_cast<std::size_t>(i - 1)] < i) break;
    f.a.push_back(Rational(2 * lam[static_cast<std::size_t>(i - 1)] - 2 * i + 1, 2));
    f.b.push_back(Rational(2 * conj[static_cast<std::size_t>(i - 1)] - 2 * i + 1, 2));
  }
  return f;
}

SignedAlphabet interlacing_alphabet_at(const std::vector<int>& xs) {
  SignedAlphabet a;
  a.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational v(xs[i]);
    a.push_back(i % 2 == 0 ? minus_val(v) : plus_val(v));
  }
  return a;
}

SignedAlphabet interlacing_alphabet(const YoungDiagram& lam) {
  return interlacing_alphabet_at(interlacing_coords(lam));
}

SignedAlphabet row_alphabet(const YoungDiagram& lam, int k) {
  if (k < static_cast<int>(lam.size()))
    throw std::invalid_argument("row_alphabet: depth shorter than the diagram");
  SignedAlphabet a;
  a.reserve(2 * static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) {
    int row = i <= static_cast<int>(lam.size()) ? lam[static_cast<std::size_t>(i - 1)] : 0;
    a.push_back(minus_val(Rational(row - i + 1)));
    a.push_back(plus_val(Rational(row - i)));
  }
  a.push_back(minus_val(Rational(-k)));
  return a;
}

SignedAlphabet frobenius_alphabet(const YoungDiagram& lam) {
  FrobeniusCoords f = frobenius_coords(lam);
  SignedAlphabet a;
  const Rational half(1, 2);
  for (int i = 0; i < f.d(); ++i) {
    a.push_back(minus_val(f.a[static_cast<std::size_t>(i)] + half));
    a.push_back(plus_val(f.a[static_cast<std::size_t>(i)] - half));
  }
  // the column coordinates sit on the negative axis: +(-(b_i - 1/2)), -(-(b_i + 1/2))
  for (int i = f.d(); i-- > 0;) {
    a.push_back(plus_val(half - f.b[static_cast<std::size_t>(i)]));
    a.push_back(minus_val(-f.b[static_cast<std::size_t>(i)] - half));
  }
  return a;
}

Rational act_y(const QSymElement& f, const YoungDiagram& lam) {
  return evaluate_on_alphabet(f, interlacing_alphabet(lam));
}

int qlambda_dimension(int n) {
  if (n < 2) throw std::invalid_argument("qlambda_dimension: need n >= 2");
  const int target = 1 << (n - 2);
  std::vector<QSymElement> basis;
  for (const Composition& I : compositions_of(n)) basis.push_back(QSymElement::monomial(I));
  int prev = -1, plateau = 0;
  for (int bound = n + 2; bound <= 12; ++bound) {
    std::vector<YoungDiagram> fam = partitions_up_to(bound);
    RatMatrix m;
    m.rows = static_cast<int>(basis.size());
    m.cols = static_cast<int>(fam.size());
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c)
        m.set(r, c, act_y(basis[static_cast<std::size_t>(r)], fam[static_cast<std::size_t>(c)]));
    int rk = rank(m);
    if (rk >= target) return rk;
    if (rk == prev) {
      if (++plateau >= 2) return rk;
    } else {
      plateau = 0;
    }
    prev = rk;
  }
  return prev;
}

}  // namespace qyd
