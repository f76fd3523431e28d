// qyd — exact computer algebra for quasi-symmetric functions, Young-diagram
// coordinate systems, bipartite-graph generating functions, and word
// functions, with a built-in self-verification harness.
//
// Every command is pure: the same invocation produces byte-identical output
// on stdout.  Wall-clock timings are reported on stderr only.  Exit codes:
// 0 success, 1 failed verification, 2 usage or input error.
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qyd/characters.hpp"
#include "qyd/combinatorics.hpp"
#include "qyd/diagrams.hpp"
#include "qyd/ngraphs.hpp"
#include "qyd/poly.hpp"
#include "qyd/qsym.hpp"
#include "qyd/rational.hpp"
#include "qyd/stanley.hpp"
#include "qyd/verify.hpp"
#include "qyd/wqsym.hpp"

using nlohmann::json;
using namespace qyd;

namespace {

// ---------------------------------------------------------------------------
// Small string utilities.
// ---------------------------------------------------------------------------
std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// ---------------------------------------------------------------------------
// Input parsers.  Compositions are dot-separated ("2.1.3", "()" empty);
// partitions are comma-separated ("4,4,2", "()" empty) — the two syntaxes
// are deliberately disjoint.
// ---------------------------------------------------------------------------
Partition parse_partition(const std::string& s) {
  Partition lam;
  const std::string t = trim(s);
  if (t.empty() || t == "()") return lam;
  for (const std::string& tok : split_on(t, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(trim(tok), &used);
      if (used != trim(tok).size() || v <= 0) throw std::invalid_argument("");
      lam.push_back(v);
    } catch (...) {
      throw std::invalid_argument("bad partition '" + s +
                                  "' (expected comma-separated parts)");
    }
  }
  if (!is_partition(lam))
    throw std::invalid_argument("parts of '" + s +
                                "' are not weakly decreasing");
  return lam;
}

// Linear combinations of basis elements: terms joined by '+', each term an
// optional "<rational>*" prefix followed by "M:<composition>".  Mirrors the
// text output format exactly.
QSymElement parse_qsym(const std::string& s) {
  QSymElement out;
  const std::string t = trim(s);
  if (t.empty() || t == "0") return out;
  for (const std::string& raw : split_on(t, '+')) {
    const std::string term = trim(raw);
    const std::size_t pos = term.find("M:");
    if (pos == std::string::npos)
      throw std::invalid_argument("qsym term '" + term +
                                  "' has no 'M:' basis element");
    Rational c = 1;
    const std::string head = trim(term.substr(0, pos));
    if (!head.empty()) {
      if (head.back() != '*')
        throw std::invalid_argument("qsym term '" + term +
                                    "': coefficient must end in '*'");
      c = rat_parse(trim(head.substr(0, head.size() - 1)));
    }
    out += QSymElement::monomial(comp_parse(trim(term.substr(pos + 2))), c);
  }
  return out;
}

PackedWord parse_packed_word(const std::string& s) {
  const std::string t = trim(s);
  const PackedWord u = (t == "()") ? PackedWord{} : word_parse(t);
  if (!is_packed(u))
    throw std::invalid_argument("word '" + s +
                                "' is not packed (letters must form an "
                                "initial segment 1..d)");
  return u;
}

WQSymElement parse_wqsym(const std::string& s) {
  WQSymElement out;
  const std::string t = trim(s);
  if (t.empty() || t == "0") return out;
  for (const std::string& raw : split_on(t, '+')) {
    const std::string term = trim(raw);
    const std::size_t pos = term.find("P:");
    if (pos == std::string::npos)
      throw std::invalid_argument("wqsym term '" + term +
                                  "' has no 'P:' basis element");
    Rational c = 1;
    const std::string head = trim(term.substr(0, pos));
    if (!head.empty()) {
      if (head.back() != '*')
        throw std::invalid_argument("wqsym term '" + term +
                                    "': coefficient must end in '*'");
      c = rat_parse(trim(head.substr(0, head.size() - 1)));
    }
    out += c * WQSymElement::basis(parse_packed_word(term.substr(pos + 2)));
  }
  return out;
}

// Commutative polynomials: terms joined by '+', factors joined by '*', each
// factor a rational constant or a variable with optional '^exponent'.
// Accepts the library's own text output ("3*p1*q'2^2 + -1*p2").
CommPoly parse_commpoly(const std::string& s) {
  CommPoly out;
  const std::string t = trim(s);
  if (t.empty() || t == "0") return out;
  for (const std::string& raw : split_on(t, '+')) {
    const std::string term = trim(raw);
    if (term.empty())
      throw std::invalid_argument("empty term in polynomial '" + s + "'");
    Rational coeff = 1;
    CommPoly mono = CommPoly::constant(1);
    bool first = true;
    for (const std::string& rawtok : split_on(term, '*')) {
      const std::string tok = trim(rawtok);
      if (tok.empty())
        throw std::invalid_argument("empty factor in term '" + term + "'");
      const std::size_t caret = tok.find('^');
      const std::string base = trim(tok.substr(0, caret));
      if (first && caret == std::string::npos &&
          base.find_first_not_of("0123456789-/") == std::string::npos) {
        coeff = rat_parse(base);
        first = false;
        continue;
      }
      first = false;
      int e = 1;
      if (caret != std::string::npos) {
        const std::string es = trim(tok.substr(caret + 1));
        try {
          std::size_t used = 0;
          e = std::stoi(es, &used);
          if (used != es.size() || e <= 0) throw std::invalid_argument("");
        } catch (...) {
          throw std::invalid_argument("bad exponent in factor '" + tok + "'");
        }
      }
      mono = mono * CommPoly::variable(var_parse(base), e);
    }
    out += coeff * mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON encoders.  Rationals are strings (exact); the empty index is "()".
// ---------------------------------------------------------------------------
std::string comp_key(const Composition& I) {
  return I.empty() ? "()" : comp_str(I);
}

std::string word_key(const PackedWord& u) {
  return u.empty() ? "()" : word_str(u);
}

json qsym_json(const QSymElement& f) {
  json m = json::object();
  for (const auto& [I, c] : f.coeffs) m[comp_key(I)] = rat_str(c);
  return json{{"M", m}};
}

json wqsym_json(const WQSymElement& f) {
  json m = json::object();
  for (const auto& [u, c] : f.coeffs) m[word_key(u)] = rat_str(c);
  return json{{"P", m}};
}

json hexp_json(const HExpansion& e) {
  json m = json::object();
  for (const auto& [I, c] : e.coeffs) m[comp_key(I)] = rat_str(c);
  return json{{"H", m}};
}

std::string mono_key(const Monomial& mo) {
  std::string s;
  for (const auto& [v, e] : mo) {
    if (!s.empty()) s += '*';
    s += var_str(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

json commpoly_json(const CommPoly& f) {
  json m = json::object();
  for (const auto& [mo, c] : f.terms) m[mono_key(mo)] = rat_str(c);
  return json{{"terms", m}};
}

json ncpoly_json(const NCPoly& f) {
  json m = json::object();
  for (const auto& [w, c] : f.terms)
    m[w.empty() ? "()" : ncword_str(w)] = rat_str(c);
  return json{{"terms", m}};
}

json rat_vec_json(const std::vector<Rational>& xs) {
  json a = json::array();
  for (const Rational& x : xs) a.push_back(rat_str(x));
  return a;
}

// ---------------------------------------------------------------------------
// Output plumbing: one document per invocation, to stdout or --out FILE.
// ---------------------------------------------------------------------------
struct Output {
  std::string format = "text";  // "text" or "json"
  std::string out_file;

  void emit_text(const std::string& doc) const {
    if (format == "json")
      throw std::logic_error("internal: text document in json mode");
    write(doc);
  }

  void emit(const std::string& text_doc, json j) const {
    if (format == "json") {
      j["schema"] = "qyd/1";
      write(j.dump(2));
    } else {
      write(text_doc);
    }
  }

 private:
  void write(const std::string& doc) const {
    if (out_file.empty()) {
      std::cout << doc << '\n';
    } else {
      std::ofstream f(out_file);
      if (!f) throw std::invalid_argument("cannot open --out file " + out_file);
      f << doc << '\n';
    }
  }
};

void add_output_options(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", out.out_file, "write the output document to FILE");
}

// ---------------------------------------------------------------------------
// Graph input: a set composition string or a JSON file
// {"v1":[...],"v2":[...],"e12":[[a,b],...],"e21":[[c,d],...]}.
// ---------------------------------------------------------------------------
BipartiteGraph load_graph(const std::string& setcomp,
                          const std::string& graph_file) {
  if (setcomp.empty() == graph_file.empty())
    throw std::invalid_argument(
        "give exactly one graph source: --setcomp STR or --graph FILE");
  if (!setcomp.empty()) return graph_from_setcomp(setcomp_parse(setcomp));

  std::ifstream f(graph_file);
  if (!f) throw std::invalid_argument("cannot open graph file " + graph_file);
  json j;
  f >> j;
  const std::vector<int> v1 = j.at("v1").get<std::vector<int>>();
  const std::vector<int> v2 = j.at("v2").get<std::vector<int>>();
  auto edges = [&j](const char* key) {
    std::vector<std::pair<int, int>> out;
    if (!j.contains(key)) return out;
    for (const auto& e : j.at(key)) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument(std::string("each ") + key +
                                    " entry must be a two-element array");
      out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
  };
  const int n = static_cast<int>(v1.size() + v2.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : v1) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("v1/v2 must partition 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int v : v2) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("v1/v2 must partition 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
  const bool labelled = j.value("labelled", false);
  return make_graph(n, v1, edges("e12"), edges("e21"), labelled);
}

// ---------------------------------------------------------------------------
// Verification report rendering.  Timings go to stderr only, keeping stdout
// byte-deterministic.
// ---------------------------------------------------------------------------
json report_json(const SuiteReport& r) {
  json checks = json::array();
  for (const CheckResult& c : r.checks) {
    json jc{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) jc[c.passed ? "detail" : "witness"] = c.detail;
    checks.push_back(std::move(jc));
  }
  return json{{"name", r.suite},
              {"title", r.title},
              {"passed", r.passed()},
              {"checks", std::move(checks)}};
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " — " << r.title << '\n';
  for (const CheckResult& c : r.checks) {
    os << "  " << (c.passed ? "PASS" : "FAIL") << ' ' << c.name;
    if (!c.detail.empty()) os << " — " << c.detail;
    os << '\n';
  }
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << " ("
     << (static_cast<int>(r.checks.size()) - r.failed_count()) << '/'
     << r.checks.size() << " checks)";
  return os.str();
}

int run_verify(const std::string& suite, Depth depth, const Output& out) {
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    reports = run_all_verify_suites(depth);
  } else {
    reports.push_back(run_verify_suite(suite, depth));  // throws if unknown
  }

  double total = 0;
  for (const SuiteReport& r : reports) {
    std::fprintf(stderr, "time %s: %.2fs\n", r.suite.c_str(), r.seconds);
    total += r.seconds;
  }
  std::fprintf(stderr, "time total: %.2fs\n", total);

  int failed = 0;
  for (const SuiteReport& r : reports)
    if (!r.passed()) ++failed;

  std::ostringstream text;
  json suites = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) text << "\n\n";
    text << report_text(reports[i]);
    suites.push_back(report_json(reports[i]));
  }
  if (reports.size() > 1) {
    text << "\n\nverify: ";
    if (failed == 0)
      text << "all " << reports.size() << " suites passed";
    else
      text << failed << " of " << reports.size() << " suites FAILED";
  }
  json j{{"command", "verify"},
         {"depth", depth == Depth::deep ? "deep" : "standard"},
         {"suites", std::move(suites)},
         {"passed", failed == 0}};
  out.emit(text.str(), std::move(j));
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qyd — exact computer algebra for quasi-symmetric functions, "
      "Young-diagram coordinates, and word functions"};
  app.require_subcommand(1);

  int rc = 0;

  const char* deep_env = std::getenv("QYD_DEEP");
  const bool env_deep = deep_env != nullptr && std::string(deep_env) == "1";

  // ---- qsym ---------------------------------------------------------------
  auto* qsym_cmd = app.add_subcommand(
      "qsym", "monomial-basis quasi-symmetric function operations");
  qsym_cmd->require_subcommand(1);

  static std::string qm_a, qm_b;
  static Output qm_out;
  auto* qsym_mult = qsym_cmd->add_subcommand("mult", "quasi-shuffle product");
  qsym_mult->add_option("a", qm_a, "first element, e.g. M:2")->required();
  qsym_mult->add_option("b", qm_b, "second element, e.g. M:1.1")->required();
  add_output_options(qsym_mult, qm_out);
  qsym_mult->callback([&] {
    const QSymElement p = parse_qsym(qm_a) * parse_qsym(qm_b);
    qm_out.emit(p.str(), qsym_json(p));
  });

  static std::string qc_a;
  static Output qc_out;
  auto* qsym_cop =
      qsym_cmd->add_subcommand("coproduct", "deconcatenation coproduct");
  qsym_cop->add_option("a", qc_a, "element, e.g. M:2.1")->required();
  add_output_options(qsym_cop, qc_out);
  qsym_cop->callback([&] {
    const TensorTerms d = qsym_coproduct(parse_qsym(qc_a));
    std::string text;
    json terms = json::array();
    for (const auto& [ab, c] : d) {
      if (!text.empty()) text += " + ";
      text += rat_str(c) + "*M:" + comp_key(ab.first) + " (x) M:" +
              comp_key(ab.second);
      terms.push_back(json{{"left", comp_key(ab.first)},
                           {"right", comp_key(ab.second)},
                           {"coeff", rat_str(c)}});
    }
    if (text.empty()) text = "0";
    qc_out.emit(text, json{{"tensor", std::move(terms)}});
  });

  static std::string qa_a;
  static Output qa_out;
  auto* qsym_ant = qsym_cmd->add_subcommand("antipode", "Hopf antipode");
  qsym_ant->add_option("a", qa_a, "element, e.g. M:1.2.2")->required();
  add_output_options(qsym_ant, qa_out);
  qsym_ant->callback([&] {
    const QSymElement s = antipode(parse_qsym(qa_a));
    qa_out.emit(s.str(), qsym_json(s));
  });

  static std::string qe_a;
  static int qe_n = 4;
  static bool qe_plain = false;
  static Output qe_out;
  auto* qsym_exp = qsym_cmd->add_subcommand(
      "expand", "expansion on the alternating virtual alphabet");
  qsym_exp->add_option("a", qe_a, "element, e.g. M:2.1")->required();
  qsym_exp->add_option("--n", qe_n, "number of letters")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  qsym_exp->add_flag("--plain", qe_plain,
                     "expand on the ordinary alphabet x1..xn instead");
  add_output_options(qsym_exp, qe_out);
  qsym_exp->callback([&] {
    SignedAlphabet alpha;
    if (qe_plain) {
      for (int k = 1; k <= qe_n; ++k) alpha.push_back(plus_var(Var{'x', k}));
    } else {
      alpha = virtual_x(qe_n);
    }
    const CommPoly f = expand_on_alphabet(parse_qsym(qe_a), alpha);
    qe_out.emit(f.str(), commpoly_json(f));
  });

  // ---- diagram ------------------------------------------------------------
  auto* diag_cmd =
      app.add_subcommand("diagram", "Young-diagram coordinate systems");
  diag_cmd->require_subcommand(1);

  static std::string dc_lam;
  static Output dc_out;
  dc_out.format = "json";  // coordinate table defaults to JSON
  auto* diag_conv = diag_cmd->add_subcommand(
      "convert", "all coordinate systems of a partition");
  diag_conv->add_option("partition", dc_lam, "partition, e.g. 4,4,2")
      ->required();
  add_output_options(diag_conv, dc_out);
  diag_conv->callback([&] {
    const Partition lam = parse_partition(dc_lam);
    const std::vector<int> xs = interlacing_coords(lam);
    const MultirectCoords mr = multirect_coords(lam);
    const FrobeniusCoords fr = frobenius_coords(lam);
    auto ints = [](const std::vector<int>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
      }
      return s.empty() ? std::string("()") : s;
    };
    auto rats = [](const std::vector<Rational>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += rat_str(v[i]);
      }
      return s.empty() ? std::string("()") : s;
    };
    std::ostringstream text;
    text << "partition: " << (lam.empty() ? "()" : diagram_str(lam)) << '\n'
         << "interlacing: " << ints(xs) << '\n'
         << "p: " << ints(mr.p) << '\n'
         << "q: " << ints(mr.q) << '\n'
         << "q': " << ints(mr.qprime()) << '\n'
         << "frobenius a: " << rats(fr.a) << '\n'
         << "frobenius b: " << rats(fr.b);
    json j{{"partition", lam},       {"interlacing", xs},
           {"p", mr.p},              {"q", mr.q},
           {"qprime", mr.qprime()},  {"frobenius_a", rat_vec_json(fr.a)},
           {"frobenius_b", rat_vec_json(fr.b)}};
    dc_out.emit(text.str(), std::move(j));
  });

  static std::string de_elem, de_lam;
  static Output de_out;
  auto* diag_eval = diag_cmd->add_subcommand(
      "eval", "evaluate an element on a diagram's interlacing alphabet");
  diag_eval->add_option("element", de_elem, "element, e.g. M:2.1")->required();
  diag_eval->add_option("partition", de_lam, "partition, e.g. 4,4,2")
      ->required();
  add_output_options(diag_eval, de_out);
  diag_eval->callback([&] {
    const Rational v = act_y(parse_qsym(de_elem), parse_partition(de_lam));
    de_out.emit(rat_str(v), json{{"value", rat_str(v)}});
  });

  // ---- stanley ------------------------------------------------------------
  auto* st_cmd = app.add_subcommand(
      "stanley", "two-row coordinate basis and coordinate changes");
  st_cmd->require_subcommand(1);

  static std::string sh_comp;
  static int sh_m = 3;
  static Output sh_out;
  auto* st_heval = st_cmd->add_subcommand(
      "h-eval", "truncation of a coordinate-basis element (p, q' variables)");
  st_heval
      ->add_option("composition", sh_comp,
                   "index with last part >= 2, e.g. 1.3")
      ->required();
  st_heval->add_option("--m", sh_m, "number of columns")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output_options(st_heval, sh_out);
  st_heval->callback([&] {
    const CommPoly f = h_eval(comp_parse(trim(sh_comp)), sh_m);
    sh_out.emit(f.str(), commpoly_json(f));
  });

  static std::string se_poly;
  static int se_deg = -1;
  static Output se_out;
  auto* st_hexp = st_cmd->add_subcommand(
      "h-expand", "basis coordinates of a polynomial in p and q' variables");
  st_hexp
      ->add_option("poly", se_poly,
                   "width-d truncation, e.g. \"1*p1*q'1 + 1*p1\"")
      ->required();
  st_hexp->add_option("--n-max", se_deg,
                      "maximum degree d (default: total degree of the input)");
  add_output_options(st_hexp, se_out);
  st_hexp->callback([&] {
    const CommPoly f = parse_commpoly(se_poly);
    const int d = se_deg >= 0 ? se_deg : f.total_degree();
    const HExpansion e = h_expand_poly(f, d);
    se_out.emit(hexp_str(e), hexp_json(e));
  });

  static std::string sp_elem;
  static int sp_m = 3;
  static Output sp_out;
  auto* st_phi = st_cmd->add_subcommand(
      "phi", "substitute the two-row coordinates into an element");
  st_phi->add_option("element", sp_elem, "element, e.g. M:3")->required();
  st_phi->add_option("--m", sp_m, "number of columns")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output_options(st_phi, sp_out);
  st_phi->callback([&] {
    const CommPoly f = phi_x_to_pq(parse_qsym(sp_elem), sp_m);
    sp_out.emit(f.str(), commpoly_json(f));
  });

  // ---- char ---------------------------------------------------------------
  auto* ch_cmd = app.add_subcommand(
      "char", "normalized symmetric-group character polynomials");
  ch_cmd->require_subcommand(1);

  static std::string cx_mu;
  static Output cx_out;
  auto* ch_exp = ch_cmd->add_subcommand(
      "expand", "coordinate-basis expansion of a character");
  ch_exp->add_option("mu", cx_mu, "partition, e.g. 3")->required();
  add_output_options(ch_exp, cx_out);
  ch_exp->callback([&] {
    const HExpansion e = ch_h_expansion(parse_partition(cx_mu));
    cx_out.emit(hexp_str(e), hexp_json(e));
  });

  static std::string cv_mu, cv_lam;
  static Output cv_out;
  auto* ch_ev = ch_cmd->add_subcommand(
      "eval", "evaluate a character polynomial on a diagram");
  ch_ev->add_option("mu", cv_mu, "partition, e.g. 2,1")->required();
  ch_ev->add_option("lambda", cv_lam, "partition, e.g. 4,4,2")->required();
  add_output_options(ch_ev, cv_out);
  ch_ev->callback([&] {
    const Rational v =
        ch_eval(parse_partition(cv_mu), parse_partition(cv_lam));
    cv_out.emit(rat_str(v), json{{"value", rat_str(v)}});
  });

  static std::string co_mu, co_lam;
  static Output co_out;
  auto* ch_or = ch_cmd->add_subcommand(
      "oracle", "border-strip recursion evaluation (independent route)");
  ch_or->add_option("mu", co_mu, "partition, e.g. 2,1")->required();
  ch_or->add_option("lambda", co_lam, "partition, e.g. 4,4,2")->required();
  add_output_options(ch_or, co_out);
  ch_or->callback([&] {
    const Rational v =
        ch_oracle(parse_partition(co_mu), parse_partition(co_lam));
    co_out.emit(rat_str(v), json{{"value", rat_str(v)}});
  });

  // ---- ng -----------------------------------------------------------------
  auto* ng_cmd = app.add_subcommand(
      "ng", "bipartite-graph generating functions");
  ng_cmd->require_subcommand(1);

  static std::string ne_setcomp, ne_graph;
  static int ne_m = 2;
  static Output ne_out;
  auto* ng_ev = ng_cmd->add_subcommand(
      "eval", "two-alphabet generating function at a finite width");
  ng_ev->add_option("--setcomp", ne_setcomp,
                    "set composition, e.g. \"{2,3}|{1,5}|{6}|{4}\"");
  ng_ev->add_option("--graph", ne_graph, "graph JSON file");
  ng_ev->add_option("--m", ne_m, "number of columns")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output_options(ng_ev, ne_out);
  ng_ev->callback([&] {
    const CommPoly f = ng_eval(load_graph(ne_setcomp, ne_graph), ne_m);
    ne_out.emit(f.str(), commpoly_json(f));
  });

  static std::string nv_setcomp, nv_graph;
  static int nv_m = 3;
  static Output nv_out;
  auto* ng_ver = ng_cmd->add_subcommand(
      "verify",
      "check the one-alphabet formula against the two-alphabet evaluation");
  ng_ver->add_option("--setcomp", nv_setcomp, "set composition");
  ng_ver->add_option("--graph", nv_graph, "graph JSON file");
  ng_ver->add_option("--m", nv_m, "largest width checked")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output_options(ng_ver, nv_out);
  ng_ver->callback([&] {
    const BipartiteGraph g = load_graph(nv_setcomp, nv_graph);
    std::ostringstream text;
    json widths = json::array();
    bool all_ok = true;
    for (int m = 0; m <= nv_m; ++m) {
      const bool ok = verify_ng_formula(g, m);
      all_ok = all_ok && ok;
      if (m) text << '\n';
      text << (ok ? "PASS" : "FAIL")
           << " one-alphabet formula equals the two-alphabet evaluation at "
              "width "
           << m;
      widths.push_back(json{{"m", m}, {"passed", ok}});
    }
    text << "\nresult: " << (all_ok ? "PASS" : "FAIL");
    nv_out.emit(text.str(),
                json{{"command", "ng verify"},
                     {"widths", std::move(widths)},
                     {"passed", all_ok}});
    if (!all_ok) rc = 1;
  });

  static int ngk_n = 3;
  static Output ngk_out;
  auto* ng_gk = ng_cmd->add_subcommand(
      "gk", "independence rank of the set-composition graph family");
  ng_gk->add_option("--n", ngk_n, "number of vertices")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_options(ng_gk, ngk_out);
  ng_gk->callback([&] {
    const int r = gk_independence_rank(ngk_n);
    ngk_out.emit(std::to_string(r), json{{"n", ngk_n}, {"rank", r}});
  });

  // ---- wqsym --------------------------------------------------------------
  auto* wq_cmd = app.add_subcommand(
      "wqsym", "word functions indexed by packed words");
  wq_cmd->require_subcommand(1);

  static std::string we_word;
  static int we_n = 4;
  static bool we_plain = false;
  static Output we_out;
  auto* wq_exp = wq_cmd->add_subcommand(
      "expand", "expansion on the alternating letter alphabet");
  wq_exp->add_option("word", we_word, "packed word, e.g. 121")->required();
  wq_exp->add_option("--n", we_n, "number of letters")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  wq_exp->add_flag("--plain", we_plain,
                   "expand on the ordinary alphabet a1..an instead");
  add_output_options(wq_exp, we_out);
  wq_exp->callback([&] {
    const PackedWord u = parse_packed_word(we_word);
    const NCPoly f =
        we_plain ? p_expand(u, we_n) : p_virtual_expand(u, we_n);
    we_out.emit(f.str(), ncpoly_json(f));
  });

  static std::string wp_a, wp_b;
  static Output wp_out;
  auto* wq_prod = wq_cmd->add_subcommand("product", "basis-element product");
  wq_prod->add_option("a", wp_a, "first element, e.g. P:1")->required();
  wq_prod->add_option("b", wp_b, "second element, e.g. P:11")->required();
  add_output_options(wq_prod, wp_out);
  wq_prod->callback([&] {
    const WQSymElement p = parse_wqsym(wp_a) * parse_wqsym(wp_b);
    wp_out.emit(p.str(), wqsym_json(p));
  });

  static int wk_n = 3;
  static Output wk_out;
  auto* wq_ker = wq_cmd->add_subcommand(
      "kernel-dim",
      "dimension of the degree-n kernel of the letter-change substitution");
  wq_ker->add_option("--n", wk_n, "degree")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output_options(wq_ker, wk_out);
  wq_ker->callback([&] {
    const int d = kernel_ideal_dimension(wk_n);
    wk_out.emit(std::to_string(d), json{{"n", wk_n}, {"dimension", d}});
  });

  static int wv_nmax = 3;
  static Output wv_out;
  auto* wq_ver = wq_cmd->add_subcommand(
      "verify",
      "letter-substitution equation for all packed words up to a length");
  wq_ver->add_option("--n-max", wv_nmax, "largest word length checked")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output_options(wq_ver, wv_out);
  wq_ver->callback([&] {
    std::ostringstream text;
    json lengths = json::array();
    bool all_ok = true;
    for (int len = 0; len <= wv_nmax; ++len) {
      bool ok = true;
      std::string witness;
      int count = 0;
      for (const PackedWord& u : packed_words(len)) {
        ++count;
        const FuncEqReport r = check_functional_eq_nc(
            [&u](int n) { return p_virtual_expand(u, n); }, wv_nmax + 2);
        if (!r.ok) {
          ok = false;
          witness = "P:" + word_key(u) + " fails " + r.what + " at n=" +
                    std::to_string(r.n) + ", i=" + std::to_string(r.i);
          break;
        }
      }
      all_ok = all_ok && ok;
      if (len) text << '\n';
      text << (ok ? "PASS" : "FAIL") << " length " << len << " (" << count
           << " patterns)";
      if (!ok) text << " — " << witness;
      json jl{{"length", len}, {"passed", ok}};
      if (!ok) jl["witness"] = witness;
      lengths.push_back(std::move(jl));
    }
    text << "\nresult: " << (all_ok ? "PASS" : "FAIL");
    wv_out.emit(text.str(),
                json{{"command", "wqsym verify"},
                     {"lengths", std::move(lengths)},
                     {"passed", all_ok}});
    if (!all_ok) rc = 1;
  });

  // ---- verify ---------------------------------------------------------------
  static std::string v_suite;
  static std::string v_depth = env_deep ? "deep" : "standard";
  static bool v_deep_flag = false;
  static Output v_out;
  auto* ver_cmd = app.add_subcommand(
      "verify", "run self-verification suites ('all' or a suite name)");
  std::string suite_help = "suite name or 'all'; suites:";
  for (const std::string& n : verify_suite_names()) suite_help += ' ' + n;
  ver_cmd->add_option("suite", v_suite, suite_help)->required();
  ver_cmd->add_option("--depth", v_depth, "check depth")
      ->check(CLI::IsMember({"standard", "deep"}))
      ->capture_default_str();
  ver_cmd->add_flag("--deep", v_deep_flag, "shorthand for --depth deep");
  add_output_options(ver_cmd, v_out);
  ver_cmd->callback([&] {
    const Depth depth = (v_deep_flag || v_depth == "deep") ? Depth::deep
                                                           : Depth::standard;
    rc = run_verify(v_suite, depth, v_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
