// symgraph command-line driver. Standard output carries JSON, CSV or
// polynomial text only; progress and errors go to standard error.
//
// Exit codes: 0 success, 1 failed verification item or internal error,
// 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symgraph/checks.hpp"
#include "symgraph/constructions.hpp"
#include "symgraph/criterion.hpp"
#include "symgraph/dims.hpp"
#include "symgraph/elementary.hpp"
#include "symgraph/errors.hpp"
#include "symgraph/io.hpp"
#include "symgraph/rank.hpp"
#include "symgraph/symmetrize.hpp"
#include "symgraph/tuples.hpp"

using namespace symgraph;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out;
};

void add_common(CLI::App* app, Common& c, bool with_out = true) {
  app->add_option("--seed", c.seed, "Seed for every randomized step")->capture_default_str();
  app->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
  if (with_out) app->add_option("--out", c.out, "Write the result here instead of standard output");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_file(out, text.back() == '\n' ? text : text + '\n');
    std::cerr << "wrote " << out << '\n';
  }
}

// Every JSON report starts with the tool version and a hash of its input.
json report(const std::string& command, const std::string& input) {
  json j;
  j["version"] = version();
  j["command"] = command;
  j["input_hash"] = content_hash(input);
  return j;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("'" + text + "' is not a comma-separated integer list");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::string rat_poly_text(const RatPoly& p) {
  std::ostringstream os;
  os << "# vars " << p.num_vars() << '\n';
  for (const auto& [m, c] : p.terms()) {
    os << c.get_str();
    for (auto e : m.exps) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

ExactPoly read_poly_file(const std::string& path, std::optional<std::size_t> nvars) {
  return parse_poly_text(read_file(path), nvars);
}

// ---------------------------------------------------------------- symmetrize

struct SymmetrizeArgs {
  Common c;
  std::string matrix;
  bool exact = false, witness = false;
  std::size_t trials = 4;
  std::string modulus = "auto";
  std::size_t max_n = 8;
  std::uint64_t max_degree = 64;
};

int run_symmetrize(const SymmetrizeArgs& a) {
  const std::string input = read_file(a.matrix);
  const EdgeMatrix m = parse_matrix_json(input);
  SymmetrizeOptions so;
  so.threads = a.c.threads;
  so.budget = {a.max_n, a.max_degree};
  if (a.exact) {
    std::cerr << "expanding over " << m.size() << "! permutations\n";
    emit(to_poly_text(symmetrize_full(graph_monomial(m), so)), a.c.out);
    return 0;
  }
  NonzeroTestOptions t;
  t.policy = a.witness ? TestPolicy::kWitnessOnly : TestPolicy::kExactIfSmall;
  t.trials = a.trials;
  t.seed = a.c.seed;
  t.symmetrize = so;
  if (a.modulus != "auto") {
    try {
      t.modulus = std::stoull(a.modulus);
    } catch (const std::exception&) {
      throw UsageError("--modulus must be 'auto' or a prime");
    }
    PrimeModulus check(*t.modulus);
  }
  json j = report("symmetrize", input);
  j["n"] = m.size();
  j["witness"] = json::parse(witness_json(nonzero_test(m, t)));
  emit(j.dump(2), a.c.out);
  return 0;
}

// ---------------------------------------------------------------- check-thm1

struct Thm1Args {
  Common c;
  std::string matrix, shape;
  bool search = false;
  std::size_t max_n = 8;
  std::uint64_t max_degree = 64;
};

int run_check_thm1(const Thm1Args& a) {
  if (a.shape.empty() == !a.search) throw UsageError("give exactly one of --shape or --search");
  const std::string input = read_file(a.matrix);
  const EdgeMatrix m = parse_matrix_json(input);
  CheckOptions co;
  co.block_symmetrize.threads = a.c.threads;
  co.block_symmetrize.budget = {a.max_n, a.max_degree};
  json j = report("check-thm1", input);
  if (a.search) {
    const ShapeSearchResult r = search_shape(m, co);
    j["shapes_tried"] = r.shapes_tried;
    j["certificate"] = r.certificate ? json::parse(certificate_json(*r.certificate)) : json(nullptr);
    j["conclusion"] = r.certificate ? "CERTIFIED-NONZERO" : "UNDECIDED-BY-THM1";
  } else {
    const Thm1Certificate cert = check_theorem1(m, Shape::parse(a.shape), co);
    j["certificate"] = json::parse(certificate_json(cert));
    j["conclusion"] = cert.conclusion();
  }
  emit(j.dump(2), a.c.out);
  return 0;
}

// ----------------------------------------------------------------- construct

json construction_report(const std::string& command, const std::string& params, const Construction& c) {
  json j = report(command, params);
  j["construction"] = json::parse(construction_json(c));
  std::cerr << "checking the block criterion on shape " << c.shape.to_string() << '\n';
  j["certificate"] = json::parse(certificate_json(check_theorem1(c.matrix, c.shape)));
  return j;
}

std::string params_of(const std::vector<std::pair<std::string, std::int64_t>>& kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += k + "=" + std::to_string(v) + ";";
  return s;
}

struct Thm3Args {
  Common c;
  std::int64_t n = 0, w = 0;
  std::string shape;
  std::optional<std::int64_t> d;
  bool expand = false, no_certify = false;
};

int run_thm3(const Thm3Args& a) {
  const PartTuple shape = parse_int_list(a.shape);
  FamilyOptions fo;
  fo.degree = a.d;
  fo.certify = !a.no_certify;
  fo.test.seed = a.c.seed;
  fo.test.symmetrize.threads = a.c.threads;
  fo.check.block_symmetrize.threads = a.c.threads;
  const std::string params = "N=" + std::to_string(a.n) + ";shape=" + a.shape + ";w=" + std::to_string(a.w) +
                             ";d=" + (a.d ? std::to_string(*a.d) : std::string("auto"));
  const FamilyInstance inst = independent_family(a.n, shape, a.w, fo);
  std::cerr << inst.family.size() << " member(s), d = " << inst.degree << '\n';
  json j = report("construct thm3", params);
  j["instance"] = json::parse(family_json(inst));
  if (a.expand) {
    SymmetrizeOptions so;
    so.threads = a.c.threads;
    std::vector<ExactPoly> phis;
    json forms = json::array();
    for (std::size_t k = 0; k < inst.family.size(); ++k) {
      std::cerr << "expanding member " << k + 1 << '\n';
      phis.push_back(symmetrize_full(graph_monomial(inst.family[k].m), so));
      const SemiInvariant q = homogenize(to_elementary(phis.back()), inst.degree);
      forms.push_back({{"degree", q.degree}, {"weight", q.weight}, {"scale", q.scale.get_str()},
                       {"form", to_poly_text(q.q)}});
    }
    const RankResult rk = rank(phis, a.c.seed);
    j["expansion"] = {{"rank", rk.rank}, {"method", rk.method}, {"semi_invariants", forms}};
  }
  emit(j.dump(2), a.c.out);
  return 0;
}

// ---------------------------------------------------------------------- dims

json pp_json(const PPBound& b) {
  return {{"value", b.value.get_str()}, {"valid", b.valid}, {"precision", b.precision}, {"x", b.x}};
}

// ------------------------------------------------------------------- semiinv

int run_convert(const std::string& poly, std::size_t n, std::optional<std::int64_t> hdeg, bool no_translation,
                const std::string& out) {
  const ExactPoly f = read_poly_file(poly, n);
  if (f.num_vars() != n) throw DomainError("polynomial has " + std::to_string(f.num_vars()) + " variables, --N is " + std::to_string(n));
  const ElemPoly p = to_elementary(f);
  if (!hdeg) {
    emit(rat_poly_text(p), out);
    return 0;
  }
  const SemiInvariant q = homogenize(p, *hdeg, !no_translation);
  std::cerr << "degree " << q.degree << ", weight " << q.weight << ", scale " << q.scale.get_str() << '\n';
  emit(to_poly_text(q.q), out);
  return 0;
}

std::vector<ExactPoly> read_polys(const std::vector<std::string>& paths) {
  std::vector<ExactPoly> out;
  for (const auto& p : paths) out.push_back(read_poly_file(p, std::nullopt));
  return out;
}

std::string concat_inputs(const std::vector<std::string>& paths) {
  std::string all;
  for (const auto& p : paths) all += read_file(p);
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetrized graph-monomials: nonzero tests, block criterion, constructions, dimension counts"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  // symmetrize
  SymmetrizeArgs sa;
  auto* sym = app.add_subcommand("symmetrize", "Symmetrize the graph-monomial of an edge matrix");
  sym->add_option("--matrix", sa.matrix, "Edge matrix JSON")->required();
  auto* ex = sym->add_flag("--exact", sa.exact, "Full expansion, written as polynomial text");
  auto* wi = sym->add_flag("--witness", sa.witness, "Modular evaluation only");
  ex->excludes(wi);
  sym->add_option("--trials", sa.trials, "Evaluation points")->capture_default_str();
  sym->add_option("--modulus", sa.modulus, "'auto' or a prime below 2^63")->capture_default_str();
  sym->add_option("--max-n", sa.max_n, "Largest N for full expansion")->capture_default_str();
  sym->add_option("--max-degree", sa.max_degree, "Largest total degree for full expansion")->capture_default_str();
  add_common(sym, sa.c);

  // check-thm1
  Thm1Args ta;
  auto* thm1 = app.add_subcommand("check-thm1", "Check the block-matrix sufficient criterion");
  thm1->add_option("--matrix", ta.matrix, "Edge matrix JSON")->required();
  thm1->add_option("--shape", ta.shape, "Parts, e.g. 3,3");
  thm1->add_flag("--search", ta.search, "Try every shape (N <= 12)");
  thm1->add_option("--max-n", ta.max_n, "Largest block expanded for the product condition")->capture_default_str();
  thm1->add_option("--max-degree", ta.max_degree, "Largest block degree expanded")->capture_default_str();
  add_common(thm1, ta.c);

  // construct
  auto* con = app.add_subcommand("construct", "Build edge matrices");
  con->require_subcommand(1);
  Common cc;
  std::int64_t p_n = 0, p_d = 0, p_m = 0, p_a = 0, p_b = 0, p_r = 0, p_l = 0, p_s = 0, p_t = 0, p_u = 0, p_v = 0;
  std::string p_list, p_matrix;

  auto* c_even = con->add_subcommand("even", "Even-entry matrix in E(N, d)");
  c_even->add_option("--N", p_n)->required();
  c_even->add_option("--d", p_d)->required();
  add_common(c_even, cc);

  auto* c_bal = con->add_subcommand("balanced", "m x n matrix with row sums b and balanced columns");
  c_bal->add_option("--m", p_m)->required();
  c_bal->add_option("--n", p_n)->required();
  c_bal->add_option("--b", p_list, "Row sums, comma-separated")->required();
  add_common(c_bal, cc);

  auto* c_i = con->add_subcommand("thm2-i", "n parts of size m, blocks 2aI + bD_m");
  for (auto [name, ref] : {std::pair{"--m", &p_m}, {"--n", &p_n}, {"--a", &p_a}, {"--b", &p_b}}) c_i->add_option(name, *ref)->required();
  add_common(c_i, cc);

  auto* c_ii = con->add_subcommand("thm2-ii", "n parts of size m plus one of size mn - r");
  for (auto [name, ref] : {std::pair{"--m", &p_m}, {"--n", &p_n}, {"--r", &p_r}, {"--a", &p_a}, {"--b", &p_b}})
    c_ii->add_option(name, *ref)->required();
  add_common(c_ii, cc);

  auto* c_iii = con->add_subcommand("thm2-iii", "Three parts l < m < n < l + m");
  for (auto [name, ref] : {std::pair{"--l", &p_l}, {"--m", &p_m}, {"--n", &p_n}, {"--d", &p_d}}) c_iii->add_option(name, *ref)->required();
  add_common(c_iii, cc);

  auto* c_iv = con->add_subcommand("thm2-iv", "Odd-weight (skew) invariants");
  for (auto [name, ref] : {std::pair{"--s", &p_s}, {"--t", &p_t}, {"--u", &p_u}, {"--v", &p_v}}) c_iv->add_option(name, *ref)->required();
  add_common(c_iv, cc);

  auto* c_v = con->add_subcommand("thm2-v", "Border an E(N, d) input into E(2N - 1, Nd)");
  c_v->add_option("--matrix", p_matrix, "Input edge matrix JSON")->required();
  std::size_t v_trials = 4;
  c_v->add_option("--trials", v_trials, "Evaluation points for the input test")->capture_default_str();
  add_common(c_v, cc);

  Thm3Args t3;
  std::int64_t t3_d = 0;
  auto* c_3 = con->add_subcommand("thm3", "Independent semi-invariant family");
  c_3->add_option("--N", t3.n)->required();
  c_3->add_option("--shape", t3.shape, "Strictly increasing parts a_1 < ... < a_{s+1}")->required();
  c_3->add_option("--w", t3.w, "Weight")->required();
  auto* t3_dopt = c_3->add_option("--d", t3_d, "Degree (default: the constructed bound)");
  c_3->add_flag("--expand", t3.expand, "Expand, homogenize and rank the family (small N)");
  c_3->add_flag("--no-certify", t3.no_certify, "Skip the criterion checks");
  add_common(c_3, t3.c);

  auto* c_tup = con->add_subcommand("tuples", "beta, wp, varpi and the members of P(s, N)");
  c_tup->add_option("--N", p_n)->required();
  c_tup->add_option("--s", p_s, "Number of parts minus one (default: all s <= beta(N) - 1)");
  add_common(c_tup, cc);

  // dims
  auto* dims = app.add_subcommand("dims", "Dimension counts");
  dims->require_subcommand(1);
  Common dc;
  std::string d_w, d_rule;
  auto* d_table = dims->add_subcommand("table", "CSV of nu, semidim and the PP bound over a weight range");
  d_table->add_option("--N", p_n)->required();
  d_table->add_option("--w", d_w, "a:b:step or a single weight")->required();
  d_table->add_option("--d", d_rule, "Degree rule: w-71, w+3, w or a constant")->required();
  add_common(d_table, dc);
  auto* d_gauss = dims->add_subcommand("gauss", "Coefficients of (N+d choose d)_q");
  d_gauss->add_option("--N", p_n)->required();
  d_gauss->add_option("--d", p_d)->required();
  add_common(d_gauss, dc);
  std::int64_t d_wv = 0;
  auto* d_semi = dims->add_subcommand("semidim", "p_w(N, d) - p_{w-1}(N, d)");
  d_semi->add_option("--N", p_n)->required();
  d_semi->add_option("--w", d_wv)->required();
  d_semi->add_option("--d", p_d)->required();
  add_common(d_semi, dc);
  auto* d_pp = dims->add_subcommand("pp", "Ceiling lower bound PP(N, w, d)");
  d_pp->add_option("--N", p_n)->required();
  d_pp->add_option("--w", d_wv)->required();
  d_pp->add_option("--d", p_d)->required();
  add_common(d_pp, dc);

  // semiinv
  auto* semi = app.add_subcommand("semiinv", "Elementary-basis conversion and independence");
  semi->require_subcommand(1);
  Common sc;
  std::string s_poly;
  std::size_t s_n = 0;
  std::int64_t s_hdeg = 0;
  bool s_no_translation = false;
  std::vector<std::string> s_polys;
  auto* s_conv = semi->add_subcommand("convert", "Rewrite a symmetric polynomial in e_1..e_N");
  s_conv->add_option("--poly", s_poly, "Polynomial text file")->required();
  s_conv->add_option("--N", s_n)->required();
  auto* s_hopt = s_conv->add_option("--homogenize-degree", s_hdeg, "Emit the form in a_0..a_N of this degree");
  s_conv->add_flag("--skip-translation-check", s_no_translation, "Do not verify invariance under root shifts");
  add_common(s_conv, sc);
  bool s_exact = false;
  auto* s_rank = semi->add_subcommand("rank", "Linear rank of a list of polynomials");
  s_rank->add_option("--polys", s_polys, "Polynomial text files")->required();
  s_rank->add_flag("--exact", s_exact, "Skip the modular fast path");
  add_common(s_rank, sc);
  auto* s_jac = semi->add_subcommand("jacobian", "Jacobian rank at seeded points (algebraic independence)");
  s_jac->add_option("--polys", s_polys, "Polynomial text files")->required();
  add_common(s_jac, sc);

  // verify-paper
  VerifyOptions vo;
  std::string only;
  auto* ver = app.add_subcommand("verify-paper", "Reproduce the worked examples, one line per item");
  ver->add_option("--only", only, "Run one group")->check(CLI::IsMember(check_groups()));
  ver->add_option("--seed", vo.seed)->capture_default_str();
  ver->add_option("--threads", vo.threads)->check(CLI::Range(1u, 1024u))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*sym) return run_symmetrize(sa);
    if (*thm1) return run_check_thm1(ta);

    if (*con) {
      const auto kv = [&](std::initializer_list<std::pair<std::string, std::int64_t>> l) { return params_of(l); };
      if (*c_even) {
        const EdgeMatrix e = even_regular(p_n, p_d);
        json j = report("construct even", kv({{"N", p_n}, {"d", p_d}}));
        j["matrix"] = json::parse(matrix_json(e));
        emit(j.dump(2), cc.out);
      } else if (*c_bal) {
        const IntMatrix f = balanced_fill(p_m, p_n, parse_int_list(p_list));
        json j = report("construct balanced", kv({{"m", p_m}, {"n", p_n}}) + "b=" + p_list);
        j["rows"] = json::parse(int_matrix_json(f));
        emit(j.dump(2), cc.out);
      } else if (*c_i) {
        emit(construction_report("construct thm2-i", kv({{"m", p_m}, {"n", p_n}, {"a", p_a}, {"b", p_b}}),
                                 thm2_uniform(p_m, p_n, p_a, p_b)).dump(2), cc.out);
      } else if (*c_ii) {
        emit(construction_report("construct thm2-ii", kv({{"m", p_m}, {"n", p_n}, {"r", p_r}, {"a", p_a}, {"b", p_b}}),
                                 thm2_padded(p_m, p_n, p_r, p_a, p_b)).dump(2), cc.out);
      } else if (*c_iii) {
        const ThreePartBlocks k = y_membership(p_l, p_m, p_n, p_d);
        if (!k.integral) throw DomainError(k.reason);
        emit(construction_report("construct thm2-iii", kv({{"l", p_l}, {"m", p_m}, {"n", p_n}, {"d", p_d}}),
                                 thm2_three_part(p_l, p_m, p_n, p_d)).dump(2), cc.out);
      } else if (*c_iv) {
        emit(construction_report("construct thm2-iv", kv({{"s", p_s}, {"t", p_t}, {"u", p_u}, {"v", p_v}}),
                                 thm2_skew(p_s, p_t, p_u, p_v)).dump(2), cc.out);
      } else if (*c_v) {
        const std::string input = read_file(p_matrix);
        NonzeroTestOptions t;
        t.seed = cc.seed;
        t.trials = v_trials;
        t.symmetrize.threads = cc.threads;
        emit(construction_report("construct thm2-v", input, thm2_bordered(parse_matrix_json(input), t)).dump(2), cc.out);
      } else if (*c_3) {
        if (*t3_dopt) t3.d = t3_d;
        return run_thm3(t3);
      } else if (*c_tup) {
        json j = report("construct tuples", kv({{"N", p_n}, {"s", p_s}}));
        j["beta"] = beta(p_n);
        json rows = json::array();
        const std::int64_t lo = p_s > 0 ? p_s : 1, hi = p_s > 0 ? p_s : beta(p_n) - 1;
        for (std::int64_t s = lo; s <= hi; ++s) {
          json members = json::array();
          for (const auto& a : enumerate_P(s, p_n)) members.push_back(a);
          rows.push_back({{"s", s}, {"wp", wp(s, p_n)}, {"varpi", varpi(s, p_n)}, {"P", members}});
        }
        j["tuples"] = rows;
        emit(j.dump(2), cc.out);
      }
      return 0;
    }

    if (*dims) {
      if (*d_table) {
        const auto weights = parse_weight_range(d_w);
        const DegreeRule rule = DegreeRule::parse(d_rule);
        std::ostringstream os;
        write_table_csv(os, dims_table(p_n, weights, rule, dc.threads));
        emit(os.str(), dc.out);
      } else if (*d_gauss) {
        json j = report("dims gauss", params_of({{"N", p_n}, {"d", p_d}}));
        json coeffs = json::array();
        for (const auto& c : gaussian_binomial(p_n, p_d)) coeffs.push_back(c.get_str());
        j["coefficients"] = coeffs;
        emit(j.dump(2), dc.out);
      } else if (*d_semi) {
        json j = report("dims semidim", params_of({{"N", p_n}, {"w", d_wv}, {"d", p_d}}));
        j["semidim"] = semidim(d_wv, p_d, p_n).get_str();
        emit(j.dump(2), dc.out);
      } else if (*d_pp) {
        json j = report("dims pp", params_of({{"N", p_n}, {"w", d_wv}, {"d", p_d}}));
        j["pp"] = pp_json(pp_bound(p_n, d_wv, p_d));
        emit(j.dump(2), dc.out);
      }
      return 0;
    }

    if (*semi) {
      if (*s_conv) return run_convert(s_poly, s_n, *s_hopt ? std::optional(s_hdeg) : std::nullopt, s_no_translation, sc.out);
      const auto polys = read_polys(s_polys);
      if (*s_rank) {
        const RankResult r = rank(polys, sc.seed, !s_exact);
        json j = report("semiinv rank", concat_inputs(s_polys));
        j["count"] = polys.size();
        j["rank"] = r.rank;
        j["method"] = r.method;
        j["seed"] = sc.seed;
        emit(j.dump(2), sc.out);
      } else {
        const JacobianSearch js = jacobian_rank_seeded(polys, sc.seed);
        json j = report("semiinv jacobian", concat_inputs(s_polys));
        j["count"] = polys.size();
        j["rank"] = js.rank;
        json pt = json::array();
        for (const auto& x : js.point) pt.push_back(x.get_str());
        j["point"] = pt;
        j["attempts"] = js.attempts;
        j["seed"] = sc.seed;
        emit(j.dump(2), sc.out);
      }
      return 0;
    }

    if (*ver) {
      bool all = true;
      for (const CheckItem& c : run_checks(only, vo)) {
        all = all && c.passed;
        std::printf("%s %-16s %-34s %s (%.2fs)\n", c.passed ? "PASS" : "FAIL", c.group.c_str(), c.id.c_str(),
                    c.detail.c_str(), c.seconds);
        std::fflush(stdout);
      }
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
