#include "extline/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "extline/ext_poincare.hpp"
#include "extline/gamma.hpp"
#include "extline/quiver_modules.hpp"
#include "extline/yoneda.hpp"

namespace extline::cli {

using nlohmann::json;

namespace {

std::string key(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

json skeleton(const RunConfig& c) {
  return {{"n", c.n}, {"characteristic", c.characteristic}, {"max_degree", c.max_degree},
          {"data", json::object()}, {"checks", json::array()}};
}

void add_check(json& doc, const std::string& name, bool ok, const std::string& detail = "") {
  doc["checks"].push_back({{"name", name}, {"status", ok ? "PASS" : "FAIL"}, {"detail", detail}});
}

void check_vertex(const RunConfig& c, int v, const std::string& flag) {
  if (v < 1 || v > c.n) throw UsageError(flag + " must lie in 1.." + std::to_string(c.n) + ", got " + std::to_string(v));
}

LineAlgebra algebra(const RunConfig& c) { return LineAlgebra(c.n, FieldSpec(c.characteristic)); }

void syzygy_suite(const RunConfig& c, json& doc) {
  const LineAlgebra alg = algebra(c);
  for (const XLabel& x : canonical_labels(c.n)) {
    const XLabel target = syzygy_label(c.n, x);
    const QuiverRep omega = syzygy(alg, realize_x(alg, x));
    const QuiverRep expected = realize_x(alg, target);
    const IsoResult iso = find_isomorphism(omega, expected, c.seed);
    const bool ok = iso.verdict == IsoVerdict::Isomorphic && iso.witness && iso.witness->is_intertwiner(omega, expected) &&
                    iso.witness->is_invertible();
    add_check(doc, "syzygy " + x.to_string() + " -> " + target.to_string(), ok, ok ? "" : iso.reason);
  }
  for (int i = 1; i <= c.n; ++i) {
    const QuiverRep s = simple_module(alg, i);
    const bool half = is_isomorphic(syzygy_power(alg, s, c.n), simple_module(alg, c.n + 1 - i), c.seed);
    add_check(doc, "Omega^N(S_" + std::to_string(i) + ") = S_" + std::to_string(c.n + 1 - i), half);
    const bool full = is_isomorphic(syzygy_power(alg, s, 2 * c.n), s, c.seed);
    add_check(doc, "Omega^2N(S_" + std::to_string(i) + ") = S_" + std::to_string(i), full);
  }
}

void report_resolution(json& doc, int i, const ResolutionReport& rep) {
  std::vector<std::string> order;
  std::map<std::string, std::string> first_bad;
  for (const auto& chk : rep.checks) {
    if (std::find(order.begin(), order.end(), chk.name) == order.end()) order.push_back(chk.name);
    if (!chk.passed && !first_bad.count(chk.name))
      first_bad[chk.name] = "degree " + std::to_string(chk.degree) + (chk.detail.empty() ? "" : ": " + chk.detail);
  }
  for (const auto& name : order) {
    const auto bad = first_bad.find(name);
    add_check(doc, "R_" + std::to_string(i) + " " + name, bad == first_bad.end(), bad == first_bad.end() ? "" : bad->second);
  }
}

void resolution_suite(const RunConfig& c, json& doc) {
  const LineAlgebra alg = algebra(c);
  for (int i = 1; i <= c.n; ++i) {
    const PeriodicComplex r = build_resolution(alg, i, c.max_degree);
    report_resolution(doc, i, verify_resolution(alg, r, c.max_degree, c.seed));
  }
}

void relations_suite(const RunConfig& c, json& doc) {
  const LineAlgebra alg = algebra(c);
  const ResolutionSet rs(alg);
  for (const RelationCheck& r : verify_lemma_relations(rs))
    add_check(doc, "(" + r.family + ") " + r.name, r.passed, r.detail);
}

void gamma_suite(const RunConfig& c, json& doc) {
  const LineAlgebra alg = algebra(c);
  const ResolutionSet rs(alg);
  const MainTheoremReport rep = verify_main_theorem(rs, c.max_degree);
  for (const GammaCheck& g : rep.checks) {
    std::string name = g.kind + " (" + key(g.i, g.j) + "," + std::to_string(g.k) + ")";
    if (g.kind != "dimension") name += " " + g.name;
    add_check(doc, name, g.passed, g.detail);
  }
  const GradedDims dims = graded_dimension(RelatorSet(QuiverQ(c.n)), c.max_degree, alg.field());
  for (int i = 1; i <= c.n; ++i)
    for (int j = 1; j <= c.n; ++j) doc["data"][key(i, j)] = dims.row(i, j);
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

bool is_int_row(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number_integer(); });
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '_': out += "\\_"; break;
      case '^': out += "\\^{}"; break;
      case '&': out += "\\&"; break;
      case '%': out += "\\%"; break;
      case '#': out += "\\#"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '*': out += "$^*$"; break;
      default: out += ch;
    }
  }
  return out;
}

bool is_standard_key(const std::string& k) {
  return k == "n" || k == "characteristic" || k == "max_degree" || k == "data" || k == "checks";
}

std::string render_table(const json& doc) {
  std::ostringstream os;
  os << "N = " << doc["n"].get<int>() << ", characteristic " << doc["characteristic"].get<int>() << ", max degree "
     << doc["max_degree"].get<int>() << "\n";
  const json& data = doc["data"];
  std::size_t width = 1, label = 5;
  std::size_t columns = 0;
  for (const auto& [k, v] : data.items()) {
    if (!is_int_row(v)) continue;
    label = std::max(label, k.size());
    columns = std::max(columns, v.size());
    for (const auto& e : v) width = std::max(width, std::to_string(e.get<long long>()).size());
  }
  if (columns > 0) {
    width = std::max(width, std::to_string(columns - 1).size());
    os << pad("(i,j)", label);
    for (std::size_t k = 0; k < columns; ++k) os << "  " << std::setw(static_cast<int>(width)) << k;
    os << "\n";
    for (const auto& [k, v] : data.items()) {
      if (!is_int_row(v)) continue;
      os << pad(k, label);
      for (const auto& e : v) os << "  " << std::setw(static_cast<int>(width)) << e.get<long long>();
      os << "\n";
    }
  }
  for (const auto& [k, v] : doc.items())
    if (!is_standard_key(k)) os << k << ": " << v.dump() << "\n";
  for (const auto& chk : doc["checks"]) {
    os << chk["status"].get<std::string>() << "  " << chk["name"].get<std::string>();
    const std::string detail = chk["detail"].get<std::string>();
    if (!detail.empty()) os << "  (" << detail << ")";
    os << "\n";
  }
  return os.str();
}

std::string render_latex(const json& doc) {
  std::ostringstream os;
  const json& data = doc["data"];
  std::size_t columns = 0;
  for (const auto& [k, v] : data.items())
    if (is_int_row(v)) columns = std::max(columns, v.size());
  if (columns > 0) {
    os << "\\begin{tabular}{c|" << std::string(columns, 'c') << "}\n$(i,j)$";
    for (std::size_t k = 0; k < columns; ++k) os << " & " << k;
    os << " \\\\\n\\hline\n";
    for (const auto& [k, v] : data.items()) {
      if (!is_int_row(v)) continue;
      os << "$(" << k << ")$";
      for (const auto& e : v) os << " & " << e.get<long long>();
      os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
  }
  if (!doc["checks"].empty()) {
    os << "\\begin{tabular}{ll}\n";
    for (const auto& chk : doc["checks"])
      os << latex_escape(chk["name"].get<std::string>()) << " & " << chk["status"].get<std::string>() << " \\\\\n";
    os << "\\end{tabular}\n";
  }
  return os.str();
}

}  // namespace

RunConfig validated(RunConfig c) {
  if (c.n < 1) throw UsageError("--n must be at least 1, got " + std::to_string(c.n));
  if (!FieldSpec::valid_characteristic(c.characteristic))
    throw UsageError("--char must be 0 or a prime, got " + std::to_string(c.characteristic));
  if (c.max_degree == -1) c.max_degree = 4 * c.n;
  if (c.max_degree < 0) throw UsageError("--max-deg must be non-negative, got " + std::to_string(c.max_degree));
  return c;
}

json cmd_ext_table(const RunConfig& c) {
  json doc = skeleton(c);
  const ExtTable t = ext_table(c.n, c.max_degree);
  for (int i = 1; i <= c.n; ++i)
    for (int j = 1; j <= c.n; ++j) doc["data"][key(i, j)] = t.row(i, j);
  for (const auto& route : t.routes) add_check(doc, "route " + route, true);
  bool symmetric = true, periodic = true;
  for (int i = 1; i <= c.n; ++i)
    for (int j = 1; j <= c.n; ++j)
      for (int k = 0; k <= c.max_degree; ++k) {
        symmetric = symmetric && t.at(i, j, k) == t.at(j, i, k);
        if (k + 2 * c.n <= c.max_degree) periodic = periodic && t.at(i, j, k) == t.at(i, j, k + 2 * c.n);
      }
  add_check(doc, "symmetric in (i,j)", symmetric);
  add_check(doc, "periodic with period 2N", periodic);
  return doc;
}

json cmd_poincare(const RunConfig& c, std::optional<int> i, std::optional<int> j) {
  if (i) check_vertex(c, *i, "--i");
  if (j) check_vertex(c, *j, "--j");
  json doc = skeleton(c);
  doc["denominator"] = poincare_denominator(c.n).to_string();
  doc["numerators"] = json::object();
  bool agree = true;
  for (int a = 1; a <= c.n; ++a)
    for (int b = 1; b <= c.n; ++b) {
      if ((i && a != *i) || (j && b != *j)) continue;
      const auto coeffs = poincare_series(c.n, a, b, c.max_degree);
      doc["data"][key(a, b)] = coeffs;
      doc["numerators"][key(a, b)] = poincare_numerator(c.n, a, b).to_string();
      for (int k = 0; k <= c.max_degree; ++k) agree = agree && coeffs[static_cast<std::size_t>(k)] == ext_dim_via_x(c.n, a, b, k);
    }
  add_check(doc, "coefficients match syzygy heads", agree);
  return doc;
}

json cmd_resolve(const RunConfig& c, int i, std::optional<int> corrupt_loop_sign, std::optional<int> corrupt_sign) {
  check_vertex(c, i, "--i");
  const LineAlgebra alg = algebra(c);
  ResolutionCorruption corrupt{corrupt_loop_sign, corrupt_sign};
  const int depth = std::max(c.max_degree, 1);
  PeriodicComplex r = [&] {
    try {
      return build_resolution(alg, i, depth, corrupt);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--corrupt-loop-sign: ") + e.what());
    }
  }();
  json doc = skeleton(c);
  json terms = json::array();
  for (int k = 0; k <= c.max_degree; ++k) {
    std::string s;
    for (int v : r.term(k).indices()) s += (s.empty() ? "P" : "+P") + std::to_string(v);
    terms.push_back(s);
  }
  doc["terms"] = terms;
  doc["period"] = r.period();
  for (int j = 1; j <= c.n; ++j) {
    std::vector<int> mult;
    for (int k = 0; k <= c.max_degree; ++k) mult.push_back(ext_dim_via_resolution(r, j, k));
    doc["data"][key(i, j)] = mult;
  }
  report_resolution(doc, i, verify_resolution(alg, r, depth, c.seed));
  return doc;
}

json cmd_verify(const RunConfig& c, const std::string& suite) {
  json doc = skeleton(c);
  doc["suite"] = suite;
  const bool all = suite == "all";
  if (all || suite == "syzygy") syzygy_suite(c, doc);
  if (all || suite == "resolution") resolution_suite(c, doc);
  if (all || suite == "relations") relations_suite(c, doc);
  if (all || suite == "gamma") gamma_suite(c, doc);
  if (!all && suite != "syzygy" && suite != "resolution" && suite != "relations" && suite != "gamma")
    throw UsageError("--suite must be one of syzygy, resolution, relations, gamma, all; got " + suite);
  return doc;
}

json cmd_gamma_dims(const RunConfig& c, const std::optional<std::string>& drop_family) {
  RelatorSet rels{QuiverQ(c.n)};
  if (drop_family) {
    if (*drop_family != "a" && *drop_family != "b" && *drop_family != "c" && *drop_family != "d")
      throw UsageError("--drop-relator must be one of a, b, c, d; got " + *drop_family);
    rels = rels.without_family(*drop_family);
  }
  json doc = skeleton(c);
  const GradedDims dims = graded_dimension(rels, c.max_degree, FieldSpec(c.characteristic));
  const ExtTable t = ext_table(c.n, c.max_degree);
  std::string mismatch;
  for (int i = 1; i <= c.n; ++i)
    for (int j = 1; j <= c.n; ++j) {
      doc["data"][key(i, j)] = dims.row(i, j);
      if (mismatch.empty() && dims.row(i, j) != t.row(i, j)) mismatch = "first difference at (" + key(i, j) + ")";
    }
  if (drop_family) doc["dropped"] = *drop_family;
  add_check(doc, "graded dimensions equal the Ext table", mismatch.empty(), mismatch);
  return doc;
}

json cmd_yoneda_product(const RunConfig& c, const std::string& first, const std::string& second) {
  const QuiverQ q(c.n);
  auto parse = [&](const std::string& text, const std::string& flag) {
    try {
      return PathWord::parse(q, text);
    } catch (const std::exception& e) {
      throw UsageError(flag + ": " + e.what());
    }
  };
  const PathWord u = parse(first, "--first"), v = parse(second, "--second");
  if (u.target() != v.source())
    throw UsageError("--second must start where --first ends (vertex " + std::to_string(u.target()) + ")");
  const PathWord w = u.then(v);

  const LineAlgebra alg = algebra(c);
  const ResolutionSet rs(alg);
  const WordEvaluation ev = evaluate_word(rs, w);
  json doc = skeleton(c);
  json product = {{"word", w.to_string()}, {"source", w.source()}, {"target", w.target()}, {"degree", w.degree()}};
  switch (ev.verdict.verdict) {
    case HomotopyVerdict::NullHomotopic: product["class"] = "zero"; break;
    case HomotopyVerdict::NotNullHomotopic: product["class"] = "nonzero"; break;
    case HomotopyVerdict::Undetermined: product["class"] = "undetermined"; break;
  }
  const auto nf = normal_form_monomial(c.n, w.source(), w.target(), w.degree());
  product["normal_form"] = nf ? json(nf->to_string()) : json(nullptr);
  product["multiple_of_normal_form"] = nullptr;
  if (nf) {
    const WordEvaluation base = evaluate_word(rs, *nf);
    if (auto s = proportionality(alg, ev.value.representative, base.value.representative))
      product["multiple_of_normal_form"] = s->to_string();
  }
  doc["product"] = product;

  const bool decided = ev.verdict.verdict != HomotopyVerdict::Undetermined;
  add_check(doc, "product is a chain map", ev.value.representative.is_chain_map(alg));
  add_check(doc, "class decided", decided, ev.verdict.detail);
  const bool nonzero = ev.verdict.verdict == HomotopyVerdict::NotNullHomotopic;
  add_check(doc, "nonzero only where Ext is nonzero", !nonzero || nf.has_value());
  const GammaQuotient g(RelatorSet(q), w.degree(), FieldSpec(c.characteristic));
  add_check(doc, "agrees with the quotient algebra", !decided || g.is_zero(w) != nonzero,
            g.is_zero(w) ? "zero in the quotient" : "nonzero in the quotient");
  return doc;
}

int exit_code(const json& doc) {
  for (const auto& chk : doc["checks"])
    if (chk["status"] != "PASS") return kVerificationFailure;
  return kPass;
}

std::string render(const json& doc, Format format) {
  switch (format) {
    case Format::Json: return doc.dump(2) + "\n";
    case Format::Table: return render_table(doc);
    case Format::Latex: break;
  }
  return render_latex(doc);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ext-algebra of the Brauer line algebra"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json";
  std::optional<int> i, j, corrupt_loop, corrupt_fstar;
  std::optional<std::string> drop;
  std::string suite = "all", first, second;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of vertices N")->required();
    sub->add_option("--char", cfg.characteristic, "characteristic of the ground field (0 or a prime)");
    sub->add_option("--max-deg", cfg.max_degree, "largest degree K (default 4N)");
    sub->add_option("--seed", cfg.seed, "seed for the isomorphism search");
    sub->add_option("--format", format, "json, table or latex")->check(CLI::IsMember({"json", "table", "latex"}));
    sub->add_option("--out", cfg.out, "write to this file instead of stdout");
  };
  auto* ext = app.add_subcommand("ext-table", "dim Ext^k(S_i, S_j) for all i, j and k <= K");
  common(ext);
  auto* poi = app.add_subcommand("poincare", "numerator, denominator and coefficients of the Poincare series");
  common(poi);
  poi->add_option("--i", i);
  poi->add_option("--j", j);
  auto* res = app.add_subcommand("resolve", "the minimal projective resolution of S_i and its checks");
  common(res);
  res->add_option("--i", i)->required();
  res->add_option("--corrupt-sign", corrupt_fstar, "negate the f* entries of d_K (negative control)");
  res->add_option("--corrupt-loop-sign", corrupt_loop, "negate the loop entry of d_K (negative control)");
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  common(ver);
  ver->add_option("--suite", suite)->check(CLI::IsMember({"syzygy", "resolution", "relations", "gamma", "all"}));
  auto* gam = app.add_subcommand("gamma-dims", "graded dimensions of the quotient path algebra");
  common(gam);
  gam->add_option("--drop-relator", drop, "leave out one relator family (a, b, c or d)");
  auto* yon = app.add_subcommand("yoneda-product", "Yoneda product of two words, first then second");
  common(yon);
  yon->add_option("--first", first)->required();
  yon->add_option("--second", second)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    cfg.format = format == "table" ? Format::Table : format == "latex" ? Format::Latex : Format::Json;
    const RunConfig rc = validated(cfg);
    json doc;
    if (*ext) doc = cmd_ext_table(rc);
    else if (*poi) doc = cmd_poincare(rc, i, j);
    else if (*res) doc = cmd_resolve(rc, *i, corrupt_loop, corrupt_fstar);
    else if (*ver) doc = cmd_verify(rc, suite);
    else if (*gam) doc = cmd_gamma_dims(rc, drop);
    else doc = cmd_yoneda_product(rc, first, second);

    const std::string text = render(doc, rc.format);
    if (rc.out) {
      std::ofstream f(*rc.out, std::ios::binary);
      if (!f) throw UsageError("--out: cannot open " + *rc.out);
      f << text;
    } else {
      out << text;
    }
    return exit_code(doc);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

}  // namespace extline::cli
