// One PASS/FAIL line per acceptance criterion. `--criterion N` runs a single one.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "extline/ext_poincare.hpp"
#include "extline/gamma.hpp"
#include "extline/quiver_modules.hpp"
#include "extline/yoneda.hpp"

using namespace extline;

namespace {

struct Verdict {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    if (pass) summary = why;
    pass = false;
  }
};

const std::uint64_t kSeed = 1;

Verdict poincare_vs_syzygies() {
  Verdict v;
  int compared = 0;
  for (int n = 1; n <= 8; ++n) {
    const LineAlgebra alg(n, FieldSpec(2));
    for (int i = 1; i <= n; ++i) {
      QuiverRep m = simple_module(alg, i);
      for (int k = 0; k <= 4 * n; ++k) {
        const SimpleMultiset top = head(m);
        for (int j = 1; j <= n; ++j) {
          const auto series = poincare_series(n, i, j, 4 * n);
          ++compared;
          if (series[static_cast<std::size_t>(k)] != static_cast<std::int64_t>(top[static_cast<std::size_t>(j - 1)]))
            v.fail("N=" + std::to_string(n) + " (" + std::to_string(i) + "," + std::to_string(j) + ") k=" + std::to_string(k));
        }
        m = syzygy(alg, m);
      }
    }
  }
  if (v.pass) v.summary = std::to_string(compared) + " coefficients equal the brute-force multiplicities";
  return v;
}

Verdict syzygy_formula() {
  Verdict v;
  int labels = 0;
  for (int n = 1; n <= 6; ++n) {
    const LineAlgebra alg(n, FieldSpec(2));
    for (const XLabel& x : canonical_labels(n)) {
      ++labels;
      const QuiverRep omega = syzygy(alg, realize_x(alg, x));
      const QuiverRep expected = realize_x(alg, syzygy_label(n, x));
      const IsoResult iso = find_isomorphism(omega, expected, kSeed);
      if (iso.verdict != IsoVerdict::Isomorphic || !iso.witness || !iso.witness->is_intertwiner(omega, expected) ||
          !iso.witness->is_invertible())
        v.fail("N=" + std::to_string(n) + " " + x.to_string() + ": " + iso.reason);
    }
  }
  if (v.pass) v.summary = std::to_string(labels) + " labels, each with an invertible intertwiner";
  return v;
}

Verdict periodicity() {
  Verdict v;
  for (int n = 1; n <= 6; ++n) {
    const LineAlgebra alg(n, FieldSpec(2));
    for (int i = 1; i <= n; ++i) {
      const QuiverRep s = simple_module(alg, i);
      const QuiverRep half = syzygy_power(alg, s, n);
      const QuiverRep full = syzygy_power(alg, half, n);
      if (!is_isomorphic(half, simple_module(alg, n + 1 - i), kSeed))
        v.fail("Omega^N(S_" + std::to_string(i) + ") at N=" + std::to_string(n));
      if (!is_isomorphic(full, s, kSeed)) v.fail("Omega^2N(S_" + std::to_string(i) + ") at N=" + std::to_string(n));
    }
  }
  if (v.pass) v.summary = "Omega^N(S_i) = S_{N+1-i} and Omega^2N(S_i) = S_i for N <= 6";
  return v;
}

Verdict closed_form_resolution() {
  Verdict v;
  std::size_t checks = 0;
  for (int n = 1; n <= 5; ++n) {
    const LineAlgebra alg(n, FieldSpec(2));
    for (int i = 1; i <= n; ++i) {
      const PeriodicComplex r = build_resolution(alg, i, 4 * n);
      const ResolutionReport rep = verify_resolution(alg, r, 4 * n, kSeed);
      checks += rep.checks.size();
      if (const ResolutionCheck* bad = rep.first_failure())
        v.fail("N=" + std::to_string(n) + " R_" + std::to_string(i) + " " + bad->name + " degree " + std::to_string(bad->degree));
    }
  }
  if (v.pass) v.summary = std::to_string(checks) + " degreewise checks";
  return v;
}

Verdict chain_relations() {
  Verdict v;
  int certified = 0;
  for (std::uint32_t p : {2u, 0u}) {
    for (int n = 2; n <= 5; ++n) {
      const LineAlgebra alg(n, FieldSpec(p));
      const ResolutionSet rs(alg);
      const std::string where = "char " + std::to_string(p) + " N=" + std::to_string(n) + " ";
      for (const RelationCheck& c : verify_lemma_relations(rs))
        if (!c.passed) v.fail(where + c.name + ": " + c.detail);
      // independent re-check through the relator list of the quotient algebra
      const RelatorSet rels{QuiverQ(n)};
      for (const Relator& r : rels.relators()) {
        const ChainMap f = evaluate_relator(rs, r);
        if (!f.is_chain_map(alg)) v.fail(where + r.name + " is not a chain map");
        if (r.family == "c" || r.family == "d") {
          if (!f.is_zero()) v.fail(where + r.name + " is not zero in every degree");
          ++certified;
          continue;
        }
        const NullHomotopyResult h = null_homotopy(alg, f);
        const int horizon = f.periodic_start() + 2 * f.components().period() + f.shift();
        if (!h.null_homotopic() || !h.homotopy->witnesses(alg, f, horizon) ||
            h.homotopy->components.period() != 2 * n)
          v.fail(where + r.name + " has no periodic homotopy certificate");
        else
          ++certified;
      }
    }
  }
  if (v.pass) v.summary = std::to_string(certified) + " relator instances certified (strict for (c),(d), homotopy for (a),(b))";
  return v;
}

Verdict main_theorem() {
  Verdict v;
  std::size_t checks = 0;
  for (std::uint32_t p : {2u, 0u}) {
    for (int n = 1; n <= 5; ++n) {
      const int K = n <= 4 ? 2 * n + 2 : 2 * n;
      const LineAlgebra alg(n, FieldSpec(p));
      const ResolutionSet rs(alg);
      const MainTheoremReport rep = verify_main_theorem(rs, K);
      checks += rep.checks.size();
      for (const GammaCheck& c : rep.checks)
        if (!c.passed)
          v.fail("char " + std::to_string(p) + " N=" + std::to_string(n) + " " + c.kind + " (" + std::to_string(c.i) + "," +
                 std::to_string(c.j) + "," + std::to_string(c.k) + ") " + c.detail);
    }
  }
  if (v.pass) v.summary = std::to_string(checks) + " dimension, relator and normal-form checks";
  return v;
}

Verdict structural_constants() {
  Verdict v;
  for (int n = 1; n <= 8; ++n) {
    const LineAlgebra alg(n, FieldSpec(2));
    std::size_t dim = 0;
    for (int i = 1; i <= n; ++i) dim += alg.projective(i).total_dim();
    if (dim != static_cast<std::size_t>(4 * n - 2) || alg.basis_count() != 4 * n - 2)
      v.fail("dim A at N=" + std::to_string(n) + " is " + std::to_string(dim));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const int d = std::abs(i - j);
        const std::size_t expected = d == 0 ? 2 : d == 1 ? 1 : 0;
        if (hom_space(alg.projective(i), alg.projective(j)).size() != expected)
          v.fail("dim Hom(P_" + std::to_string(i) + ",P_" + std::to_string(j) + ") at N=" + std::to_string(n));
      }
    const ExtTable t = ext_table(n, 4 * n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 0; k <= 4 * n; ++k) {
          const int e = t.at(i, j, k);
          if (e != 0 && e != 1) v.fail("Ext dimension " + std::to_string(e));
          if (e != t.at(j, i, k)) v.fail("asymmetric at N=" + std::to_string(n));
          if (k + 2 * n <= 4 * n && e != t.at(i, j, k + 2 * n)) v.fail("not 2N-periodic at N=" + std::to_string(n));
        }
  }
  if (v.pass) v.summary = "dim A = 4N-2, Hom(P_i,P_j) dims 2/1/0, Ext in {0,1}, symmetric, 2N-periodic for N <= 8";
  return v;
}

Verdict negative_controls() {
  Verdict v;
  // (a) negate a loop entry d: P_m -> P_m of R_i and ask the d o d check to notice
  int tried = 0, caught = 0, caught_by_x = 0;
  for (std::uint32_t p : {0u, 3u}) {
    for (int n = 1; n <= 5; ++n) {
      const LineAlgebra alg(n, FieldSpec(p));
      const ResolutionSet rs(alg);
      for (int i = 1; i <= n; ++i) {
        const PeriodicComplex& clean = *rs.at(i);
        for (int k = 1; k <= 2 * n; ++k) {
          const HomMatrix& d = clean.differential(k);
          if (d.rows() != 1 || d.cols() != 1 || d.row_labels() != d.col_labels()) continue;
          ++tried;
          auto bad = std::make_shared<const PeriodicComplex>(build_resolution(alg, i, 4 * n, {k, std::nullopt}));
          bool dd_broken = false;
          for (int m = 1; m < 4 * n; ++m) dd_broken = dd_broken || !compose(alg, bad->differential(m), bad->differential(m + 1)).is_zero();
          caught += dd_broken;
          if (i < n) {
            const ChainMap x = generator_x(rs, i);
            const ChainMap moved(bad, x.target_ptr(), x.shift(), x.components());
            caught_by_x += moved.equation_failure(alg, moved.check_horizon()).has_value();
          }
        }
      }
    }
  }
  v.notes.push_back("8a: " + std::to_string(caught) + " of " + std::to_string(tried) +
                    " loop-sign corruptions break d o d = 0 (chars 0 and 3, N <= 5)");
  v.notes.push_back("8a: the same corruptions break the chain-map equation of x_i in " + std::to_string(caught_by_x) + " cases");
  if (caught != tried)
    v.fail("8a: negating the loop entry of d leaves d o d = 0 (" + std::to_string(tried - caught) + " of " +
           std::to_string(tried) + " undetected)");

  int fstar_tried = 0, fstar_caught = 0;
  for (int n = 2; n <= 5; ++n) {
    const LineAlgebra alg(n, FieldSpec(0));
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= 2 * n; ++k) {
        const PeriodicComplex clean = build_resolution(alg, i, 4 * n);
        // negating a lone entry only rescales a summand, so ask for f* next to another entry
        bool has_fstar = false;
        int entries = 0;
        const HomMatrix& d = clean.differential(k);
        for (std::size_t r = 0; r < d.rows(); ++r)
          for (std::size_t c = 0; c < d.cols(); ++c) {
            has_fstar = has_fstar || d.row_labels()[r] + 1 == d.col_labels()[c];
            entries += !d.at(r, c).is_zero();
          }
        if (!has_fstar || entries < 2) continue;
        ++fstar_tried;
        const PeriodicComplex bad = build_resolution(alg, i, 4 * n, {std::nullopt, k});
        fstar_caught += !verify_resolution(alg, bad, 4 * n, kSeed).ok();
      }
  }
  v.notes.push_back("8a supplement: " + std::to_string(fstar_caught) + " of " + std::to_string(fstar_tried) +
                    " f*-sign corruptions rejected by verify_resolution in char 0");

  // (b) drop relator family (a) at N = 2, K = 4
  const QuiverQ q(2);
  const GradedDims full = graded_dimension(RelatorSet(q), 4);
  const GradedDims dropped = graded_dimension(RelatorSet(q).without_family("a"), 4);
  bool larger = false, smaller = false;
  std::string where;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 0; k <= 4; ++k) {
        if (dropped.at(i, j, k) > full.at(i, j, k) && !larger)
          where = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
        larger = larger || dropped.at(i, j, k) > full.at(i, j, k);
        smaller = smaller || dropped.at(i, j, k) < full.at(i, j, k);
      }
  v.notes.push_back("8b: dropping relator (a) " + (larger ? "enlarges Gamma first at " + where : std::string("changes nothing")));
  if (!larger || smaller) v.fail("8b: dropping relator (a) did not strictly enlarge Gamma");
  if (v.pass) v.summary = "both corruptions detected";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  bool verbose = false;
  app.add_option("--criterion", only, "run a single criterion (1-8)")->check(CLI::Range(1, 8));
  app.add_flag("--verbose", verbose, "print notes");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"Poincare series vs brute-force resolution, N <= 8", poincare_vs_syzygies},
      {"syzygy formula with explicit intertwiners, N <= 6", syzygy_formula},
      {"periodicity of syzygies of simples, N <= 6", periodicity},
      {"closed-form resolution, N <= 5, depth 4N", closed_form_resolution},
      {"chain-level relations (a)-(d), N = 2..5, chars 2 and 0", chain_relations},
      {"Gamma vs Ext: dimensions, relators, normal forms", main_theorem},
      {"structural constants, N <= 8", structural_constants},
      {"negative controls", negative_controls},
  };
  bool all_pass = true;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    if (only != 0 && static_cast<int>(c + 1) != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[c].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all_pass = all_pass && v.pass;
    std::ostringstream line;
    line << "criterion " << c + 1 << " " << (v.pass ? "PASS" : "FAIL") << "  " << criteria[c].first << ": " << v.summary
         << " [" << std::fixed << std::setprecision(2) << secs << "s]";
    std::cout << line.str() << "\n";
    if (verbose || !v.pass || only != 0)
      for (const auto& note : v.notes) std::cout << "  " << note << "\n";
  }
  return all_pass ? 0 : 1;
}
