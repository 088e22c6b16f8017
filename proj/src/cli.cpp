#include "hst/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "hst/error.hpp"
#include "hst/facets.hpp"
#include "hst/harness.hpp"

namespace hst {
namespace {

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  unsigned threads = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

// Write to --out when given, otherwise to stdout.
void emit(const GlobalOpts& g, const std::string& text, std::ostream& fallback) {
  if (g.out.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw Error("cannot open " + g.out + " for writing");
  f << text;
}

RandomModel parse_model(const std::string& s) {
  if (s == "cube") return RandomModel::UnitCube;
  if (s == "sphere") return RandomModel::Sphere;
  throw InvalidArgument("unknown random model '" + s + "'");
}

std::string stats_json(const HstTree& tree) {
  const TreeStats st = stats(tree);
  std::ostringstream out;
  out << "{\"n\": " << st.n << ", \"d\": " << tree.d
      << ", \"height\": " << st.height
      << ", \"mean_depth\": " << decimal_string(st.mean_depth)
      << ", \"root_left\": " << st.root_split.first
      << ", \"root_right\": " << st.root_split.second
      << ", \"seed\": " << tree.seed << "}\n";
  return out.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"random hyperplane search trees: builders, census, bounds, experiments"};
  app.fallthrough();  // global options may follow the subcommand
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "base random seed");
  app.add_option("--out", g.out, "output file (default: stdout)");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", g.threads, "worker threads for experiments");
  app.add_option("--budget", g.budget, "enumeration budget (subset count)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a point set file");
  std::string gen_source = "moment";
  std::size_t gen_n = 0;
  int gen_d = 1;
  unsigned gen_precision = 64;
  gen->add_option("--source", gen_source, "moment | cube | sphere")
      ->check(CLI::IsMember({"moment", "cube", "sphere"}));
  gen->add_option("--n", gen_n, "point count")->required();
  gen->add_option("--d", gen_d, "dimension")->required();
  gen->add_option("--precision", gen_precision, "dyadic precision bits");

  // build
  auto* build = app.add_subcommand("build", "build one tree and report stats");
  std::string build_in, build_mode = "geometric", build_tree_out;
  std::size_t build_n = 0;
  int build_d = 0;
  bool build_moment = false;
  build->add_option("--in", build_in, "points file");
  build->add_flag("--moment", build_moment, "use the moment curve source");
  build->add_option("--n", build_n, "moment source size");
  build->add_option("--d", build_d, "moment source dimension");
  build->add_option("--mode", build_mode, "geometric | combinatorial")
      ->check(CLI::IsMember({"geometric", "combinatorial"}));
  build->add_option("--tree-out", build_tree_out, "serialized tree output path");

  // census
  auto* cen = app.add_subcommand("census", "exact oriented split census");
  std::string cen_in;
  std::size_t cen_n = 0;
  int cen_d = 0;
  bool cen_moment = false;
  cen->add_option("--in", cen_in, "points file");
  cen->add_flag("--moment", cen_moment, "use the moment curve source");
  cen->add_option("--n", cen_n, "moment source size");
  cen->add_option("--d", cen_d, "moment source dimension");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "analytic constants and tail bounds");
  bnd->require_subcommand(1);
  long b_t = 0;
  int b_d = 1;
  double b_x = 0.5, b_a = 0, b_b = 0;
  std::size_t b_n = 0;
  std::string b_kind = "simplified", b_law = "example2";
  auto* b_lambda = bnd->add_subcommand("lambda", "limiting mean-depth constant");
  b_lambda->add_option("--t", b_t, "fringe parameter")->required();
  auto* b_height = bnd->add_subcommand("height-constant", "limiting height constant");
  b_height->add_option("--t", b_t, "fringe parameter")->required();
  auto* b_tail = bnd->add_subcommand("tail", "closed-form tail bounds");
  b_tail->add_option("--kind", b_kind, "simplified | balance | wagner | beta")
      ->check(CLI::IsMember({"simplified", "balance", "wagner", "beta"}));
  b_tail->add_option("--d", b_d, "dimension")->required();
  b_tail->add_option("--x", b_x, "threshold")->required();
  b_tail->add_option("--n", b_n, "sample size (balance kind)");
  auto* b_gamma = bnd->add_subcommand("gamma", "dominated height constant");
  b_gamma->add_option("--a", b_a, "law scale a");
  b_gamma->add_option("--b", b_b, "law shift b");
  b_gamma->add_option("--d", b_d, "dimension (uses a=1/sqrt(2d), b=log 8)");
  auto* b_mu = bnd->add_subcommand("mu", "logarithmic-moment lower bound");
  b_mu->add_option("--law", b_law, "example2 | wagner")
      ->check(CLI::IsMember({"example2", "wagner"}));
  b_mu->add_option("--d", b_d, "dimension")->required();

  // experiment
  auto* exp = app.add_subcommand("experiment", "seeded Monte Carlo trials");
  std::string e_source = "moment", e_in, e_mode = "combinatorial";
  std::size_t e_n = 0, e_trials = 1;
  int e_d = 1;
  bool e_timing = false;
  exp->add_option("--source", e_source, "moment | cube | sphere | file")
      ->check(CLI::IsMember({"moment", "cube", "sphere", "file"}));
  exp->add_option("--in", e_in, "points file (file source)");
  exp->add_option("--n", e_n, "point count");
  exp->add_option("--d", e_d, "dimension");
  exp->add_option("--trials", e_trials, "number of trials")->required();
  exp->add_option("--mode", e_mode, "geometric | combinatorial")
      ->check(CLI::IsMember({"geometric", "combinatorial"}));
  exp->add_flag("--timing", e_timing, "record real wall_ms (not byte-deterministic)");

  // verify
  auto* ver = app.add_subcommand("verify", "theorem checkers (exit 1 on violation)");
  bool v_lemmas = false, v_domination = false;
  int v_dmax = 3, v_d = 3;
  std::size_t v_nmax = 8, v_sets = 50, v_n = 4096, v_trials = 10000;
  ver->add_flag("--lemmas", v_lemmas, "balance lemma suite");
  ver->add_option("--d-max", v_dmax, "max dimension for lemma suite");
  ver->add_option("--n-max", v_nmax, "max n for lemma suite");
  ver->add_option("--sets", v_sets, "random sets per case");
  ver->add_flag("--domination", v_domination, "dominating-tail suite");
  ver->add_option("--d", v_d, "dimension for domination suite");
  ver->add_option("--n", v_n, "point count for domination suite");
  ver->add_option("--trials", v_trials, "trials for domination suite");

  // report
  auto* rep = app.add_subcommand("report", "summarize an experiment CSV");
  std::string r_in;
  rep->add_option("--in", r_in, "trial CSV")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*gen) {
      PointSet ps = (gen_source == "moment")
                        ? moment_curve(gen_n, gen_d)
                        : random_pointset(gen_n, gen_d, parse_model(gen_source),
                                          g.seed, gen_precision, g.budget);
      emit(g, format_points(ps), out);
      return 0;
    }

    if (*build) {
      HstTree tree;
      if (!build_in.empty()) {
        tree = build_hst(load_points(build_in), g.seed);
      } else if (build_moment) {
        if (build_n == 0 || build_d == 0)
          throw InvalidArgument("--moment requires --n and --d");
        tree = (build_mode == "combinatorial")
                   ? build_moment_hst(build_n, build_d, g.seed)
                   : build_hst(moment_curve(build_n, build_d), g.seed);
      } else {
        throw InvalidArgument("build: need --in or --moment");
      }
      if (!build_tree_out.empty()) {
        std::ofstream f(build_tree_out);
        if (!f) throw Error("cannot open " + build_tree_out);
        f << serialize_tree(tree);
      }
      emit(g, stats_json(tree), out);
      return 0;
    }

    if (*cen) {
      PointSet ps;
      if (!cen_in.empty())
        ps = load_points(cen_in);
      else if (cen_moment && cen_n > 0 && cen_d > 0)
        ps = moment_curve(cen_n, cen_d);
      else
        throw InvalidArgument("census: need --in or --moment with --n/--d");
      const SplitCensus cs = census(ps, g.budget);
      std::ostringstream text;
      text << "k,count\n";
      for (std::size_t k = 0; k < cs.table.size(); ++k)
        text << k << "," << cs.table[k].str() << "\n";
      emit(g, text.str(), out);
      return 0;
    }

    if (*bnd) {
      BoundResult r;
      if (*b_lambda) {
        r = lambda_poblete(b_t);
      } else if (*b_height) {
        r = height_constant(b_t);
      } else if (*b_tail) {
        if (b_kind == "simplified")
          r = simplified_balance_bound(b_d, b_x);
        else if (b_kind == "balance")
          r = balance_bound(b_n, b_d, b_x);
        else if (b_kind == "wagner")
          r = wagner_hoeffding_tail(b_d, b_x);
        else
          r = beta_tail_exact(b_d, b_x);
      } else if (*b_gamma) {
        if (b_gamma->count("--a") || b_gamma->count("--b")) {
          r = dominated_height_gamma(SplitLaw::explicit_ab(b_a, b_b));
        } else {
          r = dominated_height_gamma(SplitLaw::explicit_ab(
              1.0 / std::sqrt(2.0 * b_d), std::log(8.0)));
        }
      } else if (*b_mu) {
        r = log_moment_lower(b_law == "example2" ? SplitLaw::example2(b_d)
                                                 : SplitLaw::wagner(b_d));
      }
      emit(g, to_json(r) + "\n", out);
      return 0;
    }

    if (*exp) {
      ExperimentConfig cfg;
      if (e_source == "moment")
        cfg.source = ExperimentConfig::Source::Moment;
      else if (e_source == "file")
        cfg.source = ExperimentConfig::Source::File;
      else {
        cfg.source = ExperimentConfig::Source::Random;
        cfg.model = parse_model(e_source);
      }
      cfg.n = e_n;
      cfg.d = e_d;
      cfg.path = e_in;
      cfg.trials = e_trials;
      cfg.base_seed = g.seed;
      cfg.mode = (e_mode == "combinatorial") ? ExperimentConfig::Mode::Combinatorial
                                             : ExperimentConfig::Mode::Geometric;
      if (cfg.source != ExperimentConfig::Source::Moment)
        cfg.mode = ExperimentConfig::Mode::Geometric;
      cfg.threads = g.threads;
      cfg.budget = g.budget;
      cfg.timing = e_timing;
      const auto records = run_experiment(cfg);
      std::ostringstream text;
      write_trials_csv(text, records);
      emit(g, text.str(), out);
      return 0;
    }

    if (*ver) {
      if (!v_lemmas && !v_domination)
        throw InvalidArgument("verify: need --lemmas and/or --domination");
      bool ok = true;
      std::ostringstream text;
      if (v_lemmas) {
        const VerifyReport r = verify_lemmas(v_dmax, v_nmax, v_sets, g.seed);
        for (const auto& c : r.checks) text << "ok: " << c << "\n";
        for (const auto& v : r.violations) text << "VIOLATION: " << v << "\n";
        ok = ok && r.pass();
      }
      if (v_domination) {
        const VerifyReport r = verify_domination(v_d, v_n, v_trials, g.seed);
        for (const auto& c : r.checks) text << "ok: " << c << "\n";
        for (const auto& v : r.violations) text << "VIOLATION: " << v << "\n";
        ok = ok && r.pass();
      }
      emit(g, text.str(), out);
      return ok ? 0 : 1;
    }

    if (*rep) {
      std::ifstream f(r_in);
      if (!f) throw Error("cannot open " + r_in);
      const auto records = read_trials_csv(f);
      const ExperimentSummary s = estimate_ratios(records);
      std::ostringstream text;
      text.precision(12);
      auto ratio = [&](const char* name, const RatioSummary& r) {
        text << "\"" << name << "\": {\"count\": " << r.count
             << ", \"mean\": " << r.mean << ", \"sd\": " << r.sd
             << ", \"min\": " << r.min << ", \"q25\": " << r.q25
             << ", \"median\": " << r.median << ", \"q75\": " << r.q75
             << ", \"max\": " << r.max << "}";
      };
      text << "{\"n\": " << s.n << ", ";
      ratio("height_over_log_n", s.height_ratio);
      text << ", ";
      ratio("depth_over_log_n", s.depth_ratio);
      text << "}\n";
      emit(g, text.str(), out);
      return 0;
    }
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hst
