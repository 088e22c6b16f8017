#include "hst/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "hst/error.hpp"
#include "hst/facets.hpp"

namespace hst {
namespace {

TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t index) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t seed = mix_seed(cfg.base_seed, index);

  HstTree tree;
  if (cfg.source == ExperimentConfig::Source::Moment &&
      cfg.mode == ExperimentConfig::Mode::Combinatorial) {
    tree = build_moment_hst(cfg.n, cfg.d, seed);
  } else {
    PointSet ps;
    switch (cfg.source) {
      case ExperimentConfig::Source::Moment:
        ps = moment_curve(cfg.n, cfg.d);
        break;
      case ExperimentConfig::Source::Random:
        ps = random_pointset(cfg.n, cfg.d, cfg.model, mix_seed(cfg.base_seed, ~index),
                             64, cfg.budget);
        break;
      case ExperimentConfig::Source::File:
        ps = load_points(cfg.path);
        break;
    }
    tree = build_hst(ps, seed);
  }

  const TreeStats st = stats(tree);
  TrialRecord rec;
  rec.trial_index = index;
  rec.seed = seed;
  rec.n = st.n;
  rec.d = tree.d;
  rec.height = st.height;
  rec.mean_depth = st.mean_depth;
  rec.root_left = st.root_split.first;
  rec.root_right = st.root_split.second;
  if (cfg.timing) {
    const auto t1 = std::chrono::steady_clock::now();
    rec.wall_ms = std::uint64_t(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
  }
  return rec;
}

}  // namespace

std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw InvalidArgument("trials >= 1");
  if (cfg.mode == ExperimentConfig::Mode::Combinatorial &&
      cfg.source != ExperimentConfig::Source::Moment)
    throw InvalidArgument("combinatorial mode is only valid for moment sources");

  std::vector<TrialRecord> records(cfg.trials);
  const unsigned workers = std::max(1u, cfg.threads);
  if (workers == 1) {
    for (std::size_t i = 0; i < cfg.trials; ++i) records[i] = run_trial(cfg, i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= cfg.trials) return;
          try {
            records[i] = run_trial(cfg, i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  return records;  // already in trial order
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << kTrialCsvHeader << "\n";
  for (const TrialRecord& r : records) {
    out << r.trial_index << "," << r.seed << "," << r.n << "," << r.d << ","
        << r.height << "," << decimal_string(r.mean_depth) << "," << r.root_left
        << "," << r.root_right << "," << r.wall_ms << "\n";
  }
}

std::vector<TrialRecord> read_trials_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTrialCsvHeader)
    throw ParseError("missing or unknown trial CSV header");
  std::vector<TrialRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string tok;
    std::vector<std::string> cells;
    while (std::getline(row, tok, ',')) cells.push_back(tok);
    if (cells.size() != 9)
      throw ParseError("bad trial row at line " + std::to_string(line_no));
    TrialRecord r;
    r.trial_index = std::stoull(cells[0]);
    r.seed = std::stoull(cells[1]);
    r.n = std::stoull(cells[2]);
    r.d = std::stoi(cells[3]);
    r.height = std::stoull(cells[4]);
    // decimal back to exact rational (the writer truncates, so this is the
    // written value, not the in-memory one)
    {
      const std::string& dec = cells[5];
      const auto dot = dec.find('.');
      if (dot == std::string::npos) {
        r.mean_depth = Rational(BigInt(dec));
      } else {
        const std::string frac = dec.substr(dot + 1);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        r.mean_depth = Rational(BigInt(dec.substr(0, dot) + frac), den);
      }
    }
    r.root_left = std::stoull(cells[6]);
    r.root_right = std::stoull(cells[7]);
    r.wall_ms = std::stoull(cells[8]);
    records.push_back(std::move(r));
  }
  return records;
}

namespace {

RatioSummary summarize(std::vector<double> values) {
  RatioSummary s;
  s.count = values.size();
  std::sort(values.begin(), values.end());
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / double(values.size());
  double var = 0;
  for (double v : values) var += (v - s.mean) * (v - s.mean);
  s.sd = values.size() > 1 ? std::sqrt(var / double(values.size() - 1)) : 0.0;
  auto q = [&](double p) {
    const double idx = p * double(values.size() - 1);
    const std::size_t lo = std::size_t(idx);
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double w = idx - double(lo);
    return values[lo] * (1 - w) + values[hi] * w;
  };
  s.min = values.front();
  s.q25 = q(0.25);
  s.median = q(0.5);
  s.q75 = q(0.75);
  s.max = values.back();
  return s;
}

}  // namespace

ExperimentSummary estimate_ratios(const std::vector<TrialRecord>& records) {
  if (records.size() < 2) throw InvalidArgument("estimate_ratios: need >= 2 records");
  const std::size_t n = records.front().n;
  for (const TrialRecord& r : records)
    if (r.n != n) throw InvalidArgument("estimate_ratios: mixed n");
  const double log_n = std::log(double(n));

  ExperimentSummary out;
  out.n = n;
  std::vector<double> h_ratios, d_ratios;
  Rational depth_sum = 0;
  for (const TrialRecord& r : records) {
    h_ratios.push_back(double(r.height) / log_n);
    d_ratios.push_back(to_double(r.mean_depth) / log_n);
    depth_sum += r.mean_depth;
  }
  out.height_ratio = summarize(std::move(h_ratios));
  out.depth_ratio = summarize(std::move(d_ratios));
  // rational-exact aggregate, divided once
  out.depth_ratio.mean =
      to_double(depth_sum / Rational(records.size())) / log_n;
  return out;
}

KsResult ks_split_vs_beta(const std::vector<double>& fractions, int d,
                          std::size_t n) {
  if (fractions.size() < 100)
    throw InvalidArgument("ks_split_vs_beta: need >= 100 samples");
  std::vector<double> z(fractions);
  std::sort(z.begin(), z.end());
  const double m = double(z.size());
  double stat = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] < 0.5 || z[i] > 1.0)
      throw InvalidArgument("ks_split_vs_beta: fractions must lie in [1/2, 1]");
    // folded beta cdf: P(max(B, 1-B) <= x) = 1 - 2 P(B >= x)
    const double F = std::max(0.0, 1.0 - 2.0 * beta_tail_exact(d, z[i]).value);
    stat = std::max(stat, std::max(F - double(i) / m, double(i + 1) / m - F));
  }
  KsResult out;
  out.statistic = stat;
  const double alpha = 0.01;
  out.threshold = std::sqrt(std::log(2.0 / alpha) / 2.0) / std::sqrt(m) +
                  2.0 * double(d) / double(n);
  out.pass = stat <= out.threshold;
  return out;
}

namespace {

std::string describe_set(const PointSet& ps) {
  return ps.label.empty() ? "(unlabeled set)" : ps.label;
}

void check_small_balance(const PointSet& ps, VerifyReport& rep) {
  const int d = ps.d;
  const Rational p = same_side_probability(ps);
  const Rational cap = Rational(1, 2) + Rational(1, 2 * (d + 1));
  if (p > cap) {
    rep.violations.push_back("small balance: P(A)=" + decimal_string(p, 6) +
                             " > cap on " + describe_set(ps));
    return;
  }
  // independent classification fixes which exact formula must hold
  Rational expected;
  if (is_convex_position_dplus2(ps)) {
    expected = (d % 2 == 0) ? Rational(d + 2, 2 * (d + 1))
                            : Rational(d + 3, 2 * (d + 2));
  } else {
    expected = Rational(2, d + 2);
  }
  if (p != expected) {
    rep.violations.push_back("small balance: P(A)=" + decimal_string(p, 6) +
                             " != class formula " + decimal_string(expected, 6) +
                             " on " + describe_set(ps));
  } else if (p == cap) {
    rep.checks.push_back("small balance equality case on " + describe_set(ps));
  }
}

void check_balance_lemmas(const PointSet& ps, const SplitCensus& cs,
                          VerifyReport& rep) {
  const std::size_t n = cs.n;
  const int d = cs.d;
  const std::size_t r = n - std::size_t(d);
  // balance lemma: P(N >= (n-d)/2 + x) <= V/(V+x^2) at integer thresholds
  for (std::size_t c = (r + 1) / 2; c <= r; ++c) {
    const Rational x = Rational(c) - Rational(r, 2);
    if (x < 0) continue;
    const Rational tail = larger_side_tail(cs, Rational(c), TailVariant::Randomized);
    if (tail > balance_bound_exact(n, d, x)) {
      rep.violations.push_back("balance lemma fails at threshold " +
                               std::to_string(c) + " on " + describe_set(ps));
    }
  }
  // simplified balance: P(N >= c) <= bound(c/n) for c/n > 1/2
  for (std::size_t c = n / 2 + 1; c <= r; ++c) {
    const Rational x(c, n);
    if (x <= Rational(1, 2)) continue;
    const Rational tail = larger_side_tail(cs, Rational(c), TailVariant::Randomized);
    if (tail > simplified_balance_bound_exact(d, x)) {
      rep.violations.push_back("simplified balance fails at threshold " +
                               std::to_string(c) + " on " + describe_set(ps));
    }
  }
}

}  // namespace

VerifyReport verify_lemmas(int d_max, std::size_t n_max,
                           std::size_t sets_per_case, std::uint64_t seed) {
  VerifyReport rep;
  for (int d = 1; d <= d_max; ++d) {
    // small balance on (d+2)-point sets
    check_small_balance(moment_curve(std::size_t(d) + 2, d), rep);
    for (std::size_t s = 0; s < sets_per_case; ++s) {
      const PointSet ps = random_pointset(std::size_t(d) + 2, d,
                                          RandomModel::UnitCube,
                                          mix_seed(seed, (std::uint64_t(d) << 32) | s));
      check_small_balance(ps, rep);
    }
    rep.checks.push_back("small balance: d=" + std::to_string(d) + ", " +
                         std::to_string(sets_per_case + 1) + " sets");

    // balance lemmas over the census
    for (std::size_t n = std::size_t(d) + 1; n <= n_max; ++n) {
      check_balance_lemmas(moment_curve(n, d), census(moment_curve(n, d)), rep);
      const std::size_t random_sets = std::min<std::size_t>(sets_per_case, 20);
      for (std::size_t s = 0; s < random_sets; ++s) {
        const PointSet ps = random_pointset(
            n, d, RandomModel::UnitCube,
            mix_seed(seed, (std::uint64_t(n) << 40) | (std::uint64_t(d) << 32) | s));
        check_balance_lemmas(ps, census(ps), rep);
      }
      rep.checks.push_back("balance lemmas: d=" + std::to_string(d) +
                           ", n=" + std::to_string(n));
    }
  }
  return rep;
}

VerifyReport verify_domination(int d, std::size_t n, std::size_t trials,
                               std::uint64_t seed) {
  VerifyReport rep;
  if (n <= std::size_t(d)) throw InvalidArgument("verify_domination: n > d");
  std::vector<double> fractions;
  fractions.reserve(trials);
  const double denom = double(n - std::size_t(d));
  for (std::size_t i = 0; i < trials; ++i) {
    SplitMix64 rng(mix_seed(seed, i));
    const auto [odd, even] = simulate_moment_split(n, d, rng);
    fractions.push_back(double(std::max(odd, even)) / denom);
  }
  std::sort(fractions.begin(), fractions.end());

  const double dkw = std::sqrt(std::log(2.0 / 0.01) / (2.0 * double(trials)));
  auto empirical_tail = [&](double x) {
    const auto it = std::lower_bound(fractions.begin(), fractions.end(), x);
    return double(fractions.end() - it) / double(trials);
  };

  // compare on a grid of fractions above 1/2; the side counts are out of
  // n-d, so the lemmas (stated for N/n) are applied at x*(n-d)/n
  const double scale = double(n - std::size_t(d)) / double(n);
  for (int k = 1; k <= 100; ++k) {
    const double x = 0.5 + 0.005 * k;
    const double emp = empirical_tail(x);
    const double xl = x * scale;
    // Example-2 dominating tail: P(W >= y) = min(1, 1/(2(d+1)(y-1/2)^2))
    double w_tail = 1.0;
    if (xl > 0.5) {
      const double dy = xl - 0.5;
      w_tail = std::min(1.0, 1.0 / (2.0 * (d + 1) * dy * dy));
    }
    if (emp > w_tail + dkw) {
      rep.violations.push_back("example-2 tail violated at x=" + std::to_string(x));
    }
    double wag = 1.0;
    if (xl > 0.5) wag = std::min(1.0, wagner_hoeffding_tail(d, xl).value);
    if (emp > wag + dkw) {
      rep.violations.push_back("wagner-hoeffding tail violated at x=" +
                               std::to_string(x));
    }
  }
  rep.checks.push_back("domination: d=" + std::to_string(d) + ", n=" +
                       std::to_string(n) + ", trials=" + std::to_string(trials));
  return rep;
}

}  // namespace hst
