#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hst/bounds.hpp"
#include "hst/points.hpp"
#include "hst/rational.hpp"
#include "hst/tree.hpp"

namespace hst {

struct ExperimentConfig {
  enum class Source { Moment, Random, File };
  enum class Mode { Geometric, Combinatorial };

  Source source = Source::Moment;
  std::size_t n = 0;
  int d = 1;
  RandomModel model = RandomModel::UnitCube;
  std::string path;  // Source::File
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  Mode mode = Mode::Combinatorial;
  unsigned threads = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
  bool timing = false;  // emit real wall_ms (breaks byte determinism)
};

struct TrialRecord {
  std::size_t trial_index = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  int d = 0;
  std::size_t height = 0;
  Rational mean_depth;
  std::size_t root_left = 0;
  std::size_t root_right = 0;
  std::uint64_t wall_ms = 0;
};

// Trial i uses seed mix_seed(base_seed, i); trials may run on cfg.threads
// workers but records come back sorted by trial_index, so output bytes are
// independent of the schedule.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg);

inline constexpr const char* kTrialCsvHeader =
    "schema=1,trial,seed,n,d,height,mean_depth,root_left,root_right,wall_ms";

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records);
std::vector<TrialRecord> read_trials_csv(std::istream& in);

struct RatioSummary {
  std::size_t count = 0;
  double mean = 0, sd = 0;
  double min = 0, q25 = 0, median = 0, q75 = 0, max = 0;
};

struct ExperimentSummary {
  std::size_t n = 0;
  RatioSummary height_ratio;      // height / ln n
  RatioSummary depth_ratio;       // mean_depth / ln n (rational-averaged mean)
};

// Requires >= 2 records with uniform n.  mean_depth values are averaged as
// exact rationals before the division by ln n.
ExperimentSummary estimate_ratios(const std::vector<TrialRecord>& records);

struct KsResult {
  double statistic = 0;
  double threshold = 0;
  bool pass = false;
};

// Two-sided KS test of root larger-side fractions (in [1/2, 1]) against the
// folded beta(ceil(d/2), ceil(d/2)) cdf.  Threshold sqrt(ln(2/alpha)/2)/
// sqrt(m) at alpha = 0.01 plus a finite-n slack of 2d/n.
KsResult ks_split_vs_beta(const std::vector<double>& fractions, int d,
                          std::size_t n);

struct VerifyReport {
  std::vector<std::string> checks;      // one line per (case, lemma) block
  std::vector<std::string> violations;  // empty on success
  bool pass() const { return violations.empty(); }
};

// Exhaustive verification of the small-balance, balance and simplified
// balance lemmas on seeded random sets and moment-curve sets, by exact
// rational comparison of census tails against the closed forms.  Any
// violation indicates an implementation bug.
VerifyReport verify_lemmas(int d_max, std::size_t n_max,
                           std::size_t sets_per_case, std::uint64_t seed);

// Empirical larger-side tail from `trials` root splits of the moment model
// vs the example2 dominating tail and the wagner_hoeffding tail, with DKW
// slack sqrt(ln(2/alpha)/(2*trials)) at alpha = 0.01.
VerifyReport verify_domination(int d, std::size_t n, std::size_t trials,
                               std::uint64_t seed);

}  // namespace hst
