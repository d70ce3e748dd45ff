#ifndef ACS_HARNESS_HPP
#define ACS_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acs/block_model.hpp"
#include "acs/coherence.hpp"
#include "acs/recovery.hpp"
#include "acs/trajectories.hpp"

namespace acs {

// Dictionary source: an explicit file, or a generator spec.
struct GeneratorSpec {
  std::string kind;  // cartesian-isolated | cartesian-lines | radial | spiral
  std::array<Index, 2> grid = {0, 0};
  int grid_dim = 1;
  RadialParams radial;
  SpiralParams spiral;
  Index wavelet_levels = 0;
};

BlockDictionary build_dictionary(const GeneratorSpec& spec);

enum class PiMode { uniform, optimal, explicit_pi };

struct ExperimentConfig {
  std::string dict_file;  // empty: use generator
  GeneratorSpec generator;

  SignModel sign_model = SignModel::rademacher;
  Index s = 0;
  std::vector<Index> support;  // empty: derived from the master seed
  std::vector<Index> m_grid;
  Index trials = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t experiment_id = 0;

  PiMode pi_mode = PiMode::uniform;
  RealVector pi_explicit;

  SolverOptions solver;
  Real tol_success = 1e-4;
  bool certificate_success = false;  // adjudicate via the dual certificate

  Real epsilon = 0.01;   // failure probability in the measurement bound
  Real c_const = 128.0;  // numerical constant of the measurement bound

  std::string out_csv;
  std::string out_json;
};

ExperimentConfig parse_experiment_config(const std::string& json_text);

struct CurveRow {
  Index m = 0;
  Index trials = 0;
  Index successes = 0;
  Real success_rate = 0.0;
  Real wilson_ci_low = 0.0;
  Real wilson_ci_high = 0.0;
  Real mean_solve_iters = 0.0;
};

struct RecoveryCurve {
  std::vector<CurveRow> rows;
};

// 95% Wilson score interval for a binomial proportion.
void wilson_interval(Index successes, Index trials, Real* low, Real* high);

// Monte Carlo recovery curve over the m grid.  Trials use seeds derived as
// mix(master_seed, experiment_id, m, trial) and may run in parallel
// (ACS_WORKERS); aggregation is by trial index, so output is deterministic
// regardless of scheduling.
RecoveryCurve run_recovery_curve(const ExperimentConfig& config);

struct DensityComparison {
  RecoveryCurve uniform;
  RecoveryCurve optimal;
  Real theta_uniform = 0.0;
  Real theta_optimal = 0.0;
  Real lambda_uniform = 0.0;
  Real lambda_optimal = 0.0;
  std::int64_t m_bound_uniform = 0;
  std::int64_t m_bound_optimal = 0;
  std::vector<Index> support_used;
};

// Runs uniform and Theta-optimal densities on identical per-trial signals
// (common random numbers) and reports the coherence summary for both.
DensityComparison compare_densities(const ExperimentConfig& config);

struct TailCheckConfig {
  std::string dict_file;
  GeneratorSpec generator;
  std::vector<Index> support;
  Index s = 4;
  std::uint64_t master_seed = 0;
  Index trials = 2000;            // lemma + Bernstein rows
  Index hoeffding_trials = 100000;
  Index m = 100;                  // draws per trial for lemma rows
  Real delta = 1.0;               // Lemma 4.2-style threshold
  Real t_param = 1.0;             // Lemma 4.3-style threshold
  std::vector<Real> u_values = {2.0, 3.0, 4.0};
  Real steinhaus_lambda = 0.5;
  Index hoeffding_dim = 16;  // length of the fixed vector a
  std::string out_csv;
  std::string out_json;
};

TailCheckConfig parse_tailcheck_config(const std::string& json_text);

struct TailCheckRow {
  std::string name;
  std::string parameters;
  Real theoretical_bound = 0.0;
  Real empirical_frequency = 0.0;
  Index trials = 0;
  bool vacuous = false;  // bound >= 1: not evaluated
  bool pass = false;
};

struct TailCheckReport {
  std::vector<TailCheckRow> rows;
  bool all_pass() const;
};

// Empirical validation of the concentration inequalities: the two deviation
// statistics against their displayed tail bounds, Hoeffding bounds for
// Rademacher and Steinhaus sums, and matrix/vector Bernstein ensembles built
// from the sampling model.  A row passes when the empirical exceedance
// frequency is at most bound + 3 binomial standard errors.
TailCheckReport run_lemma_checks(const TailCheckConfig& config);

// CSV with a header row matching the field names, 17-significant-digit
// doubles, '\n' line endings.
void write_csv(const RecoveryCurve& curve, const std::string& path);
void write_csv(const TailCheckReport& report, const std::string& path);
std::string to_csv(const RecoveryCurve& curve);
std::string to_csv(const TailCheckReport& report);
RecoveryCurve curve_from_csv(const std::string& text);

std::string to_json(const RecoveryCurve& curve);
std::string to_json(const TailCheckReport& report);
std::string to_json(const DensityComparison& cmp);

void write_text_file(const std::string& path, const std::string& text);

// Worker count for parallel trials: ACS_WORKERS, else hardware concurrency.
int worker_count();

}  // namespace acs

#endif  // ACS_HARNESS_HPP
