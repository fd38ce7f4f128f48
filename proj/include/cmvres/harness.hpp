#ifndef CMVRES_HARNESS_HPP
#define CMVRES_HARNESS_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cmvres/resonances.hpp"
#include "cmvres/types.hpp"

namespace cmvres {

// Portable seeded generator.  Raw 64-bit output is mapped to doubles
// directly so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() { return double(gen_() >> 11) * 0x1.0p-53; }

  // uniform draw from the closed disk of the given radius
  Complex uniform_disk(double radius);

 private:
  std::mt19937_64 gen_;
};

// Substream seed for one trial; distinct trials get decorrelated streams.
std::uint64_t substream_seed(std::uint64_t base_seed, std::uint64_t index);

struct ExperimentConfig {
  VerblunskySequence seq;
  double epsilon = 0.0;
  double radius_r = std::numeric_limits<double>::infinity();  // > 1
  std::size_t grid_m = 4096;
  std::size_t n_max = 12;
  std::size_t trials = 50;
  std::uint64_t seed = 1;

  // Theorem hypothesis epsilon < delta/2; experiments outside the regime
  // run anyway and are flagged in the report.
  bool in_theorem_regime() const;

  std::string to_json() const;
  static ExperimentConfig from_json(const std::string& text);
};

struct StabilityRecord {
  std::size_t trial;
  std::size_t k;  // coefficient index, 1-based
  Complex alpha;
  Complex alpha_hat;
  double abs_err;
  double bound_value;
};

struct StabilityReport {
  explicit StabilityReport(ExperimentConfig cfg) : config(std::move(cfg)) {}

  std::vector<StabilityRecord> records;
  std::vector<std::size_t> failed_trials;
  double fitted_a0 = 0.0;
  bool in_theorem_regime = false;
  ExperimentConfig config;
  double elapsed_seconds = 0.0;

  // per-index median of abs_err over trials; index 0 holds k = 1
  std::vector<double> median_abs_err;

  std::string to_csv() const;  // deterministic; excludes timings
  std::string summary_json() const;
};

// Draws alpha_k uniformly in the disk of radius min(0.6, C exp(-k^gamma)),
// then rescales until the class product condition holds.
VerblunskySequence sample_class_member(const ClassParams& params, std::size_t n,
                                       std::uint64_t seed);

// Zeros with |z| >= radius_r are removed; the rest are displaced by
// independent uniform draws from the epsilon-disk (multiplicities split
// into simple zeros).
ResonanceSet perturb_resonances(const ResonanceSet& set, double epsilon,
                                double radius_r, std::uint64_t seed);

// a0 * (6Q^2)^n * (epsilon + (log R)^p / R), p = gamma/(gamma-1).
double theorem_bound(std::size_t n, double epsilon, double radius_r,
                     const ClassParams& params, double a0);

// a5 * (epsilon + (log R)^p / R)^{1/log(6 e Q^2)}, uniform in n.
double uniform_theorem_bound(double epsilon, double radius_r,
                             const ClassParams& params, double a5);

StabilityReport run_stability_experiment(const ExperimentConfig& cfg);

}  // namespace cmvres

#endif
