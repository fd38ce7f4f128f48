#include "cmvres/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cmvres/inverse.hpp"
#include "cmvres/jost.hpp"
#include "cmvres/parallel.hpp"
#include "json.hpp"

namespace cmvres {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double log_r_term(double epsilon, double radius_r, const ClassParams& params) {
  const double p = params.gamma / (params.gamma - 1.0);
  const double tail = std::isinf(radius_r)
                          ? 0.0
                          : std::pow(std::log(radius_r), p) / radius_r;
  return epsilon + tail;
}

}  // namespace

Complex Rng::uniform_disk(double radius) {
  const double u = uniform01();
  const double v = uniform01();
  const double r = radius * std::sqrt(u);
  const double t = 2.0 * std::numbers::pi * v;
  return Complex(r * std::cos(t), r * std::sin(t));
}

std::uint64_t substream_seed(std::uint64_t base_seed, std::uint64_t index) {
  return splitmix64(base_seed ^ splitmix64(index + 1));
}

bool ExperimentConfig::in_theorem_regime() const {
  const double delta = resonance_free_radius(seq.params()) - 1.0;
  return epsilon < delta / 2.0 && radius_r > 1.0;
}

std::string ExperimentConfig::to_json() const {
  nlohmann::json j = nlohmann::json::parse(seq.to_json());
  j["epsilon"] = epsilon;
  if (std::isinf(radius_r))
    j["radius_R"] = nullptr;
  else
    j["radius_R"] = radius_r;
  j["grid"] = grid_m;
  j["nmax"] = n_max;
  j["trials"] = trials;
  j["seed"] = seed;
  return j.dump(2);
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  ExperimentConfig cfg{VerblunskySequence::from_json(text)};
  cfg.epsilon = j.value("epsilon", 0.0);
  if (j.contains("radius_R") && !j["radius_R"].is_null())
    cfg.radius_r = j["radius_R"].get<double>();
  cfg.grid_m = j.value("grid", std::size_t(4096));
  cfg.n_max = j.value("nmax", std::size_t(12));
  cfg.trials = j.value("trials", std::size_t(50));
  cfg.seed = j.value("seed", std::uint64_t(1));
  if (cfg.epsilon < 0.0) throw std::invalid_argument("config: epsilon < 0");
  if (!(cfg.radius_r > 1.0)) throw std::invalid_argument("config: radius_R <= 1");
  return cfg;
}

VerblunskySequence sample_class_member(const ClassParams& params, std::size_t n,
                                       std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Complex> alpha(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double decay =
        std::exp(std::log(params.cap_c) - std::pow(double(k), params.gamma));
    alpha[k - 1] = rng.uniform_disk(std::min(0.6, decay));
  }
  auto product = [&] {
    double p = 1.0;
    for (const auto& a : alpha) p *= 1.0 - std::abs(a);
    return p;
  };
  while (product() < 1.0 / params.q)
    for (auto& a : alpha) a *= 0.95;
  return VerblunskySequence(std::move(alpha), params);
}

ResonanceSet perturb_resonances(const ResonanceSet& set, double epsilon,
                                double radius_r, std::uint64_t seed) {
  if (epsilon < 0.0) throw std::invalid_argument("perturb_resonances: epsilon < 0");
  Rng rng(seed);
  ResonanceSet out;
  for (const auto& e : set.zeros) {
    if (std::abs(e.location) >= radius_r) continue;
    for (int c = 0; c < e.multiplicity; ++c) {
      Complex offset = 0.0;
      if (epsilon > 0.0) {
        // open-disk draw: reject the (measure-zero) boundary
        do {
          offset = rng.uniform_disk(epsilon);
        } while (std::abs(offset) >= epsilon);
      }
      out.zeros.push_back({e.location + offset, 1});
    }
  }
  return out;
}

double theorem_bound(std::size_t n, double epsilon, double radius_r,
                     const ClassParams& params, double a0) {
  if (!(radius_r > 1.0)) throw std::invalid_argument("theorem_bound: R <= 1");
  return a0 * std::pow(6.0 * params.q * params.q, double(n)) *
         log_r_term(epsilon, radius_r, params);
}

double uniform_theorem_bound(double epsilon, double radius_r,
                             const ClassParams& params, double a5) {
  if (!(radius_r > 1.0)) throw std::invalid_argument("uniform_theorem_bound: R <= 1");
  const double expo = 1.0 / std::log(6.0 * std::numbers::e * params.q * params.q);
  return a5 * std::pow(log_r_term(epsilon, radius_r, params), expo);
}

StabilityReport run_stability_experiment(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const ClassParams& params = cfg.seq.params();

  ComplexPolynomial pi = pi_polynomial(cfg.seq);
  const ResonanceSet base = find_resonances(pi);

  struct TrialResult {
    std::vector<StabilityRecord> records;
    bool failed = false;
  };
  std::vector<TrialResult> trial_results(cfg.trials);

  const long n_trials = static_cast<long>(cfg.trials);
#pragma omp parallel for schedule(static) num_threads(thread_cap())
  for (long t = 0; t < n_trials; ++t) {
    TrialResult& tr = trial_results[t];
    try {
      const ResonanceSet perturbed = perturb_resonances(
          base, cfg.epsilon, cfg.radius_r, substream_seed(cfg.seed, t));
      const ReconstructionResult rec =
          reconstruct(perturbed, cfg.grid_m, cfg.n_max, params);
      for (std::size_t k = 1; k <= rec.alpha_hat.size(); ++k) {
        StabilityRecord r;
        r.trial = std::size_t(t);
        r.k = k;
        r.alpha = cfg.seq.alpha(k);
        r.alpha_hat = rec.alpha_hat[k - 1];
        r.abs_err = std::abs(r.alpha_hat - r.alpha);
        r.bound_value = 0.0;  // filled after the fit
        tr.records.push_back(r);
      }
      if (rec.failed) tr.failed = true;
    } catch (const std::exception&) {
      tr.failed = true;
    }
  }

  StabilityReport report(cfg);
  report.in_theorem_regime = cfg.in_theorem_regime();

  // assemble in trial order so output does not depend on scheduling
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    if (trial_results[t].failed) report.failed_trials.push_back(t);
    for (const auto& r : trial_results[t].records) report.records.push_back(r);
  }

  // fitted A0: minimal constant making the bound hold over all records
  const double term = log_r_term(cfg.epsilon, cfg.radius_r, params);
  if (term > 0.0) {
    for (const auto& r : report.records) {
      const double denom = std::pow(6.0 * params.q * params.q, double(r.k)) * term;
      report.fitted_a0 = std::max(report.fitted_a0, r.abs_err / denom);
    }
  }
  for (auto& r : report.records)
    r.bound_value =
        theorem_bound(r.k, cfg.epsilon, cfg.radius_r, params, report.fitted_a0);

  // per-index medians
  report.median_abs_err.assign(cfg.n_max, 0.0);
  for (std::size_t k = 1; k <= cfg.n_max; ++k) {
    std::vector<double> errs;
    for (const auto& r : report.records)
      if (r.k == k) errs.push_back(r.abs_err);
    if (errs.empty()) continue;
    std::sort(errs.begin(), errs.end());
    const std::size_t n = errs.size();
    report.median_abs_err[k - 1] =
        n % 2 == 1 ? errs[n / 2] : 0.5 * (errs[n / 2 - 1] + errs[n / 2]);
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string StabilityReport::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "trial,k,alpha_re,alpha_im,alpha_hat_re,alpha_hat_im,abs_err,bound_value\n";
  for (const auto& r : records)
    os << r.trial << ',' << r.k << ',' << r.alpha.real() << ',' << r.alpha.imag()
       << ',' << r.alpha_hat.real() << ',' << r.alpha_hat.imag() << ','
       << r.abs_err << ',' << r.bound_value << '\n';
  return os.str();
}

std::string StabilityReport::summary_json() const {
  nlohmann::json j;
  j["config"] = nlohmann::json::parse(config.to_json());
  j["fitted_a0"] = fitted_a0;
  j["in_theorem_regime"] = in_theorem_regime;
  j["failed_trials"] = failed_trials;
  j["median_abs_err"] = median_abs_err;
  j["records"] = records.size();
  j["elapsed_seconds"] = elapsed_seconds;
  return j.dump(2);
}

}  // namespace cmvres
