#include "cmvres/types.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace cmvres {

ClassParams::ClassParams(double gamma_, double cap_c_, double q_)
    : gamma(gamma_), cap_c(cap_c_), q(q_) {
  if (!(gamma > 1.0)) throw std::invalid_argument("ClassParams: gamma must be > 1");
  if (!(cap_c > 0.0)) throw std::invalid_argument("ClassParams: C must be > 0");
  if (!(q > 1.0)) throw std::invalid_argument("ClassParams: Q must be > 1");
}

VerblunskySequence::VerblunskySequence(std::vector<Complex> alpha, ClassParams params)
    : alpha_(std::move(alpha)), params_(params) {
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (!(std::abs(alpha_[i]) < 1.0))
      throw std::invalid_argument("VerblunskySequence: |alpha_" +
                                  std::to_string(i + 1) + "| >= 1");
  }
}

std::string VerblunskySequence::to_json() const {
  nlohmann::json j;
  j["alpha"] = nlohmann::json::array();
  for (const auto& a : alpha_) j["alpha"].push_back({a.real(), a.imag()});
  j["gamma"] = params_.gamma;
  j["C"] = params_.cap_c;
  j["Q"] = params_.q;
  return j.dump(2);
}

VerblunskySequence VerblunskySequence::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<Complex> alpha;
  for (const auto& pair : j.at("alpha"))
    alpha.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  ClassParams params(j.at("gamma").get<double>(), j.at("C").get<double>(),
                     j.at("Q").get<double>());
  return VerblunskySequence(std::move(alpha), params);
}

ValidationReport validate_class(const VerblunskySequence& seq) {
  ValidationReport rep{true, true, 1.0, 0.0, 0};
  const auto& p = seq.params();
  for (std::size_t k = 1; k <= seq.size(); ++k) {
    const double mag = std::abs(seq.alpha(k));
    rep.product *= 1.0 - mag;
    // ratio |alpha_k| / (C exp(-k^gamma)), computed in logs to avoid overflow
    const double ratio =
        mag == 0.0 ? 0.0
                   : std::exp(std::log(mag) + std::pow(double(k), p.gamma) -
                              std::log(p.cap_c));
    if (ratio > rep.max_decay_ratio) {
      rep.max_decay_ratio = ratio;
      rep.worst_index = k;
    }
  }
  rep.decay_ok = rep.max_decay_ratio <= 1.0;
  rep.product_ok = rep.product >= 1.0 / p.q;
  return rep;
}

RhoData rho_data(const VerblunskySequence& seq) {
  const std::size_t n = seq.size();
  RhoData out;
  out.rho.resize(n);
  out.c_tail.assign(n + 1, 1.0);
  for (std::size_t k = 1; k <= n; ++k) {
    const double mag2 = std::norm(seq.alpha(k));
    out.rho[k - 1] = std::sqrt(1.0 - mag2);
  }
  // C_k = prod_{j=k+1}^{N} 1/rho_j, accumulated from the tail
  for (std::size_t k = n; k-- > 0;)
    out.c_tail[k] = out.c_tail[k + 1] / out.rho[k];
  out.c0 = out.c_tail[0];
  return out;
}

}  // namespace cmvres
