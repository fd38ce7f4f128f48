#include "cmvres/resonances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cmvres/jost.hpp"
#include "json.hpp"

namespace cmvres {

int ResonanceSet::total_multiplicity() const {
  int n = 0;
  for (const auto& e : zeros) n += e.multiplicity;
  return n;
}

void ResonanceSet::sort_canonical() {
  std::sort(zeros.begin(), zeros.end(), [](const Entry& a, const Entry& b) {
    const double ma = std::abs(a.location), mb = std::abs(b.location);
    if (ma != mb) return ma < mb;
    return std::arg(a.location) < std::arg(b.location);
  });
}

std::string ResonanceSet::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "re,im,multiplicity\n";
  for (const auto& e : zeros)
    os << e.location.real() << ',' << e.location.imag() << ','
       << e.multiplicity << '\n';
  return os.str();
}

ResonanceSet ResonanceSet::from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("re,im,multiplicity", 0) != 0)
    throw std::invalid_argument("ResonanceSet: missing CSV header");
  ResonanceSet set;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    double re, im;
    int mult;
    std::getline(row, field, ',');
    re = std::stod(field);
    std::getline(row, field, ',');
    im = std::stod(field);
    std::getline(row, field, ',');
    mult = std::stoi(field);
    set.zeros.push_back({Complex(re, im), mult});
  }
  return set;
}

std::string ResonanceSet::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : zeros)
    j.push_back({e.location.real(), e.location.imag(), e.multiplicity});
  return j.dump();
}

ResonanceSet ResonanceSet::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  ResonanceSet set;
  for (const auto& row : j)
    set.zeros.push_back({Complex(row.at(0).get<double>(), row.at(1).get<double>()),
                         row.at(2).get<int>()});
  return set;
}

ResonanceSet find_resonances(const ComplexPolynomial& pi, double tol) {
  ComplexPolynomial p = pi;
  p.trim();
  if (p.is_zero())
    throw std::invalid_argument("find_resonances: zero polynomial");
  const int deg = p.degree();
  ResonanceSet set;
  if (deg == 0) return set;

  // monic normalization
  const Complex lead = p.coeffs.back();
  std::vector<Complex> c(p.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs[i] / lead;

  auto eval_both = [&](Complex z, Complex& val, Complex& der) {
    val = c.back();
    der = 0.0;
    for (int i = deg - 1; i >= 0; --i) {
      der = der * z + val;
      val = val * z + c[i];
    }
  };

  // initial guesses on a circle, slight phase offset to break symmetry
  const double r0 = std::max(2.0, 1.0 + pi.max_coeff_abs());
  std::vector<Complex> roots(deg);
  for (int i = 0; i < deg; ++i) {
    const double t = 2.0 * std::numbers::pi * double(i) / double(deg) + 0.4;
    roots[i] = r0 * Complex(std::cos(t), std::sin(t));
  }

  auto backward_scale = [&](double az) {
    double scale = 0.0, zp = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      scale += std::abs(c[k]) * zp;
      zp *= az;
    }
    return scale;
  };

  const int max_iter = 500;
  bool converged = false;
  for (int it = 0; it < max_iter && !converged; ++it) {
    double max_step = 0.0;
    for (int i = 0; i < deg; ++i) {
      Complex val, der;
      eval_both(roots[i], val, der);
      // backward-error floor: the root cannot be improved further
      if (std::abs(val) <= 1e-14 * (1.0 + backward_scale(std::abs(roots[i]))))
        continue;
      const Complex newton = der == Complex(0.0) ? Complex(0.0) : val / der;
      Complex repulsion = 0.0;
      for (int j = 0; j < deg; ++j)
        if (j != i) repulsion += 1.0 / (roots[i] - roots[j]);
      const Complex denom = 1.0 - newton * repulsion;
      const Complex step =
          denom == Complex(0.0) ? newton : newton / denom;
      roots[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(roots[i])));
    }
    converged = max_step < 1e-13;
  }
  if (!converged)
    throw std::runtime_error("find_resonances: Aberth iteration did not converge");

  // residual certification with a backward-error scale: |p(z)| is compared
  // against tol * sum_k |c_k||z|^k, which stays meaningful for large roots
  for (int i = 0; i < deg; ++i) {
    double scale = 0.0, zp = 1.0;
    const double az = std::abs(roots[i]);
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
      scale += std::abs(p.coeffs[k]) * zp;
      zp *= az;
    }
    Complex val, der;
    eval_both(roots[i], val, der);
    if (std::abs(val * lead) > tol * (1.0 + scale))
      throw std::runtime_error("find_resonances: root residual above tolerance");
  }

  // cluster within 1e-8 into multiple roots
  std::vector<bool> used(deg, false);
  for (int i = 0; i < deg; ++i) {
    if (used[i]) continue;
    Complex sum = roots[i];
    int count = 1;
    used[i] = true;
    for (int j = i + 1; j < deg; ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) < 1e-8) {
        sum += roots[j];
        ++count;
        used[j] = true;
      }
    }
    set.zeros.push_back({sum / double(count), count});
  }
  set.sort_canonical();
  return set;
}

double resonance_free_radius(const ClassParams& params) {
  const double e = std::numbers::e;
  const double big_l = std::exp(log_growth_bound(Complex(e), params));
  return (params.q * big_l + e) / (params.q * big_l + 1.0);
}

int counting_function(const ResonanceSet& set, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("counting_function: r must be > 0");
  int n = 0;
  for (const auto& e : set.zeros)
    if (std::abs(e.location) < r) n += e.multiplicity;
  return n;
}

double inverse_moment(const ResonanceSet& set, double radius_r) {
  if (!(radius_r >= 1.0))
    throw std::invalid_argument("inverse_moment: R must be >= 1");
  double sum = 0.0;
  for (const auto& e : set.zeros) {
    const double m = std::abs(e.location);
    if (m >= radius_r) sum += double(e.multiplicity) / m;
  }
  return sum;
}

}  // namespace cmvres
