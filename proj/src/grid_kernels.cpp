#include "cmvres/grid_kernels.hpp"

#include <cmath>
#include <numbers>

#include "cmvres/parallel.hpp"

namespace cmvres::kernels {

namespace {

inline Complex pi_product_at(const std::vector<Complex>& zeros,
                             const std::vector<int>& mults, Complex z) {
  Complex acc = 1.0;
  for (std::size_t n = 0; n < zeros.size(); ++n) {
    const Complex factor = 1.0 - z / zeros[n];
    for (int m = 0; m < mults[n]; ++m) acc *= factor;
  }
  return acc;
}

inline Complex schur_at(Complex a, Complex phi) {
  return (phi + std::conj(a)) / (1.0 + a * phi);
}

}  // namespace

std::vector<Complex> unit_circle_points(std::size_t m) {
  std::vector<Complex> pts(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = 2.0 * std::numbers::pi * double(j) / double(m);
    pts[j] = Complex(std::cos(t), std::sin(t));
  }
  return pts;
}

void pi_product_serial(const std::vector<Complex>& zeros,
                       const std::vector<int>& mults,
                       const std::vector<Complex>& pts,
                       std::vector<Complex>& out) {
  out.resize(pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j)
    out[j] = pi_product_at(zeros, mults, pts[j]);
}

void pi_product_parallel(const std::vector<Complex>& zeros,
                         const std::vector<int>& mults,
                         const std::vector<Complex>& pts,
                         std::vector<Complex>& out) {
  out.resize(pts.size());
  const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(static) num_threads(thread_cap())
  for (long j = 0; j < n; ++j)
    out[j] = pi_product_at(zeros, mults, pts[j]);
}

void schur_map_serial(Complex a, const std::vector<Complex>& phi,
                      std::vector<Complex>& out) {
  out.resize(phi.size());
  for (std::size_t j = 0; j < phi.size(); ++j) out[j] = schur_at(a, phi[j]);
}

void schur_map_parallel(Complex a, const std::vector<Complex>& phi,
                        std::vector<Complex>& out) {
  out.resize(phi.size());
  const long n = static_cast<long>(phi.size());
#pragma omp parallel for schedule(static) num_threads(thread_cap())
  for (long j = 0; j < n; ++j) out[j] = schur_at(a, phi[j]);
}

void poly_eval_serial(const ComplexPolynomial& p, const std::vector<Complex>& pts,
                      std::vector<Complex>& out) {
  out.resize(pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j) out[j] = p.eval(pts[j]);
}

void poly_eval_parallel(const ComplexPolynomial& p, const std::vector<Complex>& pts,
                        std::vector<Complex>& out) {
  out.resize(pts.size());
  const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(static) num_threads(thread_cap())
  for (long j = 0; j < n; ++j) out[j] = p.eval(pts[j]);
}

Complex grid_mean(const std::vector<Complex>& values) {
  Complex sum = 0.0;
  for (const auto& v : values) sum += v;
  return sum / double(values.size());
}

}  // namespace cmvres::kernels
