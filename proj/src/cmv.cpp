#include "cmvres/cmv.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cmvres/fft.hpp"

namespace cmvres {

namespace {

double rho_of(Complex a) { return std::sqrt(1.0 - std::norm(a)); }

}  // namespace

BandedUnitary::BandedUnitary(std::size_t dim, std::vector<Complex> dense)
    : dim_(dim), dense_(std::move(dense)) {}

Mat2 theta_block(Complex alpha_k) {
  if (!(std::abs(alpha_k) < 1.0))
    throw std::domain_error("theta_block: |alpha| >= 1");
  const double rho = rho_of(alpha_k);
  return {{{-alpha_k, Complex(rho)}, {Complex(rho), std::conj(alpha_k)}}};
}

BandedUnitary build_cmv_matrix(const VerblunskySequence& seq, std::size_t dim) {
  if (dim < 4 || dim % 2 != 0)
    throw std::invalid_argument("build_cmv_matrix: dim must be even and >= 4");

  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(dim, dim);

  // W = Theta_1 + Theta_3 + ... on rows (0,1), (2,3), ...
  for (std::size_t r = 0; r + 1 < dim; r += 2) {
    const Mat2 th = theta_block(seq.alpha(r + 1));
    w(r, r) = th[0][0];
    w(r, r + 1) = th[0][1];
    w(r + 1, r) = th[1][0];
    w(r + 1, r + 1) = th[1][1];
  }

  // V = 1 + Theta_2 + Theta_4 + ... on rows (1,2), (3,4), ...; the
  // dangling last row is closed with the boundary coefficient alpha = 1
  // (rho = 0), which keeps the section unitary.
  v(0, 0) = 1.0;
  for (std::size_t r = 1; r + 1 < dim; r += 2) {
    const Mat2 th = theta_block(seq.alpha(r + 1));
    v(r, r) = th[0][0];
    v(r, r + 1) = th[0][1];
    v(r + 1, r) = th[1][0];
    v(r + 1, r + 1) = th[1][1];
  }
  v(dim - 1, dim - 1) = -1.0;  // top-left of Theta with boundary alpha = 1

  const Eigen::MatrixXcd u = v * w;
  std::vector<Complex> dense(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) dense[r * dim + c] = u(r, c);
  return BandedUnitary(dim, std::move(dense));
}

Mat2 transfer_matrix(Complex z, std::size_t k, const VerblunskySequence& seq) {
  if (z == Complex(0.0)) throw std::domain_error("transfer_matrix: z = 0");
  const Complex a = seq.alpha(k);
  const double rho = rho_of(a);
  if (k % 2 == 1)
    return {{{a / rho, z / rho}, {1.0 / (z * rho), std::conj(a) / rho}}};
  return {{{std::conj(a) / rho, Complex(1.0 / rho)},
           {Complex(1.0 / rho), a / rho}}};
}

std::pair<LatticeSolution, LatticeSolution> fundamental_solutions(
    Complex z, std::size_t kmax, const VerblunskySequence& seq) {
  LatticeSolution theta{z, {Vec2{Complex(-1.0), Complex(1.0)}}};
  LatticeSolution phi{z, {Vec2{Complex(1.0), Complex(1.0)}}};
  theta.values.reserve(kmax + 1);
  phi.values.reserve(kmax + 1);
  for (std::size_t k = 1; k <= kmax; ++k) {
    const Mat2 t = transfer_matrix(z, k, seq);
    for (LatticeSolution* sol : {&theta, &phi}) {
      const Vec2& prev = sol->values.back();
      sol->values.push_back(Vec2{t[0][0] * prev[0] + t[0][1] * prev[1],
                                 t[1][0] * prev[0] + t[1][1] * prev[1]});
    }
  }
  return {theta, phi};
}

Complex m_forward_schur(const VerblunskySequence& seq, Complex z) {
  // Phi_N = 0 for the free tail; invert Phi_k = S(alpha_k, Phi_{k-1})/z
  // down to Phi_0.
  Complex phi = 0.0;
  for (std::size_t k = seq.size(); k >= 1; --k) {
    const Complex a = seq.alpha(k);
    const Complex y = z * phi;
    phi = (y - std::conj(a)) / (1.0 - a * y);
  }
  const Complex zp = z * phi;
  return (1.0 + zp) / (1.0 - zp);
}

Complex m_finite_section(const VerblunskySequence& seq, Complex z, std::size_t dim) {
  const BandedUnitary u = build_cmv_matrix(seq, dim);
  Eigen::MatrixXcd a(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) a(r, c) = u.entry(r, c);

  Eigen::MatrixXcd sys = a;
  for (std::size_t i = 0; i < dim; ++i) sys(i, i) -= z;
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dim);
  rhs(0) = 1.0;
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(sys);
  const Eigen::VectorXcd x = lu.solve(rhs);
  if (!x.allFinite())
    throw std::runtime_error("m_finite_section: singular resolvent system");
  // m = <delta_0, (U + z) x>
  Complex m = z * x(0);
  for (std::size_t c = 0; c < dim; ++c) m += a(0, c) * x(c);
  return m;
}

std::vector<Complex> m_taylor_coeffs(const VerblunskySequence& seq, std::size_t n) {
  if (n < 1) throw std::invalid_argument("m_taylor_coeffs: n must be >= 1");
  const double r = 0.5;
  std::size_t m = 64;
  while (m < 8 * n) m *= 2;

  std::vector<Complex> samples(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double t = 2.0 * std::numbers::pi * double(j) / double(m);
    samples[j] = m_forward_schur(seq, r * Complex(std::cos(t), std::sin(t)));
  }
  fft_inplace(samples, /*inverse=*/false);

  std::vector<Complex> coeffs(n);
  double rpow = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    coeffs[k] = samples[k] / (double(m) * rpow);
    rpow *= r;
  }
  return coeffs;
}

}  // namespace cmvres
