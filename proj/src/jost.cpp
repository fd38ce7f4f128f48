#include "cmvres/jost.hpp"

#include <cmath>
#include <stdexcept>

namespace cmvres {

namespace {

// std::pow(Complex(0), 0.0) is NaN; the recursion needs z^0 = 1 at z = 0.
Complex ipow(Complex z, std::size_t n) {
  Complex r = 1.0;
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

}  // namespace

JostValues solve_jost(const VerblunskySequence& seq, Complex z, std::size_t kmax) {
  const std::size_t n_last = seq.size();
  // F(z,k) for k = 0..N; F(z,N) = (1,0) starts the backward substitution.
  std::vector<std::array<Complex, 2>> f(n_last + 1, {Complex(1.0), Complex(0.0)});

  for (std::size_t k = n_last; k-- > 0;) {
    Complex c1 = 0.0, c2 = 0.0;
    const Complex zeta_k1 = (k + 1) % 2 == 1 ? z : Complex(1.0);
    for (std::size_t n = k + 1; n <= n_last; ++n) {
      const Complex a = seq.alpha(n);
      const Complex zeta_n = n % 2 == 1 ? z : Complex(1.0);
      c1 += a * zeta_n * f[n][1];
      c2 += ipow(z, n - k - 1) * std::conj(a) * zeta_k1 * f[n][0];
    }
    f[k][0] = 1.0 - c1;
    f[k][1] = -c2;
  }

  JostValues out{z, {}};
  out.f.reserve(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k)
    out.f.push_back(k <= n_last ? f[k]
                                : std::array<Complex, 2>{Complex(1.0), Complex(0.0)});
  return out;
}

double tail_bound(const VerblunskySequence& seq, Complex z, std::size_t k) {
  const double az = std::abs(z);
  double beta = 0.0;
  for (std::size_t n = k + 1; n <= seq.size(); ++n)
    beta += std::abs(seq.alpha(n)) * std::max(1.0, std::pow(az, double(2 * n - 1)));
  return beta * std::exp(beta);
}

Complex jost_function(const VerblunskySequence& seq, Complex z) {
  const JostValues jv = solve_jost(seq, z, 0);
  return rho_data(seq).c0 * (jv.f[0][0] - jv.f[0][1]);
}

ComplexPolynomial pi_polynomial(const VerblunskySequence& seq) {
  const std::size_t n_last = seq.size();
  const ComplexPolynomial one = ComplexPolynomial::constant(1.0);
  std::vector<ComplexPolynomial> f1(n_last + 1, one);
  std::vector<ComplexPolynomial> f2(n_last + 1, ComplexPolynomial{});

  for (std::size_t k = n_last; k-- > 0;) {
    ComplexPolynomial c1, c2;
    const std::size_t zeta_k1_shift = (k + 1) % 2;  // multiply by z iff k+1 odd
    for (std::size_t n = k + 1; n <= n_last; ++n) {
      const Complex a = seq.alpha(n);
      if (a == Complex(0.0)) continue;
      c1 = c1 + (a * shifted(f2[n], n % 2));
      c2 = c2 + (std::conj(a) * shifted(f1[n], (n - k - 1) + zeta_k1_shift));
    }
    f1[k] = one - c1;
    f2[k] = Complex(-1.0) * c2;
  }

  ComplexPolynomial pi = f1[0] - f2[0];
  pi.trim();
  return pi;
}

double log_growth_bound(Complex z, const ClassParams& params) {
  const double az = std::abs(z);
  if (az < 1.0) throw std::invalid_argument("log_growth_bound: requires |z| >= 1");
  const double p = params.gamma / (params.gamma - 1.0);
  return std::log(std::sqrt(2.0) * params.q) + params.cap_c +
         std::pow(std::log(2.0 * az * az), p);
}

}  // namespace cmvres
