#ifndef CMVRES_POLYNOMIAL_HPP
#define CMVRES_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace cmvres {

// Complex polynomial with coefficients in ascending degree order.
// The zero polynomial is represented by an empty coefficient vector.
struct ComplexPolynomial {
  std::vector<std::complex<double>> coeffs;

  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<std::complex<double>> c)
      : coeffs(std::move(c)) {}

  static ComplexPolynomial constant(std::complex<double> c) {
    return ComplexPolynomial({c});
  }

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  std::complex<double> eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
  }

  ComplexPolynomial derivative() const {
    ComplexPolynomial d;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
      d.coeffs.push_back(coeffs[i] * double(i));
    return d;
  }

  // Drop trailing coefficients of negligible magnitude.
  void trim(double eps = 1e-300) {
    while (!coeffs.empty() && std::abs(coeffs.back()) < eps) coeffs.pop_back();
  }

  double max_coeff_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    return m;
  }

  std::string to_json() const;
  static ComplexPolynomial from_json(const std::string& text);
};

inline ComplexPolynomial operator+(const ComplexPolynomial& a,
                                   const ComplexPolynomial& b) {
  ComplexPolynomial r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

inline ComplexPolynomial operator-(const ComplexPolynomial& a,
                                   const ComplexPolynomial& b) {
  ComplexPolynomial r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

inline ComplexPolynomial operator*(std::complex<double> s,
                                   const ComplexPolynomial& p) {
  ComplexPolynomial r = p;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

// Multiplication by z^k.
inline ComplexPolynomial shifted(const ComplexPolynomial& p, std::size_t k) {
  if (p.is_zero()) return p;
  ComplexPolynomial r;
  r.coeffs.assign(k, 0.0);
  r.coeffs.insert(r.coeffs.end(), p.coeffs.begin(), p.coeffs.end());
  return r;
}

inline ComplexPolynomial operator*(const ComplexPolynomial& a,
                                   const ComplexPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ComplexPolynomial r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return r;
}

}  // namespace cmvres

#endif
