#include <cmath>
#include <complex>

#include "cmvres/cmv.hpp"
#include "cmvres/harness.hpp"
#include "cmvres/types.hpp"
#include "doctest.h"

using namespace cmvres;

namespace {

const ClassParams kParams(2.0, 2.0, 4.0);

Complex det2(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

}  // namespace

TEST_CASE("theta_block hand values and unitarity") {
  SUBCASE("alpha = 0 is the antidiagonal") {
    const Mat2 th = theta_block(0.0);
    CHECK(th[0][0] == Complex(0.0));
    CHECK(th[0][1] == Complex(1.0));
    CHECK(th[1][0] == Complex(1.0));
    CHECK(th[1][1] == Complex(0.0));
  }
  SUBCASE("alpha = 1/2") {
    const Mat2 th = theta_block(0.5);
    CHECK(th[0][0] == Complex(-0.5));
    CHECK(std::abs(th[0][1] - std::sqrt(3.0) / 2.0) < 1e-15);
    CHECK(th[1][1] == Complex(0.5));
  }
  SUBCASE("unitary for sampled alpha") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      Rng rng(s);
      const Complex a = rng.uniform_disk(0.95);
      const Mat2 th = theta_block(a);
      // Theta * Theta^* = I
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          Complex sum = 0.0;
          for (int k = 0; k < 2; ++k) sum += th[i][k] * std::conj(th[j][k]);
          CHECK(std::abs(sum - (i == j ? 1.0 : 0.0)) < 1e-14);
        }
    }
  }
  SUBCASE("domain error outside the disk") {
    CHECK_THROWS_AS(theta_block(Complex(1.0, 0.0)), std::domain_error);
  }
}

TEST_CASE("build_cmv_matrix structure") {
  SUBCASE("odd dimension rejected") {
    VerblunskySequence seq({}, kParams);
    CHECK_THROWS_AS(build_cmv_matrix(seq, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_cmv_matrix(seq, 2), std::invalid_argument);
  }
  SUBCASE("free case first row and bandedness") {
    VerblunskySequence seq({}, kParams);
    const auto u = build_cmv_matrix(seq, 8);
    CHECK(std::abs(u.entry(0, 0)) < 1e-15);
    CHECK(std::abs(u.entry(0, 1) - 1.0) < 1e-15);
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c)
        if (r > c + 2 || c > r + 2) CHECK(std::abs(u.entry(r, c)) == 0.0);
  }
  SUBCASE("first row is (-alpha_1, rho_1, 0, ...)") {
    VerblunskySequence seq({{0.5, 0.0}, {1.0 / 3.0, 0.0}}, kParams);
    const auto u = build_cmv_matrix(seq, 6);
    CHECK(std::abs(u.entry(0, 0) + 0.5) < 1e-15);
    CHECK(std::abs(u.entry(0, 1) - std::sqrt(3.0) / 2.0) < 1e-15);
    CHECK(std::abs(u.entry(0, 2)) < 1e-15);
  }
  SUBCASE("columns orthonormal") {
    VerblunskySequence seq({{0.5, 0.0}, {1.0 / 3.0, 0.0}}, kParams);
    const auto u = build_cmv_matrix(seq, 6);
    for (std::size_t c1 = 0; c1 < 6; ++c1)
      for (std::size_t c2 = 0; c2 < 6; ++c2) {
        Complex dot = 0.0;
        for (std::size_t r = 0; r < 6; ++r)
          dot += std::conj(u.entry(r, c1)) * u.entry(r, c2);
        CHECK(std::abs(dot - (c1 == c2 ? 1.0 : 0.0)) < 1e-14);
      }
  }
}

TEST_CASE("transfer_matrix hand values and determinant") {
  VerblunskySequence free_seq({}, kParams);
  SUBCASE("k even, alpha = 0") {
    const Mat2 t = transfer_matrix(Complex(2.0), 2, free_seq);
    CHECK(t[0][0] == Complex(0.0));
    CHECK(t[0][1] == Complex(1.0));
    CHECK(t[1][0] == Complex(1.0));
    CHECK(t[1][1] == Complex(0.0));
  }
  SUBCASE("k odd, alpha = 0, z = 2") {
    const Mat2 t = transfer_matrix(Complex(2.0), 1, free_seq);
    CHECK(t[0][0] == Complex(0.0));
    CHECK(t[0][1] == Complex(2.0));
    CHECK(std::abs(t[1][0] - 0.5) < 1e-15);
    CHECK(t[1][1] == Complex(0.0));
  }
  SUBCASE("det = -1 for random inputs") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto seq = sample_class_member(kParams, 5, s);
      Rng rng(s + 100);
      const Complex z = rng.uniform_disk(2.0) + Complex(0.1, 0.1);
      for (std::size_t k = 1; k <= 6; ++k)
        CHECK(std::abs(det2(transfer_matrix(z, k, seq)) + 1.0) < 1e-13);
    }
  }
  SUBCASE("z = 0 rejected") {
    CHECK_THROWS_AS(transfer_matrix(Complex(0.0), 1, free_seq),
                    std::domain_error);
  }
}

TEST_CASE("fundamental_solutions") {
  VerblunskySequence free_seq({}, kParams);
  SUBCASE("initial conditions at K = 0") {
    const auto [theta, phi] = fundamental_solutions(Complex(0.5, 0.2), 0, free_seq);
    CHECK(theta.values[0][0] == Complex(-1.0));
    CHECK(theta.values[0][1] == Complex(1.0));
    CHECK(phi.values[0][0] == Complex(1.0));
    CHECK(phi.values[0][1] == Complex(1.0));
  }
  SUBCASE("free solution bounded on the unit circle") {
    const Complex z = std::polar(1.0, 0.7);
    const auto [theta, phi] = fundamental_solutions(z, 100, free_seq);
    for (const auto& v : phi.values) {
      CHECK(std::abs(v[0]) < 10.0);
      CHECK(std::abs(v[1]) < 10.0);
    }
  }
  SUBCASE("phi's first component satisfies the eigen-relation on interior rows") {
    const auto seq = sample_class_member(kParams, 4, 7);
    const std::size_t dim = 32;
    const auto u = build_cmv_matrix(seq, dim);
    const Complex z = std::polar(1.0, 1.234);
    const auto [theta, phi] = fundamental_solutions(z, dim - 1, seq);
    for (std::size_t r = 0; r + 3 < dim; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = (r >= 2 ? r - 2 : 0); c <= std::min(dim - 1, r + 2); ++c)
        acc += u.entry(r, c) * phi.values[c][0];
      CHECK(std::abs(acc - z * phi.values[r][0]) < 1e-10);
    }
  }
}

TEST_CASE("m_forward_schur closed forms") {
  SUBCASE("free sequence gives m = 1") {
    VerblunskySequence seq({}, kParams);
    CHECK(m_forward_schur(seq, Complex(0.3, 0.4)) == Complex(1.0));
  }
  SUBCASE("alpha=(1/2): m = (1 - z/2)/(1 + z/2)") {
    VerblunskySequence seq({{0.5, 0.0}}, kParams);
    for (const Complex z : {Complex(0.0), Complex(0.3, 0.1), Complex(-0.7, 0.2),
                            std::polar(1.0, 2.0)}) {
      const Complex expect = (1.0 - z / 2.0) / (1.0 + z / 2.0);
      CHECK(std::abs(m_forward_schur(seq, z) - expect) < 1e-14);
    }
  }
  SUBCASE("m(0) = 1 for every sequence") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto seq = sample_class_member(kParams, 6, s);
      CHECK(std::abs(m_forward_schur(seq, Complex(0.0)) - 1.0) < 1e-14);
    }
  }
  SUBCASE("Caratheodory property on sampled interior points") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto seq = sample_class_member(kParams, 6, s);
      Rng rng(s + 999);
      for (int i = 0; i < 25; ++i) {
        const Complex z = rng.uniform_disk(0.999);
        CHECK(m_forward_schur(seq, z).real() > 0.0);
      }
    }
  }
}

TEST_CASE("m_finite_section agrees with the Schur oracle") {
  SUBCASE("free sequence at z = 0") {
    VerblunskySequence seq({}, kParams);
    CHECK(std::abs(m_finite_section(seq, Complex(0.0), 16) - 1.0) < 1e-13);
  }
  SUBCASE("alpha=(1/2) at z=0.3, dim=64") {
    VerblunskySequence seq({{0.5, 0.0}}, kParams);
    const Complex m = m_finite_section(seq, Complex(0.3), 64);
    CHECK(std::abs(m - (1.0 - 0.15) / (1.0 + 0.15)) < 1e-8);
  }
  SUBCASE("random sequence, z = 0.4+0.2i, dim=128") {
    const auto seq = sample_class_member(kParams, 6, 3);
    const Complex z(0.4, 0.2);
    CHECK(std::abs(m_finite_section(seq, z, 128) - m_forward_schur(seq, z)) <
          1e-8);
  }
  SUBCASE("oracle gap shrinks with dimension") {
    const auto seq = sample_class_member(kParams, 6, 11);
    const Complex z(0.55, -0.35);
    const Complex exact = m_forward_schur(seq, z);
    double prev = 1e300;
    for (std::size_t dim : {32, 64, 128}) {
      const double gap = std::abs(m_finite_section(seq, z, dim) - exact);
      CHECK(gap <= prev + 1e-14);
      prev = gap;
    }
    CHECK(prev < 1e-10);
  }
}

TEST_CASE("m_taylor_coeffs identities") {
  SUBCASE("free sequence: constant 1") {
    VerblunskySequence seq({}, kParams);
    const auto c = m_taylor_coeffs(seq, 4);
    CHECK(std::abs(c[0] - 1.0) < 1e-12);
    for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(c[i]) < 1e-12);
  }
  SUBCASE("alpha=(1/2): m'(0) = -1") {
    VerblunskySequence seq({{0.5, 0.0}}, kParams);
    const auto c = m_taylor_coeffs(seq, 2);
    CHECK(std::abs(c[1] + 1.0) < 1e-12);
  }
  SUBCASE("alpha=(1/2,1/3): m''(0) = 0") {
    VerblunskySequence seq({{0.5, 0.0}, {1.0 / 3.0, 0.0}}, kParams);
    const auto c = m_taylor_coeffs(seq, 3);
    CHECK(std::abs(2.0 * c[2]) < 1e-12);
  }
  SUBCASE("first-derivative identity for sampled members") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto seq = sample_class_member(kParams, 5, s);
      const auto c = m_taylor_coeffs(seq, 3);
      CHECK(std::abs(c[1] + 2.0 * std::conj(seq.alpha(1))) < 1e-11);
    }
  }
}

TEST_CASE("Phi_0 boundary estimate from the class constants") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto seq = sample_class_member(kParams, 6, s);
    const double q2 = kParams.q * kParams.q;
    for (int j = 0; j < 64; ++j) {
      const Complex z = std::polar(1.0, 2.0 * 3.14159265358979 * j / 64.0);
      const Complex m = m_forward_schur(seq, z);
      const Complex phi0 = (m - 1.0) / ((m + 1.0) * z);
      const double mod = std::abs(phi0);
      CHECK((1.0 + mod) / (1.0 - mod) <= q2 + 1e-12);
    }
  }
}
