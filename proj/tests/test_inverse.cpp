#include <cmath>
#include <complex>
#include <numbers>

#include "cmvres/cmv.hpp"
#include "cmvres/harness.hpp"
#include "cmvres/inverse.hpp"
#include "cmvres/jost.hpp"
#include "cmvres/resonances.hpp"
#include "doctest.h"

using namespace cmvres;

namespace {

const ClassParams kParams(2.0, 2.0, 4.0);

double roundtrip_error(const VerblunskySequence& seq, std::size_t grid_m) {
  const auto set = find_resonances(pi_polynomial(seq));
  const auto rec = reconstruct(set, grid_m, seq.size() + 2, seq.params());
  double err = 0.0;
  const std::size_t n = std::max(seq.size(), rec.alpha_hat.size());
  for (std::size_t k = 1; k <= n; ++k) {
    const Complex hat = k <= rec.alpha_hat.size() ? rec.alpha_hat[k - 1] : 0.0;
    err = std::max(err, std::abs(hat - seq.alpha(k)));
  }
  return err;
}

}  // namespace

TEST_CASE("pi_on_circle") {
  SUBCASE("grid size validation") {
    ResonanceSet empty;
    CHECK_THROWS_AS(pi_on_circle(empty, 8), std::invalid_argument);
    CHECK_THROWS_AS(pi_on_circle(empty, 100), std::invalid_argument);
  }
  SUBCASE("empty set gives the constant 1") {
    const auto grid = pi_on_circle(ResonanceSet{}, 16);
    for (const auto& v : grid.values) CHECK(v == Complex(1.0));
  }
  SUBCASE("single zero at -2") {
    ResonanceSet set{{{Complex(-2.0, 0.0), 1}}};
    const auto grid = pi_on_circle(set, 16);
    for (std::size_t j = 0; j < 16; ++j) {
      const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / 16.0);
      CHECK(std::abs(grid.values[j] - (1.0 + z / 2.0)) < 1e-14);
    }
  }
  SUBCASE("zero inside the disk rejected") {
    ResonanceSet set{{{Complex(0.5, 0.0), 1}}};
    CHECK_THROWS_AS(pi_on_circle(set, 16), std::domain_error);
  }
  SUBCASE("matches direct Pi evaluation after a forward round trip") {
    const auto seq = sample_class_member(kParams, 6, 3);
    const auto pi = pi_polynomial(seq);
    const auto grid = pi_on_circle(find_resonances(pi), 256);
    for (std::size_t j = 0; j < 256; ++j) {
      const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / 256.0);
      CHECK(std::abs(grid.values[j] - pi.eval(z)) < 1e-10);
    }
  }
}

TEST_CASE("psi0_zero_from_pi") {
  SUBCASE("constant Pi gives 1") {
    const auto grid = pi_on_circle(ResonanceSet{}, 16);
    CHECK(psi0_zero_from_pi(grid) == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("zero at -2 gives 2/sqrt(3)") {
    ResonanceSet set{{{Complex(-2.0, 0.0), 1}}};
    const auto grid = pi_on_circle(set, 1024);
    CHECK(psi0_zero_from_pi(grid) ==
          doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
  }
  SUBCASE("quadratic hand case recovers C_0 of alpha=(1/2,1/3)") {
    ResonanceSet set{{{Complex(-1.0, std::sqrt(2.0)), 1},
                      {Complex(-1.0, -std::sqrt(2.0)), 1}}};
    const auto grid = pi_on_circle(set, 1024);
    CHECK(std::abs(psi0_zero_from_pi(grid) - 1.2247448713915890) < 1e-10);
  }
}

TEST_CASE("m_on_circle") {
  SUBCASE("psi_0 = 1 gives m = 1") {
    CircleGrid psi;
    psi.values.assign(64, Complex(1.0));
    const auto m = m_on_circle(psi);
    for (const auto& v : m.values) CHECK(std::abs(v - 1.0) < 1e-13);
  }
  SUBCASE("alpha=(1/2) pipeline matches the closed form") {
    ResonanceSet set{{{Complex(-2.0, 0.0), 1}}};
    const auto pi_grid = pi_on_circle(set, 1024);
    const double psi0 = psi0_zero_from_pi(pi_grid);
    CircleGrid psi;
    psi.values.resize(1024);
    for (std::size_t j = 0; j < 1024; ++j)
      psi.values[j] = psi0 * pi_grid.values[j];
    const auto m = m_on_circle(psi);
    for (std::size_t j = 0; j < 1024; ++j) {
      const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / 1024.0);
      const Complex expect = (1.0 - z / 2.0) / (1.0 + z / 2.0);
      CHECK(std::abs(m.values[j] - expect) < 1e-10);
    }
  }
  SUBCASE("unnormalized input rejected") {
    CircleGrid psi;
    psi.values.assign(64, Complex(2.0));
    CHECK_THROWS_AS(m_on_circle(psi), std::runtime_error);
  }
  SUBCASE("positive real part for sampled members") {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto seq = sample_class_member(kParams, 6, s);
      const auto set = find_resonances(pi_polynomial(seq));
      const auto pi_grid = pi_on_circle(set, 512);
      const double psi0 = psi0_zero_from_pi(pi_grid);
      CircleGrid psi;
      psi.values.resize(512);
      for (std::size_t j = 0; j < 512; ++j)
        psi.values[j] = psi0 * pi_grid.values[j];
      const auto m = m_on_circle(psi);
      for (const auto& v : m.values) CHECK(v.real() > 0.0);
    }
  }
}

TEST_CASE("schur_phi0") {
  SUBCASE("m = 1 gives Phi_0 = 0") {
    CircleGrid m;
    m.values.assign(32, Complex(1.0));
    const auto phi = schur_phi0(m);
    for (const auto& v : phi.values) CHECK(std::abs(v) == 0.0);
  }
  SUBCASE("alpha=(1/2) gives the constant -1/2") {
    CircleGrid m;
    m.values.resize(512);
    for (std::size_t j = 0; j < 512; ++j) {
      const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / 512.0);
      m.values[j] = (1.0 - z / 2.0) / (1.0 + z / 2.0);
    }
    const auto phi = schur_phi0(m);
    for (const auto& v : phi.values) CHECK(std::abs(v + 0.5) < 1e-13);
  }
  SUBCASE("modulus bounded via the class estimate") {
    const double bound =
        (kParams.q * kParams.q - 1.0) / (kParams.q * kParams.q + 1.0);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto seq = sample_class_member(kParams, 6, s);
      CircleGrid m;
      m.values.resize(256);
      for (std::size_t j = 0; j < 256; ++j)
        m.values[j] = m_forward_schur(
            seq, std::polar(1.0, 2.0 * std::numbers::pi * j / 256.0));
      const auto phi = schur_phi0(m);
      for (const auto& v : phi.values) CHECK(std::abs(v) <= bound + 1e-12);
    }
  }
}

TEST_CASE("extract_verblunsky") {
  SUBCASE("zero Schur function gives zero coefficients") {
    CircleGrid phi;
    phi.values.assign(64, Complex(0.0));
    const auto res = extract_verblunsky(phi, 4, 4.0);
    REQUIRE(res.alpha_hat.size() == 4);
    for (const auto& a : res.alpha_hat) CHECK(std::abs(a) < 1e-15);
    CHECK_FALSE(res.failed);
  }
  SUBCASE("constant -1/2 gives alpha = (1/2, 0, ...)") {
    CircleGrid phi;
    phi.values.assign(256, Complex(-0.5));
    const auto res = extract_verblunsky(phi, 3, 4.0);
    REQUIRE(res.alpha_hat.size() >= 2);
    CHECK(std::abs(res.alpha_hat[0] - 0.5) < 1e-13);
    CHECK(std::abs(res.alpha_hat[1]) < 1e-13);
    CHECK(res.residuals[0] < 1e-13);
  }
  SUBCASE("analyticity residuals small for exact forward data") {
    const auto seq = sample_class_member(kParams, 6, 9);
    const auto set = find_resonances(pi_polynomial(seq));
    const auto rec = reconstruct(set, 2048, seq.size(), kParams);
    for (const double r : rec.residuals) CHECK(r <= 1e-8);
  }
}

TEST_CASE("reconstruct round trips") {
  SUBCASE("empty set") {
    const auto rec = reconstruct(ResonanceSet{}, 256, 4, kParams);
    CHECK(rec.psi0_zero == doctest::Approx(1.0).epsilon(1e-14));
    for (const auto& a : rec.alpha_hat) CHECK(std::abs(a) < 1e-14);
  }
  SUBCASE("single resonance at -2") {
    ResonanceSet set{{{Complex(-2.0, 0.0), 1}}};
    const auto rec = reconstruct(set, 1024, 4, kParams);
    CHECK(std::abs(rec.alpha_hat[0] - 0.5) < 1e-9);
    for (std::size_t k = 1; k < rec.alpha_hat.size(); ++k)
      CHECK(std::abs(rec.alpha_hat[k]) < 1e-9);
  }
  SUBCASE("complex two-coefficient sequence") {
    VerblunskySequence seq({{0.3, -0.4}, {-0.1, 0.25}}, kParams);
    CHECK(roundtrip_error(seq, 2048) < 1e-8);
  }
  SUBCASE("random class member N=6 at M=4096") {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto seq = sample_class_member(kParams, 6, s);
      CHECK(roundtrip_error(seq, 4096) < 1e-6);
    }
  }
  SUBCASE("psi0_zero matches C_0 of the generating sequence") {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto seq = sample_class_member(kParams, 6, s + 50);
      const auto set = find_resonances(pi_polynomial(seq));
      const auto rec = reconstruct(set, 2048, seq.size(), kParams);
      CHECK(std::abs(rec.psi0_zero - rho_data(seq).c0) < 1e-9);
    }
  }
  SUBCASE("doubling the grid does not increase the error") {
    const auto seq = sample_class_member(kParams, 6, 23);
    double prev = 1e300;
    for (std::size_t m : {512, 1024, 2048, 4096}) {
      const double err = std::max(roundtrip_error(seq, m), 1e-12);
      CHECK(err <= prev);
      prev = err;
    }
  }
}
