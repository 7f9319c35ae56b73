#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "berezin/gaussian_calculus.hpp"
#include "berezin/quadrature.hpp"

using namespace berezin;

namespace {

std::int64_t ulps(double a, double b) {
  const auto d = std::bit_cast<std::int64_t>(a) - std::bit_cast<std::int64_t>(b);
  return d < 0 ? -d : d;
}

}  // namespace

TEST_CASE("eval of the Gaussian symbol") {
  const auto z = make_point({{0.5, 0.7}});
  CHECK(eval(GaussianSymbol(1, 1.0, 0.0), z).real() == 1.0);
  CHECK(eval(GaussianSymbol(1, 1.0, 1.0), make_point({{0.0, 0.0}})).real() == 1.0);
  // (z + zbar)^2 = 1 at z = 0.5 + 0.7i; mpmath: 0.778800783071404868...
  CHECK(eval(GaussianSymbol(1, 1.0, 1.0), z).real() == doctest::Approx(0.77880078307140487).epsilon(1e-15));
  CHECK(eval(GaussianSymbol(1, 1.0, 1.0), z).imag() == 0.0);
}

TEST_CASE("eval errors") {
  const GaussianSymbol g(2, 1.0, 1.0);
  CHECK_THROWS_AS(eval(g, make_point({{0.1, 0.0}})), DimensionMismatch);
  CHECK_THROWS_AS(eval(g, make_point({{NAN, 0.0}, {0.0, 0.0}})), DomainError);
  CHECK_THROWS_AS(GaussianSymbol(0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(GaussianSymbol(1, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(GaussianSymbol(1, 1.0, -0.1), DomainError);
  CHECK_THROWS_AS(GaussianSymbol(1, INFINITY, 1.0), DomainError);
  CHECK_THROWS_AS(QuantParams(0.0), DomainError);
}

TEST_CASE("symbol depends only on the real part") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const GaussianSymbol g(2, 1.0 + std::abs(u(rng)), std::abs(u(rng)));
    const auto z = make_point({{u(rng), u(rng)}, {u(rng), u(rng)}});
    ComplexPoint shifted = z;
    shifted(trial % 2) += std::complex<double>(0.0, u(rng));
    CHECK(eval(g, z) == eval(g, shifted));
  }
}

TEST_CASE("closed-form Berezin transform") {
  const GaussianSymbol out = berezin_transform_closed(GaussianSymbol(1, 1.0, 1.0), QuantParams(1.0));
  CHECK(out.amplitude() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(out.compression() == 0.5);

  const GaussianSymbol constant = berezin_transform_closed(GaussianSymbol(1, 1.0, 0.0), QuantParams(3.0));
  CHECK(constant.amplitude() == 1.0);
  CHECK(constant.compression() == 0.0);

  const GaussianSymbol near = berezin_transform_closed(GaussianSymbol(1, 1.0, 1.0), QuantParams(1e4));
  CHECK(near.compression() == doctest::Approx(1e4 / 10001.0).epsilon(1e-15));
  CHECK(near.amplitude() == doctest::Approx(std::sqrt(1e4 / 10001.0)).epsilon(1e-15));
  CHECK(near.amplitude() == doctest::Approx(0.99995).epsilon(1e-8));
}

TEST_CASE("closed form agrees with the integral definition") {
  // mpmath adaptive quadrature of (alpha/pi) * integral exp(-lambda x^2 - alpha |w - z|^2) dA.
  const GaussianSymbol g(1, 1.0, 2.0);
  const double value = eval(berezin_transform_closed(g, QuantParams(3.0)), make_point({{0.4, 0.1}})).real();
  CHECK(value == doctest::Approx(0.6392799514357761).epsilon(1e-14));
}

TEST_CASE("transform properties on a parameter grid") {
  for (int n : {1, 2, 3}) {
    for (double lambda : {0.0, 0.1, 1.0, 7.5}) {
      for (double alpha : {0.2, 1.0, 30.0}) {
        const GaussianSymbol g(n, 2.5, lambda);
        const QuantParams q(alpha);
        const GaussianSymbol out = berezin_transform_closed(g, q);
        CHECK(out.dim() == n);
        if (lambda == 0.0) {
          CHECK(out == g);
        } else {
          CHECK(out.compression() > 0.0);
          CHECK(out.compression() < std::min(alpha, lambda));
        }
        // Linear in the amplitude up to the rounding of one product.
        const GaussianSymbol scaled = berezin_transform_closed(g.scaled(3.0), q);
        CHECK(scaled.compression() == out.compression());
        CHECK(ulps(scaled.amplitude(), out.scaled(3.0).amplitude()) <= 1);
      }
    }
  }
}

TEST_CASE("classical limit") {
  const double lambda = 1.3;
  for (int k = 2; k <= 6; ++k) {
    const double alpha = std::pow(10.0, k);
    const GaussianSymbol out = berezin_transform_closed(GaussianSymbol(2, 1.0, lambda), QuantParams(alpha));
    CHECK(std::abs(out.compression() - lambda) <= lambda * lambda / alpha);
    CHECK(std::abs(out.amplitude() - 1.0) <= 2.0 * lambda / alpha);
  }
}

TEST_CASE("heat evolution equals the transform") {
  const GaussianSymbol heat = heat_evolve(GaussianSymbol(1, 1.0, 1.0), QuantParams(1.0));
  const GaussianSymbol closed = berezin_transform_closed(GaussianSymbol(1, 1.0, 1.0), QuantParams(1.0));
  CHECK(heat.compression() == closed.compression());
  CHECK(ulps(heat.amplitude(), closed.amplitude()) <= 1);
  for (double alpha : {0.3, 1.0, 9.0}) {
    CHECK(heat_evolve(GaussianSymbol(2, 4.0, 0.0), QuantParams(alpha)) == GaussianSymbol(2, 4.0, 0.0));
  }
  const GaussianSymbol out = heat_evolve(GaussianSymbol(2, 1.0, 2.0), QuantParams(2.0));
  CHECK(out.amplitude() == 0.5);
  CHECK(out.compression() == 1.0);
  for (double lambda : {0.3, 1.0, 4.0, 12.0}) {
    for (double alpha : {0.3, 2.0, 50.0}) {
      for (int n : {1, 2, 5}) {
        const GaussianSymbol g(n, 1.0, lambda);
        const QuantParams q(alpha);
        const GaussianSymbol a = heat_evolve(g, q);
        const GaussianSymbol b = berezin_transform_closed(g, q);
        CHECK(a.amplitude() == doctest::Approx(b.amplitude()).epsilon(1e-15));
        CHECK(a.compression() == doctest::Approx(b.compression()).epsilon(1e-15));
      }
    }
  }
  CHECK_THROWS_AS(heat_flow(GaussianSymbol(1, 1.0, 1.0), -1.0), DomainError);
}

TEST_CASE("composition adds reciprocal widths") {
  const GaussianSymbol two_step = transform_compose(GaussianSymbol(1, 1.0, 1.0), QuantParams(1.0), QuantParams(1.0));
  CHECK(two_step.compression() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const GaussianSymbol zero = transform_compose(GaussianSymbol(1, 2.0, 0.0), QuantParams(1.0), QuantParams(5.0));
  CHECK(zero == GaussianSymbol(1, 2.0, 0.0));

  // lambda = 2 through alpha = 2 twice: widths 2 -> 1 -> 2/3, amplitude (1/2 * 2/3)^{1/2}.
  const GaussianSymbol g(1, 1.0, 2.0);
  const GaussianSymbol c = transform_compose(g, QuantParams(2.0), QuantParams(2.0));
  CHECK(c.compression() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(c.amplitude() == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-15));
  const GaussianSymbol single = heat_flow(g, 0.5 + 0.5);
  CHECK(single.compression() == doctest::Approx(c.compression()).epsilon(1e-15));
  CHECK(single.amplitude() == doctest::Approx(c.amplitude()).epsilon(1e-15));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.05, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double lambda = u(rng), a1 = u(rng), a2 = u(rng);
    const GaussianSymbol r = transform_compose(GaussianSymbol(1, 1.0, lambda), QuantParams(a1), QuantParams(a2));
    const double expected = 1.0 / lambda + 1.0 / a1 + 1.0 / a2;
    CHECK(std::abs(1.0 / r.compression() - expected) <= 1e-12 * expected);
  }
}

TEST_CASE("first-order Taylor remainder") {
  for (double alpha : {1.0, 10.0, 1e3}) {
    CHECK(taylor_remainder(GaussianSymbol(1, 1.0, 0.0), QuantParams(alpha), make_point({{0.4, 0.2}})) == 0.0);
  }
  // mpmath references at z = 0, lambda = 1.
  const GaussianSymbol g(1, 5.0, 1.0);
  const double r10 = taylor_remainder(g, QuantParams(10.0), make_point({{0.0, 0.0}}));
  const double r20 = taylor_remainder(g, QuantParams(20.0), make_point({{0.0, 0.0}}));
  const double r40 = taylor_remainder(g, QuantParams(40.0), make_point({{0.0, 0.0}}));
  CHECK(r10 == doctest::Approx(3.4625892455923154e-3).epsilon(1e-12));
  CHECK(r20 == doctest::Approx(9.0007294853317936e-4).epsilon(1e-11));
  CHECK(r40 == doctest::Approx(2.2959664958960650e-4).epsilon(1e-10));
  CHECK(r10 / r20 == doctest::Approx(4.0).epsilon(0.05));
  CHECK(r20 / r40 == doctest::Approx(4.0).epsilon(0.05));

  const double r = taylor_remainder(g, QuantParams(100.0), make_point({{0.3, 0.0}}));
  CHECK(r < 1e-3);
  CHECK(r == doctest::Approx(2.2164823685848162e-5).epsilon(1e-8));
  CHECK_THROWS_AS(taylor_remainder(g, QuantParams(1.0), make_point({{0.3, 0.0}, {0.0, 0.0}})), DimensionMismatch);
}

TEST_CASE("Gaussian moments") {
  CHECK(gaussian_moment(0, 2.0) == doctest::Approx(std::sqrt(std::numbers::pi / 2.0)).epsilon(1e-15));
  CHECK(gaussian_moment(2, 1.0) == doctest::Approx(0.88622692545275801).epsilon(1e-15));
  CHECK(gaussian_moment(4, 1.0) == doctest::Approx(1.3293403881791370).epsilon(1e-15));
  CHECK_THROWS_AS(gaussian_moment(3, 1.0), DomainError);
  CHECK_THROWS_AS(gaussian_moment(-2, 1.0), DomainError);
  CHECK_THROWS_AS(gaussian_moment(2, 0.0), DomainError);
  CHECK(gaussian_moment_vanishes(3));
  CHECK_FALSE(gaussian_moment_vanishes(4));
}

TEST_CASE("moment formula equals quadrature") {
  const QuadratureRule1D rule = gauss_hermite(20);
  for (double a : {0.5, 1.0, 2.0}) {
    for (int k = 0; k <= 10; k += 2) {
      const std::vector<QuadratureRule1D> rules{rule};
      const std::vector<double> scales{a};
      const double numeric = integrate([k](std::span<const double> x) { return std::pow(x[0], k); }, rules, scales);
      CHECK(numeric == doctest::Approx(gaussian_moment(k, a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("templated on the scalar") {
  const BasicGaussianSymbol<long double> g(1, 1.0L, 1.0L);
  const auto out = berezin_transform_closed(g, BasicQuantParams<long double>(1.0L));
  CHECK(static_cast<double>(out.compression()) == 0.5);
  CHECK(std::abs(out.amplitude() - std::sqrt(0.5L)) < 1e-18L);
  CHECK(gaussian_moment<long double>(2, 1.0L) == doctest::Approx(0.88622692545275801));
}
