#include <doctest.h>

#include <random>

#include "vww/oracles.hpp"
#include "vww/spectral.hpp"

using namespace vww;

namespace {

Eigen::ArrayXd random_samples(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::ArrayXd v(n);
    for (int i = 0; i < n; ++i) v[i] = dist(rng);
    return v;
}

double max_diff(const SpectralField& a, const SpectralField& b) {
    return (a.coeffs() - b.coeffs()).abs().maxCoeff();
}

} // namespace

TEST_CASE("grid validation and layout") {
    CHECK_THROWS_AS(Grid(7), ShapeError);
    CHECK_THROWS_AS(Grid(6), ShapeError);
    CHECK_THROWS_AS(Grid(0), ShapeError);

    const Grid g(16);
    CHECK(g.size() == 16);
    CHECK(g.max_wavenumber() == 8);
    CHECK(g.min_wavenumber() == -7);
    CHECK(g.points()[0] == doctest::Approx(-Grid::pi()));
    CHECK(g.points()[8] == doctest::Approx(0.0));
    CHECK(g.index_of(-1) == 15);
    CHECK(g.wavenumber_at(15) == -1);
    CHECK(g.wavenumber_at(8) == 8);

    // 3K < N strictly, so N=64 keeps |k| <= 21 and N=12 keeps |k| <= 3.
    CHECK(Grid(64).dealias_cutoff() == 21);
    CHECK(Grid(12).dealias_cutoff() == 3);
    CHECK(Grid(8).dealias_cutoff() == 2);
}

TEST_CASE("forward transform of single modes") {
    const Grid g(32);
    const Eigen::ArrayXd x = g.points();

    SpectralField f = forward_transform(x.cos(), g);
    CHECK(std::abs(f.coeff(1) - Complex(0.5)) < 1e-14);
    CHECK(std::abs(f.coeff(-1) - Complex(0.5)) < 1e-14);
    f.set_coeff(1, 0.0);
    f.set_coeff(-1, 0.0);
    CHECK(f.max_abs() < 1e-14);

    const SpectralField ones = forward_transform(Eigen::ArrayXd::Ones(32), g);
    CHECK(std::abs(ones.coeff(0) - Complex(1.0)) < 1e-15);
    CHECK(ones.max_abs() == doctest::Approx(1.0));
}

TEST_CASE("forward transform matches the direct DFT oracle") {
    std::mt19937_64 rng(7);
    for (int n : {8, 16, 24, 64}) {
        const Grid g(n);
        const Eigen::ArrayXd samples = random_samples(n, rng);
        CHECK(max_diff(forward_transform(samples, g), oracles::dft_forward(samples, g)) < 1e-13);
    }
}

TEST_CASE("inverse transform of single modes") {
    const Grid g(32);
    SpectralField f(g);
    f.set_coeff(1, 0.5);
    f.set_coeff(-1, 0.5);
    CHECK((inverse_transform(f) - g.points().cos()).abs().maxCoeff() < 1e-14);

    CHECK(inverse_transform(SpectralField(g)).abs().maxCoeff() == 0.0);
}

TEST_CASE("round trips to 1e-12 across grid sizes") {
    std::mt19937_64 rng(42);
    for (int n = 8; n <= 256; n *= 2) {
        const Grid g(n);

        const Eigen::ArrayXd samples = random_samples(n, rng);
        const Eigen::ArrayXd back = inverse_transform(forward_transform(samples, g));
        CHECK((back - samples).abs().maxCoeff() < 1e-12);

        const SpectralField spec = oracles::random_real_field(g, rng, g.max_wavenumber() - 1);
        CHECK(max_diff(forward_transform(inverse_transform(spec), g), spec) < 1e-12);
    }
}

TEST_CASE("transform errors") {
    const Grid g(16);
    CHECK_THROWS_AS(forward_transform(Eigen::ArrayXd::Zero(15), g), ShapeError);

    SpectralField broken(g);
    broken.set_coeff(2, Complex(1.0, 0.0));
    broken.set_coeff(-2, Complex(0.5, 0.0)); // violates conjugate symmetry
    CHECK_THROWS_AS(inverse_transform(broken), CorruptedFieldError);

    SpectralField imag_mean(g);
    imag_mean.set_coeff(0, Complex(0.0, 1e-3));
    CHECK_THROWS_AS(inverse_transform(imag_mean), CorruptedFieldError);
}

TEST_CASE("project_mean_zero") {
    const Grid g(16);
    SpectralField f(g);
    f.set_coeff(0, 3.7);
    CHECK(project_mean_zero(f).max_abs() == 0.0);

    // 1 + cos x -> cos x, and idempotence.
    const SpectralField g1 = forward_transform(1.0 + g.points().cos(), g);
    const SpectralField p1 = project_mean_zero(g1);
    CHECK(std::abs(p1.coeff(0)) == 0.0);
    CHECK(std::abs(p1.coeff(1) - Complex(0.5)) < 1e-14);
    CHECK(max_diff(project_mean_zero(p1), p1) == 0.0);
}

TEST_CASE("project_mean_zero commutes with the transforms") {
    std::mt19937_64 rng(77);
    const Grid g(32);
    const Eigen::ArrayXd samples = random_samples(32, rng);
    const Eigen::ArrayXd centered = samples - samples.mean();
    CHECK(max_diff(forward_transform(centered, g),
                   project_mean_zero(forward_transform(samples, g))) < 1e-14);
}

TEST_CASE("dealiased product identities") {
    const Grid g(32);
    const Eigen::ArrayXd x = g.points();
    const SpectralField c1 = forward_transform(x.cos(), g);

    // cos^2 = 1/2 + cos(2x)/2.
    SpectralField prod = dealiased_product(c1, c1);
    CHECK(std::abs(prod.coeff(0) - Complex(0.5)) < 1e-14);
    CHECK(std::abs(prod.coeff(2) - Complex(0.25)) < 1e-14);
    CHECK(std::abs(prod.coeff(1)) < 1e-14);

    // Multiplying by zero annihilates.
    CHECK(dealiased_product(c1, SpectralField(g)).max_abs() == 0.0);

    // Grid mismatch is rejected.
    const Grid g2(64);
    CHECK_THROWS_AS(dealiased_product(c1, SpectralField(g2)), GridMismatchError);
}

TEST_CASE("dealiased product matches the exact truncated convolution") {
    const Grid g(32);
    const Eigen::ArrayXd x = g.points();
    const SpectralField a = forward_transform((2.0 * x).cos(), g);
    const SpectralField b = forward_transform((3.0 * x).sin(), g);
    CHECK(max_diff(dealiased_product(a, b), oracles::truncated_convolution(a, b)) < 1e-14);

    std::mt19937_64 rng(3);
    for (int n : {12, 48, 64}) {
        const Grid grid(n);
        const SpectralField u = oracles::random_real_field(grid, rng, grid.max_wavenumber() - 1);
        const SpectralField v = oracles::random_real_field(grid, rng, grid.max_wavenumber() - 1);
        CHECK(max_diff(dealiased_product(u, v), oracles::truncated_convolution(u, v)) < 1e-12);
    }
}

TEST_CASE("dealiased product is symmetric and bilinear") {
    std::mt19937_64 rng(17);
    const Grid g(64);
    const SpectralField a = oracles::random_real_field(g, rng, g.dealias_cutoff());
    const SpectralField b = oracles::random_real_field(g, rng, g.dealias_cutoff());
    const SpectralField c = oracles::random_real_field(g, rng, g.dealias_cutoff());

    CHECK(max_diff(dealiased_product(a, b), dealiased_product(b, a)) < 1e-13);

    // a*(1.5 b + c) = 1.5 a*b + a*c.
    SpectralField combo = b;
    combo.coeffs() = 1.5 * b.coeffs() + c.coeffs();
    SpectralField lhs = dealiased_product(a, combo);
    SpectralField rhs_sum = dealiased_product(a, b);
    rhs_sum.coeffs() = 1.5 * rhs_sum.coeffs() + dealiased_product(a, c).coeffs();
    CHECK(max_diff(lhs, rhs_sum) < 1e-12);
}

TEST_CASE("parseval inner product") {
    const Grid g(32);
    const SpectralField c1 = forward_transform(g.points().cos(), g);
    // ||cos||_{L2}^2 = pi.
    CHECK(inner_product(c1, c1) == doctest::Approx(Grid::pi()).epsilon(1e-13));
}
