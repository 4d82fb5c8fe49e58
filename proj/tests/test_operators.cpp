#include <doctest.h>

#include <random>

#include "vww/operators.hpp"
#include "vww/oracles.hpp"

using namespace vww;

namespace {

double max_diff(const SpectralField& a, const SpectralField& b) {
    return (a.coeffs() - b.coeffs()).abs().maxCoeff();
}

} // namespace

TEST_CASE("hilbert transform sends cos(kx) to sin(kx)") {
    const Grid g(32);
    const Eigen::ArrayXd x = g.points();
    for (int k : {1, 2, 3}) {
        const SpectralField hc = hilbert(forward_transform((k * x).cos(), g));
        CHECK((inverse_transform(hc) - (k * x).sin()).abs().maxCoeff() < 1e-13);
    }

    // Constants are annihilated (sgn(0) = 0).
    const SpectralField c = forward_transform(Eigen::ArrayXd::Constant(32, 2.5), g);
    CHECK(hilbert(c).max_abs() == 0.0);
}

TEST_CASE("hilbert squared is minus identity on mean-zero fields") {
    std::mt19937_64 rng(5);
    for (int n : {8, 32, 128}) {
        const Grid g(n);
        const SpectralField f = oracles::random_real_field(g, rng, g.max_wavenumber() - 1);
        SpectralField hh = hilbert(hilbert(f));
        hh.coeffs() += f.coeffs();
        CHECK(hh.max_abs() < 1e-12);
    }
}

TEST_CASE("lambda_pow basics") {
    const Grid g(32);
    const Eigen::ArrayXd x = g.points();

    // Lambda cos(2x) = 2 cos(2x).
    const SpectralField l1 = lambda_pow(forward_transform((2.0 * x).cos(), g), 1.0);
    CHECK((inverse_transform(l1) - 2.0 * (2.0 * x).cos()).abs().maxCoeff() < 1e-13);

    // Lambda^3 sin(x) = sin(x).
    const SpectralField l3 = lambda_pow(forward_transform(x.sin(), g), 3.0);
    CHECK((inverse_transform(l3) - x.sin()).abs().maxCoeff() < 1e-12);

    // Fractional power matches the direct per-mode loop.
    std::mt19937_64 rng(9);
    const SpectralField f = oracles::random_real_field(g, rng, g.max_wavenumber() - 1);
    CHECK(max_diff(lambda_pow(f, 0.5), oracles::lambda_pow(f, 0.5)) < 1e-13);

    // Negative powers require mean-zero fields.
    SpectralField with_mean = f;
    with_mean.set_coeff(0, 1.0);
    CHECK_THROWS_AS(lambda_pow(with_mean, -0.5), SingularModeError);
    CHECK_NOTHROW(lambda_pow(f, -0.5));

    // Lambda^0 is the mean-zero projection, so powers compose on mean-zero.
    CHECK(std::abs(lambda_pow(with_mean, 0.0).mean()) == 0.0);
}

TEST_CASE("derivative basics and the composition identity") {
    const Grid g(32);
    const Eigen::ArrayXd x = g.points();

    const SpectralField ds = derivative(forward_transform(x.sin(), g), 1);
    CHECK((inverse_transform(ds) - x.cos()).abs().maxCoeff() < 1e-13);

    const SpectralField d2c = derivative(forward_transform((3.0 * x).cos(), g), 2);
    CHECK((inverse_transform(d2c) + 9.0 * (3.0 * x).cos()).abs().maxCoeff() < 1e-12);

    // dx^0 is the identity, including the mean.
    SpectralField cm(g);
    cm.set_coeff(0, 1.25);
    CHECK(max_diff(derivative(cm, 0), cm) == 0.0);

    // Lambda = H dx = dx H per mode.
    std::mt19937_64 rng(13);
    const SpectralField f = oracles::random_real_field(g, rng, g.max_wavenumber() - 1);
    CHECK(max_diff(derivative(hilbert(f), 1), lambda_pow(f, 1.0)) < 1e-12);
    CHECK(max_diff(hilbert(derivative(f, 1)), lambda_pow(f, 1.0)) < 1e-12);
}

TEST_CASE("lambda semigroup and adjointness") {
    std::mt19937_64 rng(21);
    for (int n : {16, 64, 256}) {
        const Grid g(n);
        // k^-4 decay keeps Lambda^4 outputs O(1), so absolute 1e-12 is fair.
        const SpectralField f = oracles::random_real_field(g, rng, g.max_wavenumber() - 1, 4.0);
        const SpectralField h = oracles::random_real_field(g, rng, g.max_wavenumber() - 1, 4.0);

        for (double s : {0.5, 1.0, 1.5, 2.0})
            for (double t : {0.5, 1.0, 1.5, 2.0})
                CHECK(max_diff(lambda_pow(lambda_pow(f, s), t), lambda_pow(f, s + t)) < 1e-12);

        CHECK(inner_product(hilbert(f), h) == doctest::Approx(-inner_product(f, hilbert(h)))
                                                  .epsilon(1e-12));
        CHECK(inner_product(lambda_pow(f, 1.5), h) ==
              doctest::Approx(inner_product(f, lambda_pow(h, 1.5))).epsilon(1e-12));
    }
}

TEST_CASE("MultiplierSpec parity validation and apply") {
    const Grid g(32);

    CHECK_NOTHROW(MultiplierSpec::hilbert().validate_on(g));
    CHECK_NOTHROW(MultiplierSpec::lambda_pow(1.5).validate_on(g));
    CHECK_NOTHROW(MultiplierSpec::derivative(3).validate_on(g));

    // A symbol with a broken parity label is rejected at validation.
    const MultiplierSpec wrong("bogus", Parity::Odd,
                               [](int k) { return Complex(std::abs(k)); });
    CHECK_THROWS_AS(wrong.validate_on(g), CorruptedFieldError);

    // apply() agrees with the free functions, including Nyquist zeroing.
    std::mt19937_64 rng(2);
    const SpectralField f = oracles::random_real_field(g, rng, g.max_wavenumber() - 1);
    CHECK(max_diff(MultiplierSpec::hilbert().apply(f), hilbert(f)) == 0.0);
    CHECK(max_diff(MultiplierSpec::derivative(2).apply(f), derivative(f, 2)) < 1e-15);

    SpectralField with_nyquist(g);
    with_nyquist.set_coeff(g.max_wavenumber(), 1.0);
    CHECK(MultiplierSpec::derivative(1).apply(with_nyquist).max_abs() == 0.0);
    CHECK(hilbert(with_nyquist).max_abs() == 0.0);
}

TEST_CASE("operators preserve conjugate symmetry") {
    std::mt19937_64 rng(31);
    const Grid g(64);
    const SpectralField f = oracles::random_real_field(g, rng, g.max_wavenumber() - 1);
    CHECK(hilbert(f).symmetry_defect() < 1e-13);
    CHECK(lambda_pow(f, 2.5).symmetry_defect() < 1e-13);
    CHECK(derivative(f, 3).symmetry_defect() < 1e-13);
    const SpectralField gfld = oracles::random_real_field(g, rng, g.dealias_cutoff());
    CHECK(commutator_hilbert(f, gfld).symmetry_defect() < 1e-12);
    CHECK(commutator_dxx(f, gfld).symmetry_defect() < 1e-12);
}

TEST_CASE("commutator_hilbert against the convolution oracle") {
    const Grid g(64);
    const Eigen::ArrayXd x = g.points();

    // Constants commute with H.
    const SpectralField c = forward_transform(Eigen::ArrayXd::Constant(64, 3.0), g);
    std::mt19937_64 rng(8);
    const SpectralField any = oracles::random_real_field(g, rng, g.dealias_cutoff());
    CHECK(commutator_hilbert(c, any).max_abs() < 1e-14);

    const SpectralField f = forward_transform(x.cos(), g);
    const SpectralField h = forward_transform((2.0 * x).cos(), g);
    CHECK(max_diff(commutator_hilbert(f, h), oracles::commutator_hilbert(f, h)) < 1e-13);

    const SpectralField s1 = forward_transform(x.sin(), g);
    CHECK(max_diff(commutator_hilbert(s1, s1), oracles::commutator_hilbert(s1, s1)) < 1e-12);
}

TEST_CASE("commutator_dxx forms agree") {
    const Grid g(64);
    const Eigen::ArrayXd x = g.points();

    std::mt19937_64 rng(14);
    const SpectralField c = forward_transform(Eigen::ArrayXd::Constant(64, -1.2), g);
    const SpectralField any = oracles::random_real_field(g, rng, g.dealias_cutoff());
    CHECK(commutator_dxx(c, any).max_abs() < 1e-14);

    // f = g = cos x: [dxx, f]g = -cos^2 x + 2 sin^2 x = 1/2 - (3/2) cos 2x.
    const SpectralField f = forward_transform(x.cos(), g);
    const SpectralField got = commutator_dxx(f, f);
    CHECK(std::abs(got.coeff(0) - Complex(0.5)) < 1e-13);
    CHECK(std::abs(got.coeff(2) - Complex(-0.75)) < 1e-13);
    CHECK(std::abs(got.coeff(1)) < 1e-14);
    CHECK(max_diff(got, oracles::commutator_dxx(f, f)) < 1e-13);

    // Leibniz form equals the direct form on random dealias-band fields.
    const SpectralField u = oracles::random_real_field(g, rng, g.dealias_cutoff());
    const SpectralField v = oracles::random_real_field(g, rng, g.dealias_cutoff());
    CHECK(max_diff(commutator_dxx(u, v), oracles::commutator_dxx(u, v)) < 1e-12);
}
