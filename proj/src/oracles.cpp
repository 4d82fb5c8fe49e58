#include "vww/oracles.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace vww::oracles {

namespace {

int sgn(int k) { return (k > 0) - (k < 0); }

} // namespace

SpectralField dft_forward(const Eigen::ArrayXd& samples, const Grid& grid) {
    const int n = grid.size();
    if (samples.size() != n) throw ShapeError("oracle DFT: sample length mismatch");
    const Eigen::ArrayXd x = grid.points();
    SpectralField out(grid);
    for (int k = grid.min_wavenumber(); k <= grid.max_wavenumber(); ++k) {
        Complex acc = 0.0;
        for (int j = 0; j < n; ++j)
            acc += samples[j] * std::polar(1.0, -k * x[j]);
        out.set_coeff(k, acc / static_cast<double>(n));
    }
    return out;
}

Eigen::ArrayXd dft_inverse(const SpectralField& field) {
    const Grid& grid = field.grid();
    const Eigen::ArrayXd x = grid.points();
    Eigen::ArrayXd out(grid.size());
    for (int j = 0; j < grid.size(); ++j) {
        Complex acc = 0.0;
        for (int k = grid.min_wavenumber(); k <= grid.max_wavenumber(); ++k)
            acc += field.coeff(k) * std::polar(1.0, k * x[j]);
        out[j] = acc.real();
    }
    return out;
}

SpectralField truncated_convolution(const SpectralField& a, const SpectralField& b) {
    if (a.grid() != b.grid())
        throw GridMismatchError("oracle convolution requires a shared grid");
    const Grid& grid = a.grid();
    const int cut = grid.dealias_cutoff();
    SpectralField out(grid);
    for (int k = -cut; k <= cut; ++k) {
        Complex acc = 0.0;
        for (int m = -cut; m <= cut; ++m) {
            if (std::abs(k - m) > cut) continue;
            acc += a.coeff(m) * b.coeff(k - m);
        }
        out.set_coeff(k, acc);
    }
    return out;
}

SpectralField apply_symbol(const SpectralField& f,
                           const std::function<Complex(int)>& symbol) {
    SpectralField out(f.grid());
    for (int i = 0; i < f.size(); ++i)
        out.coeffs()[i] = symbol(f.grid().wavenumber_at(i)) * f.coeffs()[i];
    return out;
}

SpectralField hilbert(const SpectralField& f) {
    return apply_symbol(f, [](int k) { return Complex(0.0, -sgn(k)); });
}

SpectralField lambda_pow(const SpectralField& f, double s) {
    return apply_symbol(f, [s](int k) {
        return k == 0 ? Complex(0.0) : Complex(std::pow(std::abs(k), s));
    });
}

SpectralField derivative(const SpectralField& f, int n) {
    return apply_symbol(f, [n](int k) { return std::pow(Complex(0.0, k), n); });
}

SpectralField commutator_hilbert(const SpectralField& f, const SpectralField& g) {
    SpectralField out = oracles::hilbert(truncated_convolution(f, g));
    out.coeffs() -= truncated_convolution(f, oracles::hilbert(g)).coeffs();
    return out;
}

SpectralField commutator_dxx(const SpectralField& f, const SpectralField& g) {
    SpectralField out = oracles::derivative(truncated_convolution(f, g), 2);
    out.coeffs() -= truncated_convolution(f, oracles::derivative(g, 2)).coeffs();
    return out;
}

namespace {

SpectralField rhs_terms(const WaveState& s, double beta, double visc45, double visc6,
                        bool full_terms, double alpha1, double alpha2) {
    const SpectralField f = [&] {
        SpectralField g = s.f;
        g.coeffs()[0] = 0.0;
        return g;
    }();
    const SpectralField ft = [&] {
        SpectralField g = s.ft;
        g.coeffs()[0] = 0.0;
        return g;
    }();

    const SpectralField hft = oracles::hilbert(ft);
    const SpectralField fxx = oracles::derivative(f, 2);
    const SpectralField hfxx = oracles::hilbert(fxx);

    SpectralField acc = oracles::lambda_pow(truncated_convolution(hft, hft), 1.0);
    acc.coeffs() = -acc.coeffs();
    acc.coeffs() += oracles::derivative(oracles::commutator_hilbert(f, oracles::lambda_pow(f, 1.0)), 1).coeffs();
    acc.coeffs() +=
        beta * oracles::derivative(oracles::commutator_hilbert(f, oracles::lambda_pow(f, 3.0)), 1).coeffs();
    acc.coeffs() += visc45 * oracles::derivative(oracles::commutator_hilbert(hft, hfxx), 1).coeffs();
    acc.coeffs() += visc45 * oracles::lambda_pow(truncated_convolution(hft, hfxx), 1.0).coeffs();
    acc.coeffs() -= visc6 * oracles::derivative(oracles::commutator_dxx(f, hft), 1).coeffs();

    if (full_terms) {
        const SpectralField ldxf = oracles::lambda_pow(oracles::derivative(f, 1), 1.0);
        acc.coeffs() += alpha1 * alpha2 * oracles::derivative(oracles::commutator_dxx(f, ldxf), 1).coeffs();
        acc.coeffs() -= alpha2 * alpha2 * oracles::derivative(oracles::commutator_hilbert(fxx, fxx), 1).coeffs();
    }
    return acc;
}

} // namespace

SpectralField rhs_simplified(const WaveState& s, const ModelParams& p) {
    SpectralField acc = rhs_terms(s, p.beta, p.delta, p.delta, false, 0.0, 0.0);
    acc.coeffs() *= p.epsilon;
    return acc;
}

SpectralField rhs_full(const WaveState& s, const ModelParams& p) {
    SpectralField acc = rhs_terms(s, p.beta, p.alpha2, p.alpha1, true, p.alpha1, p.alpha2);
    acc.coeffs() *= p.epsilon;
    return acc;
}

Eigen::Matrix2d expm(const Eigen::Matrix2d& a) { return a.exp(); }

double quadrature_sobolev_norm(const SpectralField& f, double s) {
    const Eigen::ArrayXd g = dft_inverse(s == 0.0 ? f : oracles::lambda_pow(f, s));
    return std::sqrt((g * g).sum() * f.grid().spacing());
}

SpectralField random_real_field(const Grid& grid, std::mt19937_64& rng, int kmax,
                                double decay, double amplitude) {
    SpectralField out(grid);
    kmax = std::min(kmax, grid.max_wavenumber() - 1);
    for (int k = 1; k <= kmax; ++k) {
        // Platform-independent uniforms from the raw 64-bit stream.
        const double u1 = static_cast<double>(rng() >> 11) * 0x1p-53;
        const double u2 = static_cast<double>(rng() >> 11) * 0x1p-53;
        const double mag = amplitude * std::pow(k, -decay) * u1;
        const Complex c = std::polar(mag, 2.0 * Grid::pi() * u2);
        out.set_coeff(k, c);
        out.set_coeff(-k, std::conj(c));
    }
    return out;
}

} // namespace vww::oracles
