#include "vww/model.hpp"

#include <cmath>
#include <iostream>

namespace vww {

const char* to_string(ModelVariant v) {
    switch (v) {
        case ModelVariant::Linear: return "linear";
        case ModelVariant::Simplified: return "simplified";
        case ModelVariant::Full: return "full";
    }
    return "?";
}

ModelParams ModelParams::linear(double delta, double beta) {
    ModelParams p;
    p.delta = delta;
    p.beta = beta;
    p.alpha1 = p.alpha2 = delta;
    p.variant = ModelVariant::Linear;
    p.validate();
    return p;
}

ModelParams ModelParams::simplified(double delta, double beta, double epsilon) {
    ModelParams p;
    p.delta = delta;
    p.beta = beta;
    p.epsilon = epsilon;
    p.alpha1 = p.alpha2 = delta;
    p.variant = ModelVariant::Simplified;
    p.validate();
    return p;
}

ModelParams ModelParams::full(double alpha1, double alpha2, double beta, double epsilon,
                              double delta) {
    ModelParams p;
    p.alpha1 = alpha1;
    p.alpha2 = alpha2;
    p.beta = beta;
    p.epsilon = epsilon;
    p.delta = delta >= 0.0 ? delta : std::sqrt(alpha1 * alpha2);
    p.variant = ModelVariant::Full;
    p.validate();
    return p;
}

void ModelParams::validate() const {
    if (delta < 0.0 || beta < 0.0 || epsilon < 0.0 || alpha1 < 0.0 || alpha2 < 0.0)
        throw ConfigError("model parameters must be nonnegative");
    if (variant == ModelVariant::Simplified && (alpha1 != delta || alpha2 != delta))
        throw ConfigError("simplified variant requires alpha1 = alpha2 = delta");
    if (delta == 0.0 && variant != ModelVariant::Full) {
        static bool warned = false;
        if (!warned) {
            warned = true;
            std::cerr << "[vww] warning: delta = 0 is outside the damped regime; "
                         "inviscid runs proceed anyway\n";
        }
    }
}

WaveState::WaveState(SpectralField f_, SpectralField ft_, double t_)
    : f(std::move(f_)), ft(std::move(ft_)), t(t_) {
    if (f.grid() != ft.grid())
        throw GridMismatchError("WaveState requires f and ft on the same grid");
}

LinearSymbol linear_symbol(int k, const ModelParams& p) {
    const double ak = std::abs(static_cast<double>(k));
    const double k2 = ak * ak;
    const double k3 = k2 * ak;
    const double k4 = k2 * k2;
    if (p.variant == ModelVariant::Full)
        return {(p.alpha1 + p.alpha2) * k2, ak + p.beta * k3 + p.alpha1 * p.alpha2 * k4};
    return {2.0 * p.delta * k2, ak + p.beta * k3 + p.delta * p.delta * k4};
}

namespace {

// Shared quadratic factors of both nonlinearities, each transformed once.
struct RhsFactors {
    SpectralField f;
    SpectralField hft;   // H f_t
    SpectralField hfxx;  // H dxx f
    SpectralField lf;    // Lambda f
    SpectralField l3f;   // Lambda^3 f
    SpectralField fxx;   // dxx f
};

RhsFactors make_factors(const WaveState& s) {
    if (std::max(std::abs(s.f.mean()), std::abs(s.ft.mean())) > 1e-13)
        std::cerr << "[vww] warning: state at t=" << s.t
                  << " has a nonzero mean mode; projecting it out\n";
    SpectralField f = project_mean_zero(s.f);
    SpectralField ft = project_mean_zero(s.ft);
    SpectralField fxx = derivative(f, 2);
    return {f, hilbert(ft), hilbert(fxx), lambda_pow(f, 1.0), lambda_pow(f, 3.0), fxx};
}

// The six terms shared by the simplified and full right sides, with the two
// viscosity coefficients (on terms 4/5 and 6) passed in.
SpectralField shared_terms(const RhsFactors& q, const ModelParams& p, double visc45,
                           double visc6) {
    SpectralField acc = lambda_pow(dealiased_product(q.hft, q.hft), 1.0);
    acc.coeffs() = -acc.coeffs();

    acc.coeffs() += derivative(commutator_hilbert(q.f, q.lf), 1).coeffs();
    acc.coeffs() += p.beta * derivative(commutator_hilbert(q.f, q.l3f), 1).coeffs();
    acc.coeffs() += visc45 * derivative(commutator_hilbert(q.hft, q.hfxx), 1).coeffs();
    acc.coeffs() += visc45 * lambda_pow(dealiased_product(q.hft, q.hfxx), 1.0).coeffs();
    acc.coeffs() -= visc6 * derivative(commutator_dxx(q.f, q.hft), 1).coeffs();
    return acc;
}

} // namespace

SpectralField nonlinear_rhs_simplified(const WaveState& s, const ModelParams& p) {
    const RhsFactors q = make_factors(s);
    SpectralField acc = shared_terms(q, p, p.delta, p.delta);
    acc.coeffs() *= p.epsilon;
    acc.coeffs()[0] = 0.0;
    return acc;
}

SpectralField nonlinear_rhs_full(const WaveState& s, const ModelParams& p) {
    const RhsFactors q = make_factors(s);
    SpectralField acc = shared_terms(q, p, p.alpha2, p.alpha1);

    const SpectralField ldxf = lambda_pow(derivative(q.f, 1), 1.0);
    acc.coeffs() +=
        p.alpha1 * p.alpha2 * derivative(commutator_dxx(q.f, ldxf), 1).coeffs();
    acc.coeffs() -=
        p.alpha2 * p.alpha2 * derivative(commutator_hilbert(q.fxx, q.fxx), 1).coeffs();

    acc.coeffs() *= p.epsilon;
    acc.coeffs()[0] = 0.0;
    return acc;
}

SpectralField rhs(const WaveState& s, const ModelParams& p) {
    switch (p.variant) {
        case ModelVariant::Linear: return SpectralField(s.grid());
        case ModelVariant::Simplified: return nonlinear_rhs_simplified(s, p);
        case ModelVariant::Full: return nonlinear_rhs_full(s, p);
    }
    return SpectralField(s.grid());
}

} // namespace vww
