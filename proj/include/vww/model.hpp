#ifndef VWW_MODEL_HPP
#define VWW_MODEL_HPP

#include <cstdint>

#include "vww/operators.hpp"

namespace vww {

enum class ModelVariant : std::uint8_t { Linear = 0, Simplified = 1, Full = 2 };

const char* to_string(ModelVariant v);

/// Physical parameters of the evolution equation.
///
/// delta is the viscous damping, beta the Bond number, epsilon the wave
/// steepness scaling the whole nonlinearity. The full model carries an
/// independent damping pair (alpha1, alpha2); the simplified model is its
/// alpha1 = alpha2 = delta reduction.
struct ModelParams {
    double delta = 1e-4;
    double beta = 1e-5;
    double epsilon = 1.0;
    double alpha1 = 1e-4;
    double alpha2 = 1e-4;
    ModelVariant variant = ModelVariant::Simplified;

    static ModelParams linear(double delta, double beta);
    static ModelParams simplified(double delta, double beta, double epsilon = 1.0);
    static ModelParams full(double alpha1, double alpha2, double beta, double epsilon = 1.0,
                            double delta = -1.0);

    /// Throws ConfigError on negative parameters or a simplified variant with
    /// alpha1/alpha2 out of sync with delta. delta == 0 (inviscid) only warns.
    void validate() const;
};

/// The pair (f, f_t) at one time instant. Both fields are mean-zero and real.
struct WaveState {
    SpectralField f;
    SpectralField ft;
    double t = 0.0;

    WaveState(SpectralField f_, SpectralField ft_, double t_ = 0.0);

    const Grid& grid() const { return f.grid(); }
};

/// Per-mode coefficients of the homogeneous equation
/// fhat'' + damping * fhat' + stiffness * fhat = Nhat(k).
struct LinearSymbol {
    double damping;
    double stiffness;
};

LinearSymbol linear_symbol(int k, const ModelParams& p);

/// Nonlinear forcing of the simplified model: epsilon times the six quadratic
/// terms, every product dealiased. Output is real and mean-zero.
SpectralField nonlinear_rhs_simplified(const WaveState& s, const ModelParams& p);

/// Nonlinear forcing of the full model: epsilon times eight quadratic terms.
/// The last coefficient is read literally as alpha2^2.
SpectralField nonlinear_rhs_full(const WaveState& s, const ModelParams& p);

/// Variant dispatch: Linear -> zero field, otherwise the matching nonlinearity.
SpectralField rhs(const WaveState& s, const ModelParams& p);

} // namespace vww

#endif // VWW_MODEL_HPP
