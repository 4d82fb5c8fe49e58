#include "vww/diagnostics.hpp"

#include <cmath>

namespace vww {

double sobolev_norm(const SpectralField& f, double s) {
    if (s < 0.0 && std::abs(f.mean()) > 1e-13)
        throw SingularModeError("sobolev_norm with s=" + std::to_string(s) +
                                " requires a mean-zero field");
    double sum = s == 0.0 ? std::norm(f.coeffs()[0]) : 0.0;
    for (int i = 1; i < f.size(); ++i) {
        const double ak = std::abs(static_cast<double>(f.grid().wavenumber_at(i)));
        sum += std::pow(ak, 2.0 * s) * std::norm(f.coeffs()[i]);
    }
    return std::sqrt(2.0 * Grid::pi() * sum);
}

namespace {

double sq(double x) { return x * x; }

} // namespace

std::pair<double, double> energy(const WaveState& s, const ModelParams& p, double prev_max) {
    const double e_inst = sq(sobolev_norm(s.f, 4.0)) + p.beta * sq(sobolev_norm(s.f, 5.0)) +
                          p.delta * p.delta * sq(sobolev_norm(s.f, 5.5)) +
                          sq(sobolev_norm(s.ft, 3.5));
    return {e_inst, std::max(prev_max, e_inst)};
}

double dissipation(const WaveState& s, const ModelParams& p) {
    return 2.0 * p.delta * sq(sobolev_norm(s.ft, 4.5));
}

double linear_energy(const WaveState& s, const ModelParams& p) {
    return sq(sobolev_norm(s.ft, 0.0)) + sq(sobolev_norm(s.f, 0.5)) +
           p.beta * sq(sobolev_norm(s.f, 1.5)) + p.delta * p.delta * sq(sobolev_norm(s.f, 2.0));
}

DiagnosticsRecord compute_diagnostics(const WaveState& s, const ModelParams& p,
                                      double prev_emax) {
    DiagnosticsRecord rec;
    rec.t = s.t;
    for (std::size_t i = 0; i < kHNormOrders.size(); ++i)
        rec.h_norms[i] = sobolev_norm(s.f, kHNormOrders[i]);
    for (std::size_t i = 0; i < kFtNormOrders.size(); ++i)
        rec.ft_norms[i] = sobolev_norm(s.ft, kFtNormOrders[i]);
    std::tie(rec.e_inst, rec.e_max) = energy(s, p, prev_emax);
    rec.dissipation = dissipation(s, p);
    rec.e_linear = linear_energy(s, p);
    return rec;
}

} // namespace vww
