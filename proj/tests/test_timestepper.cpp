#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "vww/oracles.hpp"
#include "vww/timestepper.hpp"

using namespace vww;

namespace {

double max_diff(const SpectralField& a, const SpectralField& b) {
    return (a.coeffs() - b.coeffs()).abs().maxCoeff();
}

WaveState single_mode_state(const Grid& g, int k, double u0, double v0) {
    SpectralField f(g), ft(g);
    f.set_coeff(k, 0.5 * u0);
    f.set_coeff(-k, 0.5 * u0);
    ft.set_coeff(k, 0.5 * v0);
    ft.set_coeff(-k, 0.5 * v0);
    return {std::move(f), std::move(ft), 0.0};
}

} // namespace

TEST_CASE("propagator at k=0 is the free particle") {
    const ModelParams p = ModelParams::simplified(0.1, 1e-5);
    const ModePropagator prop = build_propagator(0, 0.25, p);
    CHECK(prop.matrix(0, 0) == 1.0);
    CHECK(prop.matrix(0, 1) == 0.25);
    CHECK(prop.matrix(1, 0) == 0.0);
    CHECK(prop.matrix(1, 1) == 1.0);
    CHECK(prop.duhamel[0] == doctest::Approx(0.25 * 0.25 / 2.0));
    CHECK(prop.duhamel[1] == 0.25);
}

TEST_CASE("undamped k=1 mode rotates at unit frequency") {
    const ModelParams p = ModelParams::simplified(0.0, 0.0);
    for (double dt : {0.1, 1.0, 3.7}) {
        const ModePropagator prop = build_propagator(1, dt, p);
        // f(t) = cos(t) for f(0)=1, f'(0)=0.
        CHECK(prop.matrix(0, 0) == doctest::Approx(std::cos(dt)).epsilon(1e-14));
        CHECK(prop.matrix(0, 1) == doctest::Approx(std::sin(dt)).epsilon(1e-14));
        CHECK(prop.matrix(1, 0) == doctest::Approx(-std::sin(dt)).epsilon(1e-14));
    }
}

TEST_CASE("propagator matches the scaling-and-squaring matrix exponential") {
    for (const ModelParams& p :
         {ModelParams::simplified(0.1, 0.01), ModelParams::full(0.3, 0.01, 1e-3),
          ModelParams::simplified(0.0, 0.0)}) {
        for (int k : {1, 2, 5, 13}) {
            for (double dt : {1e-3, 0.1, 0.8}) {
                const ModePropagator prop = build_propagator(k, dt, p);
                const auto [damping, stiffness] = linear_symbol(k, p);
                Eigen::Matrix2d a;
                a << 0.0, 1.0, -stiffness, -damping;
                const Eigen::Matrix2d exact = oracles::expm(Eigen::Matrix2d(dt * a));
                CHECK((prop.matrix - exact).cwiseAbs().maxCoeff() < 1e-12);

                // Duhamel weights equal A^{-1}(e^{dtA} - I)e2 for invertible A.
                const Eigen::Vector2d d =
                    a.fullPivLu().solve((exact - Eigen::Matrix2d::Identity()) *
                                        Eigen::Vector2d(0.0, 1.0));
                CHECK((prop.duhamel - d).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("near-critical damping falls back to the series branch") {
    // alpha1 != alpha2 makes the full-variant discriminant positive or tiny.
    const double k = 2.0;
    // Choose alphas so mu^2 - stiffness is ~1e-12 * stiffness at k=2.
    const double a1 = 0.9, a2 = 0.1;
    ModelParams p = ModelParams::full(a1, a2, 0.0);
    const auto [damping, stiffness] = linear_symbol(int(k), p);
    const double q = stiffness - 0.25 * damping * damping;
    INFO("q = " << q); // small relative to stiffness at this k? not required
    for (double dt : {1e-3, 0.2}) {
        const ModePropagator prop = build_propagator(int(k), dt, p);
        Eigen::Matrix2d a;
        a << 0.0, 1.0, -stiffness, -damping;
        const Eigen::Matrix2d exact = oracles::expm(Eigen::Matrix2d(dt * a));
        CHECK((prop.matrix - exact).cwiseAbs().maxCoeff() < 1e-12);
    }

    // Exactly critical: alpha1=2.5, alpha2=0.5, beta=0 at k=1 gives
    // stiffness 2.25 = mu^2, so q = 0 lands on the series branch.
    {
        const ModelParams crit = ModelParams::full(2.5, 0.5, 0.0);
        const auto [dmp, stf] = linear_symbol(1, crit);
        CHECK(stf == 0.25 * dmp * dmp); // exact in floating point
        for (double dt : {0.02, 0.4}) {
            const ModePropagator prop = build_propagator(1, dt, crit);
            // Critical closed form: e^{-mu t} [[1 + mu t, t], [-mu^2 t, 1 - mu t]].
            const double mu = 0.5 * dmp, e = std::exp(-mu * dt);
            CHECK(prop.matrix(0, 0) == doctest::Approx(e * (1.0 + mu * dt)).epsilon(1e-14));
            CHECK(prop.matrix(0, 1) == doctest::Approx(e * dt).epsilon(1e-14));
            CHECK(prop.matrix(1, 0) == doctest::Approx(-e * mu * mu * dt).epsilon(1e-14));
            CHECK(prop.matrix(1, 1) == doctest::Approx(e * (1.0 - mu * dt)).epsilon(1e-14));
        }
    }

    // Strongly overdamped large-k modes exercise the hyperbolic branch.
    ModelParams over = ModelParams::full(2.0, 0.01, 0.0);
    for (int kk : {4, 9}) {
        const auto [dmp, stf] = linear_symbol(kk, over);
        Eigen::Matrix2d a;
        a << 0.0, 1.0, -stf, -dmp;
        const ModePropagator prop = build_propagator(kk, 0.05, over);
        const Eigen::Matrix2d exact = oracles::expm(Eigen::Matrix2d(0.05 * a));
        CHECK((prop.matrix - exact).cwiseAbs().maxCoeff() <
              1e-12 * std::max(1.0, exact.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("unconditional linear stability: spectral radius e^{-delta k^2 dt}") {
    const ModelParams p = ModelParams::simplified(0.2, 1e-3);
    for (int k : {1, 4, 16, 32}) {
        for (double dt : {0.01, 0.5, 5.0}) {
            const ModePropagator prop = build_propagator(k, dt, p);
            const Eigen::Vector2cd eig = prop.matrix.eigenvalues();
            const double radius = std::max(std::abs(eig[0]), std::abs(eig[1]));
            CHECK(radius == doctest::Approx(std::exp(-0.2 * k * k * dt)).epsilon(1e-10));
            CHECK(radius < 1.0);
        }
    }
}

TEST_CASE("one linear step reproduces the damped-oscillator closed form") {
    const Grid g(16);
    const double delta = 0.1, beta = 0.0;
    const ModelParams p = ModelParams::linear(delta, beta);
    const int k = 1;
    const WaveState s0 = single_mode_state(g, k, 1.0, 0.0);

    for (double dt : {1e-3, 1e-1, 1.0}) {
        const WaveState s1 = step(s0, dt, p);
        const double mu = delta * k * k;
        const double stiff = k + beta * k * k * k + delta * delta * k * k * k * k;
        const double w = std::sqrt(stiff - mu * mu);
        const double u = std::exp(-mu * dt) * (std::cos(w * dt) + mu / w * std::sin(w * dt));
        CHECK(std::abs(s1.f.coeff(k) - Complex(0.5 * u)) < 1e-14);
        CHECK(s1.t == dt);
    }

    // Zero state stays zero.
    const WaveState z{SpectralField(g), SpectralField(g), 0.0};
    const WaveState z1 = step(z, 0.3, ModelParams::simplified(0.1, 1e-5));
    CHECK(z1.f.max_abs() == 0.0);
    CHECK(z1.ft.max_abs() == 0.0);
}

TEST_CASE("second-order self-convergence on a smooth nonlinear run") {
    const Grid g(32);
    const ModelParams p = ModelParams::simplified(0.05, 1e-5, 0.5);
    SpectralField f0(g);
    f0.set_coeff(1, 0.05);
    f0.set_coeff(-1, 0.05);
    f0.set_coeff(3, 0.02);
    f0.set_coeff(-3, 0.02);
    const WaveState init{f0, SpectralField(g), 0.0};

    auto run = [&](double dt) {
        SimConfig cfg;
        cfg.dt = dt;
        cfg.t_end = 0.5;
        cfg.snapshot_every = 1 << 30;
        cfg.diagnostics_every = 1 << 30;
        return simulate(init, p, cfg, SimSink{});
    };
    const WaveState ref = run(0.05 / 64.0);
    auto err = [&](const WaveState& s) {
        return std::max(max_diff(s.f, ref.f), max_diff(s.ft, ref.ft));
    };
    const double order = std::log2(err(run(0.05)) / err(run(0.025)));
    CHECK(order > 1.8);
    CHECK(order < 2.2);
}

TEST_CASE("time reversibility in the inviscid linear limit") {
    const Grid g(32);
    const ModelParams p = ModelParams::linear(0.0, 1e-3);
    std::mt19937_64 rng(11);
    const WaveState s0{oracles::random_real_field(g, rng, g.max_wavenumber() - 1),
                       oracles::random_real_field(g, rng, g.max_wavenumber() - 1), 0.0};
    const WaveState forward = step(s0, 0.37, p);
    const WaveState back = step(forward, -0.37, p);
    CHECK(max_diff(back.f, s0.f) < 1e-10);
    CHECK(max_diff(back.ft, s0.ft) < 1e-10);
}

TEST_CASE("linear decay rate of the mode envelope") {
    // |fhat(k)(t)| ~ e^{-delta k^2 t}: log-linear fit of the envelope at
    // oscillation peaks recovers the rate within 1%.
    const Grid g(32);
    const double delta = 0.02, beta = 0.0;
    const ModelParams p = ModelParams::linear(delta, beta);
    const int k = 2;
    const WaveState init = single_mode_state(g, k, 1.0, 0.0);

    std::vector<double> ts, amps;
    SimSink sink;
    sink.on_snapshot = [&](const WaveState& s) {
        ts.push_back(s.t);
        amps.push_back(std::abs(s.f.coeff(k)));
    };
    SimConfig cfg;
    cfg.dt = 0.002;
    cfg.t_end = 40.0;
    cfg.snapshot_every = 1;
    cfg.diagnostics_every = 1 << 30;
    simulate(init, p, cfg, sink);

    // Collect local maxima of |fhat| (envelope touches) and fit log-linearly.
    std::vector<double> tp, lp;
    for (std::size_t i = 1; i + 1 < amps.size(); ++i)
        if (amps[i] > amps[i - 1] && amps[i] >= amps[i + 1]) {
            tp.push_back(ts[i]);
            lp.push_back(std::log(amps[i]));
        }
    REQUIRE(tp.size() >= 4);
    const auto n = static_cast<double>(tp.size());
    double st = 0, sl = 0, stt = 0, stl = 0;
    for (std::size_t i = 0; i < tp.size(); ++i) {
        st += tp[i];
        sl += lp[i];
        stt += tp[i] * tp[i];
        stl += tp[i] * lp[i];
    }
    const double slope = (n * stl - st * sl) / (n * stt - st * st);
    CHECK(std::abs(-slope - delta * k * k) < 0.01 * delta * k * k);
}

TEST_CASE("simulate cadences, t_end handling and callbacks") {
    const Grid g(16);
    const ModelParams p = ModelParams::simplified(0.1, 1e-5);
    const WaveState init = single_mode_state(g, 1, 0.01, 0.0);

    // t_end at the initial time: returns init, one snapshot, one record.
    int snaps = 0, recs = 0;
    SimSink sink;
    sink.on_snapshot = [&](const WaveState&) { ++snaps; };
    sink.on_diagnostics = [&](const DiagnosticsRecord&) { ++recs; };
    SimConfig cfg;
    cfg.dt = 0.1;
    cfg.t_end = 0.0;
    cfg.snapshot_every = 1;
    cfg.diagnostics_every = 1;
    const WaveState out0 = simulate(init, p, cfg, sink);
    CHECK(snaps == 1);
    CHECK(recs == 1);
    CHECK(out0.t == 0.0);
    CHECK((out0.f.coeffs() - init.f.coeffs()).abs().maxCoeff() == 0.0);

    // A non-divisible horizon lands exactly on t_end via a shortened step.
    snaps = recs = 0;
    cfg.t_end = 0.25;
    std::vector<double> times;
    sink.on_diagnostics = [&](const DiagnosticsRecord& r) {
        ++recs;
        times.push_back(r.t);
    };
    const WaveState out = simulate(init, p, cfg, sink);
    CHECK(out.t == 0.25);
    CHECK(times.size() == 4); // t = 0, 0.1, 0.2, 0.25
    for (std::size_t i = 1; i < times.size(); ++i) CHECK(times[i] > times[i - 1]);

    // A throwing sink aborts the run.
    SimSink bad;
    bad.on_snapshot = [](const WaveState&) { throw std::runtime_error("sink failure"); };
    CHECK_THROWS_WITH_AS(simulate(init, p, cfg, bad), "sink failure", std::runtime_error);
}

TEST_CASE("linear run matches the closed form at t=5") {
    const Grid g(16);
    const double delta = 0.1, beta = 0.0;
    const ModelParams p = ModelParams::linear(delta, beta);
    const WaveState init = single_mode_state(g, 1, 1.0, 0.0);

    SimConfig cfg;
    cfg.dt = 0.05;
    cfg.t_end = 5.0;
    cfg.snapshot_every = 1 << 30;
    cfg.diagnostics_every = 1 << 30;
    const WaveState out = simulate(init, p, cfg, SimSink{});

    const double mu = delta, w = std::sqrt(1.0 + delta * delta - mu * mu);
    const double u =
        std::exp(-mu * 5.0) * (std::cos(w * 5.0) + mu / w * std::sin(w * 5.0));
    CHECK(std::abs(out.f.coeff(1) - Complex(0.5 * u)) < 1e-10);
    CHECK(std::abs(out.f.coeff(1)) ==
          doctest::Approx(0.5 * std::exp(-0.5) *
                          std::abs(std::cos(w * 5.0) + mu / w * std::sin(w * 5.0)))
              .epsilon(1e-10));
}

TEST_CASE("blow-up is detected and reported") {
    const Grid g(16);
    SpectralField f(g);
    f.set_coeff(1, Complex(std::nan(""), 0.0));
    f.set_coeff(-1, Complex(std::nan(""), 0.0));
    // Bypass rhs (linear variant) so the NaN propagates to the output check.
    const ModelParams p = ModelParams::linear(0.1, 0.0);
    const WaveState bad{f, SpectralField(g), 0.0};
    CHECK_THROWS_AS(step(bad, 0.1, p), BlowUpError);

    try {
        step(bad, 0.1, p);
    } catch (const BlowUpError& e) {
        CHECK(e.mode() == 1);
        CHECK(e.t() == doctest::Approx(0.1));
    }
}

TEST_CASE("default dt resolves the fastest mode") {
    const Grid g(64);
    const ModelParams p = ModelParams::simplified(0.1, 0.0);
    const double wmax = std::sqrt(32.0);
    CHECK(default_dt(g, p) == doctest::Approx(0.5 * 2.0 * Grid::pi() / wmax));
}
