#ifndef VWW_GRID_HPP
#define VWW_GRID_HPP

#include <Eigen/Dense>

#include "vww/errors.hpp"

namespace vww {

/// Uniform collocation grid on the torus [-pi, pi).
///
/// With N points x_j = -pi + 2*pi*j/N the resolvable wavenumbers are
/// k in {-N/2+1, ..., N/2}; k = N/2 is the Nyquist mode. Coefficient
/// storage follows FFT index order: index i holds k = i for i <= N/2
/// and k = i - N above.
class Grid {
public:
    explicit Grid(int n) : n_(n) {
        if (n < 8 || n % 2 != 0)
            throw ShapeError("grid size must be even and >= 8, got " + std::to_string(n));
    }

    int size() const { return n_; }
    double spacing() const { return 2.0 * pi() / n_; }
    int max_wavenumber() const { return n_ / 2; }
    int min_wavenumber() const { return -n_ / 2 + 1; }

    /// Largest |k| kept by 2/3-rule dealiasing: the largest K with 3K < N,
    /// so that aliased images of quadratic products fall outside |k| <= K.
    int dealias_cutoff() const { return (n_ - 1) / 3; }

    /// Collocation points x_j = -pi + 2*pi*j/N.
    Eigen::ArrayXd points() const {
        Eigen::ArrayXd x(n_);
        for (int j = 0; j < n_; ++j) x[j] = -pi() + spacing() * j;
        return x;
    }

    int index_of(int k) const { return k >= 0 ? k : k + n_; }
    int wavenumber_at(int i) const { return i <= n_ / 2 ? i : i - n_; }

    static constexpr double pi() { return 3.14159265358979323846; }

    friend bool operator==(const Grid& a, const Grid& b) { return a.n_ == b.n_; }
    friend bool operator!=(const Grid& a, const Grid& b) { return a.n_ != b.n_; }

private:
    int n_;
};

} // namespace vww

#endif // VWW_GRID_HPP
