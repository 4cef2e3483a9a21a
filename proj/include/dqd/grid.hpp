#ifndef DQD_GRID_HPP
#define DQD_GRID_HPP

#include <complex>
#include <vector>

#include "dqd/errors.hpp"

namespace dqd {

using Complex = std::complex<double>;

/// Uniform 1D real-space mesh with both endpoints included.
///
/// Node positions are mirror-exact: for a box symmetric about the
/// origin, x(i) == -x(n_points-1-i) holds bitwise, so symmetric
/// potentials evaluate symmetrically without roundoff.
class Grid {
public:
  Grid(double x_min, double x_max, int n_points);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int n_points() const { return n_points_; }
  double dx() const { return dx_; }

  double x(int i) const { return pos_[i]; }
  const std::vector<double>& positions() const { return pos_; }

  bool operator==(const Grid& other) const {
    return x_min_ == other.x_min_ && x_max_ == other.x_max_ &&
           n_points_ == other.n_points_;
  }

private:
  double x_min_;
  double x_max_;
  int n_points_;
  double dx_;
  std::vector<double> pos_;
};

/// Construct a uniform grid. Throws InvalidBoundsError unless
/// x_min < x_max and n_points >= 16 (n_points >= 2 for the dx formula,
/// 16 as the smallest mesh that can hold a bound state).
Grid build_grid(double x_min, double x_max, int n_points);

/// Double-well parameters: confinement strength omega0 and interdot
/// distance d, both in effective atomic units. d = 0 degenerates to a
/// single harmonic well.
struct DoubleWellParams {
  double omega0 = 0.5;
  double d = 6.0;
};

/// V(x) = (omega0^2/2) * min{(x-d/2)^2, (x+d/2)^2} at each node.
std::vector<double> potential_dqd(const Grid& grid, const DoubleWellParams& params);

/// Complex amplitudes on a Grid. Value type: transforms return new
/// instances, so instances can be shared freely across threads.
class WaveFunction {
public:
  explicit WaveFunction(Grid grid)
      : grid_(std::move(grid)), amp_(grid_.n_points(), Complex{0.0, 0.0}) {}

  WaveFunction(Grid grid, std::vector<Complex> amplitudes);

  const Grid& grid() const { return grid_; }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  std::vector<Complex>& amplitudes() { return amp_; }

  Complex operator[](int i) const { return amp_[i]; }
  int size() const { return static_cast<int>(amp_.size()); }

  /// Riemann-sum norm sqrt(sum |a_i|^2 dx).
  double norm() const;

  /// Returns this state scaled to unit norm. Throws ZeroNormError when
  /// the norm is numerically zero.
  WaveFunction normalized() const;

private:
  Grid grid_;
  std::vector<Complex> amp_;
};

/// <a|b> = sum conj(a_i) b_i dx. The plain Riemann weight keeps the
/// finite-difference Hamiltonian exactly self-adjoint in this product.
/// Throws GridMismatchError when the states live on different grids.
Complex inner_product(const WaveFunction& a, const WaveFunction& b);

/// <a| -x |b>: matrix element of the dipole operator mu = -x.
Complex dipole_coupling(const WaveFunction& a, const WaveFunction& b);

} // namespace dqd

#endif
