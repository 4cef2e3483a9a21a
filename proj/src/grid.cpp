#include "dqd/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace dqd {

Grid::Grid(double x_min, double x_max, int n_points)
    : x_min_(x_min), x_max_(x_max), n_points_(n_points) {
  if (!(x_min < x_max)) {
    throw InvalidBoundsError("grid bounds must satisfy x_min < x_max, got [" +
                             std::to_string(x_min) + ", " + std::to_string(x_max) + "]");
  }
  if (n_points < 16) {
    throw InvalidBoundsError("grid needs at least 16 points, got " +
                             std::to_string(n_points));
  }
  dx_ = (x_max - x_min) / (n_points - 1);

  // x(i) = center + dx*(i - m) with m = (n-1)/2. Since i - m negates
  // exactly under i -> n-1-i, mirror nodes are exact negations of each
  // other (up to the exactly-pinned endpoints).
  const double center = 0.5 * (x_min + x_max);
  const double m = 0.5 * (n_points - 1);
  pos_.resize(n_points);
  for (int i = 0; i < n_points; ++i) {
    pos_[i] = center + dx_ * (static_cast<double>(i) - m);
  }
  pos_.front() = x_min;
  pos_.back() = x_max;
}

Grid build_grid(double x_min, double x_max, int n_points) {
  return Grid(x_min, x_max, n_points);
}

std::vector<double> potential_dqd(const Grid& grid, const DoubleWellParams& params) {
  if (!(params.omega0 > 0.0)) {
    throw DomainError("confinement strength omega0 must be positive");
  }
  if (params.d < 0.0) {
    throw DomainError("interdot distance d must be nonnegative");
  }
  const double half = 0.5 * params.omega0 * params.omega0;
  const double shift = 0.5 * params.d;
  std::vector<double> v(grid.n_points());
  for (int i = 0; i < grid.n_points(); ++i) {
    const double l = grid.x(i) - shift;
    const double r = grid.x(i) + shift;
    v[i] = half * std::min(l * l, r * r);
  }
  return v;
}

WaveFunction::WaveFunction(Grid grid, std::vector<Complex> amplitudes)
    : grid_(std::move(grid)), amp_(std::move(amplitudes)) {
  if (static_cast<int>(amp_.size()) != grid_.n_points()) {
    throw GridMismatchError("amplitude array length " + std::to_string(amp_.size()) +
                            " does not match grid with " +
                            std::to_string(grid_.n_points()) + " points");
  }
}

double WaveFunction::norm() const {
  double s = 0.0;
  for (const Complex& a : amp_) {
    s += std::norm(a);
  }
  return std::sqrt(s * grid_.dx());
}

WaveFunction WaveFunction::normalized() const {
  const double n = norm();
  if (!(n > 1e-300)) {
    throw ZeroNormError("cannot normalize a zero-norm state");
  }
  std::vector<Complex> out(amp_);
  const double inv = 1.0 / n;
  for (Complex& a : out) {
    a *= inv;
  }
  return WaveFunction(grid_, std::move(out));
}

namespace {
void require_same_grid(const WaveFunction& a, const WaveFunction& b) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatchError("wavefunctions live on different grids");
  }
}
} // namespace

Complex inner_product(const WaveFunction& a, const WaveFunction& b) {
  require_same_grid(a, b);
  Complex s{0.0, 0.0};
  const auto& av = a.amplitudes();
  const auto& bv = b.amplitudes();
  for (std::size_t i = 0; i < av.size(); ++i) {
    s += std::conj(av[i]) * bv[i];
  }
  return s * a.grid().dx();
}

Complex dipole_coupling(const WaveFunction& a, const WaveFunction& b) {
  require_same_grid(a, b);
  Complex s{0.0, 0.0};
  const auto& av = a.amplitudes();
  const auto& bv = b.amplitudes();
  const auto& x = a.grid().positions();
  for (std::size_t i = 0; i < av.size(); ++i) {
    s += std::conj(av[i]) * (-x[i]) * bv[i];
  }
  return s * a.grid().dx();
}

} // namespace dqd
