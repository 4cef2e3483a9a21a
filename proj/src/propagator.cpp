#include "dqd/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dqd {

Propagator::Propagator(Grid grid, std::vector<double> potential)
    : grid_(std::move(grid)), potential_(std::move(potential)) {
  if (static_cast<int>(potential_.size()) != grid_.n_points()) {
    throw GridMismatchError("potential has " + std::to_string(potential_.size()) +
                            " entries for a grid of " +
                            std::to_string(grid_.n_points()) + " points");
  }
  const double inv_dx2 = 1.0 / (grid_.dx() * grid_.dx());
  off_diag_ = -0.5 * inv_dx2;
  base_diag_.resize(potential_.size());
  for (std::size_t i = 0; i < potential_.size(); ++i) {
    base_diag_[i] = inv_dx2 + potential_[i];
  }
}

// One Cayley factor (1 + i H delta/2)^{-1} (1 - i H delta/2), an exactly
// unitary approximant of exp(-i H delta) for the real symmetric H(eps).
//
// The recurrence is written in explicit real arithmetic: the factor
// matrix has unit real part on the diagonal and a purely imaginary
// constant off-diagonal i*ka, so one real division per point replaces
// the (much slower) general complex division. The matrix is diagonally
// dominant for V >= 0 since |1 + i k (1/dx^2 + ...)| exceeds twice
// |ka| = k/(2 dx^2).
void Propagator::cayley_half(std::vector<Complex>& psi, double eps,
                             double delta) const {
  const int n = grid_.n_points();
  const double k = 0.5 * delta;
  const double ka = k * off_diag_;
  const auto& x = grid_.positions();

  rhs_.resize(n);
  cp_.resize(n);
  double* rr = reinterpret_cast<double*>(rhs_.data());
  double* cc = reinterpret_cast<double*>(cp_.data());
  double* ps = reinterpret_cast<double*>(psi.data());

  // Fused rhs construction, rhs = (1 - i k H) psi, and forward
  // elimination against b_i = 1 + i k d_i, a = i ka.
  double cpre = 0.0;
  double cpim = 0.0;
  double prev_re = 0.0;
  double prev_im = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = base_diag_[i] + x[i] * eps;
    double hre = d * ps[2 * i];
    double him = d * ps[2 * i + 1];
    if (i > 0) {
      hre += off_diag_ * ps[2 * i - 2];
      him += off_diag_ * ps[2 * i - 1];
    }
    if (i + 1 < n) {
      hre += off_diag_ * ps[2 * i + 2];
      him += off_diag_ * ps[2 * i + 3];
    }
    double rre = ps[2 * i] + k * him;
    double rim = ps[2 * i + 1] - k * hre;

    // m = b - a*cp_{i-1}; numerator n = rhs_i - a*rhs_{i-1}
    const double mre = 1.0 + ka * cpim;
    const double mim = k * d - ka * cpre;
    rre += ka * prev_im;
    rim -= ka * prev_re;
    const double inv = 1.0 / (mre * mre + mim * mim);
    const double ire = mre * inv;
    const double iim = -mim * inv;
    cpre = -ka * iim;
    cpim = ka * ire;
    prev_re = rre * ire - rim * iim;
    prev_im = rre * iim + rim * ire;
    cc[2 * i] = cpre;
    cc[2 * i + 1] = cpim;
    rr[2 * i] = prev_re;
    rr[2 * i + 1] = prev_im;
  }

  ps[2 * n - 2] = rr[2 * n - 2];
  ps[2 * n - 1] = rr[2 * n - 1];
  for (int i = n - 2; i >= 0; --i) {
    ps[2 * i] = rr[2 * i] - (cc[2 * i] * ps[2 * i + 2] - cc[2 * i + 1] * ps[2 * i + 3]);
    ps[2 * i + 1] = rr[2 * i + 1] - (cc[2 * i] * ps[2 * i + 3] + cc[2 * i + 1] * ps[2 * i + 2]);
  }
}

void Propagator::advance(std::vector<Complex>& amplitudes, double eps_first,
                         double eps_second, double dt) const {
  if (dt == 0.0 || !std::isfinite(dt)) {
    throw StepSizeError("propagation step must be finite and nonzero");
  }
  cayley_half(amplitudes, eps_first, 0.5 * dt);
  cayley_half(amplitudes, eps_second, 0.5 * dt);
}

WaveFunction Propagator::step(const WaveFunction& psi, double eps_now,
                              double eps_next, double dt) const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw StepSizeError("step size must be positive");
  }
  if (!(psi.grid() == grid_)) {
    throw GridMismatchError("state does not live on the propagator grid");
  }
  std::vector<Complex> amps = psi.amplitudes();
  advance(amps, eps_now, eps_next, dt);
  return WaveFunction(grid_, std::move(amps));
}

Trajectory Propagator::sweep(const WaveFunction& start, const ControlField& field,
                             const TrajectoryOptions& options,
                             bool forward) const {
  if (!(start.grid() == grid_)) {
    throw GridMismatchError("state does not live on the propagator grid");
  }
  if (options.projectors) {
    for (const auto& p : *options.projectors) {
      if (!(p.grid() == grid_)) {
        throw GridMismatchError("projector does not live on the propagator grid");
      }
    }
  }

  const TimeMesh& mesh = field.mesh();
  const auto& e = field.samples();
  std::vector<Complex> amps = start.amplitudes();

  std::vector<double> times;
  std::vector<std::vector<double>> occupations;
  std::vector<double> state_times;
  std::vector<WaveFunction> states;

  auto record = [&](int j) {
    const bool at_edge = j == 0 || j == mesh.n_steps;
    if (options.occupation_stride > 0 &&
        (j % options.occupation_stride == 0 || at_edge)) {
      times.push_back(mesh.time(j));
      std::vector<double> row;
      if (options.projectors) {
        row.reserve(options.projectors->size());
        for (const auto& p : *options.projectors) {
          Complex ov = 0.0;
          const auto& pa = p.amplitudes();
          for (std::size_t i = 0; i < pa.size(); ++i) {
            ov += std::conj(pa[i]) * amps[i];
          }
          row.push_back(std::norm(ov * grid_.dx()));
        }
      }
      occupations.push_back(std::move(row));
    }
    if (options.state_stride > 0 &&
        (j % options.state_stride == 0 || at_edge)) {
      state_times.push_back(mesh.time(j));
      states.emplace_back(grid_, amps);
    }
  };

  if (forward) {
    for (int j = 0; j < mesh.n_steps; ++j) {
      record(j);
      advance(amps, e[j], e[j + 1], mesh.dt);
    }
    record(mesh.n_steps);
  } else {
    for (int j = mesh.n_steps; j > 0; --j) {
      record(j);
      advance(amps, e[j], e[j - 1], -mesh.dt);
    }
    record(0);
    std::reverse(times.begin(), times.end());
    std::reverse(occupations.begin(), occupations.end());
    std::reverse(state_times.begin(), state_times.end());
    std::reverse(states.begin(), states.end());
  }

  return Trajectory{std::move(times), std::move(occupations),
                    std::move(state_times), std::move(states),
                    WaveFunction(grid_, std::move(amps))};
}

Trajectory Propagator::propagate(const WaveFunction& initial,
                                 const ControlField& field,
                                 const TrajectoryOptions& options) const {
  return sweep(initial, field, options, true);
}

Trajectory Propagator::backward_propagate(const WaveFunction& at_t_final,
                                          const ControlField& field,
                                          const TrajectoryOptions& options) const {
  return sweep(at_t_final, field, options, false);
}

} // namespace dqd
