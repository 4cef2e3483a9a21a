#ifndef DQD_PROPAGATOR_HPP
#define DQD_PROPAGATOR_HPP

#include <vector>

#include "dqd/fields.hpp"
#include "dqd/grid.hpp"

namespace dqd {

/// What a propagation records along the way. Occupations are the
/// projections |<phi_n|psi(t)>|^2 onto the given projector states.
struct TrajectoryOptions {
  int occupation_stride = 10; ///< record occupations every this many steps (0 = off)
  int state_stride = 0;       ///< store full snapshots every this many steps (0 = off)
  const std::vector<WaveFunction>* projectors = nullptr;
};

/// Time-ordered record of a propagation. Sample arrays are ascending in
/// time for both sweep directions; final_state is the state where the
/// sweep ends (t = T forward, t = 0 backward).
struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> occupations; ///< [sample][projector]
  std::vector<double> state_times;
  std::vector<WaveFunction> states;
  WaveFunction final_state;
};

/// Crank-Nicolson / Cayley propagator for H(t) = T + V(x) + x eps(t)
/// on a fixed grid. One step of size dt applies two Cayley half-steps,
/// the first with the field at the start of the step and the second
/// with the field at its end; each half-step is exactly unitary, and
/// stepping with (eps_next, eps_now, -dt) is the exact inverse of
/// stepping with (eps_now, eps_next, +dt).
///
/// Instances own scratch buffers, so share one per thread.
class Propagator {
public:
  /// potential[i] = V(x_i); throws GridMismatchError on a length mismatch.
  Propagator(Grid grid, std::vector<double> potential);

  /// Single step of size dt > 0 (StepSizeError otherwise).
  WaveFunction step(const WaveFunction& psi, double eps_now, double eps_next,
                    double dt) const;

  /// Raw in-place kernel behind step(): two Cayley half-steps of size
  /// dt/2, the first with eps_first, the second with eps_second. dt may
  /// be negative (inverse step); it must not be zero.
  void advance(std::vector<Complex>& amplitudes, double eps_first,
               double eps_second, double dt) const;

  /// Sweep 0 -> T under the field, recording per options.
  Trajectory propagate(const WaveFunction& initial, const ControlField& field,
                       const TrajectoryOptions& options = {}) const;

  /// Exact inverse sweep T -> 0: feeding propagate()'s final state back
  /// reproduces the initial state to roundoff.
  Trajectory backward_propagate(const WaveFunction& at_t_final,
                                const ControlField& field,
                                const TrajectoryOptions& options = {}) const;

  const Grid& grid() const { return grid_; }
  const std::vector<double>& potential() const { return potential_; }

private:
  void cayley_half(std::vector<Complex>& psi, double eps, double delta) const;
  Trajectory sweep(const WaveFunction& start, const ControlField& field,
                   const TrajectoryOptions& options, bool forward) const;

  Grid grid_;
  std::vector<double> potential_;
  std::vector<double> base_diag_; ///< 1/dx^2 + V(x_i)
  double off_diag_;               ///< -1/(2 dx^2)
  mutable std::vector<Complex> rhs_, cp_;
};

} // namespace dqd

#endif
