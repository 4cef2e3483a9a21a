#ifndef DQD_OCT_HPP
#define DQD_OCT_HPP

#include <limits>
#include <vector>

#include "dqd/fields.hpp"
#include "dqd/propagator.hpp"

namespace dqd {

/// Target of an optimization; stands in for the projector
/// O = |target><target| applied at final time.
struct TargetSpec {
  WaveFunction target_state;
};

struct OptimizationConfig {
  double t_final = 100.0;
  double e0 = 0.3; ///< fixed fluence
  double omega_th = std::numeric_limits<double>::infinity(); ///< spectral cutoff; inf = none
  EnvelopeParams envelope{};
  double initial_frequency = 0.5;
  int max_iterations = 500;
  double yield_tolerance = 1e-7;
  double dt = 0.01;
};

struct OptimizationResult {
  ControlField final_field; ///< best-yield field encountered
  std::vector<double> yield_history; ///< entry 0 = initial guess, then one per iteration
  std::vector<double> alpha_history; ///< one multiplier per iteration
  double final_yield;  ///< yield of final_field; always the last history entry
  int best_iteration;  ///< index into yield_history that final_field achieved
  int iterations;      ///< optimizer sweeps performed
  bool converged;      ///< yield change fell below tolerance
  double fluence;      ///< fluence of final_field
};

/// Fluence-normalized single-tone seed A sin(initial_frequency t) f(t).
ControlField initial_guess(const OptimizationConfig& config, const TimeMesh& mesh);

/// |<target|psi>|^2.
double compute_yield(const WaveFunction& psi_final, const TargetSpec& target);

/// eps(t_j) = -(f(t_j)/alpha) Im<chi(t_j)|mu|psi(t_j)> with mu = -x, from two
/// trajectories holding states at every mesh node. Throws
/// TrajectoryMismatchError when the trajectories are not aligned sample-for-
/// sample with the mesh, DomainError for alpha <= 0 or a wrong-length envelope.
ControlField field_update(const Trajectory& chi_traj, const Trajectory& psi_traj,
                          double alpha, const std::vector<double>& envelope,
                          const TimeMesh& mesh);

/// Fixed-fluence multiplier alpha = sqrt(int raw^2 dt / e0); the field
/// -raw/alpha then has fluence exactly e0. Throws ZeroOverlapError when
/// raw vanishes identically.
double solve_alpha(const std::vector<double>& raw_overlap, double e0, double dt);

/// Forward-backward iteration maximizing |<target|psi(T)>|^2 at fixed
/// fluence. Each iteration sweeps chi backward from the projected final
/// state together with psi under the old field, accumulating the raw
/// overlap f Im<chi|mu|psi>; the new field is then assembled with
/// immediate feedback on the forward sweep (psi advances under the new
/// field as it is built, chi retraces under the old one). An optional
/// brick-wall cutoff is applied before the fluence is restored. Stops
/// when the yield change drops below yield_tolerance; the best field
/// seen is returned even if a later iteration dipped.
OptimizationResult optimize(const Propagator& prop, const WaveFunction& initial,
                            const TargetSpec& target,
                            const OptimizationConfig& config);

} // namespace dqd

#endif
