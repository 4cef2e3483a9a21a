#ifndef DQD_TIME_MESH_HPP
#define DQD_TIME_MESH_HPP

#include "dqd/errors.hpp"

namespace dqd {

/// Uniform time mesh on [0, T]: n_steps steps of size dt = T/n_steps,
/// so dt * n_steps == t_final up to roundoff. Field samples live on the
/// n_steps + 1 nodes.
struct TimeMesh {
  double t_final;
  int n_steps;
  double dt;

  static TimeMesh from_steps(double t_final, int n_steps);

  /// Rounds T/dt to the nearest integer step count and readjusts dt so
  /// the mesh ends exactly at t_final.
  static TimeMesh from_dt(double t_final, double dt);

  int n_samples() const { return n_steps + 1; }
  double time(int j) const { return dt * j; }

  bool operator==(const TimeMesh& other) const {
    return t_final == other.t_final && n_steps == other.n_steps;
  }
};

} // namespace dqd

#endif
