#include "dqd/oct.hpp"

#include <cmath>
#include <utility>

namespace dqd {

namespace {

// Im <a| x |b> with the Riemann dx weight.
double im_x_overlap(const std::vector<Complex>& a, const std::vector<Complex>& b,
                    const std::vector<double>& x, double dx) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += x[i] * (a[i].real() * b[i].imag() - a[i].imag() * b[i].real());
  }
  return acc * dx;
}

void validate(const OptimizationConfig& config) {
  if (!(config.t_final > 0.0)) {
    throw DomainError("optimization needs t_final > 0");
  }
  if (!(config.e0 > 0.0)) {
    throw DomainError("optimization needs fluence e0 > 0");
  }
  if (config.max_iterations < 1) {
    throw DomainError("optimization needs max_iterations >= 1");
  }
  if (!(config.yield_tolerance >= 0.0)) {
    throw DomainError("yield tolerance must be nonnegative");
  }
  if (!(config.initial_frequency > 0.0)) {
    throw DomainError("initial guess frequency must be positive");
  }
  if (!(config.omega_th > 0.0)) {
    throw DomainError("frequency threshold must be positive");
  }
}

} // namespace

ControlField initial_guess(const OptimizationConfig& config, const TimeMesh& mesh) {
  validate(config);
  const std::vector<double> f = envelope_samples(mesh, config.envelope);
  std::vector<double> s(mesh.n_samples());
  for (int j = 0; j < mesh.n_samples(); ++j) {
    s[j] = std::sin(config.initial_frequency * mesh.time(j)) * f[j];
  }
  return rescale_fluence(ControlField(mesh, std::move(s)), config.e0);
}

double compute_yield(const WaveFunction& psi_final, const TargetSpec& target) {
  return std::norm(inner_product(target.target_state, psi_final));
}

ControlField field_update(const Trajectory& chi_traj, const Trajectory& psi_traj,
                          double alpha, const std::vector<double>& envelope,
                          const TimeMesh& mesh) {
  if (!(alpha > 0.0)) {
    throw DomainError("field update needs alpha > 0");
  }
  const int ns = mesh.n_samples();
  if (static_cast<int>(chi_traj.states.size()) != ns ||
      static_cast<int>(psi_traj.states.size()) != ns) {
    throw TrajectoryMismatchError(
        "field update needs a state stored at every mesh node");
  }
  if (static_cast<int>(envelope.size()) != ns) {
    throw DomainError("envelope sample count does not match the mesh");
  }
  const Grid& grid = chi_traj.states.front().grid();
  if (!(psi_traj.states.front().grid() == grid)) {
    throw TrajectoryMismatchError("trajectories live on different grids");
  }
  for (int j = 0; j < ns; ++j) {
    if (std::abs(chi_traj.state_times[j] - mesh.time(j)) > 1e-9 ||
        std::abs(psi_traj.state_times[j] - mesh.time(j)) > 1e-9) {
      throw TrajectoryMismatchError("trajectory sample times do not match the mesh");
    }
  }

  // eps = -(f/alpha) Im<chi|mu|psi> with mu = -x.
  std::vector<double> s(ns);
  for (int j = 0; j < ns; ++j) {
    s[j] = (envelope[j] / alpha) *
           im_x_overlap(chi_traj.states[j].amplitudes(),
                        psi_traj.states[j].amplitudes(), grid.positions(),
                        grid.dx());
  }
  return ControlField(mesh, std::move(s));
}

double solve_alpha(const std::vector<double>& raw_overlap, double e0, double dt) {
  if (!(e0 > 0.0)) {
    throw DomainError("fluence must be positive");
  }
  if (!(dt > 0.0)) {
    throw StepSizeError("dt must be positive");
  }
  if (raw_overlap.size() < 2) {
    throw DomainError("raw overlap needs at least two samples");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < raw_overlap.size(); ++j) {
    acc += raw_overlap[j] * raw_overlap[j];
  }
  acc *= dt;
  if (!(acc > 0.0)) {
    throw ZeroOverlapError(
        "control overlap vanishes identically; the fluence multiplier is undefined");
  }
  return std::sqrt(acc / e0);
}

OptimizationResult optimize(const Propagator& prop, const WaveFunction& initial,
                            const TargetSpec& target,
                            const OptimizationConfig& config) {
  validate(config);
  if (!(initial.grid() == prop.grid()) ||
      !(target.target_state.grid() == prop.grid())) {
    throw GridMismatchError("optimization states must live on the propagator grid");
  }
  if (std::abs(initial.norm() - 1.0) > 1e-6) {
    throw DomainError("initial state must be normalized");
  }
  if (std::abs(target.target_state.norm() - 1.0) > 1e-6) {
    throw DomainError("target state must be normalized");
  }

  const TimeMesh mesh = TimeMesh::from_dt(config.t_final, config.dt);
  const int m = mesh.n_steps;
  const double dt = mesh.dt;
  const double dx = prop.grid().dx();
  const auto& x = prop.grid().positions();
  const std::vector<double> f = envelope_samples(mesh, config.envelope);
  const bool filtered = std::isfinite(config.omega_th);
  const TrajectoryOptions bare{0, 0, nullptr};

  ControlField eps = initial_guess(config, mesh);

  WaveFunction psi_t = prop.propagate(initial, eps, bare).final_state;
  double yield = compute_yield(psi_t, target);

  std::vector<double> yields{yield};
  std::vector<double> alphas;
  ControlField best_field = eps;
  double best_yield = yield;
  int best_iteration = 0;

  bool converged = false;
  int it = 0;
  std::vector<double> raw(m + 1);
  std::vector<Complex> chi, psi_b, p, c, predictor;

  while (it < config.max_iterations) {
    ++it;

    // Backward sweep under the old field: chi starts from the projected
    // final state, psi is carried back alongside it, and the raw overlap
    // f Im<chi|mu|psi> is recorded at every node.
    const Complex ov = inner_product(target.target_state, psi_t);
    if (std::norm(ov) == 0.0) {
      throw ZeroOverlapError(
          "final state is orthogonal to the target; the projected costate vanishes");
    }
    chi = target.target_state.amplitudes();
    for (Complex& z : chi) {
      z *= ov;
    }
    psi_b = psi_t.amplitudes();
    const std::vector<double>& e = eps.samples();
    raw[m] = -f[m] * im_x_overlap(chi, psi_b, x, dx);
    for (int j = m; j > 0; --j) {
      prop.advance(chi, e[j], e[j - 1], -dt);
      prop.advance(psi_b, e[j], e[j - 1], -dt);
      raw[j - 1] = -f[j - 1] * im_x_overlap(chi, psi_b, x, dx);
    }
    const double alpha = solve_alpha(raw, config.e0, dt);
    alphas.push_back(alpha);

    // Forward sweep with immediate feedback: psi advances under the new
    // field as it is assembled sample-by-sample (predictor-corrector for
    // the not-yet-known endpoint value); chi retraces under the old field.
    std::vector<double> next(m + 1);
    p = initial.amplitudes();
    c = std::move(chi);
    next[0] = (f[0] / alpha) * im_x_overlap(c, p, x, dx);
    for (int j = 0; j < m; ++j) {
      predictor = p;
      prop.advance(predictor, next[j], next[j], dt);
      prop.advance(c, e[j], e[j + 1], dt);
      const double provisional =
          (f[j + 1] / alpha) * im_x_overlap(c, predictor, x, dx);
      prop.advance(p, next[j], provisional, dt);
      next[j + 1] = (f[j + 1] / alpha) * im_x_overlap(c, p, x, dx);
    }

    ControlField candidate(mesh, std::move(next));
    if (filtered) {
      candidate = apply_frequency_filter(candidate, config.omega_th);
    }
    eps = rescale_fluence(candidate, config.e0);

    psi_t = prop.propagate(initial, eps, bare).final_state;
    const double next_yield = compute_yield(psi_t, target);
    yields.push_back(next_yield);
    if (next_yield > best_yield) {
      best_yield = next_yield;
      best_field = eps;
      best_iteration = it;
    }
    const bool settled = std::abs(next_yield - yield) < config.yield_tolerance;
    yield = next_yield;
    if (settled) {
      converged = true;
      break;
    }
  }

  // The history always ends at the returned field's yield; when a later
  // iteration dipped below the best, the best is re-appended.
  if (best_iteration != static_cast<int>(yields.size()) - 1) {
    yields.push_back(best_yield);
  }

  const double fl = fluence(best_field);
  return OptimizationResult{std::move(best_field), std::move(yields),
                            std::move(alphas),     best_yield,
                            best_iteration,        it,
                            converged,             fl};
}

} // namespace dqd
