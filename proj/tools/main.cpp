// Command-line front end: eigen/optimize/sweep/sequence experiments
// driven by a flat key = value config with strict key checking.
#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqd/config.hpp"
#include "dqd/eigensolver.hpp"
#include "dqd/oct.hpp"
#include "dqd/report.hpp"
#include "dqd/sequence.hpp"
#include "dqd/units.hpp"

using nlohmann::ordered_json;

namespace {

struct Problem {
  dqd::Grid grid;
  std::vector<double> potential;
  dqd::SpectrumBundle spectrum;
  dqd::UnitSystem units;
  std::string hash;
  std::string header;
};

Problem setup(const dqd::ExperimentConfig& c) {
  dqd::Grid grid = dqd::build_grid(c.grid.x_min, c.grid.x_max, c.grid.n_points);
  std::vector<double> potential =
      dqd::potential_dqd(grid, dqd::DoubleWellParams{c.system.omega0, c.system.d});
  dqd::SpectrumBundle spectrum = dqd::solve_eigenstates(grid, potential, 12);

  // The two problem-defining states must be negligible at the hard
  // walls, otherwise every yield below is box-size noise.
  for (int s = 0; s <= 1; ++s) {
    const auto& amp = spectrum.state(s).amplitudes();
    const double edge = std::max(std::abs(amp.front()), std::abs(amp.back()));
    if (edge > 1e-8) {
      throw dqd::ConfigError(
          "eigenstate " + std::to_string(s) + " has amplitude " +
          std::to_string(edge) +
          " at the box edge (> 1e-8); widen grid.x_min/grid.x_max");
    }
  }

  dqd::UnitSystem units = dqd::UnitSystem::gaas();
  std::string hash = dqd::config_hash(c);
  std::string header = dqd::artifact_header(hash, units);
  return Problem{std::move(grid), std::move(potential), std::move(spectrum),
                 units, std::move(hash), std::move(header)};
}

dqd::OptimizationConfig oct_config(const dqd::ExperimentConfig& c) {
  dqd::OptimizationConfig o;
  o.t_final = c.propagation.t_final;
  o.dt = c.propagation.dt;
  o.e0 = c.oct.e0;
  o.omega_th = c.oct.omega_th;
  o.envelope = dqd::EnvelopeParams{c.oct.envelope_a, c.oct.envelope_b};
  o.initial_frequency = c.oct.initial_frequency;
  o.max_iterations = c.oct.max_iterations;
  o.yield_tolerance = c.oct.yield_tolerance;
  return o;
}

std::string out_path(const dqd::ExperimentConfig& c, const std::string& name) {
  return (std::filesystem::path(c.output_dir) / name).string();
}

ordered_json omega_th_json(double omega_th) {
  if (std::isfinite(omega_th)) return omega_th;
  return "inf";
}

ordered_json summary_common(const dqd::ExperimentConfig& c, const Problem& p) {
  ordered_json j;
  j["T"] = c.propagation.t_final;
  j["E0"] = c.oct.e0;
  j["omega_th"] = omega_th_json(c.oct.omega_th);
  j["omega01"] = p.spectrum.omega01;
  j["dt"] = c.propagation.dt;
  j["grid"] = {{"x_min", c.grid.x_min},
               {"x_max", c.grid.x_max},
               {"n_points", c.grid.n_points},
               {"dx", p.grid.dx()}};
  j["units"] = {{"E_h_meV", p.units.energy_meV},
                {"a0_nm", p.units.length_nm},
                {"t0_fs", p.units.time_fs}};
  j["config"] = p.hash;
  return j;
}

int cmd_eigen(const dqd::ExperimentConfig& c) {
  Problem p = setup(c);
  std::filesystem::create_directories(c.output_dir);
  dqd::write_eigenvalues_csv(out_path(c, "eigenvalues.csv"), p.spectrum, p.header);
  dqd::write_eigenvectors_csv(out_path(c, "eigenvectors.csv"), p.grid, p.spectrum,
                              p.header);
  for (int i = 0; i < p.spectrum.count(); ++i) {
    std::printf("E%d = %.10f\n", i, p.spectrum.energy(i));
  }
  std::printf("omega01 = %.8f\n", p.spectrum.omega01);
  std::printf("half_period = %.6f\n", dqd::half_period(p.spectrum.omega01));
  return 0;
}

// Occupations of the 12 tracked eigenstates plus |L>,|R> under a field.
void write_occupations(const dqd::ExperimentConfig& c, const Problem& p,
                       const dqd::Propagator& prop, const dqd::WaveFunction& psi0,
                       const dqd::ControlField& field) {
  std::vector<dqd::WaveFunction> projectors;
  projectors.reserve(p.spectrum.count() + 2);
  for (int i = 0; i < p.spectrum.count(); ++i) {
    projectors.push_back(p.spectrum.state(i));
  }
  projectors.push_back(dqd::left_state(p.spectrum));
  projectors.push_back(dqd::right_state(p.spectrum));
  dqd::TrajectoryOptions options{10, 0, &projectors};
  dqd::Trajectory traj = prop.propagate(psi0, field, options);
  dqd::write_occupations_csv(out_path(c, "occupations.csv"), traj.times,
                             traj.occupations, p.spectrum.count(), p.header);
}

int cmd_optimize(const dqd::ExperimentConfig& c, const std::string& mode,
                 bool strict) {
  Problem p = setup(c);
  dqd::Propagator prop(p.grid, p.potential);
  const dqd::WaveFunction left = dqd::left_state(p.spectrum);
  const dqd::WaveFunction initial = mode == "prepare" ? p.spectrum.state(0) : left;
  const dqd::WaveFunction target =
      mode == "prepare" ? left : dqd::right_state(p.spectrum);

  dqd::OptimizationResult result =
      dqd::optimize(prop, initial, dqd::TargetSpec{target}, oct_config(c));

  std::filesystem::create_directories(c.output_dir);
  dqd::write_field_csv(out_path(c, "field.csv"), result.final_field, p.header);
  dqd::write_spectrum_csv(out_path(c, "spectrum.csv"),
                          dqd::spectrum(result.final_field), p.header);
  write_occupations(c, p, prop, initial, result.final_field);

  ordered_json j;
  j["mode"] = mode;
  j["yield"] = result.final_yield;
  j["iterations"] = result.iterations;
  j["best_iteration"] = result.best_iteration;
  j["converged"] = result.converged;
  j["fluence"] = result.fluence;
  j.update(summary_common(c, p));
  dqd::write_text_file(out_path(c, "summary.json"), j.dump(2) + "\n");

  std::printf("%s: yield=%.6f iterations=%d converged=%s fluence=%.8f\n",
              mode.c_str(), result.final_yield, result.iterations,
              result.converged ? "true" : "false", result.fluence);
  if (strict && !result.converged) {
    std::fprintf(stderr, "error: optimizer did not converge in %d iterations\n",
                 result.iterations);
    return 1;
  }
  return 0;
}

int cmd_sweep(const dqd::ExperimentConfig& c) {
  if (c.sweep.parameter.empty()) {
    throw dqd::ConfigError("sweep.parameter must be set for the sweep command");
  }
  Problem p = setup(c);
  const dqd::WaveFunction left = dqd::left_state(p.spectrum);
  const dqd::WaveFunction right = dqd::right_state(p.spectrum);
  const std::size_t count = c.sweep.values.size();

  std::filesystem::create_directories(c.output_dir);
  dqd::SweepWriter writer(out_path(c, "sweep.csv"), c.sweep.parameter, p.header);

  std::vector<std::unique_ptr<dqd::OptimizationResult>> results(count);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;

  auto worker = [&]() {
    // each worker owns its propagator (scratch buffers are not shareable)
    dqd::Propagator prop(p.grid, p.potential);
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      try {
        dqd::OptimizationConfig oc = oct_config(c);
        const double v = c.sweep.values[i];
        if (c.sweep.parameter == "omega_th") oc.omega_th = v;
        else if (c.sweep.parameter == "T") oc.t_final = v;
        else oc.e0 = v;
        auto r = std::make_unique<dqd::OptimizationResult>(
            dqd::optimize(prop, left, dqd::TargetSpec{right}, oc));
        std::lock_guard<std::mutex> lock(mu);
        results[i] = std::move(r);
        cv.notify_all();
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        cv.notify_all();
      }
    }
  };

  const std::size_t n_workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (std::size_t w = 0; w < n_workers; ++w) {
    pool.emplace_back(worker);
  }

  // flush rows in input order as soon as each prefix entry lands, so an
  // interrupted sweep leaves the completed prefix on disk
  std::size_t flushed = 0;
  {
    std::unique_lock<std::mutex> lock(mu);
    while (flushed < count) {
      cv.wait(lock, [&] { return results[flushed] != nullptr || failure; });
      if (results[flushed] == nullptr) break;
      const auto& r = *results[flushed];
      writer.add_row(c.sweep.values[flushed], r.final_yield, r.iterations,
                     r.converged);
      std::printf("%s=%.6g yield=%.6f iterations=%d\n", c.sweep.parameter.c_str(),
                  c.sweep.values[flushed], r.final_yield, r.iterations);
      std::fflush(stdout);
      ++flushed;
    }
  }
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return 0;
}

int cmd_sequence(const dqd::ExperimentConfig& c, bool strict) {
  Problem p = setup(c);
  dqd::Propagator prop(p.grid, p.potential);
  const dqd::WaveFunction left = dqd::left_state(p.spectrum);
  const dqd::WaveFunction right = dqd::right_state(p.spectrum);

  std::filesystem::create_directories(c.output_dir);

  dqd::ControlField base = dqd::ControlField::zero(dqd::TimeMesh::from_steps(1.0, 1));
  if (!c.sequence.base_field_csv.empty()) {
    base = dqd::read_field_csv(c.sequence.base_field_csv);
  } else {
    dqd::OptimizationResult result =
        dqd::optimize(prop, left, dqd::TargetSpec{right}, oct_config(c));
    std::printf("base optimization: yield=%.6f iterations=%d converged=%s\n",
                result.final_yield, result.iterations,
                result.converged ? "true" : "false");
    if (strict && !result.converged) {
      std::fprintf(stderr, "error: base optimization did not converge\n");
      return 1;
    }
    base = std::move(result.final_field);
    dqd::write_field_csv(out_path(c, "base_field.csv"), base, p.header);
  }

  int n_max = 1;
  for (int n : c.sequence.n) {
    n_max = std::max(n_max, n);
  }

  // chains alternating base/inverted are prefix-closed, so one n_max
  // propagation yields every requested chain length
  dqd::SequenceResult seq =
      dqd::run_sequence(prop, left, base, n_max, {right, left});

  std::vector<double> computed;
  std::vector<double> power;
  for (int n : c.sequence.n) {
    computed.push_back(seq.per_segment_yield[n - 1]);
    power.push_back(dqd::power_law_prediction(seq.single_yield, n));
    std::printf("n=%d computed=%.6f power_law=%.6f\n", n, computed.back(),
                power.back());
  }
  dqd::write_sequence_csv(out_path(c, "sequence.csv"), c.oct.e0, c.oct.omega_th,
                          c.sequence.n, computed, power, p.header);
  dqd::write_field_csv(out_path(c, "sequence_field.csv"), seq.field_total,
                       p.header);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"double-quantum-dot charge-transfer control experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  std::vector<std::string> overrides;
  bool strict = false;
  app.add_option("--config", config_path, "config file (key = value lines)");
  app.add_option("--set", overrides, "override one config key, e.g. --set oct.E0=1.0");
  app.add_option("--output-dir", output_dir, "artifact directory (overrides the output_dir key)");
  app.add_flag("--strict", strict, "exit nonzero when an optimization does not converge");

  CLI::App* eigen_cmd = app.add_subcommand("eigen", "solve and dump the stationary states");
  std::string mode;
  CLI::App* optimize_cmd =
      app.add_subcommand("optimize", "optimize one process (prepare: |0> to |L>; transfer: |L> to |R>)");
  optimize_cmd->add_option("mode", mode, "prepare or transfer")
      ->required()
      ->check(CLI::IsMember({"prepare", "transfer"}));
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "one transfer optimization per sweep.values entry");
  CLI::App* sequence_cmd =
      app.add_subcommand("sequence", "n-fold chained transfers driven by one merged field");
  for (CLI::App* sub : {eigen_cmd, optimize_cmd, sweep_cmd, sequence_cmd}) {
    sub->fallthrough(); // global flags may follow the subcommand name
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    dqd::ExperimentConfig config;
    if (!config_path.empty()) {
      config = dqd::load_config(config_path);
    }
    for (const auto& assignment : overrides) {
      dqd::apply_override(config, assignment);
    }
    if (!output_dir.empty()) {
      config.output_dir = output_dir;
    }
    dqd::validate(config);

    if (eigen_cmd->parsed()) return cmd_eigen(config);
    if (optimize_cmd->parsed()) return cmd_optimize(config, mode, strict);
    if (sweep_cmd->parsed()) return cmd_sweep(config);
    if (sequence_cmd->parsed()) return cmd_sequence(config, strict);
    return 2;
  } catch (const dqd::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
