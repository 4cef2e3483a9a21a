#include "dqd/fields.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include <fftw3.h>

namespace dqd {

namespace {
// FFTW plan creation/destruction is not thread-safe; transforms here are
// cheap next to propagation, so the whole call is serialized.
std::mutex fftw_mutex;
} // namespace

TimeMesh TimeMesh::from_steps(double t_final, int n_steps) {
  if (!(t_final > 0.0)) {
    throw DomainError("time mesh needs t_final > 0");
  }
  if (n_steps < 1) {
    throw DomainError("time mesh needs at least one step");
  }
  return TimeMesh{t_final, n_steps, t_final / n_steps};
}

TimeMesh TimeMesh::from_dt(double t_final, double dt) {
  if (!(dt > 0.0)) {
    throw StepSizeError("time mesh needs dt > 0");
  }
  const int n = static_cast<int>(std::lround(t_final / dt));
  return from_steps(t_final, std::max(n, 1));
}

double envelope_value(double t, double t_final, const EnvelopeParams& params) {
  if (!(params.a > 0.0) || !(params.b > 2.0)) {
    throw DomainError("envelope needs a > 0 and b > 2");
  }
  if (!(t_final > 0.0) || t < 0.0 || t > t_final) {
    throw DomainError("envelope time outside [0, T]");
  }
  const double s = params.a / t_final;
  return 0.5 * (std::erf(s * (t - t_final / params.b)) +
                std::erf(-s * (t - t_final + t_final / params.b)));
}

std::vector<double> envelope_samples(const TimeMesh& mesh,
                                     const EnvelopeParams& params) {
  std::vector<double> f(mesh.n_samples());
  for (int j = 0; j < mesh.n_samples(); ++j) {
    const double t = std::clamp(mesh.time(j), 0.0, mesh.t_final);
    f[j] = envelope_value(t, mesh.t_final, params);
  }
  return f;
}

ControlField::ControlField(TimeMesh mesh, std::vector<double> samples)
    : mesh_(mesh), samples_(std::move(samples)) {
  if (static_cast<int>(samples_.size()) != mesh_.n_samples()) {
    throw MeshMismatchError("field has " + std::to_string(samples_.size()) +
                            " samples but the mesh has " +
                            std::to_string(mesh_.n_samples()) + " nodes");
  }
  for (double s : samples_) {
    if (!std::isfinite(s)) {
      throw DomainError("field samples must be finite");
    }
  }
}

double fluence(const ControlField& field) {
  const auto& s = field.samples();
  double acc = 0.0;
  for (int j = 0; j + 1 < field.n_samples(); ++j) {
    acc += s[j] * s[j];
  }
  return acc * field.mesh().dt;
}

double FieldSpectrum::fluence() const {
  // One-sided Parseval: interior bins carry their conjugate mirror.
  double acc = 0.0;
  const int n_bins = static_cast<int>(amplitude.size());
  for (int k = 0; k < n_bins; ++k) {
    const bool mirrored = k > 0 && !(n_time % 2 == 0 && k == n_bins - 1);
    acc += (mirrored ? 2.0 : 1.0) * std::norm(amplitude[k]);
  }
  return acc * dt / n_time;
}

FieldSpectrum spectrum(const ControlField& field) {
  const int m = field.mesh().n_steps;
  const int n_bins = m / 2 + 1;

  FieldSpectrum sp;
  sp.dt = field.mesh().dt;
  sp.n_time = m;
  sp.delta_omega = 2.0 * std::numbers::pi / (m * sp.dt);
  sp.omega.resize(n_bins);
  sp.amplitude.resize(n_bins);

  std::lock_guard<std::mutex> lock(fftw_mutex);
  std::vector<double> in(field.samples().begin(), field.samples().begin() + m);
  std::vector<fftw_complex> out(n_bins);
  fftw_plan plan = fftw_plan_dft_r2c_1d(m, in.data(), out.data(), FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  for (int k = 0; k < n_bins; ++k) {
    sp.omega[k] = k * sp.delta_omega;
    sp.amplitude[k] = std::complex<double>(out[k][0], out[k][1]);
  }
  return sp;
}

ControlField apply_frequency_filter(const ControlField& field, double omega_th) {
  if (!(omega_th > 0.0)) {
    throw DomainError("frequency threshold must be positive");
  }
  const int m = field.mesh().n_steps;
  const int n_bins = m / 2 + 1;
  const double delta_omega = 2.0 * std::numbers::pi / (m * field.mesh().dt);

  std::lock_guard<std::mutex> lock(fftw_mutex);
  std::vector<double> buf(field.samples().begin(), field.samples().begin() + m);
  std::vector<fftw_complex> freq(n_bins);

  fftw_plan fwd = fftw_plan_dft_r2c_1d(m, buf.data(), freq.data(), FFTW_ESTIMATE);
  fftw_execute(fwd);
  fftw_destroy_plan(fwd);

  for (int k = 0; k < n_bins; ++k) {
    if (k * delta_omega > omega_th) {
      freq[k][0] = 0.0;
      freq[k][1] = 0.0;
    }
  }

  fftw_plan bwd = fftw_plan_dft_c2r_1d(m, freq.data(), buf.data(), FFTW_ESTIMATE);
  fftw_execute(bwd);
  fftw_destroy_plan(bwd);

  std::vector<double> out(field.n_samples());
  const double inv_m = 1.0 / m;
  for (int j = 0; j < m; ++j) {
    out[j] = buf[j] * inv_m;
  }
  out[m] = out[0]; // the filtered field is T-periodic by construction
  return ControlField(field.mesh(), std::move(out));
}

ControlField time_invert(const ControlField& field) {
  std::vector<double> rev(field.samples().rbegin(), field.samples().rend());
  return ControlField(field.mesh(), std::move(rev));
}

ControlField concatenate(const std::vector<ControlField>& fields) {
  if (fields.empty()) {
    throw DomainError("cannot concatenate an empty field list");
  }
  if (fields.size() == 1) {
    return fields.front();
  }
  const double dt = fields.front().mesh().dt;
  int total_steps = 0;
  for (const auto& f : fields) {
    if (f.mesh().dt != dt) {
      throw MeshMismatchError("concatenated fields must share dt");
    }
    total_steps += f.mesh().n_steps;
  }

  std::vector<double> joined;
  joined.reserve(total_steps + 1);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto& s = fields[i].samples();
    const bool last = i + 1 == fields.size();
    joined.insert(joined.end(), s.begin(), last ? s.end() : s.end() - 1);
  }

  TimeMesh mesh{dt * total_steps, total_steps, dt};
  return ControlField(mesh, std::move(joined));
}

ControlField rescale_fluence(const ControlField& field, double target_fluence) {
  if (!(target_fluence > 0.0)) {
    throw DomainError("target fluence must be positive");
  }
  const double fl = fluence(field);
  if (!(fl > 0.0)) {
    throw ZeroOverlapError("cannot rescale a zero field to a positive fluence");
  }
  const double scale = std::sqrt(target_fluence / fl);
  std::vector<double> out(field.samples());
  for (double& s : out) {
    s *= scale;
  }
  return ControlField(field.mesh(), std::move(out));
}

} // namespace dqd
