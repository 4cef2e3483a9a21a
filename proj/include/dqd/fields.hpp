#ifndef DQD_FIELDS_HPP
#define DQD_FIELDS_HPP

#include <complex>
#include <vector>

#include "dqd/time_mesh.hpp"

namespace dqd {

/// Parameters of the erf-based on/off window
/// f(t) = (1/2) { erf[(a/T)(t - T/b)] + erf[-(a/T)(t - T + T/b)] },
/// which ramps up near t = T/b and down near t = T - T/b.
struct EnvelopeParams {
  double a = 100.0;
  double b = 20.0;
};

/// Window value at time t in [0, T]. Throws DomainError outside [0, T]
/// or for invalid parameters (a > 0, b > 2 required so the two ramps
/// do not overlap).
double envelope_value(double t, double t_final, const EnvelopeParams& params);

/// Window evaluated at every mesh node; node times are clamped to
/// [0, T] so roundoff in dt * n_steps cannot trip the domain check.
std::vector<double> envelope_samples(const TimeMesh& mesh,
                                     const EnvelopeParams& params);

/// Real control-field samples eps(t_j) on the n_steps + 1 nodes of a
/// TimeMesh. Immutable value type; all transforms return new fields.
class ControlField {
public:
  ControlField(TimeMesh mesh, std::vector<double> samples);

  static ControlField zero(const TimeMesh& mesh) {
    return ControlField(mesh, std::vector<double>(mesh.n_samples(), 0.0));
  }

  const TimeMesh& mesh() const { return mesh_; }
  const std::vector<double>& samples() const { return samples_; }
  double operator[](int j) const { return samples_[j]; }
  int n_samples() const { return static_cast<int>(samples_.size()); }

private:
  TimeMesh mesh_;
  std::vector<double> samples_;
};

/// Time-integrated intensity int_0^T eps^2 dt, as the Riemann sum
/// dt * sum_{j<n_steps} eps_j^2. This is exactly the sum the discrete
/// Fourier transform preserves, so Parseval holds to roundoff.
double fluence(const ControlField& field);

/// One-sided discrete Fourier transform of a field: bins at
/// omega_k = k * 2*pi/T for k = 0 .. n_steps/2.
struct FieldSpectrum {
  std::vector<double> omega;
  std::vector<std::complex<double>> amplitude;
  double delta_omega; ///< 2*pi/T
  double dt;
  int n_time; ///< transform length (= n_steps)

  /// Spectral-side fluence; equals the time-domain fluence (Parseval).
  double fluence() const;
};

FieldSpectrum spectrum(const ControlField& field);

/// Hard (brick-wall) spectral cutoff: zero every Fourier bin with
/// omega > omega_th, transform back. The output is exactly real by
/// construction and the operation is a projection (idempotent,
/// fluence-nonincreasing). Throws DomainError for omega_th <= 0.
ControlField apply_frequency_filter(const ControlField& field, double omega_th);

/// Sample-order reversal, eps'(t_j) = eps(T - t_j). An involution; it
/// turns a left-to-right transfer field into the right-to-left one.
ControlField time_invert(const ControlField& field);

/// Join fields end-to-end on a shared dt. Each non-final segment drops
/// its last sample (the junction node belongs to the next segment), so
/// the Riemann fluence is exactly additive. Throws MeshMismatchError
/// when the segments disagree on dt.
ControlField concatenate(const std::vector<ControlField>& fields);

/// Scale the field so its fluence is exactly target_fluence.
/// Throws ZeroOverlapError when the field is identically zero.
ControlField rescale_fluence(const ControlField& field, double target_fluence);

} // namespace dqd

#endif
