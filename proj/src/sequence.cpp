#include "dqd/sequence.hpp"

#include <cmath>

namespace dqd {

ControlField build_sequence(const ControlField& base_field, int n) {
  if (n < 1) {
    throw DomainError("sequence needs n >= 1 segments");
  }
  std::vector<ControlField> segments;
  segments.reserve(n);
  const ControlField inverted = time_invert(base_field);
  for (int k = 0; k < n; ++k) {
    segments.push_back(k % 2 == 0 ? base_field : inverted);
  }
  return concatenate(segments);
}

double power_law_prediction(double single_yield, int n) {
  if (!(single_yield >= 0.0) || !(single_yield <= 1.0)) {
    throw DomainError("single yield must lie in [0, 1]");
  }
  if (n < 1) {
    throw DomainError("power law needs n >= 1");
  }
  return std::pow(single_yield, n);
}

SequenceResult run_sequence(const Propagator& prop, const WaveFunction& psi0,
                            const ControlField& base_field, int n,
                            const std::vector<WaveFunction>& targets) {
  if (n < 1) {
    throw DomainError("sequence needs n >= 1 segments");
  }
  if (targets.empty()) {
    throw DomainError("sequence needs at least one target state");
  }
  if (!(psi0.grid() == prop.grid())) {
    throw GridMismatchError("initial state does not live on the propagator grid");
  }
  for (const auto& t : targets) {
    if (!(t.grid() == prop.grid())) {
      throw GridMismatchError("target does not live on the propagator grid");
    }
  }
  if (std::abs(psi0.norm() - 1.0) > 1e-6) {
    throw DomainError("initial state must be normalized");
  }

  ControlField total = build_sequence(base_field, n);
  const int m = base_field.mesh().n_steps;
  const double dt = base_field.mesh().dt;
  const double dx = prop.grid().dx();
  const std::vector<double>& e = total.samples();

  std::vector<Complex> amps = psi0.amplitudes();
  std::vector<double> segment_yield;
  segment_yield.reserve(n);

  for (int j = 0; j < total.mesh().n_steps; ++j) {
    prop.advance(amps, e[j], e[j + 1], dt);
    if ((j + 1) % m == 0) {
      const int k = (j + 1) / m - 1;
      const auto& tgt = targets[k % targets.size()].amplitudes();
      Complex ov = 0.0;
      for (std::size_t i = 0; i < tgt.size(); ++i) {
        ov += std::conj(tgt[i]) * amps[i];
      }
      segment_yield.push_back(std::norm(ov * dx));
    }
  }

  const double single = segment_yield.front();
  std::vector<double> power(n);
  for (int k = 0; k < n; ++k) {
    power[k] = power_law_prediction(single, k + 1);
  }

  return SequenceResult{n, std::move(segment_yield), std::move(power), single,
                        std::move(total)};
}

} // namespace dqd
