#ifndef DQD_SEQUENCE_HPP
#define DQD_SEQUENCE_HPP

#include <vector>

#include "dqd/oct.hpp"
#include "dqd/propagator.hpp"

namespace dqd {

/// Outcome of an n-fold chained transfer driven by one continuous field.
struct SequenceResult {
  int n_processes;
  std::vector<double> per_segment_yield; ///< [k] = target-k occupation at t=(k+1)T
  std::vector<double> power_law_prediction; ///< [k] = single_yield^(k+1)
  double single_yield; ///< measured yield of the first segment
  ControlField field_total;
};

/// Chain of n segments alternating the base field with its
/// time-inversion, starting with the base field. n = 1 returns the
/// base field unchanged. Throws DomainError for n < 1.
ControlField build_sequence(const ControlField& base_field, int n);

/// single_yield raised to the n-th power: the naive prediction for n
/// chained transfers. Throws DomainError unless single_yield is in
/// [0, 1] and n >= 1.
double power_law_prediction(double single_yield, int n);

/// One continuous propagation of psi0 through build_sequence(base, n),
/// measuring |<target_k|psi>|^2 at every segment boundary (k+1)T with
/// targets cycled (|R>, |L>, ... for the canonical switch chain). No
/// re-projection happens between segments. The n = 1 result reproduces
/// a direct propagation of the base field bit for bit.
SequenceResult run_sequence(const Propagator& prop, const WaveFunction& psi0,
                            const ControlField& base_field, int n,
                            const std::vector<WaveFunction>& targets);

} // namespace dqd

#endif
