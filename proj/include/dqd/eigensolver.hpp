#ifndef DQD_EIGENSOLVER_HPP
#define DQD_EIGENSOLVER_HPP

#include <vector>

#include "dqd/grid.hpp"

namespace dqd {

/// One stationary state of the discretized Hamiltonian.
struct Eigenpair {
  int index;          ///< 0-based, energies nondecreasing with index
  double energy;      ///< a.u.
  WaveFunction state; ///< unit norm, sign-fixed (see solve_eigenstates)
};

/// The k lowest eigenpairs plus the resonance frequency
/// omega01 = E1 - E0 of the two lowest (gerade/ungerade) states.
struct SpectrumBundle {
  std::vector<Eigenpair> pairs;
  double omega01;

  double energy(int i) const { return pairs[i].energy; }
  const WaveFunction& state(int i) const { return pairs[i].state; }
  int count() const { return static_cast<int>(pairs.size()); }
};

/// Lowest k eigenpairs of H = -(1/2) d^2/dx^2 + V with the 3-point
/// finite-difference Laplacian and hard-wall boundaries.
///
/// The discretized H is a real symmetric tridiagonal matrix; its
/// eigenpairs are computed with a standard tridiagonal algorithm
/// (LAPACK dstevr), so the output is deterministic. Eigenvector signs
/// are fixed so that psi_n(x) > 0 at the leftmost node where
/// |psi_n| > 1e-6; the left/right superpositions below rely on this.
///
/// Throws ConvergenceError (with residual norms in the message) when
/// any residual ||H psi - E psi|| exceeds 1e-8.
SpectrumBundle solve_eigenstates(const Grid& grid, const std::vector<double>& potential,
                                 int k = 12);

/// Normalized linear combination sum_j c_j |j>. The canonical calls are
/// |L> = (|0> + |1>)/sqrt(2) and |R> = (|0> - |1>)/sqrt(2).
/// Throws ZeroNormError when the combination vanishes.
WaveFunction make_superposition(const std::vector<Eigenpair>& pairs,
                                const std::vector<Complex>& coefficients);

/// |L>: charge localized in the left well (x < 0).
WaveFunction left_state(const SpectrumBundle& spectrum);

/// |R>: charge localized in the right well (x > 0).
WaveFunction right_state(const SpectrumBundle& spectrum);

/// Half a free oscillation period, pi/omega01: the time after which a
/// freely evolving |L> reaches |R>. Throws DomainError for omega01 <= 0.
double half_period(double omega01);

} // namespace dqd

#endif
