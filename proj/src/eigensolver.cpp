#include "dqd/eigensolver.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <string>

#include <lapacke.h>

namespace dqd {

SpectrumBundle solve_eigenstates(const Grid& grid, const std::vector<double>& potential,
                                 int k) {
  const int n = grid.n_points();
  if (k < 2) {
    throw DomainError("solve_eigenstates needs k >= 2, got " + std::to_string(k));
  }
  if (k > n / 2) {
    throw DomainError("k = " + std::to_string(k) + " is too large for a " +
                      std::to_string(n) + "-point grid");
  }
  if (static_cast<int>(potential.size()) != n) {
    throw GridMismatchError("potential array length does not match grid");
  }

  const double dx = grid.dx();
  const double inv_dx2 = 1.0 / (dx * dx);

  // H = -(1/2) Laplacian + V: diagonal 1/dx^2 + V_i, off-diagonal
  // -1/(2 dx^2). Hard walls sit one node outside each boundary.
  std::vector<double> diag(n), offdiag(n - 1, -0.5 * inv_dx2);
  for (int i = 0; i < n; ++i) {
    diag[i] = inv_dx2 + potential[i];
  }

  std::vector<double> evals(n);
  std::vector<double> evecs(static_cast<std::size_t>(n) * k);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(k));
  lapack_int found = 0;
  lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, diag.data(),
                                   offdiag.data(), 0.0, 0.0, 1, k, 0.0, &found,
                                   evals.data(), evecs.data(), n, isuppz.data());
  if (info != 0 || found != k) {
    throw ConvergenceError("tridiagonal eigensolver failed (info=" +
                           std::to_string(info) + ", found=" + std::to_string(found) +
                           " of " + std::to_string(k) + ")");
  }

  // dstevr destroys diag/offdiag; rebuild for the residual check.
  for (int i = 0; i < n; ++i) {
    diag[i] = inv_dx2 + potential[i];
  }
  const double off = -0.5 * inv_dx2;

  SpectrumBundle bundle;
  bundle.pairs.reserve(k);
  const double inv_sqrt_dx = 1.0 / std::sqrt(dx);

  std::ostringstream residual_report;
  bool residual_bad = false;

  for (int j = 0; j < k; ++j) {
    const double* col = evecs.data() + static_cast<std::size_t>(j) * n;

    // Sign convention: positive at the leftmost node with |psi| > 1e-6
    // (amplitudes in Riemann-normalized units).
    double sign = 1.0;
    for (int i = 0; i < n; ++i) {
      const double v = col[i] * inv_sqrt_dx;
      if (std::abs(v) > 1e-6) {
        sign = v > 0.0 ? 1.0 : -1.0;
        break;
      }
    }

    std::vector<Complex> amp(n);
    for (int i = 0; i < n; ++i) {
      amp[i] = Complex{sign * col[i] * inv_sqrt_dx, 0.0};
    }

    // Residual ||H psi - E psi|| in the Riemann norm.
    double res2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double h = diag[i] * amp[i].real();
      if (i > 0) h += off * amp[i - 1].real();
      if (i + 1 < n) h += off * amp[i + 1].real();
      const double r = h - evals[j] * amp[i].real();
      res2 += r * r;
    }
    const double res = std::sqrt(res2 * dx);
    if (res > 1e-8) {
      residual_bad = true;
      residual_report << " state " << j << ": " << res;
    }

    bundle.pairs.push_back(Eigenpair{j, evals[j], WaveFunction(grid, std::move(amp))});
  }

  if (residual_bad) {
    throw ConvergenceError("eigenpair residuals above 1e-8:" + residual_report.str());
  }

  bundle.omega01 = bundle.pairs[1].energy - bundle.pairs[0].energy;
  return bundle;
}

WaveFunction make_superposition(const std::vector<Eigenpair>& pairs,
                                const std::vector<Complex>& coefficients) {
  if (pairs.empty() || pairs.size() != coefficients.size()) {
    throw DomainError("make_superposition: coefficient count must match state count");
  }
  WaveFunction out(pairs.front().state.grid());
  auto& amp = out.amplitudes();
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if (!(pairs[j].state.grid() == out.grid())) {
      throw GridMismatchError("make_superposition: states on different grids");
    }
    const auto& s = pairs[j].state.amplitudes();
    for (std::size_t i = 0; i < amp.size(); ++i) {
      amp[i] += coefficients[j] * s[i];
    }
  }
  return out.normalized(); // ZeroNormError if the combination cancels
}

namespace {
WaveFunction two_state_mix(const SpectrumBundle& spectrum, double sign1) {
  const double c = 1.0 / std::numbers::sqrt2;
  return make_superposition({spectrum.pairs[0], spectrum.pairs[1]},
                            {Complex{c, 0.0}, Complex{sign1 * c, 0.0}});
}
} // namespace

WaveFunction left_state(const SpectrumBundle& spectrum) {
  return two_state_mix(spectrum, 1.0);
}

WaveFunction right_state(const SpectrumBundle& spectrum) {
  return two_state_mix(spectrum, -1.0);
}

double half_period(double omega01) {
  if (!(omega01 > 0.0)) {
    throw DomainError("half_period needs omega01 > 0");
  }
  return std::numbers::pi / omega01;
}

} // namespace dqd
