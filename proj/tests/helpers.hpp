#ifndef DQD_TESTS_HELPERS_HPP
#define DQD_TESTS_HELPERS_HPP

#include <vector>

#include "dqd/eigensolver.hpp"
#include "dqd/grid.hpp"
#include "dqd/propagator.hpp"

namespace dqd::testing {

// Canonical double-well setup shared across test files; solved once.
inline const Grid& default_grid() {
  static const Grid g = build_grid(-12.0, 12.0, 481);
  return g;
}

inline const std::vector<double>& default_potential() {
  static const std::vector<double> v = potential_dqd(default_grid(), {});
  return v;
}

inline const SpectrumBundle& default_spectrum() {
  static const SpectrumBundle s =
      solve_eigenstates(default_grid(), default_potential(), 12);
  return s;
}

inline const Propagator& default_propagator() {
  static const Propagator p(default_grid(), default_potential());
  return p;
}

} // namespace dqd::testing

#endif
