#ifndef DQD_CONFIG_HPP
#define DQD_CONFIG_HPP

#include <limits>
#include <string>
#include <vector>

#include "dqd/errors.hpp"

namespace dqd {

/// Every experiment parameter the command-line front end understands,
/// with the defaults that reproduce the headline transfer result when
/// no config file is given. Keys use dotted block syntax
/// (grid.x_min = -12); unknown keys are fatal.
struct ExperimentConfig {
  struct GridBlock {
    double x_min = -12.0;
    double x_max = 12.0;
    int n_points = 481;
  } grid;

  struct SystemBlock {
    double omega0 = 0.5;
    double d = 6.0;
  } system;

  struct PropagationBlock {
    double dt = 0.01;
    double t_final = 100.0; ///< key propagation.T
  } propagation;

  struct OctBlock {
    double e0 = 0.3;                                            ///< key oct.E0
    double omega_th = std::numeric_limits<double>::infinity();  ///< "inf" = no filter
    int max_iterations = 500;
    double yield_tolerance = 1e-7;
    double envelope_a = 100.0;
    double envelope_b = 20.0;
    double initial_frequency = 0.5;
  } oct;

  struct SweepBlock {
    std::string parameter; ///< one of omega_th, T, E0
    std::vector<double> values;
  } sweep;

  struct SequenceBlock {
    std::vector<int> n{1, 2, 5, 10, 50, 100};
    std::string base_field_csv; ///< optional: load the base field instead of optimizing
  } sequence;

  std::string output_dir = "out";
};

/// Parse a flat key = value config file ('#' starts a comment). Throws
/// ConfigError naming the offending key/line on unknown keys, bad
/// values, or an unreadable file.
ExperimentConfig load_config(const std::string& path);

/// Apply one "key=value" override (the --set flag). Same strictness as
/// the file parser.
void apply_override(ExperimentConfig& config, const std::string& assignment);

/// Cross-field validation; throws ConfigError with the failing key.
void validate(const ExperimentConfig& config);

/// Stable text serialization of every parameter, used for hashing and
/// for reproducing a run.
std::string canonical(const ExperimentConfig& config);

/// 16-hex-digit FNV-1a hash of canonical(config); stamped into every
/// output file so artifacts can be traced to their exact parameters.
std::string config_hash(const ExperimentConfig& config);

} // namespace dqd

#endif
