#include "dqd/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace dqd {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write '" + path + "'");
  }
  return out;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return std::string(buf);
}

// Shortest digit string that parses back to the same double.
std::string fmt_exact(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

} // namespace

std::string artifact_header(const std::string& config_hash, const UnitSystem& units) {
  return "# config " + config_hash + " | E_h* = " + fmt("%.6f", units.energy_meV) +
         " meV | a0* = " + fmt("%.6f", units.length_nm) +
         " nm | t0* = " + fmt("%.6f", units.time_fs) + " fs";
}

void write_field_csv(const std::string& path, const ControlField& field,
                     const std::string& header) {
  std::ofstream out = open_out(path);
  out << header << "\n" << "t,epsilon\n";
  for (int j = 0; j < field.n_samples(); ++j) {
    out << fmt("%.9f", field.mesh().time(j)) << ',' << fmt("%.16e", field[j])
        << '\n';
  }
}

ControlField read_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot read field file '" + path + "'");
  }
  std::vector<double> times;
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 't') continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error("malformed row in '" + path + "': '" + line + "'");
    }
    char* end = nullptr;
    const double t = std::strtod(line.c_str(), &end);
    const double v = std::strtod(line.c_str() + comma + 1, &end);
    times.push_back(t);
    values.push_back(v);
  }
  if (times.size() < 2) {
    throw Error("field file '" + path + "' holds fewer than two samples");
  }
  const int n_steps = static_cast<int>(times.size()) - 1;
  const double t_final = times.back();
  TimeMesh mesh = TimeMesh::from_steps(t_final, n_steps);
  const double tol = 1e-9 * std::max(1.0, t_final);
  for (int j = 0; j <= n_steps; ++j) {
    if (std::abs(times[j] - mesh.time(j)) > tol) {
      throw Error("field file '" + path + "' has a non-uniform time column");
    }
  }
  return ControlField(mesh, std::move(values));
}

void write_spectrum_csv(const std::string& path, const FieldSpectrum& spectrum,
                        const std::string& header) {
  std::ofstream out = open_out(path);
  out << header << "\n" << "omega,re,im,abs\n";
  for (std::size_t k = 0; k < spectrum.omega.size(); ++k) {
    out << fmt("%.10f", spectrum.omega[k]) << ','
        << fmt("%.16e", spectrum.amplitude[k].real()) << ','
        << fmt("%.16e", spectrum.amplitude[k].imag()) << ','
        << fmt("%.16e", std::abs(spectrum.amplitude[k])) << '\n';
  }
}

void write_occupations_csv(const std::string& path,
                           const std::vector<double>& times,
                           const std::vector<std::vector<double>>& rows,
                           int n_eigen, const std::string& header) {
  if (times.size() != rows.size()) {
    throw Error("occupation rows and times disagree in length");
  }
  std::ofstream out = open_out(path);
  out << header << "\n" << "t";
  for (int j = 0; j < n_eigen; ++j) {
    out << ",p" << j;
  }
  out << ",pL,pR\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != n_eigen + 2) {
      throw Error("occupation row width does not match the tracked basis");
    }
    out << fmt("%.6f", times[i]);
    for (double p : rows[i]) {
      out << ',' << fmt("%.12e", p);
    }
    out << '\n';
  }
}

void write_eigenvalues_csv(const std::string& path, const SpectrumBundle& spectrum,
                           const std::string& header) {
  std::ofstream out = open_out(path);
  out << header << "\n" << "index,energy\n";
  for (const auto& pair : spectrum.pairs) {
    out << pair.index << ',' << fmt("%.16e", pair.energy) << '\n';
  }
}

void write_eigenvectors_csv(const std::string& path, const Grid& grid,
                            const SpectrumBundle& spectrum,
                            const std::string& header) {
  std::ofstream out = open_out(path);
  out << header << "\n" << "x";
  for (int j = 0; j < spectrum.count(); ++j) {
    out << ",psi" << j;
  }
  out << '\n';
  for (int i = 0; i < grid.n_points(); ++i) {
    out << fmt("%.6f", grid.x(i));
    for (int j = 0; j < spectrum.count(); ++j) {
      out << ',' << fmt("%.16e", spectrum.state(j)[i].real());
    }
    out << '\n';
  }
}

void write_sequence_csv(const std::string& path, double e0, double omega_th,
                        const std::vector<int>& ns,
                        const std::vector<double>& computed,
                        const std::vector<double>& power,
                        const std::string& header) {
  if (ns.size() != computed.size() || ns.size() != power.size()) {
    throw Error("sequence table columns disagree in length");
  }
  std::ofstream out = open_out(path);
  out << header << "\n" << "E0,omega_th,n,computed_yield,power_law_yield\n";
  for (std::size_t i = 0; i < ns.size(); ++i) {
    out << fmt_exact(e0) << ',' << fmt_exact(omega_th) << ',' << ns[i] << ','
        << fmt("%.10f", computed[i]) << ',' << fmt("%.10f", power[i]) << '\n';
  }
}

SweepWriter::SweepWriter(const std::string& path, const std::string& parameter,
                         const std::string& header)
    : out_(path) {
  if (!out_) {
    throw Error("cannot write '" + path + "'");
  }
  out_ << header << "\n" << parameter << ",yield,iterations,converged\n";
  out_.flush();
}

void SweepWriter::add_row(double value, double yield, int iterations,
                          bool converged) {
  out_ << fmt_exact(value) << ',' << fmt("%.10f", yield) << ',' << iterations
       << ',' << (converged ? 1 : 0) << '\n';
  out_.flush();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out = open_out(path);
  out << content;
}

} // namespace dqd
