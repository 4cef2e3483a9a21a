#ifndef DQD_REPORT_HPP
#define DQD_REPORT_HPP

#include <fstream>
#include <string>
#include <vector>

#include "dqd/eigensolver.hpp"
#include "dqd/fields.hpp"
#include "dqd/units.hpp"

namespace dqd {

/// Comment line stamped at the top of every artifact: config hash plus
/// the effective unit constants the numbers are expressed in.
std::string artifact_header(const std::string& config_hash, const UnitSystem& units);

/// Columns t,epsilon; epsilon in full %.16e precision so a written
/// field reloads bit-for-bit.
void write_field_csv(const std::string& path, const ControlField& field,
                     const std::string& header);

/// Inverse of write_field_csv; reconstructs the mesh from the time
/// column and throws Error when the file is missing or non-uniform.
ControlField read_field_csv(const std::string& path);

/// Columns omega,re,im,abs.
void write_spectrum_csv(const std::string& path, const FieldSpectrum& spectrum,
                        const std::string& header);

/// Columns t,p0,...,p{n_eigen-1},pL,pR. Each row must carry
/// n_eigen + 2 occupation entries.
void write_occupations_csv(const std::string& path,
                           const std::vector<double>& times,
                           const std::vector<std::vector<double>>& rows,
                           int n_eigen, const std::string& header);

/// Columns index,energy.
void write_eigenvalues_csv(const std::string& path, const SpectrumBundle& spectrum,
                           const std::string& header);

/// Columns x,psi0,...,psi{k-1} (real parts; the stationary states are real).
void write_eigenvectors_csv(const std::string& path, const Grid& grid,
                            const SpectrumBundle& spectrum,
                            const std::string& header);

/// Columns E0,omega_th,n,computed_yield,power_law_yield.
void write_sequence_csv(const std::string& path, double e0, double omega_th,
                        const std::vector<int>& ns,
                        const std::vector<double>& computed,
                        const std::vector<double>& power,
                        const std::string& header);

/// Sweep CSV that flushes after every row, so an interrupted sweep
/// still leaves the completed points on disk.
class SweepWriter {
public:
  SweepWriter(const std::string& path, const std::string& parameter,
              const std::string& header);
  void add_row(double value, double yield, int iterations, bool converged);

private:
  std::ofstream out_;
};

void write_text_file(const std::string& path, const std::string& content);

} // namespace dqd

#endif
