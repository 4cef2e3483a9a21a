#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "dqd/config.hpp"
#include "dqd/report.hpp"
#include "helpers.hpp"

using namespace dqd;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("field CSV round trip is bitwise") {
  TimeMesh mesh = TimeMesh::from_dt(10.0, 0.01);
  std::vector<double> s(mesh.n_samples());
  for (int j = 0; j < mesh.n_samples(); ++j)
    s[j] = 0.3 * std::sin(0.5 * mesh.time(j)) + 1e-12 * j;
  ControlField f(mesh, s);

  std::string path = "/tmp/dqd_test_field.csv";
  write_field_csv(path, f, "# test header");
  ControlField g = read_field_csv(path);

  REQUIRE(g.n_samples() == f.n_samples());
  CHECK(g.mesh().n_steps == mesh.n_steps);
  CHECK(std::abs(g.mesh().dt - mesh.dt) < 1e-12);
  for (int j = 0; j < f.n_samples(); ++j)
    CHECK(g[j] == f[j]); // %.16e survives the round trip exactly
  std::remove(path.c_str());
}

TEST_CASE("field CSV reader rejects broken input") {
  CHECK_THROWS_AS(read_field_csv("/nonexistent/field.csv"), Error);

  std::string path = "/tmp/dqd_test_nonuniform.csv";
  {
    std::ofstream out(path);
    out << "t,epsilon\n0,0.0\n1,0.1\n2.5,0.2\n3,0.1\n";
  }
  CHECK_THROWS_AS(read_field_csv(path), Error);
  std::remove(path.c_str());

  std::string empty = "/tmp/dqd_test_empty.csv";
  {
    std::ofstream out(empty);
    out << "t,epsilon\n";
  }
  CHECK_THROWS_AS(read_field_csv(empty), Error);
  std::remove(empty.c_str());
}

TEST_CASE("artifact header carries hash and unit constants") {
  ExperimentConfig c;
  std::string header = artifact_header(config_hash(c), UnitSystem::gaas());
  CHECK(header.find(config_hash(c)) != std::string::npos);
  CHECK(header.find("11.303632") != std::string::npos);
  CHECK(header.find("10.030673") != std::string::npos);
  CHECK(header.find("58.230127") != std::string::npos);
  CHECK(header[0] == '#');
}

TEST_CASE("occupation table enforces row width") {
  std::vector<double> times{0.0, 1.0};
  std::vector<std::vector<double>> rows{{0.1, 0.2, 0.3, 0.4},
                                        {0.1, 0.2, 0.3, 0.4}};
  std::string path = "/tmp/dqd_test_occ.csv";
  CHECK_NOTHROW(write_occupations_csv(path, times, rows, 2, "# h"));
  std::string text = slurp(path);
  CHECK(text.find("t,p0,p1,pL,pR") != std::string::npos);
  std::remove(path.c_str());

  std::vector<std::vector<double>> bad{{0.1, 0.2}, {0.1, 0.2}};
  CHECK_THROWS_AS(write_occupations_csv(path, times, bad, 2, "# h"), Error);
  std::vector<std::vector<double>> shorter{{0.1, 0.2, 0.3, 0.4}};
  CHECK_THROWS_AS(write_occupations_csv(path, times, shorter, 2, "# h"), Error);
}

TEST_CASE("eigen tables carry index, energy and node values") {
  const SpectrumBundle& s = testing::default_spectrum();
  std::string vals = "/tmp/dqd_test_evals.csv";
  std::string vecs = "/tmp/dqd_test_evecs.csv";
  write_eigenvalues_csv(vals, s, "# h");
  write_eigenvectors_csv(vecs, testing::default_grid(), s, "# h");

  std::string text = slurp(vals);
  CHECK(text.find("index,energy") != std::string::npos);
  CHECK(text.find("\n0,") != std::string::npos);
  std::string vtext = slurp(vecs);
  CHECK(vtext.find("x,psi0") != std::string::npos);
  std::remove(vals.c_str());
  std::remove(vecs.c_str());
}

TEST_CASE("sweep writer flushes each row") {
  std::string path = "/tmp/dqd_test_sweep.csv";
  {
    SweepWriter w(path, "omega_th", "# h");
    w.add_row(0.45, 0.42, 500, false);
    // Row must be on disk before the writer is destroyed.
    std::string text = slurp(path);
    CHECK(text.find("omega_th,yield,iterations,converged") != std::string::npos);
    CHECK(text.find("0.45") != std::string::npos);
    w.add_row(0.55, 0.96, 500, true);
  }
  std::string text = slurp(path);
  CHECK(text.find("0.55") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("sequence CSV pairs computed and power-law yields") {
  std::string path = "/tmp/dqd_test_seq.csv";
  write_sequence_csv(path, 0.3, 0.817, {1, 2, 5}, {0.999, 0.998, 0.995},
                     {0.999, 0.998, 0.995}, "# h");
  std::string text = slurp(path);
  CHECK(text.find("E0,omega_th,n,computed_yield,power_law_yield") != std::string::npos);
  CHECK(text.find("\n0.3,") != std::string::npos);
  std::remove(path.c_str());

  CHECK_THROWS_AS(write_sequence_csv(path, 0.3, 0.817, {1, 2}, {0.9}, {0.9}, "#"),
                  Error);
}
