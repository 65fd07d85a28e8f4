#pragma once

#include <string>
#include <vector>

#include "dualsvd/error_bounds.hpp"

namespace dualsvd {

enum class Field { Real, Complex };
enum class Method { CCDSVD, RCCDSVD, RCCDSVD2 };
enum class ReportFormat { Csv, Json };

const char* method_name(Method m);

/// One benchmark measurement. `size` is the column count m of the 2m x m
/// instance for the random-matrix experiment and the image row count for the
/// power-scheme sweep.
struct ReportRow {
  Method method = Method::CCDSVD;
  int size = 0;
  int r = 0;
  int p = 0;
  int q = 0;
  double re1 = 0.0;
  double re2 = 0.0;
  double time_s = 0.0;
  std::uint64_t seed = 0;
};

struct Exp1Config {
  std::vector<int> m_list{200, 400};  // desk-scale defaults
  Field field = Field::Real;
  int p = 10;
  int q = 1;
  int trials = 20;
  std::uint64_t seed = 0;
};

struct Exp2Config {
  std::string image_std_path;
  std::string image_inf_path;
  std::vector<int> r_list;
  int p = 4;
  std::vector<int> q_list{0, 1, 2};
  std::uint64_t seed = 0;
};

/// Rank-r dual matrix with a shared left factor: A_s = B C, A_i = B C' with
/// B (m x r) common to both parts and C, C' (r x n) independent. Sharing B
/// makes the decomposition existence condition hold for random data.
DualMatrix gen_lowrank_dual(int m, int n, int r, Field field, std::uint64_t seed);

/// Rank-r dual matrix with fully independent factors for both parts; such
/// instances violate the existence condition with overwhelming probability.
DualMatrix gen_lowrank_dual_independent(int m, int n, int r, Field field, std::uint64_t seed);

struct Exp1Output {
  std::vector<ReportRow> rows;        // per (m, method), errors and time averaged
  std::vector<ReportRow> trial_rows;  // per (m, method, trial)
};

/// Runs the random-matrix benchmark: for each m, factors 2m x m instances
/// with r = m/5 by CCDSVD, RCCDSVD and RCCDSVD2 (dual test matrix) and
/// averages relative errors and wall time over the trials. Error columns are
/// deterministic for a fixed seed; times vary. Wall time covers only the
/// factorization call.
Exp1Output run_exp1(const Exp1Config& cfg);

struct DefectTrial {
  double defect = 0.0;
  double infinitesimal_norm = 0.0;
  bool violated = false;
};

/// Demonstrates the existence-violation path: independent-factor instances of
/// shape 2m x m are fed to CCDSVD and the reported defects are collected.
std::vector<DefectTrial> run_defect_demo(int m, Field field, int trials, std::uint64_t seed);

/// Runs the power-scheme sweep: reads the two grayscale images, builds
/// A = dft2(img_std) + dft2(img_inf) eps and factors it by RCCDSVD for every
/// (r, q) in the configured ranges.
std::vector<ReportRow> run_exp2(const Exp2Config& cfg);

/// Reads a PGM image (binary P5 or ASCII P2, maxval <= 65535) into a
/// row-major real matrix scaled to [0, 1].
RealMatrix read_pgm(const std::string& path);

/// Writes rows to CSV (columns method,size,r,p,q,re1,re2,time_s,seed) or to
/// JSON with a metadata object; trial_rows, when given, are added to the JSON
/// output only.
void emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                 const std::string& path, const std::vector<ReportRow>& trial_rows = {});

/// Writes a gnuplot script plotting the relative errors of a sweep CSV
/// against r, one curve per q.
void emit_gnuplot_script(const std::string& csv_path, const std::string& script_path,
                         const std::vector<int>& q_list);

}  // namespace dualsvd
