#include "dualsvd/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dualsvd {

const char* method_name(Method m) {
  switch (m) {
    case Method::CCDSVD: return "CCDSVD";
    case Method::RCCDSVD: return "RCCDSVD";
    case Method::RCCDSVD2: return "RCCDSVD2";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_s(Clock::time_point t0, Clock::time_point t1) {
  return std::chrono::duration<double>(t1 - t0).count();
}

// real standard normals, same underlying stream as randn_complex
RealMatrix randn_real(Index rows, Index cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  RealMatrix out(rows, cols);
  bool have_spare = false;
  double spare = 0.0;
  auto next = [&]() {
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    const double u1 = (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    spare = rad * std::sin(ang);
    have_spare = true;
    return rad * std::cos(ang);
  };
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) out(i, j) = next();
  return out;
}

ComplexMatrix random_factor(Index rows, Index cols, Field field, std::uint64_t seed) {
  if (field == Field::Real) return randn_real(rows, cols, seed).cast<Complex>();
  return randn_complex(rows, cols, seed);
}

void check_gen_params(int m, int n, int r) {
  if (m < 1 || n < 1 || r < 1)
    throw InvalidParams("gen_lowrank_dual: dimensions and rank must be >= 1");
  if (r > std::min(m, n))
    throw InvalidParams("gen_lowrank_dual: rank exceeds min(m, n)");
}

}  // namespace

DualMatrix gen_lowrank_dual(int m, int n, int r, Field field, std::uint64_t seed) {
  check_gen_params(m, n, r);
  const ComplexMatrix b = random_factor(m, r, field, derive_seed(seed, 0));
  const ComplexMatrix c = random_factor(r, n, field, derive_seed(seed, 1));
  const ComplexMatrix c2 = random_factor(r, n, field, derive_seed(seed, 2));
  return DualMatrix(b * c, b * c2);
}

DualMatrix gen_lowrank_dual_independent(int m, int n, int r, Field field, std::uint64_t seed) {
  check_gen_params(m, n, r);
  const ComplexMatrix b = random_factor(m, r, field, derive_seed(seed, 0));
  const ComplexMatrix c = random_factor(r, n, field, derive_seed(seed, 1));
  const ComplexMatrix b2 = random_factor(m, r, field, derive_seed(seed, 2));
  const ComplexMatrix c2 = random_factor(r, n, field, derive_seed(seed, 3));
  return DualMatrix(b * c, b2 * c2);
}

Exp1Output run_exp1(const Exp1Config& cfg) {
  if (cfg.trials < 1) throw InvalidParams("run_exp1: trials must be >= 1");
  Exp1Output out;
  for (int m : cfg.m_list) {
    const int r = m / 5;
    if (r < 2) throw InvalidParams("run_exp1: m = " + std::to_string(m) + " gives r = m/5 < 2");
    const std::uint64_t size_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(m));

    struct Acc {
      double re1 = 0.0, re2 = 0.0, time_s = 0.0;
    };
    Acc acc[3];

    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t inst_seed = derive_seed(size_seed, t);
      const DualMatrix a = gen_lowrank_dual(2 * m, m, r, cfg.field, inst_seed);

      auto record = [&](Method method, const CCDSVDFactors& f, double time_s,
                        std::uint64_t seed) {
        ReportRow row{method, m, r, cfg.p, cfg.q,
                      re_standard(a, f), re_infinitesimal(a, f), time_s, seed};
        acc[static_cast<int>(method)].re1 += row.re1;
        acc[static_cast<int>(method)].re2 += row.re2;
        acc[static_cast<int>(method)].time_s += row.time_s;
        out.trial_rows.push_back(row);
      };

      {
        const auto t0 = Clock::now();
        const CCDSVDFactors f = ccdsvd(a);
        const auto t1 = Clock::now();
        record(Method::CCDSVD, f, elapsed_s(t0, t1), inst_seed);
      }
      {
        RandomizedParams params{r, cfg.p, cfg.q, OmegaKind::Complex, derive_seed(inst_seed, 101)};
        const auto t0 = Clock::now();
        const CCDSVDFactors f = rccdsvd(a, params);
        const auto t1 = Clock::now();
        record(Method::RCCDSVD, f, elapsed_s(t0, t1), params.seed);
      }
      {
        RandomizedParams params{r, cfg.p, cfg.q, OmegaKind::Dual, derive_seed(inst_seed, 102)};
        const auto t0 = Clock::now();
        const CCDSVDFactors f = rccdsvd(a, params);
        const auto t1 = Clock::now();
        record(Method::RCCDSVD2, f, elapsed_s(t0, t1), params.seed);
      }
    }

    for (Method method : {Method::CCDSVD, Method::RCCDSVD, Method::RCCDSVD2}) {
      const Acc& s = acc[static_cast<int>(method)];
      out.rows.push_back(ReportRow{method, m, r, cfg.p, cfg.q, s.re1 / cfg.trials,
                                   s.re2 / cfg.trials, s.time_s / cfg.trials, cfg.seed});
    }
  }
  return out;
}

std::vector<DefectTrial> run_defect_demo(int m, Field field, int trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidParams("run_defect_demo: trials must be >= 1");
  const int r = std::max(2, m / 5);
  std::vector<DefectTrial> out;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t inst_seed = derive_seed(derive_seed(seed, static_cast<std::uint64_t>(m)), t);
    const DualMatrix a = gen_lowrank_dual_independent(2 * m, m, r, field, inst_seed);
    DefectTrial trial;
    trial.infinitesimal_norm = a.infinitesimal.norm();
    try {
      ccdsvd(a);
    } catch (const ExistenceViolated& e) {
      trial.defect = e.defect;
      trial.violated = true;
    }
    out.push_back(trial);
  }
  return out;
}

std::vector<ReportRow> run_exp2(const Exp2Config& cfg) {
  const RealMatrix img_std = read_pgm(cfg.image_std_path);
  const RealMatrix img_inf = read_pgm(cfg.image_inf_path);
  if (img_std.rows() != img_inf.rows() || img_std.cols() != img_inf.cols())
    throw ShapeMismatch("run_exp2: images have different dimensions");
  if (cfg.r_list.empty()) throw InvalidParams("run_exp2: empty r list");
  const Index min_dim = std::min(img_std.rows(), img_std.cols());
  for (int r : cfg.r_list)
    if (r + cfg.p > min_dim)
      throw InvalidParams("run_exp2: r + p = " + std::to_string(r + cfg.p) +
                          " exceeds min image dimension " + std::to_string(min_dim));

  const DualMatrix a(dft2(img_std), dft2(img_inf));
  std::vector<ReportRow> rows;
  for (int q : cfg.q_list) {
    for (int r : cfg.r_list) {
      RandomizedParams params{r, cfg.p, q, OmegaKind::Complex,
                              derive_seed(cfg.seed, static_cast<std::uint64_t>(q) * 100000 + r)};
      const auto t0 = Clock::now();
      const CCDSVDFactors f = rccdsvd(a, params);
      const auto t1 = Clock::now();
      rows.push_back(ReportRow{Method::RCCDSVD, static_cast<int>(img_std.rows()), r, cfg.p, q,
                               re_standard(a, f), re_infinitesimal(a, f), elapsed_s(t0, t1),
                               params.seed});
    }
  }
  return rows;
}

namespace {

// skips whitespace and '#' comment lines between PGM header tokens
std::string next_pgm_token(std::istream& in) {
  std::string token;
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (!std::isspace(c)) {
      break;
    }
    c = in.get();
  }
  while (c != EOF && !std::isspace(c)) {
    token.push_back(static_cast<char>(c));
    c = in.get();
  }
  if (c != EOF) in.unget();
  return token;
}

long parse_pgm_int(const std::string& token, const std::string& path, const char* what) {
  if (token.empty()) throw IoError(path + ": truncated PGM header (" + what + ")");
  try {
    size_t pos = 0;
    const long value = std::stol(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw IoError(path + ": malformed PGM header token '" + token + "' (" + what + ")");
  }
}

}  // namespace

RealMatrix read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open");

  const std::string magic = next_pgm_token(in);
  if (magic != "P2" && magic != "P5")
    throw IoError(path + ": not a PGM file (magic '" + magic + "')");
  const long width = parse_pgm_int(next_pgm_token(in), path, "width");
  const long height = parse_pgm_int(next_pgm_token(in), path, "height");
  const long maxval = parse_pgm_int(next_pgm_token(in), path, "maxval");
  if (width < 1 || height < 1)
    throw IoError(path + ": non-positive image dimensions");
  if (maxval < 1 || maxval > 65535)
    throw IoError(path + ": maxval " + std::to_string(maxval) + " out of range [1, 65535]");

  RealMatrix out(height, width);
  const double scale = 1.0 / static_cast<double>(maxval);
  if (magic == "P2") {
    for (long i = 0; i < height; ++i)
      for (long j = 0; j < width; ++j) {
        const long v = parse_pgm_int(next_pgm_token(in), path, "pixel");
        if (v < 0 || v > maxval) throw IoError(path + ": pixel value out of range");
        out(i, j) = static_cast<double>(v) * scale;
      }
  } else {
    // single whitespace byte separates the header from binary samples
    in.get();
    const int bytes_per_sample = maxval > 255 ? 2 : 1;
    std::vector<unsigned char> buf(static_cast<size_t>(width) * height * bytes_per_sample);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (static_cast<size_t>(in.gcount()) != buf.size())
      throw IoError(path + ": truncated PGM payload (" + std::to_string(in.gcount()) + " of " +
                    std::to_string(buf.size()) + " bytes)");
    size_t k = 0;
    for (long i = 0; i < height; ++i)
      for (long j = 0; j < width; ++j) {
        long v = buf[k++];
        if (bytes_per_sample == 2) v = (v << 8) | buf[k++];  // big-endian
        out(i, j) = static_cast<double>(v) * scale;
      }
  }
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::json row_to_json(const ReportRow& row) {
  return {{"method", method_name(row.method)}, {"size", row.size}, {"r", row.r},
          {"p", row.p},       {"q", row.q},    {"re1", row.re1},   {"re2", row.re2},
          {"time_s", row.time_s}, {"seed", row.seed}};
}

}  // namespace

void emit_report(const std::vector<ReportRow>& rows, ReportFormat format,
                 const std::string& path, const std::vector<ReportRow>& trial_rows) {
  std::ofstream out(path);
  if (!out) throw IoError(path + ": cannot open for writing");
  if (format == ReportFormat::Csv) {
    out << "method,size,r,p,q,re1,re2,time_s,seed\n";
    for (const ReportRow& row : rows)
      out << method_name(row.method) << ',' << row.size << ',' << row.r << ',' << row.p << ','
          << row.q << ',' << format_double(row.re1) << ',' << format_double(row.re2) << ','
          << format_double(row.time_s) << ',' << row.seed << '\n';
  } else {
    nlohmann::json doc;
    std::vector<std::uint64_t> seeds;
    for (const ReportRow& row : rows)
      if (std::find(seeds.begin(), seeds.end(), row.seed) == seeds.end())
        seeds.push_back(row.seed);
    doc["metadata"] = {
        {"library", "dualsvd"},
        {"version", "0.1.0"},
        {"power_loop", "alternating subspace iteration: Yt_j = A* Y_{j-1}, Y_j = A Qt_j, "
                       "each re-orthonormalized by dual QR"},
        {"seeds", seeds},
    };
    doc["rows"] = nlohmann::json::array();
    for (const ReportRow& row : rows) doc["rows"].push_back(row_to_json(row));
    if (!trial_rows.empty()) {
      doc["trial_rows"] = nlohmann::json::array();
      for (const ReportRow& row : trial_rows) doc["trial_rows"].push_back(row_to_json(row));
    }
    out << doc.dump(2) << '\n';
  }
  if (!out) throw IoError(path + ": write failed");
}

void emit_gnuplot_script(const std::string& csv_path, const std::string& script_path,
                         const std::vector<int>& q_list) {
  std::ofstream out(script_path);
  if (!out) throw IoError(script_path + ": cannot open for writing");
  out << "set datafile separator ','\n"
      << "set logscale y\n"
      << "set xlabel 'target rank r'\n"
      << "set key outside\n"
      << "set terminal pngcairo size 1200,500\n"
      << "set output 'sweep.png'\n"
      << "set multiplot layout 1,2\n";
  for (int pass = 0; pass < 2; ++pass) {
    const int col = pass == 0 ? 6 : 7;
    out << "set title '" << (pass == 0 ? "standard part" : "infinitesimal part") << "'\n"
        << "plot ";
    for (size_t i = 0; i < q_list.size(); ++i) {
      if (i) out << ", ";
      out << "'" << csv_path << "' using 3:($5==" << q_list[i] << "?$" << col
          << ":1/0) with linespoints title 'q=" << q_list[i] << "'";
    }
    out << "\n";
  }
  out << "unset multiplot\n";
  if (!out) throw IoError(script_path + ": write failed");
}

}  // namespace dualsvd
