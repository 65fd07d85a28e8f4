#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dualsvd/bench.hpp"
#include "test_support.hpp"

using namespace dualsvd;
namespace ts = dualsvd::testing;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("dualsvd_test_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path_, ec); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST(GenLowrankDual, ShapeRankAndExistence) {
  const int m = 40;
  const DualMatrix a = gen_lowrank_dual(2 * m, m, m / 5, Field::Real, 3);
  EXPECT_EQ(a.rows(), 2 * m);
  EXPECT_EQ(a.cols(), m);
  const CompactSVDResult svd = svd_compact(a.standard);
  EXPECT_EQ(svd.rank, m / 5);
  EXPECT_EQ(svd_compact(a.infinitesimal).rank, m / 5);
  EXPECT_LE(existence_defect(a, svd.U, svd.V), 1e-10 * a.infinitesimal.norm());

  const DualMatrix ac = gen_lowrank_dual(30, 20, 4, Field::Complex, 5);
  EXPECT_GT(ac.standard.imag().norm(), 0.0);
  EXPECT_EQ(svd_compact(ac.standard).rank, 4);
}

TEST(GenLowrankDual, IndependentFactorsViolateExistence) {
  const DualMatrix a = gen_lowrank_dual_independent(60, 30, 6, Field::Real, 7);
  const CompactSVDResult svd = svd_compact(a.standard);
  EXPECT_GT(existence_defect(a, svd.U, svd.V), 1e-3 * a.infinitesimal.norm());
}

TEST(GenLowrankDual, ParameterValidation) {
  EXPECT_THROW(gen_lowrank_dual(10, 5, 6, Field::Real, 0), InvalidParams);
  EXPECT_THROW(gen_lowrank_dual(0, 5, 2, Field::Real, 0), InvalidParams);
}

TEST(RunExp1, RowsAndDeterminism) {
  Exp1Config cfg;
  cfg.m_list = {50};
  cfg.p = 4;
  cfg.q = 1;
  cfg.trials = 2;
  cfg.seed = 11;
  const Exp1Output out1 = run_exp1(cfg);
  ASSERT_EQ(out1.rows.size(), 3u);  // one row per method
  EXPECT_EQ(out1.trial_rows.size(), 6u);
  for (const ReportRow& row : out1.rows) {
    EXPECT_EQ(row.size, 50);
    EXPECT_EQ(row.r, 10);
    EXPECT_LE(row.re1, 1e-9);
    EXPECT_LE(row.re2, 1e-8);
    EXPECT_GE(row.time_s, 0.0);
  }
  const Exp1Output out2 = run_exp1(cfg);
  for (size_t i = 0; i < out1.rows.size(); ++i) {
    EXPECT_EQ(out1.rows[i].re1, out2.rows[i].re1);  // errors reproduce bit-for-bit
    EXPECT_EQ(out1.rows[i].re2, out2.rows[i].re2);
  }
}

TEST(RunDefectDemo, EveryTrialViolates) {
  const auto trials = run_defect_demo(50, Field::Real, 5, 13);
  ASSERT_EQ(trials.size(), 5u);
  for (const DefectTrial& t : trials) {
    EXPECT_TRUE(t.violated);
    EXPECT_GT(t.defect, 1e-3 * t.infinitesimal_norm);
  }
}

TEST(ReadPgm, AsciiAndBinaryAgree) {
  TempDir dir;
  const RealMatrix img = ts::make_test_image(16, 42);
  ts::write_pgm_p2(dir.file("a.pgm"), img);
  ts::write_pgm_p5(dir.file("b.pgm"), img);
  const RealMatrix a = read_pgm(dir.file("a.pgm"));
  const RealMatrix b = read_pgm(dir.file("b.pgm"));
  ASSERT_EQ(a.rows(), 16);
  ASSERT_EQ(a.cols(), 16);
  EXPECT_EQ(a, b);
  EXPECT_LE((a - img).norm(), 1e-12);  // image was already quantized to 8 bits
}

TEST(ReadPgm, SmallAsciiValues) {
  TempDir dir;
  std::ofstream out(dir.file("tiny.pgm"));
  out << "P2\n# a comment line\n2 2\n255\n0 255\n255 0\n";
  out.close();
  const RealMatrix img = read_pgm(dir.file("tiny.pgm"));
  ASSERT_EQ(img.rows(), 2);
  EXPECT_DOUBLE_EQ(img(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(img(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(img(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(img(1, 1), 0.0);
}

TEST(ReadPgm, SixteenBitBinary) {
  TempDir dir;
  const RealMatrix img = ts::make_test_image(8, 9, 65535);
  ts::write_pgm_p5(dir.file("wide.pgm"), img, 65535);
  const RealMatrix back = read_pgm(dir.file("wide.pgm"));
  EXPECT_LE((back - img).norm(), 1e-12);
}

TEST(ReadPgm, ErrorPaths) {
  TempDir dir;
  EXPECT_THROW(read_pgm(dir.file("missing.pgm")), IoError);

  std::ofstream bad(dir.file("bad.pgm"));
  bad << "P7\n2 2\n255\n0 0 0 0\n";
  bad.close();
  EXPECT_THROW(read_pgm(dir.file("bad.pgm")), IoError);

  // truncated binary payload
  std::ofstream trunc(dir.file("trunc.pgm"), std::ios::binary);
  trunc << "P5\n4 4\n255\n";
  trunc.put(1);
  trunc.put(2);
  trunc.close();
  EXPECT_THROW(read_pgm(dir.file("trunc.pgm")), IoError);

  std::ofstream huge(dir.file("huge.pgm"));
  huge << "P2\n2 2\n70000\n0 0 0 0\n";
  huge.close();
  EXPECT_THROW(read_pgm(dir.file("huge.pgm")), IoError);
}

TEST(EmitReport, CsvHeaderAndRoundTrip) {
  TempDir dir;
  emit_report({}, ReportFormat::Csv, dir.file("empty.csv"));
  std::ifstream in(dir.file("empty.csv"));
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "method,size,r,p,q,re1,re2,time_s,seed");
  std::string rest;
  EXPECT_FALSE(std::getline(in, rest));

  ReportRow row{Method::RCCDSVD, 200, 40, 10, 1, 1.25e-13, 3.5e-12, 0.125, 42};
  emit_report({row}, ReportFormat::Csv, dir.file("one.csv"));
  std::ifstream one(dir.file("one.csv"));
  std::getline(one, header);
  std::string line;
  ASSERT_TRUE(std::getline(one, line));
  std::stringstream ss(line);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  ASSERT_EQ(fields.size(), 9u);
  EXPECT_EQ(fields[0], "RCCDSVD");
  EXPECT_EQ(std::stoi(fields[1]), 200);
  EXPECT_EQ(std::stoi(fields[2]), 40);
  EXPECT_EQ(std::stoi(fields[3]), 10);
  EXPECT_EQ(std::stoi(fields[4]), 1);
  EXPECT_DOUBLE_EQ(std::stod(fields[5]), 1.25e-13);
  EXPECT_DOUBLE_EQ(std::stod(fields[6]), 3.5e-12);
  EXPECT_DOUBLE_EQ(std::stod(fields[7]), 0.125);
  EXPECT_EQ(std::stoull(fields[8]), 42u);
}

TEST(EmitReport, JsonRoundTripWithMetadata) {
  TempDir dir;
  std::vector<ReportRow> rows{{Method::CCDSVD, 100, 20, 10, 1, 1e-14, 2e-14, 0.5, 7},
                              {Method::RCCDSVD2, 100, 20, 10, 1, 3e-13, 4e-12, 0.1, 8}};
  std::vector<ReportRow> trials{{Method::CCDSVD, 100, 20, 10, 1, 1.5e-14, 2.5e-14, 0.51, 9}};
  emit_report(rows, ReportFormat::Json, dir.file("report.json"), trials);
  std::ifstream in(dir.file("report.json"));
  nlohmann::json doc = nlohmann::json::parse(in);
  ASSERT_TRUE(doc.contains("metadata"));
  EXPECT_EQ(doc["metadata"]["library"], "dualsvd");
  EXPECT_TRUE(doc["metadata"].contains("power_loop"));
  ASSERT_TRUE(doc["metadata"].contains("seeds"));
  EXPECT_EQ(doc["metadata"]["seeds"].size(), 2u);  // distinct seeds 7 and 8
  ASSERT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["rows"][0]["method"], "CCDSVD");
  EXPECT_EQ(doc["rows"][0]["size"], 100);
  EXPECT_DOUBLE_EQ(doc["rows"][0]["re1"].get<double>(), 1e-14);
  EXPECT_DOUBLE_EQ(doc["rows"][1]["re2"].get<double>(), 4e-12);
  EXPECT_EQ(doc["rows"][1]["method"], "RCCDSVD2");
  ASSERT_EQ(doc["trial_rows"].size(), 1u);
  EXPECT_DOUBLE_EQ(doc["trial_rows"][0]["time_s"].get<double>(), 0.51);
  EXPECT_EQ(doc["trial_rows"][0]["seed"], 9);
}

TEST(RunExp2, IdenticalImagesMakeBothErrorsCoincide) {
  TempDir dir;
  const RealMatrix img = ts::make_test_image(32, 21);
  ts::write_pgm_p5(dir.file("img.pgm"), img);
  Exp2Config cfg;
  cfg.image_std_path = dir.file("img.pgm");
  cfg.image_inf_path = dir.file("img.pgm");
  cfg.r_list = {4, 8, 12};
  cfg.p = 4;
  cfg.q_list = {0, 1};
  cfg.seed = 23;
  const std::vector<ReportRow> rows = run_exp2(cfg);
  ASSERT_EQ(rows.size(), 6u);
  for (const ReportRow& row : rows) {
    EXPECT_EQ(row.size, 32);
    EXPECT_NEAR(row.re1, row.re2, 1e-8);
  }
}

TEST(RunExp2, ErrorDecreasesWithRank) {
  TempDir dir;
  ts::write_pgm_p5(dir.file("a.pgm"), ts::make_test_image(32, 25));
  ts::write_pgm_p5(dir.file("b.pgm"), ts::make_test_image(32, 26));
  Exp2Config cfg;
  cfg.image_std_path = dir.file("a.pgm");
  cfg.image_inf_path = dir.file("b.pgm");
  cfg.r_list = {2, 6, 10, 14};
  cfg.p = 4;
  cfg.q_list = {1};
  cfg.seed = 27;
  const std::vector<ReportRow> rows = run_exp2(cfg);
  ASSERT_EQ(rows.size(), 4u);
  for (size_t i = 1; i < rows.size(); ++i)
    EXPECT_LE(rows[i].re1, rows[i - 1].re1 * 1.02);
}

#ifdef DUALSVD_BENCH_BIN
namespace {

int run_cli(const std::string& args) {
  const int status = std::system((std::string(DUALSVD_BENCH_BIN) + " " + args +
                                  " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST(Cli, Exp2EndToEndWithGnuplot) {
  TempDir dir;
  ts::write_pgm_p5(dir.file("a.pgm"), ts::make_test_image(32, 31));
  ts::write_pgm_p5(dir.file("b.pgm"), ts::make_test_image(32, 32));
  const int code = run_cli("exp2 --std " + dir.file("a.pgm") + " --inf " + dir.file("b.pgm") +
                           " --r 4:12:4 --p 4 --q 0,1 --seed 3 --out " + dir.file("sweep.csv") +
                           " --emit-gnuplot " + dir.file("sweep.gp"));
  EXPECT_EQ(code, 0);
  std::ifstream csv(dir.file("sweep.csv"));
  std::string header;
  ASSERT_TRUE(std::getline(csv, header));
  EXPECT_EQ(header, "method,size,r,p,q,re1,re2,time_s,seed");
  int lines = 0;
  for (std::string line; std::getline(csv, line);) ++lines;
  EXPECT_EQ(lines, 6);  // 3 ranks x 2 exponents
  std::ifstream gp(dir.file("sweep.gp"));
  std::string script((std::istreambuf_iterator<char>(gp)), std::istreambuf_iterator<char>());
  EXPECT_NE(script.find("plot"), std::string::npos);
  EXPECT_NE(script.find("q=1"), std::string::npos);
}

TEST(Cli, Exp1JsonOutput) {
  TempDir dir;
  const int code = run_cli("exp1 --m 50 --trials 2 --p 4 --q 1 --seed 5 --format json --out " +
                           dir.file("report.json"));
  EXPECT_EQ(code, 0);
  std::ifstream in(dir.file("report.json"));
  nlohmann::json doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["rows"].size(), 3u);
  EXPECT_EQ(doc["trial_rows"].size(), 6u);
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  // config error: malformed list
  EXPECT_EQ(run_cli("exp1 --m nonsense --trials 1"), 2);
  // config error: r + p exceeds the image dimension
  ts::write_pgm_p5(dir.file("img.pgm"), ts::make_test_image(16, 33));
  EXPECT_EQ(run_cli("exp2 --std " + dir.file("img.pgm") + " --inf " + dir.file("img.pgm") +
                    " --r 14 --p 4 --out " + dir.file("x.csv")),
            2);
  // numerical failure: defect demo
  EXPECT_EQ(run_cli("exp1 --m 50 --trials 1 --defect-demo"), 3);
  // io error: missing image
  EXPECT_EQ(run_cli("exp2 --std " + dir.file("missing.pgm") + " --inf " + dir.file("img.pgm") +
                    " --r 4 --out " + dir.file("x.csv")),
            4);
}
#endif  // DUALSVD_BENCH_BIN

TEST(RunExp2, ConfigValidation) {
  TempDir dir;
  ts::write_pgm_p5(dir.file("a.pgm"), ts::make_test_image(16, 1));
  ts::write_pgm_p5(dir.file("b.pgm"), ts::make_test_image(32, 2));
  Exp2Config cfg;
  cfg.image_std_path = dir.file("a.pgm");
  cfg.image_inf_path = dir.file("b.pgm");
  cfg.r_list = {4};
  EXPECT_THROW(run_exp2(cfg), ShapeMismatch);

  cfg.image_inf_path = dir.file("a.pgm");
  cfg.r_list = {14};  // 14 + 4 > 16
  EXPECT_THROW(run_exp2(cfg), InvalidParams);

  cfg.image_std_path = dir.file("missing.pgm");
  cfg.r_list = {4};
  EXPECT_THROW(run_exp2(cfg), IoError);
}
