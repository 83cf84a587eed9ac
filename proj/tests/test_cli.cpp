#include "qlp/json_io.hpp"
#include "qlp/oracle.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qlp;
using io::json;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path scratch() {
  auto p = std::filesystem::temp_directory_path() / ("qlp_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(p);
  return p;
}

// args are passed through the shell; stdin_text feeds standard input
Run run(const std::string& args, const std::string& stdin_text = "", const std::string& env = "") {
  auto dir = scratch();
  std::string in = (dir / "in").string(), out = (dir / "out").string(), err = (dir / "err").string();
  std::ofstream(in) << stdin_text;
  std::string cmd = env + " " + QLP_CLI_PATH + std::string(" ") + args + " <" + in + " >" + out + " 2>" + err;
  int st = std::system(cmd.c_str());
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, slurp(out), slurp(err)};
}

std::vector<std::vector<std::string>> csv_block(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (line.empty() || line[0] == '#') {
      if (!rows.empty()) break;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(cells);
  }
  return rows;
}

Rational bound_value(const json& j) { return Rational::parse(j["bound"]["candidate"].get<std::string>()); }

}  // namespace

TEST(CliWtj, Su2CsvMatchesBruteForce) {
  auto r = run("wtj --family su2 --n 2 --format csv");
  ASSERT_EQ(r.rc, 0) << r.err;
  auto rows = csv_block(r.out);
  ASSERT_EQ(rows.size(), 4u);
  oracle::FamilyOracle O(FamilySpec::su2(2));
  for (long t = 0; t <= 2; ++t) {
    ASSERT_EQ(rows[t + 1].size(), 4u);
    for (long j = 0; j <= 2; ++j) EXPECT_EQ(Rational::parse(rows[t + 1][j + 1]), oracle::wtj_bruteforce(O, t, j));
  }
  EXPECT_NE(r.out.find("# lambda"), std::string::npos);
}

TEST(CliWtj, CliffordOddOneIsTwoByTwo) {
  auto r = run("wtj --family clifford-odd --n 1 --format json");
  ASSERT_EQ(r.rc, 0) << r.err;
  auto j = json::parse(r.out);
  auto W = io::parse_wtj(j);
  ASSERT_EQ(W.entries.rows(), 2u);
  oracle::FamilyOracle O(FamilySpec::clifford_odd(1));
  for (long t = 0; t <= 1; ++t)
    for (long s = 0; s <= 1; ++s) EXPECT_EQ(W.entries(t, s), oracle::wtj_bruteforce(O, t, s));
  EXPECT_EQ(j["lambda"], json::parse("[1,-1]"));
  auto md = run("wtj --family clifford-odd --n 1 --format md");
  EXPECT_NE(md.out.find("| t\\j |"), std::string::npos);
}

TEST(CliWtj, ValidationErrors) {
  auto r = run("wtj --family qhamming --q 3 --n 0");
  EXPECT_EQ(r.rc, 2);
  EXPECT_NE(r.err.find("n must be"), std::string::npos);
  EXPECT_EQ(run("wtj --family nope --n 3").rc, 2);
  EXPECT_EQ(run("wtj --family su-sym --n 3").rc, 2);
  EXPECT_EQ(run("wtj --family su2").rc, 2);
  EXPECT_EQ(run("").rc, 2);
  EXPECT_EQ(run("wtj --family su2 --n 2 --format xml").rc, 2);
  EXPECT_EQ(run("frobnicate").rc, 2);
}

TEST(CliBound, KnownValues) {
  // su(2), n = 7, d = 3: upper bound 2
  auto r = run("bound --family su2 --n 7 --d 3 --integer");
  ASSERT_EQ(r.rc, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(bound_value(j), Rational(2));
  EXPECT_EQ(j["bound"]["integer_bound"], "2");
  EXPECT_EQ(j["bound"]["decimal"], "2.000");
  // Cl(12) with self-dual inequalities: 2
  auto e = run("bound --family clifford-even --n 6 --d 3 --self-dual");
  ASSERT_EQ(e.rc, 0) << e.err;
  EXPECT_EQ(bound_value(json::parse(e.out)), Rational(2));
  // Cl(11), d = 2: 2^{n-1}
  auto o = run("bound --family clifford-odd --n 5 --d 2");
  ASSERT_EQ(o.rc, 0) << o.err;
  auto oj = json::parse(o.out);
  EXPECT_EQ(bound_value(oj), Rational(16));
  auto fa = Rational::parse(oj["bound"]["feasible_at"].get<std::string>());
  auto ia = Rational::parse(oj["bound"]["infeasible_at"].get<std::string>());
  EXPECT_LE(fa, Rational(16));
  EXPECT_GT(ia, Rational(16));
  EXPECT_LT(ia - fa, Rational(1, 100000));
}

TEST(CliBound, SelfDualErrorListsFamilies) {
  auto r = run("bound --family su-sym --q 3 --n 3 --d 2 --self-dual");
  EXPECT_EQ(r.rc, 2);
  EXPECT_NE(r.err.find("self-dual families"), std::string::npos);
  EXPECT_NE(r.err.find("clifford-odd"), std::string::npos);
  EXPECT_EQ(run("bound --family su2 --n 3 --d 9").rc, 2);
  EXPECT_EQ(run("bound --family su2 --n 3 --d 2 --tol 0").rc, 2);
  EXPECT_EQ(run("bound --family su2 --n 3 --d 2 --tol x").rc, 2);
}

TEST(CliBound, FormatsAndOutFile) {
  auto path = (scratch() / "bound.csv").string();
  auto r = run("bound --family su2 --n 7 --d 3 --format csv --out " + path);
  ASSERT_EQ(r.rc, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto text = slurp(path);
  EXPECT_NE(text.find("candidate,2\n"), std::string::npos);
  auto md = run("bound --family su2 --n 7 --d 3 --format md --digits 1");
  EXPECT_NE(md.out.find("2.0 |"), std::string::npos);
}

TEST(CliFeasible, VerdictAndWitness) {
  auto r = run("feasible --family su2 --n 7 --d 3 --K 2");
  ASSERT_EQ(r.rc, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["feasible"].get<bool>());
  auto A = io::parse_rationals(j["witness"]["A"], "/A");
  Rational s = 0;
  for (auto& a : A) s += a;
  EXPECT_EQ(s, Rational(8));
  auto n = run("feasible --family su2 --n 7 --d 3 --K 2001/1000");
  EXPECT_EQ(n.rc, 1);
  EXPECT_FALSE(json::parse(n.out)["feasible"].get<bool>());
  EXPECT_EQ(run("feasible --family su2 --n 7 --d 3 --K -1").rc, 2);
  EXPECT_EQ(run("feasible --family su2 --n 7 --d 3 --K 1/0").rc, 2);
}

TEST(CliTable, CliffordOddAndSymmetric) {
  auto r = run("table --family clifford-odd --n-range 7..10 --d-range 3..3 --self-dual --format csv");
  ASSERT_EQ(r.rc, 0) << r.err;
  auto rows = csv_block(r.out);
  ASSERT_EQ(rows.size(), 5u);
  std::vector<std::string> want{"8.000", "11.200", "16.000", "26.667"};
  for (size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(rows[i + 1][0], std::to_string(7 + i));
    EXPECT_EQ(rows[i + 1][1], want[i]);
  }
  auto s = run("table --family su-sym --q 3 --n-range 5..5 --d-range 3..3 --format csv");
  ASSERT_EQ(s.rc, 0) << s.err;
  EXPECT_EQ(csv_block(s.out)[1][1], "1.667");
}

TEST(CliTable, Su2RowsAndBlankCells) {
  // printed su(2) rows, self-dual inequalities applied
  auto r = run("table --family su2 --n-range 3..9 --d-range 2..4 --self-dual --format csv");
  ASSERT_EQ(r.rc, 0) << r.err;
  auto rows = csv_block(r.out);
  std::vector<std::vector<std::string>> want{{"3", "1.000", "1.000", "1.000"}, {"4", "2.000", "1.000", "1.000"},
                                             {"5", "2.250", "1.000", "1.000"}, {"6", "3.000", "1.000", "1.000"},
                                             {"7", "3.333", "2.000", "1.000"}, {"8", "4.000", "2.111", "1.000"},
                                             {"9", "4.375", "2.307", "1.000"}};
  ASSERT_EQ(rows.size(), want.size() + 1);
  for (size_t i = 0; i < want.size(); ++i) EXPECT_EQ(rows[i + 1], want[i]);
  auto b = run("table --family su2 --n-range 1..2 --d-range 2..4 --format csv");
  auto br = csv_block(b.out);
  EXPECT_EQ(br[1], (std::vector<std::string>{"1", "1.000", "", ""}));
  EXPECT_EQ(br[2], (std::vector<std::string>{"2", "1.000", "1.000", ""}));
  auto j = json::parse(run("table --family su2 --n-range 1..1 --d-range 2..3 --format json").out);
  EXPECT_TRUE(j["rows"][0]["cells"][1]["bound"].is_null());
  EXPECT_EQ(run("table --family su2 --n-range 5..3 --d-range 2..3").rc, 2);
  EXPECT_EQ(run("table --family su-sym --q 3 --n-range 2..3 --d-range 2..2 --self-dual").rc, 2);
}

TEST(CliTable, ThreadCountDoesNotChangeOutput) {
  std::string args = "table --family clifford-even --n-range 2..6 --d-range 2..4 --self-dual --format json";
  auto one = run(args, "", "QLP_THREADS=1");
  auto three = run(args, "", "QLP_THREADS=3");
  ASSERT_EQ(one.rc, 0) << one.err;
  EXPECT_EQ(one.out, three.out);
  EXPECT_EQ(run(args, "", "QLP_THREADS=0").rc, 2);
  EXPECT_EQ(run(args, "", "QLP_THREADS=many").rc, 2);
}

TEST(CliCodes, HammingPipeline) {
  auto c = run("construct --code clifford-hamming --s 3");
  ASSERT_EQ(c.rc, 0) << c.err;
  auto v = run("verify --reading odd", c.out);
  ASSERT_EQ(v.rc, 0) << v.err;
  auto j = json::parse(v.out);
  EXPECT_EQ(j["report"]["min_distance"], 3);
  EXPECT_EQ(j["report"]["dimension"], "8");
  EXPECT_TRUE(j["report"]["is_pure"].get<bool>());
  EXPECT_TRUE(j["report"]["is_nondegenerate"].get<bool>());
  EXPECT_EQ(j["report"]["matrix_check"], true);
  EXPECT_TRUE(j["pass"].get<bool>());
  for (auto& [k, val] : j["checks"].items()) EXPECT_TRUE(val.get<bool>()) << k;
  auto D = io::parse_distribution(j["distribution"]);
  EXPECT_EQ(D.A.size(), 8u);
  auto e = json::parse(run("verify", c.out).out);
  EXPECT_EQ(e["report"]["reading"], "even");
  EXPECT_EQ(e["report"]["min_distance"], 3);
}

TEST(CliCodes, Su2ThirdPipeline) {
  auto c = run("construct --code su2-third --n 6");
  ASSERT_EQ(c.rc, 0) << c.err;
  auto v = run("verify", c.out);
  ASSERT_EQ(v.rc, 0) << v.err;
  auto j = json::parse(v.out);
  EXPECT_EQ(j["report"]["min_distance"], 2);
  EXPECT_EQ(j["report"]["dimension"], "3");
  auto md = run("verify --format md", c.out);
  EXPECT_NE(md.out.find("### distribution"), std::string::npos);
  EXPECT_EQ(run("verify --reading odd", c.out).rc, 2);
}

TEST(CliCodes, RoundTripEveryConstruction) {
  auto dir = scratch();
  struct Case {
    std::string args;
    long d;
    std::string dim;
  };
  std::vector<Case> cases{{"--code clifford-hamming --s 3", 3, "8"},
                          {"--code clifford-hamming --s 4", 3, "1024"},
                          {"--code clifford-hamming --s 3 --signs 1,-1,1,-1", 3, "8"}};
  for (long n : {4L, 5L, 6L, 7L, 8L, 9L, 12L}) {
    cases.push_back({"--code su2-third --n " + std::to_string(n), 2, std::to_string(code_third(n).size())});
    auto q = code_quarter(n);
    cases.push_back({"--code su2-quarter --n " + std::to_string(n), q.size() == 1 ? n + 1 : 2, std::to_string(q.size())});
  }
  for (auto& c : cases) {
    auto file = (dir / "code.json").string();
    auto r = run("construct " + c.args + " --out " + file);
    ASSERT_EQ(r.rc, 0) << c.args << ": " << r.err;
    auto parsed = io::parse_code_text(slurp(file));
    EXPECT_EQ(io::to_json(parsed), json::parse(slurp(file)));
    auto v = run("verify --code " + file);
    ASSERT_EQ(v.rc, 0) << c.args << ": " << v.err;
    auto j = json::parse(v.out);
    EXPECT_EQ(j["report"]["min_distance"], c.d) << c.args;
    EXPECT_EQ(j["report"]["dimension"], c.dim) << c.args;
    EXPECT_TRUE(j["pass"].get<bool>());
  }
}

TEST(CliCodes, Errors) {
  auto bad = run("verify", R"({"family":{"clifford-even":{"n":7}},"kind":"clifford-stabilizer","n":7,"generators":["1x"]})");
  EXPECT_EQ(bad.rc, 2);
  EXPECT_NE(bad.err.find("/generators/0"), std::string::npos);
  auto syn = run("verify", "{\n\"family\": }");
  EXPECT_EQ(syn.rc, 2);
  EXPECT_NE(syn.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run("verify --code /nonexistent/file.json").rc, 2);
  EXPECT_EQ(run("verify --reading sideways", run("construct --code clifford-hamming --s 3").out).rc, 2);
  EXPECT_EQ(run("construct --code clifford-hamming --s 2").rc, 2);
  EXPECT_EQ(run("construct --code clifford-hamming --s 3 --signs 1,1").rc, 2);
  EXPECT_EQ(run("construct --code su2-third --n 3").rc, 2);
  EXPECT_EQ(run("construct --code golay").rc, 2);
  EXPECT_EQ(run("construct --code su2-third --n 6 --format csv").rc, 2);
}

TEST(CliOracle, CliffordEvenThreeAllMatch) {
  auto r = run("oracle --family clifford-even --n 3");
  ASSERT_EQ(r.rc, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  ASSERT_EQ(j["reports"].size(), 2u);
  EXPECT_EQ(j["reports"][0]["check"], "wtj");
  EXPECT_EQ(j["reports"][1]["check"], "lambda");
  EXPECT_EQ(io::parse_rational_matrix(j["reports"][0]["brute"], ""), wtj_matrix(FamilySpec::clifford_even(3))->entries);
  auto md = run("oracle --family clifford-even --n 3 --format md");
  EXPECT_NE(md.out.find("pass"), std::string::npos);
  EXPECT_EQ(md.out.find("FAIL"), std::string::npos);
}

TEST(CliOracle, MaxNAndCeilings) {
  auto r = run("oracle --family su2 --max-n 4");
  ASSERT_EQ(r.rc, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["reports"].size(), 8u);  // n = 1..4, wtj and lambda each
  auto h = run("oracle --family su-sym --q 3 --max-n 3");
  ASSERT_EQ(h.rc, 0) << h.err;
  EXPECT_EQ(json::parse(h.out)["reports"].size(), 3u);
  EXPECT_EQ(run("oracle --family su2 --n 7").rc, 2);
  EXPECT_EQ(run("oracle --family clifford-odd --max-n 5").rc, 2);
  EXPECT_EQ(run("oracle --family su2").rc, 2);
  EXPECT_EQ(run("oracle --family su2 --n 3 --max-n 3").rc, 2);
}

TEST(CliBound, NoFeasibleValue) {
  auto r = run("bound --family spinorial --n 5 --d 3 --pure");
  EXPECT_EQ(r.rc, 1);
  EXPECT_NE(r.err.find("no feasible K"), std::string::npos);
  auto t = run("table --family spinorial --n-range 5..5 --d-range 2..3 --pure --format csv");
  ASSERT_EQ(t.rc, 0) << t.err;
  EXPECT_EQ(csv_block(t.out)[1][2], "none");
}
