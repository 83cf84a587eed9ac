#include "qlp/json_io.hpp"
#include "qlp/parallel.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qlp;
using namespace qlp::io;

namespace {

std::string location_of(const std::string& text) {
  try {
    parse_code_text(text);
  } catch (const ParseError& e) {
    return e.location;
  }
  return "<no error>";
}

const char* kHamming7 = R"({"family":{"clifford-even":{"n":7}},"kind":"clifford-stabilizer","n":7,
  "generators":["11110000000000","00000001111000"],"signs":[1,-1]})";

}  // namespace

TEST(Scalars, ExactForms) {
  EXPECT_EQ(to_json(Rational(3, 4)), json("3/4"));
  EXPECT_EQ(to_json(Rational(-2)), json("-2"));
  EXPECT_EQ(to_json(Gaussian(Rational(1, 2), Rational(-1))).dump(), R"({"re":"1/2","im":"-1"})");
  EXPECT_EQ(to_json(SurdSum(Rational(1), 6)).dump(), R"([{"c":"1","r":6}])");
  EXPECT_EQ(to_json(SurdSum::sqrt(Rational(3, 5))).dump(), R"([{"c":"1/5","r":15}])");
  EXPECT_EQ(to_json(SurdSum()).dump(), "[]");
  // "1/1" and squareful radicands are accepted and normalized
  EXPECT_EQ(parse_surd(json::parse(R"([{"c":"1/1","r":12}])"), ""), SurdSum(Rational(2), 3));
  EXPECT_EQ(parse_rational(json("6/4"), ""), Rational(3, 2));
}

TEST(Scalars, RoundTripRandomized) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> c(-50, 50), d(1, 40);
  for (int rep = 0; rep < 200; ++rep) {
    Rational r(c(rng), d(rng));
    EXPECT_EQ(parse_rational(json::parse(to_json(r).dump()), ""), r);
    Gaussian g(Rational(c(rng), d(rng)), Rational(c(rng), d(rng)));
    EXPECT_EQ(parse_gaussian(json::parse(to_json(g).dump()), ""), g);
    SurdSum s = SurdSum(Rational(c(rng), d(rng)), d(rng)) + SurdSum(Rational(c(rng), d(rng)), d(rng));
    EXPECT_EQ(parse_surd(json::parse(to_json(s).dump()), ""), s);
  }
}

TEST(Scalars, Errors) {
  EXPECT_THROW(parse_rational(json("1/0"), "/x"), ParseError);
  EXPECT_THROW(parse_rational(json(3), "/x"), ParseError);
  EXPECT_THROW(parse_surd(json::parse(R"([{"c":"1","r":0}])"), ""), ParseError);
  try {
    parse_gaussian(json::parse(R"({"re":"1"})"), "/v");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location, "/v/im");
  }
}

TEST(Families, RoundTrip) {
  std::vector<FamilySpec> fs{FamilySpec::qhamming(3, 4), FamilySpec::su2(7),           FamilySpec::su_sym(3, 5),
                             FamilySpec::su_ext(6, 2),   FamilySpec::clifford_odd(5), FamilySpec::clifford_even(3),
                             FamilySpec::spinorial(4),   FamilySpec::semispinorial(6)};
  for (auto& f : fs) EXPECT_EQ(parse_family_spec(to_json(f), ""), f) << describe(f);
  EXPECT_EQ(to_json(FamilySpec::su2(6)).dump(), R"({"su2":{"n":6}})");
  EXPECT_EQ(to_json(FamilySpec::su_ext(6, 2)).dump(), R"({"su-ext":{"n":6,"w":2}})");
  EXPECT_THROW(parse_family_spec(json::parse(R"({"su9":{"n":1}})"), ""), ParseError);
  EXPECT_THROW(parse_family_spec(json::parse(R"({"qhamming":{"q":3,"n":0}})"), ""), ParseError);
  EXPECT_THROW(parse_family_spec(json::parse(R"({"su-ext":{"n":6}})"), ""), ParseError);
}

TEST(CodeFiles, CliffordRoundTrip) {
  for (int s : {3, 4}) {
    auto st = clifford_hamming(s);
    CodeObject c{FamilySpec::clifford_even(st.n), st};
    auto text = to_json(c).dump();
    auto back = parse_code_text(text);
    EXPECT_EQ(back.family, c.family);
    auto& b = std::get<StabilizerCode>(back.rep);
    EXPECT_EQ(b.n, st.n);
    EXPECT_EQ(b.generators, st.generators);
    EXPECT_EQ(b.signs, st.signs);
    EXPECT_EQ(to_json(back).dump(), text);
  }
  auto c = parse_code_text(kHamming7);
  auto& s = std::get<StabilizerCode>(c.rep);
  EXPECT_EQ(s.generators[0].str(), "11110000000000");
  EXPECT_EQ(s.signs, (std::vector<int>{1, -1}));
}

TEST(CodeFiles, ShapeOfHammingFile) {
  auto j = to_json(CodeObject{FamilySpec::clifford_even(7), clifford_hamming(3)});
  EXPECT_EQ(j["kind"], "clifford-stabilizer");
  EXPECT_EQ(j["n"], 7);
  EXPECT_EQ(j["generators"].size(), 4u);
  for (auto& g : j["generators"]) EXPECT_EQ(g.get<std::string>().size(), 14u);
  EXPECT_EQ(j["signs"], json::parse("[1,1,1,1]"));
}

TEST(CodeFiles, ProjectorRoundTrip) {
  auto P = stabilizer_projector(StabilizerCode{3, {BinaryVector::parse("111100"), BinaryVector::parse("001111")}, {1, -1}});
  CodeObject c{FamilySpec::clifford_odd(3), P};
  auto back = parse_code_text(to_json(c).dump());
  EXPECT_EQ(std::get<Matrix<Gaussian>>(back.rep), P);
  EXPECT_EQ(back.family, c.family);
}

TEST(CodeFiles, Su2RoundTrip) {
  for (long n : {4L, 6L, 9L, 13L}) {
    for (auto& vs : {code_third(n), code_quarter(n)}) {
      CodeObject c{FamilySpec::su2(n), Su2Code{n, vs}};
      auto text = to_json(c).dump();
      auto back = parse_code_text(text);
      auto& u = std::get<Su2Code>(back.rep);
      EXPECT_EQ(u.n, n);
      ASSERT_EQ(u.vectors.size(), vs.size());
      for (size_t i = 0; i < vs.size(); ++i) EXPECT_EQ(u.vectors[i], vs[i]);
      EXPECT_EQ(to_json(back).dump(), text);
    }
  }
  auto j = to_json(CodeObject{FamilySpec::su2(6), Su2Code{6, code_third(6)}});
  EXPECT_EQ(j["family"].dump(), R"({"su2":{"n":6}})");
  EXPECT_EQ(j["kind"], "su2-vectors");
  EXPECT_EQ(j["vectors"][0].dump(), R"([{"k":0,"amp":[{"c":"1","r":1}]}])");
}

TEST(CodeFiles, ErrorLocations) {
  EXPECT_EQ(location_of(R"({"family":{"clifford-even":{"n":7}},"kind":"clifford-stabilizer","n":7,
    "generators":["11110000000000","0000000111100x"]})"),
            "/generators/1");
  EXPECT_EQ(location_of(R"({"family":{"clifford-even":{"n":7}},"kind":"clifford-stabilizer","n":7,
    "generators":["1111000000000"]})"),
            "/generators/0");
  EXPECT_EQ(location_of(R"({"family":{"clifford-even":{"n":7}},"kind":"clifford-stabilizer","n":6,"generators":[]})"), "/n");
  EXPECT_EQ(location_of(R"({"family":{"clifford-even":{"n":2}},"kind":"clifford-stabilizer","n":2,
    "generators":["1000"],"signs":[2]})"),
            "/signs/0");
  EXPECT_EQ(location_of(R"({"family":{"clifford-even":{"n":2}},"kind":"clifford-stabilizer","n":2,
    "generators":["1000","0100"]})"),
            "/generators");
  EXPECT_EQ(location_of(R"({"family":{"su2":{"n":4}},"kind":"bogus"})"), "/kind");
  EXPECT_EQ(location_of(R"({"kind":"su2-vectors"})"), "/family");
  EXPECT_EQ(location_of(R"({"family":{"su2":{"n":4}},"kind":"su2-vectors","vectors":[[{"k":3,"amp":[]}]]})"),
            "/vectors/0/0/k");
  EXPECT_EQ(location_of(R"({"family":{"su2":{"n":4}},"kind":"su2-vectors",
    "vectors":[[{"k":0,"amp":[{"c":"1","r":1}]}],[{"k":0,"amp":[{"c":"1","r":2}]}]]})"),
            "/vectors/1");
  EXPECT_EQ(location_of(R"({"family":{"su2":{"n":4}},"kind":"su2-vectors","vectors":[[{"k":0,"amp":[{"c":"x","r":1}]}]]})"),
            "/vectors/0/0/amp/0/c");
  EXPECT_EQ(location_of(R"({"family":{"su2":{"n":4}},"kind":"clifford-stabilizer","n":4,"generators":[]})"), "/family");
  EXPECT_EQ(location_of("{\n  \"family\": ,\n}"), "line 2, column 13");
  EXPECT_EQ(location_of(""), "line 1, column 1");
}

TEST(Results, ReportRoundTrip) {
  auto r1 = detection_report(clifford_hamming(3), Reading::Odd);
  auto r2 = detection_report(Su2Code{8, code_quarter(8)});
  auto r3 = detection_report(stabilizer_projector(StabilizerCode{3, {BinaryVector::parse("100000")}, {1}}), Reading::Even);
  for (auto* r : {&r1, &r2, &r3}) {
    auto j = to_json(*r);
    auto back = parse_report(json::parse(j.dump()));
    EXPECT_EQ(back.dimension, r->dimension);
    EXPECT_EQ(back.min_distance, r->min_distance);
    EXPECT_EQ(back.is_pure, r->is_pure);
    EXPECT_EQ(back.is_nondegenerate, r->is_nondegenerate);
    EXPECT_EQ(back.reading, r->reading);
    EXPECT_EQ(back.path, r->path);
    EXPECT_EQ(back.matrix_check, r->matrix_check);
    ASSERT_EQ(back.slope_values.size(), r->slope_values.size());
    for (size_t i = 0; i < back.slope_values.size(); ++i) {
      EXPECT_EQ(back.slope_values[i].first, r->slope_values[i].first);
      EXPECT_EQ(back.slope_values[i].second, r->slope_values[i].second);
    }
    EXPECT_EQ(to_json(back), j);
  }
  EXPECT_EQ(to_json(r1)["dimension"], "8");
  EXPECT_EQ(to_json(r1)["min_distance"], 3);
  EXPECT_EQ(to_json(r1)["matrix_check"], true);
  EXPECT_TRUE(to_json(r2)["matrix_check"].is_null());
}

TEST(Results, WtjBoundDistributionRoundTrip) {
  for (auto& f : {FamilySpec::su2(4), FamilySpec::clifford_even(3), FamilySpec::su_sym(3, 2)}) {
    auto W = *wtj_matrix(f);
    auto j = to_json(W);
    auto back = parse_wtj(json::parse(j.dump()));
    EXPECT_EQ(back.family, f);
    EXPECT_EQ(back.entries, W.entries);
    EXPECT_EQ(j.contains("lambda"), is_self_dual(f));
  }
  EXPECT_EQ(to_json(*wtj_matrix(FamilySpec::su2(1)))["W"].dump(), R"([["1/2","1/2"],["3/2","-1/2"]])");
  BoundResult b{Rational(9, 4), Rational(5, 2), 7, BigInt(2)};
  auto bb = parse_bound(json::parse(to_json(b).dump()));
  EXPECT_EQ(bb.feasible_at, b.feasible_at);
  EXPECT_EQ(bb.infeasible_at, b.infeasible_at);
  EXPECT_EQ(bb.iterations, 7);
  EXPECT_EQ(bb.integer_bound, b.integer_bound);
  BoundResult exact{Rational(16), std::nullopt, 1, std::nullopt};
  auto eb = parse_bound(to_json(exact));
  EXPECT_FALSE(eb.infeasible_at.has_value());
  EXPECT_FALSE(eb.integer_bound.has_value());
  auto D = distribution_symbolic(clifford_hamming(3), Reading::Odd);
  auto Db = parse_distribution(json::parse(to_json(D).dump()));
  EXPECT_EQ(Db.A, D.A);
  EXPECT_EQ(Db.B, D.B);
}

TEST(Parallel, OrderAndExceptions) {
  for (unsigned t : {1u, 2u, 5u}) {
    auto v = parallel_map(100, [](size_t i) { return i * i; }, t);
    ASSERT_EQ(v.size(), 100u);
    for (size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], i * i);
    EXPECT_THROW(parallel_map(
                     20, [](size_t i) -> int { if (i == 13) throw std::runtime_error("x"); return 0; }, t),
                 std::runtime_error);
  }
  EXPECT_TRUE(parallel_map(0, [](size_t i) { return i; }, 4).empty());
}

TEST(Parallel, ThreadsFromEnvironment) {
  setenv("QLP_THREADS", "3", 1);
  EXPECT_EQ(thread_count(), 3u);
  setenv("QLP_THREADS", "0", 1);
  EXPECT_THROW(thread_count(), std::invalid_argument);
  setenv("QLP_THREADS", "two", 1);
  EXPECT_THROW(thread_count(), std::invalid_argument);
  unsetenv("QLP_THREADS");
  EXPECT_GE(thread_count(), 1u);
}
