#pragma once

#include "qlp/codes.hpp"
#include "qlp/lp.hpp"
#include "qlp/oracle.hpp"

#include <json.hpp>

namespace qlp::io {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  std::string location;
  ParseError(std::string loc, const std::string& msg) : std::runtime_error(loc + ": " + msg), location(std::move(loc)) {}
};

namespace detail {

inline std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string at(const std::string& path, size_t i) { return path + "/" + std::to_string(i); }

inline const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(path, key), "missing field");
  return *it;
}

inline const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

inline long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<long>();
}

inline std::string string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

// line/column of a byte offset (1-based)
inline std::string text_position(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    auto p = msg.find("parse error");
    throw ParseError(detail::text_position(text, e.byte), p == std::string::npos ? msg : msg.substr(p));
  }
}

// ---------- scalars ----------

inline json to_json(const Rational& r) { return r.str(); }
inline json to_json(const BigInt& v) { return v.get_str(); }

inline Rational parse_rational(const json& j, const std::string& path) {
  std::string s = detail::string(j, path);
  try {
    return Rational::parse(s);
  } catch (const std::exception& e) {
    throw ParseError(path, e.what());
  }
}

inline BigInt parse_bigint(const json& j, const std::string& path) {
  Rational r = parse_rational(j, path);
  if (!r.is_integer()) throw ParseError(path, "expected an integer");
  return r.num();
}

inline json to_json(const Gaussian& g) { return json{{"re", g.re().str()}, {"im", g.im().str()}}; }

inline Gaussian parse_gaussian(const json& j, const std::string& path) {
  return Gaussian(parse_rational(detail::field(j, "re", path), detail::at(path, "re")),
                  parse_rational(detail::field(j, "im", path), detail::at(path, "im")));
}

inline json to_json(const SurdSum& s) {
  json a = json::array();
  for (auto& [d, c] : s.terms()) a.push_back(json{{"c", c.str()}, {"r", d}});
  return a;
}

inline SurdSum parse_surd(const json& j, const std::string& path) {
  SurdSum s;
  const json& a = detail::array(j, path);
  for (size_t i = 0; i < a.size(); ++i) {
    std::string p = detail::at(path, i);
    Rational c = parse_rational(detail::field(a[i], "c", p), detail::at(p, "c"));
    long r = detail::integer(detail::field(a[i], "r", p), detail::at(p, "r"));
    if (r < 1) throw ParseError(detail::at(p, "r"), "radicand must be positive");
    s += SurdSum(c, static_cast<uint64_t>(r));
  }
  return s;
}

inline json to_json(const SlopeValue& v) {
  return std::visit([](auto& x) { return to_json(x); }, v);
}

inline SlopeValue parse_slope(const json& j, const std::string& path) {
  if (j.is_array()) return parse_surd(j, path);
  return parse_gaussian(j, path);
}

// ---------- families ----------

inline json to_json(const FamilySpec& f) {
  json p;
  if (uses_q(f.kind)) p["q"] = f.q;
  p["n"] = f.n;
  if (uses_w(f.kind)) p["w"] = f.w;
  return json{{family_name(f.kind), p}};
}

inline FamilySpec parse_family_spec(const json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1) throw ParseError(path, "expected {\"<family>\": {params}}");
  auto it = j.begin();
  auto kind = parse_family(it.key());
  if (!kind) throw ParseError(detail::at(path, it.key()), "unknown family");
  std::string p = detail::at(path, it.key());
  FamilySpec f{*kind, 0, 0, 0};
  f.n = detail::integer(detail::field(it.value(), "n", p), detail::at(p, "n"));
  if (uses_q(f.kind)) f.q = detail::integer(detail::field(it.value(), "q", p), detail::at(p, "q"));
  if (uses_w(f.kind)) f.w = detail::integer(detail::field(it.value(), "w", p), detail::at(p, "w"));
  if (auto e = validate(f)) throw ParseError(p, *e);
  return f;
}

// ---------- code files ----------

inline json to_json(const CodeObject& c) {
  json out;
  out["family"] = to_json(c.family);
  if (auto* s = std::get_if<StabilizerCode>(&c.rep)) {
    out["kind"] = "clifford-stabilizer";
    out["n"] = s->n;
    json g = json::array();
    for (auto& x : s->generators) g.push_back(x.str());
    out["generators"] = g;
    out["signs"] = s->signs;
  } else if (auto* P = std::get_if<Matrix<Gaussian>>(&c.rep)) {
    out["kind"] = "clifford-projector";
    out["n"] = c.family.n;
    json rows = json::array();
    for (size_t a = 0; a < P->rows(); ++a) {
      json row = json::array();
      for (size_t b = 0; b < P->cols(); ++b) row.push_back(to_json((*P)(a, b)));
      rows.push_back(row);
    }
    out["matrix"] = rows;
  } else {
    auto& u = std::get<Su2Code>(c.rep);
    out["kind"] = "su2-vectors";
    json vs = json::array();
    for (auto& v : u.vectors) {
      json comps = json::array();
      for (auto& [k, a] : v.amp) comps.push_back(json{{"k", k}, {"amp", to_json(a)}});
      vs.push_back(comps);
    }
    out["vectors"] = vs;
  }
  return out;
}

inline CodeObject parse_code(const json& j) {
  using detail::at;
  using detail::field;
  CodeObject c;
  c.family = parse_family_spec(field(j, "family", ""), "/family");
  std::string kind = detail::string(field(j, "kind", ""), "/kind");
  if (kind == "clifford-stabilizer" || kind == "clifford-projector") {
    if (!family_reading(c.family)) throw ParseError("/family", "clifford codes need a clifford or spinorial family");
    long n = detail::integer(field(j, "n", ""), "/n");
    if (n != c.family.n) throw ParseError("/n", "does not match the family parameter n");
    if (kind == "clifford-projector") {
      if (n < 1 || n > kMatrixMaxN) throw ParseError("/n", "projector files need 1 <= n <= " + std::to_string(kMatrixMaxN));
      size_t dim = size_t(1) << n;
      const json& rows = detail::array(field(j, "matrix", ""), "/matrix");
      if (rows.size() != dim) throw ParseError("/matrix", "expected " + std::to_string(dim) + " rows");
      Matrix<Gaussian> P(dim, dim);
      for (size_t a = 0; a < dim; ++a) {
        const json& row = detail::array(rows[a], at("/matrix", a));
        if (row.size() != dim) throw ParseError(at("/matrix", a), "expected " + std::to_string(dim) + " entries");
        for (size_t b = 0; b < dim; ++b) P(a, b) = parse_gaussian(row[b], at(at("/matrix", a), b));
      }
      c.rep = std::move(P);
      return c;
    }
    StabilizerCode s;
    s.n = static_cast<int>(n);
    const json& gens = detail::array(field(j, "generators", ""), "/generators");
    for (size_t i = 0; i < gens.size(); ++i) {
      std::string p = at("/generators", i);
      std::string bits = detail::string(gens[i], p);
      if (static_cast<long>(bits.size()) != 2 * n) throw ParseError(p, "generator length must be 2n");
      try {
        s.generators.push_back(BinaryVector::parse(bits));
      } catch (const std::exception& e) {
        throw ParseError(p, e.what());
      }
    }
    if (j.contains("signs")) {
      const json& sg = detail::array(j["signs"], "/signs");
      for (size_t i = 0; i < sg.size(); ++i) {
        long v = detail::integer(sg[i], at("/signs", i));
        if (v != 1 && v != -1) throw ParseError(at("/signs", i), "sign must be 1 or -1");
        s.signs.push_back(static_cast<int>(v));
      }
      if (s.signs.size() != s.generators.size()) throw ParseError("/signs", "one sign per generator required");
    } else {
      s.signs.assign(s.generators.size(), 1);
    }
    try {
      check_stabilizer(s);
    } catch (const std::exception& e) {
      throw ParseError("/generators", e.what());
    }
    c.rep = std::move(s);
    return c;
  }
  if (kind == "su2-vectors") {
    if (c.family.kind != FamilyKind::Su2) throw ParseError("/family", "su2-vectors needs the su2 family");
    Su2Code u{c.family.n, {}};
    const json& vs = detail::array(field(j, "vectors", ""), "/vectors");
    if (vs.empty()) throw ParseError("/vectors", "at least one vector required");
    for (size_t i = 0; i < vs.size(); ++i) {
      std::string p = at("/vectors", i);
      const json& comps = detail::array(vs[i], p);
      Su2Vector v{u.n, {}};
      for (size_t m = 0; m < comps.size(); ++m) {
        std::string q = at(p, m);
        long k = detail::integer(field(comps[m], "k", q), at(q, "k"));
        if (!v.admissible(k)) throw ParseError(at(q, "k"), "weight not admissible for n = " + std::to_string(u.n));
        v.add(k, parse_surd(field(comps[m], "amp", q), at(q, "amp")));
      }
      if (v.is_zero()) throw ParseError(p, "zero vector");
      u.vectors.push_back(std::move(v));
    }
    for (size_t a = 0; a < u.vectors.size(); ++a)
      for (size_t b = a + 1; b < u.vectors.size(); ++b)
        if (!inner(u.vectors[a], u.vectors[b]).is_zero())
          throw ParseError(at("/vectors", b), "not orthogonal to vector " + std::to_string(a));
    c.rep = std::move(u);
    return c;
  }
  throw ParseError("/kind", "unknown code kind '" + kind + "'");
}

inline CodeObject parse_code_text(const std::string& text) { return parse_code(parse_text(text)); }

// ---------- results ----------

inline json to_json(const DetectionReport& r) {
  json s = json::array();
  for (auto& [label, v] : r.slope_values) s.push_back(json{{"error", label}, {"value", to_json(v)}});
  json out{{"dimension", to_json(r.dimension)},
           {"min_distance", r.min_distance},
           {"reading", r.reading},
           {"is_pure", r.is_pure},
           {"is_nondegenerate", r.is_nondegenerate},
           {"path", r.path},
           {"slope_values", s}};
  out["matrix_check"] = r.matrix_check ? json(*r.matrix_check) : json(nullptr);
  return out;
}

inline DetectionReport parse_report(const json& j) {
  using detail::field;
  DetectionReport r;
  r.dimension = parse_bigint(field(j, "dimension", ""), "/dimension");
  r.min_distance = detail::integer(field(j, "min_distance", ""), "/min_distance");
  r.reading = detail::string(field(j, "reading", ""), "/reading");
  auto boolean = [&](const char* k) {
    const json& v = field(j, k, "");
    if (!v.is_boolean()) throw ParseError(std::string("/") + k, "expected a boolean");
    return v.get<bool>();
  };
  r.is_pure = boolean("is_pure");
  r.is_nondegenerate = boolean("is_nondegenerate");
  r.path = detail::string(field(j, "path", ""), "/path");
  const json& mc = field(j, "matrix_check", "");
  if (!mc.is_null()) {
    if (!mc.is_boolean()) throw ParseError("/matrix_check", "expected a boolean or null");
    r.matrix_check = mc.get<bool>();
  }
  const json& s = detail::array(field(j, "slope_values", ""), "/slope_values");
  for (size_t i = 0; i < s.size(); ++i) {
    std::string p = detail::at("/slope_values", i);
    r.slope_values.push_back({detail::string(field(s[i], "error", p), detail::at(p, "error")),
                              parse_slope(field(s[i], "value", p), detail::at(p, "value"))});
  }
  return r;
}

inline json to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(x.str());
  return a;
}

inline std::vector<Rational> parse_rationals(const json& j, const std::string& path) {
  std::vector<Rational> v;
  const json& a = detail::array(j, path);
  for (size_t i = 0; i < a.size(); ++i) v.push_back(parse_rational(a[i], detail::at(path, i)));
  return v;
}

inline json to_json(const Distribution& d) { return json{{"A", to_json(d.A)}, {"B", to_json(d.B)}}; }

inline Distribution parse_distribution(const json& j) {
  return {parse_rationals(detail::field(j, "A", ""), "/A"), parse_rationals(detail::field(j, "B", ""), "/B")};
}

inline json to_json(const Matrix<Rational>& M) {
  json rows = json::array();
  for (size_t a = 0; a < M.rows(); ++a) {
    json row = json::array();
    for (size_t b = 0; b < M.cols(); ++b) row.push_back(M(a, b).str());
    rows.push_back(row);
  }
  return rows;
}

inline Matrix<Rational> parse_rational_matrix(const json& j, const std::string& path) {
  const json& rows = detail::array(j, path);
  size_t m = rows.size(), c = m ? detail::array(rows[0], detail::at(path, size_t(0))).size() : 0;
  Matrix<Rational> M(m, c);
  for (size_t a = 0; a < m; ++a) {
    const json& row = detail::array(rows[a], detail::at(path, a));
    if (row.size() != c) throw ParseError(detail::at(path, a), "ragged matrix");
    for (size_t b = 0; b < c; ++b) M(a, b) = parse_rational(row[b], detail::at(detail::at(path, a), b));
  }
  return M;
}

inline json to_json(const WtjMatrix& W) {
  json out{{"family", to_json(W.family)}, {"W", to_json(W.entries)}};
  if (auto s = lambda_signature(W.family)) out["lambda"] = s->lambda;
  return out;
}

inline WtjMatrix parse_wtj(const json& j) {
  return {parse_family_spec(detail::field(j, "family", ""), "/family"),
          parse_rational_matrix(detail::field(j, "W", ""), "/W")};
}

inline json to_json(const BoundResult& b) {
  json out{{"feasible_at", b.feasible_at.str()},
           {"infeasible_at", b.infeasible_at ? json(b.infeasible_at->str()) : json(nullptr)},
           {"iterations", b.iterations}};
  out["integer_bound"] = b.integer_bound ? json(b.integer_bound->get_str()) : json(nullptr);
  return out;
}

inline BoundResult parse_bound(const json& j) {
  using detail::field;
  BoundResult b;
  b.feasible_at = parse_rational(field(j, "feasible_at", ""), "/feasible_at");
  if (const json& v = field(j, "infeasible_at", ""); !v.is_null()) b.infeasible_at = parse_rational(v, "/infeasible_at");
  b.iterations = detail::integer(field(j, "iterations", ""), "/iterations");
  if (const json& v = field(j, "integer_bound", ""); !v.is_null()) b.integer_bound = parse_bigint(v, "/integer_bound");
  return b;
}

inline json to_json(const oracle::Report& r) {
  json out{{"family", to_json(r.family)}, {"check", r.check}, {"pass", r.pass}, {"mismatches", r.mismatches}};
  if (r.brute) out["brute"] = to_json(*r.brute);
  if (!r.lambda.empty()) out["lambda"] = r.lambda;
  return out;
}

}  // namespace qlp::io
