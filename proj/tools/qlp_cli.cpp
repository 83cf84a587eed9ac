#include "qlp/json_io.hpp"
#include "qlp/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qlp;
using io::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json, Md };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
    os << "\n";
  };
  line(t.header);
  for (auto& r : t.rows) line(r);
  return os.str();
}

std::string render_md(const Table& t) {
  std::vector<size_t> w(t.header.size(), 3);
  for (size_t i = 0; i < t.header.size(); ++i) w[i] = std::max(w[i], t.header[i].size());
  for (auto& r : t.rows)
    for (size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    os << "|";
    for (size_t i = 0; i < w.size(); ++i) {
      std::string c = i < r.size() ? r[i] : "";
      os << " " << std::string(w[i] - c.size(), ' ') << c << " |";
    }
    os << "\n";
  };
  line(t.header);
  os << "|";
  for (size_t x : w) os << " " << std::string(x - 1, '-') << ": |";
  os << "\n";
  for (auto& r : t.rows) line(r);
  return os.str();
}

struct Output {
  json doc;
  std::vector<std::pair<std::string, Table>> tables;  // titled sections for csv/md
};

std::string render(const Output& o, Format f) {
  if (f == Format::Json) return o.doc.dump(2) + "\n";
  std::string s;
  for (size_t i = 0; i < o.tables.size(); ++i) {
    auto& [title, t] = o.tables[i];
    if (f == Format::Md) {
      if (!title.empty()) s += "### " + title + "\n\n";
      s += render_md(t);
      if (i + 1 < o.tables.size()) s += "\n";
    } else {
      if (!title.empty()) s += "# " + title + "\n";
      s += render_csv(t);
    }
  }
  return s;
}

struct FamilyArgs {
  std::string name;
  long q = 0, n = -1, w = 0;

  void add(CLI::App* c, bool need_n = true) {
    c->add_option("--family", name, "qhamming|su2|su-sym|su-ext|clifford-odd|clifford-even|spinorial|semispinorial")
        ->required();
    c->add_option("--q", q, "alphabet size (qhamming, su-sym)");
    auto* o = c->add_option("--n", n, "size parameter");
    if (need_n) o->required();
    c->add_option("--w", w, "exterior power (su-ext)");
  }

  FamilyKind kind() const {
    auto k = parse_family(name);
    if (!k) throw UsageError("unknown family '" + name + "'");
    return *k;
  }

  FamilySpec spec(long nn) const {
    FamilySpec f{kind(), uses_q(kind()) ? q : 0, nn, uses_w(kind()) ? w : 0};
    if (uses_q(f.kind) && q == 0) throw UsageError("--q is required for " + name);
    if (uses_w(f.kind) && w == 0) throw UsageError("--w is required for " + name);
    if (auto e = validate(f)) throw UsageError(*e);
    return f;
  }
  FamilySpec spec() const { return spec(n); }
};

std::string self_dual_list() {
  return "self-dual families: qhamming (q=2), su2, su-sym (q=2), su-ext (n=2w), clifford-odd, clifford-even, "
         "spinorial, semispinorial (even n)";
}

void require_self_dual(const FamilySpec& f) {
  if (!is_self_dual(f)) throw UsageError("--self-dual: " + describe(f) + " is not self-dual; " + self_dual_list());
}

Rational parse_rational_arg(const std::string& s, const char* flag) {
  try {
    return Rational::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::pair<long, long> parse_range(const std::string& s, const char* flag) {
  auto p = s.find("..");
  try {
    size_t used = 0;
    if (p == std::string::npos) {
      long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    long a = std::stol(s.substr(0, p), &used);
    if (used != p) throw std::invalid_argument(s);
    std::string rest = s.substr(p + 2);
    long b = std::stol(rest, &used);
    if (used != rest.size() || b < a) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": expected a..b, got '" + s + "'");
  }
}

std::string vec_str(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::string(v[i] > 0 ? "+1" : "-1");
  return s;
}

// ---------- wtj ----------

Output cmd_wtj(const FamilyArgs& fa) {
  auto f = fa.spec();
  auto W = wtj_matrix(f);
  Output o{io::to_json(*W), {}};
  Table t;
  t.header.push_back("t\\j");
  for (long j = 0; j <= W->r(); ++j) t.header.push_back(std::to_string(j));
  for (long i = 0; i <= W->r(); ++i) {
    std::vector<std::string> row{std::to_string(i)};
    for (long j = 0; j <= W->r(); ++j) row.push_back((*W)(i, j).str());
    t.rows.push_back(row);
  }
  o.tables.push_back({"", t});
  if (auto s = lambda_signature(f)) {
    Table l{{"j", "lambda"}, {}};
    for (size_t j = 0; j < s->lambda.size(); ++j) l.rows.push_back({std::to_string(j), s->lambda[j] > 0 ? "+1" : "-1"});
    o.tables.push_back({"lambda", l});
  }
  return o;
}

// ---------- bound / table ----------

struct BoundArgs {
  long d = 0;
  bool self_dual = false, pure = false, integer = false;
  std::string tol = "1/100000";
  int digits = 3;

  void add(CLI::App* c) {
    c->add_flag("--self-dual", self_dual, "add the shadow-type constraints");
    c->add_flag("--pure", pure, "restrict to pure codes");
    c->add_flag("--integer", integer, "also report the largest integer K with K+1 infeasible");
    c->add_option("--tol", tol, "bisection tolerance p/q")->capture_default_str();
    c->add_option("--digits", digits, "decimal digits (round half up)")->capture_default_str()->check(CLI::Range(0, 30));
  }
  LPOptions opts() const { return {self_dual, pure}; }
  Rational tolerance() const {
    Rational t = parse_rational_arg(tol, "--tol");
    if (t.sign() <= 0) throw UsageError("--tol must be positive");
    return t;
  }
};

struct Cell {
  BoundResult b;
  std::optional<Rational> candidate;
  bool none = false;  // infeasible already at K = 1
  Rational shown() const { return candidate ? *candidate : b.feasible_at; }
  std::string text(int digits) const { return none ? "none" : shown().decimal(digits); }
};

Cell compute_bound(const FamilySpec& f, long d, const BoundArgs& ba, bool allow_none = false) {
  Cell c;
  try {
    c.b = lp_bound(f, d, ba.opts(), ba.tolerance(), ba.integer);
  } catch (const NoFeasibleValue&) {
    if (!allow_none) throw;
    c.none = true;
    return c;
  }
  if (!c.b.infeasible_at) {
    c.candidate = c.b.feasible_at;
  } else {
    Rational s = simplest_rational(c.b.feasible_at, *c.b.infeasible_at);
    if (s < *c.b.infeasible_at && feasible_at(f, d, ba.opts(), s)) c.candidate = s;
  }
  return c;
}

json cell_json(const Cell& c, int digits) {
  if (c.none) return json{{"feasible", false}, {"decimal", "none"}};
  json j = io::to_json(c.b);
  j["candidate"] = c.candidate ? json(c.candidate->str()) : json(nullptr);
  j["decimal"] = c.shown().decimal(digits);
  return j;
}

Output cmd_bound(const FamilyArgs& fa, const BoundArgs& ba) {
  auto f = fa.spec();
  if (ba.self_dual) require_self_dual(f);
  long r = diameter(f);
  if (ba.d < 1 || ba.d > r + 1) throw UsageError("--d must satisfy 1 <= d <= " + std::to_string(r + 1));
  auto c = compute_bound(f, ba.d, ba);
  json doc{{"family", io::to_json(f)}, {"d", ba.d}, {"self_dual", ba.self_dual}, {"pure", ba.pure}, {"tol", ba.tolerance().str()}};
  doc["bound"] = cell_json(c, ba.digits);
  Table t{{"field", "value"}, {}};
  t.rows.push_back({"family", describe(f)});
  t.rows.push_back({"d", std::to_string(ba.d)});
  t.rows.push_back({"feasible_at", c.b.feasible_at.str()});
  t.rows.push_back({"infeasible_at", c.b.infeasible_at ? c.b.infeasible_at->str() : ""});
  t.rows.push_back({"candidate", c.candidate ? c.candidate->str() : ""});
  t.rows.push_back({"decimal", c.shown().decimal(ba.digits)});
  if (c.b.integer_bound) t.rows.push_back({"integer_bound", c.b.integer_bound->get_str()});
  t.rows.push_back({"iterations", std::to_string(c.b.iterations)});
  return {doc, {{"", t}}};
}

Output cmd_table(const FamilyArgs& fa, const BoundArgs& ba, const std::string& nr, const std::string& dr) {
  auto [n0, n1] = parse_range(nr, "--n-range");
  auto [d0, d1] = parse_range(dr, "--d-range");
  if (d0 < 1) throw UsageError("--d-range must start at >= 1");
  fa.kind();
  struct Job {
    long n, d;
  };
  std::vector<Job> jobs;
  std::vector<std::optional<FamilySpec>> fams;
  for (long n = n0; n <= n1; ++n) {
    std::optional<FamilySpec> f;
    try {
      f = fa.spec(n);
      if (ba.self_dual && !is_self_dual(*f)) f.reset();
    } catch (const UsageError&) {
      if (uses_q(fa.kind()) && fa.q == 0) throw;
      if (uses_w(fa.kind()) && fa.w == 0) throw;
    }
    fams.push_back(f);
    for (long d = d0; d <= d1; ++d)
      if (f && d <= diameter(*f) + 1) jobs.push_back({n, d});
  }
  if (ba.self_dual && std::none_of(fams.begin(), fams.end(), [](auto& f) { return f.has_value(); }))
    throw UsageError("--self-dual: no self-dual member in range; " + self_dual_list());
  ba.tolerance();
  auto cells = parallel_map(jobs.size(), [&](size_t i) { return compute_bound(*fams[jobs[i].n - n0], jobs[i].d, ba, true); });
  std::map<std::pair<long, long>, const Cell*> at;
  for (size_t i = 0; i < jobs.size(); ++i) at[{jobs[i].n, jobs[i].d}] = &cells[i];

  Table t;
  t.header.push_back("n");
  for (long d = d0; d <= d1; ++d) t.header.push_back("d=" + std::to_string(d));
  json rows = json::array();
  for (long n = n0; n <= n1; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    json jr{{"n", n}, {"cells", json::array()}};
    for (long d = d0; d <= d1; ++d) {
      auto it = at.find({n, d});
      row.push_back(it == at.end() ? "" : it->second->text(ba.digits));
      json jc{{"d", d}};
      if (it != at.end()) jc["bound"] = cell_json(*it->second, ba.digits);
      else jc["bound"] = nullptr;
      jr["cells"].push_back(jc);
    }
    t.rows.push_back(row);
    rows.push_back(jr);
  }
  json doc{{"family", fa.name}, {"self_dual", ba.self_dual}, {"pure", ba.pure}, {"tol", ba.tolerance().str()}, {"rows", rows}};
  if (uses_q(fa.kind())) doc["q"] = fa.q;
  if (uses_w(fa.kind())) doc["w"] = fa.w;
  return {doc, {{"", t}}};
}

// ---------- feasible ----------

Output cmd_feasible(const FamilyArgs& fa, const BoundArgs& ba, const std::string& Ks, bool& ok) {
  auto f = fa.spec();
  if (ba.self_dual) require_self_dual(f);
  long r = diameter(f);
  if (ba.d < 1 || ba.d > r + 1) throw UsageError("--d must satisfy 1 <= d <= " + std::to_string(r + 1));
  Rational K = parse_rational_arg(Ks, "--K");
  if (K.sign() <= 0) throw UsageError("--K must be positive");
  auto res = check_feasible(LPInstance{f, K, ba.d, ba.opts()});
  ok = res.feasible;
  json doc{{"family", io::to_json(f)}, {"d", ba.d}, {"K", K.str()}, {"self_dual", ba.self_dual}, {"pure", ba.pure},
           {"feasible", res.feasible}};
  Table t{{"t", "A_t", "B_t"}, {}};
  if (res.witness) {
    auto& A = *res.witness;
    auto W = wtj_matrix(f);
    std::vector<Rational> B(A.size());
    for (size_t i = 0; i < A.size(); ++i)
      for (size_t j = 0; j < A.size(); ++j) B[i] += (*W)(i, j) * A[j];
    for (auto& b : B) b = b / K;
    doc["witness"] = json{{"A", io::to_json(A)}, {"B", io::to_json(B)}};
    for (size_t i = 0; i < A.size(); ++i) t.rows.push_back({std::to_string(i), A[i].str(), B[i].str()});
  } else {
    doc["witness"] = nullptr;
  }
  Table v{{"field", "value"}, {{"family", describe(f)}, {"d", std::to_string(ba.d)}, {"K", K.str()},
                               {"verdict", res.feasible ? "feasible" : "infeasible"}}};
  Output o{doc, {{"", v}}};
  if (res.witness) o.tables.push_back({"witness", t});
  return o;
}

// ---------- construct / verify ----------

Output cmd_construct(const std::string& code, long s, long n, const std::string& signs) {
  CodeObject c;
  if (code == "clifford-hamming") {
    if (s < 3 || s > 5) throw UsageError("--s must be in 3..5 for clifford-hamming");
    auto st = clifford_hamming(static_cast<int>(s));
    if (!signs.empty()) {
      std::vector<int> sv;
      std::stringstream ss(signs);
      for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok == "1" || tok == "+1") sv.push_back(1);
        else if (tok == "-1") sv.push_back(-1);
        else throw UsageError("--signs: expected comma-separated +1/-1, got '" + tok + "'");
      }
      if (sv.size() != st.generators.size())
        throw UsageError("--signs: expected " + std::to_string(st.generators.size()) + " entries");
      st.signs = sv;
    }
    c = {FamilySpec::clifford_even(st.n), st};
  } else if (code == "su2-third" || code == "su2-quarter") {
    if (n < 4 || n > 200) throw UsageError("--n must be in 4..200 for " + code);
    if (!signs.empty()) throw UsageError("--signs applies to clifford-hamming only");
    c = {FamilySpec::su2(n), Su2Code{n, code == "su2-third" ? code_third(n) : code_quarter(n)}};
  } else {
    throw UsageError("unknown --code '" + code + "' (clifford-hamming, su2-third, su2-quarter)");
  }
  return {io::to_json(c), {}};
}

std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Output cmd_verify(const std::string& file, const std::string& reading_s, bool& ok) {
  std::string text;
  if (file.empty() || file == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open code file '" + file + "'");
    text = read_all(in);
  }
  CodeObject c;
  try {
    c = io::parse_code_text(text);
  } catch (const io::ParseError& e) {
    throw UsageError(std::string("code file ") + (file.empty() ? "<stdin>" : file) + ": " + e.what());
  }
  DetectionReport rep;
  Distribution D;
  FamilySpec wf = c.family;
  if (std::holds_alternative<Su2Code>(c.rep)) {
    if (!reading_s.empty()) throw UsageError("--reading applies to clifford codes only");
    auto& u = std::get<Su2Code>(c.rep);
    rep = detection_report(u);
    D = distribution_su2(u);
  } else {
    Reading rd = *family_reading(c.family);
    if (!reading_s.empty()) {
      auto r = parse_reading(reading_s);
      if (!r) throw UsageError("--reading must be even, odd or spinorial");
      rd = *r;
    }
    wf = reading_family(rd, c.family.n);
    if (auto* s = std::get_if<StabilizerCode>(&c.rep)) {
      rep = detection_report(*s, rd);
      D = distribution_symbolic(*s, rd);
    } else {
      auto& P = std::get<Matrix<Gaussian>>(c.rep);
      try {
        rep = detection_report(P, rd);
        D = distribution_matrix(basis_from_projector(P), rd);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("code file: ") + e.what());
      }
    }
  }
  auto W = wtj_matrix(wf);
  const long r = W->r();
  Rational K(rep.dimension);
  bool bwa = true, awb = true, ineq = true, dist = true;
  for (long t = 0; t <= r; ++t) {
    Rational s = 0, s2 = 0;
    for (long j = 0; j <= r; ++j) {
      s += (*W)(t, j) * D.A[j];
      s2 += (*W)(t, j) * D.B[j];
    }
    bwa = bwa && s == D.B[t];
    awb = awb && s2 == D.A[t];
    ineq = ineq && D.A[t] <= K * D.B[t];
    if (t < rep.min_distance) dist = dist && D.A[t] == K * D.B[t];
    else if (t == rep.min_distance) dist = dist && D.A[t] < K * D.B[t];
  }
  bool mc = rep.matrix_check.value_or(true);
  ok = bwa && awb && ineq && dist && mc;
  json checks{{"B=WA", bwa}, {"A=WB", awb}, {"A<=KB", ineq}, {"equality below d, strict at d", dist}};
  json doc{{"family", io::to_json(wf)}, {"report", io::to_json(rep)}, {"distribution", io::to_json(D)}, {"checks", checks},
           {"pass", ok}};
  Table info{{"field", "value"}, {}};
  info.rows.push_back({"family", describe(wf)});
  info.rows.push_back({"dimension", rep.dimension.get_str()});
  info.rows.push_back({"min_distance", std::to_string(rep.min_distance)});
  info.rows.push_back({"reading", rep.reading});
  info.rows.push_back({"pure", rep.is_pure ? "true" : "false"});
  info.rows.push_back({"nondegenerate", rep.is_nondegenerate ? "true" : "false"});
  info.rows.push_back({"path", rep.path});
  info.rows.push_back({"matrix_check", rep.matrix_check ? (*rep.matrix_check ? "true" : "false") : ""});
  for (auto& [k, v] : checks.items()) info.rows.push_back({k, v.get<bool>() ? "true" : "false"});
  Table dt{{"t", "A_t", "B_t"}, {}};
  for (long t = 0; t <= r; ++t) dt.rows.push_back({std::to_string(t), D.A[t].str(), D.B[t].str()});
  return {doc, {{"report", info}, {"distribution", dt}}};
}

// ---------- oracle ----------

Output cmd_oracle(const FamilyArgs& fa, long max_n, bool& ok) {
  std::vector<FamilySpec> fs;
  if (fa.n >= 0 && max_n >= 0) throw UsageError("give either --n or --max-n");
  if (fa.n >= 0) {
    fs.push_back(fa.spec());
  } else if (max_n >= 0) {
    for (long n = 0; n <= max_n; ++n) {
      try {
        auto f = fa.spec(n);
        if (oracle::ceiling_error(f)) throw UsageError(*oracle::ceiling_error(f));
        fs.push_back(f);
      } catch (const UsageError&) {
        if (uses_q(fa.kind()) && fa.q == 0) throw;
        if (uses_w(fa.kind()) && fa.w == 0) throw;
        if (n == max_n && fs.empty()) throw;
        if (auto f = FamilySpec{fa.kind(), fa.q, n, fa.w}; !validate(f) && oracle::ceiling_error(f))
          throw UsageError(*oracle::ceiling_error(f));
      }
    }
  } else {
    throw UsageError("--n or --max-n is required");
  }
  for (auto& f : fs)
    if (auto e = oracle::ceiling_error(f)) throw UsageError(*e);
  struct Pair {
    oracle::Report wtj;
    std::optional<oracle::Report> lambda;
  };
  auto res = parallel_map(fs.size(), [&](size_t i) {
    oracle::FamilyOracle O(fs[i]);
    Pair p{oracle::verify_wtj(O), std::nullopt};
    if (is_self_dual(fs[i])) p.lambda = oracle::verify_lambda(O);
    return p;
  });
  ok = true;
  json reports = json::array();
  Table t{{"family", "check", "result", "detail"}, {}};
  for (auto& p : res)
    for (auto* r : {&p.wtj, p.lambda ? &*p.lambda : nullptr}) {
      if (!r) continue;
      ok = ok && r->pass;
      reports.push_back(io::to_json(*r));
      std::string detail = r->check == "lambda" ? vec_str(r->lambda)
                                                : (r->mismatches.empty() ? "all entries match" : r->mismatches.front());
      if (!r->pass && !r->mismatches.empty()) detail = r->mismatches.front();
      t.rows.push_back({describe(r->family), r->check, r->pass ? "pass" : "FAIL", detail});
    }
  return {json{{"pass", ok}, {"reports", reports}}, {{"", t}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum linear-programming bounds: coefficients, bounds, codes and oracle checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_s, out_file;
  app.add_option("--format", format_s, "output format")->check(CLI::IsMember({"csv", "json", "md"}));
  app.add_option("--out", out_file, "write output to FILE");

  FamilyArgs fa;
  BoundArgs ba;
  auto* wtj = app.add_subcommand("wtj", "dump the W_t(j) matrix (and lambda when self-dual)");
  fa.add(wtj);
  auto* bound = app.add_subcommand("bound", "LP bound by exact bisection");
  fa.add(bound);
  ba.add(bound);
  bound->add_option("--d", ba.d, "minimum distance")->required();
  auto* feas = app.add_subcommand("feasible", "exact feasibility verdict at a given K");
  fa.add(feas);
  feas->add_flag("--self-dual", ba.self_dual);
  feas->add_flag("--pure", ba.pure);
  feas->add_option("--d", ba.d, "minimum distance")->required();
  std::string Ks;
  feas->add_option("--K", Ks, "code dimension p/q")->required();
  auto* table = app.add_subcommand("table", "grid of LP bounds, rows n, columns d");
  fa.add(table, false);
  ba.add(table);
  std::string nr, dr;
  table->add_option("--n-range", nr, "a..b")->required();
  table->add_option("--d-range", dr, "a..b")->required();
  auto* construct = app.add_subcommand("construct", "emit a code file");
  std::string code, signs;
  long s = 0, cn = 0;
  construct->add_option("--code", code, "clifford-hamming|su2-third|su2-quarter")->required();
  construct->add_option("--s", s, "Hamming parameter");
  construct->add_option("--n", cn, "su2 spin parameter");
  construct->add_option("--signs", signs, "comma-separated generator signs");
  auto* verify = app.add_subcommand("verify", "detection report and distance distribution of a code file");
  std::string code_file, reading;
  verify->add_option("--code", code_file, "code file (default stdin)");
  verify->add_option("--reading", reading, "even|odd|spinorial");
  auto* orc = app.add_subcommand("oracle", "compare closed forms against brute-force matrices");
  fa.add(orc, false);
  long max_n = -1;
  orc->add_option("--max-n", max_n, "check every valid n up to this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Format def = Format::Json;
  if (wtj->parsed()) def = Format::Csv;
  if (table->parsed()) def = Format::Md;
  Format fmt = format_s.empty() ? def : format_s == "csv" ? Format::Csv : format_s == "json" ? Format::Json : Format::Md;

  bool ok = true;
  Output out;
  try {
    thread_count();
    if (wtj->parsed()) out = cmd_wtj(fa);
    else if (bound->parsed()) out = cmd_bound(fa, ba);
    else if (feas->parsed()) out = cmd_feasible(fa, ba, Ks, ok);
    else if (table->parsed()) out = cmd_table(fa, ba, nr, dr);
    else if (construct->parsed()) {
      if (fmt != Format::Json && !format_s.empty()) throw UsageError("construct emits JSON code files only");
      out = cmd_construct(code, s, cn, signs);
    } else if (verify->parsed()) out = cmd_verify(code_file, reading, ok);
    else out = cmd_oracle(fa, max_n, ok);
  } catch (const NoFeasibleValue& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  if (construct->parsed()) fmt = Format::Json;
  std::string text = render(out, fmt);
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_file);
    if (!f) {
      std::cerr << "error: cannot write '" << out_file << "'\n";
      return 2;
    }
    f << text;
  }
  return ok ? 0 : 1;
}
