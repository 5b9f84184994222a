#include "shiftarg/commands.hpp"

#include "shiftarg/loop.hpp"
#include "shiftarg/verify.hpp"

#include <chrono>
#include <stdexcept>

namespace shiftarg {

namespace {

Rational rational_from_json(const Json& v, const char* what) {
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("bad ") + what + ": " + e.what());
  }
  throw std::runtime_error(std::string(what) + " must be a rational string or an integer");
}

Json young_to_json(const YoungDiagram& d) { return Json(d.rows()); }

Json jordan_to_json(const JordanData& jd) {
  Json out = Json::array();
  for (const auto& part : jd.parts())
    out.push_back({{"eigenvalue", part.eigenvalue.str()}, {"blocks", part.blocks.rows()}});
  return out;
}

Json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  Json out = Json::array();
  for (const auto& [m, k] : pairs) out.push_back(Json::array({m, k}));
  return out;
}

Json report_to_json(const VerificationReport& r) {
  return Json{{"suite", r.suite}, {"n", r.n},
              {"mu_digest", r.mu_digest}, {"cases", r.cases},
              {"failures", r.failures},  {"elapsed_ms", r.elapsed_ms}};
}

GeneratorTable negative_control_table(int n) {
  GeneratorTable t;
  t.family = Family::Phi;
  t.n = n;
  t.mu = QMatrix(n, n);
  t.entries[{1, 0}] = UElement::gen(n, 1, 1);
  t.entries[{2, 0}] = UElement::gen(n, 1, 2);
  auto tbl = VarTable::gl(n);
  t.symbols[{1, 0}] = CPoly::var(tbl, 0);
  t.symbols[{2, 0}] = CPoly::var(tbl, n);  // E[2,1]
  return t;
}

std::vector<std::string> default_suites(int n) {
  if (n <= 3) return {"commutativity", "poisson", "gr", "rank", "centralizer", "identities"};
  if (n == 4) return {"poisson", "gr", "rank", "centralizer", "identities"};
  return {"rank", "centralizer"};
}

VerificationReport identities_report(const QMatrix& mu) {
  VerificationReport r;
  r.suite = "identities";
  r.n = mu.rows();
  r.mu_digest = matrix_digest(mu);
  IdentityReport rep = check_identities(mu);
  r.cases = mu.rows() <= 3 ? 5 : (mu.rows() <= 4 ? 4 : 0);
  if (!rep.loop_binomial) r.failures.push_back("loop-level binomial relation failed");
  if (!rep.dop_binomial) r.failures.push_back("evaluated binomial relation failed");
  if (!rep.macmahon) r.failures.push_back("MacMahon identity failed");
  if (!rep.newton) r.failures.push_back("Newton identity failed");
  if (!rep.triangular) r.failures.push_back("triangular change of family failed");
  return r;
}

VerificationReport ss_report(int n) {
  VerificationReport r;
  r.suite = "ss-check";
  r.n = n;
  r.mu_digest = matrix_digest(QMatrix(n, n));
  if (n > 3) {
    r.failures.push_back("ss-check is kept to n <= 3 (probe cost)");
    return r;
  }
  for (SsFamily fam : {SsFamily::Phi, SsFamily::Psi, SsFamily::Theta}) {
    for (int m = 1; m <= n; ++m) {
      auto coeffs = ss_family(fam, m, n);
      for (size_t a = 0; a < coeffs.size(); ++a) {
        ++r.cases;
        SsCheck check = is_ss_vector(coeffs[a]);
        if (!check.ok)
          r.failures.push_back("family entry (m=" + std::to_string(m) + ", a=" + std::to_string(a) +
                               ") fails at probe E[" + std::to_string(check.i) + "," +
                               std::to_string(check.j) + ";" + std::to_string(check.r) + "]");
      }
    }
  }
  return r;
}

}  // namespace

ProblemInput parse_input_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(std::string("invalid input JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("input must be a JSON object");

  ProblemInput in;
  int n = doc.contains("n") ? doc.at("n").get<int>() : 0;

  if (doc.contains("jordan")) {
    const Json& arr = doc.at("jordan");
    if (!arr.is_array() || arr.empty()) throw std::runtime_error("jordan must be a nonempty array");
    std::vector<JordanBlockSet> parts;
    int total = 0;
    for (const Json& item : arr) {
      JordanBlockSet part;
      part.eigenvalue = rational_from_json(item.at("eigenvalue"), "eigenvalue");
      std::vector<int> blocks = item.at("blocks").get<std::vector<int>>();
      part.blocks = YoungDiagram(blocks);
      total += part.blocks.size();
      parts.push_back(std::move(part));
    }
    if (n == 0) n = total;
    in.declared = JordanData(n, std::move(parts));
  }

  if (doc.contains("matrix")) {
    const Json& rows = doc.at("matrix");
    if (!rows.is_array() || rows.empty()) throw std::runtime_error("matrix must be a nonempty array");
    if (n == 0) n = int(rows.size());
    if (int(rows.size()) != n) throw std::runtime_error("matrix row count differs from n");
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      const Json& row = rows.at(size_t(i));
      if (!row.is_array() || int(row.size()) != n)
        throw std::runtime_error("matrix row " + std::to_string(i + 1) + " must have n entries");
      for (int j = 0; j < n; ++j) m.at(i, j) = rational_from_json(row.at(size_t(j)), "matrix entry");
    }
    in.mu = m;
  } else if (in.declared) {
    in.mu = jordan_matrix(*in.declared);
  } else if (n > 0) {
    in.mu = QMatrix(n, n);
  }

  if (n < 1) throw std::runtime_error("input needs n, a matrix, or jordan data");
  in.n = n;
  return in;
}

JordanData effective_jordan(const ProblemInput& in) {
  if (in.declared) return *in.declared;
  return jordan_data(in.mu);
}

CmdResult cmd_diagram(const ProblemInput& in) {
  JordanData jd = effective_jordan(in);
  YoungDiagram gamma = jd.gamma();
  SkewSelection sel = selection(in.n, gamma);

  std::vector<int> staircase;
  for (int v = in.n; v >= 1; --v) staircase.push_back(v);

  CmdResult res;
  res.output = Json{{"n", in.n},
                    {"jordan", jordan_to_json(jd)},
                    {"gamma", young_to_json(gamma)},
                    {"Gamma", staircase},
                    {"retained", pairs_to_json(sel.retained)},
                    {"excluded", pairs_to_json(sel.excluded)},
                    {"expected_rank", sel.expected_rank},
                    {"centralizer_dim", jd.centralizer_dim()}};
  return res;
}

CmdResult cmd_generators(const ProblemInput& in, Family f) {
  GeneratorTable t = generator_table(f, in.mu);
  Json entries = Json::array();
  for (const auto& [key, u] : t.entries) {
    entries.push_back(Json{{"m", key.first},
                           {"k", key.second},
                           {"element", u.str()},
                           {"symbol", t.symbol_entry(key.first, key.second).str()}});
  }
  CmdResult res;
  res.output = Json{{"n", in.n},
                    {"family", family_name(f)},
                    {"mu_digest", matrix_digest(in.mu)},
                    {"entries", entries}};
  return res;
}

CmdResult cmd_verify(const ProblemInput& in, const VerifyOptions& opt) {
  std::vector<std::string> suites = opt.suites.empty() ? default_suites(in.n) : opt.suites;

  std::optional<GeneratorTable> table;       // family table, built on demand
  std::optional<GeneratorTable> phi_table;   // rank/gr always run on the determinant family
  auto the_table = [&]() -> const GeneratorTable& {
    if (opt.negative_control) {
      if (!table) table = negative_control_table(in.n);
      return *table;
    }
    if (!table) table = generator_table(opt.family, in.mu);
    return *table;
  };
  auto the_phi = [&]() -> const GeneratorTable& {
    if (!opt.negative_control && opt.family == Family::Phi) return the_table();
    if (!phi_table) phi_table = generator_table(Family::Phi, in.mu);
    return *phi_table;
  };

  Json reports = Json::array();
  bool all_ok = true;
  for (const std::string& name : suites) {
    auto started = std::chrono::steady_clock::now();
    VerificationReport r;
    if (name == "commutativity") {
      r = commutativity_suite(the_table());
    } else if (name == "poisson") {
      r = poisson_suite(the_table());
    } else if (name == "rank") {
      JordanData jd = effective_jordan(in);
      SkewSelection sel = selection(in.n, jd.gamma());
      r = rank_suite(symbol_table(Family::Phi, in.mu), sel, in.mu, opt.seed);
    } else if (name == "centralizer") {
      r = centralizer_suite(in.mu, effective_jordan(in));
    } else if (name == "gr") {
      JordanData jd = effective_jordan(in);
      r = gr_suite(the_phi(), selection(in.n, jd.gamma()));
    } else if (name == "identities") {
      r = identities_report(in.mu);
    } else if (name == "ss-check") {
      r = ss_report(in.n);
    } else {
      throw std::runtime_error("unknown suite: " + name);
    }
    if (opt.timing) {
      auto elapsed = std::chrono::steady_clock::now() - started;
      r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    all_ok = all_ok && r.ok();
    reports.push_back(report_to_json(r));
  }

  CmdResult res;
  res.output = Json{{"n", in.n},
                    {"seed", opt.seed},
                    {"suites", suites},
                    {"reports", reports},
                    {"ok", all_ok}};
  res.exit_code = all_ok ? 0 : 1;
  return res;
}

CmdResult cmd_ss_check(int n, const SsOptions& opt) {
  if (n < 1) throw std::runtime_error("ss-check needs n >= 1");
  if (n > 3) throw std::runtime_error("ss-check is kept to n <= 3 (probe cost)");

  SsFamily fam;
  if (opt.family == "phi") {
    fam = SsFamily::Phi;
  } else if (opt.family == "psi") {
    fam = SsFamily::Psi;
  } else if (opt.family == "theta") {
    fam = SsFamily::Theta;
  } else {
    throw std::runtime_error("unknown loop family: expected phi | psi | theta");
  }

  int max_m = opt.max_m > 0 ? opt.max_m : n;
  if (max_m > n) throw std::runtime_error("family degree m must stay within 1..n");

  Json results = Json::array();
  bool all_ok = true;
  for (int m = 1; m <= max_m; ++m) {
    auto coeffs = ss_family(fam, m, n);
    for (size_t a = 0; a < coeffs.size(); ++a) {
      SsCheck check = is_ss_vector(coeffs[a]);
      all_ok = all_ok && check.ok;
      Json item{{"m", m}, {"a", int(a)}, {"ok", check.ok}};
      if (!check.ok) {
        item["witness_probe"] = "E[" + std::to_string(check.i) + "," + std::to_string(check.j) +
                                ";" + std::to_string(check.r) + "]";
        item["witness_image"] = check.image.str();
      }
      results.push_back(item);
    }
  }

  CmdResult res;
  res.output = Json{{"n", n}, {"family", opt.family}, {"results", results}, {"ok", all_ok}};
  res.exit_code = all_ok ? 0 : 1;
  return res;
}

}  // namespace shiftarg
