#include "pweyl/certificate.hpp"

#include <sstream>

#include "pweyl/expr.hpp"

namespace pweyl {

namespace {

using nlohmann::json;

json ratfn_to_json(const RatFn& f, bool reduce) {
  RatFn g = reduce ? f.reduced() : f;
  return json{{"num", g.num().to_string()}, {"den", g.den().to_string()}};
}

RatFn ratfn_from_json(const json& j, unsigned rank) {
  RatFn num = parse_ratfn(j.at("num").get<std::string>(), rank);
  RatFn den = parse_ratfn(j.at("den").get<std::string>(), rank);
  if (!num.is_polynomial() || !den.is_polynomial())
    throw input_error("certificate functions must be given as num/den polynomials");
  return RatFn(num.num(), den.num());
}

json matrix_to_json(const CycMat& m) {
  json rows = json::array();
  for (unsigned i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (unsigned j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

CycMat matrix_from_json(const json& rows) {
  const unsigned n = static_cast<unsigned>(rows.size());
  CycMat m(n);
  for (unsigned i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw input_error("certificate matrix is not square");
    for (unsigned j = 0; j < n; ++j) {
      RatFn v = parse_ratfn(rows[i][j].get<std::string>(), 0);
      if (!v.is_constant()) throw input_error("matrix entry is not a scalar");
      m.at(i, j) = v.constant_value();
    }
  }
  return m;
}

json witness_to_json(const IndependenceWitness& w) {
  json pt = json::array();
  for (const auto& c : w.point) pt.push_back(c.to_string());
  return json{{"status", w.ok() ? "success" : "inconclusive"},
              {"point", std::move(pt)},
              {"det", w.det.to_string()},
              {"seed", w.seed},
              {"attempts", w.attempts}};
}

IndependenceWitness witness_from_json(const json& j) {
  IndependenceWitness w;
  w.status = j.at("status").get<std::string>() == "success"
                 ? IndependenceWitness::Status::Success
                 : IndependenceWitness::Status::Inconclusive;
  for (const auto& s : j.at("point")) {
    RatFn v = parse_ratfn(s.get<std::string>(), 0);
    w.point.push_back(v.constant_value());
  }
  RatFn d = parse_ratfn(j.at("det").get<std::string>(), 0);
  w.det = d.constant_value();
  w.seed = j.at("seed").get<std::uint64_t>();
  w.attempts = j.at("attempts").get<unsigned>();
  return w;
}

}  // namespace

json solution_to_json(const NoetherSolution& sol, bool reduce) {
  json gens = json::array();
  for (const auto& g : sol.action.generators()) gens.push_back(matrix_to_json(g));

  json table = json::array();
  for (const auto& e : sol.report.table) {
    json entry{{"row", e.row}, {"col", e.col}, {"expected", e.expected}, {"pass", e.pass}};
    if (!e.pass) entry["computed"] = e.computed;
    table.push_back(std::move(entry));
  }
  json invar = json::array();
  for (const auto& e : sol.report.invariance)
    invar.push_back(json{{"generator", e.generator}, {"function", e.function}, {"pass", e.pass}});

  json xps = json::array(), yps = json::array();
  for (const auto& f : sol.xprime) xps.push_back(ratfn_to_json(f, reduce));
  for (const auto& f : sol.yprime) yps.push_back(ratfn_to_json(f, reduce));

  return json{
      {"schema", 1},
      {"kind", "noether_solution"},
      {"group",
       {{"name", sol.action.name()},
        {"rank", sol.action.rank()},
        {"mode", sol.action.mode() == ActionMode::DiagonalLinear ? "diagonal_linear"
                                                                 : "symplectic_2n"},
        {"order", sol.action.order()},
        {"generators", std::move(gens)}}},
      {"xprime", std::move(xps)},
      {"yprime", std::move(yps)},
      {"verification",
       {{"bracket_table", std::move(table)},
        {"invariance", std::move(invar)},
        {"independence", witness_to_json(sol.report.independence)},
        {"conventions", sol.report.conventions},
        {"discrepancies", sol.report.discrepancies},
        {"unverified", sol.report.unverified}}}};
}

json invariant_data_to_json(const InvariantSystem& sys, const JacobianData& jd) {
  json invs = json::array();
  for (std::size_t i = 0; i < sys.invs.size(); ++i)
    invs.push_back(json{{"poly", sys.invs[i].to_string()}, {"degree", sys.degrees[i]}});
  json rows = json::array();
  for (const auto& row : jd.M) {
    json r = json::array();
    for (const auto& p : row) r.push_back(p.to_string());
    rows.push_back(std::move(r));
  }
  return json{{"schema", 1},
              {"kind", "invariant_system"},
              {"group", {{"name", sys.action.name()}, {"rank", sys.action.rank()},
                         {"order", sys.action.order()}}},
              {"invariants", std::move(invs)},
              {"jacobian",
               {{"M", std::move(rows)},
                {"J", jd.J.to_string()},
                {"sigma_exponent", jd.sigma_exponent},
                {"sigma_min_exponent", jd.sigma_min_exponent}}}};
}

ParsedCertificate parse_certificate(const json& j, unsigned bound) {
  if (j.at("schema").get<int>() != 1) throw input_error("unsupported certificate schema");
  if (j.at("kind").get<std::string>() != "noether_solution")
    throw input_error("not a noether_solution certificate");
  const json& g = j.at("group");
  const unsigned rank = g.at("rank").get<unsigned>();
  ActionMode mode = g.at("mode").get<std::string>() == "diagonal_linear"
                        ? ActionMode::DiagonalLinear
                        : ActionMode::Symplectic2n;
  std::vector<CycMat> gens;
  for (const auto& gm : g.at("generators")) gens.push_back(matrix_from_json(gm));

  ParsedCertificate cert{
      GroupAction::close_group(std::move(gens), mode, rank, bound,
                               g.at("name").get<std::string>()),
      {}, {}, 0, {}, {}, {}};
  cert.recorded_order = g.at("order").get<std::size_t>();
  for (const auto& f : j.at("xprime")) cert.xprime.push_back(ratfn_from_json(f, rank));
  for (const auto& f : j.at("yprime")) cert.yprime.push_back(ratfn_from_json(f, rank));
  if (cert.xprime.size() != rank || cert.yprime.size() != rank)
    throw input_error("certificate must contain n primed pairs");

  const json& v = j.at("verification");
  for (const auto& e : v.at("bracket_table")) {
    TableEntry t;
    t.row = e.at("row").get<unsigned>();
    t.col = e.at("col").get<unsigned>();
    t.expected = e.at("expected").get<int>();
    t.pass = e.at("pass").get<bool>();
    cert.recorded_table.push_back(t);
  }
  for (const auto& e : v.at("invariance")) {
    InvarianceEntry ie;
    ie.generator = e.at("generator").get<unsigned>();
    ie.function = e.at("function").get<unsigned>();
    ie.pass = e.at("pass").get<bool>();
    cert.recorded_invariance.push_back(ie);
  }
  cert.recorded_independence = witness_from_json(v.at("independence"));
  return cert;
}

ReverifyResult reverify_certificate(const ParsedCertificate& cert, const VerifyOptions& opts) {
  ReverifyResult res;
  const unsigned rank = cert.action.rank();

  if (cert.action.order() != cert.recorded_order)
    res.failures.push_back("group order mismatch: closure has " +
                           std::to_string(cert.action.order()) + ", certificate records " +
                           std::to_string(cert.recorded_order));

  VerifyOptions vopts = opts;
  if (cert.recorded_independence.ok())
    vopts.independence_point = cert.recorded_independence.point;
  res.report = verify_functions(cert.action, cert.xprime, cert.yprime, vopts);

  // canonical expectations must match what the certificate claims
  if (cert.recorded_table.size() != res.report.table.size()) {
    res.failures.push_back("bracket table shape mismatch");
  } else {
    for (std::size_t i = 0; i < res.report.table.size(); ++i) {
      const TableEntry& got = res.report.table[i];
      const TableEntry& rec = cert.recorded_table[i];
      if (got.row != rec.row || got.col != rec.col || got.expected != rec.expected) {
        res.failures.push_back("bracket table layout mismatch at index " + std::to_string(i));
        continue;
      }
      if (!got.pass)
        res.failures.push_back("bracket {" + function_name(got.row, rank) + ", " +
                               function_name(got.col, rank) + "} = " + got.computed +
                               ", expected " + std::to_string(got.expected));
      else if (!rec.pass)
        res.failures.push_back("certificate marks a passing bracket entry as failed");
    }
  }
  for (const auto& e : res.report.invariance)
    if (!e.pass)
      res.failures.push_back(function_name(e.function, rank) +
                             " is not invariant under generator " + std::to_string(e.generator));
  if (!res.report.independence.ok()) {
    res.failures.push_back("independence witness could not be reproduced");
  } else if (cert.recorded_independence.ok() &&
             res.report.independence.det != cert.recorded_independence.det) {
    res.failures.push_back("independence determinant mismatch at the recorded point");
  }
  res.ok = res.failures.empty();
  return res;
}

// --- human-readable emitters -------------------------------------------------

std::string solution_to_text(const NoetherSolution& sol) {
  std::ostringstream os;
  const unsigned n = sol.action.rank();
  os << "group: " << sol.action.name() << "  (order " << sol.action.order() << ", rank " << n
     << ")\n";
  for (unsigned i = 0; i < n; ++i)
    os << "x'" << (i + 1) << " = " << sol.xprime[i].to_string() << "\n";
  for (unsigned i = 0; i < n; ++i)
    os << "y'" << (i + 1) << " = " << sol.yprime[i].to_string() << "\n";
  os << "verification: " << sol.report.summary() << "\n";
  for (const auto& c : sol.report.conventions) os << "convention: " << c << "\n";
  for (const auto& d : sol.report.discrepancies) os << "discrepancy: " << d << "\n";
  for (const auto& u : sol.report.unverified) os << "unverified: " << u << "\n";
  return os.str();
}

namespace {

std::string latex_poly(const Poly& p) {
  // Translate the plain-text form: x1 -> x_{1}, zeta(8)^3 -> \zeta_{8}^{3},
  // * -> \, (thin space), keeping +/- structure.
  std::string s = p.to_string();
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    if ((s[i] == 'x' || s[i] == 'y') && i + 1 < s.size() && std::isdigit(s[i + 1])) {
      out += s[i];
      out += "_{";
      ++i;
      while (i < s.size() && std::isdigit(s[i])) out += s[i++];
      out += "}";
    } else if (s.compare(i, 5, "zeta(") == 0) {
      out += "\\zeta_{";
      i += 5;
      while (i < s.size() && std::isdigit(s[i])) out += s[i++];
      if (i < s.size() && s[i] == ')') ++i;
      out += "}";
    } else if (s[i] == '^') {
      out += "^{";
      ++i;
      if (i < s.size() && s[i] == '-') out += s[i++];
      while (i < s.size() && std::isdigit(s[i])) out += s[i++];
      out += "}";
    } else if (s[i] == '*') {
      out += "\\, ";
      ++i;
    } else {
      out += s[i++];
    }
  }
  return out;
}

std::string latex_ratfn(const RatFn& f) {
  if (f.is_polynomial()) return latex_poly(f.num());
  return "\\frac{" + latex_poly(f.num()) + "}{" + latex_poly(f.den()) + "}";
}

}  // namespace

std::string solution_to_latex(const NoetherSolution& sol) {
  std::ostringstream os;
  const unsigned n = sol.action.rank();
  os << "% group " << sol.action.name() << ", order " << sol.action.order() << "\n";
  os << "\\begin{align*}\n";
  for (unsigned i = 0; i < n; ++i)
    os << "x_{" << (i + 1) << "}' &= " << latex_ratfn(sol.xprime[i]) << " \\\\\n";
  for (unsigned i = 0; i < n; ++i)
    os << "y_{" << (i + 1) << "}' &= " << latex_ratfn(sol.yprime[i])
       << (i + 1 < n ? " \\\\" : "") << "\n";
  os << "\\end{align*}\n";
  os << "% bracket relations verified: \\{x_i', x_j'\\} = \\{y_i', y_j'\\} = 0, "
        "\\{x_i', y_j'\\} = \\delta_{ij}\n";
  return os.str();
}

}  // namespace pweyl
