#include "hyperint/cli.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <sstream>

#include "hyperint/cohomology.hpp"
#include "hyperint/factor.hpp"
#include "hyperint/ode.hpp"
#include "hyperint/parse.hpp"
#include "hyperint/rational_integration.hpp"

namespace hyperint::cli {

const std::vector<std::string> kCommands = {"rational-integrate", "hyperexp-decompose", "liouville", "cohomology", "linearize"};

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int highest_var(const RFunc& f) {
  int n = 0;
  for (int v = 0; v < kVarZ; ++v)
    if (f.uses(v)) n = v + 1;
  return n;
}

bool is_form_text(const std::string& s) { return trim(s).rfind("form(", 0) == 0; }

// Parses every input once with all nine variables to fix n.
int infer_vars(const Request& req, ParseContext& ctx) {
  int n = 1;
  for (const auto& in : req.inputs) {
    if (is_form_text(in)) {
      const auto items = parse_form_items(in, ctx);
      n = std::max(n, static_cast<int>(items.size()));
      for (const auto& f : items) n = std::max(n, highest_var(f));
    } else {
      n = std::max(n, highest_var(parse_rfunc(in, ctx)));
    }
  }
  return n;
}

OneForm parse_form(const std::string& text, ParseContext& ctx, int n) {
  auto items = parse_form_items(text, ctx);
  if (static_cast<int>(items.size()) > n)
    throw UsageError("form with " + std::to_string(items.size()) + " components for " + std::to_string(n) + " variables");
  items.resize(static_cast<std::size_t>(n));
  return OneForm(items);
}

void expect_inputs(const Request& req, std::size_t lo, std::size_t hi, const std::string& usage) {
  if (req.inputs.size() < lo || req.inputs.size() > hi) throw UsageError(req.command + " expects " + usage);
}

void put(Report& r, const std::string& key, const std::string& value) {
  r.result[key] = value;
  r.lines.emplace_back(key, value);
}

std::string field_str(const FieldPtr& L) { return L ? to_string(L->minpoly(), "t") : "Q"; }

void run_rational_integrate(const Request& req, ParseContext& ctx, Report& r) {
  expect_inputs(req, 1, 1, "one form");
  const OneForm w = parse_form(req.inputs[0], ctx, r.vars);
  const HyperexpRep rep = rational_integrate(w, req.opt);
  put(r, "F0", rep.F0.str());
  put(r, "q", std::to_string(rep.q));
  put(r, "A", rep.A.str());
  put(r, "field", field_str(rep.field));
  r.result["logs"] = nlohmann::ordered_json::array();
  for (const auto& [lam, F] : rep.logs) {
    r.result["logs"].push_back({{"lambda", to_string(lam)}, {"F", F.str()}});
    r.lines.emplace_back("log", to_string(lam) + " * log(" + F.str() + ")");
  }
  r.certified = log_derivative(rep) == w;
}

void run_hyperexp_decompose(const Request& req, ParseContext& ctx, Report& r) {
  expect_inputs(req, 1, 1, "one form eta");
  const OneForm eta = parse_form(req.inputs[0], ctx, r.vars);
  const auto pd = hyperexp_decompose(eta, req.opt);
  if (!pd) {
    put(r, "decomposition", "none");
    return;
  }
  put(r, "F", pd->F.str());
  put(r, "T", pd->T.str());
  put(r, "g", pd->g.str());
  r.certified = certify(eta, *pd);
}

void run_liouville(const Request& req, ParseContext& ctx, Report& r) {
  expect_inputs(req, 2, 2, "eta and omega");
  const OneForm eta = parse_form(req.inputs[0], ctx, r.vars);
  const OneForm omega = parse_form(req.inputs[1], ctx, r.vars);
  const LiouvilleDecomp L = liouville_decompose(eta, omega, req.opt);
  r.result["exact"] = L.exact;
  r.lines.emplace_back("exact", L.exact ? "yes" : "no");
  put(r, "R", L.R.str());
  if (!L.exact) {
    put(r, "F", L.F.str());
    put(r, "T", L.T.str());
    put(r, "f", L.f.str());
    put(r, "g", L.g.str());
  }
  r.certified = certify(eta, omega, L);
}

void run_cohomology(const Request& req, ParseContext& ctx, Report& r) {
  expect_inputs(req, 1, 2, "eta and optionally S");
  const OneForm eta = parse_form(req.inputs[0], ctx, r.vars);
  MPoly S(1);
  if (req.inputs.size() == 2) {
    const RFunc s = parse_rfunc(req.inputs[1], ctx);
    if (!s.is_polynomial() || s.is_zero()) throw UsageError("S must be a nonzero polynomial");
    S = s.num();
  }
  const CohomBasis B = cohomology_basis(eta, S, req.opt);
  r.result["dimension"] = B.dimension();
  r.lines.emplace_back("dimension", std::to_string(B.dimension()));
  if (B.decomposed) {
    put(r, "F", B.F.str());
    put(r, "T", B.T.str());
    put(r, "g", B.g.str());
    put(r, "Q", to_string(B.Q, "z"));
  }
  const MPoly SD = S * eta.common_denominator();
  std::vector<MPoly> primes;
  if (!SD.is_constant())
    for (const auto& [p, e] : factor_irreducible(SD).factors) primes.push_back(p);
  bool ok = true;
  r.result["forms"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < B.forms.size(); ++i) {
    const auto& [k, fam] = B.provenance[i];
    r.result["forms"].push_back({{"form", B.forms[i].str()}, {"family", to_string(fam)}, {"index", k}});
    r.lines.emplace_back("form " + to_string(fam) + " " + std::to_string(k), B.forms[i].str());
    ok = ok && is_closed_twisted(eta, B.forms[i]);
    const MPoly den = B.forms[i].common_denominator();
    if (!den.is_constant())
      for (const auto& [p, e] : factor_irreducible(den).factors)
        ok = ok && std::find(primes.begin(), primes.end(), p) != primes.end();
  }
  r.certified = ok;
}

void run_linearize(const Request& req, ParseContext& ctx, Report& r) {
  expect_inputs(req, 2, 3, "eta and V, or eta, P and Q");
  if (r.vars != 2) throw UsageError("linearize works with 2 variables");
  const OneForm eta = parse_form(req.inputs[0], ctx, r.vars);
  RFunc P(1), Q;
  if (req.inputs.size() == 2) {
    Q = parse_rfunc(req.inputs[1], ctx);
  } else {
    P = parse_rfunc(req.inputs[1], ctx);
    Q = parse_rfunc(req.inputs[2], ctx);
  }
  const Linearization lin = linearize(P, Q, eta, req.opt);
  put(r, "X", lin.X.str());
  put(r, "Y", lin.Y.str());
  put(r, "a", lin.a.str());
  put(r, "b", lin.b.str());
  put(r, "convention", "x1' = P, x2' = Q; -dY/dX = a(X) + b(X)*Y");
  r.certified = certify(P, Q, lin);
}

template <class E>
bool named(const std::exception& e, const char* name, std::string& out) {
  if (dynamic_cast<const E*>(&e) == nullptr) return false;
  out = name;
  return true;
}

std::string error_name(const std::exception& e) {
  std::string s;
  if (named<SyntaxError>(e, "SyntaxError", s) || named<UnknownVariable>(e, "UnknownVariable", s) ||
      named<UsageError>(e, "UsageError", s) || named<NotClosed>(e, "NotClosed", s) ||
      named<NotClosedTwisted>(e, "NotClosedTwisted", s) || named<AlgebraicH>(e, "AlgebraicH", s) ||
      named<FirstIntegralDegenerate>(e, "FirstIntegralDegenerate", s) ||
      named<DegreeBoundExceeded>(e, "DegreeBoundExceeded", s) || named<DegreeCapExceeded>(e, "DegreeCapExceeded", s) ||
      named<NoHomographyFound>(e, "NoHomographyFound", s) || named<NoShiftPoleAvailable>(e, "NoShiftPoleAvailable", s) ||
      named<PreconditionViolated>(e, "PreconditionViolated", s) || named<PoleOutsideSupport>(e, "PoleOutsideSupport", s) ||
      named<InternalInconsistency>(e, "InternalInconsistency", s) || named<NotGalois>(e, "NotGalois", s) ||
      named<ConstantF>(e, "ConstantF", s))
    return s;
  return "Error";
}

}  // namespace

Report run(const Request& req) {
  Report r;
  r.request = req;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (std::find(kCommands.begin(), kCommands.end(), req.command) == kCommands.end())
      throw UsageError("unknown command '" + req.command + "'");
    ParseContext ctx(9);
    for (const auto& d : req.declarations) ctx.declare(d);
    r.vars = req.vars > 0 ? req.vars : infer_vars(req, ctx);
    ctx.set_nvars(r.vars);
    if (req.command == "rational-integrate") run_rational_integrate(req, ctx, r);
    else if (req.command == "hyperexp-decompose") run_hyperexp_decompose(req, ctx, r);
    else if (req.command == "liouville") run_liouville(req, ctx, r);
    else if (req.command == "cohomology") run_cohomology(req, ctx, r);
    else run_linearize(req, ctx, r);
  } catch (const std::exception& e) {
    r.certified = false;
    r.error_type = error_name(e);
    r.error_message = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.request.command << "\n";
  for (std::size_t i = 0; i < r.request.inputs.size(); ++i) os << "input " << i + 1 << ": " << r.request.inputs[i] << "\n";
  if (r.vars > 0) os << "vars: " << r.vars << "\n";
  if (!r.error_type.empty()) {
    os << "error: " << r.error_type << ": " << r.error_message << "\n";
  } else {
    for (const auto& [k, v] : r.lines) os << k << ": " << v << "\n";
  }
  os << "certification: " << (r.certified ? "pass" : "fail") << "\n";
  return os.str();
}

nlohmann::ordered_json render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.request.command;
  j["inputs"] = r.request.inputs;
  j["vars"] = r.vars;
  if (!r.error_type.empty()) j["error"] = {{"type", r.error_type}, {"message", r.error_message}};
  else j["result"] = r.result;
  j["certification"] = r.certified ? "pass" : "fail";
  return j;
}

std::vector<Request> parse_batch(std::istream& in, const Request& defaults) {
  std::vector<Request> out;
  std::vector<std::string> decls = defaults.declarations;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("with ", 0) == 0) {
      decls.push_back(trim(line.substr(5)));
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw SyntaxError("batch line without ':'", 0);
    Request req = defaults;
    req.command = trim(line.substr(0, colon));
    req.declarations = decls;
    req.inputs.clear();
    std::stringstream rest(line.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, '|')) req.inputs.push_back(trim(item));
    out.push_back(std::move(req));
  }
  return out;
}

int exit_code(const std::vector<Report>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.error_type == "SyntaxError" || r.error_type == "UnknownVariable" || r.error_type == "UsageError") return 2;
    if (!r.certified) code = 1;
  }
  return code;
}

}  // namespace hyperint::cli
