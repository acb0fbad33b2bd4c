// Command-line front end: report, census, selfcheck, enumerate-np,
// sigma-solve.  Exit codes are a stable contract: 0 success, 1 usage or
// validation failure, 2 dimension-formula disagreement, 3 search budget
// exceeded.

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rz/acceptance.hpp"
#include "rz/census.hpp"
#include "rz/components.hpp"
#include "rz/dimension.hpp"
#include "rz/errors.hpp"
#include "rz/newton.hpp"
#include "rz/serialize.hpp"
#include "rz/sigmalin.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagree = 2;
constexpr int kExitBudget = 3;

struct Window {
  int lo = 0, hi = 0;
};

long long parse_int(const std::string& text, const char* what) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(text.c_str(), &end, 10);
  if (errno != 0 || end == text.c_str() || *end != '\0')
    throw rz::ParseError(std::string(what) + " '" + text + "' is not an integer");
  return v;
}

// "k" means (-k, k); "lo:hi" is taken literally.
Window parse_window(const std::string& text) {
  Window w;
  size_t colon = text.find(':');
  if (colon == std::string::npos) {
    long long k = parse_int(text, "window");
    if (k < 0) throw rz::ParseError("window radius must be nonnegative");
    w.lo = static_cast<int>(-k);
    w.hi = static_cast<int>(k);
  } else {
    w.lo = static_cast<int>(parse_int(text.substr(0, colon), "window low end"));
    w.hi = static_cast<int>(parse_int(text.substr(colon + 1), "window high end"));
    if (w.lo > w.hi) throw rz::ParseError("window '" + text + "' is empty");
  }
  return w;
}

uint64_t budget_from_env(uint64_t fallback) {
  const char* s = std::getenv("RZ_BUDGET");
  if (!s || !*s) return fallback;
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (errno != 0 || end == s || *end != '\0')
    throw rz::ParseError(std::string("RZ_BUDGET '") + s + "' is not an integer");
  return static_cast<uint64_t>(v);
}

// All subcommands funnel their output through here so --out behaves the same
// everywhere.
int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

std::string polygon_or_dash(const rz::NewtonPolygon& np) {
  return np.summands.empty() ? std::string("-") : np.str();
}

int run_report(const std::string& np_text, const std::string& format,
               const std::string& out_path) {
  rz::NewtonPolygon np = rz::parse_newton(np_text);
  rz::DimensionReport rep = rz::full_report(np);
  rz::ComponentGroupDescription cg = rz::component_group(np);
  rz::PolarizedSplit split = rz::split_polarized(np);

  std::ostringstream os;
  if (format == "json") {
    rz::Json j;
    j["report"] = rz::report_to_json(rep);
    j["component_group"] = rz::components_to_json(cg);
    rz::Json js;
    js["n0"] = split.n0.summands.empty() ? rz::Json(nullptr)
                                         : rz::polygon_to_json(split.n0);
    js["has_middle"] = split.has_middle;
    js["n1"] = split.n1.summands.empty() ? rz::Json(nullptr)
                                         : rz::polygon_to_json(split.n1);
    j["split"] = js;
    os << j.dump(2) << "\n";
  } else {
    os << "polygon            " << np.str() << "\n"
       << "height             " << rep.height << "\n"
       << "half_height h      " << rep.h << "\n"
       << "middle_mult l      " << rep.l << "\n"
       << "m_invariant        " << rep.m << "\n"
       << "defect             " << rep.defect << "\n"
       << "dim_closed_form    " << rep.dim_closed_form.str() << "\n"
       << "dim_weight_floor   " << rep.dim_weight_floor.str() << "\n"
       << "dim_defect         " << rep.dim_defect.str() << "\n"
       << "formulas_agree     " << (rep.agree ? "yes" : "NO") << "\n"
       << "component_group    " << cg.str() << "\n"
       << "split_n0           " << polygon_or_dash(split.n0) << "\n"
       << "split_middle       " << (split.has_middle ? "1:1" : "-") << "\n"
       << "split_n1           " << polygon_or_dash(split.n1) << "\n";
  }
  int rc = emit(os.str(), out_path);
  if (rc != kExitOk) return rc;
  if (!rep.agree) {
    std::cerr << "error: dimension formulas disagree on " << np.str() << "\n";
    return kExitDisagree;
  }
  return kExitOk;
}

int run_census(const std::string& np_text, long long p, int r,
               const std::string& window_text, uint64_t budget, bool naive,
               const std::string& format, const std::string& out_path) {
  rz::NewtonPolygon np = rz::parse_newton(np_text);
  Window w = parse_window(window_text);
  rz::CensusQuery q{np, p, r, w.lo, w.hi, budget};

  std::vector<rz::CensusRecord> recs;
  try {
    recs = rz::enumerate_census(np, p, r, w.lo, w.hi, budget,
                                naive ? rz::CensusStrategy::kNaive
                                      : rz::CensusStrategy::kOptimized);
  } catch (const rz::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  }
  rz::CensusReport report = rz::verify_census(recs);

  std::ostringstream os;
  if (format == "csv") {
    os << rz::census_to_csv(q, recs);
  } else if (format == "json") {
    os << rz::census_to_json(q, recs).dump(2) << "\n";
  } else {
    os << "census np=" << np.str() << " p=" << p << " r=" << r << " window=["
       << w.lo << "," << w.hi << "]\n"
       << recs.size() << " lattice(s), all verified\n"
       << "kappa  a  rel_volume  a0  a1\n";
    for (const rz::CensusRecord& rec : recs) {
      os << std::setw(5) << rec.kappa << std::setw(3) << rec.a_inv
         << std::setw(12) << rec.rel_volume << std::setw(4) << rec.a0
         << std::setw(4) << rec.a1 << "\n";
    }
    os << "kappa histogram:";
    for (const auto& [k, n] : report.kappa_histogram)
      os << " " << k << ":" << n;
    os << "\n";
  }
  return emit(os.str(), out_path);
}

int run_selfcheck(int max_height, uint64_t budget) {
  rz::AcceptanceOptions opt;
  opt.max_height = max_height;
  opt.budget = budget;
  std::vector<rz::CriterionResult> results = rz::run_acceptance(opt);
  bool all = true;
  for (const rz::CriterionResult& res : results) {
    all = all && res.pass;
    std::printf("[%s] %d. %s (%.2fs)%s%s\n", res.pass ? "PASS" : "FAIL",
                res.index, res.name.c_str(), res.seconds,
                res.detail.empty() ? "" : ": ",
                res.detail.c_str());
  }
  std::printf("%s\n", all ? "all criteria passed" : "SELF-CHECK FAILED");
  return all ? kExitOk : kExitUsage;
}

int run_enumerate(int height, const std::string& format,
                  const std::string& out_path) {
  if (height < 2 || height % 2 != 0)
    throw rz::ParseError("height must be a positive even integer, got " +
                         std::to_string(height));
  std::vector<rz::NewtonPolygon> all = rz::enumerate_symmetric(height / 2);
  std::ostringstream os;
  if (format == "json") {
    rz::Json j;
    j["height"] = height;
    j["count"] = all.size();
    rz::Json arr = rz::Json::array();
    for (const rz::NewtonPolygon& np : all) arr.push_back(rz::polygon_to_json(np));
    j["polygons"] = arr;
    os << j.dump(2) << "\n";
  } else {
    for (const rz::NewtonPolygon& np : all) os << np.str() << "\n";
  }
  return emit(os.str(), out_path);
}

std::string poly_text(const rz::Fq& F, const rz::AdditivePoly& poly, int var) {
  std::string out;
  for (size_t e = 0; e < poly.coef.size(); ++e) {
    if (F.is_zero(poly.coef[e])) continue;
    unsigned long long pw = 1;
    for (size_t t = 0; t < e; ++t) pw *= static_cast<unsigned long long>(F.p());
    if (!out.empty()) out += " + ";
    out += "c" + std::to_string(F.index(poly.coef[e])) + "*x" +
           std::to_string(var);
    if (e > 0) out += "^" + std::to_string(pw);
  }
  return out.empty() ? "0" : out;
}

int run_sigma_solve(const std::string& in_path, int max_sigma_power,
                    const std::string& format, const std::string& out_path) {
  std::ifstream f(in_path, std::ios::binary);
  if (!f) throw rz::ParseError("cannot read '" + in_path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  rz::SigmaSystem sys = rz::system_from_json(rz::Json::parse(buf.str()));
  rz::SigmaSystem tri = rz::triangularize(sys, max_sigma_power);

  std::ostringstream os;
  if (format == "json") {
    os << rz::system_to_json(tri).dump(2) << "\n";
  } else {
    os << "sigma-triangular system over F_" << tri.field.q() << " ("
       << tri.equations() << " equation(s), " << tri.variables()
       << " variable(s))\n";
    for (size_t i = 0; i < tri.lhs.size(); ++i) {
      os << "eq" << i << ": ";
      bool first = true;
      for (size_t j = 0; j < tri.lhs[i].size(); ++j) {
        if (tri.lhs[i][j].zero()) continue;
        if (!first) os << " + ";
        os << "(" << poly_text(tri.field, tri.lhs[i][j], static_cast<int>(j))
           << ")";
        first = false;
      }
      if (first) os << "0";
      os << " = c" << tri.field.index(tri.rhs[i]) << "\n";
    }
  }
  return emit(os.str(), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* m = std::getenv("RZ_MUTATE"); m && !std::strcmp(m, "defect"))
    rz::testing::mutate_defect_ceil = true;

  CLI::App app{"Invariants of moduli of polarized p-divisible groups"};
  app.require_subcommand(1);

  std::string np_text, window_text, format = "text", out_path, in_path;
  long long p = 3;
  int r = 1;
  int max_height = 20;
  int height = 0;
  int max_sigma_power = 8;
  uint64_t budget = 0;  // resolved against RZ_BUDGET after parsing
  bool naive = false;

  CLI::App* rep = app.add_subcommand("report", "Dimension and component-group report");
  rep->add_option("--np", np_text, "Newton polygon, e.g. 1:2,1:1,2:1")->required();
  rep->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  rep->add_option("--out", out_path, "Write output to this file");

  CLI::App* cen = app.add_subcommand("census", "Exhaustive lattice census in a volume window");
  cen->add_option("--np", np_text, "Symmetric Newton polygon")->required();
  cen->add_option("--p", p, "Residue characteristic (prime)");
  cen->add_option("--r", r, "Residue field degree");
  CLI::Option* window_opt =
      cen->add_option("--window", window_text, "k for (-k,k), or lo:hi")->required();
  CLI::Option* budget_opt =
      cen->add_option("--budget", budget, "Search-space ceiling");
  cen->add_flag("--naive", naive, "Use the slow enumerate-everything oracle");
  cen->add_option("--format", format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cen->add_option("--out", out_path, "Write output to this file");

  CLI::App* self = app.add_subcommand("selfcheck", "Run the built-in acceptance suite");
  self->add_option("--max-height", max_height, "Polygon sweep bound (even)");
  CLI::Option* self_budget_opt =
      self->add_option("--budget", budget, "Census search-space ceiling");

  CLI::App* enu = app.add_subcommand("enumerate-np", "List symmetric Newton polygons of one height");
  enu->add_option("--height", height, "Total height (positive even)")->required();
  enu->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  enu->add_option("--out", out_path, "Write output to this file");

  CLI::App* sig = app.add_subcommand("sigma-solve", "Triangularize a semilinear system (JSON in)");
  sig->add_option("--in", in_path, "System JSON file")->required();
  sig->add_option("--max-sigma-power", max_sigma_power, "Elimination twist cap");
  sig->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  sig->add_option("--out", out_path, "Write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  (void)window_opt;
  try {
    if (rep->parsed()) return run_report(np_text, format, out_path);
    if (cen->parsed()) {
      if (!budget_opt->count()) budget = budget_from_env(rz::kDefaultCensusBudget);
      return run_census(np_text, p, r, window_text, budget, naive, format,
                        out_path);
    }
    if (self->parsed()) {
      if (!self_budget_opt->count())
        budget = budget_from_env(rz::kDefaultCensusBudget);
      return run_selfcheck(max_height, budget);
    }
    if (enu->parsed()) return run_enumerate(height, format, out_path);
    if (sig->parsed())
      return run_sigma_solve(in_path, max_sigma_power, format, out_path);
  } catch (const rz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;  // unreachable: a subcommand is required
}
