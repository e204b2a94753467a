#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "coxgrowth/catalog.hpp"
#include "coxgrowth/classify.hpp"
#include "coxgrowth/compare.hpp"
#include "coxgrowth/coxfile.hpp"
#include "coxgrowth/errors.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/oracle.hpp"
#include "coxgrowth/replay.hpp"
#include "coxgrowth/simplex.hpp"

using json = nlohmann::ordered_json;
using namespace coxgrowth;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string symbol;
  std::string file;
  std::string named;
};

struct Common {
  bool json = false;
  std::string eps = "1e-12";
  int max_k = 10;
  std::uint64_t cap = kDefaultCap;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* s = cmd->add_option("--symbol", in.symbol, "Coxeter symbol, e.g. \"[6,3,3]\"");
  auto* f = cmd->add_option("--file", in.file, ".cox file");
  auto* n = cmd->add_option("--named", in.named, "built-in graph (gamma2..gamma9, w0..w2, p0, delta1..delta4, f4ext)");
  s->excludes(f)->excludes(n);
  f->excludes(n);
}

CoxeterGraph load(const Input& in) {
  if (!in.symbol.empty()) return parse_symbol(in.symbol);
  if (!in.file.empty()) {
    std::ifstream is(in.file);
    if (!is) throw UsageError("cannot open " + in.file);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_cox(ss.str());
  }
  if (!in.named.empty()) {
    for (auto& n : catalog::all())
      if (n.name == in.named) return n.graph;
    throw UsageError("unknown graph name '" + in.named + "'");
  }
  throw UsageError("one of --symbol, --file or --named is required");
}

// Exact value of a decimal or scientific literal such as "1e-12" or "0.5".
Rational parse_eps(const std::string& s) {
  const auto e = s.find_first_of("eE");
  const std::string mant = s.substr(0, e);
  long exp = 0;
  if (e != std::string::npos) {
    try {
      std::size_t used = 0;
      exp = std::stol(s.substr(e + 1), &used);
      if (used != s.size() - e - 1) throw UsageError("");
    } catch (...) {
      throw UsageError("bad --eps value '" + s + "'");
    }
  }
  const auto dot = mant.find('.');
  std::string digits = mant;
  if (dot != std::string::npos) {
    digits.erase(dot, 1);
    exp -= static_cast<long>(mant.size() - dot - 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("bad --eps value '" + s + "'");
  Rational r{Integer(digits)};
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp < 0 ? -exp : exp));
  if (exp < 0)
    r /= p;
  else
    r *= p;
  r.canonicalize();
  if (sgn(r) <= 0) throw UsageError("--eps must be positive");
  return r;
}

std::string types_to_string(const std::vector<IrreducibleType>& ts) {
  std::string s;
  for (const auto& t : ts) s += (s.empty() ? "" : " x ") + t.name();
  return s.empty() ? "(empty)" : s;
}

json types_json(const std::vector<IrreducibleType>& ts) {
  json a = json::array();
  for (const auto& t : ts) a.push_back(t.name());
  return a;
}

json rate_json(const GrowthRate& r) {
  json j;
  if (r.kind == GrowthRate::Kind::Unit) {
    j["kind"] = "unit";
    j["tau"] = 1;
    return j;
  }
  j["kind"] = "exponential";
  j["tau"] = r.approx();
  j["tau_lo"] = r.tau_lo().get_str();
  j["tau_hi"] = r.tau_hi().get_str();
  j["radius_lo"] = r.radius.lo.get_str();
  j["radius_hi"] = r.radius.hi.get_str();
  j["width"] = Rational(r.tau_hi() - r.tau_lo()).get_d();
  return j;
}

template <class T>
json counts_json(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

int cmd_classify(const CoxeterGraph& g, const Common& c) {
  const auto types = component_types(g);
  const bool sph = is_spherical(g);
  const bool aff = !g.empty() && is_affine(g);
  const std::string kind = sph ? "spherical" : aff ? "affine" : "neither";
  if (c.json) {
    std::cout << json{{"graph", to_string(g)}, {"components", types_json(types)}, {"kind", kind}}.dump(2) << '\n';
  } else {
    std::cout << to_string(g) << '\n' << "components: " << types_to_string(types) << '\n' << "kind: " << kind << '\n';
  }
  return 0;
}

int cmd_growth(const CoxeterGraph& g, const Common& c) {
  const GrowthSeries s = growth_series(g);
  if (c.json) {
    std::cout << json{{"graph", to_string(g)},
                      {"finite", s.finite},
                      {"growth_series", s.f.to_string()},
                      {"steinberg", s.steinberg_form.to_string()}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "f(t) = " << s.f.to_string() << '\n' << "1/f(1/t) = " << s.steinberg_form.to_string() << '\n';
  }
  return 0;
}

int cmd_rate(const CoxeterGraph& g, const Common& c) {
  const GrowthRate r = growth_rate(g, parse_eps(c.eps));
  if (c.json) {
    json j = rate_json(r);
    j["graph"] = to_string(g);
    std::cout << j.dump(2) << '\n';
  } else if (r.kind == GrowthRate::Kind::Unit) {
    std::cout << "tau = 1 (affine)\n";
  } else {
    std::cout << "tau = " << format_rate(r) << '\n'
              << std::setprecision(15) << "tau in [" << r.tau_lo().get_d() << ", " << r.tau_hi().get_d() << ")\n"
              << "R in (" << r.radius.lo.get_str() << ", " << r.radius.hi.get_str() << "]\n";
  }
  return 0;
}

void print_counts(const std::vector<Integer>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i];
  std::cout << '\n';
}

int cmd_coeffs(const CoxeterGraph& g, const Common& c) {
  const auto a = series_coeffs(g, c.max_k);
  if (c.json)
    std::cout << json{{"graph", to_string(g)}, {"coefficients", counts_json(a)}}.dump(2) << '\n';
  else
    print_counts(a);
  return 0;
}

int cmd_oracle(const CoxeterGraph& g, const Common& c, bool order) {
  if (order) {
    const auto n = group_order(g, c.cap);
    if (c.json)
      std::cout << json{{"graph", to_string(g)}, {"order", n}}.dump(2) << '\n';
    else
      std::cout << n << '\n';
    return 0;
  }
  const auto a = bfs_counts(g, c.max_k, c.cap);
  if (c.json)
    std::cout << json{{"graph", to_string(g)}, {"counts", counts_json(a)}}.dump(2) << '\n';
  else
    print_counts(a);
  return 0;
}

int cmd_extensions(const CoxeterGraph& g, const Common& c) {
  const auto ex = extensions(g);
  if (c.json) {
    json a = json::array();
    for (const auto& e : ex) a.push_back(to_string(e));
    std::cout << json{{"graph", to_string(g)}, {"count", ex.size()}, {"extensions", a}}.dump(2) << '\n';
  } else {
    std::cout << ex.size() << " extension" << (ex.size() == 1 ? "" : "s") << '\n';
    for (const auto& e : ex) std::cout << to_string(e) << '\n';
  }
  return 0;
}

int cmd_simplex(const CoxeterGraph& g, const Common& c) {
  const SimplexReport r = simplex_class(g);
  if (c.json) {
    json links = json::array();
    for (const auto& l : r.links)
      links.push_back({{"deleted", l.deleted_node + 1}, {"kind", to_string(l.kind)}, {"components", types_json(l.types)}});
    std::cout << json{{"graph", to_string(g)},
                      {"volume", to_string(r.volume)},
                      {"signature", {r.signature.positive, r.signature.negative, r.signature.zero}},
                      {"links", links}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << to_string(r.volume) << '\n'
              << "signature (" << r.signature.positive << "," << r.signature.negative << "," << r.signature.zero << ")\n";
    for (const auto& l : r.links)
      std::cout << "  without node " << l.deleted_node + 1 << ": " << to_string(l.kind) << " " << types_to_string(l.types)
                << '\n';
  }
  return 0;
}

int cmd_table3(int n, const Common& c) {
  const auto ps = ideal_link_partitions(n);
  if (c.json) {
    std::cout << json{{"n", n}, {"partitions", ps}}.dump(2) << '\n';
    return 0;
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::cout << (i ? "," : "") << '(';
    for (std::size_t j = 0; j < ps[i].size(); ++j) std::cout << (j ? "," : "") << ps[i][j];
    std::cout << ')';
  }
  std::cout << '\n';
  return 0;
}

int cmd_replay(const Common& c, const std::string& fault, const std::vector<std::string>& only, unsigned threads) {
  ReplayOptions opt;
  opt.eps = parse_eps(c.eps);
  opt.threads = threads;
  if (!fault.empty()) {
    if (fault != "exponents") throw UsageError("unknown fault '" + fault + "' (known: exponents)");
    opt.table.override_entry({Family::A, 2, 0}, {1, 3});
  }
  ReplayReport report;
  if (only.empty()) {
    report = replay(opt);
  } else {
    for (const auto& id : only) report.checks.push_back(replay_check(id, opt));
  }
  if (c.json) {
    json checks = json::array();
    for (const auto& ch : report.checks) {
      json j{{"id", ch.id},
             {"status", ch.passed ? "pass" : "fail"},
             {"computed", ch.computed},
             {"expected", ch.expected},
             {"provenance", ch.provenance},
             {"elapsed_ms", ch.elapsed_ms}};
      if (!ch.note.empty()) j["note"] = ch.note;
      checks.push_back(std::move(j));
    }
    std::cout << json{{"passed", report.passed()}, {"checks", checks}}.dump(2) << '\n';
  } else {
    for (const auto& ch : report.checks) {
      std::cout << (ch.passed ? "PASS " : "FAIL ") << ch.id << " (" << static_cast<long>(ch.elapsed_ms) << " ms)\n"
                << "  computed: " << ch.computed << '\n'
                << "  expected: " << ch.expected << " [" << ch.provenance << "]\n";
      if (!ch.note.empty()) std::cout << "  note: " << ch.note << '\n';
    }
    std::cout << (report.passed() ? "all checks passed" : "some checks failed") << '\n';
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth series and growth rates of Coxeter groups"};
  app.require_subcommand(1);
  Common common;
  Input in;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", common.json, "machine-readable output");
    cmd->add_option("--eps", common.eps, "width bound for root intervals")->capture_default_str();
  };

  auto* classify = app.add_subcommand("classify", "component types of a Coxeter graph");
  auto* growth = app.add_subcommand("growth", "growth series and Steinberg form");
  auto* rate = app.add_subcommand("rate", "certified growth rate");
  auto* coeffs = app.add_subcommand("coeffs", "growth series coefficients a_0..a_k");
  auto* oracle = app.add_subcommand("oracle", "brute-force word counts in the reflection representation");
  auto* ext = app.add_subcommand("extensions", "one-node extensions up to isomorphism");
  auto* simplex = app.add_subcommand("simplex", "volume class of a Coxeter simplex");
  auto* table3 = app.add_subcommand("table3", "ideal vertex link partitions");
  auto* replay_cmd = app.add_subcommand("replay", "re-verify every published computation");

  for (auto* cmd : {classify, growth, rate, coeffs, oracle, ext, simplex}) {
    add_input(cmd, in);
    add_common(cmd);
  }
  for (auto* cmd : {coeffs, oracle}) cmd->add_option("--max-k", common.max_k, "largest length")->check(CLI::Range(0, 100000));
  oracle->add_option("--cap", common.cap, "element budget")->capture_default_str();
  bool order = false;
  oracle->add_flag("--order", order, "size of the whole group");

  int n = 0;
  table3->add_option("-n", n, "dimension")->required();
  add_common(table3);

  add_common(replay_cmd);
  std::string fault;
  std::vector<std::string> only;
  unsigned threads = 0;
  replay_cmd->add_option("--inject-fault", fault, "corrupt an input table (exponents)");
  replay_cmd->add_option("--check", only, "run only the given check ids");
  replay_cmd->add_option("--threads", threads, "worker threads (default COXGROWTH_THREADS or all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*table3) return cmd_table3(n, common);
    if (*replay_cmd) return cmd_replay(common, fault, only, threads);
    parse_eps(common.eps);
    const CoxeterGraph g = load(in);
    if (*classify) return cmd_classify(g, common);
    if (*growth) return cmd_growth(g, common);
    if (*rate) return cmd_rate(g, common);
    if (*coeffs) return cmd_coeffs(g, common);
    if (*oracle) return cmd_oracle(g, common, order);
    if (*ext) return cmd_extensions(g, common);
    if (*simplex) return cmd_simplex(g, common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (complete through length " << e.depth_reached() << ")\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
