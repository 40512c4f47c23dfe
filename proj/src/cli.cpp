#include "fracchern/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <string>

#include "fracchern/errors.hpp"
#include "fracchern/parse.hpp"
#include "fracchern/qtheta.hpp"
#include "fracchern/symroots.hpp"
#include "fracchern/towers.hpp"
#include "fracchern/verify.hpp"

namespace fracchern {

namespace {

constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitMismatch = 3;

int default_cap() {
  const char* env = std::getenv("FRACCHERN_DEGREE_CAP");
  if (!env || !*env) return 12;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("FRACCHERN_DEGREE_CAP is not an integer: '") + env + "'");
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string yes_no(const std::optional<bool>& b) { return b ? yes_no(*b) : "unknown"; }

struct Options {
  int n = 0, l = 1, k = 0;
  std::optional<int> cap;
  std::string basis = "elementary";
  bool oracle = false;
  std::string map, space, expr, level, descriptor = "-", kind, method = "theta_product", q_order = "4";
  bool normalize = false, descend = false;
  int max_n = 8;
};

int cap_of(const Options& o) { return o.cap ? *o.cap : default_cap(); }

int frac_chern(const Options& o, std::ostream& out) {
  RootModel model(o.n, o.l, std::max(cap_of(o), 2 * o.n));
  auto closed = fractional_chern_closed(model, o.k);
  auto show = [&](const GradedPolynomial& p) {
    return render(o.basis == "roots" ? model.elementary_to_roots()(p) : p);
  };
  if (!o.oracle) {
    out << show(closed) << "\n";
    return 0;
  }
  auto brute = fractional_chern_brute(model, o.k);
  bool match = closed == brute;
  out << "closed: " << show(closed) << "\n";
  out << "brute:  " << show(brute) << "\n";
  out << (match ? "MATCH" : "MISMATCH") << "\n";
  return match ? 0 : kExitMismatch;
}

int change_triv(const Options& o, std::ostream& out) {
  RootModel model(o.n, o.l, std::max(cap_of(o), 2 * o.n));
  out << render(change_trivialization(model, o.k)) << "\n";
  return 0;
}

int universal(const Options& o, std::ostream& out) {
  TowerRegistry reg(o.n, o.l, cap_of(o));
  GradedPolynomial p(reg.ring(Space::BU1));
  if (o.map == "phi") {
    p = phi_pullback(reg, o.k);
  } else if (o.map == "phi2") {
    p = phi2_pullback(reg, o.k);
  } else if (o.map == "xi2") {
    if (o.k != 1 && o.k != 2) throw PreconditionError("xi2 is tabulated on c1Q (k = 1) and z2Q (k = 2)");
    p = xi2_pullback(reg, o.k == 1 ? Xi2Class::c1Q : Xi2Class::z2Q);
  } else if (o.map == "lphi2") {
    if (o.k != 2) throw PreconditionError("lphi2 is tabulated on z2Q only (k = 2)");
    p = lphi2_z2(reg);
  } else {
    throw ParseError("unknown map '" + o.map + "' (expected phi, phi2, xi2 or lphi2)");
  }
  out << render(p) << "\n";
  return 0;
}

int transgress(const Options& o, std::ostream& out) {
  auto table = builtin_table(parse_space(o.space), o.n, o.l, cap_of(o));
  out << render(free_suspend(table, parse_polynomial(table.source(), o.expr))) << "\n";
  return 0;
}

int obstruction_cmd(const Options& o, std::ostream& out) {
  auto level = parse_level(o.level);
  auto d = load_descriptor(o.descriptor);
  auto ob = obstruction(level, d);
  out << "level: " << to_string(level) << "\n";
  out << "upstairs: " << render(ob.upstairs) << "\n";
  out << "downstairs: " << render(ob.downstairs) << "\n";
  out << "vanishes: " << yes_no(ob.vanishes) << "\n";
  out << "compatible: " << yes_no(ob.compatible) << "\n";
  bool all = true;
  if (ob.vanishes) {
    for (const auto& c : lift_consequences(level, d)) {
      out << "consequence: " << c.identity << ": " << (c.passed ? "PASS" : "FAIL") << "\n";
      all = all && c.passed;
    }
  }
  if (level == Level::loopU || level == Level::loopSU) out << "converse: undecidable at ring level\n";
  if (ob.compatible == false) all = false;
  return all ? 0 : kExitMismatch;
}

int count_cmd(const Options& o, std::ostream& out) {
  auto d = load_descriptor(o.descriptor);
  out << count_structures(parse_level(o.level), d.hM, &d.hLM).str() << "\n";
  return 0;
}

int gch_cmd(const Options& o, std::ostream& out) {
  auto kind = parse_witten_kind(o.kind);
  auto order = QExponent::parse(o.q_order);
  RootModel model(o.n, o.l, cap_of(o));
  bool both = o.method == "both";
  GchMethod method;
  if (o.method == "theta_product" || both) method = GchMethod::theta_product;
  else if (o.method == "lambda_tensor") method = GchMethod::lambda_tensor;
  else throw ParseError("unknown method '" + o.method + "' (expected theta_product, lambda_tensor or both)");

  auto series = gch_witten(model, kind, order, method);
  bool match = true;
  if (both) match = series == gch_witten(model, kind, order, GchMethod::lambda_tensor);
  if (o.normalize) series = normalize_gch(series, kind, o.n);
  if (o.descend) series = descend_gch(series, model);
  out << series.str();
  if (both) out << "methods: " << (match ? "MATCH" : "MISMATCH") << "\n";
  return match ? 0 : kExitMismatch;
}

int verify_cmd(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.max_n = o.max_n;
  vo.tower_max_n = std::min(6, o.max_n);
  vo.gch_max_n = std::min(3, o.max_n);
  vo.q_order = QExponent::parse(o.q_order);
  bool all = true;
  for (const auto& r : run_verification(vo)) {
    out << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << " (" << r.detail
        << ")\n";
    all = all && r.passed;
  }
  return all ? 0 : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fractional Chern classes, towers and theta series"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Options o;

  auto add_nl = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "rank")->required()->check(CLI::PositiveNumber);
    sub->add_option("--l", o.l, "order of the gerbe, dividing n")->check(CLI::PositiveNumber);
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--degree-cap", o.cap, "truncation degree (default FRACCHERN_DEGREE_CAP or 12)");
  };

  auto* fc = app.add_subcommand("frac-chern", "closed form of c_k^{l,a}");
  add_nl(fc);
  add_cap(fc);
  fc->add_option("--k", o.k)->required();
  fc->add_option("--basis", o.basis)->check(CLI::IsMember({"roots", "elementary"}));
  fc->add_flag("--oracle", o.oracle, "also expand the shifted roots and compare");

  auto* ct = app.add_subcommand("change-triv", "effect of a -> a + pi*(x)");
  add_nl(ct);
  add_cap(ct);
  ct->add_option("--k", o.k)->required();

  auto* un = app.add_subcommand("universal", "pullback of a universal class along a tower map");
  add_nl(un);
  add_cap(un);
  un->add_option("--map", o.map)->required();
  un->add_option("--k", o.k)->required();

  auto* tr = app.add_subcommand("transgress", "free suspension of a class");
  tr->add_option("--space", o.space)->required();
  tr->add_option("--expr", o.expr)->required();
  tr->add_option("--n", o.n, "rank")->default_val(2)->check(CLI::PositiveNumber);
  tr->add_option("--l", o.l)->check(CLI::PositiveNumber);
  add_cap(tr);

  auto* ob = app.add_subcommand("obstruction", "obstruction pair of a descriptor");
  ob->add_option("--level", o.level)->required();
  ob->add_option("--descriptor", o.descriptor, "JSON file, or - for stdin");

  auto* co = app.add_subcommand("count", "group parametrizing the structures");
  co->add_option("--level", o.level)->required();
  co->add_option("--descriptor", o.descriptor, "JSON file, or - for stdin");

  auto* gc = app.add_subcommand("gch", "graded Chern character of a Witten gerbe module");
  gc->add_option("--kind", o.kind)->required();
  add_nl(gc);
  add_cap(gc);
  gc->add_option("--q-order", o.q_order, "largest q exponent kept, a multiple of 1/2");
  gc->add_flag("--normalize", o.normalize);
  gc->add_flag("--descend", o.descend);
  gc->add_option("--method", o.method);

  auto* ve = app.add_subcommand("verify", "run the acceptance sweeps");
  ve->add_option("--max-n", o.max_n)->check(CLI::PositiveNumber);
  ve->add_option("--q-order", o.q_order);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*fc) return frac_chern(o, out);
    if (*ct) return change_triv(o, out);
    if (*un) return universal(o, out);
    if (*tr) return transgress(o, out);
    if (*ob) return obstruction_cmd(o, out);
    if (*co) return count_cmd(o, out);
    if (*gc) return gch_cmd(o, out);
    if (*ve) return verify_cmd(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InternalError& e) {
    err << "mismatch: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitParse;
}

}  // namespace fracchern
