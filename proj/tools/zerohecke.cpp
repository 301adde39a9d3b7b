#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zerohecke/homology.hpp"
#include "zerohecke/module_io.hpp"
#include "zerohecke/qsym.hpp"
#include "zerohecke/twists.hpp"
#include "zerohecke/verify.hpp"

using namespace zerohecke;
using nlohmann::json;

namespace {

constexpr int kUsage = 3;

struct Options {
  std::string group = "A3";
  std::string field;  // empty: Q, or the field recorded in an input module
  std::uint64_t seed = 0;
  std::string output;  // empty: the verb's default format
  int max_n = 6;
  std::string suite;
  std::string file;  // empty: stdout
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class K>
struct FieldTag {
  using type = K;
};

/// Runs f(FieldTag<K>{}) for the field named by spec, with the Fp modulus in place.
template <class F>
auto with_field(const FieldSpec& spec, F&& f) {
  if (spec.rational) return f(FieldTag<Rational>{});
  ScopedModulus modulus(spec.prime);
  return f(FieldTag<Fp>{});
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const Options& o, const std::string& text) {
  if (o.file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.file);
  if (!out) throw UsageError("cannot write " + o.file);
  out << text;
}

std::string format(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
  std::string f = o.output.empty() ? fallback : o.output;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("output format '" + f + "' is not available here");
}

/// Field for a command reading a module file: --field if given, else the module's own.
FieldSpec module_field(const Options& o, const std::string& text) {
  if (!o.field.empty()) return parse_field(o.field);
  try {
    auto j = json::parse(text);
    if (j.contains("field")) return parse_field(j.at("field").get<std::string>());
  } catch (const json::exception&) {
  }
  return {};
}

template <class K>
json matrix_json(const Matrix<K>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json multiplicities_json(const Multiplicities& m) {
  json out = json::array();
  for (const auto& [I, k] : m) out.push_back({{"index", to_string(I)}, {"copies", k}});
  return out;
}

int exit_for(Verdict v) { return v == Verdict::yes ? 0 : v == Verdict::no ? 1 : 2; }

// verbs

int cmd_group(const Options& o) {
  auto g = make_group(o.group);
  if (format(o, "json", {"json", "text"}) == "json") {
    emit(o, group_to_json(*g));
    return 0;
  }
  std::ostringstream out;
  out << g->model().name() << ": order " << g->size() << ", rank " << g->rank() << ", w0 = " << g->label(g->longest())
      << " (length " << g->length(g->longest()) << ")\n";
  for (GenSet I : all_subsets(g->rank())) {
    auto [u, v] = g->descent_class_bounds(I);
    out << "  D" << to_string(I) << ": " << g->descent_class(I).size() << " elements, u = " << g->label(u)
        << ", v = " << g->label(v) << "\n";
  }
  emit(o, out.str());
  return 0;
}

int cmd_interval(const Options& o, const std::string& lo, const std::string& hi) {
  auto g = make_group(o.group);
  auto iv = interval(g, g->element(lo), g->element(hi));
  const auto f = format(o, "json", {"json", "dot", "text"});
  if (f != "text") {
    emit(o, export_hasse(iv, f));
    return 0;
  }
  std::ostringstream out;
  out << "[" << lo << ", " << hi << "]_L: " << iv.size() << " elements\n";
  for (ElementId w : iv.members()) out << "  " << g->label(w) << "  rank " << iv.rank(w) << "\n";
  emit(o, out.str());
  return 0;
}

struct ModuleArgs {
  std::string lo, hi, projective, upper, simple, module;
  bool info = false;
};

template <class K>
HModule<K> build_module(const Options& o, const ModuleArgs& a) {
  if (!a.module.empty()) return module_from_json<K>(read_input(a.module));
  auto g = make_group(o.group);
  if (!a.lo.empty() || !a.hi.empty()) {
    if (a.lo.empty() || a.hi.empty()) throw UsageError("--lo and --hi go together");
    return interval_module<K>(g, g->element(a.lo), g->element(a.hi));
  }
  if (!a.projective.empty()) {
    GenSet I = parse_genset(a.projective, g->rank());
    GenSet J = a.upper.empty() ? I : parse_genset(a.upper, g->rank());
    return projective_module<K>(g, I, J);
  }
  if (!a.simple.empty()) return simple_module<K>(g, parse_genset(a.simple, g->rank()));
  throw UsageError("give --module, --lo/--hi, --projective or --simple");
}

template <class K>
std::string module_info(const HModule<K>& m, std::uint64_t seed) {
  json j;
  j["dim"] = m.dim();
  j["relations"] = verify_relations(m).ok;
  j["top"] = to_string(top(m));
  auto soc = socle(m);
  j["socle"] = to_string(soc.multiplicities);
  j["radical_dim"] = radical(m).dim();
  j["composition_factors"] = to_string(composition_factors(m));
  auto ind = is_indecomposable(m, seed);
  j["indecomposable"] = to_string(ind.status);
  j["end_dim"] = ind.end_dim;
  json dims = json::array();
  for (const auto& s : decompose(m, seed)) dims.push_back(s.dim());
  j["summand_dims"] = dims;
  return j.dump(2) + "\n";
}

int cmd_module(const Options& o, const ModuleArgs& a) {
  FieldSpec field = a.module.empty() ? parse_field(o.field.empty() ? "Q" : o.field) : module_field(o, read_input(a.module));
  return with_field(field, [&](auto tag) {
    using K = typename decltype(tag)::type;
    auto m = build_module<K>(o, a);
    if (a.info) {
      emit(o, module_info(m, o.seed));
      return 0;
    }
    emit(o, format(o, "json", {"json", "dot"}) == "json" ? module_to_json(m) : module_digraph_dot(m));
    return 0;
  });
}

int cmd_twist(const Options& o, const std::string& tag_name, const std::string& path) {
  const Twist tag = parse_twist(tag_name);
  const std::string text = read_input(path);
  return with_field(module_field(o, text), [&](auto tag_k) {
    using K = typename decltype(tag_k)::type;
    auto m = apply_twist(tag, module_from_json<K>(text));
    emit(o, format(o, "json", {"json", "dot"}) == "json" ? module_to_json(m) : module_digraph_dot(m));
    return 0;
  });
}

int cmd_cover(const Options& o, const std::string& path, bool hull) {
  const std::string text = read_input(path);
  return with_field(module_field(o, text), [&](auto tag) {
    using K = typename decltype(tag)::type;
    auto m = module_from_json<K>(text);
    json j;
    Verdict status;
    if (hull) {
      auto h = injective_hull(m, o.seed);
      status = h.status;
      j["hull"] = multiplicities_json(h.hull);
      j["witness"] = h.mono ? matrix_json(*h.mono) : json(nullptr);
      j["certified"] = h.status == Verdict::yes && h.socle_contained;
    } else {
      auto c = projective_cover(m, o.seed);
      status = c.status;
      j["cover"] = multiplicities_json(c.cover);
      j["witness"] = c.epi ? matrix_json(*c.epi) : json(nullptr);
      j["certified"] = c.status == Verdict::yes && c.kernel_in_radical;
    }
    j["status"] = to_string(status);
    emit(o, j.dump(2) + "\n");
    return exit_for(status);
  });
}

int cmd_qsym_build(const Options& o, const std::string& family, const std::string& alpha_text) {
  auto alpha = parse_composition(alpha_text);
  if (alpha.size() > o.max_n) throw OverflowError("|alpha| = " + std::to_string(alpha.size()) + " exceeds --max-n");
  return with_field(parse_field(o.field.empty() ? "Q" : o.field), [&](auto tag) {
    using K = typename decltype(tag)::type;
    auto group = symmetric_group(alpha.size());
    HModule<K> m;
    if (family == "V") m = build_V<K>(group, alpha);
    else if (family == "X") m = build_X<K>(group, alpha);
    else if (family == "W") m = build_W<K>(group, alpha);
    else if (family == "Z") m = build_Z<K>(group, alpha);
    else throw UsageError("family must be V, X, W or Z");
    emit(o, format(o, "json", {"json", "dot"}) == "json" ? module_to_json(m) : module_digraph_dot(m));
    return 0;
  });
}

Report section5_report(const Options& o, int n) {
  Report report{"section5", "A" + std::to_string(n - 1), parse_field(o.field.empty() ? "Q" : o.field).name(), o.seed, {}};
  with_field(parse_field(o.field.empty() ? "Q" : o.field), [&](auto tag) {
    using K = typename decltype(tag)::type;
    for (const auto& alpha : compositions(n))
      for (const auto& line : verify_section5<K>(alpha, o.seed).lines)
        report.outcomes.push_back({"section5", line.name, alpha.str(), line.ok ? Status::pass : Status::fail, line.detail});
    return 0;
  });
  std::stable_sort(report.outcomes.begin(), report.outcomes.end(), [](const Outcome& a, const Outcome& b) {
    return std::tie(a.check, a.instance) < std::tie(b.check, b.instance);
  });
  return report;
}

int emit_report(const Options& o, const Report& r) {
  emit(o, format(o, "text", {"text", "json"}) == "json" ? r.json() : r.text());
  return r.exit_code();
}

int cmd_verify(const Options& o, bool corrupt, bool progress) {
  VerifyConfig cfg;
  cfg.group = o.group;
  cfg.field = parse_field(o.field.empty() ? "Q" : o.field);
  cfg.seed = o.seed;
  cfg.max_n = o.max_n;
  cfg.threads = threads_from_env();
  cfg.inject_corruption = corrupt;
  if (progress)
    cfg.progress = [](const Outcome& out) {
      std::cerr << to_string(out.status) << "  " << out.check << "  [" << out.instance << "]\n";
    };
  return emit_report(o, run_verify(o.suite.empty() ? "all" : o.suite, cfg));
}

struct ExportArgs {
  std::string kind, lo, hi, module, index;
};

int cmd_export(const Options& o, const ExportArgs& a) {
  if (a.kind == "interval-hasse") return cmd_interval(o, a.lo, a.hi);
  if (a.kind == "descent-classes") {
    emit(o, descent_classes_dot(*make_group(o.group)));
    return 0;
  }
  if (a.kind == "module-digraph") {
    ModuleArgs m;
    m.lo = a.lo;
    m.hi = a.hi;
    m.module = a.module;
    Options dot = o;
    dot.output = "dot";
    return cmd_module(dot, m);
  }
  if (a.kind == "twist-square") {
    auto g = make_group(o.group);
    emit(o, twist_square_dot(g, parse_genset(a.index, g->rank())));
    return 0;
  }
  throw UsageError("unknown export kind '" + a.kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zerohecke: 0-Hecke algebra modules on weak Bruhat intervals"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--group", o.group, "Coxeter group: A3, B4, D4, I2:7")->capture_default_str();
  app.add_option("--field", o.field, "Q or Fp:<p> (default Q)");
  app.add_option("--seed", o.seed, "seed for every randomized search")->capture_default_str();
  app.add_option("--output", o.output, "json, dot or text");
  app.add_option("--max-n", o.max_n, "largest composition size")->capture_default_str()->check(CLI::Range(1, 8));
  app.add_option("--suite", o.suite, "verification suite");
  app.add_option("--file", o.file, "write to this file instead of stdout");

  auto* group = app.add_subcommand("group", "dump the group table");

  std::string lo, hi;
  auto* iv = app.add_subcommand("interval", "a left weak interval and its Hasse diagram");
  iv->add_option("--lo", lo)->required();
  iv->add_option("--hi", hi)->required();

  ModuleArgs margs;
  auto* mod = app.add_subcommand("module", "build a module (or analyse one with --info)");
  mod->add_option("--lo", margs.lo, "interval module B(lo, hi)");
  mod->add_option("--hi", margs.hi);
  mod->add_option("--projective", margs.projective, "P_I, e.g. {1,3}");
  mod->add_option("--upper", margs.upper, "J for P_I^J");
  mod->add_option("--simple", margs.simple, "simple module S_I");
  mod->add_option("--module", margs.module, "module JSON file, - for stdin");
  mod->add_flag("--info", margs.info, "report top, socle, factors and summands");

  std::string tag, path;
  auto* tw = app.add_subcommand("twist", "apply phi, theta, chi, theta_hat or omega_hat");
  tw->add_option("--tag", tag)->required();
  tw->add_option("--module", path)->required();

  auto* cover = app.add_subcommand("cover", "projective cover certificate");
  cover->add_option("--module", path)->required();
  auto* hull = app.add_subcommand("hull", "injective hull certificate");
  hull->add_option("--module", path)->required();

  auto* qsym = app.add_subcommand("qsym", "modules of compositions");
  qsym->require_subcommand(1);
  std::string family, alpha;
  auto* qbuild = qsym->add_subcommand("build", "V, X, W or Z as module JSON");
  qbuild->add_option("--family", family)->required();
  qbuild->add_option("--alpha", alpha, "e.g. 2,2")->required();
  int qn = 0;
  auto* qverify = qsym->add_subcommand("verify", "all checks over every composition of n");
  qverify->add_option("--n", qn)->required()->check(CLI::Range(1, 8));

  bool corrupt = false, progress = false;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", o.suite, "suite name (default all)");
  ver->add_flag("--inject-corruption", corrupt, "test hook: add a corrupted module to the relations suite");
  ver->add_flag("--progress", progress, "stream results to stderr");

  ExportArgs eargs;
  auto* exp = app.add_subcommand("export", "DOT/JSON exports");
  exp->add_option("kind", eargs.kind, "interval-hasse, descent-classes, module-digraph, twist-square")->required();
  exp->add_option("--lo", eargs.lo);
  exp->add_option("--hi", eargs.hi);
  exp->add_option("--module", eargs.module);
  exp->add_option("--index", eargs.index, "I for twist-square")->default_val("{1}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (!o.field.empty()) parse_field(o.field);
    if (!o.suite.empty()) {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), o.suite) == names.end()) throw UsageError("unknown suite '" + o.suite + "'");
    }
    if (*group) return cmd_group(o);
    if (*iv) return cmd_interval(o, lo, hi);
    if (*mod) return cmd_module(o, margs);
    if (*tw) return cmd_twist(o, tag, path);
    if (*cover) return cmd_cover(o, path, false);
    if (*hull) return cmd_cover(o, path, true);
    if (*qbuild) return cmd_qsym_build(o, family, alpha);
    if (*qverify) {
      if (qn > o.max_n) throw OverflowError("n = " + std::to_string(qn) + " exceeds --max-n");
      return emit_report(o, section5_report(o, qn));
    }
    if (*ver) return cmd_verify(o, corrupt, progress);
    if (*exp) return cmd_export(o, eargs);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
