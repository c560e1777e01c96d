#include "we/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "we/serialize.hpp"
#include "we/suites.hpp"

namespace we {

namespace {

struct Loaded {
  System system;
  std::optional<DiscreteSystem> discrete;
};

Loaded load_system(const std::string& what) {
  if (what == "translation") return {build_translation(), std::nullopt};
  if (what == "linear") return {build_linear_example(), std::nullopt};
  std::string text = read_file(what);
  switch (document_kind(text)) {
    case DocumentKind::gluing: return {build_glued(gluing_from_json(text)), std::nullopt};
    case DocumentKind::system: return {build_translation(), system_from_json(text)};
    default: throw InvalidArgument(what + " is neither a gluing spec nor a discrete system");
  }
}

SetFamily load_family(const std::string& what, const System& sys) {
  if (what.empty())
    return std::holds_alternative<LinearMap>(sys) ? axes_family()
                                                  : standard_family(chart_count(sys));
  if (what == "standard") {
    if (std::holds_alternative<LinearMap>(sys))
      throw InvalidArgument("the standard boxes contain the fixed point of the linear map");
    return standard_family(chart_count(sys));
  }
  if (what == "axes") return axes_family();
  SetFamily f = family_from_json(read_file(what));
  validate_family(sys, f);
  return f;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_file(path, text);
}

struct BuildArgs {
  int L = 0;
  double alpha = 0;
  std::int64_t k_max = 4096;
  std::int64_t layout_detail = 16;
  std::string out;
};

struct CountArgs {
  std::string system;
  std::string family;
  std::vector<std::int64_t> n;
  std::string strategy = "exact";
  std::uint64_t seed = 0;
  std::size_t random_fill = 0;
  std::int64_t k1_cap = 0;
  std::string out;
};

struct EstimateArgs {
  std::string counts;
  std::string method = "regress";
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  std::string out;
};

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 42;
  std::size_t systems = 0;
};

struct SingularArgs {
  std::string system;
  std::string family;
  std::int64_t gap = 1;
  std::int64_t horizon = 0;
  std::string out;
};

int do_build(const BuildArgs& a, std::ostream& out) {
  GluingSpec spec = build_gluing(a.L, a.alpha, a.k_max, a.layout_detail);
  emit(a.out, to_json(spec), out);
  return 0;
}

BigCount count_one(const Loaded& sys, const SetFamily& family, Strategy st, std::int64_t n,
                   std::int64_t n_max, const CountArgs& a) {
  if (sys.discrete) {
    if (st != Strategy::exact) throw InvalidArgument("discrete systems support only exact counts");
    return count_exact(*sys.discrete, n);
  }
  const auto* glued = std::get_if<GluedMap>(&sys.system);
  SamplingPlan plan;
  plan.random_fill = a.random_fill;
  plan.k1_cap = a.k1_cap;
  switch (st) {
    case Strategy::exact:
      if (std::holds_alternative<TranslationMap>(sys.system))
        return count_exact(translation_oracle(family), n);
      if (std::holds_alternative<LinearMap>(sys.system))
        return count_exact(linear_oracle(family, n_max), n);
      throw InvalidArgument("exact counts need the translation, the linear map or a discrete system");
    case Strategy::sample: return count_sample(sys.system, family, n, plan, a.seed);
    case Strategy::plateau:
    case Strategy::bound_lower:
    case Strategy::bound_upper:
      if (!glued) throw InvalidArgument(to_string(st) + " needs a glued system");
      if (st == Strategy::plateau) return count_plateau(glued->spec, family, n);
      if (!is_standard_family(family, glued->spec.L))
        throw InvalidArgument(to_string(st) + " needs the standard family");
      return st == Strategy::bound_lower ? count_lower_bound(glued->spec, n)
                                         : count_upper_bound(glued->spec, n);
  }
  return 0;
}

int do_count(const CountArgs& a, std::ostream& out) {
  if (a.n.empty()) throw InvalidArgument("--n needs at least one value");
  for (std::size_t i = 1; i < a.n.size(); ++i)
    if (a.n[i] <= a.n[i - 1]) throw InvalidArgument("--n must be strictly increasing");
  const Strategy st = strategy_from_string(a.strategy);
  Loaded sys = load_system(a.system);
  SetFamily family = sys.discrete ? SetFamily{} : load_family(a.family, sys.system);
  GrowthSeries series;
  for (std::int64_t n : a.n) series.append({n, count_one(sys, family, st, n, a.n.back(), a), st});
  emit(a.out, to_csv(series), out);
  return 0;
}

int do_estimate(const EstimateArgs& a, std::ostream& out) {
  GrowthSeries s = series_from_csv(read_file(a.counts));
  ExponentEstimate e = fit_exponent(s, fit_method_from_string(a.method), a.n_min, a.n_max);
  emit(a.out, to_json(e), out);
  return 0;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  SuiteReport r = run_suite(a.suite, a.seed, a.systems);
  out << "suite " << r.suite << ": " << r.systems << " systems, " << r.checks << " checks, "
      << r.failures.size() << " failures\n";
  if (r.ok()) return 0;
  for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 5); ++i) {
    const auto& f = r.failures[i];
    out << "FAIL " << f.check << " n=" << f.n << ": " << f.detail << "\n";
  }
  out << "counterexample:\n" << to_json(r.failures.front().system);
  return 1;
}

int do_singular(const SingularArgs& a, std::ostream& out) {
  Loaded sys = load_system(a.system);
  SingularityVerdict v;
  if (sys.discrete) {
    v = check_mutual_singularity(*sys.discrete, a.gap, a.horizon);
  } else {
    v = check_mutual_singularity(sys.system, load_family(a.family, sys.system), a.gap, a.horizon);
  }
  emit(a.out, to_json(v), out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coding-word counts and polynomial entropy estimates", "wentropy"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Write the staircase layout of a glued system");
  b->add_option("--L", build.L, "Number of charts")->required();
  b->add_option("--alpha", build.alpha, "Target exponent")->required();
  b->add_option("--k-max", build.k_max, "Deepest level-1 plateau")->capture_default_str();
  b->add_option("--layout-detail", build.layout_detail, "Serialize nested plateaus up to this k_1")
      ->capture_default_str();
  b->add_option("--out", build.out, "Output path (default stdout)");

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count coding words over a grid of n");
  c->add_option("--system", count.system, "translation, linear, or a JSON path")->required();
  c->add_option("--family", count.family, "standard, axes, or a JSON path");
  c->add_option("--n", count.n, "Comma-separated window lengths")->required()->delimiter(',');
  c->add_option("--strategy", count.strategy)
      ->check(CLI::IsMember({"exact", "plateau", "sample", "bound-lower", "bound-upper"}))
      ->capture_default_str();
  c->add_option("--seed", count.seed)->capture_default_str();
  c->add_option("--random-fill", count.random_fill, "Random extra seeds per n")->capture_default_str();
  c->add_option("--k1-cap", count.k1_cap, "Deepest k_1 seeded (0 means n)")->capture_default_str();
  c->add_option("--out", count.out, "CSV path (default stdout)");

  EstimateArgs est;
  auto* e = app.add_subcommand("estimate", "Fit a growth exponent to a counts CSV");
  e->add_option("--counts", est.counts)->required();
  e->add_option("--method", est.method)->check(CLI::IsMember({"regress", "ratio"}))->capture_default_str();
  e->add_option("--n-min", est.n_min)->capture_default_str();
  e->add_option("--n-max", est.n_max)->capture_default_str();
  e->add_option("--out", est.out, "JSON path (default stdout)");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run an oracle inequality suite");
  v->add_option("--suite", ver.suite)->required()->check(CLI::IsMember(suite_names()));
  v->add_option("--seed", ver.seed)->capture_default_str();
  v->add_option("--systems", ver.systems, "Number of systems (0 = suite default)")->capture_default_str();

  SingularArgs sing;
  auto* s = app.add_subcommand("singular", "Search for a mutually singular orbit");
  s->add_option("--system", sing.system, "translation, linear, or a JSON path")->required();
  s->add_option("--family", sing.family, "standard, axes, or a JSON path");
  s->add_option("--gap", sing.gap)->required();
  s->add_option("--horizon", sing.horizon)->required();
  s->add_option("--out", sing.out, "JSON path (default stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& pe) {
    int code = app.exit(pe, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (b->parsed()) return do_build(build, out);
    if (c->parsed()) return do_count(count, out);
    if (e->parsed()) return do_estimate(est, out);
    if (v->parsed()) return do_verify(ver, out);
    if (s->parsed()) return do_singular(sing, out);
  } catch (const LayoutExceeded& x) {
    err << "error: " << x.what() << "\n";
    return 3;
  } catch (const Error& x) {
    err << "error: " << x.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace we
