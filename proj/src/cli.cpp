#include "gfroots/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "CLI11.hpp"
#include "gfroots/bench.hpp"
#include "gfroots/error.hpp"
#include "gfroots/field.hpp"
#include "gfroots/polytext.hpp"
#include "gfroots/random.hpp"
#include "gfroots/roots.hpp"

namespace gfroots {

namespace {

struct FieldOptions {
  unsigned m = 8;
  std::string prim_poly;

  Field build() const {
    FieldSpec spec{m, 0};
    if (m < kMinDegree || m > kMaxDegree) {
      throw Error(ErrorKind::BadSpec,
                  "--m must be in [2, 16], got " + std::to_string(m));
    }
    spec.prim_poly = prim_poly.empty() ? default_prim_poly(m)
                                       : parse_hex_u32(prim_poly);
    return Field(spec);
  }
};

void add_field_options(CLI::App* cmd, FieldOptions& f) {
  cmd->add_option("--m", f.m, "Field degree, GF(2^m)")->capture_default_str();
  cmd->add_option("--prim-poly", f.prim_poly,
                  "Primitive polynomial as a hex mask (default per m)");
}

enum class FinderChoice { Chien, Fast, Oracle };

int cmd_find_roots(const FieldOptions& fo, const std::string& poly_text,
                   FinderChoice method, std::ostream& out) {
  const Field field = fo.build();
  const Poly p = parse_poly_text(poly_text, field);
  RootSet roots;
  if (p.is_zero()) {
    throw Error(ErrorKind::DegenerateInput,
                "zero polynomial: every element is a root");
  }
  if (p.degree() > 0) {
    switch (method) {
      case FinderChoice::Chien: roots = chien_search(p, field); break;
      case FinderChoice::Fast: roots = fast_find_roots(p, field); break;
      case FinderChoice::Oracle: roots = brute_force_roots(p, field); break;
    }
  }
  out << "# roots: " << roots.size() << '\n';
  for (Element r : roots) {
    out << format_hex(r) << ' ' << format_log(r, field) << '\n';
  }
  return kExitOk;
}

struct GenOptions {
  std::size_t degree = 0;
  std::size_t roots = 0;
  std::uint64_t seed = 1;
  std::size_t max_degree = 1024;
};

int cmd_gen(const FieldOptions& fo, const GenOptions& g, std::ostream& out) {
  const Field field = fo.build();
  if (g.degree < 1 || g.degree > g.max_degree) {
    throw Error(ErrorKind::BadSpec, "--degree must be in [1, " +
                                        std::to_string(g.max_degree) + "]");
  }
  if (g.roots > g.degree) {
    throw Error(ErrorKind::BadSpec, "--roots cannot exceed --degree");
  }
  PolyRng rng(g.seed);
  std::vector<Element> planted;
  for (std::size_t i = 0; i < g.roots; ++i) planted.push_back(rng.any(field));
  const Poly linear = poly_from_roots(planted, field);
  const Poly cofactor = rng.poly(field, g.degree - g.roots);
  out << format_poly_text(multiply(linear, cofactor, field)) << '\n';
  if (!planted.empty()) {
    std::sort(planted.begin(), planted.end());
    planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
    out << "# planted roots:";
    for (Element r : planted) out << ' ' << format_hex(r);
    out << '\n';
  }
  return kExitOk;
}

int cmd_count_ops(const FieldOptions& fo, std::size_t degree, Method method,
                  std::uint64_t seed, std::ostream& out) {
  const Field field = fo.build();
  if (degree < 1) throw Error(ErrorKind::BadSpec, "--degree must be >= 1");
  PolyRng rng(seed);
  const Poly p = rng.poly(field, degree);
  const OpCounts measured = count_ops(method, p, field);
  const OpCounts predicted = predict_ops(method, degree, field.m());

  out << "method " << to_string(method) << " m " << field.m() << " degree "
      << degree << '\n';
  bool all = true;
  auto line = [&](const char* name, std::uint64_t got, std::uint64_t want) {
    const bool ok = got == want;
    all = all && ok;
    out << name << ' ' << got << " / " << want << ' '
        << (ok ? "MATCH" : "MISMATCH") << '\n';
  };
  line("adds", measured.adds, predicted.adds);
  line("muls", measured.muls, predicted.muls);
  line("exps", measured.exps, predicted.exps);
  out << (all ? "MATCH" : "MISMATCH") << '\n';
  return all ? kExitOk : kExitMismatch;
}

int cmd_bench(const BenchConfig& config, bool machine, std::ostream& out) {
  const auto rows = run_benchmark(config);
  if (machine) {
    write_machine_records(out, rows);
  } else {
    out << "GF(2^" << config.m << "), " << config.trials
        << " trials per degree, " << config.passes << " passes, seed "
        << config.seed << '\n';
    write_text_table(out, rows);
  }
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadSpec:
    case ErrorKind::Parse:
      return kExitUsage;
    default:
      return kExitDomain;
  }
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Root finding for polynomials over GF(2^m)", "gfroots"};
  app.require_subcommand(1);

  FieldOptions field_opts;

  std::string poly_text;
  FinderChoice finder = FinderChoice::Fast;
  const std::map<std::string, FinderChoice> finder_names{
      {"chien", FinderChoice::Chien},
      {"fast", FinderChoice::Fast},
      {"oracle", FinderChoice::Oracle}};
  auto* find = app.add_subcommand("find-roots", "Print all distinct roots");
  add_field_options(find, field_opts);
  find->add_option("--poly", poly_text,
                   "Comma-separated hex coefficients, f_0 first")
      ->required();
  find->add_option("--method", finder, "chien, fast or oracle")
      ->transform(CLI::CheckedTransformer(finder_names, CLI::ignore_case));

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate a polynomial with planted roots");
  add_field_options(gen, field_opts);
  gen->add_option("--degree", gen_opts.degree, "Exact degree")->required();
  gen->add_option("--roots", gen_opts.roots, "Number of planted roots")
      ->capture_default_str();
  gen->add_option("--seed", gen_opts.seed, "RNG seed")->capture_default_str();
  gen->add_option("--max-degree", gen_opts.max_degree, "Degree cap")
      ->capture_default_str();

  std::size_t count_degree = 0;
  std::uint64_t count_seed = 1;
  Method count_method = Method::Fast;
  const std::map<std::string, Method> method_names{{"chien", Method::Chien},
                                                   {"fast", Method::Fast}};
  auto* count = app.add_subcommand(
      "count-ops", "Compare instrumented operation counts with the closed form");
  add_field_options(count, field_opts);
  count->add_option("--degree", count_degree, "Polynomial degree")->required();
  count->add_option("--method", count_method, "chien or fast")
      ->transform(CLI::CheckedTransformer(method_names, CLI::ignore_case));
  count->add_option("--seed", count_seed, "RNG seed")->capture_default_str();

  BenchConfig bench_cfg;
  std::string format = "text";
  auto* bench = app.add_subcommand("bench", "Time Chien search against the fast method");
  bench->add_option("--m", bench_cfg.m, "Field degree")->capture_default_str();
  bench->add_option("--degrees", bench_cfg.degrees, "Comma-separated degrees")
      ->delimiter(',');
  bench->add_option("--trials", bench_cfg.trials, "Polynomials per degree")
      ->capture_default_str();
  bench->add_option("--passes", bench_cfg.passes,
                    "Timed passes per degree; the fastest pass per chunk is kept")
      ->capture_default_str();
  bench->add_option("--seed", bench_cfg.seed, "RNG seed")->capture_default_str();
  bench->add_option("--format", format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  bench->add_option("--c-add", bench_cfg.weights.add, "Cost weight of an addition");
  bench->add_option("--c-mul", bench_cfg.weights.mul, "Cost weight of a multiplication");
  bench->add_option("--c-exp", bench_cfg.weights.exp, "Cost weight of an exponentiation");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*find) return cmd_find_roots(field_opts, poly_text, finder, out);
    if (*gen) return cmd_gen(field_opts, gen_opts, out);
    if (*count) {
      return cmd_count_ops(field_opts, count_degree, count_method, count_seed,
                           out);
    }
    if (*bench) return cmd_bench(bench_cfg, format == "machine", out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace gfroots
