#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "ramify/cover_io.hpp"
#include "ramify/errors.hpp"
#include "ramify/fiber_io.hpp"
#include "ramify/gen_io.hpp"
#include "ramify/numono_io.hpp"

namespace ramify::cli
{

namespace
{

struct Options
{
  std::string input = "-";
  bool json = false;
  std::string dot;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 0;
  std::string degree = "1..4";
  std::string genus = "0";
  std::string branch_points = "0..4";
  bool morse = false;
  bool dedup = false;
  std::size_t samples = 0;
  std::string poly;
  double tol = 1e-10;
  std::string shear;
  std::string cover_out;
  double base_angle = 0.0;
};

class Context
{
public:
  Context(std::istream &in, std::ostream &out, std::ostream &err) : in(in), out(out), err(err) {}

  std::string read_input(std::string const &path)
  {
    std::stringstream buffer;
    if (path == "-") {
      buffer << in.rdbuf();
    } else {
      std::ifstream file(path);
      if (!file)
        throw std::ios_base::failure("cannot open '" + path + "'");
      buffer << file.rdbuf();
    }
    return buffer.str();
  }

  void write_file(std::string const &path, std::string const &text)
  {
    if (path == "-") {
      out << text;
      return;
    }
    std::ofstream file(path);
    if (!file)
      throw std::ios_base::failure("cannot write '" + path + "'");
    file << text;
  }

  std::istream &in;
  std::ostream &out;
  std::ostream &err;
};

void line(std::ostream &os, std::string const &key, std::string const &value)
{
  os << std::left << std::setw(26) << key << value << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_cover_report(std::ostream &os, CoverReport const &r)
{
  line(os, "degree", std::to_string(r.degree));
  line(os, "base genus", std::to_string(r.base_genus));
  line(os, "branch points", std::to_string(r.branch_point_count));
  line(os, "total space genus", std::to_string(r.total_space_genus));
  line(os, "monodromy order", std::to_string(r.monodromy_order));
  line(os, "Morse", yes_no(r.is_morse));
  line(os, "Galois", yes_no(r.is_galois));
}

std::string sd_summary(SdOutcome const &sd)
{
  if (auto const *cert = std::get_if<SdCertificate>(&sd))
    return "certified (order " + std::to_string(cert->group_order) + ")";
  auto const &refusal = std::get<SdRefusal>(sd);
  return std::string("refused: ") + refusal.message;
}

int cmd_validate(Context &ctx, Options const &o)
{
  BranchedCover c = parse_cover(ctx.read_input(o.input));
  ValidationResult v = validate(c);
  if (o.json) {
    if (v.report)
      ctx.out << to_report_text(*v.report) << '\n';
    else
      ctx.out << "{\"valid\": false}\n";
  } else if (v.report) {
    line(ctx.out, "valid", "yes");
    print_cover_report(ctx.out, *v.report);
  } else {
    line(ctx.out, "valid", "no");
  }
  for (auto const &violation : v.violations)
    ctx.err << "violation: " << to_string(violation.kind) << ": " << violation.message << '\n';
  return v.ok() ? exit_ok : exit_parse;
}

BranchedCover load_valid_cover(Context &ctx, Options const &o)
{
  BranchedCover c = parse_cover(ctx.read_input(o.input));
  require_valid(c);
  return c;
}

int cmd_analyze(Context &ctx, Options const &o)
{
  BranchedCover c = load_valid_cover(ctx, o);
  CoverReport report = *validate(c).report;
  FiberReport fiber = analyze_fiber(c);
  if (!o.dot.empty())
    ctx.write_file(o.dot, to_dot(fiber.dual_graph));
  if (o.json) {
    ctx.out << to_analysis_text(report, fiber) << '\n';
    return exit_ok;
  }
  print_cover_report(ctx.out, report);
  line(ctx.out, "genuinely ramified", yes_no(fiber.ramification.genuinely_ramified));
  line(ctx.out, "orbitals", std::to_string(fiber.decomposition.orbitals.size()));
  line(ctx.out, "transitivity", to_string(fiber.transitivity));
  line(ctx.out, "fiber product connected", yes_no(fiber.fiber_connectivity.connected));
  line(ctx.out, "off-diagonal connected",
       fiber.offdiag.vacuous ? "vacuous" : yes_no(fiber.offdiag.connected));
  line(ctx.out, "closure order", std::to_string(fiber.galois_closure_order));
  line(ctx.out, "S_d certificate", sd_summary(fiber.sd));
  return exit_ok;
}

int cmd_fiber_graph(Context &ctx, Options const &o)
{
  BranchedCover c = load_valid_cover(ctx, o);
  ctx.write_file(o.dot.empty() ? "-" : o.dot, to_dot(dual_graph(c)));
  return exit_ok;
}

int cmd_derived(Context &ctx, Options const &o)
{
  BranchedCover c = load_valid_cover(ctx, o);
  DerivedCover d = derived_cover_q1(c);
  if (o.json) {
    ctx.out << to_derived_cover_text(d) << '\n';
    return exit_ok;
  }
  line(ctx.out, "degree", std::to_string(d.degree));
  line(ctx.out, "base space genus", std::to_string(d.base_space_genus));
  line(ctx.out, "branch points", std::to_string(d.branch_point_count()));
  line(ctx.out, "irreducible", yes_no(d.irreducible));
  line(ctx.out, "Morse", yes_no(d.morse));
  line(ctx.out, "genuinely ramified", yes_no(d.genuinely_ramified));
  line(ctx.out, "total space genus",
       d.total_space_genus ? std::to_string(*d.total_space_genus) : "n/a (reducible)");
  return exit_ok;
}

int cmd_certify_sd(Context &ctx, Options const &o)
{
  BranchedCover c = load_valid_cover(ctx, o);
  SdOutcome sd = certify_sd(c);
  if (o.json)
    ctx.out << to_sd_outcome_text(sd) << '\n';
  else
    line(ctx.out, "S_d certificate", sd_summary(sd));
  return std::holds_alternative<SdCertificate>(sd) ? exit_ok : exit_refusal;
}

CorpusSpec corpus_spec(Options const &o)
{
  CorpusSpec spec;
  spec.degree = parse_range(o.degree);
  spec.genus = parse_range(o.genus);
  spec.branch_points = parse_range(o.branch_points);
  spec.morse_only = o.morse;
  spec.dedup = o.dedup;
  spec.samples = o.samples;
  spec.seed = o.seed;
  spec.check();
  return spec;
}

int cmd_gen(Context &ctx, Options const &o)
{
  CorpusSpec spec = corpus_spec(o);
  if (spec.random_mode()) {
    auto covers = random_covers(spec);
    ctx.out << (covers.size() == 1 ? to_cover_text_pretty(covers[0]) + "\n" : to_cover_lines(covers));
  } else {
    enumerate_covers(spec, [&](BranchedCover const &c) { ctx.out << to_cover_text(c) << '\n'; });
  }
  return exit_ok;
}

int cmd_enum_verify(Context &ctx, Options const &o)
{
  CorpusSpec spec = corpus_spec(o);
  auto start = std::chrono::steady_clock::now();
  VerificationReport report = verify_corpus(spec, o.jobs);
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  spdlog::info("verified {} covers in {:.3f} s", report.covers, seconds);
  if (o.json) {
    ctx.out << to_verification_text(report) << '\n';
  } else {
    line(ctx.out, "covers", std::to_string(report.covers));
    for (std::size_t k = 0; k < check_count; ++k) {
      auto const &c = report.counts[k];
      line(ctx.out, to_string(static_cast<Check>(k)),
           std::to_string(c.passed) + "/" + std::to_string(c.checked) + " passed, " +
               std::to_string(c.vacuous) + " vacuous, " + std::to_string(c.skipped) + " skipped");
    }
    line(ctx.out, "violations", std::to_string(report.violations.size()));
    for (auto const &v : report.violations)
      ctx.out << to_string(v.check) << ": " << v.message << "\n  " << to_cover_text(v.cover)
              << '\n';
    ctx.err << "runtime: " << seconds << " s\n";
  }
  return report.ok() ? exit_ok : exit_violation;
}

int cmd_curve(Context &ctx, Options const &o)
{
  std::string text = o.poly.empty() ? ctx.read_input(o.input) : o.poly;
  PlanePolynomial p = parse_poly(text);
  if (!o.shear.empty())
    p = p.sheared(parse_rational(o.shear));
  TrackingConfig cfg;
  cfg.tolerance = o.tol;
  cfg.base_angle = o.base_angle;
  cfg.threads = o.jobs;
  auto start = std::chrono::steady_clock::now();
  MonodromyResult result = track_monodromy(p, cfg);
  ProjectionCertificate cert = certify_projection(result);
  spdlog::info("tracked {} loops in {:.3f} s", result.critical_values.size() + 1,
               std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());

  if (!o.cover_out.empty())
    ctx.write_file(o.cover_out, to_cover_text_pretty(result.cover) + "\n");
  if (o.cover_out == "-")
    return exit_ok;
  if (o.json) {
    ctx.out << to_curve_text(result, cert) << '\n';
    return exit_ok;
  }
  line(ctx.out, "polynomial", p.to_string());
  line(ctx.out, "degree", std::to_string(result.degree));
  for (std::size_t k = 0; k < result.critical_values.size(); ++k) {
    auto z = result.critical_values[k].value;
    std::ostringstream key;
    key << "x = " << std::setprecision(6) << z.real() << (z.imag() < 0 ? " - " : " + ")
        << std::abs(z.imag()) << "i";
    line(ctx.out, key.str(), to_cycle_string(result.branch_cycles[k]));
  }
  line(ctx.out, "x = inf", to_cycle_string(result.infinity_cycle));
  line(ctx.out, "group order", std::to_string(cert.group_order));
  line(ctx.out, "symmetric group", yes_no(cert.symmetric_group));
  line(ctx.out, "finite cycles Morse", yes_no(cert.finite_cycles_morse));
  line(ctx.out, "fully Morse", yes_no(cert.full_morse));
  line(ctx.out, "total space genus", std::to_string(cert.total_space_genus));
  line(ctx.out, "S_d certificate", sd_summary(cert.sd));
  return exit_ok;
}

void configure_logging(std::ostream &err)
{
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("ramify", sink);
  logger->set_pattern("[%l] %v");
  spdlog::level::level_enum level = spdlog::level::warn;
  if (char const *env = std::getenv("RAMIFY_LOG")) {
    std::string name = env;
    if (name == "error" || name == "warn" || name == "info" || name == "debug")
      level = spdlog::level::from_str(name == "warn" ? "warning" : name);
  }
  logger->set_level(level);
  spdlog::set_default_logger(logger);
}

} // anonymous namespace

int run(int argc, char const *const *argv, std::istream &in, std::ostream &out, std::ostream &err)
{
  configure_logging(err);
  Context ctx(in, out, err);
  Options o;

  CLI::App app{"Branched covers as permutation data: validation, fiber products, "
               "S_d certification, corpora and plane-curve monodromy"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ramify 0.1.0");

  auto input = [&](CLI::App *sub) {
    sub->add_option("input", o.input, "Cover file, '-' for standard input");
    sub->add_flag("--json", o.json, "Structured output");
  };
  auto corpus = [&](CLI::App *sub) {
    sub->add_option("--degree", o.degree, "Degree range a..b");
    sub->add_option("--genus", o.genus, "Base genus range a..b");
    sub->add_option("--branch-points", o.branch_points, "Branch point count range a..b");
    sub->add_flag("--morse", o.morse, "Morse covers only");
    sub->add_flag("--dedup", o.dedup, "One cover per relabeling class");
    sub->add_option("--samples", o.samples, "Random mode: number of samples");
    sub->add_option("--seed", o.seed, "Random mode: seed");
  };

  auto *validate_cmd = app.add_subcommand("validate", "Validate a cover file");
  input(validate_cmd);
  auto *analyze_cmd = app.add_subcommand("analyze", "Cover and fiber-product report");
  input(analyze_cmd);
  analyze_cmd->add_option("--dot", o.dot, "Also write the dual graph as DOT");
  auto *graph_cmd = app.add_subcommand("fiber-graph", "Dual graph of Y x_X Y as DOT");
  graph_cmd->add_option("input", o.input, "Cover file, '-' for standard input");
  graph_cmd->add_option("--dot", o.dot, "Output path (default: standard output)");
  auto *derived_cmd = app.add_subcommand("derived", "Derived cover q'_1 : Y' -> Y");
  input(derived_cmd);
  auto *sd_cmd = app.add_subcommand("certify-sd", "Certify Galois group S_d (exit 2 on refusal)");
  input(sd_cmd);
  auto *gen_cmd = app.add_subcommand("gen", "Enumerate or sample covers");
  corpus(gen_cmd);
  auto *verify_cmd = app.add_subcommand("enum-verify", "Verify the theorems on a corpus");
  corpus(verify_cmd);
  verify_cmd->add_flag("--json", o.json, "Structured output");
  verify_cmd->add_option("--jobs", o.jobs, "Worker threads (0: available parallelism)");
  auto *curve_cmd = app.add_subcommand("curve", "Monodromy of a plane curve projection to x");
  curve_cmd->add_option("input", o.input, "Polynomial file when --poly is absent");
  curve_cmd->add_flag("--json", o.json, "Structured output");
  curve_cmd->add_option("--poly", o.poly, "Polynomial in x and y");
  curve_cmd->add_option("--tol", o.tol, "Root solver tolerance")->check(CLI::PositiveNumber);
  curve_cmd->add_option("--shear", o.shear, "Substitute x <- x + lambda*y first");
  curve_cmd->add_option("--cover-out", o.cover_out, "Write the assembled cover ('-': stdout only)");
  curve_cmd->add_option("--base-angle", o.base_angle, "Direction of the base point in radians");
  curve_cmd->add_option("--jobs", o.jobs, "Loop tracking threads (0: available parallelism)");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return exit_ok;
  } catch (CLI::CallForVersion const &) {
    out << "ramify 0.1.0\n";
    return exit_ok;
  } catch (CLI::ParseError const &e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    auto *sub = app.get_subcommands().front();
    std::string name = sub->get_name();
    if (name == "validate")
      return cmd_validate(ctx, o);
    if (name == "analyze")
      return cmd_analyze(ctx, o);
    if (name == "fiber-graph")
      return cmd_fiber_graph(ctx, o);
    if (name == "derived")
      return cmd_derived(ctx, o);
    if (name == "certify-sd")
      return cmd_certify_sd(ctx, o);
    if (name == "gen")
      return cmd_gen(ctx, o);
    if (name == "enum-verify")
      return cmd_enum_verify(ctx, o);
    return cmd_curve(ctx, o);
  } catch (ParseError const &e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (InvalidArgument const &e) {
    err << "invalid input: " << e.what() << '\n';
    return exit_parse;
  } catch (DegreeMismatch const &e) {
    err << "invalid input: " << e.what() << '\n';
    return exit_parse;
  } catch (TheoremViolation const &e) {
    err << "theorem violation: " << e.what() << '\n';
    return exit_violation;
  } catch (RelationViolation const &e) {
    err << "relation violation: " << e.what() << '\n';
    return exit_violation;
  } catch (std::ios_base::failure const &e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

} // namespace ramify::cli
