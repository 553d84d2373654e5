#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "netgalois/error.hpp"
#include "netgalois/parallel.hpp"
#include "netgalois/report.hpp"

namespace netgalois::cli {
namespace {

using nlohmann::json;

struct Args {
  std::string instance;
  std::string out;
  std::string jobs = "max";
  std::uint64_t seed = 1;
  bool timings = false;
  bool report_only = false;
  std::string transvections = "auto";
  // check-axioms
  std::string conditions = "all";
  std::string pool = "auto";
  std::size_t samples = 200;
  std::size_t closure_samples = 8;
  // support
  std::string element;
  // sigma / sandwich
  std::string subgroup;
  // sweep
  std::string family = "cyclic-over-D";
  std::optional<std::size_t> sample;
  // build
  std::string lattice_out;
  std::string dot_out;
  // replay
  std::string report;
  std::string condition;
  std::string witness;
};

std::size_t parse_jobs(const std::string& s) {
  if (s == "max") return std::max<std::size_t>(2, default_jobs());
  try {
    const auto v = std::stoul(s);
    if (v == 0) throw InputError("--jobs must be positive");
    return v;
  } catch (const std::logic_error&) {
    throw InputError("--jobs takes a number or max");
  }
}

TransvectionMode parse_tmode(const std::string& s) {
  if (s == "full") return TransvectionMode::Full;
  if (s == "quick") return TransvectionMode::Quick;
  if (s == "auto") return TransvectionMode::Auto;
  throw InputError("--transvections takes full, quick or auto");
}

PoolMode parse_pool(const std::string& s) {
  if (s == "exhaustive") return PoolMode::Exhaustive;
  if (s == "sampled") return PoolMode::Sampled;
  if (s == "auto") return PoolMode::Auto;
  throw InputError("--mode takes exhaustive, sampled or auto");
}

InstanceSpec load_instance(const std::string& s) {
  if (s.empty()) throw InputError("--instance is required");
  if (std::filesystem::exists(s)) return instance_from_json(read_json_file(s));
  return parse_instance_shorthand(s);
}

std::shared_ptr<const GaloisContext> context(const Args& a) {
  const InstanceSpec spec = load_instance(a.instance);
  return GaloisContext::build(spec.ring, spec.n, cap_from_env());
}

ReportOptions report_options(const Args& a) {
  ReportOptions o;
  o.jobs = parse_jobs(a.jobs);
  o.seed = a.seed;
  o.timings = a.timings;
  o.report_only = a.report_only;
  o.mode = parse_tmode(a.transvections);
  o.axioms.pool = parse_pool(a.pool);
  o.axioms.samples = a.samples;
  o.axioms.closure_samples = a.closure_samples;
  return o;
}

int emit(const Report& rep, const Args& a, const std::string& command, std::ostream& out) {
  const std::string path = a.out.empty() ? command + "-report.json" : a.out;
  write_json_file(path, rep.doc);
  out << rep.summary << "\n";
  out << "report: " << path << "\n";
  return rep.ok ? kOk : kVerifyFailed;
}

Subgroup load_subgroup(const GaloisContext& ctx, const std::string& path) {
  if (path.empty()) throw InputError("--subgroup is required");
  return subgroup_from_json(ctx, read_json_file(path));
}

// Replays witnesses of failed records. Returns the number that did not
// reproduce.
std::size_t replay_records(const GaloisContext& ctx, const json& checks, TransvectionMode mode, std::ostream& out,
                           std::size_t& replayed) {
  std::size_t stale = 0;
  for (const auto& c : checks) {
    if (c.value("holds", true) || !c.contains("witness")) continue;
    const std::string id = c.at("id").get<std::string>();
    if (condition_name(id).empty()) {
      out << "skip " << id << " (no replay for this check)\n";
      continue;
    }
    const auto r = replay_condition(ctx, id, c.at("witness"), mode);
    ++replayed;
    out << (r.reproduced ? "reproduced " : "STALE ") << id << ": " << r.detail << "\n";
    if (!r.reproduced) ++stale;
  }
  return stale;
}

int run_replay(const Args& a, std::ostream& out) {
  const auto ctx = context(a);
  const TransvectionMode mode = parse_tmode(a.transvections);
  std::size_t replayed = 0, stale = 0;
  if (!a.report.empty()) {
    const json doc = read_json_file(a.report);
    check_version(doc);
    stale = replay_records(*ctx, doc.value("checks", json::array()), mode, out, replayed);
  } else {
    if (a.condition.empty() || a.witness.empty()) throw InputError("replay needs --report, or --condition and --witness");
    json w;
    if (std::filesystem::exists(a.witness)) {
      w = read_json_file(a.witness);
    } else {
      try {
        w = json::parse(a.witness);
      } catch (const json::parse_error& e) {
        throw InputError(std::string("--witness is neither a file nor JSON: ") + e.what());
      }
    }
    json checks = json::array({{{"id", a.condition}, {"holds", false}, {"witness", w}}});
    stale = replay_records(*ctx, checks, mode, out, replayed);
  }
  out << replayed << " witnesses replayed, " << stale << " no longer fail\n";
  return stale == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois correspondence and D-net verification on finite submodule lattices", "netgalois"};
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* s) {
    s->add_option("--instance", a.instance, "instance JSON file, or shorthand such as F7:2 or Z49:2")->required();
    s->add_option("--out", a.out, "report path (default <command>-report.json)");
    s->add_option("--jobs", a.jobs, "worker threads, or max");
    s->add_option("--seed", a.seed, "seed for sampled checks");
    s->add_flag("--timings", a.timings, "record elapsed seconds per check");
    s->add_flag("--report-only", a.report_only, "record verdicts without asserting them");
    s->add_option("--transvections", a.transvections, "transvection sets: full, quick or auto");
  };

  auto* build = app.add_subcommand("build", "build an instance and report its counts");
  common(build);
  build->add_option("--lattice", a.lattice_out, "write the lattice as JSON");
  build->add_option("--dot", a.dot_out, "write the Hasse diagram in DOT format");

  auto* axioms = app.add_subcommand("check-axioms", "check the lattice and group conditions");
  common(axioms);
  axioms->add_option("--conditions", a.conditions, "e.g. 1-12, 7-10, m1-m4, all");
  axioms->add_option("--mode", a.pool, "exhaustive, sampled or auto");
  axioms->add_option("--samples", a.samples, "group elements drawn in sampled mode");
  axioms->add_option("--closure-samples", a.closure_samples, "elements a with <a, H> closed in sampled mode");

  auto* support = app.add_subcommand("support", "support of an element, or the support identities");
  common(support);
  support->add_option("--element", a.element, "element label");

  auto* sigma = app.add_subcommand("sigma", "sigma(F), K(F) and the main statements for one subgroup");
  common(sigma);
  sigma->add_option("--subgroup", a.subgroup, "subgroup JSON file")->required();

  auto* sandwich = app.add_subcommand("sandwich", "D-net sandwich and uniqueness for one subgroup");
  common(sandwich);
  sandwich->add_option("--subgroup", a.subgroup, "subgroup JSON file")->required();

  auto* sweep = app.add_subcommand("sweep", "verify every F = <D, g>");
  common(sweep);
  sweep->add_option("--family", a.family, "subgroup family (cyclic-over-D)");
  sweep->add_option("--sample", a.sample, "number of sampled g instead of all of G");

  auto* nets = app.add_subcommand("nets", "enumerate net collections and check each");
  common(nets);
  auto* classes = app.add_subcommand("classes", "equivalence classes of sublattices of L_0'");
  common(classes);

  auto* replay = app.add_subcommand("replay", "replay failure witnesses");
  replay->add_option("--instance", a.instance, "instance JSON file or shorthand")->required();
  replay->add_option("--report", a.report, "report whose failed checks are replayed");
  replay->add_option("--condition", a.condition, "condition id, e.g. c6 or c4.weak");
  replay->add_option("--witness", a.witness, "witness JSON (file or inline)");
  replay->add_option("--transvections", a.transvections, "transvection sets: full, quick or auto");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (replay->parsed()) return run_replay(a, out);
    const auto ctx = context(a);
    const ReportOptions o = report_options(a);
    if (build->parsed()) {
      if (!a.lattice_out.empty()) write_json_file(a.lattice_out, lattice_to_json(ctx->lattice()));
      if (!a.dot_out.empty()) {
        std::ofstream dot(a.dot_out);
        if (!dot) throw InputError("cannot write " + a.dot_out);
        dot << lattice_to_dot(ctx->lattice());
      }
      return emit(build_report(*ctx, o), a, "build", out);
    }
    if (support->parsed()) {
      std::optional<Elem> x;
      if (!a.element.empty()) x = element_by_label(ctx->lattice(), a.element);
      return emit(support_report(*ctx, x, o), a, "support", out);
    }
    if (axioms->parsed()) {
      return emit(axioms_report(*ctx, parse_condition_selection(a.conditions, *ctx), o), a, "check-axioms", out);
    }
    const NetCatalog catalog(ctx);
    if (nets->parsed()) return emit(nets_report(catalog, o), a, "nets", out);
    if (classes->parsed()) return emit(classes_report(catalog, o), a, "classes", out);
    if (sigma->parsed()) return emit(sigma_report(catalog, load_subgroup(*ctx, a.subgroup), o), a, "sigma", out);
    const DNetCatalog dnets(catalog);
    if (sandwich->parsed())
      return emit(sandwich_report(dnets, load_subgroup(*ctx, a.subgroup), o), a, "sandwich", out);
    if (sweep->parsed()) {
      if (a.family != "cyclic-over-D") throw InputError("unknown family " + a.family);
      const auto elements = sweep_elements(ctx->group(), a.sample, a.seed);
      return emit(sweep_report(dnets, elements, o), a, "sweep", out);
    }
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << " (partial count " << e.partial_count() << ")\n";
    return kCap;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace netgalois::cli
