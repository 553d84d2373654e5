// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <sys/resource.h>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracle.hpp"
#include "netgalois/error.hpp"
#include "netgalois/io.hpp"
#include "netgalois/parallel.hpp"
#include "netgalois/report.hpp"

namespace {

using namespace netgalois;
using nlohmann::json;

// Pinned limits, in seconds.
constexpr double kLimit[] = {0, 5, 30, 300, 120, 900, 1200};
constexpr double kMemoryLimitMB = 2048;
constexpr std::size_t kZ49Cap = 5'000'000;
constexpr std::size_t kZ49Samples = 50;

using Docs = std::vector<std::pair<std::string, json>>;

struct Result {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double peak_rss_mb() {
  rusage u{};
  getrusage(RUSAGE_SELF, &u);
  return static_cast<double>(u.ru_maxrss) / 1024.0;
}

ReportOptions options(std::size_t jobs) {
  ReportOptions o;
  o.jobs = jobs;
  o.seed = 1;
  return o;
}

std::shared_ptr<const GaloisContext> instance(const std::string& shorthand, std::size_t cap = kDefaultCap) {
  const InstanceSpec s = parse_instance_shorthand(shorthand);
  return GaloisContext::build(s.ring, s.n, cap);
}

oracle::Space space_of(const GaloisContext& ctx) { return {ctx.ring().modulus(), ctx.n()}; }

bool check_present_and_held(const json& doc, const std::string& id) {
  for (const auto& c : doc.at("checks"))
    if (c.at("id") == id) return c.at("holds").get<bool>();
  return false;
}

// ---- report builders, shared by the criteria and the determinism rerun ----

Docs reports_counts(std::size_t jobs) {
  Docs d;
  for (const char* s : {"F7:2", "Z4:2"}) d.emplace_back(std::string("build-") + s, build_report(*instance(s), options(jobs)).doc);
  return d;
}

const char* kSupportInstances[] = {"F7:2", "Z4:2", "F2:2", "Z9:2", "Z4:3", "Z49:2"};

Docs reports_support(std::size_t jobs) {
  Docs d;
  for (const char* s : kSupportInstances)
    d.emplace_back(std::string("support-") + s, support_report(*instance(s), std::nullopt, options(jobs)).doc);
  return d;
}

Docs reports_axioms(std::size_t jobs) {
  const auto ctx = instance("F7:2");
  ReportOptions o = options(jobs);
  o.axioms.pool = PoolMode::Exhaustive;
  return {{"axioms-F7:2", axioms_report(*ctx, all_condition_ids(*ctx), o).doc}};
}

Docs reports_nets(std::size_t jobs) {
  const NetCatalog catalog(instance("F7:2"));
  return {{"nets-F7:2", nets_report(catalog, options(jobs)).doc},
          {"classes-F7:2", classes_report(catalog, options(jobs)).doc}};
}

Docs reports_sweep(std::size_t jobs) {
  const auto ctx = instance("F7:2");
  const NetCatalog catalog(ctx);
  const DNetCatalog dnets(catalog);
  const auto elements = sweep_elements(ctx->group(), std::nullopt, 1);
  return {{"sweep-F7:2", sweep_report(dnets, elements, options(jobs)).doc}};
}

Docs reports_z49(std::size_t jobs) {
  const auto ctx = instance("Z49:2", kZ49Cap);
  ReportOptions o = options(jobs);
  o.mode = TransvectionMode::Quick;
  o.axioms.pool = PoolMode::Sampled;
  Docs d;
  d.emplace_back("build-Z49:2", build_report(*ctx, o).doc);
  d.emplace_back("axioms-Z49:2", axioms_report(*ctx, parse_condition_selection("7-10", *ctx), o).doc);
  const NetCatalog catalog(ctx);
  const DNetCatalog dnets(catalog);
  const auto elements = sweep_elements(ctx->group(), kZ49Samples, 1);
  d.emplace_back("sweep-Z49:2", sweep_report(dnets, elements, o).doc);
  return d;
}

// ---- criteria ----

Result counts(const Docs& docs) {
  Result r;
  struct Want {
    const char* name;
    std::size_t lattice;
    std::optional<std::size_t> gl, diagonal;
  };
  const Want wants[] = {{"F7:2", 10, 2016, 36}, {"Z4:2", 15, 96, std::nullopt}};
  for (std::size_t k = 0; k < 2; ++k) {
    const auto ctx = instance(wants[k].name);
    const auto sp = space_of(*ctx);
    const std::size_t subs = oracle::all_submodules(sp).size();
    const auto groups = oracle::count_groups(sp);
    const json& c = docs[k].second.at("counts");
    std::ostringstream os;
    os << wants[k].name << " |L|=" << c.at("lattice_elements") << " |GL|=" << c.at("G") << " |D|=" << c.at("H");
    r.notes.push_back(os.str());
    r.require(c.at("lattice_elements") == subs && subs == wants[k].lattice, std::string(wants[k].name) + " lattice size");
    r.require(c.at("G") == groups.gl, std::string(wants[k].name) + " |GL| vs invertibility filter");
    r.require(c.at("H") == groups.diagonal, std::string(wants[k].name) + " |D| vs diagonal filter");
    if (wants[k].gl) r.require(groups.gl == *wants[k].gl, "brute |GL|");
    if (wants[k].diagonal) r.require(groups.diagonal == *wants[k].diagonal, "brute |D|");
    r.require(docs[k].second.at("ok").get<bool>(), std::string(wants[k].name) + " build checks");
  }
  return r;
}

Result support(const Docs& docs) {
  Result r;
  std::size_t elements = 0;
  for (std::size_t k = 0; k < docs.size(); ++k) {
    const auto ctx = instance(kSupportInstances[k]);
    const FiniteLattice& l = ctx->lattice();
    const Frame& f = ctx->frame();
    for (Elem x = 0; x < l.size(); ++x) {
      ++elements;
      const auto brute = oracle::minimal_support(l, f.atoms(), x);
      if (brute != f.support(x).parts) {
        r.require(false, std::string(kSupportInstances[k]) + " support of " + l.label(x));
        break;
      }
    }
    r.require(docs[k].second.at("ok").get<bool>(), std::string(kSupportInstances[k]) + " support identities");
  }
  r.notes.push_back(std::to_string(docs.size()) + " instances, " + std::to_string(elements) +
                    " elements matched the minimal-tuple oracle");
  return r;
}

Result axioms(const Docs& docs) {
  Result r;
  const json& doc = docs[0].second;
  const auto ctx = instance("F7:2");
  r.require(ctx->frame().m() == 1, "m = 1");
  std::size_t held = 0;
  for (const char* id : {"c1", "c2", "c3", "c4.weak", "c5", "c6", "c7", "c8", "c9", "c10", "c11.weak", "c12", "m1",
                         "m2", "m3", "m4"}) {
    const bool ok = check_present_and_held(doc, id);
    r.require(ok, id);
    held += ok;
  }
  for (const auto& c : doc.at("checks")) {
    const auto d = c.value("detail", json::object());
    if (d.contains("pool")) r.require(d.at("pool") == "exhaustive", c.at("id").get<std::string>() + " exhaustive pool");
  }
  r.require(doc.at("ok").get<bool>(), "report ok");
  r.notes.push_back(std::to_string(held) + "/16 conditions hold");
  return r;
}

Result nets(const Docs& docs) {
  Result r;
  const auto ctx = instance("F7:2");
  const NetCatalog catalog(ctx);
  r.require(catalog.nets().size() == 4, "4 valid net collections");
  std::multiset<std::size_t> lib, brute;
  for (const auto& e : catalog.nets()) lib.insert(e.group.order());
  const auto sp = space_of(*ctx);
  for (const auto& s : enumerate_dnet_candidates(2, 1))
    if (oracle::product_law(2, 1, s.exp)) brute.insert(oracle::net_group_order(sp, 7, 1, s.exp));
  r.require(lib == brute, "net subgroup orders vs brute count");
  r.require(lib == std::multiset<std::size_t>{36, 252, 252, 2016}, "orders {36,252,252,2016}");
  const json& doc = docs[0].second;
  std::size_t generated = 0, recovered = 0;
  for (const auto& c : doc.at("checks")) {
    const std::string id = c.at("id");
    if (id.ends_with("fixer_generated_by_transvections")) generated += c.at("holds").get<bool>();
    if (id.ends_with("sigma_recovers_net")) recovered += c.at("holds").get<bool>();
  }
  r.require(generated == 4, "G(K) generated by H and transvections for all 4");
  r.require(recovered == 4, "sigma(G(K)) = tau for all 4");
  r.require(doc.at("ok").get<bool>() && docs[1].second.at("ok").get<bool>(), "reports ok");
  std::ostringstream os;
  os << "4 nets, orders";
  for (auto o : lib) os << " " << o;
  r.notes.push_back(os.str());
  return r;
}

Result sweep(const Docs& docs) {
  Result r;
  const json& doc = docs[0].second;
  const auto ctx = instance("F7:2");
  const NetCatalog catalog(ctx);
  r.require(doc.at("elements") == 2016, "2016 elements");
  r.require(doc.at("failed") == 0, "zero failures");
  r.require(catalog.sublattices().size() == oracle::count_sublattices(ctx->lattice(), ctx->L0prime().members()),
            "sublattices of L0' exhausted");
  r.require(enumerate_dnet_candidates(2, 1).size() == 4, "4 D-net candidates");
  for (const char* id : {"K_fixer_normal", "F_in_normalizer", "K_fixer_in_F", "K_in_overline", "finite_index",
                         "normal_class_unique", "sandwich.dnet_unique", "sandwich.F_in_net_normalizer",
                         "sandwich.net_subgroup_in_F", "sandwich.class_unique"})
    r.require(check_present_and_held(doc, id), id);
  r.require(doc.at("ok").get<bool>(), "report ok");
  std::ostringstream os;
  os << doc.at("passed") << "/2016 pass over " << doc.at("distinct_subgroups") << " distinct subgroups";
  r.notes.push_back(os.str());
  return r;
}

Result z49(const Docs& docs) {
  Result r;
  const json& build = docs[0].second;
  const json& ax = docs[1].second;
  const json& sw = docs[2].second;
  const auto ctx = instance("Z49:2", kZ49Cap);
  const auto sp = space_of(*ctx);
  r.require(build.at("counts").at("lattice_elements") == oracle::all_submodules(sp).size(), "|L| vs brute force");
  r.require(build.at("counts").at("m") == 2, "m = 2");
  r.require(build.at("counts").at("G") == std::uint64_t{2016} * 2401, "|GL| = |GL(2,7)| * 7^4");
  for (const char* id : {"c7", "c8", "c9", "c10"}) r.require(check_present_and_held(ax, id), id);
  const auto cands = enumerate_dnet_candidates(2, 2);
  std::size_t lawful = 0;
  for (const auto& s : cands) lawful += oracle::product_law(2, 2, s.exp);
  r.require(cands.size() == 9 && lawful == 9, "9 D-net candidates");
  r.require(sw.at("elements") == kZ49Samples && sw.at("failed") == 0, "50 sampled F pass");
  r.require(check_present_and_held(sw, "sandwich.dnet_unique"), "D-net unique per F");
  r.require(ax.at("ok").get<bool>() && sw.at("ok").get<bool>() && build.at("ok").get<bool>(), "reports ok");
  std::ostringstream os;
  os << "|L|=" << build.at("counts").at("lattice_elements") << " m=2, " << sw.at("passed") << "/" << kZ49Samples
     << " sampled F pass";
  r.notes.push_back(os.str());
  return r;
}

Result negative() {
  Result r;
  const Report rep = negative_controls_report(options(1));
  r.require(rep.ok, "negative controls report");
  // Replay the pentagon witness independently of the report code.
  const FiniteLattice n5 = pentagon_lattice();
  bool replayed = false;
  for (const auto& c : rep.doc.at("checks"))
    if (c.at("id") == "pentagon_not_modular" && c.contains("witness")) {
      const auto& w = c.at("witness");
      const Elem x = *n5.find(w.at("x").get<std::string>());
      const Elem y = *n5.find(w.at("y").get<std::string>());
      const Elem z = *n5.find(w.at("z").get<std::string>());
      replayed = n5.leq(x, z) && n5.join(x, n5.meet(y, z)) != n5.meet(n5.join(x, y), z);
    }
  r.require(replayed, "pentagon witness replays");
  r.require(!oracle::product_law(3, 1, broken_product_fixture(1).exp), "fixture violates the product law");
  r.require(check_present_and_held(rep.doc, "broken_net_not_closed_F7"), "F7 n=3 escape");
  r.require(check_present_and_held(rep.doc, "broken_net_not_closed_Z4"), "Z/4 n=3 escape");
  const auto f2 = instance("F2:2");
  const Report ro = axioms_report(*f2, all_condition_ids(*f2), options(1));
  bool none_asserted = !ro.doc.at("checks").empty();
  for (const auto& c : ro.doc.at("checks")) none_asserted = none_asserted && !c.at("asserted").get<bool>();
  r.require(ro.ok && none_asserted, "F2 report-only");
  r.notes.push_back("pentagon, n=3 product escape, F2 report-only");
  return r;
}

void print(std::size_t n, const char* title, const Result& r, double secs, std::ostream& out) {
  out << (r.pass ? "PASS" : "FAIL") << " " << n << " " << title << " (" << std::fixed << std::setprecision(1)
      << secs << " s)";
  for (const auto& note : r.notes) out << "; " << note;
  out << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  std::string out_dir = "acceptance-reports";
  std::vector<int> only;
  app.add_option("--out-dir", out_dir, "where reports are written");
  app.add_option("--only", only, "run only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);
  auto wanted = [&](int c) { return only.empty() || std::find(only.begin(), only.end(), c) != only.end(); };

  struct Criterion {
    const char* title;
    std::function<Docs(std::size_t)> reports;
    std::function<Result(const Docs&)> judge;
  };
  const std::vector<Criterion> criteria = {
      {"instance counts", reports_counts, counts},
      {"support calculus", reports_support, support},
      {"axiom suite on F_7 n=2", reports_axioms, axioms},
      {"net collections on F_7 n=2", reports_nets, nets},
      {"full sweep over GL(2,7)", reports_sweep, sweep},
      {"m = 2 case on Z/49 n=2", reports_z49, z49},
  };

  bool all = true;
  std::map<int, Docs> first;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int n = static_cast<int>(k + 1);
    if (!wanted(n)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      first[n] = criteria[k].reports(1);
      r = criteria[k].judge(first[n]);
    } catch (const std::exception& e) {
      r.require(false, e.what());
    }
    const double secs = seconds_since(t0);
    r.require(secs < kLimit[n], "runtime limit " + std::to_string(static_cast<int>(kLimit[n])) + " s");
    if (n == 6) {
      const double mb = peak_rss_mb();
      r.require(mb < kMemoryLimitMB, "memory limit");
      std::ostringstream os;
      os << "peak " << std::fixed << std::setprecision(0) << mb << " MB";
      r.notes.push_back(os.str());
    }
    for (const auto& [name, doc] : first[n]) write_json_file(out_dir + "/" + name + ".json", doc);
    print(n, criteria[k].title, r, secs, std::cout);
    all = all && r.pass;
  }

  if (wanted(7)) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = negative();
    } catch (const std::exception& e) {
      r.require(false, e.what());
    }
    print(7, "negative controls", r, seconds_since(t0), std::cout);
    all = all && r.pass;
  }

  if (wanted(8)) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    const std::size_t jobs = std::max<std::size_t>(2, default_jobs());
    std::size_t compared = 0;
    try {
      for (std::size_t k = 0; k < criteria.size(); ++k) {
        const int n = static_cast<int>(k + 1);
        if (!first.count(n)) first[n] = criteria[k].reports(1);
        const Docs again = criteria[k].reports(jobs);
        for (std::size_t d = 0; d < again.size(); ++d) {
          ++compared;
          r.require(dump(first[n][d].second) == dump(again[d].second), again[d].first + " differs");
        }
      }
    } catch (const std::exception& e) {
      r.require(false, e.what());
    }
    r.notes.push_back(std::to_string(compared) + " reports byte-identical at --jobs 1 and --jobs " +
                      std::to_string(jobs));
    print(8, "determinism", r, seconds_since(t0), std::cout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
