// Command-line census tool: build the catalog of groups of order p^2*q
// with elementary abelian Sylow p-subgroup, enumerate their gamma
// functions (equivalently the regular subgroups of the holomorph and the
// skew braces on the group), aggregate censuses, and verify them against
// the closed-form reference tables.
//
// Exit codes: 0 success / all cells verified, 1 verification mismatch or
// incomplete enumeration, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "p2q/report_io.hpp"

using namespace p2q;

namespace {

struct RunConfig {
  long p = 0, q = 0;
  int type = 0;       // 0 = all valid types
  long k = -1;        // type-8 class; -1 = all representatives
  std::string mode = "full";
  int workers = 0;    // 0 = default
  double budget_seconds = 0;
  long budget_nodes = 0;
  std::string output;  // empty = stdout
  std::string format = "json";
};

int default_workers() {
  if (const char* env = std::getenv("P2Q_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

std::vector<GroupSpec> select_specs(const RunConfig& rc) {
  std::vector<GroupSpec> out;
  for (const GroupSpec& s : all_specs(rc.p, rc.q)) {
    if (rc.type != 0 && s.family != rc.type) continue;
    if (s.family == 8 && rc.k >= 0 && s.k != canonical_k(rc.k, rc.q)) continue;
    out.push_back(s);
  }
  if (rc.type != 0 && out.empty())
    throw invalid_parameters("type " + std::to_string(rc.type) +
                             " is not realized at (p,q) = (" + std::to_string(rc.p) +
                             "," + std::to_string(rc.q) + "); " +
                             [&]() -> std::string {
                               switch (rc.type) {
                                 case 6: case 7: return "it needs q | p-1";
                                 case 8: return "it needs q | p-1 and q > 3";
                                 case 9: return "it needs q | p-1 and q > 2";
                                 case 10: return "it needs q | p+1 and q > 2";
                                 case 11: return "it needs p | q-1";
                                 default: return "valid types are 5..11";
                               }
                             }());
  return out;
}

EnumConfig enum_config(const RunConfig& rc) {
  EnumConfig cfg;
  cfg.mode = rc.mode == "pruned" ? EnumMode::pruned : EnumMode::full;
  cfg.workers = rc.workers > 0 ? rc.workers : default_workers();
  cfg.budget_seconds = rc.budget_seconds;
  cfg.budget_nodes = rc.budget_nodes;
  return cfg;
}

void write_output(const RunConfig& rc, const std::string& text) {
  if (rc.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(rc.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + rc.output);
  f << text;
}

int cmd_catalog(const RunConfig& rc) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const GroupSpec& s : select_specs(rc)) {
    nlohmann::ordered_json j;
    j["type"] = s.family;
    j["k"] = s.family == 8 ? nlohmann::ordered_json(s.k) : nlohmann::ordered_json(nullptr);
    j["order"] = s.order();
    j["lambda"] = s.lambda ? nlohmann::ordered_json(s.lambda) : nlohmann::ordered_json(nullptr);
    j["u"] = s.u ? nlohmann::ordered_json(s.u) : nlohmann::ordered_json(nullptr);
    j["trace"] = s.family == 10 ? nlohmann::ordered_json(s.trace_t) : nlohmann::ordered_json(nullptr);
    j["aut_order"] = tables::table1_aut_order(s.family, rc.p, rc.q);
    list.push_back(j);
  }
  write_output(rc, list.dump(2) + "\n");
  return 0;
}

int cmd_aut(const RunConfig& rc) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const GroupSpec& s : select_specs(rc)) {
    GroupTable g = build_group(s);
    nlohmann::ordered_json j;
    j["type"] = s.family;
    j["k"] = s.family == 8 ? nlohmann::ordered_json(s.k) : nlohmann::ordered_json(nullptr);
    long order = automorphism_count(g);
    j["aut_order"] = order;
    if (order <= 60000) {
      AutGroup a = automorphisms(g, /*want_compose_table=*/false);
      j["generators"] = a.gens.size();
    } else {
      j["generators"] = nullptr;
    }
    list.push_back(j);
  }
  write_output(rc, list.dump(2) + "\n");
  return 0;
}

int cmd_enumerate(const RunConfig& rc) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  int rv = 0;
  for (const GroupSpec& s : select_specs(rc)) {
    GroupTable g = build_group(s);
    AutGroup a = automorphisms(g);
    EnumResult r = enumerate_gfs(a, enum_config(rc));
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["p"] = rc.p;
    j["q"] = rc.q;
    j["g_type"] = s.family;
    j["k"] = s.family == 8 ? nlohmann::ordered_json(s.k) : nlohmann::ordered_json(nullptr);
    j["mode"] = mode_name(r.mode);
    j["status"] = status_name(r.status);
    if (r.status == EnumStatus::complete) {
      j["count"] = r.gfs.size();
      auto arr = nlohmann::ordered_json::array();
      for (const GammaFunction& f : r.gfs) {
        nlohmann::ordered_json rec;
        rec["vals"] = f.vals;
        rec["kernel"] = gamma_kernel(a, f).order();
        rec["target"] = identify_type(circle_table(a, f), rc.p, rc.q).str();
        arr.push_back(rec);
      }
      j["gamma_functions"] = arr;
    } else {
      rv = 1;
    }
    out.push_back(j);
  }
  write_output(rc, out.dump() + "\n");
  return rv;
}

int cmd_census(const RunConfig& rc, bool verify) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  std::string csv;
  bool all_pass = true;
  for (const GroupSpec& s : select_specs(rc)) {
    GroupTable g = build_group(s);
    AutGroup a = automorphisms(g);
    EnumResult r = enumerate_gfs(a, enum_config(rc));
    CensusReport rep = build_report(a, r);
    std::vector<VerificationRow> rows;
    if (verify) {
      rows = verify_report(rep);
      if (!verification_passed(rows)) all_pass = false;
      std::fprintf(stderr, "%s at (%ld,%ld):\n", s.name().c_str(), rc.p, rc.q);
      for (const VerificationRow& v : rows)
        std::fprintf(stderr, "  %-6s %-28s expected %-28s actual %s\n", v.status.c_str(),
                     v.cell.c_str(), v.expected.c_str(), v.actual.c_str());
    }
    if (rep.status != EnumStatus::complete) all_pass = false;
    if (rc.format == "csv")
      csv += report_to_csv(rep);
    else
      out.push_back(report_to_json(rep, rows));
  }
  write_output(rc, rc.format == "csv" ? csv : out.dump(2) + "\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"census of skew braces / regular holomorph subgroups of order p^2 q"};
  app.require_subcommand(1);
  RunConfig rc;

  auto add_common = [&](CLI::App* sub, bool with_run_opts) {
    sub->add_option("--p", rc.p, "prime p > 2")->required();
    sub->add_option("--q", rc.q, "prime q != p")->required();
    sub->add_option("--type", rc.type, "group type 5..11 (default: all valid)");
    sub->add_option("--k", rc.k, "type-8 parameter k (default: all representatives)");
    if (with_run_opts) {
      sub->add_option("--mode", rc.mode, "enumeration mode")
          ->check(CLI::IsMember({"full", "pruned"}));
      sub->add_option("--workers", rc.workers, "parallel workers (default: P2Q_WORKERS or cores)");
      sub->add_option("--budget-seconds", rc.budget_seconds, "wall-clock budget");
      sub->add_option("--budget-nodes", rc.budget_nodes, "search-node budget");
      sub->add_option("--output", rc.output, "output file (default: stdout)");
      sub->add_option("--format", rc.format, "output format")
          ->check(CLI::IsMember({"json", "csv"}));
    }
  };

  CLI::App* catalog = app.add_subcommand("catalog", "list the valid group types at (p, q)");
  add_common(catalog, false);
  catalog->add_option("--output", rc.output, "output file");

  CLI::App* aut = app.add_subcommand("aut", "automorphism group orders (by search)");
  add_common(aut, false);
  aut->add_option("--output", rc.output, "output file");

  CLI::App* enumerate = app.add_subcommand("enumerate", "dump all gamma functions");
  add_common(enumerate, true);

  CLI::App* censusc = app.add_subcommand("census", "aggregate census report");
  add_common(censusc, true);

  CLI::App* verify = app.add_subcommand(
      "verify", "census plus comparison against the reference tables");
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(catalog)) return cmd_catalog(rc);
    if (app.got_subcommand(aut)) return cmd_aut(rc);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(rc);
    if (app.got_subcommand(censusc)) return cmd_census(rc, false);
    if (app.got_subcommand(verify)) return cmd_census(rc, true);
  } catch (const invalid_parameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
