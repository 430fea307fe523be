// JSON / CSV serialization of census reports and verification verdicts.
// Schema is versioned and stable; keys are emitted in a fixed order so
// reruns are byte-identical.

#ifndef P2Q_REPORT_IO_HPP_
#define P2Q_REPORT_IO_HPP_

#include <json.hpp>

#include "census.hpp"
#include "tables.hpp"

namespace p2q {

struct VerificationRow {
  std::string cell;
  std::string expected;
  std::string actual;
  std::string status;  // PASS, FAIL, NO-REF
};

inline const char* mode_name(EnumMode m) { return m == EnumMode::full ? "full" : "pruned"; }
inline const char* status_name(EnumStatus s) {
  return s == EnumStatus::complete ? "complete" : "incomplete";
}

inline nlohmann::ordered_json report_to_json(const CensusReport& r,
                                             const std::vector<VerificationRow>& verification) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["p"] = r.p;
  j["q"] = r.q;
  j["g_type"] = r.g_label.family;
  j["k"] = r.g_label.family == 8 ? nlohmann::ordered_json(r.g_label.k_canonical)
                                 : nlohmann::ordered_json(nullptr);
  j["aut_order"] = r.aut_order;
  j["mode"] = mode_name(r.mode);
  j["status"] = status_name(r.status);
  j["totals"] = {{"gamma_count", r.gamma_total}};
  auto targets = nlohmann::ordered_json::array();
  for (const TargetCell& c : r.by_target) {
    nlohmann::ordered_json t;
    t["type"] = c.target.family;
    t["k"] = c.target.family == 8 ? nlohmann::ordered_json(c.target.k_canonical)
                                  : nlohmann::ordered_json(nullptr);
    t["e_prime"] = c.e_prime;
    t["e_hgs"] = c.e_hgs;
    auto classes = nlohmann::ordered_json::array();
    long run_len = -1, run_cnt = 0;
    for (long l : c.orbit_lengths) {
      if (l == run_len) { ++run_cnt; continue; }
      if (run_len >= 0) classes.push_back({{"length", run_len}, {"count", run_cnt}});
      run_len = l;
      run_cnt = 1;
    }
    if (run_len >= 0) classes.push_back({{"length", run_len}, {"count", run_cnt}});
    t["classes"] = classes;
    targets.push_back(t);
  }
  j["by_target"] = targets;
  auto ver = nlohmann::ordered_json::array();
  for (const VerificationRow& v : verification)
    ver.push_back({{"cell", v.cell}, {"expected", v.expected},
                   {"actual", v.actual}, {"status", v.status}});
  j["verification"] = ver;
  return j;
}

inline std::string report_to_csv(const CensusReport& r) {
  std::string out =
      "p,q,g_type,g_k,aut_order,mode,status,gamma_count,"
      "target_type,target_k,e_prime,e_hgs,class_lengths\n";
  auto prefix = [&]() {
    std::string s;
    s += std::to_string(r.p) + ',' + std::to_string(r.q) + ',';
    s += std::to_string(r.g_label.family) + ',';
    s += (r.g_label.family == 8 ? std::to_string(r.g_label.k_canonical) : "") + std::string(",");
    s += std::to_string(r.aut_order) + ',';
    s += std::string(mode_name(r.mode)) + ',' + status_name(r.status) + ',';
    s += std::to_string(r.gamma_total) + ',';
    return s;
  };
  if (r.by_target.empty()) {
    out += prefix() + ",,,,\n";
    return out;
  }
  for (const TargetCell& c : r.by_target) {
    out += prefix();
    out += std::to_string(c.target.family) + ',';
    out += (c.target.family == 8 ? std::to_string(c.target.k_canonical) : "") + std::string(",");
    out += std::to_string(c.e_prime) + ',' + std::to_string(c.e_hgs) + ',';
    std::string lens;
    long run_len = -1, run_cnt = 0;
    auto flush = [&]() {
      if (run_len < 0) return;
      if (!lens.empty()) lens += ';';
      lens += std::to_string(run_len) + 'x' + std::to_string(run_cnt);
    };
    for (long l : c.orbit_lengths) {
      if (l == run_len) { ++run_cnt; continue; }
      flush();
      run_len = l;
      run_cnt = 1;
    }
    flush();
    out += lens + '\n';
  }
  return out;
}

// Compare a census against the closed-form tables; one row per cell.
inline std::vector<VerificationRow> verify_report(const CensusReport& r) {
  std::vector<VerificationRow> rows;
  if (r.status != EnumStatus::complete) {
    rows.push_back({"enumeration", "complete", status_name(r.status), "FAIL"});
    return rows;
  }
  auto label_str = [](TypeLabel t) { return t.str(); };
  auto add = [&](const std::string& cell, const std::string& exp, const std::string& act) {
    rows.push_back({cell, exp, act, exp == act ? "PASS" : "FAIL"});
  };

  std::vector<TypeLabel> targets = tables::valid_labels(r.p, r.q);
  long expected_total = 0;
  bool total_defined = true;
  for (TypeLabel t : targets) {
    std::string cell_base = "(" + label_str(t) + " <- " + label_str(r.g_label) + ")";
    auto ep = tables::expected_e_prime(t, r.g_label, r.p, r.q);
    const TargetCell* c = r.cell(t);
    long observed_ep = c ? c->e_prime : 0;
    if (ep) {
      expected_total += *ep;
      add("e'" + cell_base, std::to_string(*ep), std::to_string(observed_ep));
    } else if (observed_ep != 0) {
      total_defined = false;
      rows.push_back({"e'" + cell_base, "undefined-cell", std::to_string(observed_ep), "FAIL"});
    }
    auto cls = tables::expected_classes(t, r.g_label, r.p, r.q);
    if (cls)
      add("f''" + cell_base, std::to_string(*cls), std::to_string(c ? c->classes() : 0));
    auto lens = tables::expected_class_lengths(t, r.g_label, r.p, r.q);
    if (lens) {
      std::vector<long> exp_lens = tables::lens_expand(*lens);
      std::vector<long> act_lens = c ? c->orbit_lengths : std::vector<long>{};
      std::string es, as;
      for (long l : exp_lens) es += (es.empty() ? "" : "+") + std::to_string(l);
      for (long l : act_lens) as += (as.empty() ? "" : "+") + std::to_string(l);
      add("lengths" + cell_base, es, as);
    } else if (c) {
      rows.push_back({"lengths" + cell_base, "no-reference-data", "-", "NO-REF"});
    }
    auto e = tables::expected_e(t, r.g_label, r.p, r.q);
    if (e && c) add("e" + cell_base, std::to_string(*e), std::to_string(c->e_hgs));
  }
  if (total_defined)
    add("gamma_total(" + label_str(r.g_label) + ")", std::to_string(expected_total),
        std::to_string(r.gamma_total));
  return rows;
}

inline bool verification_passed(const std::vector<VerificationRow>& rows) {
  for (const VerificationRow& v : rows)
    if (v.status == "FAIL") return false;
  return true;
}

}  // namespace p2q

#endif  // P2Q_REPORT_IO_HPP_
