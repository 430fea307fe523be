// Census: aggregate an enumeration into the quantities of interest; the
// number of gamma functions per target type (e'), the conjugacy classes
// under Aut(G) with their lengths (the skew brace isomorphism classes),
// and the Hopf-Galois counts e = (|Aut Gamma| / |Aut G|) e'.

#ifndef P2Q_CENSUS_HPP_
#define P2Q_CENSUS_HPP_

#include <map>

#include "enumerate.hpp"
#include "identify.hpp"

namespace p2q {

struct OrbitData {
  std::vector<long> lengths;        // one entry per conjugacy class, sorted
};

// Orbit partition of a sorted gamma-function list under conjugation by the
// generators of Aut(G).  Returns the multiset of orbit lengths plus the
// orbit index of every gamma function.
inline std::vector<int> gamma_orbits(const AutGroup& a,
                                     const std::vector<GammaFunction>& gfs,
                                     std::vector<long>* lengths_out) {
  auto index_of = [&](const GammaFunction& f) -> long {
    auto it = std::lower_bound(gfs.begin(), gfs.end(), f);
    if (it == gfs.end() || !(*it == f)) return -1;
    return it - gfs.begin();
  };
  std::vector<int> orbit(gfs.size(), -1);
  std::vector<long> lengths;
  std::vector<long> stack;
  for (size_t i = 0; i < gfs.size(); ++i) {
    if (orbit[i] >= 0) continue;
    int oid = int(lengths.size());
    long len = 0;
    stack.assign(1, long(i));
    orbit[i] = oid;
    while (!stack.empty()) {
      long cur = stack.back();
      stack.pop_back();
      ++len;
      for (aut_t gen : a.gens) {
        GammaFunction img = conjugate_gf(a, gfs[cur], gen);
        long j = index_of(img);
        if (j < 0)
          throw std::logic_error("gamma_orbits: conjugate escapes the enumerated set");
        if (orbit[j] < 0) {
          orbit[j] = oid;
          stack.push_back(j);
        }
      }
    }
    if (a.size() % len != 0)
      throw std::logic_error("gamma_orbits: orbit length violates orbit-stabilizer");
    lengths.push_back(len);
  }
  if (lengths_out) *lengths_out = std::move(lengths);
  return orbit;
}

// e(Gamma, G) = (|Aut Gamma| / |Aut G|) * e'; non-integral results are a
// verification failure.
inline long hgs_count(long e_prime, long aut_gamma_order, long aut_g_order) {
  if (aut_gamma_order <= 0 || aut_g_order <= 0)
    throw invalid_parameters("hgs_count: automorphism orders must be positive");
  long long num = (long long)aut_gamma_order * e_prime;
  if (num % aut_g_order != 0)
    throw std::logic_error("hgs_count: e(Gamma, G) is not an integer");
  return long(num / aut_g_order);
}

struct TargetCell {
  TypeLabel target;
  long e_prime = 0;
  long e_hgs = 0;
  std::vector<long> orbit_lengths;  // sorted ascending
  long classes() const { return long(orbit_lengths.size()); }
};

struct CensusReport {
  long p = 0, q = 0;
  TypeLabel g_label;
  long aut_order = 0;
  long gamma_total = 0;
  std::vector<TargetCell> by_target;  // sorted by target label
  EnumMode mode = EnumMode::full;
  EnumStatus status = EnumStatus::complete;
  long nodes = 0;

  const TargetCell* cell(TypeLabel t) const {
    for (const TargetCell& c : by_target)
      if (c.target == t) return &c;
    return nullptr;
  }
};

// Aggregate a complete enumeration into a report.  |Aut Gamma| is taken
// from a fresh automorphism search on the catalog-built target group, so
// the Hopf-Galois column independently cross-checks both groups.
inline CensusReport build_report(const AutGroup& a, const EnumResult& enumeration) {
  const GroupTable& g = *a.g;
  CensusReport r;
  r.p = g.spec.p;
  r.q = g.spec.q;
  r.g_label = label_of(g.spec);
  r.aut_order = long(a.size());
  r.mode = enumeration.mode;
  r.status = enumeration.status;
  r.nodes = enumeration.nodes;
  if (r.status != EnumStatus::complete) return r;

  const std::vector<GammaFunction>& gfs = enumeration.gfs;
  r.gamma_total = long(gfs.size());

  std::vector<TypeLabel> labels(gfs.size());
  for (size_t i = 0; i < gfs.size(); ++i) {
    CayleyTable circ = circle_table(a, gfs[i]);
    labels[i] = identify_type(circ, r.p, r.q);
  }
  std::vector<long> lengths;
  std::vector<int> orbit = gamma_orbits(a, gfs, &lengths);

  // conjugation preserves the isomorphism type; verify while splitting
  std::vector<TypeLabel> orbit_label(lengths.size());
  std::vector<char> seen(lengths.size(), 0);
  for (size_t i = 0; i < gfs.size(); ++i) {
    if (!seen[orbit[i]]) {
      seen[orbit[i]] = 1;
      orbit_label[orbit[i]] = labels[i];
    } else if (!(orbit_label[orbit[i]] == labels[i])) {
      throw std::logic_error("build_report: conjugate gamma functions of different type");
    }
  }

  std::map<TypeLabel, TargetCell> cells;
  for (size_t i = 0; i < gfs.size(); ++i) {
    TargetCell& c = cells[labels[i]];
    c.target = labels[i];
    ++c.e_prime;
  }
  for (size_t o = 0; o < lengths.size(); ++o)
    cells[orbit_label[o]].orbit_lengths.push_back(lengths[o]);

  for (auto& [label, cell] : cells) {
    std::sort(cell.orbit_lengths.begin(), cell.orbit_lengths.end());
    long sum = 0;
    for (long l : cell.orbit_lengths) sum += l;
    if (sum != cell.e_prime)
      throw std::logic_error("build_report: orbit lengths do not sum to e'");
    GroupTable gamma_group = build_group(make_spec(label.family, r.p, r.q, label.k_canonical));
    cell.e_hgs = hgs_count(cell.e_prime, automorphism_count(gamma_group), r.aut_order);
    r.by_target.push_back(std::move(cell));
  }
  return r;
}

}  // namespace p2q

#endif  // P2Q_CENSUS_HPP_
