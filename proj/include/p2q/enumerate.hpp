// Complete enumeration of gamma functions by depth-first search with
// constraint propagation.  Every assignment gamma(g) = v is propagated
// through the functional equation against all assigned elements until a
// fixed point or a conflict; a complete consistent assignment therefore
// has the GFE checked on every pair already, and is re-verified once more
// with check_gfe before being recorded.
//
// Completeness: a total gamma function restricts to a consistent partial
// assignment along any branch order, so the search visits it.  The pruned
// mode only restricts the root value gamma(a1) to minimal representatives
// under conjugation by the stabilizer of a1 in Aut(G), and re-expands the
// results through the conjugation action; it must reproduce full mode
// exactly (tested at (3,2)) before being used elsewhere.

#ifndef P2Q_ENUMERATE_HPP_
#define P2Q_ENUMERATE_HPP_

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "gamma.hpp"

namespace p2q {

enum class EnumMode { full, pruned };

enum class EnumStatus { complete, budget_exceeded };

struct EnumConfig {
  EnumMode mode = EnumMode::full;
  int workers = 1;
  long budget_nodes = 0;     // 0 = unlimited; counts attempted assignments
  double budget_seconds = 0; // 0 = unlimited
};

struct EnumResult {
  std::vector<GammaFunction> gfs;  // sorted lexicographically by vals
  EnumStatus status = EnumStatus::complete;
  EnumMode mode = EnumMode::full;
  long nodes = 0;
};

namespace detail {

// Semiregularity bitset: row w marks {u^-1 * u^w : u in G}.  Two elements
// (x, vx), (y, vy) of one regular subgroup satisfy x y^-1 not in
// D(vx^-1 vy); violations prune a partial assignment long before the
// functional equation itself runs into a contradiction.
struct DiffTable {
  size_t stride = 0;  // 64-bit words per automorphism row
  std::vector<std::uint64_t> bits;

  explicit DiffTable(const AutGroup& a) {
    const GroupTable& g = *a.g;
    const int n = a.n();
    stride = size_t(n + 63) / 64;
    bits.assign(stride * a.size(), 0);
    for (size_t w = 0; w < a.size(); ++w) {
      std::uint64_t* row = &bits[w * stride];
      for (int u = 0; u < n; ++u) {
        elem_t d = g.mul(g.inv(elem_t(u)), a.apply(aut_t(w), elem_t(u)));
        row[d >> 6] |= std::uint64_t(1) << (d & 63);
      }
    }
  }
  bool test(aut_t w, elem_t d) const {
    return (bits[size_t(w) * stride + (d >> 6)] >> (d & 63)) & 1;
  }
};

struct DfsState {
  const AutGroup& A;
  const GroupTable& G;
  const DiffTable& D;
  const int n;
  const size_t asz;
  const elem_t* mul;
  const elem_t* apply;
  const aut_t* compose;           // null -> use A.compose fallback
  const elem_t* ginv;
  const aut_t* ainv;
  std::vector<aut_t> vals;
  std::vector<elem_t> assigned;   // assignment order; doubles as undo trail
  std::vector<elem_t> branch_order;
  std::vector<char> in_domain;    // restrict search to a subgroup if needed
  bool use_semiregular;           // valid for total gamma functions only
  std::atomic<long>* node_counter;
  long budget_nodes;
  long local_nodes = 0;           // flushed to node_counter in batches
  long tick = 0;                  // cadence for deadline checks
  size_t frontier = 0;            // scan position in branch_order
  std::chrono::steady_clock::time_point deadline;
  bool use_deadline;
  bool aborted = false;
  std::vector<GammaFunction> found;

  DfsState(const AutGroup& a, const DiffTable& d, std::vector<elem_t> order,
           std::vector<char> domain, std::atomic<long>* counter, long budget,
           double seconds)
      : A(a), G(*a.g), D(d), n(a.n()), asz(a.size()),
        mul(G.tab.mul.data()), apply(a.apply_tab.data()),
        compose(a.compose_tab.empty() ? nullptr : a.compose_tab.data()),
        ginv(G.tab.inv.data()), ainv(a.inverse.data()),
        vals(n, kNoAut), branch_order(std::move(order)), in_domain(std::move(domain)),
        use_semiregular(in_domain.empty()),
        node_counter(counter), budget_nodes(budget),
        use_deadline(seconds > 0) {
    assigned.reserve(n);
    if (use_deadline)
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(seconds));
    vals[G.id()] = a.id;  // forced; instances against id are tautologies
  }

  aut_t comp(aut_t x, aut_t y) const {
    return compose ? compose[size_t(x) * asz + y] : A.compose(x, y);
  }

  void flush_nodes() {
    node_counter->fetch_add(local_nodes, std::memory_order_relaxed);
    local_nodes = 0;
  }

  // Called once per attempted assignment.  Node budgets are enforced
  // exactly (so hitting them is deterministic); unbudgeted runs batch the
  // counter updates.
  bool count_node_and_check() {
    ++tick;
    if (budget_nodes > 0) {
      if (node_counter->fetch_add(1, std::memory_order_relaxed) + 1 > budget_nodes)
        return true;
    } else if (++local_nodes >= 4096) {
      flush_nodes();
    }
    if (use_deadline && (tick & 4095) == 0 &&
        std::chrono::steady_clock::now() >= deadline)
      return true;
    return false;
  }

  // Propagate GFE consequences of assigned[from...]; false on conflict.
  // Each pair also passes the semiregularity filter.
  bool propagate(size_t from) {
    for (size_t qh = from; qh < assigned.size(); ++qh) {
      const elem_t g = assigned[qh];
      const aut_t vg = vals[g];
      const aut_t vgi = ainv[vg];
      if (use_semiregular && D.test(vgi, g)) return false;  // (g, vg) fixes a point
      const elem_t* apg = apply + size_t(vg) * n;
      for (size_t i = 0; i <= qh; ++i) {
        const elem_t h = assigned[i];
        const aut_t vh = vals[h];
        // instance (g, h): gamma(g^gamma(h) h) = gamma(g) gamma(h)
        elem_t t = mul[size_t(apply[size_t(vh) * n + g]) * n + h];
        aut_t v = comp(vg, vh);
        if (vals[t] == kNoAut) {
          if (!in_domain.empty() && !in_domain[t]) return false;
          vals[t] = v;
          assigned.push_back(t);
        } else if (vals[t] != v) {
          return false;
        }
        if (h == g) continue;
        if (use_semiregular && D.test(comp(vgi, vh), mul[size_t(g) * n + ginv[h]]))
          return false;
        // instance (h, g)
        t = mul[size_t(apg[h]) * n + g];
        v = comp(vh, vg);
        if (vals[t] == kNoAut) {
          if (!in_domain.empty() && !in_domain[t]) return false;
          vals[t] = v;
          assigned.push_back(t);
        } else if (vals[t] != v) {
          return false;
        }
      }
    }
    return true;
  }

  void undo_to(size_t mark) {
    while (assigned.size() > mark) {
      vals[assigned.back()] = kNoAut;
      assigned.pop_back();
    }
  }

  int next_unassigned() {
    while (frontier < branch_order.size() && vals[branch_order[frontier]] != kNoAut)
      ++frontier;
    return frontier < branch_order.size() ? int(branch_order[frontier]) : -1;
  }

  bool seed(elem_t x, aut_t v) {  // returns false on immediate conflict
    size_t mark = assigned.size();
    if (vals[x] != kNoAut) return vals[x] == v;
    vals[x] = v;
    assigned.push_back(x);
    if (!propagate(mark)) return false;
    return true;
  }

  void dfs() {
    if (aborted) return;
    size_t fsave = frontier;
    int next = next_unassigned();
    if (next < 0) {
      GammaFunction f{vals};
      if (!check_gfe(A, f)) throw std::logic_error("enumerate: unsound assignment");
      found.push_back(std::move(f));
      frontier = fsave;
      return;
    }
    for (size_t v = 0; v < asz; ++v) {
      if (count_node_and_check()) { aborted = true; break; }
      size_t mark = assigned.size();
      vals[next] = aut_t(v);
      assigned.push_back(elem_t(next));
      if (propagate(mark)) dfs();
      undo_to(mark);
      frontier = fsave;
      if (aborted) break;
    }
    frontier = fsave;
  }
};

inline std::vector<elem_t> default_branch_order(const GroupTable& g) {
  std::vector<elem_t> order{g.a1, g.a2, g.b};
  for (int e = 0; e < g.n(); ++e) {
    elem_t x = elem_t(e);
    if (x != g.id() && x != g.a1 && x != g.a2 && x != g.b) order.push_back(x);
  }
  return order;
}

// Minimal representatives of the conjugation orbits of root values under
// the stabilizer of a1 in Aut(G).
inline std::vector<char> canonical_roots(const AutGroup& a) {
  const GroupTable& g = *a.g;
  std::vector<aut_t> stab;
  for (size_t i = 0; i < a.size(); ++i)
    if (a.apply(aut_t(i), g.a1) == g.a1) stab.push_back(aut_t(i));
  std::vector<char> canon(a.size(), 1);
  for (size_t v = 0; v < a.size(); ++v) {
    for (aut_t s : stab) {
      aut_t w = a.compose(a.compose(a.inverse[s], aut_t(v)), s);
      if (w < v) { canon[v] = 0; break; }
    }
  }
  return canon;
}

}  // namespace detail

// All gamma functions on G, sorted lexicographically by their value arrays.
inline EnumResult enumerate_gfs(const AutGroup& a, const EnumConfig& cfg = {}) {
  const GroupTable& g = *a.g;
  std::vector<elem_t> order = detail::default_branch_order(g);
  std::vector<char> roots;
  if (cfg.mode == EnumMode::pruned) roots = detail::canonical_roots(a);

  std::atomic<long> nodes{0};
  std::atomic<size_t> next_root{0};
  std::atomic<bool> any_aborted{false};
  int nw = std::max(1, cfg.workers);
  detail::DiffTable dtab(a);

  std::vector<std::vector<GammaFunction>> results(nw);
  auto work = [&](int wi) {
    detail::DfsState st(a, dtab, order, {}, &nodes, cfg.budget_nodes, cfg.budget_seconds);
    for (;;) {
      size_t rv = next_root.fetch_add(1);
      if (rv >= a.size()) break;
      if (!roots.empty() && !roots[rv]) continue;
      st.undo_to(0);
      st.frontier = 0;
      if (st.count_node_and_check()) { any_aborted = true; break; }
      if (!st.seed(g.a1, aut_t(rv))) continue;
      st.dfs();
      if (st.aborted) { any_aborted = true; break; }
    }
    st.flush_nodes();
    results[wi] = std::move(st.found);
  };

  if (nw == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < nw; ++i) threads.emplace_back(work, i);
    for (auto& t : threads) t.join();
  }

  EnumResult out;
  out.mode = cfg.mode;
  out.nodes = nodes.load();
  if (any_aborted) {
    out.status = EnumStatus::budget_exceeded;
    return out;
  }
  for (auto& r : results)
    for (auto& f : r) out.gfs.push_back(std::move(f));

  if (cfg.mode == EnumMode::pruned) {
    // expand through the stabilizer action and deduplicate
    std::vector<aut_t> stab;
    for (size_t i = 0; i < a.size(); ++i)
      if (a.apply(aut_t(i), g.a1) == g.a1) stab.push_back(aut_t(i));
    std::vector<GammaFunction> expanded;
    expanded.reserve(out.gfs.size() * stab.size());
    for (const GammaFunction& f : out.gfs)
      for (aut_t s : stab) expanded.push_back(conjugate_gf(a, f, s));
    out.gfs = std::move(expanded);
  }
  std::sort(out.gfs.begin(), out.gfs.end());
  out.gfs.erase(std::unique(out.gfs.begin(), out.gfs.end()), out.gfs.end());
  return out;
}

// All relative gamma functions on a subgroup S (values still in Aut(G)),
// optionally with forced values; used by the appendix-lemma tests.
inline std::vector<PartialGamma> enumerate_rgfs(
    const AutGroup& a, const Subgroup& s,
    const std::vector<std::pair<elem_t, aut_t>>& seeds = {}) {
  const GroupTable& g = *a.g;
  std::vector<char> domain(g.n(), 0);
  for (elem_t x : s.members) domain[x] = 1;
  if (!domain[g.id()]) throw precondition_error("enumerate_rgfs: subgroup without identity");
  std::vector<elem_t> order;
  for (elem_t x : s.members)
    if (x != g.id()) order.push_back(x);

  std::atomic<long> nodes{0};
  detail::DiffTable dtab(a);
  detail::DfsState st(a, dtab, order, domain, &nodes, 0, 0);
  for (auto& [x, v] : seeds)
    if (!st.seed(x, v)) return {};
  // same search, but collect partial maps on S instead of total gammas
  std::vector<PartialGamma> out;
  std::function<void()> rec = [&]() {
    size_t fsave = st.frontier;
    int next = st.next_unassigned();
    if (next < 0) {
      PartialGamma f;
      f.vals.assign(g.n(), kNoAut);
      for (elem_t x : s.members) f.vals[x] = st.vals[x];
      out.push_back(std::move(f));
      st.frontier = fsave;
      return;
    }
    for (size_t v = 0; v < a.size(); ++v) {
      size_t mark = st.assigned.size();
      st.vals[next] = aut_t(v);
      st.assigned.push_back(elem_t(next));
      if (st.propagate(mark)) rec();
      st.undo_to(mark);
      st.frontier = fsave;
    }
  };
  rec();
  std::sort(out.begin(), out.end(),
            [](const PartialGamma& x, const PartialGamma& y) { return x.vals < y.vals; });
  return out;
}

}  // namespace p2q

#endif  // P2Q_ENUMERATE_HPP_
