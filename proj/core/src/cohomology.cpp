#include "coeq/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <sstream>

namespace coeq {

const char* class_verdict_name(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::Positive: return "Positive";
    case ClassVerdict::NotPositive: return "NotPositive";
    case ClassVerdict::OrderUnit: return "OrderUnit";
    case ClassVerdict::NotOrderUnit: return "NotOrderUnit";
    case ClassVerdict::Coboundary: return "Coboundary";
    case ClassVerdict::NotCoboundary: return "NotCoboundary";
  }
  return "?";
}

std::string ClassDecision::to_string() const {
  std::ostringstream out;
  out << class_verdict_name(verdict);
  if (witness_orbit) {
    out << ", orbit " << witness_orbit->to_string() << " with sum "
        << witness_sum;
  }
  if (cycle_mean) {
    out << ", min cycle mean " << coeq::to_string(*cycle_mean);
    if (achieving_cycle) out << " on cycle " << achieving_cycle->to_string();
  }
  if (potential) out << ", potential " << potential->to_string();
  return out.str();
}

namespace {

// The k-block graph of f: vertices are the admissible k-words (k = max(depth,
// 1)), edges follow the overlap rule, and each edge carries the value of f at
// its source block.  Cycles in this graph are exactly the periodic orbits of
// the shift, with cycle weight = orbit sum.
struct BlockGraph {
  HigherBlock hb;
  CylFn f_ext;                          // f at depth k
  int V;                                // number of blocks
  std::vector<std::pair<int, int>> edges;  // (i, j), 0-based block indices
  std::vector<long long> weight;           // weight of edges[e] = f(block i)
  std::vector<std::vector<int>> succ;      // successor lists

  long long vertex_weight(int i) const {
    return f_ext.table().at(hb.symbol_words[i]);
  }
};

BlockGraph block_graph(const CylFn& f) {
  int k = std::max(f.depth(), 1);
  BlockGraph g{higher_block(f.space(), k), extend(f, k), 0, {}, {}, {}};
  g.V = g.hb.space.alphabet_size();
  g.succ.resize(g.V);
  for (int i = 0; i < g.V; ++i) {
    for (int j = 0; j < g.V; ++j) {
      if (g.hb.space.entry(i + 1, j + 1)) {
        g.edges.emplace_back(i, j);
        g.weight.push_back(g.vertex_weight(i));
        g.succ[i].push_back(j);
      }
    }
  }
  return g;
}

// First orbit in (period, lex) order, up to the simple-cycle bound |B_k|,
// whose f-sum violates pred.  Simple cycles generate all cycle sums over Z,
// so if any orbit violates a linear condition, one within the bound does.
std::optional<std::pair<Orbit, long long>> first_violating_orbit(
    const CylFn& f, int period_bound,
    const std::function<bool(long long)>& violates) {
  for (const Orbit& gamma : periodic_orbits_up_to(f.space(), period_bound)) {
    long long s = orbit_sum(f, gamma);
    if (violates(s)) return std::make_pair(gamma, s);
  }
  return std::nullopt;
}

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

}  // namespace

ClassDecision is_positive_class(const CylFn& f) {
  BlockGraph g = block_graph(f);
  // Bellman-Ford from a virtual source (all distances 0): after V rounds the
  // distances are stable iff no negative cycle exists.
  std::vector<long long> dist(g.V, 0);
  for (int round = 0; round < g.V; ++round) {
    bool changed = false;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [i, j] = g.edges[e];
      if (dist[i] + g.weight[e] < dist[j]) {
        dist[j] = dist[i] + g.weight[e];
        changed = true;
      }
    }
    if (!changed) {
      ClassDecision d{ClassVerdict::Positive};
      return d;
    }
  }
  // Still relaxing after V rounds: some orbit has negative sum; report the
  // first one in canonical order (a violating simple cycle has period <= V).
  auto witness = first_violating_orbit(f, g.V, [](long long s) { return s < 0; });
  if (!witness) {
    raise(ErrorCode::PreconditionFailed,
          "internal inconsistency: negative cycle detected but no orbit found");
  }
  ClassDecision d{ClassVerdict::NotPositive};
  d.witness_orbit = witness->first;
  d.witness_sum = witness->second;
  return d;
}

CycleMean min_cycle_mean(const CylFn& f) {
  BlockGraph g = block_graph(f);
  int V = g.V;
  // Karp: d[k][v] = least weight of a walk with exactly k edges from vertex 0
  // (the graph is strongly connected, so the choice of source is irrelevant).
  std::vector<std::vector<long long>> d(V + 1,
                                        std::vector<long long>(V, kInf));
  d[0][0] = 0;
  for (int k = 1; k <= V; ++k) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [i, j] = g.edges[e];
      if (d[k - 1][i] == kInf) continue;
      d[k][j] = std::min(d[k][j], d[k - 1][i] + g.weight[e]);
    }
  }
  bool have = false;
  Rational lambda;
  for (int v = 0; v < V; ++v) {
    if (d[V][v] == kInf) continue;
    bool have_v = false;
    Rational worst;
    for (int k = 0; k < V; ++k) {
      if (d[k][v] == kInf) continue;
      Rational ratio(BigInt(d[V][v] - d[k][v]), BigInt(V - k));
      if (!have_v || ratio > worst) {
        worst = ratio;
        have_v = true;
      }
    }
    if (have_v && (!have || worst < lambda)) {
      lambda = worst;
      have = true;
    }
  }
  if (!have) {
    raise(ErrorCode::PreconditionFailed, "internal inconsistency in Karp");
  }
  // Recover an achieving cycle: after subtracting lambda from every edge all
  // cycles are >= 0 and minimum-mean cycles become zero cycles.  Compute
  // potentials, keep the tight edges (pot[i] + w - lambda == pot[j]); every
  // cycle inside the tight subgraph has mean exactly lambda, and at least one
  // exists.  DFS in vertex order makes the choice deterministic.
  std::vector<Rational> pot(V, Rational(0));
  for (int round = 0; round < V; ++round) {
    bool changed = false;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [i, j] = g.edges[e];
      Rational cand = pot[i] + Rational(g.weight[e]) - lambda;
      if (cand < pot[j]) {
        pot[j] = cand;
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<std::vector<int>> tight(V);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [i, j] = g.edges[e];
    if (pot[i] + Rational(g.weight[e]) - lambda == pot[j]) {
      tight[i].push_back(j);
    }
  }
  // Iterative DFS for a cycle in the tight subgraph.
  std::vector<int> color(V, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<int> on_path;
  std::vector<int> cycle_vertices;
  std::function<bool(int)> dfs = [&](int v) -> bool {
    color[v] = 1;
    on_path.push_back(v);
    for (int w : tight[v]) {
      if (color[w] == 1) {
        auto it = std::find(on_path.begin(), on_path.end(), w);
        cycle_vertices.assign(it, on_path.end());
        return true;
      }
      if (color[w] == 0 && dfs(w)) return true;
    }
    color[v] = 2;
    on_path.pop_back();
    return false;
  };
  for (int v = 0; v < V && cycle_vertices.empty(); ++v) {
    if (color[v] == 0) dfs(v);
  }
  if (cycle_vertices.empty()) {
    raise(ErrorCode::PreconditionFailed,
          "internal inconsistency: no tight cycle found");
  }
  Word symbols;
  for (int v : cycle_vertices) symbols.push_back(g.hb.symbol_words[v][0]);
  int p = static_cast<int>(symbols.size());
  for (int dlen = 1; dlen <= p; ++dlen) {
    if (p % dlen) continue;
    bool repeats = true;
    for (int i = dlen; i < p && repeats; ++i) repeats = (symbols[i] == symbols[i - dlen]);
    if (repeats) {
      symbols.resize(dlen);
      break;
    }
  }
  Orbit cycle{least_rotation(symbols)};
  if (Rational(orbit_sum(f, cycle)) != lambda * cycle.period()) {
    raise(ErrorCode::PreconditionFailed,
          "internal inconsistency: recovered cycle does not attain the mean");
  }
  return CycleMean{lambda, cycle};
}

ClassDecision is_order_unit(const CylFn& f) {
  CycleMean cm = min_cycle_mean(f);
  ClassDecision d{cm.mean > 0 ? ClassVerdict::OrderUnit
                              : ClassVerdict::NotOrderUnit};
  d.cycle_mean = cm.mean;
  d.achieving_cycle = cm.cycle;
  if (d.verdict == ClassVerdict::NotOrderUnit) {
    d.witness_orbit = cm.cycle;
    d.witness_sum = orbit_sum(f, cm.cycle);
  }
  return d;
}

ClassDecision coboundary_witness(const CylFn& f) {
  BlockGraph g = block_graph(f);
  // Spanning-tree potential: xi(root) = 0 and xi(j) = xi(i) - f(i) along BFS
  // tree edges; f is a coboundary iff this relation holds on every edge.
  std::vector<long long> xi(g.V, 0);
  std::vector<char> seen(g.V, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j : g.succ[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      xi[j] = xi[i] - g.vertex_weight(i);
      queue.push_back(j);
    }
  }
  bool consistent = true;
  for (std::size_t e = 0; e < g.edges.size() && consistent; ++e) {
    auto [i, j] = g.edges[e];
    consistent = (g.vertex_weight(i) == xi[i] - xi[j]);
  }
  if (!consistent) {
    auto witness =
        first_violating_orbit(f, g.V, [](long long s) { return s != 0; });
    if (!witness) {
      raise(ErrorCode::PreconditionFailed,
            "internal inconsistency: inconsistent potential but all orbit sums "
            "vanish");
    }
    ClassDecision d{ClassVerdict::NotCoboundary};
    d.witness_orbit = witness->first;
    d.witness_sum = witness->second;
    return d;
  }
  std::map<Word, long long> table;
  for (int i = 0; i < g.V; ++i) table[g.hb.symbol_words[i]] = xi[i];
  CylFn potential =
      compressed(CylFn(f.space(), std::max(f.depth(), 1), std::move(table)));
  // Exhaustive re-check of f = xi - xi o sigma on words of length depth+1.
  CylFn reconstructed = sub(potential, compose_shift(potential));
  if (!equal_as_functions(reconstructed, f)) {
    raise(ErrorCode::PreconditionFailed,
          "internal inconsistency: potential fails verification");
  }
  ClassDecision d{ClassVerdict::Coboundary};
  d.potential = potential;
  return d;
}

ClassDecision classes_equal(const CylFn& f, const CylFn& g) {
  return coboundary_witness(sub(f, g));
}

}  // namespace coeq
