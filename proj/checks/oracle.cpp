#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tropbn::checks {

long FiniteGraph::valence(std::size_t v) const { return std::accumulate(mult[v].begin(), mult[v].end(), 0L); }

FiniteGraph midpoint_subdivision(const TropicalCurve& curve) {
  std::size_t n = curve.num_vertices(), m = curve.num_edges();
  FiniteGraph g{std::vector<std::vector<long>>(n + m, std::vector<long>(n + m, 0))};
  for (std::size_t i = 0; i < m; ++i) {
    const auto& e = curve.edge(EdgeId{i});
    for (auto v : {e.tail.value, e.head.value}) {
      ++g.mult[v][n + i];
      ++g.mult[n + i][v];
    }
  }
  return g;
}

bool greedy_effective(const FiniteGraph& g, std::vector<long> d) {
  std::vector<bool> borrowed(g.size(), false);
  std::size_t count = 0;
  while (true) {
    auto it = std::find_if(d.begin(), d.end(), [](long x) { return x < 0; });
    if (it == d.end()) return true;
    auto v = static_cast<std::size_t>(it - d.begin());
    if (!borrowed[v]) {
      borrowed[v] = true;
      if (++count == g.size()) return false;
    }
    d[v] += g.valence(v);
    for (std::size_t u = 0; u < g.size(); ++u) d[u] -= g.mult[v][u];
  }
}

namespace {

// Calls visit on every effective chip vector of the given degree; stops when visit returns false.
template <typename Visit>
bool for_each_effective(std::size_t n, long degree, std::vector<long>& e, std::size_t from, Visit& visit) {
  if (degree == 0) return visit(e);
  for (std::size_t v = from; v < n; ++v) {
    ++e[v];
    bool go = for_each_effective(n, degree - 1, e, v, visit);
    --e[v];
    if (!go) return false;
  }
  return true;
}

}  // namespace

int brute_force_rank(const FiniteGraph& g, const std::vector<long>& d) {
  long degree = std::accumulate(d.begin(), d.end(), 0L);
  if (degree < 0 || !greedy_effective(g, d)) return -1;
  for (long k = 1; k <= degree; ++k) {
    std::vector<long> e(g.size(), 0);
    auto visit = [&](const std::vector<long>& ev) {
      std::vector<long> diff(d);
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= ev[i];
      return greedy_effective(g, diff);
    };
    if (!for_each_effective(g.size(), k, e, 0, visit)) return static_cast<int>(k - 1);
  }
  return static_cast<int>(degree);
}

std::vector<long> chip_vector(const TropicalCurve& curve, const Divisor& d) {
  std::vector<long> out(curve.num_vertices() + curve.num_edges(), 0);
  for (const auto& [p, m] : d.chips()) out.at(p.vertex().value) += m;
  return out;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList canonical(const EdgeList& edges, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  do {
    EdgeList mapped;
    for (auto [a, b] : edges) {
      int x = perm[a], y = perm[b];
      mapped.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected(const EdgeList& edges, int n) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = n;
  for (auto [a, b] : edges)
    if (int x = find(a), y = find(b); x != y) {
      parent[x] = y;
      --parts;
    }
  return parts == 1;
}

void extend(const std::vector<std::pair<int, int>>& slots, std::size_t from, int left, EdgeList& current, int n,
            std::set<EdgeList>& seen) {
  if (connected(current, n)) seen.insert(canonical(current, n));
  if (left == 0) return;
  for (std::size_t i = from; i < slots.size(); ++i) {
    current.push_back(slots[i]);
    extend(slots, i, left - 1, current, n, seen);
    current.pop_back();
  }
}

}  // namespace

std::vector<TropicalCurve> small_graphs(int max_vertices, int max_edges) {
  std::vector<TropicalCurve> out;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) slots.emplace_back(a, b);
    std::set<EdgeList> seen;
    EdgeList current;
    extend(slots, 0, max_edges, current, n, seen);
    for (const auto& edges : seen) {
      std::vector<Vertex> vertices;
      for (int i = 0; i < n; ++i) vertices.push_back({"v" + std::to_string(i), 0});
      std::vector<Edge> list;
      for (std::size_t i = 0; i < edges.size(); ++i)
        list.push_back({"e" + std::to_string(i), VertexId{static_cast<std::size_t>(edges[i].first)},
                        VertexId{static_cast<std::size_t>(edges[i].second)}, Rational(1)});
      out.emplace_back(std::move(vertices), std::move(list));
    }
  }
  return out;
}

}  // namespace tropbn::checks
