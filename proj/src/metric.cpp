#include "lr/metric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>

#include "lr/error.hpp"

namespace lr {

std::string format_quadruple(const Quadruple& q) {
  return "(" + std::to_string(q[0] + 1) + "," + std::to_string(q[1] + 1) + "," +
         std::to_string(q[2] + 1) + "," + std::to_string(q[3] + 1) + ")";
}

RealMetric log_metric(const RealMatrix& m) {
  RealMetric d(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) {
      require(m(i, j) > 0, ErrorCode::Domain, "log metric needs positive off-diagonal entries",
              pair_key(i, j));
      d.set(i, j, std::log(m(i, j)));
    }
  return d;
}

namespace {

/// Calls f(i, j, k, l) for every 4-multiset i <= j <= k <= l.
template <typename F>
void for_each_multiset(int n, F&& f) {
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k)
        for (int l = k; l < n; ++l)
          if (!f(Quadruple{i, j, k, l})) return;
}

/// The three pairings of a quadruple. Index 0 pairs (ij|kl), 1 (ik|jl),
/// 2 (il|jk); the quadruple reordered so that a given pairing comes first.
Quadruple with_first_pairing(const Quadruple& q, int which) {
  if (which == 0) return q;
  if (which == 1) return Quadruple{q[0], q[2], q[1], q[3]};
  return Quadruple{q[0], q[3], q[1], q[2]};
}

template <typename T, typename M>
std::array<T, 3> pair_products(const M& m, const Quadruple& q) {
  return {m(q[0], q[1]) * m(q[2], q[3]), m(q[0], q[2]) * m(q[1], q[3]),
          m(q[0], q[3]) * m(q[1], q[2])};
}

template <typename M>
void check_entries(const M& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = i; j < m.size(); ++j)
      require(m(i, j) >= 0, ErrorCode::Domain, "T_p membership needs nonnegative entries",
              "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

/// Index of a strict maximum, or -1 when the maximum is attained twice.
template <typename T, typename Eq>
int strict_max(const std::array<T, 3>& v, Eq&& nearly_equal) {
  int top = 0;
  for (int r = 1; r < 3; ++r)
    if (v[r] > v[top]) top = r;
  for (int r = 0; r < 3; ++r)
    if (r != top && nearly_equal(v[r], v[top])) return -1;
  return top;
}

}  // namespace

TpMembership in_delta_tp(const RealMatrix& m, double p) {
  require(p >= 0 && std::isfinite(p), ErrorCode::Domain, "p must be a nonnegative number");
  check_entries(m);
  TpMembership out;
  constexpr double tol = 1e-9;
  for_each_multiset(m.size(), [&](const Quadruple& q) {
    auto v = pair_products<double>(m, q);
    if (p == 0) {
      int top = strict_max(v, [](double a, double b) { return std::abs(a - b) <= tol * std::max(a, b); });
      if (top >= 0) out.violation = with_first_pairing(q, top);
    } else {
      double big = std::max({v[0], v[1], v[2]});
      if (big == 0) return true;
      std::array<double, 3> r;
      for (int k = 0; k < 3; ++k) r[k] = std::pow(v[k] / big, 1.0 / p);
      for (int k = 0; k < 3 && !out.violation; ++k)
        if (r[k] > (r[(k + 1) % 3] + r[(k + 2) % 3]) * (1 + tol)) out.violation = with_first_pairing(q, k);
    }
    out.member = !out.violation;
    return out.member;
  });
  return out;
}

TpMembership in_delta_tp(const RatMatrix& m, const Rational& p) {
  require(p >= 0, ErrorCode::Domain, "p must be nonnegative", format_rational(p));
  check_entries(m);
  const bool square = p == 2;
  const bool reciprocal = p > 0 && p.get_num() == 1 && p.get_den().fits_slong_p();
  if (p != 0 && !square && !reciprocal) return in_delta_tp(to_real(m), p.get_d());
  const long power = reciprocal ? p.get_den().get_si() : 0;

  TpMembership out;
  for_each_multiset(m.size(), [&](const Quadruple& q) {
    auto v = pair_products<Rational>(m, q);
    if (p == 0) {
      int top = strict_max(v, [](const Rational& a, const Rational& b) { return a == b; });
      if (top >= 0) out.violation = with_first_pairing(q, top);
    } else {
      for (int k = 0; k < 3 && !out.violation; ++k) {
        const Rational& x = v[k];
        const Rational& y = v[(k + 1) % 3];
        const Rational& z = v[(k + 2) % 3];
        bool ok;
        if (square) {
          // sqrt(x) <= sqrt(y) + sqrt(z)  <=>  x - y - z <= 2 sqrt(yz)
          Rational s = x - y - z;
          ok = s <= 0 || s * s <= 4 * y * z;
        } else {
          ok = pow_int(x, power) <= pow_int(y, power) + pow_int(z, power);
        }
        if (!ok) out.violation = with_first_pairing(q, k);
      }
    }
    out.member = !out.violation;
    return out.member;
  });
  return out;
}

namespace {

template <typename T>
std::array<T, 3> pair_sums(const LogMetric<T>& d, const Quadruple& q) {
  return {d(q[0], q[1]) + d(q[2], q[3]), d(q[0], q[2]) + d(q[1], q[3]),
          d(q[0], q[3]) + d(q[1], q[2])};
}

/// (largest - second largest) of the three pair sums.
template <typename T>
T top_gap(std::array<T, 3> s) {
  std::sort(s.begin(), s.end());
  return s[2] - s[1];
}

template <typename T>
T delta_impl(const LogMetric<T>& d) {
  T best(0);
  for_each_multiset(d.n, [&](const Quadruple& q) {
    T g = top_gap(pair_sums(d, q));
    if (g > best) best = g;
    return true;
  });
  return best / 2;
}

template <typename T>
FourPointReport four_point_impl(const LogMetric<T>& d, const T& slack) {
  FourPointReport out;
  for_each_multiset(d.n, [&](const Quadruple& q) {
    auto s = pair_sums(d, q);
    if (top_gap(s) > slack) {
      int top = static_cast<int>(std::max_element(s.begin(), s.end()) - s.begin());
      out.holds = false;
      out.violation = with_first_pairing(q, top);
      return false;
    }
    return true;
  });
  return out;
}

template <typename T>
bool is_metric_impl(const LogMetric<T>& d) {
  for (const auto& x : d.d)
    if (x < 0) return false;
  for (int i = 0; i < d.n; ++i)
    for (int j = i + 1; j < d.n; ++j)
      for (int k = 0; k < d.n; ++k)
        if (d(i, j) > d(i, k) + d(k, j)) return false;
  return true;
}

template <typename T>
LogMetric<T> closure_impl(const LogMetric<T>& d) {
  const int n = d.n;
  std::vector<std::vector<T>> a(n, std::vector<T>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = d(i, j);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a[i][k] + a[k][j] < a[i][j]) a[i][j] = a[i][k] + a[k][j];
  LogMetric<T> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.set(i, j, a[i][j]);
  return out;
}

int ceil_log2(int n) {
  int c = 0;
  while ((1 << c) < n) ++c;
  return c;
}

template <typename T>
TreeApproximation<T> gromov_impl(const LogMetric<T>& d, int w) {
  const int n = d.n;
  require(w >= 0 && w < n, ErrorCode::Domain, "basepoint out of range",
          std::to_string(w + 1) + " not in [1," + std::to_string(n) + "]");
  for (std::size_t k = 0; k < d.d.size(); ++k)
    require(d.d[k] >= 0, ErrorCode::Domain, "distances must be nonnegative");

  TreeApproximation<T> out;
  out.delta = delta_impl(d);
  out.bound = 2 * out.delta * ceil_log2(n);
  LogMetric<T> base = d;
  if (!is_metric_impl(d)) {
    base = closure_impl(d);
    out.closure_applied = true;
    for (std::size_t k = 0; k < d.d.size(); ++k)
      if (d.d[k] - base.d[k] > out.closure_gap) out.closure_gap = d.d[k] - base.d[k];
  }

  // Gromov products at w.
  std::vector<std::vector<T>> g(n, std::vector<T>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g[x][y] = (base(x, w) + base(y, w) - base(x, y)) / 2;

  // Maximum spanning tree (Prim), then bottleneck values along tree paths.
  std::vector<int> parent(n, -1);
  std::vector<bool> in_tree(n, false);
  std::vector<T> key(n);
  std::vector<bool> has_key(n, false);
  has_key[0] = true;
  for (int step = 0; step < n; ++step) {
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (!in_tree[v] && has_key[v] && (u < 0 || key[v] > key[u])) u = v;
    in_tree[u] = true;
    for (int v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      if (!has_key[v] || g[u][v] > key[v]) {
        key[v] = g[u][v];
        has_key[v] = true;
        parent[v] = u;
      }
    }
  }
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v)
    if (parent[v] >= 0) {
      adj[v].push_back(parent[v]);
      adj[parent[v]].push_back(v);
    }

  out.metric = LogMetric<T>(n);
  for (int s = 0; s < n; ++s) {
    std::vector<T> bottleneck(n);
    std::vector<bool> seen(n, false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        bottleneck[v] = u == s ? g[u][v] : std::min(bottleneck[u], g[u][v]);
        stack.push_back(v);
      }
    }
    for (int t = s + 1; t < n; ++t)
      out.metric.set(s, t, base(s, w) + base(t, w) - 2 * bottleneck[t]);
  }
  for (std::size_t k = 0; k < d.d.size(); ++k)
    if (d.d[k] - out.metric.d[k] > out.max_gap) out.max_gap = d.d[k] - out.metric.d[k];
  return out;
}

}  // namespace

Rational hyperbolicity_delta(const RatMetric& d) { return delta_impl(d); }
double hyperbolicity_delta(const RealMetric& d) { return delta_impl(d); }

FourPointReport four_point_check(const RatMetric& d) { return four_point_impl(d, Rational(0)); }
FourPointReport four_point_check(const RealMetric& d) { return four_point_impl(d, 1e-9); }

bool is_metric(const RatMetric& d) { return is_metric_impl(d); }
bool is_metric(const RealMetric& d) { return is_metric_impl(d); }

RatMetric metric_closure(const RatMetric& d) { return closure_impl(d); }
RealMetric metric_closure(const RealMetric& d) { return closure_impl(d); }

TreeApproximation<Rational> gromov_tree_approx(const RatMetric& d, int basepoint) {
  return gromov_impl(d, basepoint);
}
TreeApproximation<double> gromov_tree_approx(const RealMetric& d, int basepoint) {
  return gromov_impl(d, basepoint);
}

namespace {

using Adjacency = std::vector<std::vector<std::pair<int, std::size_t>>>;  // (neighbor, edge)

Adjacency adjacency(const PhyloTree& t) {
  Adjacency adj(t.vertex_count);
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    adj[t.edges[e].u].emplace_back(t.edges[e].v, e);
    adj[t.edges[e].v].emplace_back(t.edges[e].u, e);
  }
  return adj;
}

/// Vertices reachable from `start` without crossing edge `skip`.
std::vector<bool> reachable(const Adjacency& adj, int start, std::size_t skip) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [v, e] : adj[u])
      if (e != skip && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return seen;
}

}  // namespace

void validate(const PhyloTree& t) {
  require(t.vertex_count >= 1, ErrorCode::Structural, "tree has no vertices");
  require(!t.label_vertex.empty(), ErrorCode::Structural, "tree has no labels");
  require(t.edges.size() + 1 == static_cast<std::size_t>(t.vertex_count), ErrorCode::Structural,
          "a tree needs exactly one edge fewer than vertices");
  std::vector<int> labels(t.vertex_count, 0);
  for (int v : t.label_vertex) {
    require(v >= 0 && v < t.vertex_count, ErrorCode::Structural, "label on a missing vertex");
    ++labels[v];
  }
  std::vector<int> degree(t.vertex_count, 0);
  for (const auto& e : t.edges) {
    require(e.u >= 0 && e.u < t.vertex_count && e.v >= 0 && e.v < t.vertex_count && e.u != e.v,
            ErrorCode::Structural, "edge endpoint out of range");
    require(e.len >= 0, ErrorCode::Structural, "edge lengths must be nonnegative");
    ++degree[e.u];
    ++degree[e.v];
  }
  auto seen = reachable(adjacency(t), 0, t.edges.size());
  require(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }), ErrorCode::Structural,
          "tree is not connected");
  for (int v = 0; v < t.vertex_count; ++v)
    require(labels[v] > 0 || degree[v] >= 3, ErrorCode::Structural,
            "unlabeled vertex of degree below 3", "vertex " + std::to_string(v));
}

std::vector<std::size_t> path_edges(const PhyloTree& t, int from, int to) {
  auto adj = adjacency(t);
  std::vector<int> parent_edge(t.vertex_count, -1);
  std::vector<bool> seen(t.vertex_count, false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [v, e] : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        parent_edge[v] = static_cast<int>(e);
        stack.push_back(v);
      }
  }
  require(seen[to], ErrorCode::Structural, "vertices are not connected");
  std::vector<std::size_t> path;
  for (int v = to; v != from;) {
    auto e = static_cast<std::size_t>(parent_edge[v]);
    path.push_back(e);
    v = t.edges[e].u == v ? t.edges[e].v : t.edges[e].u;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

RatMetric tree_metric(const PhyloTree& t) {
  validate(t);
  const int n = t.leaf_count();
  auto adj = adjacency(t);
  RatMetric d(n);
  for (int a = 0; a < n; ++a) {
    std::vector<Rational> dist(t.vertex_count);
    std::vector<bool> seen(t.vertex_count, false);
    std::vector<int> stack{t.label_vertex[a]};
    seen[t.label_vertex[a]] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [v, e] : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          dist[v] = dist[u] + t.edges[e].len;
          stack.push_back(v);
        }
    }
    for (int b = a + 1; b < n; ++b) d.set(a, b, dist[t.label_vertex[b]]);
  }
  return d;
}

PhyloTree canonicalize(const PhyloTree& t) {
  validate(t);
  const int n = t.leaf_count();

  // Contract zero-length edges.
  std::vector<int> rep(t.vertex_count);
  std::iota(rep.begin(), rep.end(), 0);
  std::function<int(int)> find = [&](int v) { return rep[v] == v ? v : rep[v] = find(rep[v]); };
  for (const auto& e : t.edges)
    if (e.len == 0) rep[find(e.u)] = find(e.v);

  // Working graph on representatives: adjacency with lengths, edges removable.
  struct WEdge {
    int u, v;
    Rational len;
    bool alive;
  };
  std::vector<WEdge> edges;
  for (const auto& e : t.edges)
    if (e.len != 0) edges.push_back({find(e.u), find(e.v), e.len, true});
  std::vector<int> labels_at(t.vertex_count, 0);
  std::vector<int> label_vertex(n);
  for (int a = 0; a < n; ++a) {
    label_vertex[a] = find(t.label_vertex[a]);
    ++labels_at[label_vertex[a]];
  }
  std::vector<bool> alive(t.vertex_count, false);
  for (int v = 0; v < t.vertex_count; ++v) alive[find(v)] = true;

  auto incident = [&](int v) {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].alive && (edges[e].u == v || edges[e].v == v)) out.push_back(e);
    return out;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < t.vertex_count; ++v) {
      if (!alive[v] || labels_at[v] > 0) continue;
      auto inc = incident(v);
      if (inc.size() == 1) {
        edges[inc[0]].alive = false;
        alive[v] = false;
        changed = true;
      } else if (inc.size() == 2) {
        WEdge& a = edges[inc[0]];
        WEdge& b = edges[inc[1]];
        int x = a.u == v ? a.v : a.u;
        int y = b.u == v ? b.v : b.u;
        a = WEdge{x, y, a.len + b.len, true};
        b.alive = false;
        alive[v] = false;
        changed = true;
      } else if (inc.empty()) {
        alive[v] = false;
        changed = true;
      }
    }
  }

  // Root at label 0's vertex; order children by the smallest label below them.
  Adjacency adj(t.vertex_count);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges[e].alive) {
      adj[edges[e].u].emplace_back(edges[e].v, e);
      adj[edges[e].v].emplace_back(edges[e].u, e);
    }
  std::vector<int> min_label(t.vertex_count, n);
  for (int a = n - 1; a >= 0; --a) min_label[label_vertex[a]] = a;
  const int root = label_vertex[0];
  std::vector<int> subtree_min(t.vertex_count, n);
  std::function<int(int, int)> fill = [&](int u, int from) {
    int m = min_label[u];
    for (auto [v, e] : adj[u])
      if (v != from) m = std::min(m, fill(v, u));
    return subtree_min[u] = m;
  };
  fill(root, -1);

  std::vector<int> new_id(t.vertex_count, -1);
  int next = 0;
  for (int a = 0; a < n; ++a)
    if (new_id[label_vertex[a]] < 0) new_id[label_vertex[a]] = next++;
  std::queue<std::pair<int, int>> bfs;
  bfs.push({root, -1});
  while (!bfs.empty()) {
    auto [u, from] = bfs.front();
    bfs.pop();
    std::vector<int> children;
    for (auto [v, e] : adj[u])
      if (v != from) children.push_back(v);
    std::sort(children.begin(), children.end(),
              [&](int x, int y) { return subtree_min[x] < subtree_min[y]; });
    for (int v : children) {
      if (new_id[v] < 0) new_id[v] = next++;
      bfs.push({v, u});
    }
  }

  PhyloTree out;
  out.vertex_count = next;
  out.label_vertex.resize(n);
  for (int a = 0; a < n; ++a) out.label_vertex[a] = new_id[label_vertex[a]];
  for (const auto& e : edges)
    if (e.alive) {
      int u = new_id[e.u], v = new_id[e.v];
      out.edges.push_back({std::min(u, v), std::max(u, v), e.len});
    }
  std::sort(out.edges.begin(), out.edges.end(), [](const auto& a, const auto& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  return out;
}

PhyloTree tree_reconstruct(const RatMetric& d) {
  auto check = four_point_check(d);
  if (!check.holds)
    fail(ErrorCode::Domain, "metric violates the four-point condition",
         format_quadruple(*check.violation));
  const int n = d.n;
  PhyloTree t;
  t.vertex_count = 1;
  t.label_vertex.assign(n, 0);
  for (int k = 1; k < n; ++k) {
    // Attachment point: on the path from label 0 to the label j maximizing
    // the Gromov product (k|j)_0, at that distance from label 0.
    int best_j = 0;
    Rational best = 0;
    for (int j = 1; j < k; ++j) {
      Rational gp = (d(0, k) + d(0, j) - d(j, k)) / 2;
      if (gp > best) {
        best = gp;
        best_j = j;
      }
    }
    int cur = t.label_vertex[0];
    int point = -1;
    Rational travelled = 0;
    for (std::size_t e : path_edges(t, cur, t.label_vertex[best_j])) {
      if (travelled == best) {
        point = cur;
        break;
      }
      PhyloTree::Edge edge = t.edges[e];
      int other = edge.u == cur ? edge.v : edge.u;
      if (travelled + edge.len > best) {
        int mid = t.vertex_count++;
        Rational head = best - travelled;
        t.edges[e] = PhyloTree::Edge{cur, mid, head};
        t.edges.push_back(PhyloTree::Edge{mid, other, edge.len - head});
        point = mid;
        break;
      }
      travelled += edge.len;
      cur = other;
    }
    if (point < 0) point = cur;
    Rational pendant = d(0, k) - best;
    if (pendant == 0) {
      t.label_vertex[k] = point;
    } else {
      int leaf = t.vertex_count++;
      t.edges.push_back(PhyloTree::Edge{point, leaf, pendant});
      t.label_vertex[k] = leaf;
    }
  }
  return canonicalize(t);
}

std::vector<CutTerm> cut_decomposition(const PhyloTree& t, int root_leaf) {
  validate(t);
  const int n = t.leaf_count();
  require(root_leaf >= 0 && root_leaf < n, ErrorCode::Domain, "root leaf out of range");
  require(n <= kMaxSubsetSize, ErrorCode::Capability, "cut decomposition supports n <= 20");
  auto adj = adjacency(t);
  std::vector<CutTerm> terms;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if (t.edges[e].len == 0) continue;
    auto side = reachable(adj, t.label_vertex[root_leaf], e);
    Subset s = 0;
    for (int a = 0; a < n; ++a)
      if (side[t.label_vertex[a]]) s |= Subset{1} << a;
    s = complement_normalized(n, s);
    if (s != 0) terms.push_back(CutTerm{s, t.edges[e].len});
  }
  return terms;
}

RatMetric cut_sum(int n, const std::vector<CutTerm>& terms) {
  RatMetric d(n);
  for (const auto& term : terms)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (contains(term.subset, i) != contains(term.subset, j))
          d.d[pair_index(n, i, j)] += term.weight;
  return d;
}

PhyloTree random_tree(int n, SplitRng& rng, int max_numerator) {
  require(n >= 1, ErrorCode::Domain, "random trees need n >= 1");
  auto length = [&] { return make_rational(rng.uniform_int(0, max_numerator), rng.uniform_int(1, 4)); };
  PhyloTree t;
  t.label_vertex.push_back(0);
  t.vertex_count = 1;
  if (n >= 2) {
    t.vertex_count = 2;
    t.label_vertex.push_back(1);
    t.edges.push_back({0, 1, length()});
  }
  for (int k = 2; k < n; ++k) {
    auto e = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(t.edges.size()) - 1));
    int mid = t.vertex_count++;
    int leaf = t.vertex_count++;
    PhyloTree::Edge old = t.edges[e];
    t.edges[e] = {old.u, mid, length()};
    t.edges.push_back({mid, old.v, length()});
    t.edges.push_back({mid, leaf, length()});
    t.label_vertex.push_back(leaf);
  }
  return canonicalize(t);
}

}  // namespace lr
