#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "knotcob/error.hpp"
#include "knotcob/integer.hpp"

namespace knotcob {

/// An edge traversed in a chosen direction.
struct DirectedEdge {
  int edge = 0;
  bool forward = true;

  DirectedEdge reversed() const { return {edge, !forward}; }
  bool operator==(const DirectedEdge&) const = default;
};

/// A closed walk, stored as its cyclic sequence of directed edges. The corner between
/// consecutive edges is fixed by the two half-edges they meet at.
using EdgePath = std::vector<DirectedEdge>;

/// Ribbon graph. Edge e runs from its tail half-edge 2e to its head half-edge 2e+1;
/// each vertex lists its half-edges in counterclockwise order.
class Fatgraph {
 public:
  Fatgraph() = default;

  /// `ends[e]` = (tail vertex, head vertex); `rotation[v]` = half-edges at v, counterclockwise.
  Fatgraph(int vertex_count, std::vector<std::array<int, 2>> ends, std::vector<std::vector<int>> rotation)
      : ends_(std::move(ends)), rotation_(std::move(rotation)) {
    if (vertex_count < 0 || static_cast<int>(rotation_.size()) != vertex_count)
      throw Error(ErrorCode::InvalidArgument, "rotation system size mismatch");
    const int halves = 2 * edge_count();
    slot_.assign(halves, -1);
    for (int v = 0; v < vertex_count; ++v) {
      for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
        int h = rotation_[v][i];
        if (h < 0 || h >= halves || slot_[h] != -1)
          throw Error(ErrorCode::InvalidArgument, "half-edge listed twice or out of range");
        if (end_vertex(h) != v) throw Error(ErrorCode::InvalidArgument, "half-edge listed at the wrong vertex");
        slot_[h] = i;
      }
    }
    for (int h = 0; h < halves; ++h)
      if (slot_[h] == -1) throw Error(ErrorCode::InvalidArgument, "half-edge missing from the rotation system");
  }

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return static_cast<int>(ends_.size()); }
  int half_edge_count() const { return 2 * edge_count(); }

  static int tail_half(int e) { return 2 * e; }
  static int head_half(int e) { return 2 * e + 1; }
  static int edge_of(int h) { return h / 2; }
  static int opposite(int h) { return h ^ 1; }

  int tail(int e) const { return ends_[e][0]; }
  int head(int e) const { return ends_[e][1]; }
  int end_vertex(int h) const { return ends_[edge_of(h)][h & 1]; }

  const std::vector<int>& rotation(int v) const { return rotation_[v]; }
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
  /// Index of h in the counterclockwise order at its vertex.
  int slot(int h) const { return slot_[h]; }
  /// Next half-edge counterclockwise at the same vertex.
  int next_ccw(int h) const {
    const auto& rot = rotation_[end_vertex(h)];
    return rot[(slot_[h] + 1) % rot.size()];
  }

  /// Half-edge where a directed step leaves its start vertex / enters its end vertex.
  static int departure(DirectedEdge d) { return d.forward ? tail_half(d.edge) : head_half(d.edge); }
  static int arrival(DirectedEdge d) { return d.forward ? head_half(d.edge) : tail_half(d.edge); }
  int start_vertex(DirectedEdge d) const { return end_vertex(departure(d)); }
  int finish_vertex(DirectedEdge d) const { return end_vertex(arrival(d)); }

  /// Throws PathNotOnGraph unless `path` is a nonempty closed walk.
  void check_closed_path(const EdgePath& path) const {
    if (path.empty()) throw Error(ErrorCode::PathNotOnGraph, "empty path");
    for (const DirectedEdge& d : path)
      if (d.edge < 0 || d.edge >= edge_count()) throw Error(ErrorCode::PathNotOnGraph, "edge index out of range");
    for (std::size_t i = 0; i < path.size(); ++i) {
      const DirectedEdge& next = path[(i + 1) % path.size()];
      if (finish_vertex(path[i]) != start_vertex(next))
        throw Error(ErrorCode::PathNotOnGraph, "consecutive edges do not share a vertex");
    }
  }

  /// Number of connected components (isolated vertices count).
  int component_count() const {
    std::vector<int> parent(vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = vertex_count();
    for (const auto& [a, b] : ends_) {
      int ra = find(a), rb = find(b);
      if (ra != rb) {
        parent[ra] = rb;
        --components;
      }
    }
    return components;
  }

  /// One vertex per line: "v: h(e,t|h->w) ..." in counterclockwise order.
  std::string dump() const {
    std::ostringstream os;
    for (int v = 0; v < vertex_count(); ++v) {
      os << v << ":";
      for (int h : rotation_[v])
        os << ' ' << edge_of(h) << (h & 1 ? 'h' : 't') << "->" << end_vertex(opposite(h));
      os << '\n';
    }
    return os.str();
  }

 private:
  std::vector<std::array<int, 2>> ends_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> slot_;
};

struct FaceData {
  std::vector<EdgePath> faces;
  /// face_of[h] = index of the face whose boundary leaves along half-edge h.
  std::vector<int> face_of;
  int genus = 0;
};

/// Traces boundary cycles (h -> next_ccw(opposite(h))) and reads the genus off the
/// Euler characteristic of the capped surface, summed over components.
inline FaceData faces_and_genus(const Fatgraph& fg) {
  FaceData out;
  out.face_of.assign(fg.half_edge_count(), -1);
  for (int start = 0; start < fg.half_edge_count(); ++start) {
    if (out.face_of[start] != -1) continue;
    EdgePath face;
    int h = start;
    do {
      out.face_of[h] = static_cast<int>(out.faces.size());
      face.push_back(DirectedEdge{Fatgraph::edge_of(h), (h & 1) == 0});
      h = fg.next_ccw(Fatgraph::opposite(h));
    } while (h != start);
    out.faces.push_back(std::move(face));
  }
  const Int euler = Int{fg.vertex_count()} - fg.edge_count() + static_cast<Int>(out.faces.size());
  const Int components = fg.component_count();
  if ((2 * components - euler) % 2 != 0 || 2 * components - euler < 0)
    throw Error(ErrorCode::OddEuler, "corrupt rotation system: Euler characteristic is odd");
  out.genus = static_cast<int>((2 * components - euler) / 2);
  return out;
}

/// BFS spanning tree from vertex 0, edges scanned in index order.
struct SpanningTree {
  std::vector<bool> in_tree;            // per edge
  std::vector<DirectedEdge> parent_step;  // per vertex: step from parent into it
  std::vector<int> depth;
};

inline SpanningTree spanning_tree(const Fatgraph& fg) {
  const int n = fg.vertex_count();
  SpanningTree t;
  t.in_tree.assign(fg.edge_count(), false);
  t.parent_step.assign(n, DirectedEdge{-1, true});
  t.depth.assign(n, -1);
  if (n == 0) return t;
  std::vector<std::vector<DirectedEdge>> adj(n);
  for (int e = 0; e < fg.edge_count(); ++e) {
    adj[fg.tail(e)].push_back({e, true});
    adj[fg.head(e)].push_back({e, false});
  }
  std::queue<int> q;
  t.depth[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (DirectedEdge d : adj[v]) {
      int w = fg.finish_vertex(d);
      if (t.depth[w] != -1) continue;
      t.depth[w] = t.depth[v] + 1;
      t.parent_step[w] = d;
      t.in_tree[d.edge] = true;
      q.push(w);
    }
  }
  if (std::any_of(t.depth.begin(), t.depth.end(), [](int d) { return d < 0; }))
    throw Error(ErrorCode::Disconnected, "fatgraph is not connected");
  return t;
}

/// Closed walk: tree path to the tail of `d`, then `d`, then the tree path back,
/// with the part shared by both tree paths cut off.
inline EdgePath fundamental_cycle(const Fatgraph& fg, const SpanningTree& t, DirectedEdge d) {
  int u = fg.start_vertex(d), w = fg.finish_vertex(d);
  std::vector<DirectedEdge> down_u, down_w;  // steps root-ward, collected leaf first
  while (t.depth[u] > t.depth[w]) {
    down_u.push_back(t.parent_step[u]);
    u = fg.start_vertex(t.parent_step[u]);
  }
  while (t.depth[w] > t.depth[u]) {
    down_w.push_back(t.parent_step[w]);
    w = fg.start_vertex(t.parent_step[w]);
  }
  while (u != w) {
    down_u.push_back(t.parent_step[u]);
    u = fg.start_vertex(t.parent_step[u]);
    down_w.push_back(t.parent_step[w]);
    w = fg.start_vertex(t.parent_step[w]);
  }
  EdgePath cycle(down_u.rbegin(), down_u.rend());
  cycle.push_back(d);
  for (const DirectedEdge& s : down_w) cycle.push_back(s.reversed());
  return cycle;
}

struct HomologyBasis {
  SpanningTree tree;
  std::vector<int> non_tree_edges;
  std::vector<EdgePath> cycles;  // cycles[i] runs forward along non_tree_edges[i]
};

/// E - V + 1 fundamental cycles, one per non-tree edge, in edge order.
inline HomologyBasis homology_basis(const Fatgraph& fg) {
  HomologyBasis b;
  b.tree = spanning_tree(fg);
  for (int e = 0; e < fg.edge_count(); ++e) {
    if (b.tree.in_tree[e]) continue;
    b.non_tree_edges.push_back(e);
    b.cycles.push_back(fundamental_cycle(fg, b.tree, DirectedEdge{e, true}));
  }
  return b;
}

/// Algebraic intersection number [a].[b] on the capped surface.
///
/// Each traversal of an edge gets its own lane in the edge band; the lane order seen
/// from the head end is the reverse of the order seen from the tail end. Inside a vertex
/// disk every corner of a path is a chord between two boundary points, and an a-chord
/// crosses a b-chord iff their endpoints interleave. The crossing counts +1 when the
/// counterclockwise order is (a-start, b-start, a-end, b-end).
///
/// `lane_seed` permutes lanes within each band; the result does not depend on it.
inline Int intersect(const Fatgraph& fg, const EdgePath& a, const EdgePath& b, std::uint64_t lane_seed = 0) {
  fg.check_closed_path(a);
  fg.check_closed_path(b);

  // Strand occurrences: index < a.size() for a, then b.
  const std::size_t total = a.size() + b.size();
  auto step = [&](std::size_t k) -> const DirectedEdge& { return k < a.size() ? a[k] : b[k - a.size()]; };

  std::vector<int> lanes_in_edge(fg.edge_count(), 0);
  std::vector<int> lane(total);
  for (std::size_t k = 0; k < total; ++k) lane[k] = lanes_in_edge[step(k).edge]++;
  if (lane_seed != 0) {
    // Deterministic per-edge shuffle: an affine map modulo the lane count.
    std::vector<std::uint64_t> mult(fg.edge_count()), add(fg.edge_count());
    std::uint64_t x = lane_seed;
    auto next = [&x] {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      return x;
    };
    for (int e = 0; e < fg.edge_count(); ++e) {
      mult[e] = next();
      add[e] = next();
    }
    for (std::size_t k = 0; k < total; ++k) {
      const int e = step(k).edge;
      const std::uint64_t n = static_cast<std::uint64_t>(lanes_in_edge[e]);
      std::uint64_t m = mult[e] % n;
      while (std::gcd(m, n) != 1) m = (m + 1) % n;  // n == 1 gives m == 0, and gcd(0,1) == 1
      lane[k] = static_cast<int>((m * static_cast<std::uint64_t>(lane[k]) + add[e]) % n);
    }
  }

  int width = 1;
  for (int c : lanes_in_edge) width = std::max(width, c);

  // Position of strand k where it meets half-edge h, as a counterclockwise key at h's vertex.
  auto key = [&](std::size_t k, int h) -> Int {
    const int e = Fatgraph::edge_of(h);
    const int pos = (h & 1) == 0 ? lane[k] : lanes_in_edge[e] - 1 - lane[k];
    return Int{fg.slot(h)} * width + pos;
  };

  struct Chord {
    Int from, to;
  };
  std::vector<std::vector<Chord>> chords_a(fg.vertex_count()), chords_b(fg.vertex_count());
  auto collect = [&](std::size_t offset, std::size_t len, std::vector<std::vector<Chord>>& out) {
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t in_k = offset + i, out_k = offset + (i + 1) % len;
      const int h_in = Fatgraph::arrival(step(in_k));
      const int h_out = Fatgraph::departure(step(out_k));
      out[fg.end_vertex(h_in)].push_back(Chord{key(in_k, h_in), key(out_k, h_out)});
    }
  };
  collect(0, a.size(), chords_a);
  collect(a.size(), b.size(), chords_b);

  Int total_sign = 0;
  for (int v = 0; v < fg.vertex_count(); ++v) {
    if (chords_a[v].empty() || chords_b[v].empty()) continue;
    const Int circumference = Int{fg.degree(v)} * width;
    for (const Chord& ca : chords_a[v]) {
      auto dist = [&](Int p) { return mod_floor(p - ca.from, circumference); };
      const Int end = dist(ca.to);
      for (const Chord& cb : chords_b[v]) {
        const bool start_inside = dist(cb.from) < end;
        const bool end_inside = dist(cb.to) < end;
        if (start_inside == end_inside) continue;
        total_sign += start_inside ? 1 : -1;
      }
    }
  }
  return total_sign;
}

/// Dense integer pairing of closed paths: entry (i, j) = paths[i] . paths[j].
inline std::vector<std::vector<Int>> intersection_matrix(const Fatgraph& fg, const std::vector<EdgePath>& paths) {
  const std::size_t n = paths.size();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m[i][j] = intersect(fg, paths[i], paths[j]);
      m[j][i] = -m[i][j];
    }
  return m;
}

/// Voltage assignment on directed edges with values in Z/modulus; reversing an edge negates it.
struct Voltage {
  Int modulus = 1;
  std::vector<Int> value;  // per edge, forward direction, in [0, modulus)

  Int of(DirectedEdge d) const { return d.forward ? value[d.edge] : mod_floor(-value[d.edge], modulus); }

  Int total(const EdgePath& path) const {
    Int sum = 0;
    for (const DirectedEdge& d : path) sum = (sum + of(d)) % modulus;
    return sum;
  }
};

/// Voltage of the cyclic cover dual to the class of `h` mod m: zero on the spanning
/// tree, z_e . h on each non-tree edge e.
inline Voltage dual_voltage(const Fatgraph& fg, const EdgePath& h, Int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 1");
  fg.check_closed_path(h);
  HomologyBasis basis = homology_basis(fg);
  Voltage c{m, std::vector<Int>(fg.edge_count(), 0)};
  for (std::size_t i = 0; i < basis.cycles.size(); ++i)
    c.value[basis.non_tree_edges[i]] = mod_floor(intersect(fg, basis.cycles[i], h), m);
  return c;
}

}  // namespace knotcob
