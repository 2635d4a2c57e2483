#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotcob/error.hpp"
#include "knotcob/fatgraph.hpp"
#include "knotcob/gauss_code.hpp"

namespace knotcob {

/// A double point of the traversal.
struct CrossingData {
  std::string label;
  int vertex = 0;
  /// Traversal positions of the two passes; position k is the visit where step k departs.
  int first_position = 0;
  int second_position = 0;
  Passage first_pass = Passage::Over;
  int writhe = 1;

  /// +1 when (first pass, second pass) is a positively oriented frame.
  int local_orientation() const { return first_pass == Passage::Over ? writhe : -writhe; }
};

/// A knot diagram drawn on a ribbon graph: the closed traversal plus crossing data.
class EmbeddedDiagram {
 public:
  EmbeddedDiagram() = default;

  EmbeddedDiagram(Fatgraph graph, EdgePath traversal, std::vector<CrossingData> crossings)
      : graph_(std::move(graph)), traversal_(std::move(traversal)), crossings_(std::move(crossings)) {
    graph_.check_closed_path(traversal_);
    check_crossing_frames();
  }

  const Fatgraph& graph() const { return graph_; }
  const EdgePath& traversal() const { return traversal_; }
  const std::vector<CrossingData>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }

  /// Half-edge through which the traversal enters / leaves the visit at `position`.
  int arrival_half(int position) const {
    const int len = static_cast<int>(traversal_.size());
    return Fatgraph::arrival(traversal_[(position + len - 1) % len]);
  }
  int departure_half(int position) const { return Fatgraph::departure(traversal_[position]); }

  /// Reads the crossings back as a signed Gauss code with the stored labels.
  GaussCode to_gauss_code() const {
    std::vector<Token> word(traversal_.size());
    std::vector<bool> used(traversal_.size(), false);
    std::map<std::string, int> writhe;
    for (const CrossingData& c : crossings_) {
      word[c.first_position] = Token{c.label, c.first_pass};
      word[c.second_position] = Token{c.label, flip(c.first_pass)};
      used[c.first_position] = used[c.second_position] = true;
      writhe.emplace(c.label, c.writhe);
    }
    std::vector<Token> compact;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (used[i]) compact.push_back(word[i]);
    return GaussCode::from_parts(std::move(compact), std::move(writhe));
  }

 private:
  // Rotation at a crossing must be (P1in, P2in, P1out, P2out) for eta = +1 and
  // (P1in, P2out, P1out, P2in) for eta = -1, up to cyclic shift. Visited non-crossing
  // vertices must be passed straight through.
  void check_crossing_frames() const {
    const int len = static_cast<int>(traversal_.size());
    std::vector<int> visits(graph_.vertex_count(), 0);
    for (int k = 0; k < len; ++k) ++visits[graph_.start_vertex(traversal_[k])];
    std::vector<bool> is_crossing(graph_.vertex_count(), false);
    for (const CrossingData& c : crossings_) {
      if (c.first_position >= c.second_position || c.second_position >= len || c.first_position < 0)
        throw Error(ErrorCode::InvalidArgument, "crossing positions out of order");
      if (graph_.start_vertex(traversal_[c.first_position]) != c.vertex ||
          graph_.start_vertex(traversal_[c.second_position]) != c.vertex)
        throw Error(ErrorCode::InvalidArgument, "crossing positions do not visit the crossing vertex");
      if (graph_.degree(c.vertex) != 4 || visits[c.vertex] != 2)
        throw Error(ErrorCode::InvalidArgument, "crossing vertex must be 4-valent and visited twice");
      const int in1 = arrival_half(c.first_position), out1 = departure_half(c.first_position);
      const int in2 = arrival_half(c.second_position), out2 = departure_half(c.second_position);
      const int base = graph_.slot(in1);
      auto at = [&](int offset) { return graph_.rotation(c.vertex)[(base + offset) % 4]; };
      const bool positive = at(1) == in2 && at(2) == out1 && at(3) == out2;
      const bool negative = at(1) == out2 && at(2) == out1 && at(3) == in2;
      if (!(c.local_orientation() > 0 ? positive : negative))
        throw Error(ErrorCode::InvalidArgument, "rotation at crossing '" + c.label + "' contradicts its frame");
      is_crossing[c.vertex] = true;
    }
    for (int k = 0; k < len; ++k) {
      const int v = graph_.start_vertex(traversal_[k]);
      if (is_crossing[v]) continue;
      if (visits[v] != 1) throw Error(ErrorCode::InvalidArgument, "vertex visited twice without crossing data");
      if (graph_.degree(v) == 4 && (graph_.slot(arrival_half(k)) + 2) % 4 != graph_.slot(departure_half(k)))
        throw Error(ErrorCode::InvalidArgument, "traversal turns at a non-crossing vertex");
    }
  }

  Fatgraph graph_;
  EdgePath traversal_;
  std::vector<CrossingData> crossings_;
};

/// The Carter surface of a Gauss code: one 4-valent vertex per crossing (numbered in
/// first-occurrence order), edge i from word position i to i+1.
inline EmbeddedDiagram build_carter(const GaussCode& code) {
  if (code.empty()) {
    Fatgraph circle(1, {{0, 0}}, {{Fatgraph::tail_half(0), Fatgraph::head_half(0)}});
    return EmbeddedDiagram(std::move(circle), EdgePath{{0, true}}, {});
  }
  const int len = static_cast<int>(code.size());
  std::map<std::string, int> vertex_of;
  for (const std::string& l : code.labels()) vertex_of.emplace(l, static_cast<int>(vertex_of.size()));
  const int n = static_cast<int>(vertex_of.size());

  std::vector<std::array<int, 2>> ends(len);
  for (int i = 0; i < len; ++i)
    ends[i] = {vertex_of.at(code.word()[i].label), vertex_of.at(code.word()[(i + 1) % len].label)};

  auto in_half = [&](int p) { return Fatgraph::head_half((p + len - 1) % len); };
  auto out_half = [&](int p) { return Fatgraph::tail_half(p); };

  std::vector<std::vector<int>> rotation(n);
  std::vector<CrossingData> crossings(n);
  for (const auto& [label, v] : vertex_of) {
    auto [p1, p2] = code.positions(label);
    CrossingData c;
    c.label = label;
    c.vertex = v;
    c.first_position = static_cast<int>(p1);
    c.second_position = static_cast<int>(p2);
    c.first_pass = code.word()[p1].passage;
    c.writhe = code.writhe(label);
    const int i1 = in_half(c.first_position), o1 = out_half(c.first_position);
    const int i2 = in_half(c.second_position), o2 = out_half(c.second_position);
    rotation[v] = c.local_orientation() > 0 ? std::vector<int>{i1, i2, o1, o2} : std::vector<int>{i1, o2, o1, i2};
    crossings[v] = c;
  }
  EdgePath traversal;
  for (int i = 0; i < len; ++i) traversal.push_back(DirectedEdge{i, true});
  return EmbeddedDiagram(Fatgraph(n, std::move(ends), std::move(rotation)), std::move(traversal), std::move(crossings));
}

/// Lift of `d` to the voltage cover, starting on `start_sheet`. Only the component of
/// the covering surface that contains the lifted knot is kept. The lift passes over each
/// base crossing once, so lifted crossings keep their base labels.
inline EmbeddedDiagram voltage_cover(const EmbeddedDiagram& d, const Voltage& c, Int start_sheet = 0) {
  const Fatgraph& g = d.graph();
  const Int m = c.modulus;
  if (m < 1 || static_cast<int>(c.value.size()) != g.edge_count())
    throw Error(ErrorCode::InvalidArgument, "voltage does not match the graph");
  if (c.total(d.traversal()) != 0)
    throw Error(ErrorCode::DoesNotLift, "the traversal has nonzero monodromy in the cover");
  const int mi = static_cast<int>(m);
  auto cover_vertex = [&](int v, Int sheet) { return v * mi + static_cast<int>(mod_floor(sheet, m)); };
  auto cover_edge = [&](int e, Int sheet) { return e * mi + static_cast<int>(mod_floor(sheet, m)); };

  // Full voltage graph.
  const int full_v = g.vertex_count() * mi, full_e = g.edge_count() * mi;
  std::vector<std::array<int, 2>> ends(full_e);
  for (int e = 0; e < g.edge_count(); ++e)
    for (int i = 0; i < mi; ++i) ends[cover_edge(e, i)] = {cover_vertex(g.tail(e), i), cover_vertex(g.head(e), i + c.value[e])};
  std::vector<std::vector<int>> rotation(full_v);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int i = 0; i < mi; ++i)
      for (int h : g.rotation(v)) {
        const int e = Fatgraph::edge_of(h);
        rotation[cover_vertex(v, i)].push_back((h & 1) == 0 ? Fatgraph::tail_half(cover_edge(e, i))
                                                            : Fatgraph::head_half(cover_edge(e, i - c.value[e])));
      }

  // Lift the traversal.
  EdgePath lifted;
  std::vector<Int> sheet_at(d.traversal().size());
  Int sheet = mod_floor(start_sheet, m);
  for (std::size_t k = 0; k < d.traversal().size(); ++k) {
    const DirectedEdge s = d.traversal()[k];
    sheet_at[k] = sheet;
    if (s.forward) {
      lifted.push_back({cover_edge(s.edge, sheet), true});
      sheet = mod_floor(sheet + c.value[s.edge], m);
    } else {
      lifted.push_back({cover_edge(s.edge, sheet - c.value[s.edge]), false});
      sheet = mod_floor(sheet - c.value[s.edge], m);
    }
  }

  // Keep the component containing the lift.
  std::vector<std::vector<int>> adj(full_v);
  for (int e = 0; e < full_e; ++e) {
    adj[ends[e][0]].push_back(ends[e][1]);
    adj[ends[e][1]].push_back(ends[e][0]);
  }
  std::vector<int> new_vertex(full_v, -1);
  {
    std::vector<int> stack{ends[lifted.front().edge][lifted.front().forward ? 0 : 1]};
    new_vertex[stack.back()] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (new_vertex[w] == -1) {
          new_vertex[w] = 0;
          stack.push_back(w);
        }
    }
  }
  int kept_v = 0;
  for (int v = 0; v < full_v; ++v)
    if (new_vertex[v] != -1) new_vertex[v] = kept_v++;
  std::vector<int> new_edge(full_e, -1);
  int kept_e = 0;
  for (int e = 0; e < full_e; ++e)
    if (new_vertex[ends[e][0]] != -1) new_edge[e] = kept_e++;
  std::vector<std::array<int, 2>> kept_ends(kept_e);
  for (int e = 0; e < full_e; ++e)
    if (new_edge[e] != -1) kept_ends[new_edge[e]] = {new_vertex[ends[e][0]], new_vertex[ends[e][1]]};
  std::vector<std::vector<int>> kept_rotation(kept_v);
  for (int v = 0; v < full_v; ++v) {
    if (new_vertex[v] == -1) continue;
    for (int h : rotation[v]) kept_rotation[new_vertex[v]].push_back(2 * new_edge[Fatgraph::edge_of(h)] + (h & 1));
  }
  for (DirectedEdge& s : lifted) s.edge = new_edge[s.edge];

  std::vector<CrossingData> crossings;
  for (const CrossingData& base : d.crossings()) {
    if (sheet_at[base.first_position] != sheet_at[base.second_position]) continue;
    CrossingData lifted_crossing = base;
    lifted_crossing.vertex = new_vertex[cover_vertex(base.vertex, sheet_at[base.first_position])];
    crossings.push_back(std::move(lifted_crossing));
  }
  std::sort(crossings.begin(), crossings.end(),
            [](const CrossingData& a, const CrossingData& b) { return a.first_position < b.first_position; });
  return EmbeddedDiagram(Fatgraph(kept_v, std::move(kept_ends), std::move(kept_rotation)), std::move(lifted),
                         std::move(crossings));
}

}  // namespace knotcob
