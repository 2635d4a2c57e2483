#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "knotcob/embedded_diagram.hpp"
#include "knotcob/filling.hpp"
#include "knotcob/invariants.hpp"

namespace knotcob {

/// Bound on m^(2g) for the Lagrangian search.
inline constexpr Int kDefaultHomologyCap = 1 << 16;
/// Bound on the number of isotropic subgroups visited.
inline constexpr long kDefaultSubgroupCap = 200'000;

/// H_1 of the capped surface with a symplectic basis-free description: 2g cycles from a
/// tree-cotree decomposition, their (unimodular) intersection matrix, and a way to read
/// coordinates of any closed path.
class SurfaceHomology {
 public:
  explicit SurfaceHomology(const Fatgraph& fg) : fg_(fg) {
    const FaceData faces = faces_and_genus(fg);
    const SpanningTree tree = spanning_tree(fg);
    // Spanning tree of the dual graph on the edges outside the primal tree.
    std::vector<int> parent(faces.faces.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int e = 0; e < fg.edge_count(); ++e) {
      if (tree.in_tree[e]) continue;
      const int a = find(faces.face_of[Fatgraph::tail_half(e)]), b = find(faces.face_of[Fatgraph::head_half(e)]);
      if (a != b) {
        parent[a] = b;
        continue;
      }
      cycles_.push_back(fundamental_cycle(fg, tree, DirectedEdge{e, true}));
    }
    const int n = static_cast<int>(cycles_.size());
    j_ = intersection_matrix(fg, cycles_);
    // Coordinates a of w solve (w . c_i)_i = sum_j a_j (c_j . c_i), i.e. a = (J^T)^{-1} v.
    using boost::multiprecision::cpp_rational;
    std::vector<std::vector<cpp_rational>> aug(n, std::vector<cpp_rational>(2 * n));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) aug[i][k] = j_[k][i];
      aug[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
      int p = c;
      while (p < n && aug[p][c] == 0) ++p;
      if (p == n) throw Error(ErrorCode::InvalidArgument, "intersection form of the surface is degenerate");
      std::swap(aug[c], aug[p]);
      const cpp_rational pivot = aug[c][c];
      for (auto& x : aug[c]) x /= pivot;
      for (int r = 0; r < n; ++r) {
        if (r == c || aug[r][c] == 0) continue;
        const cpp_rational f = aug[r][c];
        for (int k = 0; k < 2 * n; ++k) aug[r][k] -= f * aug[c][k];
      }
    }
    inverse_.assign(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const cpp_rational& x = aug[i][n + k];
        if (denominator(x) != 1) throw Error(ErrorCode::InvalidArgument, "intersection form of the surface is not unimodular");
        inverse_[i][k] = static_cast<Int>(numerator(x));
      }
  }

  int rank() const { return static_cast<int>(cycles_.size()); }
  const std::vector<EdgePath>& cycles() const { return cycles_; }
  /// Entry (i, j) = c_i . c_j.
  const IntMatrix& form() const { return j_; }

  std::vector<Int> coordinates(const EdgePath& w) const {
    const int n = rank();
    std::vector<Int> v(n), a(n, 0);
    for (int i = 0; i < n; ++i) v[i] = intersect(fg_, w, cycles_[i]);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) a[i] = checked_add(a[i], checked_mul(inverse_[i][k], v[k]));
    return a;
  }

 private:
  Fatgraph fg_;
  std::vector<EdgePath> cycles_;
  IntMatrix j_;
  IntMatrix inverse_;
};

struct LagrangianResult {
  bool passes = false;
  Int modulus = 2;
  int genus = 0;
  long lagrangians_checked = 0;
  /// For a pass: generators of a passing Lagrangian, in coordinates.
  std::vector<std::vector<Int>> passing_generators;
  /// For a failure: one line per reason a partial or full subgroup was rejected (capped).
  std::vector<std::string> witness;
};

/// Searches for a Lagrangian L of H_1(Sigma; Z/m) containing [K] such that every K_h with
/// h in L has vanishing u+/- and hyperbolic T., and the crossing classes [D_x] admit an
/// involution whose orbit sums lie in L. Failure is a certificate of non-sliceness.
inline LagrangianResult lagrangian_obstruction(const EmbeddedDiagram& d, Int m, Int homology_cap = kDefaultHomologyCap,
                                               long subgroup_cap = kDefaultSubgroupCap, int size_cap = kDefaultSizeCap) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "m must be at least 2");
  const Fatgraph& fg = d.graph();
  const SurfaceHomology hom(fg);
  const int n = hom.rank();
  LagrangianResult result;
  result.modulus = m;
  result.genus = n / 2;
  Int group_size = 1;
  for (int i = 0; i < n; ++i) {
    group_size = checked_mul(group_size, m);
    if (group_size > homology_cap) throw Error(ErrorCode::SizeCap, "m^(2g) exceeds the homology cap");
  }

  auto encode = [&](const std::vector<Int>& v) {
    Int code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * m + mod_floor(v[i], m);
    return code;
  };
  auto decode = [&](Int code) {
    std::vector<Int> v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = code % m;
      code /= m;
    }
    return v;
  };
  auto add = [&](Int a, Int b) {
    auto x = decode(a), y = decode(b);
    for (int i = 0; i < n; ++i) x[i] += y[i];
    return encode(x);
  };
  auto form = [&](Int a, Int b) {
    auto x = decode(a), y = decode(b);
    Int s = 0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) s = mod_floor(s + x[i] * hom.form()[i][k] % m * y[k], m);
    return s;
  };

  // Voltage of the cover dual to h: zero on the BFS tree, z_e . h on non-tree edges,
  // with z_e . h = sum_j h_j (z_e . c_j).
  const HomologyBasis basis = homology_basis(fg);
  IntMatrix z_dot_c(basis.cycles.size(), std::vector<Int>(n));
  for (std::size_t e = 0; e < basis.cycles.size(); ++e)
    for (int j = 0; j < n; ++j) z_dot_c[e][j] = intersect(fg, basis.cycles[e], hom.cycles()[j]);

  std::map<Int, std::string> verdict_cache;  // "" when K_h passes, otherwise the reason
  auto check_h = [&](Int code) -> const std::string& {
    auto it = verdict_cache.find(code);
    if (it != verdict_cache.end()) return it->second;
    const auto h = decode(code);
    Voltage c{m, std::vector<Int>(fg.edge_count(), 0)};
    for (std::size_t e = 0; e < basis.cycles.size(); ++e) {
      Int s = 0;
      for (int j = 0; j < n; ++j) s = mod_floor(s + h[j] * z_dot_c[e][j], m);
      c.value[basis.non_tree_edges[e]] = s;
    }
    const EmbeddedDiagram kh = build_carter(voltage_cover(d, c).to_gauss_code());
    const KnotInvariants inv = invariants_of(kh);
    std::string reason;
    std::string name = "h=(";
    for (int i = 0; i < n; ++i) name += (i ? "," : "") + std::to_string(h[i]);
    name += ")";
    if (!inv.u_plus.is_zero() || !inv.u_minus.is_zero())
      reason = name + ": u+ = " + inv.u_plus.to_string() + ", u- = " + inv.u_minus.to_string();
    else if (!is_hyperbolic(inv.primitive.result, size_cap))
      reason = name + ": primitive graded matrix is not hyperbolic";
    return verdict_cache.emplace(code, reason).first->second;
  };

  std::vector<Int> crossing_class;
  for (const Half& h : halves(d)) crossing_class.push_back(encode(hom.coordinates(h.path)));
  const Int knot = encode(hom.coordinates(d.traversal()));

  auto involution_exists = [&](const std::set<Int>& l) {
    const int k = static_cast<int>(crossing_class.size());
    std::unordered_set<std::uint64_t> failed;
    std::function<bool(std::uint64_t)> go = [&](std::uint64_t used) -> bool {
      int i = 0;
      while (i < k && (used >> i & 1)) ++i;
      if (i == k) return true;
      if (failed.contains(used)) return false;
      const std::uint64_t with_i = used | (std::uint64_t{1} << i);
      if (l.contains(crossing_class[i]) && go(with_i)) return true;
      for (int j = i + 1; j < k; ++j)
        if (!(used >> j & 1) && l.contains(add(crossing_class[i], crossing_class[j])) && go(with_i | (std::uint64_t{1} << j)))
          return true;
      failed.insert(used);
      return false;
    };
    if (k > 64) throw Error(ErrorCode::SizeCap, "too many crossings for the involution search");
    return go(0);
  };

  auto span_with = [&](const std::set<Int>& l, Int v) {
    std::set<Int> out;
    for (Int x : l) {
      Int y = x;
      for (Int t = 0; t < m; ++t) {
        out.insert(y);
        y = add(y, v);
      }
    }
    return out;
  };

  std::set<std::set<Int>> visited;
  long visits = 0;
  auto note = [&](const std::string& line) {
    if (result.witness.size() < 16) result.witness.push_back(line);
  };
  std::function<bool(const std::set<Int>&, const std::vector<Int>&)> grow = [&](const std::set<Int>& l,
                                                                                 const std::vector<Int>& gens) -> bool {
    if (!visited.insert(l).second) return false;
    if (++visits > subgroup_cap) throw Error(ErrorCode::ResourceLimit, "too many isotropic subgroups");
    for (Int h : l)
      if (const std::string& why = check_h(h); !why.empty()) {
        note(why);
        return false;
      }
    std::vector<Int> annihilator;
    for (Int v = 0; v < group_size; ++v) {
      bool orthogonal = true;
      for (Int g : gens)
        if (form(g, v) != 0) {
          orthogonal = false;
          break;
        }
      if (orthogonal) annihilator.push_back(v);
    }
    if (annihilator.size() == l.size()) {
      ++result.lagrangians_checked;
      if (involution_exists(l)) {
        for (Int g : gens) result.passing_generators.push_back(decode(g));
        return true;
      }
      note("a Lagrangian passes every covering test but no involution of crossings has orbit sums in it");
      return false;
    }
    for (Int v : annihilator) {
      if (l.contains(v)) continue;
      auto next_gens = gens;
      next_gens.push_back(v);
      if (grow(span_with(l, v), next_gens)) return true;
    }
    return false;
  };
  result.passes = grow(span_with({0}, knot), {knot});
  return result;
}

}  // namespace knotcob
