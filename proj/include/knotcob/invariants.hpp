#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotcob/embedded_diagram.hpp"
#include "knotcob/graded_matrix.hpp"
#include "knotcob/polynomial.hpp"

namespace knotcob {

/// The distinguished half of the diagram at one crossing.
struct Half {
  std::string label;
  EdgePath path;
  int sign = 1;
  /// Intersection number of the half with the whole curve.
  Int n = 0;
};

/// Traversal position where the A-branch of crossing `c` departs.
inline int a_branch_position(const CrossingData& c) {
  return c.local_orientation() > 0 ? c.first_position : c.second_position;
}

inline EdgePath half_path(const EmbeddedDiagram& d, const CrossingData& c) {
  const int len = static_cast<int>(d.traversal().size());
  const int from = a_branch_position(c);
  const int to = from == c.first_position ? c.second_position : c.first_position;
  EdgePath path;
  for (int k = from; k != to; k = (k + 1) % len) path.push_back(d.traversal()[k]);
  return path;
}

inline std::vector<Half> halves(const EmbeddedDiagram& d) {
  std::vector<Half> out;
  for (const CrossingData& c : d.crossings()) {
    Half h{c.label, half_path(d, c), c.writhe, 0};
    h.n = intersect(d.graph(), h.path, d.traversal());
    out.push_back(std::move(h));
  }
  return out;
}

inline std::pair<LaurentFreePolynomial, LaurentFreePolynomial> u_polynomials(const EmbeddedDiagram& d) {
  LaurentFreePolynomial plus, minus;
  for (const Half& h : halves(d)) {
    if (h.n == 0) continue;
    const int exponent = static_cast<int>(h.n > 0 ? h.n : -h.n);
    auto term = LaurentFreePolynomial::monomial(h.sign, exponent);
    if ((h.n > 0 ? 1 : -1) == h.sign)
      plus = plus + term;
    else
      minus = minus + term;
  }
  return {plus, minus};
}

/// T(D): s is the whole curve, every crossing contributes its half.
inline GradedMatrix graded_matrix_of(const EmbeddedDiagram& d) {
  std::vector<EdgePath> paths{d.traversal()};
  std::vector<std::string> names{"s"};
  std::vector<int> signs{0};
  for (const Half& h : halves(d)) {
    paths.push_back(h.path);
    names.push_back(h.label);
    signs.push_back(h.sign);
  }
  return GradedMatrix(std::move(names), std::move(signs), intersection_matrix(d.graph(), paths));
}

/// The m-th covering knot: lift to the cover dual to the curve itself.
inline EmbeddedDiagram self_cover(const EmbeddedDiagram& d, Int m, Int start_sheet = 0) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "covering degree must be positive");
  return voltage_cover(d, dual_voltage(d.graph(), d.traversal(), m), start_sheet);
}

/// The knot K_h: lift to the cover dual to the class of `h` mod m.
inline EmbeddedDiagram class_cover(const EmbeddedDiagram& d, const EdgePath& h, Int m, Int start_sheet = 0) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "class covers need m >= 2");
  return voltage_cover(d, dual_voltage(d.graph(), h, m), start_sheet);
}

struct KnotInvariants {
  LaurentFreePolynomial u_plus, u_minus;
  GradedMatrix matrix;
  Reduction primitive;
};

inline KnotInvariants invariants_of(const EmbeddedDiagram& d) {
  auto [plus, minus] = u_polynomials(d);
  GradedMatrix t = graded_matrix_of(d);
  Reduction r = reduce_primitive(t);
  return KnotInvariants{plus, minus, std::move(t), std::move(r)};
}

/// Default bound on the vertex count of a covering graph built during iteration.
inline constexpr int kDefaultCoverCap = 512;

/// Iterated self covers along `ms`. Each lift is re-read as a Gauss code and redrawn on
/// its Carter surface, which carries the same intersection numbers as the cover.
inline EmbeddedDiagram iterated_cover(const EmbeddedDiagram& d, const std::vector<Int>& ms, int cap = kDefaultCoverCap) {
  EmbeddedDiagram current = d;
  for (Int m : ms) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "covering degree must be positive");
    if (static_cast<Int>(current.graph().vertex_count()) * m > cap)
      throw Error(ErrorCode::ResourceLimit, "covering graph would exceed the size cap");
    current = build_carter(self_cover(current, m).to_gauss_code());
  }
  return current;
}

inline KnotInvariants higher_invariants(const EmbeddedDiagram& d, const std::vector<Int>& ms, int cap = kDefaultCoverCap) {
  return invariants_of(iterated_cover(d, ms, cap));
}

}  // namespace knotcob
