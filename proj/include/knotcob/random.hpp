#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "knotcob/gauss_code.hpp"
#include "knotcob/graded_matrix.hpp"
#include "knotcob/invariants.hpp"
#include "knotcob/rmoves.hpp"

namespace knotcob {

/// A uniformly shuffled signed Gauss code with `n` crossings labelled 1..n.
template <class Rng>
GaussCode random_code(int n, Rng& rng) {
  std::vector<int> occurrences;
  for (int i = 0; i < n; ++i) occurrences.insert(occurrences.end(), {i, i});
  std::shuffle(occurrences.begin(), occurrences.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> first_over(n), seen(n, false);
  std::map<std::string, int> writhe;
  for (int i = 0; i < n; ++i) {
    first_over[i] = coin(rng);
    writhe[std::to_string(i + 1)] = coin(rng) ? 1 : -1;
  }
  std::vector<Token> word;
  for (int x : occurrences) {
    const bool over = seen[x] ? !first_over[x] : first_over[x];
    seen[x] = true;
    word.push_back(Token{std::to_string(x + 1), over ? Passage::Over : Passage::Under});
  }
  return GaussCode::from_parts(std::move(word), std::move(writhe));
}

/// Skew-symmetric integer matrix on s, g1..gn with entries in [-range, range].
template <class Rng>
GradedMatrix random_skew_matrix(int n, Rng& rng, Int range = 3) {
  std::vector<std::string> names{"s"};
  std::vector<int> signs{0};
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<Int> entry(-range, range);
  for (int i = 1; i <= n; ++i) {
    names.push_back("g" + std::to_string(i));
    signs.push_back(coin(rng) ? 1 : -1);
  }
  IntMatrix b(n + 1, std::vector<Int>(n + 1, 0));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      b[i][j] = entry(rng);
      b[j][i] = -b[i][j];
    }
  return GradedMatrix(std::move(names), std::move(signs), std::move(b));
}

struct FuzzFailure {
  GaussCode start;
  std::vector<RMove> moves;
  GaussCode end;
  std::string what;
};

/// Walks `moves` random R-moves from a random code and compares the knot invariants at
/// every step with those of the start. Returns the first violation.
template <class Rng>
std::optional<FuzzFailure> fuzz_case(int max_crossings, int moves, Rng& rng) {
  const GaussCode start = random_code(std::uniform_int_distribution<int>(0, max_crossings)(rng), rng);
  const KnotInvariants base = invariants_of(build_carter(start));
  GaussCode current = start;
  std::vector<RMove> applied;
  auto check = [&](const KnotInvariants& inv) -> std::string {
    if (inv.u_plus != base.u_plus) return "u+ changed";
    if (inv.u_minus != base.u_minus) return "u- changed";
    if (inv.u_plus - inv.u_minus != base.u_plus - base.u_minus) return "u changed";
    if (!is_isomorphic(inv.primitive.result, base.primitive.result)) return "primitive matrix changed";
    if (inv.u_plus.derivative_at_one() != inv.u_minus.derivative_at_one()) return "u+'(1) != u-'(1)";
    if (inv.u_plus.coefficient(0) != 0 || inv.u_minus.coefficient(0) != 0) return "nonzero constant term";
    return "";
  };
  if (std::string bad = check(base); !bad.empty()) return FuzzFailure{start, {}, start, bad};
  for (int k = 0; k < moves; ++k) {
    const RMove m = random_rmove(current, rng);
    current = apply_rmove(current, m);
    applied.push_back(m);
    if (std::string bad = check(invariants_of(build_carter(current))); !bad.empty())
      return FuzzFailure{start, applied, current, bad};
  }
  return std::nullopt;
}

}  // namespace knotcob
