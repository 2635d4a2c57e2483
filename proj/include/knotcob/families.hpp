#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotcob/error.hpp"
#include "knotcob/gauss_code.hpp"

namespace knotcob {

/// The knot on alpha_{p,q}: p horizontal chords x_1..x_p and q vertical chords
/// x_{p+1}..x_{p+q} of a grid chord diagram, crossing x_k labelled "k".
/// `signs` lists sign(x_1), ..., sign(x_{p+q}).
///
/// Horizontal chord x_i runs from R_i to L_i, vertical chord x_{p+j} from B_j to T_j.
/// The curve meets the endpoints in the cyclic order Tq..T1 R1..Rp B1..Bq Lp..L1, and
/// (tail pass, head pass) of every chord is a positive frame.
inline GaussCode alpha_pq(int p, int q, const std::vector<int>& signs) {
  if (p < 1 || q < 1) throw Error(ErrorCode::InvalidArgument, "p and q must be positive");
  if (static_cast<int>(signs.size()) != p + q) throw Error(ErrorCode::BadSignDomain, "need one sign per chord");
  for (int s : signs)
    if (s != 1 && s != -1) throw Error(ErrorCode::BadSignDomain, "signs must be +1 or -1");
  enum End { Tail, Head };
  std::vector<std::pair<int, End>> ends;
  for (int j = q; j >= 1; --j) ends.push_back({p + j, Head});
  for (int i = 1; i <= p; ++i) ends.push_back({i, Tail});
  for (int j = 1; j <= q; ++j) ends.push_back({p + j, Tail});
  for (int i = p; i >= 1; --i) ends.push_back({i, Head});

  std::vector<Token> word;
  std::map<std::string, int> writhe;
  std::map<int, Passage> first_pass;
  for (auto [x, end] : ends) {
    const std::string label = std::to_string(x);
    auto it = first_pass.find(x);
    if (it != first_pass.end()) {
      word.push_back(Token{label, flip(it->second)});
      continue;
    }
    // eta of (first pass, second pass) is +1 exactly when the tail comes first.
    const int eta = end == Tail ? 1 : -1;
    const Passage pass = eta == signs[x - 1] ? Passage::Over : Passage::Under;
    first_pass.emplace(x, pass);
    word.push_back(Token{label, pass});
    writhe.emplace(label, signs[x - 1]);
  }
  return GaussCode::from_parts(std::move(word), std::move(writhe));
}

}  // namespace knotcob
