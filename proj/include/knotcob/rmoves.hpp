#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "knotcob/error.hpp"
#include "knotcob/gauss_code.hpp"

namespace knotcob {

enum class RMoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

inline std::string to_string(RMoveKind k) {
  switch (k) {
    case RMoveKind::R1Plus: return "R1+";
    case RMoveKind::R1Minus: return "R1-";
    case RMoveKind::R2Plus: return "R2+";
    case RMoveKind::R2Minus: return "R2-";
    case RMoveKind::R3: return "R3";
  }
  return "?";
}

/// A Reidemeister move on a Gauss code.
///  R1-: site {i}, the pair at positions i, i+1 (cyclic).
///  R2-: site {i, j}, pairs at i, i+1 and j, j+1.
///  R3:  site {i, j, k}, three adjacent pairs; every pair is swapped.
///  R1+: site {g}, insert before position g; `passage` is the first new token's flag.
///  R2+: site {g1, g2} with g1 <= g2. At g1 insert a over/under run (flag `passage`) through
///       crossings A, B; at g2 the opposite run, in order A, B if `same_order` else B, A.
///       writhe(A) = sign, writhe(B) = -sign.
struct RMove {
  RMoveKind kind = RMoveKind::R1Minus;
  std::vector<std::size_t> site;
  int sign = 1;
  Passage passage = Passage::Over;
  bool same_order = true;

  bool operator==(const RMove&) const = default;
};

inline std::string to_string(const RMove& m) {
  std::string out = to_string(m.kind) + " at";
  for (std::size_t s : m.site) out += " " + std::to_string(s);
  if (m.kind == RMoveKind::R1Plus || m.kind == RMoveKind::R2Plus) {
    out += std::string(" ") + (m.passage == Passage::Over ? "O" : "U") + (m.sign > 0 ? "+" : "-");
    if (m.kind == RMoveKind::R2Plus) out += m.same_order ? " parallel" : " crossed";
  }
  return out;
}

namespace detail {

inline std::vector<std::string> fresh_labels(const GaussCode& code, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t k = 1; out.size() < count; ++k) {
    std::string l = std::to_string(k);
    if (!code.writhes().contains(l)) out.push_back(l);
  }
  return out;
}

inline bool r1_minus_applies(const GaussCode& c, std::size_t i) {
  const std::size_t len = c.size();
  return len >= 2 && i < len && c.word()[i].label == c.word()[(i + 1) % len].label;
}

inline bool r2_minus_applies(const GaussCode& c, std::size_t i, std::size_t j) {
  const std::size_t len = c.size();
  if (len < 4 || i >= len || j >= len) return false;
  const std::size_t i2 = (i + 1) % len, j2 = (j + 1) % len;
  std::set<std::size_t> used{i, i2, j, j2};
  if (used.size() != 4) return false;
  const auto& w = c.word();
  const std::string& a = w[i].label;
  const std::string& b = w[i2].label;
  if (a == b) return false;
  if (!((w[j].label == a && w[j2].label == b) || (w[j].label == b && w[j2].label == a))) return false;
  if (w[i].passage != w[i2].passage || w[j].passage != w[j2].passage || w[i].passage == w[j].passage) return false;
  return c.writhe(a) == -c.writhe(b);
}

// Braid-like triangle: one strand runs over the other two, the second runs
// between them, the third runs under both. All three crossings share a writhe.
// Pattern A: P = (F a, F b), Q = (~F a, F c), R = (~F b, ~F c); pattern B is its reverse.
inline bool r3_applies(const GaussCode& c, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t len = c.size();
  if (len < 6 || i >= len || j >= len || k >= len) return false;
  std::set<std::size_t> used{i, (i + 1) % len, j, (j + 1) % len, k, (k + 1) % len};
  if (used.size() != 6) return false;
  const auto& w = c.word();
  auto tok = [&](std::size_t p) { return w[p % len]; };
  const Token p1 = tok(i), p2 = tok(i + 1), q1 = tok(j), q2 = tok(j + 1), r1 = tok(k), r2 = tok(k + 1);
  const Passage f = p1.passage;
  const Passage nf = flip(f);
  auto all_signs_equal = [&](const std::string& a, const std::string& b, const std::string& x) {
    return c.writhe(a) == c.writhe(b) && c.writhe(b) == c.writhe(x);
  };
  auto distinct = [](const std::string& a, const std::string& b, const std::string& x) {
    return a != b && b != x && a != x;
  };
  {  // pattern A: a = p1, b = p2, c = q2
    const std::string &a = p1.label, &b = p2.label, &x = q2.label;
    if (distinct(a, b, x) && p2.passage == f && q1.label == a && q1.passage == nf && q2.passage == f &&
        r1.label == b && r1.passage == nf && r2.label == x && r2.passage == nf && all_signs_equal(a, b, x))
      return true;
  }
  {  // pattern B: P = (F b, F a), Q = (F c, ~F a), R = (~F c, ~F b)
    const std::string &b = p1.label, &a = p2.label, &x = q1.label;
    if (distinct(a, b, x) && p2.passage == f && q1.passage == f && q2.label == a && q2.passage == nf &&
        r1.label == x && r1.passage == nf && r2.label == b && r2.passage == nf && all_signs_equal(a, b, x))
      return true;
  }
  return false;
}

}  // namespace detail

/// Removing moves and R3 moves that apply to `code`.
inline std::vector<RMove> enumerate_reducing_rmoves(const GaussCode& code) {
  std::vector<RMove> out;
  const std::size_t len = code.size();
  for (std::size_t i = 0; i < len; ++i)
    if (detail::r1_minus_applies(code, i)) out.push_back(RMove{RMoveKind::R1Minus, {i}});
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j)
      if (detail::r2_minus_applies(code, i, j)) out.push_back(RMove{RMoveKind::R2Minus, {i, j}});
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j)
      for (std::size_t k = 0; k < len; ++k)
        if (detail::r3_applies(code, i, j, k)) out.push_back(RMove{RMoveKind::R3, {i, j, k}});
  return out;
}

/// Creating moves R1+ and R2+ at every gap and gap pair.
inline std::vector<RMove> enumerate_creating_rmoves(const GaussCode& code) {
  std::vector<RMove> out;
  const std::size_t gaps = std::max<std::size_t>(code.size(), 1);
  for (std::size_t g = 0; g < gaps; ++g)
    for (Passage f : {Passage::Over, Passage::Under})
      for (int sign : {1, -1}) out.push_back(RMove{RMoveKind::R1Plus, {g}, sign, f});
  for (std::size_t g1 = 0; g1 < gaps; ++g1)
    for (std::size_t g2 = g1; g2 < gaps; ++g2)
      for (Passage f : {Passage::Over, Passage::Under})
        for (int sign : {1, -1})
          for (bool same : {true, false}) out.push_back(RMove{RMoveKind::R2Plus, {g1, g2}, sign, f, same});
  return out;
}

inline std::vector<RMove> enumerate_rmoves(const GaussCode& code) {
  std::vector<RMove> out = enumerate_reducing_rmoves(code);
  std::vector<RMove> creating = enumerate_creating_rmoves(code);
  out.insert(out.end(), creating.begin(), creating.end());
  return out;
}

inline GaussCode apply_rmove(const GaussCode& code, const RMove& m) {
  const std::size_t len = code.size();
  const auto& s = m.site;
  auto fail = [&]() -> GaussCode { throw Error(ErrorCode::InapplicableMove, to_string(m) + " does not apply"); };
  std::vector<Token> word = code.word();
  std::map<std::string, int> writhe = code.writhes();
  auto erase_positions = [&](std::set<std::size_t> drop) {
    std::vector<Token> kept;
    for (std::size_t p = 0; p < len; ++p)
      if (!drop.contains(p)) kept.push_back(word[p]);
    for (std::size_t p : drop) writhe.erase(word[p].label);
    word = std::move(kept);
  };
  switch (m.kind) {
    case RMoveKind::R1Minus:
      if (s.size() != 1 || !detail::r1_minus_applies(code, s[0])) return fail();
      erase_positions({s[0], (s[0] + 1) % len});
      break;
    case RMoveKind::R2Minus:
      if (s.size() != 2 || !detail::r2_minus_applies(code, s[0], s[1])) return fail();
      erase_positions({s[0], (s[0] + 1) % len, s[1], (s[1] + 1) % len});
      break;
    case RMoveKind::R3:
      if (s.size() != 3 || !detail::r3_applies(code, s[0], s[1], s[2])) return fail();
      for (std::size_t p : s) std::swap(word[p], word[(p + 1) % len]);
      break;
    case RMoveKind::R1Plus: {
      const std::size_t gaps = std::max<std::size_t>(len, 1);
      if (s.size() != 1 || s[0] >= gaps || (m.sign != 1 && m.sign != -1)) return fail();
      const std::string x = detail::fresh_labels(code, 1)[0];
      word.insert(word.begin() + static_cast<std::ptrdiff_t>(s[0]), {Token{x, m.passage}, Token{x, flip(m.passage)}});
      writhe.emplace(x, m.sign);
      break;
    }
    case RMoveKind::R2Plus: {
      const std::size_t gaps = std::max<std::size_t>(len, 1);
      if (s.size() != 2 || s[0] > s[1] || s[1] >= gaps || (m.sign != 1 && m.sign != -1)) return fail();
      const auto labels = detail::fresh_labels(code, 2);
      const std::string &a = labels[0], &b = labels[1];
      const Passage f = m.passage, nf = flip(m.passage);
      std::vector<Token> second = m.same_order ? std::vector<Token>{{a, nf}, {b, nf}} : std::vector<Token>{{b, nf}, {a, nf}};
      std::vector<Token> first{{a, f}, {b, f}};
      if (s[0] == s[1]) {
        first.insert(first.end(), second.begin(), second.end());
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(s[0]), first.begin(), first.end());
      } else {
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(s[1]), second.begin(), second.end());
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(s[0]), first.begin(), first.end());
      }
      writhe.emplace(a, m.sign);
      writhe.emplace(b, -m.sign);
      break;
    }
  }
  return GaussCode::from_parts(std::move(word), std::move(writhe));
}

/// A uniformly chosen move. Reducing moves are preferred with probability 1/2 when any exist,
/// so random walks do not only grow.
template <class Rng>
RMove random_rmove(const GaussCode& code, Rng& rng) {
  std::vector<RMove> reducing = enumerate_reducing_rmoves(code);
  std::bernoulli_distribution coin(0.5);
  if (!reducing.empty() && coin(rng))
    return reducing[std::uniform_int_distribution<std::size_t>(0, reducing.size() - 1)(rng)];
  const std::size_t gaps = std::max<std::size_t>(code.size(), 1);
  std::uniform_int_distribution<std::size_t> gap(0, gaps - 1);
  RMove m;
  m.sign = coin(rng) ? 1 : -1;
  m.passage = coin(rng) ? Passage::Over : Passage::Under;
  if (coin(rng)) {
    m.kind = RMoveKind::R1Plus;
    m.site = {gap(rng)};
  } else {
    std::size_t a = gap(rng), b = gap(rng);
    m.kind = RMoveKind::R2Plus;
    m.site = {std::min(a, b), std::max(a, b)};
    m.same_order = coin(rng);
  }
  return m;
}

}  // namespace knotcob
