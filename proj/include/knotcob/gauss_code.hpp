#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "knotcob/error.hpp"

namespace knotcob {

enum class Passage { Over, Under };

inline Passage flip(Passage p) { return p == Passage::Over ? Passage::Under : Passage::Over; }

/// One pass through a crossing.
struct Token {
  std::string label;
  Passage passage = Passage::Over;

  bool operator==(const Token&) const = default;
};

/// A signed Gauss code: the cyclic word of passes plus the writhe of every crossing.
///
/// Every label occurs exactly twice, once Over and once Under. The empty word is
/// the embedded circle.
class GaussCode {
 public:
  GaussCode() = default;

  /// Validates and builds a code; throws OccurrenceCount, FlagConflict or SignConflict.
  static GaussCode from_parts(std::vector<Token> word, std::map<std::string, int> writhe) {
    std::map<std::string, std::pair<int, int>> seen;  // label -> (#over, #under)
    for (const Token& t : word) {
      if (!valid_label(t.label)) throw Error(ErrorCode::MalformedToken, "bad crossing label '" + t.label + "'");
      auto& [over, under] = seen[t.label];
      (t.passage == Passage::Over ? over : under) += 1;
    }
    for (const auto& [label, counts] : seen) {
      if (counts.first + counts.second != 2)
        throw Error(ErrorCode::OccurrenceCount, "crossing '" + label + "' must occur exactly twice");
      if (counts.first != 1)
        throw Error(ErrorCode::FlagConflict, "crossing '" + label + "' needs one Over and one Under pass");
    }
    for (const auto& [label, w] : writhe) {
      if (!seen.contains(label))
        throw Error(ErrorCode::OccurrenceCount, "writhe given for absent crossing '" + label + "'");
      if (w != 1 && w != -1) throw Error(ErrorCode::SignConflict, "writhe of '" + label + "' must be +1 or -1");
    }
    for (const auto& [label, counts] : seen)
      if (!writhe.contains(label))
        throw Error(ErrorCode::SignConflict, "crossing '" + label + "' has no writhe");
    GaussCode code;
    code.word_ = std::move(word);
    code.writhe_ = std::move(writhe);
    return code;
  }

  static bool valid_label(std::string_view label) {
    if (label.empty()) return false;
    return std::all_of(label.begin(), label.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
  }

  const std::vector<Token>& word() const { return word_; }
  const std::map<std::string, int>& writhes() const { return writhe_; }
  int writhe(const std::string& label) const { return writhe_.at(label); }

  std::size_t size() const { return word_.size(); }
  std::size_t crossing_count() const { return word_.size() / 2; }
  bool empty() const { return word_.empty(); }

  /// Labels in order of first occurrence.
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const Token& t : word_)
      if (seen.insert(t.label).second) out.push_back(t.label);
    return out;
  }

  /// Word positions of the first and second pass through `label`.
  std::pair<std::size_t, std::size_t> positions(const std::string& label) const {
    std::size_t first = word_.size(), second = word_.size();
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (word_[i].label != label) continue;
      (first == word_.size() ? first : second) = i;
    }
    return {first, second};
  }

  bool operator==(const GaussCode&) const = default;

 private:
  std::vector<Token> word_;
  std::map<std::string, int> writhe_;
};

/// Parses whitespace-separated tokens O<label><sign> / U<label><sign>.
inline GaussCode parse_gauss_code(std::string_view text) {
  std::vector<Token> word;
  std::map<std::string, int> writhe;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (in >> raw) {
    std::string tok = raw;
    int sign = 0;
    // U+2212 MINUS SIGN is accepted alongside '-'.
    static const std::string kUnicodeMinus = "\xE2\x88\x92";
    if (tok.size() >= kUnicodeMinus.size() && tok.ends_with(kUnicodeMinus)) {
      sign = -1;
      tok.resize(tok.size() - kUnicodeMinus.size());
    } else if (!tok.empty() && (tok.back() == '+' || tok.back() == '-')) {
      sign = tok.back() == '+' ? 1 : -1;
      tok.pop_back();
    }
    if (sign == 0 || tok.size() < 2 || (tok[0] != 'O' && tok[0] != 'U'))
      throw Error(ErrorCode::MalformedToken, "malformed token '" + raw + "'");
    std::string label = tok.substr(1);
    if (!GaussCode::valid_label(label)) throw Error(ErrorCode::MalformedToken, "malformed token '" + raw + "'");
    auto [it, inserted] = writhe.emplace(label, sign);
    if (!inserted && it->second != sign)
      throw Error(ErrorCode::SignConflict, "crossing '" + label + "' carries both signs");
    word.push_back(Token{label, tok[0] == 'O' ? Passage::Over : Passage::Under});
  }
  return GaussCode::from_parts(std::move(word), std::move(writhe));
}

inline std::string serialize(const GaussCode& code) {
  std::string out;
  for (const Token& t : code.word()) {
    if (!out.empty()) out += ' ';
    out += t.passage == Passage::Over ? 'O' : 'U';
    out += t.label;
    out += code.writhe(t.label) > 0 ? '+' : '-';
  }
  return out;
}

/// Relabels crossings to 1..n in first-occurrence order.
inline GaussCode canonical(const GaussCode& code) {
  std::map<std::string, std::string> rename;
  for (const std::string& l : code.labels()) rename.emplace(l, std::to_string(rename.size() + 1));
  std::vector<Token> word;
  for (const Token& t : code.word()) word.push_back(Token{rename.at(t.label), t.passage});
  std::map<std::string, int> writhe;
  for (const auto& [l, w] : code.writhes()) writhe.emplace(rename.at(l), w);
  return GaussCode::from_parts(std::move(word), std::move(writhe));
}

/// Cyclic rotation so that position `shift` becomes the new basepoint.
inline GaussCode rotate(const GaussCode& code, std::size_t shift) {
  if (code.empty()) return code;
  std::vector<Token> word = code.word();
  std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(shift % word.size()), word.end());
  return GaussCode::from_parts(std::move(word), code.writhes());
}

/// A representative of the class of `code` under rotation and relabeling.
inline std::string rotation_invariant_form(const GaussCode& code) {
  std::string best = serialize(canonical(code));
  for (std::size_t r = 1; r < code.size(); ++r) best = std::min(best, serialize(canonical(rotate(code, r))));
  return best;
}

inline bool equivalent_up_to_rotation(const GaussCode& a, const GaussCode& b) {
  return a.size() == b.size() && rotation_invariant_form(a) == rotation_invariant_form(b);
}

/// The knot with its orientation reversed.
inline GaussCode reverse(const GaussCode& code) {
  std::vector<Token> word(code.word().rbegin(), code.word().rend());
  return GaussCode::from_parts(std::move(word), code.writhes());
}

/// The same knot on the oppositely oriented surface.
inline GaussCode mirror(const GaussCode& code) {
  std::map<std::string, int> writhe;
  for (const auto& [l, w] : code.writhes()) writhe.emplace(l, -w);
  return GaussCode::from_parts(code.word(), std::move(writhe));
}

/// Splices `b` into `a` at the basepoint. Labels of `b` that clash with `a` are renamed.
inline GaussCode connected_sum(const GaussCode& a, const GaussCode& b) {
  std::set<std::string> used;
  for (const auto& [l, w] : a.writhes()) used.insert(l);
  std::map<std::string, std::string> rename;
  std::size_t next = 1;
  for (const std::string& l : b.labels()) {
    if (!used.contains(l)) {
      rename.emplace(l, l);
      used.insert(l);
      continue;
    }
    std::string fresh;
    do {
      fresh = std::to_string(next++);
    } while (used.contains(fresh) || b.writhes().contains(fresh));
    used.insert(fresh);
    rename.emplace(l, fresh);
  }
  std::vector<Token> word = a.word();
  std::map<std::string, int> writhe = a.writhes();
  for (const Token& t : b.word()) word.push_back(Token{rename.at(t.label), t.passage});
  for (const auto& [l, w] : b.writhes()) writhe.emplace(rename.at(l), w);
  return GaussCode::from_parts(std::move(word), std::move(writhe));
}

}  // namespace knotcob
