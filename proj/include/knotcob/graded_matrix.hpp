#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "knotcob/error.hpp"
#include "knotcob/integer.hpp"
#include "knotcob/polynomial.hpp"
#include "knotcob/rank.hpp"

namespace knotcob {

/// A pointed set G = {s} + elements with a sign on every element and a pairing b.
/// Index 0 is always s. `modulus` is 0 for the integers and a prime p for Z/p,
/// in which case entries are stored as residues in [0, p).
class GradedMatrix {
 public:
  GradedMatrix() : names_{"s"}, signs_{0}, b_{{0}} {}

  GradedMatrix(std::vector<std::string> names, std::vector<int> signs, IntMatrix b, Int modulus = 0)
      : names_(std::move(names)), signs_(std::move(signs)), b_(std::move(b)), modulus_(modulus) {
    if (modulus_ != 0 && !is_prime(modulus_)) throw Error(ErrorCode::InvalidArgument, "ring modulus must be prime");
    const std::size_t n = b_.size();
    if (n == 0 || names_.size() != n || signs_.size() != n)
      throw Error(ErrorCode::InvalidArgument, "graded matrix dimensions disagree");
    for (auto& row : b_) {
      if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "pairing matrix is not square");
      if (modulus_ != 0)
        for (Int& x : row) x = mod_floor(x, modulus_);
    }
    signs_[0] = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (signs_[i] != 1 && signs_[i] != -1) throw Error(ErrorCode::InvalidArgument, "element signs must be +1 or -1");
    std::set<std::string> seen(names_.begin() + 1, names_.end());
    if (seen.size() != n - 1) throw Error(ErrorCode::InvalidArgument, "element names must be distinct");
  }

  static GradedMatrix trivial(Int modulus = 0) { return GradedMatrix({"s"}, {0}, {{0}}, modulus); }

  /// |G|, counting s.
  int size() const { return static_cast<int>(b_.size()); }
  int element_count() const { return size() - 1; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int sign(int i) const { return signs_[i]; }
  const std::vector<int>& signs() const { return signs_; }
  Int at(int i, int j) const { return b_[i][j]; }
  const IntMatrix& pairing() const { return b_; }
  Int modulus() const { return modulus_; }
  bool is_trivial() const { return size() == 1 && b_[0][0] == 0; }

  /// Canonical ring element: reduced mod p when working over Z/p.
  Int reduce(Int x) const { return modulus_ == 0 ? x : mod_floor(x, modulus_); }

  bool is_skew() const {
    for (int i = 0; i < size(); ++i) {
      if (b_[i][i] != 0) return false;
      for (int j = i + 1; j < size(); ++j)
        if (reduce(b_[i][j] + b_[j][i]) != 0) return false;
    }
    return true;
  }
  bool is_normal() const { return b_[0][0] == 0; }

  int index_of(const std::string& name) const {
    for (int i = 1; i < size(); ++i)
      if (names_[i] == name) return i;
    return -1;
  }

  /// Sub-matrix on s and the given element indices (in the given order).
  GradedMatrix restrict_to(const std::vector<int>& keep) const {
    std::vector<int> idx{0};
    idx.insert(idx.end(), keep.begin(), keep.end());
    std::vector<std::string> names;
    std::vector<int> signs;
    IntMatrix b(idx.size(), std::vector<Int>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      names.push_back(names_[idx[a]]);
      signs.push_back(signs_[idx[a]]);
      for (std::size_t c = 0; c < idx.size(); ++c) b[a][c] = b_[idx[a]][idx[c]];
    }
    return GradedMatrix(std::move(names), std::move(signs), std::move(b), modulus_);
  }

  /// Removes the listed element indices.
  GradedMatrix without(const std::vector<int>& drop) const {
    std::vector<int> keep;
    for (int i = 1; i < size(); ++i)
      if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
    return restrict_to(keep);
  }

  /// T_phi for the projection Z -> Z/p.
  GradedMatrix reduced_mod(Int p) const {
    if (modulus_ != 0 && modulus_ != p) throw Error(ErrorCode::WrongRing, "cannot change a nonzero ring modulus");
    return GradedMatrix(names_, signs_, b_, p);
  }

  bool operator==(const GradedMatrix&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> signs_;
  IntMatrix b_;
  Int modulus_ = 0;
};

/// -T: opposite signs, negated pairing.
inline GradedMatrix neg(const GradedMatrix& t) {
  std::vector<int> signs = t.signs();
  for (int& s : signs) s = -s;
  IntMatrix b = t.pairing();
  for (auto& row : b)
    for (Int& x : row) x = checked_neg(x);
  return GradedMatrix(t.names(), std::move(signs), std::move(b), t.modulus());
}

/// T^-: negated s row and column, interior shifted by -b(g,s)-b(s,h).
inline GradedMatrix bar(const GradedMatrix& t) {
  const int n = t.size();
  IntMatrix b(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == 0 || j == 0)
        b[i][j] = checked_neg(t.at(i, j));
      else
        b[i][j] = checked_sub(checked_sub(t.at(i, j), t.at(i, 0)), t.at(0, j));
    }
  return GradedMatrix(t.names(), t.signs(), std::move(b), t.modulus());
}

/// The pairing with its signs dropped.
struct BasedMatrix {
  std::vector<std::string> names;
  IntMatrix b;
  Int modulus = 0;
  bool operator==(const BasedMatrix&) const = default;
};

inline BasedMatrix forget_bipartition(const GradedMatrix& t) { return BasedMatrix{t.names(), t.pairing(), t.modulus()}; }

enum class ElementType { None, Type1, Type2 };

struct Classification {
  /// Indexed like the matrix; entry 0 (s) is always None.
  std::vector<ElementType> types;
  std::vector<std::pair<int, int>> complementary;
};

inline void require_skew(const GradedMatrix& t) {
  if (!t.is_skew()) throw Error(ErrorCode::NotSkew, "operation requires a skew-symmetric graded matrix");
}

inline Classification classify_elements(const GradedMatrix& t) {
  require_skew(t);
  const int n = t.size();
  Classification c;
  c.types.assign(n, ElementType::None);
  for (int g = 1; g < n; ++g) {
    bool zero = true, like_s = true;
    for (int h = 0; h < n; ++h) {
      if (t.at(g, h) != 0) zero = false;
      if (t.at(g, h) != t.at(0, h)) like_s = false;
    }
    if (zero)
      c.types[g] = ElementType::Type1;
    else if (like_s)
      c.types[g] = ElementType::Type2;
  }
  for (int g1 = 1; g1 < n; ++g1)
    for (int g2 = g1 + 1; g2 < n; ++g2) {
      if (t.sign(g1) != -t.sign(g2)) continue;
      bool ok = true;
      for (int h = 0; h < n && ok; ++h) ok = t.reduce(t.at(g1, h) + t.at(g2, h)) == t.at(0, h);
      if (ok) c.complementary.emplace_back(g1, g2);
    }
  return c;
}

inline bool is_primitive(const GradedMatrix& t) {
  if (!t.is_skew()) return false;
  Classification c = classify_elements(t);
  return c.complementary.empty() &&
         std::all_of(c.types.begin(), c.types.end(), [](ElementType e) { return e == ElementType::None; });
}

/// One step of a primitive reduction, naming the deleted elements.
struct Deletion {
  ElementType type = ElementType::None;  // None marks a complementary pair
  std::vector<std::string> names;
};

struct Reduction {
  GradedMatrix result;
  std::vector<Deletion> steps;
};

namespace detail {

template <class Choose>
Reduction reduce_with(const GradedMatrix& t, Choose choose) {
  Reduction r{t, {}};
  for (;;) {
    Classification c = classify_elements(r.result);
    std::vector<Deletion> options;
    std::vector<std::vector<int>> indices;
    for (int g = 1; g < r.result.size(); ++g)
      if (c.types[g] != ElementType::None) {
        options.push_back(Deletion{c.types[g], {r.result.name(g)}});
        indices.push_back({g});
      }
    for (auto [a, b] : c.complementary) {
      options.push_back(Deletion{ElementType::None, {r.result.name(a), r.result.name(b)}});
      indices.push_back({a, b});
    }
    if (options.empty()) return r;
    const std::size_t k = choose(options.size());
    r.steps.push_back(options[k]);
    r.result = r.result.without(indices[k]);
  }
}

}  // namespace detail

/// Deletes type 1, type 2 elements and complementary pairs until none remain,
/// always taking the first available deletion (types before pairs, by index).
inline Reduction reduce_primitive(const GradedMatrix& t) {
  return detail::reduce_with(t, [](std::size_t) { return std::size_t{0}; });
}

/// Same as reduce_primitive but picks each deletion uniformly at random.
template <class Rng>
Reduction reduce_primitive_randomized(const GradedMatrix& t, Rng& rng) {
  return detail::reduce_with(t, [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); });
}

/// A sign- and pairing-preserving bijection from t1 to t2 fixing s, as a map of indices.
inline std::optional<std::vector<int>> find_isomorphism(const GradedMatrix& t1, const GradedMatrix& t2) {
  if (t1.size() != t2.size() || t1.modulus() != t2.modulus() || t1.at(0, 0) != t2.at(0, 0)) return std::nullopt;
  const int n = t1.size();
  auto signature = [](const GradedMatrix& t, int g) {
    std::vector<Int> row, col;
    for (int h = 1; h < t.size(); ++h) {
      row.push_back(t.at(g, h));
      col.push_back(t.at(h, g));
    }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    std::vector<Int> sig{t.sign(g), t.at(g, 0), t.at(0, g), t.at(g, g)};
    sig.insert(sig.end(), row.begin(), row.end());
    sig.insert(sig.end(), col.begin(), col.end());
    return sig;
  };
  std::vector<std::vector<Int>> sig1(n), sig2(n);
  for (int g = 1; g < n; ++g) {
    sig1[g] = signature(t1, g);
    sig2[g] = signature(t2, g);
  }
  {
    auto a = sig1, b = sig2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::vector<int>> candidates(n);
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h)
      if (sig1[g] == sig2[h]) candidates[g].push_back(h);
  std::vector<int> order;
  for (int g = 1; g < n; ++g) order.push_back(g);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return candidates[a].size() < candidates[b].size(); });

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  image[0] = 0;
  used[0] = true;
  std::vector<int> placed{0};
  auto consistent = [&](int g, int h) {
    for (int p : placed) {
      if (t1.at(g, p) != t2.at(h, image[p]) || t1.at(p, g) != t2.at(image[p], h)) return false;
    }
    return t1.at(g, g) == t2.at(h, h);
  };
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == order.size()) return true;
    const int g = order[k];
    for (int h : candidates[g]) {
      if (used[h] || !consistent(g, h)) continue;
      image[g] = h;
      used[h] = true;
      placed.push_back(g);
      if (self(self, k + 1)) return true;
      placed.pop_back();
      used[h] = false;
      image[g] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return image;
}

inline bool is_isomorphic(const GradedMatrix& t1, const GradedMatrix& t2) { return find_isomorphism(t1, t2).has_value(); }

/// u+ and u- of a normal integer matrix.
inline std::pair<LaurentFreePolynomial, LaurentFreePolynomial> u_pm_of_matrix(const GradedMatrix& t) {
  if (t.modulus() != 0) throw Error(ErrorCode::WrongRing, "u-polynomials need a matrix over the integers");
  if (!t.is_normal()) throw Error(ErrorCode::NotNormal, "u-polynomials need b(s,s) = 0");
  LaurentFreePolynomial plus, minus;
  for (int g = 1; g < t.size(); ++g) {
    const Int v = t.at(g, 0);
    if (v == 0) continue;
    const int exponent = static_cast<int>(v > 0 ? v : -v);
    auto term = LaurentFreePolynomial::monomial(t.sign(g), exponent);
    if ((v > 0 ? 1 : -1) == t.sign(g))
      plus = plus + term;
    else
      minus = minus + term;
  }
  return {plus, minus};
}

/// Restriction to the elements with b(g,s) in (-B) u {0} u B.
inline GradedMatrix gamma_A(const GradedMatrix& t, const std::set<Int>& positive_values) {
  auto in_a = [&](Int v) {
    if (t.modulus() != 0) {
      if (v == 0) return true;
      for (Int b : positive_values)
        if (t.reduce(b) == v || t.reduce(-b) == v) return true;
      return false;
    }
    return v == 0 || positive_values.count(v < 0 ? -v : v) > 0;
  };
  for (Int b : positive_values)
    if (b <= 0) throw Error(ErrorCode::InvalidArgument, "B must contain positive values");
  if (!in_a(t.at(0, 0))) throw Error(ErrorCode::NotANormal, "b(s,s) is not in A");
  std::vector<int> keep;
  for (int g = 1; g < t.size(); ++g)
    if (in_a(t.at(g, 0))) keep.push_back(g);
  return t.restrict_to(keep);
}

/// Elements sorted by (sign, name); s stays first.
inline GradedMatrix canonical_order(const GradedMatrix& t) {
  std::vector<int> keep;
  for (int g = 1; g < t.size(); ++g) keep.push_back(g);
  std::sort(keep.begin(), keep.end(), [&](int a, int b) {
    return std::pair(t.sign(a), t.name(a)) < std::pair(t.sign(b), t.name(b));
  });
  return t.restrict_to(keep);
}

// Inverse moves. New element names must not clash with existing ones.

/// M1^-1: adds an element with zero row and column.
inline GradedMatrix add_type1(const GradedMatrix& t, const std::string& name, int sign) {
  const int n = t.size();
  auto names = t.names();
  auto signs = t.signs();
  names.push_back(name);
  signs.push_back(sign);
  IntMatrix b = t.pairing();
  for (auto& row : b) row.push_back(0);
  b.push_back(std::vector<Int>(n + 1, 0));
  return GradedMatrix(std::move(names), std::move(signs), std::move(b), t.modulus());
}

/// M2^-1: adds a copy of s's row and column (the new element pairs with s as s does).
inline GradedMatrix add_type2(const GradedMatrix& t, const std::string& name, int sign) {
  require_skew(t);
  const int n = t.size();
  auto names = t.names();
  auto signs = t.signs();
  names.push_back(name);
  signs.push_back(sign);
  IntMatrix b = t.pairing();
  for (int i = 0; i < n; ++i) b[i].push_back(t.at(i, 0));
  std::vector<Int> row(n + 1, 0);
  for (int j = 0; j < n; ++j) row[j] = t.at(0, j);
  b.push_back(row);
  return GradedMatrix(std::move(names), std::move(signs), std::move(b), t.modulus());
}

/// M3^-1: adds g1 (sign `sign`) with row `g1_row` against the existing elements, and
/// g2 (opposite sign) with row b(s,.) - b(g1,.).
inline GradedMatrix add_complementary_pair(const GradedMatrix& t, const std::string& name1, const std::string& name2,
                                           int sign, const std::vector<Int>& g1_row) {
  require_skew(t);
  const int n = t.size();
  if (static_cast<int>(g1_row.size()) != n) throw Error(ErrorCode::InvalidArgument, "g1 row must cover G");
  auto names = t.names();
  auto signs = t.signs();
  names.push_back(name1);
  names.push_back(name2);
  signs.push_back(sign);
  signs.push_back(-sign);
  IntMatrix b(n + 2, std::vector<Int>(n + 2, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = t.at(i, j);
  for (int j = 0; j < n; ++j) {
    const Int g2 = checked_sub(t.at(0, j), g1_row[j]);
    b[n][j] = g1_row[j];
    b[j][n] = checked_neg(g1_row[j]);
    b[n + 1][j] = g2;
    b[j][n + 1] = checked_neg(g2);
  }
  // Complementarity tested against g2 itself forces b(g1,g2) = b(g1,s).
  b[n][n + 1] = g1_row[0];
  b[n + 1][n] = checked_neg(g1_row[0]);
  return GradedMatrix(std::move(names), std::move(signs), std::move(b), t.modulus());
}


/// Applies `moves` random inverse moves M1^-1, M2^-1, M3^-1 with entries in [-range, range].
/// New elements are named "i1", "i2", ... skipping names in use.
template <class Rng>
GradedMatrix inflate_randomly(GradedMatrix t, int moves, Rng& rng, Int range = 3) {
  int counter = 0;
  auto fresh = [&]() {
    std::string name;
    do {
      name = "i" + std::to_string(++counter);
    } while (t.index_of(name) != -1);
    return name;
  };
  std::uniform_int_distribution<int> kind(1, 3), coin(0, 1);
  std::uniform_int_distribution<Int> entry(-range, range);
  for (int k = 0; k < moves; ++k) {
    const int sign = coin(rng) ? 1 : -1;
    switch (kind(rng)) {
      case 1: t = add_type1(t, fresh(), sign); break;
      case 2: t = add_type2(t, fresh(), sign); break;
      default: {
        std::vector<Int> row(t.size());
        for (Int& x : row) x = entry(rng);
        const std::string a = fresh();
        t = add_complementary_pair(t, a, fresh(), sign, row);
      }
    }
  }
  return t;
}

}  // namespace knotcob
