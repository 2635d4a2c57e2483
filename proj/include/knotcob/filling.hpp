#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "knotcob/error.hpp"
#include "knotcob/graded_matrix.hpp"
#include "knotcob/integer.hpp"
#include "knotcob/rank.hpp"

namespace knotcob {

/// Default bound on |G| for filling enumeration and genus search.
inline constexpr int kDefaultSizeCap = 18;

/// Several graded matrices over one ring viewed as a single form on the free module.
/// Non-base elements get global ids 0..element_count()-1, matrix by matrix.
class Family {
 public:
  explicit Family(std::vector<GradedMatrix> members) : members_(std::move(members)) {
    if (members_.empty()) throw Error(ErrorCode::InvalidArgument, "a family needs at least one matrix");
    for (const GradedMatrix& t : members_)
      if (t.modulus() != members_[0].modulus()) throw Error(ErrorCode::WrongRing, "family members use different rings");
    for (std::size_t t = 0; t < members_.size(); ++t)
      for (int g = 1; g < members_[t].size(); ++g) where_.push_back({static_cast<int>(t), g});
  }

  int rank() const { return static_cast<int>(members_.size()); }
  const GradedMatrix& member(int t) const { return members_[t]; }
  const std::vector<GradedMatrix>& members() const { return members_; }
  int element_count() const { return static_cast<int>(where_.size()); }
  int owner(int id) const { return where_[id].first; }
  int local(int id) const { return where_[id].second; }
  int sign(int id) const { return members_[owner(id)].sign(local(id)); }
  std::string element_name(int id) const { return members_[owner(id)].name(local(id)) + "@" + std::to_string(owner(id) + 1); }
  Int modulus() const { return members_[0].modulus(); }
  Int reduce(Int x) const { return modulus() == 0 ? x : mod_floor(x, modulus()); }

 private:
  std::vector<GradedMatrix> members_;
  std::vector<std::pair<int, int>> where_;
};

/// A short vector: at most two non-base elements with coefficient 1 plus base coefficients
/// (one per family member).
struct FillingVector {
  std::vector<int> elements;
  std::vector<Int> base;
  bool operator==(const FillingVector&) const = default;
};

struct Filling {
  std::vector<FillingVector> vectors;
};

/// b(x, y) for vectors of a family.
inline Int pair_vectors(const Family& f, const FillingVector& x, const FillingVector& y) {
  // Expand each vector into (member, local index, coefficient) terms.
  auto terms = [&](const FillingVector& v) {
    std::vector<std::array<Int, 3>> out;
    for (int id : v.elements) out.push_back({f.owner(id), f.local(id), 1});
    for (int t = 0; t < static_cast<int>(v.base.size()); ++t)
      if (v.base[t] != 0) out.push_back({t, 0, v.base[t]});
    return out;
  };
  Int total = 0;
  for (auto [tx, gx, cx] : terms(x))
    for (auto [ty, gy, cy] : terms(y)) {
      if (tx != ty) continue;
      const Int v = f.member(static_cast<int>(tx)).at(static_cast<int>(gx), static_cast<int>(gy));
      total = f.reduce(checked_add(total, checked_mul(checked_mul(cx, cy), v)));
    }
  return total;
}

inline IntMatrix filling_matrix(const Family& f, const Filling& l) {
  const std::size_t k = l.vectors.size();
  IntMatrix m(k, std::vector<Int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = pair_vectors(f, l.vectors[i], l.vectors[j]);
  return m;
}

/// sigma(lambda): half the rank of the filling matrix.
inline HalfInteger filling_genus(const Family& f, const Filling& l) {
  return HalfInteger::half_of(rank_in_ring(filling_matrix(f, l), f.modulus()));
}

/// Checks the filling axioms; throws InvalidArgument naming the first violation.
inline void check_filling(const Family& f, const Filling& l) {
  std::vector<int> seen(f.element_count(), 0);
  bool designated = false;
  for (const FillingVector& v : l.vectors) {
    if (static_cast<int>(v.base.size()) != f.rank()) throw Error(ErrorCode::InvalidArgument, "base coefficients do not match the family");
    if (v.elements.size() > 2) throw Error(ErrorCode::InvalidArgument, "vector is not short: more than two elements");
    for (int id : v.elements) {
      if (id < 0 || id >= f.element_count()) throw Error(ErrorCode::InvalidArgument, "unknown element id");
      ++seen[id];
    }
    if (v.elements.size() == 2 && (v.elements[0] == v.elements[1] || f.sign(v.elements[0]) == f.sign(v.elements[1])))
      throw Error(ErrorCode::InvalidArgument, "vector is not short: paired elements must have opposite signs");
    if (v.elements.empty() && std::all_of(v.base.begin(), v.base.end(), [&](Int c) { return f.reduce(c) == f.reduce(1); }))
      designated = true;
  }
  for (int id = 0; id < f.element_count(); ++id)
    if (seen[id] != 1) throw Error(ErrorCode::InvalidArgument, "element " + f.element_name(id) + " is not covered exactly once");
  if (!designated) throw Error(ErrorCode::InvalidArgument, "the vector s_1 + ... + s_r is missing");
}

/// True when `l` is a filling of the family whose matrix vanishes.
inline bool verify_zero_filling(const Family& f, const Filling& l) {
  try {
    check_filling(f, l);
  } catch (const Error&) {
    return false;
  }
  for (const auto& row : filling_matrix(f, l))
    for (Int x : row)
      if (x != 0) return false;
  return true;
}

namespace detail {

/// Calls visit(partner) for every involution on ids (partner[i] == i for fixed points)
/// whose free orbits pair opposite signs. visit returns false to stop.
inline bool for_each_involution(const std::vector<int>& signs, const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(signs.size());
  std::vector<int> partner(n, -1);
  std::function<bool(int)> go = [&](int i) -> bool {
    while (i < n && partner[i] != -1) ++i;
    if (i == n) return visit(partner);
    partner[i] = i;
    if (!go(i + 1)) return false;
    for (int j = i + 1; j < n; ++j) {
      if (partner[j] != -1 || signs[j] == signs[i]) continue;
      partner[i] = j;
      partner[j] = i;
      if (!go(i + 1)) return false;
      partner[j] = -1;
    }
    partner[i] = -1;
    return true;
  };
  return go(0);
}

inline void check_size(int size, int cap) {
  if (size > cap) throw Error(ErrorCode::SizeCap, "|G| = " + std::to_string(size) + " exceeds the cap " + std::to_string(cap));
}

}  // namespace detail

/// Calls visit on every tuple filling: an involution on all non-base elements pairing
/// opposite signs, and for every orbit vector base coefficients on s_2..s_r in
/// [-bound, bound] (s_1 normalized to 0). The designated vector comes first.
inline void for_each_tuple_filling(const Family& f, int bound, int cap, const std::function<bool(const Filling&)>& visit) {
  detail::check_size(f.element_count() + f.rank(), cap);
  std::vector<int> signs;
  for (int id = 0; id < f.element_count(); ++id) signs.push_back(f.sign(id));
  const int free_coeffs = f.rank() - 1;
  detail::for_each_involution(signs, [&](const std::vector<int>& partner) {
    Filling base;
    base.vectors.push_back(FillingVector{{}, std::vector<Int>(f.rank(), 1)});
    for (int i = 0; i < f.element_count(); ++i) {
      if (partner[i] == i)
        base.vectors.push_back(FillingVector{{i}, std::vector<Int>(f.rank(), 0)});
      else if (partner[i] > i)
        base.vectors.push_back(FillingVector{{i, partner[i]}, std::vector<Int>(f.rank(), 0)});
    }
    if (free_coeffs == 0 || bound == 0) return visit(base);
    // Odometer over all coefficient assignments.
    const std::size_t slots = (base.vectors.size() - 1) * static_cast<std::size_t>(free_coeffs);
    std::vector<Int> digit(slots, -bound);
    for (;;) {
      Filling l = base;
      for (std::size_t k = 0; k < slots; ++k) l.vectors[1 + k / free_coeffs].base[1 + k % free_coeffs] = digit[k];
      if (!visit(l)) return false;
      std::size_t k = 0;
      while (k < slots && digit[k] == bound) digit[k++] = -bound;
      if (k == slots) return true;
      ++digit[k];
    }
  });
}

inline std::vector<Filling> tuple_fillings(const std::vector<GradedMatrix>& ts, int bound, int cap = kDefaultSizeCap) {
  std::vector<Filling> out;
  for_each_tuple_filling(Family(ts), bound, cap, [&](const Filling& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

/// Simple fillings of one matrix (involutions on G - {s} pairing opposite signs).
inline std::vector<Filling> simple_fillings(const GradedMatrix& t, int cap = kDefaultSizeCap) {
  return tuple_fillings({t}, 0, cap);
}

struct GenusResult {
  HalfInteger value;
  /// A simple filling attaining the minimum.
  Filling witness;
};

/// Exact graded genus of one matrix by branch and bound over simple fillings.
/// Elements pairing like a multiple of s (type 1 and type 2 elements among them) are
/// always left as fixed points: pairing them never lowers the rank. `cap` bounds the
/// number of elements that take part in the search, counting s.
inline GenusResult genus_with_witness(const GradedMatrix& t, int cap = kDefaultSizeCap) {
  const int n = t.size();
  const Int modulus = t.modulus();
  // Rank modulo a large prime never exceeds the rational rank, so it is a valid bound.
  const Int bound_prime = modulus == 0 ? 2147483647 : modulus;

  // Is g congruent to c*s modulo the radical of b for some scalar c = num/den?
  auto like_s = [&](int g) {
    Int num = 0, den = 1;
    for (int h = 0; h < n; ++h) {
      if (t.at(0, h) != 0) {
        num = t.at(g, h);
        den = t.at(0, h);
        break;
      }
      if (t.at(h, 0) != 0) {
        num = t.at(h, g);
        den = t.at(h, 0);
        break;
      }
    }
    if (modulus != 0) {
      num = t.reduce(checked_mul(num, mod_inverse(den, modulus)));
      den = 1;
    }
    for (int h = 0; h < n; ++h) {
      if (t.reduce(checked_mul(t.at(g, h), den) - checked_mul(num, t.at(0, h))) != 0) return false;
      if (t.reduce(checked_mul(t.at(h, g), den) - checked_mul(num, t.at(h, 0))) != 0) return false;
    }
    return true;
  };

  std::vector<int> fixed, free;
  for (int g = 1; g < n; ++g) (like_s(g) ? fixed : free).push_back(g);
  detail::check_size(static_cast<int>(free.size()) + 1, cap);

  using Vec = std::vector<int>;  // indices into G, each with coefficient 1
  std::vector<Vec> chosen{{0}};
  for (int g : fixed) chosen.push_back({g});
  auto gram = [&](const std::vector<Vec>& vs) {
    IntMatrix m(vs.size(), std::vector<Int>(vs.size(), 0));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j)
        for (int a : vs[i])
          for (int b : vs[j]) m[i][j] = checked_add(m[i][j], t.at(a, b));
    return m;
  };

  // Start from the identity involution.
  std::vector<Vec> best_vectors = chosen;
  for (int g : free) best_vectors.push_back({g});
  int best = rank_in_ring(gram(best_vectors), modulus);

  const int k = static_cast<int>(free.size());
  std::vector<bool> done(k, false);
  std::function<void(int)> go = [&](int i) {
    if (best == 0) return;
    while (i < k && done[i]) ++i;
    if (i == k) {
      const int r = rank_in_ring(gram(chosen), modulus);
      if (r < best) {
        best = r;
        best_vectors = chosen;
      }
      return;
    }
    done[i] = true;
    auto try_vector = [&](Vec v) {
      chosen.push_back(std::move(v));
      if (rank_mod_p(gram(chosen), bound_prime) < best) go(i + 1);
      chosen.pop_back();
    };
    for (int j = i + 1; j < k; ++j) {
      if (done[j] || t.sign(free[j]) == t.sign(free[i])) continue;
      done[j] = true;
      try_vector({free[i], free[j]});
      done[j] = false;
    }
    try_vector({free[i]});
    done[i] = false;
  };
  go(0);

  GenusResult result{HalfInteger::half_of(best), {}};
  for (const Vec& v : best_vectors) {
    FillingVector fv{{}, {v == Vec{0} ? Int{1} : Int{0}}};
    if (v != Vec{0})
      for (int g : v) fv.elements.push_back(g - 1);
    result.witness.vectors.push_back(std::move(fv));
  }
  return result;
}

inline HalfInteger genus(const GradedMatrix& t, int cap = kDefaultSizeCap) { return genus_with_witness(t, cap).value; }

/// sigma_p: the genus of the reduction mod p.
inline HalfInteger p_genus(const GradedMatrix& t, Int p, int cap = kDefaultSizeCap) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  return genus(t.reduced_mod(p), cap);
}

inline bool is_hyperbolic(const GradedMatrix& t, int cap = kDefaultSizeCap) { return genus(t, cap).twice == 0; }

/// Default work budget (search nodes) for bounded tuple searches.
inline constexpr long kDefaultWorkCap = 2'000'000;

struct SearchOutcome {
  std::optional<Filling> filling;
  bool exhausted = false;  // true when the whole bounded space was searched
};

/// Depth-first search for a tuple filling with zero matrix, pruning as soon as two
/// chosen vectors pair nontrivially.
inline SearchOutcome find_zero_filling(const Family& f, int bound, int cap = kDefaultSizeCap, long work_cap = kDefaultWorkCap) {
  detail::check_size(f.element_count() + f.rank(), cap);
  const int n = f.element_count();
  const int r = f.rank();
  std::vector<FillingVector> chosen{FillingVector{{}, std::vector<Int>(r, 1)}};
  if (pair_vectors(f, chosen[0], chosen[0]) != 0) return {std::nullopt, true};
  std::vector<bool> done(n, false);
  long work = 0;
  bool out_of_budget = false;
  std::optional<Filling> found;

  auto compatible = [&](const FillingVector& v) {
    if (pair_vectors(f, v, v) != 0) return false;
    for (const FillingVector& w : chosen)
      if (pair_vectors(f, v, w) != 0 || pair_vectors(f, w, v) != 0) return false;
    return true;
  };
  std::function<void(int)> go = [&](int i) {
    if (found || out_of_budget) return;
    if (++work > work_cap) {
      out_of_budget = true;
      return;
    }
    while (i < n && done[i]) ++i;
    if (i == n) {
      found = Filling{chosen};
      return;
    }
    done[i] = true;
    auto with_coefficients = [&](std::vector<int> elements) {
      const int slots = r - 1;
      std::vector<Int> digit(slots, -bound);
      for (;;) {
        FillingVector v{elements, std::vector<Int>(r, 0)};
        for (int k = 0; k < slots; ++k) v.base[1 + k] = digit[k];
        if (compatible(v)) {
          chosen.push_back(v);
          go(i + 1);
          chosen.pop_back();
          if (found || out_of_budget) return;
        }
        int k = 0;
        while (k < slots && digit[k] == bound) digit[k++] = -bound;
        if (k == slots) return;
        ++digit[k];
      }
    };
    for (int j = i + 1; j < n && !found && !out_of_budget; ++j) {
      if (done[j] || f.sign(j) == f.sign(i)) continue;
      done[j] = true;
      with_coefficients({i, j});
      done[j] = false;
    }
    if (!found && !out_of_budget) with_coefficients({i});
    done[i] = false;
  };
  go(0);
  return {found, !out_of_budget};
}

/// Minimum of sigma(lambda) over the bounded tuple fillings: an upper bound for the
/// genus of the family, exact for one matrix.
inline HalfInteger tuple_genus_upper(const std::vector<GradedMatrix>& ts, int bound, int cap = kDefaultSizeCap,
                                     long work_cap = kDefaultWorkCap) {
  Family f(ts);
  if (f.rank() == 1) return genus(ts[0], cap);
  int best = -1;
  long work = 0;
  for_each_tuple_filling(f, bound, cap, [&](const Filling& l) {
    const int r = rank_in_ring(filling_matrix(f, l), f.modulus());
    if (best < 0 || r < best) best = r;
    return best > 0 && ++work < work_cap;
  });
  return HalfInteger::half_of(best);
}

enum class Verdict { Cobordant, NotCobordant, Unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Cobordant: return "Cobordant";
    case Verdict::NotCobordant: return "NotCobordant";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

struct CobordismVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  /// For Cobordant: a zero filling of the family (T1, -T2).
  std::optional<Filling> certificate;
};

/// Decides cobordism of T1 and T2 where an exact criterion applies and otherwise
/// searches bounded tuple fillings of (T1, -T2) for a zero certificate.
inline CobordismVerdict is_cobordant(const GradedMatrix& t1, const GradedMatrix& t2, int bound, int cap = kDefaultSizeCap,
                                     long work_cap = kDefaultWorkCap) {
  if (t1.modulus() != t2.modulus()) throw Error(ErrorCode::WrongRing, "matrices live over different rings");
  const Family family({t1, neg(t2)});
  const int n1 = t1.element_count();

  // A matrix is cobordant to the trivial one iff it is hyperbolic.
  if (t1.is_trivial() || t2.is_trivial()) {
    GenusResult g = genus_with_witness(t2.is_trivial() ? t1 : neg(t2), cap);
    if (g.value.twice != 0)
      return {Verdict::NotCobordant, "the nontrivial side is not hyperbolic (genus " + g.value.to_string() + ")", {}};
    Filling cert;
    for (const FillingVector& v : g.witness.vectors) {
      FillingVector w{{}, {0, 0}};
      const bool designated = v.elements.empty();
      if (designated) {
        w.base = {1, 1};
      } else if (t2.is_trivial()) {
        w.elements = v.elements;
      } else {
        for (int id : v.elements) w.elements.push_back(id + n1);
      }
      cert.vectors.push_back(std::move(w));
    }
    return {Verdict::Cobordant, "the nontrivial side is hyperbolic", cert};
  }

  if (t1.at(0, 0) != t2.at(0, 0)) return {Verdict::NotCobordant, "b(s,s) differs", {}};
  if (t1.modulus() == 0 && t1.is_normal()) {
    if (u_pm_of_matrix(t1) != u_pm_of_matrix(t2)) return {Verdict::NotCobordant, "u+ or u- differs", {}};
  }
  try {
    const HalfInteger g1 = genus(t1, cap), g2 = genus(t2, cap);
    if (g1 != g2) return {Verdict::NotCobordant, "genus differs (" + g1.to_string() + " vs " + g2.to_string() + ")", {}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeCap) throw;
  }

  if (auto iso = find_isomorphism(t1, t2)) {
    Filling cert;
    cert.vectors.push_back(FillingVector{{}, {1, 1}});
    for (int g = 1; g < t1.size(); ++g) cert.vectors.push_back(FillingVector{{g - 1, n1 + (*iso)[g] - 1}, {0, 0}});
    return {Verdict::Cobordant, "isomorphic", cert};
  }
  SearchOutcome s = find_zero_filling(family, bound, cap, work_cap);
  if (s.filling) return {Verdict::Cobordant, "zero filling found", s.filling};
  return {Verdict::Unknown, s.exhausted ? "no zero filling within the coefficient bound" : "search budget exhausted", {}};
}

}  // namespace knotcob
