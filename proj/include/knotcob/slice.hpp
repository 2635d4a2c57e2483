#pragma once

#include <string>
#include <vector>

#include "knotcob/filling.hpp"
#include "knotcob/invariants.hpp"
#include "knotcob/lagrangian.hpp"
#include "knotcob/matrix_json.hpp"

namespace knotcob {

struct SliceConfig {
  std::vector<std::vector<Int>> covers{{2}, {3}};
  std::vector<Int> primes{2, 3, 5};
  std::vector<Int> lagrangian_moduli{2};
  int coeff_bound = 2;
  int size_cap = kDefaultSizeCap;
  int cover_cap = kDefaultCoverCap;
  Int homology_cap = kDefaultHomologyCap;
  long subgroup_cap = kDefaultSubgroupCap;
};

/// One failed obstruction, with enough data to replay it.
struct ObstructionReason {
  std::string kind;  // u_nonzero, not_hyperbolic, p_genus_nonzero, lagrangian
  std::vector<Int> cover;
  Json data = Json::object();
};

struct ObstructionReport {
  bool not_slice = false;
  std::vector<ObstructionReason> reasons;
  Int sg_lower_bound = 0;
  bool partial = false;
  std::vector<std::string> skipped;
};

inline ObstructionReport obstruction_report(const EmbeddedDiagram& d, const SliceConfig& config = {}) {
  ObstructionReport report;
  auto skip = [&](const std::string& what, const Error& e) {
    report.partial = true;
    report.skipped.push_back(what + ": " + e.what());
  };

  std::vector<std::vector<Int>> sequences{{}};
  sequences.insert(sequences.end(), config.covers.begin(), config.covers.end());
  struct Computed {
    std::vector<Int> cover;
    KnotInvariants inv;
  };
  std::vector<Computed> computed;
  for (const auto& seq : sequences) {
    try {
      computed.push_back({seq, higher_invariants(d, seq, config.cover_cap)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResourceLimit) throw;
      skip("cover", e);
    }
  }

  for (const Computed& c : computed)
    if (!c.inv.u_plus.is_zero() || !c.inv.u_minus.is_zero())
      report.reasons.push_back({"u_nonzero", c.cover, {{"u_plus", c.inv.u_plus.to_string()}, {"u_minus", c.inv.u_minus.to_string()}}});

  for (const Computed& c : computed) {
    try {
      const HalfInteger sigma = genus(c.inv.primitive.result, config.size_cap);
      // 2 sg >= sigma
      if (c.cover.empty()) report.sg_lower_bound = (std::max<Int>(0, sigma.twice) + 3) / 4;
      if (sigma.twice != 0) report.reasons.push_back({"not_hyperbolic", c.cover, {{"sigma", sigma.to_string()}}});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeCap) throw;
      skip("genus", e);
    }
  }

  for (const Computed& c : computed)
    for (Int p : config.primes) {
      try {
        const HalfInteger sigma = p_genus(c.inv.primitive.result, p, config.size_cap);
        if (sigma.twice != 0)
          report.reasons.push_back({"p_genus_nonzero", c.cover, {{"p", p}, {"sigma_p", sigma.to_string()}}});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SizeCap) throw;
        skip("p-genus", e);
      }
    }

  for (Int m : config.lagrangian_moduli) {
    try {
      LagrangianResult l = lagrangian_obstruction(d, m, config.homology_cap, config.subgroup_cap, config.size_cap);
      if (!l.passes)
        report.reasons.push_back({"lagrangian", {}, {{"m", m}, {"genus", l.genus}, {"lagrangians_checked", l.lagrangians_checked}, {"witness", l.witness}}});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeCap && e.code() != ErrorCode::ResourceLimit) throw;
      skip("lagrangian", e);
    }
  }
  report.not_slice = !report.reasons.empty();
  return report;
}

inline Json report_to_json(const ObstructionReport& r) {
  Json out;
  out["verdict"] = r.not_slice ? "NotSlice" : "Inconclusive";
  out["reasons"] = Json::array();
  for (const ObstructionReason& reason : r.reasons) {
    Json j{{"kind", reason.kind}, {"cover", reason.cover}};
    for (const auto& [k, v] : reason.data.items()) j[k] = v;
    out["reasons"].push_back(j);
  }
  out["sg_lower_bound"] = r.sg_lower_bound;
  out["partial"] = r.partial;
  if (!r.skipped.empty()) out["skipped"] = r.skipped;
  return out;
}

}  // namespace knotcob
