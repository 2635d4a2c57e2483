#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "knotcob/knotcob.hpp"

namespace knotcob::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string code, file, left, right;
  std::string primes = "2,3,5";
  std::string covers = "2;3";
  std::string m = "2";
  std::string signs;
  std::string moduli = "2";
  int bound = 2;
  int p = 1, q = 1;
  std::uint64_t seed = 1;
  int cases = 100;
  int moves = 8;
  int max_crossings = 6;
  int size_cap = kDefaultSizeCap;
  int cover_cap = kDefaultCoverCap;
};

inline std::vector<Int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<Int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "' in " + what);
    }
  }
  return out;
}

// "2;3;2,2" -> [[2],[3],[2,2]]
inline std::vector<std::vector<Int>> parse_sequences(const std::string& text) {
  std::vector<std::vector<Int>> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';'))
    if (!item.empty()) out.push_back(parse_int_list(item, "--covers"));
  return out;
}

inline std::vector<int> parse_signs(const std::string& text) {
  std::vector<int> out;
  if (text.find(',') == std::string::npos) {
    for (char c : text) {
      if (c == '+') out.push_back(1);
      else if (c == '-') out.push_back(-1);
      else throw UsageError("--signs takes a string of + and - or a comma list of 1/-1");
    }
    return out;
  }
  for (Int v : parse_int_list(text, "--signs")) out.push_back(static_cast<int>(v));
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool looks_like_json(const std::string& text) {
  auto at = text.find_first_not_of(" \t\r\n");
  return at != std::string::npos && text[at] == '{';
}

inline GaussCode code_input(const Options& o) {
  if (!o.code.empty() && !o.file.empty()) throw UsageError("give --code or --file, not both");
  if (!o.file.empty()) return parse_gauss_code(read_file(o.file));
  if (o.code.empty() && o.file.empty()) throw UsageError("a knot is required: --code or --file");
  return parse_gauss_code(o.code);
}

// A matrix argument is a JSON matrix file, a file holding a Gauss code, or a Gauss code
// (in which case T. of the knot is used).
inline GradedMatrix matrix_argument(const std::string& arg) {
  std::string text = arg;
  if (std::ifstream probe(arg); probe) text = read_file(arg);
  if (looks_like_json(text)) return matrix_from_json_text(text);
  return reduce_primitive(graded_matrix_of(build_carter(parse_gauss_code(text)))).result;
}

inline GradedMatrix matrix_input(const Options& o) {
  if (!o.file.empty() && o.code.empty()) {
    const std::string text = read_file(o.file);
    if (looks_like_json(text)) return matrix_from_json_text(text);
  }
  return reduce_primitive(graded_matrix_of(build_carter(code_input(o)))).result;
}

inline std::string format_matrix(const GradedMatrix& t, const std::string& indent = "  ") {
  std::size_t w = 3;
  for (int i = 0; i < t.size(); ++i) {
    w = std::max(w, t.name(i).size() + 1);
    for (int j = 0; j < t.size(); ++j) w = std::max(w, std::to_string(t.at(i, j)).size() + 1);
  }
  std::ostringstream out;
  out << indent << std::setw(static_cast<int>(w) + 2) << "";
  for (int j = 0; j < t.size(); ++j) out << std::setw(static_cast<int>(w)) << t.name(j);
  out << "\n";
  for (int i = 0; i < t.size(); ++i) {
    const char sign = i == 0 ? ' ' : (t.sign(i) > 0 ? '+' : '-');
    out << indent << std::setw(static_cast<int>(w)) << t.name(i) << ' ' << sign;
    for (int j = 0; j < t.size(); ++j) out << std::setw(static_cast<int>(w)) << t.at(i, j);
    out << "\n";
  }
  if (t.modulus() != 0) out << indent << "(over Z/" << t.modulus() << ")\n";
  return out.str();
}

inline std::string deletion_to_string(const Deletion& d) {
  std::string what = d.type == ElementType::Type1 ? "type 1" : d.type == ElementType::Type2 ? "type 2" : "pair";
  std::string names;
  for (const std::string& n : d.names) names += (names.empty() ? "" : ", ") + n;
  return what + ": " + names;
}

inline Json deletions_to_json(const std::vector<Deletion>& steps) {
  Json out = Json::array();
  for (const Deletion& d : steps)
    out.push_back({{"type", d.type == ElementType::Type1 ? "type1" : d.type == ElementType::Type2 ? "type2" : "pair"},
                   {"names", d.names}});
  return out;
}

inline Json surface_json(const EmbeddedDiagram& d) {
  const FaceData f = faces_and_genus(d.graph());
  return {{"genus", f.genus}, {"vertices", d.graph().vertex_count()}, {"edges", d.graph().edge_count()},
          {"faces", f.faces.size()}};
}

inline std::string surface_text(const EmbeddedDiagram& d) {
  const FaceData f = faces_and_genus(d.graph());
  std::ostringstream out;
  out << "surface: genus " << f.genus << " (V=" << d.graph().vertex_count() << ", E=" << d.graph().edge_count()
      << ", F=" << f.faces.size() << ")";
  return out.str();
}

inline void print(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json")
    out << j.dump(2) << "\n";
  else
    out << text;
}

inline int cmd_validate(const Options& o, std::ostream& out) {
  const GaussCode code = code_input(o);
  const EmbeddedDiagram d = build_carter(code);
  Json j{{"valid", true}, {"canonical", serialize(canonical(code))}, {"crossings", code.crossing_count()}};
  j["surface"] = surface_json(d);
  std::ostringstream t;
  t << "valid\ncanonical: " << serialize(canonical(code)) << "\ncrossings: " << code.crossing_count() << "\n"
    << surface_text(d) << "\n";
  print(out, o, j, t.str());
  return 0;
}

inline void invariants_block(const EmbeddedDiagram& d, Json& j, std::ostringstream& t) {
  const KnotInvariants inv = invariants_of(d);
  const LaurentFreePolynomial u = inv.u_plus - inv.u_minus;
  j["surface"] = surface_json(d);
  j["u_plus"] = inv.u_plus.to_string();
  j["u_minus"] = inv.u_minus.to_string();
  j["u"] = u.to_string();
  j["primitive_size"] = inv.primitive.result.element_count();
  j["primitive"] = matrix_to_canonical_json(inv.primitive.result);
  t << surface_text(d) << "\n"
    << "u+ = " << inv.u_plus << "\n"
    << "u- = " << inv.u_minus << "\n"
    << "u = " << u << "\n"
    << "primitive matrix: " << inv.primitive.result.element_count() << " elements besides s\n";
}

inline int cmd_invariants(const Options& o, std::ostream& out) {
  const GaussCode code = code_input(o);
  Json j{{"code", serialize(code)}, {"crossings", code.crossing_count()}};
  std::ostringstream t;
  t << "code: " << serialize(code) << "\ncrossings: " << code.crossing_count() << "\n";
  invariants_block(build_carter(code), j, t);
  print(out, o, j, t.str());
  return 0;
}

inline int cmd_matrix(const Options& o, std::ostream& out) {
  const GaussCode code = code_input(o);
  const KnotInvariants inv = invariants_of(build_carter(code));
  const GradedMatrix& prim = inv.primitive.result;
  Json j{{"code", serialize(code)},
         {"matrix", matrix_to_json(inv.matrix)},
         {"primitive", matrix_to_json(prim)},
         {"deletions", deletions_to_json(inv.primitive.steps)},
         {"crossing_lower_bound", prim.element_count()}};
  std::ostringstream t;
  t << "T(D):\n" << format_matrix(inv.matrix);
  t << "deletions:" << (inv.primitive.steps.empty() ? " none" : "") << "\n";
  for (const Deletion& d : inv.primitive.steps) t << "  " << deletion_to_string(d) << "\n";
  t << "T.(K):\n" << format_matrix(prim);
  t << "every diagram of this knot has at least " << prim.element_count() << " crossings\n";
  print(out, o, j, t.str());
  return 0;
}

inline int cmd_genus(const Options& o, std::ostream& out) {
  const GradedMatrix t = matrix_input(o);
  const GenusResult g = genus_with_witness(t, o.size_cap);
  const Family family({t});
  Json j{{"sigma", g.value.to_string()}, {"hyperbolic", g.value.twice == 0}, {"witness", filling_to_json(family, g.witness)}};
  std::ostringstream text;
  text << "sigma = " << g.value.to_string() << "\nhyperbolic: " << (g.value.twice == 0 ? "yes" : "no") << "\n";
  Json ps = Json::object();
  for (Int p : parse_int_list(o.primes, "--primes")) {
    if (!is_prime(p)) throw UsageError("--primes: " + std::to_string(p) + " is not prime");
    const HalfInteger s = p_genus(t, p, o.size_cap);
    ps[std::to_string(p)] = s.to_string();
    text << "sigma_" << p << " = " << s.to_string() << "\n";
  }
  j["sigma_p"] = ps;
  text << "witness filling:\n";
  for (const FillingVector& v : g.witness.vectors) text << "  " << vector_to_string(family, v) << "\n";
  print(out, o, j, text.str());
  return 0;
}

inline int cmd_cobordant(const Options& o, std::ostream& out) {
  if (o.left.empty() || o.right.empty()) throw UsageError("cobordant needs --left and --right");
  const GradedMatrix a = matrix_argument(o.left), b = matrix_argument(o.right);
  const CobordismVerdict v = is_cobordant(a, b, o.bound, o.size_cap);
  Json j{{"verdict", to_string(v.verdict)}, {"reason", v.reason}};
  std::ostringstream t;
  t << to_string(v.verdict) << " (" << v.reason << ")\n";
  if (v.certificate) {
    const Family family({a, neg(b)});
    j["certificate"] = filling_to_json(family, *v.certificate);
    j["certificate_verified"] = verify_zero_filling(family, *v.certificate);
    t << "certificate (zero filling of T1 and -T2):\n";
    for (const FillingVector& f : v.certificate->vectors) t << "  " << vector_to_string(family, f) << "\n";
  }
  print(out, o, j, t.str());
  return 0;
}

inline int cmd_cover(const Options& o, std::ostream& out) {
  const GaussCode code = code_input(o);
  const std::vector<Int> ms = parse_int_list(o.m, "--m");
  if (ms.empty()) throw UsageError("--m needs at least one degree");
  const EmbeddedDiagram lift = iterated_cover(build_carter(code), ms, o.cover_cap);
  const GaussCode lifted = lift.to_gauss_code();
  Json j{{"cover", ms}, {"lift", serialize(lifted)}, {"crossings", lifted.crossing_count()}};
  std::ostringstream t;
  t << "cover:";
  for (Int m : ms) t << " " << m;
  t << "\nlift: " << (lifted.empty() ? "(no crossings)" : serialize(lifted)) << "\ncrossings: " << lifted.crossing_count()
    << "\n";
  invariants_block(lift, j, t);
  print(out, o, j, t.str());
  return 0;
}

inline int cmd_slice(const Options& o, std::ostream& out) {
  SliceConfig config;
  config.covers = parse_sequences(o.covers);
  config.primes = parse_int_list(o.primes, "--primes");
  for (Int p : config.primes)
    if (!is_prime(p)) throw UsageError("--primes: " + std::to_string(p) + " is not prime");
  config.lagrangian_moduli = parse_int_list(o.moduli, "--lagrangian");
  config.coeff_bound = o.bound;
  config.size_cap = o.size_cap;
  config.cover_cap = o.cover_cap;
  const ObstructionReport r = obstruction_report(build_carter(code_input(o)), config);
  const Json j = report_to_json(r);
  std::ostringstream t;
  t << "verdict: " << j["verdict"].get<std::string>() << "\n";
  for (const Json& reason : j["reasons"]) {
    t << "  " << reason["kind"].get<std::string>();
    if (!reason["cover"].empty()) t << " on cover " << reason["cover"].dump();
    Json rest = reason;
    rest.erase("kind");
    rest.erase("cover");
    rest.erase("witness");
    if (!rest.empty()) t << " " << rest.dump();
    t << "\n";
  }
  t << "slice genus >= " << r.sg_lower_bound << "\n";
  if (r.partial) t << "partial: " << r.skipped.size() << " checks skipped\n";
  print(out, o, j, t.str());
  return 0;
}

inline int cmd_alpha(const Options& o, std::ostream& out) {
  std::vector<int> signs = o.signs.empty() ? std::vector<int>(o.p + o.q, 1) : parse_signs(o.signs);
  const GaussCode code = alpha_pq(o.p, o.q, signs);
  Json j{{"p", o.p}, {"q", o.q}, {"code", serialize(code)}};
  std::ostringstream t;
  t << "code: " << serialize(code) << "\n";
  const EmbeddedDiagram d = build_carter(code);
  invariants_block(d, j, t);
  const GradedMatrix m = graded_matrix_of(d);
  j["matrix"] = matrix_to_json(m);
  t << "T(D):\n" << format_matrix(m);
  print(out, o, j, t.str());
  return 0;
}

inline int cmd_fuzz(const Options& o, std::ostream& out) {
  if (o.cases < 0 || o.moves < 0 || o.max_crossings < 0) throw UsageError("fuzz counts must be non-negative");
  Json failures = Json::array();
  std::ostringstream t;
  for (int c = 0; c < o.cases; ++c) {
    std::mt19937_64 rng(o.seed + static_cast<std::uint64_t>(c));
    auto bad = fuzz_case(o.max_crossings, o.moves, rng);
    if (!bad) continue;
    Json moves = Json::array();
    for (const RMove& m : bad->moves) moves.push_back(to_string(m));
    failures.push_back({{"case", c}, {"seed", o.seed + c}, {"start", serialize(bad->start)}, {"moves", moves},
                        {"end", serialize(bad->end)}, {"violation", bad->what}});
    t << "case " << c << " (seed " << o.seed + c << "): " << bad->what << "\n  start: " << serialize(bad->start)
      << "\n  end:   " << serialize(bad->end) << "\n";
  }
  Json j{{"cases", o.cases}, {"violations", failures.size()}, {"failures", failures}};
  t << o.cases << " cases, " << failures.size() << " violations\n";
  print(out, o, j, t.str());
  return failures.empty() ? 0 : 1;
}

inline int cmd_isomorphic(const Options& o, std::ostream& out) {
  if (o.left.empty() || o.right.empty()) throw UsageError("isomorphic needs --left and --right");
  const GradedMatrix a = matrix_argument(o.left), b = matrix_argument(o.right);
  const auto iso = find_isomorphism(a, b);
  Json j{{"isomorphic", iso.has_value()}};
  std::ostringstream t;
  t << (iso ? "isomorphic" : "not isomorphic") << "\n";
  if (iso) {
    Json map = Json::object();
    for (int g = 1; g < a.size(); ++g) {
      map[a.name(g)] = b.name((*iso)[g]);
      t << "  " << a.name(g) << " -> " << b.name((*iso)[g]) << "\n";
    }
    j["bijection"] = map;
  }
  print(out, o, j, t.str());
  return 0;
}

/// Runs one command line (without the program name). Exit codes: 0 success, 1 domain
/// error or fuzz violation, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"knotcob: cobordism invariants of knots on surfaces"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto knot = [&](CLI::App* s) {
    s->add_option("--code", o.code, "signed Gauss code");
    s->add_option("--file", o.file, "file with a Gauss code (or a JSON matrix where accepted)");
  };
  auto caps = [&](CLI::App* s) {
    s->add_option("--size-cap", o.size_cap, "largest matrix the filling search accepts")->check(CLI::PositiveNumber);
    s->add_option("--cover-cap", o.cover_cap, "largest covering graph built")->check(CLI::PositiveNumber);
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> commands;
  auto add = [&](const std::string& name, const std::string& help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    commands.push_back({s, fn});
    return s;
  };

  knot(add("validate", "check a Gauss code", cmd_validate));
  knot(add("invariants", "u+, u- and the Carter surface", cmd_invariants));
  knot(add("matrix", "T(D), its primitive reduction and the deletions", cmd_matrix));
  {
    CLI::App* s = add("genus", "graded genus of T. or of a JSON matrix", cmd_genus);
    knot(s);
    caps(s);
    s->add_option("--primes", o.primes, "comma list of primes for sigma_p");
  }
  {
    CLI::App* s = add("cobordant", "decide cobordism of two matrices", cmd_cobordant);
    s->add_option("--left", o.left, "JSON matrix file or Gauss code")->required();
    s->add_option("--right", o.right, "JSON matrix file or Gauss code")->required();
    s->add_option("--bound", o.bound, "coefficient bound for the filling search")->check(CLI::NonNegativeNumber);
    caps(s);
  }
  {
    CLI::App* s = add("cover", "invariants of an iterated covering knot", cmd_cover);
    knot(s);
    caps(s);
    s->add_option("--m", o.m, "comma list of covering degrees");
  }
  {
    CLI::App* s = add("slice-check", "collect slice obstructions", cmd_slice);
    knot(s);
    caps(s);
    s->add_option("--primes", o.primes, "comma list of primes");
    s->add_option("--covers", o.covers, "covering sequences, e.g. 2;3;2,2");
    s->add_option("--bound", o.bound, "coefficient bound")->check(CLI::NonNegativeNumber);
    s->add_option("--lagrangian", o.moduli, "comma list of moduli for the Lagrangian test");
  }
  {
    CLI::App* s = add("alpha", "the curve alpha_{p,q} with chosen signs", cmd_alpha);
    s->add_option("--p", o.p, "horizontal chords")->required()->check(CLI::PositiveNumber);
    s->add_option("--q", o.q, "vertical chords")->required()->check(CLI::PositiveNumber);
    s->add_option("--signs", o.signs, "p+q signs, e.g. ++- or 1,1,-1 (default all +)");
  }
  {
    CLI::App* s = add("fuzz", "random R-move walks checking invariance", cmd_fuzz);
    s->add_option("--seed", o.seed, "base seed");
    s->add_option("--cases", o.cases, "number of walks");
    s->add_option("--moves", o.moves, "moves per walk");
    s->add_option("--max-crossings", o.max_crossings, "largest starting code");
  }
  {
    CLI::App* s = add("isomorphic", "test two matrices for isomorphism", cmd_isomorphic);
    s->add_option("--left", o.left, "JSON matrix file or Gauss code")->required();
    s->add_option("--right", o.right, "JSON matrix file or Gauss code")->required();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  for (auto [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    try {
      return fn(o, out);
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      if (o.format == "json")
        out << Json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}}.dump(2) << "\n";
      else
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
      return 1;
    }
  }
  return 2;
}

}  // namespace knotcob::cli
