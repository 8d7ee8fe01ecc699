// lcat: command-line front end over the library.
//
//   lcat char   FAMILY RANK (--fund c1,...|--partition l1,...) --mode dim|ps|ps-half|nps|char
//   lcat mult   FAMILY RANK (--spin-power P|--wedge-power M|--spin-rect R) [--target c1,...]
//   lcat paths  dyck|motzkin|riordan|rectangle N [K] [--triangle K] [--stats] [--bijection xi|xi-prime]
//   lcat verify NAME|all [--n N] [--small] [--threads T] [--list]
//   lcat scan   NAME [--n N]
//
// Global flags: --format json|csv|pretty, --cap N (default from LCAT_CAP,
// else 10^7), --seed S (for --sample), --oracle.  Exit codes: 0 ok,
// 1 identity failed, 2 validation error, 3 resource cap, 4 oracle mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "lcat/charforms.hpp"
#include "lcat/crystal.hpp"
#include "lcat/errors.hpp"
#include "lcat/identities.hpp"
#include "lcat/kingtab.hpp"
#include "lcat/paths.hpp"

using namespace lcat;
using nlohmann::json;

namespace {

enum class Format { json, csv, pretty };

struct Globals {
  Format format = Format::json;
  std::uint64_t cap = 10000000;
  std::uint64_t seed = 0;
  bool oracle = false;
};

// Thrown after the requested output has been printed, when the independent
// cross-check disagrees.
struct OracleMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string big(const BigInt& x) { return x.get_str(); }

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw ValidationError(what + ": not an integer list: " + s);
    out.push_back(v);
  }
  if (out.empty()) throw ValidationError(what + ": empty list");
  return out;
}

CartanType parse_type(const std::string& family, int rank) {
  const Family f = parse_family(family);
  if (rank < 1) throw ValidationError("rank must be positive");
  if (f == Family::D && rank < 2) throw ValidationError("type D needs rank >= 2");
  return CartanType(f, rank);
}

// --fund or --partition (exactly one); "0" alone means the zero weight.
DominantWeight parse_weight(const CartanType& ct, const std::string& fund, const std::string& partition) {
  if (!fund.empty() && !partition.empty()) throw ValidationError("give --fund or --partition, not both");
  if (!partition.empty()) {
    auto parts = parse_int_list(partition, "--partition");
    return DominantWeight::from_partition(ct, parts);
  }
  if (fund.empty()) throw ValidationError("a weight is required (--fund or --partition)");
  auto c = parse_int_list(fund, "--fund");
  if (c.size() == 1 && c[0] == 0 && ct.rank > 1) c.assign(ct.rank, 0);
  if (static_cast<int>(c.size()) != ct.rank)
    throw ValidationError("--fund needs " + std::to_string(ct.rank) + " coefficients for " + ct.str());
  return DominantWeight::from_fundamental(ct, c);
}

// -- output -------------------------------------------------------------------

void emit_poly(const Globals& g, const LaurentPoly& p, const std::string& var = "q") {
  switch (g.format) {
    case Format::json: std::cout << to_json_string(p) << "\n"; break;
    case Format::csv:
      std::cout << "exponent,coefficient\n";
      for (const auto& [e, c] : p.terms()) std::cout << e << "," << big(c) << "\n";
      break;
    case Format::pretty: std::cout << p.str(var) << "\n"; break;
  }
}

void emit_int(const Globals& g, const BigInt& x) {
  switch (g.format) {
    case Format::json: std::cout << json(big(x)).dump() << "\n"; break;
    case Format::csv: std::cout << "value\n" << big(x) << "\n"; break;
    case Format::pretty: std::cout << big(x) << "\n"; break;
  }
}

void emit_character(const Globals& g, const Character& ch) {
  switch (g.format) {
    case Format::json: {
      auto a = json::array();
      for (const auto& [w, m] : ch) a.push_back(json::array({w, big(m)}));
      std::cout << a.dump() << "\n";
      break;
    }
    case Format::csv:
      std::cout << "weight,multiplicity\n";
      for (const auto& [w, m] : ch) std::cout << "\"" << weight_str(w) << "\"," << big(m) << "\n";
      break;
    case Format::pretty:
      for (const auto& [w, m] : ch) std::cout << weight_str(w) << "  " << big(m) << "\n";
      break;
  }
}

// -- char ---------------------------------------------------------------------

struct CharArgs {
  std::string family, fund, partition, mode = "nps";
  int rank = 0;
};

int cmd_char(const Globals& g, const CharArgs& a) {
  const CartanType ct = parse_type(a.family, a.rank);
  const DominantWeight dw = parse_weight(ct, a.fund, a.partition);
  const Weight& w = dw.weight;

  // The crystal side of --oracle: the KN tableau crystal B(lambda).
  auto crystal_char = [&] { return character(*kn_crystal(ct, w).crystal); };
  auto mismatch = [&](const std::string& what) {
    throw OracleMismatch(what + " from the Weyl formula disagrees with the crystal B" + weight_str(w));
  };

  if (a.mode == "dim" || a.mode == "dimension") {
    const BigInt d = dim_weyl(ct, w);
    emit_int(g, d);
    if (g.oracle && character_mass(crystal_char()) != d) mismatch("dimension");
  } else if (a.mode == "ps" || a.mode == "ps-half" || a.mode == "nps") {
    LaurentPoly p;
    if (a.mode == "ps") p = ps_weyl(ct, w);
    else if (a.mode == "ps-half") p = ps_weyl_half(ct, w);
    else p = nps_weyl(ct, w);
    emit_poly(g, p, a.mode == "ps-half" ? "s" : "q");
    if (g.oracle) {
      const LaurentPoly half = ps_of_character_half(ct, crystal_char());
      const LaurentPoly expect = a.mode == "ps"        ? halve_exponents(half)
                                 : a.mode == "ps-half" ? half
                                                       : halve_exponents(normalize_valuation(half).second);
      if (expect != p) mismatch("principal specialization");
      // Type C also has the Jacobi-Trudi determinant.
      if (ct.family == Family::C && a.mode == "ps" && dw.integral() &&
          jacobi_trudi_q(dw.partition(), ct.rank) != p)
        mismatch("Jacobi-Trudi determinant");
    }
  } else if (a.mode == "char" || a.mode == "character") {
    const Character ch = crystal_char();
    emit_character(g, ch);
    if (g.oracle) {
      if (ps_of_character_half(ct, ch) != ps_weyl_half(ct, w)) mismatch("principal specialization");
      if (ct.family == Family::C && group_to_character(jacobi_trudi_character(dw.partition(), ct.rank), ct.rank) != ch)
        mismatch("Jacobi-Trudi character");
    }
  } else {
    throw ValidationError("unknown --mode " + a.mode + " (dim, ps, ps-half, nps, char)");
  }
  return 0;
}

// -- mult ---------------------------------------------------------------------

struct MultArgs {
  std::string family, target = "0", target_partition;
  int rank = 0, spin_power = -1, wedge_power = -1, spin_rect = -1;
};

int cmd_mult(const Globals& g, const MultArgs& a) {
  const CartanType ct = parse_type(a.family, a.rank);
  const int n = ct.rank;
  const int chosen = (a.spin_power >= 0) + (a.wedge_power >= 0) + (a.spin_rect >= 0);
  if (chosen != 1) throw ValidationError("give exactly one of --spin-power, --wedge-power, --spin-rect");

  BigInt value, oracle_value;
  std::string method, oracle_method;
  json params = json::object();
  if (a.spin_rect >= 0) {
    if (ct.family != Family::B) throw ValidationError("--spin-rect is a type B statement");
    if (a.spin_rect < 1) throw ValidationError("--spin-rect needs r >= 1");
    value = spin_rect_hankel(a.spin_rect, n);
    method = "det [binom(2(n+i+j)+1, n+i+j)]_{i,j=0}^{r-1}";
    params["r"] = a.spin_rect;
    if (g.oracle) {
      oracle_value = dim_weyl(ct, scale(tfw(ct, n), a.spin_rect));
      oracle_method = "Weyl dimension of V(r tfw_n)";
    }
  } else {
    const DominantWeight target =
        parse_weight(ct, a.target_partition.empty() ? a.target : "", a.target_partition);
    params["target"] = weight_str(target.weight);
    std::vector<CrystalPtr> factors;
    if (a.spin_power >= 0) {
      if (ct.family != Family::B) throw ValidationError("--spin-power is a type B statement");
      value = spin_power_multiplicity_B(target.weight, n, a.spin_power);
      method = "det [Cat_{(2n-i-j+m+c_j, j-i+m-c_j)}]_{i,j=1}^n, m = power/2";
      params["power"] = a.spin_power;
      if (g.oracle) factors.assign(a.spin_power, spin_crystal(ct, n));
    } else {
      if (ct.family != Family::C) throw ValidationError("--wedge-power is a type C statement");
      value = wedge_power_multiplicity_C(target.weight, n, a.wedge_power);
      method = "det [Cat_{(2n-i-j-1+m+c_j, j-i+m-c_j)}]_{i,j=0}^{n-1}";
      params["power"] = a.wedge_power;
      if (g.oracle) factors.assign(a.wedge_power, wedge_column_crystal(n).crystal);
    }
    if (g.oracle) {
      const auto dec = decompose_tensor_iterated(factors);
      const auto it = dec.find(target.weight);
      oracle_value = it == dec.end() ? BigInt(0) : it->second;
      oracle_method = "highest weight elements of the crystal tensor power";
    }
  }

  const bool agree = !g.oracle || oracle_value == value;
  switch (g.format) {
    case Format::json: {
      json out = {{"type", ct.str()}, {"value", big(value)}, {"method", method}};
      out.update(params);
      if (g.oracle) out["oracle"] = {{"method", oracle_method}, {"value", big(oracle_value)}, {"agree", agree}};
      std::cout << out.dump() << "\n";
      break;
    }
    case Format::csv:
      std::cout << "type,value" << (g.oracle ? ",oracle\n" : "\n") << ct.str() << "," << big(value);
      if (g.oracle) std::cout << "," << big(oracle_value);
      std::cout << "\n";
      break;
    case Format::pretty:
      std::cout << big(value) << "\nmethod: " << method << "\n";
      if (g.oracle) std::cout << "oracle: " << big(oracle_value) << " (" << oracle_method << ")\n";
      break;
  }
  if (!agree) throw OracleMismatch("determinant " + big(value) + " != crystal count " + big(oracle_value));
  return 0;
}

// -- paths --------------------------------------------------------------------

struct PathsArgs {
  std::string kind, bijection, word;
  int n = 0, k = -1, triangle = -1, sample = -1;
  bool stats = false;
};

json signed_column(const Column& c) {
  auto a = json::array();
  for (const auto& l : c) a.push_back(l.signed_value());
  return a;
}

int cmd_paths(const Globals& g, const PathsArgs& a) {
  if (a.n < 0) throw ValidationError("length must be nonnegative");
  std::vector<std::string> words;
  int k = a.k;
  if (a.kind == "dyck") {
    if (k < 0) k = a.triangle >= 0 ? a.triangle : a.n;
    words = enumerate_partial_dyck(a.n, k);
  } else if (a.kind == "motzkin" || a.kind == "riordan") {
    if (k < 0) k = a.triangle >= 0 ? a.triangle : 0;
    words = a.kind == "motzkin" ? enumerate_motzkin(a.n, k) : enumerate_riordan(a.n, k);
  } else if (a.kind == "rectangle") {
    if (k < 0) throw ValidationError("rectangle needs N and M");
    words = enumerate_rectangle(a.n, k);
  } else {
    throw ValidationError("unknown path kind " + a.kind + " (dyck, motzkin, riordan, rectangle)");
  }
  const std::size_t total = words.size();

  if (!a.word.empty()) {
    if (!std::binary_search(words.begin(), words.end(), a.word))
      throw ValidationError(a.word + " is not a " + a.kind + " word with these parameters");
    words = {a.word};
  } else if (a.sample >= 0 && static_cast<std::size_t>(a.sample) < words.size()) {
    std::mt19937_64 rng(g.seed);
    std::vector<std::string> picked;
    std::sample(words.begin(), words.end(), std::back_inserter(picked), a.sample, rng);
    words = std::move(picked);
  }

  // Xi: full Dyck words use the partition construction (Xi_{n+1}, last N
  // fixed); Dyck_{(2m-i+1,i)} uses the vertical weights with rank m.
  std::function<Column(const std::string&)> bij;
  if (!a.bijection.empty()) {
    if (a.kind != "dyck") throw ValidationError("--bijection applies to dyck words");
    const bool prime = a.bijection == "xi-prime";
    if (!prime && a.bijection != "xi") throw ValidationError("unknown --bijection " + a.bijection + " (xi, xi-prime)");
    if (a.n == k && a.n >= 1) {
      bij = [prime](const std::string& w) { return xi_via_partitions(w, prime); };
    } else if (!prime && (a.n + k - 1) % 2 == 0 && k <= (a.n + k - 1) / 2) {
      const int m = (a.n + k - 1) / 2;
      bij = [m](const std::string& w) { return xi(w, m); };
    } else {
      throw ValidationError("no column bijection for Dyck_(" + std::to_string(a.n) + "," + std::to_string(k) + ")");
    }
  }

  auto stats_json = [&](const std::string& w) {
    json s = json::object();
    if (a.kind == "dyck") {
      const auto st = dyck_statistics(w);
      s = {{"area", st.area},     {"descents", st.descents}, {"maj_N", st.maj_N},
           {"maj_E", st.maj_E},   {"w_plus", st.w_plus},     {"w_minus", st.w_minus},
           {"signed_weight", st.signed_weight}};
    } else if (a.kind == "rectangle") {
      s = {{"weight", rect_weight(w, a.n, k)}};
    } else if (k == 0) {
      s = {{"tunnel_length", tunnel_length(w)}};
    }
    return s;
  };

  switch (g.format) {
    case Format::json: {
      auto list = json::array();
      for (const auto& w : words) {
        if (!a.stats && !bij) {
          list.push_back(w);
          continue;
        }
        json e = {{"word", w}};
        if (bij) {
          const Column c = bij(w);
          e["column"] = signed_column(c);
          e["column_str"] = column_str(c);
        }
        if (a.stats) e["stats"] = stats_json(w);
        list.push_back(e);
      }
      json out = {{"kind", a.kind}, {"n", a.n}, {"k", k}, {"count", std::to_string(total)}, {"words", list}};
      std::cout << out.dump() << "\n";
      break;
    }
    case Format::csv: {
      std::cout << "word" << (bij ? ",column" : "") << (a.stats ? ",stats" : "") << "\n";
      for (const auto& w : words) {
        std::cout << w;
        if (bij) std::cout << ",\"" << column_str(bij(w)) << "\"";
        if (a.stats) {
          std::string s = stats_json(w).dump();
          std::string esc;
          for (char ch : s) esc += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          std::cout << ",\"" << esc << "\"";
        }
        std::cout << "\n";
      }
      break;
    }
    case Format::pretty:
      for (const auto& w : words) {
        std::cout << (w.empty() ? "(empty)" : w);
        if (bij) std::cout << " -> " << column_str(bij(w));
        if (a.stats) std::cout << "  " << stats_json(w).dump();
        std::cout << "\n";
      }
      std::cout << "count: " << total << "\n";
      break;
  }
  return 0;
}

// -- verify / scan ---------------------------------------------------------------

struct VerifyArgs {
  std::string name;
  int n = -1;
  bool small = false, list = false;
  unsigned threads = 0;
};

void emit_reports(const Globals& g, const std::vector<IdentityReport>& reports) {
  switch (g.format) {
    case Format::json: std::cout << reports_json(reports) << "\n"; break;
    case Format::csv: std::cout << reports_csv(reports); break;
    case Format::pretty: std::cout << reports_table(reports); break;
  }
}

// 1 on a failure that counts (theorem-level, or any explicitly named entry),
// 3 when something was skipped by the resource cap, else 0.
int report_status(const std::vector<IdentityReport>& reports, bool explicit_name) {
  if (explicit_name ? !std::all_of(reports.begin(), reports.end(),
                                   [](const auto& r) { return r.status != IdentityStatus::failed; })
                    : !identities_hold(reports))
    return 1;
  for (const auto& r : reports)
    if (r.status == IdentityStatus::skipped) return 3;
  return 0;
}

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  if (a.list) {
    for (const auto& e : identity_registry())
      std::cout << e.name << (e.conjecture ? "  [conjecture]  " : "  ") << e.statement << "\n";
    return 0;
  }
  if (a.name.empty()) throw ValidationError("verify needs an identity name or 'all' (see --list)");
  std::vector<const IdentityEntry*> entries;
  const bool all = a.name == "all";
  if (all)
    for (const auto& e : identity_registry()) entries.push_back(&e);
  else
    entries.push_back(&find_identity(a.name));
  const auto bound = [&](const IdentityEntry& e) {
    if (a.n >= 0) return a.n;
    return a.small ? e.default_bound : e.extended_bound;
  };
  const auto reports = run_identities(entries, bound, a.threads);
  emit_reports(g, reports);
  return report_status(reports, !all);
}

int cmd_scan(const Globals& g, const VerifyArgs& a) {
  const auto& e = find_identity(a.name);
  const auto report = conjecture_scan(e.name, a.n >= 0 ? a.n : e.default_bound);
  emit_reports(g, {report});
  return report_status({report}, true);
}

std::uint64_t env_cap() {
  const char* s = std::getenv("LCAT_CAP");
  if (!s || !*s) return 10000000;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end || v == 0) throw ValidationError(std::string("LCAT_CAP is not a positive integer: ") + s);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice paths, crystals and determinant identities for the classical types"};
  app.require_subcommand(1);

  Globals g;
  std::string format = "json";
  long long cap = -1;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--cap", cap, "Object budget for exhaustive enumerations (default $LCAT_CAP or 10^7)");
  app.add_option("--seed", g.seed, "Seed for --sample");
  app.add_flag("--oracle", g.oracle, "Cross-check against crystal enumeration");
  app.fallthrough();

  CharArgs ca;
  auto* c_char = app.add_subcommand("char", "Dimension, principal specialization or character of V(lambda)");
  c_char->add_option("family", ca.family, "A, B, C or D")->required();
  c_char->add_option("rank", ca.rank)->required();
  c_char->add_option("--fund", ca.fund, "Fundamental coefficients c1,...,cn");
  c_char->add_option("--partition", ca.partition, "Partition (epsilon coordinates)");
  c_char->add_option("--mode", ca.mode, "dim, ps, ps-half, nps or char")->capture_default_str();

  MultArgs ma;
  auto* c_mult = app.add_subcommand("mult", "Tensor power multiplicities as determinants");
  c_mult->add_option("family", ma.family)->required();
  c_mult->add_option("rank", ma.rank)->required();
  c_mult->add_option("--spin-power", ma.spin_power, "B(omega_n)^{(x) P}, type B");
  c_mult->add_option("--wedge-power", ma.wedge_power, "(wedge B(omega_1))^{(x) M}, type C");
  c_mult->add_option("--spin-rect", ma.spin_rect, "det BH_{r,n} = dim V(r tfw_n), type B");
  c_mult->add_option("--target", ma.target, "Target weight as fundamental coefficients (0 = zero weight)")
      ->capture_default_str();
  c_mult->add_option("--target-partition", ma.target_partition, "Target weight as a partition");

  PathsArgs pa;
  auto* c_paths = app.add_subcommand("paths", "List lattice words with statistics and bijections");
  c_paths->add_option("kind", pa.kind, "dyck, motzkin, riordan or rectangle")->required();
  c_paths->add_option("n", pa.n)->required();
  c_paths->add_option("k", pa.k, "dyck: number of N steps; rectangle: M");
  c_paths->add_option("--triangle", pa.triangle, "End height (motzkin, riordan)");
  c_paths->add_flag("--stats", pa.stats, "Print path statistics");
  c_paths->add_option("--bijection", pa.bijection, "xi or xi-prime (King columns)");
  c_paths->add_option("--word", pa.word, "Restrict to a single word");
  c_paths->add_option("--sample", pa.sample, "Print a random sample of this size (see --seed)");

  VerifyArgs va;
  auto* c_verify = app.add_subcommand("verify", "Verify named identities (or all) up to a bound");
  c_verify->add_option("name", va.name, "Identity name or all");
  c_verify->add_option("--n", va.n, "Bound (overrides the registry bounds)");
  c_verify->add_flag("--small", va.small, "Use the default (acceptance) bounds");
  c_verify->add_flag("--list", va.list, "List registered identities");
  c_verify->add_option("--threads", va.threads, "Worker threads (0 = hardware)");

  VerifyArgs sa;
  auto* c_scan = app.add_subcommand("scan", "Bounded scan of a conjecture");
  c_scan->add_option("name", sa.name)->required();
  c_scan->add_option("--n", sa.n, "Bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    g.format = format == "csv" ? Format::csv : format == "pretty" ? Format::pretty : Format::json;
    if (cap == 0 || cap < -1) throw ValidationError("--cap must be positive");
    g.cap = cap > 0 ? static_cast<std::uint64_t>(cap) : env_cap();
    set_resource_cap(g.cap);

    if (*c_char) return cmd_char(g, ca);
    if (*c_mult) return cmd_mult(g, ma);
    if (*c_paths) return cmd_paths(g, pa);
    if (*c_verify) return cmd_verify(g, va);
    if (*c_scan) return cmd_scan(g, sa);
  } catch (const OracleMismatch& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return 4;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
