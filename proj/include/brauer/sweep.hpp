#pragma once

// The agreement sweep: over a grid of groups, primes and IBr labels, compare
// closed forms with direct expansion, dimension formulas with Gram ranks, and
// the arithmetic criteria with exhaustive o-basis search.

#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/characters.hpp"
#include "brauer/groups.hpp"
#include "brauer/parallel.hpp"
#include "brauer/polyspace.hpp"
#include "brauer/report.hpp"
#include "brauer/tensorspace.hpp"
#include "brauer/verdicts.hpp"

namespace brauer {

struct SweepConfig {
  std::vector<Family> families{Family::Semidihedral, Family::Dihedral};
  std::vector<int> sd_params{2, 3};
  std::vector<int> d_params{6, 8, 12};
  std::vector<int> primes{2, 3, 5};
  std::vector<int> degrees{1, 2};
  int support_bound = 0;  // 0: use d
  std::vector<int> dim_vs{1, 2, 3};
  Action poly_action = Action::Regular;
  Action tensor_action = Action::Natural;
  std::string out_dir;
  int jobs = 1;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline int parse_int(const std::string& key, const std::string& s) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': '" + s + "' is not an integer");
  }
}

inline std::vector<int> parse_ints(const std::string& key, const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) out.push_back(parse_int(key, item));
  return out;
}

inline Action parse_action(const std::string& s) {
  if (s == "regular") return Action::Regular;
  if (s == "natural") return Action::Natural;
  throw ConfigError("unknown action '" + s + "'");
}

inline Family parse_family(const std::string& s) {
  if (s == "sd" || s == "SD") return Family::Semidihedral;
  if (s == "d" || s == "D") return Family::Dihedral;
  throw ConfigError("unknown family '" + s + "'");
}

}  // namespace detail

/// Applies one `key = value` setting.
inline void apply_setting(SweepConfig& c, const std::string& key, const std::string& value) {
  using namespace detail;
  if (key == "families") {
    c.families.clear();
    for (const auto& f : split_list(value)) c.families.push_back(parse_family(f));
  } else if (key == "sd_params") {
    c.sd_params = parse_ints(key, value);
  } else if (key == "d_params") {
    c.d_params = parse_ints(key, value);
  } else if (key == "primes") {
    c.primes = parse_ints(key, value);
  } else if (key == "degrees") {
    c.degrees = parse_ints(key, value);
  } else if (key == "support_bound") {
    c.support_bound = parse_int(key, value);
  } else if (key == "dimv") {
    c.dim_vs = parse_ints(key, value);
  } else if (key == "poly_action") {
    c.poly_action = parse_action(value);
  } else if (key == "tensor_action") {
    c.tensor_action = parse_action(value);
  } else if (key == "out") {
    c.out_dir = value;
  } else if (key == "jobs") {
    c.jobs = parse_int(key, value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

/// key = value lines; '#' starts a comment.
inline SweepConfig parse_config(std::istream& in, SweepConfig c = {}) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    apply_setting(c, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
  return c;
}

inline SweepConfig load_config(const std::string& path, SweepConfig c = {}) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in, std::move(c));
}

/// Refuses configurations outside the desk-scale bounds before any work.
inline void check_guards(const SweepConfig& c, const Guards& guards = {}) {
  for (int p : c.primes)
    if (!is_prime(p)) throw GuardError("p = " + std::to_string(p) + " is not prime");
  for (int n : c.sd_params)
    if (n < 2 || 8 * n > guards.max_group_order) throw GuardError("SD parameter n = " + std::to_string(n) + " outside [2, 6]");
  for (int m : c.d_params)
    if (m < 3 || 2 * m > guards.max_group_order) throw GuardError("D parameter m = " + std::to_string(m) + " outside [3, 24]");
  for (int d : c.degrees)
    if (d < 1 || d > guards.max_degree) throw GuardError("degree d = " + std::to_string(d) + " outside [1, 3]");
  for (int d : c.degrees)
    if (c.support_bound != 0 && (c.support_bound < 1 || c.support_bound > d))
      throw GuardError("support bound must lie in [1, d]");
  for (int v : c.dim_vs)
    if (v < 1 || v > 4) throw GuardError("dim V = " + std::to_string(v) + " outside [1, 4]");
  if (c.jobs < 1) throw GuardError("jobs must be >= 1");
}

// ---------------------------------------------------------------------------

struct SweepCounters {
  long pairs = 0;            // closed form vs direct expansion
  long pair_mismatches = 0;
  long dims = 0;             // dimension formula vs Gram rank
  long dim_mismatches = 0;
  long witnesses = 0;        // independent witness re-checks
  long witness_failures = 0;

  SweepCounters& operator+=(const SweepCounters& o) {
    pairs += o.pairs;
    pair_mismatches += o.pair_mismatches;
    dims += o.dims;
    dim_mismatches += o.dim_mismatches;
    witnesses += o.witnesses;
    witness_failures += o.witness_failures;
    return *this;
  }
};

/// One (group, p, label, side, d or dim V) verdict comparison.
struct SweepPoint {
  Family family = Family::Semidihedral;
  int param = 0;
  int prime = 0;
  std::string label;
  std::string side;  // "poly" or "tensor"
  int size = 0;      // d or dim V
  int orbitals = 0;
  bool closed_form = false;
  bool brute_force = false;
  SweepCounters counters;
  Json discrepancy;  // null when none
  double seconds = 0;

  bool agrees() const { return closed_form == brute_force; }

  Json grid_json() const {
    Json j;
    j["family"] = family_name(family);
    j[family == Family::Semidihedral ? "n" : "m"] = param;
    j["p"] = prime;
    j["label"] = label;
    j["side"] = side;
    j[side == "poly" ? "d" : "dimv"] = size;
    return j;
  }
};

struct SweepResult {
  std::vector<SweepPoint> points;
  SweepCounters totals;
  long discrepancies = 0;

  bool clean() const {
    return discrepancies == 0 && totals.pair_mismatches == 0 && totals.dim_mismatches == 0 &&
           totals.witness_failures == 0;
  }
};

namespace detail {

struct SweepTask {
  Family family;
  int param;
  int prime;
  std::size_t row;
};

// Checks one orbital subspace; returns the brute-force verdict.
inline ObasisVerdict check_orbital(const Group& g, const std::vector<SymVector>& gens,
                                   const std::function<CycNum(int, int)>& closed, long formula_dim,
                                   SweepCounters& ctr, GramMatrix* keep) {
  const int n = g.order();
  std::vector<int> labels(n);
  for (int s = 0; s < n; ++s) labels[s] = s;
  GramMatrix gm;
  gm.index = labels;
  gm.entries.assign(n, std::vector<CycNum>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      gm.entries[i][j] = inner_product_direct(gens[i], gens[j]);
      ++ctr.pairs;
      if (closed(i, j) != gm.entries[i][j]) ++ctr.pair_mismatches;
    }
  ObasisVerdict v = brute_force_obasis(gens, labels);
  ++ctr.dims;
  if (exact_rank(gm.entries) != v.rank || v.rank != formula_dim) ++ctr.dim_mismatches;
  if (v.witness) {
    ++ctr.witnesses;
    if (!verify_witness(gens, labels, *v.witness, v.rank)) ++ctr.witness_failures;
  }
  if (keep) *keep = std::move(gm);
  return v;
}

inline Json discrepancy_json(const SweepPoint& pt, const Group& g, const Tuple& where, const ObasisVerdict& v,
                             const GramMatrix& gm) {
  Json grid = pt.grid_json();
  grid[pt.side == "poly" ? "alpha" : "gamma"] = tuple_json(where);
  grid["action"] = action_name(g.action());
  return Json{{"grid", grid},
              {"closed_form", pt.closed_form},
              {"brute_force", pt.brute_force},
              {"witness", witness_json(g, v.witness)},
              {"gram", gram_json(g, gm, pt.side)}};
}

inline std::vector<SweepPoint> run_task(const SweepConfig& cfg, const SweepTask& task) {
  std::vector<SweepPoint> out;
  const Group gp = Group::build(task.family, task.param, cfg.poly_action);
  const Group gt = Group::build(task.family, task.param, cfg.tensor_action);
  const CharTable ibr_p = brauer_table(gp, task.prime);
  const CharTable ibr_t = brauer_table(gt, task.prime);
  const CharTable irr_p = ordinary_table(gp);
  const CharTable irr_t = ordinary_table(gt);
  const Character& phi = ibr_p.rows[task.row];
  const Character& phi_t = ibr_t.rows[task.row];
  const CriterionInput input = make_criterion_input(task.family, task.param, task.prime, phi.label);

  auto base = [&](const std::string& side, int size) {
    SweepPoint pt;
    pt.family = task.family;
    pt.param = task.param;
    pt.prime = task.prime;
    pt.label = phi.display_label();
    pt.side = side;
    pt.size = size;
    return pt;
  };

  for (int d : cfg.degrees) {
    const auto start = std::chrono::steady_clock::now();
    SweepPoint pt = base("poly", d);
    pt.closed_form = criterion_poly(input).exists;
    pt.brute_force = true;
    const int bound = cfg.support_bound == 0 ? d : cfg.support_bound;
    for (const auto& alpha : orbit_reps(gp, d, bound)) {
      const auto stab = gp.stabilizer(alpha);
      const auto gens = orbital_generators(gp, phi, alpha);
      GramMatrix gm;
      const auto v = check_orbital(
          gp, gens, [&](int i, int j) { return inner_product_closed(gp, phi, stab, i, j); },
          orbital_dim(gp, phi, stab, irr_p), pt.counters, &gm);
      ++pt.orbitals;
      if (!v.exists && pt.brute_force) {
        pt.brute_force = false;
        if (!pt.agrees()) pt.discrepancy = discrepancy_json(pt, gp, alpha, v, gm);
      }
    }
    if (pt.brute_force && !pt.agrees()) {
      // criterion says no, search found bases everywhere: report the first orbit
      const auto alpha = orbit_reps(gp, d, bound).front();
      const auto gens = orbital_generators(gp, phi, alpha);
      std::vector<int> labels(gp.order());
      std::iota(labels.begin(), labels.end(), 0);
      pt.discrepancy = discrepancy_json(pt, gp, alpha, brute_force_obasis(gens, labels),
                                        gram_from_vectors(gens, labels));
    }
    pt.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(pt));
  }

  for (int dim_v : cfg.dim_vs) {
    const auto start = std::chrono::steady_clock::now();
    SweepPoint pt = base("tensor", dim_v);
    pt.closed_form = criterion_tensor(input, dim_v).exists;
    pt.brute_force = true;
    const SymmetrizerKernel kernel(gt, phi_t);
    Tuple first;
    for (const auto& gamma : tensor_stabilizer_representatives(gt, dim_v)) {
      if (first.empty()) first = gamma;
      const auto stab = gt.stabilizer(gamma);
      const auto gens = tensor_orbital_generators(gt, phi_t, gamma, dim_v);
      GramMatrix gm;
      const auto v = check_orbital(
          gt, gens, [&](int i, int j) { return estar_inner_closed(gt, kernel, stab, i, j); },
          tensor_orbital_dim(gt, phi_t, stab, irr_t), pt.counters, &gm);
      ++pt.orbitals;
      if (!v.exists && pt.brute_force) {
        pt.brute_force = false;
        if (!pt.agrees()) pt.discrepancy = discrepancy_json(pt, gt, gamma, v, gm);
      }
    }
    if (pt.brute_force && !pt.agrees()) {
      const auto gens = tensor_orbital_generators(gt, phi_t, first, dim_v);
      std::vector<int> labels(gt.order());
      std::iota(labels.begin(), labels.end(), 0);
      pt.discrepancy = discrepancy_json(pt, gt, first, brute_force_obasis(gens, labels),
                                        gram_from_vectors(gens, labels));
    }
    pt.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace detail

/// Runs the full grid. Output order is the grid order, independent of `jobs`.
inline SweepResult run_sweep(const SweepConfig& cfg) {
  check_guards(cfg);
  std::vector<detail::SweepTask> tasks;
  for (Family f : cfg.families) {
    const auto& params = f == Family::Semidihedral ? cfg.sd_params : cfg.d_params;
    for (int param : params)
      for (int p : cfg.primes) {
        const Group g = Group::build(f, param, cfg.poly_action);
        const std::size_t rows = brauer_table(g, p).rows.size();
        for (std::size_t r = 0; r < rows; ++r) tasks.push_back({f, param, p, r});
      }
  }
  std::vector<std::vector<SweepPoint>> slots(tasks.size());
  parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) { slots[i] = detail::run_task(cfg, tasks[i]); });

  SweepResult res;
  for (auto& s : slots)
    for (auto& pt : s) {
      res.totals += pt.counters;
      if (!pt.agrees()) ++res.discrepancies;
      res.points.push_back(std::move(pt));
    }
  return res;
}

/// Deterministic summary: no timings, stable key order.
inline Json sweep_summary_json(const SweepResult& r) {
  Json points = Json::array();
  Json discrepancies = Json::array();
  for (const auto& pt : r.points) {
    Json j = pt.grid_json();
    j["orbitals"] = pt.orbitals;
    j["closed_form"] = pt.closed_form;
    j["brute_force"] = pt.brute_force;
    j["agree"] = pt.agrees();
    j["pairs_checked"] = pt.counters.pairs;
    j["pair_mismatches"] = pt.counters.pair_mismatches;
    j["dim_mismatches"] = pt.counters.dim_mismatches;
    points.push_back(j);
    if (!pt.discrepancy.is_null()) discrepancies.push_back(pt.discrepancy);
  }
  Json totals{{"grid_points", r.points.size()},
              {"discrepancies", r.discrepancies},
              {"pairs_checked", r.totals.pairs},
              {"pair_mismatches", r.totals.pair_mismatches},
              {"orbitals_checked", r.totals.dims},
              {"dim_mismatches", r.totals.dim_mismatches},
              {"witnesses_checked", r.totals.witnesses},
              {"witness_failures", r.totals.witness_failures}};
  return Json{{"clean", r.clean()}, {"totals", totals}, {"points", points}, {"discrepancies", discrepancies}};
}

inline Json sweep_timings_json(const SweepResult& r) {
  Json out = Json::array();
  for (const auto& pt : r.points) {
    Json j = pt.grid_json();
    j["seconds"] = pt.seconds;
    out.push_back(j);
  }
  return out;
}

}  // namespace brauer
