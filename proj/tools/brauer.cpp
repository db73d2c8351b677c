// brauer: tables, Gram matrices, o-basis verdicts and the agreement sweep.
//
// Exit codes: 0 ok / agreement, 1 usage error, 2 discrepancy, 3 guard refusal.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "brauer/class_formula.hpp"
#include "brauer/report.hpp"
#include "brauer/sweep.hpp"

using namespace brauer;

namespace {

constexpr int kOk = 0, kUsage = 1, kDiscrepancy = 2, kGuard = 3;

struct GroupArgs {
  std::string family = "sd";
  int n = 0;
  int m = 0;
  std::string action = "regular";

  void attach(CLI::App* app) {
    app->add_option("--family", family, "sd or d")->check(CLI::IsMember({"sd", "d"}));
    app->add_option("--n", n, "SD_{8n} parameter");
    app->add_option("--m", m, "D_{2m} parameter");
    app->add_option("--action", action, "regular or natural")->check(CLI::IsMember({"regular", "natural"}));
  }

  Family fam() const { return family == "sd" ? Family::Semidihedral : Family::Dihedral; }
  int param() const {
    const int v = fam() == Family::Semidihedral ? n : m;
    if (v == 0) throw CLI::ValidationError(fam() == Family::Semidihedral ? "--n is required" : "--m is required");
    return v;
  }
  Group build() const { return Group::build(fam(), param(), detail::parse_action(action)); }
};

void emit(const Json& j, const std::string& out_dir, const std::string& name) {
  const std::string text = j.dump(2) + "\n";
  if (out_dir.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(out_dir);
  std::ofstream(std::filesystem::path(out_dir) / name) << text;
}

void write_text(const std::string& out_dir, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(out_dir);
  std::ofstream(std::filesystem::path(out_dir) / name) << text;
}

const Character& pick_character(const Group& g, std::optional<int> p, const std::string& label, CharTable& holder) {
  holder = character_table(g, p);
  return holder.find(label);
}

Tuple parse_alpha(const Group& g, const std::string& spec, int d) {
  if (spec == "d0") return concentrated(g, d);
  Tuple out;
  for (const auto& item : detail::split_list(spec)) out.push_back(detail::parse_int("alpha", item));
  g.check_tuple(out);
  return out;
}

int cmd_group(const GroupArgs& ga, int p, bool json) {
  const Group g = ga.build();
  Json j = group_json(g, p);
  if (g.family() == Family::Semidihedral) j["class_formula_conforms"] = semidihedral_classes_conform(g.param(), p);
  if (json) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << family_name(g.family()) << " param=" << g.param() << " order=" << g.order() << " p=" << p
            << " l=" << j["l"] << " t=" << j["t"] << "\n";
  std::cout << "p-regular elements: " << j["pregular_elements"] << "\n";
  std::cout << j["pregular_class_count"] << " p-regular classes:\n";
  for (const auto& c : j["pregular_classes"]) {
    std::cout << "  [" << c.size() << "] ";
    for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << c[i].get<std::string>();
    std::cout << "\n";
  }
  if (j.contains("class_formula_conforms"))
    std::cout << "closed-form class list conforms: " << (j["class_formula_conforms"].get<bool>() ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_chars(const GroupArgs& ga, std::optional<int> p, bool json, const std::string& out) {
  const Group g = ga.build();
  const CharTable ord = ordinary_table(g);
  Json j{{"group", group_json(g, p.value_or(2))}, {"ordinary", table_json(g, ord)}};
  j["group"].erase("p");
  std::optional<CharTable> ibr;
  if (p) {
    ibr = brauer_table(g, *p);
    j["brauer"] = table_json(g, *ibr);
  }
  if (!out.empty()) {
    emit(j, out, "chars.json");
    write_text(out, "ordinary.csv", table_csv(g, ord));
    if (ibr) write_text(out, "brauer.csv", table_csv(g, *ibr));
    return kOk;
  }
  if (json) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "ordinary table (" << ord.rows.size() << " rows)\n" << table_csv(g, ord);
  if (ibr) std::cout << "IBr for p=" << *p << " (" << ibr->rows.size() << " rows)\n" << table_csv(g, *ibr);
  return kOk;
}

int cmd_gram(const GroupArgs& ga, std::optional<int> p, const std::string& label, const std::string& alpha_spec,
             int d, std::optional<int> dim_v, int jobs, const std::string& out) {
  const Group g = ga.build();
  CharTable holder;
  const Character& phi = pick_character(g, p, label, holder);
  const Tuple alpha = parse_alpha(g, alpha_spec, d);
  GramMatrix gm;
  std::string side = "poly";
  if (dim_v) {
    side = "tensor";
    check_tensor_index(g, alpha, *dim_v);
    std::vector<int> idx(g.order());
    std::iota(idx.begin(), idx.end(), 0);
    gm = gram_from_vectors(tensor_orbital_generators(g, phi, alpha, *dim_v), idx, jobs);
  } else {
    if (g.order() > Guards{}.max_group_order) throw GuardError("group order exceeds the desk-scale bound");
    gm = orbital_gram_direct(g, phi, alpha, jobs);
  }
  Json j{{"character", phi.display_label()}, {"p", p.value_or(0)}, {"action", action_name(g.action())}};
  j[dim_v ? "gamma" : "alpha"] = tuple_json(alpha);
  if (dim_v) j["dimv"] = *dim_v;
  j["rank"] = exact_rank(gm.entries);
  j["gram"] = gram_json(g, gm, side);
  emit(j, out, "gram.json");
  if (!out.empty()) write_text(out, "gram.csv", gram_csv(g, gm, side));
  return kOk;
}

int cmd_verdict(const GroupArgs& ga, int p, const std::string& label, int d, std::optional<int> dim_v,
                const std::string& out) {
  const CriterionInput in = make_criterion_input(ga.fam(), ga.param(), p, label);
  Json j{{"family", family_name(ga.fam())}, {"param", ga.param()}, {"p", p}, {"character", label}};
  ObasisVerdict closed;
  GlobalVerdict brute;
  std::optional<Group> g;
  if (dim_v) {
    g = Group::build(ga.fam(), ga.param(), Action::Natural);
    const CharTable ibr = brauer_table(*g, p);
    closed = criterion_tensor(in, *dim_v);
    brute = global_tensor_obasis(*g, ibr.find(label), *dim_v);
    j["dimv"] = *dim_v;
  } else {
    g = Group::build(ga.fam(), ga.param(), Action::Regular);
    const CharTable ibr = brauer_table(*g, p);
    closed = criterion_poly(in);
    brute = global_obasis(*g, ibr.find(label), d, d);
    j["d"] = d;
  }
  j["closed_form"] = closed.exists;
  j["brute_force"] = brute.verdict.exists;
  j["witness"] = witness_json(*g, brute.verdict.witness);
  j["rank"] = brute.verdict.rank;
  emit(j, out, "verdict.json");
  return closed.exists == brute.verdict.exists ? kOk : kDiscrepancy;
}

int cmd_verify(SweepConfig cfg, bool json) {
  check_guards(cfg);
  const SweepResult r = run_sweep(cfg);
  const Json summary = sweep_summary_json(r);
  if (!cfg.out_dir.empty()) {
    emit(summary, cfg.out_dir, "summary.json");
    emit(sweep_timings_json(r), cfg.out_dir, "timings.json");
  }
  if (json) {
    std::cout << summary.dump(2) << "\n";
  } else {
    const auto& t = summary["totals"];
    std::cout << "grid points: " << t["grid_points"] << ", verdict discrepancies: " << t["discrepancies"] << "\n"
              << "closed/direct pairs: " << t["pairs_checked"] << " (mismatches " << t["pair_mismatches"] << ")\n"
              << "orbitals: " << t["orbitals_checked"] << " (dim/rank mismatches " << t["dim_mismatches"] << ")\n"
              << "witnesses: " << t["witnesses_checked"] << " (failures " << t["witness_failures"] << ")\n";
    for (const auto& pt : summary["points"])
      if (!pt["agree"].get<bool>()) std::cout << "DISCREPANCY " << pt.dump() << "\n";
  }
  return r.clean() ? kOk : kDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry classes of polynomials and tensors for dihedral and semidihedral groups"};
  app.require_subcommand(1);

  GroupArgs ga;
  int p = 0;
  std::string label, alpha = "d0", out, config;
  int d = 2, jobs = 1;
  std::optional<int> dim_v;
  bool json = false;

  auto* group = app.add_subcommand("group", "p-regular classes");
  ga.attach(group);
  group->add_option("--p", p, "prime")->required();
  group->add_flag("--json", json);

  auto* chars = app.add_subcommand("chars", "ordinary and Brauer character tables");
  ga.attach(chars);
  chars->add_option("--p", p, "prime (omit for the ordinary table only)");
  chars->add_flag("--json", json);
  chars->add_option("--out", out, "output directory");

  auto* gram = app.add_subcommand("gram", "orbital Gram matrix");
  ga.attach(gram);
  gram->add_option("--p", p, "prime (omit for ordinary characters)");
  gram->add_option("--char", label, "character label")->required();
  gram->add_option("--alpha", alpha, "\"d0\" or comma list");
  gram->add_option("--d", d, "degree for --alpha d0");
  gram->add_option("--dimv", dim_v, "tensor side: dim V");
  gram->add_option("--jobs", jobs);
  gram->add_option("--out", out, "output directory");
  gram->add_flag("--json", json);

  auto* verdict = app.add_subcommand("verdict", "closed-form vs brute-force o-basis verdict");
  ga.attach(verdict);
  verdict->add_option("--p", p, "prime")->required();
  verdict->add_option("--char", label, "character label")->required();
  verdict->add_option("--d", d, "polynomial degree");
  verdict->add_option("--dimv", dim_v, "tensor side: dim V");
  verdict->add_option("--out", out, "output directory");
  verdict->add_flag("--json", json);

  // verify takes lists; flags override the config file
  std::string v_family, v_n, v_m, v_p, v_d, v_dimv, v_action;
  auto* verify = app.add_subcommand("verify", "full agreement sweep");
  verify->add_option("--config", config, "key = value config file");
  verify->add_option("--family", v_family, "comma list of sd,d");
  verify->add_option("--n", v_n, "comma list of SD parameters");
  verify->add_option("--m", v_m, "comma list of D parameters");
  verify->add_option("--p", v_p, "comma list of primes");
  verify->add_option("--d", v_d, "comma list of degrees");
  verify->add_option("--dimv", v_dimv, "comma list of dim V");
  verify->add_option("--action", v_action, "polynomial-side action");
  verify->add_option("--jobs", jobs);
  verify->add_option("--out", out, "output directory for summary.json and timings.json");
  verify->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*group) return cmd_group(ga, p, json);
    if (*chars) return cmd_chars(ga, chars->count("--p") ? std::optional<int>(p) : std::nullopt, json, out);
    if (*gram)
      return cmd_gram(ga, gram->count("--p") ? std::optional<int>(p) : std::nullopt, label, alpha, d, dim_v, jobs, out);
    if (*verdict) return cmd_verdict(ga, p, label, d, dim_v, out);
    if (*verify) {
      SweepConfig cfg;
      if (!config.empty()) cfg = load_config(config, cfg);
      const std::pair<const char*, std::string*> overrides[] = {
          {"families", &v_family}, {"sd_params", &v_n}, {"d_params", &v_m}, {"primes", &v_p},
          {"degrees", &v_d},       {"dimv", &v_dimv},   {"poly_action", &v_action}};
      for (const auto& [key, value] : overrides)
        if (!value->empty()) apply_setting(cfg, key, *value);
      if (verify->count("--jobs")) cfg.jobs = jobs;
      if (!out.empty()) cfg.out_dir = out;
      return cmd_verify(cfg, json);
    }
  } catch (const GuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
