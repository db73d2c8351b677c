// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
//   acceptance [path-to-test_properties]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/class_formula.hpp"
#include "brauer/sweep.hpp"
#include "brauer/tensorspace.hpp"
#include "brauer/verdicts.hpp"

using namespace brauer;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << what << "  (" << detail << ")" << std::endl;
  failures += !ok;
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// 1. p-regular classes from element orders vs the listed case formulas
void pregular_conformance() {
  const auto t0 = Clock::now();
  bool ok = true;
  int cases = 0;
  std::string bad;
  for (int n = 2; n <= 8; ++n)
    for (int p : {2, 3, 5, 7}) {
      ++cases;
      if (!semidihedral_classes_conform(n, p)) {
        ok = false;
        bad += " n=" + std::to_string(n) + ",p=" + std::to_string(p);
      }
    }
  const auto c33 = pregular(Group::build(Family::Semidihedral, 3), 3).classes.size();
  const auto c22 = pregular(Group::build(Family::Semidihedral, 2), 2).classes.size();
  ok = ok && c33 == 8 && c22 == 1;
  const double s = since(t0);
  ok = ok && s < 5.0;
  report(1, ok, "p-regular class conformance",
         std::to_string(cases) + " (n,p) cases" + (bad.empty() ? "" : ", mismatched:" + bad) +
             "; SD24 p=3 -> " + std::to_string(c33) + " classes, SD16 p=2 -> " + std::to_string(c22) + "; " + fmt(s));
}

// 2. orthogonality, |IBr| = #p-regular classes, IBr rows distinct
void table_health() {
  long bad_gram = 0, bad_count = 0, bad_distinct = 0, tables = 0;
  std::vector<Group> groups;
  for (int n = 2; n <= 5; ++n) groups.push_back(Group::build(Family::Semidihedral, n));
  for (int m = 3; m <= 12; ++m) groups.push_back(Group::build(Family::Dihedral, m));
  for (const Group& g : groups) {
    const CharTable t = ordinary_table(g);
    if (t.rows.size() != g.conjugacy_classes().size()) ++bad_count;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      for (std::size_t j = 0; j < t.rows.size(); ++j) {
        // sum_x chi_i(x) conj chi_j(x), straight from the values
        CycNum s;
        for (int x = 0; x < g.order(); ++x) s += t.rows[i](x) * conj(t.rows[j](x));
        if (s != CycNum(i == j ? static_cast<long>(g.order()) : 0L)) ++bad_gram;
      }
    for (int p : {2, 3, 5, 7}) {
      ++tables;
      const auto reg = pregular(g, p);
      const CharTable ibr = brauer_table(g, p);
      if (ibr.rows.size() != reg.classes.size()) ++bad_count;
      for (std::size_t i = 0; i < ibr.rows.size(); ++i)
        for (std::size_t j = i + 1; j < ibr.rows.size(); ++j) {
          bool same = true;
          for (const auto& c : reg.classes) same = same && ibr.rows[i](c.front()) == ibr.rows[j](c.front());
          bad_distinct += same;
        }
    }
  }
  report(2, bad_gram == 0 && bad_count == 0 && bad_distinct == 0, "character-table health",
         std::to_string(groups.size()) + " groups, " + std::to_string(tables) + " Brauer tables; gram errors " +
             std::to_string(bad_gram) + ", count errors " + std::to_string(bad_count) + ", equal rows " +
             std::to_string(bad_distinct));
}

// 4b. sum over Irr(G) of orbital dims equals the orbit size
long decomposition_errors(long& checked) {
  long bad = 0;
  std::vector<Group> poly, tensor;
  for (int n : {2, 3}) {
    poly.push_back(Group::build(Family::Semidihedral, n, Action::Regular));
    tensor.push_back(Group::build(Family::Semidihedral, n, Action::Natural));
  }
  for (int m : {6, 8, 12}) {
    poly.push_back(Group::build(Family::Dihedral, m, Action::Regular));
    tensor.push_back(Group::build(Family::Dihedral, m, Action::Natural));
  }
  for (const Group& g : poly) {
    const CharTable irr = ordinary_table(g);
    for (int d : {1, 2})
      for (const auto& alpha : orbit_reps(g, d, d)) {
        const auto stab = g.stabilizer(alpha);
        long total = 0;
        for (const auto& chi : irr.rows) total += orbital_dim(g, chi, stab, irr);
        bad += total != g.order() / static_cast<long>(stab.size());
        ++checked;
      }
  }
  for (const Group& g : tensor) {
    const CharTable irr = ordinary_table(g);
    for (int v : {2, 3})
      for (const auto& gamma : tensor_stabilizer_representatives(g, v)) {
        const auto stab = g.stabilizer(gamma);
        long total = 0;
        for (const auto& chi : irr.rows) total += tensor_orbital_dim(g, chi, stab, irr);
        bad += total != g.order() / static_cast<long>(stab.size());
        ++checked;
      }
  }
  return bad;
}

// 5b. the verdicts named individually, by closed form and by search
struct Named {
  Family family;
  int param, p;
  std::string label;
  bool expected;
};

std::string named_verdicts(bool& ok) {
  std::vector<Named> cases;
  {
    const Group g = Group::build(Family::Semidihedral, 3);
    for (const auto& phi : brauer_table(g, 3).rows)
      if (phi.linear()) cases.push_back({Family::Semidihedral, 3, 3, phi.label, false});
  }
  cases.push_back({Family::Semidihedral, 3, 5, "psi'2", false});
  cases.push_back({Family::Semidihedral, 3, 5, "psi'1", true});
  cases.push_back({Family::Dihedral, 12, 5, "chi2", false});
  cases.push_back({Family::Dihedral, 12, 5, "chi3", true});
  std::ostringstream out;
  for (const auto& c : cases) {
    const Group g = Group::build(c.family, c.param);
    const Character phi = brauer_table(g, c.p).find(c.label);
    const bool closed = criterion_poly(make_criterion_input(c.family, c.param, c.p, c.label)).exists;
    const bool search = global_obasis(g, phi, 2, 2).verdict.exists;
    const bool good = closed == c.expected && search == c.expected;
    ok = ok && good;
    if (!good)
      out << " " << family_name(c.family) << c.param << " p=" << c.p << " " << phi.display_label() << ": expected "
          << c.expected << ", closed form " << closed << ", search " << search;
  }
  // dim V = 1 always admits a basis
  for (auto [f, param] : {std::pair{Family::Semidihedral, 3}, {Family::Dihedral, 12}})
    for (int p : {2, 3, 5}) {
      const Group g = Group::build(f, param, Action::Natural);
      for (const auto& phi : brauer_table(g, p).rows) {
        const bool closed = criterion_tensor(make_criterion_input(f, param, p, phi.label), 1).exists;
        const bool search = global_tensor_obasis(g, phi, 1).verdict.exists;
        if (!closed || !search) {
          ok = false;
          out << " dimV=1 " << family_name(f) << param << " p=" << p << " " << phi.display_label();
        }
      }
    }
  return out.str();
}

// 6. l' = l / gcd(l, h) divisible by 4  <=>  4 h_2 | l
//
// gcd(l, h) depends only on h mod l, so each row gets a residue table filled
// by a divisor sieve (larger divisors overwrite smaller ones).
void power_of_two_equivalence() {
  const auto t0 = Clock::now();
  constexpr int kMax = 10000;
  long bad = 0, pairs = 0;
  std::vector<int> g(kMax);
  std::vector<char> thm(kMax);
  for (int l = 1; l <= kMax; ++l) {
    for (int d = 1; d <= l; ++d)
      if (l % d == 0)
        for (int r = 0; r < l; r += d) g[r] = d;
    for (int r = 0; r < l; ++r) thm[r] = (l / g[r]) % 4 == 0;
    for (int h = 1, r = 1 % l; h <= kMax; ++h) {
      bad += static_cast<bool>(thm[r]) != power_of_two_criterion(l, h);
      ++pairs;
      if (++r == l) r = 0;
    }
  }
  const double s = since(t0);
  report(6, bad == 0 && s < 5.0, "l' vs power-of-two form",
         std::to_string(pairs) + " (l,h) pairs, " + std::to_string(bad) + " disagreements; " + fmt(s));
}

// 7. the property suites, run as their own binary
void property_suites(const char* binary) {
  if (!binary) {
    report(7, false, "property suites", "no test_properties path given");
    return;
  }
  const std::string cmd = std::string("\"") + binary + "\" --gtest_brief=1 > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  report(7, rc == 0, "property suites standalone",
         "Equivariance, NonvanishingEquivalences, NonzeroProductsForLinearBrauerCharacters, SubgroupPairFormula; exit " +
             std::to_string(rc));
}

}  // namespace

int main(int argc, char** argv) {
  pregular_conformance();
  table_health();

  // 3-5 share one single-threaded sweep over the default grid
  SweepConfig cfg;
  cfg.jobs = 1;
  const auto t0 = Clock::now();
  const SweepResult r = run_sweep(cfg);
  const double sweep_s = since(t0);

  report(3, r.totals.pair_mismatches == 0 && sweep_s < 600.0, "closed form = direct expansion",
         std::to_string(r.totals.pairs) + " pairs over " + std::to_string(r.points.size()) + " grid points, " +
             std::to_string(r.totals.pair_mismatches) + " mismatches; sweep " + fmt(sweep_s));

  long checked = 0;
  const long decomp = decomposition_errors(checked);
  report(4, r.totals.dim_mismatches == 0 && decomp == 0, "orbital dim = Gram rank",
         std::to_string(r.totals.dims) + " orbitals, " + std::to_string(r.totals.dim_mismatches) +
             " mismatches; decomposition " + std::to_string(checked) + " orbits, " + std::to_string(decomp) +
             " errors");

  bool named_ok = true;
  const std::string named = named_verdicts(named_ok);
  std::ostringstream where;
  for (const auto& pt : r.points)
    if (!pt.agrees())
      where << " " << family_name(pt.family) << pt.param << " p=" << pt.prime << " "
            << brauer_table(Group::build(pt.family, pt.param), pt.prime).find(pt.label).display_label() << " "
            << pt.side << (pt.side == "poly" ? " d=" : " dimV=") << pt.size << " (closed " << pt.closed_form
            << ", search " << pt.brute_force << ")";
  report(5, r.discrepancies == 0 && r.totals.witness_failures == 0 && named_ok, "criteria vs brute force",
         std::to_string(r.discrepancies) + " discrepancies, " + std::to_string(r.totals.witness_failures) +
             " witness failures" + (where.str().empty() ? "" : ":" + where.str()) +
             (named.empty() ? "; named verdicts ok" : "; named verdicts:" + named));

  power_of_two_equivalence();
  property_suites(argc > 1 ? argv[1] : nullptr);

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
