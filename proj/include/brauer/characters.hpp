#pragma once

// Ordinary and Brauer character tables of SD_{8n} and D_m.
//
// Every character value of these groups is an integer combination of N-th
// roots of unity, N = 4n for SD and N = lcm(m, 2) for D. Values are kept both
// as RootSum (for fast accumulation) and as canonical CycNum.

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brauer/cyclotomic.hpp"
#include "brauer/groups.hpp"

namespace brauer {

class CharacterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Class function on a conjugation-closed subset S of the group (S = G for
/// ordinary characters, S = the p-regular set for Brauer characters).
struct Character {
  std::string label;      // ordinary label, e.g. "chi2", "chi'4", "psi'7"
  int degree = 0;
  int prime = 0;          // 0 for ordinary characters
  int order = 1;          // cyclotomic order of the values
  int param = 0;          // h for two-dimensional rows, k for linear rows
  std::vector<char> domain;
  std::vector<RootSum> roots;
  std::vector<CycNum> values;

  bool is_brauer() const { return prime != 0; }
  bool linear() const { return degree == 1; }
  bool defined_at(int g) const { return domain[g] != 0; }

  const CycNum& operator()(int g) const {
    if (!defined_at(g)) throw CharacterError(display_label() + " is not defined off its domain");
    return values[g];
  }

  /// Ordinary label with "hat" marking a Brauer restriction ("chihat'0").
  std::string display_label() const {
    if (!is_brauer()) return label;
    const auto pos = label.find_first_of("0123456789'");
    return label.substr(0, pos) + "hat" + label.substr(pos);
  }

  std::vector<int> support() const { return members(domain); }
};

enum class TableKind { Ordinary, Brauer };

struct CharTable {
  TableKind kind = TableKind::Ordinary;
  int prime = 0;
  std::vector<Character> rows;
  /// Classes the table is indexed by: all classes, or the p-regular ones.
  std::vector<std::vector<int>> classes;

  const Character& find(const std::string& name) const&;
  // a temporary table hands out a copy, so `brauer_table(g, p).find(..)` never dangles
  Character find(const std::string& name) && { return std::as_const(*this).find(name); }
};

/// Normalizes user spellings: drops "hat", "^" and "_", so "chihat2",
/// "chi^2" and "chi_2" all name ordinary label "chi2".
inline std::string normalize_label(std::string s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 3, "hat") == 0) {
      i += 2;
      continue;
    }
    if (s[i] == '^' || s[i] == '_' || s[i] == ' ') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
  }
  return out;
}

inline const Character& CharTable::find(const std::string& name) const& {
  const std::string key = normalize_label(name);
  for (const auto& row : rows)
    if (row.label == key) return row;
  throw CharacterError("unknown character label '" + name + "'");
}

inline int character_order(const Group& g) {
  const int n = g.rotation_order();
  return n % 2 == 0 ? n : 2 * n;
}

namespace detail {

inline Character make_character(const Group& g, std::string label, int degree, int param,
                                const std::vector<RootSum>& roots) {
  Character c;
  c.label = std::move(label);
  c.degree = degree;
  c.param = param;
  c.order = character_order(g);
  c.domain.assign(g.order(), 1);
  c.roots = roots;
  c.values.reserve(roots.size());
  for (const auto& r : roots) c.values.push_back(r.to_cyc());
  return c;
}

// Linear character a -> z^{ea}, b -> z^{eb} (exponents in the character order).
inline Character linear_character(const Group& g, std::string label, int k, int ea, int eb) {
  const int order = character_order(g);
  std::vector<RootSum> roots;
  for (int x = 0; x < g.order(); ++x) {
    const GroupElem e = g.elem(x);
    roots.push_back(RootSum::root(order, static_cast<long long>(ea) * e.rot + (e.flip ? eb : 0)));
  }
  return make_character(g, std::move(label), 1, k, roots);
}

// Two-dimensional character induced from a -> z^h of the rotation subgroup:
// a^r -> z^{hr} + z^{h u r}, zero on reflections.
inline Character induced_character(const Group& g, std::string label, int h) {
  const int order = character_order(g);
  const int scale = order / g.rotation_order();
  std::vector<RootSum> roots;
  for (int x = 0; x < g.order(); ++x) {
    const GroupElem e = g.elem(x);
    RootSum r(order);
    if (!e.flip) {
      r.add_term(static_cast<long long>(scale) * h * e.rot, 1);
      r.add_term(static_cast<long long>(scale) * h * g.twist() * e.rot, 1);
    }
    roots.push_back(std::move(r));
  }
  return make_character(g, std::move(label), 2, h, roots);
}

}  // namespace detail

/// Index sets below the semidihedral character tables.
struct SemidihedralIndexSets {
  std::vector<int> c1;          // {0, 2, ..., 2n}
  std::vector<int> c_even;      // C1 \ {0, 2n}
  std::vector<int> c_odd;       // n even: {1, 3, ..., n-1} u {2n+1, ..., 3n-1}
  std::vector<int> c_odd_23;    // n odd: {1, 3, ..., n} u {2n+1, ..., 3n}
};

inline SemidihedralIndexSets semidihedral_index_sets(int n) {
  SemidihedralIndexSets s;
  for (int r = 0; r <= 2 * n; r += 2) s.c1.push_back(r);
  for (int r = 2; r <= 2 * n - 2; r += 2) s.c_even.push_back(r);
  for (int r = 1; r <= n - 1; r += 2) s.c_odd.push_back(r);
  for (int r = 2 * n + 1; r <= 3 * n - 1; r += 2) s.c_odd.push_back(r);
  for (int r = 1; r <= n; r += 2) s.c_odd_23.push_back(r);
  for (int r = 2 * n + 1; r <= 3 * n; r += 2) s.c_odd_23.push_back(r);
  return s;
}

inline std::string sd_linear_label(int n, int k) { return (n % 2 == 0 ? "chi" : "chi'") + std::to_string(k); }
inline std::string sd_psi_label(int n, int h) { return (n % 2 == 0 ? "psi" : "psi'") + std::to_string(h); }
inline std::string d_linear_label(int j) { return "psi" + std::to_string(j); }
inline std::string d_chi_label(int h) { return "chi" + std::to_string(h); }

inline CharTable ordinary_table(const Group& g) {
  CharTable t;
  t.kind = TableKind::Ordinary;
  t.classes = g.conjugacy_classes();
  const int order = character_order(g);
  const int half = order / 2;  // exponent of -1
  if (g.family() == Family::Semidihedral) {
    const int n = g.param();
    const int quarter = order / 4;  // exponent of i
    // (image of a, image of b) for chi_0..chi_3 and, n odd, chi'_4..chi'_7
    const int lin[8][2] = {{0, 0},       {0, half},       {half, 0},           {half, half},
                           {quarter, 0}, {quarter, half}, {3 * quarter, 0}, {3 * quarter, half}};
    const int nlin = n % 2 == 0 ? 4 : 8;
    for (int k = 0; k < nlin; ++k)
      t.rows.push_back(detail::linear_character(g, sd_linear_label(n, k), k, lin[k][0], lin[k][1]));
    const auto sets = semidihedral_index_sets(n);
    std::vector<int> hs = sets.c_even;
    if (n % 2 == 0) {
      hs.insert(hs.end(), sets.c_odd.begin(), sets.c_odd.end());
    } else {
      for (int h : sets.c_odd_23)
        if (h != n && h != 3 * n) hs.push_back(h);
    }
    std::sort(hs.begin(), hs.end());
    for (int h : hs) t.rows.push_back(detail::induced_character(g, sd_psi_label(n, h), h));
  } else {
    const int m = g.param();
    const int lin[4][2] = {{0, 0}, {0, half}, {half, 0}, {half, half}};
    const int nlin = m % 2 == 0 ? 4 : 2;
    for (int j = 0; j < nlin; ++j)
      t.rows.push_back(detail::linear_character(g, d_linear_label(j), j, lin[j][0], lin[j][1]));
    for (int h = 1; 2 * h < m; ++h) t.rows.push_back(detail::induced_character(g, d_chi_label(h), h));
  }
  return t;
}

/// Labels and index sets of the irreducible Brauer characters.
struct BrauerLabels {
  PrimeSplit split;
  int epsilon = 0;           // number of linear Brauer characters
  std::vector<int> even_set; // E
  std::vector<int> odd_set_1;
  std::vector<int> odd_set_2;
  std::vector<int> pi;       // h-values of the two-dimensional Brauer characters
};

inline BrauerLabels brauer_labels(const Group& g, int p) {
  BrauerLabels b;
  b.split = split_prime(g.rotation_order(), p);
  const int l = b.split.l;
  const int pt = b.split.pt;
  if (g.family() == Family::Semidihedral) {
    const int n = g.param();
    if (p == 2) {
      b.epsilon = 1;
      for (int j = 1; 2 * j <= l - 1; ++j) b.pi.push_back(j * pt);
    } else {
      b.epsilon = n % 2 == 0 ? 4 : 8;
      const int eps = n % 2 == 0 ? 1 : 2;
      for (int j = 2; j <= l / 2 - 2; j += 2) b.even_set.push_back(j);
      for (int j = 1; j <= l / 4 - eps; j += 2) b.odd_set_1.push_back(j);
      for (int j = l / 2 + 1; j <= l / 2 + l / 4 - eps; j += 2) b.odd_set_2.push_back(j);
      for (const auto* set : {&b.even_set, &b.odd_set_1, &b.odd_set_2})
        for (int j : *set) b.pi.push_back(j * pt);
    }
  } else {
    if (p == 2) b.epsilon = 1;
    else b.epsilon = l % 2 == 0 ? 4 : 2;
    for (int j = 1; 2 * j < l; ++j) b.pi.push_back(j * pt);
  }
  std::sort(b.pi.begin(), b.pi.end());
  return b;
}

inline Character restrict_to(const Character& c, const PRegularData& reg) {
  Character out = c;
  out.prime = reg.split.p;
  out.domain = reg.member;
  for (std::size_t x = 0; x < out.domain.size(); ++x) {
    if (!out.domain[x]) {
      out.roots[x] = RootSum(c.order);
      out.values[x] = CycNum();
    }
  }
  return out;
}

/// IBr(G): the listed restrictions of ordinary characters to the p-regular set.
inline CharTable brauer_table(const Group& g, int p) {
  const PRegularData reg = pregular(g, p);
  const BrauerLabels labels = brauer_labels(g, p);
  const CharTable ord = ordinary_table(g);
  CharTable t;
  t.kind = TableKind::Brauer;
  t.prime = p;
  t.classes = reg.classes;
  const bool sd = g.family() == Family::Semidihedral;
  for (int k = 0; k < labels.epsilon; ++k) {
    const std::string name = sd ? sd_linear_label(g.param(), k) : d_linear_label(k);
    t.rows.push_back(restrict_to(ord.find(name), reg));
  }
  for (int h : labels.pi) {
    const std::string name = sd ? sd_psi_label(g.param(), h) : d_chi_label(h);
    t.rows.push_back(restrict_to(ord.find(name), reg));
  }
  return t;
}

/// IBr(G) when p is given, Irr(G) otherwise.
inline CharTable character_table(const Group& g, std::optional<int> p) {
  return p ? brauer_table(g, *p) : ordinary_table(g);
}

/// (phi, psi)_K = 1/|K| sum_{s in K} phi(s) psi(s^-1).
inline CycNum class_inner_product(const Group& g, const Character& phi, const Character& psi,
                                  const std::vector<int>& subset) {
  if (subset.empty()) throw CharacterError("inner product over an empty set");
  RootAccumulator acc(std::lcm(phi.order, psi.order));
  const int sp = acc.order() / phi.order, sq = acc.order() / psi.order;
  for (int s : subset) {
    const int si = g.inv(s);
    if (!phi.defined_at(s) || !psi.defined_at(si))
      throw CharacterError("class function evaluated outside its domain");
    RootSum a(acc.order()), b(acc.order());
    for (const auto& [k, c] : phi.roots[s].terms()) a.add_term(static_cast<long long>(k) * sp, c);
    for (const auto& [k, c] : psi.roots[si].terms()) b.add_term(static_cast<long long>(k) * sq, c);
    acc.add_product(a, b);
  }
  return acc.value(ratio(1, static_cast<long>(subset.size())));
}

/// Trivial character on the whole group.
inline Character trivial_character(const Group& g) { return detail::linear_character(g, "1", 0, 0, 0); }

/// Coefficients c_chi = (f, chi)_G of f = phi extended by zero off its domain,
/// over Irr(G); the constituents are the rows with nonzero coefficient.
inline std::vector<CycNum> constituent_coefficients(const Group& g, const Character& phi, const CharTable& irr) {
  std::vector<CycNum> out;
  for (const auto& chi : irr.rows) {
    RootAccumulator acc(std::lcm(phi.order, chi.order));
    for (int x = 0; x < g.order(); ++x)
      if (phi.defined_at(x)) acc.add_product_conj(phi.roots[x], chi.roots[x]);
    out.push_back(acc.value(ratio(1, g.order())));
  }
  return out;
}

}  // namespace brauer
