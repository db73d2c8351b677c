#pragma once

// Symmetry classes of polynomials H_d(G; phi).
//
// The group acts on multidegrees on the right, (alpha.s)_i = alpha_{s(i)}, and
// on the group algebra side s . X^beta = X^{beta.s^-1}. The symmetrizer is
//
//   T(G; phi) = phi(1)/|S| * sum_{mu in S} phi(mu) mu
//
// with S = G for ordinary phi and S = the p-regular set for Brauer phi.

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauer/characters.hpp"
#include "brauer/groups.hpp"
#include "brauer/parallel.hpp"
#include "brauer/symvector.hpp"

namespace brauer {

using Multidegree = Tuple;
using SymPoly = SymVector;

class GuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Desk-scale limits for orbit enumeration.
struct Guards {
  int max_group_order = 48;
  int max_degree = 3;
};

inline Multidegree concentrated(const Group& g, int d) {
  Multidegree alpha(g.degree(), 0);
  alpha[0] = d;
  return alpha;
}

/// X^{beta,*} for the monomial X^beta.
inline SymPoly symmetrize(const Group& g, const Character& phi, const Multidegree& beta) {
  g.check_tuple(beta);
  const auto S = phi.support();
  SymPoly out(phi.order, ratio(phi.degree, static_cast<long>(S.size())));
  for (int mu : S) out.add(g.act(beta, g.inv(mu)), phi.roots[mu]);
  out.finalize();
  return out;
}

/// X^{alpha sigma,*}.
inline SymPoly symmetrize_monomial(const Group& g, const Character& phi, const Multidegree& alpha, int sigma) {
  if (sigma < 0 || sigma >= g.order()) throw GroupError("element outside the group");
  return symmetrize(g, phi, g.act(alpha, sigma));
}

/// <X^{alpha s1,*}, X^{alpha s2,*}> as the double sum over mu in S and
/// tau in G_alpha with rho = mu s1^-1 tau s2 in S of phi(mu) conj(phi(rho)).
inline CycNum inner_product_closed(const Group& g, const Character& phi, const std::vector<int>& stabilizer,
                                   int s1, int s2) {
  const auto S = phi.support();
  RootAccumulator acc(phi.order);
  const int s1inv = g.inv(s1);
  for (int mu : S) {
    const int left = g.mul(mu, s1inv);
    for (int tau : stabilizer) {
      const int rho = g.mul(g.mul(left, tau), s2);
      if (phi.defined_at(rho)) acc.add_product_conj(phi.roots[mu], phi.roots[rho]);
    }
  }
  const Rational c = ratio(phi.degree, static_cast<long>(S.size()));
  return acc.value(c * c);
}

inline CycNum inner_product_closed_at(const Group& g, const Character& phi, const Multidegree& alpha, int s1, int s2) {
  return inner_product_closed(g, phi, g.stabilizer(alpha), s1, s2);
}

/// Orbital generators X^{alpha sigma,*}, one per group element.
inline std::vector<SymPoly> orbital_generators(const Group& g, const Character& phi, const Multidegree& alpha) {
  std::vector<SymPoly> gens;
  gens.reserve(g.order());
  for (int s = 0; s < g.order(); ++s) gens.push_back(symmetrize_monomial(g, phi, alpha, s));
  return gens;
}

/// Exact Gram matrix indexed by a list of group elements.
struct GramMatrix {
  std::vector<int> index;
  std::vector<std::vector<CycNum>> entries;

  std::size_t size() const { return index.size(); }
};

inline GramMatrix gram_from_vectors(const std::vector<SymVector>& vecs, const std::vector<int>& index,
                                    int jobs = 1) {
  GramMatrix gm;
  gm.index = index;
  const std::size_t n = vecs.size();
  gm.entries.assign(n, std::vector<CycNum>(n));
  parallel_for(n, jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) gm.entries[i][j] = inner_product_direct(vecs[i], vecs[j]);
  });
  return gm;
}

/// Orbital Gram matrix over all sigma in G by direct expansion.
inline GramMatrix orbital_gram_direct(const Group& g, const Character& phi, const Multidegree& alpha, int jobs = 1) {
  std::vector<int> idx(g.order());
  for (int s = 0; s < g.order(); ++s) idx[s] = s;
  return gram_from_vectors(orbital_generators(g, phi, alpha), idx, jobs);
}

/// Orbital Gram matrix over all sigma in G from the closed formula.
inline GramMatrix orbital_gram_closed(const Group& g, const Character& phi, const Multidegree& alpha, int jobs = 1) {
  GramMatrix gm;
  const int n = g.order();
  gm.index.resize(n);
  for (int s = 0; s < n; ++s) gm.index[s] = s;
  gm.entries.assign(n, std::vector<CycNum>(n));
  const auto stab = g.stabilizer(alpha);
  parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t i) {
    for (int j = 0; j < n; ++j) gm.entries[i][j] = inner_product_closed(g, phi, stab, static_cast<int>(i), j);
  });
  return gm;
}

/// (chi, 1)_K as an exact non-negative integer.
inline long multiplicity_of_trivial(const Group& g, const Character& chi, const std::vector<int>& subgroup) {
  const CycNum v = class_inner_product(g, chi, trivial_character(g), subgroup);
  const Rational r = v.rational_value();
  if (r.get_den() != 1 || sgn(r) < 0) throw CharacterError("(chi,1) is not a non-negative integer");
  return r.get_num().get_si();
}

/// Irreducible constituents of phi extended by zero off its domain.
inline std::vector<const Character*> constituents(const Group& g, const Character& phi, const CharTable& irr) {
  const auto coeffs = constituent_coefficients(g, phi, irr);
  std::vector<const Character*> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) out.push_back(&irr.rows[i]);
  if (out.empty()) throw CharacterError("decomposition unavailable: class function is zero");
  return out;
}

/// dim of the orbital subspace: sum over constituents chi of chi(e) (chi, 1)_{G_alpha}.
inline long orbital_dim(const Group& g, const Character& phi, const std::vector<int>& stabilizer,
                        const CharTable& irr) {
  long dim = 0;
  for (const Character* chi : constituents(g, phi, irr))
    dim += chi->degree * multiplicity_of_trivial(g, *chi, stabilizer);
  return dim;
}

inline long orbital_dim(const Group& g, const Character& phi, const Multidegree& alpha) {
  return orbital_dim(g, phi, g.stabilizer(alpha), ordinary_table(g));
}

/// All multidegrees of total degree d with at most `support_bound` nonzero entries.
inline std::vector<Multidegree> multidegrees(int points, int d, int support_bound) {
  std::vector<Multidegree> out;
  Multidegree cur(points, 0);
  std::function<void(int, int, int)> rec = [&](int pos, int left, int used) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (pos == points || used == support_bound) return;
    for (int v = left; v >= 1; --v) {
      cur[pos] = v;
      rec(pos + 1, left - v, used + 1);
      cur[pos] = 0;
    }
    rec(pos + 1, left, used);
  };
  rec(0, d, 0);
  return out;
}

/// Orbit representatives (lexicographically greatest member) of the
/// multidegrees within the support bound, in descending order.
inline std::vector<Multidegree> orbit_reps(const Group& g, int d, int support_bound, const Guards& guards = {}) {
  if (d < 1) throw GuardError("degree d must be >= 1");
  if (d > guards.max_degree) throw GuardError("degree d exceeds the desk-scale bound");
  if (support_bound < 1 || support_bound > d) throw GuardError("support bound must lie in [1, d]");
  if (g.order() > guards.max_group_order) throw GuardError("group order exceeds the desk-scale bound");
  std::set<Multidegree, std::greater<>> reps;
  for (const auto& alpha : multidegrees(g.degree(), d, support_bound)) reps.insert(g.canonical(alpha));
  return {reps.begin(), reps.end()};
}

/// Representatives whose orbital subspace for phi is nonzero.
inline std::vector<Multidegree> nonvanishing_reps(const Group& g, const Character& phi,
                                                  const std::vector<Multidegree>& reps, const CharTable& irr) {
  std::vector<Multidegree> out;
  for (const auto& a : reps)
    if (orbital_dim(g, phi, g.stabilizer(a), irr) > 0) out.push_back(a);
  return out;
}

/// dim H_d(G; chi) = chi(1) sum_{alpha} (chi, 1)_{G_alpha} over orbit representatives.
inline long total_dim(const Group& g, const Character& chi, int d, int support_bound) {
  long dim = 0;
  for (const auto& a : orbit_reps(g, d, support_bound))
    dim += chi.degree * multiplicity_of_trivial(g, chi, g.stabilizer(a));
  return dim;
}

/// s . q for a symmetrized polynomial: X^beta -> X^{beta.s^-1}.
inline SymPoly apply_element(const Group& g, const SymPoly& q, int s) {
  SymPoly out(q.order(), q.scale());
  const int si = g.inv(s);
  for (const auto& [beta, c] : q.raw()) out.add(g.act(beta, si), c);
  out.finalize();
  return out;
}

/// Two linear characters eta1, eta2 of the rotation subgroup W = <a^step>
/// with phi|_W = eta1 + eta2, from the induced construction of phi.
struct RotationSplit {
  std::vector<int> subgroup;
  std::vector<RootSum> eta1;  // indexed like subgroup
  std::vector<RootSum> eta2;
};

inline RotationSplit split_on_rotations(const Group& g, const Character& phi, int step) {
  if (phi.degree != 2) throw CharacterError("pair formula needs a two-dimensional character");
  RotationSplit rs;
  const int n = g.rotation_order();
  const int scale = phi.order / n;
  std::set<int> seen;
  for (int k = 0; seen.insert(g.rotation(static_cast<long long>(k) * step)).second; ++k) {
    const int w = g.rotation(static_cast<long long>(k) * step);
    if (!phi.defined_at(w)) throw CharacterError("subgroup leaves the domain of phi");
    const int r = g.elem(w).rot;
    rs.subgroup.push_back(w);
    rs.eta1.push_back(RootSum::root(phi.order, static_cast<long long>(scale) * phi.param * r));
    rs.eta2.push_back(RootSum::root(phi.order, static_cast<long long>(scale) * phi.param * g.twist() * r));
  }
  bool distinct = false;
  for (std::size_t i = 0; i < rs.subgroup.size(); ++i) {
    RootAccumulator sum(phi.order);
    sum.add(rs.eta1[i]);
    sum.add(rs.eta2[i]);
    if (sum.value() != phi.values[rs.subgroup[i]]) throw CharacterError("phi does not split on the subgroup");
    if (rs.eta1[i].to_cyc() != rs.eta2[i].to_cyc()) distinct = true;
  }
  if (!distinct) throw CharacterError("phi restricts to twice a linear character on the subgroup");
  return rs;
}

/// <X^{gamma sigma,*}, X^{gamma,*}> for the group W with character phi|_W,
/// from c (eta1(sigma) (eta1,1)_{W_gamma} + eta2(sigma) (eta2,1)_{W_gamma}),
/// c = d^2 |W_gamma| / |W|.
inline CycNum subgroup_pair_inner_product(const Group& g, const Character& phi, int step, const Multidegree& gamma,
                                          int sigma) {
  const RotationSplit rs = split_on_rotations(g, phi, step);
  const auto pos = std::find(rs.subgroup.begin(), rs.subgroup.end(), sigma);
  if (pos == rs.subgroup.end()) throw GroupError("sigma outside the subgroup");
  const std::size_t si = static_cast<std::size_t>(pos - rs.subgroup.begin());
  std::vector<std::size_t> stab;
  for (std::size_t i = 0; i < rs.subgroup.size(); ++i)
    if (g.act(gamma, rs.subgroup[i]) == gamma) stab.push_back(i);
  const Rational c = ratio(phi.degree * phi.degree * static_cast<long>(stab.size()),
                           static_cast<long>(rs.subgroup.size()));
  CycNum total;
  for (const auto* eta : {&rs.eta1, &rs.eta2}) {
    RootAccumulator mult(phi.order);
    for (std::size_t i : stab) mult.add((*eta)[i]);
    const CycNum trivial_mult = mult.value(ratio(1, static_cast<long>(stab.size())));
    total += (*eta)[si].to_cyc() * trivial_mult;
  }
  return total * CycNum(c);
}

/// Same quantity by direct expansion of the W-symmetrized monomials.
inline CycNum subgroup_pair_inner_direct(const Group& g, const Character& phi, int step, const Multidegree& gamma,
                                         int sigma) {
  const RotationSplit rs = split_on_rotations(g, phi, step);
  auto sym = [&](const Multidegree& beta) {
    SymPoly out(phi.order, ratio(phi.degree, static_cast<long>(rs.subgroup.size())));
    for (int mu : rs.subgroup) out.add(g.act(beta, g.inv(mu)), phi.roots[mu]);
    out.finalize();
    return out;
  };
  return inner_product_direct(sym(g.act(gamma, sigma)), sym(gamma));
}

}  // namespace brauer
