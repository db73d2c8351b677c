#pragma once

// O-basis existence: arithmetic criteria per character label, and the
// exhaustive search over standard symmetrized generators that certifies them.

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauer/characters.hpp"
#include "brauer/groups.hpp"
#include "brauer/polyspace.hpp"
#include "brauer/symvector.hpp"
#include "brauer/tensorspace.hpp"

namespace brauer {

enum class VerdictSource { ClosedForm, BruteForce };

struct ObasisVerdict {
  bool exists = false;
  std::optional<std::vector<int>> witness;  // group elements sigma
  VerdictSource source = VerdictSource::BruteForce;
  bool global = false;
  long rank = 0;
  // Closed form only: the h_2 reformulation for two-dimensional labels.
  std::optional<bool> power_of_two_form;
};

// ---------------------------------------------------------------------------
// Exact linear algebra on Gram matrices

/// Rank of a square matrix over Q(zeta) by Gaussian elimination.
inline long exact_rank(std::vector<std::vector<CycNum>> rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 0;
  const std::size_t cols = rows.front().size();
  long rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && rows[piv][c].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(rows[piv], rows[r]);
    const CycNum inv = rows[r][c].inverse();
    for (std::size_t i = r + 1; i < n; ++i) {
      if (rows[i][c].is_zero()) continue;
      const CycNum f = rows[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

namespace detail {

// Finds a clique of size k in a graph on <= 64 vertices given as adjacency masks.
inline bool find_clique(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, int k,
                        std::vector<int>& chosen) {
  if (k == 0) return true;
  if (std::popcount(candidates) < k) return false;
  while (candidates) {
    if (std::popcount(candidates) < k) return false;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    chosen.push_back(v);
    if (find_clique(adj, candidates & adj[v], k - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Searches the generators of one orbital subspace for an orthogonal basis
/// made of generators. `labels[i]` names generator i in the witness.
inline ObasisVerdict brute_force_obasis(const std::vector<SymVector>& gens, const std::vector<int>& labels) {
  if (gens.empty()) throw std::invalid_argument("brute_force_obasis: empty generator list");
  if (labels.size() != gens.size()) throw std::invalid_argument("brute_force_obasis: label count mismatch");
  ObasisVerdict v;
  v.source = VerdictSource::BruteForce;

  // nonzero generators, one per scalar-multiple class
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    bool dup = false;
    for (std::size_t r : reps)
      if (proportional(gens[r], gens[i])) {
        dup = true;
        break;
      }
    if (!dup) reps.push_back(i);
  }
  if (reps.empty()) {
    v.exists = true;
    v.rank = 0;
    v.witness = std::vector<int>{};
    return v;
  }
  if (reps.size() > 64) throw std::length_error("brute_force_obasis: more than 64 distinct generators");

  const std::size_t n = reps.size();
  std::vector<std::vector<CycNum>> gram(n, std::vector<CycNum>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      gram[i][j] = inner_product_direct(gens[reps[i]], gens[reps[j]]);
      gram[j][i] = gram[i][j].conj();
    }

  // Components of the "nonzero inner product" graph span mutually orthogonal
  // subspaces; an o-basis exists iff each component has one.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < n; ++b)
        if (comp[b] < 0 && !gram[a][b].is_zero()) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }

  std::vector<int> witness;
  bool ok = true;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) nodes.push_back(i);
    std::vector<std::vector<CycNum>> sub(nodes.size(), std::vector<CycNum>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j) sub[i][j] = gram[nodes[i]][nodes[j]];
    const long k = exact_rank(sub);
    v.rank += k;
    if (!ok) continue;
    std::vector<std::uint64_t> adj(nodes.size(), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j)
        if (i != j && sub[i][j].is_zero()) adj[i] |= 1ULL << j;
    const std::uint64_t all = nodes.size() == 64 ? ~0ULL : (1ULL << nodes.size()) - 1;
    std::vector<int> chosen;
    if (detail::find_clique(adj, all, static_cast<int>(k), chosen)) {
      for (int i : chosen) witness.push_back(labels[reps[nodes[i]]]);
    } else {
      ok = false;
    }
  }
  v.exists = ok;
  if (ok) {
    std::sort(witness.begin(), witness.end());
    v.witness = witness;
  }
  return v;
}

/// Independent re-check of a witness: nonzero generators, pairwise exactly
/// orthogonal, count equal to the rank of the full generator set.
inline bool verify_witness(const std::vector<SymVector>& gens, const std::vector<int>& labels,
                           const std::vector<int>& witness, long rank) {
  if (static_cast<long>(witness.size()) != rank) return false;
  std::vector<const SymVector*> chosen;
  for (int w : witness) {
    auto it = std::find(labels.begin(), labels.end(), w);
    if (it == labels.end()) return false;
    const SymVector& g = gens[static_cast<std::size_t>(it - labels.begin())];
    if (g.is_zero()) return false;
    chosen.push_back(&g);
  }
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::size_t j = i + 1; j < chosen.size(); ++j)
      if (!inner_product_direct(*chosen[i], *chosen[j]).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Arithmetic criteria

class CriterionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CriterionInput {
  Family family = Family::Semidihedral;
  int param = 0;
  int prime = 0;
  std::string label;
  bool linear = true;
  PrimeSplit split;
  int h = 0;
  int l_prime = 0;  // l / gcd(l, h)
  int h_prime = 0;  // h / gcd(l, h)
  int h2 = 0;       // 2-part of h
  int h1 = 0;       // odd part of h
};

/// Validates the label against IBr(G) and derives l', h', h = h1 h2.
inline CriterionInput make_criterion_input(Family family, int param, int p, const std::string& label) {
  const Group g = Group::build(family, param, Action::Natural);
  const CharTable ibr = brauer_table(g, p);
  const Character* row = nullptr;
  try {
    row = &ibr.find(label);
  } catch (const CharacterError&) {
    throw CriterionError("label '" + label + "' is not in IBr for p = " + std::to_string(p));
  }
  CriterionInput in;
  in.family = family;
  in.param = param;
  in.prime = p;
  in.label = row->label;
  in.linear = row->linear();
  in.split = split_prime(g.rotation_order(), p);
  if (!in.linear) {
    in.h = row->param;
    const int gcd = std::gcd(in.split.l, in.h);
    in.l_prime = in.split.l / gcd;
    in.h_prime = in.h / gcd;
    in.h2 = 1;
    in.h1 = in.h;
    while (in.h1 % 2 == 0) {
      in.h1 /= 2;
      in.h2 *= 2;
    }
  }
  return in;
}

/// Power-of-two reformulation: N = 0 mod 4 h_2 with N = 4n (resp. m).
inline bool power_of_two_criterion(int rotation_order, int h) {
  int h2 = 1;
  while (h % 2 == 0) {
    h /= 2;
    h2 *= 2;
  }
  return rotation_order % (4 * h2) == 0;
}

inline ObasisVerdict criterion_poly(const CriterionInput& in) {
  ObasisVerdict v;
  v.source = VerdictSource::ClosedForm;
  v.global = true;
  const int rot = in.split.l * in.split.pt;
  if (in.linear) {
    v.exists = in.prime == 2 || rot % in.prime != 0;
    return v;
  }
  v.exists = in.l_prime % 4 == 0;
  v.power_of_two_form = power_of_two_criterion(rot, in.h);
  if (*v.power_of_two_form != v.exists)
    throw std::logic_error("l' criterion and h_2 reformulation disagree for " + in.label);
  return v;
}

inline ObasisVerdict criterion_tensor(const CriterionInput& in, int dim_v) {
  if (dim_v < 1) throw CriterionError("dim V must be positive");
  if (dim_v == 1) {
    ObasisVerdict v;
    v.source = VerdictSource::ClosedForm;
    v.global = true;
    v.exists = true;
    return v;
  }
  return criterion_poly(in);
}

// ---------------------------------------------------------------------------
// Global verdicts by exhaustive search

struct OrbitalVerdict {
  Tuple representative;
  ObasisVerdict verdict;
};

struct GlobalVerdict {
  ObasisVerdict verdict;
  std::vector<OrbitalVerdict> orbitals;
};

inline std::vector<int> all_elements(const Group& g) {
  std::vector<int> idx(g.order());
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

inline GlobalVerdict combine(std::vector<OrbitalVerdict> orbitals) {
  GlobalVerdict out;
  out.verdict.source = VerdictSource::BruteForce;
  out.verdict.global = true;
  out.verdict.exists = true;
  std::vector<int> witness;
  for (const auto& o : orbitals) {
    out.verdict.rank += o.verdict.rank;
    if (!o.verdict.exists) out.verdict.exists = false;
    else if (o.verdict.witness)
      witness.insert(witness.end(), o.verdict.witness->begin(), o.verdict.witness->end());
  }
  if (out.verdict.exists) out.verdict.witness = witness;
  out.orbitals = std::move(orbitals);
  return out;
}

/// Conjunction of orbital verdicts over every orbit of multidegrees of
/// degree d within the support bound.
inline GlobalVerdict global_obasis(const Group& g, const Character& phi, int d, int support_bound,
                                   const Guards& guards = {}) {
  const auto reps = orbit_reps(g, d, support_bound, guards);
  const auto labels = all_elements(g);
  std::vector<OrbitalVerdict> orbitals;
  for (const auto& alpha : reps) {
    const auto gens = orbital_generators(g, phi, alpha);
    orbitals.push_back({alpha, brute_force_obasis(gens, labels)});
  }
  return combine(std::move(orbitals));
}

/// Tensor analogue over all index sequences in [1, dim_v]^m.
inline GlobalVerdict global_tensor_obasis(const Group& g, const Character& phi, int dim_v,
                                          const std::vector<TensorIndex>& reps) {
  const auto labels = all_elements(g);
  std::vector<OrbitalVerdict> orbitals;
  for (const auto& gamma : reps) {
    const auto gens = tensor_orbital_generators(g, phi, gamma, dim_v);
    orbitals.push_back({gamma, brute_force_obasis(gens, labels)});
  }
  return combine(std::move(orbitals));
}

inline GlobalVerdict global_tensor_obasis(const Group& g, const Character& phi, int dim_v) {
  return global_tensor_obasis(g, phi, dim_v, tensor_stabilizer_representatives(g, dim_v));
}

}  // namespace brauer
