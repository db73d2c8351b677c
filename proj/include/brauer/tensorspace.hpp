#pragma once

// Symmetry classes of tensors V_phi(G) inside the m-fold tensor power of an
// n-dimensional space with orthonormal basis e_1..e_n.
//
// Index sequences carry the left action (s.alpha)_i = alpha_{s^-1(i)}, and
// e*_alpha = phi(1)/|S| * sum_{s in S} phi(s) e_{s.alpha}.

#include <map>
#include <stdexcept>
#include <vector>

#include "brauer/characters.hpp"
#include "brauer/groups.hpp"
#include "brauer/polyspace.hpp"
#include "brauer/symvector.hpp"

namespace brauer {

using TensorIndex = Tuple;
using SymTensor = SymVector;

/// s.alpha
inline TensorIndex tensor_act(const Group& g, int s, const TensorIndex& alpha) { return g.act(alpha, g.inv(s)); }

inline void check_tensor_index(const Group& g, const TensorIndex& alpha, int dim_v) {
  g.check_tuple(alpha);
  for (int v : alpha)
    if (v < 1 || v > dim_v) throw GroupError("tensor index entry outside [1, dim V]");
}

inline SymTensor tensor_symmetrize(const Group& g, const Character& phi, const TensorIndex& alpha, int dim_v) {
  check_tensor_index(g, alpha, dim_v);
  const auto S = phi.support();
  SymTensor out(phi.order, ratio(phi.degree, static_cast<long>(S.size())));
  for (int s : S) out.add(tensor_act(g, s, alpha), phi.roots[s]);
  out.finalize();
  return out;
}

/// Generators e*_{s.gamma}, one per group element.
inline std::vector<SymTensor> tensor_orbital_generators(const Group& g, const Character& phi,
                                                        const TensorIndex& gamma, int dim_v) {
  std::vector<SymTensor> gens;
  gens.reserve(g.order());
  for (int s = 0; s < g.order(); ++s) gens.push_back(tensor_symmetrize(g, phi, tensor_act(g, s, gamma), dim_v));
  return gens;
}

/// Kernel K(x) = phi(1)^2/|S|^2 * sum_{rho in S, rho x in S} phi(rho x) conj(phi(rho)),
/// so that <e*_{s1.gamma}, e*_{s2.gamma}> = sum_{x in s2 G_gamma s1^-1} K(x).
class SymmetrizerKernel {
 public:
  SymmetrizerKernel(const Group& g, const Character& phi) : values_(g.order()) {
    const auto S = phi.support();
    const Rational c = ratio(phi.degree, static_cast<long>(S.size()));
    for (int x = 0; x < g.order(); ++x) {
      RootAccumulator acc(phi.order);
      for (int rho : S) {
        const int rx = g.mul(rho, x);
        if (phi.defined_at(rx)) acc.add_product_conj(phi.roots[rx], phi.roots[rho]);
      }
      roots_.push_back(acc.as_root_sum());
      values_[x] = acc.value(c * c);
    }
    scale_ = c * c;
    order_ = phi.order;
  }

  const CycNum& operator()(int x) const { return values_[x]; }
  const RootSum& raw(int x) const { return roots_[x]; }
  const Rational& scale() const { return scale_; }
  int order() const { return order_; }

 private:
  std::vector<CycNum> values_;
  std::vector<RootSum> roots_;
  Rational scale_;
  int order_ = 1;
};

inline CycNum estar_inner_closed(const Group& g, const SymmetrizerKernel& kernel, const std::vector<int>& stabilizer,
                                 int s1, int s2) {
  RootAccumulator acc(kernel.order());
  const int s1inv = g.inv(s1);
  for (int tau : stabilizer) acc.add(kernel.raw(g.mul(g.mul(s2, tau), s1inv)));
  return acc.value(kernel.scale());
}

inline CycNum estar_inner_closed(const Group& g, const Character& phi, const TensorIndex& gamma, int s1, int s2) {
  return estar_inner_closed(g, SymmetrizerKernel(g, phi), g.stabilizer(gamma), s1, s2);
}

/// chi(1)/|G| * sum_{x in s2 G_gamma s1^-1} chi(x), the projection form valid
/// when the symmetrizer is an idempotent (phi ordinary irreducible). Off the
/// domain of phi the summand is taken as zero.
inline CycNum estar_inner_projection(const Group& g, const Character& phi, const std::vector<int>& stabilizer,
                                     int s1, int s2) {
  RootAccumulator acc(phi.order);
  const int s1inv = g.inv(s1);
  for (int tau : stabilizer) {
    const int x = g.mul(g.mul(s2, tau), s1inv);
    if (phi.defined_at(x)) acc.add(phi.roots[x]);
  }
  return acc.value(ratio(phi.degree, g.order()));
}

/// dim V*_alpha = sum over constituents chi of chi(1)/|G_alpha| sum_{G_alpha} chi.
inline long tensor_orbital_dim(const Group& g, const Character& phi, const std::vector<int>& stabilizer,
                               const CharTable& irr) {
  return orbital_dim(g, phi, stabilizer, irr);
}

/// phi(1)/|G_alpha| * sum_{s in G_alpha} phi(s) with phi extended by zero;
/// throws when the value is not a non-negative integer.
inline long tensor_orbital_dim_formula(const Group& /*g*/, const Character& phi, const std::vector<int>& stabilizer) {
  RootAccumulator acc(phi.order);
  for (int s : stabilizer)
    if (phi.defined_at(s)) acc.add(phi.roots[s]);
  const CycNum v = acc.value(ratio(phi.degree, static_cast<long>(stabilizer.size())));
  if (!v.is_rational()) throw CharacterError("orbital dimension formula is not rational");
  const Rational r = v.rational_value();
  if (r.get_den() != 1 || sgn(r) < 0)
    throw CharacterError("orbital dimension formula gives a non-integer: " + rational_string(r));
  return r.get_num().get_si();
}

/// All index sequences in [1, dim_v]^m, first index varying slowest.
inline std::vector<TensorIndex> all_tensor_indices(int m, int dim_v, long max_count = 1L << 21) {
  long count = 1;
  for (int i = 0; i < m; ++i) {
    count *= dim_v;
    if (count > max_count) throw GuardError("tensor index space exceeds the desk-scale bound");
  }
  std::vector<TensorIndex> out;
  out.reserve(static_cast<std::size_t>(count));
  TensorIndex cur(m, 1);
  for (long c = 0; c < count; ++c) {
    out.push_back(cur);
    for (int i = m - 1; i >= 0; --i) {
      if (++cur[i] <= dim_v) break;
      cur[i] = 1;
    }
  }
  return out;
}

/// One index sequence per distinct stabilizer subgroup, in first-seen order.
/// Orbits with equal stabilizers have isometric orbital subspaces (the map
/// e_{s.gamma} -> e_{s.gamma'} is a well-defined isometry commuting with the
/// symmetrizer), so o-basis questions only need these representatives.
inline std::vector<TensorIndex> tensor_stabilizer_representatives(const Group& g, int dim_v) {
  if (dim_v < 1 || dim_v > 4) throw GuardError("dim V must lie in [1, 4]");
  if (g.order() > 64) throw GuardError("group order exceeds the desk-scale bound");
  std::map<unsigned long long, TensorIndex> seen;
  std::vector<TensorIndex> out;
  const int m = g.degree();
  TensorIndex cur(m, 1);
  long count = 1;
  for (int i = 0; i < m; ++i) {
    count *= dim_v;
    if (count > (1L << 21)) throw GuardError("tensor index space exceeds the desk-scale bound");
  }
  for (long c = 0; c < count; ++c) {
    unsigned long long mask = 0;
    for (int s = 0; s < g.order(); ++s) {
      const auto& p = g.perm(s);
      bool fixed = true;
      for (int i = 0; i < m && fixed; ++i) fixed = cur[p[i]] == cur[i];
      if (fixed) mask |= 1ULL << s;
    }
    if (seen.emplace(mask, cur).second) out.push_back(cur);
    for (int i = m - 1; i >= 0; --i) {
      if (++cur[i] <= dim_v) break;
      cur[i] = 1;
    }
  }
  return out;
}

}  // namespace brauer
