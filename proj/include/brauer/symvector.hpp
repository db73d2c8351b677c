#pragma once

// Sparse vectors over an orthonormal basis indexed by tuples: monomials X^alpha
// on the polynomial side, basis tensors e_alpha on the tensor side.

#include <map>
#include <vector>

#include "brauer/cyclotomic.hpp"
#include "brauer/groups.hpp"

namespace brauer {

/// scale * sum_key raw[key] * basis(key). `raw` holds unreduced integral
/// coefficients for fast inner products; `coeffs` holds the canonical values
/// (scale already applied) with zero coefficients removed.
class SymVector {
 public:
  SymVector() = default;
  SymVector(int order, Rational scale) : order_(order), scale_(std::move(scale)) {}

  void add(const Tuple& key, const RootSum& coeff) {
    auto [it, inserted] = raw_.try_emplace(key, RootSum(order_));
    for (const auto& [k, c] : coeff.terms()) it->second.add_term(k, c);
  }

  /// Reduces coefficients; call once after all add() calls.
  void finalize() {
    coeffs_.clear();
    for (auto it = raw_.begin(); it != raw_.end();) {
      CycNum v = it->second.to_cyc();
      if (v.is_zero()) {
        it = raw_.erase(it);
        continue;
      }
      coeffs_.emplace(it->first, v * CycNum(scale_));
      ++it;
    }
  }

  int order() const { return order_; }
  const Rational& scale() const { return scale_; }
  const std::map<Tuple, CycNum>& coeffs() const { return coeffs_; }
  const std::map<Tuple, RootSum>& raw() const { return raw_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }

  CycNum coefficient(const Tuple& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? CycNum() : it->second;
  }

  bool same_support(const SymVector& other) const {
    if (coeffs_.size() != other.coeffs_.size()) return false;
    auto a = coeffs_.begin();
    auto b = other.coeffs_.begin();
    for (; a != coeffs_.end(); ++a, ++b)
      if (a->first != b->first) return false;
    return true;
  }

 private:
  int order_ = 1;
  Rational scale_{1};
  std::map<Tuple, RootSum> raw_;
  std::map<Tuple, CycNum> coeffs_;
};

/// <u, v> = sum over the common support of u_k * conj(v_k).
inline CycNum inner_product_direct(const SymVector& u, const SymVector& v) {
  RootAccumulator acc(std::lcm(u.order(), v.order()));
  const bool same = u.order() == v.order();
  auto a = u.raw().begin();
  auto b = v.raw().begin();
  while (a != u.raw().end() && b != v.raw().end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      if (same) {
        acc.add_product_conj(a->second, b->second);
      } else {
        RootSum ra(acc.order()), rb(acc.order());
        const int sa = acc.order() / u.order(), sb = acc.order() / v.order();
        for (const auto& [k, c] : a->second.terms()) ra.add_term(static_cast<long long>(k) * sa, c);
        for (const auto& [k, c] : b->second.terms()) rb.add_term(static_cast<long long>(k) * sb, c);
        acc.add_product_conj(ra, rb);
      }
      ++a;
      ++b;
    }
  }
  return acc.value(u.scale() * v.scale());
}

/// u and v both nonzero and u = c v for some scalar c (exact cross-ratio test).
inline bool proportional(const SymVector& u, const SymVector& v) {
  if (u.is_zero() || v.is_zero() || !u.same_support(v)) return false;
  const CycNum& u0 = u.coeffs().begin()->second;
  const CycNum& v0 = v.coeffs().begin()->second;
  auto a = u.coeffs().begin();
  auto b = v.coeffs().begin();
  for (++a, ++b; a != u.coeffs().end(); ++a, ++b)
    if (a->second * v0 != b->second * u0) return false;
  return true;
}

}  // namespace brauer
