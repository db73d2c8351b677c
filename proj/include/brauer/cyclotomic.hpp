#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNum is stored in the power basis {1, z, ..., z^(phi(N)-1)} of
// Q(z) = Q[x]/Phi_N(x). Every value has exactly one such representation, so
// equality and the zero test are coefficient comparisons.

#include <complex>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace brauer {

using Rational = mpq_class;

namespace detail {

inline long long euler_phi(long long n) {
  long long result = n;
  for (long long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline long long mod_floor(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

inline std::vector<long long> compute_cyclotomic_poly(int n);

inline const std::vector<long long>& cyclotomic_poly(int n) {
  thread_local std::unordered_map<int, std::vector<long long>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto poly = compute_cyclotomic_poly(n);
  return cache.emplace(n, std::move(poly)).first->second;
}

// Integer coefficients of Phi_N, lowest degree first, from
// x^N - 1 = prod_{d | N} Phi_d(x).
inline std::vector<long long> compute_cyclotomic_poly(int n) {
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_poly(d);
    const int dd = static_cast<int>(div.size()) - 1;
    const int dn = static_cast<int>(num.size()) - 1;
    std::vector<long long> quot(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      long long c = num[i];  // divisor is monic
      quot[i - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace detail

/// num/den in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

class CycNum {
 public:
  CycNum() : order_(1), coeffs_(1, Rational(0)) {}
  CycNum(long v) : order_(1), coeffs_(1, Rational(v)) {}  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& v) : order_(1), coeffs_(1, v) {}  // NOLINT(google-explicit-constructor)

  /// Builds sum_k dense[k] * z_N^k for an arbitrary-length exponent vector;
  /// exponents are taken mod N before reduction.
  static CycNum from_dense(int order, const std::vector<Rational>& dense) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::vector<Rational> folded(order, Rational(0));
    for (std::size_t k = 0; k < dense.size(); ++k) folded[k % order] += dense[k];
    return CycNum(order, reduce(order, std::move(folded)));
  }

  /// Canonical power-basis coefficients, sparse; used by serialization.
  static CycNum from_terms(int order, const std::vector<std::pair<int, Rational>>& terms) {
    std::vector<Rational> dense(order, Rational(0));
    for (const auto& [k, c] : terms) dense[detail::mod_floor(k, order)] += c;
    return from_dense(order, dense);
  }

  int order() const { return order_; }
  int basis_size() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Nonzero coefficients as (exponent, value), sorted by exponent.
  std::vector<std::pair<int, Rational>> terms() const {
    std::vector<std::pair<int, Rational>> out;
    for (int k = 0; k < basis_size(); ++k)
      if (sgn(coeffs_[k]) != 0) out.emplace_back(k, coeffs_[k]);
    return out;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (int k = 1; k < basis_size(); ++k)
      if (sgn(coeffs_[k]) != 0) return false;
    return true;
  }

  /// Value as a rational; throws unless is_rational().
  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
    return coeffs_[0];
  }

  bool is_integral() const {
    for (const auto& c : coeffs_)
      if (c.get_den() != 1) return false;
    return true;
  }

  /// Re-expresses the value in Q(zeta_L); L must be a multiple of order().
  CycNum embed(int target) const {
    if (target == order_) return *this;
    if (target % order_ != 0) throw std::invalid_argument("embedding order must be a multiple");
    const int step = target / order_;
    std::vector<Rational> dense(target, Rational(0));
    for (int k = 0; k < basis_size(); ++k) dense[k * step] = coeffs_[k];
    return CycNum(target, reduce(target, std::move(dense)));
  }

  /// Galois automorphism z -> z^k (gcd(k, N) = 1).
  CycNum galois(int k) const {
    std::vector<Rational> dense(order_, Rational(0));
    for (int j = 0; j < basis_size(); ++j)
      if (sgn(coeffs_[j]) != 0)
        dense[detail::mod_floor(static_cast<long long>(j) * k, order_)] += coeffs_[j];
    return CycNum(order_, reduce(order_, std::move(dense)));
  }

  CycNum conj() const { return galois(-1); }

  CycNum inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // a^-1 = (prod of the other conjugates) / norm(a)
    CycNum others(Rational(1));
    for (int k = 2; k < order_; ++k)
      if (std::gcd(k, order_) == 1) others *= galois(k);
    CycNum norm = others * (*this);
    return others * CycNum(Rational(1) / norm.rational_value());
  }

  std::complex<double> to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double base = 2.0 * 3.14159265358979323846 / order_;
    for (int k = 0; k < basis_size(); ++k)
      if (sgn(coeffs_[k]) != 0) acc += coeffs_[k].get_d() * std::polar(1.0, base * k);
    return acc;
  }

  CycNum operator-() const {
    CycNum out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  CycNum& operator+=(const CycNum& rhs) {
    if (rhs.order_ == order_) {
      for (int k = 0; k < basis_size(); ++k) coeffs_[k] += rhs.coeffs_[k];
      return *this;
    }
    const int l = std::lcm(order_, rhs.order_);
    *this = embed(l) + rhs.embed(l);
    return *this;
  }

  CycNum& operator-=(const CycNum& rhs) { return *this += -rhs; }

  CycNum& operator*=(const CycNum& rhs) {
    if (rhs.order_ != order_) {
      const int l = std::lcm(order_, rhs.order_);
      *this = embed(l) * rhs.embed(l);
      return *this;
    }
    if (rhs.is_rational()) {
      for (auto& c : coeffs_) c *= rhs.coeffs_[0];
      return *this;
    }
    if (is_rational()) {
      Rational s = coeffs_[0];
      *this = rhs;
      for (auto& c : coeffs_) c *= s;
      return *this;
    }
    const int b = basis_size();
    std::vector<Rational> prod(2 * b - 1, Rational(0));
    for (int i = 0; i < b; ++i) {
      if (sgn(coeffs_[i]) == 0) continue;
      for (int j = 0; j < b; ++j)
        if (sgn(rhs.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = reduce_poly(order_, std::move(prod));
    return *this;
  }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    return (a - b).is_zero();
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms()) {
      if (!first) os << " + ";
      first = false;
      if (k == 0) {
        os << c;
      } else {
        if (c != 1) os << "(" << c << ")*";
        os << "z" << order_ << "^" << k;
      }
    }
    if (first) os << "0";
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const CycNum& v) { return os << v.to_string(); }

 private:
  CycNum(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}

  // Reduces a polynomial in z (any degree) modulo Phi_N to phi(N) coefficients.
  static std::vector<Rational> reduce_poly(int order, std::vector<Rational> poly) {
    const auto& phi = detail::cyclotomic_poly(order);
    const int deg = static_cast<int>(phi.size()) - 1;
    for (int i = static_cast<int>(poly.size()) - 1; i >= deg; --i) {
      if (sgn(poly[i]) == 0) continue;
      Rational c = poly[i];
      for (int j = 0; j < deg; ++j)
        if (phi[j] != 0) poly[i - deg + j] -= c * Rational(static_cast<long>(phi[j]));
      poly[i] = 0;
    }
    poly.resize(deg, Rational(0));
    return poly;
  }

  static std::vector<Rational> reduce(int order, std::vector<Rational> dense) {
    return reduce_poly(order, std::move(dense));
  }

  int order_;
  std::vector<Rational> coeffs_;
};

/// z_N^(k mod N).
inline CycNum root_of_unity(int order, long long k) {
  if (order < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
  std::vector<Rational> dense(order, Rational(0));
  dense[detail::mod_floor(k, order)] = 1;
  return CycNum::from_dense(order, dense);
}

inline CycNum conj(const CycNum& a) { return a.conj(); }

/// Unreduced element of the group ring Z[C_N]: an integer combination of
/// N-th roots of unity. Products and conjugates stay in the ring, so long
/// sums of character-value products are accumulated here with machine
/// integers and reduced to a CycNum once.
class RootSum {
 public:
  explicit RootSum(int order = 1) : order_(order) {}

  static RootSum root(int order, long long k, long long coeff = 1) {
    RootSum r(order);
    r.add_term(k, coeff);
    return r;
  }

  /// Exact conversion of an integral CycNum (power-basis terms).
  static RootSum from_cyc(const CycNum& v) {
    if (!v.is_integral()) throw std::domain_error("RootSum needs an integral cyclotomic value");
    RootSum r(v.order());
    for (const auto& [k, c] : v.terms()) r.add_term(k, c.get_num().get_si());
    return r;
  }

  int order() const { return order_; }
  const std::vector<std::pair<int, long long>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(long long k, long long coeff) {
    if (coeff == 0) return;
    const int e = static_cast<int>(detail::mod_floor(k, order_));
    for (auto& t : terms_) {
      if (t.first == e) {
        t.second += coeff;
        return;
      }
    }
    terms_.emplace_back(e, coeff);
  }

  RootSum conj() const {
    RootSum r(order_);
    for (const auto& [k, c] : terms_) r.add_term(-k, c);
    return r;
  }

  CycNum to_cyc() const {
    std::vector<Rational> dense(order_, Rational(0));
    for (const auto& [k, c] : terms_) dense[k] += Rational(static_cast<long>(c));
    return CycNum::from_dense(order_, dense);
  }

 private:
  int order_;
  std::vector<std::pair<int, long long>> terms_;
};

/// Dense accumulator over Z[C_N].
class RootAccumulator {
 public:
  explicit RootAccumulator(int order) : acc_(order, 0) {}

  int order() const { return static_cast<int>(acc_.size()); }

  void add(const RootSum& a, long long scale = 1) {
    const int n = order();
    for (const auto& [k, c] : a.terms()) acc_[k % n] += scale * c;
  }

  /// acc += a * conj(b)
  void add_product_conj(const RootSum& a, const RootSum& b) {
    const int n = order();
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) acc_[detail::mod_floor(ka - kb, n)] += ca * cb;
  }

  void add_product(const RootSum& a, const RootSum& b) {
    const int n = order();
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) acc_[(ka + kb) % n] += ca * cb;
  }

  CycNum value(const Rational& scale = Rational(1)) const {
    std::vector<Rational> dense(acc_.size());
    for (std::size_t k = 0; k < acc_.size(); ++k) dense[k] = Rational(static_cast<long>(acc_[k])) * scale;
    return CycNum::from_dense(order(), dense);
  }

  RootSum as_root_sum() const {
    RootSum r(order());
    for (int k = 0; k < order(); ++k) r.add_term(k, acc_[k]);
    return r;
  }

  void clear() { std::fill(acc_.begin(), acc_.end(), 0); }

 private:
  std::vector<long long> acc_;
};

inline std::string rational_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace brauer
