#pragma once

// Semidihedral SD_{8n} = <a, b | a^{4n} = b^2 = 1, bab = a^{2n-1}> and dihedral
// D_m = <r, s | r^m = s^2 = 1, srs = r^{-1}> as concrete permutation groups.
//
// Both families are metacyclic: every element has the unique normal form
// b^f a^k (f in {0,1}, 0 <= k < N) and a^k b = b a^{k u} for the twist u
// (u = 2n-1 for SD, u = -1 for D). Elements are addressed by the dense index
// f*N + k, which is also the (flip, rot) sort order.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

enum class Family { Semidihedral, Dihedral };
enum class Action { Regular, Natural };

inline std::string family_name(Family f) { return f == Family::Semidihedral ? "SD" : "D"; }
inline std::string action_name(Action a) { return a == Action::Regular ? "regular" : "natural"; }

struct GroupElem {
  bool flip = false;
  int rot = 0;
  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
};

/// A multiset of points of the permutation action, one entry per point:
/// a multidegree on the polynomial side, an index sequence on the tensor side.
using Tuple = std::vector<int>;

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

class Group {
 public:
  static Group build(Family family, int param, Action action = Action::Regular) {
    if (family == Family::Semidihedral && param < 2)
      throw GroupError("semidihedral SD_{8n} requires n >= 2");
    if (family == Family::Dihedral && param < 3) throw GroupError("dihedral D_m requires m >= 3");
    Group g;
    g.family_ = family;
    g.param_ = param;
    g.action_ = action;
    g.rot_order_ = family == Family::Semidihedral ? 4 * param : param;
    g.twist_ = family == Family::Semidihedral ? 2 * param - 1 : g.rot_order_ - 1;
    g.init();
    return g;
  }

  Family family() const { return family_; }
  int param() const { return param_; }
  Action action() const { return action_; }
  int order() const { return 2 * rot_order_; }
  /// Order of the rotation generator (4n or m).
  int rotation_order() const { return rot_order_; }
  int twist() const { return twist_; }
  /// Number of points the group permutes.
  int degree() const { return static_cast<int>(perms_.front().size()); }

  int index(GroupElem e) const { return (e.flip ? rot_order_ : 0) + mod(e.rot); }
  GroupElem elem(int g) const { return GroupElem{g >= rot_order_, g % rot_order_}; }
  int identity() const { return 0; }
  int rotation(int k) const { return mod(k); }
  int reflection(int k) const { return rot_order_ + mod(k); }
  bool is_rotation(int g) const { return g < rot_order_; }

  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * order() + y]; }
  int inv(int x) const { return inverse_[x]; }
  int conjugate(int x, int by) const { return mul(mul(by, x), inv(by)); }

  /// Image of each point under g; perm(mul(x, y)) = perm(x) o perm(y).
  const std::vector<int>& perm(int g) const { return perms_[g]; }

  int element_order(int g) const { return orders_[g]; }

  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }

  /// Right action on tuples: (alpha . g)_i = alpha_{g(i)}.
  Tuple act(const Tuple& alpha, int g) const {
    const auto& p = perms_[g];
    Tuple out(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) out[i] = alpha[p[i]];
    return out;
  }

  /// {g : alpha . g = alpha}; closed under multiplication.
  std::vector<int> stabilizer(const Tuple& alpha) const {
    check_tuple(alpha);
    std::vector<int> out;
    for (int g = 0; g < order(); ++g)
      if (act(alpha, g) == alpha) out.push_back(g);
    return out;
  }

  std::set<Tuple> orbit(const Tuple& alpha) const {
    check_tuple(alpha);
    std::set<Tuple> out;
    for (int g = 0; g < order(); ++g) out.insert(act(alpha, g));
    return out;
  }

  /// Lexicographically greatest member of the orbit of alpha.
  Tuple canonical(const Tuple& alpha) const {
    Tuple best = alpha;
    for (int g = 1; g < order(); ++g) {
      Tuple t = act(alpha, g);
      if (t > best) best = std::move(t);
    }
    return best;
  }

  std::string render(int g) const {
    const bool sd = family_ == Family::Semidihedral;
    const GroupElem e = elem(g);
    const std::string rot = sd ? "a" : "r";
    const std::string flip = sd ? "b" : "s";
    if (!e.flip) return e.rot == 0 ? "1" : rot + "^" + std::to_string(e.rot);
    return e.rot == 0 ? flip : flip + "." + rot + "^" + std::to_string(e.rot);
  }

  void check_tuple(const Tuple& alpha) const {
    if (static_cast<int>(alpha.size()) != degree())
      throw GroupError("tuple length " + std::to_string(alpha.size()) + " does not match action degree " +
                       std::to_string(degree()));
  }

 private:
  int mod(long long k) const {
    long long r = k % rot_order_;
    return static_cast<int>(r < 0 ? r + rot_order_ : r);
  }

  int multiply_normal_forms(int x, int y) const {
    const GroupElem a = elem(x), b = elem(y);
    // b^{f1} a^{k1} b^{f2} a^{k2}
    if (!b.flip) return index({a.flip, mod(static_cast<long long>(a.rot) + b.rot)});
    return index({!a.flip, mod(static_cast<long long>(a.rot) * twist_ + b.rot)});
  }

  void init() {
    const int n = order();
    table_.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) table_[static_cast<std::size_t>(x) * n + y] = multiply_normal_forms(x, y);
    inverse_.assign(n, -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (mul(x, y) == 0) inverse_[x] = y;
    orders_.assign(n, 0);
    for (int x = 0; x < n; ++x) {
      int k = 1, acc = x;
      while (acc != 0) {
        acc = mul(acc, x);
        ++k;
      }
      orders_[x] = k;
    }
    build_action();
    build_classes();
  }

  void build_action() {
    const int n = order();
    perms_.assign(n, {});
    if (action_ == Action::Regular) {
      // left translation x -> g x
      for (int g = 0; g < n; ++g) {
        perms_[g].resize(n);
        for (int x = 0; x < n; ++x) perms_[g][x] = mul(g, x);
      }
    } else {
      // b^f a^k : j -> u^f (j + k) mod N
      for (int g = 0; g < n; ++g) {
        const GroupElem e = elem(g);
        perms_[g].resize(rot_order_);
        for (int j = 0; j < rot_order_; ++j) {
          long long v = j + e.rot;
          if (e.flip) v *= twist_;
          perms_[g][j] = mod(v);
        }
      }
    }
    // Faithfulness and homomorphism are structural invariants; refuse otherwise.
    std::vector<int> id(perms_[0].size());
    std::iota(id.begin(), id.end(), 0);
    for (int g = 1; g < n; ++g)
      if (perms_[g] == id) throw GroupError("requested action is not faithful");
  }

  void build_classes() {
    const int n = order();
    class_of_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      if (class_of_[x] >= 0) continue;
      std::vector<int> cls;
      for (int y = 0; y < n; ++y) cls.push_back(conjugate(x, y));
      std::sort(cls.begin(), cls.end());
      cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
      for (int c : cls) class_of_[c] = static_cast<int>(classes_.size());
      classes_.push_back(std::move(cls));
    }
  }

  Family family_ = Family::Dihedral;
  int param_ = 0;
  Action action_ = Action::Regular;
  int rot_order_ = 0;
  int twist_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<std::vector<int>> perms_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

/// 4n = l p^t (resp. m = l p^t) with p not dividing l.
struct PrimeSplit {
  int p = 0;
  int t = 0;
  int l = 0;
  int pt = 1;  // p^t
};

inline PrimeSplit split_prime(int value, int p) {
  if (!is_prime(p)) throw GroupError("p = " + std::to_string(p) + " is not prime");
  PrimeSplit s{p, 0, value, 1};
  while (s.l % p == 0) {
    s.l /= p;
    s.pt *= p;
    ++s.t;
  }
  return s;
}

struct PRegularData {
  PrimeSplit split;
  std::vector<int> elements;              // sorted element indices
  std::vector<char> member;               // indicator over all elements
  std::vector<std::vector<int>> classes;  // sorted by minimal element
};

/// p-regular elements and classes, computed from element orders alone.
inline PRegularData pregular(const Group& g, int p) {
  PRegularData d;
  d.split = split_prime(g.rotation_order(), p);
  d.member.assign(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (g.element_order(x) % p != 0) {
      d.member[x] = 1;
      d.elements.push_back(x);
    }
  }
  for (const auto& cls : g.conjugacy_classes())
    if (d.member[cls.front()]) d.classes.push_back(cls);
  return d;
}

/// Subset of the group given by a membership mask.
inline std::vector<int> members(const std::vector<char>& mask) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(mask.size()); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

}  // namespace brauer
