#pragma once

// Static data of the quantum affine algebra of type B_n^(1): the constants
// q_s, q_t, p*, denominators of normalized R-matrices between fundamental
// representations, the component S_0 and the Dorey-type surjections.

#include <cstdint>
#include <utility>
#include <vector>

#include "swd/scalars.hpp"

namespace swd {

class BnData {
 public:
  explicit BnData(int n);

  int n() const { return n_; }
  int N() const { return 2 * n_; }
  /// q_s = q^{1/2}
  QPower q_s() const { return QPower::q_half(1); }
  /// q_t = (-1)^{n+1} q_s^{2n+1}
  QPower q_t() const { return QPower((n_ + 1) % 2 == 0 ? 1 : -1, HalfInt::from_twice(2 * n_ + 1)); }
  /// p* = q^{2n-1}
  QPower pstar() const { return QPower::q(2 * n_ - 1); }

  bool operator==(const BnData&) const = default;

 private:
  int n_;
};

/// The symbol V(varpi_i)_x. Index 0 and n+1 stand for the trivial module,
/// indices outside [0, n+1] for the zero module.
struct FundRepB {
  int i;
  QPower x;

  bool is_trivial(const BnData& d) const { return i == 0 || i == d.n() + 1; }
  bool is_zero(const BnData& d) const { return i < 0 || i > d.n() + 1; }

  bool operator==(const FundRepB&) const = default;
};

/// Roots of d_{V(varpi_k),V(varpi_l)}(z), with multiplicity, sorted.
class DenominatorRoots {
 public:
  DenominatorRoots() = default;
  explicit DenominatorRoots(std::vector<QPower> roots);

  const std::vector<QPower>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  int multiplicity(QPower x) const;

  bool operator==(const DenominatorRoots&) const = default;

 private:
  std::vector<QPower> roots_;
};

/// Requires 1 <= k, l <= n.
DenominatorRoots denom_roots(const BnData& d, int k, int l);

/// Multiplicity of `ratio` among the roots.
int zero_order_at(const DenominatorRoots& r, QPower ratio);

/// Membership of (i, x) in S_0(B_n^(1)); requires 1 <= i <= n.
bool in_S0(const BnData& d, int i, QPower x);

/// Right dual V(varpi_i)_{x p*}. For i < n the involution i* = i is assumed.
FundRepB right_dual(const BnData& d, const FundRepB& v);
/// Left dual V(varpi_i)_{x / p*}; inverse of right_dual.
FundRepB left_dual(const BnData& d, const FundRepB& v);

/// A surjection first (x) second ->> target.
struct DoreyMap {
  FundRepB first;
  FundRepB second;
  FundRepB target;

  bool operator==(const DoreyMap&) const = default;
};

/// V(varpi_n)_{q^{k+1+m}} (x) V(varpi_n)_{q^{N-k+m}} ->> V(varpi_k)_{(-1)^{k+1} q_t q^m},
/// 1 <= k <= n-1.
DoreyMap dorey_nn(const BnData& d, int k, std::int64_t m);
inline FundRepB dorey_nn_target(const BnData& d, int k, std::int64_t m) {
  return dorey_nn(d, k, m).target;
}

/// V(varpi_k)_{(-q)^{-l}} (x) V(varpi_l)_{(-q)^k} ->> V(varpi_{k+l}),
/// 1 <= k, l, k+l <= n-1.
DoreyMap dorey_kl_target(const BnData& d, int k, int l);

/// V(varpi_n) (x) V(varpi_1)_{q_t} ->> V(varpi_n)_{q^2}; recorded, not composed.
DoreyMap dorey_n1(const BnData& d);

}  // namespace swd
