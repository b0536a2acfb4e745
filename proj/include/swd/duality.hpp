#pragma once

// The Schur-Weyl duality datum (J = Z, X, {V_j}) for B_n^(1), the quiver it
// determines, the image of segment modules under the duality functor at the
// level of Grothendieck rings, and the correspondences phi_1, phi_2 from
// type A_{2n-1}^(1) and A_{2n-1}^(2).

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "swd/affine_b.hpp"
#include "swd/scalars.hpp"
#include "swd/segments.hpp"

namespace swd {

/// Floor division and non-negative remainder for a positive modulus.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t m) {
  return a >= 0 ? a / m : -((-a + m - 1) / m);
}
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  return a - floor_div(a, m) * m;
}

class DualityDatum {
 public:
  explicit DualityDatum(int n) : bn_(n) {}
  explicit DualityDatum(const BnData& bn) : bn_(bn) {}

  const BnData& bn() const { return bn_; }
  int n() const { return bn_.n(); }
  int N() const { return bn_.N(); }

  /// Fundamental index of V_j: n if j = -1, 0 mod N, else 1.
  int v_of(std::int64_t j) const;
  /// Spectral parameter X(j).
  QPower x_of(std::int64_t j) const;
  /// q^{2N-2}, the shift of X over one period.
  QPower period_shift() const { return QPower::q(2 * N() - 2); }

  /// Number of arrows i -> j: zero order of d_{V_i,V_j} at X(j)/X(i).
  int quiver_dij(std::int64_t i, std::int64_t j) const;
  /// delta(j = i+1, j != 0 mod N) + delta(j = i-1, j = -1 mod N).
  int quiver_closed_form(std::int64_t i, std::int64_t j) const;
  /// a^J_ij = 2 if i == j, else -d_ij - d_ji.
  int cartan_AJ(std::int64_t i, std::int64_t j) const;

 private:
  BnData bn_;
};

namespace simple_class {

struct Zero {
  bool operator==(const Zero&) const = default;
};
struct Unit {
  bool operator==(const Unit&) const = default;
};
/// [V(varpi_i)_x]
struct Fund {
  int i;
  QPower x;
  bool operator==(const Fund&) const = default;
};
/// [V(varpi_n)_{x1} hconv V(varpi_n)_{x2}]; the order of the pair matters.
struct HeadNN {
  QPower x1;
  QPower x2;
  bool operator==(const HeadNN&) const = default;
};

}  // namespace simple_class

/// Class of a simple module in K(C^0_{B_n^(1)}) as produced by the image map.
using SimpleClassB =
    std::variant<simple_class::Zero, simple_class::Unit, simple_class::Fund, simple_class::HeadNN>;

std::string to_string(const SimpleClassB& c);

/// Fund(i, x), validated against S_0.
SimpleClassB make_fund(const DualityDatum& d, int i, QPower x);

/// Multiplies every spectral parameter by q^{k(2N-2)}.
SimpleClassB periodicity_shift(const DualityDatum& d, const SimpleClassB& c, std::int64_t k);

/// Image of [L(a,b)] in K(C^0_{B_n^(1)}).
SimpleClassB f_image(const DualityDatum& d, const Segment& s);

/// phi_1([V^(1)(varpi_i)_{(-q)^p}]), 1 <= i <= 2n-1, p = i+1 mod 2.
SimpleClassB phi1_fund(const DualityDatum& d, int i, std::int64_t p);

/// phi_2([V^(2)(varpi_i)_{sign (-q)^p}]), 1 <= i <= n, p = i+1 mod 2.
SimpleClassB phi2_fund(const DualityDatum& d, int i, int sign, std::int64_t p);

/// Fundamental representation of type A_{2n-1}^(t): t = 1 untwisted, t = 2 twisted.
struct FundRepA {
  int t;
  int i;
  QPower x;
  bool operator==(const FundRepA&) const = default;
};

/// Throws unless (i, x) lies in S_0(A_{2n-1}^(t)).
void validate_fund_a(const DualityDatum& d, const FundRepA& v);

/// Image of a product of fundamental classes, as the list of images of the
/// factors. All factors must share the same t.
std::vector<SimpleClassB> phi_monomial(const DualityDatum& d, std::span<const FundRepA> reps);

/// One row of the table of phi_1 / phi_2 on fundamental classes over the
/// printed parameter ranges. part 1: V^(1)(varpi_i)_{(-q)^p} and
/// V^(2)(varpi_i)_{(-q)^p}; part 2: V^(1)(varpi_{N-i})_{(-q)^p} and
/// V^(2)(varpi_i)_{-(-q)^p}.
struct CorollaryRow {
  int part;
  int i;
  std::int64_t p;
  SimpleClassB phi1;
  SimpleClassB phi2;
};

std::vector<CorollaryRow> corollary_table(const DualityDatum& d);

}  // namespace swd
