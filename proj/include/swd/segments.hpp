#pragma once

// Segment combinatorics for simple modules L(a,b) over the quiver Hecke
// algebra of type A_infinity.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "swd/error.hpp"

namespace swd {

/// The segment (a,b) indexing L(a,b). b == a-1 is the unit class L(a,a-1).
class Segment {
 public:
  Segment(std::int64_t a, std::int64_t b);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t length() const { return b_ - a_ + 1; }
  bool is_unit() const { return b_ == a_ - 1; }

  bool operator==(const Segment&) const = default;

  std::string to_string() const;

 private:
  std::int64_t a_;
  std::int64_t b_;
};

/// Total order on segments: s1 > s2 iff a1 > a2, or a1 == a2 and b1 < b2.
std::strong_ordering seg_cmp(const Segment& s1, const Segment& s2);

using Multisegment = std::vector<Segment>;

/// Every consecutive pair satisfies seg_k >= seg_{k+1}.
bool is_ordered(std::span<const Segment> m);

/// Stable descending sort under seg_cmp.
Multisegment normal_form(Multisegment m);

/// Finitely supported integer combination of the simple roots alpha_i.
class RootVector {
 public:
  RootVector() = default;

  std::int64_t operator[](std::int64_t i) const;
  void add(std::int64_t i, std::int64_t coeff);
  const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const RootVector&) const = default;

 private:
  std::map<std::int64_t, std::int64_t> terms_;  // zero coefficients never stored
};

/// alpha_a + ... + alpha_b; the zero vector for the unit segment.
RootVector weight_of(const Segment& s);

/// Symmetric A_infinity form: (alpha_i, alpha_i) = 2, (alpha_i, alpha_{i+-1}) = -1.
std::int64_t cartan_pair(const RootVector& beta, const RootVector& gamma);

/// <alpha_i, alpha_j> = delta_ij.
std::int64_t euler_pair(const RootVector& beta, const RootVector& gamma);

/// Lambda(L(a,b), L(a',b')). Throws on unit segments.
std::int64_t lambda(const Segment& s, const Segment& t);

/// The invariant d(L(a,b), L(a',b')) in {0, 1}. Throws on unit segments.
std::int64_t de(const Segment& s, const Segment& t);

/// Order of zero s of the R-matrix, recovered from Lambda and the two pairings.
/// Throws if the result is negative or non-integral.
std::int64_t zero_order_s(const Segment& s, const Segment& t);

/// One term coef_sign * q^{q_exp} [word] of an alternating sum in the graded
/// Grothendieck group; word is an ordered convolution product.
struct KTerm {
  int coef_sign;
  int q_exp;
  std::vector<Segment> word;

  bool operator==(const KTerm&) const = default;
};

struct KRelation {
  enum class Kind { Overlapping, Adjacent };
  Kind kind;
  std::vector<KTerm> terms;  // sum of terms is zero

  bool operator==(const KRelation&) const = default;
};

/// Relation coming from the four-term exact sequence attached to the pair
/// (L(a,b), L(a',b')). Requires a' < a <= b' < b (overlapping) or a == b'+1
/// (adjacent); throws otherwise.
KRelation k_relation(const Segment& s, const Segment& t);

}  // namespace swd
