#include "swd/affine_b.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace swd {

namespace {

int parity_sign(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

void require_fund_index(const BnData& d, int i, const char* what) {
  if (i < 1 || i > d.n()) {
    throw DomainError(std::string(what) + ": index " + std::to_string(i) + " outside 1.." +
                      std::to_string(d.n()));
  }
}

}  // namespace

BnData::BnData(int n) : n_(n) {
  if (n < 2) throw DomainError("B_n^(1) requires n >= 2, got " + std::to_string(n));
}

DenominatorRoots::DenominatorRoots(std::vector<QPower> roots) : roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end());
}

int DenominatorRoots::multiplicity(QPower x) const {
  auto [lo, hi] = std::equal_range(roots_.begin(), roots_.end(), x);
  return static_cast<int>(hi - lo);
}

DenominatorRoots denom_roots(const BnData& d, int k, int l) {
  require_fund_index(d, k, "denom_roots");
  require_fund_index(d, l, "denom_roots");
  const int n = d.n();
  if (k > l) std::swap(k, l);
  std::vector<QPower> roots;
  if (l <= n - 1) {
    const int sign = parity_sign(k + l);
    for (int s = 1; s <= k; ++s) {
      roots.emplace_back(sign, HalfInt::integer(std::abs(k - l) + 2 * s));
      roots.emplace_back(sign, HalfInt::integer(2 * n - k - l - 1 + 2 * s));
    }
  } else if (k <= n - 1) {
    // (k, n): (-1)^{n+k} q_s^{2n-2k-1+4s}
    const int sign = parity_sign(n + k);
    for (int s = 1; s <= k; ++s) {
      roots.emplace_back(sign, HalfInt::from_twice(2 * n - 2 * k - 1 + 4 * s));
    }
  } else {
    // (n, n): q_s^{4s-2}
    for (int s = 1; s <= n; ++s) roots.emplace_back(1, HalfInt::from_twice(4 * s - 2));
  }
  return DenominatorRoots(std::move(roots));
}

int zero_order_at(const DenominatorRoots& r, QPower ratio) { return r.multiplicity(ratio); }

bool in_S0(const BnData& d, int i, QPower x) {
  require_fund_index(d, i, "in_S0");
  if (i == d.n()) return x.sign() == 1 && x.exp().is_integer();
  // x = (-1)^{i-1} q_t q^m for some integer m
  const QPower rest = x / (QPower(parity_sign(i - 1), HalfInt{}) * d.q_t());
  return rest.sign() == 1 && rest.exp().is_integer();
}

FundRepB right_dual(const BnData& d, const FundRepB& v) {
  require_fund_index(d, v.i, "right_dual");
  return {v.i, v.x * d.pstar()};
}

FundRepB left_dual(const BnData& d, const FundRepB& v) {
  require_fund_index(d, v.i, "left_dual");
  return {v.i, v.x / d.pstar()};
}

DoreyMap dorey_nn(const BnData& d, int k, std::int64_t m) {
  if (k < 1 || k > d.n() - 1) {
    throw DomainError("dorey_nn requires 1 <= k <= n-1, got k=" + std::to_string(k));
  }
  const int n = d.n();
  const QPower shift = QPower::q(m);
  return {FundRepB{n, QPower::q(k + 1) * shift}, FundRepB{n, QPower::q(d.N() - k) * shift},
          FundRepB{k, QPower(parity_sign(k + 1), HalfInt{}) * d.q_t() * shift}};
}

DoreyMap dorey_kl_target(const BnData& d, int k, int l) {
  if (k < 1 || l < 1 || k + l > d.n() - 1) {
    throw DomainError("dorey_kl requires k, l >= 1 and k + l <= n-1, got k=" +
                      std::to_string(k) + ", l=" + std::to_string(l));
  }
  return {FundRepB{k, QPower::minus_q(-l)}, FundRepB{l, QPower::minus_q(k)},
          FundRepB{k + l, QPower::one()}};
}

DoreyMap dorey_n1(const BnData& d) {
  return {FundRepB{d.n(), QPower::one()}, FundRepB{1, d.q_t()}, FundRepB{d.n(), QPower::q(2)}};
}

}  // namespace swd
