#include "swd/duality.hpp"

#include <string>

namespace swd {

namespace sc = simple_class;

namespace {

int parity_sign(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

void require_parity(int i, std::int64_t p) {
  if (floor_mod(p - i - 1, 2) != 0) {
    throw DomainError("parity rule p = i+1 (mod 2) violated: i=" + std::to_string(i) +
                      ", p=" + std::to_string(p));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// DualityDatum

int DualityDatum::v_of(std::int64_t j) const {
  const std::int64_t r = floor_mod(j, N());
  return (r == 0 || r == N() - 1) ? n() : 1;
}

QPower DualityDatum::x_of(std::int64_t j) const {
  const std::int64_t k = floor_div(j, N());
  const std::int64_t r = j - k * N();
  QPower base;
  if (r == 0) {
    base = QPower::one();
  } else if (r <= N() - 2) {
    base = bn_.q_t() * QPower::q(2 * (r - 1));
  } else {
    base = QPower::q(3 * N() - 5);
  }
  return base * period_shift().pow(k);
}

int DualityDatum::quiver_dij(std::int64_t i, std::int64_t j) const {
  const DenominatorRoots roots = denom_roots(bn_, v_of(i), v_of(j));
  return zero_order_at(roots, x_of(j) / x_of(i));
}

int DualityDatum::quiver_closed_form(std::int64_t i, std::int64_t j) const {
  const std::int64_t r = floor_mod(j, N());
  return (j == i + 1 && r != 0 ? 1 : 0) + (j == i - 1 && r == N() - 1 ? 1 : 0);
}

int DualityDatum::cartan_AJ(std::int64_t i, std::int64_t j) const {
  if (i == j) return 2;
  return -quiver_dij(i, j) - quiver_dij(j, i);
}

// ---------------------------------------------------------------------------
// Simple classes

std::string to_string(const SimpleClassB& c) {
  struct Visitor {
    std::string operator()(const sc::Zero&) const { return "Zero"; }
    std::string operator()(const sc::Unit&) const { return "Unit"; }
    std::string operator()(const sc::Fund& f) const {
      return "Fund(" + std::to_string(f.i) + "," + f.x.to_string() + ")";
    }
    std::string operator()(const sc::HeadNN& h) const {
      return "HeadNN(" + h.x1.to_string() + "," + h.x2.to_string() + ")";
    }
  };
  return std::visit(Visitor{}, c);
}

SimpleClassB make_fund(const DualityDatum& d, int i, QPower x) {
  if (!in_S0(d.bn(), i, x)) {
    throw DomainError("(" + std::to_string(i) + ", " + x.to_string() + ") is not in S_0");
  }
  return sc::Fund{i, x};
}

SimpleClassB periodicity_shift(const DualityDatum& d, const SimpleClassB& c, std::int64_t k) {
  const QPower shift = d.period_shift().pow(k);
  struct Visitor {
    QPower shift;
    SimpleClassB operator()(const sc::Zero& z) const { return z; }
    SimpleClassB operator()(const sc::Unit& u) const { return u; }
    SimpleClassB operator()(const sc::Fund& f) const { return sc::Fund{f.i, f.x * shift}; }
    SimpleClassB operator()(const sc::HeadNN& h) const {
      return sc::HeadNN{h.x1 * shift, h.x2 * shift};
    }
  };
  return std::visit(Visitor{shift}, c);
}

SimpleClassB f_image(const DualityDatum& d, const Segment& s) {
  const std::int64_t N = d.N();
  const std::int64_t n = d.n();
  const std::int64_t len = s.length();
  if (len > N) return sc::Zero{};
  if (len == 0 || len == N) return sc::Unit{};

  // Translate the left end into [0, N-1]; one period multiplies by q^{2N-2}.
  const std::int64_t k = floor_div(s.a(), N);
  const std::int64_t a = s.a() - k * N;
  const std::int64_t b = s.b() - k * N;
  const QPower qt = d.bn().q_t();
  const QPower sign = QPower(parity_sign(b - a), HalfInt{});

  SimpleClassB base;
  if (a == 0) {
    base = sc::Fund{static_cast<int>(n), QPower::q(2 * b)};
  } else if (b == N - 1) {
    base = sc::Fund{static_cast<int>(n), QPower::q(2 * a + N - 3)};
  } else if (b <= N - 2) {
    if (len < n) {
      base = sc::Fund{static_cast<int>(len), sign * qt * QPower::q(a + b - 2)};
    } else {
      base = sc::HeadNN{QPower::q(2 * b), QPower::q(2 * a + N - 3)};
    }
  } else {  // a <= N-1 < b
    if (len <= n) {
      base = sc::HeadNN{QPower::q(2 * a + N - 3), QPower::q(2 * b - 2)};
    } else {
      base = sc::Fund{static_cast<int>(N - len), sign * qt * QPower::q(a + b - 3)};
    }
  }
  return periodicity_shift(d, base, k);
}

SimpleClassB phi1_fund(const DualityDatum& d, int i, std::int64_t p) {
  if (i < 1 || i > d.N() - 1) {
    throw DomainError("phi_1 requires 1 <= i <= 2n-1, got i=" + std::to_string(i));
  }
  require_parity(i, p);
  // [L(a,b)] |-> [V(varpi_{b-a+1})_{(-q)^{a+b}}], inverted.
  const std::int64_t a = (p - i + 1) / 2;
  const std::int64_t b = (p + i - 1) / 2;
  return f_image(d, Segment(a, b));
}

SimpleClassB phi2_fund(const DualityDatum& d, int i, int sign, std::int64_t p) {
  if (i < 1 || i > d.n()) {
    throw DomainError("phi_2 requires 1 <= i <= n, got i=" + std::to_string(i));
  }
  if (sign != 1 && sign != -1) throw DomainError("phi_2 sign must be +1 or -1");
  require_parity(i, p);
  // The twist sends V(varpi_j)_x (j > n) to V(varpi_{N-j})_{-x}.
  return sign == 1 ? phi1_fund(d, i, p) : phi1_fund(d, d.N() - i, p);
}

void validate_fund_a(const DualityDatum& d, const FundRepA& v) {
  if (v.t != 1 && v.t != 2) throw DomainError("type index t must be 1 or 2");
  const int max_i = v.t == 1 ? d.N() - 1 : d.n();
  if (v.i < 1 || v.i > max_i) {
    throw DomainError("fundamental index " + std::to_string(v.i) + " out of range for t=" +
                      std::to_string(v.t));
  }
  if (!v.x.exp().is_integer()) {
    throw DomainError("spectral parameter " + v.x.to_string() + " is not of the form +-(-q)^p");
  }
  const std::int64_t p = v.x.exp().as_integer();
  require_parity(v.i, p);
  if (v.t == 1 && v.x.sign() != parity_sign(p)) {
    throw DomainError("spectral parameter " + v.x.to_string() + " is not of the form (-q)^p");
  }
}

std::vector<SimpleClassB> phi_monomial(const DualityDatum& d, std::span<const FundRepA> reps) {
  std::vector<SimpleClassB> out;
  out.reserve(reps.size());
  for (const FundRepA& v : reps) {
    if (v.t != reps.front().t) throw DomainError("phi_monomial: mixed t values");
    validate_fund_a(d, v);
    const std::int64_t p = v.x.exp().as_integer();
    if (v.t == 1) {
      out.push_back(phi1_fund(d, v.i, p));
    } else {
      out.push_back(phi2_fund(d, v.i, v.x.sign() * parity_sign(p), p));
    }
  }
  return out;
}

std::vector<CorollaryRow> corollary_table(const DualityDatum& d) {
  const int n = d.n();
  const int N = d.N();
  std::vector<CorollaryRow> rows;
  for (int i = 1; i <= n; ++i) {
    for (std::int64_t p = i - 1; p <= 2 * N + i - 3; p += 2) {
      rows.push_back({1, i, p, phi1_fund(d, i, p), phi2_fund(d, i, 1, p)});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (std::int64_t p = N - i - 1; p <= 3 * N - i - 3; p += 2) {
      rows.push_back({2, i, p, phi1_fund(d, N - i, p), phi2_fund(d, i, -1, p)});
    }
  }
  return rows;
}

}  // namespace swd
