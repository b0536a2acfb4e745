#pragma once

// Constructive solvers for the factorization systems
//
//   prod_{k=a}^{a+N-1} c_{k,b} = h_{a,b},   c_{a,a} = 1,   c_{a,b} c_{b,a} = 1
//
// over a multiplicative abelian group, and their lift to power series
// c_{a,b}(u,v) with h_{a,b}(z) = prod_k c_{k,b}(0,z). Families are indexed by
// Z x Z in principle; here they live on a finite square window [lo, hi]^2 and
// every equation is checked only where all of its indices fall inside.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swd/duality.hpp"
#include "swd/error.hpp"
#include "swd/scalars.hpp"

namespace swd {

/// Identity element of a multiplicative group G.
template <class G>
struct GroupOps;

template <>
struct GroupOps<Rational> {
  static Rational one() { return Rational(1); }
  static bool is_unit(const Rational& r) { return !r.is_zero(); }
  static constexpr const char* name = "rational";
};

template <>
struct GroupOps<QPower> {
  static QPower one() { return QPower::one(); }
  static bool is_unit(const QPower&) { return true; }
  static constexpr const char* name = "qpower";
};

template <class G>
concept MultiplicativeGroup = requires(const G& x, const G& y) {
  { x * y } -> std::convertible_to<G>;
  { x / y } -> std::convertible_to<G>;
  { x == y } -> std::convertible_to<bool>;
  { GroupOps<G>::one() } -> std::convertible_to<G>;
  { GroupOps<G>::is_unit(x) } -> std::convertible_to<bool>;
};

/// Closed integer interval [lo, hi].
struct Window {
  std::int64_t lo;
  std::int64_t hi;

  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  std::int64_t size() const { return hi - lo + 1; }
  bool operator==(const Window&) const = default;
};

/// Dense values on rows x cols, addressed by absolute indices.
template <class V>
class Grid {
 public:
  Grid(Window rows, Window cols, V fill)
      : rows_(rows), cols_(cols),
        values_(static_cast<std::size_t>(std::max<std::int64_t>(rows.size(), 0)) *
                    static_cast<std::size_t>(std::max<std::int64_t>(cols.size(), 0)),
                fill) {
    if (rows.size() <= 0 || cols.size() <= 0) throw DomainError("empty grid window");
  }

  Window rows() const { return rows_; }
  Window cols() const { return cols_; }
  bool contains(std::int64_t a, std::int64_t b) const {
    return rows_.contains(a) && cols_.contains(b);
  }

  const V& at(std::int64_t a, std::int64_t b) const { return values_[offset(a, b)]; }
  V& at(std::int64_t a, std::int64_t b) { return values_[offset(a, b)]; }

  bool operator==(const Grid&) const = default;

 private:
  std::size_t offset(std::int64_t a, std::int64_t b) const {
    if (!contains(a, b)) {
      throw DomainError("index (" + std::to_string(a) + "," + std::to_string(b) +
                        ") outside window");
    }
    return static_cast<std::size_t>(a - rows_.lo) * static_cast<std::size_t>(cols_.size()) +
           static_cast<std::size_t>(b - cols_.lo);
  }

  Window rows_;
  Window cols_;
  std::vector<V> values_;
};

/// h_{a,b} on the square window [lo, hi]^2.
template <MultiplicativeGroup G>
struct WindowFamily {
  WindowFamily(int period, Grid<G> values) : N(period), h(std::move(values)) {
    if (N < 2) throw DomainError("period N must be at least 2");
    if (!(h.rows() == h.cols())) throw DomainError("family window must be square");
  }

  Window window() const { return h.rows(); }

  int N;
  Grid<G> h;
};

template <MultiplicativeGroup G>
struct CSolution {
  int N;
  Grid<G> c;
};

/// lambda_{a,b} = prod_{k=b}^{b+N-1} h_{a,k} is defined inside the window.
template <MultiplicativeGroup G>
bool lambda_defined(const WindowFamily<G>& w, std::int64_t a, std::int64_t b) {
  const Window win = w.window();
  return win.contains(a) && win.contains(b) && win.contains(b + w.N - 1);
}

template <MultiplicativeGroup G>
G lambda_of(const WindowFamily<G>& w, std::int64_t a, std::int64_t b) {
  if (!lambda_defined(w, a, b)) {
    throw DomainError("lambda(" + std::to_string(a) + "," + std::to_string(b) +
                      ") needs indices outside the window");
  }
  G prod = GroupOps<G>::one();
  for (std::int64_t k = b; k < b + w.N; ++k) prod = prod * w.h.at(a, k);
  return prod;
}

/// First (a, b) where lambda_{a,a} = 1 or lambda_{a,b} lambda_{b,a} = 1 fails.
template <MultiplicativeGroup G>
std::optional<std::pair<std::int64_t, std::int64_t>> find_lambda_violation(
    const WindowFamily<G>& w) {
  const Window win = w.window();
  const G one = GroupOps<G>::one();
  for (std::int64_t a = win.lo; a <= win.hi; ++a) {
    for (std::int64_t b = a; b <= win.hi; ++b) {
      if (!lambda_defined(w, a, b) || !lambda_defined(w, b, a)) continue;
      if (a == b) {
        if (!(lambda_of(w, a, a) == one)) return std::pair{a, a};
      } else if (!(lambda_of(w, a, b) * lambda_of(w, b, a) == one)) {
        return std::pair{a, b};
      }
    }
  }
  return std::nullopt;
}

template <MultiplicativeGroup G>
bool check_lambda(const WindowFamily<G>& w) {
  return !find_lambda_violation(w).has_value();
}

/// Which recurrence is applied first when extending the seed block.
enum class ExtensionOrder {
  FirstIndexFirst,   // c_{a+N,b} on the seed columns, then c_{a,b+N} on every row
  SecondIndexFirst,  // c_{a,b+N} on the seed rows, then c_{a+N,b} on every column
};

/// Left corner of the N x N seed block: 0 when [0, N-1] fits in the window,
/// otherwise the window's left end.
inline std::int64_t seed_origin(Window win, int N) {
  return (win.lo <= 0 && N - 1 <= win.hi) ? 0 : win.lo;
}

/// Solves the system on the window. The seed block is c = 1 on the first
/// (N-1) x (N-1) entries; row N-1 is then forced by the product equation with
/// a = origin, column N-1 by antisymmetry, and the rest of the window is
/// filled by
///   c_{a+N,b} = (h_{a+1,b} / h_{a,b}) c_{a,b}
///   c_{a,b+N} = (h_{b,a} / h_{b+1,a}) c_{a,b}.
/// Throws if the window is shorter than N or the lambda conditions fail.
template <MultiplicativeGroup G>
CSolution<G> solve_c(const WindowFamily<G>& w,
                     ExtensionOrder order = ExtensionOrder::FirstIndexFirst) {
  const int N = w.N;
  const Window win = w.window();
  if (win.size() < N) {
    throw DomainError("window of length " + std::to_string(win.size()) +
                      " cannot hold a seed block of size " + std::to_string(N));
  }
  for (std::int64_t a = win.lo; a <= win.hi; ++a)
    for (std::int64_t b = win.lo; b <= win.hi; ++b)
      if (!GroupOps<G>::is_unit(w.h.at(a, b))) {
        throw DomainError("h(" + std::to_string(a) + "," + std::to_string(b) +
                          ") is not invertible");
      }
  if (auto bad = find_lambda_violation(w)) {
    throw DomainError("lambda condition fails at (" + std::to_string(bad->first) + "," +
                      std::to_string(bad->second) + ")");
  }

  const G one = GroupOps<G>::one();
  const std::int64_t o = seed_origin(win, N);
  const auto& h = w.h;
  Grid<G> c(win, win, one);

  for (std::int64_t s = 0; s <= N - 2; ++s) {
    G prod = one;
    for (std::int64_t k = 0; k <= N - 2; ++k) prod = prod * c.at(o + k, o + s);
    c.at(o + N - 1, o + s) = h.at(o, o + s) / prod;
  }
  for (std::int64_t r = 0; r <= N - 2; ++r) c.at(o + r, o + N - 1) = one / c.at(o + N - 1, o + r);
  c.at(o + N - 1, o + N - 1) = one;

  auto extend_first = [&](std::int64_t col) {
    for (std::int64_t x = o + N; x <= win.hi; ++x)
      c.at(x, col) = h.at(x - N + 1, col) / h.at(x - N, col) * c.at(x - N, col);
    for (std::int64_t x = o - 1; x >= win.lo; --x)
      c.at(x, col) = h.at(x, col) / h.at(x + 1, col) * c.at(x + N, col);
  };
  auto extend_second = [&](std::int64_t row) {
    for (std::int64_t y = o + N; y <= win.hi; ++y)
      c.at(row, y) = h.at(y - N, row) / h.at(y - N + 1, row) * c.at(row, y - N);
    for (std::int64_t y = o - 1; y >= win.lo; --y)
      c.at(row, y) = h.at(y + 1, row) / h.at(y, row) * c.at(row, y + N);
  };

  if (order == ExtensionOrder::FirstIndexFirst) {
    for (std::int64_t b = o; b < o + N; ++b) extend_first(b);
    for (std::int64_t a = win.lo; a <= win.hi; ++a) extend_second(a);
  } else {
    for (std::int64_t a = o; a < o + N; ++a) extend_second(a);
    for (std::int64_t b = win.lo; b <= win.hi; ++b) extend_first(b);
  }
  return CSolution<G>{N, std::move(c)};
}

/// Outcome of checking a candidate solution equation by equation.
struct VerifyReport {
  bool ok = true;
  std::size_t equations_checked = 0;
  std::string first_failure;

  void record(bool holds, const std::string& what) {
    ++equations_checked;
    if (!holds && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

template <MultiplicativeGroup G>
VerifyReport check_c(const WindowFamily<G>& w, const CSolution<G>& sol) {
  VerifyReport report;
  const Window win = w.window();
  const G one = GroupOps<G>::one();
  const auto& c = sol.c;
  if (!(c.rows() == win) || !(c.cols() == win) || sol.N != w.N) {
    report.record(false, "solution window or period differs from family");
    return report;
  }
  auto at = [](std::int64_t a, std::int64_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  for (std::int64_t a = win.lo; a <= win.hi; ++a) {
    report.record(c.at(a, a) == one, "c" + at(a, a) + " != 1");
    for (std::int64_t b = a + 1; b <= win.hi; ++b) {
      report.record(c.at(a, b) * c.at(b, a) == one, "c" + at(a, b) + " c" + at(b, a) + " != 1");
    }
  }
  for (std::int64_t a = win.lo; a + w.N - 1 <= win.hi; ++a) {
    for (std::int64_t b = win.lo; b <= win.hi; ++b) {
      G prod = one;
      for (std::int64_t k = a; k < a + w.N; ++k) prod = prod * c.at(k, b);
      report.record(prod == w.h.at(a, b), "product equation fails at " + at(a, b));
    }
  }
  return report;
}

template <MultiplicativeGroup G>
bool verify_c(const WindowFamily<G>& w, const CSolution<G>& sol) {
  return check_c(w, sol).ok;
}

/// Both extension orders produce the same solution. This is the cocycle
/// identity phi_{a,b+N} psi_{a,b} = psi_{a+N,b} phi_{a,b} for the two
/// recurrence multipliers, evaluated over the whole window.
template <MultiplicativeGroup G>
bool extension_paths_agree(const WindowFamily<G>& w) {
  return solve_c(w, ExtensionOrder::FirstIndexFirst).c ==
         solve_c(w, ExtensionOrder::SecondIndexFirst).c;
}

// ---------------------------------------------------------------------------
// Power-series lift

/// h_{a,b}(z) on [lo, hi]^2, truncated at order K; every h_{a,b}(0) != 0.
struct SeriesFamily {
  SeriesFamily(int period, int order, Grid<TruncSeries1> values);

  Window window() const { return h.rows(); }
  /// The family of constant terms h_{a,b}(0).
  WindowFamily<Rational> constant_terms() const;

  int N;
  int K;
  Grid<TruncSeries1> h;
};

/// c_{a,b}(u,v) on the core window [lo + N - 2, hi]^2, where every
/// c_{a,b} and c_{b,a} can be built from data inside the family's window.
struct SeriesSolution {
  int N;
  int K;
  Grid<TruncSeries2> c;
  /// The constant solution used to seed the lift.
  CSolution<Rational> constants;
};

/// Core window of the series solution for a family on `win`.
Window series_core(Window win, int N);

/// Builds phi_{a,b}(v) column by column (phi_{a,a} = 1, phi_{a,b} = c_{a,b}
/// constant for a < b < a+N-1, then the two recursions in a), and sets
/// c_{a,b}(u,v) = phi_{a,b}(v) / phi_{b,a}(u) * c_{b,a}.
SeriesSolution solve_c_series(const SeriesFamily& s);

VerifyReport check_c_series(const SeriesFamily& s, const SeriesSolution& sol);
bool verify_c_series(const SeriesFamily& s, const SeriesSolution& sol);

// ---------------------------------------------------------------------------
// Explicit ingredients of h_{a,b}(z) = f_{a,b}(z) g_{a,b}(z) prod_k P~_{k,b}(0,z)

/// sign * z^{zexp}
struct ZMonomial {
  int sign;
  int zexp;
  bool operator==(const ZMonomial&) const = default;
};

/// f_{a,j}(z) = (-1)^{delta(j = a+N)} z^{-delta(a <= j < a+N-1) - delta(j = a+N)}.
ZMonomial f_aj(int N, std::int64_t a, std::int64_t j);

/// sign * (u - v)^{power}
struct UVPower {
  int sign;
  int power;
  bool operator==(const UVPower&) const = default;
};

/// P~_{i,j}(u,v) = (-1)^{delta(j = i+1 = 0 mod N)} (u - v)^{d_ij}.
UVPower ptilde(const DualityDatum& d, std::int64_t i, std::int64_t j);

}  // namespace swd
