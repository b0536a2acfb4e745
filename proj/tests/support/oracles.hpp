#pragma once

// Random generators and independent oracles shared by the unit and
// acceptance tests. Nothing here calls the solvers or verifiers under test.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "swd/cocycle.hpp"
#include "swd/scalars.hpp"

namespace swd::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, int span = 9, int max_den = 7) {
  return Rational(uniform(rng, -span, span), uniform(rng, 1, max_den));
}

inline Rational random_nonzero_rational(Rng& rng) {
  std::int64_t num = 0;
  while (num == 0) num = uniform(rng, -9, 9);
  return Rational(num, uniform(rng, 1, 7));
}

inline QPower random_qpower(Rng& rng, int max_exp2 = 24) {
  return QPower(uniform(rng, 0, 1) == 0 ? 1 : -1, HalfInt::from_twice(uniform(rng, -max_exp2, max_exp2)));
}

template <class G>
G random_unit(Rng& rng);

template <>
inline Rational random_unit<Rational>(Rng& rng) {
  return random_nonzero_rational(rng);
}

template <>
inline QPower random_unit<QPower>(Rng& rng) {
  return random_qpower(rng);
}

inline TruncSeries1 random_series1(Rng& rng, int K, bool unit) {
  std::vector<Rational> c;
  for (int i = 0; i <= K; ++i) c.push_back(random_rational(rng, 4, 3));
  if (unit && c[0].is_zero()) c[0] = Rational(1);
  return TruncSeries1(K, std::move(c));
}

inline TruncSeries2 random_series2_unit(Rng& rng, int K) {
  TruncSeries2 s(K);
  for (int i = 0; i <= K; ++i)
    for (int j = 0; j <= K; ++j) s.at(i, j) = random_rational(rng, 3, 2);
  if (s.at(0, 0).is_zero()) s.at(0, 0) = Rational(1);
  return s;
}

/// Random c* on win x win with c*_{a,a} = 1 and c*_{a,b} c*_{b,a} = 1.
template <class G>
Grid<G> random_antisymmetric(Window win, Rng& rng) {
  const G one = GroupOps<G>::one();
  Grid<G> c(win, win, one);
  for (std::int64_t a = win.lo; a <= win.hi; ++a) {
    for (std::int64_t b = a + 1; b <= win.hi; ++b) {
      const G x = random_unit<G>(rng);
      c.at(a, b) = x;
      c.at(b, a) = one / x;
    }
  }
  return c;
}

/// h_{a,b} = prod_{k=a}^{a+N-1} c*_{k,b} on `win`, with c* random on the
/// enlarged window [lo, hi+N-1] so that every product is available.
template <class G>
WindowFamily<G> oracle_family(int N, Window win, Rng& rng) {
  const Grid<G> cstar = random_antisymmetric<G>(Window{win.lo, win.hi + N - 1}, rng);
  Grid<G> h(win, win, GroupOps<G>::one());
  for (std::int64_t a = win.lo; a <= win.hi; ++a) {
    for (std::int64_t b = win.lo; b <= win.hi; ++b) {
      G prod = GroupOps<G>::one();
      for (std::int64_t k = a; k < a + N; ++k) prod = prod * cstar.at(k, b);
      h.at(a, b) = prod;
    }
  }
  return WindowFamily<G>(N, std::move(h));
}

/// Entries (a,b) whose perturbation changes lambda_{a,a} and for which
/// lambda_{a,a} lies inside the window.
inline std::vector<std::pair<std::int64_t, std::int64_t>> detectable_entries(int N, Window win) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = win.lo; a + N - 1 <= win.hi; ++a)
    for (std::int64_t b = a; b <= a + N - 1; ++b) out.emplace_back(a, b);
  return out;
}

template <class G>
G non_identity(Rng& rng) {
  const G one = GroupOps<G>::one();
  for (;;) {
    G x = random_unit<G>(rng);
    if (!(x == one)) return x;
  }
}

/// The three equation families, checked by direct loops.
template <class G>
bool independent_check(const WindowFamily<G>& w, const Grid<G>& c) {
  const Window win = w.window();
  const G one = GroupOps<G>::one();
  for (std::int64_t a = win.lo; a <= win.hi; ++a) {
    if (!(c.at(a, a) == one)) return false;
    for (std::int64_t b = win.lo; b <= win.hi; ++b) {
      if (!(c.at(a, b) * c.at(b, a) == one)) return false;
    }
  }
  for (std::int64_t a = win.lo; a + w.N - 1 <= win.hi; ++a) {
    for (std::int64_t b = win.lo; b <= win.hi; ++b) {
      G prod = one;
      for (std::int64_t k = a; k <= a + w.N - 1; ++k) prod = prod * c.at(k, b);
      if (!(prod == w.h.at(a, b))) return false;
    }
  }
  return true;
}

/// Series oracle: c*_{a,b}(u,v) random with unit constant term for a < b,
/// c*_{b,a}(u,v) = 1 / c*_{a,b}(v,u), and h_{a,b}(z) = prod_k c*_{k,b}(0,z).
inline SeriesFamily oracle_series_family(int N, int K, Window win, Rng& rng) {
  const Window big{win.lo, win.hi + N - 1};
  Grid<TruncSeries1> at_u0(big, big, TruncSeries1::constant(K, Rational(1)));
  for (std::int64_t a = big.lo; a <= big.hi; ++a) {
    for (std::int64_t b = a + 1; b <= big.hi; ++b) {
      const TruncSeries2 x = random_series2_unit(rng, K);
      at_u0.at(a, b) = x.eval_u0();
      // (1/x)(z,0) = 1/x(z,0)
      at_u0.at(b, a) = x.swapped().eval_u0().inverse();
    }
  }
  Grid<TruncSeries1> h(win, win, TruncSeries1::constant(K, Rational(1)));
  for (std::int64_t a = win.lo; a <= win.hi; ++a) {
    for (std::int64_t b = win.lo; b <= win.hi; ++b) {
      TruncSeries1 prod = TruncSeries1::constant(K, Rational(1));
      for (std::int64_t k = a; k < a + N; ++k) prod = prod * at_u0.at(k, b);
      h.at(a, b) = prod;
    }
  }
  return SeriesFamily(N, K, std::move(h));
}

/// Coefficientwise check of c_{a,a} = 1, c_{a,b}(u,v) c_{b,a}(v,u) = 1 and
/// prod_k c_{k,b}(0,z) = h_{a,b}(z), with series products written out here.
inline bool independent_series_check(const SeriesFamily& s, const Grid<TruncSeries2>& c) {
  const int K = s.K;
  const Window core = c.rows();
  auto mul2 = [K](const TruncSeries2& x, const TruncSeries2& y) {
    TruncSeries2 r(K);
    for (int i1 = 0; i1 <= K; ++i1)
      for (int j1 = 0; j1 <= K; ++j1)
        for (int i2 = 0; i1 + i2 <= K; ++i2)
          for (int j2 = 0; j1 + j2 <= K; ++j2) r.at(i1 + i2, j1 + j2) += x.at(i1, j1) * y.at(i2, j2);
    return r;
  };
  auto is_one = [K](const TruncSeries2& x) {
    for (int i = 0; i <= K; ++i)
      for (int j = 0; j <= K; ++j)
        if (!(x.at(i, j) == Rational((i == 0 && j == 0) ? 1 : 0))) return false;
    return true;
  };
  for (std::int64_t a = core.lo; a <= core.hi; ++a) {
    if (!is_one(c.at(a, a))) return false;
    for (std::int64_t b = a + 1; b <= core.hi; ++b) {
      TruncSeries2 ba_swapped(K);
      for (int i = 0; i <= K; ++i)
        for (int j = 0; j <= K; ++j) ba_swapped.at(i, j) = c.at(b, a).at(j, i);
      if (!is_one(mul2(c.at(a, b), ba_swapped))) return false;
    }
  }
  for (std::int64_t a = core.lo; a + s.N - 1 <= core.hi; ++a) {
    for (std::int64_t b = core.lo; b <= core.hi; ++b) {
      std::vector<Rational> prod(K + 1);
      prod[0] = Rational(1);
      for (std::int64_t k = a; k < a + s.N; ++k) {
        std::vector<Rational> next(K + 1);
        for (int i = 0; i <= K; ++i)
          for (int j = 0; i + j <= K; ++j) next[i + j] += prod[i] * c.at(k, b).at(0, j);
        prod = std::move(next);
      }
      for (int i = 0; i <= K; ++i)
        if (!(prod[i] == s.h.at(a, b)[i])) return false;
    }
  }
  return true;
}

}  // namespace swd::testing
