#include "swd/cocycle.hpp"

#include <string>

namespace swd {

SeriesFamily::SeriesFamily(int period, int order, Grid<TruncSeries1> values)
    : N(period), K(order), h(std::move(values)) {
  if (N < 2) throw DomainError("period N must be at least 2");
  if (K < 0) throw DomainError("series order must be non-negative");
  if (!(h.rows() == h.cols())) throw DomainError("family window must be square");
  const Window win = window();
  for (std::int64_t a = win.lo; a <= win.hi; ++a) {
    for (std::int64_t b = win.lo; b <= win.hi; ++b) {
      const TruncSeries1& f = h.at(a, b);
      if (f.order() != K) {
        throw DomainError("h(" + std::to_string(a) + "," + std::to_string(b) +
                          ") has truncation order " + std::to_string(f.order()));
      }
      if (!f.is_unit()) {
        throw DomainError("h(" + std::to_string(a) + "," + std::to_string(b) +
                          ") has zero constant term");
      }
    }
  }
}

WindowFamily<Rational> SeriesFamily::constant_terms() const {
  const Window win = window();
  Grid<Rational> g(win, win, Rational(1));
  for (std::int64_t a = win.lo; a <= win.hi; ++a)
    for (std::int64_t b = win.lo; b <= win.hi; ++b) g.at(a, b) = h.at(a, b).constant_term();
  return WindowFamily<Rational>(N, std::move(g));
}

Window series_core(Window win, int N) { return Window{win.lo + N - 2, win.hi}; }

SeriesSolution solve_c_series(const SeriesFamily& s) {
  const int N = s.N;
  const int K = s.K;
  const Window win = s.window();
  const Window core = series_core(win, N);
  if (core.size() < 1) throw DomainError("window too small for a series solution");

  CSolution<Rational> constants = solve_c(s.constant_terms());
  const auto& c0 = constants.c;
  const auto& h = s.h;
  const TruncSeries1 one1 = TruncSeries1::constant(K, Rational(1));

  // phi(a, b) for a in the full window and b in the core.
  Grid<TruncSeries1> phi(win, core, one1);
  for (std::int64_t b = core.lo; b <= core.hi; ++b) {
    for (std::int64_t a = b - N + 2; a <= b && a <= win.hi; ++a) {
      phi.at(a, b) = TruncSeries1::constant(K, a == b ? Rational(1) : c0.at(a, b));
    }
    for (std::int64_t a = b + 1; a <= win.hi; ++a) {
      TruncSeries1 prod = one1;
      for (std::int64_t k = a - N + 1; k <= a - 1; ++k) prod *= phi.at(k, b);
      phi.at(a, b) = h.at(a - N + 1, b) / prod;
    }
    for (std::int64_t a = b - N + 1; a >= win.lo; --a) {
      TruncSeries1 prod = one1;
      for (std::int64_t k = a + 1; k <= a + N - 1; ++k) prod *= phi.at(k, b);
      phi.at(a, b) = h.at(a, b) / prod;
    }
  }

  Grid<TruncSeries2> c(core, core, TruncSeries2::constant(K, Rational(1)));
  for (std::int64_t a = core.lo; a <= core.hi; ++a) {
    for (std::int64_t b = core.lo; b <= core.hi; ++b) {
      if (a == b) continue;
      // phi_{a,b}(v) * phi_{b,a}(u)^{-1} * c_{b,a} as an outer product.
      const TruncSeries1& fv = phi.at(a, b);
      const TruncSeries1 gu = phi.at(b, a).inverse() * c0.at(b, a);
      TruncSeries2& out = c.at(a, b);
      for (int i = 0; i <= K; ++i) {
        if (gu[i].is_zero()) continue;
        for (int j = 0; j <= K; ++j) out.at(i, j) = gu[i] * fv[j];
      }
    }
  }
  return SeriesSolution{N, K, std::move(c), std::move(constants)};
}

VerifyReport check_c_series(const SeriesFamily& s, const SeriesSolution& sol) {
  VerifyReport report;
  const Window core = series_core(s.window(), s.N);
  const auto& c = sol.c;
  if (!(c.rows() == core) || !(c.cols() == core) || sol.N != s.N || sol.K != s.K) {
    report.record(false, "solution window, period or order differs from family");
    return report;
  }
  const TruncSeries2 one2 = TruncSeries2::constant(s.K, Rational(1));
  const TruncSeries1 one1 = TruncSeries1::constant(s.K, Rational(1));
  auto at = [](std::int64_t a, std::int64_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  for (std::int64_t a = core.lo; a <= core.hi; ++a) {
    report.record(c.at(a, a) == one2, "c" + at(a, a) + "(u,v) != 1");
    for (std::int64_t b = a + 1; b <= core.hi; ++b) {
      report.record(c.at(a, b) * c.at(b, a).swapped() == one2,
                    "c" + at(a, b) + "(u,v) c" + at(b, a) + "(v,u) != 1");
    }
  }
  for (std::int64_t a = core.lo; a + s.N - 1 <= core.hi; ++a) {
    for (std::int64_t b = core.lo; b <= core.hi; ++b) {
      TruncSeries1 prod = one1;
      for (std::int64_t k = a; k < a + s.N; ++k) prod *= c.at(k, b).eval_u0();
      report.record(prod == s.h.at(a, b), "product equation fails at " + at(a, b));
    }
  }
  return report;
}

bool verify_c_series(const SeriesFamily& s, const SeriesSolution& sol) {
  return check_c_series(s, sol).ok;
}

ZMonomial f_aj(int N, std::int64_t a, std::int64_t j) {
  const bool wrap = j == a + N;
  const bool inner = a <= j && j < a + N - 1;
  return ZMonomial{wrap ? -1 : 1, -(inner ? 1 : 0) - (wrap ? 1 : 0)};
}

UVPower ptilde(const DualityDatum& d, std::int64_t i, std::int64_t j) {
  const bool flip = j == i + 1 && floor_mod(j, d.N()) == 0;
  return UVPower{flip ? -1 : 1, d.quiver_dij(i, j)};
}

}  // namespace swd
