#include <doctest.h>

#include "support/oracles.hpp"
#include "swd/cocycle.hpp"

using namespace swd;
using swd::testing::Rng;

namespace {

template <class G>
WindowFamily<G> constant_family(int N, Window win, G value) {
  return WindowFamily<G>(N, Grid<G>(win, win, value));
}

TruncSeries1 series(int K, std::vector<long> coeffs) {
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  return TruncSeries1(K, std::move(c));
}

}  // namespace

TEST_CASE("Grid addressing") {
  Grid<int> g(Window{-2, 1}, Window{3, 4}, 7);
  g.at(-2, 4) = 1;
  CHECK(g.at(-2, 4) == 1);
  CHECK(g.at(1, 3) == 7);
  CHECK_THROWS_AS(g.at(2, 3), DomainError);
  CHECK_THROWS_AS(Grid<int>(Window{1, 0}, Window{0, 0}, 0), DomainError);
}

TEST_CASE("lambda_of") {
  const int N = 2;
  const Window win{0, 5};
  CHECK(lambda_of(constant_family(N, win, Rational(1)), 0, 0) == Rational(1));

  // h_{a,b} = r_b: lambda_{a,b} = r_b r_{b+1}.
  Grid<Rational> h(win, win, Rational(1));
  for (std::int64_t a = win.lo; a <= win.hi; ++a)
    for (std::int64_t b = win.lo; b <= win.hi; ++b) h.at(a, b) = Rational(b + 2, 3);
  const WindowFamily<Rational> w(N, h);
  CHECK(lambda_of(w, 1, 3) == Rational(5, 3) * Rational(6, 3));
  CHECK_THROWS_AS(lambda_of(w, 0, 5), DomainError);
  CHECK_THROWS_AS(lambda_of(w, 6, 0), DomainError);

  Rng rng(21);
  const auto oracle = testing::oracle_family<Rational>(3, Window{-2, 9}, rng);
  for (std::int64_t a = -2; a <= 9; ++a) {
    for (std::int64_t b = -2; b + 2 <= 9; ++b) {
      Rational expected(1);
      for (std::int64_t k = b; k <= b + 2; ++k) expected = expected * oracle.h.at(a, k);
      CHECK(lambda_of(oracle, a, b) == expected);
    }
  }
}

TEST_CASE("check_lambda") {
  CHECK(check_lambda(constant_family(3, Window{0, 8}, QPower::one())));
  Rng rng(22);
  auto w = testing::oracle_family<QPower>(3, Window{0, 11}, rng);
  CHECK(check_lambda(w));
  w.h.at(2, 3) = w.h.at(2, 3) * QPower::q(1);
  CHECK(!check_lambda(w));
}

TEST_CASE("solve_c on the trivial family") {
  for (int N = 2; N <= 5; ++N) {
    const auto w = constant_family(N, Window{0, 3 * N - 1}, Rational(1));
    const auto sol = solve_c(w);
    for (std::int64_t a = 0; a < 3 * N; ++a)
      for (std::int64_t b = 0; b < 3 * N; ++b) CHECK(sol.c.at(a, b) == Rational(1));
    CHECK(verify_c(w, sol));
  }
}

TEST_CASE("solve_c rejects bad input") {
  CHECK_THROWS_AS(solve_c(constant_family(4, Window{0, 2}, Rational(1))), DomainError);
  CHECK_THROWS_AS(solve_c(constant_family(2, Window{0, 5}, Rational(0))), DomainError);
  Rng rng(23);
  auto w = testing::oracle_family<Rational>(2, Window{0, 7}, rng);
  w.h.at(1, 1) = w.h.at(1, 1) * Rational(2);
  CHECK_THROWS_AS(solve_c(w), DomainError);
  CHECK_THROWS_AS(WindowFamily<Rational>(1, Grid<Rational>(Window{0, 3}, Window{0, 3}, 1)), DomainError);
  CHECK_THROWS_AS(WindowFamily<Rational>(2, Grid<Rational>(Window{0, 3}, Window{0, 4}, 1)), DomainError);
}

TEST_CASE("verify_c") {
  const int N = 3;
  const Window win{0, 8};
  const auto w = constant_family(N, win, Rational(1));
  CSolution<Rational> c{N, Grid<Rational>(win, win, Rational(1))};
  CHECK(verify_c(w, c));
  c.c.at(1, 4) = Rational(2);
  const VerifyReport r = check_c(w, c);
  CHECK(!r.ok);
  CHECK(!r.first_failure.empty());
  CHECK(r.equations_checked > 0);
}

TEST_CASE_TEMPLATE("solve_c soundness on oracle families", G, Rational, QPower) {
  Rng rng(24);
  for (int N = 2; N <= 4; ++N) {
    for (const Window win : {Window{0, 4 * N - 1}, Window{-N, 3 * N - 1}, Window{3, 4 * N + 2},
                             Window{-4 * N, -1}}) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto w = testing::oracle_family<G>(N, win, rng);
        const auto sol = solve_c(w);
        CHECK(verify_c(w, sol));
        CHECK(testing::independent_check(w, sol.c));
      }
    }
  }
}

TEST_CASE_TEMPLATE("extension order does not change the solution", G, Rational, QPower) {
  Rng rng(25);
  for (int N = 2; N <= 4; ++N) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto w = testing::oracle_family<G>(N, Window{-N, 4 * N}, rng);
      CHECK(extension_paths_agree(w));
      const auto first = solve_c(w, ExtensionOrder::FirstIndexFirst);
      const auto second = solve_c(w, ExtensionOrder::SecondIndexFirst);
      // c_{a+N,b+N} reached by either order of the two shifts.
      for (std::int64_t a = -N; a + N <= 4 * N; ++a)
        for (std::int64_t b = -N; b + N <= 4 * N; ++b)
          CHECK(first.c.at(a + N, b + N) == second.c.at(a + N, b + N));
    }
  }
}

TEST_CASE_TEMPLATE("single-entry perturbations are rejected", G, Rational, QPower) {
  Rng rng(26);
  for (int N = 2; N <= 4; ++N) {
    const Window win{0, 4 * N - 1};
    const auto base = testing::oracle_family<G>(N, win, rng);
    for (const auto& [a, b] : testing::detectable_entries(N, win)) {
      auto w = base;
      w.h.at(a, b) = w.h.at(a, b) * testing::non_identity<G>(rng);
      CHECK(!check_lambda(w));
      CHECK_THROWS_AS(solve_c(w), DomainError);
    }
  }
}

TEST_CASE("seed origin") {
  CHECK(seed_origin(Window{0, 7}, 4) == 0);
  CHECK(seed_origin(Window{-3, 3}, 4) == 0);
  CHECK(seed_origin(Window{2, 9}, 4) == 2);
  CHECK(seed_origin(Window{-9, -1}, 4) == -9);
}

TEST_CASE("series solver on the trivial family") {
  const int N = 3;
  const int K = 5;
  const Window win{0, 3 * N - 1};
  const SeriesFamily s(N, K, Grid<TruncSeries1>(win, win, TruncSeries1::constant(K, Rational(1))));
  const SeriesSolution sol = solve_c_series(s);
  CHECK(sol.c.rows() == series_core(win, N));
  const TruncSeries2 one = TruncSeries2::constant(K, Rational(1));
  for (std::int64_t a = sol.c.rows().lo; a <= sol.c.rows().hi; ++a)
    for (std::int64_t b = sol.c.rows().lo; b <= sol.c.rows().hi; ++b) CHECK(sol.c.at(a, b) == one);
  CHECK(verify_c_series(s, sol));
}

TEST_CASE("series solver with one varying orbit") {
  // c*_{0,1}(u,v) = 1 + v and c*_{1,0}(u,v) = 1 / (1 + u); every other entry is 1.
  // Then h_{a,1}(z) = 1 + z exactly when 0 lies in [a, a+N-1].
  const int N = 2;
  const int K = 8;
  const Window win{-2, 5};
  Grid<TruncSeries1> h(win, win, TruncSeries1::constant(K, Rational(1)));
  h.at(-1, 1) = series(K, {1, 1});
  h.at(0, 1) = series(K, {1, 1});
  const SeriesFamily s(N, K, h);
  const SeriesSolution sol = solve_c_series(s);
  CHECK(verify_c_series(s, sol));
  CHECK(testing::independent_series_check(s, sol.c));
}

TEST_CASE("series solver soundness on oracle families") {
  Rng rng(27);
  for (int N = 2; N <= 4; ++N) {
    for (int trial = 0; trial < 3; ++trial) {
      const Window win{-1, 3 * N};
      const SeriesFamily s = testing::oracle_series_family(N, 6, win, rng);
      const SeriesSolution sol = solve_c_series(s);
      CHECK(verify_c_series(s, sol));
      CHECK(testing::independent_series_check(s, sol.c));
      CHECK(verify_c(s.constant_terms(), sol.constants));
    }
  }
}

TEST_CASE("series solver rejects bad input") {
  const int K = 4;
  const Window win{0, 7};
  Grid<TruncSeries1> h(win, win, TruncSeries1::constant(K, Rational(1)));
  h.at(3, 4) = TruncSeries1::variable(K);
  CHECK_THROWS_AS(SeriesFamily(2, K, h), DomainError);

  Grid<TruncSeries1> bad_lambda(win, win, TruncSeries1::constant(K, Rational(1)));
  bad_lambda.at(2, 2) = TruncSeries1::constant(K, Rational(3));
  CHECK_THROWS_AS(solve_c_series(SeriesFamily(2, K, bad_lambda)), DomainError);

  Grid<TruncSeries1> wrong_order(win, win, TruncSeries1::constant(K + 1, Rational(1)));
  CHECK_THROWS_AS(SeriesFamily(2, K, wrong_order), DomainError);
}

TEST_CASE("check_c_series detects a corrupted solution") {
  Rng rng(28);
  const SeriesFamily s = testing::oracle_series_family(3, 4, Window{0, 9}, rng);
  SeriesSolution sol = solve_c_series(s);
  CHECK(verify_c_series(s, sol));
  const Window core = sol.c.rows();
  sol.c.at(core.lo + 1, core.lo + 2).at(0, 3) += Rational(1);
  CHECK(!verify_c_series(s, sol));
}

TEST_CASE("f_aj") {
  CHECK(f_aj(4, 0, 0) == ZMonomial{1, -1});
  CHECK(f_aj(4, 0, 4) == ZMonomial{-1, -1});
  CHECK(f_aj(4, 0, 5) == ZMonomial{1, 0});
  CHECK(f_aj(4, 0, 3) == ZMonomial{1, 0});
  CHECK(f_aj(4, 0, 2) == ZMonomial{1, -1});
  CHECK(f_aj(4, 2, 1) == ZMonomial{1, 0});
}

TEST_CASE("ptilde") {
  const DualityDatum d(2);
  CHECK(ptilde(d, 3, 4) == UVPower{-1, 0});
  CHECK(ptilde(d, 0, 1) == UVPower{1, 1});
  CHECK(ptilde(d, 0, 5) == UVPower{1, 0});
  CHECK(ptilde(d, 4, 3) == UVPower{1, 1});
  for (std::int64_t i = -8; i <= 8; ++i)
    for (std::int64_t j = -8; j <= 8; ++j) CHECK(ptilde(d, i, j).power == d.quiver_closed_form(i, j));
}
