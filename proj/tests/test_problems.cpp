#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "saddle/problems.hpp"
#include "support/oracles.hpp"

using namespace saddle;

namespace {

Vector random_simplex_point(std::size_t n, Rng& rng) {
  Vector v(n);
  double sum = 0.0;
  for (double& e : v) {
    e = std::abs(rng.normal()) + 1e-12;
    sum += e;
  }
  for (double& e : v) e /= sum;
  return v;
}

double column_correlation(const LinearMap& K, std::size_t j0, std::size_t j1) {
  const std::size_t m = K.rows();
  double m0 = 0.0, m1 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    m0 += K.entry(i, j0);
    m1 += K.entry(i, j1);
  }
  m0 /= m;
  m1 /= m;
  double c01 = 0.0, v0 = 0.0, v1 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double a = K.entry(i, j0) - m0;
    const double b = K.entry(i, j1) - m1;
    c01 += a * b;
    v0 += a * a;
    v1 += b * b;
  }
  return c01 / std::sqrt(v0 * v1);
}

}  // namespace

TEST_CASE("gen_matrix_game: stock shapes and entry ranges") {
  const SaddleProblem p1 = gen_matrix_game({.family = ProblemFamily::matgame1, .seed = 3});
  CHECK(p1.K.rows() == 100);
  CHECK(p1.K.cols() == 100);
  for (std::size_t i = 0; i < 100; ++i) {
    for (std::size_t j = 0; j < 100; ++j) CHECK(std::abs(p1.K.entry(i, j)) <= 1.0);
  }
  CHECK(p1.metric == MetricKind::bilinear_game_gap);
  CHECK(p1.gamma_fstar == 0.0);
  CHECK(p1.x0 == Vector(100, 0.01));
  CHECK(p1.y0 == Vector(100, 0.01));

  const SaddleProblem p3 = gen_matrix_game({.family = ProblemFamily::matgame3, .seed = 3});
  CHECK(p3.K.rows() == 500);
  CHECK(p3.K.cols() == 100);
}

TEST_CASE("gen_matrix_game: sparse instance density and value range") {
  const SaddleProblem p = gen_matrix_game(
      {.family = ProblemFamily::matgame4, .seed = 9, .m = 100, .n = 200});
  CHECK_FALSE(p.K.is_dense());
  const double density = static_cast<double>(p.K.nnz()) / (100.0 * 200.0);
  CHECK(p.K.nnz() == 2000);  // exactly floor(0.10 * m * n) cells
  CHECK(std::abs(density - 0.10) <= 0.005);
  const Vector dense = p.K.to_dense();
  for (double v : dense) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("generators are deterministic for a fixed spec") {
  const GeneratorSpec g{.family = ProblemFamily::matgame2, .seed = 1234};
  CHECK(gen_matrix_game(g).K.to_dense() == gen_matrix_game(g).K.to_dense());

  const GeneratorSpec l{.family = ProblemFamily::lasso1, .seed = 77, .m = 30, .n = 80, .s = 4};
  const SaddleProblem a = gen_lasso(l);
  const SaddleProblem b = gen_lasso(l);
  CHECK(a.K.to_dense() == b.K.to_dense());
  CHECK(a.b == b.b);
  CHECK(a.true_signal == b.true_signal);
}

TEST_CASE("generator family mismatches are rejected") {
  CHECK_THROWS_AS(gen_matrix_game({.family = ProblemFamily::lasso1}), ConfigError);
  CHECK_THROWS_AS(gen_lasso({.family = ProblemFamily::matgame1}), ConfigError);
}

TEST_CASE("gen_lasso: stock lasso1 shape and planted support") {
  const SaddleProblem p = gen_lasso({.family = ProblemFamily::lasso1, .seed = 5});
  CHECK(p.K.rows() == 200);
  CHECK(p.K.cols() == 1000);
  std::size_t nonzeros = 0;
  for (double w : p.true_signal) {
    if (w != 0.0) {
      ++nonzeros;
      CHECK(std::abs(w) <= 10.0);
    }
  }
  CHECK(nonzeros == 10);
  CHECK(p.lambda == 0.1);
  CHECK(p.gamma_fstar == 1.0);
  CHECK(p.metric == MetricKind::objective_error);
  // y0 = K x0 - b with x0 = 0
  CHECK(p.x0 == Vector(1000, 0.0));
  CHECK(max_abs_diff(p.y0, scaled(p.b, -1.0)) == 0.0);
}

TEST_CASE("gen_lasso: correlated columns have correlation near p") {
  const SaddleProblem p = gen_lasso({.family = ProblemFamily::lasso3, .seed = 11});
  CHECK(p.K.rows() == 1000);
  CHECK(p.K.cols() == 5000);
  double mean_corr = 0.0;
  const std::size_t pairs = 200;
  for (std::size_t j = 0; j < pairs; ++j) {
    mean_corr += column_correlation(p.K, j, j + 1);
  }
  mean_corr /= pairs;
  CHECK(std::abs(mean_corr - 0.5) <= 0.1);
}

TEST_CASE("gen_lasso: zero support makes b pure noise") {
  const SaddleProblem p =
      gen_lasso({.family = ProblemFamily::lasso1, .seed = 2, .m = 40, .n = 100, .s = 0});
  for (double w : p.true_signal) CHECK(w == 0.0);
  CHECK(norm_inf(p.b) <= 1.0);  // N(0, 0.1) noise only
}

TEST_CASE("game_gap: zero operator, symmetric saddle, hand case") {
  const Vector half{0.5, 0.5};
  CHECK(game_gap(LinearMap::dense(2, 2, {0, 0, 0, 0}), half, half) == 0.0);
  CHECK(game_gap(LinearMap::dense(2, 2, {1, 0, 0, 1}), half, half) == 0.0);
  CHECK(game_gap(LinearMap::dense(2, 2, {1, 0, 0, 0}), half, half) == Catch::Approx(0.5));
}

TEST_CASE("game_gap rejects infeasible points") {
  const auto K = LinearMap::dense(2, 2, {1, 0, 0, 1});
  CHECK_THROWS_AS(game_gap(K, {0.7, 0.7}, {0.5, 0.5}), ConfigError);     // sum != 1
  CHECK_THROWS_AS(game_gap(K, {1.5, -0.5}, {0.5, 0.5}), ConfigError);    // negative entry
  CHECK_THROWS_AS(game_gap(K, {0.5, 0.5}, {1.0, 1e-7}), ConfigError);    // sum off by > 1e-8
}

TEST_CASE("game_gap is nonnegative on simplex-feasible pairs") {
  Rng rng(13);
  const SaddleProblem p =
      gen_matrix_game({.family = ProblemFamily::matgame1, .seed = 8, .m = 12, .n = 7});
  for (int trial = 0; trial < 1000; ++trial) {
    const Vector x = random_simplex_point(7, rng);
    const Vector y = random_simplex_point(12, rng);
    CHECK(game_gap(p.K, x, y) >= -1e-12);
  }
}

TEST_CASE("lasso_objective: origin, hand case, interpolation") {
  const auto K = LinearMap::dense(2, 2, {2, 0, 1, 1});
  const Vector b{1.0, 3.0};
  CHECK(lasso_objective(K, b, 0.1, {0.0, 0.0}) == Catch::Approx(0.5 * 10.0));

  const auto eye1 = LinearMap::dense(1, 1, {1.0});
  CHECK(lasso_objective(eye1, {0.0}, 1.0, {2.0}) == Catch::Approx(4.0));  // 0.5*4 + 1*2

  // lambda = 0 at the exact solution of an invertible system: K x = b
  CHECK(lasso_objective(K, {2.0, 3.0}, 0.0, {1.0, 2.0}) == Catch::Approx(0.0).margin(1e-14));
}

TEST_CASE("lasso_objective is convex along random segments") {
  Rng rng(19);
  const SaddleProblem p =
      gen_lasso({.family = ProblemFamily::lasso1, .seed = 4, .m = 15, .n = 40, .s = 3});
  for (int trial = 0; trial < 200; ++trial) {
    Vector a(40), c(40);
    for (std::size_t i = 0; i < 40; ++i) {
      a[i] = 3.0 * rng.normal();
      c[i] = 3.0 * rng.normal();
    }
    const Vector mid = lin_comb(0.5, a, 0.5, c);
    const double fa = lasso_objective(p.K, p.b, p.lambda, a);
    const double fc = lasso_objective(p.K, p.b, p.lambda, c);
    const double fm = lasso_objective(p.K, p.b, p.lambda, mid);
    CHECK(fm <= 0.5 * (fa + fc) + 1e-12 * std::max(1.0, std::abs(fa) + std::abs(fc)));
  }
}

TEST_CASE("primal_dual_gap: zero at the anchor, nonnegative at an exact saddle") {
  Rng rng(29);
  const SaddleProblem p =
      gen_matrix_game({.family = ProblemFamily::matgame2, .seed = 21, .m = 6, .n = 5});
  const auto sol = oracles::solve_matrix_game(p.K);
  REQUIRE(game_gap(p.K, sol.x, sol.y) <= 1e-9);

  const auto zero = [](const Vector&) { return 0.0; };
  CHECK(primal_dual_gap(p, sol.x, sol.y, sol.x, sol.y, zero, zero) == 0.0);

  for (int trial = 0; trial < 100; ++trial) {
    const Vector x = random_simplex_point(5, rng);
    const Vector y = random_simplex_point(6, rng);
    CHECK(primal_dual_gap(p, sol.x, sol.y, x, y, zero, zero) >= -1e-10);
  }
}

TEST_CASE("primal_dual_gap matches the longhand expansion on an LP-solved 3x3 game") {
  const auto K = LinearMap::dense(3, 3, {0, 1, -1, -1, 0, 1, 1, -1, 0});  // cyclic game
  const SaddleProblem p{
      .K = K,
      .prox_g = {[](double, const Vector& v) { return project_simplex(v); }, 0.0},
      .prox_fstar = {[](double, const Vector& v) { return project_simplex(v); }, 0.0},
      .metric = MetricKind::bilinear_game_gap,
  };
  const auto sol = oracles::solve_matrix_game(K);
  for (double v : sol.x) CHECK(v == Catch::Approx(1.0 / 3.0).margin(1e-9));
  CHECK(std::abs(sol.value) <= 1e-10);

  const Vector x{0.2, 0.5, 0.3};
  const Vector y{0.6, 0.1, 0.3};
  const auto zero = [](const Vector&) { return 0.0; };
  const double got = primal_dual_gap(p, sol.x, sol.y, x, y, zero, zero);

  // longhand: <K^T yhat, x - xhat> - <K xhat, y - yhat>
  double want = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    double ktyj = 0.0;
    for (std::size_t i = 0; i < 3; ++i) ktyj += K.entry(i, j) * sol.y[i];
    want += ktyj * (x[j] - sol.x[j]);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    double kxi = 0.0;
    for (std::size_t j = 0; j < 3; ++j) kxi += K.entry(i, j) * sol.x[j];
    want -= kxi * (y[i] - sol.y[i]);
  }
  CHECK(got == Catch::Approx(want).margin(1e-14));
  CHECK(got >= -1e-12);
}

TEST_CASE("metric_value dispatches by kind") {
  const SaddleProblem game =
      gen_matrix_game({.family = ProblemFamily::matgame1, .seed = 2, .m = 4, .n = 4});
  CHECK(metric_value(game, game.x0, game.y0) == game_gap(game.K, game.x0, game.y0));

  SaddleProblem lasso =
      gen_lasso({.family = ProblemFamily::lasso1, .seed = 2, .m = 10, .n = 25, .s = 2});
  const double phi0 = lasso_objective(lasso.K, lasso.b, lasso.lambda, lasso.x0);
  CHECK(metric_value(lasso, lasso.x0, lasso.y0) == phi0);
  lasso.reference_value = 1.25;
  CHECK(metric_value(lasso, lasso.x0, lasso.y0) == Catch::Approx(phi0 - 1.25));
}
