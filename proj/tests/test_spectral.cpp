#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "skc/errors.hpp"
#include "skc/spectral.hpp"
#include "testutil.hpp"

using skc::compute_spectrum;
using skc::dense_spectrum_oracle;
using skc::Graph;
using skc::Spectrum;
using skc::SpectrumOptions;

namespace {

skc::SpectrumOptions lanczos_only() {
  skc::SpectrumOptions o;
  o.dense_cutoff = 0;
  return o;
}

std::vector<double> complete_graph_values(int n) {
  std::vector<double> v(n, double(n) / (n - 1));
  v[0] = 0.0;
  return v;
}

std::vector<double> cycle_values(int n) {
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = 1.0 - std::cos(2.0 * M_PI * j / n);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("laplacian_apply matches hand-worked examples") {
  Graph k2(2, {{0, 1}});
  Eigen::VectorXd v(2);
  v << 1, -1;
  Eigen::VectorXd y = skc::laplacian_apply(k2, v);
  CHECK(y[0] == doctest::Approx(2.0));
  CHECK(y[1] == doctest::Approx(-2.0));

  // the degree-weighted constant vector is in the kernel
  Graph g = testutil::two_triangles_bridge();
  Eigen::VectorXd kern(6);
  for (int u = 0; u < 6; ++u) kern[u] = std::sqrt(double(g.degree(u)));
  CHECK(skc::laplacian_apply(g, kern).norm() == doctest::Approx(0.0).epsilon(1e-12));

  // alternating vector on an even cycle hits the top eigenvalue 2
  Graph c4 = testutil::cycle(4);
  Eigen::VectorXd alt(4);
  alt << 1, -1, 1, -1;
  CHECK((skc::laplacian_apply(c4, alt) - 2.0 * alt).norm() ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("laplacian_apply agrees with the dense matrix") {
  skc::Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = testutil::random_connected(25, 0.2, rng);
    Eigen::MatrixXd l = testutil::dense_laplacian(g);
    Eigen::VectorXd v(25);
    for (int i = 0; i < 25; ++i) v[i] = skc::uniform_double(rng) - 0.5;
    CHECK((skc::laplacian_apply(g, v) - l * v).norm() <= 1e-12);
  }
}

TEST_CASE("laplacian_apply rejects bad input") {
  Graph g(3, {{0, 1}});  // vertex 2 isolated
  Eigen::VectorXd v = Eigen::VectorXd::Ones(3);
  CHECK_THROWS_AS(skc::laplacian_apply(g, v), skc::DataError);
  Graph p = testutil::path(3);
  CHECK_THROWS_AS(skc::laplacian_apply(p, Eigen::VectorXd::Ones(4)), skc::UsageError);
}

TEST_CASE("dense oracle on tiny closed forms") {
  Spectrum s = dense_spectrum_oracle(Graph(2, {{0, 1}}));
  REQUIRE(s.values.size() == 2);
  CHECK(s.values[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(s.values[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.used_dense);

  // kernel multiplicity equals the number of components
  Spectrum t = dense_spectrum_oracle(testutil::two_triangles());
  REQUIRE(t.values.size() == 6);
  CHECK(t.values[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(t.values[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(t.values[2] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(t.values[5] == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("closed-form spectra, dense and iterative paths") {
  for (int n = 3; n <= 12; ++n) {
    auto check_against = [&](const Graph& g, const std::vector<double>& expect) {
      Spectrum dense = compute_spectrum(g, n);  // n <= cutoff: dense path
      Spectrum lanc = compute_spectrum(g, n, lanczos_only());
      CHECK(dense.used_dense);
      CHECK(!lanc.used_dense);
      for (int i = 0; i < n; ++i) {
        CHECK(std::abs(dense.values[i] - expect[i]) <= 1e-10);
        CHECK(std::abs(lanc.values[i] - expect[i]) <= 1e-10);
      }
    };
    check_against(testutil::complete(n), complete_graph_values(n));
    check_against(testutil::cycle(n), cycle_values(n));
  }
}

TEST_CASE("petersen graph spectrum") {
  Spectrum s = compute_spectrum(testutil::petersen(), 10, lanczos_only());
  // adjacency eigenvalues 3, 1 (x5), -2 (x4); normalized Laplacian 1 - mu/3
  CHECK(s.values[0] == doctest::Approx(0.0).epsilon(1e-10));
  for (int i = 1; i <= 5; ++i) CHECK(s.values[i] == doctest::Approx(2.0 / 3).epsilon(1e-10));
  for (int i = 6; i <= 9; ++i) CHECK(s.values[i] == doctest::Approx(5.0 / 3).epsilon(1e-10));
}

TEST_CASE("iterative path matches the oracle on random graphs") {
  skc::Rng rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 20 + 12 * trial;
    Graph g = testutil::random_connected(n, 0.12, rng);
    int k = 1 + trial % 6;
    Spectrum got = compute_spectrum(g, k, lanczos_only());
    Spectrum want = dense_spectrum_oracle(g);
    Eigen::MatrixXd l = testutil::dense_laplacian(g);
    REQUIRE(int(got.values.size()) == k);
    for (int i = 0; i < k; ++i) {
      CHECK(std::abs(got.values[i] - want.values[i]) <= 1e-8);
      Eigen::VectorXd x = got.vectors.col(i);
      CHECK((l * x - got.values[i] * x).norm() <= 1e-8);
    }
    // orthonormal columns
    Eigen::MatrixXd gram = got.vectors.transpose() * got.vectors;
    CHECK((gram - Eigen::MatrixXd::Identity(k, k)).norm() <= 1e-8);
  }
}

TEST_CASE("degenerate eigenspaces recovered via restarts") {
  // disconnected graph: kernel has dimension 2, which plain Lanczos from one
  // start vector cannot see without the breakdown restart
  Graph g = testutil::two_triangles();
  Spectrum got = compute_spectrum(g, 3, lanczos_only());
  CHECK(got.values[0] <= 1e-10);
  CHECK(got.values[1] <= 1e-10);
  CHECK(got.values[2] == doctest::Approx(1.5).epsilon(1e-9));

  // the computed kernel basis spans the same plane as the oracle's
  Spectrum want = dense_spectrum_oracle(g);
  Eigen::MatrixXd a = got.vectors.leftCols(2);
  Eigen::MatrixXd b = want.vectors.leftCols(2);
  CHECK(testutil::projector_distance(a, b) <= 1e-7);
}

TEST_CASE("spectrum values stay in [0, 2]") {
  skc::Rng rng(5);
  Graph g = testutil::random_connected(40, 0.1, rng);
  Spectrum s = compute_spectrum(g, 40, lanczos_only());
  for (double v : s.values) {
    CHECK(v >= 0.0);
    CHECK(v <= 2.0);
  }
  CHECK(std::is_sorted(s.values.begin(), s.values.end()));
}

TEST_CASE("deterministic across calls") {
  skc::Rng rng(21);
  Graph g = testutil::random_connected(60, 0.1, rng);
  Spectrum a = compute_spectrum(g, 4, lanczos_only());
  Spectrum b = compute_spectrum(g, 4, lanczos_only());
  CHECK(a.values == b.values);  // bitwise
  CHECK(a.vectors == b.vectors);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("error paths") {
  Graph g = testutil::cycle(6);
  CHECK_THROWS_AS(compute_spectrum(g, 0), skc::UsageError);
  CHECK_THROWS_AS(compute_spectrum(g, 7), skc::UsageError);
  Graph iso(4, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(compute_spectrum(iso, 2), skc::DataError);
  CHECK_THROWS_AS(dense_spectrum_oracle(iso), skc::DataError);

  // unreachable tolerance must fail loudly, not silently return garbage
  SpectrumOptions hopeless = lanczos_only();
  hopeless.tol = 1e-30;
  CHECK_THROWS_AS(compute_spectrum(testutil::petersen(), 2, hopeless),
                  skc::NumericalError);
}

TEST_CASE("embedding rows are degree-scaled eigenvector rows") {
  Graph g = testutil::two_triangles_bridge();
  Spectrum s = compute_spectrum(g, 3);
  Eigen::MatrixXd emb = skc::embed(g, s, 2);
  REQUIRE(emb.rows() == 6);
  REQUIRE(emb.cols() == 2);
  for (int u = 0; u < 6; ++u)
    for (int c = 0; c < 2; ++c)
      CHECK(emb(u, c) ==
            doctest::Approx(s.vectors(u, c) / std::sqrt(double(g.degree(u)))));
  CHECK_THROWS_AS(skc::embed(g, s, 4), skc::UsageError);
  CHECK_THROWS_AS(skc::embed(g, s, 0), skc::UsageError);
  CHECK_THROWS_AS(skc::embed(testutil::cycle(5), s, 2), skc::UsageError);
}

TEST_CASE("embedding of a disconnected graph separates components") {
  Graph g = testutil::two_triangles();
  Spectrum s = compute_spectrum(g, 2);
  Eigen::MatrixXd emb = skc::embed(g, s, 2);
  // all vertices of one triangle land on the same point
  for (int u : {1, 2}) CHECK((emb.row(u) - emb.row(0)).norm() <= 1e-10);
  for (int u : {4, 5}) CHECK((emb.row(u) - emb.row(3)).norm() <= 1e-10);
  // and the two points sit exactly 1/sqrt(3) apart
  CHECK((emb.row(0) - emb.row(3)).norm() ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-10));
}
