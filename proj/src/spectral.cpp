#include "skc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "skc/errors.hpp"
#include "skc/rng.hpp"

namespace skc {

namespace {

// Start-vector stream for Lanczos. Fixed so a given (graph, k, options)
// always yields the same run; reproducibility of the CLI depends on it.
constexpr std::uint64_t kLanczosSeed = 0x9e3779b97f4a7c15ULL;
constexpr double kBreakdownTol = 1e-12;

void require_spectral_ok(const Graph& g, int k) {
  const int n = g.num_vertices();
  if (k < 1 || k > n)
    throw UsageError("k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  if (n > 0 && g.min_degree() == 0) {
    for (int u = 0; u < n; ++u)
      if (g.degree(u) == 0)
        throw DataError("vertex " + std::to_string(u) +
                        " is isolated; the normalized Laplacian needs every degree >= 1");
  }
}

// Sign convention: largest-magnitude entry positive, earliest index breaking
// magnitude ties. Keeps repeated runs byte-identical downstream.
void fix_signs(Eigen::MatrixXd& vecs) {
  for (int c = 0; c < vecs.cols(); ++c) {
    int arg = 0;
    double best = -1.0;
    for (int r = 0; r < vecs.rows(); ++r) {
      const double a = std::abs(vecs(r, c));
      if (a > best + 1e-15) {
        best = a;
        arg = r;
      }
    }
    if (vecs(arg, c) < 0.0) vecs.col(c) = -vecs.col(c);
  }
}

void clamp_values(std::vector<double>& values) {
  for (double& v : values) v = std::min(2.0, std::max(0.0, v));
}

Eigen::MatrixXd dense_laplacian(const Graph& g) {
  const int n = g.num_vertices();
  Eigen::MatrixXd L = Eigen::MatrixXd::Identity(n, n);
  for (const auto& [u, v] : g.edges()) {
    const double w = -1.0 / std::sqrt(double(g.degree(u)) * double(g.degree(v)));
    L(u, v) = w;
    L(v, u) = w;
  }
  return L;
}

Spectrum dense_spectrum(const Graph& g, int k) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_laplacian(g));
  if (solver.info() != Eigen::Success)
    throw NumericalError("dense eigensolver failed");
  Spectrum s;
  s.used_dense = true;
  s.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
  s.vectors = solver.eigenvectors().leftCols(k);
  clamp_values(s.values);
  fix_signs(s.vectors);
  return s;
}

}  // namespace

Eigen::VectorXd laplacian_apply(const Graph& g, const Eigen::VectorXd& v) {
  const int n = g.num_vertices();
  if (v.size() != n)
    throw UsageError("vector length " + std::to_string(v.size()) +
                     " does not match vertex count " + std::to_string(n));
  require_spectral_ok(g, 1);
  Eigen::VectorXd out = v;
  for (int u = 0; u < n; ++u) {
    const double du = g.degree(u);
    double acc = 0.0;
    for (int x : g.neighbors(u)) acc += v[x] / std::sqrt(du * double(g.degree(x)));
    out[u] -= acc;
  }
  return out;
}

Spectrum dense_spectrum_oracle(const Graph& g) {
  require_spectral_ok(g, 1);
  if (g.num_vertices() > 2000)
    throw UsageError("dense oracle capped at 2000 vertices, got " +
                     std::to_string(g.num_vertices()));
  return dense_spectrum(g, g.num_vertices());
}

Spectrum compute_spectrum(const Graph& g, int k, const SpectrumOptions& options) {
  require_spectral_ok(g, k);
  const int n = g.num_vertices();
  if (n <= options.dense_cutoff) return dense_spectrum(g, k);

  const int max_iter = options.max_iter > 0 ? options.max_iter : 10 * n;

  // Work with B = 2I - L, whose top-k eigenpairs are L's bottom-k. Matrix-free:
  // (Bv)(u) = v(u) + sum over neighbors x of v(x)/sqrt(deg u * deg x).
  auto apply_shifted = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd out = v;
    for (int u = 0; u < n; ++u) {
      const double du = g.degree(u);
      double acc = 0.0;
      for (int x : g.neighbors(u)) acc += v[x] / std::sqrt(du * double(g.degree(x)));
      out[u] += acc;
    }
    return out;
  };

  // A candidate can pass every residual check and still be wrong: with full
  // reorthogonalization the Krylov space never sees the second copy of a
  // repeated eigenvalue, so e.g. on an even cycle the returned multiset would
  // skip duplicates. Before accepting, a restarted block probes the orthogonal
  // complement; its floor must sit above lambda_k - margin or the candidate is
  // provably incomplete and the iteration continues until the copy converges.
  const double margin = std::max(10.0 * options.tol, 1e-9);
  double certified_missing = std::numeric_limits<double>::infinity();

  Rng rng(kLanczosSeed);
  std::vector<Eigen::VectorXd> basis;
  basis.reserve(std::min(n, max_iter) + 1);

  auto orthonormal_random = [&]() -> Eigen::VectorXd {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v[i] = uniform_double(rng) - 0.5;
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : basis) v -= q.dot(v) * q;
      const double norm = v.norm();
      if (norm > 1e-8) return v / norm;
    }
    return {};  // basis already spans the space
  };

  std::vector<double> alpha, beta;  // beta[j] couples basis[j] and basis[j+1]
  basis.push_back(orthonormal_random());

  Spectrum result;
  double worst_residual = std::numeric_limits<double>::infinity();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tsolver;
  Eigen::VectorXd diag, subdiag;

  // Verifies the k best Ritz pairs against the graph itself; authoritative,
  // unlike the cheap |beta * last component| estimate that gates it.
  auto try_finish = [&](double current_beta, bool force) -> bool {
    const int m = static_cast<int>(alpha.size());
    if (m < k) return false;
    diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
    subdiag.resize(std::max(m - 1, 0));
    for (int j = 0; j + 1 < m; ++j) subdiag[j] = beta[j];
    tsolver.computeFromTridiagonal(diag, subdiag);
    if (tsolver.info() != Eigen::Success) return false;

    // A previous probe certified an eigenvalue this Ritz set still misses.
    if (2.0 - tsolver.eigenvalues()[m - k] > certified_missing + margin) return false;

    if (!force) {
      for (int i = 0; i < k; ++i) {
        const double est =
            std::abs(current_beta) * std::abs(tsolver.eigenvectors()(m - 1, m - 1 - i));
        if (est > options.tol * 0.5) return false;
      }
    }

    std::vector<double> vals(k);
    Eigen::MatrixXd vecs(n, k);
    double worst = 0.0;
    for (int i = 0; i < k; ++i) {
      const int col = m - 1 - i;  // i-th largest of B = i-th smallest of L
      vals[i] = 2.0 - tsolver.eigenvalues()[col];
      Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
      for (int j = 0; j < m; ++j) x += tsolver.eigenvectors()(j, col) * basis[j];
      x.normalize();
      Eigen::VectorXd r = laplacian_apply(g, x) - vals[i] * x;
      worst = std::max(worst, r.norm());
      vecs.col(i) = x;
    }
    worst_residual = std::min(worst_residual, worst);
    if (worst > options.tol) return false;

    Spectrum s;
    s.values = std::move(vals);
    s.vectors = std::move(vecs);
    s.iterations = m;
    clamp_values(s.values);
    fix_signs(s.vectors);
    result = std::move(s);
    return true;
  };

  bool probing = false;
  int probe_start = 0;  // alpha index where the probe block begins
  Spectrum candidate;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> psolver;

  // Opens a restarted block in the unexplored part of the space. False means
  // there is nothing left to probe and the candidate stands.
  auto start_probe = [&]() -> bool {
    if (static_cast<int>(basis.size()) >= n) return false;
    Eigen::VectorXd fresh = orthonormal_random();
    if (fresh.size() == 0) return false;
    beta.push_back(0.0);
    probe_start = static_cast<int>(alpha.size());
    basis.push_back(std::move(fresh));
    probing = true;
    return true;
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    const Eigen::VectorXd& qj = basis.back();
    Eigen::VectorXd w = apply_shifted(qj);
    alpha.push_back(qj.dot(w));
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) w -= q.dot(w) * q;
    const double b = w.norm();

    if (probing) {
      const int m2 = static_cast<int>(alpha.size()) - probe_start;
      Eigen::VectorXd d2(m2), s2(std::max(m2 - 1, 0));
      for (int j = 0; j < m2; ++j) d2[j] = alpha[probe_start + j];
      for (int j = 0; j + 1 < m2; ++j) s2[j] = beta[probe_start + j];
      psolver.computeFromTridiagonal(d2, s2);
      if (psolver.info() == Eigen::Success) {
        // Ritz values only grow as the block extends, so this floor estimate
        // shrinks toward the true complement floor from above: dipping under
        // the threshold is already proof of a missed eigenvalue, while
        // accepting additionally needs the estimate to have converged.
        const double floor_est = 2.0 - psolver.eigenvalues()[m2 - 1];
        const double est = std::abs(b) * std::abs(psolver.eigenvectors()(m2 - 1, m2 - 1));
        if (floor_est < candidate.values[k - 1] - margin) {
          certified_missing = std::min(certified_missing, floor_est);
          probing = false;
        } else if (est <= options.tol * 0.5 || b < kBreakdownTol) {
          return candidate;
        }
      }
    } else if (try_finish(b, false)) {
      candidate = std::move(result);
      if (!start_probe()) return candidate;
      continue;
    }

    if (static_cast<int>(basis.size()) >= n) break;

    if (b < kBreakdownTol) {
      beta.push_back(0.0);
      Eigen::VectorXd fresh = orthonormal_random();
      if (fresh.size() == 0) break;
      basis.push_back(std::move(fresh));
    } else {
      beta.push_back(b);
      basis.push_back(w / b);
    }
  }

  if (try_finish(0.0, true)) return result;
  throw NumericalError("eigensolver stalled after " + std::to_string(alpha.size()) +
                       " steps; best residual " + std::to_string(worst_residual) +
                       " > tol " + std::to_string(options.tol));
}

Eigen::MatrixXd embed(const Graph& g, const Spectrum& spectrum, int k) {
  const int n = g.num_vertices();
  if (spectrum.vectors.rows() != n)
    throw UsageError("spectrum has " + std::to_string(spectrum.vectors.rows()) +
                     " rows, graph has " + std::to_string(n) + " vertices");
  if (k < 1 || k > spectrum.vectors.cols())
    throw UsageError("asked for " + std::to_string(k) + " embedding dimensions, spectrum has " +
                     std::to_string(spectrum.vectors.cols()));
  require_spectral_ok(g, 1);
  Eigen::MatrixXd points = spectrum.vectors.leftCols(k);
  for (int u = 0; u < n; ++u) points.row(u) /= std::sqrt(double(g.degree(u)));
  return points;
}

}  // namespace skc
