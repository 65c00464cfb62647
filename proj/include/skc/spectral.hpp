#pragma once

#include <Eigen/Dense>
#include <vector>

#include "skc/graph.hpp"

namespace skc {

struct SpectrumOptions {
  double tol = 1e-10;    // residual threshold ||Lx - lambda x||
  int max_iter = 0;      // 0 means 10 * n
  int dense_cutoff = 300;  // n <= cutoff goes straight to the dense solver
};

/// The k smallest eigenvalues of the normalized Laplacian
/// L = I - D^{-1/2} A D^{-1/2}, ascending, with orthonormal eigenvectors
/// as columns of `vectors` (n x k). Eigenvalues are clamped to [0, 2].
struct Spectrum {
  std::vector<double> values;
  Eigen::MatrixXd vectors;
  int iterations = 0;  // Lanczos steps taken; 0 for the dense path
  bool used_dense = false;
};

/// y = L v without forming L. Rejects graphs with isolated vertices.
Eigen::VectorXd laplacian_apply(const Graph& g, const Eigen::VectorXd& v);

/// All n eigenpairs via a dense eigensolve, independent of the iterative
/// path. Guarded to n <= 2000 since it materializes the n x n Laplacian.
Spectrum dense_spectrum_oracle(const Graph& g);

/// Lanczos with full reorthogonalization on 2I - L (so the wanted end of the
/// spectrum is the dominant one). Restarts with a fresh orthogonalized random
/// vector on breakdown, and before accepting a converged set probes the
/// orthogonal complement the same way; both are needed to recover repeated
/// eigenvalues (the multiplicity of 0 on disconnected graphs, paired values
/// on cycles) that a single Krylov space cannot see. Falls back to the dense
/// solver for n <= options.dense_cutoff. Throws NumericalError if the
/// residuals never reach options.tol.
Spectrum compute_spectrum(const Graph& g, int k, const SpectrumOptions& options = {});

/// Row u is deg(u)^{-1/2} * (xi_1(u), ..., xi_k(u)): the map each vertex is
/// clustered under. k may be at most the number of computed pairs.
Eigen::MatrixXd embed(const Graph& g, const Spectrum& spectrum, int k);

}  // namespace skc
