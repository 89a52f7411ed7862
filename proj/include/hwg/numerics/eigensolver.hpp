#ifndef HWG_NUMERICS_EIGENSOLVER_HPP
#define HWG_NUMERICS_EIGENSOLVER_HPP

#include <cstddef>
#include <vector>

#include "hwg/numerics/sparse_operator.hpp"
#include "hwg/numerics/spectral_result.hpp"

namespace hwg::numerics {

struct EigensolverOptions {
    double tol = 1e-9;       // converged when ||Av - lv|| <= tol * max(1, |l|)
    int max_iterations = 0;  // 0 -> automatic
    bool want_vectors = true;
    bool use_jacobi_preconditioner = true;
};

// k smallest eigenpairs of a sparse symmetric operator by a block
// preconditioned inverse-iteration scheme (LOBPCG). The starting block is
// deterministic (all-ones plus fixed cosine profiles, orthonormalized), so
// repeated runs give identical results.
//
// Throws ConfigError for k < 1 or k too large for the block method, and
// SolverError (carrying the best residual) on non-convergence.
SpectralResult smallest_eigenpairs(const SparseSymmetricOperator& op, std::size_t k,
                                   const EigensolverOptions& opts = {});

SpectralResult smallest_eigenpairs(const SparseSymmetricOperator& op, std::size_t k,
                                   double tol);

// Same algorithm but with caller-provided initial block columns (each of
// length op.dimension()); used for warm starts across parameter sweeps.
SpectralResult smallest_eigenpairs_warm(const SparseSymmetricOperator& op, std::size_t k,
                                        const std::vector<std::vector<double>>& initial,
                                        const EigensolverOptions& opts = {});

} // namespace hwg::numerics

#endif
