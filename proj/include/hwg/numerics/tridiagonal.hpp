#ifndef HWG_NUMERICS_TRIDIAGONAL_HPP
#define HWG_NUMERICS_TRIDIAGONAL_HPP

#include <functional>
#include <vector>

#include "hwg/numerics/spectral_result.hpp"

namespace hwg::numerics {

// Symmetric tridiagonal matrix: diag[i] on the diagonal, off[i] coupling
// i and i+1.
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;
    std::size_t size() const { return diag.size(); }
};

// Number of eigenvalues strictly below lambda (Sturm sequence / LDL^T inertia).
int eigenvalue_count_below(const Tridiagonal& T, double lambda);

// All eigenvalues strictly below `bound`, each located by bisection to
// absolute accuracy abs_tol. Deterministic, no iteration limits to tune.
std::vector<double> eigenvalues_below(const Tridiagonal& T, double bound, double abs_tol);

// Eigenvector for an isolated eigenvalue by inverse iteration; returns the
// normalized vector and the attained residual.
std::vector<double> tridiagonal_eigenvector(const Tridiagonal& T, double lambda,
                                            double* residual = nullptr);

struct Schrodinger1dOptions {
    double abs_tol = 1e-13;       // eigenvalue bisection accuracy
    bool want_vectors = false;
    double settle_tol = 1e-8;     // |V(+-L) - E0| above this flags truncation bias
};

// Discrete eigenvalues of -d^2/ds^2 + V on [-L, L] with Dirichlet ends that
// lie strictly below the threshold E0. The potential is sampled at the
// n-1 interior nodes of a uniform grid with spacing h = 2L/n. An empty list
// is a valid outcome.
SpectralResult solve_1d_schrodinger(const std::function<double(double)>& potential,
                                    double half_length, double spacing, double threshold,
                                    const Schrodinger1dOptions& opts = {});

} // namespace hwg::numerics

#endif
