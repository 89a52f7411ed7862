#ifndef HWG_NUMERICS_SPECTRAL_RESULT_HPP
#define HWG_NUMERICS_SPECTRAL_RESULT_HPP

#include <vector>

namespace hwg::numerics {

// Eigenvalues come out ascending; residual_norms[i] = ||A v_i - lambda_i v_i||
// for the returned unit vectors. Energies are in units with hbar^2/2m = 1.
struct SpectralResult {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors; // may be empty
    std::vector<double> residual_norms;
    double grid_spacing = 0.0;
    int iterations = 0;
    // Set when a 1D potential had not settled to its asymptotic value at the
    // box ends, so truncation bias is unquantified.
    bool truncation_warning = false;
};

} // namespace hwg::numerics

#endif
