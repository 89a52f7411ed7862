#ifndef HWG_NUMERICS_SPARSE_OPERATOR_HPP
#define HWG_NUMERICS_SPARSE_OPERATOR_HPP

#include <cstdint>
#include <vector>

namespace hwg::numerics {

struct Triplet {
    std::int64_t row;
    std::int64_t col;
    double value;
};

// Symmetric real matrix in CSR form. Duplicate triplets are summed on
// construction and the symmetry invariant |A - A^T| <= 1e-14 (entrywise,
// relative to the largest magnitude) is always verified.
class SparseSymmetricOperator {
public:
    static SparseSymmetricOperator from_triplets(std::size_t dimension,
                                                 std::vector<Triplet> entries);

    // Rows must already be sorted by column with no duplicates; symmetry is
    // still verified.
    static SparseSymmetricOperator from_csr(std::size_t dimension,
                                            std::vector<std::int64_t> row_ptr,
                                            std::vector<std::int32_t> cols,
                                            std::vector<double> values);

    std::size_t dimension() const { return dim_; }
    std::size_t nonzeros() const { return values_.size(); }

    // y = A x
    void apply(const double* x, double* y) const;
    std::vector<double> apply(const std::vector<double>& x) const;

    std::vector<double> diagonal() const;
    // Gershgorin upper bound for the spectral radius.
    double norm_bound() const;

    const std::vector<std::int64_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::int32_t>& cols() const { return cols_; }
    const std::vector<double>& values() const { return values_; }

private:
    SparseSymmetricOperator() = default;
    void verify_symmetric() const;

    std::size_t dim_ = 0;
    std::vector<std::int64_t> row_ptr_;
    std::vector<std::int32_t> cols_;
    std::vector<double> values_;
};

} // namespace hwg::numerics

#endif
