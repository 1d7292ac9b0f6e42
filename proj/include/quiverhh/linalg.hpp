#ifndef QUIVERHH_LINALG_HPP
#define QUIVERHH_LINALG_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "quiverhh/field.hpp"

namespace quiverhh {

/// Sparse coordinate vector: entries sorted by index, no stored zeros.
struct SparseVector {
    std::vector<std::pair<std::size_t, Scalar>> entries;

    bool empty() const { return entries.empty(); }
    std::size_t nnz() const { return entries.size(); }
    /// Value at `index` (zero when absent).
    Scalar at(std::size_t index) const;
    bool operator==(const SparseVector&) const = default;
};

/// Builds a canonical sparse vector from unsorted (index, value) terms, summing duplicates.
SparseVector make_sparse(std::vector<std::pair<std::size_t, Scalar>> terms, const Field& field);

/// a + c * b
SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b, const Field& field);
SparseVector scale(const SparseVector& v, const Scalar& c, const Field& field);

/*
 * Sparse matrix stored by columns. Cochain differentials are assembled one
 * domain basis element at a time, which makes columns the natural unit.
 */
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    const SparseVector& column(std::size_t c) const { return columns_.at(c); }
    /// Replaces column `c`; the vector must already be canonical and fit `rows()`.
    void set_column(std::size_t c, SparseVector v);
    Scalar at(std::size_t r, std::size_t c) const { return columns_.at(c).at(r); }
    std::size_t nnz() const;

    SparseMatrix transpose() const;
    /// Rows as sparse vectors indexed by column.
    std::vector<SparseVector> row_vectors() const;

    SparseVector apply(const SparseVector& v, const Field& field) const;
    /// this * other
    SparseMatrix multiply(const SparseMatrix& other, const Field& field) const;
    bool is_zero() const;
    bool operator==(const SparseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector> columns_;
};

/*
 * Reduced row echelon basis of a subspace of k^dim. Every row has a leading 1
 * at its pivot and zeros at all other pivots; pivots strictly increase. The
 * RREF basis of a subspace is unique, so two SubspaceBasis values compare
 * equal exactly when they span the same subspace.
 */
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    SubspaceBasis(std::size_t ambient_dim, std::vector<SparseVector> rows, std::vector<std::size_t> pivots);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<SparseVector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Subtracts the unique subspace element agreeing with v at every pivot; the result vanishes on pivots.
    SparseVector reduce(const SparseVector& v, const Field& field) const;
    bool contains(const SparseVector& v, const Field& field) const { return reduce(v, field).empty(); }
    bool contains(const SubspaceBasis& other, const Field& field) const;

    bool operator==(const SubspaceBasis&) const = default;

private:
    std::size_t ambient_ = 0;
    std::vector<SparseVector> rows_;
    std::vector<std::size_t> pivots_;
};

/*
 * Canonical RREF basis of the span of `vectors` in k^dim. In characteristic 0
 * the elimination runs fraction-free over the integers (rows are kept
 * primitive by dividing out their content) and only the final normalisation
 * introduces denominators. Pivots are chosen as the first nonzero column.
 */
SubspaceBasis row_space(std::span<const SparseVector> vectors, std::size_t dim, const Field& field);

SubspaceBasis column_space(const SparseMatrix& m, const Field& field);
SubspaceBasis kernel_basis(const SparseMatrix& m, const Field& field);
std::size_t rank(const SparseMatrix& m, const Field& field);

/// Free-function spelling of SubspaceBasis::reduce.
inline SparseVector reduce_mod(const SubspaceBasis& s, const SparseVector& v, const Field& field) {
    return s.reduce(v, field);
}

/// Matrix with the listed columns of `m`, in the given order.
SparseMatrix select_columns(const SparseMatrix& m, std::span<const std::size_t> cols);

}  // namespace quiverhh

#endif
