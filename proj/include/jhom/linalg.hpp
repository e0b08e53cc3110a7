#ifndef JHOM_LINALG_HPP
#define JHOM_LINALG_HPP

#include <map>
#include <utility>
#include <vector>

#include "jhom/rational.hpp"

namespace jhom {

// Sparse vector: strictly increasing indices, no zero values.
using SVec = std::vector<std::pair<int, Rat>>;

SVec svec_from_dense(const QVec& v);
QVec svec_to_dense(const SVec& v, int n);
// a += c*b
void svec_axpy(SVec& a, const Rat& c, const SVec& b);
SVec svec_scaled(const SVec& v, const Rat& c);

// Sparse matrix stored by columns.
struct SparseCols {
    int nrows = 0;
    std::vector<SVec> cols;
    int ncols() const { return static_cast<int>(cols.size()); }
    std::size_t nnz() const;
};

// Incrementally maintained reduced row echelon basis of a subspace.
// Rows are kept fully reduced: a pivot column appears in exactly one row.
class RowSpace {
public:
    // Reduces v against the basis and, if a residual remains, adjoins it.
    // Returns true when the vector enlarged the space.
    bool insert(SVec v);

    // Residual of v after reduction (zero iff v lies in the space).
    SVec reduce(SVec v) const;

    bool contains(const SVec& v) const { return reduce(v).empty(); }

    // Coordinates of v in the stored basis (ordered as rows()).
    // Throws InternalMismatch if v is not in the space.
    QVec coords(const SVec& v) const;

    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<SVec>& rows() const { return rows_; }
    const std::map<int, int>& pivots() const { return pivots_; }

private:
    std::map<int, int> pivots_; // pivot column -> row index
    std::vector<SVec> rows_;    // leading coefficient 1
};

// Rank of a sparse matrix by exact elimination on its columns.
int rank_exact(const SparseCols& m);

// Dense exact matrix, row major.
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : ncols_(cols), rows_(rows, zero_vec(cols)) {}

    int nrows() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    Rat& at(int i, int j) { return rows_[i][j]; }
    const Rat& at(int i, int j) const { return rows_[i][j]; }
    QVec& row(int i) { return rows_[i]; }
    const QVec& row(int i) const { return rows_[i]; }
    void add_row(QVec r);

    QMat mul(const QMat& o) const;
    QMat sub(const QMat& o) const;
    bool is_zero_mat() const;
    static QMat identity(int n);

    // In-place reduced row echelon form; returns pivot columns in order.
    std::vector<int> rref();

private:
    int ncols_ = 0;
    std::vector<QVec> rows_;
};

// Basis of {x : A x = 0}; rows of A are equations over A.ncols() unknowns.
// Each basis vector has value 1 at "its" free column and 0 at the others,
// so coordinates in this basis can be read off at the free columns.
struct Nullspace {
    std::vector<QVec> basis;
    std::vector<int> free_cols;
    QVec coords(const QVec& v) const; // throws InternalMismatch if v outside
};
Nullspace nullspace(QMat a);

// Matrix applied to a dense vector.
QVec mat_apply(const QMat& a, const QVec& v);

} // namespace jhom

#endif
