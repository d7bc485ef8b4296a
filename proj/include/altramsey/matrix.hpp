#pragma once

#include <cstddef>
#include <vector>

#include "altramsey/field.hpp"

namespace altramsey {

/// Dense matrix over GF(p), row-major.  Exact arithmetic throughout;
/// instances in scope are small enough that dense Gaussian elimination
/// is the right tool.
class Mat {
public:
    Mat() : ctx_(2), rows_(0), cols_(0) {}
    Mat(FieldCtx ctx, size_t rows, size_t cols)
        : ctx_(ctx), rows_(rows), cols_(cols), e_(rows * cols) {}

    static Mat identity(FieldCtx ctx, size_t n);
    /// Column vector from integer entries (reduced mod p).
    static Mat column(FieldCtx ctx, const std::vector<int64_t>& entries);
    /// Standard basis column e_i (0-based) in F^n.
    static Mat unit_column(FieldCtx ctx, size_t n, size_t i);

    const FieldCtx& ctx() const { return ctx_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Felt operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    Felt& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Mat transpose() const;
    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat scaled(Felt c) const;
    Mat negated() const;

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    /// Columns [first, first+count) as a new matrix.
    Mat columns(size_t first, size_t count) const;
    Mat col(size_t j) const { return columns(j, 1); }

    void swap_rows(size_t a, size_t b);
    /// row[dst] += c * row[src]
    void add_row_multiple(size_t src, size_t dst, Felt c);
    /// col[dst] += c * col[src]
    void add_col_multiple(size_t src, size_t dst, Felt c);
    void scale_row(size_t i, Felt c);

private:
    FieldCtx ctx_;
    size_t rows_, cols_;
    std::vector<Felt> e_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

struct RrefResult {
    Mat mat;
    std::vector<size_t> pivots;  // pivot column per nonzero row, increasing
};

/// Reduced row echelon form.  First-nonzero pivoting; exact arithmetic
/// needs no pivot-magnitude strategy.
RrefResult rref(const Mat& m);

size_t rank(const Mat& m);

/// Determinant of a square matrix (Gaussian elimination).
Felt det(const Mat& m);

/// A subspace of F^n given by a full-column-rank basis matrix (n x d).
class Subspace {
public:
    /// Wrap a basis matrix, discarding dependent columns (kept order:
    /// the greedy independent subset of the given columns).
    static Subspace from_columns(const Mat& basis);
    static Subspace zero(FieldCtx ctx, size_t n);
    static Subspace full(FieldCtx ctx, size_t n);

    const FieldCtx& ctx() const { return basis_.ctx(); }
    size_t ambient_dim() const { return basis_.rows(); }
    size_t dim() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }

    /// Unique representative: RREF of the transposed basis, transposed
    /// back to column form.  Equal subspaces yield equal matrices.
    Mat canonical_basis() const;

    bool contains(const Mat& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.canonical_basis() == b.canonical_basis();
    }

private:
    explicit Subspace(Mat basis) : basis_(std::move(basis)) {}
    Mat basis_;
};

/// Basis of {v : m v = 0}, canonical (free-column construction from RREF).
Subspace kernel(const Mat& m);

/// S^perp under the standard dot product.  Can intersect S over GF(p);
/// callers must not assume complementarity.
Subspace orthogonal_complement(const Subspace& s);

/// Deterministic R with inner (+) R = outer, by greedy pivot extension
/// over outer's canonical basis.  Throws NotContained.
Subspace complement_basis(const Subspace& inner, const Subspace& outer);

/// t^T a t.  Preserves the alternating property.
Mat congruence(const Mat& a, const Mat& t);

/// Solve A X = B for X (A need not be square); throws Inconsistent if no
/// solution exists.  Returns the RREF particular solution.
Mat solve_columns(const Mat& a, const Mat& b);

}  // namespace altramsey
