#include "altramsey/matrix.hpp"

#include <algorithm>
#include <string>

namespace altramsey {

Mat Mat::identity(FieldCtx ctx, size_t n) {
    Mat m(ctx, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
    return m;
}

Mat Mat::column(FieldCtx ctx, const std::vector<int64_t>& entries) {
    Mat m(ctx, entries.size(), 1);
    for (size_t i = 0; i < entries.size(); ++i) m(i, 0) = ctx.from_int(entries[i]);
    return m;
}

Mat Mat::unit_column(FieldCtx ctx, size_t n, size_t i) {
    if (i >= n) throw IndexOutOfRange("unit_column: index " + std::to_string(i));
    Mat m(ctx, n, 1);
    m(i, 0) = ctx.one();
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](Felt x) { return x.is_zero(); });
}

Mat Mat::transpose() const {
    Mat r(ctx_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_)
        throw ShapeMismatch("mul: " + std::to_string(cols_) + " vs " +
                            std::to_string(rhs.rows_));
    Mat r(ctx_, rows_, rhs.cols_);
    const uint64_t p = ctx_.modulus();
    // Delayed reduction is safe while cols * (p-1)^2 fits in uint64.
    const bool lazy = cols_ == 0 || (p - 1) * (p - 1) <= UINT64_MAX / cols_;
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < rhs.cols_; ++j) {
            uint64_t acc = 0;
            if (lazy) {
                for (size_t k = 0; k < cols_; ++k)
                    acc += static_cast<uint64_t>((*this)(i, k).v) * rhs(k, j).v;
                acc %= p;
            } else {
                for (size_t k = 0; k < cols_; ++k) {
                    acc += static_cast<uint64_t>((*this)(i, k).v) * rhs(k, j).v % p;
                    if (acc >= (1ull << 63)) acc %= p;
                }
                acc %= p;
            }
            r(i, j) = Felt{static_cast<uint32_t>(acc)};
        }
    }
    return r;
}

Mat Mat::operator+(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("add");
    Mat r(ctx_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = ctx_.add(e_[i], rhs.e_[i]);
    return r;
}

Mat Mat::operator-(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("sub");
    Mat r(ctx_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = ctx_.sub(e_[i], rhs.e_[i]);
    return r;
}

Mat Mat::scaled(Felt c) const {
    Mat r(ctx_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = ctx_.mul(e_[i], c);
    return r;
}

Mat Mat::negated() const {
    Mat r(ctx_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = ctx_.neg(e_[i]);
    return r;
}

Mat Mat::columns(size_t first, size_t count) const {
    if (first + count > cols_) throw IndexOutOfRange("columns");
    Mat r(ctx_, rows_, count);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
    return r;
}

void Mat::swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void Mat::add_row_multiple(size_t src, size_t dst, Felt c) {
    if (src >= rows_ || dst >= rows_) throw IndexOutOfRange("add_row_multiple");
    if (c.is_zero()) return;
    for (size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) = ctx_.add((*this)(dst, j), ctx_.mul(c, (*this)(src, j)));
}

void Mat::add_col_multiple(size_t src, size_t dst, Felt c) {
    if (src >= cols_ || dst >= cols_) throw IndexOutOfRange("add_col_multiple");
    if (c.is_zero()) return;
    for (size_t i = 0; i < rows_; ++i)
        (*this)(i, dst) = ctx_.add((*this)(i, dst), ctx_.mul(c, (*this)(i, src)));
}

void Mat::scale_row(size_t i, Felt c) {
    for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = ctx_.mul((*this)(i, j), c);
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("hstack");
    Mat r(a.ctx(), a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw ShapeMismatch("vstack");
    Mat r(a.ctx(), a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

RrefResult rref(const Mat& m) {
    Mat r = m;
    const FieldCtx& F = m.ctx();
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        size_t sel = row;
        while (sel < r.rows() && r(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        r.swap_rows(row, sel);
        r.scale_row(row, F.inv(r(row, col)));
        for (size_t i = 0; i < r.rows(); ++i) {
            if (i != row && !r(i, col).is_zero())
                r.add_row_multiple(row, i, F.neg(r(i, col)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Felt det(const Mat& m) {
    if (!m.is_square()) throw ShapeMismatch("det: not square");
    const FieldCtx& F = m.ctx();
    Mat a = m;
    Felt d = F.one();
    const size_t n = a.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && a(sel, col).is_zero()) ++sel;
        if (sel == n) return F.zero();
        if (sel != col) {
            a.swap_rows(col, sel);
            d = F.neg(d);
        }
        d = F.mul(d, a(col, col));
        Felt piv_inv = F.inv(a(col, col));
        for (size_t i = col + 1; i < n; ++i) {
            if (!a(i, col).is_zero())
                a.add_row_multiple(col, i, F.neg(F.mul(a(i, col), piv_inv)));
        }
    }
    return d;
}

Subspace Subspace::from_columns(const Mat& basis) {
    // Greedy independent subset, keeping column order.
    RrefResult rr = rref(basis);
    Mat kept(basis.ctx(), basis.rows(), rr.pivots.size());
    for (size_t j = 0; j < rr.pivots.size(); ++j)
        for (size_t i = 0; i < basis.rows(); ++i)
            kept(i, j) = basis(i, rr.pivots[j]);
    return Subspace(std::move(kept));
}

Subspace Subspace::zero(FieldCtx ctx, size_t n) {
    return Subspace(Mat(ctx, n, 0));
}

Subspace Subspace::full(FieldCtx ctx, size_t n) {
    return Subspace(Mat::identity(ctx, n));
}

Mat Subspace::canonical_basis() const {
    RrefResult rr = rref(basis_.transpose());
    Mat rows_only(ctx(), rr.pivots.size(), ambient_dim());
    for (size_t i = 0; i < rr.pivots.size(); ++i)
        for (size_t j = 0; j < ambient_dim(); ++j) rows_only(i, j) = rr.mat(i, j);
    return rows_only.transpose();
}

bool Subspace::contains(const Mat& v) const {
    if (v.rows() != ambient_dim() || v.cols() != 1)
        throw ShapeMismatch("Subspace::contains");
    return rank(hstack(basis_, v)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim())
        throw ShapeMismatch("Subspace::contains");
    return rank(hstack(basis_, other.basis_)) == dim();
}

Subspace kernel(const Mat& m) {
    const FieldCtx& F = m.ctx();
    RrefResult rr = rref(m);
    const size_t n = m.cols();
    std::vector<size_t> free_cols;
    {
        std::vector<bool> is_pivot(n, false);
        for (size_t p : rr.pivots) is_pivot[p] = true;
        for (size_t j = 0; j < n; ++j)
            if (!is_pivot[j]) free_cols.push_back(j);
    }
    Mat basis(F, n, free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t f = free_cols[k];
        basis(f, k) = F.one();
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            basis(rr.pivots[i], k) = F.neg(rr.mat(i, f));
    }
    return Subspace::from_columns(basis);
}

Subspace orthogonal_complement(const Subspace& s) {
    return kernel(s.basis().transpose());
}

Subspace complement_basis(const Subspace& inner, const Subspace& outer) {
    if (inner.ambient_dim() != outer.ambient_dim())
        throw ShapeMismatch("complement_basis: ambient mismatch");
    if (!outer.contains(inner))
        throw NotContained("complement_basis: inner is not inside outer");
    Mat acc = inner.basis();
    size_t r = inner.dim();
    Mat cand = outer.canonical_basis();
    Mat picked(inner.ctx(), inner.ambient_dim(), 0);
    for (size_t j = 0; j < cand.cols() && r < outer.dim(); ++j) {
        Mat v = cand.col(j);
        Mat trial = hstack(acc, v);
        if (rank(trial) > r) {
            acc = std::move(trial);
            picked = hstack(picked, v);
            ++r;
        }
    }
    return Subspace::from_columns(picked);
}

Mat congruence(const Mat& a, const Mat& t) {
    if (!a.is_square() || a.rows() != t.rows())
        throw ShapeMismatch("congruence: need n x n and n x d");
    return t.transpose() * a * t;
}

Mat solve_columns(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve_columns");
    RrefResult rr = rref(hstack(a, b));
    const FieldCtx& F = a.ctx();
    // Any pivot falling in the b-block marks an inconsistent column.
    for (size_t p : rr.pivots)
        if (p >= a.cols()) throw Inconsistent("solve_columns: no solution");
    Mat x(F, a.cols(), b.cols());
    for (size_t i = 0; i < rr.pivots.size(); ++i)
        for (size_t j = 0; j < b.cols(); ++j)
            x(rr.pivots[i], j) = rr.mat(i, a.cols() + j);
    return x;
}

}  // namespace altramsey
