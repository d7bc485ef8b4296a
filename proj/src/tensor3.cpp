#include "altramsey/tensor3.hpp"

namespace altramsey {

ThreeWay::ThreeWay(FieldCtx ctx, size_t side, size_t depth)
    : ctx_(ctx),
      side_(side),
      depth_(depth),
      data_(side * side * depth),
      transform_(Mat::identity(ctx, side)) {}

ThreeWay ThreeWay::from_altspace(const AltSpace& a) {
    return from_slices(a.ctx(), a.gens());
}

ThreeWay ThreeWay::from_slices(FieldCtx ctx, const std::vector<Mat>& slices) {
    const size_t depth = slices.size();
    const size_t side = depth == 0 ? 0 : slices[0].rows();
    ThreeWay t(ctx, side, depth);
    for (size_t k = 0; k < depth; ++k) {
        if (slices[k].rows() != side || slices[k].cols() != side)
            throw ShapeMismatch("from_slices: slice " + std::to_string(k));
        for (size_t i = 0; i < side; ++i)
            for (size_t j = 0; j < side; ++j) t.at(i, j, k) = slices[k](i, j);
    }
    return t;
}

Mat ThreeWay::frontal_slice(size_t k) const {
    if (k >= depth_) throw IndexOutOfRange("frontal_slice");
    Mat m(ctx_, side_, side_);
    for (size_t i = 0; i < side_; ++i)
        for (size_t j = 0; j < side_; ++j) m(i, j) = at(i, j, k);
    return m;
}

std::vector<Mat> ThreeWay::slices() const {
    std::vector<Mat> out;
    out.reserve(depth_);
    for (size_t k = 0; k < depth_; ++k) out.push_back(frontal_slice(k));
    return out;
}

Mat ThreeWay::tube_fibre(size_t i, size_t j) const {
    if (i >= side_ || j >= side_) throw IndexOutOfRange("tube_fibre");
    Mat v(ctx_, depth_, 1);
    for (size_t k = 0; k < depth_; ++k) v(k, 0) = at(i, j, k);
    return v;
}

void ThreeWay::apply_paired_rowcol(size_t src, size_t dst, Felt scalar) {
    if (src >= side_ || dst >= side_)
        throw IndexOutOfRange("apply_paired_rowcol");
    if (src == dst) throw IndexOutOfRange("apply_paired_rowcol: src == dst");
    if (scalar.is_zero()) return;
    for (size_t k = 0; k < depth_; ++k) {
        // row dst += scalar * row src
        for (size_t j = 0; j < side_; ++j)
            at(dst, j, k) =
                ctx_.add(at(dst, j, k), ctx_.mul(scalar, at(src, j, k)));
        // col dst += scalar * col src
        for (size_t i = 0; i < side_; ++i)
            at(i, dst, k) =
                ctx_.add(at(i, dst, k), ctx_.mul(scalar, at(i, src, k)));
    }
    transform_.add_col_multiple(src, dst, scalar);
}

bool ThreeWay::leading_block_complete(size_t t) const {
    if (t > side_) throw IndexOutOfRange("leading_block_complete: t > side");
    const size_t want = binom2(t);
    Mat stacked(ctx_, want, depth_);
    size_t r = 0;
    for (size_t i = 0; i < t; ++i)
        for (size_t j = i + 1; j < t; ++j) {
            for (size_t k = 0; k < depth_; ++k) stacked(r, k) = at(i, j, k);
            ++r;
        }
    return rank(stacked) == want;
}

}  // namespace altramsey
