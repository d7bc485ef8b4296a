#pragma once

#include <vector>

#include "altramsey/altspace.hpp"

namespace altramsey {

/// A 3-way array with square frontal slices, used to manipulate tube
/// fibres under simultaneous row/column operations.  Unlike every other
/// type here it is mutable in place: the paired-transvection stages are
/// inherently sequential basis changes, and the array records the
/// accumulated transform so a witness can be mapped back.
class ThreeWay {
public:
    ThreeWay(FieldCtx ctx, size_t side, size_t depth);

    static ThreeWay from_altspace(const AltSpace& a);
    static ThreeWay from_slices(FieldCtx ctx, const std::vector<Mat>& slices);

    const FieldCtx& ctx() const { return ctx_; }
    size_t side() const { return side_; }    // n1 = n2
    size_t depth() const { return depth_; }  // n3

    Felt at(size_t i, size_t j, size_t k) const {
        return data_[(i * side_ + j) * depth_ + k];
    }
    Felt& at(size_t i, size_t j, size_t k) {
        return data_[(i * side_ + j) * depth_ + k];
    }

    Mat frontal_slice(size_t k) const;
    std::vector<Mat> slices() const;
    /// Tube fibre at (i, j): the depth-long vector of slice entries.
    Mat tube_fibre(size_t i, size_t j) const;

    /// Congruence of every slice by I + scalar * E_{src,dst}: adds
    /// scalar * (row src) to row dst and scalar * (col src) to col dst,
    /// preserving the alternating property of every slice.  The
    /// accumulated transform T satisfies slice_k = T^T original_k T.
    void apply_paired_rowcol(size_t src, size_t dst, Felt scalar);

    const Mat& transform() const { return transform_; }

    /// True iff the C(t, 2) tube fibres at (i, j), 0 <= i < j < t, are
    /// linearly independent.  For an array built from an alternating
    /// space this is equivalent to <e_1..e_t> being a complete space.
    bool leading_block_complete(size_t t) const;

private:
    FieldCtx ctx_;
    size_t side_, depth_;
    std::vector<Felt> data_;
    Mat transform_;
};

}  // namespace altramsey
