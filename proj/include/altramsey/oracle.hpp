#pragma once

#include <cstdint>
#include <optional>

#include "altramsey/altspace.hpp"

namespace altramsey {

/// Enumerates every d-dimensional subspace of F_q^n exactly once, as
/// canonical d x n RREF row matrices: one pivot-column profile at a
/// time, free entries in odometer order.  No dedup memory needed.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(FieldCtx q, size_t n, size_t d);

    /// Next canonical basis matrix (rows span the subspace), or nullopt.
    std::optional<Mat> next_rows();
    /// Same subspace as a column-basis Subspace.
    std::optional<Subspace> next();

private:
    void build_current();
    bool advance_free();
    bool advance_pivots();

    FieldCtx q_;
    size_t n_, d_;
    std::vector<size_t> pivots_;              // current pivot profile
    std::vector<std::pair<size_t, size_t>> free_cells_;
    std::vector<uint32_t> free_vals_;
    bool done_ = false;
    bool fresh_profile_ = true;
};

/// Gaussian binomial [n choose d]_q via the q-Pascal recurrence.
uint64_t count_subspaces(uint64_t q, size_t n, size_t d);

/// Total number of subspaces of all dimensions 0..n.
uint64_t count_all_subspaces(uint64_t q, size_t n);

/// Exact totally-isotropic number by descending-dimension enumeration.
size_t isotropic_number_exact(const AltSpace& a,
                              uint64_t budget = 10'000'000);

/// Exact max dimension of a complete subspace of dim >= 2 (0 if none).
size_t complete_number_exact(const AltSpace& a,
                             uint64_t budget = 10'000'000);

/// Some complete subspace of maximal dimension >= 2, if one exists.
std::optional<Subspace> find_complete_subspace(const AltSpace& a,
                                               uint64_t budget = 10'000'000);

struct MinDegreeResult {
    size_t degree;
    Mat argmin;  // a nonzero vector attaining it
};

/// delta(A) by a sweep over canonical projective points.
MinDegreeResult min_degree_exact(const AltSpace& a,
                                 uint64_t budget = 10'000'000);

}  // namespace altramsey
