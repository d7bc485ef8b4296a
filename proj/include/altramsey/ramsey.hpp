#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "altramsey/altspace.hpp"
#include "altramsey/tensor3.hpp"

namespace altramsey {

/// State of the isotropic-chain descent.  Each absorbed low-degree
/// vector v restricts the working space to the radical of v, which both
/// extends the isotropic chain and keeps it inside the radical of the
/// restricted space.  All bookkeeping needed to map vectors back to the
/// original coordinates travels with the state.
class DescentState {
public:
    static DescentState initial(const AltSpace& a);

    /// The working space A_i, living on the coordinates of T_i.
    const AltSpace& current() const { return current_; }
    /// Embedding of the working coordinates into the original space.
    const Mat& ambient_embed() const { return t_embed_; }
    /// Complement R_i of the chain inside the working space, in working
    /// coordinates.
    const Subspace& complement() const { return r_; }
    /// Chain vectors v_1..v_i in original coordinates.
    const std::vector<Mat>& chain() const { return chain_original_; }
    size_t round() const { return round_; }

    /// Absorb one vector (given in R-coordinates) whose degree in the
    /// restriction to R is below degree_cap.  Throws DegreeTooHigh on a
    /// caller bug; postconditions are re-checked and raise
    /// InternalInvariantViolation.
    DescentState advance(const Mat& v_in_r, size_t degree_cap) const;

private:
    DescentState(AltSpace cur, Mat t_embed, Mat s_in_current, Subspace r,
                 std::vector<Mat> chain, size_t round)
        : current_(std::move(cur)),
          t_embed_(std::move(t_embed)),
          s_in_current_(std::move(s_in_current)),
          r_(std::move(r)),
          chain_original_(std::move(chain)),
          round_(round) {}

    AltSpace current_;
    Mat t_embed_;       // n x N
    Mat s_in_current_;  // N x i, the chain in working coordinates
    Subspace r_;        // in working coordinates
    std::vector<Mat> chain_original_;
    size_t round_;
};

/// Output of the staircase stage: a full-column-rank pairing matrix Q
/// and matrices C_1..C_{t'} of Lambda(t'+1) whose i-th member is
/// supported on its leading (i+1) x (i+1) block with C_i(i, i+1) = 1
/// (1-based), together with the data that produced them.
struct StaircaseData {
    Mat q;                          // n' x (t'+1)
    std::vector<Mat> c_mats;        // t' matrices, (t'+1) x (t'+1)
    std::vector<Mat> w_vectors;     // the t'+1 columns of q
    std::vector<Felt> alphas;       // pairing scalars, one per round
    std::vector<size_t> gen_indices;  // generator picked in each round
};

/// A certified low-degree vector: the staircase stage blocked in round
/// `blocked_round` (1-based), which forces degree <= (round-1)*round.
struct LowDegreeVector {
    Mat v;  // in the coordinates of the space handed to the stage
    size_t degree;
    size_t blocked_round;
};

using StaircaseOutcome = std::variant<StaircaseData, LowDegreeVector>;

/// Staircase stage.  Either completes t' = t^2 pairing rounds (possible
/// whenever the minimum degree of b is at least degree_floor = t^4), or
/// blocks and certifies a vector of degree below degree_floor.  Both
/// outcomes are successes of the lazy driver.
StaircaseOutcome build_staircase(const AltSpace& b, size_t t_prime,
                                 size_t degree_floor);

struct PairNormalization {
    std::vector<Mat> d_mats;  // r = t + C(t,2) matrices
    Mat transform;            // invertible, applied to all inputs
};

/// Pair-isolation stage: processes the even-offset staircase matrices in
/// decreasing order so that in each, the designated row/column pair
/// carries only its +-1 entries.  Returns the r = t + C(t,2) selected
/// matrices and the accumulated congruence.
PairNormalization normalize_pair_blocks(const std::vector<Mat>& c_mats,
                                        size_t t);

struct FibreCompletion {
    std::vector<Mat> mats;  // transformed slices
    Mat transform;
    size_t injections = 0;
};

/// Fibre-completion stage: row/column operations that make all
/// C(t+1, 2) leading tube fibres linearly independent, injecting a
/// reserved pair fibre whenever a target fibre falls into the span of
/// the maintained set.
FibreCompletion complete_leading_fibres(const std::vector<Mat>& d_mats,
                                        size_t t);

struct RestartRecord {
    size_t blocked_round;  // 1-based staircase round that blocked
    size_t degree;         // certified degree of the returned vector
};

struct SolveTrace {
    size_t step1_rounds = 0;
    size_t step2_restarts = 0;
    size_t step4_injections = 0;
    std::vector<RestartRecord> restarts;
    /// Composed basis map from witness coordinates into the original
    /// space; the witness basis is its leading columns.
    Mat transform_trail;
};

/// Leading `dim` columns of the trail, canonicalized.  Throws RankLoss
/// if the columns are dependent (bug signal).
Witness extract_witness(const SolveTrace& trace, WitnessKind kind, size_t dim);

struct SolveOptions {
    /// Return a dimension-t complete witness instead of the natural
    /// dimension-(t+1) one (valid: completeness is hereditary).
    bool truncate_to_t = false;
};

struct SolveResult {
    Witness witness;
    SolveTrace trace;
};

/// Finds a verified witness: an s-dimensional totally-isotropic subspace
/// or a (t+1)-dimensional complete subspace.  Requires n >= s * t^4 and
/// s, t >= 2; larger spaces are restricted to their first s * t^4
/// coordinates.  Deterministic; every stage postcondition is checked,
/// and the result is re-verified before returning.
SolveResult solve(const AltSpace& a, size_t s, size_t t, SolveOptions = {});

}  // namespace altramsey
