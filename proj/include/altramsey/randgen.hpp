#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "altramsey/altspace.hpp"

namespace altramsey {

/// Stateless counter-based generator: word(counter) is a pure function
/// of (seed, stream, counter), so parallel trial generation is
/// reproducible regardless of schedule.
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream);

    uint64_t word(uint64_t counter) const;

    /// Unbiased element of GF(p) by rejection; deterministic for a given
    /// counter (attempts use sub-counters).
    Felt uniform(const FieldCtx& ctx, uint64_t counter) const;

private:
    uint64_t key_;
};

struct GenSpec {
    uint32_t p;
    size_t n;
    size_t m;
    uint64_t seed;
};

/// m uniform alternating matrices: strict upper triangle i.i.d. uniform,
/// lower triangle determined, diagonal zero.  Stream per matrix index.
AltSpace gen_uniform(const GenSpec& spec);

struct BghParams {
    size_t n;
    size_t m;
};

/// Derived lower-bound parameters m = C(t-1, 2), n = (m+2)(s-2)/2 + 1
/// (integer division), then a uniform instance at that size.
BghParams bgh_params(size_t s, size_t t);
std::pair<AltSpace, BghParams> gen_bgh_lower(size_t s, size_t t, uint32_t p,
                                             uint64_t seed);

struct BghTrialRow {
    size_t trial;
    size_t alpha_isotropic;
    size_t alpha_complete;
};

struct BghReport {
    size_t s = 0, t = 0;
    BghParams params{};
    std::vector<BghTrialRow> rows;
    size_t trials_isotropic_below_s = 0;  // # trials with alpha <= s-1
    bool complete_side_ok = true;         // no dim-t complete space anywhere
};

/// Per-trial exact numbers at the derived parameters.  The isotropic
/// side is reported, not asserted: the existence guarantee behind the
/// recipe holds over algebraically closed fields, so over GF(p) the
/// fraction is empirical.  The complete side is unconditional whenever
/// m < C(t, 2).
BghReport bgh_experiment(size_t s, size_t t, uint32_t p, size_t trials,
                         uint64_t seed, uint64_t budget = 10'000'000);

/// CSV: header then one row per trial.
void write_bgh_csv(std::ostream& out, const BghReport& report);

}  // namespace altramsey
