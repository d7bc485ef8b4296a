#include "altramsey/randgen.hpp"

#include <ostream>

#include "altramsey/oracle.hpp"

namespace altramsey {

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

}  // namespace

CounterRng::CounterRng(uint64_t seed, uint64_t stream)
    : key_(mix64(seed + kGolden * (stream + 1))) {}

uint64_t CounterRng::word(uint64_t counter) const {
    return mix64(key_ ^ (counter * kGolden + 1));
}

Felt CounterRng::uniform(const FieldCtx& ctx, uint64_t counter) const {
    const uint64_t p = ctx.modulus();
    // Accept r below the largest multiple of p that fits in 64 bits.
    const uint64_t zone = UINT64_MAX - (UINT64_MAX % p + 1) % p;
    for (uint64_t attempt = 0;; ++attempt) {
        uint64_t r = word(counter * 64 + attempt);
        if (r <= zone) return Felt{static_cast<uint32_t>(r % p)};
    }
}

AltSpace gen_uniform(const GenSpec& spec) {
    FieldCtx ctx(spec.p);
    std::vector<Mat> gens;
    gens.reserve(spec.m);
    for (size_t k = 0; k < spec.m; ++k) {
        CounterRng rng(spec.seed, k);
        Mat a(ctx, spec.n, spec.n);
        for (size_t i = 0; i < spec.n; ++i) {
            for (size_t j = i + 1; j < spec.n; ++j) {
                Felt v = rng.uniform(ctx, i * spec.n + j);
                a(i, j) = v;
                a(j, i) = ctx.neg(v);
            }
        }
        gens.push_back(std::move(a));
    }
    return AltSpace(ctx, spec.n, std::move(gens));
}

BghParams bgh_params(size_t s, size_t t) {
    if (s < 2 || t < 2) throw PreconditionFailed("bgh_params: s, t >= 2");
    const size_t m = binom2(t - 1);
    const size_t n = (m + 2) * (s - 2) / 2 + 1;
    return {n, m};
}

std::pair<AltSpace, BghParams> gen_bgh_lower(size_t s, size_t t, uint32_t p,
                                             uint64_t seed) {
    BghParams params = bgh_params(s, t);
    return {gen_uniform({p, params.n, params.m, seed}), params};
}

BghReport bgh_experiment(size_t s, size_t t, uint32_t p, size_t trials,
                         uint64_t seed, uint64_t budget) {
    BghReport rep;
    rep.s = s;
    rep.t = t;
    rep.params = bgh_params(s, t);
    for (size_t trial = 0; trial < trials; ++trial) {
        // Split-stream per trial so trials stay independent of order.
        uint64_t trial_seed = seed ^ (trial * 0x100000001B3ull + 0x9E37ull);
        auto [space, params] =
            gen_bgh_lower(s, t, p, trial_seed);
        BghTrialRow row;
        row.trial = trial;
        row.alpha_isotropic = isotropic_number_exact(space, budget);
        row.alpha_complete = complete_number_exact(space, budget);
        if (row.alpha_isotropic <= s - 1) ++rep.trials_isotropic_below_s;
        if (row.alpha_complete >= t) rep.complete_side_ok = false;
        rep.rows.push_back(row);
    }
    return rep;
}

void write_bgh_csv(std::ostream& out, const BghReport& report) {
    out << "trial,alpha_isotropic,alpha_complete\n";
    for (const auto& row : report.rows)
        out << row.trial << ',' << row.alpha_isotropic << ','
            << row.alpha_complete << '\n';
}

}  // namespace altramsey
