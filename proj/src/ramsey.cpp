#include "altramsey/ramsey.hpp"

#include <string>

namespace altramsey {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw InternalInvariantViolation(what);
}

size_t checked_pow4(size_t t) {
    return t * t * t * t;
}

}  // namespace

DescentState DescentState::initial(const AltSpace& a) {
    const size_t n = a.ambient_dim();
    return DescentState(a, Mat::identity(a.ctx(), n), Mat(a.ctx(), n, 0),
                        Subspace::full(a.ctx(), n), {}, 0);
}

DescentState DescentState::advance(const Mat& v_in_r, size_t degree_cap) const {
    const FieldCtx& F = current_.ctx();
    if (v_in_r.rows() != r_.dim() || v_in_r.cols() != 1)
        throw ShapeMismatch("advance: vector not in R-coordinates");
    if (v_in_r.is_zero()) throw DegreeTooHigh("advance: zero vector");

    // Lift into working coordinates.  Because the chain sits inside the
    // radical of the working space, degrees in the restriction to R and
    // in the working space agree for vectors of R.
    Mat v_cur = r_.basis() * v_in_r;
    const size_t deg = current_.degree(v_cur);
    if (deg >= degree_cap)
        throw DegreeTooHigh("advance: degree " + std::to_string(deg) +
                            " not below " + std::to_string(degree_cap));

    Subspace v_span = Subspace::from_columns(v_cur);
    Subspace t_new = current_.radical_of_set(v_span);
    require(t_new.dim() == current_.ambient_dim() - deg,
            "descent: radical dimension mismatch");

    Mat s_new_cur = hstack(s_in_current_, v_cur);
    require(rank(s_new_cur) == round_ + 1, "descent: chain lost independence");
    require(t_new.contains(Subspace::from_columns(s_new_cur)),
            "descent: chain escaped the radical");

    // Re-express everything in the coordinates of the new working space.
    const Mat& b = t_new.basis();
    Mat s_in_new = solve_columns(b, s_new_cur);
    AltSpace a_new = current_.restricted_to(t_new);
    Mat t_embed_new = t_embed_ * b;

    for (size_t j = 0; j <= round_; ++j)
        require(a_new.degree(s_in_new.col(j)) == 0,
                "descent: chain not in radical of restricted space");

    Subspace r_new = complement_basis(
        Subspace::from_columns(s_in_new),
        Subspace::full(F, t_new.dim()));

    std::vector<Mat> chain = chain_original_;
    chain.push_back(t_embed_ * v_cur);

    return DescentState(std::move(a_new), std::move(t_embed_new),
                        std::move(s_in_new), std::move(r_new),
                        std::move(chain), round_ + 1);
}

StaircaseOutcome build_staircase(const AltSpace& b, size_t t_prime,
                                 size_t degree_floor) {
    const FieldCtx& F = b.ctx();
    const size_t n = b.ambient_dim();
    const size_t m = b.gen_count();

    std::vector<Mat> w;                  // w_1, w_2, ... as columns
    std::vector<size_t> gen_indices;     // chosen generator per round
    std::vector<Felt> alphas;
    Mat constraints(F, 0, n);            // rows (B_j w_k)^T accumulated

    w.push_back(Mat::unit_column(F, n, 0));

    for (size_t round = 1; round <= t_prime; ++round) {
        const Mat& w_i = w.back();

        // Pairing functionals u -> w_i^T B_j u for every generator.
        std::vector<Mat> pair_rows;
        pair_rows.reserve(m);
        for (size_t j = 0; j < m; ++j)
            pair_rows.push_back(w_i.transpose() * b.gen(j));

        // T_i = orthogonal complement of all accumulated B_j w_k.
        Subspace t_space = kernel(constraints);

        // First canonical basis vector of T_i that pairs nontrivially
        // with w_i, and the first generator witnessing it.
        Mat t_basis = t_space.canonical_basis();
        size_t found_col = t_basis.cols();
        size_t found_gen = m;
        for (size_t c = 0; c < t_basis.cols() && found_col == t_basis.cols();
             ++c) {
            Mat u = t_basis.col(c);
            for (size_t j = 0; j < m; ++j) {
                if (!(pair_rows[j] * u)(0, 0).is_zero()) {
                    found_col = c;
                    found_gen = j;
                    break;
                }
            }
        }

        if (found_col == t_basis.cols()) {
            // Blocked: T_i lies in the radical of w_i, so the degree of
            // w_i is at most n - dim(T_i) <= (round-1) * round.
            const size_t deg = b.degree(w_i);
            require(deg <= (round - 1) * round,
                    "staircase: blocked without a low-degree certificate");
            require(deg < degree_floor, "staircase: certificate above floor");
            return LowDegreeVector{w_i, deg, round};
        }

        Mat w_next = t_basis.col(found_col);
        const Mat& b_i = b.gen(found_gen);
        Felt alpha = (w_i.transpose() * b_i * w_next)(0, 0);
        require(!alpha.is_zero(), "staircase: vanishing pairing scalar");

        // Extend the constraint rows to all pairs (B_j, w_k) with the
        // new generator and the new vector.
        w.push_back(w_next);
        gen_indices.push_back(found_gen);
        alphas.push_back(alpha);
        Mat extra(F, 0, n);
        for (size_t k = 0; k < w.size(); ++k)
            extra = vstack(extra, (b_i * w[k]).transpose());
        for (size_t j = 0; j + 1 < gen_indices.size(); ++j)
            extra = vstack(extra, (b.gen(gen_indices[j]) * w_next).transpose());
        constraints = vstack(constraints, extra);

        // The span of the w's must stay clear of the new T.
        Mat w_mat(F, n, w.size());
        for (size_t k = 0; k < w.size(); ++k)
            for (size_t i = 0; i < n; ++i) w_mat(i, k) = w[k](i, 0);
        Subspace t_next = kernel(constraints);
        require(rank(hstack(t_next.basis(), w_mat)) ==
                    t_next.dim() + w.size(),
                "staircase: T intersects the span of the w's");
    }

    // Assemble Q and the normalized staircase matrices.
    StaircaseData sd;
    sd.q = Mat(F, n, t_prime + 1);
    for (size_t k = 0; k <= t_prime; ++k)
        for (size_t i = 0; i < n; ++i) sd.q(i, k) = w[k](i, 0);
    require(rank(sd.q) == t_prime + 1, "staircase: Q lost rank");
    sd.w_vectors = std::move(w);
    sd.alphas = alphas;
    sd.gen_indices = gen_indices;

    for (size_t i = 0; i < t_prime; ++i) {
        Mat scaled = b.gen(gen_indices[i]).scaled(F.inv(alphas[i]));
        Mat c = congruence(scaled, sd.q);
        // Staircase shape: support in the leading (i+2) x (i+2) block
        // (0-based: rows/cols <= i+1), unit superdiagonal pivot.
        require(c(i, i + 1) == F.one(), "staircase: pivot not 1");
        for (size_t row = 0; row < c.rows(); ++row)
            for (size_t col = i + 2; col < c.cols(); ++col)
                require(c(row, col).is_zero(),
                        "staircase: support beyond leading block");
        sd.c_mats.push_back(std::move(c));
    }

    // The generators picked in distinct rounds are linearly independent.
    {
        Mat flat(F, t_prime, (t_prime + 1) * (t_prime + 1));
        for (size_t i = 0; i < t_prime; ++i)
            for (size_t r = 0; r < t_prime + 1; ++r)
                for (size_t cidx = 0; cidx < t_prime + 1; ++cidx)
                    flat(i, r * (t_prime + 1) + cidx) = sd.c_mats[i](r, cidx);
        require(rank(flat) == t_prime,
                "staircase: selected matrices are dependent");
    }
    return sd;
}

PairNormalization normalize_pair_blocks(const std::vector<Mat>& c_mats,
                                        size_t t) {
    const size_t t_prime = t * t;
    if (c_mats.size() != t_prime)
        throw ShapeViolation("pair normalization: expected t^2 matrices");
    const FieldCtx& F = c_mats[0].ctx();
    const size_t side = t_prime + 1;
    const size_t pair_count = binom2(t);

    for (size_t i = 0; i < t_prime; ++i) {
        const Mat& c = c_mats[i];
        if (c.rows() != side || c.cols() != side)
            throw ShapeViolation("pair normalization: bad slice shape");
        if (c(i, i + 1) != F.one())
            throw ShapeViolation("pair normalization: missing unit pivot");
        for (size_t row = 0; row < side; ++row)
            for (size_t col = i + 2; col < side; ++col)
                if (!c(row, col).is_zero())
                    throw ShapeViolation(
                        "pair normalization: staircase shape violated");
    }

    ThreeWay arr = ThreeWay::from_slices(F, c_mats);

    // Clear the pair rows/columns of slice t + 2i (1-based), for i from
    // C(t,2) down to 1.  Decreasing order keeps already-processed slices
    // clean and leaves lower slices untouched (their pair rows are zero
    // there).  0-based: slice index t + 2i - 1, pair rows t+2i-1, t+2i.
    for (size_t i = pair_count; i >= 1; --i) {
        const size_t slice = t + 2 * i - 1;
        const size_t ra = t + 2 * i - 1;  // carries the +1 at (ra, rb)
        const size_t rb = t + 2 * i;
        require(arr.at(ra, rb, slice) == F.one(),
                "pair normalization: pivot disturbed");
        for (size_t col = 0; col < side; ++col) {
            if (col == ra || col == rb) continue;
            Felt v = arr.at(ra, col, slice);
            if (!v.is_zero()) arr.apply_paired_rowcol(rb, col, F.neg(v));
        }
        for (size_t col = 0; col < side; ++col) {
            if (col == ra || col == rb) continue;
            Felt v = arr.at(rb, col, slice);
            if (!v.is_zero()) arr.apply_paired_rowcol(ra, col, v);
        }
        // Row/column pair now carries only the +-1 entries.
        for (size_t col = 0; col < side; ++col) {
            if (col != rb)
                require(arr.at(ra, col, slice).is_zero(),
                        "pair normalization: residue in pair row");
            if (col != ra)
                require(arr.at(rb, col, slice).is_zero(),
                        "pair normalization: residue in pair row");
        }
    }

    // Exact final form of every pair slice: from its pair rows on,
    // nothing but the +-1 at (ra, rb) and (rb, ra).
    for (size_t i = 1; i <= pair_count; ++i) {
        const size_t slice = t + 2 * i - 1;
        const size_t ra = t + 2 * i - 1;
        const size_t rb = t + 2 * i;
        for (size_t row = ra; row < side; ++row) {
            for (size_t col = 0; col < side; ++col) {
                Felt v = arr.at(row, col, slice);
                if (row == ra && col == rb)
                    require(v == F.one(), "pair normalization: final pivot");
                else if (row == rb && col == ra)
                    require(v == F.neg(F.one()),
                            "pair normalization: final pivot mirror");
                else
                    require(v.is_zero(),
                            "pair normalization: slice left the target form");
            }
        }
    }

    PairNormalization out;
    out.transform = arr.transform();
    // Keep the first t slices and the even-offset pair slices.
    for (size_t i = 0; i < t; ++i) out.d_mats.push_back(arr.frontal_slice(i));
    for (size_t i = 1; i <= pair_count; ++i)
        out.d_mats.push_back(arr.frontal_slice(t + 2 * i - 1));

    // Unit pivots of the low slices survive: the operations only ever
    // added rows/columns with index >= t+1 (0-based), which are zero in
    // those slices.
    for (size_t i = 0; i < t; ++i)
        require(out.d_mats[i](i, i + 1) == F.one(),
                "pair normalization: low pivot destroyed");
    return out;
}

namespace {

// Fibre positions (0-based) and helpers for the completion stage.
struct FibrePlan {
    size_t t;
    size_t pair_count;
    // Non-adjacent target pairs (i, j), j >= i+2, within the leading
    // t+1 block, ordered by (j, i): (0,2), (0,3), (1,3), (0,4), ...
    std::vector<std::pair<size_t, size_t>> targets;

    explicit FibrePlan(size_t t_) : t(t_), pair_count(binom2(t_)) {
        for (size_t j = 2; j <= t; ++j)
            for (size_t i = 0; i + 2 <= j; ++i) targets.emplace_back(i, j);
    }

    // Reserved pair fibre for round k (0-based): rows t+2k+1, t+2k+2
    // in 0-based indexing.
    std::pair<size_t, size_t> reserve(size_t k) const {
        return {t + 2 * k + 1, t + 2 * k + 2};
    }
};

bool fibres_independent(const ThreeWay& arr,
                        const std::vector<std::pair<size_t, size_t>>& at) {
    Mat stacked(arr.ctx(), at.size(), arr.depth());
    for (size_t r = 0; r < at.size(); ++r)
        for (size_t k = 0; k < arr.depth(); ++k)
            stacked(r, k) = arr.at(at[r].first, at[r].second, k);
    return rank(stacked) == at.size();
}

}  // namespace

FibreCompletion complete_leading_fibres(const std::vector<Mat>& d_mats,
                                        size_t t) {
    const size_t r_count = t + binom2(t);
    if (d_mats.size() != r_count)
        throw ShapeViolation("fibre completion: expected t + C(t,2) slices");
    const FieldCtx& F = d_mats[0].ctx();
    ThreeWay arr = ThreeWay::from_slices(F, d_mats);
    FibrePlan plan(t);

    // Adjacent fibres within the leading block.
    std::vector<std::pair<size_t, size_t>> adjacent;
    for (size_t i = 0; i < t; ++i) adjacent.emplace_back(i, i + 1);

    // Entry invariant: adjacent fibres plus all reserved pair fibres.
    {
        auto set = adjacent;
        for (size_t k = 0; k < plan.pair_count; ++k)
            set.push_back(plan.reserve(k));
        if (!fibres_independent(arr, set))
            throw ShapeViolation(
                "fibre completion: entry fibres not independent");
    }

    FibreCompletion out;
    for (size_t k = 0; k < plan.pair_count; ++k) {
        // Candidate set: adjacent + settled targets + this round's
        // target + the still-reserved later pair fibres.
        auto candidate = adjacent;
        for (size_t j = 0; j <= k; ++j) candidate.push_back(plan.targets[j]);
        for (size_t j = k + 1; j < plan.pair_count; ++j)
            candidate.push_back(plan.reserve(j));

        if (!fibres_independent(arr, candidate)) {
            // Inject the reserved pair fibre into the target fibre.  Any
            // spill into the maintained fibres lands in the span of the
            // later reserved fibres, so independence is preserved; this
            // is re-checked directly below.
            auto [src_a, src_b] = plan.reserve(k);
            auto [ti, tj] = plan.targets[k];
            arr.apply_paired_rowcol(src_a, ti, F.one());
            arr.apply_paired_rowcol(src_b, tj, F.one());
            ++out.injections;
            require(fibres_independent(arr, candidate),
                    "fibre completion: injection failed to free the target");
        }
    }

    // All leading fibres are now independent.
    require(arr.leading_block_complete(t + 1),
            "fibre completion: leading block not complete");
    out.mats = arr.slices();
    out.transform = arr.transform();
    return out;
}

Witness extract_witness(const SolveTrace& trace, WitnessKind kind,
                        size_t dim) {
    if (dim > trace.transform_trail.cols())
        throw RankLoss("extract_witness: trail too narrow");
    Mat basis = trace.transform_trail.columns(0, dim);
    if (rank(basis) != dim)
        throw RankLoss("extract_witness: witness basis lost rank");
    Subspace w = Subspace::from_columns(basis);
    return Witness{kind, Subspace::from_columns(w.canonical_basis())};
}

SolveResult solve(const AltSpace& a, size_t s, size_t t, SolveOptions opts) {
    if (s < 2 || t < 2)
        throw PreconditionFailed("solve: require s, t >= 2");
    const size_t d = checked_pow4(t);
    const size_t needed = s * d;
    const size_t n = a.ambient_dim();
    if (n < needed)
        throw PreconditionFailed(
            "solve: ambient dimension " + std::to_string(n) +
            " below s * t^4 = " + std::to_string(needed));

    const FieldCtx& F = a.ctx();

    // Work in the first s * t^4 coordinates; lift back at the end.
    Mat outer_embed = Mat::identity(F, n).columns(0, needed);
    const AltSpace* work = &a;
    AltSpace restricted_holder = AltSpace::zero_space(F, 0);
    if (needed < n) {
        restricted_holder =
            a.restricted_to(Subspace::from_columns(outer_embed));
        work = &restricted_holder;
    }

    SolveTrace trace;
    DescentState state = DescentState::initial(*work);
    const size_t t_prime = t * t;

    while (true) {
        if (state.round() == s - 1) {
            // The chain only needs one more vector, and anything nonzero
            // in the complement works.
            Mat last = state.ambient_embed() *
                       state.complement().canonical_basis().col(0);
            Mat basis(F, work->ambient_dim(), s);
            for (size_t j = 0; j + 1 < s; ++j)
                for (size_t i = 0; i < work->ambient_dim(); ++i)
                    basis(i, j) = state.chain()[j](i, 0);
            for (size_t i = 0; i < work->ambient_dim(); ++i)
                basis(i, s - 1) = last(i, 0);
            trace.step1_rounds = state.round();
            trace.transform_trail =
                needed < n ? outer_embed * basis : basis;
            SolveResult res{extract_witness(trace, WitnessKind::Isotropic, s),
                            trace};
            VerifyReport rep = verify_witness(a, res.witness, s, t);
            require(rep.ok, "solve: isotropic witness failed verification");
            return res;
        }

        AltSpace b = state.current().restricted_to(state.complement());
        require(b.ambient_dim() >= 2 * d,
                "solve: complement dimension budget violated");

        StaircaseOutcome outcome = build_staircase(b, t_prime, d);
        if (auto* low = std::get_if<LowDegreeVector>(&outcome)) {
            trace.restarts.push_back({low->blocked_round, low->degree});
            ++trace.step2_restarts;
            state = state.advance(low->v, d);
            continue;
        }

        auto& sd = std::get<StaircaseData>(outcome);
        PairNormalization pn = normalize_pair_blocks(sd.c_mats, t);
        FibreCompletion fc = complete_leading_fibres(pn.d_mats, t);
        trace.step1_rounds = state.round();
        trace.step4_injections = fc.injections;

        // witness coords -> b coords -> working coords -> original.
        Mat into_work = state.ambient_embed() * state.complement().basis() *
                        sd.q * pn.transform * fc.transform;
        trace.transform_trail = needed < n ? outer_embed * into_work : into_work;

        Witness big = extract_witness(trace, WitnessKind::Complete, t + 1);
        VerifyReport rep_big = verify_witness(a, big, s, t);
        require(rep_big.ok, "solve: complete witness failed verification");
        Witness final_w = big;
        if (opts.truncate_to_t) {
            // Any t columns of a complete basis span a complete subspace.
            final_w = Witness{
                WitnessKind::Complete,
                Subspace::from_columns(big.basis.canonical_basis().columns(0, t))};
            VerifyReport rep = verify_witness(a, final_w, s, t);
            require(rep.ok, "solve: truncated witness failed verification");
        }
        return SolveResult{final_w, trace};
    }
}

}  // namespace altramsey
