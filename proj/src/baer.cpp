#include "altramsey/baer.hpp"

#include <unordered_set>

namespace altramsey {

BaerGroup::BaerGroup(AltSpace phi, uint64_t budget)
    : phi_(std::move(phi)), half_(0), order_(1), budget_(budget) {
    const uint32_t p = phi_.ctx().modulus();
    if (p == 2)
        throw EvenCharacteristic("BaerGroup: 1/2 undefined in GF(2)");
    half_ = phi_.ctx().inv(Felt{2});
    for (size_t i = 0; i < n() + m(); ++i) {
        order_ *= p;
        if (order_ > budget_)
            throw BudgetExceeded("BaerGroup: p^(n+m) exceeds budget");
    }
}

GroupElem BaerGroup::identity() const {
    return {Mat(ctx(), n(), 1), Mat(ctx(), m(), 1)};
}

GroupElem BaerGroup::mul(const GroupElem& a, const GroupElem& b) const {
    Mat v = a.v + b.v;
    Mat u = a.u + b.u + phi_.apply(a.v, b.v).scaled(half_);
    return {std::move(v), std::move(u)};
}

GroupElem BaerGroup::inverse(const GroupElem& a) const {
    // phi(v, v) = 0, so (v, u)^-1 = (-v, -u).
    return {a.v.negated(), a.u.negated()};
}

GroupElem BaerGroup::power(const GroupElem& a, uint64_t k) const {
    GroupElem acc = identity();
    for (uint64_t i = 0; i < k; ++i) acc = mul(acc, a);
    return acc;
}

GroupElem BaerGroup::commutator(const GroupElem& a, const GroupElem& b) const {
    return mul(mul(inverse(a), inverse(b)), mul(a, b));
}

GroupElem BaerGroup::lift(const Mat& v) const {
    if (v.rows() != n() || v.cols() != 1) throw ShapeMismatch("lift");
    return {v, Mat(ctx(), m(), 1)};
}

uint64_t BaerGroup::encode(const GroupElem& a) const {
    uint64_t idx = 0;
    const uint32_t p = ctx().modulus();
    for (size_t i = 0; i < n(); ++i) idx = idx * p + a.v(i, 0).v;
    for (size_t i = 0; i < m(); ++i) idx = idx * p + a.u(i, 0).v;
    return idx;
}

GroupElem BaerGroup::element_at(uint64_t index) const {
    const uint32_t p = ctx().modulus();
    GroupElem e = identity();
    for (size_t i = m(); i-- > 0;) {
        e.u(i, 0) = Felt{static_cast<uint32_t>(index % p)};
        index /= p;
    }
    for (size_t i = n(); i-- > 0;) {
        e.v(i, 0) = Felt{static_cast<uint32_t>(index % p)};
        index /= p;
    }
    return e;
}

uint64_t BaerGroup::subgroup_order(const std::vector<GroupElem>& gens) const {
    std::unordered_set<uint64_t> seen;
    std::vector<GroupElem> frontier{identity()};
    seen.insert(encode(identity()));
    while (!frontier.empty()) {
        GroupElem cur = frontier.back();
        frontier.pop_back();
        for (const GroupElem& g : gens) {
            for (const GroupElem& next : {mul(cur, g), mul(cur, inverse(g))}) {
                if (seen.insert(encode(next)).second) {
                    if (seen.size() > budget_)
                        throw BudgetExceeded("subgroup closure over budget");
                    frontier.push_back(next);
                }
            }
        }
    }
    return seen.size();
}

LawsReport check_laws(const BaerGroup& g) {
    LawsReport rep;
    const FieldCtx& F = g.ctx();
    const uint32_t p = F.modulus();
    const size_t n = g.n(), m = g.m();

    // Generator lifts plus central generators span the group.
    std::vector<GroupElem> gens;
    for (size_t i = 0; i < n; ++i)
        gens.push_back(g.lift(Mat::unit_column(F, n, i)));
    for (size_t j = 0; j < m; ++j) {
        GroupElem e = g.identity();
        e.u(j, 0) = F.one();
        gens.push_back(e);
    }

    rep.closed_on_sample = true;  // closure is structural: components add

    rep.associative_on_sample = true;
    for (const auto& a : gens)
        for (const auto& b : gens)
            for (const auto& c : gens)
                if (!(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))))
                    rep.associative_on_sample = false;

    rep.class_two = true;
    for (const auto& a : gens)
        for (const auto& b : gens) {
            GroupElem c1 = g.commutator(a, b);
            for (const auto& c : gens)
                if (!(g.commutator(c1, c) == g.identity()))
                    rep.class_two = false;
        }

    // Exhaustive over small groups, strided sample otherwise.
    rep.exponent_p = true;
    const uint64_t stride =
        g.order() * p <= 4'000'000 ? 1 : g.order() / 997 + 1;
    for (uint64_t idx = 0; idx < g.order(); idx += stride) {
        if (!(g.power(g.element_at(idx), p) == g.identity())) {
            rep.exponent_p = false;
            break;
        }
    }

    rep.commutator_matches_phi = true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Mat vi = Mat::unit_column(F, n, i);
            Mat vj = Mat::unit_column(F, n, j);
            GroupElem c = g.commutator(g.lift(vi), g.lift(vj));
            if (!c.v.is_zero() || !(c.u == g.phi().apply(vi, vj)))
                rep.commutator_matches_phi = false;
        }

    // [G,G] = {0} x span(phi values); central because v-parts vanish.
    rep.commutator_subgroup_central = true;
    for (const auto& a : gens)
        for (const auto& b : gens)
            if (!g.commutator(a, b).v.is_zero())
                rep.commutator_subgroup_central = false;

    // (v, u) [G,G] depends only on v iff the phi values span F^m, which
    // for tube fibres means the generators are linearly independent.
    {
        Mat fibres(F, m, n * n);
        for (size_t k = 0; k < m; ++k)
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    fibres(k, i * n + j) = g.phi().gen(k)(i, j);
        rep.quotient_depends_only_on_v = rank(fibres) == m;
    }

    rep.ok = rep.closed_on_sample && rep.associative_on_sample &&
             rep.class_two && rep.exponent_p && rep.commutator_matches_phi &&
             rep.commutator_subgroup_central;
    return rep;
}

uint64_t free_group_order(FieldCtx ctx, size_t t) {
    // Universal instance: all C(t,2) elementary alternating matrices on
    // F^t.  Its group is generated by the t standard lifts; closure must
    // reach exactly p^(t + C(t,2)) elements.
    std::vector<Mat> gens;
    for (size_t i = 0; i < t; ++i)
        for (size_t j = i + 1; j < t; ++j) {
            Mat a(ctx, t, t);
            a(i, j) = ctx.one();
            a(j, i) = ctx.neg(ctx.one());
            gens.push_back(std::move(a));
        }
    AltSpace universal(ctx, t, std::move(gens));
    BaerGroup g(universal);
    std::vector<GroupElem> lifts;
    for (size_t i = 0; i < t; ++i)
        lifts.push_back(g.lift(Mat::unit_column(ctx, t, i)));
    uint64_t closed = g.subgroup_order(lifts);
    uint64_t expected = 1;
    for (size_t i = 0; i < t + binom2(t); ++i) expected *= ctx.modulus();
    if (closed != expected)
        throw InternalInvariantViolation("free_group_order: closure mismatch");
    return closed;
}

Corollary1Report corollary1_check(const BaerGroup& g, const Witness& w,
                                  size_t s, size_t t) {
    Corollary1Report rep;
    rep.kind = w.kind;
    rep.witness_dim = w.basis.dim();
    const size_t k = w.basis.dim();

    std::vector<GroupElem> lifts;
    for (size_t j = 0; j < k; ++j)
        lifts.push_back(g.lift(w.basis.basis().col(j)));

    if (w.kind == WitnessKind::Isotropic) {
        rep.lifts_commute = true;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                if (!(g.commutator(lifts[i], lifts[j]) == g.identity()))
                    rep.lifts_commute = false;
        rep.ok = rep.lifts_commute && k >= s;
    } else {
        rep.subgroup_order = g.subgroup_order(lifts);
        rep.expected_order = 1;
        for (size_t i = 0; i < k + binom2(k); ++i)
            rep.expected_order *= g.ctx().modulus();
        rep.ok = rep.subgroup_order == rep.expected_order && k >= t;
    }
    return rep;
}

}  // namespace altramsey
