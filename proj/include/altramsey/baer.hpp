#pragma once

#include <cstdint>
#include <vector>

#include "altramsey/altspace.hpp"

namespace altramsey {

/// Element of the group built from an alternating bilinear map: a pair
/// (v, u) in F_p^n x F_p^m.
struct GroupElem {
    Mat v;
    Mat u;
    friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

/// The class-2 exponent-p group attached to an alternating bilinear map
/// phi over GF(p), p odd:
///
///     (v, u) * (v', u') = (v + v', u + u' + (1/2) phi(v, v')).
///
/// Abelian subgroups correspond to totally-isotropic subspaces and
/// relatively free subgroups to complete subspaces.
class BaerGroup {
public:
    /// Throws EvenCharacteristic for p = 2 and BudgetExceeded when
    /// p^(n+m) would exceed the enumeration budget.
    explicit BaerGroup(AltSpace phi, uint64_t budget = 1'000'000);

    const AltSpace& phi() const { return phi_; }
    const FieldCtx& ctx() const { return phi_.ctx(); }
    size_t n() const { return phi_.ambient_dim(); }
    size_t m() const { return phi_.gen_count(); }
    uint64_t order() const { return order_; }

    GroupElem identity() const;
    GroupElem mul(const GroupElem& a, const GroupElem& b) const;
    GroupElem inverse(const GroupElem& a) const;
    GroupElem power(const GroupElem& a, uint64_t k) const;
    GroupElem commutator(const GroupElem& a, const GroupElem& b) const;

    /// Lift of a vector: (v, 0).
    GroupElem lift(const Mat& v) const;

    /// Subgroup generated by the given elements, by closure enumeration.
    uint64_t subgroup_order(const std::vector<GroupElem>& gens) const;

    /// Index of an element in the enumeration of all p^(n+m) elements.
    uint64_t encode(const GroupElem& a) const;
    GroupElem element_at(uint64_t index) const;

private:
    AltSpace phi_;
    Felt half_;
    uint64_t order_;
    uint64_t budget_;
};

struct LawsReport {
    bool closed_on_sample = false;
    bool associative_on_sample = false;
    bool class_two = false;        // [[x, y], z] = id on generator triples
    bool exponent_p = false;       // x^p = id on all elements in budget
    bool commutator_matches_phi = false;  // [(v,0),(v',0)] = (0, phi(v,v'))
    bool commutator_subgroup_central = false;
    bool quotient_depends_only_on_v = false;  // (v,u)[G,G] determined by v
    bool ok = false;
};

/// Exhaustive / generator-based law checks within the budget.
LawsReport check_laws(const BaerGroup& g);

/// |F_{p,2,t}| = p^(t + C(t,2)): the relatively free group on t
/// generators.  Certified by brute force: the group of the full
/// elementary alternating map on F_p^t is generated by its t standard
/// lifts and has exactly that order.
uint64_t free_group_order(FieldCtx ctx, size_t t);

struct Corollary1Report {
    bool ok = false;
    WitnessKind kind = WitnessKind::Isotropic;
    size_t witness_dim = 0;
    bool lifts_commute = false;        // isotropic side
    uint64_t subgroup_order = 0;       // complete side
    uint64_t expected_order = 0;       // p^(k + C(k,2))
};

/// Realizes the correspondence on a concrete witness: isotropic lifts
/// commute pairwise; a complete witness generates a subgroup of the
/// relatively free order p^(k + C(k,2)).
Corollary1Report corollary1_check(const BaerGroup& g, const Witness& w,
                                  size_t s, size_t t);

}  // namespace altramsey
