#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altramsey/matrix.hpp"

namespace altramsey {

/// An alternating matrix space A <= Lambda(n, F), given by a spanning
/// list of alternating n x n matrices.  Equivalently, the alternating
/// bilinear map phi(u, v) = (u^T A_1 v, ..., u^T A_m v).
///
/// Generators are kept exactly as given (not reduced to an independent
/// set); the solver picks specific matrices from the list by index.
class AltSpace {
public:
    /// Validates every generator: zero diagonal and A^T = -A.  Over p = 2
    /// this enforces symmetric-with-zero-diagonal, which is the condition
    /// for v^T A v = 0 in characteristic 2.  Throws NotAlternating with
    /// the offending generator index.
    AltSpace(FieldCtx ctx, size_t n, std::vector<Mat> gens);

    static AltSpace zero_space(FieldCtx ctx, size_t n) {
        return AltSpace(ctx, n, {});
    }

    const FieldCtx& ctx() const { return ctx_; }
    size_t ambient_dim() const { return n_; }
    size_t gen_count() const { return gens_.size(); }
    const std::vector<Mat>& gens() const { return gens_; }
    const Mat& gen(size_t k) const { return gens_[k]; }

    /// dim of the span of the generators, via ranks of flattened strict
    /// upper triangles.
    size_t space_dim() const;

    /// Restriction A|_W via W's basis matrix (congruence of every
    /// generator).  Result lives on F^{dim W}.
    AltSpace restricted_to(const Subspace& w) const;

    /// deg(v) = dim< A v : A in A >.
    size_t degree(const Mat& v) const;

    /// rad_A(S) = { u : u^T A v = 0 for all A in A, v in S }.
    Subspace radical_of_set(const Subspace& s) const;

    /// rad(A) = rad_A(F^n) = { v : A v = 0 for all A }.
    Subspace radical() const;

    bool is_isotropic(const Subspace& w) const;
    bool is_complete(const Subspace& w) const;

    /// phi(u, v) as an m x 1 column over F.
    Mat apply(const Mat& u, const Mat& v) const;

private:
    FieldCtx ctx_;
    size_t n_;
    std::vector<Mat> gens_;
};

enum class WitnessKind { Isotropic, Complete };

/// A claimed Ramsey witness: basis of a subspace of the original ambient
/// space, tagged with what it claims to be.
struct Witness {
    WitnessKind kind;
    Subspace basis;
};

struct VerifyReport {
    bool ok = false;
    WitnessKind kind = WitnessKind::Isotropic;
    size_t dim = 0;
    size_t measured_dim = 0;  // dim(A|_W)
    std::string detail;
};

/// Independent check of a witness against the space: uses only
/// restriction and span dimension, never the solver's internals.
/// ok iff (isotropic, dim >= s, measured 0) or
///        (complete, dim >= t, measured = C(dim, 2)).
VerifyReport verify_witness(const AltSpace& a, const Witness& w,
                            size_t s, size_t t);

size_t binom2(size_t d);

}  // namespace altramsey
