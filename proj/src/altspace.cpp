#include "altramsey/altspace.hpp"

#include <string>

namespace altramsey {

size_t binom2(size_t d) { return d * (d - 1) / 2; }

AltSpace::AltSpace(FieldCtx ctx, size_t n, std::vector<Mat> gens)
    : ctx_(ctx), n_(n), gens_(std::move(gens)) {
    for (size_t k = 0; k < gens_.size(); ++k) {
        const Mat& a = gens_[k];
        if (a.rows() != n || a.cols() != n)
            throw NotAlternating("generator " + std::to_string(k) +
                                 ": wrong shape");
        for (size_t i = 0; i < n; ++i) {
            if (!a(i, i).is_zero())
                throw NotAlternating("generator " + std::to_string(k) +
                                     ": nonzero diagonal at " +
                                     std::to_string(i));
            for (size_t j = i + 1; j < n; ++j) {
                if (a(j, i) != ctx_.neg(a(i, j)))
                    throw NotAlternating("generator " + std::to_string(k) +
                                         ": not skew at (" + std::to_string(i) +
                                         "," + std::to_string(j) + ")");
            }
        }
    }
}

namespace {

// Strict upper triangles flattened to rows, one row per generator.
Mat flatten_upper(const AltSpace& a) {
    const size_t n = a.ambient_dim();
    Mat rows(a.ctx(), a.gen_count(), binom2(n));
    for (size_t k = 0; k < a.gen_count(); ++k) {
        size_t c = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) rows(k, c++) = a.gen(k)(i, j);
    }
    return rows;
}

}  // namespace

size_t AltSpace::space_dim() const { return rank(flatten_upper(*this)); }

AltSpace AltSpace::restricted_to(const Subspace& w) const {
    if (w.ambient_dim() != n_) throw ShapeMismatch("restricted_to");
    std::vector<Mat> rg;
    rg.reserve(gens_.size());
    for (const Mat& a : gens_) rg.push_back(congruence(a, w.basis()));
    return AltSpace(ctx_, w.dim(), std::move(rg));
}

size_t AltSpace::degree(const Mat& v) const {
    if (v.rows() != n_ || v.cols() != 1) throw ShapeMismatch("degree");
    Mat images(ctx_, n_, gens_.size());
    for (size_t k = 0; k < gens_.size(); ++k) {
        Mat av = gens_[k] * v;
        for (size_t i = 0; i < n_; ++i) images(i, k) = av(i, 0);
    }
    return rank(images);
}

Subspace AltSpace::radical_of_set(const Subspace& s) const {
    if (s.ambient_dim() != n_) throw ShapeMismatch("radical_of_set");
    // rows (A_k v_j)^T over all generators and basis vectors of s
    Mat constraints(ctx_, gens_.size() * s.dim(), n_);
    size_t r = 0;
    for (const Mat& a : gens_) {
        for (size_t j = 0; j < s.dim(); ++j) {
            Mat av = a * s.basis().col(j);
            for (size_t i = 0; i < n_; ++i) constraints(r, i) = av(i, 0);
            ++r;
        }
    }
    return kernel(constraints);
}

Subspace AltSpace::radical() const {
    return radical_of_set(Subspace::full(ctx_, n_));
}

bool AltSpace::is_isotropic(const Subspace& w) const {
    return restricted_to(w).space_dim() == 0;
}

bool AltSpace::is_complete(const Subspace& w) const {
    return restricted_to(w).space_dim() == binom2(w.dim());
}

Mat AltSpace::apply(const Mat& u, const Mat& v) const {
    if (u.rows() != n_ || v.rows() != n_ || u.cols() != 1 || v.cols() != 1)
        throw ShapeMismatch("apply");
    Mat out(ctx_, gens_.size(), 1);
    for (size_t k = 0; k < gens_.size(); ++k)
        out(k, 0) = (u.transpose() * gens_[k] * v)(0, 0);
    return out;
}

VerifyReport verify_witness(const AltSpace& a, const Witness& w,
                            size_t s, size_t t) {
    VerifyReport rep;
    rep.kind = w.kind;
    rep.dim = w.basis.dim();
    if (w.basis.ambient_dim() != a.ambient_dim()) {
        rep.detail = "ambient dimension mismatch";
        return rep;
    }
    if (rank(w.basis.basis()) != w.basis.dim()) {
        rep.detail = "basis is rank deficient";
        return rep;
    }
    rep.measured_dim = a.restricted_to(w.basis).space_dim();
    if (w.kind == WitnessKind::Isotropic) {
        rep.ok = rep.dim >= s && rep.measured_dim == 0;
        if (!rep.ok)
            rep.detail = rep.dim < s ? "dimension below s"
                                     : "restriction is not the zero space";
    } else {
        rep.ok = rep.dim >= t && rep.measured_dim == binom2(rep.dim);
        if (!rep.ok)
            rep.detail = rep.dim < t ? "dimension below t"
                                     : "restriction does not have full dimension";
    }
    return rep;
}

}  // namespace altramsey
