#include "altramsey/oracle.hpp"

#include <numeric>

namespace altramsey {

SubspaceEnumerator::SubspaceEnumerator(FieldCtx q, size_t n, size_t d)
    : q_(q), n_(n), d_(d) {
    if (d > n) {
        done_ = true;
        return;
    }
    pivots_.resize(d);
    std::iota(pivots_.begin(), pivots_.end(), size_t{0});
    build_current();
}

void SubspaceEnumerator::build_current() {
    // Free cells of the RREF shape for the current pivot profile:
    // row i may hold arbitrary values at columns j > pivots_[i] that are
    // not pivot columns themselves.
    free_cells_.clear();
    std::vector<bool> is_pivot(n_, false);
    for (size_t p : pivots_) is_pivot[p] = true;
    for (size_t i = 0; i < d_; ++i)
        for (size_t j = pivots_[i] + 1; j < n_; ++j)
            if (!is_pivot[j]) free_cells_.emplace_back(i, j);
    free_vals_.assign(free_cells_.size(), 0);
    fresh_profile_ = true;
}

bool SubspaceEnumerator::advance_free() {
    // Odometer over GF(q)^free.
    for (size_t k = 0; k < free_vals_.size(); ++k) {
        if (++free_vals_[k] < q_.modulus()) return true;
        free_vals_[k] = 0;
    }
    return false;
}

bool SubspaceEnumerator::advance_pivots() {
    // Next d-combination of {0..n-1} in lexicographic order.
    if (d_ == 0) return false;
    size_t i = d_;
    while (i-- > 0) {
        if (pivots_[i] < n_ - d_ + i) {
            ++pivots_[i];
            for (size_t j = i + 1; j < d_; ++j) pivots_[j] = pivots_[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::optional<Mat> SubspaceEnumerator::next_rows() {
    if (done_) return std::nullopt;
    if (!fresh_profile_) {
        if (!advance_free()) {
            if (!advance_pivots()) {
                done_ = true;
                return std::nullopt;
            }
            build_current();
        }
    }
    fresh_profile_ = false;
    Mat m(q_, d_, n_);
    for (size_t i = 0; i < d_; ++i) m(i, pivots_[i]) = q_.one();
    for (size_t k = 0; k < free_cells_.size(); ++k)
        m(free_cells_[k].first, free_cells_[k].second) = Felt{free_vals_[k]};
    return m;
}

std::optional<Subspace> SubspaceEnumerator::next() {
    auto rows = next_rows();
    if (!rows) return std::nullopt;
    return Subspace::from_columns(rows->transpose());
}

namespace {

// Saturating helpers so budget comparisons stay meaningful when counts
// exceed uint64.
uint64_t sat_add(uint64_t a, uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}
uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

}  // namespace

uint64_t count_subspaces(uint64_t q, size_t n, size_t d) {
    if (d > n) return 0;
    // [n d]_q = [n-1 d-1]_q + q^d [n-1 d]_q
    std::vector<std::vector<uint64_t>> g(n + 1, std::vector<uint64_t>(n + 1, 0));
    for (size_t i = 0; i <= n; ++i) g[i][0] = 1;
    for (size_t i = 1; i <= n; ++i) {
        uint64_t qd = 1;
        for (size_t j = 1; j <= i; ++j) {
            qd = sat_mul(qd, q);  // q^j
            g[i][j] = sat_add(g[i - 1][j - 1], sat_mul(qd, g[i - 1][j]));
        }
    }
    return g[n][d];
}

uint64_t count_all_subspaces(uint64_t q, size_t n) {
    uint64_t total = 0;
    for (size_t d = 0; d <= n; ++d) total = sat_add(total, count_subspaces(q, n, d));
    return total;
}

namespace {

void check_budget(const AltSpace& a, uint64_t budget) {
    if (count_all_subspaces(a.ctx().modulus(), a.ambient_dim()) > budget)
        throw BudgetExceeded("subspace enumeration over budget");
}

// Direct isotropy test on a column basis: all pairwise pairings vanish.
bool isotropic_basis(const AltSpace& a, const Mat& rows) {
    for (const Mat& g : a.gens()) {
        Mat gb = rows * g * rows.transpose();  // d x d restriction
        if (!gb.is_zero()) return false;
    }
    return true;
}

}  // namespace

size_t isotropic_number_exact(const AltSpace& a, uint64_t budget) {
    check_budget(a, budget);
    const size_t n = a.ambient_dim();
    for (size_t d = n; d >= 1; --d) {
        SubspaceEnumerator en(a.ctx(), n, d);
        while (auto rows = en.next_rows()) {
            if (isotropic_basis(a, *rows)) return d;
        }
    }
    return 0;
}

size_t complete_number_exact(const AltSpace& a, uint64_t budget) {
    auto w = find_complete_subspace(a, budget);
    return w ? w->dim() : 0;
}

std::optional<Subspace> find_complete_subspace(const AltSpace& a,
                                               uint64_t budget) {
    check_budget(a, budget);
    const size_t n = a.ambient_dim();
    const size_t dim_a = a.space_dim();
    for (size_t d = n; d >= 2; --d) {
        if (dim_a < binom2(d)) continue;  // restriction can only lose dimension
        SubspaceEnumerator en(a.ctx(), n, d);
        while (auto w = en.next()) {
            if (a.is_complete(*w)) return w;
        }
    }
    return std::nullopt;
}

MinDegreeResult min_degree_exact(const AltSpace& a, uint64_t budget) {
    const size_t n = a.ambient_dim();
    const uint64_t q = a.ctx().modulus();
    uint64_t points = 1;
    for (size_t i = 0; i < n; ++i) {
        points *= q;
        if (points > budget)
            throw BudgetExceeded("projective point sweep over budget");
    }
    if (n == 0) throw ShapeMismatch("min_degree_exact: empty space");
    // Canonical projective representatives: leading nonzero coordinate 1.
    MinDegreeResult best{n + 1, Mat(a.ctx(), n, 1)};
    std::vector<uint32_t> coord(n, 0);
    Mat v(a.ctx(), n, 1);
    // Iterate over all q^n vectors; skip non-canonical and zero ones.
    while (true) {
        size_t lead = n;
        for (size_t i = 0; i < n; ++i)
            if (coord[i] != 0) { lead = i; break; }
        if (lead < n && coord[lead] == 1) {
            for (size_t i = 0; i < n; ++i) v(i, 0) = Felt{coord[i]};
            size_t deg = a.degree(v);
            if (deg < best.degree) best = {deg, v};
            if (best.degree == 0) break;
        }
        size_t k = n;
        bool carried = true;
        while (k-- > 0) {
            if (++coord[k] < q) { carried = false; break; }
            coord[k] = 0;
        }
        if (carried) break;
    }
    return best;
}

}  // namespace altramsey
