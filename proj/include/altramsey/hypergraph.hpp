#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "altramsey/altspace.hpp"

namespace altramsey {

/// An ell-uniform hypergraph on vertex set {0, ..., n-1}.  Edges are
/// strictly increasing ell-subsets, stored deduplicated in lexicographic
/// order (which fixes the coordinate order of the associated map).
struct Hypergraph {
    size_t n = 0;
    size_t ell = 2;
    std::vector<std::vector<size_t>> edges;

    static Hypergraph make(size_t n, size_t ell,
                           std::vector<std::vector<size_t>> edges);

    /// Text format: first line "n ell", then one edge per line as
    /// space-separated 1-based vertex indices.
    static Hypergraph parse(std::istream& in);
    void write(std::ostream& out) const;

    size_t edge_count() const { return edges.size(); }
};

/// The alternating ell-linear map of a hypergraph, kept implicit: the
/// coordinate for edge {i_1 < ... < i_ell} evaluates the wedge
/// e*_{i_1} ^ ... ^ e*_{i_ell}, i.e. the determinant of the ell x ell
/// submatrix of [v_1 ... v_ell] with rows indexed by the edge.  Never
/// materialised as an n^ell array; only evaluations are needed.
class MultilinearMap {
public:
    explicit MultilinearMap(Hypergraph h) : h_(std::move(h)) {}

    const Hypergraph& hypergraph() const { return h_; }
    size_t arity() const { return h_.ell; }
    size_t out_dim() const { return h_.edges.size(); }

    /// phi(v_1, ..., v_ell) as an m x 1 column, coordinates in edge order.
    Mat evaluate(const std::vector<Mat>& args) const;

private:
    Hypergraph h_;
};

MultilinearMap lovasz_map(const Hypergraph& h);

/// For ell = 2 only: one elementary alternating generator per edge.
/// Throws NotGraph otherwise.
AltSpace to_altspace(const Hypergraph& h, FieldCtx ctx);

/// Exact independence number by subset enumeration with pruning.
/// Throws TooLarge when n exceeds the cap.
size_t independence_number(const Hypergraph& h, size_t cap = 20);

/// Max dim of a subspace on which the map vanishes, by descending-d
/// subspace enumeration over GF(q).  Checking ell-subsets of a basis
/// suffices by multilinearity and the alternating property.
size_t isotropic_number_multilinear(const MultilinearMap& map, FieldCtx q,
                                    uint64_t budget = 10'000'000);

struct PropAlphaReport {
    size_t alpha_h = 0;
    size_t alpha_phi = 0;
    bool equal = false;
};

/// Both brute-force numbers for one hypergraph over one field.
PropAlphaReport check_prop_alpha(const Hypergraph& h, FieldCtx q,
                                 uint64_t budget = 10'000'000);

}  // namespace altramsey
