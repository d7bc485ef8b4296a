#include "altramsey/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "altramsey/oracle.hpp"

namespace altramsey {

Hypergraph Hypergraph::make(size_t n, size_t ell,
                            std::vector<std::vector<size_t>> edges) {
    if (ell < 2) throw MalformedInput("hypergraph: ell must be >= 2");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (e.size() != ell)
            throw MalformedInput("hypergraph: edge of size " +
                                 std::to_string(e.size()) + ", expected " +
                                 std::to_string(ell));
        for (size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i] == e[i + 1])
                throw MalformedInput("hypergraph: repeated vertex in edge");
        if (e.back() >= n) throw MalformedInput("hypergraph: vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph{n, ell, std::move(edges)};
}

Hypergraph Hypergraph::parse(std::istream& in) {
    size_t n = 0, ell = 0;
    std::string line;
    if (!std::getline(in, line))
        throw MalformedInput("hypergraph: empty input");
    {
        std::istringstream head(line);
        if (!(head >> n >> ell))
            throw MalformedInput("hypergraph: first line must be \"n ell\"");
    }
    std::vector<std::vector<size_t>> edges;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream row(line);
        std::vector<size_t> edge;
        long long v;
        while (row >> v) {
            if (v < 1 || static_cast<size_t>(v) > n)
                throw MalformedInput("hypergraph line " + std::to_string(lineno) +
                                     ": vertex " + std::to_string(v) +
                                     " out of range 1.." + std::to_string(n));
            edge.push_back(static_cast<size_t>(v) - 1);
        }
        if (edge.empty()) continue;  // blank line
        edges.push_back(std::move(edge));
    }
    return make(n, ell, std::move(edges));
}

void Hypergraph::write(std::ostream& out) const {
    out << n << ' ' << ell << '\n';
    for (const auto& e : edges) {
        for (size_t i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << (e[i] + 1);
        out << '\n';
    }
}

Mat MultilinearMap::evaluate(const std::vector<Mat>& args) const {
    if (args.empty()) throw ShapeMismatch("evaluate: no arguments");
    const FieldCtx& F = args[0].ctx();
    if (args.size() != h_.ell)
        throw ShapeMismatch("evaluate: expected " + std::to_string(h_.ell) +
                            " arguments");
    for (const Mat& v : args)
        if (v.rows() != h_.n || v.cols() != 1)
            throw ShapeMismatch("evaluate: argument shape");
    Mat out(F, h_.edges.size(), 1);
    Mat sub(F, h_.ell, h_.ell);
    for (size_t k = 0; k < h_.edges.size(); ++k) {
        for (size_t r = 0; r < h_.ell; ++r)
            for (size_t c = 0; c < h_.ell; ++c)
                sub(r, c) = args[c](h_.edges[k][r], 0);
        out(k, 0) = det(sub);
    }
    return out;
}

MultilinearMap lovasz_map(const Hypergraph& h) { return MultilinearMap(h); }

AltSpace to_altspace(const Hypergraph& h, FieldCtx ctx) {
    if (h.ell != 2)
        throw NotGraph("to_altspace: ell = " + std::to_string(h.ell));
    std::vector<Mat> gens;
    gens.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        Mat a(ctx, h.n, h.n);
        a(e[0], e[1]) = ctx.one();
        a(e[1], e[0]) = ctx.neg(ctx.one());
        gens.push_back(std::move(a));
    }
    return AltSpace(ctx, h.n, std::move(gens));
}

namespace {

struct IndependenceSearch {
    size_t n;
    std::vector<std::vector<uint32_t>> edges_by_max;  // bitmasks
    size_t best = 0;

    void dfs(size_t v, uint32_t chosen, size_t count) {
        if (count + (n - v) <= best) return;
        if (v == n) {
            best = std::max(best, count);
            return;
        }
        const uint32_t with_v = chosen | (1u << v);
        bool ok = true;
        for (uint32_t e : edges_by_max[v]) {
            if ((e & with_v) == e) { ok = false; break; }
        }
        if (ok) dfs(v + 1, with_v, count + 1);
        dfs(v + 1, chosen, count);
    }
};

}  // namespace

size_t independence_number(const Hypergraph& h, size_t cap) {
    if (h.n > cap || h.n > 32)
        throw TooLarge("independence_number: n = " + std::to_string(h.n) +
                       " exceeds cap " + std::to_string(std::min<size_t>(cap, 32)));
    IndependenceSearch s;
    s.n = h.n;
    s.edges_by_max.resize(h.n);
    for (const auto& e : h.edges) {
        uint32_t mask = 0;
        for (size_t v : e) mask |= 1u << v;
        s.edges_by_max[e.back()].push_back(mask);
    }
    s.dfs(0, 0, 0);
    return s.best;
}

size_t isotropic_number_multilinear(const MultilinearMap& map, FieldCtx q,
                                    uint64_t budget) {
    const Hypergraph& h = map.hypergraph();
    const size_t n = h.n;
    if (count_all_subspaces(q.modulus(), n) > budget)
        throw BudgetExceeded("isotropic_number_multilinear over budget");
    if (h.edges.empty()) return n;
    for (size_t d = n; d >= h.ell; --d) {
        SubspaceEnumerator en(q, n, d);
        while (auto rows = en.next_rows()) {
            // ell-subsets of the basis suffice: the map is multilinear
            // and alternating, so it vanishes on W iff it vanishes on
            // every increasing tuple of basis vectors.
            std::vector<size_t> idx(h.ell);
            for (size_t i = 0; i < h.ell; ++i) idx[i] = i;
            bool vanishes = true;
            while (vanishes) {
                std::vector<Mat> args;
                args.reserve(h.ell);
                for (size_t i : idx) {
                    Mat v(q, n, 1);
                    for (size_t c = 0; c < n; ++c) v(c, 0) = (*rows)(i, c);
                    args.push_back(std::move(v));
                }
                if (!map.evaluate(args).is_zero()) vanishes = false;
                // next combination
                size_t k = h.ell;
                bool more = false;
                while (k-- > 0) {
                    if (idx[k] < d - h.ell + k) {
                        ++idx[k];
                        for (size_t j = k + 1; j < h.ell; ++j)
                            idx[j] = idx[j - 1] + 1;
                        more = true;
                        break;
                    }
                }
                if (!more) break;
            }
            if (vanishes) return d;
        }
    }
    // Every subspace of dimension below the arity is trivially isotropic.
    return std::min(n, h.ell - 1);
}

PropAlphaReport check_prop_alpha(const Hypergraph& h, FieldCtx q,
                                 uint64_t budget) {
    PropAlphaReport rep;
    rep.alpha_h = independence_number(h);
    rep.alpha_phi = isotropic_number_multilinear(lovasz_map(h), q, budget);
    rep.equal = rep.alpha_h == rep.alpha_phi;
    return rep;
}

}  // namespace altramsey
