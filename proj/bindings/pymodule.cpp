#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "altramsey/baer.hpp"
#include "altramsey/hypergraph.hpp"
#include "altramsey/io.hpp"
#include "altramsey/oracle.hpp"
#include "altramsey/ramsey.hpp"
#include "altramsey/randgen.hpp"

namespace py = pybind11;
using namespace altramsey;

namespace {

using Rows = std::vector<std::vector<int64_t>>;

Mat mat_from_rows(const FieldCtx& ctx, const Rows& rows) {
    const size_t r = rows.size();
    const size_t c = r == 0 ? 0 : rows[0].size();
    Mat m(ctx, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw ShapeMismatch("ragged matrix");
        for (size_t j = 0; j < c; ++j) m(i, j) = ctx.from_int(rows[i][j]);
    }
    return m;
}

Rows mat_to_rows(const Mat& m) {
    Rows rows(m.rows(), std::vector<int64_t>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).v;
    return rows;
}

Rows basis_columns(const Subspace& s) {
    // one list per column vector
    Rows cols(s.dim(), std::vector<int64_t>(s.ambient_dim()));
    const Mat& b = s.basis();
    for (size_t j = 0; j < s.dim(); ++j)
        for (size_t i = 0; i < s.ambient_dim(); ++i) cols[j][i] = b(i, j).v;
    return cols;
}

Subspace subspace_from_columns(const FieldCtx& ctx, size_t n, const Rows& cols) {
    Mat b(ctx, n, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != n) throw ShapeMismatch("bad column length");
        for (size_t i = 0; i < n; ++i) b(i, j) = ctx.from_int(cols[j][i]);
    }
    if (rank(b) != cols.size()) throw RankLoss("columns are dependent");
    return Subspace::from_columns(b);
}

py::dict report_to_dict(const VerifyReport& rep) {
    py::dict d;
    d["ok"] = rep.ok;
    d["kind"] = rep.kind == WitnessKind::Isotropic ? "isotropic" : "complete";
    d["dim"] = rep.dim;
    d["measured_dim"] = rep.measured_dim;
    d["detail"] = rep.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() =
        "Exact witnesses for alternating bilinear maps over prime fields: "
        "isotropic/complete subspace construction, verification, brute-force "
        "oracles, hypergraph correspondence, instance generators.";

    py::register_exception<Error>(mod, "AltRamseyError");

    py::class_<FieldCtx>(mod, "FieldCtx")
        .def(py::init<uint32_t>(), py::arg("p"))
        .def_property_readonly("p", &FieldCtx::modulus)
        .def("add", [](const FieldCtx& f, int64_t a, int64_t b) {
            return f.add(f.from_int(a), f.from_int(b)).v; })
        .def("sub", [](const FieldCtx& f, int64_t a, int64_t b) {
            return f.sub(f.from_int(a), f.from_int(b)).v; })
        .def("mul", [](const FieldCtx& f, int64_t a, int64_t b) {
            return f.mul(f.from_int(a), f.from_int(b)).v; })
        .def("neg", [](const FieldCtx& f, int64_t a) {
            return f.neg(f.from_int(a)).v; })
        .def("inv", [](const FieldCtx& f, int64_t a) {
            return f.inv(f.from_int(a)).v; });

    py::class_<AltSpace>(mod, "AltSpace")
        .def(py::init([](uint32_t p, size_t n, const std::vector<Rows>& slices) {
                 FieldCtx ctx(p);
                 std::vector<Mat> gens;
                 gens.reserve(slices.size());
                 for (const Rows& s : slices) gens.push_back(mat_from_rows(ctx, s));
                 return AltSpace(ctx, n, std::move(gens));
             }),
             py::arg("p"), py::arg("n"), py::arg("slices"))
        .def_property_readonly("p", [](const AltSpace& a) { return a.ctx().modulus(); })
        .def_property_readonly("n", &AltSpace::ambient_dim)
        .def_property_readonly("m", &AltSpace::gen_count)
        .def("slices", [](const AltSpace& a) {
            std::vector<Rows> out;
            for (const Mat& g : a.gens()) out.push_back(mat_to_rows(g));
            return out; })
        .def("space_dim", &AltSpace::space_dim)
        .def("degree", [](const AltSpace& a, const std::vector<int64_t>& v) {
            return a.degree(Mat::column(a.ctx(), v)); })
        .def("is_isotropic", [](const AltSpace& a, const Rows& cols) {
            return a.is_isotropic(subspace_from_columns(a.ctx(), a.ambient_dim(), cols)); })
        .def("is_complete", [](const AltSpace& a, const Rows& cols) {
            return a.is_complete(subspace_from_columns(a.ctx(), a.ambient_dim(), cols)); })
        .def("to_json", [](const AltSpace& a) { return io::dump_instance(a); });

    mod.def("parse_instance", &io::parse_instance, py::arg("text"));

    mod.def(
        "solve",
        [](const AltSpace& a, size_t s, size_t t, bool truncate_to_t) {
            SolveOptions opts;
            opts.truncate_to_t = truncate_to_t;
            SolveResult res = solve(a, s, t, opts);
            py::dict d;
            d["kind"] = res.witness.kind == WitnessKind::Isotropic
                            ? "isotropic" : "complete";
            d["dim"] = res.witness.basis.dim();
            d["basis"] = basis_columns(res.witness.basis);
            d["restarts"] = res.trace.step2_restarts;
            d["injections"] = res.trace.step4_injections;
            return d;
        },
        py::arg("space"), py::arg("s"), py::arg("t"),
        py::arg("truncate_to_t") = false);

    mod.def(
        "verify",
        [](const AltSpace& a, const std::string& kind, const Rows& basis_cols,
           size_t s, size_t t) {
            WitnessKind k = kind == "isotropic" ? WitnessKind::Isotropic
                                                : WitnessKind::Complete;
            Witness w{k, subspace_from_columns(a.ctx(), a.ambient_dim(),
                                               basis_cols)};
            return report_to_dict(verify_witness(a, w, s, t));
        },
        py::arg("space"), py::arg("kind"), py::arg("basis"), py::arg("s"),
        py::arg("t"));

    py::class_<Hypergraph>(mod, "Hypergraph")
        .def(py::init([](size_t n, size_t ell,
                         std::vector<std::vector<size_t>> edges) {
                 return Hypergraph::make(n, ell, std::move(edges));
             }),
             py::arg("n"), py::arg("ell"), py::arg("edges"))
        .def_readonly("n", &Hypergraph::n)
        .def_readonly("ell", &Hypergraph::ell)
        .def_readonly("edges", &Hypergraph::edges)
        .def("independence_number",
             [](const Hypergraph& h) { return independence_number(h); })
        .def("to_altspace", [](const Hypergraph& h, uint32_t p) {
            return to_altspace(h, FieldCtx(p)); }, py::arg("p"));

    mod.def(
        "check_prop_alpha",
        [](const Hypergraph& h, uint32_t q) {
            PropAlphaReport rep = check_prop_alpha(h, FieldCtx(q));
            py::dict d;
            d["alpha_h"] = rep.alpha_h;
            d["alpha_phi"] = rep.alpha_phi;
            d["equal"] = rep.equal;
            return d;
        },
        py::arg("hypergraph"), py::arg("q"));

    mod.def("isotropic_number_exact",
            [](const AltSpace& a, uint64_t budget) {
                return isotropic_number_exact(a, budget); },
            py::arg("space"), py::arg("budget") = 10'000'000);
    mod.def("complete_number_exact",
            [](const AltSpace& a, uint64_t budget) {
                return complete_number_exact(a, budget); },
            py::arg("space"), py::arg("budget") = 10'000'000);
    mod.def("min_degree_exact", [](const AltSpace& a) {
        MinDegreeResult r = min_degree_exact(a);
        std::vector<int64_t> v(a.ambient_dim());
        for (size_t i = 0; i < a.ambient_dim(); ++i) v[i] = r.argmin(i, 0).v;
        return py::make_tuple(r.degree, v);
    });
    mod.def("count_subspaces", &count_subspaces,
            py::arg("q"), py::arg("n"), py::arg("d"));

    mod.def(
        "gen_uniform",
        [](uint32_t p, size_t n, size_t m, uint64_t seed) {
            return gen_uniform({p, n, m, seed});
        },
        py::arg("p"), py::arg("n"), py::arg("m"), py::arg("seed"));
    mod.def(
        "gen_bgh",
        [](size_t s, size_t t, uint32_t p, uint64_t seed) {
            auto [a, params] = gen_bgh_lower(s, t, p, seed);
            return py::make_tuple(a, params.n, params.m);
        },
        py::arg("s"), py::arg("t"), py::arg("p"), py::arg("seed"));

    mod.def(
        "baer_check",
        [](const AltSpace& phi) {
            BaerGroup g(phi);
            LawsReport rep = check_laws(g);
            py::dict d;
            d["order"] = g.order();
            d["class_two"] = rep.class_two;
            d["exponent_p"] = rep.exponent_p;
            d["commutator_matches_phi"] = rep.commutator_matches_phi;
            d["ok"] = rep.ok;
            return d;
        },
        py::arg("space"));
    mod.def("free_group_order", [](uint32_t p, size_t t) {
        return free_group_order(FieldCtx(p), t); }, py::arg("p"), py::arg("t"));
}
