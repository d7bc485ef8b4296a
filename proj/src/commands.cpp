#include "altramsey/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "altramsey/baer.hpp"
#include "altramsey/io.hpp"
#include "altramsey/oracle.hpp"
#include "altramsey/ramsey.hpp"
#include "altramsey/randgen.hpp"

namespace altramsey::commands {

namespace {

int map_error(const Error& e, std::ostream& log) {
    log << "error: " << e.what() << '\n';
    if (dynamic_cast<const MalformedInput*>(&e)) return kMalformed;
    if (dynamic_cast<const PreconditionFailed*>(&e)) return kPrecondition;
    if (dynamic_cast<const InternalInvariantViolation*>(&e)) return kInternal;
    return kInternal;
}

}  // namespace

int cmd_solve(const std::string& instance_path, size_t s, size_t t,
              bool truncate_to_t, const std::string& out_path,
              std::ostream& log) {
    try {
        AltSpace a = io::load_instance(instance_path);
        SolveOptions opts;
        opts.truncate_to_t = truncate_to_t;
        SolveResult res = solve(a, s, t, opts);
        VerifyReport rep = verify_witness(a, res.witness, s, t);
        io::save_witness(out_path, res.witness, rep);
        log << (res.witness.kind == WitnessKind::Isotropic ? "isotropic"
                                                           : "complete")
            << " witness of dimension " << res.witness.basis.dim()
            << " (restarts " << res.trace.step2_restarts << ", injections "
            << res.trace.step4_injections << ", verified "
            << (rep.ok ? "true" : "false") << ")\n";
        return rep.ok ? kOk : kVerifyFailure;
    } catch (const Error& e) {
        return map_error(e, log);
    }
}

int cmd_verify(const std::string& instance_path,
               const std::string& witness_path, size_t s, size_t t,
               std::ostream& log) {
    try {
        AltSpace a = io::load_instance(instance_path);
        io::WitnessFile wf = io::load_witness(witness_path, a.ctx());
        if (wf.basis.rows() != a.ambient_dim()) {
            log << "verify: basis ambient dimension mismatch\n";
            return kVerifyFailure;
        }
        if (rank(wf.basis) != wf.dim) {
            log << "verify: basis is rank deficient\n";
            return kVerifyFailure;
        }
        Witness w{wf.kind, Subspace::from_columns(wf.basis)};
        VerifyReport rep = verify_witness(a, w, s, t);
        log << "kind " << (wf.kind == WitnessKind::Isotropic ? "isotropic"
                                                             : "complete")
            << " dim " << rep.dim << " measured dim(A|_W) " << rep.measured_dim
            << " => " << (rep.ok ? "ok" : ("FAIL (" + rep.detail + ")"))
            << '\n';
        return rep.ok ? kOk : kVerifyFailure;
    } catch (const Error& e) {
        return map_error(e, log);
    }
}

int cmd_gen_uniform(uint32_t p, size_t n, size_t m, uint64_t seed,
                    const std::string& out_path, std::ostream& log) {
    try {
        AltSpace a = gen_uniform({p, n, m, seed});
        io::save_instance(out_path, a);
        log << "wrote p=" << p << " n=" << n << " m=" << m << " seed=" << seed
            << " to " << out_path << '\n';
        return kOk;
    } catch (const Error& e) {
        return map_error(e, log);
    }
}

int cmd_gen_bgh(size_t s, size_t t, uint32_t p, uint64_t seed,
                const std::string& out_path, std::ostream& log) {
    try {
        auto [a, params] = gen_bgh_lower(s, t, p, seed);
        io::save_instance(out_path, a);
        log << "wrote lower-bound instance n=" << params.n
            << " m=" << params.m << " to " << out_path << '\n';
        return kOk;
    } catch (const Error& e) {
        return map_error(e, log);
    }
}

int cmd_gen_hypergraph(const std::string& edge_path, uint32_t p,
                       const std::string& out_path, std::ostream& log) {
    try {
        Hypergraph h = io::load_hypergraph(edge_path);
        AltSpace a = to_altspace(h, FieldCtx(p));
        io::save_instance(out_path, a);
        log << "wrote map of " << h.edge_count() << "-edge graph on " << h.n
            << " vertices to " << out_path << '\n';
        return kOk;
    } catch (const NotGraph& e) {
        log << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const Error& e) {
        return map_error(e, log);
    }
}

int cmd_check_prop_alpha(size_t max_n, size_t ell, uint32_t q, size_t trials,
                         uint64_t seed, std::ostream& log) {
    try {
        FieldCtx ctx(q);
        size_t checked = 0, failed = 0;
        log << "n\tedges\talpha_H\talpha_phi\tequal\n";
        if (ell == 2) {
            // Every labeled graph on max_n vertices (subsets of edges).
            std::vector<std::pair<size_t, size_t>> all_edges;
            for (size_t i = 0; i < max_n; ++i)
                for (size_t j = i + 1; j < max_n; ++j) all_edges.emplace_back(i, j);
            const uint64_t total = 1ull << all_edges.size();
            for (uint64_t mask = 0; mask < total; ++mask) {
                std::vector<std::vector<size_t>> edges;
                for (size_t e = 0; e < all_edges.size(); ++e)
                    if (mask & (1ull << e))
                        edges.push_back({all_edges[e].first, all_edges[e].second});
                Hypergraph h = Hypergraph::make(max_n, 2, std::move(edges));
                PropAlphaReport rep = check_prop_alpha(h, ctx);
                ++checked;
                if (!rep.equal) {
                    ++failed;
                    log << max_n << '\t' << h.edge_count() << '\t' << rep.alpha_h
                        << '\t' << rep.alpha_phi << "\tNO\n";
                }
            }
        } else {
            CounterRng rng(seed, 0);
            uint64_t counter = 0;
            // All possible edges, then a random subset per trial.
            std::vector<std::vector<size_t>> pool;
            std::vector<size_t> idx(ell);
            for (size_t i = 0; i < ell; ++i) idx[i] = i;
            if (max_n >= ell) {
                while (true) {
                    pool.push_back(idx);
                    size_t k = ell;
                    bool more = false;
                    while (k-- > 0) {
                        if (idx[k] < max_n - ell + k) {
                            ++idx[k];
                            for (size_t j = k + 1; j < ell; ++j)
                                idx[j] = idx[j - 1] + 1;
                            more = true;
                            break;
                        }
                    }
                    if (!more) break;
                }
            }
            for (size_t trial = 0; trial < trials; ++trial) {
                std::vector<std::vector<size_t>> edges;
                for (const auto& e : pool)
                    if (rng.word(counter++) & 1) edges.push_back(e);
                Hypergraph h = Hypergraph::make(max_n, ell, std::move(edges));
                PropAlphaReport rep = check_prop_alpha(h, ctx);
                ++checked;
                if (!rep.equal) {
                    ++failed;
                    log << max_n << '\t' << h.edge_count() << '\t' << rep.alpha_h
                        << '\t' << rep.alpha_phi << "\tNO\n";
                }
            }
        }
        log << "checked " << checked << " hypergraphs over GF(" << q << "), "
            << failed << " mismatches\n";
        return failed == 0 ? kOk : kVerifyFailure;
    } catch (const Error& e) {
        return map_error(e, log);
    }
}

int cmd_check_baer(uint32_t p, std::ostream& log) {
    try {
        FieldCtx ctx(p);
        // One-generator map on F_p^2: the smallest nonabelian instance.
        Mat a(ctx, 2, 2);
        a(0, 1) = ctx.one();
        a(1, 0) = ctx.neg(ctx.one());
        AltSpace phi(ctx, 2, {a});
        BaerGroup g(phi);
        LawsReport laws = check_laws(g);
        log << "group order " << g.order() << ", laws "
            << (laws.ok ? "pass" : "FAIL") << '\n';
        uint64_t free_order = free_group_order(ctx, 2);
        log << "free group on 2 generators has order " << free_order << '\n';

        // Complete witness <e_1, e_2> lifts to the whole group.
        Witness w{WitnessKind::Complete,
                  Subspace::full(ctx, 2)};
        Corollary1Report rep = corollary1_check(g, w, 2, 2);
        log << "complete lift subgroup order " << rep.subgroup_order
            << " expected " << rep.expected_order << " => "
            << (rep.ok ? "ok" : "FAIL") << '\n';
        bool all = laws.ok && rep.ok && free_order == rep.expected_order;
        return all ? kOk : kVerifyFailure;
    } catch (const Error& e) {
        return map_error(e, log);
    }
}

int cmd_check_bgh_experiment(size_t s, size_t t, uint32_t p, size_t trials,
                             uint64_t seed, const std::string& csv_path,
                             std::ostream& log) {
    try {
        BghReport rep = bgh_experiment(s, t, p, trials, seed);
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            if (!csv) throw MalformedInput("cannot write " + csv_path);
            write_bgh_csv(csv, rep);
        } else {
            write_bgh_csv(log, rep);
        }
        log << "params n=" << rep.params.n << " m=" << rep.params.m << '\n';
        log << rep.trials_isotropic_below_s << "/" << rep.rows.size()
            << " trials with isotropic number <= s-1 (reported, not asserted)\n";
        if (rep.params.m < binom2(t)) {
            log << "complete side (m < C(t,2) forbids dimension t): "
                << (rep.complete_side_ok ? "ok" : "FAIL") << '\n';
            return rep.complete_side_ok ? kOk : kVerifyFailure;
        }
        return kOk;
    } catch (const Error& e) {
        return map_error(e, log);
    }
}

}  // namespace altramsey::commands
