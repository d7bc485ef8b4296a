#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "altramsey/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact Ramsey witnesses for alternating bilinear maps over GF(p)"};
    app.require_subcommand(1);

    namespace cmd = altramsey::commands;
    int rc = cmd::kOk;

    // solve
    std::string instance_path, witness_path, out_path;
    size_t s = 2, t = 2;
    bool truncate = false;
    auto* solve = app.add_subcommand("solve",
        "Construct a verified isotropic or complete witness");
    solve->add_option("--instance", instance_path, "instance JSON")->required();
    solve->add_option("--s", s, "isotropic target dimension")->required();
    solve->add_option("--t", t, "complete target dimension")->required();
    solve->add_flag("--truncate-to-t", truncate,
                    "return a dimension-t complete witness instead of t+1");
    solve->add_option("--out", out_path, "output witness JSON")->required();
    solve->callback([&] {
        rc = cmd::cmd_solve(instance_path, s, t, truncate, out_path, std::cout);
    });

    // verify
    auto* verify = app.add_subcommand("verify",
        "Independently check a witness against an instance");
    verify->add_option("--instance", instance_path, "instance JSON")->required();
    verify->add_option("--witness", witness_path, "witness JSON")->required();
    verify->add_option("--s", s, "isotropic target dimension")->required();
    verify->add_option("--t", t, "complete target dimension")->required();
    verify->callback([&] {
        rc = cmd::cmd_verify(instance_path, witness_path, s, t, std::cout);
    });

    // gen
    auto* gen = app.add_subcommand("gen", "Instance generators");
    gen->require_subcommand(1);
    uint32_t p = 3;
    size_t n = 4, m = 1;
    uint64_t seed = 0;
    std::string edge_path;

    auto* gen_uniform = gen->add_subcommand("uniform", "uniform random instance");
    gen_uniform->add_option("--p", p, "prime modulus")->required();
    gen_uniform->add_option("--n", n, "ambient dimension")->required();
    gen_uniform->add_option("--m", m, "number of matrices")->required();
    gen_uniform->add_option("--seed", seed, "RNG seed")->required();
    gen_uniform->add_option("--out", out_path, "output JSON")->required();
    gen_uniform->callback([&] {
        rc = cmd::cmd_gen_uniform(p, n, m, seed, out_path, std::cout);
    });

    auto* gen_bgh = gen->add_subcommand("bgh",
        "random instance at the lower-bound parameters m=C(t-1,2), "
        "n=(m+2)(s-2)/2+1");
    gen_bgh->add_option("--s", s, "s")->required();
    gen_bgh->add_option("--t", t, "t")->required();
    gen_bgh->add_option("--p", p, "prime modulus")->required();
    gen_bgh->add_option("--seed", seed, "RNG seed")->required();
    gen_bgh->add_option("--out", out_path, "output JSON")->required();
    gen_bgh->callback([&] {
        rc = cmd::cmd_gen_bgh(s, t, p, seed, out_path, std::cout);
    });

    auto* gen_hg = gen->add_subcommand("hypergraph",
        "instance from a graph edge list (text: \"n ell\" then 1-based edges)");
    gen_hg->add_option("--input", edge_path, "edge list file")->required();
    gen_hg->add_option("--p", p, "prime modulus")->required();
    gen_hg->add_option("--out", out_path, "output JSON")->required();
    gen_hg->callback([&] {
        rc = cmd::cmd_gen_hypergraph(edge_path, p, out_path, std::cout);
    });

    // check
    auto* check = app.add_subcommand("check", "Correspondence and experiment drivers");
    check->require_subcommand(1);
    size_t max_n = 4, ell = 2, trials = 20;
    uint32_t q = 2;
    std::string csv_path;

    auto* prop = check->add_subcommand("prop-alpha",
        "independence number vs isotropic number, by brute force");
    prop->add_option("--max-n", max_n, "vertex count")->required();
    prop->add_option("--ell", ell, "uniformity")->required();
    prop->add_option("--q", q, "field size (prime)")->required();
    prop->add_option("--trials", trials, "random hypergraphs when ell > 2");
    prop->add_option("--seed", seed, "RNG seed for ell > 2");
    prop->callback([&] {
        rc = cmd::cmd_check_prop_alpha(max_n, ell, q, trials, seed, std::cout);
    });

    auto* baer = check->add_subcommand("baer",
        "group laws and lift correspondence for the one-generator map");
    baer->add_option("--p", p, "odd prime")->required();
    baer->callback([&] { rc = cmd::cmd_check_baer(p, std::cout); });

    auto* bgh = check->add_subcommand("bgh-experiment",
        "per-trial exact isotropic/complete numbers at the lower-bound sizes");
    bgh->add_option("--s", s, "s")->required();
    bgh->add_option("--t", t, "t")->required();
    bgh->add_option("--p", p, "prime modulus")->required();
    bgh->add_option("--trials", trials, "trial count")->required();
    bgh->add_option("--seed", seed, "RNG seed")->required();
    bgh->add_option("--csv", csv_path, "write per-trial CSV here");
    bgh->callback([&] {
        rc = cmd::cmd_check_bgh_experiment(s, t, p, trials, seed, csv_path,
                                           std::cout);
    });

    CLI11_PARSE(app, argc, argv);
    return rc;
}
