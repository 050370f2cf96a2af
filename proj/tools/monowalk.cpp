// Command-line front end: exact LP/IP solving, circuit and Graver walks with
// replayable certificates, conformal decompositions, certificate
// verification, and seeded instance generation.
//
// Exit codes: 0 success/pass, 1 parse or argument errors, 2 infeasible,
// 3 internal invariant breach (a bug signal), 4 verification failure.

#include <monowalk/monowalk.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace monowalk;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write file: " + path);
    out << text;
}

std::string vec_str(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(v[i]);
    }
    return s + "]";
}

Int env_budget(const Int& fallback) {
    const char* e = std::getenv("MONOWALK_BUDGET");
    if (!e || !*e) return fallback;
    try {
        Int b = int_from_string(e);
        if (b < 1) throw parse_error("MONOWALK_BUDGET must be positive");
        return b;
    } catch (const error&) {
        throw parse_error("MONOWALK_BUDGET is not a valid integer");
    }
}

WalkOptions walk_options(const std::string& delta, long steps_limit) {
    WalkOptions opt;
    if (delta == "exact") opt.delta_mode = DeltaMode::Exact;
    if (delta == "bound") opt.delta_mode = DeltaMode::Bound;
    opt.steps_limit = steps_limit;
    opt.delta_budget = env_budget(opt.delta_budget);
    return opt;
}

int cmd_solve(const std::string& path, bool integer_program) {
    InstanceFile f = parse_instance(read_file(path));
    SolveStatus status;
    Vec x;
    Rat objective;
    if (integer_program) {
        IpSolution sol = solve_ip(f.inst);
        status = sol.status;
        x = sol.x;
        objective = sol.objective;
    } else {
        LpSolution sol = solve_lp(f.inst);
        status = sol.status;
        x = sol.x;
        objective = sol.objective;
    }
    if (status != SolveStatus::Optimal) {
        std::cout << "status: infeasible\n";
        return 2;
    }
    std::cout << "status: optimal\n"
              << "objective: " << rat_to_string(objective) << "\n"
              << "x: " << vec_str(x) << "\n";
    return 0;
}

int cmd_walk(const std::string& path, WalkMode mode, const std::string& delta, long steps_limit,
             const std::string& out, bool verify) {
    InstanceFile f = parse_instance(read_file(path));
    if (!f.x0) throw parse_error("key 'x0': required by walk commands");
    WalkOptions opt = walk_options(delta, steps_limit);
    WalkCertificate cert = mode == WalkMode::Circuit ? circuit_walk(f.inst, *f.x0, opt)
                                                     : graver_walk(f.inst, *f.x0, opt);
    if (verify) {
        ValidationReport rep = mode == WalkMode::Circuit
                                   ? verify_circuit_walk(f.inst, cert)
                                   : verify_graver_walk(f.inst, cert, env_budget(Int(10000000)));
        if (!rep.ok) {
            std::cerr << "internal verification failed:\n";
            for (const std::string& r : rep.reasons) std::cerr << "  " << r << "\n";
            return 3;
        }
    }
    std::string text = serialize_certificate(cert);
    if (out.empty()) {
        std::cout << text;
    } else {
        write_file(out, text);
        std::cout << "mode: " << mode_name(cert.mode) << "\n"
                  << "steps: " << cert.steps.size() << "\n"
                  << "terminal objective: " << rat_to_string(dot(f.inst.w, cert.terminal)) << "\n"
                  << "certificate: " << out << "\n";
    }
    return 0;
}

int cmd_decompose(const std::string& path, const std::string& mode) {
    DecomposeFile f = parse_decompose(read_file(path));
    if (!is_zero(mat_vec(f.a, f.h)))
        throw parse_error("key 'h': not in the kernel of A");
    if (mode == "circuit") {
        CircuitDecomposition cd = conformal_circuit_decomposition(f.a, f.h);
        std::cout << "terms: " << cd.terms.size() << "\n";
        for (std::size_t k = 0; k < cd.terms.size(); ++k)
            std::cout << "term " << k << ": " << vec_str(cd.terms[k]) << "\n";
        ValidationReport rep = validate_circuit_decomposition(f.a, cd);
        if (!rep.ok) {
            std::cerr << "validation: FAIL\n";
            for (const std::string& r : rep.reasons) std::cerr << "  " << r << "\n";
            return 3;
        }
        std::cout << "validation: OK\n";
        return 0;
    }
    Int dhat;
    try {
        dhat = delta_exact(f.a, env_budget(Int(1000000)));
    } catch (const budget_error&) {
        dhat = delta_bound(f.a);
    }
    GraverDecomposition gd = graver_decomposition(f.a, f.h, dhat);
    std::cout << "terms: " << gd.terms.size() << "\n";
    for (std::size_t k = 0; k < gd.terms.size(); ++k)
        std::cout << "term " << k << ": " << gd.terms[k].multiplier.str() << " x "
                  << vec_str(gd.terms[k].direction) << "\n";
    ValidationReport rep =
        validate_graver_decomposition(f.a, f.h, gd, dhat, env_budget(Int(10000000)));
    if (!rep.ok) {
        std::cerr << "validation: FAIL\n";
        for (const std::string& r : rep.reasons) std::cerr << "  " << r << "\n";
        return 3;
    }
    std::cout << "validation: OK\n";
    return 0;
}

int cmd_verify(const std::string& inst_path, const std::string& cert_path) {
    InstanceFile f = parse_instance(read_file(inst_path));
    WalkCertificate cert = parse_certificate(read_file(cert_path));
    ValidationReport rep = cert.mode == WalkMode::Circuit
                               ? verify_circuit_walk(f.inst, cert)
                               : verify_graver_walk(f.inst, cert, env_budget(Int(10000000)));
    if (rep.ok) {
        std::cout << "verify: PASS\n";
        return 0;
    }
    std::cout << "verify: FAIL\n";
    for (const std::string& r : rep.reasons) std::cout << "  " << r << "\n";
    return 4;
}

int cmd_gen(const std::vector<std::string>& subset_sum, const std::vector<long long>& random_args,
            std::uint64_t seed, const std::string& mode, const std::string& out) {
    InstanceFile f;
    if (!subset_sum.empty()) {
        if (subset_sum.size() < 2)
            throw parse_error("--subset-sum needs a target followed by at least one item");
        SubsetSumInstance s;
        s.a0 = int_from_string(subset_sum[0]);
        for (std::size_t i = 1; i < subset_sum.size(); ++i)
            s.a.push_back(int_from_string(subset_sum[i]));
        try {
            validate_subset_sum(s);
        } catch (const error& e) {
            throw parse_error(e.what());
        }
        WalkReduction red = reduce_to_walk_instance(s);
        f.inst = red.inst;
        f.x0 = red.x0;
        f.mode = "graver";
    } else {
        if (random_args.size() != 5)
            throw parse_error("--random needs: rows cols entry-max bound-lo bound-hi");
        try {
            RandomInstance ri = random_instance(seed, (int)random_args[0], (int)random_args[1],
                                                random_args[2], random_args[3], random_args[4]);
            f.inst = ri.inst;
            f.x0 = ri.x0;
        } catch (const error& e) {
            throw parse_error(e.what());
        }
        f.mode = mode;
    }
    std::string text = serialize_instance(f);
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact circuit and Graver walks for box-constrained programs"};
    app.require_subcommand(1);

    std::string inst_path, cert_path, out, delta = "auto", dec_mode = "circuit",
                gen_mode = "circuit";
    long steps_limit = 0;
    bool verify_flag = false;
    std::vector<std::string> subset_sum;
    std::vector<long long> random_args;
    std::uint64_t seed = 1;

    CLI::App* solve_lp = app.add_subcommand("solve-lp", "solve the LP relaxation exactly");
    solve_lp->add_option("instance", inst_path, "instance file")->required();

    CLI::App* solve_ip = app.add_subcommand("solve-ip", "solve the integer program exactly");
    solve_ip->add_option("instance", inst_path, "instance file")->required();

    auto add_walk = [&](const char* name, const char* help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("instance", inst_path, "instance file with x0")->required();
        c->add_option("-o,--output", out, "write the certificate here instead of stdout");
        c->add_option("--delta", delta, "delta estimate: exact or bound (default: exact within budget, else bound)")
            ->check(CLI::IsMember({"exact", "bound"}));
        c->add_option("--steps-limit", steps_limit, "abort after this many steps");
        c->add_flag("--verify", verify_flag, "re-verify the certificate before exiting");
        return c;
    };
    CLI::App* circuit = add_walk("circuit-walk", "walk the LP to an optimal vertex");
    CLI::App* graver = add_walk("graver-walk", "walk the IP to an optimum");

    CLI::App* decompose = app.add_subcommand("decompose", "conformal decomposition of a kernel vector");
    decompose->add_option("file", inst_path, "file with A and h")->required();
    decompose->add_option("--mode", dec_mode, "circuit (default) or graver")
        ->check(CLI::IsMember({"circuit", "graver"}));

    CLI::App* verify = app.add_subcommand("verify", "verify a certificate against an instance");
    verify->add_option("instance", inst_path, "instance file")->required();
    verify->add_option("certificate", cert_path, "certificate file")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
    CLI::Option* oss = gen->add_option("--subset-sum", subset_sum,
                                       "target followed by items: emit the walk-form reduction");
    CLI::Option* orand = gen->add_option("--random", random_args,
                                         "rows cols entry-max bound-lo bound-hi")
                             ->expected(5);
    oss->excludes(orand);
    gen->add_option("--seed", seed, "generator seed (default 1)");
    gen->add_option("--mode", gen_mode, "mode tag for random instances")
        ->check(CLI::IsMember({"circuit", "graver"}));
    gen->add_option("-o,--output", out, "write the instance here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve_lp->parsed()) return cmd_solve(inst_path, false);
        if (solve_ip->parsed()) return cmd_solve(inst_path, true);
        if (circuit->parsed())
            return cmd_walk(inst_path, WalkMode::Circuit, delta, steps_limit, out, verify_flag);
        if (graver->parsed())
            return cmd_walk(inst_path, WalkMode::Graver, delta, steps_limit, out, verify_flag);
        if (decompose->parsed()) return cmd_decompose(inst_path, dec_mode);
        if (verify->parsed()) return cmd_verify(inst_path, cert_path);
        if (gen->parsed()) {
            if (subset_sum.empty() && random_args.empty())
                throw parse_error("gen: pass --subset-sum or --random");
            return cmd_gen(subset_sum, random_args, seed, gen_mode, out);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        // budget, degenerate-step and internal errors: invariant breaches
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
