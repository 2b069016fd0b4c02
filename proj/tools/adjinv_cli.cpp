#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "adjinv/adjinv.hpp"

namespace {

using namespace adjinv;

constexpr int kDefaultDimensionCap = 6;

struct Options {
    int n = 0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 50;
    long long bound = 10;
    std::string format;
    std::string id;
    std::string suite;
    std::string matrix_path;
    bool allow_large = false;
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

void check_dimension(const Options& opt) {
    if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
    if (opt.n > kDefaultDimensionCap && !opt.allow_large)
        throw std::invalid_argument("--n > 6 is expensive in exact arithmetic; pass --allow-large to proceed");
}

Stage stage_of(const Options& opt, Stage fallback) {
    if (opt.suite.empty()) return fallback;
    return parse_stage(opt.suite);
}

int run_table(const Options& opt) {
    check_dimension(opt);
    Stage stage = stage_of(opt, Stage::J);
    if (opt.format == "json")
        std::cout << table_to_json(opt.n, stage).dump(2) << "\n";
    else
        std::cout << render_table_text(opt.n, stage);
    return 0;
}

int run_weights(const Options& opt) {
    check_dimension(opt);
    Stage stage = stage_of(opt, Stage::J);
    if (opt.format == "json")
        std::cout << weights_to_json(opt.n, stage).dump(2) << "\n";
    else
        std::cout << render_weights_text(opt.n, stage);
    return 0;
}

int run_eval(const Options& opt) {
    check_dimension(opt);
    InvariantId id = parse_invariant_id(opt.id);
    if (!valid_id(opt.n, id))
        throw std::invalid_argument("id " + opt.id + " is out of range for n = " + std::to_string(opt.n));
    Matrix<Rational> x = read_matrix_file(opt.matrix_path);
    if (x.rows() != opt.n || x.cols() != opt.n)
        throw std::invalid_argument("matrix file is not " + std::to_string(opt.n) + "x" + std::to_string(opt.n));
    Rational value;
    try {
        value = eval_id(opt.n, id, x);
    } catch (const DegeneratePoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (opt.format == "json") {
        json out;
        out["n"] = opt.n;
        out["id"] = to_string(id);
        out["value"] = value.to_string();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << value.to_string() << "\n";
    }
    return 0;
}

int run_verify(const Options& opt) {
    check_dimension(opt);
    VerificationReport rep;
    if (opt.suite == "u-invariance")
        rep = check_U_invariance(opt.n, opt.trials, opt.seed, opt.bound);
    else if (opt.suite == "b-invariance")
        rep = check_B_invariance(opt.n, opt.trials, opt.seed, opt.bound);
    else if (opt.suite == "semi-invariance")
        rep = check_semi_invariance(opt.n, opt.trials, opt.seed, opt.bound);
    else if (opt.suite == "chain-identity")
        rep = check_chain_identity(opt.n, opt.trials, opt.seed, opt.bound);
    else if (opt.suite == "adjugate")
        rep = check_adjugate_contract(opt.n, opt.trials, opt.seed, opt.bound);
    else if (opt.suite == "n2-closed-forms") {
        if (opt.n != 2) throw std::invalid_argument("suite n2-closed-forms requires --n 2");
        rep = check_n2_closed_forms(opt.trials, opt.seed, opt.bound);
    } else {
        throw std::invalid_argument(
            "unknown suite '" + opt.suite +
            "' (expected one of u-invariance, b-invariance, semi-invariance, chain-identity, "
            "adjugate, n2-closed-forms)");
    }
    if (opt.format == "text")
        std::cout << report_to_text(rep);
    else
        std::cout << report_to_json(rep).dump(2) << "\n";
    return rep.ok() ? 0 : 1;
}

int run_rank(const Options& opt) {
    check_dimension(opt);
    std::vector<InvariantId> system;
    int expected = 0;
    if (opt.suite == "J") {
        system = j_system(opt.n);
        expected = opt.n * (opt.n + 1) / 2;
    } else if (opt.suite == "B") {
        if (opt.n < 2) throw std::invalid_argument("system B requires --n >= 2");
        system = b_system(opt.n);
        expected = opt.n * (opt.n - 1) / 2 + 1;
    } else {
        throw std::invalid_argument("unknown system '" + opt.suite + "' (expected J or B)");
    }
    RankCertificate cert = independence_rank(system, opt.n, opt.seed, opt.bound);
    if (opt.format == "text") {
        std::cout << "system: " << opt.suite << "\n"
                  << "n: " << opt.n << "\n"
                  << "rank: " << cert.rank << "\n"
                  << "expected: " << expected << "\n"
                  << "point: " << to_string(cert.point) << "\n";
    } else {
        json out;
        out["system"] = opt.suite;
        out["n"] = opt.n;
        out["rank"] = cert.rank;
        out["expected"] = expected;
        out["point"] = matrix_to_json(cert.point);
        std::cout << out.dump(2) << "\n";
    }
    return cert.rank == expected ? 0 : 1;
}

int run_lattice(const Options& opt) {
    check_dimension(opt);
    Stage stage = stage_of(opt, Stage::Final);
    std::vector<InvariantId> system = stage_system(opt.n, stage);
    IntMat w = weight_matrix(opt.n, stage);
    IntMat basis = kernel_lattice(w);
    const int dim = basis.empty() ? 0 : static_cast<int>(basis[0].size());
    if (opt.format == "text") {
        std::cout << "n: " << opt.n << "\n"
                  << "stage: " << to_string(stage) << "\n"
                  << "system:";
        for (const auto& id : system) std::cout << " " << to_string(id);
        std::cout << "\n"
                  << "weight rank: " << int_rank(w) << "\n"
                  << "kernel dimension: " << dim << "\n";
        for (int k = 0; k < dim; ++k) {
            std::cout << "basis[" << k << "]:";
            for (std::size_t r = 0; r < basis.size(); ++r) std::cout << " " << basis[r][static_cast<std::size_t>(k)].str();
            std::cout << "\n";
        }
    } else {
        json out;
        out["n"] = opt.n;
        out["stage"] = to_string(stage);
        json ids = json::array();
        for (const auto& id : system) ids.push_back(to_string(id));
        out["system"] = std::move(ids);
        out["rank"] = int_rank(w);
        json vecs = json::array();
        for (int k = 0; k < dim; ++k) {
            json v = json::array();
            for (std::size_t r = 0; r < basis.size(); ++r)
                v.push_back(basis[r][static_cast<std::size_t>(k)].convert_to<long long>());
            vecs.push_back(std::move(v));
        }
        out["basis"] = std::move(vecs);
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic workbench for adjoint semi-invariants of GL(n)"};
    app.require_subcommand(1);

    Options opt;
    // --format defaults differ per command; resolved after parsing so the
    // shared Options slot is only written by the flag the user passed
    std::map<const CLI::App*, const char*> default_format;
    auto add_common = [&](CLI::App* cmd, const char* fmt) {
        cmd->add_option("--n", opt.n, "matrix dimension")->required();
        cmd->add_option("--seed", opt.seed, "PRNG seed (default 0)");
        cmd->add_option("--trials", opt.trials, "number of trials (default 50)");
        cmd->add_option("--bound", opt.bound, "entry magnitude bound (default 10)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--format", opt.format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_flag("--allow-large", opt.allow_large, "lift the n <= 6 cost cap");
        default_format[cmd] = fmt;
    };

    CLI::App* table = app.add_subcommand("table", "emit the triangular generator table");
    add_common(table, "text");
    table->add_option("--suite", opt.suite, "chain stage: J, prime, y, doubleprime, Yfinal");

    CLI::App* weights = app.add_subcommand("weights", "emit the triangular weight table");
    add_common(weights, "text");
    weights->add_option("--suite", opt.suite, "chain stage: J, prime, y, doubleprime, Yfinal");

    CLI::App* eval = app.add_subcommand("eval", "evaluate one invariant at a matrix");
    add_common(eval, "text");
    eval->add_option("--id", opt.id, "invariant id, e.g. J:2,1 or y:2 or Y:3,0")->required();
    eval->add_option("--matrix", opt.matrix_path, "path to a JSON matrix file")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, "json");
    verify
        ->add_option("--suite", opt.suite,
                     "one of u-invariance, b-invariance, semi-invariance, chain-identity, "
                     "adjugate, n2-closed-forms")
        ->required();

    CLI::App* rank = app.add_subcommand("rank", "exact Jacobian independence rank");
    add_common(rank, "json");
    rank->add_option("--suite", opt.suite, "system: J or B")->required();

    CLI::App* lattice = app.add_subcommand("lattice", "kernel lattice of invariant monomials");
    add_common(lattice, "json");
    lattice->add_option("--suite", opt.suite, "chain stage: J, prime, y, doubleprime, Yfinal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (opt.format.empty())
        for (const auto& [cmd, fmt] : default_format)
            if (cmd->parsed()) opt.format = fmt;

    try {
        if (table->parsed()) return run_table(opt);
        if (weights->parsed()) return run_weights(opt);
        if (eval->parsed()) return run_eval(opt);
        if (verify->parsed()) return run_verify(opt);
        if (rank->parsed()) return run_rank(opt);
        if (lattice->parsed()) return run_lattice(opt);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const IndexOutOfRange& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
