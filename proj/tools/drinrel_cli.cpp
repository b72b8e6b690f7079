// drinrel: bounds, relation bases and independence for points of Drinfeld modules over F_q(T).

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "drinrel/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Linear relations among points of Drinfeld F_q[t]-modules over F_q(T)"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "Report wall time on stderr");

    std::string file, relation, u;
    long deg = 0;
    bool audit = false;

    auto* bound = app.add_subcommand("bound", "Masser divisor D, d and the degree bound d + l");
    bound->add_option("file", file, "Instance JSON")->required();
    auto* basis = app.add_subcommand("basis", "Degree-minimal basis of the relation module");
    basis->add_option("file", file, "Instance JSON")->required();
    basis->add_flag("--audit", audit, "Cross-check against the brute-force oracle");
    auto* indep = app.add_subcommand("independent", "Decide F_q[t]-linear independence");
    indep->add_option("file", file, "Instance JSON")->required();
    indep->add_flag("--audit", audit, "Cross-check against the brute-force oracle");
    auto* oracle = app.add_subcommand("oracle", "All relations with entries of degree <= n");
    oracle->add_option("file", file, "Instance JSON")->required();
    oracle->add_option("--deg", deg, "Degree bound n")->required()->check(CLI::NonNegativeNumber);
    auto* verify = app.add_subcommand("verify", "Check one candidate relation");
    verify->add_option("file", file, "Instance JSON")->required();
    verify->add_option("--relation", relation, "Comma-separated polynomials in t")->required();
    auto* twist = app.add_subcommand("twist", "Twist by a unit u and compare Masser divisors");
    twist->add_option("file", file, "Instance JSON")->required();
    twist->add_option("--u", u, "Element of F_q(T)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        const drinrel::Instance in = drinrel::load_instance(file);
        drinrel::json out;
        if (*bound) out = drinrel::cmd_bound(in);
        else if (*basis) out = drinrel::cmd_basis(in, audit);
        else if (*indep) out = drinrel::cmd_independent(in, audit);
        else if (*oracle) out = drinrel::cmd_oracle(in, deg);
        else if (*verify) out = drinrel::cmd_verify(in, relation);
        else out = drinrel::cmd_twist(in, u);
        std::cout << out.dump(2) << "\n";
    } catch (const drinrel::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const drinrel::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    if (timing) {
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        std::cerr << "time: " << dt.count() << " s\n";
    }
    return 0;
}
