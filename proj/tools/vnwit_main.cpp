// vnwit: witnesses for von Neumann inequality violations and
// finite-n Grothendieck-type lower bounds.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vnw/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitBudget = 2;

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void deliver(const vnw::Json& report, const vnw::ExperimentConfig& cfg) {
    if (!cfg.output.empty())
        vnw::emitReport(report, cfg.format, cfg.output);
    else
        std::cout << vnw::renderReport(report, cfg.format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"von Neumann violation witnesses and Grothendieck-type bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    vnw::ExperimentConfig cfg;
    app.add_option("--resolution", cfg.resolution,
                   "torus grid points per angle (0 = per-n default)");
    app.add_option("--multistarts", cfg.multistarts, "ascent multistarts");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--format", cfg.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output,-o", cfg.output, "output file (default: stdout)");

    auto* norm = app.add_subcommand("norm", "polydisc sup norm of one polynomial");
    std::string poly_path;
    std::string matrix_csv;
    norm->add_option("poly", poly_path, "polynomial JSON file");
    norm->add_option("--matrix-csv", matrix_csv,
                     "real coefficient matrix as CSV (homogeneous polynomial)");

    app.add_subcommand("sign-table",
                       "both norm columns for the six 3x3 sign-matrix classes");

    auto* fj = app.add_subcommand("fj", "Gram/sign ratio sweep of the two-entry family");
    int kmax = 4;
    fj->add_option("--kmax", kmax, "largest family parameter (<= 5)");

    auto* balpha = app.add_subcommand("balpha", "closed-form scan of the B_alpha family");
    double amin = -3.0;
    double amax = -0.05;
    int steps = 60;
    balpha->add_option("--min", amin, "smallest alpha (< 0)");
    balpha->add_option("--max", amax, "largest alpha (< 0)");
    balpha->add_option("--steps", steps, "grid points");

    auto* search = app.add_subcommand("search", "random counterexample search");
    int sn = 3;
    int sm = 3;
    int trials = 1000;
    search->add_option("--n", sn, "number of variables (<= 6)");
    search->add_option("--m", sm, "witness vector dimension (<= 8)");
    search->add_option("--trials", trials, "number of random matrices");
    std::uint64_t search_seed = 1;
    search->add_option("--seed", search_seed, "search seed");

    auto* verify = app.add_subcommand("verify", "recompute a report from its witnesses");
    std::string report_path;
    verify->add_option("report", report_path, "report JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (norm->parsed()) {
            if (poly_path.empty() == matrix_csv.empty()) {
                std::cerr << "norm: pass exactly one of <poly> or --matrix-csv\n";
                return kExitIo;
            }
            vnw::PolySpec p = [&] {
                if (!matrix_csv.empty()) {
                    const vnw::RMatrix m = vnw::matrixFromCsv(readFile(matrix_csv));
                    return vnw::polyFromMatrix(
                        vnw::SymCoeffMatrix::symmetrized(m.cast<vnw::Complex>().eval()));
                }
                return vnw::polyFromJson(vnw::Json::parse(readFile(poly_path)));
            }();
            deliver(vnw::runNorm(p, cfg), cfg);
        } else if (app.get_subcommand("sign-table")->parsed()) {
            deliver(vnw::runSignTable(cfg), cfg);
        } else if (fj->parsed()) {
            deliver(vnw::runFjSweep(kmax, cfg), cfg);
        } else if (balpha->parsed()) {
            deliver(vnw::runBalphaScan(amin, amax, steps, cfg), cfg);
        } else if (search->parsed()) {
            deliver(vnw::runRandomSearch(sn, sm, trials, search_seed, cfg), cfg);
        } else if (verify->parsed()) {
            const vnw::Json report = vnw::Json::parse(readFile(report_path));
            const auto failures = vnw::verifyReport(report);
            if (failures.empty()) {
                std::cout << "verified: all reported values recompute from witnesses\n";
            } else {
                for (const auto& f : failures) std::cerr << "mismatch: " << f << "\n";
                return kExitIo;
            }
        }
    } catch (const vnw::BudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const vnw::Json::exception& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
