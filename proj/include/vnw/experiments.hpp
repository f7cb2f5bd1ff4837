#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vnw/json_io.hpp"

namespace vnw {

/// Everything that influences an experiment run. Identical configs
/// produce bit-identical report files.
struct ExperimentConfig {
    std::uint64_t seed = 1;
    int resolution = 0;   ///< torus grid resolution, 0 = per-n default
    int multistarts = 32;
    int trials = 1000;
    std::string format = "json";  ///< "json" or "csv"
    std::string output;           ///< empty = stdout only
};

/// Display-only constants for report annotation; never asserted.
struct ReferenceConstants {
    double kg_complex_upper = 1.4049;
    double kg_complex_lower = 1.338;
    double kg_real_lower = 1.66;
    double kg_plus_real;           ///< pi/2
    double kg_plus_complex;        ///< 4/pi
    double varopoulos_upper_factor;  ///< 3*sqrt(3)/4

    ReferenceConstants();
    Json toJson() const;
};

/// Map a symmetric 3x3 sign matrix onto its table representative: a
/// global negation when the diagonal is all -1, then the
/// lexicographically largest image under simultaneous permutations and
/// sign flips that has an all-ones first row and column.
RMatrix canonicalSignMatrix(const RMatrix& a);

/// The six inequivalent symmetric 3x3 sign matrices with ones border,
/// in table order.
std::vector<RMatrix> signTableRepresentatives();

/// Both norm columns for the six sign-matrix representatives. Each row
/// records the computed sup norm and Gram value together with the
/// values printed in the source table for comparison.
Json runSignTable(const ExperimentConfig& cfg);

/// (k, l, ratio, closed_form, gap) for k = 2..kmax.
Json runFjSweep(int kmax, const ExperimentConfig& cfg);

/// Closed-form and numeric columns for the B_alpha family on a uniform
/// grid over [amin, amax]; alpha = -1 is inserted when in range so the
/// scan always contains the extremal point.
Json runBalphaScan(double amin, double amax, int steps, const ExperimentConfig& cfg);

/// Random search over symmetric matrices (sign and continuous entries,
/// alternating) with Gram-ascended witness tuples; returns the best
/// ratio report found, reproducible from the recorded seed.
Json runRandomSearch(int n, int m, int trials, std::uint64_t seed,
                     const ExperimentConfig& cfg);

/// Single-polynomial sup norm report.
Json runNorm(const PolySpec& p, const ExperimentConfig& cfg);

/// Serialize a report to JSON or CSV (CSV uses the embedded table).
std::string renderReport(const Json& report, const std::string& format);
void emitReport(const Json& report, const std::string& format,
                const std::string& path);

/// Recompute every value in a report from its embedded witnesses.
/// Returns the list of failures (empty means verified).
std::vector<std::string> verifyReport(const Json& report, double tol = 1e-9);

}  // namespace vnw
