#include "vnw/experiments.hpp"

#include <nlohmann/json.hpp>
#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

namespace vnw {

namespace {

constexpr const char* kToolName = "vnwit";
constexpr const char* kToolVersion = "0.1.0";

Json configEcho(const ExperimentConfig& cfg) {
    return Json{{"seed", cfg.seed},
                {"resolution", cfg.resolution},
                {"multistarts", cfg.multistarts},
                {"trials", cfg.trials},
                {"format", cfg.format},
                {"output", cfg.output}};
}

Json reportSkeleton(const std::string& kind, const ExperimentConfig& cfg) {
    return Json{{"kind", kind},
                {"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
                {"config", configEcho(cfg)},
                {"reference_constants", ReferenceConstants().toJson()}};
}

TorusConfig torusCfg(const ExperimentConfig& cfg) {
    TorusConfig t;
    t.resolution = cfg.resolution;
    t.multistarts = cfg.multistarts;
    t.seed = cfg.seed;
    return t;
}

GramConfig gramCfg(const ExperimentConfig& cfg) {
    GramConfig g;
    g.seed = cfg.seed;
    return g;
}

Json matrixRows(const RMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

RMatrix rmatrixFromJson(const Json& j) {
    RMatrix m(j.size(), j.empty() ? 0 : j[0].size());
    for (std::size_t r = 0; r < j.size(); ++r)
        for (std::size_t c = 0; c < j[r].size(); ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                j[r][c].get<double>();
    return m;
}

bool lexLessMat(const RMatrix& a, const RMatrix& b) {
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (a(r, c) < b(r, c)) return true;
            if (a(r, c) > b(r, c)) return false;
        }
    return false;
}

}  // namespace

ReferenceConstants::ReferenceConstants()
    : kg_plus_real(std::numbers::pi / 2.0),
      kg_plus_complex(4.0 / std::numbers::pi),
      varopoulos_upper_factor(3.0 * std::sqrt(3.0) / 4.0) {}

Json ReferenceConstants::toJson() const {
    return Json{{"kg_complex_upper", kg_complex_upper},
                {"kg_complex_lower", kg_complex_lower},
                {"kg_real_lower", kg_real_lower},
                {"kg_plus_real", kg_plus_real},
                {"kg_plus_complex", kg_plus_complex},
                {"varopoulos_upper_factor", varopoulos_upper_factor}};
}

std::vector<RMatrix> signTableRepresentatives() {
    const auto make = [](std::array<double, 9> e) {
        RMatrix m(3, 3);
        m << e[0], e[1], e[2], e[3], e[4], e[5], e[6], e[7], e[8];
        return m;
    };
    return {make({1, 1, 1, 1, -1, 1, 1, 1, -1}),
            make({1, 1, 1, 1, 1, -1, 1, -1, 1}),
            make({1, 1, 1, 1, 1, 1, 1, 1, -1}),
            make({1, 1, 1, 1, 1, -1, 1, -1, -1}),
            make({1, 1, 1, 1, -1, -1, 1, -1, -1}),
            make({1, 1, 1, 1, 1, 1, 1, 1, 1})};
}

RMatrix canonicalSignMatrix(const RMatrix& a) {
    if (a.rows() != 3 || a.cols() != 3 ||
        (a.cwiseAbs() - RMatrix::Ones(3, 3)).cwiseAbs().maxCoeff() > 0 ||
        (a - a.transpose()).cwiseAbs().maxCoeff() > 0)
        throw std::invalid_argument(
            "canonical_sign_matrix: expected a symmetric 3x3 sign matrix");

    // Both norms are invariant under global negation; use it to expose a
    // +1 diagonal entry when the diagonal is all -1. The representative is
    // the lexicographically largest ones-bordered image.
    RMatrix base = a;
    if (base(0, 0) < 0 && base(1, 1) < 0 && base(2, 2) < 0) base = -base;

    static const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::optional<RMatrix> best;
    for (const auto& perm : perms) {
        RMatrix p(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) p(r, c) = base(perm[r], perm[c]);
        if (p(0, 0) < 0) continue;
        // Sign flips putting the first row and column at +1.
        RMatrix q(3, 3);
        const double s1 = p(0, 1), s2 = p(0, 2);
        const std::array<double, 3> s = {1.0, s1, s2};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) q(r, c) = s[r] * s[c] * p(r, c);
        if (!best || lexLessMat(*best, q)) best = q;
    }
    return *best;
}

Json runSignTable(const ExperimentConfig& cfg) {
    // Reference pairs as printed in the source table.
    static const std::array<std::pair<double, double>, 6> reference = {{
        {5.0, 5.0},
        {5.0, 6.0},
        {5.0 * std::numbers::sqrt2, 7.0},
        {7.0, 5.0},
        {std::sqrt(41.0), 4.0},
        {9.0, 9.0},
    }};

    Json report = reportSkeleton("sign_table", cfg);
    Json rows = Json::array();
    Json witnesses = Json::array();
    const auto reps = signTableRepresentatives();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const SymCoeffMatrix a(reps[i].cast<Complex>().eval());
        const SupResult sup = torusSup(polyFromMatrix(a), torusCfg(cfg));
        const GramWitness gram = gramMax(reps[i], gramCfg(cfg));
        rows.push_back(Json::array({static_cast<int>(i + 1), sup.value, gram.value,
                                    reference[i].first, reference[i].second}));
        witnesses.push_back(Json{{"matrix", matrixRows(reps[i])},
                                 {"sup", toJson(sup)},
                                 {"gram", toJson(gram)}});
    }
    report["table"] = Json{
        {"columns", Json::array({"row", "sup_norm", "gram_value", "reference_sup",
                                 "reference_gram"})},
        {"rows", std::move(rows)}};
    report["witnesses"] = std::move(witnesses);
    return report;
}

Json runFjSweep(int kmax, const ExperimentConfig& cfg) {
    if (kmax > 5) throw BudgetError("fj sweep: kmax > 5 exceeds the budget");
    Json report = reportSkeleton("fj_sweep", cfg);
    Json rows = Json::array();
    Json witnesses = Json::array();
    for (int k = 2; k <= kmax; ++k) {
        const FJRatioReport r = fjRatio(k, gramCfg(cfg));
        rows.push_back(
            Json::array({r.k, r.l, r.ratio, r.closed_form, r.gap}));
        witnesses.push_back(Json{{"k", r.k},
                                 {"matrix", matrixRows(fjMatrix(k).matrix)},
                                 {"gram", toJson(r.gram)},
                                 {"signs", toJson(r.signs)}});
    }
    report["table"] =
        Json{{"columns", Json::array({"k", "l", "ratio", "closed_form", "gap"})},
             {"rows", std::move(rows)}};
    report["witnesses"] = std::move(witnesses);
    return report;
}

Json runBalphaScan(double amin, double amax, int steps, const ExperimentConfig& cfg) {
    if (!(amin < amax) || amax >= 0 || steps < 2)
        throw std::invalid_argument("balpha scan: need amin < amax < 0 and steps >= 2");
    std::vector<double> grid;
    grid.reserve(steps + 1);
    for (int i = 0; i < steps; ++i)
        grid.push_back(amin + (amax - amin) * i / (steps - 1));
    // The extremal point must be part of any scan that covers it.
    if (amin <= -1.0 && -1.0 <= amax &&
        std::none_of(grid.begin(), grid.end(), [](double a) { return a == -1.0; })) {
        grid.push_back(-1.0);
        std::sort(grid.begin(), grid.end());
    }

    Json report = reportSkeleton("balpha_scan", cfg);
    Json rows = Json::array();
    double best_ratio = -1.0;
    double best_alpha = 0.0;
    for (double alpha : grid) {
        const double sup_cf = balphaSupNorm(alpha);
        const double gram_cf = balphaGramMax(alpha);
        const double ratio = gram_cf / sup_cf;
        const SymCoeffMatrix b = balphaMatrix(alpha);
        const double sup_num = torusSup(polyFromMatrix(b), torusCfg(cfg)).value;
        const double gram_num = gramMax(b.realPart(), gramCfg(cfg)).value;
        rows.push_back(Json::array({alpha, sup_cf, gram_cf, ratio, sup_num, gram_num,
                                    std::abs(sup_cf - sup_num),
                                    std::abs(gram_cf - gram_num)}));
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_alpha = alpha;
        }
    }
    report["table"] = Json{
        {"columns",
         Json::array({"alpha", "sup_norm", "gram_max", "ratio", "sup_numeric",
                      "gram_numeric", "sup_gap", "gram_gap"})},
        {"rows", std::move(rows)}};
    report["argmax"] = Json{{"alpha", best_alpha}, {"ratio", best_ratio}};
    return report;
}

Json runRandomSearch(int n, int m, int trials, std::uint64_t seed,
                     const ExperimentConfig& cfg) {
    if (n < 1 || n > 6 || m < 1 || m > 8)
        throw BudgetError("search: need 1 <= n <= 6 and 1 <= m <= 8");
    if (trials < 1) throw std::invalid_argument("search: need at least one trial");

    TorusConfig tcfg = torusCfg(cfg);
    GramConfig gcfg = gramCfg(cfg);
    gcfg.multistarts = 8;  // per-trial ascent budget; the best witness is re-polished
    gcfg.rank = std::min(n, m);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);

    double best_ratio = -1.0;
    RMatrix best_matrix;
    int best_trial = -1;
    std::string best_mode;
    for (int trial = 0; trial < trials; ++trial) {
        // Alternate sign-matrix and continuous-entry draws.
        const bool sign_mode = trial % 2 == 0;
        RMatrix a(n, n);
        for (int j = 0; j < n; ++j)
            for (int k = j; k < n; ++k) {
                const double e = sign_mode ? (uni(rng) >= 0 ? 1.0 : -1.0) : uni(rng);
                a(j, k) = e;
                a(k, j) = e;
            }
        gcfg.seed = seed + trial;
        const double sup = torusSup(polyFromMatrix(SymCoeffMatrix(a.cast<Complex>().eval())),
                                    tcfg).value;
        if (sup < 1e-9) continue;
        const double gram = gramMax(a, gcfg).value;
        const double ratio = gram / sup;
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_matrix = a;
            best_trial = trial;
            best_mode = sign_mode ? "sign" : "continuous";
        }
    }
    if (best_trial < 0)
        throw std::runtime_error("search: all trials degenerate");

    // Re-polish the winner with the full multistart budget and package
    // the complete witness chain.
    GramConfig full = gramCfg(cfg);
    full.rank = std::min(n, m);
    const SymCoeffMatrix a(best_matrix.cast<Complex>().eval());
    const PolySpec p = polyFromMatrix(a);
    const SupResult sup = torusSup(p, tcfg);
    const GramWitness gram = gramMax(best_matrix, full);
    std::vector<CVector> xs;
    for (const auto& x : gram.vectors) xs.push_back(x.cast<Complex>());
    const CommutingTuple tuple = CommutingTuple::fromVectors(xs);
    RatioReport best{p, sup, quadNormClosed(symmetrize(a.mat()), tuple), 0.0,
                     tuple.pairs, gram.vectors, "gram"};
    best.ratio = best.operator_value / best.sup.value;

    Json report = reportSkeleton("search", cfg);
    report["config"]["seed"] = seed;
    report["config"]["trials"] = trials;
    report["search"] = Json{{"n", n},
                            {"m", m},
                            {"trials", trials},
                            {"seed", seed},
                            {"best_trial", best_trial},
                            {"best_mode", best_mode},
                            {"vector_field", "real"}};
    report["best"] = toJson(best);
    report["table"] = Json{
        {"columns", Json::array({"n", "m", "trials", "best_trial", "ratio",
                                 "operator_value", "sup_norm"})},
        {"rows", Json::array({Json::array({n, m, trials, best_trial, best.ratio,
                                           best.operator_value, best.sup.value})})}};
    return report;
}

Json runNorm(const PolySpec& p, const ExperimentConfig& cfg) {
    const SupResult sup = torusSup(p, torusCfg(cfg));
    Json report = reportSkeleton("norm", cfg);
    report["poly"] = toJson(p);
    report["sup"] = toJson(sup);
    report["table"] = Json{
        {"columns", Json::array({"value", "certificate_residual", "upper_bound"})},
        {"rows", Json::array({Json::array(
                     {sup.value, sup.certificate_residual, sup.upper_bound})})}};
    return report;
}

std::string renderReport(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format != "csv")
        throw std::invalid_argument("unknown report format: " + format);
    const Json& table = report.at("table");
    std::string out;
    const Json& cols = table.at("columns");
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c) out += ',';
        out += cols[c].get<std::string>();
    }
    out += '\n';
    for (const auto& row : table.at("rows")) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            if (row[c].is_number_float())
                out += formatNumber(row[c].get<double>());
            else if (row[c].is_string())
                out += row[c].get<std::string>();
            else
                out += row[c].dump();
        }
        out += '\n';
    }
    return out;
}

void emitReport(const Json& report, const std::string& format,
                const std::string& path) {
    const std::string body = renderReport(report, format);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << body;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

namespace {

void checkClose(std::vector<std::string>& failures, const std::string& what,
                double got, double expected, double tol) {
    if (!(std::abs(got - expected) <= tol))
        failures.push_back(what + ": recomputed " + formatNumber(got) +
                           " vs reported " + formatNumber(expected));
}

double supFromWitness(const PolySpec& p, const Json& sup) {
    const Json& angles = sup.at("argmax_angles");
    CVector z(angles.size());
    for (std::size_t j = 0; j < angles.size(); ++j)
        z[static_cast<Eigen::Index>(j)] = std::polar(1.0, angles[j].get<double>());
    return std::abs(evaluate(p, z));
}

GramWitness gramFromJson(const Json& j) {
    GramWitness w;
    w.rank = j.at("rank").get<int>();
    w.value = j.at("value").get<double>();
    for (const auto& vec : j.at("vectors")) {
        RVector x(vec.size());
        for (std::size_t i = 0; i < vec.size(); ++i)
            x[static_cast<Eigen::Index>(i)] = vec[i].get<double>();
        w.vectors.push_back(std::move(x));
    }
    return w;
}

void verifyRatioReport(std::vector<std::string>& failures, const Json& r,
                       double tol) {
    const PolySpec p = polyFromJson(r.at("poly"));
    checkClose(failures, "sup value", supFromWitness(p, r.at("sup")),
               r.at("sup").at("value").get<double>(), tol);
    const auto tuple = tupleFromJson(r.at("tuple"));
    const double op = quadNormClosed(p.quad, CommutingTuple::make(tuple));
    checkClose(failures, "operator value", op,
               r.at("operator_value").get<double>(), tol);
    checkClose(failures, "ratio", op / r.at("sup").at("value").get<double>(),
               r.at("ratio").get<double>(), tol);
}

}  // namespace

std::vector<std::string> verifyReport(const Json& report, double tol) {
    std::vector<std::string> failures;
    const std::string kind = report.at("kind").get<std::string>();
    if (kind == "search") {
        verifyRatioReport(failures, report.at("best"), tol);
    } else if (kind == "norm") {
        const PolySpec p = polyFromJson(report.at("poly"));
        checkClose(failures, "sup value", supFromWitness(p, report.at("sup")),
                   report.at("sup").at("value").get<double>(), tol);
    } else if (kind == "sign_table") {
        const Json& rows = report.at("table").at("rows");
        const Json& witnesses = report.at("witnesses");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const RMatrix m = rmatrixFromJson(witnesses[i].at("matrix"));
            const PolySpec p =
                polyFromMatrix(SymCoeffMatrix(m.cast<Complex>().eval()));
            checkClose(failures, "row " + std::to_string(i + 1) + " sup",
                       supFromWitness(p, witnesses[i].at("sup")),
                       rows[i][1].get<double>(), tol);
            checkClose(failures, "row " + std::to_string(i + 1) + " gram",
                       gramFromJson(witnesses[i].at("gram")).recompute(m),
                       rows[i][2].get<double>(), tol);
        }
    } else if (kind == "fj_sweep") {
        const Json& rows = report.at("table").at("rows");
        const Json& witnesses = report.at("witnesses");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const RMatrix m = rmatrixFromJson(witnesses[i].at("matrix"));
            const double gram = gramFromJson(witnesses[i].at("gram")).recompute(m);
            const SignWitness sw = signSup(m);
            checkClose(failures, "k=" + std::to_string(rows[i][0].get<int>()) + " ratio",
                       gram / sw.value, rows[i][2].get<double>(), tol);
        }
    } else if (kind == "balpha_scan") {
        for (const auto& row : report.at("table").at("rows")) {
            const double alpha = row[0].get<double>();
            checkClose(failures, "alpha=" + formatNumber(alpha) + " sup",
                       balphaSupNorm(alpha), row[1].get<double>(), tol);
            checkClose(failures, "alpha=" + formatNumber(alpha) + " gram",
                       balphaGramMax(alpha), row[2].get<double>(), tol);
        }
    } else {
        failures.push_back("unknown report kind: " + kind);
    }
    return failures;
}

}  // namespace vnw
