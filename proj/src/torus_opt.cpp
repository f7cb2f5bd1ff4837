#include "vnw/torus_opt.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace vnw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Largest grid the coarse stage is allowed to enumerate.
constexpr std::int64_t kMaxGridCells = 1 << 24;

double wrapAngle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

struct TorusEval {
    Complex f;
    CVector dtheta;  // dtheta[k] = d/dtheta_k p(e^{i theta})
};

TorusEval evalOnTorus(const PolySpec& p, const RVector& angles) {
    CVector z(p.n);
    for (int j = 0; j < p.n; ++j) z[j] = std::polar(1.0, angles[j]);
    const CVector az = p.quad.mat() * z;
    TorusEval e;
    e.f = p.a0 + (p.linear.transpose() * z).value() + (z.transpose() * az).value();
    e.dtheta.resize(p.n);
    const Complex iu(0.0, 1.0);
    for (int k = 0; k < p.n; ++k)
        e.dtheta[k] = iu * z[k] * (p.linear[k] + 2.0 * az[k]);
    return e;
}

double absSq(const PolySpec& p, const RVector& angles) {
    const TorusEval e = evalOnTorus(p, angles);
    return std::norm(e.f);
}

bool lexLess(const RVector& a, const RVector& b) {
    for (int j = 0; j < a.size(); ++j) {
        if (a[j] < b[j]) return true;
        if (a[j] > b[j]) return false;
    }
    return false;
}

}  // namespace

SupResult torusSup(const PolySpec& p, TorusConfig cfg) {
    if (p.n > 8) throw BudgetError("torus_sup: n > 8 exceeds the grid budget");
    int res = cfg.resolution;
    if (res == 0) res = p.n <= 3 ? 64 : (p.n <= 5 ? 24 : 16);
    if (res < 16) throw BudgetError("torus_sup: resolution must be at least 16");

    // Homogeneous polynomials are invariant in modulus under a global
    // rotation of all coordinates, so one angle can be pinned to zero.
    const bool homogeneous = p.isHomogeneous();
    const int first_free = homogeneous ? 1 : 0;
    const int free_angles = p.n - first_free;

    std::int64_t cells = 1;
    for (int j = 0; j < free_angles; ++j) {
        cells *= res;
        if (cells > kMaxGridCells)
            throw BudgetError("torus_sup: n too large for the configured budget");
    }

    const double h = kTwoPi / res;

    // Coarse grid: keep the best `multistarts` cells as ascent seeds.
    const int keep = std::max(1, cfg.multistarts);
    std::vector<std::pair<double, RVector>> seeds;
    seeds.reserve(static_cast<std::size_t>(keep) + 1);
    RVector angles = RVector::Zero(p.n);
    double grid_best = 0.0;
    std::vector<int> idx(free_angles, 0);
    for (std::int64_t c = 0; c < cells; ++c) {
        for (int j = 0; j < free_angles; ++j) angles[first_free + j] = idx[j] * h;
        const double v = absSq(p, angles);
        grid_best = std::max(grid_best, v);
        if (seeds.size() < static_cast<std::size_t>(keep) || v > seeds.back().first) {
            seeds.emplace_back(v, angles);
            std::sort(seeds.begin(), seeds.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
            if (seeds.size() > static_cast<std::size_t>(keep)) seeds.pop_back();
        }
        for (int j = 0; j < free_angles; ++j) {
            if (++idx[j] < res) break;
            idx[j] = 0;
        }
    }

    // Gradient ascent on |p|^2 in angle space from each seed.
    SupResult best;
    best.grid_resolution = res;
    bool have_best = false;
    for (auto& [seed_val, seed] : seeds) {
        RVector theta = seed;
        double fval = seed_val;
        double step = 0.25;
        int improved = 0;
        for (int it = 0; it < cfg.max_iters; ++it) {
            const TorusEval e = evalOnTorus(p, theta);
            RVector grad = RVector::Zero(p.n);
            for (int k = first_free; k < p.n; ++k)
                grad[k] = 2.0 * (std::conj(e.f) * e.dtheta[k]).real();
            if (grad.norm() < cfg.tol) break;
            bool accepted = false;
            while (step > 1e-18) {
                RVector cand = theta + step * grad;
                const double cv = absSq(p, cand);
                if (cv > fval) {
                    theta = std::move(cand);
                    fval = cv;
                    step *= 1.3;
                    accepted = true;
                    ++improved;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted) break;
        }
        for (int j = 0; j < p.n; ++j) theta[j] = wrapAngle(theta[j]);
        const double value = std::sqrt(absSq(p, theta));
        const bool better =
            !have_best || value > best.value + 1e-12 ||
            (std::abs(value - best.value) <= 1e-12 && lexLess(theta, best.argmax.angles));
        if (better) {
            best.value = value;
            best.argmax.angles = theta;
            best.refinements = improved;
            have_best = true;
        }
    }

    // Heuristic Lipschitz padding of the grid value; reported, not certified.
    double lip = 0.0;
    for (int k = 0; k < p.n; ++k)
        lip += std::abs(p.linear[k]) + 2.0 * p.quad.mat().row(k).cwiseAbs().sum();
    best.upper_bound = std::max(best.value, std::sqrt(grid_best)) + lip * h / 2.0;
    best.certificate_residual = collinearityCertificate(p, best.argmax, &best.degenerate);
    return best;
}

SignWitness signSup(const RMatrix& a) {
    const int n = static_cast<int>(a.rows());
    if (a.rows() != a.cols() || (a - a.transpose()).cwiseAbs().maxCoeff() > 0)
        throw std::invalid_argument("sign_sup: matrix must be real symmetric");
    if (n > 24) throw BudgetError("sign_sup: n > 24 exceeds the enumeration budget");

    RVector s = RVector::Ones(n);
    RVector as = a * s;
    double v = s.dot(as);
    SignWitness best;
    best.value = std::abs(v);
    best.signs = Eigen::VectorXi::Ones(n);

    // Gray-code walk over the 2^{n-1} representatives with s_0 fixed to +1.
    const std::uint64_t total = n > 1 ? (std::uint64_t{1} << (n - 1)) : 1;
    for (std::uint64_t g = 1; g < total; ++g) {
        const int j = 1 + std::countr_zero(g);
        v += -4.0 * s[j] * as[j] + 4.0 * a(j, j);
        as += -2.0 * s[j] * a.col(j);
        s[j] = -s[j];
        if (std::abs(v) > best.value) {
            best.value = std::abs(v);
            for (int k = 0; k < n; ++k) best.signs[k] = s[k] > 0 ? 1 : -1;
        }
    }
    return best;
}

PsdSignReport psdTorusEqualsSign(const SymCoeffMatrix& a, TorusConfig cfg) {
    if (!isPsd(a))
        throw std::invalid_argument(
            "psd_torus_equals_sign: matrix is not non-negative definite");
    PsdSignReport rep;
    rep.sup = torusSup(polyFromMatrix(a), cfg);
    rep.signs = signSup(symmetrize(a.mat()).realPart());
    rep.torus_value = rep.sup.value;
    rep.sign_value = rep.signs.value;
    rep.gap = std::abs(rep.torus_value - rep.sign_value);
    return rep;
}

double collinearityCertificate(const PolySpec& p, const TorusPoint& t, bool* degenerate) {
    if (t.angles.size() != p.n)
        throw std::invalid_argument("collinearity_certificate: dimension mismatch");
    const TorusEval e = evalOnTorus(p, t.angles);

    Eigen::Matrix2Xd cols(2, p.n + 1);
    double deriv_max = 0.0;
    for (int k = 0; k < p.n; ++k) {
        cols(0, k) = e.dtheta[k].real();
        cols(1, k) = e.dtheta[k].imag();
        deriv_max = std::max(deriv_max, std::abs(e.dtheta[k]));
    }
    // Tangential component of f on its modulus circle: i*f.
    cols(0, p.n) = -e.f.imag();
    cols(1, p.n) = e.f.real();

    if (degenerate) *degenerate = deriv_max == 0.0;
    const double col_max = std::max(deriv_max, std::abs(e.f));
    if (col_max == 0.0) return 0.0;

    Eigen::JacobiSVD<Eigen::Matrix2Xd> svd(cols);
    return svd.singularValues()[1] / col_max;
}

SymCoeffMatrix balphaMatrix(double alpha) {
    CMatrix b(3, 3);
    b << 1, 1, 1, 1, 1, alpha, 1, alpha, 1;
    return SymCoeffMatrix(std::move(b));
}

double balphaSupNorm(double alpha) {
    if (alpha >= 0)
        throw std::invalid_argument("balpha_sup_norm: closed form requires alpha < 0");
    return alpha > -1.0 ? 7.0 + 2.0 * alpha : 3.0 - 2.0 * alpha;
}

double balphaGramMax(double alpha) {
    if (alpha >= 0)
        throw std::invalid_argument("balpha_gram_max: closed form requires alpha < 0");
    return alpha > -0.5 ? 3.0 - 2.0 * alpha : 3.0 - 2.0 * alpha - 1.0 / alpha;
}

std::vector<BalphaRow> balphaRatioScan(const std::vector<double>& alphas) {
    std::vector<BalphaRow> rows;
    rows.reserve(alphas.size());
    for (double a : alphas) {
        BalphaRow r;
        r.alpha = a;
        r.sup_norm = balphaSupNorm(a);
        r.gram_max = balphaGramMax(a);
        r.ratio = r.gram_max / r.sup_norm;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace vnw
