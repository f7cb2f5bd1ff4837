#include "vnw/gram_opt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace vnw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double bilinearValue(const RMatrix& a, const std::vector<RVector>& xs) {
    const int n = static_cast<int>(a.rows());
    double v = 0.0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) v += a(j, k) * xs[j].dot(xs[k]);
    return v;
}

// Monotone block-coordinate ascent of s * sum a_jk <X_j, X_k> over the
// product of unit spheres. Returns the achieved signed value.
double ascend(const RMatrix& a, double s, std::vector<RVector>& xs,
              const GramConfig& cfg) {
    const int n = static_cast<int>(a.rows());
    double value = s * bilinearValue(a, xs);
    for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
        for (int j = 0; j < n; ++j) {
            RVector g = RVector::Zero(xs[j].size());
            for (int k = 0; k < n; ++k)
                if (k != j) g += a(j, k) * xs[k];
            g *= s;
            const double gn = g.norm();
            if (gn > 0) xs[j] = g / gn;
        }
        const double next = s * bilinearValue(a, xs);
        if (next - value < cfg.tol * std::max(1.0, std::abs(next))) {
            value = std::max(value, next);
            break;
        }
        value = next;
    }
    return value;
}

}  // namespace

double GramWitness::recompute(const RMatrix& a) const {
    return std::abs(bilinearValue(a, vectors));
}

GramWitness gramMax(const RMatrix& a, GramConfig cfg) {
    const int n = static_cast<int>(a.rows());
    if (a.rows() != a.cols() || (a - a.transpose()).cwiseAbs().maxCoeff() > 0)
        throw std::invalid_argument("gram_max: matrix must be real symmetric");
    const int r = cfg.rank > 0 ? cfg.rank : n;

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const SignWitness sw = n <= 24 ? signSup(a) : SignWitness{};

    GramWitness best;
    best.rank = r;
    best.value = -1.0;
    for (int start = 0; start < cfg.multistarts + 2; ++start) {
        std::vector<RVector> xs(n);
        if (start == 0) {
            // Exact sign optimum embedded as rank-one unit vectors;
            // guarantees gram_max >= sign_sup.
            for (int j = 0; j < n; ++j) {
                xs[j] = RVector::Zero(r);
                xs[j][0] = n <= 24 ? static_cast<double>(sw.signs[j]) : 1.0;
            }
        } else if (start == 1 && r >= n) {
            for (int j = 0; j < n; ++j) xs[j] = RVector::Unit(r, j);
        } else {
            for (int j = 0; j < n; ++j) {
                RVector v(r);
                for (int q = 0; q < r; ++q) v[q] = gauss(rng);
                const double nv = v.norm();
                xs[j] = nv > 0 ? RVector(v / nv) : RVector(RVector::Unit(r, 0));
            }
        }
        for (double s : {1.0, -1.0}) {
            std::vector<RVector> ys = xs;
            const double v = ascend(a, s, ys, cfg);
            if (v > best.value) {
                best.value = v;
                best.vectors = std::move(ys);
            }
        }
    }
    best.value = std::abs(bilinearValue(a, best.vectors));
    return best;
}

namespace {

InfToOneResult infToOneReal(const RMatrix& a) {
    const int n = static_cast<int>(a.rows());
    if (n > 24)
        throw BudgetError("inf_to_one_norm: n > 24 exceeds the enumeration budget");
    RVector v = RVector::Ones(n);
    RVector av = a * v;
    InfToOneResult best;
    best.value = av.cwiseAbs().sum();
    RVector best_v = v;
    const std::uint64_t total = n > 1 ? (std::uint64_t{1} << (n - 1)) : 1;
    for (std::uint64_t g = 1; g < total; ++g) {
        const int j = 1 + std::countr_zero(g);
        av += -2.0 * v[j] * a.col(j);
        v[j] = -v[j];
        const double val = av.cwiseAbs().sum();
        if (val > best.value) {
            best.value = val;
            best_v = v;
        }
    }
    best.v = best_v.cast<Complex>();
    const RVector abest = a * best_v;
    best.w = CVector(n);
    for (int i = 0; i < n; ++i) best.w[i] = abest[i] >= 0 ? 1.0 : -1.0;
    return best;
}

InfToOneResult infToOneComplex(const CMatrix& a, const GramConfig& cfg) {
    const int n = static_cast<int>(a.rows());
    if (n > 6)
        throw BudgetError("inf_to_one_norm: complex field limited to n <= 6");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, kTwoPi);

    InfToOneResult best;
    constexpr int kPhaseGrid = 64;
    for (int start = 0; start < cfg.multistarts + 1; ++start) {
        CVector v(n);
        if (start == 0) {
            v.setOnes();
        } else {
            for (int j = 0; j < n; ++j) v[j] = std::polar(1.0, uni(rng));
        }
        // One coordinate-wise phase-grid pass, then closed-form alternation:
        // optimal w given v and optimal per-coordinate phase of v given w.
        for (int j = 0; j < n; ++j) {
            double best_phase = std::arg(v[j]);
            double best_val = (a * v).cwiseAbs().sum();
            for (int q = 0; q < kPhaseGrid; ++q) {
                CVector cand = v;
                cand[j] = std::polar(1.0, q * kTwoPi / kPhaseGrid);
                const double val = (a * cand).cwiseAbs().sum();
                if (val > best_val) {
                    best_val = val;
                    best_phase = q * kTwoPi / kPhaseGrid;
                }
            }
            v[j] = std::polar(1.0, best_phase);
        }
        double value = (a * v).cwiseAbs().sum();
        CVector w(n);
        for (int it = 0; it < 500; ++it) {
            const CVector av = a * v;
            for (int i = 0; i < n; ++i)
                w[i] = std::abs(av[i]) > 0 ? av[i] / std::abs(av[i]) : Complex(1.0);
            // <Av, w> = sum_j v_j c_j with c_j = sum_i a_ij conj(w_i)
            const CVector c = a.transpose() * w.conjugate();
            for (int j = 0; j < n; ++j)
                v[j] = std::abs(c[j]) > 0 ? std::conj(c[j]) / std::abs(c[j]) : v[j];
            const double next = (a * v).cwiseAbs().sum();
            if (next - value < 1e-14 * std::max(1.0, next)) {
                value = std::max(value, next);
                break;
            }
            value = next;
        }
        if (value > best.value) {
            best.value = value;
            best.v = v;
            const CVector av = a * v;
            best.w.resize(n);
            for (int i = 0; i < n; ++i)
                best.w[i] = std::abs(av[i]) > 0 ? av[i] / std::abs(av[i]) : Complex(1.0);
        }
    }
    return best;
}

}  // namespace

InfToOneResult infToOneNorm(const SymCoeffMatrix& a, Field field, GramConfig cfg) {
    if (field == Field::Real) {
        if (!a.isReal())
            throw std::invalid_argument("inf_to_one_norm: real field needs a real matrix");
        return infToOneReal(a.realPart());
    }
    return infToOneComplex(a.mat(), cfg);
}

double betaRank1(const SymCoeffMatrix& a, TorusConfig cfg) {
    if (a.size() != 3)
        throw std::invalid_argument("beta_rank1: rank-one reduction requires n == 3");
    const CMatrix& m = a.mat();
    const int res = cfg.resolution > 0 ? cfg.resolution : 128;
    const double h = kTwoPi / res;

    const auto eval = [&](double t2, double t3) {
        CVector z(3);
        z << 1.0, std::polar(1.0, t2), std::polar(1.0, t3);
        return Complex(z.transpose() * m * z.conjugate());
    };

    // Coarse grid, then gradient ascent on |f|^2 from the best cells.
    std::vector<std::pair<double, Eigen::Vector2d>> seeds;
    for (int i2 = 0; i2 < res; ++i2)
        for (int i3 = 0; i3 < res; ++i3) {
            const double v = std::norm(eval(i2 * h, i3 * h));
            if (seeds.size() < 16 || v > seeds.back().first) {
                seeds.emplace_back(v, Eigen::Vector2d(i2 * h, i3 * h));
                std::sort(seeds.begin(), seeds.end(),
                          [](const auto& x, const auto& y) { return x.first > y.first; });
                if (seeds.size() > 16) seeds.pop_back();
            }
        }

    const auto grad = [&](const Eigen::Vector2d& t, Complex& f) {
        CVector z(3);
        z << 1.0, std::polar(1.0, t[0]), std::polar(1.0, t[1]);
        const CVector az = m * z;
        const CVector azc = m * z.conjugate();
        f = Complex(z.transpose() * azc);
        Eigen::Vector2d g;
        const Complex iu(0.0, 1.0);
        for (int k = 1; k < 3; ++k) {
            const Complex d = iu * (z[k] * azc[k] - std::conj(z[k]) * az[k]);
            g[k - 1] = 2.0 * (std::conj(f) * d).real();
        }
        return g;
    };

    double best = 0.0;
    for (auto& [sv, seed] : seeds) {
        Eigen::Vector2d t = seed;
        double fval = sv;
        double step = 0.25;
        for (int it = 0; it < 500; ++it) {
            Complex f;
            const Eigen::Vector2d g = grad(t, f);
            if (g.norm() < 1e-12) break;
            bool ok = false;
            while (step > 1e-18) {
                const Eigen::Vector2d cand = t + step * g;
                const double cv = std::norm(eval(cand[0], cand[1]));
                if (cv > fval) {
                    t = cand;
                    fval = cv;
                    step *= 1.3;
                    ok = true;
                    break;
                }
                step *= 0.5;
            }
            if (!ok) break;
        }
        best = std::max(best, std::sqrt(fval));
    }
    return best;
}

FJFamily fjMatrix(int k) {
    if (k < 2) throw std::invalid_argument("fj_matrix: k must be at least 2");
    if (k > 8) throw BudgetError("fj_matrix: k > 8 exceeds the family budget");
    FJFamily f;
    f.k = k;
    f.l = k * (k - 1);
    f.vectors = RMatrix::Zero(f.l, k);
    int row = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (double sign : {1.0, -1.0}) {
                f.vectors(row, i) = 1.0;
                f.vectors(row, j) = sign;
                ++row;
            }
    f.matrix = f.vectors * f.vectors.transpose();
    return f;
}

FJRatioReport fjRatio(int k, GramConfig cfg) {
    if (k > 5)
        throw BudgetError("fj_ratio: k > 5 exceeds the sign enumeration budget");
    const FJFamily fam = fjMatrix(k);
    FJRatioReport rep;
    rep.k = k;
    rep.l = fam.l;
    rep.gram = gramMax(fam.matrix, cfg);
    rep.signs = signSup(fam.matrix);
    rep.gram_value = rep.gram.value;
    rep.sign_value = rep.signs.value;
    rep.ratio = rep.gram_value / rep.sign_value;
    rep.closed_form = (3.0 * k - 3.0) / (2.0 * k - 1.0);
    rep.gap = std::abs(rep.ratio - rep.closed_form);
    return rep;
}

RatioReport cplusWitness(const SymCoeffMatrix& a, GramConfig cfg) {
    if (!isPsd(a))
        throw std::invalid_argument("cplus_witness: matrix is not non-negative definite");
    const SymCoeffMatrix s = symmetrize(a.mat());
    const RMatrix b = s.realPart();
    const GramWitness gram = gramMax(b, cfg);
    const SignWitness signs = signSup(b);

    const PolySpec p = polyFromMatrix(a);
    // For PSD matrices the sign optimum is a torus maximizer, so the sup
    // side of the report comes from the exact sign witness.
    SupResult sup;
    sup.value = signs.value;
    sup.argmax.angles = RVector::Zero(p.n);
    for (int j = 0; j < p.n; ++j)
        sup.argmax.angles[j] = signs.signs[j] > 0 ? 0.0 : std::numbers::pi;
    sup.certificate_residual = collinearityCertificate(p, sup.argmax, &sup.degenerate);

    std::vector<CVector> xs;
    xs.reserve(gram.vectors.size());
    for (const auto& x : gram.vectors) xs.push_back(x.cast<Complex>());
    const CommutingTuple tuple = CommutingTuple::fromVectors(xs);

    RatioReport rep{p, sup, quadNormClosed(s, tuple), 0.0, tuple.pairs,
                    gram.vectors, "gram"};
    rep.ratio = rep.operator_value / rep.sup.value;
    return rep;
}

ScriptARatio scriptARatio(const SymCoeffMatrix& a, Field field, GramConfig gcfg,
                          TorusConfig tcfg) {
    ScriptARatio r;
    r.inf_witness = infToOneNorm(a, field, gcfg);
    r.sup = torusSup(polyFromMatrix(a), tcfg);
    r.inf_to_one = r.inf_witness.value;
    r.sup_norm = r.sup.value;
    r.ratio = r.inf_to_one / r.sup_norm;
    return r;
}

}  // namespace vnw
