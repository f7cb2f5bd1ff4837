#include "vnw/varopoulos.hpp"

#include <cmath>
#include <random>

namespace vnw {

VaropoulosPair::VaropoulosPair(CVector x_, CVector y_)
    : x(std::move(x_)), y(std::move(y_)) {
    if (x.size() != y.size())
        throw std::invalid_argument("VaropoulosPair: x and y must share a dimension");
}

VaropoulosPair::VaropoulosPair(CVector x_) : x(x_), y(std::move(x_)) {}

Complex bracket(const CVector& x, const CVector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("bracket: length mismatch");
    return x.transpose() * y;
}

CMatrix makeVaropoulos(const VaropoulosPair& p) {
    const int m = p.m();
    CMatrix t = CMatrix::Zero(m + 2, m + 2);
    t.block(0, 1, 1, m) = p.x.transpose();
    t.block(1, m + 1, m, 1) = p.y;
    return t;
}

bool commuteCheck(const VaropoulosPair& p1, const VaropoulosPair& p2, double tol) {
    if (p1.m() != p2.m())
        throw std::invalid_argument("commute_check: dimension mismatch");
    return std::abs(bracket(p1.x, p2.y) - bracket(p2.x, p1.y)) <= tol;
}

RVector realify(const CVector& x) {
    const int m = static_cast<int>(x.size());
    RVector r(2 * m);
    r.head(m) = x.real();
    r.tail(m) = x.imag();
    return r;
}

CommutingTuple CommutingTuple::make(std::vector<VaropoulosPair> pairs, double tol) {
    CommutingTuple t;
    for (std::size_t j = 0; j < pairs.size(); ++j)
        for (std::size_t k = j + 1; k < pairs.size(); ++k)
            if (!commuteCheck(pairs[j], pairs[k], tol))
                throw std::invalid_argument("CommutingTuple: pairs do not commute");
    t.contractive = true;
    for (const auto& p : pairs) {
        const double nrm = std::max(p.x.norm(), p.y.norm());
        if (nrm > 1.0 + 1e-12) t.contractive = false;
    }
    t.pairs = std::move(pairs);
    return t;
}

CommutingTuple CommutingTuple::fromVectors(const std::vector<CVector>& xs,
                                           bool realified) {
    std::vector<VaropoulosPair> pairs;
    pairs.reserve(xs.size());
    for (const auto& x : xs) {
        if (realified) {
            const RVector r = realify(x);
            pairs.emplace_back(r.cast<Complex>().eval());
        } else {
            pairs.emplace_back(x);
        }
    }
    return make(std::move(pairs));
}

std::vector<CMatrix> CommutingTuple::operators() const {
    std::vector<CMatrix> ops;
    ops.reserve(pairs.size());
    for (const auto& p : pairs) ops.push_back(makeVaropoulos(p));
    return ops;
}

double quadNormClosed(const SymCoeffMatrix& a, const CommutingTuple& t) {
    if (a.size() != t.n())
        throw std::invalid_argument("quad_norm_closed: size mismatch");
    Complex corner(0.0);
    for (int j = 0; j < t.n(); ++j)
        for (int k = 0; k < t.n(); ++k)
            corner += a(j, k) * bracket(t.pairs[j].x, t.pairs[k].y);
    return std::abs(corner);
}

CMatrix evalPolyOnTuple(const PolySpec& p, const std::vector<CMatrix>& ops,
                        double commute_tol) {
    if (static_cast<int>(ops.size()) != p.n)
        throw std::invalid_argument("eval_poly_on_tuple: tuple length mismatch");
    const Eigen::Index dim = ops.empty() ? 0 : ops.front().rows();
    for (const auto& op : ops)
        if (op.rows() != dim || op.cols() != dim)
            throw std::invalid_argument("eval_poly_on_tuple: operator dimension mismatch");
    for (std::size_t j = 0; j < ops.size(); ++j)
        for (std::size_t k = j + 1; k < ops.size(); ++k)
            if ((ops[j] * ops[k] - ops[k] * ops[j]).cwiseAbs().maxCoeff() > commute_tol)
                throw std::invalid_argument("eval_poly_on_tuple: operators do not commute");

    CMatrix r = p.a0 * CMatrix::Identity(dim, dim);
    for (int j = 0; j < p.n; ++j) r += p.linear[j] * ops[j];
    for (int j = 0; j < p.n; ++j)
        for (int k = 0; k < p.n; ++k)
            if (p.quad(j, k) != Complex(0.0)) r += p.quad(j, k) * (ops[j] * ops[k]);
    return r;
}

double operatorNorm(const CMatrix& t, std::uint64_t seed) {
    const Eigen::Index dim = t.rows();
    if (dim < 1 || t.cols() != dim)
        throw std::invalid_argument("operator_norm: operator must be square and nonempty");
    const CMatrix b = t.adjoint() * t;  // Hermitian PSD, top eigenvalue = ||T||^2
    const double scale = b.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;

    // Power iteration accelerated by repeated squaring: after s squarings
    // c acts like b^(2^s), so even a tiny spectral gap is resolved before
    // the Rayleigh quotient is taken.
    CMatrix c = b / scale;
    constexpr int kSquarings = 48;
    for (int s = 0; s < kSquarings; ++s) {
        c = (c * c).eval();
        const double m = c.cwiseAbs().maxCoeff();
        if (m == 0.0) return 0.0;
        c /= m;
    }

    double lambda_best = 0.0;
    constexpr int kRestarts = 8;
    for (int r = 0; r < kRestarts; ++r) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + r + 1);
        std::normal_distribution<double> gauss(0.0, 1.0);
        CVector v(dim);
        for (Eigen::Index j = 0; j < dim; ++j) v[j] = Complex(gauss(rng), gauss(rng));
        CVector w = c * v;
        const double nw = w.norm();
        if (nw == 0.0) continue;
        w /= nw;
        lambda_best = std::max(lambda_best, std::real(w.dot(b * w)));
    }
    return std::sqrt(std::max(0.0, lambda_best));
}

RatioReport vnRatio(const PolySpec& p, const CommutingTuple& t, TorusConfig cfg) {
    if (!t.contractive)
        throw std::invalid_argument("vn_ratio: tuple is not contractive");
    if (t.n() != p.n)
        throw std::invalid_argument("vn_ratio: tuple length mismatch");
    RatioReport rep{p, torusSup(p, cfg), 0.0, 0.0, t.pairs, {}, ""};
    if (p.isHomogeneous()) {
        rep.operator_value = quadNormClosed(p.quad, t);
        rep.method = "closed_form";
    } else {
        rep.operator_value = operatorNorm(evalPolyOnTuple(p, t.operators()), cfg.seed);
        rep.method = "oracle";
    }
    rep.ratio = rep.operator_value / rep.sup.value;
    return rep;
}

}  // namespace vnw
