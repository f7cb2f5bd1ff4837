#include "vnw/core_model.hpp"

#include <Eigen/Eigenvalues>

namespace vnw {

SymCoeffMatrix::SymCoeffMatrix(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
        throw std::invalid_argument("SymCoeffMatrix: matrix must be square");
    for (int j = 0; j < entries_.rows(); ++j)
        for (int k = 0; k < j; ++k)
            if (entries_(j, k) != entries_(k, j))
                throw std::invalid_argument("SymCoeffMatrix: matrix must be symmetric");
}

SymCoeffMatrix SymCoeffMatrix::symmetrized(const CMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("symmetrize: matrix must be square");
    CMatrix s(a.rows(), a.cols());
    for (int j = 0; j < a.rows(); ++j) {
        s(j, j) = a(j, j);
        for (int k = 0; k < j; ++k) {
            const Complex v = (a(j, k) + a(k, j)) / 2.0;
            s(j, k) = v;
            s(k, j) = v;
        }
    }
    return SymCoeffMatrix(std::move(s));
}

bool SymCoeffMatrix::isReal(double tol) const {
    for (int j = 0; j < entries_.rows(); ++j)
        for (int k = 0; k < entries_.cols(); ++k)
            if (std::abs(entries_(j, k).imag()) > tol) return false;
    return true;
}

PolySpec::PolySpec(int n_, Complex a0_, CVector linear_, SymCoeffMatrix quad_)
    : n(n_), a0(a0_), linear(std::move(linear_)), quad(std::move(quad_)) {
    if (n <= 0) throw std::invalid_argument("PolySpec: n must be positive");
    if (linear.size() != n || quad.size() != n)
        throw std::invalid_argument("PolySpec: inconsistent dimensions");
}

bool PolySpec::isHomogeneous(double tol) const {
    if (std::abs(a0) > tol) return false;
    for (int j = 0; j < n; ++j)
        if (std::abs(linear[j]) > tol) return false;
    return true;
}

CVector TorusPoint::coords() const {
    CVector z(angles.size());
    for (int j = 0; j < angles.size(); ++j)
        z[j] = std::polar(1.0, angles[j]);
    return z;
}

SymCoeffMatrix symmetrize(const CMatrix& a) { return SymCoeffMatrix::symmetrized(a); }

PolySpec polyFromMatrix(const SymCoeffMatrix& a) {
    const int n = a.size();
    return PolySpec(n, Complex(0.0), CVector::Zero(n), a);
}

SymCoeffMatrix homogenize(const PolySpec& p) {
    CMatrix h = CMatrix::Zero(p.n + 1, p.n + 1);
    h(0, 0) = p.a0;
    for (int j = 0; j < p.n; ++j) {
        h(0, j + 1) = p.linear[j] / 2.0;
        h(j + 1, 0) = h(0, j + 1);
    }
    h.block(1, 1, p.n, p.n) = p.quad.mat();
    return SymCoeffMatrix(std::move(h));
}

Complex evaluate(const PolySpec& p, const CVector& z) {
    if (z.size() != p.n)
        throw std::invalid_argument("evaluate: point dimension mismatch");
    const Complex lin = (p.linear.transpose() * z).value();
    const Complex quad = (z.transpose() * p.quad.mat() * z).value();
    return p.a0 + lin + quad;
}

bool isPsd(const SymCoeffMatrix& a, double tol) {
    if (tol < 0) throw std::invalid_argument("isPsd: tol must be nonnegative");
    const CMatrix& m = a.mat();
    // Hermitian within tol; for a symmetric matrix this forces near-real entries.
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    Eigen::SelfAdjointEigenSolver<CMatrix> es((m + m.adjoint()) / 2.0);
    return es.eigenvalues().minCoeff() >= -tol;
}

}  // namespace vnw
