#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace vnw {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Thrown when a requested computation exceeds the configured
/// enumeration/grid budget. The CLI maps this to exit code 2.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Complex symmetric coefficient matrix. Entries are stored
/// post-symmetrization: entries(j,k) == entries(k,j) bit-exactly.
class SymCoeffMatrix {
public:
    explicit SymCoeffMatrix(CMatrix entries);

    /// S(A) = (A + A^t)/2, written so that both mirror entries hold the
    /// identical double pair.
    static SymCoeffMatrix symmetrized(const CMatrix& a);

    int size() const { return static_cast<int>(entries_.rows()); }
    const CMatrix& mat() const { return entries_; }
    Complex operator()(int j, int k) const { return entries_(j, k); }

    bool isReal(double tol = 0.0) const;
    RMatrix realPart() const { return entries_.real(); }

private:
    CMatrix entries_;
};

/// Polynomial of degree at most two in n complex variables:
///   p(z) = a0 + sum_j linear[j] z_j + sum_{j,k} quad(j,k) z_j z_k.
struct PolySpec {
    int n;
    Complex a0;
    CVector linear;
    SymCoeffMatrix quad;

    PolySpec(int n_, Complex a0_, CVector linear_, SymCoeffMatrix quad_);

    bool isHomogeneous(double tol = 0.0) const;
};

/// Point on the n-torus, stored as angles; coordinates are e^{i theta_j}.
struct TorusPoint {
    RVector angles;

    CVector coords() const;
};

}  // namespace vnw
