#pragma once

#include "vnw/types.hpp"

namespace vnw {

/// S(A) = (A + A^t)/2. Rejects non-square input. The associated
/// polynomial is unchanged: p_A(z) == p_{S(A)}(z) on all of C^n.
SymCoeffMatrix symmetrize(const CMatrix& a);

/// Homogeneous degree-two polynomial p_A(z) = sum_{j,k} a_jk z_j z_k.
PolySpec polyFromMatrix(const SymCoeffMatrix& a);

/// The (n+1)x(n+1) symmetric matrix A(p) with p's constant in the corner,
/// half the linear coefficients on the border and the quadratic block
/// inside. Sup norms over the polydisc are preserved:
/// ||p||_{D^n} == ||p_{A(p)}||_{D^{n+1}}.
SymCoeffMatrix homogenize(const PolySpec& p);

/// Evaluate p at z (length must equal p.n).
Complex evaluate(const PolySpec& p, const CVector& z);

/// True iff A is Hermitian within tol and all eigenvalues are >= -tol.
bool isPsd(const SymCoeffMatrix& a, double tol = 1e-10);

}  // namespace vnw
