#pragma once

#include <cstdint>
#include <vector>

#include "vnw/core_model.hpp"

namespace vnw {

struct TorusConfig {
    int resolution = 0;     ///< grid points per free angle; 0 picks a default by n
    int multistarts = 32;   ///< ascent starts taken from the best grid cells
    double tol = 1e-10;     ///< gradient-norm stopping tolerance of the ascent
    std::uint64_t seed = 0;
    int max_iters = 500;
};

struct SupResult {
    double value = 0.0;               ///< best certified lower bound on ||p||_{D^n}
    TorusPoint argmax;
    double certificate_residual = 0.0;  ///< collinearity defect at argmax
    double upper_bound = 0.0;         ///< heuristic grid-Lipschitz padding, not certified
    int grid_resolution = 0;
    int refinements = 0;              ///< ascent steps that improved on the grid value
    bool degenerate = false;          ///< all torus derivatives vanish at argmax
};

/// Supremum norm of p over the closed polydisc, computed on the torus by
/// a coarse grid followed by gradient ascent on |p|^2 in angle space.
/// For homogeneous p the first angle is pinned to 0 (rotation invariance).
SupResult torusSup(const PolySpec& p, TorusConfig cfg = {});

struct SignWitness {
    Eigen::VectorXi signs;  ///< entries +-1, first entry fixed to +1
    double value = 0.0;     ///< max over signs of |s^t A s|
};

/// Exact maximizer of |sum a_jk s_j s_k| over all sign vectors, by
/// Gray-code enumeration of 2^{n-1} representatives (s and -s coincide).
SignWitness signSup(const RMatrix& a);

struct PsdSignReport {
    double torus_value = 0.0;
    double sign_value = 0.0;
    double gap = 0.0;
    SupResult sup;
    SignWitness signs;
};

/// For non-negative definite A the torus supremum of p_A equals the sign
/// supremum; both sides are computed independently and the gap reported.
/// Non-PSD input is rejected.
PsdSignReport psdTorusEqualsSign(const SymCoeffMatrix& a, TorusConfig cfg = {});

/// Collinearity defect of the maximizing condition at t: the vectors
/// d/dtheta_k p(e^{i theta}) together with the tangential component i*p
/// must lie on a line through the origin at a maximizer. Returns the
/// second singular value of the stacked 2-row matrix, normalized by the
/// largest column norm. `degenerate` (optional) is set when every
/// derivative column vanishes.
double collinearityCertificate(const PolySpec& p, const TorusPoint& t,
                               bool* degenerate = nullptr);

/// B_alpha = [[1,1,1],[1,1,alpha],[1,alpha,1]].
SymCoeffMatrix balphaMatrix(double alpha);

/// Closed form of ||p_{B_alpha}||_{D^3}: 7+2a for a > -1, 3-2a for a <= -1.
/// Only established for alpha < 0; other inputs are rejected.
double balphaSupNorm(double alpha);

/// Closed form of the Gram maximum of B_alpha: 3-2a for a > -1/2,
/// 3-2a-1/a for a <= -1/2. Only for alpha < 0.
double balphaGramMax(double alpha);

struct BalphaRow {
    double alpha;
    double sup_norm;
    double gram_max;
    double ratio;
};

/// Closed-form scan of the B_alpha family; the ratio peaks at alpha = -1
/// with value 6/5.
std::vector<BalphaRow> balphaRatioScan(const std::vector<double>& alphas);

}  // namespace vnw
