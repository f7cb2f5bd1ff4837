#pragma once

#include <cstdint>
#include <vector>

#include "vnw/varopoulos.hpp"

namespace vnw {

struct GramConfig {
    int rank = 0;          ///< embedding dimension r; 0 means r = n
    int multistarts = 64;
    int max_sweeps = 2000;
    double tol = 1e-12;    ///< sweep improvement threshold
    std::uint64_t seed = 1;
};

/// Unit vectors X_1..X_n in R^r with the achieved value
/// |sum a_jk <X_j, X_k>|.
struct GramWitness {
    int rank = 0;
    std::vector<RVector> vectors;
    double value = 0.0;

    /// Recompute |sum a_jk <X_j, X_k>| from the stored vectors.
    double recompute(const RMatrix& a) const;
};

/// max over unit vectors X_j in R^r of |sum a_jk <X_j, X_k>|, by
/// block-coordinate ascent over the factorized elliptope with seeded
/// multistarts plus a start at the exact sign optimum. Lower-bound
/// certified: the value always recomputes from the witness vectors.
GramWitness gramMax(const RMatrix& a, GramConfig cfg = {});

enum class Field { Real, Complex };

struct InfToOneResult {
    double value = 0.0;
    CVector v;
    CVector w;
};

/// ||A||_{inf->1} = sup |<Av, w>| over sup-norm unit vectors. The real
/// case is exact (optimum at +-1 vertices, exhaustive up to n = 24); the
/// complex case is a certified lower bound from coordinate-wise phase
/// ascent with a phase-grid start.
InfToOneResult infToOneNorm(const SymCoeffMatrix& a, Field field,
                            GramConfig cfg = {});

/// beta(A) for n = 3 via the rank-one extreme points of the elliptope:
/// sup over |z_i| = 1 of |sum a_ij z_i conj(z_j)|, a two-angle torus
/// optimization with z_1 pinned to 1. Rejects n != 3.
double betaRank1(const SymCoeffMatrix& a, TorusConfig cfg = {});

/// The k(k-1) vectors in R^k with exactly two nonzero entries, (1,1) or
/// (1,-1) in that order, enumerated lexicographically by (i, j, pattern),
/// together with their exact integer Gram matrix A_k.
struct FJFamily {
    int k = 0;
    int l = 0;            ///< k(k-1)
    RMatrix vectors;      ///< l x k, one vector per row
    RMatrix matrix;       ///< l x l Gram matrix, diagonal all 2
};

FJFamily fjMatrix(int k);

struct FJRatioReport {
    int k = 0;
    int l = 0;
    double gram_value = 0.0;
    double sign_value = 0.0;
    double ratio = 0.0;
    double closed_form = 0.0;  ///< (3k-3)/(2k-1)
    double gap = 0.0;
    GramWitness gram;
    SignWitness signs;
};

/// gram_max(A_k) / sign_sup(A_k); approaches (3k-3)/(2k-1).
FJRatioReport fjRatio(int k, GramConfig cfg = {});

/// Witness of the C_2^+(n) supremand for PSD A: gram_max(S(A)) over
/// sign_sup(S(A)) (the sign supremum equals the torus supremum for PSD
/// matrices), with the full chain vectors -> realified tuple -> operator
/// value recorded in the report.
RatioReport cplusWitness(const SymCoeffMatrix& a, GramConfig cfg = {});

struct ScriptARatio {
    double inf_to_one = 0.0;
    double sup_norm = 0.0;
    double ratio = 0.0;
    InfToOneResult inf_witness;
    SupResult sup;
};

/// ||A||_{inf->1} / ||p_A||_{D^n}, one evaluation of the map whose
/// operator-norm supremum bounds the Grothendieck-type constant.
ScriptARatio scriptARatio(const SymCoeffMatrix& a, Field field = Field::Complex,
                          GramConfig gcfg = {}, TorusConfig tcfg = {});

}  // namespace vnw
