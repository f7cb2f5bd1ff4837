#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vnw/torus_opt.hpp"

namespace vnw {

/// Pair (x, y) of complex m-vectors inducing the nilpotent operator
/// T_{x,y} on C^{m+2}.
struct VaropoulosPair {
    CVector x;
    CVector y;

    VaropoulosPair(CVector x_, CVector y_);
    /// The symmetric pair T_x (x = y); any two of these commute.
    explicit VaropoulosPair(CVector x_);

    int m() const { return static_cast<int>(x.size()); }
};

/// The bilinear pairing [x#, y] = sum_j x_j y_j, with no conjugation.
/// Deliberately distinct from the sesquilinear inner product.
Complex bracket(const CVector& x, const CVector& y);

/// Dense (m+2)x(m+2) matrix of T_{x,y} = [[0, x#, 0],[0, 0, y],[0, 0, 0]].
/// Strictly upper triangular in the 1+m+1 block grading; T^3 = 0 exactly.
CMatrix makeVaropoulos(const VaropoulosPair& p);

/// T_{x1,y1} and T_{x2,y2} commute iff [x1#, y2] == [x2#, y1].
bool commuteCheck(const VaropoulosPair& p1, const VaropoulosPair& p2,
                  double tol = 1e-12);

/// R = ((conj(x)+x)/2, i(conj(x)-x)/2) = (Re x, Im x), a real 2m-vector
/// with ||R|| == ||x|| and <R_j,R_k> == Re<x_j,x_k>.
RVector realify(const CVector& x);

/// Tuple of n Varopoulos pairs sharing m, verified pairwise commuting.
struct CommutingTuple {
    std::vector<VaropoulosPair> pairs;
    bool contractive = false;  ///< every max(||x_j||, ||y_j||) <= 1 + 1e-12

    static CommutingTuple make(std::vector<VaropoulosPair> pairs,
                               double tol = 1e-12);
    /// Symmetric tuple from (optionally realified) vectors.
    static CommutingTuple fromVectors(const std::vector<CVector>& xs,
                                      bool realified = false);

    int n() const { return static_cast<int>(pairs.size()); }
    int m() const { return pairs.empty() ? 0 : pairs.front().m(); }
    std::vector<CMatrix> operators() const;
};

/// ||p_A(T_1,...,T_n)|| for a commuting Varopoulos tuple: the product
/// T_j T_k has the single corner entry [x_j#, y_k], so the norm is
/// |sum a_jk [x_j#, y_k]|.
double quadNormClosed(const SymCoeffMatrix& a, const CommutingTuple& t);

/// a0 I + sum a_j T_j + sum a_jk T_j T_k for commuting dense operators.
CMatrix evalPolyOnTuple(const PolySpec& p, const std::vector<CMatrix>& ops,
                        double commute_tol = 1e-8);

/// Largest singular value via power iteration on T*T with random restarts.
double operatorNorm(const CMatrix& t, std::uint64_t seed = 0);

/// Von Neumann violation witness: everything needed to recompute the ratio.
struct RatioReport {
    PolySpec poly;
    SupResult sup;           ///< polydisc sup norm with certificate
    double operator_value = 0.0;  ///< ||p(T)|| (or Gram value, for Gram witnesses)
    double ratio = 0.0;
    std::vector<VaropoulosPair> tuple;  ///< witness tuple, may be empty
    std::vector<RVector> gram_vectors;  ///< witness unit vectors, may be empty
    std::string method;      ///< "closed_form", "oracle" or "gram"
};

/// One witness of the C_2(n) supremand: ||p(T)|| / ||p||_{D^n} for a
/// commuting contractive tuple. ratio > 1 certifies a von Neumann
/// violation. Non-contractive tuples are rejected.
RatioReport vnRatio(const PolySpec& p, const CommutingTuple& t, TorusConfig cfg = {});

}  // namespace vnw
