#pragma once

#include "qf/hermitian.hpp"
#include "qf/lattice.hpp"
#include "qf/padic.hpp"
#include "qf/quadratic.hpp"
#include "qf/square_class.hpp"

#include <utility>
#include <vector>

namespace qf {

// Fiber computations certify congruences modulo p^m; this is the default m.
inline constexpr long kDefaultFiberPrecision = 6;

enum class FiberKind { orth, herm };

// A maximal lattice split as A.e + L: the plane W = A.e (a line in the
// Hermitian case) carrying the p-scaled norm form with q(e) = p, an
// orthogonal self-dual part L, and an orientation selecting the sqrt-action
// on W.  ext_d is the unit nonresidue generating the quadratic extension
// (the canonical nonresidue for orthogonal data, -m for a field Q(sqrt(-m))).
struct BaseDecomposition {
    FiberKind kind;
    Int p;
    long n;        // ambient rank
    Int field_m;   // Hermitian field modulus; 0 for orthogonal data
    Int ext_d;
    int orientation;
    RationalMatrix W_gram;
    RationalMatrix L_gram;
};

// Standard decomposition for orthogonal local data (dim, unit det, eps) with
// eps = -1, assembled from the maximal lattice; dim >= 3, p odd.
BaseDecomposition base_point_orth(long dim, const SquareClass& det, int eps, const Int& p,
                                  int orientation = 1);

// Hermitian analogue for the non-norm class (cls = -1) at an odd inert
// prime; dim >= 2.
BaseDecomposition base_point_herm(const ImagQuadField& field, long dim, int cls,
                                  const Int& p, int orientation = 1);

// The full Gram of the decomposed lattice, W block first.
RationalMatrix lambda_gram(const BaseDecomposition& base);

// A point of the fiber over the base lattice: one extension-ring coordinate
// per L-basis vector, each lying in the maximal ideal (valuation >= 1), at
// certification precision m.
struct FiberParameter {
    std::vector<QuadExtNum> entries;
    long precision;
};

// Build a parameter from exact coordinate pairs x_i + y_i*sqrt(ext_d).
FiberParameter fiber_parameter_from_rationals(
    const BaseDecomposition& base,
    const std::vector<std::pair<Rational, Rational>>& coords, long precision);

// A basis vector of the moved lattice written over the decomposition: an
// extension-ring coefficient on e plus coefficients on the L-basis (real for
// orthogonal decompositions, extension-valued for Hermitian ones).
struct FiberBasisVector {
    QuadExtNum e_coeff;
    std::vector<QuadExtNum> l_coeffs;
};

// The decomposition Lambda = M + Mperp attached to a parameter, certified
// modulo p^precision: M spans (v, w) (just v in the Hermitian case) with
// Gram congruent to the W-plane's class, Mperp is self-dual with the listed
// basis, and the index of M + Mperp in Lambda is 1.
struct FiberPoint {
    long precision;
    std::vector<std::vector<PadicNum>> M_gram;
    std::vector<std::vector<QuadExtNum>> Mperp_gram;
    std::vector<FiberBasisVector> m_basis;
    std::vector<FiberBasisVector> mperp_basis;
};

// Orthogonal fiber map: v = e + lambda, w = orientation*sqrt(d)*e + mu with
// t encoding lambda + mu through t_j = lambda_j + (mu_j / (orientation*d)) *
// sqrt(d).  Verifies the decomposition and the first-order inner-product
// congruences; throws qf::domain_error on parameter entries outside the
// maximal ideal and qf::precision_error below 2 digits.
FiberPoint fiber_point(const BaseDecomposition& base, const FiberParameter& t);

// Hermitian fiber map: v = e + sum t_i f_i, complement basis
// -conj(t_i)/p * e + f_i; verifies det(Mperp) = 1 mod pi.
FiberPoint fiber_point_herm(const BaseDecomposition& base, const FiberParameter& t);

// Largest level m0 >= 0 with every entry of valuation >= m0 + 1, capped at
// the parameter's precision (exact zeros sit at the cap).
long filtration_level(const FiberParameter& t);

} // namespace qf
