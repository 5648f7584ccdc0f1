#pragma once

#include "qf/hermitian.hpp"
#include "qf/numeric.hpp"
#include "qf/quadratic.hpp"
#include "qf/square_class.hpp"

#include <vector>

namespace qf {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact determinant by Gaussian elimination over the rationals.
Rational rational_matrix_det(RationalMatrix a);

// A lattice over Z_(p) (p odd) presented by the Gram matrix of its bilinear
// form: symmetric, p-integral entries, nonzero determinant.
class OrthLatticeZp {
  public:
    OrthLatticeZp(Int p, RationalMatrix gram);

    const Int& p() const { return p_; }
    const RationalMatrix& gram() const { return gram_; }
    long rank() const { return static_cast<long>(gram_.size()); }

  private:
    Int p_;
    RationalMatrix gram_;
};

// The finite quotient (dual lattice)/(lattice): cyclic factors of p-power
// order, plus the induced form on the p-torsion generators after scaling the
// (1/p)Z/Z-valued pairing by p — a symmetric matrix over F_p whose quadratic
// values are v^T F v.
struct DiscriminantGroup {
    Int p;
    std::vector<Int> divisors;               // nontrivial p-power orders, ascending
    std::vector<std::vector<Int>> induced;   // entries in [0, p)
};

DiscriminantGroup dual_quotient(const OrthLatticeZp& L);

// True iff the lattice equals its dual (Gram determinant a p-unit).
bool is_selfdual(const OrthLatticeZp& L);

// Maximality among integral lattices in the unit-determinant case: true iff
// the discriminant group is trivial, or is (Z/p)^2 with anisotropic induced
// binary form (decided by brute force over the p^2 vectors).  Ambient
// determinants of odd p-valuation are out of scope and rejected.
bool is_maximal(const OrthLatticeZp& L);

// An isometric embedding of a rank-2 space W of determinant -D (D the
// canonical unit nonsquare) with prescribed invariant into the local space
// (dim, det, eps): returns W as an explicit diagonal space together with the
// invariants of its orthogonal complement (dim-2, -det*D, +1).  Requires
// dim >= 3, a unit determinant class, and target_eps equal to eps.
struct PlaneEmbedding {
    QuadSpace W;
    LocalQuadInvariants complement;
};

PlaneEmbedding embed_plane(long dim, const SquareClass& det, int eps, int target_eps,
                           const Int& p);

// A maximal lattice in the local space (dim, unit det, eps) at an odd prime:
// for eps = +1 a self-dual diagonal lattice; for eps = -1 the pi-scaled norm
// plane [[2p,0],[0,-2pD]] padded by a unit diagonal fixing the determinant
// class.  Prescriptions with no local space are rejected, as are p = 2 and
// determinant classes of odd valuation.
OrthLatticeZp maximal_lattice(long dim, const SquareClass& det, int eps, const Int& p);

// An element x + y*sqrt(-m) of an imaginary quadratic field, coordinates as
// exact rationals.  The field modulus m travels with the containing lattice.
struct KNum {
    Rational x;
    Rational y;
};

KNum knum_conj(const KNum& a);
KNum knum_add(const KNum& a, const KNum& b);
KNum knum_sub(const KNum& a, const KNum& b);
KNum knum_mul(const KNum& a, const KNum& b, const Int& m);
KNum knum_div(const KNum& a, const KNum& b, const Int& m);
bool knum_is_zero(const KNum& a);

// A Hermitian lattice over the p-local integers of an imaginary quadratic
// field at an odd inert prime: conjugate-symmetric Gram with p-integral
// entries (both coordinates), rational diagonal, nonzero determinant.
class HermLatticeZp {
  public:
    HermLatticeZp(ImagQuadField field, Int p, std::vector<std::vector<KNum>> gram);

    const ImagQuadField& field() const { return field_; }
    const Int& p() const { return p_; }
    const std::vector<std::vector<KNum>>& gram() const { return gram_; }
    long rank() const { return static_cast<long>(gram_.size()); }

  private:
    ImagQuadField field_;
    Int p_;
    std::vector<std::vector<KNum>> gram_;
};

// The dual quotient of a Hermitian lattice as a module over the local ring:
// lengths of the cyclic factors A/pi^a and the order of the underlying group
// (p^2 per unit of length).
struct HermDiscriminantGroup {
    Int p;
    std::vector<Int> lengths; // nontrivial factor lengths, ascending
    Int order;
};

HermDiscriminantGroup herm_dual_quotient(const HermLatticeZp& L);

bool herm_is_selfdual(const HermLatticeZp& L);

// A maximal Hermitian lattice in dimension dim at an odd inert prime:
// identity Gram when the determinant class is a norm (cls = +1), otherwise
// diag(1, ..., 1, p).
HermLatticeZp herm_maximal_lattice(const ImagQuadField& field, long dim, int cls,
                                   const Int& p);

} // namespace qf
