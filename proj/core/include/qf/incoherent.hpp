#pragma once

#include "qf/hermitian.hpp"
#include "qf/place.hpp"
#include "qf/quadratic.hpp"
#include "qf/square_class.hpp"

#include <string>

namespace qf {

// A family of definite local quadratic spaces that is NOT the localization of
// one rational space: dimension, a totally positive determinant class, and
// the odd-sized set of finite places carrying Hasse-Witt invariant -1.
// Stored unvalidated so validation can report violations as values.
struct IncoherentOrthData {
    long dim;
    SquareClass det;
    PlaceSet neg_places;
};

// The Hermitian analogue over an imaginary quadratic field: definite local
// Hermitian spaces with an odd set of finite non-split places of class -1.
struct IncoherentHermData {
    ImagQuadField field;
    long dim;
    PlaceSet neg_places;
};

struct ValidationReport {
    bool ok;
    std::string violation; // first violated clause; empty when ok
};

ValidationReport validate_orth(const IncoherentOrthData& data);
ValidationReport validate_herm(const IncoherentHermData& data);

// The Hasse-Witt invariant of the local space of the family at v (+1 at the
// real place: the family is positive definite there).
int incoherent_epsilon(const IncoherentOrthData& data, const Place& v);
int incoherent_herm_class(const IncoherentHermData& data, const Place& v);

struct OrthNeighbor {
    GlobalQuadInvariants invariants;
    QuadSpace space;
};

struct HermNeighbor {
    HermGlobalInvariants invariants;
    HermSpace space;
};

// The rational space agreeing with the family away from v and differing
// exactly at v: sign flip at a finite place keeps the space definite;
// flipping at the real place produces signature (n-2, 2).
OrthNeighbor neighbor_orth(const IncoherentOrthData& data, const Place& v);

// Hermitian neighbor; v must be non-split in the field (signature (n-1, 1)
// at the real place).
HermNeighbor neighbor_herm(const IncoherentHermData& data, const Place& v);

// Codimension-one restriction along a positive class a: the incoherent
// family of orthogonal complements of a vector of norm a, with determinant
// d*a and Hasse-Witt invariants adjusted by (d*a, a)_v.  Requires dim >= 4;
// dim = 3 inputs error (representability failure where the local space is
// anisotropic, else the dim-2 result is below the data floor).
IncoherentOrthData restrict_orth(const IncoherentOrthData& data, const Rational& a);

// Hermitian restriction along a positive class a mod norms; requires the
// result to keep dim >= 1.
IncoherentHermData restrict_herm(const IncoherentHermData& data, const Rational& a);

// The class recovering the restriction parameter: det(V)/det(U) for U the
// restriction of V.
SquareClass complement_class(const IncoherentOrthData& data, const IncoherentOrthData& restricted);

// Compatibility of restriction with neighbors:
// neighbor(restrict(data, a), v) + <a> and neighbor(data, v) have equal
// invariant families (computed by the product formulas, never realized).
bool check_neighbor_sum(const IncoherentOrthData& data, const Place& v, const Rational& a);

} // namespace qf
