#pragma once

#include "qf/numeric.hpp"
#include "qf/place.hpp"
#include "qf/quadratic.hpp"
#include "qf/square_class.hpp"

#include <utility>
#include <vector>

namespace qf {

// The imaginary quadratic field Q(sqrt(-m)) for squarefree m >= 1, with its
// fundamental discriminant -m (when -m = 1 mod 4) or -4m.
class ImagQuadField {
public:
    explicit ImagQuadField(const Int& m);

    const Int& m() const { return m_; }
    const Int& disc() const { return disc_; }

    friend bool operator==(const ImagQuadField& a, const ImagQuadField& b) {
        return a.m_ == b.m_;
    }

    std::string to_string() const { return "Q(sqrt(-" + m_.get_str() + "))"; }

private:
    Int m_;
    Int disc_;
};

enum class Splitting { split, inert, ramified };

std::string splitting_to_string(Splitting s);

// Behaviour of a place of Q in K.  Finite primes follow the Kronecker symbol
// of the discriminant; the real place completes to C, a degree-2 field
// extension, and is reported inert (in particular: non-split).
Splitting place_splitting(const ImagQuadField& K, const Place& v);

// A nondegenerate K-Hermitian space in diagonal form with rational
// coefficients <d_1,...,d_n> (the values phi(e_i,e_i)).
class HermSpace {
public:
    HermSpace(ImagQuadField field, std::vector<Rational> coeffs);

    const ImagQuadField& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    long dim() const { return static_cast<long>(coeffs_.size()); }
    Rational det() const;

    std::string to_string() const;

private:
    ImagQuadField field_;
    std::vector<Rational> coeffs_;
};

// The local class of a Hermitian space at v: the Hilbert symbol
// (det, disc)_v.  Split places always give +1 (disc is a local square).
int herm_local_class(const HermSpace& space, const Place& v);

// Complete isomorphism data of a K-Hermitian space: dimension, the set of
// places with local class -1 (all non-split; may include the real place),
// and the real signature.
class HermGlobalInvariants {
public:
    HermGlobalInvariants(ImagQuadField field, long dim, PlaceSet neg_places,
                         std::pair<long, long> signature);

    const ImagQuadField& field() const { return field_; }
    long dim() const { return dim_; }
    const PlaceSet& neg_places() const { return neg_places_; }
    std::pair<long, long> signature() const { return signature_; }

    friend bool operator==(const HermGlobalInvariants& a, const HermGlobalInvariants& b) {
        return a.field_ == b.field_ && a.dim_ == b.dim_
            && a.neg_places_ == b.neg_places_ && a.signature_ == b.signature_;
    }

    std::string to_string() const;

private:
    ImagQuadField field_;
    long dim_;
    PlaceSet neg_places_;
    std::pair<long, long> signature_;
};

HermGlobalInvariants herm_global_invariants(const HermSpace& space);

// Local-global existence for Hermitian spaces: prescribed local classes come
// from a K-space iff the number of minus places is even.
bool herm_global_exists(const HermGlobalInvariants& inv);

// Construct a Hermitian space with the prescribed invariants (bounded search
// for the determinant class, post-verified), or throw on the parity
// obstruction.
HermSpace realize_herm(const HermGlobalInvariants& inv);

} // namespace qf
