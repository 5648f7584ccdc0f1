#pragma once

#include "qf/hilbert.hpp"
#include "qf/numeric.hpp"
#include "qf/place.hpp"
#include "qf/square_class.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qf {

// A nondegenerate quadratic space over Q in diagonal form <a_1,...,a_n>.
class QuadSpace {
public:
    explicit QuadSpace(std::vector<Rational> coeffs);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    long dim() const { return static_cast<long>(coeffs_.size()); }

    SquareClass det() const;
    QuadSpace scaled(const Rational& c) const;
    QuadSpace direct_sum(const QuadSpace& other) const;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

// Complete isomorphism data of a quadratic space over one completion:
// dimension, determinant class, Hasse-Witt invariant, and (at the real place
// only) the signature.
struct LocalQuadInvariants {
    long dim;
    SquareClass det;
    int hasse; // +1 or -1
    std::optional<std::pair<long, long>> signature;
};

// Complete isomorphism data over Q for dim >= 3: determinant class, the set
// of places with Hasse-Witt invariant -1, and the real signature.  The
// constructor enforces the classical compatibility between signature,
// determinant sign, and membership of the real place in the minus set.
class GlobalQuadInvariants {
public:
    GlobalQuadInvariants(long dim, SquareClass det, PlaceSet neg_places,
                         std::pair<long, long> signature);

    long dim() const { return dim_; }
    const SquareClass& det() const { return det_; }
    const PlaceSet& neg_places() const { return neg_places_; }
    std::pair<long, long> signature() const { return signature_; }

    friend bool operator==(const GlobalQuadInvariants& a, const GlobalQuadInvariants& b) {
        return a.dim_ == b.dim_ && a.det_ == b.det_ && a.neg_places_ == b.neg_places_
            && a.signature_ == b.signature_;
    }

    std::string to_string() const;

private:
    long dim_;
    SquareClass det_;
    PlaceSet neg_places_;
    std::pair<long, long> signature_;
};

// Symmetric Gaussian reduction of the matrix of a quadratic form q(x) = x^T A x
// to an equivalent diagonal form.  Throws on non-symmetric or singular input.
QuadSpace diagonalize(const std::vector<std::vector<Rational>>& gram);

LocalQuadInvariants local_invariants(const QuadSpace& space, const Place& v);

// The full invariant family of a space of dimension >= 3.
GlobalQuadInvariants global_invariants(const QuadSpace& space);

// Whether two determinant classes agree in the completion at v.
bool same_local_square_class(const SquareClass& a, const SquareClass& b, const Place& v);

bool locally_isomorphic(const QuadSpace& a, const QuadSpace& b, const Place& v);

// Product-formula parity test: a family of prescribed invariants comes from a
// rational space iff the number of minus places is even (dim >= 3).
bool global_exists(const GlobalQuadInvariants& inv);

// The trace-zero part of the quaternion algebra (a,b): <-a,-b,ab>.
QuadSpace quaternion_trace_zero(const Rational& a, const Rational& b);

// Construct a space with the prescribed invariants, or throw when the parity
// obstruction blocks existence.  A ternary quaternion core is found by a
// bounded search over signed products of primes from the prescription's
// support (auxiliary primes are appended only if that pool is exhausted);
// sign pads and a determinant-fixing scaling complete the space, and the
// result is re-verified against every prescribed invariant before return.
QuadSpace realize_global(const GlobalQuadInvariants& inv);

// Isotropy of a quadratic space over the completion at a finite place, from
// its local invariants (rank-stratified criteria).
bool local_isotropic(long dim, const SquareClass& det, int hasse, const Place& v);

// Whether a space with the given local invariants represents the nonzero
// class c over the completion at v.
bool local_represents(const LocalQuadInvariants& inv, const Rational& c, const Place& v);

bool represents_locally(const QuadSpace& space, const Rational& c, const Place& v);

// Invariants of V + <a> computed by the product formulas, without realizing
// the sum.
GlobalQuadInvariants direct_sum_invariants(const GlobalQuadInvariants& inv, const Rational& a);

// A (a,b) pair whose Hilbert symbols match `targets` at the listed places and
// are +1 everywhere else; searched over signed products of `pool` primes with
// candidate height <= 10^6, growing the pool with auxiliary primes if needed.
std::pair<Int, Int> find_symbol_pair(const std::map<Place, int>& targets,
                                     std::vector<Int> pool);

} // namespace qf
