#pragma once

#include "qf/numeric.hpp"
#include "qf/place.hpp"
#include "qf/square_class.hpp"

namespace qf {

// Hilbert symbol (a,b)_v in {+1,-1}: +1 exactly when z^2 = a x^2 + b y^2 has
// a nontrivial solution over the completion at v.  a, b must be nonzero.
//
// At the real place: -1 iff both arguments are negative.  At odd p the
// valuation/Legendre formula is used; at p = 2 the unit-character formula in
// terms of u mod 8.  Depends only on the square classes of a and b.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v);

// The finite set of places where (a,b)_v could be nontrivial: the real place,
// 2, and every prime dividing the numerator or denominator of a or b.
PlaceSet symbol_support(const Rational& a, const Rational& b);

} // namespace qf
