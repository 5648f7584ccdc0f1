#pragma once

#include "qf/numeric.hpp"
#include "qf/place.hpp"

#include <string>

namespace qf {

// An element of Q*/(Q*)^2, stored as its unique signed squarefree integer
// representative.
class SquareClass {
public:
    // Accepts any nonzero squarefree integer.
    explicit SquareClass(const Int& representative);

    const Int& rep() const { return rep_; }
    bool positive() const { return rep_ > 0; }

    SquareClass operator*(const SquareClass& other) const;
    friend bool operator==(const SquareClass& a, const SquareClass& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const SquareClass& a, const SquareClass& b) { return a.rep_ != b.rep_; }
    friend bool operator<(const SquareClass& a, const SquareClass& b) { return a.rep_ < b.rep_; }

    std::string to_string() const { return rep_.get_str(); }

private:
    Int rep_;
};

// The square class of a nonzero rational: sign times the product of primes
// appearing to odd exponent in numerator*denominator.
SquareClass canonical_square_class(const Rational& r);
SquareClass canonical_square_class(const Int& n);

// Finite places at which the class representative is a non-unit, i.e. the odd
// primes dividing it together with 2 when present.
PlaceSet square_class_support(const SquareClass& c);

} // namespace qf
