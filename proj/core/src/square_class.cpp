#include "qf/square_class.hpp"

#include "qf/errors.hpp"

namespace qf {

SquareClass::SquareClass(const Int& representative) : rep_(representative) {
    if (rep_ == 0) throw domain_error("square class of zero");
    for (const auto& [p, e] : factor(rep_))
        if (e > 1) throw domain_error("not squarefree: " + rep_.get_str());
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
    return canonical_square_class(Int(rep_ * other.rep_));
}

SquareClass canonical_square_class(const Int& n) {
    if (n == 0) throw domain_error("square class of zero");
    Int rep = n < 0 ? Int(-1) : Int(1);
    for (const auto& [p, e] : factor(n))
        if (e % 2 == 1) rep *= p;
    return SquareClass(rep);
}

SquareClass canonical_square_class(const Rational& r) {
    if (r == 0) throw domain_error("square class of zero");
    return canonical_square_class(Int(r.get_num() * r.get_den()));
}

PlaceSet square_class_support(const SquareClass& c) {
    PlaceSet out;
    for (const auto& [p, e] : factor(c.rep())) out.insert(Place::finite(p));
    return out;
}

} // namespace qf
