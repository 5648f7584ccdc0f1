#include "qf/place.hpp"

#include "qf/errors.hpp"

namespace qf {

Place Place::finite(const Int& p) {
    if (!is_prime(p)) throw domain_error("not a prime: " + p.get_str());
    return Place(p);
}

const Int& Place::prime() const {
    if (is_infinite()) throw domain_error("the real place has no underlying prime");
    return p_;
}

Place Place::parse(const std::string& text) {
    if (text == "inf" || text == "oo" || text == "infinity") return infinity();
    Int p;
    try {
        p = parse_integer(text);
    } catch (const parse_error&) {
        throw parse_error("not a place: '" + text + "'");
    }
    if (!is_prime(p)) throw domain_error("not a prime: " + text);
    return finite(p);
}

std::string place_set_to_string(const PlaceSet& places) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : places) {
        if (!first) out += ", ";
        out += v.to_string();
        first = false;
    }
    out += "}";
    return out;
}

} // namespace qf
