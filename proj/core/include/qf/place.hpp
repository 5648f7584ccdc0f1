#pragma once

#include "qf/numeric.hpp"

#include <compare>
#include <set>
#include <string>

namespace qf {

// A place of Q: the real place or a finite prime.  Finite places validate
// primality on construction.  Ordered with the real place first, then primes
// ascending, so sets of places print deterministically.
class Place {
public:
    static Place infinity() { return Place(Int(0)); }
    static Place finite(const Int& p);

    bool is_infinite() const { return p_ == 0; }
    bool is_finite() const { return p_ != 0; }

    // The underlying prime; throws on the real place.
    const Int& prime() const;

    std::string to_string() const { return is_infinite() ? "inf" : p_.get_str(); }
    static Place parse(const std::string& text);

    friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Place& a, const Place& b) { return a.p_ != b.p_; }
    friend bool operator<(const Place& a, const Place& b) { return a.p_ < b.p_; }

private:
    explicit Place(Int p) : p_(std::move(p)) {}
    Int p_; // 0 encodes the real place
};

using PlaceSet = std::set<Place>;

std::string place_set_to_string(const PlaceSet& places);

} // namespace qf
