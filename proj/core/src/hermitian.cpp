#include "qf/hermitian.hpp"

#include "qf/errors.hpp"
#include "qf/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace qf {

ImagQuadField::ImagQuadField(const Int& m) : m_(m) {
    if (m_ < 1) throw domain_error("imaginary quadratic field needs m >= 1");
    for (const auto& [p, e] : factor(m_))
        if (e > 1) throw domain_error("m must be squarefree: " + m_.get_str());
    const Int minus_m = -m_;
    // -m = 1 mod 4 <=> m = 3 mod 4.
    disc_ = (m_ % 4 == 3) ? minus_m : Int(-4 * m_);
}

std::string splitting_to_string(Splitting s) {
    switch (s) {
        case Splitting::split: return "split";
        case Splitting::inert: return "inert";
        case Splitting::ramified: return "ramified";
    }
    return "";
}

Splitting place_splitting(const ImagQuadField& K, const Place& v) {
    if (v.is_infinite()) return Splitting::inert;
    const Int& p = v.prime();
    if (K.disc() % p == 0) return Splitting::ramified;
    if (p == 2) {
        // Odd fundamental discriminant: split iff disc = 1 mod 8.
        Int residue = K.disc() % 8;
        if (residue < 0) residue += 8;
        return residue == 1 ? Splitting::split : Splitting::inert;
    }
    return legendre(K.disc(), p) == 1 ? Splitting::split : Splitting::inert;
}

HermSpace::HermSpace(ImagQuadField field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw domain_error("Hermitian space needs at least one coefficient");
    for (const auto& d : coeffs_)
        if (d == 0) throw domain_error("degenerate diagonal coefficient");
}

Rational HermSpace::det() const {
    Rational product(1);
    for (const auto& d : coeffs_) product *= d;
    return product;
}

std::string HermSpace::to_string() const {
    std::ostringstream os;
    os << field_.to_string() << "-span <";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << rational_to_string(coeffs_[i]);
    }
    os << ">";
    return os.str();
}

int herm_local_class(const HermSpace& space, const Place& v) {
    return hilbert_symbol(space.det(), Rational(space.field().disc()), v);
}

HermGlobalInvariants::HermGlobalInvariants(ImagQuadField field, long dim, PlaceSet neg_places,
                                           std::pair<long, long> signature)
    : field_(std::move(field)), dim_(dim), neg_places_(std::move(neg_places)),
      signature_(signature) {
    if (dim_ < 1) throw domain_error("Hermitian data needs dim >= 1");
    const auto [r, s] = signature_;
    if (r < 0 || s < 0 || r + s != dim_)
        throw domain_error("signature incompatible with dimension");
    for (const auto& v : neg_places_) {
        if (place_splitting(field_, v) == Splitting::split)
            throw domain_error("local class is forced +1 at the split place " + v.to_string());
    }
    const bool minus_at_real = s % 2 == 1;
    if (neg_places_.count(Place::infinity()) != static_cast<std::size_t>(minus_at_real))
        throw domain_error("real local class incompatible with signature");
}

std::string HermGlobalInvariants::to_string() const {
    std::ostringstream os;
    os << field_.to_string() << ", dim " << dim_
       << ", minus places " << place_set_to_string(neg_places_)
       << ", signature (" << signature_.first << "," << signature_.second << ")";
    return os.str();
}

HermGlobalInvariants herm_global_invariants(const HermSpace& space) {
    PlaceSet support{Place::infinity(), Place::finite(2)};
    for (const auto& [p, e] : factor(space.field().disc())) support.insert(Place::finite(p));
    for (const auto& d : space.coeffs())
        for (const auto& v : square_class_support(canonical_square_class(d)))
            support.insert(v);
    PlaceSet neg;
    for (const auto& v : support)
        if (herm_local_class(space, v) == -1) neg.insert(v);
    long r = 0, s = 0;
    for (const auto& d : space.coeffs()) (d > 0 ? r : s) += 1;
    return HermGlobalInvariants(space.field(), space.dim(), std::move(neg), {r, s});
}

bool herm_global_exists(const HermGlobalInvariants& inv) {
    return inv.neg_places().size() % 2 == 0;
}

namespace {

// Positive squarefree products of pool primes, ascending.
std::vector<std::pair<Int, std::vector<Int>>> positive_candidates(const std::vector<Int>& pool,
                                                                  const Int& height) {
    std::vector<std::pair<Int, std::vector<Int>>> out{{Int(1), {}}};
    for (const Int& p : pool) {
        const std::size_t count = out.size();
        for (std::size_t i = 0; i < count; ++i) {
            Int value = out[i].first * p;
            if (value > height) continue;
            auto primes = out[i].second;
            primes.push_back(p);
            out.push_back({std::move(value), std::move(primes)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

HermSpace realize_herm(const HermGlobalInvariants& inv) {
    if (!herm_global_exists(inv))
        throw domain_error("odd number of minus places: no Hermitian space exists");

    const auto [r, s] = inv.signature();
    const Rational disc(inv.field().disc());
    const int det_sign = s % 2 == 0 ? 1 : -1;

    PlaceSet support{Place::infinity(), Place::finite(2)};
    for (const auto& [p, e] : factor(inv.field().disc())) support.insert(Place::finite(p));
    for (const auto& v : inv.neg_places()) support.insert(v);

    std::vector<Int> pool{Int(2)};
    for (const auto& v : support)
        if (v.is_finite()) pool.push_back(v.prime());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    const Int height = 1'000'000;
    constexpr int kMaxAuxiliaryPrimes = 12;
    for (int round = 0; round <= kMaxAuxiliaryPrimes; ++round) {
        for (const auto& [delta, primes] : positive_candidates(pool, height)) {
            PlaceSet places = support;
            for (const Int& p : primes) places.insert(Place::finite(p));
            const Rational det = Rational(det_sign) * Rational(delta);
            bool ok = true;
            for (const auto& v : places) {
                const int want = inv.neg_places().count(v) ? -1 : 1;
                if (hilbert_symbol(det, disc, v) != want) { ok = false; break; }
            }
            if (!ok) continue;
            std::vector<Rational> coeffs;
            for (long i = 0; i < (s == 0 ? r - 1 : r); ++i) coeffs.emplace_back(1);
            for (long i = 0; i < std::max<long>(s - 1, 0); ++i) coeffs.emplace_back(-1);
            coeffs.push_back(s == 0 ? Rational(delta) : Rational(-delta));
            HermSpace space(inv.field(), std::move(coeffs));
            if (herm_global_invariants(space) == inv) return space;
        }
        Int next = pool.back();
        Int probe;
        do {
            mpz_nextprime(probe.get_mpz_t(), next.get_mpz_t());
            next = probe;
        } while (std::find(pool.begin(), pool.end(), next) != pool.end());
        pool.push_back(next);
    }
    throw domain_error("no determinant class with the required symbol pattern within bounds");
}

} // namespace qf
