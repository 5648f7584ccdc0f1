#include "qf/quadratic.hpp"

#include "qf/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qf {

QuadSpace::QuadSpace(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw domain_error("quadratic space needs at least one coefficient");
    for (const auto& a : coeffs_)
        if (a == 0) throw domain_error("degenerate diagonal coefficient");
}

SquareClass QuadSpace::det() const {
    Rational product(1);
    for (const auto& a : coeffs_) product *= a;
    return canonical_square_class(product);
}

QuadSpace QuadSpace::scaled(const Rational& c) const {
    if (c == 0) throw domain_error("scaling by zero");
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * c);
    return QuadSpace(std::move(out));
}

QuadSpace QuadSpace::direct_sum(const QuadSpace& other) const {
    std::vector<Rational> out = coeffs_;
    out.insert(out.end(), other.coeffs_.begin(), other.coeffs_.end());
    return QuadSpace(std::move(out));
}

std::string QuadSpace::to_string() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << rational_to_string(coeffs_[i]);
    }
    os << ">";
    return os.str();
}

GlobalQuadInvariants::GlobalQuadInvariants(long dim, SquareClass det, PlaceSet neg_places,
                                           std::pair<long, long> signature)
    : dim_(dim), det_(std::move(det)), neg_places_(std::move(neg_places)),
      signature_(signature) {
    if (dim_ < 3) throw domain_error("global invariant families are kept for dim >= 3");
    const auto [r, s] = signature_;
    if (r < 0 || s < 0 || r + s != dim_)
        throw domain_error("signature incompatible with dimension");
    const bool det_negative = !det_.positive();
    if (det_negative != (s % 2 == 1))
        throw domain_error("determinant sign incompatible with signature");
    const bool minus_at_real = (s * (s - 1) / 2) % 2 == 1;
    if (neg_places_.count(Place::infinity()) != static_cast<std::size_t>(minus_at_real))
        throw domain_error("real Hasse-Witt invariant incompatible with signature");
}

std::string GlobalQuadInvariants::to_string() const {
    std::ostringstream os;
    os << "dim " << dim_ << ", det " << det_.to_string()
       << ", minus places " << place_set_to_string(neg_places_)
       << ", signature (" << signature_.first << "," << signature_.second << ")";
    return os.str();
}

QuadSpace diagonalize(const std::vector<std::vector<Rational>>& gram) {
    const std::size_t n = gram.size();
    if (n == 0) throw domain_error("empty matrix");
    for (const auto& row : gram)
        if (row.size() != n) throw domain_error("matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw domain_error("matrix is not symmetric");

    auto a = gram;
    std::vector<Rational> diag;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // Bring a nonzero entry to the pivot: prefer a later diagonal
            // entry, else use a row addition to materialize 2*a[k][j].
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i][i] != 0) { swap_row = i; break; }
            if (swap_row != k) {
                std::swap(a[k], a[swap_row]);
                for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][swap_row]);
            } else {
                std::size_t j = k;
                for (std::size_t i = k + 1; i < n; ++i)
                    if (a[k][i] != 0) { j = i; break; }
                if (j == k) throw domain_error("matrix is singular");
                for (std::size_t i = 0; i < n; ++i) a[k][i] += a[j][i];
                for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][j];
            }
        }
        const Rational pivot = a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rational factor = a[i][k] / pivot;
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= factor * a[k][j];
            for (std::size_t j = 0; j < n; ++j) a[j][i] -= factor * a[j][k];
        }
        diag.push_back(pivot);
    }
    return QuadSpace(std::move(diag));
}

LocalQuadInvariants local_invariants(const QuadSpace& space, const Place& v) {
    const auto& c = space.coeffs();
    int hasse = 1;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            hasse *= hilbert_symbol(c[i], c[j], v);
    std::optional<std::pair<long, long>> signature;
    if (v.is_infinite()) {
        long r = 0, s = 0;
        for (const auto& a : c) (a > 0 ? r : s) += 1;
        signature = {r, s};
    }
    return LocalQuadInvariants{space.dim(), space.det(), hasse, signature};
}

GlobalQuadInvariants global_invariants(const QuadSpace& space) {
    PlaceSet support{Place::infinity(), Place::finite(2)};
    for (const auto& a : space.coeffs())
        for (const auto& v : square_class_support(canonical_square_class(a)))
            support.insert(v);
    PlaceSet neg;
    for (const auto& v : support)
        if (local_invariants(space, v).hasse == -1) neg.insert(v);
    const auto sig = *local_invariants(space, Place::infinity()).signature;
    return GlobalQuadInvariants(space.dim(), space.det(), std::move(neg), sig);
}

bool same_local_square_class(const SquareClass& a, const SquareClass& b, const Place& v) {
    const Rational ratio(a.rep() * b.rep());
    if (v.is_infinite()) return is_real_square(ratio);
    return is_local_square(ratio, v.prime());
}

bool locally_isomorphic(const QuadSpace& a, const QuadSpace& b, const Place& v) {
    if (a.dim() != b.dim()) return false;
    const auto ia = local_invariants(a, v);
    const auto ib = local_invariants(b, v);
    if (v.is_infinite()) return ia.signature == ib.signature;
    return ia.hasse == ib.hasse && same_local_square_class(ia.det, ib.det, v);
}

bool global_exists(const GlobalQuadInvariants& inv) {
    return inv.neg_places().size() % 2 == 0;
}

QuadSpace quaternion_trace_zero(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) throw domain_error("quaternion parameters must be nonzero");
    return QuadSpace({-a, -b, a * b});
}

namespace {

struct Candidate {
    Int value;              // signed squarefree product of pool primes
    std::vector<Int> primes;
};

std::vector<Candidate> build_candidates(const std::vector<Int>& pool, const Int& height) {
    std::vector<Candidate> magnitudes{{Int(1), {}}};
    for (const Int& p : pool) {
        const std::size_t count = magnitudes.size();
        for (std::size_t i = 0; i < count; ++i) {
            Int value = magnitudes[i].value * p;
            if (value > height) continue;
            auto primes = magnitudes[i].primes;
            primes.push_back(p);
            magnitudes.push_back({std::move(value), std::move(primes)});
        }
    }
    std::sort(magnitudes.begin(), magnitudes.end(),
              [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
    std::vector<Candidate> out;
    out.reserve(2 * magnitudes.size());
    for (const auto& m : magnitudes) {
        out.push_back(m);
        out.push_back({-m.value, m.primes});
    }
    return out;
}

Int next_prime_after(const Int& n) {
    Int p;
    mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
    return p;
}

} // namespace

std::pair<Int, Int> find_symbol_pair(const std::map<Place, int>& targets,
                                     std::vector<Int> pool) {
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    const Int height = 1'000'000;

    constexpr int kMaxAuxiliaryPrimes = 12;
    for (int round = 0; round <= kMaxAuxiliaryPrimes; ++round) {
        const auto candidates = build_candidates(pool, height);
        for (const auto& ca : candidates) {
            for (const auto& cb : candidates) {
                PlaceSet places;
                for (const auto& [v, t] : targets) places.insert(v);
                places.insert(Place::infinity());
                places.insert(Place::finite(2));
                for (const Int& p : ca.primes) places.insert(Place::finite(p));
                for (const Int& p : cb.primes) places.insert(Place::finite(p));
                bool ok = true;
                for (const auto& v : places) {
                    const auto it = targets.find(v);
                    const int want = it == targets.end() ? 1 : it->second;
                    if (hilbert_symbol(Rational(ca.value), Rational(cb.value), v) != want) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return {ca.value, cb.value};
            }
        }
        // Exhausted the prescription's own support: append an auxiliary prime.
        Int next = pool.empty() ? Int(2) : pool.back();
        do {
            next = next_prime_after(next);
        } while (std::find(pool.begin(), pool.end(), next) != pool.end());
        pool.push_back(next);
    }
    throw domain_error("no quaternion pair with the required symbol pattern within bounds");
}

QuadSpace realize_global(const GlobalQuadInvariants& inv) {
    if (!global_exists(inv))
        throw domain_error("odd number of minus places: no rational space exists");

    const long n = inv.dim();
    const auto [r, s] = inv.signature();
    const long s_core = std::min<long>(s, 3);
    const long minus_pads = s - s_core;
    const long plus_pads = n - 3 - minus_pads;

    // Scale class for the ternary core, absorbing the pads' determinant.
    const int pad_sign = minus_pads % 2 == 0 ? 1 : -1;
    const SquareClass c = inv.det() * SquareClass(Int(pad_sign));

    // Joint support over which symbols must be pinned.
    PlaceSet support{Place::infinity(), Place::finite(2)};
    for (const auto& v : inv.neg_places()) support.insert(v);
    for (const auto& v : square_class_support(inv.det())) support.insert(v);
    for (const auto& v : square_class_support(c)) support.insert(v);

    const Rational minus_one(-1);
    const Rational c_rat(c.rep());
    std::map<Place, int> targets;
    for (const auto& v : support) {
        int want = inv.neg_places().count(v) ? -1 : 1;
        want *= hilbert_symbol(minus_one, minus_one, v);
        want *= hilbert_symbol(c_rat, minus_one, v);
        if ((minus_pads * (minus_pads - 1) / 2) % 2 != 0)
            want *= hilbert_symbol(minus_one, minus_one, v);
        if (minus_pads % 2 != 0) want *= hilbert_symbol(c_rat, minus_one, v);
        targets[v] = want;
    }

    std::vector<Int> pool{Int(2)};
    for (const auto& v : support)
        if (v.is_finite()) pool.push_back(v.prime());

    const auto [a, b] = find_symbol_pair(targets, pool);

    std::vector<Rational> coeffs{Rational(-a) * c_rat, Rational(-b) * c_rat,
                                 Rational(a) * Rational(b) * c_rat};
    for (long i = 0; i < plus_pads; ++i) coeffs.emplace_back(1);
    for (long i = 0; i < minus_pads; ++i) coeffs.emplace_back(-1);
    QuadSpace space(std::move(coeffs));

    if (!(global_invariants(space) == inv))
        throw domain_error("realization failed post-verification");
    return space;
}

bool local_isotropic(long dim, const SquareClass& det, int hasse, const Place& v) {
    if (v.is_infinite()) throw domain_error("real isotropy is a signature question");
    if (dim <= 1) return false;
    const SquareClass minus_det = det * SquareClass(Int(-1));
    const Rational det_rat(det.rep());
    if (dim == 2) return same_local_square_class(minus_det, SquareClass(Int(1)), v);
    if (dim == 3)
        return hasse == hilbert_symbol(Rational(-1), Rational(-det_rat), v);
    if (dim == 4) {
        if (!same_local_square_class(det, SquareClass(Int(1)), v)) return true;
        return hasse == hilbert_symbol(Rational(-1), Rational(-1), v);
    }
    return true;
}

bool local_represents(const LocalQuadInvariants& inv, const Rational& c, const Place& v) {
    if (c == 0) throw domain_error("representation of zero is the isotropy question");
    if (v.is_infinite()) {
        if (!inv.signature) throw domain_error("missing signature at the real place");
        const auto [r, s] = *inv.signature;
        return c > 0 ? r >= 1 : s >= 1;
    }
    // V represents c iff V + <-c> is isotropic.
    const SquareClass det = inv.det * canonical_square_class(Rational(-c));
    const int hasse = inv.hasse * hilbert_symbol(Rational(inv.det.rep()), Rational(-c), v);
    return local_isotropic(inv.dim + 1, det, hasse, v);
}

bool represents_locally(const QuadSpace& space, const Rational& c, const Place& v) {
    return local_represents(local_invariants(space, v), c, v);
}

GlobalQuadInvariants direct_sum_invariants(const GlobalQuadInvariants& inv, const Rational& a) {
    if (a == 0) throw domain_error("direct sum with a degenerate line");
    const SquareClass a_class = canonical_square_class(a);
    const SquareClass det = inv.det() * a_class;

    PlaceSet support{Place::infinity(), Place::finite(2)};
    for (const auto& v : inv.neg_places()) support.insert(v);
    for (const auto& v : square_class_support(inv.det())) support.insert(v);
    for (const auto& v : square_class_support(a_class)) support.insert(v);

    PlaceSet neg;
    for (const auto& v : support) {
        int eps = inv.neg_places().count(v) ? -1 : 1;
        eps *= hilbert_symbol(Rational(inv.det().rep()), a, v);
        if (eps == -1) neg.insert(v);
    }
    auto [r, s] = inv.signature();
    if (a > 0) r += 1; else s += 1;
    return GlobalQuadInvariants(inv.dim() + 1, det, std::move(neg), {r, s});
}

} // namespace qf
