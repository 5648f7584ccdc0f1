#include "qf/padic.hpp"

#include "qf/errors.hpp"

#include <algorithm>
#include <limits>

namespace qf {

namespace {
constexpr long kExactBound = std::numeric_limits<long>::max() / 4;
} // namespace

PadicNum PadicNum::make_zero(const Int& p, long bound, bool exact) {
    PadicNum z;
    z.p_ = p;
    z.zero_ = true;
    z.exact_zero_ = exact;
    z.prec_ = bound;
    return z;
}

PadicNum PadicNum::zero(const Int& p) { return make_zero(p, kExactBound, true); }

PadicNum PadicNum::zero_mod(const Int& p, long bound) {
    if (bound < 1) throw precision_error("zero bound must be positive");
    return make_zero(p, std::min(bound, kExactBound), false);
}

PadicNum::PadicNum(const Int& p, long val, const Int& unit, long prec) {
    if (!is_prime(p)) throw domain_error("not a prime: " + p.get_str());
    if (prec < 1) throw precision_error("precision must be at least 1 digit");
    if (unit % p == 0) throw domain_error("unit part divisible by p");
    p_ = p;
    val_ = val;
    prec_ = prec;
    const Int modulus = pow_int(p, static_cast<unsigned long>(prec));
    unit_ = unit % modulus;
    if (unit_ < 0) unit_ += modulus;
}

PadicNum PadicNum::from_rational(const Rational& r, const Int& p, long prec) {
    if (r == 0) return zero(p);
    if (prec < 1) throw precision_error("precision must be at least 1 digit");
    const long v = valuation(r, p);
    const Int u = residue_mod(unit_part(r, p), p, static_cast<unsigned>(prec));
    return PadicNum(p, v, u, prec);
}

PadicNum PadicNum::from_integer(const Int& n, const Int& p, long prec) {
    return from_rational(Rational(n), p, prec);
}

bool PadicNum::is_exact_zero() const { return zero_ && exact_zero_; }

long PadicNum::val() const {
    if (zero_) throw domain_error("valuation of a zero value");
    return val_;
}

const Int& PadicNum::unit() const {
    if (zero_) throw domain_error("unit part of a zero value");
    return unit_;
}

long PadicNum::prec() const {
    if (zero_) throw domain_error("zero values carry no significant digits");
    return prec_;
}

long PadicNum::known_exponent() const { return zero_ ? prec_ : val_ + prec_; }

Int PadicNum::residue(long k) const {
    if (k < 0) throw domain_error("negative residue exponent");
    if (k > known_exponent()) throw precision_error("residue beyond known precision");
    if (zero_ || val_ >= k) return 0;
    if (val_ < 0) throw domain_error("residue of a non-integral value");
    const Int modulus = pow_int(p_, static_cast<unsigned long>(k));
    Int value = unit_ * pow_int(p_, static_cast<unsigned long>(val_)) % modulus;
    return value;
}

PadicNum PadicNum::operator-() const {
    if (zero_) return *this;
    const Int modulus = pow_int(p_, static_cast<unsigned long>(prec_));
    return PadicNum(p_, val_, modulus - unit_, prec_);
}

PadicNum PadicNum::operator+(const PadicNum& other) const {
    if (p_ != other.p_) throw domain_error("mixed primes in p-adic arithmetic");
    if (zero_ && other.zero_) {
        const bool exact = exact_zero_ && other.exact_zero_;
        return make_zero(p_, std::min(prec_, other.prec_), exact);
    }
    if (zero_ || other.zero_) {
        const PadicNum& z = zero_ ? *this : other;
        const PadicNum& x = zero_ ? other : *this;
        const long cap = std::min(z.known_exponent(), x.known_exponent());
        if (x.val_ >= cap) return make_zero(p_, cap, false);
        const long prec = cap - x.val_;
        const Int modulus = pow_int(p_, static_cast<unsigned long>(prec));
        return PadicNum(p_, x.val_, x.unit_ % modulus, prec);
    }
    const long c = std::min(val_, other.val_);
    const long cap = std::min(known_exponent(), other.known_exponent());
    const Int modulus = pow_int(p_, static_cast<unsigned long>(cap - c));
    Int sum = unit_ * pow_int(p_, static_cast<unsigned long>(val_ - c))
            + other.unit_ * pow_int(p_, static_cast<unsigned long>(other.val_ - c));
    sum %= modulus;
    if (sum < 0) sum += modulus;
    if (sum == 0) return make_zero(p_, cap, false);
    const long v = valuation(sum, p_);
    const Int unit = sum / pow_int(p_, static_cast<unsigned long>(v));
    return PadicNum(p_, c + v, unit, cap - c - v);
}

PadicNum PadicNum::operator-(const PadicNum& other) const { return *this + (-other); }

PadicNum PadicNum::operator*(const PadicNum& other) const {
    if (p_ != other.p_) throw domain_error("mixed primes in p-adic arithmetic");
    if (zero_ && other.zero_) {
        if (exact_zero_ || other.exact_zero_) return zero(p_);
        return make_zero(p_, std::min(prec_ + other.prec_, kExactBound), false);
    }
    if (zero_ || other.zero_) {
        const PadicNum& z = zero_ ? *this : other;
        const PadicNum& x = zero_ ? other : *this;
        if (z.exact_zero_) return zero(p_);
        return make_zero(p_, std::min(z.prec_ + x.val_, kExactBound), false);
    }
    const long prec = std::min(prec_, other.prec_);
    return PadicNum(p_, val_ + other.val_, unit_ * other.unit_, prec);
}

PadicNum PadicNum::inverse() const {
    if (zero_) throw domain_error("inverting a value indistinguishable from zero");
    const Int modulus = pow_int(p_, static_cast<unsigned long>(prec_));
    Int inv;
    mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), modulus.get_mpz_t());
    return PadicNum(p_, -val_, inv, prec_);
}

PadicNum PadicNum::operator/(const PadicNum& other) const { return *this * other.inverse(); }

PadicNum PadicNum::shift(long k) const {
    if (zero_) {
        if (exact_zero_) return *this;
        return make_zero(p_, std::max<long>(prec_ + k, 1), false);
    }
    return PadicNum(p_, val_ + k, unit_, prec_);
}

std::string PadicNum::to_string() const {
    if (zero_) {
        if (exact_zero_) return "0";
        return "O(" + p_.get_str() + "^" + std::to_string(prec_) + ")";
    }
    return unit_.get_str() + "*" + p_.get_str() + "^" + std::to_string(val_)
         + " + O(" + p_.get_str() + "^" + std::to_string(val_ + prec_) + ")";
}

QuadExtNum::QuadExtNum(PadicNum x, PadicNum y, const Int& d)
    : x_(std::move(x)), y_(std::move(y)), d_(d) {
    if (x_.prime() != y_.prime()) throw domain_error("mixed primes in quadratic extension");
    const Int& p = x_.prime();
    if (p == 2) throw domain_error("unramified quadratic model needs an odd prime");
    if (d_ % p == 0 || legendre(d_, p) != -1)
        throw domain_error("extension generator must be a unit nonresidue");
}

QuadExtNum QuadExtNum::from_rationals(const Rational& x, const Rational& y,
                                      const Int& d, const Int& p, long prec) {
    return QuadExtNum(PadicNum::from_rational(x, p, prec),
                      PadicNum::from_rational(y, p, prec), d);
}

QuadExtNum QuadExtNum::operator-() const { return QuadExtNum(-x_, -y_, d_); }

QuadExtNum QuadExtNum::operator+(const QuadExtNum& other) const {
    if (d_ != other.d_) throw domain_error("mixed extension generators");
    return QuadExtNum(x_ + other.x_, y_ + other.y_, d_);
}

QuadExtNum QuadExtNum::operator-(const QuadExtNum& other) const { return *this + (-other); }

namespace {
// Precision at which to lift exact integer constants so the lift is never the
// binding constraint in mixed arithmetic.
long lift_prec(const QuadExtNum& a, const QuadExtNum& b) {
    long m = 0;
    for (const PadicNum* c : {&a.x(), &a.y(), &b.x(), &b.y()})
        if (!c->is_zero()) m = std::max(m, c->prec());
    return m > 0 ? m + 2 : kDefaultPadicPrecision + 2;
}
} // namespace

QuadExtNum QuadExtNum::operator*(const QuadExtNum& other) const {
    if (d_ != other.d_) throw domain_error("mixed extension generators");
    const PadicNum d = PadicNum::from_integer(d_, prime(), lift_prec(*this, other));
    return QuadExtNum(x_ * other.x_ + d * (y_ * other.y_),
                      x_ * other.y_ + y_ * other.x_, d_);
}

QuadExtNum QuadExtNum::conj() const { return QuadExtNum(x_, -y_, d_); }

PadicNum QuadExtNum::norm() const {
    const PadicNum d = PadicNum::from_integer(d_, prime(), lift_prec(*this, *this));
    return x_ * x_ - d * (y_ * y_);
}

PadicNum QuadExtNum::trace() const {
    const PadicNum two = PadicNum::from_integer(2, prime(), lift_prec(*this, *this));
    return two * x_;
}

long QuadExtNum::valuation_lower_bound() const {
    long bx = x_.is_zero() ? x_.known_exponent() : x_.val();
    long by = y_.is_zero() ? y_.known_exponent() : y_.val();
    return std::min(bx, by);
}

std::string QuadExtNum::to_string() const {
    return "(" + x_.to_string() + ") + (" + y_.to_string() + ")*sqrt(" + d_.get_str() + ")";
}

std::optional<PadicNum> hensel_sqrt(const PadicNum& c) {
    const Int& p = c.prime();
    if (p == 2) throw domain_error("hensel_sqrt requires an odd prime");
    if (c.is_zero()) {
        if (c.is_exact_zero()) return PadicNum::zero(p);
        throw precision_error("square root of a value known only to vanish mod p^N");
    }
    if (c.prec() < kMinPadicPrecision)
        throw precision_error("hensel_sqrt needs at least 2 significant digits");
    if (c.val() % 2 != 0) return std::nullopt;

    const long prec = c.prec();
    const Int u = c.unit();
    if (legendre(Int(u % p), p) != 1) return std::nullopt;

    // Newton iteration r <- (r + u/r)/2, doubling the number of correct
    // digits each step.
    Int r = sqrt_mod_prime(u, p);
    long digits = 1;
    while (digits < prec) {
        digits = std::min(2 * digits, prec);
        const Int modulus = pow_int(p, static_cast<unsigned long>(digits));
        Int rinv, two_inv;
        mpz_invert(rinv.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
        Int two = 2;
        mpz_invert(two_inv.get_mpz_t(), two.get_mpz_t(), modulus.get_mpz_t());
        r = (r + u % modulus * rinv) % modulus * two_inv % modulus;
        if (r < 0) r += modulus;
    }
    const Int modulus = pow_int(p, static_cast<unsigned long>(prec));
    if (r % p > (p - 1) / 2) r = modulus - r;
    return PadicNum(p, c.val() / 2, r, prec);
}

} // namespace qf
