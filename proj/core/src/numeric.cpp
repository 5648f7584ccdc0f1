#include "qf/numeric.hpp"

#include "qf/errors.hpp"

#include <algorithm>
#include <cctype>

namespace qf {

namespace {

bool is_decimal_string(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Int parse_integer(const std::string& text) {
    if (!is_decimal_string(text)) throw parse_error("not an integer: '" + text + "'");
    return Int(text, 10);
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    Int n = parse_integer(num);
    Int d = parse_integer(den);
    if (d == 0) throw parse_error("zero denominator in '" + text + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::map<Int, unsigned> factor(const Int& n) {
    Int m = abs(n);
    if (m == 0) throw domain_error("cannot factor zero");
    std::map<Int, unsigned> result;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        if (e) result[p] = e;
    };
    strip(2);
    strip(3);
    const Int bound = 10'000'000;
    for (Int d = 5; d <= bound && d * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1) {
        if (is_prime(m)) {
            result[m] += 1;
        } else {
            // Could still be a square/cube of a large prime.
            Int root;
            if (mpz_perfect_square_p(m.get_mpz_t())) {
                mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
                if (is_prime(root)) { result[root] += 2; return result; }
            }
            throw domain_error("operand too large to factor: " + m.get_str());
        }
    }
    return result;
}

long valuation(const Int& n, const Int& p) {
    if (n == 0) throw domain_error("valuation of zero");
    long v = 0;
    Int m = n;
    while (m % p == 0) { m /= p; ++v; }
    return v;
}

long valuation(const Rational& r, const Int& p) {
    if (r == 0) throw domain_error("valuation of zero");
    return valuation(Int(r.get_num()), p) - valuation(Int(r.get_den()), p);
}

Rational unit_part(const Rational& r, const Int& p) {
    const long v = valuation(r, p);
    Rational pw(pow_int(p, static_cast<unsigned long>(v >= 0 ? v : -v)));
    Rational result = v >= 0 ? Rational(r / pw) : Rational(r * pw);
    result.canonicalize();
    return result;
}

Int residue_mod(const Rational& r, const Int& p, unsigned k) {
    const Int modulus = pow_int(p, k);
    Int den = r.get_den();
    if (den % p == 0) throw domain_error("residue of a non-p-integral rational");
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw domain_error("denominator not invertible modulo " + modulus.get_str());
    Int res = (r.get_num() % modulus) * inv % modulus;
    if (res < 0) res += modulus;
    return res;
}

int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

int legendre(const Rational& a, const Int& p) {
    return legendre(residue_mod(a, p), p);
}

Int smallest_nonresidue(const Int& p) {
    if (p == 2 || !is_prime(p)) throw domain_error("smallest_nonresidue needs an odd prime");
    for (Int d = 2;; ++d)
        if (legendre(d, p) == -1) return d;
}

Int sqrt_mod_prime(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    if (legendre(r, p) != 1) throw domain_error("sqrt_mod_prime of a nonresidue");
    auto pow_mod = [&](Int base, Int exp) {
        Int out;
        mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
        return out;
    };
    if (p % 4 == 3) return pow_mod(r, (p + 1) / 4);
    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    Int z = smallest_nonresidue(p);
    Int c = pow_mod(z, q);
    Int x = pow_mod(r, (q + 1) / 2);
    Int t = pow_mod(r, q);
    unsigned long m = s;
    while (t != 1) {
        Int tt = t;
        unsigned long i = 0;
        while (tt != 1) { tt = tt * tt % p; ++i; }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

bool is_real_square(const Rational& x) { return x > 0; }

bool is_local_square(const Rational& x, const Int& p) {
    if (x == 0) throw domain_error("square test of zero");
    if (valuation(x, p) % 2 != 0) return false;
    const Rational u = unit_part(x, p);
    if (p == 2) return residue_mod(u, 2, 3) == 1;
    return legendre(u, p) == 1;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

} // namespace qf
