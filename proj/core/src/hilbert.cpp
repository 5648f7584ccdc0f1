#include "qf/hilbert.hpp"

#include "qf/errors.hpp"

namespace qf {

namespace {

// (u-1)/2 mod 2 for an odd residue u mod 8.
int eps2(const Int& u_mod8) { return ((u_mod8 - 1) / 2) % 2 != 0 ? 1 : 0; }

// (u^2-1)/8 mod 2 for an odd residue u mod 8: 0 iff u = +-1 mod 8.
int omega2(const Int& u_mod8) { return (u_mod8 == 1 || u_mod8 == 7) ? 0 : 1; }

} // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw domain_error("hilbert symbol needs nonzero arguments");
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;

    const Int& p = v.prime();
    const long alpha = valuation(a, p);
    const long beta = valuation(b, p);
    const Rational u = unit_part(a, p);
    const Rational w = unit_part(b, p);

    if (p == 2) {
        const Int u8 = residue_mod(u, 2, 3);
        const Int w8 = residue_mod(w, 2, 3);
        const long exponent = static_cast<long>(eps2(u8)) * eps2(w8)
                            + alpha * omega2(w8) + beta * omega2(u8);
        return exponent % 2 != 0 ? -1 : 1;
    }

    int sign = 1;
    if ((alpha * beta) % 2 != 0 && (p - 1) / 2 % 2 != 0) sign = -sign;
    if (beta % 2 != 0 && legendre(u, p) == -1) sign = -sign;
    if (alpha % 2 != 0 && legendre(w, p) == -1) sign = -sign;
    return sign;
}

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v) {
    return hilbert_symbol(Rational(a.rep()), Rational(b.rep()), v);
}

PlaceSet symbol_support(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) throw domain_error("hilbert symbol needs nonzero arguments");
    PlaceSet out{Place::infinity(), Place::finite(2)};
    for (const Rational* r : {&a, &b}) {
        for (const Int& n : {Int(r->get_num()), Int(r->get_den())}) {
            if (n == 1 || n == -1) continue;
            for (const auto& [p, e] : factor(n)) out.insert(Place::finite(p));
        }
    }
    return out;
}

} // namespace qf
