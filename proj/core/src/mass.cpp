#include "qf/mass.hpp"

#include "qf/errors.hpp"

namespace qf {

namespace {

void require_prime_power(const Int& q) {
    if (q < 2) throw domain_error("q must be a prime power at least 2");
    if (factor(q).size() != 1) throw domain_error("q must be a prime power at least 2");
}

void require_rank(long n) {
    if (n < 1) throw domain_error("rank must be at least 1");
}

Rational psi(const Int& n) {
    if (n < 1) throw domain_error("level must be a positive integer");
    Rational value(n);
    for (const auto& [prime, exp] : factor(n)) {
        (void)exp;
        value *= Rational(Int(prime + 1), prime);
    }
    return value;
}

// (-q)^e as an exact rational.
Rational signed_power(const Int& q, long e) {
    Int power = pow_int(q, static_cast<unsigned long>(e));
    return (e % 2 != 0) ? Rational(-power) : Rational(power);
}

} // namespace

std::string mass_kind_to_string(MassKind kind) {
    switch (kind) {
        case MassKind::odd_orth: return "odd-orth";
        case MassKind::even_orth_plus: return "even-orth-plus";
        case MassKind::even_orth_minus: return "even-orth-minus";
        case MassKind::hermitian: return "hermitian";
    }
    throw domain_error("invalid mass family kind");
}

MassKind mass_kind_from_string(const std::string& text) {
    if (text == "odd-orth") return MassKind::odd_orth;
    if (text == "even-orth-plus") return MassKind::even_orth_plus;
    if (text == "even-orth-minus") return MassKind::even_orth_minus;
    if (text == "hermitian") return MassKind::hermitian;
    throw parse_error("unknown mass family kind: " + text);
}

MassFamily make_mass_family(MassKind kind, long n, const Int& q) {
    require_rank(n);
    require_prime_power(q);
    long dim_s = 0;
    switch (kind) {
        case MassKind::odd_orth: dim_s = 2 * n - 1; break;
        case MassKind::even_orth_plus:
        case MassKind::even_orth_minus: dim_s = 2 * n - 2; break;
        case MassKind::hermitian: dim_s = n - 1; break;
    }
    return {kind, n, q, dim_s};
}

Int finite_group_order(MassKind kind, long rank, const Int& q) {
    if (rank < 0) throw domain_error("rank must be nonnegative");
    require_prime_power(q);
    if (rank == 0) return Int(1);

    const unsigned long n = static_cast<unsigned long>(rank);
    Int order(1);
    switch (kind) {
        case MassKind::odd_orth: {
            order = pow_int(q, n * n);
            for (unsigned long i = 1; i <= n; ++i) order *= pow_int(q, 2 * i) - 1;
            break;
        }
        case MassKind::even_orth_plus:
        case MassKind::even_orth_minus: {
            const int eps = (kind == MassKind::even_orth_plus) ? 1 : -1;
            order = pow_int(q, n * (n - 1));
            order *= pow_int(q, n) - eps;
            for (unsigned long i = 1; i + 1 <= n; ++i) order *= pow_int(q, 2 * i) - 1;
            break;
        }
        case MassKind::hermitian: {
            order = pow_int(q, n * (n - 1) / 2);
            for (unsigned long i = 1; i <= n; ++i) {
                Int factor_i = pow_int(q, i);
                order *= (i % 2 == 0) ? Int(factor_i - 1) : Int(factor_i + 1);
            }
            break;
        }
    }
    return order;
}

long weyl_ratio(MassKind kind, long rank) {
    require_rank(rank);
    switch (kind) {
        case MassKind::odd_orth:
        case MassKind::even_orth_plus:
        case MassKind::even_orth_minus: return 2 * rank;
        case MassKind::hermitian: return rank;
    }
    throw domain_error("invalid mass family kind");
}

Rational mass_from_chi(const MassFamily& family, const Rational& chi) {
    require_rank(family.n);
    require_prime_power(family.q);

    const Int g0 = finite_group_order(family.kind, family.n, family.q);

    Int lowered(1);
    switch (family.kind) {
        case MassKind::odd_orth:
            lowered = finite_group_order(MassKind::odd_orth, family.n - 1, family.q);
            break;
        case MassKind::even_orth_plus:
            lowered = finite_group_order(MassKind::even_orth_minus, family.n - 1, family.q);
            break;
        case MassKind::even_orth_minus:
            lowered = finite_group_order(MassKind::even_orth_plus, family.n - 1, family.q);
            break;
        case MassKind::hermitian:
            lowered = finite_group_order(MassKind::hermitian, family.n - 1, family.q);
            break;
    }
    const Rational n0 = Rational(Int((family.q + 1) * lowered));

    Rational mass = Rational(g0) / n0;
    mass /= signed_power(family.q, family.dim_s);
    mass /= Rational(weyl_ratio(family.kind, family.n));
    mass *= chi;
    mass.canonicalize();
    return mass;
}

Rational alternating_sum(const Int& q, long N) {
    if (N < 2 || N % 2 != 0) {
        throw domain_error("exponent must be a positive even integer");
    }
    Rational value(Int(Int(1) - pow_int(q, static_cast<unsigned long>(N))), Int(q + 1));
    value.canonicalize();
    return value;
}

Rational eichler_mass(const Int& p, const Int& N) {
    if (!is_prime(p)) throw domain_error("p must be prime");
    if (N < 1) throw domain_error("level must be a positive integer");
    if (N % p == 0) throw domain_error("p must not divide the level");
    Rational mass = Rational(Int(p - 1), Int(24)) * psi(N);
    mass.canonicalize();
    return mass;
}

Rational chi_modular(const Int& N) {
    Rational chi = -psi(N) / 12;
    chi.canonicalize();
    return chi;
}

bool dv_check(const Int& q, const Int& point_count, const Int& genus) {
    if (q < 2) throw domain_error("q must be at least 2");
    if (point_count < 0) throw domain_error("point count must be nonnegative");
    if (genus < 0) throw domain_error("genus must be nonnegative");
    return 2 * point_count >= (1 - q) * (2 - 2 * genus);
}

} // namespace qf
