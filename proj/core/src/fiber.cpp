#include "qf/fiber.hpp"

#include "qf/errors.hpp"

#include <algorithm>
#include <utility>

namespace qf {

namespace {

QuadExtNum qext_scale(const QuadExtNum& a, const PadicNum& s) {
    return QuadExtNum(a.x() * s, a.y() * s, a.d());
}

QuadExtNum qext_div(const QuadExtNum& a, const QuadExtNum& b) {
    QuadExtNum num = a * b.conj();
    return qext_scale(num, b.norm().inverse());
}

QuadExtNum qext_shift(const QuadExtNum& a, long k) {
    return QuadExtNum(a.x().shift(k), a.y().shift(k), a.d());
}

QuadExtNum qext_real(const PadicNum& x, const Int& d) {
    return QuadExtNum(x, PadicNum::zero(x.prime()), d);
}

[[noreturn]] void fail_verification(const std::string& what) {
    throw domain_error("fiber decomposition failed verification: " + what);
}

// value = c (mod p^k)
bool congruent_to(const PadicNum& x, const Int& c, long k) {
    if (x.known_exponent() < k) return false;
    Int mod = pow_int(x.prime(), static_cast<unsigned long>(k));
    Int want = ((c % mod) + mod) % mod;
    return x.residue(k) == want;
}

PadicNum padic_det(std::vector<std::vector<PadicNum>> a, const Int& p) {
    const long n = static_cast<long>(a.size());
    PadicNum det = PadicNum::from_integer(1, p);
    for (long k = 0; k < n; ++k) {
        long pivot = -1;
        long best_val = 0;
        for (long i = k; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            if (pivot < 0 || a[i][k].val() < best_val) {
                pivot = i;
                best_val = a[i][k].val();
            }
        }
        if (pivot < 0) fail_verification("singular matrix");
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det = det * a[k][k];
        for (long i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            PadicNum f = a[i][k] / a[k][k];
            for (long j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
        }
    }
    return det;
}

QuadExtNum qext_det(std::vector<std::vector<QuadExtNum>> a, const Int& p, const Int& d) {
    const long n = static_cast<long>(a.size());
    QuadExtNum det = qext_real(PadicNum::from_integer(1, p), d);
    for (long k = 0; k < n; ++k) {
        long pivot = -1;
        long best_val = 0;
        for (long i = k; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            long v = a[i][k].valuation_lower_bound();
            if (pivot < 0 || v < best_val) {
                pivot = i;
                best_val = v;
            }
        }
        if (pivot < 0) fail_verification("singular matrix");
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det = det * a[k][k];
        for (long i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            QuadExtNum f = qext_div(a[i][k], a[k][k]);
            for (long j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
        }
    }
    return det;
}

void validate_orientation(int orientation) {
    if (orientation != 1 && orientation != -1) {
        throw domain_error("orientation must be +1 or -1");
    }
}

void validate_parameter(const BaseDecomposition& base, const FiberParameter& t,
                        long expected) {
    if (t.precision < kMinPadicPrecision) {
        throw precision_error("insufficient precision for fiber computations");
    }
    if (static_cast<long>(t.entries.size()) != expected) {
        throw domain_error("parameter length does not match the decomposition");
    }
    for (const QuadExtNum& entry : t.entries) {
        if (entry.prime() != base.p || entry.d() != base.ext_d) {
            throw domain_error("parameter entries live in a different extension");
        }
        if (entry.valuation_lower_bound() < 1) {
            throw domain_error("parameter entry must lie in the maximal ideal");
        }
    }
}

std::vector<std::vector<PadicNum>> lift_matrix(const RationalMatrix& m, const Int& p,
                                               long prec) {
    std::vector<std::vector<PadicNum>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        std::vector<PadicNum> lifted;
        lifted.reserve(row.size());
        for (const Rational& r : row) lifted.push_back(PadicNum::from_rational(r, p, prec));
        out.push_back(std::move(lifted));
    }
    return out;
}

std::vector<PadicNum> apply_matrix(const std::vector<std::vector<PadicNum>>& m,
                                   const std::vector<PadicNum>& v, const Int& p) {
    const long n = static_cast<long>(m.size());
    std::vector<PadicNum> out;
    out.reserve(n);
    for (long i = 0; i < n; ++i) {
        PadicNum acc = PadicNum::zero(p);
        for (long j = 0; j < n; ++j) acc = acc + m[i][j] * v[j];
        out.push_back(std::move(acc));
    }
    return out;
}

PadicNum dot(const std::vector<PadicNum>& u, const std::vector<PadicNum>& v, const Int& p) {
    PadicNum acc = PadicNum::zero(p);
    for (std::size_t i = 0; i < u.size(); ++i) acc = acc + u[i] * v[i];
    return acc;
}

} // namespace

BaseDecomposition base_point_orth(long dim, const SquareClass& det, int eps, const Int& p,
                                  int orientation) {
    validate_orientation(orientation);
    if (eps != -1) throw domain_error("base decomposition requires invariant -1");
    if (dim < 3) throw domain_error("orthogonal base requires dimension at least 3");

    OrthLatticeZp lattice = maximal_lattice(dim, det, -1, p);
    const RationalMatrix& g = lattice.gram();
    RationalMatrix w(2, std::vector<Rational>(2, Rational(0)));
    w[0][0] = g[0][0];
    w[1][1] = g[1][1];
    RationalMatrix l(dim - 2, std::vector<Rational>(dim - 2, Rational(0)));
    for (long i = 0; i < dim - 2; ++i) l[i][i] = g[i + 2][i + 2];

    return {FiberKind::orth, p,    dim,          Int(0),
            smallest_nonresidue(p), orientation, std::move(w), std::move(l)};
}

BaseDecomposition base_point_herm(const ImagQuadField& field, long dim, int cls,
                                  const Int& p, int orientation) {
    validate_orientation(orientation);
    if (cls != -1) throw domain_error("base decomposition requires the non-norm class");
    if (dim < 2) throw domain_error("Hermitian base requires dimension at least 2");

    HermLatticeZp lattice = herm_maximal_lattice(field, dim, -1, p);
    (void)lattice; // construction validates the prescription (odd inert prime)

    RationalMatrix w(1, std::vector<Rational>(1, Rational(p)));
    RationalMatrix l(dim - 1, std::vector<Rational>(dim - 1, Rational(0)));
    for (long i = 0; i < dim - 1; ++i) l[i][i] = 1;

    return {FiberKind::herm, p,    dim,          field.m(),
            Int(-field.m()), orientation, std::move(w), std::move(l)};
}

RationalMatrix lambda_gram(const BaseDecomposition& base) {
    const long k = static_cast<long>(base.W_gram.size());
    const long r = static_cast<long>(base.L_gram.size());
    RationalMatrix g(k + r, std::vector<Rational>(k + r, Rational(0)));
    for (long i = 0; i < k; ++i) {
        for (long j = 0; j < k; ++j) g[i][j] = base.W_gram[i][j];
    }
    for (long i = 0; i < r; ++i) {
        for (long j = 0; j < r; ++j) g[k + i][k + j] = base.L_gram[i][j];
    }
    return g;
}

FiberParameter fiber_parameter_from_rationals(
    const BaseDecomposition& base,
    const std::vector<std::pair<Rational, Rational>>& coords, long precision) {
    FiberParameter t;
    t.precision = precision;
    t.entries.reserve(coords.size());
    for (const auto& [x, y] : coords) {
        t.entries.push_back(
            QuadExtNum::from_rationals(x, y, base.ext_d, base.p, precision + 2));
    }
    return t;
}

FiberPoint fiber_point(const BaseDecomposition& base, const FiberParameter& t) {
    if (base.kind != FiberKind::orth) {
        throw domain_error("orthogonal base decomposition required");
    }
    const long nl = base.n - 2;
    validate_parameter(base, t, nl);

    const Int& p = base.p;
    const Int& D = base.ext_d;
    const long m = t.precision;
    const long wp = m + 4;

    // v = e + lambda, w = orientation*sqrt(D)*e + mu with lambda_j the real
    // and mu_j = orientation*D*(imaginary) coordinate of t_j.
    PadicNum od = PadicNum::from_integer(Int(base.orientation) * D, p, wp);
    std::vector<PadicNum> lam, mu;
    lam.reserve(nl);
    mu.reserve(nl);
    for (const QuadExtNum& entry : t.entries) {
        lam.push_back(entry.x());
        mu.push_back(entry.y() * od);
    }

    auto lp = lift_matrix(base.L_gram, p, wp);
    std::vector<PadicNum> llam = apply_matrix(lp, lam, p);
    std::vector<PadicNum> lmu = apply_matrix(lp, mu, p);

    PadicNum two_p = PadicNum::from_integer(2 * p, p, wp);
    PadicNum minus_2pd = PadicNum::from_integer(-2 * p * D, p, wp);
    PadicNum or_2pd = PadicNum::from_integer(Int(base.orientation) * 2 * p * D, p, wp);

    PadicNum g_vv = two_p + dot(lam, llam, p);
    PadicNum g_vw = dot(lam, lmu, p);
    PadicNum g_ww = minus_2pd + dot(mu, lmu, p);

    // First-order inner products of the moved plane.
    if (!congruent_to(g_vv, 2 * p, 2)) fail_verification("<v,v> != 2p mod p^2");
    if (!congruent_to(g_ww, -2 * p * D, 2)) fail_verification("<w,w> != -2pD mod p^2");
    if (!congruent_to(g_vw, 0, 2)) fail_verification("<v,w> != 0 mod p^2");

    // M carries the class of the scaled norm plane: unit-square determinant
    // ratio against the base plane.
    PadicNum det_m = g_vv * g_ww - g_vw * g_vw;
    if (det_m.is_zero() || det_m.val() != 2) fail_verification("det(M) valuation");
    PadicNum det_w = PadicNum::from_integer(-4 * p * p * D, p, wp);
    if (!hensel_sqrt(det_m / det_w).has_value()) {
        fail_verification("M is not in the class of the base plane");
    }

    FiberPoint out;
    out.precision = m;
    out.M_gram = {{g_vv, g_vw}, {g_vw, g_ww}};

    PadicNum one = PadicNum::from_integer(1, p, wp);
    PadicNum zero = PadicNum::zero(p);

    FiberBasisVector v{qext_real(one, D), {}};
    FiberBasisVector w{QuadExtNum(zero, PadicNum::from_integer(base.orientation, p, wp), D),
                       {}};
    for (long j = 0; j < nl; ++j) {
        v.l_coeffs.push_back(qext_real(lam[j], D));
        w.l_coeffs.push_back(qext_real(mu[j], D));
    }
    out.m_basis = {std::move(v), std::move(w)};

    // Complement basis z_i = f_i - ((L*lambda)_i/2p) e
    //                        + orientation*((L*mu)_i/2pD) sqrt(D) e.
    std::vector<std::vector<PadicNum>> perp(nl, std::vector<PadicNum>(nl, zero));
    for (long i = 0; i < nl; ++i) {
        FiberBasisVector z{QuadExtNum(-(llam[i] / two_p), lmu[i] / or_2pd, D), {}};
        for (long j = 0; j < nl; ++j) {
            z.l_coeffs.push_back(qext_real(i == j ? one : zero, D));
        }
        out.mperp_basis.push_back(std::move(z));
        for (long j = i; j < nl; ++j) {
            PadicNum entry = lp[i][j] + (llam[i] * llam[j]) / two_p
                           - (lmu[i] * lmu[j]) / PadicNum::from_integer(2 * p * D, p, wp);
            perp[i][j] = entry;
            perp[j][i] = entry;
        }
    }

    for (long i = 0; i < nl; ++i) {
        for (long j = 0; j < nl; ++j) {
            if (!perp[i][j].is_zero() && perp[i][j].val() < 0) {
                fail_verification("complement Gram is not integral");
            }
        }
    }
    PadicNum det_perp = padic_det(perp, p);
    if (det_perp.is_zero() || det_perp.val() != 0) {
        fail_verification("complement is not self-dual");
    }

    // Index-1 certificate: det(M)*det(Mperp)/det(Lambda) is a unit square.
    PadicNum det_lambda = PadicNum::from_rational(rational_matrix_det(lambda_gram(base)), p, wp);
    PadicNum ratio = det_m * det_perp / det_lambda;
    if (ratio.is_zero() || ratio.val() != 0 || !hensel_sqrt(ratio).has_value()) {
        fail_verification("M + Mperp has index > 1");
    }

    out.Mperp_gram.assign(nl, std::vector<QuadExtNum>(nl, qext_real(zero, D)));
    for (long i = 0; i < nl; ++i) {
        for (long j = 0; j < nl; ++j) out.Mperp_gram[i][j] = qext_real(perp[i][j], D);
    }
    return out;
}

FiberPoint fiber_point_herm(const BaseDecomposition& base, const FiberParameter& t) {
    if (base.kind != FiberKind::herm) {
        throw domain_error("Hermitian base decomposition required");
    }
    const long nl = base.n - 1;
    validate_parameter(base, t, nl);

    const Int& p = base.p;
    const Int& d = base.ext_d;
    const long m = t.precision;
    const long wp = m + 4;

    PadicNum zero = PadicNum::zero(p);
    PadicNum one = PadicNum::from_integer(1, p, wp);
    QuadExtNum qzero = qext_real(zero, d);

    // (L t)_i, with L rational symmetric.
    auto lp = lift_matrix(base.L_gram, p, wp);
    std::vector<QuadExtNum> lt(nl, qzero);
    for (long i = 0; i < nl; ++i) {
        QuadExtNum acc = qzero;
        for (long j = 0; j < nl; ++j) acc = acc + qext_scale(t.entries[j], lp[i][j]);
        lt[i] = acc;
    }

    // h(v,v) = p + sum_{ij} L_ij t_i conj(t_j), a real value.
    QuadExtNum total = qzero;
    for (long i = 0; i < nl; ++i) total = total + t.entries[i] * lt[i].conj();
    if (total.y().known_exponent() < m || (!total.y().is_zero() && total.y().val() < m)) {
        fail_verification("<v,v> is not real");
    }
    PadicNum g_vv = PadicNum::from_integer(p, p, wp) + total.x();
    if (!congruent_to(g_vv, p, 2)) fail_verification("h(v,v) != p mod p^2");
    if (g_vv.is_zero() || g_vv.val() != 1) fail_verification("h(v,v) valuation");

    FiberPoint out;
    out.precision = m;
    out.M_gram = {{g_vv}};

    FiberBasisVector v{qext_real(one, d), t.entries};
    out.m_basis = {std::move(v)};

    // z_i = -conj((L t)_i)/p e + f_i; Gram L_ij + conj((Lt)_i)(Lt)_j / p.
    std::vector<std::vector<QuadExtNum>> perp(nl, std::vector<QuadExtNum>(nl, qzero));
    for (long i = 0; i < nl; ++i) {
        FiberBasisVector z{qext_shift(-lt[i].conj(), -1), {}};
        for (long j = 0; j < nl; ++j) z.l_coeffs.push_back(qext_real(i == j ? one : zero, d));
        out.mperp_basis.push_back(std::move(z));
        for (long j = 0; j < nl; ++j) {
            QuadExtNum entry = qext_real(lp[i][j], d) + qext_shift(lt[i].conj() * lt[j], -1);
            perp[i][j] = entry;
        }
    }

    for (long i = 0; i < nl; ++i) {
        for (long j = 0; j < nl; ++j) {
            if (perp[i][j].valuation_lower_bound() < 0) {
                fail_verification("complement Gram is not integral");
            }
        }
    }

    // det(Mperp) = 1 mod pi and the A-module index of M + Mperp is 0.
    QuadExtNum det_perp = qext_det(perp, p, d);
    if (!congruent_to(det_perp.x(), 1, 1)) fail_verification("det(Mperp) != 1 mod pi");
    if (det_perp.y().known_exponent() < 1
        || (!det_perp.y().is_zero() && det_perp.y().val() < 1)) {
        fail_verification("det(Mperp) != 1 mod pi");
    }
    PadicNum det_lambda = PadicNum::from_rational(rational_matrix_det(lambda_gram(base)), p, wp);
    PadicNum ratio = g_vv * det_perp.x() / det_lambda;
    if (ratio.is_zero() || ratio.val() != 0) fail_verification("M + Mperp has index > 1");

    out.Mperp_gram = std::move(perp);
    return out;
}

long filtration_level(const FiberParameter& t) {
    long level = t.precision + 1;
    for (const QuadExtNum& entry : t.entries) {
        level = std::min(level, entry.valuation_lower_bound());
    }
    return level - 1;
}

} // namespace qf
