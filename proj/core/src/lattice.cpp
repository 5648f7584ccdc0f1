#include "qf/lattice.hpp"

#include "qf/errors.hpp"
#include "qf/place.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace qf {

namespace {

constexpr long kInfiniteValuation = std::numeric_limits<long>::max() / 4;

void require_odd_prime(const Int& p) {
    if (p == 2) throw domain_error("p = 2 is not supported");
    if (!is_prime(p)) throw domain_error("p must be an odd prime");
}

long entry_valuation(const Rational& r, const Int& p) {
    return r == 0 ? kInfiniteValuation : valuation(r, p);
}

struct SnfResult {
    std::vector<long> exponents; // ascending diagonal valuations
    RationalMatrix generators;   // column i over p^exponents[i] generates factor i
};

// Diagonalize over Z_(p) by row and column operations, always pivoting on a
// minimal-valuation entry so every eliminating quotient stays p-integral.
// Only column operations are tracked: with D = R*A*C, the cokernel of A is
// generated by the columns of C divided by the diagonal p-powers.
SnfResult snf_zp(const Int& p, RationalMatrix a) {
    const long n = static_cast<long>(a.size());
    RationalMatrix w(n, std::vector<Rational>(n, Rational(0)));
    for (long i = 0; i < n; ++i) w[i][i] = 1;

    std::vector<long> exponents(n, 0);
    for (long k = 0; k < n; ++k) {
        long best_i = -1, best_j = -1;
        long best_val = kInfiniteValuation;
        for (long i = k; i < n; ++i) {
            for (long j = k; j < n; ++j) {
                long v = entry_valuation(a[i][j], p);
                if (v < best_val) {
                    best_val = v;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_val == kInfiniteValuation) {
            throw domain_error("matrix is singular");
        }
        if (best_i != k) std::swap(a[best_i], a[k]);
        if (best_j != k) {
            for (long i = 0; i < n; ++i) {
                std::swap(a[i][best_j], a[i][k]);
                std::swap(w[i][best_j], w[i][k]);
            }
        }
        const Rational pivot = a[k][k];
        for (long i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / pivot;
            for (long j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        for (long j = k + 1; j < n; ++j) {
            if (a[k][j] == 0) continue;
            Rational f = a[k][j] / pivot;
            for (long i = 0; i < n; ++i) {
                a[i][j] -= f * a[i][k];
                w[i][j] -= f * w[i][k];
            }
        }
        const Rational unit = unit_part(pivot, p);
        for (long i = 0; i < n; ++i) {
            a[i][k] /= unit;
            w[i][k] /= unit;
        }
        exponents[k] = valuation(pivot, p);
    }
    return {std::move(exponents), std::move(w)};
}

Rational bilinear_value(const RationalMatrix& g, const std::vector<Rational>& u,
                        const std::vector<Rational>& v) {
    const long n = static_cast<long>(g.size());
    Rational total(0);
    for (long i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        Rational row(0);
        for (long j = 0; j < n; ++j) row += g[i][j] * v[j];
        total += u[i] * row;
    }
    return total;
}

std::vector<Rational> matrix_column(const RationalMatrix& m, long j) {
    std::vector<Rational> col(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) col[i] = m[i][j];
    return col;
}

void require_unit_class(const SquareClass& det, const Int& p, const char* message) {
    if (det.rep() % p == 0) throw domain_error(message);
}

long knum_valuation(const KNum& a, const Int& p) {
    if (knum_is_zero(a)) return kInfiniteValuation;
    long v = kInfiniteValuation;
    if (a.x != 0) v = std::min(v, valuation(a.x, p));
    if (a.y != 0) v = std::min(v, valuation(a.y, p));
    return v;
}

KNum knum_det(std::vector<std::vector<KNum>> a, const Int& m) {
    const long n = static_cast<long>(a.size());
    KNum det{Rational(1), Rational(0)};
    for (long k = 0; k < n; ++k) {
        long pivot_row = -1;
        for (long i = k; i < n; ++i) {
            if (!knum_is_zero(a[i][k])) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) return KNum{Rational(0), Rational(0)};
        if (pivot_row != k) {
            std::swap(a[pivot_row], a[k]);
            det = knum_mul(det, KNum{Rational(-1), Rational(0)}, m);
        }
        det = knum_mul(det, a[k][k], m);
        for (long i = k + 1; i < n; ++i) {
            if (knum_is_zero(a[i][k])) continue;
            KNum f = knum_div(a[i][k], a[k][k], m);
            for (long j = k; j < n; ++j) {
                a[i][j] = knum_sub(a[i][j], knum_mul(f, a[k][j], m));
            }
        }
    }
    return det;
}

// Diagonal valuations of a Hermitian Gram over the inert local ring; the
// pivoting argument is identical to the rational case because the ring is a
// discrete valuation ring with uniformizer p.
std::vector<long> herm_snf_exponents(const Int& p, const Int& m,
                                     std::vector<std::vector<KNum>> a) {
    const long n = static_cast<long>(a.size());
    std::vector<long> exponents(n, 0);
    for (long k = 0; k < n; ++k) {
        long best_i = -1, best_j = -1;
        long best_val = kInfiniteValuation;
        for (long i = k; i < n; ++i) {
            for (long j = k; j < n; ++j) {
                long v = knum_valuation(a[i][j], p);
                if (v < best_val) {
                    best_val = v;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_val == kInfiniteValuation) {
            throw domain_error("matrix is singular");
        }
        if (best_i != k) std::swap(a[best_i], a[k]);
        if (best_j != k) {
            for (long i = 0; i < n; ++i) std::swap(a[i][best_j], a[i][k]);
        }
        const KNum pivot = a[k][k];
        for (long i = k + 1; i < n; ++i) {
            if (knum_is_zero(a[i][k])) continue;
            KNum f = knum_div(a[i][k], pivot, m);
            for (long j = k; j < n; ++j) {
                a[i][j] = knum_sub(a[i][j], knum_mul(f, a[k][j], m));
            }
        }
        for (long j = k + 1; j < n; ++j) {
            if (knum_is_zero(a[k][j])) continue;
            KNum f = knum_div(a[k][j], pivot, m);
            for (long i = 0; i < n; ++i) {
                a[i][j] = knum_sub(a[i][j], knum_mul(f, a[i][k], m));
            }
        }
        exponents[k] = best_val;
    }
    return exponents;
}

} // namespace

Rational rational_matrix_det(RationalMatrix a) {
    const long n = static_cast<long>(a.size());
    Rational det(1);
    for (long k = 0; k < n; ++k) {
        long pivot_row = -1;
        for (long i = k; i < n; ++i) {
            if (a[i][k] != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) return Rational(0);
        if (pivot_row != k) {
            std::swap(a[pivot_row], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (long i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (long j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

OrthLatticeZp::OrthLatticeZp(Int p, RationalMatrix gram)
    : p_(std::move(p)), gram_(std::move(gram)) {
    require_odd_prime(p_);
    const long n = static_cast<long>(gram_.size());
    if (n == 0) throw domain_error("Gram matrix must be nonempty");
    for (const auto& row : gram_) {
        if (static_cast<long>(row.size()) != n) {
            throw domain_error("Gram matrix must be square");
        }
    }
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            if (gram_[i][j] != gram_[j][i]) throw domain_error("Gram matrix is not symmetric");
            if (gram_[i][j] != 0 && valuation(gram_[i][j], p_) < 0) {
                throw domain_error("Gram entries must be p-integral");
            }
        }
    }
    if (rational_matrix_det(gram_) == 0) throw domain_error("matrix is singular");
}

DiscriminantGroup dual_quotient(const OrthLatticeZp& L) {
    SnfResult snf = snf_zp(L.p(), L.gram());
    const long n = L.rank();

    DiscriminantGroup out{L.p(), {}, {}};
    std::vector<long> torsion;
    for (long i = 0; i < n; ++i) {
        if (snf.exponents[i] >= 1) {
            out.divisors.push_back(pow_int(L.p(), static_cast<unsigned long>(snf.exponents[i])));
            torsion.push_back(i);
        }
    }
    std::sort(out.divisors.begin(), out.divisors.end());

    // Induced form on the p-torsion generators w_i / p: the pairing values
    // (w_i^T G w_j) / p^2 lie in (1/p)Z_(p); scaling by p lands them in Z_(p)
    // and reduction mod p gives the residue-field Gram.
    const long t = static_cast<long>(torsion.size());
    out.induced.assign(t, std::vector<Int>(t, Int(0)));
    for (long i = 0; i < t; ++i) {
        std::vector<Rational> wi = matrix_column(snf.generators, torsion[i]);
        for (long j = i; j < t; ++j) {
            std::vector<Rational> wj = matrix_column(snf.generators, torsion[j]);
            Rational value = bilinear_value(L.gram(), wi, wj) / Rational(L.p());
            Int res = residue_mod(value, L.p(), 1);
            out.induced[i][j] = res;
            out.induced[j][i] = res;
        }
    }
    return out;
}

bool is_selfdual(const OrthLatticeZp& L) {
    return valuation(rational_matrix_det(L.gram()), L.p()) == 0;
}

bool is_maximal(const OrthLatticeZp& L) {
    const Rational det = rational_matrix_det(L.gram());
    if (valuation(det, L.p()) % 2 != 0) {
        throw domain_error("maximality criterion requires even determinant valuation");
    }
    DiscriminantGroup dq = dual_quotient(L);
    if (dq.divisors.empty()) return true;
    if (dq.divisors.size() != 2 || dq.divisors[0] != L.p() || dq.divisors[1] != L.p()) {
        return false;
    }
    // Anisotropy of the induced binary form by exhausting the p^2 vectors.
    const Int& p = L.p();
    const Int& f00 = dq.induced[0][0];
    const Int& f01 = dq.induced[0][1];
    const Int& f11 = dq.induced[1][1];
    for (Int x = 0; x < p; ++x) {
        for (Int y = 0; y < p; ++y) {
            if (x == 0 && y == 0) continue;
            Int q = (f00 * x * x + 2 * f01 * x * y + f11 * y * y) % p;
            if (q == 0) return false;
        }
    }
    return true;
}

PlaneEmbedding embed_plane(long dim, const SquareClass& det, int eps, int target_eps,
                           const Int& p) {
    require_odd_prime(p);
    if (dim < 3) throw domain_error("plane embedding requires dimension at least 3");
    if (eps != 1 && eps != -1) throw domain_error("invariant must be +1 or -1");
    require_unit_class(det, p, "determinant class must be a unit at p");
    if (target_eps != eps) {
        throw domain_error("target invariant must equal the invariant of the space");
    }

    const Int D = smallest_nonresidue(p);
    const Int a = (target_eps == 1) ? Int(1) : p;
    QuadSpace w({Rational(a), Rational(-a * D)});
    SquareClass cdet = canonical_square_class(Int(-det.rep() * D));
    return {std::move(w), LocalQuadInvariants{dim - 2, cdet, 1, std::nullopt}};
}

OrthLatticeZp maximal_lattice(long dim, const SquareClass& det, int eps, const Int& p) {
    require_odd_prime(p);
    if (dim < 1) throw domain_error("dimension must be at least 1");
    if (eps != 1 && eps != -1) throw domain_error("invariant must be +1 or -1");
    require_unit_class(det, p, "determinant class must have even valuation at p");

    if (eps == -1) {
        if (dim == 1) throw domain_error("no local space with the prescribed invariants");
        if (dim == 2 && is_local_square(Rational(-det.rep()), p)) {
            throw domain_error("no local space with the prescribed invariants");
        }
    }

    RationalMatrix g(dim, std::vector<Rational>(dim, Rational(0)));
    if (eps == 1) {
        for (long i = 0; i + 1 < dim; ++i) g[i][i] = 1;
        g[dim - 1][dim - 1] = Rational(det.rep());
    } else {
        const Int D = smallest_nonresidue(p);
        g[0][0] = Rational(2 * p);
        g[1][1] = Rational(-2 * p * D);
        if (dim > 2) {
            for (long i = 2; i + 1 < dim; ++i) g[i][i] = 1;
            Int r = is_local_square(Rational(-D * det.rep()), p) ? Int(1) : D;
            g[dim - 1][dim - 1] = Rational(r);
        }
    }
    return OrthLatticeZp(p, std::move(g));
}

KNum knum_conj(const KNum& a) { return {a.x, -a.y}; }

KNum knum_add(const KNum& a, const KNum& b) { return {a.x + b.x, a.y + b.y}; }

KNum knum_sub(const KNum& a, const KNum& b) { return {a.x - b.x, a.y - b.y}; }

KNum knum_mul(const KNum& a, const KNum& b, const Int& m) {
    return {a.x * b.x - Rational(m) * a.y * b.y, a.x * b.y + a.y * b.x};
}

KNum knum_div(const KNum& a, const KNum& b, const Int& m) {
    Rational norm = b.x * b.x + Rational(m) * b.y * b.y;
    if (norm == 0) throw domain_error("division by zero");
    KNum num = knum_mul(a, knum_conj(b), m);
    return {num.x / norm, num.y / norm};
}

bool knum_is_zero(const KNum& a) { return a.x == 0 && a.y == 0; }

HermLatticeZp::HermLatticeZp(ImagQuadField field, Int p, std::vector<std::vector<KNum>> gram)
    : field_(std::move(field)), p_(std::move(p)), gram_(std::move(gram)) {
    require_odd_prime(p_);
    if (place_splitting(field_, Place::finite(p_)) != Splitting::inert) {
        throw domain_error("p must be inert in the field");
    }
    const long n = static_cast<long>(gram_.size());
    if (n == 0) throw domain_error("Gram matrix must be nonempty");
    for (const auto& row : gram_) {
        if (static_cast<long>(row.size()) != n) {
            throw domain_error("Gram matrix must be square");
        }
    }
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            KNum conj = knum_conj(gram_[j][i]);
            if (gram_[i][j].x != conj.x || gram_[i][j].y != conj.y) {
                throw domain_error("Gram matrix is not conjugate-symmetric");
            }
            if (knum_valuation(gram_[i][j], p_) < 0) {
                throw domain_error("Gram entries must be p-integral");
            }
        }
    }
    if (knum_is_zero(knum_det(gram_, field_.m()))) throw domain_error("matrix is singular");
}

HermDiscriminantGroup herm_dual_quotient(const HermLatticeZp& L) {
    std::vector<long> exps = herm_snf_exponents(L.p(), L.field().m(), L.gram());
    HermDiscriminantGroup out{L.p(), {}, Int(1)};
    long total = 0;
    for (long e : exps) {
        if (e >= 1) {
            out.lengths.push_back(Int(e));
            total += e;
        }
    }
    std::sort(out.lengths.begin(), out.lengths.end());
    out.order = pow_int(L.p(), static_cast<unsigned long>(2 * total));
    return out;
}

bool herm_is_selfdual(const HermLatticeZp& L) {
    return knum_valuation(knum_det(L.gram(), L.field().m()), L.p()) == 0;
}

HermLatticeZp herm_maximal_lattice(const ImagQuadField& field, long dim, int cls,
                                   const Int& p) {
    require_odd_prime(p);
    if (dim < 1) throw domain_error("dimension must be at least 1");
    if (cls != 1 && cls != -1) throw domain_error("class must be +1 or -1");
    if (place_splitting(field, Place::finite(p)) != Splitting::inert) {
        throw domain_error("p must be inert in the field");
    }

    std::vector<std::vector<KNum>> g(
        dim, std::vector<KNum>(dim, KNum{Rational(0), Rational(0)}));
    for (long i = 0; i < dim; ++i) g[i][i] = KNum{Rational(1), Rational(0)};
    if (cls == -1) g[dim - 1][dim - 1] = KNum{Rational(p), Rational(0)};
    return HermLatticeZp(field, p, std::move(g));
}

} // namespace qf
