#include "oracles.hpp"

#include "qf/errors.hpp"

#include <cstdint>
#include <numeric>
#include <utility>

namespace oracle {

namespace {

using std::int64_t;

int64_t to_long(const qf::Int& n) {
    if (!n.fits_slong_p()) throw qf::domain_error("oracle operand too large");
    return n.get_si();
}

int64_t pow_long(int64_t base, int exp) {
    int64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// A nonzero rational reduced to the shape p^{0 or 1} * (unit mod p^k): the
// same square class over Q_p, small enough for machine arithmetic.
int64_t normalize_coeff(const qf::Rational& r, int64_t p, int64_t pk) {
    if (r == 0) throw qf::domain_error("oracle operand must be nonzero");
    qf::Int a(r.get_num() * r.get_den());
    long v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    qf::Int u = a % pk;
    if (u < 0) u += pk;
    int64_t out = to_long(u);
    if (v % 2 == 1) out = (out * p) % pk;
    return out;
}

// Value sets of one diagonal term a*x^2 mod p^k, split by whether x is a
// unit.  A value may be achievable both ways; the sets overlap.
struct TermValues {
    std::vector<char> unit_x;
    std::vector<char> nonunit_x;
};

TermValues term_values(int64_t a, int64_t p, int64_t pk) {
    TermValues t{std::vector<char>(pk, 0), std::vector<char>(pk, 0)};
    for (int64_t x = 0; x < pk; ++x) {
        int64_t v = (a % pk) * ((x * x) % pk) % pk;
        (x % p != 0 ? t.unit_x : t.nonunit_x)[v] = 1;
    }
    return t;
}

// reachable[flag][v]: v is a value of the partial form on vectors whose
// coordinates so far include (flag = 1) or do not include (flag = 0) a unit.
std::vector<char> primitive_value_set(const std::vector<qf::Rational>& coeffs, int64_t p,
                                      int64_t pk) {
    std::vector<char> no_unit(pk, 0), with_unit(pk, 0);
    no_unit[0] = 1;
    for (const qf::Rational& c : coeffs) {
        TermValues t = term_values(normalize_coeff(c, p, pk), p, pk);
        std::vector<char> next_no(pk, 0), next_with(pk, 0);
        for (int64_t v = 0; v < pk; ++v) {
            if (!no_unit[v] && !with_unit[v]) continue;
            for (int64_t w = 0; w < pk; ++w) {
                bool by_unit = t.unit_x[w] != 0;
                bool by_nonunit = t.nonunit_x[w] != 0;
                if (!by_unit && !by_nonunit) continue;
                int64_t s = (v + w) % pk;
                if (no_unit[v]) {
                    if (by_unit) next_with[s] = 1;
                    if (by_nonunit) next_no[s] = 1;
                }
                if (with_unit[v]) next_with[s] = 1;
            }
        }
        no_unit = std::move(next_no);
        with_unit = std::move(next_with);
    }
    return with_unit;
}

long exponent_for(int64_t p) { return p == 2 ? 5 : 3; }

} // namespace

int hilbert(const qf::Rational& a, const qf::Rational& b, const qf::Int& p_in) {
    int64_t p = to_long(p_in);
    int64_t pk = pow_long(p, static_cast<int>(exponent_for(p)));
    int64_t an = normalize_coeff(a, p, pk);
    int64_t bn = normalize_coeff(b, p, pk);

    std::vector<char> is_square(pk, 0);
    for (int64_t z = 0; z < pk; ++z) is_square[(z * z) % pk] = 1;

    for (int64_t x = 0; x < pk; ++x) {
        for (int64_t y = 0; y < pk; ++y) {
            if (x % p == 0 && y % p == 0) continue;
            int64_t t = (an * ((x * x) % pk) + bn * ((y * y) % pk)) % pk;
            if (is_square[t]) return 1;
        }
    }
    return -1;
}

int hilbert_real(const qf::Rational& a, const qf::Rational& b) {
    return (a < 0 && b < 0) ? -1 : 1;
}

bool isotropic(const std::vector<qf::Rational>& coeffs, const qf::Int& p_in) {
    int64_t p = to_long(p_in);
    int64_t pk = pow_long(p, static_cast<int>(exponent_for(p)));
    return primitive_value_set(coeffs, p, pk)[0] != 0;
}

bool represents(const std::vector<qf::Rational>& coeffs, const qf::Rational& c,
                const qf::Int& p_in) {
    int64_t p = to_long(p_in);
    long k = exponent_for(p);
    int64_t pk = pow_long(p, static_cast<int>(k));
    std::vector<char> values = primitive_value_set(coeffs, p, pk);
    if (values[0]) return true; // isotropic regular forms are universal
    int64_t cn = normalize_coeff(c, p, pk);
    long cv = cn % p == 0 ? 1 : 0;
    for (long s = 0; 2 * s + cv <= k - 1; ++s) {
        int64_t target = cn;
        for (long i = 0; i < 2 * s; ++i) target = (target * p) % pk;
        if (values[target]) return true;
    }
    return false;
}

namespace {

// Fixed-size linear algebra mod q for the group-order searches.
using Matrix = std::vector<std::vector<int64_t>>;

int64_t det_mod(Matrix m, int64_t q) {
    const std::size_t n = m.size();
    int64_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t r = c; r < n; ++r) {
            if (m[r][c] % q != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = (q - det) % q;
        }
        det = det * m[c][c] % q;
        int64_t inv = 1;
        for (int64_t t = 1; t < q; ++t) {
            if (m[c][c] * t % q == 1) {
                inv = t;
                break;
            }
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            int64_t f = m[r][c] * inv % q;
            for (std::size_t j = c; j < n; ++j) m[r][j] = ((m[r][j] - f * m[c][j]) % q + q) % q;
        }
    }
    return det % q;
}

long rank_mod(Matrix m, int64_t q) {
    const std::size_t n = m.size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t r = row; r < n; ++r) {
            if (m[r][c] % q != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) continue;
        std::swap(m[pivot], m[row]);
        int64_t inv = 1;
        for (int64_t t = 1; t < q; ++t) {
            if (m[row][c] * t % q == 1) {
                inv = t;
                break;
            }
        }
        for (std::size_t r = row + 1; r < n; ++r) {
            int64_t f = m[r][c] * inv % q;
            for (std::size_t j = c; j < n; ++j) m[r][j] = ((m[r][j] - f * m[row][j]) % q + q) % q;
        }
        ++row;
    }
    return static_cast<long>(row);
}

} // namespace

long so_order(long q, const std::vector<std::vector<long>>& upper) {
    const std::size_t n = upper.size();
    auto form = [&](const std::vector<int64_t>& v) {
        int64_t acc = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) acc += upper[i][j] * v[i] * v[j];
        return ((acc % q) + q) % q;
    };
    auto bilinear = [&](const std::vector<int64_t>& x, const std::vector<int64_t>& y) {
        std::vector<int64_t> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = (x[i] + y[i]) % q;
        return ((form(s) - form(x) - form(y)) % q + q) % q;
    };

    std::vector<std::vector<int64_t>> vectors;
    std::vector<int64_t> v(n, 0);
    while (true) {
        vectors.push_back(v);
        std::size_t i = 0;
        while (i < n && ++v[i] == q) v[i++] = 0;
        if (i == n) break;
    }

    std::vector<std::vector<int64_t>> basis(n);
    for (std::size_t i = 0; i < n; ++i) {
        basis[i].assign(n, 0);
        basis[i][i] = 1;
    }

    long count = 0;
    std::vector<std::vector<int64_t>> cols;
    auto emit = [&]() {
        Matrix g(n, std::vector<int64_t>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) g[r][c] = cols[c][r];
        int64_t d = det_mod(g, q);
        if (d == 0) return;
        if (q % 2 != 0) {
            if (d == 1) ++count;
            return;
        }
        if (n % 2 == 1) {
            ++count; // odd dimension in characteristic 2: no proper subgroup
            return;
        }
        for (std::size_t i = 0; i < n; ++i) g[i][i] = (g[i][i] + q - 1) % q;
        if (rank_mod(g, q) % 2 == 0) ++count; // Dickson-trivial half
    };
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            emit();
            return;
        }
        for (const auto& w : vectors) {
            if (form(w) != form(basis[j])) continue;
            bool ok = true;
            for (std::size_t i = 0; i < j && ok; ++i)
                ok = bilinear(cols[i], w) == bilinear(basis[i], basis[j]);
            if (!ok) continue;
            cols.push_back(w);
            self(self, j + 1);
            cols.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

namespace {

// F_{q^2} for q in {2, 3}, as pairs (a, b) = a + b*t.
//   q = 2: t^2 = t + 1, conj(a + b t) = (a + b) + b t.
//   q = 3: t^2 = -1,    conj(a + b t) = a - b t.
struct Fq2 {
    int64_t q;
    std::pair<int64_t, int64_t> mul(std::pair<int64_t, int64_t> u,
                                    std::pair<int64_t, int64_t> v) const {
        auto [a, b] = u;
        auto [c, d] = v;
        if (q == 2) return {(a * c + b * d) % 2, (a * d + b * c + b * d) % 2};
        return {((a * c - b * d) % 3 + 3) % 3, (a * d + b * c) % 3};
    }
    std::pair<int64_t, int64_t> add(std::pair<int64_t, int64_t> u,
                                    std::pair<int64_t, int64_t> v) const {
        return {(u.first + v.first) % q, (u.second + v.second) % q};
    }
    std::pair<int64_t, int64_t> conj(std::pair<int64_t, int64_t> u) const {
        if (q == 2) return {(u.first + u.second) % 2, u.second};
        return {u.first, (3 - u.second) % 3};
    }
};

} // namespace

long unitary_order(long q, long n) {
    if ((q != 2 && q != 3) || n < 1 || n > 2) {
        throw qf::domain_error("unitary oracle supports q in {2,3}, n in {1,2}");
    }
    Fq2 f{q};
    std::vector<std::pair<int64_t, int64_t>> elems;
    for (int64_t a = 0; a < q; ++a)
        for (int64_t b = 0; b < q; ++b) elems.push_back({a, b});

    const std::pair<int64_t, int64_t> one{1, 0}, nil{0, 0};
    long count = 0;
    if (n == 1) {
        for (auto x : elems)
            if (f.mul(f.conj(x), x) == one) ++count;
        return count;
    }
    for (auto a : elems)
        for (auto b : elems)
            for (auto c : elems)
                for (auto d : elems) {
                    // g = [[a,b],[c,d]]; check g* g = I entry by entry.
                    if (f.add(f.mul(f.conj(a), a), f.mul(f.conj(c), c)) != one) continue;
                    if (f.add(f.mul(f.conj(a), b), f.mul(f.conj(c), d)) != nil) continue;
                    if (f.add(f.mul(f.conj(b), b), f.mul(f.conj(d), d)) != one) continue;
                    ++count;
                }
    return count;
}

bool binary_forms_equivalent(long p, const std::array<std::array<long, 2>, 2>& f,
                             const std::array<std::array<long, 2>, 2>& g) {
    auto at = [p](long x) { return ((x % p) + p) % p; };
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c)
                for (long d = 0; d < p; ++d) {
                    if (at(a * d - b * c) == 0) continue;
                    // h = m^T f m for m = [[a,b],[c,d]]
                    long h00 = at(a * at(a * f[0][0] + c * f[0][1])
                                  + c * at(a * f[1][0] + c * f[1][1]));
                    long h01 = at(b * at(a * f[0][0] + c * f[0][1])
                                  + d * at(a * f[1][0] + c * f[1][1]));
                    long h11 = at(b * at(b * f[0][0] + d * f[0][1])
                                  + d * at(b * f[1][0] + d * f[1][1]));
                    if (h00 == at(g[0][0]) && h01 == at(g[0][1]) && h11 == at(g[1][1]))
                        return true;
                }
    return false;
}

qf::Rational supersingular_mass(long p) {
    // F_{p^2} = F_p[t]/(t^2 - r) for the smallest nonresidue r.
    long r = 0;
    for (long x = 2; x < p; ++x) {
        long pw = 1;
        for (long i = 0; i < (p - 1) / 2; ++i) pw = pw * x % p;
        if (pw == p - 1) {
            r = x;
            break;
        }
    }
    auto mul = [p, r](std::pair<long, long> u, std::pair<long, long> v) {
        return std::pair<long, long>{((u.first * v.first + r * u.second * v.second) % p + p) % p,
                                     (u.first * v.second + u.second * v.first) % p};
    };
    auto sub = [p](std::pair<long, long> u, std::pair<long, long> v) {
        return std::pair<long, long>{((u.first - v.first) % p + p) % p,
                                     ((u.second - v.second) % p + p) % p};
    };
    auto inv = [p, r, mul](std::pair<long, long> u) {
        long nrm = ((u.first * u.first - r * u.second * u.second) % p + p) % p;
        long ninv = 1;
        for (long t = 1; t < p; ++t)
            if (nrm * t % p == 1) {
                ninv = t;
                break;
            }
        return std::pair<long, long>{u.first * ninv % p, (p - u.second) * ninv % p};
    };

    // Hasse polynomial coefficients C(m, i)^2 mod p.
    const long m = (p - 1) / 2;
    std::vector<long> coeff(m + 1);
    qf::Int binom = 1;
    for (long i = 0; i <= m; ++i) {
        qf::Int c2 = (binom * binom) % p;
        coeff[i] = c2.get_si();
        if (i < m) binom = binom * (m - i) / (i + 1);
    }

    std::vector<std::pair<long, long>> roots;
    for (long a = 0; a < p; ++a) {
        for (long b = 0; b < p; ++b) {
            std::pair<long, long> lam{a, b};
            if (lam == std::pair<long, long>{0, 0} || lam == std::pair<long, long>{1, 0})
                continue;
            std::pair<long, long> acc{0, 0}, power{1, 0};
            for (long i = 0; i <= m; ++i) {
                acc = {(acc.first + coeff[i] * power.first) % p,
                       (acc.second + coeff[i] * power.second) % p};
                power = mul(power, lam);
            }
            if (acc == std::pair<long, long>{0, 0}) roots.push_back(lam);
        }
    }
    if (static_cast<long>(roots.size()) != m) {
        throw qf::domain_error("supersingular oracle: wrong root count");
    }

    // j(lambda) = 256 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2).
    std::vector<std::pair<long, long>> js;
    for (auto lam : roots) {
        auto l2 = mul(lam, lam);
        auto num = sub({(l2.first + 1) % p, l2.second}, lam);
        auto num3 = mul(mul(num, num), num);
        auto lm1 = sub(lam, {1, 0});
        auto den = mul(l2, mul(lm1, lm1));
        auto j = mul({256 % p, 0}, mul(num3, inv(den)));
        bool seen = false;
        for (auto other : js) seen = seen || other == j;
        if (!seen) js.push_back(j);
    }

    qf::Rational mass = 0;
    for (auto j : js) {
        long weight = 2;
        if (j == std::pair<long, long>{0, 0}) weight = 6;
        if (j == std::pair<long, long>{1728 % p, 0}) weight = 4;
        mass += qf::Rational(qf::Int(1), qf::Int(weight));
    }
    mass.canonicalize();
    return mass;
}

long psi_p1_count(long n) {
    if (n < 1) throw qf::domain_error("level must be positive");
    long primitive = 0;
    for (long c = 0; c < n; ++c)
        for (long d = 0; d < n; ++d)
            if (std::gcd(std::gcd(c, d), n) == 1) ++primitive;
    long units = 0;
    for (long u = 0; u < n; ++u)
        if (std::gcd(u, n) == 1) ++units;
    return primitive / units;
}

} // namespace oracle
