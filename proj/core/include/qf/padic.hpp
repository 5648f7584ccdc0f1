#pragma once

#include "qf/numeric.hpp"

#include <optional>
#include <string>

namespace qf {

// Working precision defaults: 8 significant p-adic digits by default, and no
// operation is allowed to hand a consumer fewer than 2.
inline constexpr long kDefaultPadicPrecision = 8;
inline constexpr long kMinPadicPrecision = 2;

// An element of Q_p at capped relative precision: value = unit * p^val known
// modulo p^(val+prec), with unit a residue coprime to p and prec >= 1
// significant digits.  Zeros remember how far they are known to vanish:
// a computed cancellation yields "= 0 mod p^N" rather than an exact zero, so
// results never claim more digits than their inputs justify.
class PadicNum {
public:
    PadicNum(const Int& p, long val, const Int& unit, long prec);

    static PadicNum zero(const Int& p);                  // exact zero
    static PadicNum zero_mod(const Int& p, long bound);  // known = 0 mod p^bound
    static PadicNum from_rational(const Rational& r, const Int& p,
                                  long prec = kDefaultPadicPrecision);
    static PadicNum from_integer(const Int& n, const Int& p,
                                 long prec = kDefaultPadicPrecision);

    const Int& prime() const { return p_; }
    bool is_zero() const { return zero_; }
    bool is_exact_zero() const;

    // Valuation of a nonzero element; throws on zeros.
    long val() const;
    // Unit part of a nonzero element, as a residue mod p^prec.
    const Int& unit() const;
    // Significant digits of a nonzero element.
    long prec() const;

    // Exponent N with value known to satisfy value = 0 mod p^N... for zeros;
    // for nonzero elements this is val + prec (the absolute precision).
    long known_exponent() const;

    // The value reduced mod p^k; requires k <= known_exponent().
    Int residue(long k) const;

    PadicNum operator-() const;
    PadicNum operator+(const PadicNum& other) const;
    PadicNum operator-(const PadicNum& other) const;
    PadicNum operator*(const PadicNum& other) const;
    PadicNum operator/(const PadicNum& other) const;
    PadicNum inverse() const;

    // Multiply by p^k (k may be negative; zeros shift their bound).
    PadicNum shift(long k) const;

    std::string to_string() const;

private:
    PadicNum() = default;
    static PadicNum make_zero(const Int& p, long bound, bool exact);

    Int p_;
    bool zero_ = false;
    bool exact_zero_ = false;
    long val_ = 0;   // nonzero: valuation; zero: unused
    Int unit_ = 0;   // nonzero: unit mod p^prec_
    long prec_ = 0;  // nonzero: significant digits; zero: vanishing bound
};

// An element x + y*sqrt(d) of the unramified quadratic extension of Q_p
// (p odd), with d a unit nonresidue mod p; components at capped precision.
class QuadExtNum {
public:
    QuadExtNum(PadicNum x, PadicNum y, const Int& d);

    static QuadExtNum from_rationals(const Rational& x, const Rational& y,
                                     const Int& d, const Int& p,
                                     long prec = kDefaultPadicPrecision);

    const PadicNum& x() const { return x_; }
    const PadicNum& y() const { return y_; }
    const Int& d() const { return d_; }
    const Int& prime() const { return x_.prime(); }

    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }

    QuadExtNum operator-() const;
    QuadExtNum operator+(const QuadExtNum& other) const;
    QuadExtNum operator-(const QuadExtNum& other) const;
    QuadExtNum operator*(const QuadExtNum& other) const;

    QuadExtNum conj() const;            // x - y*sqrt(d)
    PadicNum norm() const;              // x^2 - d*y^2
    PadicNum trace() const;             // 2x

    // Largest exponent k with the element known to lie in p^k * A (valuation
    // for nonzero elements, vanishing bound for zeros).
    long valuation_lower_bound() const;

    std::string to_string() const;

private:
    PadicNum x_, y_;
    Int d_;
};

// Square root by Hensel lifting at an odd prime: returns the root whose unit
// residue mod p lies in [1, (p-1)/2], preserving the input's significant
// digits; std::nullopt when the input is not a square (nonresidue unit or odd
// valuation).  Exact zero maps to exact zero.  Throws qf::precision_error on
// inputs with fewer than 2 significant digits or zeros known only mod p^N,
// and qf::domain_error at p = 2.
std::optional<PadicNum> hensel_sqrt(const PadicNum& c);

} // namespace qf
