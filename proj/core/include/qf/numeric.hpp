#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace qf {

using Int = mpz_class;
using Rational = mpq_class;

// Parse a rational from "n" or "n/d" (optional leading '-').  Throws
// qf::parse_error on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical textual form "n/d", with "/d" omitted when the denominator is 1.
std::string rational_to_string(const Rational& r);

Int parse_integer(const std::string& text);

bool is_prime(const Int& n);

// Trial-division factorization of |n| into prime -> exponent.  Intended for
// desk-scale operands (symbol supports, square classes, search candidates);
// throws qf::domain_error if a composite cofactor survives the divisor bound.
std::map<Int, unsigned> factor(const Int& n);

// p-adic valuation; n must be nonzero.
long valuation(const Int& n, const Int& p);
long valuation(const Rational& r, const Int& p);

// r with the p-power factored out: r = p^valuation * unit_part.
Rational unit_part(const Rational& r, const Int& p);

// Residue of a p-integral rational modulo p^k (numerator times inverse
// denominator); throws if the denominator is divisible by p.
Int residue_mod(const Rational& r, const Int& p, unsigned k = 1);

// Legendre symbol (a|p) in {-1,0,+1} for odd prime p.
int legendre(const Int& a, const Int& p);

// Legendre symbol of the residue of a p-adic unit rational.
int legendre(const Rational& a, const Int& p);

// Smallest positive quadratic nonresidue modulo the odd prime p.
Int smallest_nonresidue(const Int& p);

// A square root of a modulo the odd prime p (a must be a residue); Tonelli-
// Shanks.  Returns r with r^2 = a (mod p) and 1 <= r <= p-1 when a != 0.
Int sqrt_mod_prime(const Int& a, const Int& p);

// True if x is a square in the completion at the odd prime p (even valuation
// and residue a square), at 2 (even valuation and unit ~ 1 mod 8), or in R.
bool is_local_square(const Rational& x, const Int& p);
bool is_real_square(const Rational& x);

Int pow_int(const Int& base, unsigned long exp);

} // namespace qf
