#pragma once

#include "qf/numeric.hpp"

#include <string>

namespace qf {

// The families carrying a mass identity: odd orthogonal groups (dim 2n+1),
// even orthogonal groups with split (+) or non-split (-) discriminant
// (dim 2n), and unitary groups (dim n).
enum class MassKind { odd_orth, even_orth_plus, even_orth_minus, hermitian };

std::string mass_kind_to_string(MassKind kind);
MassKind mass_kind_from_string(const std::string& text);

// A family instance: rank parameter n, residue size q (a prime power), and
// the dimension of the attached variety S (dim V - 2 orthogonal, dim V - 1
// Hermitian) which the factory derives from the kind.
struct MassFamily {
    MassKind kind;
    long n;
    Int q;
    long dim_s;
};

MassFamily make_mass_family(MassKind kind, long n, const Int& q);

// Orders of the finite groups of Lie type entering the mass display:
// |SO_{2n+1}(F_q)| = q^(n^2) prod_{i=1..n} (q^(2i)-1)
// |SO^eps_{2n}(F_q)| = q^(n(n-1)) (q^n - eps) prod_{i=1..n-1} (q^(2i)-1)
// |U_n(F_q)| = q^(n(n-1)/2) prod_{i=1..n} (q^i - (-1)^i)
// Rank 0 groups are trivial.
Int finite_group_order(MassKind kind, long rank, const Int& q);

// |W_G| / |W_H| for H the centralizer of the distinguished plane: 2n for
// odd orthogonal dim 2n+1, 2n for even orthogonal dim 2n, n for unitary.
long weyl_ratio(MassKind kind, long rank);

// The mass display solved for the mass:
//   Mass = #G0 / (#N0 * (-q)^dimS * (W_G/W_H)) * chi
// with N0 = (q+1) x (the rank-lowered group of the same type: SO_{2n-1},
// SO^{-eps}_{2n-2}, or U_{n-1}).
Rational mass_from_chi(const MassFamily& family, const Rational& chi);

// 1 - q + q^2 - ... + (-q)^(N-1) = (1 - q^N)/(1 + q) for even N >= 2.
Rational alternating_sum(const Int& q, long N);

// Classical supersingular mass (p-1)/24 * psi(N) for p prime not dividing
// the level N, psi(N) = N prod_{l | N} (1 + 1/l); and the orbifold Euler
// characteristic -psi(N)/12 of the corresponding modular curve.
Rational eichler_mass(const Int& p, const Int& N);
Rational chi_modular(const Int& N);

// The point-count inequality 2 * count >= (1 - q)(2 - 2g), exactly.
bool dv_check(const Int& q, const Int& point_count, const Int& genus);

} // namespace qf
