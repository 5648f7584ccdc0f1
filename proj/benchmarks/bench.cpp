// Microbenchmarks for the hot paths of the library: symbol evaluation,
// realization, lattice construction, fiber parametrization, and masses.

#include <benchmark/benchmark.h>

#include "qf/fiber.hpp"
#include "qf/hermitian.hpp"
#include "qf/hilbert.hpp"
#include "qf/incoherent.hpp"
#include "qf/lattice.hpp"
#include "qf/mass.hpp"
#include "qf/quadratic.hpp"
#include "qf/square_class.hpp"

using namespace qf;

namespace {

void BM_hilbert_symbol(benchmark::State& state) {
    Rational a(3 * 5 * 7 * 11), b(-2 * 13 * 17);
    for (auto _ : state) {
        int product = 1;
        for (const Place& v : symbol_support(a, b)) {
            product *= hilbert_symbol(a, b, v);
        }
        benchmark::DoNotOptimize(product);
    }
}
BENCHMARK(BM_hilbert_symbol);

void BM_realize_global(benchmark::State& state) {
    GlobalQuadInvariants inv(5, canonical_square_class(Int(2 * 3 * 7)),
                             {Place::finite(3), Place::finite(7)}, {5, 0});
    for (auto _ : state) {
        QuadSpace space = realize_global(inv);
        benchmark::DoNotOptimize(space.coeffs());
    }
}
BENCHMARK(BM_realize_global);

void BM_neighbor_orth(benchmark::State& state) {
    IncoherentOrthData data{5, canonical_square_class(Int(6)),
                            {Place::finite(2), Place::finite(5), Place::finite(11)}};
    for (auto _ : state) {
        OrthNeighbor nb = neighbor_orth(data, Place::infinity());
        benchmark::DoNotOptimize(nb.space.coeffs());
    }
}
BENCHMARK(BM_neighbor_orth);

void BM_maximal_lattice_disc(benchmark::State& state) {
    for (auto _ : state) {
        OrthLatticeZp L = maximal_lattice(6, canonical_square_class(Int(1)), -1, Int(13));
        DiscriminantGroup G = dual_quotient(L);
        benchmark::DoNotOptimize(G.induced);
    }
}
BENCHMARK(BM_maximal_lattice_disc);

void BM_fiber_point_orth(benchmark::State& state) {
    BaseDecomposition base = base_point_orth(5, canonical_square_class(Int(1)), -1, Int(5));
    std::vector<std::pair<Rational, Rational>> coords = {
        {Rational(5), Rational(10)}, {Rational(25, 2), Rational(-5)},
        {Rational(0), Rational(5, 7)}};
    FiberParameter t = fiber_parameter_from_rationals(base, coords, 6);
    for (auto _ : state) {
        FiberPoint pt = fiber_point(base, t);
        benchmark::DoNotOptimize(pt.Mperp_gram);
    }
}
BENCHMARK(BM_fiber_point_orth);

void BM_fiber_point_herm(benchmark::State& state) {
    ImagQuadField gauss((Int(1)));
    BaseDecomposition base = base_point_herm(gauss, 3, -1, Int(7));
    std::vector<std::pair<Rational, Rational>> coords = {{Rational(7), Rational(14)},
                                                         {Rational(-7, 2), Rational(49)}};
    FiberParameter t = fiber_parameter_from_rationals(base, coords, 6);
    for (auto _ : state) {
        FiberPoint pt = fiber_point_herm(base, t);
        benchmark::DoNotOptimize(pt.Mperp_gram);
    }
}
BENCHMARK(BM_fiber_point_herm);

void BM_mass_specialization(benchmark::State& state) {
    MassFamily fam = make_mass_family(MassKind::odd_orth, 5, Int(13));
    for (auto _ : state) {
        Rational mass = mass_from_chi(fam, Rational(-1, 12));
        benchmark::DoNotOptimize(mass);
    }
}
BENCHMARK(BM_mass_specialization);

void BM_eichler_mass(benchmark::State& state) {
    for (auto _ : state) {
        Rational mass = eichler_mass(Int(11), Int(6));
        benchmark::DoNotOptimize(mass);
    }
}
BENCHMARK(BM_eichler_mass);

} // namespace

BENCHMARK_MAIN();
