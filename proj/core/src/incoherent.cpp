#include "qf/incoherent.hpp"

#include "qf/errors.hpp"
#include "qf/hilbert.hpp"
#include "qf/numeric.hpp"

#include <utility>

namespace qf {

namespace {

// Flip the membership of v in the set.
PlaceSet toggled(PlaceSet places, const Place& v) {
    auto it = places.find(v);
    if (it != places.end()) {
        places.erase(it);
    } else {
        places.insert(v);
    }
    return places;
}

void require_valid(const IncoherentOrthData& data) {
    ValidationReport report = validate_orth(data);
    if (!report.ok) throw domain_error("invalid incoherent data: " + report.violation);
}

void require_valid(const IncoherentHermData& data) {
    ValidationReport report = validate_herm(data);
    if (!report.ok) throw domain_error("invalid incoherent data: " + report.violation);
}

// Finite places where a sign computation involving the given classes can be
// nontrivial: 2, the places already carrying -1, and the supports of the
// classes.
PlaceSet finite_support(const IncoherentOrthData& data, const std::vector<Rational>& classes) {
    PlaceSet support = data.neg_places;
    support.insert(Place::finite(2));
    for (const Place& v : square_class_support(data.det)) support.insert(v);
    for (const Rational& c : classes) {
        SquareClass cls = canonical_square_class(c);
        for (const Place& v : square_class_support(cls)) support.insert(v);
    }
    return support;
}

GlobalQuadInvariants neighbor_invariants(const IncoherentOrthData& data, const Place& v) {
    if (v.is_infinite()) {
        PlaceSet neg = data.neg_places;
        neg.insert(v);
        return GlobalQuadInvariants(data.dim, data.det, std::move(neg), {data.dim - 2, 2});
    }
    return GlobalQuadInvariants(data.dim, data.det, toggled(data.neg_places, v), {data.dim, 0});
}

HermGlobalInvariants neighbor_herm_invariants(const IncoherentHermData& data, const Place& v) {
    if (v.is_infinite()) {
        PlaceSet neg = data.neg_places;
        neg.insert(v);
        return HermGlobalInvariants(data.field, data.dim, std::move(neg), {data.dim - 1, 1});
    }
    if (place_splitting(data.field, v) == Splitting::split) {
        throw domain_error("neighbor place must be non-split in the field");
    }
    return HermGlobalInvariants(data.field, data.dim, toggled(data.neg_places, v),
                                {data.dim, 0});
}

} // namespace

ValidationReport validate_orth(const IncoherentOrthData& data) {
    if (data.dim < 3) return {false, "dimension must be at least 3"};
    if (data.det.rep() <= 0) return {false, "determinant class must be positive"};
    for (const Place& v : data.neg_places) {
        if (v.is_infinite()) return {false, "negative places must be finite"};
    }
    if (data.neg_places.size() % 2 == 0) {
        return {false, "number of negative places must be odd"};
    }
    return {true, ""};
}

ValidationReport validate_herm(const IncoherentHermData& data) {
    if (data.dim < 1) return {false, "dimension must be at least 1"};
    for (const Place& v : data.neg_places) {
        if (v.is_infinite()) return {false, "negative places must be finite"};
        if (place_splitting(data.field, v) == Splitting::split) {
            return {false, "negative places must be non-split in the field"};
        }
    }
    if (data.neg_places.size() % 2 == 0) {
        return {false, "number of negative places must be odd"};
    }
    return {true, ""};
}

int incoherent_epsilon(const IncoherentOrthData& data, const Place& v) {
    if (v.is_infinite()) return 1;
    return data.neg_places.count(v) ? -1 : 1;
}

int incoherent_herm_class(const IncoherentHermData& data, const Place& v) {
    if (v.is_infinite()) return 1;
    return data.neg_places.count(v) ? -1 : 1;
}

OrthNeighbor neighbor_orth(const IncoherentOrthData& data, const Place& v) {
    require_valid(data);
    GlobalQuadInvariants inv = neighbor_invariants(data, v);
    QuadSpace space = realize_global(inv);
    return {inv, std::move(space)};
}

HermNeighbor neighbor_herm(const IncoherentHermData& data, const Place& v) {
    require_valid(data);
    HermGlobalInvariants inv = neighbor_herm_invariants(data, v);
    HermSpace space = realize_herm(inv);
    return {inv, std::move(space)};
}

IncoherentOrthData restrict_orth(const IncoherentOrthData& data, const Rational& a) {
    require_valid(data);
    if (a <= 0) throw domain_error("restriction class must be positive");

    SquareClass aclass = canonical_square_class(a);
    SquareClass new_det = data.det * aclass;

    if (data.dim == 3) {
        // A codimension-one restriction needs the class to be represented by
        // every local space of the family; report that failure before the
        // dimension floor.
        for (const Place& v : finite_support(data, {a})) {
            LocalQuadInvariants local{data.dim, data.det, incoherent_epsilon(data, v),
                                      std::nullopt};
            if (!local_represents(local, a, v)) {
                throw domain_error("family does not locally represent the class at "
                                   + v.to_string());
            }
        }
        throw domain_error("restriction would drop the dimension below 3");
    }

    PlaceSet new_neg;
    Rational det_u(new_det.rep());
    for (const Place& v : finite_support(data, {a})) {
        int eps = incoherent_epsilon(data, v) * hilbert_symbol(det_u, a, v);
        if (eps == -1) new_neg.insert(v);
    }

    IncoherentOrthData result{data.dim - 1, new_det, std::move(new_neg)};
    ValidationReport report = validate_orth(result);
    if (!report.ok) {
        throw domain_error("restriction failed post-validation: " + report.violation);
    }
    return result;
}

IncoherentHermData restrict_herm(const IncoherentHermData& data, const Rational& a) {
    require_valid(data);
    if (a <= 0) throw domain_error("restriction class must be positive");
    if (data.dim == 1) {
        throw domain_error("restriction would drop the dimension below 1");
    }

    Rational disc(data.field.disc());
    PlaceSet support = data.neg_places;
    support.insert(Place::finite(2));
    for (const Place& v : square_class_support(canonical_square_class(disc))) {
        support.insert(v);
    }
    for (const Place& v : square_class_support(canonical_square_class(a))) {
        support.insert(v);
    }

    PlaceSet new_neg;
    for (const Place& v : support) {
        int cls = incoherent_herm_class(data, v) * hilbert_symbol(a, disc, v);
        if (cls == -1) new_neg.insert(v);
    }

    IncoherentHermData result{data.field, data.dim - 1, std::move(new_neg)};
    ValidationReport report = validate_herm(result);
    if (!report.ok) {
        throw domain_error("restriction failed post-validation: " + report.violation);
    }
    return result;
}

SquareClass complement_class(const IncoherentOrthData& data,
                             const IncoherentOrthData& restricted) {
    return canonical_square_class(Int(data.det.rep() * restricted.det.rep()));
}

bool check_neighbor_sum(const IncoherentOrthData& data, const Place& v, const Rational& a) {
    IncoherentOrthData restricted = restrict_orth(data, a);
    GlobalQuadInvariants lhs =
        direct_sum_invariants(neighbor_invariants(restricted, v), a);
    GlobalQuadInvariants rhs = neighbor_invariants(data, v);
    return lhs == rhs;
}

} // namespace qf
