#include "qf/json_io.hpp"

#include "qf/errors.hpp"

#include "json.hpp"

#include <utility>
#include <vector>

namespace qf {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

const json& require_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (!j.is_object() || it == j.end()) {
        throw parse_error(std::string("missing field: ") + key);
    }
    return *it;
}

long get_long(const json& j, const char* key) {
    const json& f = require_field(j, key);
    if (!f.is_number_integer()) {
        throw parse_error(std::string("field must be an integer: ") + key);
    }
    return f.get<long>();
}

int get_sign(const json& j, const char* key) {
    long v = get_long(j, key);
    if (v != 1 && v != -1) {
        throw parse_error(std::string("field must be +1 or -1: ") + key);
    }
    return static_cast<int>(v);
}

std::string get_string(const json& j, const char* key) {
    const json& f = require_field(j, key);
    if (!f.is_string()) {
        throw parse_error(std::string("field must be a string: ") + key);
    }
    return f.get<std::string>();
}

Rational get_rational(const json& j, const char* key) {
    return parse_rational(get_string(j, key));
}

Int get_integer(const json& j, const char* key) {
    return parse_integer(get_string(j, key));
}

json places_to_json(const PlaceSet& places) {
    json out = json::array();
    for (const Place& v : places) out.push_back(v.to_string());
    return out;
}

PlaceSet get_places(const json& j, const char* key) {
    const json& f = require_field(j, key);
    if (!f.is_array()) throw parse_error(std::string("field must be an array: ") + key);
    PlaceSet out;
    for (const json& entry : f) {
        if (!entry.is_string()) throw parse_error("places must be strings");
        out.insert(Place::parse(entry.get<std::string>()));
    }
    return out;
}

json coeffs_to_json(const std::vector<Rational>& coeffs) {
    json out = json::array();
    for (const Rational& c : coeffs) out.push_back(rational_to_string(c));
    return out;
}

std::vector<Rational> get_coeffs(const json& j, const char* key) {
    const json& f = require_field(j, key);
    if (!f.is_array()) throw parse_error(std::string("field must be an array: ") + key);
    std::vector<Rational> out;
    for (const json& entry : f) {
        if (!entry.is_string()) throw parse_error("coefficients must be rational strings");
        out.push_back(parse_rational(entry.get<std::string>()));
    }
    return out;
}

std::pair<long, long> get_signature(const json& j, const char* key) {
    const json& f = require_field(j, key);
    if (!f.is_array() || f.size() != 2 || !f[0].is_number_integer()
        || !f[1].is_number_integer()) {
        throw parse_error("signature must be a pair of integers");
    }
    return {f[0].get<long>(), f[1].get<long>()};
}

json signature_to_json(std::pair<long, long> sig) {
    return json::array({sig.first, sig.second});
}

json matrix_to_json(const RationalMatrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const Rational& entry : row) r.push_back(rational_to_string(entry));
        out.push_back(std::move(r));
    }
    return out;
}

RationalMatrix matrix_from_value(const json& f) {
    if (!f.is_array()) throw parse_error("Gram matrix must be an array of rows");
    RationalMatrix out;
    for (const json& row : f) {
        if (!row.is_array()) throw parse_error("Gram rows must be arrays");
        std::vector<Rational> r;
        for (const json& entry : row) {
            if (!entry.is_string()) throw parse_error("Gram entries must be rational strings");
            r.push_back(parse_rational(entry.get<std::string>()));
        }
        out.push_back(std::move(r));
    }
    return out;
}

json padic_to_value(const PadicNum& x) {
    json out;
    out["p"] = x.prime().get_str();
    if (x.is_zero()) {
        if (x.is_exact_zero()) {
            out["zero"] = "exact";
        } else {
            out["zero_mod"] = x.known_exponent();
        }
    } else {
        out["val"] = x.val();
        out["unit"] = x.unit().get_str();
        out["prec"] = x.prec();
    }
    return out;
}

json quadext_to_value(const QuadExtNum& x) {
    json out;
    out["d"] = x.d().get_str();
    out["x"] = padic_to_value(x.x());
    out["y"] = padic_to_value(x.y());
    return out;
}

long field_modulus_to_long(const Int& m) {
    if (!m.fits_slong_p()) throw domain_error("field modulus too large to serialize");
    return m.get_si();
}

} // namespace

std::string quad_space_to_json(const QuadSpace& space) {
    json out;
    out["coeffs"] = coeffs_to_json(space.coeffs());
    return out.dump();
}

QuadSpace quad_space_from_json(const std::string& text) {
    json j = parse_text(text);
    return QuadSpace(get_coeffs(j, "coeffs"));
}

std::string local_invariants_to_json(const LocalQuadInvariants& inv) {
    json out;
    out["dim"] = inv.dim;
    out["det"] = inv.det.to_string();
    out["hasse"] = inv.hasse;
    if (inv.signature.has_value()) out["signature"] = signature_to_json(*inv.signature);
    return out.dump();
}

std::string global_invariants_to_json(const GlobalQuadInvariants& inv) {
    json out;
    out["dim"] = inv.dim();
    out["det"] = inv.det().to_string();
    out["neg_places"] = places_to_json(inv.neg_places());
    out["signature"] = signature_to_json(inv.signature());
    return out.dump();
}

GlobalQuadInvariants global_invariants_from_json(const std::string& text) {
    json j = parse_text(text);
    return GlobalQuadInvariants(get_long(j, "dim"),
                                canonical_square_class(get_integer(j, "det")),
                                get_places(j, "neg_places"), get_signature(j, "signature"));
}

std::string herm_space_to_json(const HermSpace& space) {
    json out;
    out["m"] = field_modulus_to_long(space.field().m());
    out["coeffs"] = coeffs_to_json(space.coeffs());
    return out.dump();
}

HermSpace herm_space_from_json(const std::string& text) {
    json j = parse_text(text);
    ImagQuadField field(Int(get_long(j, "m")));
    return HermSpace(field, get_coeffs(j, "coeffs"));
}

std::string herm_invariants_to_json(const HermGlobalInvariants& inv) {
    json out;
    out["m"] = field_modulus_to_long(inv.field().m());
    out["dim"] = inv.dim();
    out["neg_places"] = places_to_json(inv.neg_places());
    out["signature"] = signature_to_json(inv.signature());
    return out.dump();
}

HermGlobalInvariants herm_invariants_from_json(const std::string& text) {
    json j = parse_text(text);
    ImagQuadField field(Int(get_long(j, "m")));
    return HermGlobalInvariants(field, get_long(j, "dim"), get_places(j, "neg_places"),
                                get_signature(j, "signature"));
}

std::string incoherent_orth_to_json(const IncoherentOrthData& data) {
    json out;
    out["dim"] = data.dim;
    out["det"] = data.det.to_string();
    out["neg_places"] = places_to_json(data.neg_places);
    return out.dump();
}

IncoherentOrthData incoherent_orth_from_json(const std::string& text) {
    json j = parse_text(text);
    return IncoherentOrthData{get_long(j, "dim"),
                              canonical_square_class(get_integer(j, "det")),
                              get_places(j, "neg_places")};
}

std::string incoherent_herm_to_json(const IncoherentHermData& data) {
    json out;
    out["m"] = field_modulus_to_long(data.field.m());
    out["dim"] = data.dim;
    out["neg_places"] = places_to_json(data.neg_places);
    return out.dump();
}

IncoherentHermData incoherent_herm_from_json(const std::string& text) {
    json j = parse_text(text);
    ImagQuadField field(Int(get_long(j, "m")));
    return IncoherentHermData{std::move(field), get_long(j, "dim"),
                              get_places(j, "neg_places")};
}

std::string gram_to_json(const RationalMatrix& gram) { return matrix_to_json(gram).dump(); }

RationalMatrix gram_from_json(const std::string& text) {
    return matrix_from_value(parse_text(text));
}

std::string orth_lattice_to_json(const OrthLatticeZp& lattice) {
    json out;
    out["p"] = lattice.p().get_str();
    out["gram"] = matrix_to_json(lattice.gram());
    return out.dump();
}

OrthLatticeZp orth_lattice_from_json(const std::string& text) {
    json j = parse_text(text);
    return OrthLatticeZp(get_integer(j, "p"), matrix_from_value(require_field(j, "gram")));
}

std::string disc_group_to_json(const DiscriminantGroup& group) {
    json out;
    out["p"] = group.p.get_str();
    json divisors = json::array();
    for (const Int& d : group.divisors) divisors.push_back(d.get_str());
    out["divisors"] = std::move(divisors);
    json induced = json::array();
    for (const auto& row : group.induced) {
        json r = json::array();
        for (const Int& entry : row) r.push_back(entry.get_str());
        induced.push_back(std::move(r));
    }
    out["induced"] = std::move(induced);
    return out.dump();
}

std::string herm_lattice_to_json(const HermLatticeZp& lattice) {
    json out;
    out["m"] = field_modulus_to_long(lattice.field().m());
    out["p"] = lattice.p().get_str();
    json gram = json::array();
    for (const auto& row : lattice.gram()) {
        json r = json::array();
        for (const KNum& entry : row) {
            r.push_back(json::array(
                {rational_to_string(entry.x), rational_to_string(entry.y)}));
        }
        gram.push_back(std::move(r));
    }
    out["gram"] = std::move(gram);
    return out.dump();
}

HermLatticeZp herm_lattice_from_json(const std::string& text) {
    json j = parse_text(text);
    ImagQuadField field(Int(get_long(j, "m")));
    const json& g = require_field(j, "gram");
    if (!g.is_array()) throw parse_error("Gram matrix must be an array of rows");
    std::vector<std::vector<KNum>> gram;
    for (const json& row : g) {
        if (!row.is_array()) throw parse_error("Gram rows must be arrays");
        std::vector<KNum> r;
        for (const json& entry : row) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string()
                || !entry[1].is_string()) {
                throw parse_error("Hermitian Gram entries must be [x, y] rational strings");
            }
            r.push_back(KNum{parse_rational(entry[0].get<std::string>()),
                             parse_rational(entry[1].get<std::string>())});
        }
        gram.push_back(std::move(r));
    }
    return HermLatticeZp(std::move(field), get_integer(j, "p"), std::move(gram));
}

std::string herm_disc_group_to_json(const HermDiscriminantGroup& group) {
    json out;
    out["p"] = group.p.get_str();
    json lengths = json::array();
    for (const Int& l : group.lengths) lengths.push_back(l.get_si());
    out["lengths"] = std::move(lengths);
    out["order"] = group.order.get_str();
    return out.dump();
}

std::string padic_to_json(const PadicNum& x) { return padic_to_value(x).dump(); }

std::string quadext_to_json(const QuadExtNum& x) { return quadext_to_value(x).dump(); }

std::string base_decomposition_to_json(const BaseDecomposition& base) {
    json out;
    out["kind"] = (base.kind == FiberKind::orth) ? "orth" : "herm";
    out["p"] = base.p.get_str();
    out["n"] = base.n;
    out["m"] = field_modulus_to_long(base.field_m);
    out["ext_d"] = base.ext_d.get_str();
    out["orientation"] = base.orientation;
    out["W_gram"] = matrix_to_json(base.W_gram);
    out["L_gram"] = matrix_to_json(base.L_gram);
    return out.dump();
}

std::string fiber_point_to_json(const FiberPoint& point) {
    json out;
    out["precision"] = point.precision;
    json mg = json::array();
    for (const auto& row : point.M_gram) {
        json r = json::array();
        for (const PadicNum& entry : row) r.push_back(padic_to_value(entry));
        mg.push_back(std::move(r));
    }
    out["M_gram"] = std::move(mg);
    json pg = json::array();
    for (const auto& row : point.Mperp_gram) {
        json r = json::array();
        for (const QuadExtNum& entry : row) r.push_back(quadext_to_value(entry));
        pg.push_back(std::move(r));
    }
    out["Mperp_gram"] = std::move(pg);

    auto basis_to_json = [](const std::vector<FiberBasisVector>& basis) {
        json arr = json::array();
        for (const FiberBasisVector& vec : basis) {
            json v;
            v["e"] = quadext_to_value(vec.e_coeff);
            json l = json::array();
            for (const QuadExtNum& c : vec.l_coeffs) l.push_back(quadext_to_value(c));
            v["l"] = std::move(l);
            arr.push_back(std::move(v));
        }
        return arr;
    };
    out["m_basis"] = basis_to_json(point.m_basis);
    out["mperp_basis"] = basis_to_json(point.mperp_basis);
    return out.dump();
}

} // namespace qf
