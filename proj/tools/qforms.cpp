// qforms: command-line front end for the quadratic/Hermitian form library.
//
// One verb per invocation, JSON in / JSON out, deterministic output.
// Exit codes: 0 success, 1 domain or precision error (with {"error":...} on
// stdout), 2 malformed input or usage error.

#include "qf/errors.hpp"
#include "qf/fiber.hpp"
#include "qf/hermitian.hpp"
#include "qf/hilbert.hpp"
#include "qf/incoherent.hpp"
#include "qf/json_io.hpp"
#include "qf/lattice.hpp"
#include "qf/mass.hpp"
#include "qf/numeric.hpp"
#include "qf/place.hpp"
#include "qf/quadratic.hpp"
#include "qf/square_class.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace qf;

// Payload arguments accept inline JSON or @path indirection.
std::string load_payload(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw parse_error("cannot read payload file: " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_payload(const std::string& arg) {
    try {
        return json::parse(load_payload(arg));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

// Re-parse a serialized core value so it can be embedded in a larger object.
json embed(const std::string& serialized) { return json::parse(serialized); }

void emit(std::ostream& out, const json& value) { out << value.dump() << "\n"; }

// Places at which two rational diagonal spaces can possibly disagree: the
// real place, 2, and every prime meeting a coefficient.
PlaceSet joint_support(const QuadSpace& a, const QuadSpace& b) {
    PlaceSet support{Place::infinity(), Place::finite(2)};
    for (const QuadSpace* s : {&a, &b}) {
        for (const Rational& c : s->coeffs()) {
            for (const Place& v : square_class_support(canonical_square_class(c))) {
                support.insert(v);
            }
        }
    }
    return support;
}

struct Options {
    long precision = kDefaultFiberPrecision;

    // symbol
    std::string sym_a, sym_b, sym_v;
    // classify / isomorphic / exists / realize
    std::string space_arg, herm_arg, at_arg;
    std::string left_arg, right_arg, kind_arg = "orth";
    std::string invariants_arg;
    // incoherent verbs
    std::string data_arg, restrict_class;
    // lattices
    long lat_dim = 0;
    std::string lat_det, lat_p;
    int lat_eps = 1, lat_class = 1;
    std::optional<long> lat_m;
    std::string lattice_arg;
    // fiber
    std::string fiber_t = "[]";
    int fiber_orientation = 1;
    // mass
    std::string mass_family, mass_q, mass_chi, mass_p, mass_level;
    long mass_n = 1;
    // dv-check
    std::string dv_q, dv_points, dv_genus;
};

void register_verbs(CLI::App& app, Options& opt);

int run_single(const std::vector<std::string>& args, std::ostream& out, bool interactive);

int handle_symbol(const Options& opt, std::ostream& out) {
    Rational a = parse_rational(opt.sym_a);
    Rational b = parse_rational(opt.sym_b);
    Place v = Place::parse(opt.sym_v);
    emit(out, json{{"symbol", hilbert_symbol(a, b, v)}});
    return 0;
}

int handle_classify(const Options& opt, std::ostream& out) {
    const bool has_orth = !opt.space_arg.empty();
    const bool has_herm = !opt.herm_arg.empty();
    if (has_orth == has_herm) {
        throw parse_error("classify requires exactly one of --space or --herm");
    }
    if (has_orth) {
        QuadSpace space = quad_space_from_json(load_payload(opt.space_arg));
        if (opt.at_arg.empty()) {
            emit(out, embed(global_invariants_to_json(global_invariants(space))));
        } else {
            Place v = Place::parse(opt.at_arg);
            emit(out, embed(local_invariants_to_json(local_invariants(space, v))));
        }
        return 0;
    }
    HermSpace space = herm_space_from_json(load_payload(opt.herm_arg));
    if (opt.at_arg.empty()) {
        emit(out, embed(herm_invariants_to_json(herm_global_invariants(space))));
    } else {
        Place v = Place::parse(opt.at_arg);
        emit(out, json{{"class", herm_local_class(space, v)}});
    }
    return 0;
}

int handle_isomorphic(const Options& opt, std::ostream& out) {
    bool iso = false;
    if (opt.kind_arg == "orth") {
        QuadSpace left = quad_space_from_json(load_payload(opt.left_arg));
        QuadSpace right = quad_space_from_json(load_payload(opt.right_arg));
        if (!opt.at_arg.empty()) {
            iso = locally_isomorphic(left, right, Place::parse(opt.at_arg));
        } else if (left.dim() == right.dim()) {
            iso = true;
            for (const Place& v : joint_support(left, right)) {
                if (!locally_isomorphic(left, right, v)) {
                    iso = false;
                    break;
                }
            }
        }
    } else if (opt.kind_arg == "herm") {
        HermSpace left = herm_space_from_json(load_payload(opt.left_arg));
        HermSpace right = herm_space_from_json(load_payload(opt.right_arg));
        if (!(left.field() == right.field())) {
            throw domain_error("spaces live over different fields");
        }
        if (!opt.at_arg.empty()) {
            Place v = Place::parse(opt.at_arg);
            if (v.is_infinite()) {
                iso = herm_global_invariants(left).signature()
                   == herm_global_invariants(right).signature();
            } else {
                iso = left.dim() == right.dim()
                   && herm_local_class(left, v) == herm_local_class(right, v);
            }
        } else {
            iso = herm_global_invariants(left) == herm_global_invariants(right);
        }
    } else {
        throw parse_error("--kind must be orth or herm");
    }
    emit(out, json{{"isomorphic", iso}});
    return 0;
}

int handle_exists(const Options& opt, std::ostream& out) {
    bool exists = false;
    if (opt.kind_arg == "orth") {
        exists = global_exists(global_invariants_from_json(load_payload(opt.invariants_arg)));
    } else if (opt.kind_arg == "herm") {
        exists = herm_global_exists(herm_invariants_from_json(load_payload(opt.invariants_arg)));
    } else {
        throw parse_error("--kind must be orth or herm");
    }
    emit(out, json{{"exists", exists}});
    return 0;
}

int handle_realize(const Options& opt, std::ostream& out) {
    if (opt.kind_arg == "orth") {
        GlobalQuadInvariants inv = global_invariants_from_json(load_payload(opt.invariants_arg));
        emit(out, embed(quad_space_to_json(realize_global(inv))));
    } else if (opt.kind_arg == "herm") {
        HermGlobalInvariants inv = herm_invariants_from_json(load_payload(opt.invariants_arg));
        emit(out, embed(herm_space_to_json(realize_herm(inv))));
    } else {
        throw parse_error("--kind must be orth or herm");
    }
    return 0;
}

// Incoherent payloads are distinguished by shape: the Hermitian form carries
// the field as "m", the orthogonal form carries "det".
bool is_herm_payload(const std::string& arg) {
    json j = parse_payload(arg);
    return j.is_object() && j.contains("m");
}

int handle_validate(const Options& opt, std::ostream& out) {
    ValidationReport report = is_herm_payload(opt.data_arg)
        ? validate_herm(incoherent_herm_from_json(load_payload(opt.data_arg)))
        : validate_orth(incoherent_orth_from_json(load_payload(opt.data_arg)));
    json result{{"ok", report.ok}};
    if (!report.ok) result["violation"] = report.violation;
    emit(out, result);
    return 0;
}

int handle_neighbor(const Options& opt, std::ostream& out) {
    Place v = Place::parse(opt.at_arg);
    json result;
    if (is_herm_payload(opt.data_arg)) {
        HermNeighbor nb = neighbor_herm(incoherent_herm_from_json(load_payload(opt.data_arg)), v);
        result["invariants"] = embed(herm_invariants_to_json(nb.invariants));
        result["space"] = embed(herm_space_to_json(nb.space));
    } else {
        OrthNeighbor nb = neighbor_orth(incoherent_orth_from_json(load_payload(opt.data_arg)), v);
        result["invariants"] = embed(global_invariants_to_json(nb.invariants));
        result["space"] = embed(quad_space_to_json(nb.space));
    }
    emit(out, result);
    return 0;
}

int handle_restrict(const Options& opt, std::ostream& out) {
    Rational a = parse_rational(opt.restrict_class);
    if (is_herm_payload(opt.data_arg)) {
        IncoherentHermData data = incoherent_herm_from_json(load_payload(opt.data_arg));
        emit(out, embed(incoherent_herm_to_json(restrict_herm(data, a))));
    } else {
        IncoherentOrthData data = incoherent_orth_from_json(load_payload(opt.data_arg));
        emit(out, embed(incoherent_orth_to_json(restrict_orth(data, a))));
    }
    return 0;
}

int handle_lattice_maximal(const Options& opt, std::ostream& out) {
    Int p = parse_integer(opt.lat_p);
    if (opt.lat_m.has_value()) {
        ImagQuadField field(Int(*opt.lat_m));
        emit(out, embed(herm_lattice_to_json(
            herm_maximal_lattice(field, opt.lat_dim, opt.lat_class, p))));
    } else {
        SquareClass det = canonical_square_class(parse_integer(opt.lat_det));
        emit(out, embed(orth_lattice_to_json(maximal_lattice(opt.lat_dim, det, opt.lat_eps, p))));
    }
    return 0;
}

int handle_lattice_disc(const Options& opt, std::ostream& out) {
    if (is_herm_payload(opt.lattice_arg)) {
        HermLatticeZp lattice = herm_lattice_from_json(load_payload(opt.lattice_arg));
        json result = embed(herm_disc_group_to_json(herm_dual_quotient(lattice)));
        result["selfdual"] = herm_is_selfdual(lattice);
        emit(out, result);
        return 0;
    }
    OrthLatticeZp lattice = orth_lattice_from_json(load_payload(opt.lattice_arg));
    json result = embed(disc_group_to_json(dual_quotient(lattice)));
    result["selfdual"] = is_selfdual(lattice);
    try {
        result["maximal"] = is_maximal(lattice);
    } catch (const domain_error&) {
        // The maximality criterion only applies to even determinant
        // valuation; omit the key instead of failing the whole query.
    }
    emit(out, result);
    return 0;
}

std::vector<std::pair<Rational, Rational>> parse_parameter_pairs(const std::string& arg) {
    json j = parse_payload(arg);
    if (!j.is_array()) throw parse_error("--t must be an array of [x, y] pairs");
    std::vector<std::pair<Rational, Rational>> pairs;
    for (const json& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string()
            || !entry[1].is_string()) {
            throw parse_error("parameter entries must be [x, y] rational strings");
        }
        pairs.emplace_back(parse_rational(entry[0].get<std::string>()),
                           parse_rational(entry[1].get<std::string>()));
    }
    return pairs;
}

int handle_fiber(const Options& opt, std::ostream& out) {
    Int p = parse_integer(opt.lat_p);
    BaseDecomposition base = opt.lat_m.has_value()
        ? base_point_herm(ImagQuadField(Int(*opt.lat_m)), opt.lat_dim, opt.lat_class, p,
                          opt.fiber_orientation)
        : base_point_orth(opt.lat_dim, canonical_square_class(parse_integer(opt.lat_det)),
                          opt.lat_eps, p, opt.fiber_orientation);
    FiberParameter t = fiber_parameter_from_rationals(base, parse_parameter_pairs(opt.fiber_t),
                                                      opt.precision);
    FiberPoint point = (base.kind == FiberKind::herm) ? fiber_point_herm(base, t)
                                                      : fiber_point(base, t);
    json result;
    result["base"] = embed(base_decomposition_to_json(base));
    result["level"] = filtration_level(t);
    result["point"] = embed(fiber_point_to_json(point));
    emit(out, result);
    return 0;
}

int handle_mass(const Options& opt, std::ostream& out) {
    if (!opt.mass_family.empty()) {
        if (opt.mass_chi.empty()) throw parse_error("mass --family requires --chi");
        MassFamily family = make_mass_family(mass_kind_from_string(opt.mass_family),
                                             opt.mass_n, parse_integer(opt.mass_q));
        Rational mass = mass_from_chi(family, parse_rational(opt.mass_chi));
        emit(out, json{{"mass", rational_to_string(mass)}});
        return 0;
    }
    if (!opt.mass_p.empty() && !opt.mass_level.empty()) {
        Int p = parse_integer(opt.mass_p);
        Int level = parse_integer(opt.mass_level);
        json result;
        result["mass"] = rational_to_string(eichler_mass(p, level));
        result["chi"] = rational_to_string(chi_modular(level));
        emit(out, result);
        return 0;
    }
    throw parse_error("mass requires --family/--n/--q/--chi or -p/--level");
}

int handle_dv_check(const Options& opt, std::ostream& out) {
    bool ok = dv_check(parse_integer(opt.dv_q), parse_integer(opt.dv_points),
                       parse_integer(opt.dv_genus));
    emit(out, json{{"ok", ok}});
    return 0;
}

int handle_batch(std::istream& in, std::ostream& out) {
    int worst = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> args;
        try {
            json cmd = json::parse(line);
            if (!cmd.is_object() || !cmd.contains("cmd") || !cmd["cmd"].is_string()) {
                throw parse_error("batch lines must be {\"cmd\":..., \"args\":[...]}");
            }
            args.push_back(cmd["cmd"].get<std::string>());
            if (cmd.contains("args")) {
                if (!cmd["args"].is_array()) throw parse_error("\"args\" must be an array");
                for (const json& a : cmd["args"]) {
                    if (!a.is_string()) throw parse_error("\"args\" entries must be strings");
                    args.push_back(a.get<std::string>());
                }
            }
        } catch (const nlohmann::json::exception& e) {
            emit(out, json{{"error", std::string("invalid JSON: ") + e.what()}});
            worst = std::max(worst, 2);
            continue;
        } catch (const parse_error& e) {
            emit(out, json{{"error", e.what()}});
            worst = std::max(worst, 2);
            continue;
        }
        if (args[0] == "batch") {
            emit(out, json{{"error", "batch cannot be nested"}});
            worst = std::max(worst, 2);
            continue;
        }
        worst = std::max(worst, run_single(args, out, false));
    }
    return worst;
}

void register_verbs(CLI::App& app, Options& opt) {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--precision", opt.precision,
                   "p-adic output precision for fiber computations")
        ->default_val(kDefaultFiberPrecision);

    CLI::App* symbol = app.add_subcommand("symbol", "Hilbert symbol (a, b)_v");
    symbol->add_option("-a", opt.sym_a, "first argument (rational)")->required();
    symbol->add_option("-b", opt.sym_b, "second argument (rational)")->required();
    symbol->add_option("-v", opt.sym_v, "place: a prime or 'inf'")->required();

    CLI::App* classify = app.add_subcommand(
        "classify", "invariants of a quadratic or Hermitian space");
    classify->add_option("--space", opt.space_arg, "quadratic space JSON or @path");
    classify->add_option("--herm", opt.herm_arg, "Hermitian space JSON or @path");
    classify->add_option("--at", opt.at_arg, "restrict to one place");

    CLI::App* isomorphic = app.add_subcommand(
        "isomorphic", "test two spaces for (local) isomorphism");
    isomorphic->add_option("--left", opt.left_arg, "first space JSON or @path")->required();
    isomorphic->add_option("--right", opt.right_arg, "second space JSON or @path")->required();
    isomorphic->add_option("--at", opt.at_arg, "compare at one place only");
    isomorphic->add_option("--kind", opt.kind_arg, "orth (default) or herm");

    CLI::App* exists = app.add_subcommand(
        "exists", "does a space with the prescribed invariants exist");
    exists->add_option("--invariants", opt.invariants_arg, "invariant family JSON or @path")
        ->required();
    exists->add_option("--kind", opt.kind_arg, "orth (default) or herm");

    CLI::App* realize = app.add_subcommand(
        "realize", "construct a space with the prescribed invariants");
    realize->add_option("--invariants", opt.invariants_arg, "invariant family JSON or @path")
        ->required();
    realize->add_option("--kind", opt.kind_arg, "orth (default) or herm");

    CLI::App* validate = app.add_subcommand(
        "incoherent-validate", "validate incoherent definite data");
    validate->add_option("--data", opt.data_arg, "incoherent data JSON or @path")->required();

    CLI::App* neighbor = app.add_subcommand(
        "neighbor", "the neighbor of incoherent data at a place");
    neighbor->add_option("--data", opt.data_arg, "incoherent data JSON or @path")->required();
    neighbor->add_option("--at", opt.at_arg, "place to flip")->required();

    CLI::App* restrict_cmd = app.add_subcommand(
        "restrict", "restrict incoherent data along a positive class");
    restrict_cmd->add_option("--data", opt.data_arg, "incoherent data JSON or @path")->required();
    restrict_cmd->add_option("-a", opt.restrict_class, "restriction class (rational)")->required();

    CLI::App* lat_max = app.add_subcommand(
        "lattice-maximal", "a maximal lattice with prescribed local invariants");
    lat_max->add_option("--dim", opt.lat_dim, "rank")->required();
    lat_max->add_option("--det", opt.lat_det, "determinant class (integer, orthogonal case)");
    lat_max->add_option("--eps", opt.lat_eps, "Hasse-Witt invariant +1/-1 (orthogonal case)");
    lat_max->add_option("--class", opt.lat_class, "norm class +1/-1 (Hermitian case)");
    lat_max->add_option("--m", opt.lat_m, "field parameter m of Q(sqrt(-m)) (Hermitian case)");
    lat_max->add_option("-p", opt.lat_p, "odd prime")->required();

    CLI::App* lat_disc = app.add_subcommand(
        "lattice-disc", "discriminant group of a p-adic lattice");
    lat_disc->add_option("--lattice", opt.lattice_arg, "lattice JSON or @path")->required();

    CLI::App* fiber = app.add_subcommand(
        "fiber", "a verified fiber point over a base decomposition");
    fiber->add_option("--dim", opt.lat_dim, "rank")->required();
    fiber->add_option("--det", opt.lat_det, "determinant class (orthogonal case)");
    fiber->add_option("--eps", opt.lat_eps, "Hasse-Witt invariant (orthogonal case; must be -1)");
    fiber->add_option("--class", opt.lat_class, "norm class (Hermitian case; must be -1)");
    fiber->add_option("--m", opt.lat_m, "field parameter m (Hermitian case)");
    fiber->add_option("-p", opt.lat_p, "odd prime")->required();
    fiber->add_option("--orientation", opt.fiber_orientation, "sign of sqrt(D), +1 or -1");
    fiber->add_option("--t", opt.fiber_t, "fiber parameter: array of [x,y] rational pairs");

    CLI::App* mass = app.add_subcommand("mass", "mass of a definite family");
    mass->add_option("--family", opt.mass_family,
                     "odd-orth | even-orth-plus | even-orth-minus | hermitian");
    mass->add_option("--n", opt.mass_n, "family rank parameter");
    mass->add_option("--q", opt.mass_q, "residue size (prime power)");
    mass->add_option("--chi", opt.mass_chi, "Euler characteristic (rational)");
    mass->add_option("-p", opt.mass_p, "prime (Eichler mass of level N)");
    mass->add_option("--level", opt.mass_level, "level N coprime to p");

    CLI::App* dv = app.add_subcommand(
        "dv-check", "Drinfeld-Vladut bound check for curves over F_q");
    dv->add_option("--q", opt.dv_q, "field size")->required();
    dv->add_option("--points", opt.dv_points, "number of rational points")->required();
    dv->add_option("--genus", opt.dv_genus, "genus")->required();
}

int run_single(const std::vector<std::string>& args, std::ostream& out, bool interactive) {
    Options opt;
    CLI::App app{"exact local-global invariant calculus for quadratic and Hermitian forms",
                 "qforms"};
    register_verbs(app, opt);

    CLI::App* batch = nullptr;
    if (interactive) {
        batch = app.add_subcommand("batch",
                                   "read {\"cmd\":...,\"args\":[...]} lines from stdin");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (interactive) {
            std::cerr << e.what() << "\n\n" << app.help();
        } else {
            emit(out, json{{"error", std::string("usage: ") + e.what()}});
        }
        return 2;
    }

    try {
        if (batch != nullptr && batch->parsed()) return handle_batch(std::cin, out);
        if (app.got_subcommand("symbol")) return handle_symbol(opt, out);
        if (app.got_subcommand("classify")) return handle_classify(opt, out);
        if (app.got_subcommand("isomorphic")) return handle_isomorphic(opt, out);
        if (app.got_subcommand("exists")) return handle_exists(opt, out);
        if (app.got_subcommand("realize")) return handle_realize(opt, out);
        if (app.got_subcommand("incoherent-validate")) return handle_validate(opt, out);
        if (app.got_subcommand("neighbor")) return handle_neighbor(opt, out);
        if (app.got_subcommand("restrict")) return handle_restrict(opt, out);
        if (app.got_subcommand("lattice-maximal")) return handle_lattice_maximal(opt, out);
        if (app.got_subcommand("lattice-disc")) return handle_lattice_disc(opt, out);
        if (app.got_subcommand("fiber")) return handle_fiber(opt, out);
        if (app.got_subcommand("mass")) return handle_mass(opt, out);
        if (app.got_subcommand("dv-check")) return handle_dv_check(opt, out);
    } catch (const parse_error& e) {
        emit(out, json{{"error", e.what()}});
        return 2;
    } catch (const precision_error& e) {
        emit(out, json{{"error", e.what()}});
        return 1;
    } catch (const domain_error& e) {
        emit(out, json{{"error", e.what()}});
        return 1;
    } catch (const nlohmann::json::exception& e) {
        emit(out, json{{"error", std::string("invalid JSON: ") + e.what()}});
        return 2;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_single(args, std::cout, true);
}
