#pragma once

#include "qf/fiber.hpp"
#include "qf/hermitian.hpp"
#include "qf/incoherent.hpp"
#include "qf/lattice.hpp"
#include "qf/padic.hpp"
#include "qf/quadratic.hpp"

#include <string>

namespace qf {

// Canonical JSON text for every interface type: fixed key order, integers
// for dimensions and signs, exact rational strings for all field values.
// Parsers throw qf::parse_error on malformed text and let the types'
// validation errors propagate.

std::string quad_space_to_json(const QuadSpace& space);
QuadSpace quad_space_from_json(const std::string& text);

std::string local_invariants_to_json(const LocalQuadInvariants& inv);
std::string global_invariants_to_json(const GlobalQuadInvariants& inv);
GlobalQuadInvariants global_invariants_from_json(const std::string& text);

std::string herm_space_to_json(const HermSpace& space);
HermSpace herm_space_from_json(const std::string& text);

std::string herm_invariants_to_json(const HermGlobalInvariants& inv);
HermGlobalInvariants herm_invariants_from_json(const std::string& text);

std::string incoherent_orth_to_json(const IncoherentOrthData& data);
IncoherentOrthData incoherent_orth_from_json(const std::string& text);

std::string incoherent_herm_to_json(const IncoherentHermData& data);
IncoherentHermData incoherent_herm_from_json(const std::string& text);

std::string gram_to_json(const RationalMatrix& gram);
RationalMatrix gram_from_json(const std::string& text);

std::string orth_lattice_to_json(const OrthLatticeZp& lattice);
OrthLatticeZp orth_lattice_from_json(const std::string& text);

std::string disc_group_to_json(const DiscriminantGroup& group);

std::string herm_lattice_to_json(const HermLatticeZp& lattice);
HermLatticeZp herm_lattice_from_json(const std::string& text);

std::string herm_disc_group_to_json(const HermDiscriminantGroup& group);

std::string padic_to_json(const PadicNum& x);
std::string quadext_to_json(const QuadExtNum& x);

std::string base_decomposition_to_json(const BaseDecomposition& base);
std::string fiber_point_to_json(const FiberPoint& point);

} // namespace qf
