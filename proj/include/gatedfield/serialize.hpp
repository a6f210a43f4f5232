#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "gatedfield/boxmodes.hpp"
#include "gatedfield/gates.hpp"
#include "gatedfield/scenario.hpp"
#include "gatedfield/vacuum.hpp"

namespace gatedfield {

// ordered_json keeps insertion order, so serialized reports are byte-stable.
using json = nlohmann::ordered_json;

// Fixed field names: delta_e, delta_h, bound, product, margin, methods, units.
// margin is the string "unconstrained" when the bound vanishes.
json to_json(const UncertaintyReport& r);

json to_json(const ScenarioReport& r);

json to_json(const McEstimate& e);

// Lattice summary: box size, cutoff, mode count, per-axis k_max.
json lattice_summary(const BoxLattice& lat);

// ---------------------------------------------------------------------------
// Grid field serialization
// ---------------------------------------------------------------------------
// Binary layout (little-endian):
//   origin  : 3 x f64
//   spacing : f64
//   dims    : 3 x i64
//   samples : dims[0]*dims[1]*dims[2] nodes in x-fastest order, 3 x f64 each.

void write_grid_binary(const GridVectorField& f, std::ostream& os);
GridVectorField read_grid_binary(std::istream& is);

void write_grid_binary_file(const GridVectorField& f, const std::string& path);
GridVectorField read_grid_binary_file(const std::string& path);

json grid_to_json(const GridVectorField& f);
GridVectorField grid_from_json(const json& j);

} // namespace gatedfield
