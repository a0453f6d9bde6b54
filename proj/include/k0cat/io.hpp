#pragma once

// JSON serialization of group invariants and ingestion of model input
// files (angulations and tilting sets).

#include <string>

#include "json.hpp"

#include "k0cat/abelian.hpp"
#include "k0cat/higher.hpp"
#include "k0cat/polygon.hpp"

namespace k0cat::io {

// {"free_rank": <int>, "torsion": [<int>...]} with torsion in
// divisibility order.
nlohmann::json invariants_to_json(const GroupInvariants& g);

// {"p": int, "q": int, "diagonals": [[u, v], ...]}; fully validated.
// p and q must match the expected parameters when given.
polygon::Angulation read_angulation_file(const std::string& path,
                                         const polygon::PolygonParams& expect);

// {"p": int, "d": int, "summands": [[1, 3, 5], ...]}; fully validated.
higher::TiltingSet read_tilting_file(const std::string& path,
                                     const higher::HigherParams& expect);

} // namespace k0cat::io
