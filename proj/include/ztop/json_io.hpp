#ifndef ZTOP_JSON_IO_HPP
#define ZTOP_JSON_IO_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "ztop/belts.hpp"
#include "ztop/fingerprint.hpp"
#include "ztop/polytope.hpp"
#include "ztop/subset_betti.hpp"
#include "ztop/torring.hpp"

namespace ztop {

using Json = nlohmann::json;

Json polytope_to_json(const SimplePolytope& P);
SimplePolytope polytope_from_json(const Json& j);
SimplePolytope load_polytope_file(const std::string& path);

// Resolves a catalog name or a .json file path.
SimplePolytope resolve_polytope(const std::string& spec);

Json belt_to_json(const Belt& B);
Json betti_to_json(const BettiTable& T);
std::string betti_text_table(const BettiTable& T);

Json ranks_to_json(const RingRanks& R);
Json fingerprint_to_json(const Fingerprint& F);
Json compare_to_json(const CompareReport& R);
Json rigidity_to_json(const RigidityReport& R);

// Ring export: basis descriptors with marker tags and (for small m) the full
// table of structure constants.
Json ring_to_json(const RingTable& T, bool structure_constants);

}  // namespace ztop

#endif
