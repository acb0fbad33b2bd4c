#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rz/census.hpp"
#include "rz/components.hpp"
#include "rz/dieulattice.hpp"
#include "rz/dimension.hpp"
#include "rz/newton.hpp"
#include "rz/rootdata.hpp"
#include "rz/sigmalin.hpp"
#include "rz/wittring.hpp"

namespace rz {

using Json = nlohmann::json;

// slope data: {"summands": [[m, n], ...]} in the canonical ascending order
Json polygon_to_json(const NewtonPolygon& np);
NewtonPolygon polygon_from_json(const Json& j);

// {"a": ["p/q", ...], "c": "p/q"} with exact rational strings
Json coweight_to_json(const Coweight& w);
Coweight coweight_from_json(const Json& j);

// every exact value as a "p/q" string plus a decimal convenience copy
Json report_to_json(const DimensionReport& rep);

Json components_to_json(const ComponentGroupDescription& cg);

// {"p": .., "r": .., "n": .., "modulus": [c_0..c_{r-1}]}
Json ring_to_json(const WittRing& R);
std::shared_ptr<const WittRing> ring_from_json(const Json& j);

// scalars as little-endian Teichmueller digit lists; each digit is the
// base-p coefficient vector of a residue-field element.  Reading one needs
// the owning ring (scalars keep a reference to it); the embedded ring descriptor
// must match or RingMismatch is thrown.
Json scalar_to_json(const WittScalar& a);
WittScalar scalar_from_json(const Json& j, const WittRing& ring);

// window plus canonical basis rows; each entry a digit list as above.
// The space rides along as (np, ring, pairing flag, convention tag).
Json lattice_to_json(const WindowLattice& lat);
WindowLattice lattice_from_json(const Json& j);

// sigma-linear systems as coefficient tables over a serialized field
Json system_to_json(const SigmaSystem& sys);
SigmaSystem system_from_json(const Json& j);

// the census interchange formats share a metadata block
struct CensusQuery {
  NewtonPolygon np;
  long long p = 3;
  int r = 1;
  int lo = 0, hi = 0;
  uint64_t budget = kDefaultCensusBudget;
};

// one row per record: kappa, a_inv, rel_volume, a0, a1, basis (hex limbs,
// '.' between limbs, ';' between rows), after '#'-prefixed metadata lines
std::string census_to_csv(const CensusQuery& q, const std::vector<CensusRecord>& recs);
Json census_to_json(const CensusQuery& q, const std::vector<CensusRecord>& recs);

}  // namespace rz
