#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gmepw/epw.hpp"
#include "gmepw/gm.hpp"
#include "gmepw/poly.hpp"
#include "gmepw/scan.hpp"
#include "gmepw/subspace.hpp"

namespace gmepw {

// All serialization goes through ordered_json with scalar entries encoded
// as "num/den" / decimal-integer strings, so identical inputs dump to
// byte-identical text and round trips are bit-exact.
using ojson = nlohmann::ordered_json;

ojson subspace_to_json(const Subspace<Rat>& s);
Subspace<Rat> subspace_from_json(const ojson& j);

ojson lagrangian_to_json(const Lagrangian<Rat>& a);
Lagrangian<Rat> lagrangian_from_json(const ojson& j);

ojson gm_to_json(const GmData<Rat>& gm);
GmData<Rat> gm_from_json(const ojson& j);

ojson poly_to_json(const Mpoly& f, const std::vector<std::string>& var_names);
Mpoly poly_from_json(const ojson& j);

ojson strat_to_json(const StratReport& r);
ojson decomp_to_json(const DecompScanReport& r);
ojson smooth_to_json(const SmoothnessReport& r);
ojson sigma1_to_json(const Sigma1Locus<Rat>& s, const GmData<Rat>& gm);

std::string dump_json(const ojson& j);

} // namespace gmepw
