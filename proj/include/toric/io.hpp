#pragma once

#include "toric/classify.hpp"
#include "toric/cm_reg.hpp"
#include "toric/homology.hpp"
#include "toric/lattice.hpp"
#include "toric/sumset_reg.hpp"

#include "json.hpp"

#include <string>

namespace toric {

using nlohmann::json;

inline constexpr const char* kSchema = "toric-reg/1";

/// {"d": int, "A": [[...], ...]}; throws ValidationError.
GeneratorSet parse_instance(const json& j);
GeneratorSet parse_instance_text(const std::string& text);
GeneratorSet load_instance(const std::string& path);
json instance_to_json(const GeneratorSet& a);

/// FNV-1a 64 of the canonical (sorted) instance, as 16 hex digits.
std::string instance_hash(const GeneratorSet& a);

json to_json(const LatticeVector& v);
json to_json(const std::vector<LatticeVector>& vs);
json to_json(const ClassificationReport& r);
json to_json(const SigmaResult& r);
json to_json(const RegularityResult& r);
json to_json(const DegreeResult& r);
json to_json(const EGResult& r);
json to_json(const FaceComplex& c, const ReducedHomologyProfile& p);

/// SVG of sA (filled circles) against Delta_{s,e} minus sA (hollow squares); d = 2 only.
std::string plot_svg(SumsetTable& table, std::int64_t s);

} // namespace toric
