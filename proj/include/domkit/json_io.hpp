#pragma once

#include <json.hpp>

#include "domkit/circulant_solver.hpp"
#include "domkit/model.hpp"
#include "domkit/periodic_construct.hpp"
#include "domkit/ratio_formula.hpp"
#include "domkit/ratio_search.hpp"

namespace domkit::io {

using nlohmann::json;

// Rational: "num/den"; PeriodicSet: {"period", "residues"}; BlockStructure: {"sizes"}.
json encode(const Rational& r);
json encode(const PeriodicSet& set);
json encode(const BlockStructure& blocks);
json encode(const RatioResult& result, std::int64_t d, std::int64_t s);
json encode(const GammaCertificate& cert, const CirculantInstance& inst);
json encode(const SearchReport& report, const DifferenceSet& diffs);
json encode(const ConsistencyReport& report);

Rational decode_rational(const json& j);
PeriodicSet decode_periodic(const json& j);
BlockStructure decode_blocks(const json& j);

}  // namespace domkit::io
