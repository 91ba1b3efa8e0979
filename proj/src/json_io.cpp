#include "domkit/json_io.hpp"

#include "domkit/error.hpp"

namespace domkit::io {

json encode(const Rational& r) { return r.str(); }

json encode(const PeriodicSet& set) { return {{"period", set.period()}, {"residues", set.residues()}}; }

json encode(const BlockStructure& blocks) { return {{"sizes", blocks.sizes()}}; }

json encode(const RatioResult& result, std::int64_t d, std::int64_t s) {
    json j = {{"d", d}, {"s", s}, {"ratio", encode(result.value)}, {"case", std::string(case_name(result.case_label))}};
    if (result.decomposition) {
        j["k"] = result.decomposition->k;
        j["e"] = result.decomposition->e;
        j["sign"] = result.decomposition->sign == Sign::positive ? "positive" : "negative";
    } else {
        j["k"] = nullptr;
        j["e"] = nullptr;
    }
    return j;
}

json encode(const GammaCertificate& cert, const CirculantInstance& inst) {
    return {{"n", inst.modulus()},
            {"connection", inst.connection()},
            {"gamma", cert.gamma},
            {"witness", cert.witness},
            {"explored", cert.explored}};
}

json encode(const SearchReport& report, const DifferenceSet& diffs) {
    json rows = json::array();
    for (const auto& row : report.per_period)
        rows.push_back({{"p", row.period}, {"gamma", row.gamma}, {"ratio", encode(row.ratio)}});
    json j = {{"set", diffs.elements()},
              {"max_period", report.cap},
              {"best_ratio", encode(report.best_ratio)},
              {"best_period", report.best_period},
              {"best_witness", encode(report.best_witness)},
              {"per_period", rows},
              {"bound", "upper"},
              {"span_c", report.span_c}};
    if (report.theoretical_cap)
        j["theoretical_cap"] = *report.theoretical_cap;
    else
        j["theoretical_cap"] = std::to_string(report.span_c) + "*2^" + std::to_string(report.span_c);
    return j;
}

json encode(const ConsistencyReport& r) {
    return {{"d", r.d},
            {"s", r.s},
            {"cap", r.cap},
            {"formula", encode(r.formula)},
            {"best_ratio", encode(r.best_ratio)},
            {"best_period", r.best_period},
            {"construction_period", r.construction_period},
            {"gamma_at_construction", r.gamma_at_construction},
            {"attained_at_construction", r.attained_at_construction},
            {"violating_periods", r.violating_periods},
            {"consistent", r.consistent}};
}

Rational decode_rational(const json& j) {
    if (!j.is_string()) throw DomainError("rational must be a \"num/den\" string");
    return Rational::parse(j.get<std::string>());
}

PeriodicSet decode_periodic(const json& j) {
    try {
        return PeriodicSet(j.at("period").get<std::int64_t>(), j.at("residues").get<std::vector<std::int64_t>>());
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed periodic set: ") + e.what());
    }
}

BlockStructure decode_blocks(const json& j) {
    try {
        return BlockStructure(j.at("sizes").get<std::vector<std::int64_t>>());
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed block structure: ") + e.what());
    }
}

}  // namespace domkit::io
