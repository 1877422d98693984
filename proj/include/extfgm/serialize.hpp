#pragma once

// JSON views of the report structures (vendored nlohmann/json).

#include <json.hpp>

#include "extfgm/oracle.hpp"
#include "extfgm/validity.hpp"

namespace extfgm {

inline const char* to_string(CheckKind kind) {
    switch (kind) {
    case CheckKind::Volume: return "Volume";
    case CheckKind::DensitySign: return "DensitySign";
    case CheckKind::Boundary: return "Boundary";
    case CheckKind::Frechet: return "Frechet";
    }
    return "Unknown";
}

inline const char* to_string(RangeKind kind) {
    switch (kind) {
    case RangeKind::Corrected: return "Corrected";
    case RangeKind::RLUFGeneric: return "RLUFGeneric";
    case RangeKind::EbaidMinForm: return "EbaidMinForm";
    case RangeKind::EbaidOnlineForm: return "EbaidOnlineForm";
    }
    return "Unknown";
}

// Field names are part of the external interface; do not rename.
inline void to_json(nlohmann::json& j, const GridReport& report) {
    j = nlohmann::json{
        {"passed", report.passed},
        {"worst_value", report.worst_value},
        {"worst_u", report.worst_u},
        {"worst_v", report.worst_v},
        {"grid_n", report.grid_n},
        {"check_kind", to_string(report.check_kind)},
    };
}

inline void to_json(nlohmann::json& j, const QuadratureResult& result) {
    j = nlohmann::json{
        {"value", result.value},
        {"abs_error_estimate", result.abs_error_estimate},
        {"nodes_per_axis", result.nodes_per_axis},
    };
}

inline void to_json(nlohmann::json& j, const AdmissibleRange& range) {
    j = nlohmann::json{
        {"lower", range.lower},
        {"upper", range.upper},
        {"kind", to_string(range.kind)},
        {"empty", range.empty},
    };
}

inline void to_json(nlohmann::json& j, const ExtremaReport& report) {
    j = nlohmann::json{
        {"alpha", report.alpha},
        {"beta", report.beta},
        {"arg_alpha", report.arg_alpha},
        {"arg_beta", report.arg_beta},
    };
}

inline void to_json(nlohmann::json& j, const EmptyRangeFalsification& item) {
    j = nlohmann::json{
        {"b", item.b},
        {"published", item.published},
        {"corrected", item.corrected},
        {"corrected_upper_scan", item.corrected_upper_scan},
        {"confirmed", item.confirmed},
    };
}

inline void to_json(nlohmann::json& j, const RhoBoundFalsification& item) {
    j = nlohmann::json{
        {"a", item.a},
        {"b", item.b},
        {"published", item.published},
        {"corrected", item.corrected},
        {"rho_formal", item.rho_formal},
        {"tau_formal", item.tau_formal},
        {"rho_quadrature", item.rho_quadrature},
        {"density", item.density},
        {"confirmed", item.confirmed},
    };
}

inline void to_json(nlohmann::json& j, const FalsificationReport& report) {
    j = nlohmann::json{
        {"empty_range", report.empty_range},
        {"rho_exceeds_one", report.rho_exceeds_one},
        {"all_confirmed", report.all_confirmed},
    };
}

} // namespace extfgm
