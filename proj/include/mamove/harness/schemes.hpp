#pragma once

#include "mamove/harness/config.hpp"
#include "mamove/scheduler.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace mamove::harness {

/// OTGM     general search over the duration grid
/// OTFM     fitting method
/// UpperBound  instantaneous move to the speed-unconstrained optimum
/// FMDOAD   fixed duration 0.2 T with optimized placement
/// Static   no movement
enum class SchemeId { OTGM, OTFM, UpperBound, FMDOAD, Static };

std::string_view to_string(SchemeId id);
std::optional<SchemeId> parse_scheme(std::string_view text);
std::vector<SchemeId> all_schemes();

/// Fraction of T spent moving under FMDOAD.
inline constexpr double kFixedDurationFraction = 0.2;

TradeoffReport run_scheme(const Scenario& scenario, SchemeId scheme, const RunConfig& config);

}  // namespace mamove::harness
