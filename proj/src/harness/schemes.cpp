#include "mamove/harness/schemes.hpp"

#include "mamove/channel.hpp"
#include "mamove/placement.hpp"

namespace mamove::harness {

std::string_view to_string(SchemeId id) {
  switch (id) {
    case SchemeId::OTGM: return "OTGM";
    case SchemeId::OTFM: return "OTFM";
    case SchemeId::UpperBound: return "UpperBound";
    case SchemeId::FMDOAD: return "FMDOAD";
    case SchemeId::Static: return "Static";
  }
  return "unknown";
}

std::optional<SchemeId> parse_scheme(std::string_view text) {
  for (SchemeId id : all_schemes())
    if (to_string(id) == text) return id;
  return std::nullopt;
}

std::vector<SchemeId> all_schemes() {
  return {SchemeId::OTGM, SchemeId::OTFM, SchemeId::UpperBound, SchemeId::FMDOAD, SchemeId::Static};
}

namespace {

TradeoffReport single_point(const Scenario& scenario, double t, Deployment deployment, bool converged,
                            int optimizer_calls) {
  TradeoffReport r;
  r.best_t_mov = t;
  r.best_rate = achievable_rate(scenario, deployment);
  r.best_throughput = (scenario.interval() - t) * r.best_rate;
  r.best_deployment = std::move(deployment);
  r.converged = converged;
  r.t_mov_max = t;
  r.optimizer_calls = optimizer_calls;
  r.curve.push_back({t, r.best_rate, r.best_throughput, converged, {}});
  return r;
}

}  // namespace

TradeoffReport run_scheme(const Scenario& scenario, SchemeId scheme, const RunConfig& config) {
  switch (scheme) {
    case SchemeId::OTGM: return general_search(scenario, config.effective_grid_step(), config.search);
    case SchemeId::OTFM: return fitting_method(scenario, config.samples, config.search);
    case SchemeId::UpperBound: {
      OptimizeOutcome out = unconstrained_deploy(scenario, config.search.penalty);
      return single_point(scenario, 0.0, std::move(out.deployment), out.converged, 1);
    }
    case SchemeId::FMDOAD: {
      const double t = kFixedDurationFraction * scenario.interval();
      OptimizeOutcome out = optimize_positions(scenario, t, config.search.penalty);
      return single_point(scenario, t, std::move(out.deployment), out.converged, 1);
    }
    case SchemeId::Static: return single_point(scenario, 0.0, scenario.initial(), true, 0);
  }
  return {};
}

}  // namespace mamove::harness
