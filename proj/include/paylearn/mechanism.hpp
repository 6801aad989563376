#pragma once

#include <functional>
#include <span>
#include <stdexcept>

#include "types.hpp"

namespace paylearn {

// Absolute tolerance for all metric-level comparisons (argmax ties, IR
// flags, regret floors).
inline constexpr double kMetricTol = 1e-9;

// Agent-independent price: payment demanded from the focal agent for a
// candidate outcome, given only the other agents' reports.
using PriceFunction = std::function<double(const OthersView&, OutcomeId)>;

inline double utility(double value, double payment) { return value - payment; }

// |min(u, 0)|
inline double ir_violation(double utility_value) { return utility_value < 0.0 ? -utility_value : 0.0; }

// Index of the utility maximizer; outcomes within kMetricTol of the best are
// tied and the lowest outcome id wins (null outcome first).
inline std::size_t argmax_index(std::span<const OutcomeId> candidates, std::span<const double> scores) {
    if (candidates.empty()) throw std::invalid_argument("argmax_index: empty candidate set");
    double best = scores[0];
    for (std::size_t i = 1; i < scores.size(); ++i) best = std::max(best, scores[i]);
    std::size_t pick = 0;
    OutcomeId pick_id = 0;
    bool first = true;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (scores[i] >= best - kMetricTol && (first || candidates[i] < pick_id)) {
            pick = i;
            pick_id = candidates[i];
            first = false;
        }
    }
    return pick;
}

// arg max over candidates of v_1(theta_1, o) - t(theta_{-1}, o).
inline OutcomeId induced_classifier(const PriceFunction& price, const TypeProfile& theta, int agent,
                                    std::span<const OutcomeId> candidates) {
    OthersView others = others_of(theta, agent);
    std::vector<double> scores(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        scores[i] = theta.value(agent, candidates[i]) - price(others, candidates[i]);
    return candidates[argmax_index(candidates, scores)];
}

// Regret of reporting truthfully when the mechanism chose `chosen`:
// best achievable utility over the candidate set minus realized utility.
inline double ex_post_regret(std::span<const OutcomeId> candidates, std::span<const double> values,
                             std::span<const double> prices, OutcomeId chosen) {
    if (candidates.empty()) throw std::invalid_argument("ex_post_regret: empty candidate set");
    double best = 0.0;
    double realized = 0.0;
    bool found = false;
    bool any = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const double u = values[i] - prices[i];
        if (!any || u > best) best = u;
        any = true;
        if (candidates[i] == chosen) {
            realized = u;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("ex_post_regret: chosen outcome not among candidates");
    return std::max(0.0, best - realized);
}

inline double ex_post_regret(const TypeProfile& theta, int agent, const PriceFunction& price,
                             std::span<const OutcomeId> candidates, OutcomeId chosen) {
    OthersView others = others_of(theta, agent);
    std::vector<double> values(candidates.size()), prices(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        values[i] = theta.value(agent, candidates[i]);
        prices[i] = price(others, candidates[i]);
    }
    return ex_post_regret(candidates, values, prices, chosen);
}

}  // namespace paylearn
