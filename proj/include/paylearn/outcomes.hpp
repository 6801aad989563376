#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "types.hpp"

namespace paylearn {

enum class OutcomeRuleKind { SingleItemOptimal, GreedyCa, OptimalCa, EgalitarianAssignment };

inline std::string outcome_rule_name(OutcomeRuleKind k) {
    switch (k) {
        case OutcomeRuleKind::SingleItemOptimal: return "single-item-optimal";
        case OutcomeRuleKind::GreedyCa: return "greedy";
        case OutcomeRuleKind::OptimalCa: return "optimal";
        case OutcomeRuleKind::EgalitarianAssignment: return "egalitarian";
    }
    return "?";
}

inline OutcomeRuleKind outcome_rule_from_name(const std::string& s) {
    if (s == "single-item-optimal") return OutcomeRuleKind::SingleItemOptimal;
    if (s == "greedy") return OutcomeRuleKind::GreedyCa;
    if (s == "optimal") return OutcomeRuleKind::OptimalCa;
    if (s == "egalitarian") return OutcomeRuleKind::EgalitarianAssignment;
    throw std::invalid_argument("unknown outcome rule: " + s);
}

// Highest value wins the item; ties go to the lowest agent index.
inline Allocation single_item_optimal(const TypeProfile& theta) {
    if (theta.domain() != Domain::SingleItem)
        throw std::invalid_argument("single_item_optimal: wrong domain");
    int winner = 0;
    double best = -1.0;
    for (int i = 0; i < theta.agents(); ++i) {
        const double v = theta.value(i, 1);
        if (v > best) {
            best = v;
            winner = i;
        }
    }
    Allocation alloc;
    alloc.domain = Domain::SingleItem;
    alloc.partial.assign(theta.agents(), 0);
    alloc.partial[winner] = 1;
    return alloc;
}

// Greedy CA: bundles ordered by value / sqrt(size); a bundle is taken if its
// agent is unserved and none of its items are gone. Score ties break by
// higher value, then lower agent index, then lower bundle index.
inline Allocation greedy_ca(const TypeProfile& theta) {
    if (theta.domain() == Domain::Assignment) throw std::invalid_argument("greedy_ca: wrong domain");
    struct Entry {
        double score;
        double value;
        int agent;
        Bundle bundle;
    };
    std::vector<Entry> entries;
    for (int i = 0; i < theta.agents(); ++i)
        for (const auto& bb : theta.bid(i).bids())
            entries.push_back({bb.value / std::sqrt(double(bundle_size(bb.bundle))), bb.value, i, bb.bundle});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.value != b.value) return a.value > b.value;
        if (a.agent != b.agent) return a.agent < b.agent;
        return a.bundle < b.bundle;
    });

    Allocation alloc;
    alloc.domain = theta.domain();
    alloc.partial.assign(theta.agents(), kEmptyBundle);
    Bundle taken = kEmptyBundle;
    std::vector<bool> served(theta.agents(), false);
    for (const auto& e : entries) {
        if (served[e.agent] || (e.bundle & taken) != 0) continue;
        alloc.partial[e.agent] = e.bundle;
        served[e.agent] = true;
        taken |= e.bundle;
    }
    return alloc;
}

namespace detail {

struct WdBid {
    int agent;
    Bundle bundle;
    double value;
};

struct WdSearch {
    const std::vector<WdBid>& bids;
    // suffix_agent_max[i][a]: best value agent a offers among bids[i:].
    std::vector<std::vector<double>> suffix_agent_max;
    int agents;
    double best_welfare = 0.0;
    std::vector<int> best_chosen;
    std::vector<int> chosen;

    WdSearch(const std::vector<WdBid>& b, int n) : bids(b), agents(n) {
        suffix_agent_max.assign(bids.size() + 1, std::vector<double>(n, 0.0));
        for (int i = static_cast<int>(bids.size()) - 1; i >= 0; --i) {
            suffix_agent_max[i] = suffix_agent_max[i + 1];
            auto& row = suffix_agent_max[i];
            row[bids[i].agent] = std::max(row[bids[i].agent], bids[i].value);
        }
    }

    double bound(std::size_t idx, std::uint32_t served_mask) const {
        double bd = 0.0;
        for (int a = 0; a < agents; ++a)
            if (!(served_mask >> a & 1u)) bd += suffix_agent_max[idx][a];
        return bd;
    }

    void run(std::size_t idx, Bundle taken, std::uint32_t served_mask, double welfare) {
        if (welfare > best_welfare) {
            best_welfare = welfare;
            best_chosen = chosen;
        }
        if (idx >= bids.size()) return;
        if (welfare + bound(idx, served_mask) <= best_welfare) return;
        const auto& bid = bids[idx];
        if (!(served_mask >> bid.agent & 1u) && (bid.bundle & taken) == 0) {
            chosen.push_back(static_cast<int>(idx));
            run(idx + 1, taken | bid.bundle, served_mask | (1u << bid.agent), welfare + bid.value);
            chosen.pop_back();
        }
        run(idx + 1, taken, served_mask, welfare);
    }
};

}  // namespace detail

struct OptimalCaResult {
    Allocation allocation;
    double welfare = 0.0;
};

// Exact winner determination by branch and bound over the explicit bids,
// restricted to `allowed_items` and skipping `excluded_agent` if given.
// The bound (sum of each unserved agent's best remaining bid) is admissible,
// so pruning never affects the optimum.
inline OptimalCaResult optimal_ca(const TypeProfile& theta, std::optional<Bundle> allowed_items = {},
                                  std::optional<int> excluded_agent = {}) {
    if (theta.domain() == Domain::Assignment) throw std::invalid_argument("optimal_ca: wrong domain");
    const Bundle allowed = allowed_items.value_or(full_bundle(theta.items()));

    std::vector<detail::WdBid> bids;
    for (int i = 0; i < theta.agents(); ++i) {
        if (excluded_agent && *excluded_agent == i) continue;
        for (const auto& bb : theta.bid(i).bids())
            if (bundle_contains(allowed, bb.bundle)) bids.push_back({i, bb.bundle, bb.value});
    }
    std::sort(bids.begin(), bids.end(), [](const detail::WdBid& a, const detail::WdBid& b) {
        if (a.value != b.value) return a.value > b.value;
        if (a.agent != b.agent) return a.agent < b.agent;
        return a.bundle < b.bundle;
    });

    detail::WdSearch search(bids, theta.agents());
    search.run(0, kEmptyBundle, 0, 0.0);

    OptimalCaResult res;
    res.allocation.domain = theta.domain();
    res.allocation.partial.assign(theta.agents(), kEmptyBundle);
    for (int idx : search.best_chosen) res.allocation.partial[bids[idx].agent] = bids[idx].bundle;
    res.welfare = search.best_welfare;
    return res;
}

namespace detail {

// Enumerates injective assignments of the given agents to allowed items and
// keeps (a) the lexicographic-egalitarian optimum and (b) the max-welfare
// optimum. Assignments are scanned in lexicographic order of the assignment
// vector, so ties resolve toward the smallest vector.
struct AssignmentScan {
    std::vector<int> egal_assignment;
    std::vector<double> egal_sorted;  // ascending value vector of the egalitarian optimum
    double egal_total = 0.0;
    std::vector<int> welfare_assignment;
    double max_welfare = -std::numeric_limits<double>::infinity();
    bool any = false;
};

// sorted ascending lexicographic comparison: a beats b if at the first
// differing position a is larger.
inline bool lex_better(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

inline void scan_assignments(const std::vector<const std::vector<double>*>& agents, std::uint32_t allowed_items,
                             std::size_t pos, std::vector<int>& current, AssignmentScan& out) {
    if (pos == agents.size()) {
        std::vector<double> vals(agents.size());
        double total = 0.0;
        for (std::size_t i = 0; i < agents.size(); ++i) {
            vals[i] = (*agents[i])[current[i]];
            total += vals[i];
        }
        if (total > out.max_welfare) {
            out.max_welfare = total;
            out.welfare_assignment = current;
        }
        std::sort(vals.begin(), vals.end());
        if (!out.any || lex_better(vals, out.egal_sorted)) {
            out.egal_sorted = std::move(vals);
            out.egal_assignment = current;
            out.egal_total = total;
        }
        out.any = true;
        return;
    }
    const std::size_t n_items = agents.empty() ? 0 : agents[0]->size();
    for (std::size_t item = 0; item < n_items; ++item) {
        if (!(allowed_items >> item & 1u)) continue;
        current[pos] = static_cast<int>(item);
        scan_assignments(agents, allowed_items & ~(1u << item), pos + 1, current, out);
    }
}

inline AssignmentScan scan_all(const std::vector<const std::vector<double>*>& agents, std::uint32_t allowed_items) {
    if (agents.size() > 9) throw std::invalid_argument("assignment enumeration limited to n <= 9");
    AssignmentScan out;
    std::vector<int> current(agents.size(), -1);
    scan_assignments(agents, allowed_items, 0, current, out);
    if (!out.any) throw std::invalid_argument("no feasible assignment for the allowed item set");
    return out;
}

}  // namespace detail

// Lexicographic egalitarian rule: maximize the minimum value, then the
// second lowest, and so forth (the permutation whose ascending sorted value
// vector is lexicographically maximal).
inline Allocation egalitarian_assignment(const TypeProfile& theta) {
    if (theta.domain() != Domain::Assignment)
        throw std::invalid_argument("egalitarian_assignment: wrong domain");
    std::vector<const std::vector<double>*> agents;
    for (int i = 0; i < theta.agents(); ++i) agents.push_back(&theta.assignment_valuation(i).item_values);
    auto scan = detail::scan_all(agents, full_bundle(theta.agents()));
    Allocation alloc;
    alloc.domain = Domain::Assignment;
    alloc.partial.assign(theta.agents(), 0);
    for (int i = 0; i < theta.agents(); ++i) alloc.partial[i] = static_cast<OutcomeId>(scan.egal_assignment[i]);
    return alloc;
}

inline Allocation apply_outcome_rule(OutcomeRuleKind kind, const TypeProfile& theta) {
    switch (kind) {
        case OutcomeRuleKind::SingleItemOptimal: return single_item_optimal(theta);
        case OutcomeRuleKind::GreedyCa: return greedy_ca(theta);
        case OutcomeRuleKind::OptimalCa: return optimal_ca(theta).allocation;
        case OutcomeRuleKind::EgalitarianAssignment: return egalitarian_assignment(theta);
    }
    throw std::logic_error("apply_outcome_rule: bad kind");
}

// Full partial-outcome set for the focal agent: every bundle for a CA,
// every item for an assignment, win/lose for a single item.
inline std::vector<OutcomeId> candidate_outcomes(Domain domain, int items) {
    std::vector<OutcomeId> out;
    switch (domain) {
        case Domain::SingleItem:
            out = {0, 1};
            break;
        case Domain::CombinatorialAuction: {
            const std::uint64_t count = std::uint64_t{1} << items;
            out.reserve(count);
            for (std::uint64_t o = 0; o < count; ++o) out.push_back(static_cast<OutcomeId>(o));
            break;
        }
        case Domain::Assignment:
            out.reserve(items);
            for (int j = 0; j < items; ++j) out.push_back(static_cast<OutcomeId>(j));
            break;
    }
    return out;
}

}  // namespace paylearn
