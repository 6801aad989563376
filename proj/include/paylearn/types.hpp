#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace paylearn {

// A bundle of items as a bitmask: bit j-1 set iff item j is in the bundle.
// The mask's numeric value is the bundle's decimal index, so Bundle doubles
// as the outcome identifier in auction domains.
using Bundle = std::uint32_t;

// Partial outcome for agent 1 (or whichever agent a view centers on).
// Auction domains: bundle bitmask (0 = null outcome).
// Assignment domain: item index in [0, n).
using OutcomeId = std::uint32_t;

constexpr Bundle kEmptyBundle = 0;

inline int bundle_size(Bundle b) { return std::popcount(b); }
inline bool bundle_contains(Bundle outer, Bundle inner) { return (inner & ~outer) == 0; }
inline Bundle full_bundle(int items) { return items >= 32 ? ~Bundle{0} : (Bundle{1} << items) - 1; }

enum class Domain { SingleItem, CombinatorialAuction, Assignment };

inline std::string domain_name(Domain d) {
    switch (d) {
        case Domain::SingleItem: return "single-item";
        case Domain::CombinatorialAuction: return "ca";
        case Domain::Assignment: return "assignment";
    }
    return "?";
}

inline Domain domain_from_name(const std::string& s) {
    if (s == "single-item") return Domain::SingleItem;
    if (s == "ca") return Domain::CombinatorialAuction;
    if (s == "assignment") return Domain::Assignment;
    throw std::invalid_argument("unknown domain: " + s);
}

struct BundleBid {
    Bundle bundle = kEmptyBundle;
    double value = 0.0;

    friend bool operator==(const BundleBid&, const BundleBid&) = default;
};

// An agent's type in a multi-minded CA: explicit values for at most b
// bundles. The implied full valuation assigns any bundle the value of the
// best desired bundle it contains, which makes it monotone by construction.
class MultiMindedBid {
public:
    MultiMindedBid() = default;

    explicit MultiMindedBid(std::vector<BundleBid> bids) : bids_(std::move(bids)) {
        for (std::size_t i = 0; i < bids_.size(); ++i) {
            if (bids_[i].bundle == kEmptyBundle)
                throw std::invalid_argument("MultiMindedBid: empty bundle listed");
            if (!(bids_[i].value > 0.0) || !std::isfinite(bids_[i].value))
                throw std::invalid_argument("MultiMindedBid: bundle value must be positive and finite");
            for (std::size_t j = 0; j < i; ++j)
                if (bids_[j].bundle == bids_[i].bundle)
                    throw std::invalid_argument("MultiMindedBid: duplicate bundle");
        }
    }

    const std::vector<BundleBid>& bids() const { return bids_; }
    bool empty() const { return bids_.empty(); }
    std::size_t size() const { return bids_.size(); }

    // Value of an arbitrary bundle: best desired bundle contained in it.
    double value_of(Bundle o) const {
        double best = 0.0;
        for (const auto& bb : bids_)
            if (bundle_contains(o, bb.bundle)) best = std::max(best, bb.value);
        return best;
    }

    double max_value() const {
        double best = 0.0;
        for (const auto& bb : bids_) best = std::max(best, bb.value);
        return best;
    }

    MultiMindedBid scaled(double factor) const {
        MultiMindedBid out = *this;
        for (auto& bb : out.bids_) bb.value *= factor;
        return out;
    }

    friend bool operator==(const MultiMindedBid&, const MultiMindedBid&) = default;

private:
    std::vector<BundleBid> bids_;
};

// An agent's type in the assignment domain: value for each of the n items.
struct AssignmentValuation {
    std::vector<double> item_values;

    double value_of_item(std::size_t j) const { return item_values.at(j); }
    double max_value() const {
        double best = 0.0;
        for (double v : item_values) best = std::max(best, v);
        return best;
    }
    AssignmentValuation scaled(double factor) const {
        AssignmentValuation out = *this;
        for (double& v : out.item_values) v *= factor;
        return out;
    }

    friend bool operator==(const AssignmentValuation&, const AssignmentValuation&) = default;
};

// Ordered profile of all agents' reported types. Homogeneous: every agent
// lives in the same domain with the same dimensions.
class TypeProfile {
public:
    TypeProfile() = default;

    static TypeProfile auction(Domain domain, int items, std::vector<MultiMindedBid> bids) {
        if (domain == Domain::Assignment)
            throw std::invalid_argument("TypeProfile::auction: wrong domain");
        if (domain == Domain::SingleItem && items != 1)
            throw std::invalid_argument("TypeProfile: single-item domain has exactly one item");
        TypeProfile p;
        p.domain_ = domain;
        p.items_ = items;
        p.bids_ = std::move(bids);
        const Bundle all = full_bundle(items);
        for (const auto& bid : p.bids_)
            for (const auto& bb : bid.bids())
                if ((bb.bundle & ~all) != 0)
                    throw std::invalid_argument("TypeProfile: bundle outside item range");
        return p;
    }

    static TypeProfile assignment(std::vector<AssignmentValuation> vals) {
        TypeProfile p;
        p.domain_ = Domain::Assignment;
        p.items_ = static_cast<int>(vals.size());
        for (const auto& v : vals)
            if (v.item_values.size() != vals.size())
                throw std::invalid_argument("TypeProfile: assignment valuation length must equal n");
        p.assign_ = std::move(vals);
        return p;
    }

    Domain domain() const { return domain_; }
    int items() const { return items_; }
    int agents() const {
        return static_cast<int>(domain_ == Domain::Assignment ? assign_.size() : bids_.size());
    }

    const MultiMindedBid& bid(int agent) const { return bids_.at(agent); }
    const AssignmentValuation& assignment_valuation(int agent) const { return assign_.at(agent); }
    const std::vector<MultiMindedBid>& all_bids() const { return bids_; }
    const std::vector<AssignmentValuation>& all_assignment_valuations() const { return assign_; }

    // v_i(theta_i, o) for a partial outcome of this profile's domain.
    double value(int agent, OutcomeId o) const {
        if (domain_ == Domain::Assignment) return assign_.at(agent).value_of_item(o);
        return bids_.at(agent).value_of(static_cast<Bundle>(o));
    }

    double agent_max_value(int agent) const {
        if (domain_ == Domain::Assignment) return assign_.at(agent).max_value();
        return bids_.at(agent).max_value();
    }

    TypeProfile scaled(double factor) const {
        TypeProfile out = *this;
        for (auto& b : out.bids_) b = b.scaled(factor);
        for (auto& a : out.assign_) a = a.scaled(factor);
        return out;
    }

    friend bool operator==(const TypeProfile&, const TypeProfile&) = default;

private:
    Domain domain_ = Domain::SingleItem;
    int items_ = 1;
    std::vector<MultiMindedBid> bids_;       // SingleItem / CombinatorialAuction
    std::vector<AssignmentValuation> assign_;  // Assignment
};

// Feasible joint outcome: one partial outcome per agent.
struct Allocation {
    Domain domain = Domain::SingleItem;
    std::vector<OutcomeId> partial;  // per agent

    OutcomeId of(int agent) const { return partial.at(agent); }

    // CA/single-item: allocated bundles pairwise disjoint.
    // Assignment: items form a permutation over agents.
    bool feasible() const {
        if (domain == Domain::Assignment) {
            std::vector<bool> seen(partial.size(), false);
            for (OutcomeId it : partial) {
                if (it >= partial.size() || seen[it]) return false;
                seen[it] = true;
            }
            return true;
        }
        Bundle taken = kEmptyBundle;
        for (OutcomeId o : partial) {
            Bundle b = static_cast<Bundle>(o);
            if ((taken & b) != 0) return false;
            taken |= b;
        }
        return true;
    }
};

inline double total_welfare(const TypeProfile& theta, const Allocation& alloc) {
    double w = 0.0;
    for (int i = 0; i < theta.agents(); ++i) w += theta.value(i, alloc.of(i));
    return w;
}

// The view one agent role has of a profile: its own type first, everyone
// else in a fixed order. Price functions consume only the "others" part.
struct OthersView {
    Domain domain = Domain::SingleItem;
    int items = 1;
    std::vector<MultiMindedBid> bids;          // auction domains
    std::vector<AssignmentValuation> values;   // assignment

    int count() const {
        return static_cast<int>(domain == Domain::Assignment ? values.size() : bids.size());
    }

    double agent_max_value(int idx) const {
        if (domain == Domain::Assignment) return values.at(idx).max_value();
        return bids.at(idx).max_value();
    }

    double max_reported_value() const {
        double best = 0.0;
        for (int i = 0; i < count(); ++i) best = std::max(best, agent_max_value(i));
        return best;
    }

    OthersView scaled(double factor) const {
        OthersView out = *this;
        for (auto& b : out.bids) b = b.scaled(factor);
        for (auto& v : out.values) v = v.scaled(factor);
        return out;
    }

    friend bool operator==(const OthersView&, const OthersView&) = default;
};

// Others of `agent` in original index order (the fixed ordering used when
// sorting is disabled).
inline OthersView others_of(const TypeProfile& theta, int agent) {
    OthersView v;
    v.domain = theta.domain();
    v.items = theta.items();
    for (int i = 0; i < theta.agents(); ++i) {
        if (i == agent) continue;
        if (theta.domain() == Domain::Assignment)
            v.values.push_back(theta.assignment_valuation(i));
        else
            v.bids.push_back(theta.bid(i));
    }
    return v;
}

}  // namespace paylearn
