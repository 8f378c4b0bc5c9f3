#include "revca/classes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace revca {

namespace {

constexpr RmtSet org_i[2] = {RmtSet{0, 1, 2, 3}, RmtSet{4, 5, 6, 7}};
constexpr RmtSet org_ii[2] = {RmtSet{0, 1, 4, 5}, RmtSet{2, 3, 6, 7}};
constexpr RmtSet org_iii[2] = {RmtSet{0, 1, 6, 7}, RmtSet{2, 3, 4, 5}};

constexpr RmtSet org_iv[4] = {org_i[0], org_i[1], org_ii[0], org_ii[1]};
constexpr RmtSet org_v[4] = {org_i[0], org_i[1], org_iii[0], org_iii[1]};
constexpr RmtSet org_vi[4] = {org_ii[0], org_ii[1], org_iii[0], org_iii[1]};

std::size_t index_of(RuleClass c) {
    return static_cast<std::size_t>(c) - 1;
}

// An equivalent pair is {k, k+4} for a single k.
bool is_equivalent_pair(unsigned mask) {
    return std::popcount(mask) == 2 && (mask >> 4) == (mask & 0x0Fu);
}

// Child node produced by the side of a split: the union of next_rmts over
// the side's members.
RmtSet child_node(unsigned side_mask) {
    unsigned child = 0;
    for (unsigned k = 0; k < 8; ++k) {
        if ((side_mask >> k) & 1u) child |= 3u << (2 * (k % 4));
    }
    return RmtSet::from_mask(child);
}

// Matches a sorted unique-node collection against the six organizations.
std::optional<RuleClass> match_organization(const std::vector<RmtSet>& nodes) {
    const auto matches = [&nodes](std::span<const RmtSet> org) {
        if (nodes.size() != org.size()) return false;
        std::array<unsigned, 4> sorted{};
        for (std::size_t i = 0; i < org.size(); ++i) sorted[i] = org[i].mask();
        std::sort(sorted.begin(), sorted.begin() + org.size());
        for (std::size_t i = 0; i < org.size(); ++i) {
            if (nodes[i].mask() != sorted[i]) return false;
        }
        return true;
    };
    for (RuleClass c : all_rule_classes) {
        if (matches(node_sets(c))) return c;
    }
    return std::nullopt;
}

std::vector<RmtSet> children_of(RuleClass c, Rule rule) {
    std::vector<RmtSet> children;
    for (const RmtSet& node : node_sets(c)) {
        const unsigned ones = node.mask() & rule.code();
        const unsigned zeros = node.mask() & ~rule.code();
        for (unsigned side : {zeros, ones}) {
            const RmtSet child = child_node(side);
            if (std::find(children.begin(), children.end(), child) == children.end()) {
                children.push_back(child);
            }
        }
    }
    std::sort(children.begin(), children.end(),
              [](RmtSet a, RmtSet b) { return a.mask() < b.mask(); });
    return children;
}

std::array<std::vector<Rule>, 6> derive_class_members() {
    std::array<std::vector<Rule>, 6> members;
    for (RuleClass c : all_rule_classes) {
        for (unsigned code = 0; code <= 255; ++code) {
            const Rule rule{code};
            const auto sets = node_sets(c);
            if (std::all_of(sets.begin(), sets.end(),
                            [rule](RmtSet node) { return splits_node_evenly(rule, node); })) {
                members[index_of(c)].push_back(rule);
            }
        }
    }
    return members;
}

std::array<std::vector<Rule>, 6> derive_last_rules() {
    std::array<std::vector<Rule>, 6> options;
    for (RuleClass c : all_rule_classes) {
        for (unsigned even = 0; even < 16; ++even) {
            // Spread the 4 choice bits onto RMTs 0, 2, 4, 6.
            unsigned code = 0;
            for (unsigned j = 0; j < 4; ++j) {
                if ((even >> j) & 1u) code |= 1u << (2 * j);
            }
            const auto sets = node_sets(c);
            const bool completes = std::all_of(sets.begin(), sets.end(), [code](RmtSet node) {
                const unsigned pair = node.mask() & 0x55u;
                return std::popcount(pair & code) == 1;
            });
            if (completes) options[index_of(c)].push_back(Rule(code));
        }
    }
    return options;
}

}  // namespace

std::string_view to_string(RuleClass c) {
    switch (c) {
        case RuleClass::I: return "I";
        case RuleClass::II: return "II";
        case RuleClass::III: return "III";
        case RuleClass::IV: return "IV";
        case RuleClass::V: return "V";
        case RuleClass::VI: return "VI";
    }
    return "?";
}

std::optional<RuleClass> rule_class_from_string(std::string_view name) {
    for (RuleClass c : all_rule_classes) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

std::span<const RmtSet> node_sets(RuleClass c) {
    switch (c) {
        case RuleClass::I: return org_i;
        case RuleClass::II: return org_ii;
        case RuleClass::III: return org_iii;
        case RuleClass::IV: return org_iv;
        case RuleClass::V: return org_v;
        case RuleClass::VI: return org_vi;
    }
    return {};
}

bool splits_node_evenly(Rule rule, RmtSet node) {
    assert(node.size() == 4);
    const unsigned ones = node.mask() & rule.code();
    const unsigned zeros = node.mask() & ~rule.code();
    if (std::popcount(ones) != 2) return false;
    return !is_equivalent_pair(ones) && !is_equivalent_pair(zeros);
}

const std::vector<Rule>& rules_of_class(RuleClass c) {
    static const std::array<std::vector<Rule>, 6> members = derive_class_members();
    return members[index_of(c)];
}

bool is_complete_rule(Rule r) {
    return std::all_of(std::begin(all_rule_classes), std::end(all_rule_classes), [r](RuleClass c) {
        const auto& rules = rules_of_class(c);
        return std::binary_search(rules.begin(), rules.end(), r);
    });
}

static RuleClass derive_next_class(RuleClass c, Rule rule) {
    const auto matched = match_organization(children_of(c, rule));
    if (!matched) {
        throw std::logic_error("next_class: child nodes of class " + std::string(to_string(c)) +
                               " under rule " + std::to_string(rule.code()) +
                               " match no organization");
    }
    return *matched;
}

RuleClass next_class(RuleClass c, Rule rule) {
    const auto& members = rules_of_class(c);
    if (!std::binary_search(members.begin(), members.end(), rule)) {
        throw std::invalid_argument("next_class: rule " + std::to_string(rule.code()) +
                                    " is not a member of class " + std::string(to_string(c)));
    }
    static const auto table = [] {
        std::array<std::array<RuleClass, 256>, 6> t{};
        for (RuleClass from : all_rule_classes) {
            for (Rule r : rules_of_class(from)) {
                t[index_of(from)][r.code()] = derive_next_class(from, r);
            }
        }
        return t;
    }();
    return table[index_of(c)][rule.code()];
}

std::vector<std::pair<Rule, RuleClass>> first_rule_options() {
    std::vector<std::pair<Rule, RuleClass>> options;
    for (unsigned code = 0; code < 16; ++code) {
        if (std::popcount(code) != 2) continue;
        std::vector<RmtSet> children;
        for (unsigned side : {~code & 0x0Fu, code}) {
            const RmtSet child = child_node(side);
            if (std::find(children.begin(), children.end(), child) == children.end()) {
                children.push_back(child);
            }
        }
        std::sort(children.begin(), children.end(),
                  [](RmtSet a, RmtSet b) { return a.mask() < b.mask(); });
        const auto matched = match_organization(children);
        if (!matched) {
            throw std::logic_error("first_rule_options: children of rule " +
                                   std::to_string(code) + " match no organization");
        }
        options.emplace_back(Rule(code), *matched);
    }
    std::sort(options.begin(), options.end());
    return options;
}

const std::vector<Rule>& last_rule_options(RuleClass c) {
    static const std::array<std::vector<Rule>, 6> options = derive_last_rules();
    return options[index_of(c)];
}

Rule canonicalize_boundary_rule(Rule r, BoundaryPosition position) {
    return position == BoundaryPosition::first ? Rule(r.code() & 0x0Fu)
                                               : Rule(r.code() & 0x55u);
}

std::ostream& operator<<(std::ostream& os, RuleClass c) {
    return os << to_string(c);
}

}  // namespace revca
