#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "revca/rule.hpp"

namespace revca {

// The six ways the unique nodes of one reachability-tree level can be
// organized. Every node is a union of two sibling pairs, giving three
// two-node organizations; with four unique nodes the level combines two
// of them.
enum class RuleClass { I = 1, II, III, IV, V, VI };

inline constexpr RuleClass all_rule_classes[] = {RuleClass::I,  RuleClass::II, RuleClass::III,
                                                 RuleClass::IV, RuleClass::V,  RuleClass::VI};

std::string_view to_string(RuleClass c);
std::optional<RuleClass> rule_class_from_string(std::string_view name);

// The defining unique-node RMT sets: two nodes for I..III, four for the
// combined organizations IV..VI.
std::span<const RmtSet> node_sets(RuleClass c);

// True when `rule` assigns two 0s and two 1s to the node's four RMTs and
// neither side is a pair of equivalent RMTs (which would collapse the
// child node to two RMTs).
bool splits_node_evenly(Rule rule, RmtSet node);

// Rules usable at a cell whose tree level is organized as class c: the
// rules that split every node of the organization evenly. Derived once by
// scanning all 256 codes; ascending order.
const std::vector<Rule>& rules_of_class(RuleClass c);

// Member of all six classes.
bool is_complete_rule(Rule r);

// The organization of the next level when a cell of class c applies
// `rule`: collect the child nodes of every split and match the resulting
// unique-node collection back to a class. Throws std::invalid_argument if
// rule is not a member of c, std::logic_error if the children match no
// class (which would break the closure the synthesis walk relies on).
RuleClass next_class(RuleClass c, Rule rule);

// The first-cell choices: rules balanced over the effective RMTs
// {0,1,2,3} with the don't-care upper nibble zeroed, paired with the class
// the second cell must have.
std::vector<std::pair<Rule, RuleClass>> first_rule_options();

// Last-cell choices completing a tree whose final level is organized as
// class c: don't-care odd RMTs zeroed, one 0 and one 1 on each node's
// effective even pair.
const std::vector<Rule>& last_rule_options(RuleClass c);

enum class BoundaryPosition { first, last };

// Zeroes the don't-care RMTs of a boundary rule (4..7 for the first cell,
// the odd RMTs for the last), giving the canonical representative.
Rule canonicalize_boundary_rule(Rule r, BoundaryPosition position);

std::ostream& operator<<(std::ostream& os, RuleClass c);

}  // namespace revca
