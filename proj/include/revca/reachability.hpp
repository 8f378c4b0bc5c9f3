#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "revca/automaton.hpp"
#include "revca/rule.hpp"

namespace revca {

// Why an identification run rejected a rule vector.
enum class WitnessReason {
    // Rule 1 does not put two 0s and two 1s on its effective RMTs {0,1,2,3}.
    first_cell_imbalance,
    // Some interior split sent an unequal number of a node's four RMTs to
    // each side, so an edge of the reachability tree would be produced by
    // one or three RMTs.
    unbalanced_split,
    // A split side collapsed to a single RMT once RMTs 4..7 were replaced
    // by their equivalents 0..3; the child node would carry only two RMTs.
    singleton_after_normalization,
    // The last rule gives the same next state to both effective (even)
    // RMTs of some node, so one leaf edge is missing.
    last_cell_collision,
};

std::string_view to_string(WitnessReason reason);

struct Witness {
    // 1-based index of the rule whose split failed (equivalently, the tree
    // level whose edges that rule produces).
    std::size_t level = 0;
    // The set the failure was detected on: the four RMTs whose split was
    // uneven, the collapsed set for singletons, the effective even RMT
    // pair for last-cell collisions, the effective RMTs of rule 1 for a
    // first-cell imbalance.
    RmtSet failing;
    WitnessReason reason = WitnessReason::first_cell_imbalance;
};

struct Verdict {
    bool reversible = false;
    std::optional<Witness> witness;  // present iff not reversible
};

// Replaces every RMT by its canonical equivalent (k mod 4); duplicates
// merge, which is exactly how a two-element set can shrink to one.
constexpr RmtSet normalize(RmtSet s) {
    const unsigned m = s.mask();
    return RmtSet::from_mask((m | (m >> 4)) & 0x0Fu);
}

// Successor RMTs of every member of `node`, partitioned by the next rule's
// output bit: (zero_set, one_set), both over the true indices 0..7.
std::pair<RmtSet, RmtSet> split_node(RmtSet node, Rule rule);

// One level of the compressed reachability tree: the unique nodes in
// normalized form. Level 0 is the root; level i >= 1 holds the nodes
// produced by rule i+1's splits.
struct CompressedTreeLevel {
    std::size_t level = 0;
    std::vector<RmtSet> nodes;
};

// Decides reversibility of a null-boundary hybrid CA in one left-to-right
// scan of the rule vector, tracking at most four unique tree nodes per
// level. Single-cell and two-cell vectors degenerate to the boundary
// checks alone. The span form requires at least one rule and spares hot
// callers the RuleVector construction.
Verdict identify_reversible(const RuleVector& rv);
Verdict identify_reversible(std::span<const Rule> rules);

// The per-level unique nodes the identification scan saw. For an
// irreversible vector the sequence stops at the last level completed
// before the witness.
std::vector<CompressedTreeLevel> compressed_tree(const RuleVector& rv);

}  // namespace revca
