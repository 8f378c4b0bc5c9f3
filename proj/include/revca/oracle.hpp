#pragma once

#include <cstdint>
#include <vector>

#include "revca/automaton.hpp"

namespace revca {

// Explicit functional graph over all 2^n states. State indices use the
// cell-1-most-significant convention of CaState::to_index, so the index's
// binary expansion is the state's text form.
struct StateTransitionGraph {
    std::size_t n = 0;
    std::vector<std::uint32_t> successor;
    std::vector<std::uint32_t> predecessor_count;

    std::uint64_t state_count() const { return successor.size(); }
};

// Two arrays of 2^n entries; anything beyond this is out of desk scale.
inline constexpr std::size_t max_stg_cells = 24;

// Enumerates next_state over every configuration. Throws
// std::invalid_argument when rv has more than max_stg_cells cells.
StateTransitionGraph build_stg(const RuleVector& rv);

// Same, reusing the caller's buffers across calls.
void build_stg(const RuleVector& rv, StateTransitionGraph& out);

// Every state has exactly one predecessor, i.e. the global map is a
// permutation and every state is cyclic.
bool is_bijective(const StateTransitionGraph& stg);

std::uint64_t non_reachable_count(const StateTransitionGraph& stg);
std::uint32_t max_predecessor_count(const StateTransitionGraph& stg);

// Lengths of the terminal cycles of the functional graph, ascending, one
// entry per cycle. For a bijective graph this is the permutation's cycle
// type.
std::vector<std::uint64_t> cycle_structure(const StateTransitionGraph& stg);

}  // namespace revca
