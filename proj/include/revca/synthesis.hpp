#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

#include "revca/automaton.hpp"

namespace revca {

enum class SynthesisMethod { tree_constructive, class_walk };

std::string_view to_string(SynthesisMethod m);

struct SynthesisOptions {
    // When set, the don't-care RMTs of the boundary rules take random
    // values instead of the canonical zeros.
    bool randomize_dont_cares = false;
};

// Draws uniformly from [0, bound) by rejection, so results do not depend
// on the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Grows the compressed reachability tree level by level, at each cell
// sampling one rule among those that split every current unique node into
// two 0-RMTs and two 1-RMTs without pairing equivalent RMTs. Constant
// work per cell. Accepts any n >= 1.
RuleVector synthesize_tree(std::size_t n, std::mt19937_64& rng, SynthesisOptions options = {});
RuleVector synthesize_tree(std::size_t n, std::uint64_t seed, SynthesisOptions options = {});

// Walks the class tables instead of the node sets: first rule from the
// first-rule table, interior rules from the member list of the running
// class, last rule from the last-rule table. Requires n >= 3.
RuleVector synthesize_classwalk(std::size_t n, std::mt19937_64& rng, SynthesisOptions options = {});
RuleVector synthesize_classwalk(std::size_t n, std::uint64_t seed, SynthesisOptions options = {});

enum class RuleSpace {
    all_rules,         // every code 0..255 per cell
    reversible_rules,  // only the 62 reversible rules per cell
};

// Exhaustively identifies every rule vector of the given space and counts
// the reversible ones. Throws std::invalid_argument for n > 4 (the space
// grows as 256^n).
std::uint64_t count_reversible(std::size_t n, RuleSpace space);

namespace detail {

// Decision source for the synthesizers: called with the number of
// admissible choices, returns the index to take. Lets tests replay an
// explicit choice sequence; the seeded entry points pass a uniform
// sampler.
using Chooser = std::function<std::size_t(std::size_t)>;

RuleVector synthesize_tree_impl(std::size_t n, const Chooser& choose, bool randomize_dont_cares);
RuleVector synthesize_classwalk_impl(std::size_t n, const Chooser& choose,
                                     bool randomize_dont_cares);

}  // namespace detail

}  // namespace revca
