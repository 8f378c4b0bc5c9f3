#include "revca/synthesis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "revca/classes.hpp"
#include "revca/reachability.hpp"

namespace revca {

namespace {

// The six balanced assignments over the first cell's effective RMTs,
// keyed by the mask of RMTs mapped to 1, ascending.
constexpr std::array<unsigned, 6> first_cell_choices = {3, 5, 6, 9, 10, 12};

unsigned random_bits(const detail::Chooser& choose, unsigned width) {
    unsigned bits = 0;
    for (unsigned j = 0; j < width; ++j) {
        bits |= static_cast<unsigned>(choose(2)) << j;
    }
    return bits;
}

RmtSet child_of_side(unsigned side_mask) {
    unsigned child = 0;
    for (unsigned k = 0; k < 8; ++k) {
        if ((side_mask >> k) & 1u) child |= 3u << (2 * (k % 4));
    }
    return RmtSet::from_mask(child);
}

void append_unique(std::vector<RmtSet>& nodes, RmtSet node) {
    if (std::find(nodes.begin(), nodes.end(), node) == nodes.end()) {
        nodes.push_back(node);
    }
}

// All codes that split every current unique node evenly. Nonempty for
// every organization the construction can reach.
std::vector<Rule> interior_candidates(const std::vector<RmtSet>& nodes) {
    std::vector<Rule> candidates;
    for (unsigned code = 0; code <= 255; ++code) {
        const Rule rule{code};
        if (std::all_of(nodes.begin(), nodes.end(),
                        [rule](RmtSet node) { return splits_node_evenly(rule, node); })) {
            candidates.push_back(rule);
        }
    }
    return candidates;
}

// Codes over the even RMTs that give each node's effective pair distinct
// next states.
std::vector<Rule> last_candidates(const std::vector<RmtSet>& nodes) {
    std::vector<Rule> candidates;
    for (unsigned even = 0; even < 16; ++even) {
        unsigned code = 0;
        for (unsigned j = 0; j < 4; ++j) {
            if ((even >> j) & 1u) code |= 1u << (2 * j);
        }
        const bool completes = std::all_of(nodes.begin(), nodes.end(), [code](RmtSet node) {
            const unsigned pair = node.mask() & 0x55u;
            return std::popcount(pair & code) == 1;
        });
        if (completes) candidates.push_back(Rule(code));
    }
    return candidates;
}

detail::Chooser sampler(std::mt19937_64& rng) {
    return [&rng](std::size_t bound) {
        return static_cast<std::size_t>(uniform_below(rng, bound));
    };
}

}  // namespace

std::string_view to_string(SynthesisMethod m) {
    return m == SynthesisMethod::tree_constructive ? "tree" : "classwalk";
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    assert(bound >= 1);
    // 2^64 mod bound values at the top of the range would be overweighted.
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t overhang = (max % bound + 1) % bound;
    std::uint64_t x = rng();
    while (overhang != 0 && x > max - overhang) x = rng();
    return x % bound;
}

namespace detail {

RuleVector synthesize_tree_impl(std::size_t n, const Chooser& choose, bool randomize_dont_cares) {
    if (n == 0) throw std::invalid_argument("synthesize_tree: cell count must be at least 1");

    std::vector<Rule> rules;
    rules.reserve(n);

    if (n == 1) {
        // Both boundaries apply: RMTs 0 and 2 must differ, the rest is free.
        const unsigned bit = static_cast<unsigned>(choose(2));
        unsigned code = (bit << 0) | ((bit ^ 1u) << 2);
        if (randomize_dont_cares) {
            const unsigned extra = random_bits(choose, 6);  // RMTs 1,3,4,5,6,7
            code |= ((extra & 1u) << 1) | (((extra >> 1) & 1u) << 3) | ((extra >> 2) << 4);
        }
        return RuleVector({Rule(code)});
    }

    const unsigned ones = first_cell_choices[choose(first_cell_choices.size())];
    unsigned first_code = ones;
    if (randomize_dont_cares) first_code |= random_bits(choose, 4) << 4;
    rules.push_back(Rule(first_code));

    std::vector<RmtSet> nodes;
    append_unique(nodes, child_of_side(~ones & 0x0Fu));
    append_unique(nodes, child_of_side(ones));

    for (std::size_t i = 1; i + 1 < n; ++i) {
        const std::vector<Rule> candidates = interior_candidates(nodes);
        assert(!candidates.empty());
        const Rule rule = candidates[choose(candidates.size())];
        rules.push_back(rule);

        std::vector<RmtSet> next;
        for (const RmtSet& node : nodes) {
            append_unique(next, child_of_side(node.mask() & ~rule.code()));
            append_unique(next, child_of_side(node.mask() & rule.code()));
        }
        assert(next.size() <= 4);
        nodes = std::move(next);
    }

    const std::vector<Rule> candidates = last_candidates(nodes);
    assert(!candidates.empty());
    unsigned last_code = candidates[choose(candidates.size())].code();
    if (randomize_dont_cares) {
        const unsigned odd = random_bits(choose, 4);
        for (unsigned j = 0; j < 4; ++j) {
            last_code |= ((odd >> j) & 1u) << (2 * j + 1);
        }
    }
    rules.push_back(Rule(last_code));

    return RuleVector(std::move(rules));
}

RuleVector synthesize_classwalk_impl(std::size_t n, const Chooser& choose,
                                     bool randomize_dont_cares) {
    if (n < 3) throw std::invalid_argument("synthesize_classwalk: needs at least 3 cells");

    std::vector<Rule> rules;
    rules.reserve(n);

    const auto firsts = first_rule_options();
    auto [first, cl] = firsts[choose(firsts.size())];
    unsigned first_code = first.code();
    if (randomize_dont_cares) first_code |= random_bits(choose, 4) << 4;
    rules.push_back(Rule(first_code));

    for (std::size_t i = 1; i + 1 < n; ++i) {
        const auto& members = rules_of_class(cl);
        const Rule rule = members[choose(members.size())];
        rules.push_back(rule);
        cl = next_class(cl, rule);
    }

    const auto& lasts = last_rule_options(cl);
    unsigned last_code = lasts[choose(lasts.size())].code();
    if (randomize_dont_cares) {
        const unsigned odd = random_bits(choose, 4);
        for (unsigned j = 0; j < 4; ++j) {
            last_code |= ((odd >> j) & 1u) << (2 * j + 1);
        }
    }
    rules.push_back(Rule(last_code));

    return RuleVector(std::move(rules));
}

}  // namespace detail

RuleVector synthesize_tree(std::size_t n, std::mt19937_64& rng, SynthesisOptions options) {
    return detail::synthesize_tree_impl(n, sampler(rng), options.randomize_dont_cares);
}

RuleVector synthesize_tree(std::size_t n, std::uint64_t seed, SynthesisOptions options) {
    std::mt19937_64 rng(seed);
    return synthesize_tree(n, rng, options);
}

RuleVector synthesize_classwalk(std::size_t n, std::mt19937_64& rng, SynthesisOptions options) {
    return detail::synthesize_classwalk_impl(n, sampler(rng), options.randomize_dont_cares);
}

RuleVector synthesize_classwalk(std::size_t n, std::uint64_t seed, SynthesisOptions options) {
    std::mt19937_64 rng(seed);
    return synthesize_classwalk(n, rng, options);
}

std::uint64_t count_reversible(std::size_t n, RuleSpace space) {
    if (n == 0) throw std::invalid_argument("count_reversible: cell count must be at least 1");
    if (n > 4) {
        throw std::invalid_argument("count_reversible: exhaustive search is capped at 4 cells");
    }

    std::vector<Rule> codes;
    if (space == RuleSpace::all_rules) {
        for (unsigned c = 0; c <= 255; ++c) codes.push_back(Rule(c));
    } else {
        for (unsigned c = 0; c <= 255; ++c) {
            if (is_reversible_rule(Rule(c))) codes.push_back(Rule(c));
        }
    }
    const std::size_t base = codes.size();

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= base;

    // Partition the vector space by the first rule's index and scan the
    // chunks concurrently; each chunk runs its own odometer.
    const std::size_t threads =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), base);
    std::vector<std::uint64_t> counts(threads, 0);
    std::vector<std::thread> workers;
    workers.reserve(threads);

    for (std::size_t t = 0; t < threads; ++t) {
        workers.emplace_back([&, t]() {
            std::uint64_t local = 0;
            std::vector<Rule> vec(n, codes[0]);
            std::vector<std::size_t> odometer(n, 0);
            for (std::size_t lead = t; lead < base; lead += threads) {
                vec[0] = codes[lead];
                std::fill(odometer.begin(), odometer.end(), 0);
                std::fill(vec.begin() + 1, vec.end(), codes[0]);
                const std::uint64_t per_lead = total / base;
                for (std::uint64_t step = 0; step < per_lead; ++step) {
                    if (identify_reversible(std::span<const Rule>(vec)).reversible) ++local;
                    for (std::size_t pos = n; pos-- > 1;) {
                        if (++odometer[pos] < base) {
                            vec[pos] = codes[odometer[pos]];
                            break;
                        }
                        odometer[pos] = 0;
                        vec[pos] = codes[0];
                    }
                }
            }
            counts[t] = local;
        });
    }
    for (auto& w : workers) w.join();

    std::uint64_t sum = 0;
    for (std::uint64_t c : counts) sum += c;
    return sum;
}

}  // namespace revca
