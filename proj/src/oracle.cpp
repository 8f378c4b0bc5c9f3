#include "revca/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace revca {

void build_stg(const RuleVector& rv, StateTransitionGraph& out) {
    const std::size_t n = rv.size();
    if (n > max_stg_cells) {
        throw std::invalid_argument("build_stg: at most " + std::to_string(max_stg_cells) +
                                    " cells, got " + std::to_string(n));
    }
    const std::uint32_t states = std::uint32_t{1} << n;

    out.n = n;
    out.successor.assign(states, 0);
    out.predecessor_count.assign(states, 0);

    std::uint8_t codes[max_stg_cells];
    for (std::size_t i = 0; i < n; ++i) codes[i] = static_cast<std::uint8_t>(rv[i].code());

    for (std::uint32_t s = 0; s < states; ++s) {
        // Shifting in a trailing zero realizes the null boundary on both
        // sides: bit n of e is cell 1's left neighbor, bit 0 the right
        // neighbor of cell n.
        const std::uint32_t e = s << 1;
        std::uint32_t next = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned window = (e >> (n - 1 - i)) & 7u;
            next = (next << 1) | ((codes[i] >> window) & 1u);
        }
        out.successor[s] = next;
        ++out.predecessor_count[next];
    }
}

StateTransitionGraph build_stg(const RuleVector& rv) {
    StateTransitionGraph stg;
    build_stg(rv, stg);
    return stg;
}

bool is_bijective(const StateTransitionGraph& stg) {
    return std::all_of(stg.predecessor_count.begin(), stg.predecessor_count.end(),
                       [](std::uint32_t c) { return c == 1; });
}

std::uint64_t non_reachable_count(const StateTransitionGraph& stg) {
    return static_cast<std::uint64_t>(
        std::count(stg.predecessor_count.begin(), stg.predecessor_count.end(), 0u));
}

std::uint32_t max_predecessor_count(const StateTransitionGraph& stg) {
    return *std::max_element(stg.predecessor_count.begin(), stg.predecessor_count.end());
}

std::vector<std::uint64_t> cycle_structure(const StateTransitionGraph& stg) {
    const std::uint64_t states = stg.state_count();

    // Peel states of in-degree zero until only the terminal cycles remain.
    std::vector<std::uint32_t> degree = stg.predecessor_count;
    std::vector<std::uint32_t> queue;
    for (std::uint64_t s = 0; s < states; ++s) {
        if (degree[s] == 0) queue.push_back(static_cast<std::uint32_t>(s));
    }
    while (!queue.empty()) {
        const std::uint32_t s = queue.back();
        queue.pop_back();
        const std::uint32_t t = stg.successor[s];
        if (--degree[t] == 0) queue.push_back(t);
    }

    std::vector<bool> visited(states, false);
    std::vector<std::uint64_t> lengths;
    for (std::uint64_t s = 0; s < states; ++s) {
        if (degree[s] == 0 || visited[s]) continue;
        std::uint64_t len = 0;
        std::uint32_t cur = static_cast<std::uint32_t>(s);
        do {
            visited[cur] = true;
            cur = stg.successor[cur];
            ++len;
        } while (cur != s);
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

}  // namespace revca
