#include "revca/reachability.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace revca {

namespace {

// successor_mask[m] is the union of next_rmts over the nibble-mask m of
// canonical RMTs 0..3: bit k expands to bits 2k and 2k+1.
constexpr std::array<std::uint8_t, 16> make_successor_masks() {
    std::array<std::uint8_t, 16> table{};
    for (unsigned m = 0; m < 16; ++m) {
        unsigned mask = 0;
        for (unsigned k = 0; k < 4; ++k) {
            if ((m >> k) & 1u) mask |= 3u << (2 * k);
        }
        table[m] = static_cast<std::uint8_t>(mask);
    }
    return table;
}

constexpr std::array<std::uint8_t, 16> successor_mask = make_successor_masks();

constexpr unsigned even_rmts_mask = 0x55u;  // RMTs 0, 2, 4, 6

constexpr unsigned normalize_mask(unsigned m) {
    return (m | (m >> 4)) & 0x0Fu;
}

Verdict reject(std::size_t level, unsigned failing_mask, WitnessReason reason) {
    Verdict v;
    v.reversible = false;
    v.witness = Witness{level, RmtSet::from_mask(failing_mask), reason};
    return v;
}

// The identification scan. At every point `sets` holds the normalized
// unique nodes of the current level, never more than four of them
// (exceeding four would already certify irreversibility, and cannot occur
// before one of the explicit checks fires). The recorder, when given,
// receives every completed level.
Verdict walk(std::span<const Rule> rv, std::vector<CompressedTreeLevel>* recorder) {
    const std::size_t n = rv.size();
    assert(n >= 1);

    // Degenerate single cell: both neighbors are null, so only RMTs 0 and
    // 2 are effective and they must map to different states.
    if (n == 1) {
        if (recorder) recorder->push_back({0, {RmtSet{0, 2}}});
        const unsigned code = rv[0].code();
        if (((code >> 0) & 1u) == ((code >> 2) & 1u)) {
            return reject(1, RmtSet{0, 2}.mask(), WitnessReason::last_cell_collision);
        }
        return {true, std::nullopt};
    }

    if (recorder) recorder->push_back({0, {first_cell_rmts}});

    // Rule 1 splits the root's effective RMTs {0,1,2,3}.
    const unsigned first = rv[0].code() & 0x0Fu;
    if (std::popcount(first) != 2) {
        return reject(1, first_cell_rmts.mask(), WitnessReason::first_cell_imbalance);
    }

    unsigned sets[6];
    sets[0] = first ^ 0x0Fu;  // RMTs mapped to 0
    sets[1] = first;          // RMTs mapped to 1
    std::size_t count = 2;

    for (std::size_t i = 1; i + 1 < n; ++i) {
        const unsigned code = rv[i].code();
        unsigned next[6];
        std::size_t next_count = 0;

        for (std::size_t j = 0; j < count; ++j) {
            const unsigned node = successor_mask[sets[j]];
            const unsigned ones = node & code;
            if (std::popcount(ones) != 2) {
                return reject(i + 1, node, WitnessReason::unbalanced_split);
            }
            for (unsigned side : {node & ~code, ones}) {
                const unsigned norm = normalize_mask(side);
                if (std::popcount(norm) == 1) {
                    return reject(i + 1, norm, WitnessReason::singleton_after_normalization);
                }
                bool seen = false;
                for (std::size_t k = 0; k < next_count; ++k) {
                    if (next[k] == norm) {
                        seen = true;
                        break;
                    }
                }
                if (!seen) next[next_count++] = norm;
            }
        }

        if (next_count > 4) {
            // A still-viable level never holds more than four unique nodes.
            throw std::logic_error("identify_reversible: interior node bound exceeded");
        }

        count = next_count;
        for (std::size_t k = 0; k < count; ++k) sets[k] = next[k];

        if (recorder) {
            CompressedTreeLevel level{i, {}};
            for (std::size_t k = 0; k < count; ++k) {
                level.nodes.push_back(RmtSet::from_mask(sets[k]));
            }
            recorder->push_back(std::move(level));
        }
    }

    // The last rule sees only even RMTs; within each node the two
    // effective RMTs must receive distinct next states.
    const unsigned last = rv[n - 1].code();
    for (std::size_t j = 0; j < count; ++j) {
        const unsigned evens = successor_mask[sets[j]] & even_rmts_mask;
        assert(std::popcount(evens) == 2);
        if (std::popcount(evens & last) != 1) {
            return reject(n, evens, WitnessReason::last_cell_collision);
        }
    }

    return {true, std::nullopt};
}

}  // namespace

std::string_view to_string(WitnessReason reason) {
    switch (reason) {
        case WitnessReason::first_cell_imbalance: return "first-cell-imbalance";
        case WitnessReason::unbalanced_split: return "unbalanced-split";
        case WitnessReason::singleton_after_normalization: return "singleton-after-normalization";
        case WitnessReason::last_cell_collision: return "last-cell-collision";
    }
    return "unknown";
}

std::pair<RmtSet, RmtSet> split_node(RmtSet node, Rule rule) {
    const unsigned successors = successor_mask[normalize_mask(node.mask())];
    return {RmtSet::from_mask(successors & ~rule.code() & 0xFFu),
            RmtSet::from_mask(successors & rule.code())};
}

Verdict identify_reversible(const RuleVector& rv) {
    return walk(rv.rules(), nullptr);
}

Verdict identify_reversible(std::span<const Rule> rules) {
    return walk(rules, nullptr);
}

std::vector<CompressedTreeLevel> compressed_tree(const RuleVector& rv) {
    std::vector<CompressedTreeLevel> levels;
    walk(rv.rules(), &levels);
    return levels;
}

}  // namespace revca
