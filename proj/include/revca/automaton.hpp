#pragma once

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "revca/rule.hpp"

namespace revca {

// Configuration of an n-cell CA, cells numbered 1..n in the text form.
// The text form lists cell 1 first, so "0011" means cell 3 and cell 4
// are live. Bits are packed into 64-bit words internally.
class CaState {
public:
    explicit CaState(std::size_t n);

    // Parses an n-character binary string, cell 1 first.
    static CaState from_string(std::string_view text);

    // Builds the state whose cell-1-first binary expansion equals `index`
    // (cell 1 is the most significant bit). Requires n <= 64.
    static CaState from_index(std::size_t n, std::uint64_t index);

    std::size_t size() const { return n_; }

    bool get(std::size_t cell) const {
        assert(cell < n_);
        return (words_[cell >> 6] >> (cell & 63u)) & 1u;
    }

    void set(std::size_t cell, bool value) {
        assert(cell < n_);
        const std::uint64_t bit = std::uint64_t{1} << (cell & 63u);
        if (value) {
            words_[cell >> 6] |= bit;
        } else {
            words_[cell >> 6] &= ~bit;
        }
    }

    std::uint64_t to_index() const;  // requires n <= 64
    std::string to_string() const;

    friend bool operator==(const CaState&, const CaState&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// The per-cell rule assignment of a hybrid CA, cell 1 first.
class RuleVector {
public:
    explicit RuleVector(std::vector<Rule> rules);

    // Parses comma-separated decimal rule codes, e.g. "90,15,85,15".
    static RuleVector parse(std::string_view text);

    std::size_t size() const { return rules_.size(); }
    Rule operator[](std::size_t i) const { return rules_[i]; }
    const std::vector<Rule>& rules() const { return rules_; }

    std::string to_string() const;

    friend bool operator==(const RuleVector&, const RuleVector&) = default;

private:
    std::vector<Rule> rules_;
};

RuleVector uniform(Rule r, std::size_t n);

// One synchronous update under null boundary: the virtual neighbors beyond
// both ends read as 0. Throws std::invalid_argument on length mismatch.
CaState next_state(const RuleVector& rv, const CaState& s);

// [s0, next(s0), ..., next^steps(s0)], length steps + 1.
std::vector<CaState> evolve(const RuleVector& rv, const CaState& s0, std::size_t steps);

std::ostream& operator<<(std::ostream& os, const CaState& s);
std::ostream& operator<<(std::ostream& os, const RuleVector& rv);

}  // namespace revca
