#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>

namespace revca {

// An elementary CA rule: the 8-bit truth table of one cell's next-state
// function. Bit k of `code` is the next state produced when the
// (left, self, right) neighborhood reads as the 3-bit value k, i.e. the
// rule min term (RMT) k = 4*left + 2*self + right. Under this convention
// the decimal value of the code is the conventional rule name (90, 150, ...).
class Rule {
public:
    constexpr Rule() = default;
    constexpr explicit Rule(unsigned code) : code_(static_cast<std::uint8_t>(code)) {
        assert(code <= 255u);
    }

    constexpr unsigned code() const { return code_; }

    friend constexpr auto operator<=>(Rule, Rule) = default;

private:
    std::uint8_t code_ = 0;
};

// Index of a rule min term: the 3-bit neighborhood value, 0..7.
class Rmt {
public:
    constexpr explicit Rmt(int value) : value_(value) { assert(value >= 0 && value < 8); }

    constexpr int value() const { return value_; }

    friend constexpr auto operator<=>(Rmt, Rmt) = default;

private:
    int value_ = 0;
};

// A subset of the 8 RMTs, stored as an 8-bit mask.
class RmtSet {
public:
    constexpr RmtSet() = default;
    constexpr RmtSet(std::initializer_list<int> rmts) {
        for (int k : rmts) {
            assert(k >= 0 && k < 8);
            mask_ |= static_cast<std::uint8_t>(1u << k);
        }
    }

    static constexpr RmtSet from_mask(unsigned mask) {
        assert(mask <= 0xFFu);
        RmtSet s;
        s.mask_ = static_cast<std::uint8_t>(mask);
        return s;
    }

    constexpr unsigned mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool contains(Rmt k) const { return (mask_ >> k.value()) & 1u; }

    constexpr void insert(Rmt k) { mask_ |= static_cast<std::uint8_t>(1u << k.value()); }

    // Iterates set members in ascending RMT order.
    class iterator {
    public:
        constexpr explicit iterator(unsigned remaining) : remaining_(remaining) {}
        constexpr Rmt operator*() const { return Rmt(std::countr_zero(remaining_)); }
        constexpr iterator& operator++() {
            remaining_ &= remaining_ - 1;
            return *this;
        }
        friend constexpr bool operator==(iterator, iterator) = default;

    private:
        unsigned remaining_;
    };

    constexpr iterator begin() const { return iterator(mask_); }
    constexpr iterator end() const { return iterator(0); }

    friend constexpr auto operator<=>(RmtSet, RmtSet) = default;

private:
    std::uint8_t mask_ = 0;
};

// Effective RMTs of the boundary cells of a null-boundary CA: the first
// cell never sees a live left neighbor, the last never a live right one.
inline constexpr RmtSet first_cell_rmts{0, 1, 2, 3};
inline constexpr RmtSet last_cell_rmts{0, 2, 4, 6};

constexpr bool rmt_value(Rule r, Rmt k) {
    return (r.code() >> k.value()) & 1u;
}

// Exactly four 1s among the eight next-state bits.
constexpr bool is_balanced(Rule r) {
    return std::popcount(r.code()) == 4;
}

constexpr Rule complement_rule(Rule r) {
    return Rule(255u - r.code());
}

// The 14 rules expressible with XOR/XNOR logic only.
constexpr bool is_linear_additive(Rule r) {
    constexpr unsigned codes[] = {15, 51, 60, 85, 90, 102, 105, 150, 153, 165, 170, 195, 204, 240};
    for (unsigned c : codes) {
        if (r.code() == c) return true;
    }
    return false;
}

// The two RMTs of the next cell that can follow RMT k of the current cell
// while a state is scanned left to right: the neighborhood window shifts
// right by one bit, so k maps to 2k mod 8 and (2k+1) mod 8.
constexpr std::pair<Rmt, Rmt> next_rmts(Rmt k) {
    return {Rmt((2 * k.value()) % 8), Rmt((2 * k.value() + 1) % 8)};
}

// RMTs k and k+4 produce the same successor pair; the canonical
// representative is k mod 4.
constexpr Rmt equivalent_rmt(Rmt k) {
    return Rmt(k.value() % 4);
}

// RMTs 2j and 2j+1 are produced together by the same parent RMT.
constexpr Rmt sibling_rmt(Rmt k) {
    return Rmt(k.value() ^ 1);
}

// True iff exactly half the RMTs in `mask` carry next-state 1.
// Throws std::invalid_argument when the mask has odd size.
bool is_balanced_on(Rule r, RmtSet mask);

// A rule that can appear in some reversible rule vector. A rule is ruled
// out when it is unbalanced, or when one of the four RMT quadruples
// {0,2,3,4}, {0,4,6,7}, {0,1,2,6}, {0,1,3,7} carries a single value: any
// of those agreements forces a state with two predecessors regardless of
// the rest of the vector. 62 of the 256 rules survive.
constexpr bool is_reversible_rule(Rule r) {
    if (!is_balanced(r)) return false;
    constexpr unsigned quadruples[] = {0x1Du, 0xD1u, 0x47u, 0x8Bu};
    for (unsigned q : quadruples) {
        const unsigned bits = r.code() & q;
        if (bits == 0u || bits == q) return false;
    }
    return true;
}

std::string to_string(RmtSet s);

std::ostream& operator<<(std::ostream& os, Rule r);
std::ostream& operator<<(std::ostream& os, RmtSet s);

}  // namespace revca
