#include "revca/automaton.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

namespace revca {

namespace {

std::size_t word_count(std::size_t n) {
    return (n + 63) / 64;
}

}  // namespace

CaState::CaState(std::size_t n) : n_(n), words_(word_count(n), 0) {
    if (n == 0) throw std::invalid_argument("CaState: cell count must be at least 1");
}

CaState CaState::from_string(std::string_view text) {
    CaState s(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            s.set(i, true);
        } else if (text[i] != '0') {
            throw std::invalid_argument("CaState: state strings contain only '0' and '1'");
        }
    }
    return s;
}

CaState CaState::from_index(std::size_t n, std::uint64_t index) {
    assert(n <= 64);
    CaState s(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.set(i, (index >> (n - 1 - i)) & 1u);
    }
    return s;
}

std::uint64_t CaState::to_index() const {
    assert(n_ <= 64);
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        index = (index << 1) | static_cast<std::uint64_t>(get(i));
    }
    return index;
}

std::string CaState::to_string() const {
    std::string out(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
        if (get(i)) out[i] = '1';
    }
    return out;
}

RuleVector::RuleVector(std::vector<Rule> rules) : rules_(std::move(rules)) {
    if (rules_.empty()) throw std::invalid_argument("RuleVector: needs at least one rule");
}

RuleVector RuleVector::parse(std::string_view text) {
    std::vector<Rule> rules;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view field = text.substr(pos, comma - pos);

        while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
        while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
        if (field.empty()) {
            throw std::invalid_argument("RuleVector: empty rule entry");
        }

        unsigned value = 0;
        for (char c : field) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("RuleVector: rule entries are decimal integers");
            }
            value = value * 10 + static_cast<unsigned>(c - '0');
            if (value > 255u) {
                throw std::invalid_argument("RuleVector: rule codes lie in [0, 255]");
            }
        }
        rules.push_back(Rule(value));

        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return RuleVector(std::move(rules));
}

std::string RuleVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rules_[i].code());
    }
    return out;
}

RuleVector uniform(Rule r, std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform: cell count must be at least 1");
    return RuleVector(std::vector<Rule>(n, r));
}

CaState next_state(const RuleVector& rv, const CaState& s) {
    const std::size_t n = s.size();
    if (rv.size() != n) {
        throw std::invalid_argument("next_state: rule vector and state length differ");
    }
    CaState out(n);
    // The neighborhood window of cell i+1 is the window of cell i shifted
    // left by one with the next state bit (or the null boundary) shifted in.
    unsigned window = s.get(0) ? 2u : 0u;
    if (n > 1 && s.get(1)) window |= 1u;
    for (std::size_t i = 0; i < n; ++i) {
        out.set(i, rmt_value(rv[i], Rmt(static_cast<int>(window))));
        const bool incoming = (i + 2 < n) && s.get(i + 2);
        window = ((window << 1) | (incoming ? 1u : 0u)) & 7u;
    }
    return out;
}

std::vector<CaState> evolve(const RuleVector& rv, const CaState& s0, std::size_t steps) {
    std::vector<CaState> trajectory;
    trajectory.reserve(steps + 1);
    trajectory.push_back(s0);
    for (std::size_t t = 0; t < steps; ++t) {
        trajectory.push_back(next_state(rv, trajectory.back()));
    }
    return trajectory;
}

std::ostream& operator<<(std::ostream& os, const CaState& s) {
    return os << s.to_string();
}

std::ostream& operator<<(std::ostream& os, const RuleVector& rv) {
    return os << rv.to_string();
}

}  // namespace revca
