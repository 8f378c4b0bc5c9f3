#pragma once

#include <array>
#include <span>
#include <utility>

#include "revca/classes.hpp"
#include "revca/rule.hpp"

// Published reference data for the reversible-rule taxonomy. The library
// derives all of it from the node-set semantics; these copies exist only
// so the derivation can be cross-checked, and any disagreement is
// surfaced as a named diagnostic instead of silently inherited.
namespace revca::reference {

inline constexpr std::array<unsigned, 62> reversible_rules = {
    15,  23,  27,  30,  39,  43,  45,  51,  53,  54,  57,  58,  60,  75,  77,  78,
    83,  85,  86,  89,  90,  92,  99,  101, 102, 105, 106, 108, 113, 114, 120, 135,
    141, 142, 147, 149, 150, 153, 154, 156, 163, 165, 166, 169, 170, 172, 177, 178,
    180, 195, 197, 198, 201, 202, 204, 210, 212, 216, 225, 228, 232, 240};

inline constexpr std::array<unsigned, 8> balanced_irreversible_rules = {29,  46,  71,  116,
                                                                        139, 184, 209, 226};

inline constexpr std::array<unsigned, 36> class_i_rules = {
    51,  53,  54,  57,  58,  60,  83,  85,  86,  89,  90,  92,
    99,  101, 102, 105, 106, 108, 147, 149, 150, 153, 154, 156,
    163, 165, 166, 169, 170, 172, 195, 197, 198, 201, 202, 204};

inline constexpr std::array<unsigned, 16> class_ii_rules = {
    15, 30, 45, 60, 75, 90, 105, 120, 135, 150, 165, 180, 195, 210, 225, 240};

inline constexpr std::array<unsigned, 36> class_iii_rules = {
    15,  23,  27,  39,  43,  51,  77,  78,  85,  86,  89,  90,
    101, 102, 105, 106, 113, 114, 141, 142, 149, 150, 153, 154,
    165, 166, 169, 170, 177, 178, 204, 212, 216, 228, 232, 240};

inline constexpr std::array<unsigned, 6> class_iv_rules = {60, 90, 105, 150, 165, 195};

inline constexpr std::array<unsigned, 18> class_v_rules = {
    51, 85, 86, 89, 90, 101, 102, 105, 106, 149, 150, 153, 154, 165, 166, 169, 170, 204};

inline constexpr std::array<unsigned, 6> class_vi_rules = {15, 90, 105, 150, 165, 240};

inline constexpr std::span<const unsigned> class_rules(RuleClass c) {
    switch (c) {
        case RuleClass::I: return class_i_rules;
        case RuleClass::II: return class_ii_rules;
        case RuleClass::III: return class_iii_rules;
        case RuleClass::IV: return class_iv_rules;
        case RuleClass::V: return class_v_rules;
        case RuleClass::VI: return class_vi_rules;
    }
    return {};
}

// One row of the class-transition table: cells of class `from` configured
// with any of `rules` put the next cell in class `to`.
struct TransitionRow {
    RuleClass from;
    RuleClass to;
    std::span<const unsigned> rules;
};

namespace detail {
inline constexpr std::array<unsigned, 4> i_to_i = {51, 60, 195, 204};
inline constexpr std::array<unsigned, 4> i_to_ii = {85, 90, 165, 170};
inline constexpr std::array<unsigned, 4> i_to_iii = {102, 105, 150, 153};
inline constexpr std::array<unsigned, 8> i_to_iv = {53, 58, 83, 92, 163, 172, 197, 202};
inline constexpr std::array<unsigned, 8> i_to_v = {54, 57, 99, 108, 147, 156, 198, 201};
inline constexpr std::array<unsigned, 8> i_to_vi = {86, 89, 101, 106, 149, 154, 166, 169};
inline constexpr std::array<unsigned, 16> ii_to_i = {15,  30,  45,  60,  75,  90,  105, 120,
                                                     135, 150, 165, 180, 195, 210, 225, 240};
inline constexpr std::array<unsigned, 4> iii_to_i = {15, 51, 204, 240};
inline constexpr std::array<unsigned, 4> iii_to_ii = {85, 105, 150, 170};
inline constexpr std::array<unsigned, 4> iii_to_iii = {90, 102, 153, 165};
inline constexpr std::array<unsigned, 8> iii_to_iv = {23, 43, 77, 113, 142, 178, 212, 232};
inline constexpr std::array<unsigned, 8> iii_to_v = {27, 39, 78, 114, 141, 177, 216, 228};
inline constexpr std::array<unsigned, 8> iii_to_vi = {86, 89, 101, 106, 149, 154, 166, 169};
inline constexpr std::array<unsigned, 2> iv_to_i = {60, 195};
inline constexpr std::array<unsigned, 2> iv_to_iv = {90, 165};
inline constexpr std::array<unsigned, 2> iv_to_v = {105, 150};
inline constexpr std::array<unsigned, 2> v_to_i = {51, 204};
inline constexpr std::array<unsigned, 2> v_to_ii = {85, 170};
inline constexpr std::array<unsigned, 2> v_to_iii = {102, 153};
inline constexpr std::array<unsigned, 12> v_to_vi = {86,  89,  90,  101, 105, 106,
                                                     149, 150, 154, 165, 166, 169};
inline constexpr std::array<unsigned, 2> vi_to_i = {15, 240};
inline constexpr std::array<unsigned, 2> vi_to_iv = {105, 150};
inline constexpr std::array<unsigned, 2> vi_to_v = {90, 165};
}  // namespace detail

inline constexpr std::array<TransitionRow, 23> class_transitions = {{
    {RuleClass::I, RuleClass::I, detail::i_to_i},
    {RuleClass::I, RuleClass::II, detail::i_to_ii},
    {RuleClass::I, RuleClass::III, detail::i_to_iii},
    {RuleClass::I, RuleClass::IV, detail::i_to_iv},
    {RuleClass::I, RuleClass::V, detail::i_to_v},
    {RuleClass::I, RuleClass::VI, detail::i_to_vi},
    {RuleClass::II, RuleClass::I, detail::ii_to_i},
    {RuleClass::III, RuleClass::I, detail::iii_to_i},
    {RuleClass::III, RuleClass::II, detail::iii_to_ii},
    {RuleClass::III, RuleClass::III, detail::iii_to_iii},
    {RuleClass::III, RuleClass::IV, detail::iii_to_iv},
    {RuleClass::III, RuleClass::V, detail::iii_to_v},
    {RuleClass::III, RuleClass::VI, detail::iii_to_vi},
    {RuleClass::IV, RuleClass::I, detail::iv_to_i},
    {RuleClass::IV, RuleClass::IV, detail::iv_to_iv},
    {RuleClass::IV, RuleClass::V, detail::iv_to_v},
    {RuleClass::V, RuleClass::I, detail::v_to_i},
    {RuleClass::V, RuleClass::II, detail::v_to_ii},
    {RuleClass::V, RuleClass::III, detail::v_to_iii},
    {RuleClass::V, RuleClass::VI, detail::v_to_vi},
    {RuleClass::VI, RuleClass::I, detail::vi_to_i},
    {RuleClass::VI, RuleClass::IV, detail::vi_to_iv},
    {RuleClass::VI, RuleClass::V, detail::vi_to_v},
}};

inline constexpr std::array<std::pair<unsigned, RuleClass>, 6> first_rules = {{
    {3, RuleClass::I},
    {5, RuleClass::II},
    {6, RuleClass::III},
    {9, RuleClass::III},
    {10, RuleClass::II},
    {12, RuleClass::I},
}};

inline constexpr std::array<unsigned, 4> last_rules_i = {17, 20, 65, 68};
inline constexpr std::array<unsigned, 4> last_rules_ii = {5, 20, 65, 80};
inline constexpr std::array<unsigned, 4> last_rules_iii = {5, 17, 68, 80};
inline constexpr std::array<unsigned, 2> last_rules_iv = {20, 65};
inline constexpr std::array<unsigned, 2> last_rules_v = {17, 68};
inline constexpr std::array<unsigned, 2> last_rules_vi = {5, 80};

inline constexpr std::span<const unsigned> last_rules(RuleClass c) {
    switch (c) {
        case RuleClass::I: return last_rules_i;
        case RuleClass::II: return last_rules_ii;
        case RuleClass::III: return last_rules_iii;
        case RuleClass::IV: return last_rules_iv;
        case RuleClass::V: return last_rules_v;
        case RuleClass::VI: return last_rules_vi;
    }
    return {};
}

}  // namespace revca::reference
