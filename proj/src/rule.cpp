#include "revca/rule.hpp"

#include <ostream>
#include <stdexcept>

namespace revca {

bool is_balanced_on(Rule r, RmtSet mask) {
    if (mask.size() % 2 != 0) {
        throw std::invalid_argument("is_balanced_on: mask size must be even, got " +
                                    std::to_string(mask.size()));
    }
    const int ones = std::popcount(r.code() & mask.mask());
    return 2 * ones == mask.size();
}

std::string to_string(RmtSet s) {
    std::string out = "{";
    bool first = true;
    for (Rmt k : s) {
        if (!first) out += ',';
        out += static_cast<char>('0' + k.value());
        first = false;
    }
    out += '}';
    return out;
}

std::ostream& operator<<(std::ostream& os, Rule r) {
    return os << r.code();
}

std::ostream& operator<<(std::ostream& os, RmtSet s) {
    return os << to_string(s);
}

}  // namespace revca
