#include "seedcast/outcome_space.hpp"

namespace seedcast {

std::string signal_label(uint32_t mask) {
    if (mask == 0) return "n";
    std::string out = "y:";
    bool first = true;
    for (int s = 0; s < 32; ++s) {
        if (mask & (uint32_t{1} << s)) {
            if (!first) out += ",";
            out += std::to_string(s);
            first = false;
        }
    }
    return out;
}

}  // namespace seedcast
