#include "seedcast/game.hpp"

namespace seedcast {

std::string to_string(AdoptionCase c) {
    switch (c) {
        case AdoptionCase::kAlwaysAdopt: return "ALWAYS_ADOPT";
        case AdoptionCase::kAdoptIfInformed: return "ADOPT_IF_INFORMED";
        case AdoptionCase::kNeverAdopt: return "NEVER_ADOPT";
    }
    return "NEVER_ADOPT";
}

}  // namespace seedcast
