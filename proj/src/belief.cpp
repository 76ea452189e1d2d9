#include "seedcast/belief.hpp"

namespace seedcast {

std::string to_string(CommonBeliefLabel label) {
    switch (label) {
        case CommonBeliefLabel::kWholeSpace: return "WHOLE_SPACE";
        case CommonBeliefLabel::kAllInformed: return "YSTAR";
        case CommonBeliefLabel::kEmpty: return "EMPTY";
        case CommonBeliefLabel::kOther: return "OTHER";
    }
    return "OTHER";
}

}  // namespace seedcast
