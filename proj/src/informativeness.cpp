#include "seedcast/informativeness.hpp"

namespace seedcast {

std::string to_string(Relation r) {
    switch (r) {
        case Relation::kFasterEq: return "FASTER_EQ";
        case Relation::kSlowerEq: return "SLOWER_EQ";
        case Relation::kEqual: return "EQUAL";
        case Relation::kIncomparable: return "INCOMPARABLE";
    }
    return "INCOMPARABLE";
}

OrderingResult diffusion_compare(const InformationStructure& a, const InformationStructure& b) {
    if (a.agent_count() != b.agent_count()) throw SizeMismatch("structures have different agent counts");
    auto da = depth_vector(a);
    auto db = depth_vector(b);
    // Smaller depth = closer to the root = faster; encode as posterior pairs
    // with a shared ceiling so the generic sorted-dominance decision applies.
    std::vector<std::pair<int, int>> ea, eb;
    ea.reserve(da.size());
    eb.reserve(db.size());
    for (int d : da) ea.emplace_back(d, 0);
    for (int d : db) eb.emplace_back(d, 0);
    return detail::compare_experiments(std::move(ea), std::move(eb));
}

}  // namespace seedcast
