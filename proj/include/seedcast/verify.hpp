#pragma once

#include <string>
#include <vector>

#include "seedcast/belief.hpp"
#include "seedcast/info_structure.hpp"
#include "seedcast/outcome_space.hpp"

namespace seedcast {

// p grid straddling both breakpoints by 1e-9 plus the breakpoints themselves
// and p = 1; values outside (0,1] are dropped.
std::vector<Rational> auto_p_grid(const CommonBeliefClassification<Rational>& classification);

struct VerifyResult {
    int structures_checked = 0;
    bool verified = true;
    std::string first_failure;

    void fail(const std::string& message) {
        if (verified) {
            verified = false;
            first_failure = message;
        }
    }
};

// Exact Theorem-1 check: on every structure, the common-belief event label and
// its probability at each grid p equal the closed-form classification, hence
// coincide across structures.
VerifyResult verify_irrelevance(const std::vector<InformationStructure>& structures,
                                const ModelParams<Rational>& params);

// Exact path-lemma check on one seeded forest: posterior closed forms and
// their monotonicity along every planner-to-leaf path, and the structure
// independence of P[Y* | G].
VerifyResult verify_path_lemmas(const InformationStructure& info, const OutcomeSpace<ExactBackend>& space,
                                const ModelParams<Rational>& params);

}  // namespace seedcast
