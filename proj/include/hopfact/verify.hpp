#ifndef HOPFACT_VERIFY_HPP
#define HOPFACT_VERIFY_HPP

#include <string>
#include <vector>

namespace hopfact {

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail; // counterexample dump or measured value on failure
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    int dim = 2;
    int max_degree = 4;
    unsigned seed = 1;
};

// Known suites: hopf-axioms, homh-axioms, relations-outf2, inner-trivial,
// action-properties, class2, ef-defect, pbw, freegroup, schur-consistency,
// cross-pipeline, cyclic-words.  Throws std::invalid_argument on an unknown
// name.
VerifyReport run_suite(const std::string& name, const VerifyOptions& opt = {});
std::vector<std::string> suite_names();

} // namespace hopfact

#endif
