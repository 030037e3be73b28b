#pragma once

#include "qsl21/chains.hpp"

namespace qsl21 {

struct RunConfig {
    cplx q{1.2, 0.0};
    cplx mu{0.3, 0.0};
    int omega = 1;
    int sites = 3;
    ToleranceConfig tol;
    std::string suite = "all";
};

struct Report {
    std::string suite;
    cplx q, mu;
    int omega = 1;
    unsigned seed = 0;
    std::string version;
    RelationReport checks;
    bool overall_pass = true; // informative checks never affect it

    void append(const RelationReport& r) {
        for (const auto& c : r) {
            checks.push_back(c);
            if (!c.informative && !c.pass) overall_pass = false;
        }
    }
    void append(const CheckReport& c) { append(RelationReport{c}); }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "algebra", "casimir", "coproduct", "braid", "ybe",
        "reflection", "chain", "twist", "tl", "all"};
    return names;
}

Report run_suite(const RunConfig& cfg);

} // namespace qsl21
