#pragma once

#include <string>
#include <vector>

namespace corings {

// Accumulated axiom violations; empty means valid.  Each issue carries the
// failing axiom name and the basis indices / residual that witness it.
struct CheckReport {
    std::vector<std::string> issues;

    bool ok() const { return issues.empty(); }
    void fail(std::string s) { issues.push_back(std::move(s)); }
    void merge(const CheckReport& o) { issues.insert(issues.end(), o.issues.begin(), o.issues.end()); }

    std::string str() const {
        if (ok()) return "ok";
        std::string s;
        for (const auto& i : issues) {
            if (!s.empty()) s += "; ";
            s += i;
        }
        return s;
    }
};

} // namespace corings
