#pragma once

#include <string>
#include <vector>

namespace segkit {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string object;
    std::string q0;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

} // namespace segkit
