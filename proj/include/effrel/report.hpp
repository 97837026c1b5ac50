#pragma once

#include <string>
#include <vector>

namespace effrel {

struct LawCheck {
    std::string law;
    bool pass = false;
    std::string witness;  // empty when passing
};

struct Report {
    std::vector<LawCheck> checks;

    void add(std::string law, bool pass, std::string witness = "") {
        checks.push_back({std::move(law), pass, std::move(witness)});
    }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const LawCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

}  // namespace effrel
