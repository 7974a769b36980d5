#pragma once

#include <string>

#include "json.hpp"

namespace omvar {

// Verification outcome: {claim, status, witnesses}.
struct Report {
    std::string claim;
    bool pass = true;
    nlohmann::json witnesses = nlohmann::json::array();

    void fail(nlohmann::json witness) {
        pass = false;
        witnesses.push_back(std::move(witness));
    }
    void note(nlohmann::json witness) { witnesses.push_back(std::move(witness)); }

    nlohmann::json to_json() const {
        return {{"claim", claim},
                {"status", pass ? "pass" : "fail"},
                {"witnesses", witnesses}};
    }
};

} // namespace omvar
