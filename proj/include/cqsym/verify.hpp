#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cqsym {

struct VerifyResult {
    bool ok = false;
    long long checks = 0;      // individual assertions evaluated
    std::string counterexample;  // empty when ok
};

struct VerifySuite {
    std::string name;
    std::string what;
    int default_max;  // the size bound from the module contract
    int hard_max;     // beyond this the request is rejected
    std::function<VerifyResult(int)> run;
};

const std::vector<VerifySuite>& verify_suites();

// max = 0 selects the suite's default bound; above hard_max is an error.
VerifyResult run_verify_suite(const std::string& name, int max);

}  // namespace cqsym
