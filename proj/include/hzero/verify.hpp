#pragma once

// Oracle suites comparing the constructive side against brute force at a
// single n. Each check records a name, an outcome and a short detail.

#include <string>
#include <vector>

namespace hzero {

enum class Suite { all, classes, hooks, iprod, center };

Suite parse_suite(std::string_view text);
std::string to_string(Suite suite);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    int n = 0;
    std::vector<Check> checks;
    std::vector<std::string> skipped; // suites left out by the size bound

    bool ok() const;
    void add(std::string name, bool passed, std::string detail = {});
};

VerifyReport verify(int n, Suite suite, bool force = false);

} // namespace hzero
