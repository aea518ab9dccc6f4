#include <cstdio>
#include <iostream>

#include "z2norm/acceptance.hpp"

int main(int argc, char** argv) {
    std::set<std::string> only;
    for (int i = 1; i < argc; ++i) only.insert(argv[i]);
    bool ok = true;
    for (const auto& r : z2norm::runAcceptance(only)) {
        std::printf("%s %2d %-12s %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
                    r.seconds);
        for (const auto& f : r.failures) std::printf("     %s\n", f.c_str());
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}
