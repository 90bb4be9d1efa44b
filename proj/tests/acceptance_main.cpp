#include <cstring>
#include <iostream>

#include "hanoi/acceptance.hpp"

int main(int argc, char** argv) {
    hanoi::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) opts.quick = true;
        else if (std::strcmp(argv[i], "--data-dir") == 0 && i + 1 < argc)
            opts.data_dir = argv[++i];
    }
    auto results = hanoi::run_acceptance(opts, std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << "\n";
    return all ? 0 : 1;
}
