// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <iostream>

#include "bgg/selftest.hpp"

int main() {
    bgg::SelfTestReport report = bgg::run_selftest();
    std::cout << report.to_string();
    return report.all_pass() ? 0 : 1;
}
