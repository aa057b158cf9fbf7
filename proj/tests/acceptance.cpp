// One line per acceptance criterion; exits nonzero when any criterion fails.
#include <iostream>

#include <meshpat/battery.hpp>

int main()
{
    bool all = true;
    for (const auto &c : meshpat::run_battery()) {
        meshpat::print_criterion(std::cout, c);
        all = all && c.passed;
    }
    return all ? 0 : 1;
}
