#include "isola/real.hpp"
#include "isola/verify.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    isola::VerifyOptions opt;
    opt.precision_bits = isola::precision_from_env(opt.precision_bits);
    isola::set_precision_bits(opt.precision_bits);
    if (argc > 1) {
        const isola::CriterionResult r = isola::run_criterion(std::atoi(argv[1]), opt);
        std::cout << isola::format_result(r) << std::endl;
        return r.pass ? 0 : 1;
    }
    int failed = 0;
    isola::run_acceptance(opt, [&](const isola::CriterionResult& r) {
        std::cout << isola::format_result(r) << std::endl;
        failed += r.pass ? 0 : 1;
    });
    std::cout << (11 - failed) << "/11 acceptance criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
