#include <iostream>

#include <CLI11.hpp>

#include "nullify/acceptance.hpp"

int main(int argc, char **argv) {
    CLI::App app{"acceptance criteria, one line each"};
    nullify::AcceptanceOptions opt;
    app.add_option("--seed", opt.seed, "seed for the random instances");
    app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--only", opt.only, "criterion ids to run")->check(CLI::Range(1, nullify::criterion_count()));
    CLI11_PARSE(app, argc, argv);

    int failed = 0;
    nullify::run_acceptance(opt, [&](const nullify::CriterionResult &r) {
        std::cout << nullify::format_line(r) << std::endl;
        failed += !r.pass;
    });
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << '\n';
    return failed ? 1 : 0;
}
