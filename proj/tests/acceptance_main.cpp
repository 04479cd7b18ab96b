#include <CLI11.hpp>
#include <cstdio>

#include "cpconv/acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    cpconv::AcceptanceOptions options;
    app.add_flag("--quick", options.quick, "Reduced ranges");
    app.add_option("--jobs", options.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--seed", options.seed, "Seed for random polynomials");
    CLI11_PARSE(app, argc, argv);

    int failures = 0;
    cpconv::run_acceptance(options, [&](const cpconv::CriterionResult& r) {
        std::printf("%s %2d %s: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str());
        std::fflush(stdout);
        failures += r.pass ? 0 : 1;
    });
    return failures == 0 ? 0 : 1;
}
