#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symcanon/field.hpp"

namespace symcanon::cli {

/// Settings shared by all subcommands. Precedence: flags > SYMCANON_* environment > config file.
struct Config {
    FieldSpec field = FieldSpec::prime(32003);
    std::uint64_t seed = 1;
    int degree_budget = 64;
    long pair_budget = 500000;
    int parallelism = 1;
    int verbosity = 0;
};

/// Exit codes: 0 success, 1 verification failure, 2 contract or parse error, 3 budget exhausted.
int run(int argc, char** argv);

}  // namespace symcanon::cli
