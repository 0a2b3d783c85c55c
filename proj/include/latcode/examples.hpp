#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latcode/construction.hpp"

namespace latcode {

/// Built-in example constructions with their published statistics.
struct PaperExample {
    std::string name;
    std::string description;
    long D = 0;
    long p = 0;
    int N = 0;
    // generator rows as (s, t) pairs, row-major over the full (I|A) matrix
    std::vector<std::vector<std::pair<long, long>>> generator;
    std::string note;  // transcription remarks, if any

    // published / derived expectations
    std::optional<std::int64_t> mu;
    std::optional<std::int64_t> kissing;
    std::optional<long> level;                          // d-modular
    std::optional<bool> unimodular;
    std::optional<bool> even;
    std::vector<std::int64_t> theta;                    // prefix from m = 0
    std::optional<double> chi;
};

const std::vector<PaperExample>& paper_examples();

const PaperExample& find_example(const std::string& name);

ConstructionInput example_input(const PaperExample& ex);

}  // namespace latcode
