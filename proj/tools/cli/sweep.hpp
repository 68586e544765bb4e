#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <cvtele/grid.hpp>

namespace cvtele::cli {

// Thrown for malformed command lines; maps to exit status 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "v" or "start:stop:steps" (inclusive, evenly spaced; steps >= 1).
struct Range {
    double start = 0.0;
    double stop = 0.0;
    int steps = 1;

    static Range parse(const std::string& text);
    std::vector<double> values() const;
};

enum class Format { Csv, Json };

struct SweepSpec {
    Range squeezing;
    Range n_bar;
    Range time;
    std::optional<Range> n_tau;
    std::string state = "vacuum";
    GridSpec grid;
    Format format = Format::Csv;
};

}  // namespace cvtele::cli
