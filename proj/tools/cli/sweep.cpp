#include "sweep.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

namespace cvtele::cli {

namespace {

double parse_double(const std::string& s, const std::string& whole) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw UsageError(fmt::format("bad number '{}' in range '{}'", s, whole));
    }
    return v;
}

}  // namespace

Range Range::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (true) {
        const auto colon = text.find(':', begin);
        parts.push_back(text.substr(begin, colon - begin));
        if (colon == std::string::npos) break;
        begin = colon + 1;
    }
    if (parts.size() == 1) {
        const double v = parse_double(parts[0], text);
        return {v, v, 1};
    }
    if (parts.size() != 3) throw UsageError(fmt::format("range '{}' is not 'value' or 'start:stop:steps'", text));
    const double steps = parse_double(parts[2], text);
    if (steps < 1 || steps != std::floor(steps)) throw UsageError(fmt::format("range '{}' needs steps >= 1", text));
    return {parse_double(parts[0], text), parse_double(parts[1], text), static_cast<int>(steps)};
}

std::vector<double> Range::values() const {
    if (steps < 1) throw UsageError("empty range");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        out.push_back(start);
        return out;
    }
    for (int k = 0; k < steps; ++k) out.push_back(start + (stop - start) * k / (steps - 1));
    out.back() = stop;
    return out;
}

}  // namespace cvtele::cli
