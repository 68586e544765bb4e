#include "cvtele/grid_io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace cvtele {

namespace {

std::filesystem::path with_suffix(const std::filesystem::path& stem, const char* ext) {
    std::filesystem::path p = stem;
    p += ext;
    return p;
}

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream out(p);
    if (!out) throw std::ios_base::failure("cannot open " + p.string() + " for writing");
    return out;
}

}  // namespace

std::string format_number(double x) {
    if (x == 0.0) return "0";  // avoids "-0"
    return fmt::format("{:.12g}", x);
}

void write_grid(const WignerGrid& g, const std::filesystem::path& stem) {
    const auto csv_path = with_suffix(stem, ".csv");
    const auto json_path = with_suffix(stem, ".json");
    {
        auto out = open_out(csv_path);
        out << "alpha_r,alpha_i,value\n";
        const std::size_t n = g.resolution();
        for (std::size_t ir = 0; ir < n; ++ir) {
            for (std::size_t ii = 0; ii < n; ++ii) {
                out << format_number(g.spec().coordinate(ir)) << ',' << format_number(g.spec().coordinate(ii)) << ','
                    << format_number(g.at(ir, ii)) << '\n';
            }
        }
        if (!out) throw std::ios_base::failure("write failed: " + csv_path.string());
    }
    nlohmann::ordered_json header;
    header["sigma"] = g.sigma();
    header["extent"] = g.spec().extent;
    header["resolution"] = g.spec().resolution;
    header["pure_origin"] = g.pure_origin();
    auto out = open_out(json_path);
    out << header.dump(2) << '\n';
    if (!out) throw std::ios_base::failure("write failed: " + json_path.string());
}

WignerGrid read_grid(const std::filesystem::path& stem) {
    const auto csv_path = with_suffix(stem, ".csv");
    const auto json_path = with_suffix(stem, ".json");
    std::ifstream hin(json_path);
    if (!hin) throw std::ios_base::failure("cannot open " + json_path.string());
    const auto header = nlohmann::json::parse(hin);
    GridSpec spec{header.at("extent").get<double>(), header.at("resolution").get<std::size_t>()};
    WignerGrid g(spec, header.at("sigma").get<double>(), header.value("pure_origin", false));

    std::ifstream in(csv_path);
    if (!in) throw std::ios_base::failure("cannot open " + csv_path.string());
    std::string line;
    std::getline(in, line);
    if (line != "alpha_r,alpha_i,value") throw std::runtime_error("unexpected CSV header in " + csv_path.string());
    const std::size_t n = spec.resolution;
    for (std::size_t k = 0; k < n * n; ++k) {
        if (!std::getline(in, line)) throw std::runtime_error("truncated grid CSV " + csv_path.string());
        std::istringstream row(line);
        std::string field;
        for (int col = 0; col < 3; ++col) {
            if (!std::getline(row, field, ',')) throw std::runtime_error("malformed CSV row: " + line);
        }
        g.values()[k] = std::stod(field);
    }
    return g;
}

}  // namespace cvtele
