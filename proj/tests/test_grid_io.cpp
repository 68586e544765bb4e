#include "cvtele/grid_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "cvtele/phase_space.hpp"
#include "cvtele/states.hpp"

using namespace cvtele;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("cvtele_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(format_number, twelve_significant_digits) {
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(1.0), "1");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_number(-2.5e-20), "-2.5e-20");
    EXPECT_EQ(format_number(123456789.123456789), "123456789.123");
}

TEST(grid_io, round_trip) {
    const auto dir = scratch_dir("round_trip");
    const WignerGrid g = convert_sigma(fock_wigner(1, GridSpec{4.0, 17}), -0.5);
    write_grid(g, dir / "g");
    ASSERT_TRUE(std::filesystem::exists(dir / "g.csv"));
    ASSERT_TRUE(std::filesystem::exists(dir / "g.json"));

    std::ifstream csv(dir / "g.csv");
    std::string header;
    std::getline(csv, header);
    EXPECT_EQ(header, "alpha_r,alpha_i,value");

    std::ifstream js(dir / "g.json");
    const auto meta = nlohmann::json::parse(js);
    EXPECT_EQ(meta.at("sigma").get<double>(), -0.5);
    EXPECT_EQ(meta.at("extent").get<double>(), 4.0);
    EXPECT_EQ(meta.at("resolution").get<int>(), 17);

    const WignerGrid back = read_grid(dir / "g");
    EXPECT_EQ(back.spec(), g.spec());
    EXPECT_EQ(back.sigma(), g.sigma());
    // Values are stored to 12 significant digits.
    EXPECT_LT(sup_norm_difference(back, g), 1e-11 * std::max(g.max_value(), -g.min_value()));
}

TEST(grid_io, pure_flag_survives) {
    const auto dir = scratch_dir("pure");
    write_grid(fock_wigner(0, GridSpec{3.0, 5}), dir / "v");
    EXPECT_TRUE(read_grid(dir / "v").pure_origin());
}

TEST(grid_io, missing_files) {
    EXPECT_ANY_THROW(read_grid(std::filesystem::temp_directory_path() / "cvtele_no_such_grid"));
}

TEST(grid_io, unwritable_target) {
    EXPECT_THROW(write_grid(fock_wigner(0, GridSpec{3.0, 5}), "/proc/cvtele_forbidden/g"), std::ios_base::failure);
}
