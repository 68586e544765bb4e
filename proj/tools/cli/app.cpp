#include "app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ios>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cvtele/errors.hpp>

#include "commands.hpp"

namespace cvtele::cli {

namespace {

constexpr const char* kOutDirVariable = "CVTELE_OUT_DIR";

// Relative paths land under $CVTELE_OUT_DIR when it is set.
std::filesystem::path resolve(const std::string& path) {
    std::filesystem::path p(path);
    const char* base = std::getenv(kOutDirVariable);
    if (p.is_relative() && base && *base) return std::filesystem::path(base) / p;
    return p;
}

template <class F>
int with_output(const std::string& path, std::ostream& out, F&& body) {
    if (path.empty()) return body(out);
    const auto target = resolve(path);
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    std::ofstream f(target);
    if (!f) throw std::ios_base::failure("cannot open " + target.string());
    const int code = body(f);
    f.close();
    if (!f) throw std::ios_base::failure("cannot write " + target.string());
    return code;
}

}  // namespace

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Continuous-variable teleportation through a thermally degraded two-mode squeezed channel"};
    app.name("cvtele");
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value file supplying defaults; flags override");

    std::string squeezing = "0", nbar = "0", time = "0", ntau, state = "vacuum", out_path, format = "csv";
    double extent = 6.0;
    std::size_t resolution = 256;
    app.add_option("--squeezing", squeezing, "channel squeezing s_qc: value or start:stop:steps")->capture_default_str();
    app.add_option("--nbar", nbar, "thermal photon number: value or start:stop:steps")->capture_default_str();
    app.add_option("--time", time, "renormalized time T: value or start:stop:steps")->capture_default_str();
    app.add_option("--ntau", ntau, "noise factor(s) overriding the channel: value or start:stop:steps");
    app.add_option("--state", state, "vacuum | fock:m | squeezed:s | coherent:re,im")->capture_default_str();
    app.add_option("--grid-extent", extent, "half-width L of the phase-space window")->capture_default_str();
    app.add_option("--grid-res", resolution, "points per axis")->capture_default_str();
    app.add_option("--out", out_path,
                   fmt::format("output file (tables) or directory (export); relative to ${} if set", kOutDirVariable));
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    auto* sweep = app.add_subcommand("noise-sweep", "tabulate n_tau, n_d, the teleport-direct gap and separability");
    auto* table = app.add_subcommand("fidelity-table", "closed-form vs grid fidelity against n_tau");
    auto* exporter = app.add_subcommand("teleport-export", "write input and teleported grids plus a summary");
    auto* check = app.add_subcommand("verify", "run the acceptance criteria and print a JSON report");
    std::string level = "quick", fault;
    std::vector<int> only;
    check->add_option("--level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
    check->add_option("--inject-fault", fault, "corrupt a component to exercise the checks")
        ->check(CLI::IsMember({"kernel"}));
    check->add_option("--only", only, "criterion ids to run")->check(CLI::Range(1, verify::kCriterionCount));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        SweepSpec spec;
        spec.squeezing = Range::parse(squeezing);
        spec.n_bar = Range::parse(nbar);
        spec.time = Range::parse(time);
        if (!ntau.empty()) spec.n_tau = Range::parse(ntau);
        spec.state = state;
        spec.grid = GridSpec{extent, resolution};
        spec.grid.validate();
        spec.format = format == "json" ? Format::Json : Format::Csv;

        if (*sweep) return with_output(out_path, out, [&](std::ostream& o) { return noise_sweep(spec, o); });
        if (*table) return with_output(out_path, out, [&](std::ostream& o) { return fidelity_table(spec, o); });
        if (*exporter) {
            const char* base = std::getenv(kOutDirVariable);
            const auto dir = out_path.empty() ? std::filesystem::path(base && *base ? base : "cvtele_out")
                                              : resolve(out_path);
            return teleport_export(spec, dir, err);
        }
        VerifyRequest request{level == "full" ? verify::Level::Full : verify::Level::Quick, fault == "kernel", only};
        return with_output(out_path, out, [&](std::ostream& o) { return run_verify(request, o, err); });
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const AccuracyError& e) {
        err << "accuracy error: " << e.what() << '\n';
        return kExitAccuracy;
    } catch (const std::ios_base::failure& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        // ConfigurationError, UnsupportedDeconvolution
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace cvtele::cli
