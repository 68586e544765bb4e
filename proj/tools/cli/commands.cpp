#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <variant>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <cvtele/channel.hpp>
#include <cvtele/errors.hpp>
#include <cvtele/fidelity.hpp>
#include <cvtele/grid_io.hpp>
#include <cvtele/nonclassicality.hpp>
#include <cvtele/numerics.hpp>
#include <cvtele/phase_space.hpp>
#include <cvtele/states.hpp>
#include <cvtele/teleport.hpp>

namespace cvtele::cli {

namespace {

using json = nlohmann::json;
using Cell = std::variant<double, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Same 12 significant digits in JSON as in CSV.
double rounded(double x) { return std::stod(format_number(x)); }

json number(double x) { return std::isfinite(x) ? json(rounded(x)) : json(nullptr); }

json optional_number(const std::optional<double>& x) { return x ? number(*x) : json(nullptr); }

void emit(const Table& t, Format format, std::ostream& out) {
    if (format == Format::Csv) {
        for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
        out << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out << ',';
                if (const bool* b = std::get_if<bool>(&row[c])) {
                    out << (*b ? "true" : "false");
                } else {
                    out << format_number(std::get<double>(row[c]));
                }
            }
            out << '\n';
        }
        return;
    }
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (const bool* b = std::get_if<bool>(&row[c])) {
                obj[t.columns[c]] = *b;
            } else {
                obj[t.columns[c]] = number(std::get<double>(row[c]));
            }
        }
        rows.push_back(std::move(obj));
    }
    out << json{{"columns", t.columns}, {"rows", rows}}.dump(2) << '\n';
}

std::vector<ChannelParams> channel_points(const SweepSpec& spec) {
    std::vector<ChannelParams> out;
    for (double s : spec.squeezing.values()) {
        for (double nb : spec.n_bar.values()) {
            for (double t : spec.time.values()) {
                ChannelParams p{s, nb, t};
                p.validate();
                out.push_back(p);
            }
        }
    }
    return out;
}

std::vector<double> noise_values(const SweepSpec& spec) {
    if (spec.n_tau) return spec.n_tau->values();
    std::vector<double> out;
    for (const auto& p : channel_points(spec)) out.push_back(noise_factor(p).value);
    return out;
}

json grid_summary(const WignerGrid& g) {
    const PhotonStats photons = photon_stats(g);
    const QuadratureStats quad = minimum_quadrature_variance(g);
    return {{"integral", number(grid_integrate(g))},
            {"min_value", number(g.min_value())},
            {"mean_photon_number", number(photons.mean)},
            {"photon_number_variance", number(photons.variance)},
            {"min_quadrature_variance", number(quad.variance)},
            {"min_quadrature_angle", number(quad.phi)}};
}

}  // namespace

int noise_sweep(const SweepSpec& spec, std::ostream& out) {
    Table t{{"s_qc", "n_bar", "T", "n_tau", "n_d", "gap", "separable"}, {}};
    for (const auto& p : channel_points(spec)) {
        t.rows.push_back({p.s_qc, p.n_bar, p.T, noise_factor(p).value, direct_noise(p.n_bar, p.T).value,
                          teleport_vs_direct_gap(p), is_separable(p)});
    }
    emit(t, spec.format, out);
    return kExitOk;
}

int fidelity_table(const SweepSpec& spec, std::ostream& out) {
    const InputState in = InputState::parse(spec.state);
    // The closed forms exist for undisplaced Fock and squeezed-vacuum inputs.
    if (in.displacement() != Complex{}) throw UsageError("fidelity-table needs --state fock:m or squeezed:s");
    const WignerGrid w_o = in.to_grid(spec.grid);
    Table t{{"n_tau", "F_closed", "F_grid", "abs_diff"}, {}};
    bool within = true;
    for (double n : noise_values(spec)) {
        const FidelityReport closed = in.kind() == InputState::Kind::Fock ? fock_fidelity(in.fock_number(), n)
                                                                          : squeezed_fidelity(in.squeezing(), n);
        const double grid = overlap_fidelity(w_o, teleport_state(w_o, n)).value;
        const double diff = std::abs(closed.value - grid);
        within = within && diff <= 1e-4;
        t.rows.push_back({n, closed.value, grid, diff});
    }
    emit(t, spec.format, out);
    return within ? kExitOk : kExitAccuracy;
}

int teleport_export(const SweepSpec& spec, const std::filesystem::path& dir, std::ostream& log) {
    const std::vector<double> noise = noise_values(spec);
    if (noise.size() != 1) throw UsageError("teleport-export needs a single n_tau or channel point");
    const double n = noise.front();
    const InputState in = InputState::parse(spec.state);
    const WignerGrid w_o = in.to_grid(spec.grid);
    const WignerGrid w_r = teleport_state(w_o, n);
    const WignerGrid q_r = convert_sigma(w_r, -1.0);
    const PhotonStats stats_o = photon_stats(w_o);
    const PhotonStats stats_r = photon_stats(w_r);
    const QuadratureStats quad_o = minimum_quadrature_variance(w_o);
    const QuadratureStats quad_r = minimum_quadrature_variance(w_r);
    // With no noise there is nothing to smooth the P function with.
    const std::optional<NegativityProbe> probe =
        n > 0.0 ? std::optional<NegativityProbe>(p_negativity_probe(w_o, n)) : std::nullopt;

    json teleported = grid_summary(w_r);
    teleported["q_min_value"] = number(q_r.min_value());
    json summary{
        {"state", in.label()},
        {"n_tau", number(n)},
        {"grid", {{"extent", number(spec.grid.extent)}, {"resolution", spec.grid.resolution}}},
        {"files", {{"input", "input"}, {"teleported", "teleported"}}},
        {"input", grid_summary(w_o)},
        {"teleported", teleported},
        {"thresholds",
         {{"sub_poisson", optional_number(sub_poisson_threshold(stats_o))},
          {"squeezing", optional_number(squeezing_threshold(std::max(0.0, quad_o.variance)))},
          {"p_positive", n > 0.0 && p_positive_after_teleport(n)},
          {"teleported_sub_poissonian", stats_r.variance < stats_r.mean},
          {"teleported_squeezed", quad_r.variance < 1.0}}},
        {"negativity_probe",
         probe ? json{{"sigma", number(probe->sigma)}, {"min_value", number(probe->min_value)}} : json(nullptr)},
    };

    std::filesystem::create_directories(dir);
    write_grid(w_o, dir / "input");
    write_grid(w_r, dir / "teleported");
    const auto summary_path = dir / "summary.json";
    std::ofstream f(summary_path);
    if (!f) throw std::ios_base::failure("cannot open " + summary_path.string());
    f << summary.dump(2) << '\n';
    f.close();
    if (!f) throw std::ios_base::failure("cannot write " + summary_path.string());
    log << fmt::format("wrote {}/{{input,teleported}}.{{csv,json}} and summary.json (n_tau={})\n", dir.string(),
                       format_number(n));
    return kExitOk;
}

int run_verify(const VerifyRequest& request, std::ostream& out, std::ostream& log) {
    verify::Options opt;
    opt.level = request.level;
    opt.only = request.only;
    if (request.corrupt_kernel) opt.teleport = verify::corrupted_kernel_teleport();
    const auto results = verify::run(opt, [&](const verify::CriterionResult& r) {
        log << verify::format_line(r) << '\n';
        log.flush();
    });
    bool all = true;
    json criteria = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        criteria.push_back({{"id", r.id},
                            {"name", r.name},
                            {"passed", r.passed},
                            {"max_error", number(r.max_error)},
                            {"tolerance", r.tolerance},
                            {"seconds", number(r.seconds)},
                            {"detail", r.detail}});
    }
    out << json{{"level", request.level == verify::Level::Quick ? "quick" : "full"},
                {"fault_injected", request.corrupt_kernel ? json("kernel") : json(nullptr)},
                {"all_passed", all},
                {"criteria", criteria}}
               .dump(2)
        << '\n';
    return all ? kExitOk : kExitAccuracy;
}

}  // namespace cvtele::cli
