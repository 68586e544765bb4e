#include "criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include <fmt/format.h>

#include <cvtele/channel.hpp>
#include <cvtele/fidelity.hpp>
#include <cvtele/nonclassicality.hpp>
#include <cvtele/numerics.hpp>
#include <cvtele/protocol.hpp>
#include <cvtele/separability.hpp>
#include <cvtele/states.hpp>
#include <cvtele/teleport.hpp>

#include "oracles.hpp"

namespace cvtele::verify {

namespace {

constexpr std::uint32_t kSeed = 20240611;

// Wall-clock budget per criterion, seconds.
constexpr double kBudgets[kCriterionCount] = {1, 1, 600, 30, 30, 60, 60, 10, 10};

// Keeps the worst error seen and where it happened.
struct Worst {
    double error = 0.0;
    std::string where;
    bool finite = true;

    void see(double err, const std::string& label) {
        if (!std::isfinite(err)) {
            finite = false;
            where = label;
            error = err;
            return;
        }
        if (finite && err >= error) {
            error = err;
            where = label;
        }
    }
};

CriterionResult make(int id, std::string name, double tol, const Worst& w, std::string extra = {}) {
    CriterionResult r;
    r.id = id;
    r.budget_seconds = kBudgets[id - 1];
    r.name = std::move(name);
    r.tolerance = tol;
    r.max_error = w.error;
    r.passed = w.finite && w.error <= tol;
    r.detail = w.where.empty() ? extra : (extra.empty() ? "worst at " + w.where : extra + "; worst at " + w.where);
    return r;
}

// Criterion 1
CriterionResult quoted_values(const Options&) {
    Worst w;
    for (int m = 0; m <= 5; ++m) {
        w.see(std::abs(fock_fidelity(m, 0.0).value - 1.0), fmt::format("fock m={} n_tau=0", m));
    }
    w.see(std::abs(fock_fidelity(0, 1.0).value - 0.5), "fock m=0 n_tau=1");
    std::string mismatch;
    for (int m = 1; m <= 5; ++m) {
        const double got = fock_fidelity(m, 1.0).value;
        const double want = std::pow(4.0, -m);
        w.see(std::abs(got - want), fmt::format("fock m={} n_tau=1 (got {:.6g}, quoted {:.6g})", m, got, want));
        if (std::abs(got - want) > 1e-9) mismatch += fmt::format(" m={}", m);
    }
    for (double s : {0.5, 1.0, 1.5}) {
        const double want = 1.0 / std::sqrt(2.0 + 2.0 * std::cosh(2.0 * s));
        w.see(std::abs(squeezed_fidelity(s, 1.0).value - want), fmt::format("squeezed s_o={} n_tau=1", s));
    }
    std::string extra;
    if (!mismatch.empty()) extra = "Fock fidelity at n_tau=1 differs from 4^-m for" + mismatch;
    return make(1, "quoted-values", 1e-9, w, extra);
}

// Criterion 2
CriterionResult noise_identity(const Options&) {
    std::mt19937 rng(kSeed);
    std::uniform_real_distribution<double> us(0.0, 3.0), un(0.0, 5.0), ut(0.0, 1.0);
    Worst w;
    double min_gap = 1e300;
    for (int k = 0; k < 100; ++k) {
        const ChannelParams p{us(rng), un(rng), ut(rng)};
        const GaussianTwoMode g = evolve_channel(p);
        w.see(std::abs(noise_factor(p).value - (g.gamma - g.lam)),
              fmt::format("n_tau vs Gamma-Lambda at s={:.4f} nbar={:.4f} T={:.4f}", p.s_qc, p.n_bar, p.T));
    }
    for (int k = 0; k < 100; ++k) {
        const ChannelParams p{us(rng), un(rng), ut(rng)};
        const ChannelParams half{p.s_qc, p.n_bar, 1.0 - std::sqrt(1.0 - p.T)};
        const double gap = teleport_vs_direct_gap(p);
        const double want = noise_factor(half).value - direct_noise(p.n_bar, p.T).value;
        w.see(std::abs(gap - want), fmt::format("gap at s={:.4f} nbar={:.4f} T={:.4f}", p.s_qc, p.n_bar, p.T));
        min_gap = std::min(min_gap, gap);
    }
    if (min_gap < 0.0) w.see(1.0, fmt::format("negative gap {:.3g}", min_gap));
    return make(2, "noise-identity", 1e-12, w, fmt::format("min gap {:.6g}", min_gap));
}

// Criterion 3
CriterionResult oracle_equivalence(const Options& opt) {
    const GridSpec spec;
    std::vector<InputState> inputs{InputState::vacuum(), InputState::fock(1), InputState::fock(2),
                                   InputState::squeezed(0.7)};
    // n_tau = 0.144, 0.684, 1.068, 1.568, 2.474, 3.0
    std::vector<ChannelParams> channels{{1.0, 0.0, 0.01}, {0.5, 0.0, 0.5}, {1.0, 0.5, 0.5},
                                        {1.0, 1.0, 0.5},  {0.5, 1.0, 0.8}, {0.2, 1.0, 1.0}};
    if (opt.level == Level::Quick) {
        inputs = {InputState::fock(1)};
        channels = {{1.0, 0.5, 0.5}};
    }
    // Every 15th pixel, edges included: an 18 x 18 lattice spanning the window.
    std::vector<std::size_t> pixels;
    for (std::size_t i = 0; i < spec.resolution; i += 15) pixels.push_back(i);

    Worst w;
    double lo = 1e300, hi = 0.0;
    for (const auto& p : channels) {
        const GaussianTwoMode ch = evolve_channel(p);
        const double n = ch.noise_factor();
        lo = std::min(lo, n);
        hi = std::max(hi, n);
        for (const auto& in : inputs) {
            const WignerGrid conv = opt.teleport(in.to_grid(spec), n);
            const ProtocolOracle oracle(in, ch);
            double err = 0.0;
            for (std::size_t ir : pixels) {
                for (std::size_t ii : pixels) {
                    err = std::max(err, std::abs(oracle(conv.alpha(ir, ii)) - conv.at(ir, ii)));
                }
            }
            w.see(err, fmt::format("{} n_tau={:.4f}", in.label(), n));
        }
    }
    return make(3, "oracle-equivalence", 1e-5, w,
                fmt::format("{} inputs x {} channels, n_tau in [{:.3f}, {:.3f}], 18x18 pixel lattice",
                            inputs.size(), channels.size(), lo, hi));
}

// Criterion 4
CriterionResult closed_forms(const Options& opt) {
    const GridSpec spec;
    Worst w;
    for (int m = 0; m <= 3; ++m) {
        for (double n : {0.2, 0.5, 0.5 + 2e-7, 1.0, 2.0}) {
            const double err = sup_norm_difference(teleported_fock_wigner(m, n, spec), opt.teleport(fock_wigner(m, spec), n));
            w.see(err, fmt::format("fock m={} n_tau={}", m, n));
        }
    }
    for (double s : {0.5, 0.7, -0.7}) {
        for (double n : {0.3, 1.0}) {
            const double err = sup_norm_difference(teleported_squeezed_wigner(s, n, spec),
                                                   opt.teleport(squeezed_vacuum_wigner(s, spec), n));
            w.see(err, fmt::format("squeezed s_o={} n_tau={}", s, n));
        }
    }
    // s_o = 1 needs a wider window; keep the spacing of the default grid.
    const GridSpec wide{8.0, 341};
    for (double n : {0.3, 1.0}) {
        const double err = sup_norm_difference(teleported_squeezed_wigner(1.0, n, wide),
                                               opt.teleport(squeezed_vacuum_wigner(1.0, wide), n));
        w.see(err, fmt::format("squeezed s_o=1 n_tau={} (L=8)", n));
    }
    return make(4, "closed-form-teleported", 1e-6, w);
}

// Criterion 5
CriterionResult moment_transfer(const Options& opt) {
    const GridSpec spec;
    // Fourth moments of m = 3 at n_tau = 1 still carry ~1e-5 of tail beyond
    // L = 6; L = 8 at the default spacing brings truncation below 1e-11.
    const GridSpec wide{8.0, 341};
    Worst w;
    for (int m = 0; m <= 3; ++m) {
        for (double n : {0.2, 0.5, 1.0}) {
            const PhotonStats got = photon_stats(opt.teleport(fock_wigner(m, wide), n));
            const PhotonStats want = teleported_photon_stats(m, n);
            w.see(std::abs(got.mean - want.mean), fmt::format("mean fock m={} n_tau={}", m, n));
            w.see(std::abs(got.variance - want.variance), fmt::format("variance fock m={} n_tau={}", m, n));
        }
    }
    const std::vector<InputState> inputs{InputState::coherent({1.0, 0.5}), InputState::squeezed(0.5),
                                         InputState::squeezed(0.5, {0.5, -0.3}), InputState::fock(1, {0.7, 0.2}),
                                         InputState::squeezed(-0.3, {-0.4, 0.6})};
    const double n = 0.4;
    for (const auto& in : inputs) {
        const WignerGrid before = in.to_grid(spec);
        const WignerGrid after = opt.teleport(before, n);
        for (double phi : {0.0, std::numbers::pi / 4.0, std::numbers::pi / 2.0}) {
            const QuadratureStats qo = quadrature_stats(before, phi);
            const QuadratureStats qr = quadrature_stats(after, phi);
            const QuadratureStats predicted = quadrature_transfer(qo, n);
            w.see(std::abs(qr.variance - predicted.variance), fmt::format("variance {} phi={:.3f}", in.label(), phi));
            w.see(std::abs(qr.mean - qo.mean), fmt::format("mean {} phi={:.3f}", in.label(), phi));
        }
    }
    return make(5, "moment-transfer", 1e-5, w);
}

// Smallest root of f on [lo, hi] by bisection; f(lo) < 0 < f(hi) assumed.
std::optional<double> bisect(const std::function<double(double)>& f, double lo, double hi, double width) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (!(flo < 0.0 && fhi > 0.0)) return std::nullopt;
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Criterion 6
CriterionResult thresholds(const Options& opt) {
    const GridSpec spec;
    Worst w;
    for (int m : {1, 2, 3}) {
        const WignerGrid in = fock_wigner(m, spec);
        auto excess = [&](double n) {
            const PhotonStats s = photon_stats(opt.teleport(in, n));
            return s.variance - s.mean;
        };
        const auto crossing = bisect(excess, 1e-3, 0.5, 1e-6);
        const auto predicted = sub_poisson_threshold({static_cast<double>(m), 0.0});
        const std::string label = fmt::format("sub-Poisson fock m={}", m);
        if (!crossing || !predicted) {
            w.see(INFINITY, label + " (no crossing)");
            continue;
        }
        w.see(std::abs(*crossing - *predicted), label);
    }
    for (double s : {0.5, 1.0}) {
        const GridSpec g = s > 0.8 ? GridSpec{8.0, 341} : spec;
        const WignerGrid in = squeezed_vacuum_wigner(s, g);
        auto excess = [&](double n) { return quadrature_stats(opt.teleport(in, n), 0.0).variance - 1.0; };
        const auto crossing = bisect(excess, 1e-3, 0.5, 1e-6);
        const auto predicted = squeezing_threshold(std::exp(-2.0 * s));
        const std::string label = fmt::format("squeezing s_o={}", s);
        if (!crossing || !predicted) {
            w.see(INFINITY, label + " (no crossing)");
            continue;
        }
        w.see(std::abs(*crossing - *predicted), label);
    }
    // Neither threshold may exceed 1/2.
    std::mt19937 rng(kSeed);
    std::uniform_real_distribution<double> mean(0.0, 50.0), frac(0.0, 1.0);
    double largest = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double nb = mean(rng);
        if (auto t = sub_poisson_threshold({nb, frac(rng) * nb})) largest = std::max(largest, *t);
        if (auto t = squeezing_threshold(frac(rng))) largest = std::max(largest, *t);
    }
    for (int m = 1; m <= 200; ++m) largest = std::max(largest, sub_poisson_threshold({double(m), 0.0}).value_or(0.0));
    if (largest > 0.5) w.see(INFINITY, fmt::format("threshold {:.6g} above 1/2", largest));
    return make(6, "threshold-laws", 1e-4, w, fmt::format("largest threshold seen {:.9f}", largest));
}

// Criterion 7
CriterionResult separability_iff(const Options&) {
    Worst w;
    int compared = 0;
    int disagreements = 0;
    for (double s : {0.0, 0.5, 1.0, 1.5, 2.0}) {
        for (double nb : {0.0, 0.5, 1.0, 2.0, 4.0}) {
            for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const ChannelParams p{s, nb, t};
                if (std::abs(noise_factor(p).value - 1.0) < 1e-9) continue;
                ++compared;
                if (channel_is_separable_via_appendix(evolve_channel(p)) != is_separable(p)) {
                    ++disagreements;
                    w.see(INFINITY, fmt::format("verdicts differ at s={} nbar={} T={}", s, nb, t));
                }
            }
        }
    }
    std::mt19937 rng(kSeed);
    std::uniform_real_distribution<double> diag(0.2, 2.0), unit(0.0, 1.0), phase(0.0, 2.0 * std::numbers::pi),
        coord(-2.0, 2.0);
    for (int k = 0; k < 5; ++k) {
        const double bb = diag(rng), cc = diag(rng);
        const PExponentMatrix n{bb, cc, std::polar(std::sqrt(0.9 * unit(rng) * bb * cc), phase(rng))};
        const SeparableDecomposition d = decompose(n);
        for (int j = 0; j < 20; ++j) {
            Complex ab{coord(rng), coord(rng)}, ac{coord(rng), coord(rng)};
            if (std::abs(ab) > 2.0) ab *= 2.0 / std::abs(ab);
            if (std::abs(ac) > 2.0) ac *= 2.0 / std::abs(ac);
            w.see(std::abs(reconstruct_p(d, n, ab, ac) - n.value(ab, ac)), fmt::format("reconstruction matrix {} probe {}", k, j));
        }
    }
    return make(7, "separability-iff", 1e-8, w,
                fmt::format("{} lattice points compared, {} disagreements; 100 reconstruction probes", compared,
                            disagreements));
}

// Criterion 8
CriterionResult fokker_planck(const Options&) {
    Worst w;
    for (auto [s, nb] : {std::pair{1.0, 0.5}, {0.5, 2.0}, {2.0, 0.0}}) {
        for (int k = 0; k < 10; ++k) {
            const ChannelParams p{s, nb, 0.05 + 0.1 * k};
            const GaussianTwoMode want = oracle::moment_flow(p);
            const GaussianTwoMode got = evolve_channel(p);
            w.see(std::max(std::abs(got.gamma - want.gamma), std::abs(got.lam - want.lam)),
                  fmt::format("s={} nbar={} T={:.2f}", s, nb, p.T));
        }
    }
    return make(8, "fokker-planck", 1e-6, w, "RK4 moment flow, step 1e-4 in gamma t");
}

// Criterion 9
CriterionResult normalization(const Options& opt) {
    const GridSpec spec;
    Worst w;
    auto check = [&](const WignerGrid& g, const std::string& label) { w.see(std::abs(grid_integrate(g) - 1.0), label); };
    for (int m = 0; m <= 5; ++m) {
        const WignerGrid g = fock_wigner(m, spec);
        check(g, fmt::format("fock m={}", m));
        for (double n : {0.3, 1.0}) {
            check(opt.teleport(g, n), fmt::format("teleported fock m={} n_tau={}", m, n));
            check(teleported_fock_wigner(m, n, spec), fmt::format("closed-form teleported fock m={} n_tau={}", m, n));
        }
    }
    for (double s : {-0.7, 0.0, 0.5, 0.7}) {
        const WignerGrid g = squeezed_vacuum_wigner(s, spec);
        check(g, fmt::format("squeezed s_o={}", s));
        for (double n : {0.3, 1.0}) {
            check(opt.teleport(g, n), fmt::format("teleported squeezed s_o={} n_tau={}", s, n));
            check(teleported_squeezed_wigner(s, n, spec), fmt::format("closed-form teleported squeezed s_o={} n_tau={}", s, n));
        }
    }
    for (Complex mu : {Complex{1.0, 0.0}, Complex{1.0, 1.0}, Complex{0.0, -2.0}}) {
        const WignerGrid g = coherent_wigner(mu, spec);
        check(g, fmt::format("coherent {}{:+}i", mu.real(), mu.imag()));
        check(opt.teleport(g, 0.5), fmt::format("teleported coherent {}{:+}i", mu.real(), mu.imag()));
    }
    // Strong noise needs a wider window at the default spacing.
    const GridSpec wide{9.0, 383};
    check(opt.teleport(fock_wigner(2, wide), 3.0), "teleported fock m=2 n_tau=3 (L=9)");

    // Homodyne outcome density: trapezoid over a window holding all its mass.
    const ProtocolOptions low{10, 1e-22};  // remainders here are at most quadratic
    double most_negative = 0.0;
    const std::vector<std::pair<InputState, ChannelParams>> cases{{InputState::vacuum(), {0.0, 0.0, 0.0}},
                                                                  {InputState::fock(1), {1.0, 0.5, 0.5}},
                                                                  {InputState::coherent({1.0, 0.0}), {0.5, 0.0, 0.0}}};
    for (const auto& [in, p] : cases) {
        const MeasurementDensity density(in, evolve_channel(p), low);
        const int points = 97;
        const double half = 6.0;
        const double h = 2.0 * half / (points - 1);
        double total = 0.0;
        for (int i = 0; i < points; ++i) {
            for (int j = 0; j < points; ++j) {
                const double v = density(-half + i * h, -half + j * h);
                most_negative = std::min(most_negative, v);
                const double e = (i == 0 || i == points - 1 ? 0.5 : 1.0) * (j == 0 || j == points - 1 ? 0.5 : 1.0);
                total += e * v;
            }
        }
        w.see(std::abs(total * h * h - 1.0), fmt::format("measurement density {} s={} nbar={} T={}", in.label(), p.s_qc, p.n_bar, p.T));
    }
    if (most_negative < -1e-9) w.see(INFINITY, fmt::format("measurement density negative ({:.3g})", most_negative));
    return make(9, "normalization", 1e-5, w);
}

using CriterionFn = CriterionResult (*)(const Options&);
constexpr CriterionFn kCriteria[kCriterionCount] = {quoted_values, noise_identity, oracle_equivalence,
                                                     closed_forms, moment_transfer, thresholds,
                                                     separability_iff, fokker_planck, normalization};

}  // namespace

TeleportFn library_teleport() {
    return [](const WignerGrid& w, double n) { return teleport_state(w, n); };
}

TeleportFn corrupted_kernel_teleport() {
    return [](const WignerGrid& w, double n) { return teleport_state(w, 1.01 * n); };
}

std::vector<CriterionResult> run(const Options& options, const std::function<void(const CriterionResult&)>& report) {
    std::vector<CriterionResult> results;
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = kCriteria[id - 1](options);
        } catch (const std::exception& e) {
            r.id = id;
            r.budget_seconds = kBudgets[id - 1];
            r.name = fmt::format("criterion-{}", id);
            r.passed = false;
            r.max_error = INFINITY;
            r.detail = fmt::format("exception: {}", e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.seconds > r.budget_seconds && r.passed) {
            r.passed = false;
            r.detail += fmt::format("; over the {:.0f} s budget", r.budget_seconds);
        }
        if (report) report(r);
        results.push_back(std::move(r));
    }
    return results;
}

std::string format_line(const CriterionResult& r) {
    return fmt::format("[{}] {} {:<24} max_err={:.3g} tol={:.0e} ({:.1f} s of {:.0f}) {}", r.passed ? "PASS" : "FAIL", r.id,
                       r.name, r.max_error, r.tolerance, r.seconds, r.budget_seconds, r.detail);
}

}  // namespace cvtele::verify
