// sdquant: dominance checks, minimal-quantile envelopes and expenditure
// minimization on scenario markets, all driven by JSON/CSV files.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdquant/dominance.hpp"
#include "sdquant/envelope.hpp"
#include "sdquant/io.hpp"
#include "sdquant/market.hpp"
#include "sdquant/oracles.hpp"
#include "sdquant/piecewise_linear.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;     // bad arguments, unreadable or malformed files
constexpr int kExitInvalid = 2;   // well-formed input violating a data invariant
constexpr int kExitDominated = 3; // dominance check came back negative

constexpr std::size_t kMaxGrid = 1000000;

std::vector<sdquant::StepQuantile> load_all(const std::vector<std::string>& paths) {
    std::vector<sdquant::StepQuantile> out;
    out.reserve(paths.size());
    for (const auto& p : paths) out.push_back(sdquant::io::load_step_quantile(p));
    return out;
}

// Reduced constraint pair; a missing side is the vacuous zero quantile.
struct ReducedBounds {
    sdquant::StepQuantile fsd;
    sdquant::StepQuantile ssd;
};

ReducedBounds reduce_inputs(const std::vector<std::string>& fsd_paths,
                            const std::vector<std::string>& ssd_paths) {
    ReducedBounds b;
    if (!fsd_paths.empty()) b.fsd = sdquant::reduce_fsd(load_all(fsd_paths));
    if (!ssd_paths.empty()) b.ssd = sdquant::reduce_ssd(load_all(ssd_paths));
    return b;
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("SDM_SEED")) return std::strtoull(env, nullptr, 10);
    return flag_seed;
}

int run(int argc, char** argv) {
    CLI::App app{"SSD-minimal quantile envelopes and expenditure minimization"};
    app.require_subcommand(1);

    // check
    int order = 1;
    std::string path_a, path_b;
    auto* check = app.add_subcommand("check", "Stochastic dominance check between two quantiles");
    check->add_option("--order", order, "Dominance order (1 or 2)")
        ->check(CLI::IsMember({1, 2}))
        ->required();
    check->add_option("a", path_a, "Dominating quantile JSON")->required();
    check->add_option("b", path_b, "Dominated quantile JSON")->required();

    // envelope
    std::vector<std::string> fsd_paths, ssd_paths;
    std::string out_path;
    bool with_oracle = false;
    std::size_t grid = 2000;
    std::uint64_t seed = 1;
    auto* envelope = app.add_subcommand("envelope", "Solve for the minimal feasible quantile");
    envelope->add_option("--fsd", fsd_paths, "First-order constraint JSON (repeatable)");
    envelope->add_option("--ssd", ssd_paths, "Second-order constraint JSON (repeatable)");
    envelope->add_option("-o,--out", out_path, "Output JSON path")->required();
    envelope->add_flag("--oracle", with_oracle, "Cross-check against the brute-force reference");
    envelope->add_option("--grid", grid, "Reference grid size")->check(CLI::Range(std::size_t{2}, kMaxGrid));
    envelope->add_option("--seed", seed, "Seed for the feasibility probes (SDM_SEED overrides)");

    // price
    std::string q_path, market_path;
    auto* price_cmd = app.add_subcommand("price", "Cheapest cost of a payoff with this quantile");
    price_cmd->add_option("-q,--quantile", q_path, "Quantile JSON")->required();
    price_cmd->add_option("-m,--market", market_path, "Market JSON")->required();

    // solve
    std::string envelope_out;
    auto* solve = app.add_subcommand("solve", "Minimize expenditure under dominance constraints");
    solve->add_option("--fsd", fsd_paths, "First-order constraint JSON (repeatable)");
    solve->add_option("--ssd", ssd_paths, "Second-order constraint JSON (repeatable)");
    solve->add_option("-m,--market", market_path, "Market JSON")->required();
    solve->add_option("-o,--out", out_path, "Payoff output JSON path")->required();
    solve->add_option("--envelope-out", envelope_out, "Also write the envelope solution here");

    // quantile from-samples
    std::string csv_path;
    auto* quantile = app.add_subcommand("quantile", "Quantile construction helpers");
    quantile->require_subcommand(1);
    auto* from_samples = quantile->add_subcommand("from-samples", "Empirical quantile from CSV samples");
    from_samples->add_option("csv", csv_path, "CSV file: value[,weight] per line")->required();
    from_samples->add_option("-o,--out", out_path, "Output JSON path")->required();

    // plot
    std::size_t plot_grid = 512;
    auto* plot = app.add_subcommand("plot", "Emit solution curves as CSV for plotting");
    plot->add_option("--fsd", fsd_paths, "First-order constraint JSON (repeatable)");
    plot->add_option("--ssd", ssd_paths, "Second-order constraint JSON (repeatable)");
    plot->add_option("-o,--out", out_path, "Output CSV path")->required();
    plot->add_option("--grid", plot_grid, "Uniform sample count")->check(CLI::Range(std::size_t{2}, kMaxGrid));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the parse error
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*check) {
        const auto a = sdquant::io::load_step_quantile(path_a);
        const auto b = sdquant::io::load_step_quantile(path_b);
        const auto report = order == 1 ? sdquant::fsd_check(a, b) : sdquant::ssd_check(a, b);
        std::cout << sdquant::io::to_json(report) << "\n";
        return report.holds ? kExitOk : kExitDominated;
    }

    if (*envelope) {
        if (fsd_paths.empty() && ssd_paths.empty())
            throw CLI::ValidationError("envelope", "at least one --fsd or --ssd constraint required");
        const ReducedBounds bounds = reduce_inputs(fsd_paths, ssd_paths);
        const auto sol = sdquant::ssd_minimal(bounds.fsd, bounds.ssd);
        sdquant::io::write_file(out_path, sdquant::io::to_json(sol) + "\n");
        if (with_oracle) {
            const auto ref = sdquant::oracles::brute_envelope(bounds.fsd, bounds.ssd, grid);
            double dev = 0.0;
            for (std::size_t k = 0; k < ref.n; ++k)
                dev = std::max(dev, std::abs(sol.envelope(ref.abscissa(k)) - ref.values[k]));
            std::cout << "oracle max deviation: " << sdquant::io::format_number(dev) << "\n";

            const std::uint64_t s0 = effective_seed(seed);
            int dominated = 0;
            constexpr int kProbes = 5;
            for (int i = 0; i < kProbes; ++i) {
                const auto probe = sdquant::oracles::feasible_sample(bounds.fsd, bounds.ssd, s0 + i);
                if (sdquant::ssd_check(probe, sol.quantile).holds) ++dominated;
            }
            std::cout << "minimality probes: " << dominated << "/" << kProbes << " dominate\n";
        }
        return kExitOk;
    }

    if (*price_cmd) {
        const auto q = sdquant::io::load_step_quantile(q_path);
        const auto market = sdquant::io::load_market(market_path);
        std::cout << sdquant::io::format_number(sdquant::price(q, sdquant::sdf_quantile(market)))
                  << "\n";
        return kExitOk;
    }

    if (*solve) {
        if (fsd_paths.empty() && ssd_paths.empty())
            throw CLI::ValidationError("solve", "at least one --fsd or --ssd constraint required");
        const auto fsd = load_all(fsd_paths);
        const auto ssd = load_all(ssd_paths);
        const auto market = sdquant::io::load_market(market_path);
        const auto sol = sdquant::solve_expenditure(fsd, ssd, market);
        sdquant::io::write_file(out_path, sdquant::io::to_json(sol.payoff) + "\n");
        if (!envelope_out.empty())
            sdquant::io::write_file(envelope_out, sdquant::io::to_json(sol.envelope) + "\n");
        std::cout << sdquant::io::format_number(sol.cost) << "\n";
        return kExitOk;
    }

    if (*from_samples) {
        std::ifstream in(csv_path);
        if (!in) throw std::runtime_error("cannot open " + csv_path);
        const auto q = sdquant::io::quantile_from_csv(in);
        sdquant::io::write_file(out_path, sdquant::io::to_json(q) + "\n");
        return kExitOk;
    }

    if (*plot) {
        if (fsd_paths.empty() && ssd_paths.empty())
            throw CLI::ValidationError("plot", "at least one --fsd or --ssd constraint required");
        const ReducedBounds bounds = reduce_inputs(fsd_paths, ssd_paths);
        const auto sol = sdquant::ssd_minimal(bounds.fsd, bounds.ssd);
        const auto target = sdquant::integrate(bounds.ssd);

        std::vector<double> ts;
        for (std::size_t k = 0; k < plot_grid; ++k)
            ts.push_back(static_cast<double>(k) / static_cast<double>(plot_grid));
        for (double b : sdquant::merged_breakpoints(bounds.fsd, bounds.ssd)) ts.push_back(b);
        for (double b : sol.quantile.breakpoints()) ts.push_back(b);
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

        std::string csv = "t,Q1bar,Q2bar,Qstar,P2,phi\n";
        for (double t : ts) {
            csv += sdquant::io::format_number(t) + "," +
                   sdquant::io::format_number(bounds.fsd(t)) + "," +
                   sdquant::io::format_number(bounds.ssd(t)) + "," +
                   sdquant::io::format_number(sol.quantile(t)) + "," +
                   sdquant::io::format_number(target(t)) + "," +
                   sdquant::io::format_number(sol.envelope(t)) + "\n";
        }
        sdquant::io::write_file(out_path, csv);
        return kExitOk;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
