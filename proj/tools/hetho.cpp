#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hetho/error.hpp"
#include "hetho/sweep.hpp"

namespace
{
constexpr int kConfigError = 2;
constexpr int kValidationFailure = 3;

struct SweepArgs
{
    std::string config;
    std::string preset;
    std::vector<std::string> policies;
    bool validate{false};
    std::uint64_t samples{1'000'000};
    std::uint64_t seed{1};
    unsigned workers{0};
    std::string out;
};

void emit(std::string const& text, std::string const& path)
{
    if (path.empty())
    {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw hetho::ConfigError("out", "cannot write '" + path + "'");
    file << text;
}

int run(SweepArgs const& args)
{
    using namespace hetho;
    ScenarioConfig config;
    if (!args.config.empty())
        config = load_config(args.config);

    if (args.preset == "table4")
    {
        emit(emit_table4(table4_scenarios(config)), args.out);
        return 0;
    }

    SweepSpec spec = args.preset.empty() ? make_config_sweep(config)
                                         : make_preset(args.preset, config);
    if (!args.policies.empty())
    {
        spec.policies.clear();
        for (auto const& token : args.policies)
            spec.policies.push_back(parse_sweep_policy(token));
    }
    spec.validate = args.validate;
    spec.samples = args.samples;
    spec.seed = args.seed;
    spec.workers = args.workers;

    auto const result = run_sweep(spec);
    std::ostringstream csv;
    write_sweep_csv(csv, result);
    emit(csv.str(), args.out);

    if (result.validation && !result.validation->passed())
    {
        auto const& v = *result.validation;
        std::fprintf(stderr,
                     "validation failed: %llu of %llu checks outside tolerance, "
                     "%llu ZEUS HOF events\n",
                     static_cast<unsigned long long>(v.failures),
                     static_cast<unsigned long long>(v.checks),
                     static_cast<unsigned long long>(v.zeus_hof_events));
        return kValidationFailure;
    }
    return 0;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"HetNet handover geometry: closed-form rates and Monte Carlo checks"};
    app.require_subcommand(1);

    SweepArgs args;
    auto* sweep = app.add_subcommand("sweep", "Velocity sweep or radius table as CSV");
    sweep->add_option("--config", args.config, "Scenario INI file")->check(CLI::ExistingFile);
    sweep->add_option("--preset", args.preset, "fig7, fig8, fig9 or table4");
    sweep->add_option("--policies", args.policies, "lte,zeus,zeus-ext,zeus-ext-rmp")
        ->delimiter(',');
    sweep->add_flag("--validate", args.validate, "Cross-check with the Monte Carlo oracle");
    sweep->add_option("--samples", args.samples, "Chords per point")->check(CLI::PositiveNumber);
    sweep->add_option("--seed", args.seed, "Oracle seed");
    sweep->add_option("--workers", args.workers, "Threads (0: all cores)");
    sweep->add_option("--out", args.out, "Output path (default stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    try
    {
        return run(args);
    }
    catch (hetho::ConfigError const& e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kConfigError;
    }
    catch (std::invalid_argument const& e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kConfigError;
    }
    catch (hetho::NoBoundaryError const& e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kConfigError;
    }
    catch (std::domain_error const& e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kConfigError;
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
