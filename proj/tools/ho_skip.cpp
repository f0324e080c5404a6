#include "hoskip/cli/config.hpp"
#include "hoskip/cli/presets.hpp"
#include "hoskip/cli/runner.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;

struct Inputs {
    std::string config_path;
    std::string preset;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::uint64_t> seed;
    std::optional<long> mc_samples;
    bool strict{false};
};

hoskip::cli::RunConfig build_config(const Inputs& in)
{
    using namespace hoskip::cli;
    RunConfig cfg;
    if (!in.preset.empty()) {
        const auto text = preset_text(in.preset);
        if (!text)
            throw ConfigError(0, "preset", "unknown preset '" + in.preset + "'");
        cfg = parse_config(*text, cfg);
    }
    if (!in.config_path.empty())
        cfg = load_config(in.config_path, cfg);
    if (in.out)
        apply_setting(cfg, "out", *in.out);
    if (in.format)
        apply_setting(cfg, "format", *in.format);
    if (in.seed)
        apply_setting(cfg, "seed", std::to_string(*in.seed));
    if (in.mc_samples)
        apply_setting(cfg, "mc_samples", std::to_string(*in.mc_samples));
    cfg.validate();
    return cfg;
}

int do_run(const Inputs& in)
{
    using namespace hoskip::cli;
    const RunConfig cfg = build_config(in);
    const SweepResult result = run(cfg);

    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) {
            std::cerr << "error: cannot write '" << cfg.out_path << "'\n";
            return kExitConfig;
        }
    }
    std::ostream& os = cfg.out_path.empty() ? std::cout : file;
    if (cfg.format == OutputFormat::Json)
        write_json(os, result);
    else
        write_csv(os, result);

    if (result.any_failure()) {
        std::size_t bad = 0;
        for (const SweepRow& r : result.rows)
            bad += r.ok() ? 0 : 1;
        std::cerr << bad << " of " << result.rows.size() << " rows failed a convergence or tolerance check\n";
        if (in.strict)
            return kExitNumeric;
    }
    return kExitOk;
}

int do_validate(const Inputs& in)
{
    using namespace hoskip::cli;
    const RunConfig cfg = build_config(in);
    const ValidationReport rep = validate(cfg);
    for (const Check& c : rep.checks) {
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
        if (!c.detail.empty())
            std::cout << "  [" << c.detail << "]";
        std::cout << '\n';
    }
    return rep.all_passed() ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coverage, handover cost and throughput of handover skipping in two-tier networks"};
    app.require_subcommand(1);

    Inputs in;
    const auto common = [&](CLI::App* sub) {
        sub->add_option("--config", in.config_path, "Key-value config file")->check(CLI::ExistingFile);
        sub->add_option("--preset", in.preset, "Embedded config applied before --config")
            ->check(CLI::IsMember({"table2", "fig3", "fig4", "fig5"}));
        sub->add_option("--seed", in.seed, "Monte Carlo master seed");
        sub->add_option("--mc-samples", in.mc_samples, "Monte Carlo samples (0 disables)");
    };

    CLI::App* run_cmd = app.add_subcommand("run", "Evaluate the configured sweep and emit CSV or JSON");
    common(run_cmd);
    run_cmd->add_option("--out", in.out, "Output file (stdout when omitted)");
    run_cmd->add_option("--format", in.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    run_cmd->add_flag("--strict", in.strict, "Exit 2 when any row fails a convergence or tolerance check");

    CLI::App* validate_cmd = app.add_subcommand("validate", "Run the invariant suite and print one line per check");
    common(validate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (run_cmd->parsed())
            return do_run(in);
        return do_validate(in);
    } catch (const hoskip::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
}
