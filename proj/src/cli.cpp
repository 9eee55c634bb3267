// SPDX-License-Identifier: Apache-2.0
//
// cachecast - linear-subpacketization coded caching for multi-antenna broadcast
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "cachecast/cli.hpp"

#include "cachecast/channel_sim.hpp"
#include "cachecast/errors.hpp"
#include "cachecast/serialization.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cachecast::cli {

namespace {

int log_level()
{
    const char *env = std::getenv("CACHECAST_LOG");
    if (env == nullptr)
        return 0;
    const std::string v(env);
    if (v == "debug")
        return 2;
    if (v == "info")
        return 1;
    try {
        return std::stoi(v);
    } catch (...) {
        return 0;
    }
}

void log(int level, const std::string &msg)
{
    if (log_level() >= level)
        std::clog << "cachecast: " << msg << '\n';
}

// Writes to --out through a temporary file and a rename, or to the stream.
void emit(const RunConfig &config, const std::string &content, std::ostream &out)
{
    if (config.out.empty()) {
        out << content;
        return;
    }
    const std::filesystem::path target(config.out);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw InvalidInput("cannot open '" + tmp.string() + "' for writing");
        f << content;
        if (!f.flush())
            throw InvalidInput("failed writing '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, target);
    log(1, "wrote " + target.string());
}

std::string dump(const Json &j)
{
    return j.dump(2) + "\n";
}

SchemeParams params_of(const RunConfig &c)
{
    if (c.K == 0 || c.L == 0 || c.t == 0)
        throw InvalidInput("--users, --antennas and --gain are required");
    return validate_params(c.K, c.L, c.t, c.library_size());
}

Demand demand_of(const RunConfig &c, const SchemeParams &params)
{
    if (c.demand.empty())
        return Demand::identity(params.K);
    return Demand::from_files(c.demand, params.N);
}

Schedule load_schedule(const std::string &path)
{
    std::ifstream f(path);
    if (!f)
        throw InvalidInput("cannot read schedule '" + path + "'");
    try {
        return schedule_from_json(Json::parse(f));
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput("malformed schedule JSON: " + std::string(e.what()));
    }
}

void require_format(const RunConfig &c, std::initializer_list<const char *> allowed)
{
    for (const char *f : allowed)
        if (c.format == f)
            return;
    throw InvalidInput("unsupported --format '" + c.format + "'");
}

} // namespace

int cmd_placement(const RunConfig &config, std::ostream &out)
{
    require_format(config, {"json", "text"});
    const auto params = params_of(config);
    const auto V = build_placement_matrix(params);
    emit(config, config.format == "text" ? to_text(V) : dump(to_json(V)), out);
    return exit_ok;
}

int cmd_dp(const RunConfig &config, std::ostream &out)
{
    require_format(config, {"json"});
    const auto params = params_of(config);
    emit(config, dump(to_json(generate_family(params))), out);
    return exit_ok;
}

int cmd_schedule(const RunConfig &config, std::ostream &out)
{
    require_format(config, {"json", "text"});
    const auto params = params_of(config);
    log(1, "building schedule for K=" + std::to_string(params.K));
    const auto schedule = build_schedule(params, demand_of(config, params));
    emit(config, config.format == "text" ? to_text(schedule) : dump(to_json(schedule)), out);
    return exit_ok;
}

int cmd_verify(const RunConfig &config, std::ostream &out)
{
    require_format(config, {"json", "text"});
    VerificationReport report;
    if (!config.schedule_path.empty()) {
        const auto schedule = load_schedule(config.schedule_path);
        report = verify_schedule(schedule, build_placement_matrix(schedule.params));
    } else {
        const auto params = params_of(config);
        report = verify_all(params, demand_of(config, params));
    }
    emit(config, config.format == "text" ? report.summary() : dump(to_json(report)), out);
    return report.passed() ? exit_ok : exit_check_failed;
}

int cmd_simulate(const RunConfig &config, std::ostream &out)
{
    require_format(config, {"json"});
    SimulationConfig sim;
    sim.seed = config.seed;
    sim.noise_power = config.noise_power;
    if (sim.noise_power < 0)
        throw InvalidInput("--noise-power must be non-negative");

    SimulationSummary summary;
    if (!config.schedule_path.empty()) {
        const auto schedule = load_schedule(config.schedule_path);
        const auto &p = schedule.params;
        summary = simulate_schedule<double>(schedule, build_placement_matrix(p),
                                            sample_channels<double>(p.K, p.L, sim.seed), sim);
    } else {
        const auto params = params_of(config);
        summary = run_full_simulation<double>(params, demand_of(config, params), sim);
    }
    emit(config, dump(to_json(summary)), out);
    return summary.passed() ? exit_ok : exit_check_failed;
}

int cmd_compare(const RunConfig &config, std::ostream &out)
{
    require_format(config, {"csv", "json"});
    if (config.t == 0 || config.L == 0 || config.user_range.empty())
        throw InvalidInput("compare needs --gain, --antennas and --users RANGE");
    const auto rows = comparison_table(config.t, config.L, config.user_range);
    emit(config, config.format == "json" ? dump(comparison_series_json(rows)) : comparison_csv(rows), out);
    return exit_ok;
}

int cmd_sweep(const RunConfig &config, std::ostream &out)
{
    require_format(config, {"json", "text"});
    if (config.max_users < 2)
        throw InvalidInput("--max-users must be at least 2");

    Json results = Json::array();
    std::ostringstream text;
    bool all = true;
    int count = 0;
    for (int K = 2; K <= config.max_users; ++K)
        for (int t = 1; 2 * t <= K; ++t)
            for (int L = t; t + L <= K; ++L) {
                const auto params = validate_params(K, L, t, K);
                const auto report = verify_all(params, Demand::identity(K));
                all = all && report.passed();
                ++count;
                results.push_back(Json{{"K", K}, {"t", t}, {"L", L}, {"passed", report.passed()}});
                text << "K=" << K << " t=" << t << " L=" << L << " " << (report.passed() ? "PASS" : "FAIL") << '\n';
                if (!report.passed())
                    text << report.summary();
            }
    text << count << " configurations, " << (all ? "all passed" : "FAILURES") << '\n';
    emit(config,
         config.format == "text" ? text.str()
                                 : dump(Json{{"max_users", config.max_users}, {"passed", all}, {"results", results}}),
         out);
    return all ? exit_ok : exit_check_failed;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"cachecast: placement, delivery schedule, verification and simulation of a "
                 "linear-subpacketization multi-antenna coded caching scheme"};
    app.require_subcommand(1);

    RunConfig c;
    bool json_errors = false;
    std::string demand_spec = "identity";
    std::string users_spec;
    app.add_flag("--json-errors", json_errors, "Report errors as JSON on stderr");

    auto add_params = [&](CLI::App *sub) {
        sub->add_option("-K,--users", c.K, "User count K");
        sub->add_option("-L,--antennas", c.L, "Transmit antenna count L");
        sub->add_option("-t,--gain", c.t, "Global caching gain t");
        sub->add_option("-N,--library", c.N, "Library size N (default K)");
    };
    auto add_output = [&](CLI::App *sub, const std::string &default_format) {
        c.format = default_format;
        sub->add_option("--format", c.format, "Output format (default " + default_format + ")");
        sub->add_option("--out", c.out, "Output file (written atomically)");
    };
    auto add_demand = [&](CLI::App *sub) {
        sub->add_option("--demand", demand_spec, "identity, or comma-separated file per user")->capture_default_str();
    };

    auto *placement = app.add_subcommand("placement", "Circulant placement matrix");
    add_params(placement);
    add_output(placement, "json");

    auto *dp = app.add_subcommand("dp", "DP matrix family R_k, C_k");
    add_params(dp);
    add_output(dp, "json");

    auto *schedule = app.add_subcommand("schedule", "Full transmission schedule");
    add_params(schedule);
    add_demand(schedule);
    add_output(schedule, "json");

    auto *verify = app.add_subcommand("verify", "Symbolic DoF, decodability and coverage checks");
    add_params(verify);
    add_demand(verify);
    verify->add_option("--schedule", c.schedule_path, "Verify a schedule JSON file instead of building one");
    add_output(verify, "json");

    auto *simulate = app.add_subcommand("simulate", "Numerical zero-forcing simulation of every interval");
    add_params(simulate);
    add_demand(simulate);
    simulate->add_option("--seed", c.seed, "Channel and symbol seed")->capture_default_str();
    simulate->add_option("--noise-power", c.noise_power, "Noise variance (0 = noiseless)")->capture_default_str();
    simulate->add_option("--schedule", c.schedule_path, "Simulate a schedule JSON file instead of building one");
    add_output(simulate, "json");

    auto *compare = app.add_subcommand("compare", "Subpacketization against the multi-server scheme");
    compare->add_option("-t,--gain", c.t, "Global caching gain t");
    compare->add_option("-L,--antennas", c.L, "Transmit antenna count L");
    compare->add_option("-K,--users", users_spec, "User counts, e.g. 5..10 or 20,50");
    add_output(compare, "csv");

    auto *sweep = app.add_subcommand("sweep", "verify every valid (K, t, L) up to a bound");
    c.max_users = 15;
    sweep->add_option("--max-users", c.max_users, "Largest K")->capture_default_str();
    add_output(sweep, "text");

    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    // add_output() shares one format variable; restore the active
    // subcommand's default when none was given.
    auto *active = app.get_subcommands().front();
    c.subcommand = active->get_name();
    if (active->count("--format") == 0)
        c.format = (c.subcommand == "compare") ? "csv" : (c.subcommand == "sweep") ? "text" : "json";

    try {
        if (demand_spec != "identity")
            c.demand = parse_int_list(demand_spec);
        if (!users_spec.empty())
            c.user_range = parse_int_list(users_spec);
        log(2, "config " + to_json(c).dump());

        if (c.subcommand == "placement")
            return cmd_placement(c, out);
        if (c.subcommand == "dp")
            return cmd_dp(c, out);
        if (c.subcommand == "schedule")
            return cmd_schedule(c, out);
        if (c.subcommand == "verify")
            return cmd_verify(c, out);
        if (c.subcommand == "simulate")
            return cmd_simulate(c, out);
        if (c.subcommand == "compare")
            return cmd_compare(c, out);
        return cmd_sweep(c, out);
    } catch (const std::exception &e) {
        const bool usage = dynamic_cast<const InvalidInput *>(&e) != nullptr;
        if (json_errors)
            err << Json{{"error", usage ? "invalid_input" : "failure"}, {"message", e.what()}}.dump() << '\n';
        else
            err << "error: " << e.what() << '\n';
        return usage ? exit_usage : exit_check_failed;
    }
}

} // namespace cachecast::cli
