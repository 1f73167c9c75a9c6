/*
 * Copyright 2026 The epifit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include "epifit/core_model.hpp"
#include "epifit/data_ingest.hpp"
#include "epifit/date.hpp"
#include "epifit/error.hpp"
#include "epifit/estimation.hpp"
#include "epifit/forecast.hpp"
#include "epifit/io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace epifit::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class OutputFormat { json, csv, both };

struct RunConfig {
    std::filesystem::path case_csv_path;
    std::filesystem::path demographics_csv_path;
    std::string region;
    std::optional<Date> estimation_start;
    std::optional<Date> estimation_end;
    std::optional<Date> forecast_end;
    double gamma = 1.0 / 14.0;
    int folds = 10;
    double rho_grid_step = 0.001;
    double integrator_step_days = kDefaultStepDays;
    std::filesystem::path output_dir;
    OutputFormat output_format = OutputFormat::both;
    // Fixed parameters; estimated/calibrated when absent.
    std::optional<double> beta;
    std::optional<double> rho;

    void validate_windows() const {
        if (estimation_start && estimation_end && *estimation_end < *estimation_start)
            throw InvalidArgument("estimation window end precedes start");
        if (estimation_end && forecast_end && !(*estimation_end < *forecast_end))
            throw InvalidArgument("forecast end must be after the estimation window end");
    }
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Flat `key = value` config. Blank lines and `#` comments are ignored;
/// values may be wrapped in double quotes.
inline std::map<std::string, std::string> parse_config_text(std::string_view text) {
    std::map<std::string, std::string> out;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        if (key.empty())
            throw InvalidArgument("config line " + std::to_string(lineno) + ": empty key");
        out[key] = value;
    }
    return out;
}

namespace detail {

inline double to_real(const std::string& key, const std::string& v) {
    double out = 0.0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || p != v.data() + v.size())
        throw InvalidArgument("invalid number for '" + key + "': '" + v + "'");
    return out;
}

inline int to_int(const std::string& key, const std::string& v) {
    int out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || p != v.data() + v.size())
        throw InvalidArgument("invalid integer for '" + key + "': '" + v + "'");
    return out;
}

inline OutputFormat to_format(const std::string& v) {
    if (v == "json") return OutputFormat::json;
    if (v == "csv") return OutputFormat::csv;
    if (v == "both") return OutputFormat::both;
    throw InvalidArgument("output_format must be json, csv or both (got '" + v + "')");
}

inline const char* format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        default: return "both";
    }
}

/// Applies one key/value to the config. `base` anchors relative paths.
inline void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value,
                          const std::filesystem::path& base) {
    auto path = [&](const std::string& v) {
        std::filesystem::path p(v);
        return p.is_relative() && !base.empty() ? (base / p).lexically_normal() : p;
    };
    if (key == "case_csv_path" || key == "cases") cfg.case_csv_path = path(value);
    else if (key == "demographics_csv_path" || key == "demographics")
        cfg.demographics_csv_path = path(value);
    else if (key == "region") cfg.region = value;
    else if (key == "estimation_start") cfg.estimation_start = Date::parse_or_throw(value);
    else if (key == "estimation_end") cfg.estimation_end = Date::parse_or_throw(value);
    else if (key == "forecast_end") cfg.forecast_end = Date::parse_or_throw(value);
    else if (key == "gamma") cfg.gamma = to_real(key, value);
    else if (key == "folds") cfg.folds = to_int(key, value);
    else if (key == "rho_grid_step") cfg.rho_grid_step = to_real(key, value);
    else if (key == "integrator_step_days") cfg.integrator_step_days = to_real(key, value);
    else if (key == "output_dir") cfg.output_dir = path(value);
    else if (key == "output_format") cfg.output_format = to_format(value);
    else if (key == "beta") cfg.beta = to_real(key, value);
    else if (key == "rho") cfg.rho = to_real(key, value);
    else throw InvalidArgument("unknown config key '" + key + "'");
}

/// Files produced by one command, committed together at the end so that a
/// failing stage never leaves a partial set behind.
class OutputSet {
public:
    void add(std::string name, std::string content) {
        files_.emplace_back(std::move(name), std::move(content));
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& f : files_) out.push_back(f.first);
        return out;
    }

    void commit(const std::filesystem::path& dir) const {
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw DataError("cannot create output directory '" + dir.string() + "'");
        std::vector<fs::path> temps;
        auto cleanup = [&] {
            for (const auto& t : temps) fs::remove(t, ec);
        };
        for (const auto& [name, content] : files_) {
            const fs::path tmp = dir / (name + ".tmp");
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            temps.push_back(tmp);
            out << content;
            out.close();
            if (!out) {
                cleanup();
                throw DataError("cannot write '" + tmp.string() + "'");
            }
        }
        for (std::size_t k = 0; k < files_.size(); ++k) {
            fs::rename(temps[k], dir / files_[k].first, ec);
            if (ec) {
                cleanup();
                throw DataError("cannot write '" + (dir / files_[k].first).string() + "'");
            }
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> files_;
};

/// Runs `fn`, prefixing any epifit::Error with the stage name.
template <class Fn>
auto stage(const std::string& name, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(e.kind(), name + ": " + e.what());
    }
}

}  // namespace detail

/// Inputs shared by the data-driven subcommands.
struct Loaded {
    EpiSeries series;
    RegionRecord region;
    std::vector<std::string> warnings;
};

inline Loaded load_inputs(const RunConfig& cfg) {
    if (cfg.case_csv_path.empty()) throw InvalidArgument("missing case CSV path (--cases)");
    if (cfg.demographics_csv_path.empty())
        throw InvalidArgument("missing demographics CSV path (--demographics)");
    if (cfg.region.empty()) throw InvalidArgument("missing --region");
    if (!cfg.estimation_start || !cfg.estimation_end)
        throw InvalidArgument("missing estimation window (--start/--end)");
    cfg.validate_windows();

    Loaded out;
    auto parsed = parse_case_csv(read_file(cfg.case_csv_path));
    out.warnings = std::move(parsed.warnings);
    const auto regions = load_demographics(read_file(cfg.demographics_csv_path));
    out.region = find_region(regions, cfg.region);
    out.series =
        derive_epi_series(parsed.records, cfg.region, *cfg.estimation_start, *cfg.estimation_end);
    return out;
}

struct Estimate {
    BetaSampleSet samples;
    CrossValidatedBeta cv;
};

inline Estimate estimate(const Loaded& in, const RunConfig& cfg) {
    Estimate e;
    e.samples = beta_samples(in.series, cfg.gamma, static_cast<double>(in.region.population));
    e.cv = cross_validated_beta(e.samples.samples, cfg.folds);
    return e;
}

inline ModelParams base_params(const Loaded& in, const RunConfig& cfg, double beta) {
    ModelParams p;
    p.beta = beta;
    p.gamma = cfg.gamma;
    p.rho = 0.0;
    p.population = static_cast<double>(in.region.population);
    return p;
}

/// Entry point shared by the executable and the tests. Returns the process
/// exit status: 0 ok, 1 usage, 2 data validation, 3 numerical failure.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"epifit: SIR-with-intervention estimation and forecasting"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    struct Flags {
        std::string config, cases, demographics, region, start, end, forecast_end, output_dir,
            format;
        double gamma = 0.0, grid = 0.0, step = 0.0, beta = 0.0, rho = 0.0;
        int folds = 0;
    } f;

    auto add_data_flags = [&](CLI::App* sub) {
        sub->add_option("--config", f.config, "Flat key = value config file");
        sub->add_option("--cases", f.cases, "Case CSV (date,region,confirmed,recovered,deceased)");
        sub->add_option("--demographics", f.demographics, "Demographics CSV");
        sub->add_option("--region", f.region, "Region name");
        sub->add_option("--start", f.start, "Estimation window start (YYYY-MM-DD)");
        sub->add_option("--end", f.end, "Estimation window end (YYYY-MM-DD)");
        sub->add_option("--forecast-end", f.forecast_end, "Forecast end date (YYYY-MM-DD)");
        sub->add_option("--gamma", f.gamma, "Recovery rate per day (default 1/14)");
        sub->add_option("--folds", f.folds, "Cross-validation folds (default 10)");
        sub->add_option("--rho-grid-step", f.grid, "Grid step for rho (default 0.001)");
        sub->add_option("--step", f.step, "Integrator step in days (default 0.1)");
        sub->add_option("--output-dir", f.output_dir, "Output directory");
        sub->add_option("--format", f.format, "json, csv or both")
            ->check(CLI::IsMember({"json", "csv", "both"}));
        sub->add_option("--beta", f.beta, "Fixed transmission rate (skips estimation)");
        sub->add_option("--rho", f.rho, "Fixed intervention level (skips calibration)");
    };

    auto* est = app.add_subcommand("estimate-beta", "Estimate beta by cross-validated regression");
    auto* cal = app.add_subcommand("calibrate", "Calibrate rho against observed active cases");
    auto* val = app.add_subcommand("validate", "Replay the window and score predictions");
    auto* fc = app.add_subcommand("forecast", "Project active/recovered cases");
    auto* pipe = app.add_subcommand("pipeline", "estimate -> calibrate -> validate -> forecast");
    for (auto* sub : {est, cal, val, fc, pipe}) add_data_flags(sub);

    auto* sw = app.add_subcommand("sweep", "Peak/die-out summary over intervention levels");
    double sw_n = 1000, sw_i0 = 5, sw_r0 = 0, sw_beta = 0.2, sw_gamma = 1.0 / 14.0,
           sw_step = kDefaultStepDays;
    int sw_horizon = 400;
    std::vector<double> sw_rhos{0.0, 0.2, 0.4, 0.5, 0.8, 1.0};
    std::string sw_out, sw_format;
    sw->add_option("--n", sw_n, "Population");
    sw->add_option("--i0", sw_i0, "Initial infected");
    sw->add_option("--r0", sw_r0, "Initial removed");
    sw->add_option("--beta", sw_beta, "Transmission rate");
    sw->add_option("--gamma", sw_gamma, "Recovery rate");
    sw->add_option("--rhos", sw_rhos, "Comma-separated intervention levels")->delimiter(',');
    sw->add_option("--horizon", sw_horizon, "Days to integrate");
    sw->add_option("--step", sw_step, "Integrator step in days");
    sw->add_option("--output-dir", sw_out, "Output directory");
    sw->add_option("--format", sw_format, "json, csv or both")
        ->check(CLI::IsMember({"json", "csv", "both"}));

    std::vector<const char*> argv{"epifit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ErrorKind::usage);
    }

    auto env_output_dir = []() -> std::filesystem::path {
        if (const char* env = std::getenv("EPIFIT_OUTPUT_DIR"); env && *env) return env;
        return ".";
    };

    try {
        if (sw->parsed()) {
            ModelParams p{sw_beta, sw_gamma, 0.0, sw_n};
            const CompartmentState init{0.0, sw_n - sw_i0 - sw_r0, sw_i0, sw_r0};
            const auto rows = detail::stage("sweep", [&] {
                return intervention_sweep(p, init, sw_horizon, sw_rhos, sw_step);
            });
            out << io::sweep_table(rows);
            const auto fmt = sw_format.empty() ? OutputFormat::both : detail::to_format(sw_format);
            detail::OutputSet files;
            if (fmt != OutputFormat::csv) files.add("sweep.json", io::to_json(rows).dump(2) + "\n");
            if (fmt != OutputFormat::json) files.add("sweep.csv", io::sweep_csv(rows));
            files.commit(sw_out.empty() ? env_output_dir() : std::filesystem::path(sw_out));
            return 0;
        }

        CLI::App* sub = nullptr;
        for (auto* s : {est, cal, val, fc, pipe})
            if (s->parsed()) sub = s;
        const std::string name = sub->get_name();

        RunConfig cfg;
        detail::stage("config", [&] {
            if (!f.config.empty()) {
                const std::filesystem::path cp(f.config);
                std::string text;
                try {
                    text = read_file(cp);
                } catch (const DataError& e) {
                    throw InvalidArgument(e.what());
                }
                for (const auto& [k, v] : parse_config_text(text))
                    detail::apply_setting(cfg, k, v, cp.parent_path());
            }
            auto given = [&](const char* flag) { return sub->count(flag) > 0; };
            const std::filesystem::path none;
            if (given("--cases")) detail::apply_setting(cfg, "cases", f.cases, none);
            if (given("--demographics"))
                detail::apply_setting(cfg, "demographics", f.demographics, none);
            if (given("--region")) cfg.region = f.region;
            if (given("--start")) detail::apply_setting(cfg, "estimation_start", f.start, none);
            if (given("--end")) detail::apply_setting(cfg, "estimation_end", f.end, none);
            if (given("--forecast-end"))
                detail::apply_setting(cfg, "forecast_end", f.forecast_end, none);
            if (given("--gamma")) cfg.gamma = f.gamma;
            if (given("--folds")) cfg.folds = f.folds;
            if (given("--rho-grid-step")) cfg.rho_grid_step = f.grid;
            if (given("--step")) cfg.integrator_step_days = f.step;
            if (given("--output-dir")) cfg.output_dir = f.output_dir;
            if (given("--format")) cfg.output_format = detail::to_format(f.format);
            if (given("--beta")) cfg.beta = f.beta;
            if (given("--rho")) cfg.rho = f.rho;
            if (cfg.output_dir.empty()) cfg.output_dir = env_output_dir();
            cfg.validate_windows();
            return 0;
        });

        const Loaded in = detail::stage("load", [&] { return load_inputs(cfg); });
        for (const auto& w : in.warnings) err << "warning: " << w << "\n";

        std::optional<Estimate> estimated;
        auto beta = [&]() -> double {
            if (cfg.beta) return *cfg.beta;
            if (!estimated) estimated = detail::stage("estimate-beta", [&] { return estimate(in, cfg); });
            return estimated->cv.beta_hat;
        };
        std::optional<CalibrationResult> calibrated;
        auto rho = [&]() -> double {
            if (cfg.rho) return *cfg.rho;
            if (!calibrated) {
                const double b = beta();
                calibrated = detail::stage("calibrate", [&] {
                    return calibrate_rho(in.series, base_params(in, cfg, b), cfg.rho_grid_step,
                                         cfg.integrator_step_days);
                });
            }
            return calibrated->rho;
        };
        auto full_params = [&] {
            ModelParams p = base_params(in, cfg, beta());
            p.rho = rho();
            return p;
        };
        const bool want_json = cfg.output_format != OutputFormat::csv;
        const bool want_csv = cfg.output_format != OutputFormat::json;

        if (sub == est) {
            cfg.beta.reset();
            beta();
            const auto& e = *estimated;
            for (const auto& s : e.samples.skipped) err << "warning: skipped " << s << "\n";
            out << "region: " << in.series.region << "\n"
                << "window: " << in.series.start().iso() << ".." << in.series.end().iso() << "\n"
                << "samples: " << e.samples.samples.size() << "\n"
                << "beta_hat: " << io::fmt6(e.cv.beta_hat) << "\n"
                << "alpha0: " << io::fmt6(e.cv.fit.alpha0) << "\n"
                << "alpha1: " << io::fmt6(e.cv.fit.alpha1) << "\n"
                << "residual_variance: " << io::fmt6(e.cv.fit.residual_variance) << "\n"
                << "cv_error: " << io::fmt6(e.cv.cv_error) << "\n"
                << "folds: " << cfg.folds << "\n";
            return 0;
        }
        if (sub == cal) {
            cfg.rho.reset();
            const double b = beta();
            rho();
            out << "region: " << in.series.region << "\n"
                << "beta: " << io::fmt6(b) << "\n"
                << "rho: " << io::fmt6(calibrated->rho) << "\n"
                << "objective: " << io::fmt6(calibrated->objective) << "\n"
                << "grid_step: " << io::fmt6(calibrated->grid_step) << "\n";
            return 0;
        }

        auto run_validate = [&] {
            const auto p = full_params();
            return detail::stage("validate", [&] {
                return epifit::validate(in.series, p, in.region, cfg.integrator_step_days);
            });
        };
        auto run_forecast = [&] {
            if (!cfg.forecast_end) throw InvalidArgument("forecast: missing --forecast-end");
            const auto p = full_params();
            return detail::stage("forecast", [&] {
                return forecast_region(in.series, in.region, p, *cfg.forecast_end, std::nullopt,
                                       cfg.integrator_step_days);
            });
        };
        auto add_validation = [&](detail::OutputSet& files, const ValidationReport& rep) {
            if (want_json) files.add("validation.json", io::to_json(rep).dump(2) + "\n");
            if (want_csv) files.add("validation.csv", io::validation_csv(rep));
        };
        auto add_forecast = [&](detail::OutputSet& files, const ForecastResult& fr) {
            if (want_json) files.add("forecast.json", io::to_json(fr).dump(2) + "\n");
            if (want_csv) files.add("forecast.csv", io::forecast_csv(fr));
        };
        auto print_validation = [&](const ValidationReport& rep) {
            out << "mae_active: " << io::fmt6(rep.mae_active) << "\n"
                << "rmse_active: " << io::fmt6(rep.rmse_active) << "\n"
                << "mae_removed: " << io::fmt6(rep.mae_removed) << "\n"
                << "rmse_removed: " << io::fmt6(rep.rmse_removed) << "\n";
        };
        auto print_forecast = [&](const ForecastResult& fr) {
            out << "forecast: " << fr.start_date.iso() << ".." << fr.end_date().iso() << "\n"
                << "endpoint_active: " << io::fmt6(fr.endpoint_active) << "\n"
                << "endpoint_recovered: " << io::fmt6(fr.endpoint_recovered) << "\n"
                << "active_ci95: [" << io::fmt6(fr.active_ci95.low) << ", "
                << io::fmt6(fr.active_ci95.high) << "]\n"
                << "active_ci99: [" << io::fmt6(fr.active_ci99.low) << ", "
                << io::fmt6(fr.active_ci99.high) << "]\n";
        };

        if (sub == val) {
            const auto rep = run_validate();
            print_validation(rep);
            detail::OutputSet files;
            add_validation(files, rep);
            detail::stage("write", [&] { files.commit(cfg.output_dir); return 0; });
            return 0;
        }
        if (sub == fc) {
            const auto fr = run_forecast();
            print_forecast(fr);
            detail::OutputSet files;
            add_forecast(files, fr);
            detail::stage("write", [&] { files.commit(cfg.output_dir); return 0; });
            return 0;
        }

        // pipeline: always estimates and calibrates.
        cfg.beta.reset();
        cfg.rho.reset();
        if (!cfg.forecast_end) throw InvalidArgument("pipeline: missing forecast_end");
        const double b = beta();
        const double r = rho();
        const auto rep = run_validate();
        const auto fr = run_forecast();

        detail::OutputSet files;
        nlohmann::json samples = nlohmann::json::array();
        for (const auto& s : estimated->samples.samples)
            samples.push_back({{"day_index", s.day_index},
                               {"date", (in.series.start() + s.day_index).iso()},
                               {"beta", s.beta}});
        files.add("estimate.json", nlohmann::json{{"region", in.series.region},
                                                  {"beta_hat", b},
                                                  {"fit", io::to_json(estimated->cv.fit)},
                                                  {"cv_error", estimated->cv.cv_error},
                                                  {"folds", cfg.folds},
                                                  {"samples", std::move(samples)},
                                                  {"skipped", estimated->samples.skipped}}
                                           .dump(2) + "\n");
        files.add("calibration.json", nlohmann::json{{"region", in.series.region},
                                                     {"rho", r},
                                                     {"objective", calibrated->objective},
                                                     {"grid_step", calibrated->grid_step}}
                                              .dump(2) + "\n");
        add_validation(files, rep);
        add_forecast(files, fr);

        std::vector<std::string> outputs = files.names();
        outputs.push_back("manifest.json");
        const nlohmann::json manifest{
            {"tool", "epifit"},
            {"version", kVersion},
            {"command", "pipeline"},
            {"inputs",
             {{"case_csv_path", cfg.case_csv_path.generic_string()},
              {"demographics_csv_path", cfg.demographics_csv_path.generic_string()}}},
            {"region", in.series.region},
            {"estimation_window", {in.series.start().iso(), in.series.end().iso()}},
            {"forecast_end", cfg.forecast_end->iso()},
            {"gamma", cfg.gamma},
            {"folds", cfg.folds},
            {"rho_grid_step", cfg.rho_grid_step},
            {"integrator_step_days", cfg.integrator_step_days},
            {"output_format", detail::format_name(cfg.output_format)},
            {"population", in.region.population},
            {"beta", b},
            {"rho", r},
            {"cv_error", estimated->cv.cv_error},
            {"calibration_objective", calibrated->objective},
            {"validation",
             {{"mae_active", rep.mae_active},
              {"rmse_active", rep.rmse_active},
              {"mae_removed", rep.mae_removed},
              {"rmse_removed", rep.rmse_removed}}},
            {"forecast",
             {{"endpoint_active", fr.endpoint_active},
              {"endpoint_recovered", fr.endpoint_recovered}}},
            {"data_warnings", in.warnings},
            {"outputs", outputs}};
        files.add("manifest.json", manifest.dump(2) + "\n");

        out << "region: " << in.series.region << "\n"
            << "beta: " << io::fmt6(b) << "\n"
            << "rho: " << io::fmt6(r) << "\n";
        print_validation(rep);
        print_forecast(fr);
        detail::stage("write", [&] { files.commit(cfg.output_dir); return 0; });
        return 0;
    } catch (const Error& e) {
        err << "epifit: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        err << "epifit: " << e.what() << "\n";
        return static_cast<int>(ErrorKind::data);
    }
}

}  // namespace epifit::cli
