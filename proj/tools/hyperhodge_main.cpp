#include <CLI11.hpp>

#include <deque>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "hyperhodge/json_io.hpp"
#include "hyperhodge/random_data.hpp"

namespace hh = hyperhodge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw hh::Error("ParseError", "cannot open input file: " + path);
    }
    std::ostringstream os;
    os << file.rdbuf();
    return os.str();
}

hh::Json parse_json(const std::string& text)
{
    hh::Json j = hh::Json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw hh::Error("ParseError", "input is not valid JSON");
    }
    return j;
}

// One result object per command; JSON and text output both render it, so
// the two formats cannot drift apart.
hh::Json run_command(const std::string& command, const hh::Json& input, int& exit_code)
{
    if (command == "validate") {
        return hh::to_json(hh::data_from_json(input));
    }
    if (command == "hodge") {
        const auto data = hh::data_from_json(input);
        hh::Json rho = hh::Json::array();
        for (std::size_t k = 1; k <= data.rank(); ++k) {
            rho.push_back(hh::rho(data, k));
        }
        return hh::Json{{"rho", std::move(rho)},
                        {"hodge_vector", hh::to_json(hh::hodge_vector(data))},
                        {"signature", hh::signature(data)},
                        {"interlacing", hh::interlacing(data)}};
    }
    if (command == "local") {
        const auto data = hh::data_from_json(input);
        const auto nu_zero = hh::local_table_zero(data);
        const auto nu_infinity = hh::local_table_infinity(data);
        return hh::Json{{"nu_zero", hh::to_json(nu_zero)},
                        {"nu_infinity", hh::to_json(nu_infinity)},
                        {"mu_zero", hh::to_json(hh::mu_from_nu(nu_zero))},
                        {"mu_infinity", hh::to_json(hh::mu_from_nu(nu_infinity))}};
    }
    if (command == "real-vhs") {
        const auto data = hh::data_from_json(input);
        const bool self_dual = hh::self_duality_check(data);
        hh::Json out{{"self_dual", self_dual}, {"diamond", nullptr}};
        if (self_dual) {
            out["diamond"] = hh::to_json(hh::real_hodge_diamond(data));
        }
        return out;
    }
    if (command == "mc-verify") {
        const auto report = hh::verify(hh::data_from_json(input));
        if (!report.pass) {
            exit_code = std::max(exit_code, kExitVerificationFailure);
        }
        return hh::to_json(report);
    }
    if (command == "higgs") {
        const auto weights = hh::weights_from_json(input);
        hh::Json out{{"c", hh::to_string(weights.c)},
                     {"delta", weights.delta},
                     {"resonant", weights.resonant},
                     {"ranks", nullptr}};
        if (!weights.resonant) {
            out["ranks"] = hh::to_json(hh::stable_decomposition_ranks(weights));
        }
        return out;
    }
    if (command == "higgs-check") {
        if (!input.is_object() || !input.contains("weights") || !input.contains("candidates") ||
            !input["candidates"].is_array()) {
            throw hh::Error("ParseError", "expected {\"weights\": {...}, \"candidates\": [...]}");
        }
        const auto weights = hh::weights_from_json(input["weights"]);
        std::vector<hh::SubbundleProfile> candidates;
        for (const auto& c : input["candidates"]) {
            candidates.push_back(hh::profile_from_json(c));
        }
        return hh::to_json(hh::check_candidates(weights, candidates));
    }
    throw hh::Error("ParseError", "unknown command: " + command);
}

void render_text_value(const hh::Json& value, std::ostream& os, int indent);

void render_text_table(const hh::Json& rows, std::ostream& os, int indent)
{
    std::vector<std::string> columns;
    for (const auto& [key, value] : rows.front().items()) {
        (void)value;
        columns.push_back(key);
    }
    std::vector<std::vector<std::string>> cells;
    cells.push_back(columns);
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (const auto& column : columns) {
            const auto& v = row.at(column);
            line.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> widths(columns.size(), 0);
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            widths[i] = std::max(widths[i], line[i].size());
        }
    }
    for (const auto& line : cells) {
        os << std::string(indent, ' ');
        for (std::size_t i = 0; i < line.size(); ++i) {
            os << line[i] << std::string(widths[i] - line[i].size() + (i + 1 < line.size() ? 2 : 0), ' ');
        }
        os << "\n";
    }
}

void render_text_value(const hh::Json& value, std::ostream& os, int indent)
{
    const std::string pad(indent, ' ');
    if (value.is_object()) {
        for (const auto& [key, v] : value.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_object())) {
                os << pad << key << ":\n";
                render_text_value(v, os, indent + 2);
            } else if (v.is_array()) {
                os << pad << key << ": " << v.dump() << "\n";
            } else {
                os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
        render_text_table(value, os, indent);
    } else {
        os << pad << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

void emit(const hh::Json& result, const std::string& format)
{
    if (format == "json") {
        std::cout << result.dump(2) << "\n";
    } else {
        render_text_value(result, std::cout, 0);
    }
}

int run_single(const std::string& command, const std::string& input_path, const std::string& format)
{
    int exit_code = kExitOk;
    const hh::Json input = parse_json(read_input(input_path));
    emit(run_command(command, input, exit_code), format);
    return exit_code;
}

int run_mc_verify_random(std::size_t count, std::size_t max_h, unsigned max_den, std::uint64_t seed,
                         const std::string& format)
{
    std::mt19937_64 rng(seed);
    int exit_code = kExitOk;
    for (std::size_t i = 0; i < count; ++i) {
        const auto data = hh::random_hyperdata(rng, max_h, max_den);
        const auto report = hh::verify(data);
        if (!report.pass) {
            exit_code = std::max(exit_code, kExitVerificationFailure);
        }
        if (format == "json") {
            std::cout << hh::to_json(report).dump() << "\n";
        } else {
            std::cout << (report.pass ? "pass " : "FAIL ") << hh::to_json(data).dump() << "\n";
        }
    }
    return exit_code;
}

// Batch mode: one JSON record per line, {"command": ..., "input": ...};
// records are processed by a bounded worker window and results are
// streamed strictly in input order.
int run_batch(const std::string& input_path, unsigned jobs)
{
    std::istream* in = &std::cin;
    std::ifstream file;
    if (input_path != "-") {
        file.open(input_path);
        if (!file) {
            std::cerr << "ParseError: cannot open input file: " << input_path << "\n";
            return kExitInputError;
        }
        in = &file;
    }

    const auto process = [](std::string line) -> std::pair<std::string, int> {
        int exit_code = kExitOk;
        hh::Json out;
        try {
            const hh::Json record = parse_json(line);
            if (!record.is_object() || !record.contains("command") || !record.contains("input")) {
                throw hh::Error("ParseError", "expected {\"command\": ..., \"input\": ...}");
            }
            out = hh::Json{{"ok", true},
                           {"result", run_command(record["command"].get<std::string>(), record["input"], exit_code)}};
        } catch (const hh::Error& e) {
            out = hh::Json{{"ok", false}, {"error", e.name()}, {"message", e.what()}};
            exit_code = kExitInputError;
        }
        return {out.dump(), exit_code};
    };

    int exit_code = kExitOk;
    std::deque<std::future<std::pair<std::string, int>>> window;
    const auto drain_one = [&] {
        auto [text, code] = window.front().get();
        window.pop_front();
        std::cout << text << "\n";
        exit_code = std::max(exit_code, code);
    };

    std::string line;
    while (std::getline(*in, line)) {
        if (line.empty()) {
            continue;
        }
        if (jobs <= 1) {
            auto [text, code] = process(line);
            std::cout << text << "\n";
            exit_code = std::max(exit_code, code);
            continue;
        }
        window.push_back(std::async(std::launch::async, process, line));
        if (window.size() >= jobs) {
            drain_one();
        }
    }
    while (!window.empty()) {
        drain_one();
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Hodge-theoretic invariants of regular hypergeometric connections"};
    app.require_subcommand(1);

    std::string input_path = "-";
    std::string format = "json";
    std::size_t random_count = 0;
    std::size_t max_h = 6;
    unsigned max_den = 12;
    std::uint64_t seed = 0;
    unsigned jobs = 1;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", input_path, "Input file path, or - for stdin")->capture_default_str();
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
        return cmd;
    };

    for (const char* name : {"validate", "hodge", "local", "real-vhs", "higgs", "higgs-check"}) {
        add_common(app.add_subcommand(name));
    }
    auto* mc = add_common(app.add_subcommand("mc-verify"));
    mc->add_option("--random", random_count, "Verify N seeded random data instead of reading input");
    mc->add_option("--max-h", max_h, "Maximum rank for random data")->capture_default_str();
    mc->add_option("--max-den", max_den, "Maximum denominator for random data")->capture_default_str();
    mc->add_option("--seed", seed, "Seed for the random-data generator")->capture_default_str();
    auto* batch = app.add_subcommand("batch");
    batch->add_option("--input", input_path, "Input file path, or - for stdin")->capture_default_str();
    batch->add_option("--jobs", jobs, "Number of parallel workers")->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        if (command == "batch") {
            return run_batch(input_path, jobs);
        }
        if (command == "mc-verify" && random_count > 0) {
            return run_mc_verify_random(random_count, max_h, max_den, seed, format);
        }
        return run_single(command, input_path, format);
    } catch (const hh::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    }
}
