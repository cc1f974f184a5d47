// vicolor: solve, scan, construct and export from the command line.
//
// Exit codes: 0 completed, 1 usage or input error, 2 counterexample found,
// 3 node budget exhausted on some row.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vicolor/io.hpp"
#include "vicolor/workflows.hpp"

using namespace vicolor;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCounterexample = 2;
constexpr int kExhausted = 3;

std::string read_all(const std::string& path)
{
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<StreamEntry> read_stream(const std::string& path)
{
    std::istringstream in(read_all(path));
    return read_graph_stream(in);
}

int run_solve(const std::string& input, const std::string& param, std::optional<int> s, long long budget)
{
    int code = kOk;
    for (const auto& r : solve_stream(read_stream(input), param, s, budget)) {
        if (!r.certificate) {
            std::cerr << "line " << r.line << ": " << r.error << "\n";
            code = kUsage;
            continue;
        }
        std::cout << to_json(*r.certificate) << "\n";
        if (r.certificate->status == CertificateStatus::Unknown && code == kOk)
            code = kExhausted;
    }
    return code;
}

int run_scan(const std::optional<std::string>& input, const ScanOptions& opt)
{
    const auto report = input ? scan(read_stream(*input), opt) : scan_catalog(opt);
    std::cout << to_json(report) << "\n";
    if (report.counterexamples() > 0)
        return kCounterexample;
    return report.budget_exhausted().empty() ? kOk : kExhausted;
}

int run_construct(ConstructRequest req, const std::optional<std::string>& input)
{
    if (input) {
        for (const auto& e : read_stream(*input)) {
            if (!e.graph)
                throw std::invalid_argument("line " + std::to_string(e.line) + ": " + e.error);
            req.graph = e.graph;
            break;
        }
        if (!req.graph)
            throw std::invalid_argument("input holds no graph");
    }
    std::cout << to_json(construct(req)) << "\n";
    return kOk;
}

int run_export(const std::string& input, const std::string& format)
{
    const auto cert = certificate_from_json(read_all(input));
    if (format == "json")
        std::cout << to_json(cert, 2) << "\n";
    else
        std::cout << certificate_dot(cert);
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"vi-simultaneous coloring toolkit"};
    app.require_subcommand(1);

    long long budget = kDefaultNodeBudget;
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--node-budget", budget, "search nodes per exact computation")->check(CLI::PositiveNumber);
    };

    auto* solve_cmd = app.add_subcommand("solve", "exact parameter of every graph in a graph6 stream");
    std::string param;
    std::optional<int> s;
    std::string solve_input;
    solve_cmd->add_option("--param", param)->required()->check(CLI::IsMember(solve_parameters()));
    solve_cmd->add_option("--s", s, "spread bound")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--input", solve_input, "graph6 file, - for stdin")->required();
    add_budget(solve_cmd);

    auto* scan_cmd = app.add_subcommand("scan", "check both conjectured bounds over a catalog");
    ScanOptions scan_opt;
    std::optional<std::string> scan_input;
    std::vector<std::string> checks = {"2d1", "total-le-vi"};
    scan_cmd->add_option("--max-n", scan_opt.max_n)->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--input", scan_input, "graph6 file, - for stdin (default: built-in catalog)");
    scan_cmd->add_option("--checks", checks)->delimiter(',')->check(CLI::IsMember({"2d1", "total-le-vi"}));
    scan_cmd->add_option("--threads", scan_opt.threads)->check(CLI::NonNegativeNumber);
    add_budget(scan_cmd);

    auto* construct_cmd = app.add_subcommand("construct", "colored witness from a family construction");
    ConstructRequest req;
    std::optional<std::string> construct_input;
    construct_cmd->add_option("--family", req.family)->required()->check(CLI::IsMember(construct_families()));
    construct_cmd->add_option("--n", req.n);
    construct_cmd->add_option("--m", req.m);
    construct_cmd->add_option("--s", req.s);
    construct_cmd->add_option("--input", construct_input, "graph6 file, - for stdin");

    auto* export_cmd = app.add_subcommand("export", "render a certificate");
    std::string format;
    std::string export_input = "-";
    export_cmd->add_option("--format", format)->required()->check(CLI::IsMember({"dot", "json"}));
    export_cmd->add_option("--input", export_input, "certificate JSON file, - for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve_cmd)
            return run_solve(solve_input, param, s, budget);
        if (*scan_cmd) {
            scan_opt.node_budget = budget;
            scan_opt.check_2d1 = std::find(checks.begin(), checks.end(), "2d1") != checks.end();
            scan_opt.check_total_le_vi = std::find(checks.begin(), checks.end(), "total-le-vi") != checks.end();
            return run_scan(scan_input, scan_opt);
        }
        if (*construct_cmd)
            return run_construct(req, construct_input);
        return run_export(export_input, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
