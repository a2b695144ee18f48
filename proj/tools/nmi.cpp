// nmi: command-line front end over the C API.
//
//   nmi <command> <file> [--route R] [--n N] [--monomial M] [--direction D]
//       [--falsify-box K] [--budget-points P] [--budget-seconds S]
//       [--format text|kv] [--timing]
//
// Exit codes: 0 verdict, 2 parse error, 3 budget exceeded, 4 unsupported
// input, 5 bad arguments, 1 internal error. "-" reads the file from stdin.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nmi/nmi.h"

namespace {

std::optional<std::string> read_input(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int fail(nmi_status status, const std::string& message) {
    std::cerr << "nmi: " << nmi_status_name(status) << ": " << message << '\n';
    return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normality and integral closure of monomial ideals, with certificates"};
    app.set_version_flag("--version", nmi_version());

    std::string command;
    std::string path;
    std::optional<std::string> route, monomial, direction, format_name;
    std::optional<int> n, falsify_box;
    std::optional<unsigned long long> budget_points;
    std::optional<double> budget_seconds;
    bool timing = false;

    app.add_option("command", command, "normal | membership | closure | hilbert | graph-report | irp | covers | hochster")
        ->required()
        ->check(CLI::IsMember({"normal", "membership", "closure", "hilbert", "graph-report", "irp", "covers",
                               "hochster"}));
    app.add_option("file", path, "input file, or - for stdin")->required();
    app.add_option("--route", route, "normal: rees | bset | auto")->check(CLI::IsMember({"rees", "bset", "auto"}));
    app.add_option("--n", n, "power n")->check(CLI::PositiveNumber);
    app.add_option("--monomial", monomial, "membership: monomial such as t1^2*t3");
    app.add_option("--direction", direction, "irp: ge | le")->check(CLI::IsMember({"ge", "le"}));
    app.add_option("--falsify-box", falsify_box, "irp: scan right-hand sides in [0,K]^s")->check(CLI::NonNegativeNumber);
    app.add_option("--budget-points", budget_points, "cap on enumerated points");
    app.add_option("--budget-seconds", budget_seconds, "wall-clock budget per computation")
        ->envname("NMI_BUDGET_SECONDS")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format_name, "text | kv")->check(CLI::IsMember({"text", "kv"}));
    app.add_flag("--timing", timing, "append wall-clock time to the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return NMI_ERROR_ARGUMENT;
    }

    const auto input = read_input(path);
    if (!input) return fail(NMI_ERROR_ARGUMENT, "cannot read '" + path + "'");

    nmi_options* options = nullptr;
    if (nmi_options_new(&options) != NMI_OK) return fail(NMI_ERROR_INTERNAL, nmi_last_error());
    auto set = [&](const char* key, const std::string& value) {
        nmi_status s = nmi_options_set(options, key, value.c_str());
        if (s != NMI_OK) throw s;
    };
    nmi_report* report = nullptr;
    nmi_status status = NMI_OK;
    try {
        if (route) set("route", *route);
        if (n) set("n", std::to_string(*n));
        if (monomial) set("monomial", *monomial);
        if (direction) set("direction", *direction);
        if (falsify_box) set("falsify-box", std::to_string(*falsify_box));
        if (budget_points) set("budget-points", std::to_string(*budget_points));
        if (budget_seconds) {
            std::ostringstream s;
            s << *budget_seconds;
            set("budget-seconds", s.str());
        }
        if (timing) set("timing", "1");
        status = nmi_run(command.c_str(), input->c_str(), options, &report);
    } catch (nmi_status s) {
        status = s;
    }
    nmi_options_free(options);
    if (status != NMI_OK) return fail(status, nmi_last_error());

    const nmi_format format = format_name == "kv" ? NMI_FORMAT_KV : NMI_FORMAT_TEXT;
    std::fputs(nmi_report_render(report, format), stdout);
    nmi_report_free(report);
    return 0;
}
