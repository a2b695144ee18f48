#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nmi {

enum class OutputFormat { text, kv };

/// Ordered key-value document produced by one command.
///
/// Keys are dotted paths ("verdict", "certificate.witness_monomial"); values
/// are single-line strings. Rendering is a pure function of the entries, so
/// identical runs give identical bytes. Wall-clock timing is only attached
/// when requested.
class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    const std::string& command() const noexcept { return command_; }
    const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }

    void add(std::string key, std::string value);
    /// First value stored under `key`, or nullptr.
    const std::string* find(const std::string& key) const;

    void set_elapsed(double seconds) { elapsed_ = seconds; }

    /// kv: "key=value" per line, starting with "command=<name>".
    /// text: aligned "key  value" lines under a heading.
    std::string render(OutputFormat format) const;

private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> entries_;
    std::optional<double> elapsed_;
};

struct CommandOptions {
    /// normal: rees | bset | auto (auto uses the Rees cone).
    std::string route = "auto";
    std::optional<int> n;
    /// membership: monomial string such as "t1^2*t3".
    std::optional<std::string> monomial;
    /// irp: ge | le.
    std::string direction = "ge";
    std::optional<int> falsify_box;
    std::optional<std::uint64_t> budget_points;
    std::optional<double> budget_seconds;
    /// Attach wall-clock time to the report (breaks byte-for-byte determinism).
    bool timing = false;
};

/// Point budget used when none is given.
constexpr std::uint64_t default_budget_points = 50'000'000;

/// Commands: normal, membership, closure, hilbert, graph-report, irp,
/// covers, hochster. `input` is the content of the command's file.
///
/// Throws ParseError, BudgetExceeded, UnsupportedInput or InvalidArgument;
/// graph-report instead records per-cell budget and unsupported errors.
Report run_command(const std::string& command, const std::string& input, const CommandOptions& options);

std::vector<std::string> command_names();

}  // namespace nmi
