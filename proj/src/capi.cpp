#include "nmi/nmi.h"

#include <charconv>
#include <exception>
#include <map>
#include <new>
#include <string>

#include "nmi/closure.hpp"
#include "nmi/cone.hpp"
#include "nmi/formats.hpp"
#include "nmi/report.hpp"

struct nmi_options {
    nmi::CommandOptions value;
};

struct nmi_report {
    nmi::Report value;
    std::map<nmi_format, std::string> rendered;
};

struct nmi_ideal {
    nmi::MonomialIdeal value;
};

namespace {

thread_local std::string last_error;

template <class F>
nmi_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return NMI_OK;
    } catch (const nmi::ParseError& e) {
        last_error = e.what();
        return NMI_ERROR_PARSE;
    } catch (const nmi::BudgetExceeded& e) {
        last_error = e.what();
        return NMI_ERROR_BUDGET;
    } catch (const nmi::UnsupportedInput& e) {
        last_error = e.what();
        return NMI_ERROR_UNSUPPORTED;
    } catch (const nmi::InvalidArgument& e) {
        last_error = e.what();
        return NMI_ERROR_ARGUMENT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return NMI_ERROR_BUDGET;
    } catch (const std::exception& e) {
        last_error = std::string("internal error: ") + e.what();
        return NMI_ERROR_INTERNAL;
    }
}

nmi_status null_argument(const char* what) {
    last_error = std::string(what) + " must not be NULL";
    return NMI_ERROR_ARGUMENT;
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw nmi::InvalidArgument("invalid value '" + text + "' for " + key);
    return value;
}

}  // namespace

extern "C" {

const char* nmi_version(void) { return "1.0.0"; }

const char* nmi_last_error(void) { return last_error.c_str(); }

const char* nmi_status_name(nmi_status status) {
    switch (status) {
        case NMI_OK: return "ok";
        case NMI_ERROR_INTERNAL: return "internal error";
        case NMI_ERROR_PARSE: return "parse error";
        case NMI_ERROR_BUDGET: return "budget exceeded";
        case NMI_ERROR_UNSUPPORTED: return "unsupported input";
        case NMI_ERROR_ARGUMENT: return "invalid argument";
    }
    return "unknown status";
}

nmi_status nmi_options_new(nmi_options** out) {
    if (!out) return null_argument("out");
    return guarded([&] { *out = new nmi_options{}; });
}

nmi_status nmi_options_set(nmi_options* options, const char* key, const char* value) {
    if (!options) return null_argument("options");
    if (!key || !value) return null_argument("key and value");
    return guarded([&] {
        const std::string k = key;
        const std::string v = value;
        auto& o = options->value;
        if (k == "route") {
            o.route = v;
        } else if (k == "n") {
            o.n = parse_number<int>(k, v);
        } else if (k == "monomial") {
            o.monomial = v;
        } else if (k == "direction") {
            o.direction = v;
        } else if (k == "falsify-box") {
            o.falsify_box = parse_number<int>(k, v);
        } else if (k == "budget-points") {
            o.budget_points = parse_number<std::uint64_t>(k, v);
        } else if (k == "budget-seconds") {
            const double s = parse_number<double>(k, v);
            if (!(s > 0)) throw nmi::InvalidArgument("budget-seconds must be positive");
            o.budget_seconds = s;
        } else if (k == "timing") {
            o.timing = v == "1" || v == "true";
        } else {
            throw nmi::InvalidArgument("unknown option '" + k + "'");
        }
    });
}

void nmi_options_free(nmi_options* options) { delete options; }

nmi_status nmi_run(const char* command, const char* input, const nmi_options* options, nmi_report** out) {
    if (!command) return null_argument("command");
    if (!input) return null_argument("input");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        const nmi::CommandOptions defaults;
        nmi::Report report = nmi::run_command(command, input, options ? options->value : defaults);
        *out = new nmi_report{std::move(report), {}};
    });
}

const char* nmi_report_render(nmi_report* report, nmi_format format) {
    if (!report) return nullptr;
    auto it = report->rendered.find(format);
    if (it == report->rendered.end()) {
        const auto f = format == NMI_FORMAT_KV ? nmi::OutputFormat::kv : nmi::OutputFormat::text;
        it = report->rendered.emplace(format, report->value.render(f)).first;
    }
    return it->second.c_str();
}

const char* nmi_report_get(const nmi_report* report, const char* key) {
    if (!report || !key) return nullptr;
    const std::string* v = report->value.find(key);
    return v ? v->c_str() : nullptr;
}

void nmi_report_free(nmi_report* report) { delete report; }

nmi_status nmi_ideal_parse(const char* text, nmi_ideal** out) {
    if (!text) return null_argument("text");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = new nmi_ideal{nmi::parse_ideal(text)}; });
}

size_t nmi_ideal_num_vars(const nmi_ideal* ideal) { return ideal ? ideal->value.num_vars() : 0; }

size_t nmi_ideal_num_gens(const nmi_ideal* ideal) { return ideal ? ideal->value.num_gens() : 0; }

nmi_status nmi_ideal_generator(const nmi_ideal* ideal, size_t i, int* exponents) {
    if (!ideal) return null_argument("ideal");
    if (!exponents) return null_argument("exponents");
    if (i >= ideal->value.num_gens()) {
        last_error = "generator index out of range";
        return NMI_ERROR_ARGUMENT;
    }
    const auto& g = ideal->value.gens()[i];
    for (std::size_t j = 0; j < g.num_vars(); ++j) exponents[j] = g[j];
    return NMI_OK;
}

nmi_status nmi_ideal_is_normal(const nmi_ideal* ideal, double budget_seconds, int* normal) {
    if (!ideal) return null_argument("ideal");
    if (!normal) return null_argument("normal");
    return guarded([&] {
        std::optional<double> seconds;
        if (budget_seconds > 0) seconds = budget_seconds;
        const nmi::Budget budget(nmi::default_budget_points, seconds);
        *normal = nmi::normality_via_rees(ideal->value, budget).normal ? 1 : 0;
    });
}

nmi_status nmi_ideal_closure_member(const nmi_ideal* ideal, const int* exponents, int n, int* member) {
    if (!ideal) return null_argument("ideal");
    if (!exponents) return null_argument("exponents");
    if (!member) return null_argument("member");
    return guarded([&] {
        if (n < 1) throw nmi::InvalidArgument("n must be at least 1");
        std::vector<int> a(exponents, exponents + ideal->value.num_vars());
        *member = nmi::closure_membership(ideal->value, nmi::Exponent(std::move(a)), n).member ? 1 : 0;
    });
}

void nmi_ideal_free(nmi_ideal* ideal) { delete ideal; }

}  // extern "C"
