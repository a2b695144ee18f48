#include <doctest.h>

#include <cstring>
#include <string>

#include "fixtures.hpp"
#include "nmi/nmi.h"
#include "nmi/report.hpp"

using namespace nmi;

namespace {

std::string kv(const std::string& command, const std::string& input, const CommandOptions& o = {}) {
    return run_command(command, input, o).render(OutputFormat::kv);
}

std::string get(const Report& r, const std::string& key) {
    const std::string* v = r.find(key);
    return v ? *v : "<missing>";
}

}  // namespace

TEST_CASE("normal command on the degree-7 ideal") {
    const std::string input = fixtures::read_data("degree7.ideal");
    CommandOptions o;
    o.route = "rees";
    const Report r = run_command("normal", input, o);
    CHECK(get(r, "verdict") == "normal");
    o.route = "bset";
    try {
        run_command("normal", input, o);
        FAIL("bset route accepted a degree-7 ideal");
    } catch (const UnsupportedInput& e) {
        CHECK(std::string(e.what()).find("degree 2") != std::string::npos);
    }
}

TEST_CASE("normal command on two triangles") {
    CommandOptions o;
    o.route = "auto";
    const Report r = run_command("normal", fixtures::read_data("two_triangles.ideal"), o);
    CHECK(get(r, "verdict") == "not normal");
    CHECK(get(r, "certificate.witness_monomial") == "t1*t2*t3*t4*t5*t6");
    CHECK(get(r, "certificate.witness_power") == "3");
    CHECK(get(r, "certificate.check.verified") == "yes");
}

TEST_CASE("membership and closure commands") {
    CommandOptions o;
    o.n = 1;
    o.monomial = "t1*t2";
    Report r = run_command("membership", fixtures::read_data("squares.ideal"), o);
    CHECK(get(r, "verdict") == "member");
    CHECK(get(r, "certificate.lambda") == "(1/2,1/2)");
    o.n = 2;
    o.monomial = "t1*t2*t3";
    r = run_command("membership", fixtures::read_data("triangle.ideal"), o);
    CHECK(get(r, "verdict") == "not member");
    CHECK(get(r, "lp_value") == "3/2");

    o.n = 1;
    r = run_command("closure", fixtures::read_data("squares.ideal"), o);
    CHECK(get(r, "closure.generators") == "t2^2, t1*t2, t1^2");
    r = run_command("closure", fixtures::read_data("triangle.ideal"), o);
    CHECK(get(r, "power_is_closed") == "yes");
    CHECK_THROWS_AS(run_command("closure", fixtures::read_data("triangle.ideal"), CommandOptions{}), InvalidArgument);
}

TEST_CASE("hilbert command") {
    Report r = run_command("hilbert", fixtures::read_data("degree7_bset.block"), {});
    CHECK(get(r, "verdict") == "input is NOT a Hilbert basis");
    CHECK(get(r, "certificate.verified") == "yes");
    r = run_command("hilbert", fixtures::read_data("degree7_rees.block"), {});
    CHECK(get(r, "verdict") == "normal");
    r = run_command("hilbert", fixtures::read_data("unit_vectors.block"), {});
    CHECK(get(r, "verdict") == "input is a Hilbert basis");
}

TEST_CASE("graph report cells") {
    Report r = run_command("graph-report", fixtures::read_data("kaiser_h4.graph"), {});
    CHECK(get(r, "I(G).verdict") == "not normal");
    CHECK(get(r, "I_c(G).verdict") == "not normal");
    CHECK(get(r, "I(Gbar).verdict") == "normal");
    CHECK(get(r, "I_c(Gbar).verdict") == "normal");
    CHECK(get(r, "duality.applicable") == "no");

    r = run_command("graph-report", fixtures::read_data("graph13.graph"), {});
    CHECK(get(r, "I(G).verdict") == "normal");
    CHECK(get(r, "I_c(G).verdict") == "not normal");
    CHECK(get(r, "I_c(G).certificate.witness_monomial") ==
          "t1^4*t2^4*t3^4*t4^4*t5^4*t6^4*t7^2*t8^4*t9^4*t10^4*t11^4*t12^4*t13^4");
    CHECK(get(r, "I_c(G).certificate.witness_power") == "5");
}

TEST_CASE("graph report records budget failures per cell") {
    CommandOptions o;
    o.budget_points = 2;
    const Report r = run_command("graph-report", fixtures::read_data("kaiser_h4.graph"), o);
    CHECK(get(r, "I_c(G).verdict") == "unknown");
    CHECK(get(r, "I_c(G).error").rfind("budget exceeded", 0) == 0);
    CHECK(get(r, "I(G).verdict") == "not normal");
}

TEST_CASE("irp, covers and hochster commands") {
    CommandOptions o;
    o.direction = "ge";
    o.falsify_box = 2;
    Report r = run_command("irp", fixtures::read_data("squares.ideal"), o);
    CHECK(get(r, "verdict") == "integer rounding fails");
    CHECK(get(r, "falsify.counterexample") != "none in box");
    o.direction = "le";
    r = run_command("irp", fixtures::read_data("triangle.ideal"), o);
    CHECK(get(r, "route.duality") == get(r, "route.hilbert_basis"));

    r = run_command("covers", fixtures::read_data("antihole7.graph"), {});
    CHECK(get(r, "blocker.size") == "7");
    CHECK(get(r, "cliques_cross_check") == "yes");

    r = run_command("hochster", fixtures::read_data("two_triangles.graph"), {});
    CHECK(get(r, "configurations.count") == "1");
    CHECK(get(r, "configuration.1.check.verified") == "yes");
}

TEST_CASE("reports are deterministic and omit timing unless asked") {
    const std::string input = fixtures::read_data("kaiser_h4.graph");
    CHECK(kv("graph-report", input) == kv("graph-report", input));
    CHECK(kv("graph-report", input).find("timing") == std::string::npos);
    CommandOptions o;
    o.timing = true;
    CHECK(kv("hochster", input, o).find("timing.seconds=") != std::string::npos);
    const std::string text = run_command("hochster", input, {}).render(OutputFormat::text);
    CHECK(text.rfind("nmi hochster\n", 0) == 0);
}

TEST_CASE("C API handles, options and status codes") {
    nmi_options* o = nullptr;
    REQUIRE(nmi_options_new(&o) == NMI_OK);
    CHECK(nmi_options_set(o, "route", "rees") == NMI_OK);
    CHECK(nmi_options_set(o, "n", "abc") == NMI_ERROR_ARGUMENT);
    CHECK(std::strlen(nmi_last_error()) > 0);
    CHECK(nmi_options_set(o, "colour", "blue") == NMI_ERROR_ARGUMENT);

    nmi_report* r = nullptr;
    const std::string input = fixtures::read_data("two_triangles.ideal");
    REQUIRE(nmi_run("normal", input.c_str(), o, &r) == NMI_OK);
    CHECK(std::string(nmi_report_get(r, "verdict")) == "not normal");
    CHECK(nmi_report_get(r, "no.such.key") == nullptr);
    CHECK(std::string(nmi_report_render(r, NMI_FORMAT_KV)).rfind("command=normal\n", 0) == 0);
    nmi_report_free(r);

    CHECK(nmi_run("normal", "vars 2\n1 2 3\n", o, &r) == NMI_ERROR_PARSE);
    CHECK(r == nullptr);
    CHECK(std::string(nmi_last_error()).find("line 2") != std::string::npos);
    nmi_options_set(o, "route", "bset");
    CHECK(nmi_run("normal", fixtures::read_data("degree7.ideal").c_str(), o, &r) == NMI_ERROR_UNSUPPORTED);
    nmi_options_set(o, "route", "rees");
    nmi_options_set(o, "budget-points", "1");
    CHECK(nmi_run("hilbert", fixtures::read_data("degree7_bset.block").c_str(), o, &r) == NMI_ERROR_BUDGET);
    CHECK(nmi_run("frobnicate", "", o, &r) == NMI_ERROR_ARGUMENT);
    CHECK(nmi_run(nullptr, "", o, &r) == NMI_ERROR_ARGUMENT);
    nmi_options_free(o);
}

TEST_CASE("C API ideal handles") {
    nmi_ideal* I = nullptr;
    REQUIRE(nmi_ideal_parse("vars 2\nt1^2\nt2^2\n", &I) == NMI_OK);
    CHECK(nmi_ideal_num_vars(I) == 2);
    CHECK(nmi_ideal_num_gens(I) == 2);
    int e[2];
    CHECK(nmi_ideal_generator(I, 1, e) == NMI_OK);
    CHECK(e[0] == 2);
    CHECK(nmi_ideal_generator(I, 5, e) == NMI_ERROR_ARGUMENT);
    int normal = -1;
    CHECK(nmi_ideal_is_normal(I, 0, &normal) == NMI_OK);
    CHECK(normal == 0);
    const int a[2] = {1, 1};
    int member = -1;
    CHECK(nmi_ideal_closure_member(I, a, 1, &member) == NMI_OK);
    CHECK(member == 1);
    CHECK(nmi_ideal_closure_member(I, a, 0, &member) == NMI_ERROR_ARGUMENT);
    nmi_ideal_free(I);
    CHECK(nmi_ideal_parse("vars x\n", &I) == NMI_ERROR_PARSE);
}
