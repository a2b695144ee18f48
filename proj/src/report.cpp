#include "nmi/report.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "nmi/closure.hpp"
#include "nmi/combinatorics.hpp"
#include "nmi/cone.hpp"
#include "nmi/formats.hpp"

namespace nmi {

void Report::add(std::string key, std::string value) {
    std::replace(value.begin(), value.end(), '\n', ' ');
    entries_.emplace_back(std::move(key), std::move(value));
}

const std::string* Report::find(const std::string& key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return &v;
    return nullptr;
}

std::string Report::render(OutputFormat format) const {
    std::ostringstream out;
    std::string elapsed;
    if (elapsed_) {
        std::ostringstream e;
        e << std::fixed << std::setprecision(3) << *elapsed_;
        elapsed = e.str();
    }
    if (format == OutputFormat::kv) {
        out << "command=" << command_ << '\n';
        for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
        if (elapsed_) out << "timing.seconds=" << elapsed << '\n';
        return out.str();
    }
    std::size_t width = elapsed_ ? std::string("timing.seconds").size() : 0;
    for (const auto& [k, v] : entries_) width = std::max(width, k.size());
    out << "nmi " << command_ << '\n';
    for (const auto& [k, v] : entries_) out << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
    if (elapsed_) out << "  " << std::left << std::setw(static_cast<int>(width)) << "timing.seconds" << "  " << elapsed << '\n';
    return out.str();
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Budget make_budget(const CommandOptions& o) {
    return Budget(o.budget_points.value_or(default_budget_points), o.budget_seconds);
}

void add_budget(Report& r, const CommandOptions& o) {
    r.add("budget.points", std::to_string(o.budget_points.value_or(default_budget_points)));
    if (o.budget_seconds) {
        std::ostringstream s;
        s << *o.budget_seconds;
        r.add("budget.seconds", s.str());
    } else {
        r.add("budget.seconds", "unlimited");
    }
    r.add("budget.status", "ok");
}

std::string monomial_list(const std::vector<Exponent>& gens) {
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + to_monomial_string(gens[i]);
    return out.empty() ? "(none)" : out;
}

void describe_ideal(Report& r, const std::string& prefix, const MonomialIdeal& I) {
    r.add(prefix + "vars", std::to_string(I.num_vars()));
    r.add(prefix + "kind", to_string(I.kind()));
    r.add(prefix + "generators.count", std::to_string(I.num_gens()));
    r.add(prefix + "generators", monomial_list(I.gens()));
}

int require_n(const CommandOptions& o) {
    if (!o.n) throw InvalidArgument("this command needs --n");
    if (*o.n < 1) throw InvalidArgument("--n must be at least 1");
    return *o.n;
}

// Re-checks t^a ∈ closure(I^n) \ I^n and records both halves.
void add_non_normality_check(Report& r, const std::string& prefix, const MonomialIdeal& I, const Exponent& a, int n,
                             const Budget& budget) {
    const MembershipVerdict v = closure_membership(I, a, n);
    budget.check_time("certificate check");
    const bool in_power = power_membership(I, a, n).has_value();
    r.add(prefix + "check.closure_lp_value", lp::to_string(v.lp_value));
    r.add(prefix + "check.in_closure", yes_no(v.member && verify_membership(I, a, n, v)));
    r.add(prefix + "check.in_power", yes_no(in_power));
    r.add(prefix + "check.verified", yes_no(v.member && !in_power));
}

void add_normality(Report& r, const std::string& prefix, const MonomialIdeal& I, const NormalityReport& nr,
                   const Budget& budget) {
    r.add(prefix + "verdict", nr.normal ? "normal" : "not normal");
    r.add(prefix + "route", nr.route);
    if (nr.route == "convention") {
        r.add(prefix + "certificate", std::string("the ") + to_string(I.kind()) + " ideal is normal by convention");
        return;
    }
    r.add(prefix + "hilbert_basis.size", std::to_string(nr.hilbert_basis_size));
    if (nr.normal) {
        r.add(prefix + "certificate", nr.route == "bset" ? "B is the Hilbert basis of its cone"
                                                         : "the Rees cone generators are its Hilbert basis");
        return;
    }
    if (nr.cone_witness) r.add(prefix + "certificate.cone_witness", to_string(*nr.cone_witness));
    if (nr.witness_monomial) {
        r.add(prefix + "certificate.witness_monomial", to_monomial_string(*nr.witness_monomial));
        r.add(prefix + "certificate.witness_power", std::to_string(nr.witness_power));
        if (nr.witness_lp_value) r.add(prefix + "certificate.lp_value", lp::to_string(*nr.witness_lp_value));
        if (nr.scale_p > 0) {
            r.add(prefix + "certificate.p", std::to_string(nr.scale_p));
            std::string mult;
            for (std::size_t i = 0; i < nr.scale_multiplicities.size(); ++i)
                mult += (i ? " " : "") + std::to_string(nr.scale_multiplicities[i]);
            r.add(prefix + "certificate.multiplicities", mult);
        }
        add_non_normality_check(r, prefix + "certificate.", I, *nr.witness_monomial, nr.witness_power, budget);
    }
}

std::string config_to_string(const HochsterConfig& h) {
    return cycle_to_string(h.cycle1) + " | " + cycle_to_string(h.cycle2);
}

std::string vertex_list(const std::vector<std::size_t>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i] + 1);
    return out + "}";
}

// Edge-ideal normality by the Hochster criterion; a configuration is
// certified through its m-monomial.
void add_edge_ideal_cell(Report& r, const std::string& prefix, const Graph& G, const Budget& budget) {
    const MonomialIdeal I = edge_ideal(G);
    r.add(prefix + "generators.count", std::to_string(I.num_gens()));
    if (!I.is_proper()) {
        r.add(prefix + "verdict", "normal");
        r.add(prefix + "route", "convention");
        r.add(prefix + "certificate", std::string("the ") + to_string(I.kind()) + " ideal is normal by convention");
        return;
    }
    const auto configs = hochster_configurations(G);
    r.add(prefix + "verdict", configs.empty() ? "normal" : "not normal");
    r.add(prefix + "route", "hochster");
    if (configs.empty()) {
        r.add(prefix + "certificate", "theorem-backed: no Hochster configuration");
        return;
    }
    const auto m = m_monomial(G.num_vertices(), configs.front().cycle1, configs.front().cycle2);
    r.add(prefix + "certificate.configuration", config_to_string(configs.front()));
    r.add(prefix + "certificate.witness_monomial", to_monomial_string(m.exponent));
    r.add(prefix + "certificate.witness_power", std::to_string(m.level));
    add_non_normality_check(r, prefix + "certificate.", I, m.exponent, m.level, budget);
}

void add_cover_ideal_cell(Report& r, const std::string& prefix, const Graph& G, const Budget& budget) {
    const MonomialIdeal I = cover_ideal(G);
    r.add(prefix + "generators.count", std::to_string(I.num_gens()));
    add_normality(r, prefix, I, normality_via_rees(I, budget), budget);
}

// Runs `body` into a scratch report; budget and unsupported-input errors
// become the cell's verdict instead of aborting the whole command.
void cell(Report& r, const std::string& prefix, const std::function<void(Report&)>& body) {
    Report scratch(r.command());
    try {
        body(scratch);
    } catch (const BudgetExceeded& e) {
        r.add(prefix + "verdict", "unknown");
        r.add(prefix + "error", std::string("budget exceeded: ") + e.what());
        return;
    } catch (const UnsupportedInput& e) {
        r.add(prefix + "verdict", "unknown");
        r.add(prefix + "error", std::string("unsupported: ") + e.what());
        return;
    }
    for (const auto& [k, v] : scratch.entries()) r.add(k, v);
}

Report cmd_normal(const std::string& input, const CommandOptions& o) {
    Report r("normal");
    const MonomialIdeal I = parse_ideal(input);
    describe_ideal(r, "ideal.", I);
    if (o.route != "rees" && o.route != "bset" && o.route != "auto")
        throw InvalidArgument("unknown route '" + o.route + "' (expected rees, bset or auto)");
    const Budget budget = make_budget(o);
    r.add("route.requested", o.route);
    if (o.route == "bset" && I.is_proper()) {
        for (const auto& g : I.gens())
            if (g.degree() != 2)
                throw UnsupportedInput("route bset applies only to ideals generated in degree 2; generator " +
                                       to_monomial_string(g) + " has degree " + std::to_string(g.degree()) +
                                       ". Use --route rees");
    }
    const NormalityReport nr = o.route == "bset" ? normality_via_bset(I, budget) : normality_via_rees(I, budget);
    add_normality(r, "", I, nr, budget);
    add_budget(r, o);
    return r;
}

Report cmd_membership(const std::string& input, const CommandOptions& o) {
    Report r("membership");
    const MonomialIdeal I = parse_ideal(input);
    describe_ideal(r, "ideal.", I);
    const int n = require_n(o);
    if (!o.monomial) throw InvalidArgument("membership needs --monomial");
    const Exponent a = parse_monomial(*o.monomial, I.num_vars());
    r.add("monomial", to_monomial_string(a));
    r.add("n", std::to_string(n));
    const MembershipVerdict v = closure_membership(I, a, n);
    r.add("verdict", v.member ? "member" : "not member");
    r.add("lp_value", lp::to_string(v.lp_value));
    r.add(v.member ? "certificate.lambda" : "certificate.covering_point", lp::to_string(v.witness));
    r.add("certificate.verified", yes_no(verify_membership(I, a, n, v)));
    if (I.kind() != IdealKind::zero) {
        const auto cert = power_membership(I, a, n);
        r.add("power.member", yes_no(cert.has_value()));
        if (cert) {
            std::vector<Exponent> used;
            for (auto i : cert->generator_indices) used.push_back(I.gens()[i]);
            std::string product;
            for (std::size_t i = 0; i < used.size(); ++i) product += (i ? " * " : "") + to_monomial_string(used[i]);
            r.add("power.factors", product.empty() ? "1" : product);
        }
    }
    add_budget(r, o);
    return r;
}

Report cmd_closure(const std::string& input, const CommandOptions& o) {
    Report r("closure");
    const MonomialIdeal I = parse_ideal(input);
    describe_ideal(r, "ideal.", I);
    const int n = require_n(o);
    r.add("n", std::to_string(n));
    const Budget budget = make_budget(o);
    if (!I.is_proper()) throw UnsupportedInput(std::string("closure of the ") + to_string(I.kind()) + " ideal");
    const MonomialIdeal C = closure_generators(I, n, budget);
    r.add("closure.generators.count", std::to_string(C.num_gens()));
    r.add("closure.generators", monomial_list(C.gens()));
    // Number of multisets of n generators bounds the work of forming I^n.
    lp::Rational multisets = 1;
    for (int k = 1; k <= n; ++k) multisets = multisets * lp::Rational(static_cast<long>(I.num_gens()) + k - 1) / k;
    if (multisets <= lp::Rational(static_cast<long>(budget.max_points().value_or(default_budget_points)))) {
        r.add("power_is_closed", yes_no(power(I, n) == C));
    } else {
        r.add("power_is_closed", "not computed (budget)");
    }
    add_budget(r, o);
    return r;
}

Report cmd_hilbert(const std::string& input, const CommandOptions& o) {
    Report r("hilbert");
    const MatrixBlock block = parse_matrix_block(input);
    const Budget budget = make_budget(o);
    r.add("mode", block.mode == MatrixMode::normalization ? "normalization" : "rees_algebra");
    r.add("amb_space", std::to_string(block.amb_space));
    r.add("rows", std::to_string(block.rows.size()));
    if (block.mode == MatrixMode::rees_algebra) {
        std::vector<Exponent> gens;
        for (const auto& row : block.rows) {
            std::vector<int> e;
            for (auto x : row) {
                if (x < 0) throw UnsupportedInput("rees_algebra rows must be exponent vectors with natural entries");
                e.push_back(static_cast<int>(x));
            }
            gens.emplace_back(std::move(e));
        }
        const MonomialIdeal I = make_ideal(block.amb_space - 1, std::move(gens));
        describe_ideal(r, "ideal.", I);
        add_normality(r, "", I, normality_via_rees(I, budget), budget);
        add_budget(r, o);
        return r;
    }
    const IntegerCone C(block.amb_space, block.rows);
    const HilbertBasisReport hb = hilbert_basis(C, budget);
    r.add("verdict", hb.input_is_hb ? "input is a Hilbert basis" : "input is NOT a Hilbert basis");
    r.add("hilbert_basis.size", std::to_string(hb.minimal_hb.size()));
    r.add("cone.facets", std::to_string(hb.facets.size()));
    r.add("cone.simplices", std::to_string(hb.simplices));
    if (hb.witness) {
        r.add("certificate.witness", to_string(*hb.witness));
        const bool in_cone = cone_contains(C, *hb.witness);
        const bool in_semigroup = semigroup_membership(C, *hb.witness, budget).has_value();
        r.add("certificate.in_cone", yes_no(in_cone));
        r.add("certificate.in_semigroup", yes_no(in_semigroup));
        r.add("certificate.verified", yes_no(in_cone && !in_semigroup));
    }
    for (std::size_t i = 0; i < hb.minimal_hb.size(); ++i)
        r.add("hilbert_basis." + std::to_string(i + 1), to_string(hb.minimal_hb[i]));
    add_budget(r, o);
    return r;
}

Report cmd_graph_report(const std::string& input, const CommandOptions& o) {
    Report r("graph-report");
    const Graph G = parse_graph(input);
    const Graph H = complement(G);
    r.add("vertices", std::to_string(G.num_vertices()));
    r.add("edges", std::to_string(G.num_edges()));
    r.add("complement.edges", std::to_string(H.num_edges()));
    const std::size_t beta0 = independence_number(G);
    r.add("independence_number", std::to_string(beta0));
    const auto comps = connected_components(G);
    r.add("components.count", std::to_string(comps.size()));
    for (std::size_t i = 0; i < comps.size(); ++i)
        r.add("components." + std::to_string(i + 1), vertex_list(comps[i].vertices));
    r.add("blocker.size", std::to_string(blocker(G.clutter()).edges().size()));

    auto fresh = [&] { return make_budget(o); };
    cell(r, "I(G).", [&](Report& c) { add_edge_ideal_cell(c, "I(G).", G, fresh()); });
    cell(r, "I_c(G).", [&](Report& c) { add_cover_ideal_cell(c, "I_c(G).", G, fresh()); });
    cell(r, "I(Gbar).", [&](Report& c) { add_edge_ideal_cell(c, "I(Gbar).", H, fresh()); });
    cell(r, "I_c(Gbar).", [&](Report& c) { add_cover_ideal_cell(c, "I_c(Gbar).", H, fresh()); });

    for (const auto& [name, graph] : {std::pair<std::string, const Graph*>{"G", &G}, {"Gbar", &H}}) {
        const auto configs = hochster_configurations(*graph);
        r.add("hochster." + name + ".count", std::to_string(configs.size()));
        for (std::size_t i = 0; i < configs.size(); ++i)
            r.add("hochster." + name + "." + std::to_string(i + 1), config_to_string(configs[i]));
    }

    r.add("duality.applicable", yes_no(beta0 <= 2));
    if (beta0 <= 2) {
        const DualityReport d = duality_criterion(G);
        r.add("duality.I_c(G).verdict", d.cover_ideal_normal ? "normal" : "not normal");
        if (const auto* rees = r.find("I_c(G).verdict"); rees && *rees != "unknown")
            r.add("duality.agrees_with_rees", yes_no((*rees == "normal") == d.cover_ideal_normal));
    }
    cell(r, "reduction.", [&](Report& c) {
        const ReductionReport red = neighbor_mvc_reduction(G, fresh());
        std::vector<std::size_t> chain = red.chain;
        c.add("reduction.chain", chain.empty() ? "(empty)" : vertex_list(chain));
        c.add("reduction.residual_vertices", vertex_list(red.residual_vertices));
        if (red.verdict) {
            c.add("reduction.verdict", *red.verdict ? "normal" : "not normal");
            c.add("reduction.certificate", "theorem-backed, certificate = reduction chain");
        } else {
            c.add("reduction.verdict", "inconclusive");
        }
    });
    add_budget(r, o);
    return r;
}

Report cmd_irp(const std::string& input, const CommandOptions& o) {
    Report r("irp");
    const MonomialIdeal I = parse_ideal(input);
    describe_ideal(r, "ideal.", I);
    if (o.direction != "ge" && o.direction != "le")
        throw InvalidArgument("unknown direction '" + o.direction + "' (expected ge or le)");
    if (!I.is_proper()) throw UnsupportedInput("integer rounding needs a proper ideal");
    const Budget budget = make_budget(o);
    r.add("direction", o.direction);
    r.add("system", o.direction == "ge" ? "x >= 0, xA >= 1" : "x >= 0, xA <= 1");
    if (o.direction == "ge") {
        const NormalityReport nr = normality_via_rees(I, budget);
        r.add("verdict", nr.normal ? "integer rounding holds" : "integer rounding fails");
        add_normality(r, "normality.", I, nr, budget);
    } else {
        const IrpLeReport le = irp_le(incidence_matrix(I), budget);
        r.add("verdict", le.holds ? "integer rounding holds" : "integer rounding fails");
        r.add("route.duality", le.duality_route ? (*le.duality_route ? "holds" : "fails") : "not applicable");
        r.add("route.hilbert_basis",
              le.hilbert_basis_route ? (*le.hilbert_basis_route ? "holds" : "fails") : "not applicable");
    }
    if (o.falsify_box) {
        if (*o.falsify_box < 0) throw InvalidArgument("--falsify-box must be nonnegative");
        const auto ce = irp_falsify_scan(I, o.direction == "ge" ? IrpDirection::ge : IrpDirection::le,
                                         *o.falsify_box, budget);
        r.add("falsify.box", std::to_string(*o.falsify_box));
        r.add("falsify.counterexample", ce ? to_string(IntVector(ce->alpha.entries().begin(), ce->alpha.entries().end()))
                                           : "none in box");
        if (ce) {
            r.add("falsify.lp_value", lp::to_string(ce->lp_value));
            r.add("falsify.integer_value", std::to_string(ce->integer_value));
        }
    }
    add_budget(r, o);
    return r;
}

Report cmd_covers(const std::string& input, const CommandOptions& o) {
    Report r("covers");
    const Clutter C = parse_clutter(input);
    r.add("vertices", std::to_string(C.num_vertices()));
    r.add("edges", std::to_string(C.edges().size()));
    const Clutter B = blocker(C);
    r.add("blocker.size", std::to_string(B.edges().size()));
    std::string covers;
    for (std::size_t i = 0; i < B.edges().size(); ++i) covers += (i ? " " : "") + set_to_string(B.edges()[i]);
    r.add("blocker", covers.empty() ? "(none)" : covers);
    r.add("blocker.involution", yes_no(blocker(B) == C));
    describe_ideal(r, "cover_ideal.", cover_ideal(C));
    const bool is_graph = std::all_of(C.edges().begin(), C.edges().end(),
                                      [](VertexSet e) { return members(e).size() == 2; });
    if (is_graph) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (VertexSet e : C.edges()) pairs.emplace_back(members(e)[0], members(e)[1]);
        const Graph G(C.num_vertices(), pairs);
        r.add("independence_number", std::to_string(independence_number(G)));
        r.add("cliques_cross_check", yes_no(cover_ideal_via_cliques(G) == cover_ideal(C)));
    }
    add_budget(r, o);
    return r;
}

Report cmd_hochster(const std::string& input, const CommandOptions& o) {
    Report r("hochster");
    const Graph G = parse_graph(input);
    const Budget budget = make_budget(o);
    r.add("vertices", std::to_string(G.num_vertices()));
    r.add("edges", std::to_string(G.num_edges()));
    r.add("induced_odd_cycles", std::to_string(induced_odd_cycles(G, G.num_vertices()).size()));
    const auto configs = hochster_configurations(G);
    r.add("configurations.count", std::to_string(configs.size()));
    const MonomialIdeal I = edge_ideal(G);
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const std::string p = "configuration." + std::to_string(i + 1) + ".";
        const auto& h = configs[i];
        r.add(p + "cycles", config_to_string(h));
        r.add(p + "condition_1_2", yes_no(hochster_condition(G, h.cycle1, h.cycle2)));
        r.add(p + "condition_2_1", yes_no(hochster_condition(G, h.cycle2, h.cycle1)));
        const auto m = m_monomial(G.num_vertices(), h.cycle1, h.cycle2);
        r.add(p + "m_monomial", to_monomial_string(m.exponent));
        r.add(p + "level", std::to_string(m.level));
        add_non_normality_check(r, p, I, m.exponent, m.level, budget);
    }
    r.add("verdict", configs.empty() ? "I(G) normal" : "I(G) not normal");
    r.add("certificate", configs.empty() ? "theorem-backed: no Hochster configuration"
                                         : "configuration.1 with its verified m-monomial");
    add_budget(r, o);
    return r;
}

using Handler = Report (*)(const std::string&, const CommandOptions&);

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"normal", cmd_normal},   {"membership", cmd_membership},     {"closure", cmd_closure},
        {"hilbert", cmd_hilbert}, {"graph-report", cmd_graph_report}, {"irp", cmd_irp},
        {"covers", cmd_covers},   {"hochster", cmd_hochster},
    };
    return table;
}

}  // namespace

std::vector<std::string> command_names() {
    std::vector<std::string> names;
    for (const auto& [name, h] : handlers()) names.push_back(name);
    return names;
}

Report run_command(const std::string& command, const std::string& input, const CommandOptions& options) {
    const auto it = handlers().find(command);
    if (it == handlers().end()) throw InvalidArgument("unknown command '" + command + "'");
    const Budget clock;
    Report r = it->second(input, options);
    if (options.timing) r.set_elapsed(clock.elapsed_seconds());
    return r;
}

}  // namespace nmi
