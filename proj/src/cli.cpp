#include "ramsey/cli.hpp"

#include "ramsey/arrow.hpp"
#include "ramsey/balance.hpp"
#include "ramsey/densities.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/family.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/serialize.hpp"
#include "ramsey/threshold_sim.hpp"
#include "ramsey/typed_random.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>

#ifndef RAMSEYLAB_VERSION
#define RAMSEYLAB_VERSION "0.0.0"
#endif

namespace ramsey::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep = ',') {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<Graph> read_graph_list(const std::string& text) {
    std::vector<Graph> out;
    if (text.empty()) return out;
    for (const std::string& part : split(text)) out.push_back(read_graph_argument(part));
    return out;
}

long long parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError(std::string("invalid ") + what + " '" + text + "'");
    }
}

std::uint64_t parse_seed(const std::string& text) {
    try {
        std::size_t used = 0;
        if (text.empty() || text.front() == '-') throw std::invalid_argument(text);
        unsigned long long v = std::stoull(text, &used, 0);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("invalid seed '" + text + "'");
    }
}

Rational parse_probability(const std::string& text) {
    Rational p = parse_rational(text);
    if (p <= 0 || p > 1) throw DomainError("p must lie in (0, 1]");
    return p;
}

std::vector<double> parse_c_grid(const std::string& text) {
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw ParseError("C range must be start:stop:step");
        const double start = to_double(parse_rational(parts[0]));
        const double stop = to_double(parse_rational(parts[1]));
        const double step = to_double(parse_rational(parts[2]));
        if (!(step > 0)) throw DomainError("C step must be positive");
        for (long k = 0;; ++k) {
            const double c = start + static_cast<double>(k) * step;
            if (c > stop + 1e-9 * std::max(1.0, std::abs(stop))) break;
            values.push_back(c);
            if (k > 1'000'000) throw DomainError("C range is too long");
        }
    } else {
        for (const std::string& part : split(text)) values.push_back(to_double(parse_rational(part)));
    }
    return values;
}

json rational_json(const Rational& q) { return to_string(q); }

json edge_list_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back(to_string(e));
    return arr;
}

json mask_json(const Graph& g, EdgeMask mask) {
    json arr = json::array();
    for (EdgeId id = 0; id < g.size(); ++id)
        if ((mask >> id) & 1U) arr.push_back(to_string(g.edge(id)));
    return arr;
}

json density_json(const DensityReport& r) {
    json maxima = json::array();
    for (const auto& m : r.maximizers) maxima.push_back(edge_list_json(m));
    return json{{"value", rational_json(r.value)}, {"maximizers", maxima}, {"unique", r.unique}};
}

json moment_json(const Moment& m) {
    return json{{"value", m.value}, {"exact", m.exact ? json(to_string(*m.exact)) : json(nullptr)}};
}

json colouring_json(const Graph& g, const Colouring& c) {
    json obj = json::object();
    for (EdgeId id = 0; id < g.size(); ++id) obj[to_string(g.edge(id))] = c[id];
    return obj;
}

WeightFunction parse_weights(const std::string& text, const Graph& h) {
    if (text.empty()) return WeightFunction::uniform(h.size());
    std::vector<Rational> w;
    for (const std::string& part : split(text)) w.push_back(parse_rational(part));
    WeightFunction wf(std::move(w));
    wf.check_domain(h);
    return wf;
}

EdgeMask parse_subgraph(const std::string& text, const Graph& h) {
    if (text.empty() || text == "all") return h.full_mask();
    EdgeMask mask = 0;
    for (const std::string& part : split(text)) {
        const auto ends = split(part, '-');
        if (ends.size() != 2) throw ParseError("edges are written u-v, got '" + part + "'");
        const auto id = h.edge_id(static_cast<Vertex>(parse_int(ends[0], "vertex")),
                                  static_cast<Vertex>(parse_int(ends[1], "vertex")));
        if (!id) throw DomainError("'" + part + "' is not an edge of the pattern");
        mask |= EdgeMask{1} << *id;
    }
    return mask;
}

struct Common {
    std::string format = "json";
    std::string config;
    unsigned jobs = 0;
    std::string seed;
};

void add_common(CLI::App* sub, Common& c, bool with_seed) {
    sub->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--config", c.config, "JSON file of option values (command-line flags win)");
    sub->add_option("--jobs", c.jobs, "worker threads (0: all cores)");
    if (with_seed) sub->add_option("--seed", c.seed, "master seed (default: $RAMSEYLAB_SEED or 0)");
}

std::uint64_t resolve_seed(const Common& c) {
    if (!c.seed.empty()) return parse_seed(c.seed);
    if (const char* env = std::getenv("RAMSEYLAB_SEED"); env && *env) return parse_seed(env);
    return 0;
}

void render_text(const json& data, std::ostream& out) {
    if (data.is_object()) {
        for (const auto& [key, value] : data.items())
            out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    } else if (data.is_array()) {
        for (const auto& value : data) out << value.dump() << '\n';
    } else {
        out << data.dump() << '\n';
    }
}

// Turns a JSON config object into flags placed before the user's own, so
// that explicit flags take precedence.
std::vector<std::string> config_arguments(const std::string& path, CLI::App* sub) {
    const json cfg = read_json_file(path);
    if (!cfg.is_object()) throw ParseError("config file must hold a JSON object");
    std::vector<std::string> args;
    for (const auto& [key, value] : cfg.items()) {
        const CLI::Option* opt = key == "config" ? nullptr : sub->get_option_no_throw("--" + key);
        if (!opt) throw ParseError("unknown config key '" + key + "' for " + sub->get_name());
        if (opt->get_type_size_max() == 0) {
            if (!value.is_boolean()) throw ParseError("config key '" + key + "' must be a boolean");
            if (value.get<bool>()) args.push_back("--" + key);
            continue;
        }
        std::string text;
        if (value.is_string()) {
            text = value.get<std::string>();
        } else if (value.is_array()) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (i) text += ',';
                text += value[i].is_string() ? value[i].get<std::string>() : value[i].dump();
            }
        } else if (value.is_number() || value.is_boolean()) {
            text = value.dump();
        } else {
            throw ParseError("config key '" + key + "' has an unsupported value");
        }
        args.push_back("--" + key);
        args.push_back(text);
    }
    return args;
}

struct Output {
    explicit Output(json d) : data(std::move(d)) {}

    json data;
    int code = kSuccess;
    std::optional<std::string> csv;
};

TypedGraph read_typed_host(const std::string& host, const std::string& pattern_arg, const std::string& types_path) {
    std::shared_ptr<const Graph> pattern;
    if (!pattern_arg.empty()) pattern = std::make_shared<const Graph>(read_graph_argument(pattern_arg));
    if (types_path.empty()) return read_typed_graph_argument(host, pattern);
    if (!pattern) throw DomainError("--types needs --pattern");
    const Graph g = read_graph_argument(host);
    json t = read_json_file(types_path);
    if (t.is_object() && t.contains("types")) t = t["types"];
    if (!t.is_array() || t.size() != g.size()) throw ParseError("--types must list one type per host edge");
    std::vector<EdgeId> types;
    for (const auto& x : t) {
        if (!x.is_number_integer() || x.get<long long>() < 0) throw ParseError("types must be non-negative integers");
        types.push_back(static_cast<EdgeId>(x.get<long long>()));
    }
    return TypedGraph(g, pattern, std::move(types));
}

Output arrow_output(const Graph& host, const ArrowResult& r, std::optional<bool> verified) {
    Output o(json{{"outcome", to_string(r.outcome)},
                  {"arrows", r.outcome == Outcome::indeterminate ? json(nullptr) : json(r.arrows())},
                  {"certificate", r.certificate ? colouring_json(host, *r.certificate) : json(nullptr)},
                  {"certificate_verified", verified ? json(*verified) : json(nullptr)},
                  {"stats", {{"nodes", r.stats.nodes},
                             {"conflicts", r.stats.conflicts},
                             {"copies_per_colour", r.stats.copies_per_colour}}},
                  {"budget", r.budget}});
    if (r.outcome == Outcome::indeterminate) o.code = kIndeterminate;
    return o;
}

json member_json(const FamilyMember& m) {
    json glued = json::array();
    for (const auto& g : m.glued) glued.push_back(json{{"core_edge", g.core_edge}, {"map", g.map}});
    return json{{"graph6", to_graph6(m.graph)},
                {"n", m.graph.order()},
                {"edges", edge_list_json(m.graph.edges())},
                {"attachment", to_string(m.attachment_edge)},
                {"generic", m.generic},
                {"glued", glued}};
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ramseylab: asymmetric Ramsey properties of random graphs", "ramseylab"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.set_version_flag("--version", std::string("ramseylab ") + RAMSEYLAB_VERSION + " (C++20, GMP " +
                                          gmp_version + ", built " + __DATE__ + ")");
    app.require_subcommand(1);

    Common common;
    std::function<Output()> action;

    // density
    std::string d_graph, d_f2;
    auto* density = app.add_subcommand("density", "2-densities and balancedness of a graph");
    density->add_option("--graph", d_graph, "graph6 or @file.json")->required();
    density->add_option("--f2", d_f2, "second graph for m2(F1, F2)");
    add_common(density, common, false);
    density->callback([&] {
        action = [&] {
            const Graph g = read_graph_argument(d_graph);
            const DensityReport m = m2(g);
            json data{{"graph6", to_graph6(g)},
                      {"d2", rational_json(d2(g))},
                      {"m2", rational_json(m.value)},
                      {"m2_report", density_json(m)},
                      {"max_density", density_json(max_density(g))},
                      {"is_2_balanced", is_2_balanced(g)},
                      {"is_strictly_2_balanced", is_strictly_2_balanced(g)},
                      {"forest", m.value <= 1}};
            if (!d_f2.empty()) {
                const Graph f2 = read_graph_argument(d_f2);
                data["m2_asym"] = density_json(m2_asym(g, f2));
                data["is_strictly_balanced_wrt"] = is_strictly_balanced_wrt(g, f2);
            }
            return Output{data};
        };
    });

    // weights
    std::string w_h, w_f;
    auto* weights = app.add_subcommand("weights", "balanced weight function w for (H, F)");
    weights->add_option("--pattern", w_h, "pattern H")->required();
    weights->add_option("--forbidden", w_f, "forbidden graph F")->required();
    add_common(weights, common, false);
    weights->callback([&] {
        action = [&] {
            const Graph h = read_graph_argument(w_h);
            const Graph f = read_graph_argument(w_f);
            const BalanceCertificate cert = solve_balanced_weights(h, f);
            json wj = json::object(), tj = json::object(), rj = json::object();
            for (EdgeId e = 0; e < h.size(); ++e) {
                const std::string name = to_string(h.edge(e));
                wj[name] = rational_json(cert.weights[e]);
                tj[name] = mask_json(h, cert.tight[e]);
                rj[name] = rational_json(cert.residuals[e]);
            }
            return Output{json{{"weights", wj},
                               {"tight", tj},
                               {"residuals", rj},
                               {"m2_asym", rational_json(cert.m2_asym)},
                               {"m2_forbidden", rational_json(cert.m2_forbidden)},
                               {"verified", verify_balanced(h, f, cert.weights)}}};
        };
    });

    // arrow and typed-arrow
    struct ArrowArgs {
        std::string host, targets, pattern, types;
        bool typed = false;
        std::uint64_t budget = kDefaultBudget;
    } a;
    const auto typed_action = [&]() -> Output {
        const TypedGraph g = read_typed_host(a.host, a.pattern, a.types);
        const std::vector<Graph> others = read_graph_list(a.targets);
        const ArrowResult r = typed_arrow_decide(g, others, a.budget);
        std::optional<bool> verified;
        if (r.certificate) verified = verify_typed_non_arrow(g, others, *r.certificate);
        return arrow_output(g.graph(), r, verified);
    };
    for (const char* name : {"arrow", "typed-arrow"}) {
        const bool is_typed = std::string(name) == "typed-arrow";
        auto* sub = app.add_subcommand(name, is_typed ? "decide G -> (H, F2, ..., Fr) for a typed host"
                                                      : "decide G -> (F1, ..., Fr)");
        sub->add_option("--host", a.host, "host graph (graph6 or @file.json)")->required();
        sub->add_option("--targets", a.targets, is_typed ? "F2,...,Fr (may be empty)" : "F1,...,Fr");
        if (!is_typed) sub->add_flag("--typed", a.typed, "typed host; --targets lists F2..Fr");
        sub->add_option("--pattern", a.pattern, "type pattern H");
        sub->add_option("--types", a.types, "JSON array of host edge types");
        sub->add_option("--budget", a.budget, "search node budget");
        add_common(sub, common, false);
        sub->callback([&, is_typed] {
            action = [&, is_typed]() -> Output {
                if (is_typed || a.typed) return typed_action();
                const Graph g = read_graph_argument(a.host);
                const std::vector<Graph> targets = read_graph_list(a.targets);
                const ArrowResult r = arrow_decide(g, targets, a.budget);
                std::optional<bool> verified;
                if (r.certificate) verified = verify_non_arrow(g, targets, *r.certificate);
                return arrow_output(g, r, verified);
            };
        });
    }

    // sample
    struct SampleArgs {
        int n = 0;
        std::string p, pattern, weights, balanced_for;
        bool coupled = false;
    } s;
    auto* sample_cmd = app.add_subcommand("sample", "draw G(n, p, w)");
    sample_cmd->add_option("--n", s.n, "number of vertices")->required();
    sample_cmd->add_option("--p", s.p, "edge probability in (0, 1]")->required();
    sample_cmd->add_option("--pattern", s.pattern, "type pattern H")->required();
    sample_cmd->add_option("--weights", s.weights, "comma-separated weights per edge of H (default all 1)");
    sample_cmd->add_option("--balanced-for", s.balanced_for, "use solve_balanced_weights(H, F) for this F");
    sample_cmd->add_flag("--coupled", s.coupled, "also emit the coupled G(n, p)");
    add_common(sample_cmd, common, true);
    sample_cmd->callback([&] {
        action = [&] {
            TypedModelParams params;
            params.n = s.n;
            params.p = to_double(parse_probability(s.p));
            params.pattern = std::make_shared<const Graph>(read_graph_argument(s.pattern));
            if (!s.balanced_for.empty() && !s.weights.empty())
                throw DomainError("--weights and --balanced-for are exclusive");
            params.weights = s.balanced_for.empty()
                                 ? parse_weights(s.weights, *params.pattern)
                                 : solve_balanced_weights(*params.pattern, read_graph_argument(s.balanced_for)).weights;
            params.seed = resolve_seed(common);
            const CoupledSample cs = sample_coupled(params);
            json data = to_json(cs.typed);
            data["seed"] = params.seed;
            if (s.coupled) data["untyped"] = to_json(cs.untyped);
            return Output{data};
        };
    });

    // moments
    struct MomentArgs {
        int n = 0;
        std::string p, pattern, weights, subgraph = "all";
    } m;
    auto* moments = app.add_subcommand("moments", "exact moments and tail bounds of typed copy counts");
    moments->add_option("--pattern", m.pattern, "type pattern H")->required();
    moments->add_option("--subgraph", m.subgraph, "edges of I as u-v,... or 'all'");
    moments->add_option("--n", m.n, "number of vertices")->required();
    moments->add_option("--p", m.p, "edge probability (exact rational or decimal)")->required();
    moments->add_option("--weights", m.weights, "comma-separated weights per edge of H");
    add_common(moments, common, false);
    moments->callback([&] {
        action = [&] {
            const Graph h = read_graph_argument(m.pattern);
            const Rational p = parse_probability(m.p);
            const WeightFunction w = parse_weights(m.weights, h);
            const EdgeMask mask = parse_subgraph(m.subgraph, h);
            const UpperTailReport r = upper_tail_bound(h, mask, m.n, p, w);
            return Output{json{{"subgraph", mask_json(h, mask)},
                               {"mean", moment_json(r.mean)},
                               {"variance", moment_json(r.variance)},
                               {"chebyshev", r.chebyshev},
                               {"min_scale", r.min_scale},
                               {"minimizer", mask_json(h, r.minimizer)},
                               {"scale_bound", r.scale_bound}}};
        };
    });

    // suen
    struct SuenArgs {
        int n = 0;
        std::string p, pattern, weights;
    } su;
    auto* suen = app.add_subcommand("suen", "Suen's inequality for all copies of H in K_n");
    suen->add_option("--pattern", su.pattern, "pattern H")->required();
    suen->add_option("--n", su.n, "number of vertices")->required();
    suen->add_option("--p", su.p, "edge probability")->required();
    suen->add_option("--weights", su.weights, "comma-separated weights per edge of H");
    add_common(suen, common, false);
    suen->callback([&] {
        action = [&] {
            const Graph h = read_graph_argument(su.pattern);
            const Rational p = parse_probability(su.p);
            const WeightFunction w = parse_weights(su.weights, h);
            if (su.n < 0 || su.n > kMaxVertices) throw DomainError("n must lie in [0, 64]");
            const auto family = copies_in_complete_graph(h, su.n);
            const SuenReport r = suen_bound(h, family, su.n, p, w);
            const auto exact = [](const std::optional<Rational>& q) { return q ? json(to_string(*q)) : json(nullptr); };
            return Output{json{{"family_size", r.family_size},
                               {"mu", r.mu},
                               {"Delta", r.Delta},
                               {"delta", r.delta},
                               {"bound", r.bound},
                               {"mu_exact", exact(r.mu_exact)},
                               {"Delta_exact", exact(r.Delta_exact)},
                               {"delta_exact", exact(r.delta_exact)}}};
        };
    });

    // sweep
    struct SweepArgs {
        std::string targets, n_values, c_values, pattern, weights;
        std::size_t trials = 100;
        std::uint64_t budget = kDefaultBudget;
        bool typed = false;
    } sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo arrow probabilities on a (n, C) grid");
    sweep_cmd->add_option("--targets", sw.targets, "F1,...,Fr")->required();
    sweep_cmd->add_option("--n", sw.n_values, "comma-separated vertex counts")->required();
    sweep_cmd->add_option("--C", sw.c_values, "start:stop:step or comma-separated constants")->required();
    sweep_cmd->add_option("--trials", sw.trials, "trials per cell");
    sweep_cmd->add_option("--budget", sw.budget, "search node budget per trial");
    sweep_cmd->add_flag("--typed", sw.typed, "sample G(n, p, w) and decide the typed arrow");
    sweep_cmd->add_option("--pattern", sw.pattern, "type pattern H (default: densest target)");
    sweep_cmd->add_option("--weights", sw.weights, "weights on E(H) (default: balanced)");
    add_common(sweep_cmd, common, true);
    sweep_cmd->callback([&] {
        if (sweep_cmd->count("--format") == 0) common.format = "csv";
        action = [&] {
            SweepSpec spec;
            spec.targets = read_graph_list(sw.targets);
            for (const std::string& part : split(sw.n_values))
                spec.n_values.push_back(static_cast<int>(parse_int(part, "n")));
            spec.C_values = parse_c_grid(sw.c_values);
            spec.trials = sw.trials;
            spec.seed = resolve_seed(common);
            spec.budget = sw.budget;
            spec.typed = sw.typed;
            spec.jobs = common.jobs;
            if (!sw.pattern.empty()) spec.pattern = read_graph_argument(sw.pattern);
            if (!sw.weights.empty()) {
                if (!sw.typed || !spec.pattern) throw DomainError("--weights requires --typed and --pattern");
                spec.weights = parse_weights(sw.weights, *spec.pattern);
            }
            const auto cells = spec.typed ? typed_sweep(spec) : sweep(spec);
            json crossings = json::object();
            for (int n : spec.n_values) {
                const auto c = crossing_point(cells, n);
                crossings[std::to_string(n)] = c ? json(*c) : json(nullptr);
            }
            Output o{json{{"cells", to_json(cells)},
                          {"threshold_density", rational_json(threshold_density(spec.targets))},
                          {"crossing_points", crossings}}};
            o.csv = to_csv(cells);
            return o;
        };
    });

    // family
    struct FamilyArgs {
        std::string f1, f2, graph, action = "generic";
        int vcap = 8;
        std::uint64_t budget = kDefaultBudget;
    } fa;
    auto* family = app.add_subcommand("family", "the family F(F1, F2) and its balance conditions");
    family->add_option("--f1", fa.f1, "F1")->required();
    family->add_option("--f2", fa.f2, "F2")->required();
    family->add_option("--action", fa.action, "generic, enumerate, balance or condition-iv")
        ->check(CLI::IsMember({"generic", "enumerate", "balance", "condition-iv"}));
    family->add_option("--vcap", fa.vcap, "vertex cap for enumerate/balance (<= 16)");
    family->add_option("--graph", fa.graph, "host G for condition-iv");
    family->add_option("--budget", fa.budget, "search node budget for condition-iv");
    add_common(family, common, false);
    family->callback([&] {
        action = [&]() -> Output {
            const Graph f1 = read_graph_argument(fa.f1);
            const Graph f2 = read_graph_argument(fa.f2);
            const auto members_json = [](const std::vector<FamilyMember>& ms) {
                json arr = json::array();
                for (const auto& x : ms) arr.push_back(member_json(x));
                return arr;
            };
            if (fa.action == "generic") return Output{json{{"members", members_json(generic_members(f1, f2))}}};
            if (fa.action == "enumerate") {
                const auto e = enumerate_members(f1, f2, fa.vcap);
                return Output{json{{"members", members_json(e.members)}, {"partial", e.partial}, {"vcap", fa.vcap}}};
            }
            if (fa.action == "balance") {
                const BalanceVerdict v = check_asymmetric_balanced(f1, f2, fa.vcap);
                json violations = json::array(), equalities = json::array();
                for (const auto& x : v.violations)
                    violations.push_back(json{{"member", x.member},
                                              {"edges", edge_list_json(x.edges)},
                                              {"ratio", rational_json(x.ratio)},
                                              {"kind", to_string(x.kind)}});
                for (const auto& x : v.equality_cases)
                    equalities.push_back(json{{"member", x.member}, {"edges", edge_list_json(x.edges)}});
                return Output{json{{"balanced", v.balanced},
                                   {"condition1_holds", v.condition1_holds},
                                   {"threshold", rational_json(v.threshold)},
                                   {"members", members_json(v.members)},
                                   {"violations", violations},
                                   {"equality_cases", equalities},
                                   {"partial", v.partial},
                                   {"vcap", fa.vcap}}};
            }
            if (fa.graph.empty()) throw DomainError("condition-iv needs --graph");
            const Graph g = read_graph_argument(fa.graph);
            const ConditionIvResult r = check_condition_iv(g, f1, f2, fa.budget);
            Output o{json{{"status", to_string(r.status)},
                          {"vacuous", r.vacuous},
                          {"max_density", rational_json(r.max_density)},
                          {"threshold", rational_json(r.threshold)},
                          {"arrow", r.arrow ? json(to_string(r.arrow->outcome)) : json(nullptr)}}};
            if (r.status == ConditionIvResult::Status::indeterminate) o.code = kIndeterminate;
            return o;
        };
    });

    try {
        std::vector<std::string> argv(args.begin(), args.end());
        // Splice config-file values in front of the explicit flags.
        for (std::size_t i = 0; i < argv.size(); ++i) {
            CLI::App* sub = app.get_subcommand_no_throw(argv[i]);
            if (!sub) continue;
            for (std::size_t k = i + 1; k < argv.size(); ++k) {
                std::string path;
                if (argv[k] == "--config" && k + 1 < argv.size()) path = argv[k + 1];
                else if (argv[k].starts_with("--config=")) path = argv[k].substr(9);
                if (path.empty()) continue;
                auto extra = config_arguments(path, sub);
                argv.insert(argv.begin() + static_cast<std::ptrdiff_t>(i) + 1, extra.begin(), extra.end());
                break;
            }
            break;
        }
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kParseError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        Output o = action();
        if (common.format == "csv") {
            if (!o.csv) throw DomainError("csv output is only available for sweep");
            out << *o.csv;
        } else if (common.format == "text") {
            render_text(o.data, out);
        } else {
            out << o.data.dump(2) << '\n';
        }
        if (o.code == kIndeterminate) err << "result is indeterminate: search budget exhausted\n";
        return o.code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

} // namespace ramsey::cli
