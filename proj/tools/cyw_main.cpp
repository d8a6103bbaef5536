// Command line front end: configuration, Brauer relation and quiver tooling
// with deterministic JSON/DOT/TikZ/text output.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cyw/emit.hpp"

namespace {

using namespace cyw;

std::uint64_t max_states_from_env() {
    const char* env = std::getenv("CYW_MAX_STATES");
    if (!env) return 0;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        fail(errc::bad_input, "CYW_MAX_STATES must be an unsigned integer", env);
    }
}

struct output_options {
    std::string format = "text";
};

const output_options* g_out = nullptr;

void emit_document(const std::string& command, const json& parameters, const json& result,
                   const std::string& text, const std::string& dot = {}, const std::string& tikz = {}) {
    // json is the machine format of record; dot/tikz are presentation only.
    if (parameters.is_null()) fail(errc::bad_input, "internal: missing parameters");
    static const std::string schema = "cyw-output/1";
    const std::string& format = g_out->format;
    if (format == "json") {
        json doc{{"schema", schema}, {"command", command}, {"parameters", parameters}, {"result", result}};
        std::cout << doc.dump(2) << "\n";
    } else if (format == "text") {
        std::cout << text;
    } else if (format == "dot") {
        if (dot.empty()) fail(errc::bad_input, "dot output not available for this command", command);
        std::cout << dot;
    } else if (format == "tikz") {
        if (tikz.empty()) fail(errc::bad_input, "tikz output not available for this command", command);
        std::cout << tikz;
    } else {
        fail(errc::bad_input, "unknown format", format);
    }
}

std::vector<int> parse_vertex_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            fail(errc::bad_input, "vertex list must be comma-separated integers", csv);
        }
    }
    return out;
}

// Configuration sets: "4-6,7-2" (labels) or "(0,1),(1,2)" (vertices).
std::vector<std::string> split_set_tokens(const std::string& s) {
    std::vector<std::string> toks;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            if (!cur.empty()) toks.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    return toks;
}

struct config_args {
    std::string diagram = "A";
    int rank = 0;
    int d = 0;
    std::string set;
};

quotient_context make_context(const config_args& a) {
    dynkin_diagram diagram = a.diagram.size() == 1
                                 ? dynkin_diagram(family(std::toupper(a.diagram[0])), a.rank)
                                 : dynkin_diagram::parse(a.diagram);
    return quotient_context(diagram, a.d);
}

int run_config(const std::string& action, const config_args& a) {
    quotient_context ctx = make_context(a);
    hom_table table(ctx);
    json params{{"diagram", ctx.diagram().code()}, {"d", ctx.d()}};
    if (action == "enumerate" || action == "classes") {
        auto configs = enumerate_configurations(table, max_states_from_env());
        if (action == "enumerate") {
            json result = json::array();
            std::ostringstream text;
            for (auto& c : configs) {
                result.push_back(config_to_json(ctx, c));
                text << configuration_name(ctx, c) << "\n";
            }
            emit_document("config enumerate", params,
                          json{{"count", configs.size()}, {"configurations", result}},
                          "count " + std::to_string(configs.size()) + "\n" + text.str());
        } else {
            auto classes = rotation_classes(ctx, configs);
            json result = json::array();
            std::ostringstream text;
            for (auto& cls : classes) {
                json c = json::array();
                for (auto& cfg : cls) c.push_back(config_to_json(ctx, cfg));
                result.push_back(json{{"representative", config_to_json(ctx, cls.front())},
                                      {"size", cls.size()},
                                      {"members", c}});
                text << configuration_name(ctx, cls.front()) << " (orbit size " << cls.size() << ")\n";
            }
            emit_document("config classes", params,
                          json{{"count", classes.size()}, {"classes", result}},
                          "classes " + std::to_string(classes.size()) + "\n" + text.str());
        }
        return 0;
    }
    if (action == "check") {
        configuration S;
        for (auto& tok : split_set_tokens(a.set)) S.push_back(ctx.parse_vertex(tok));
        std::sort(S.begin(), S.end());
        S.erase(std::unique(S.begin(), S.end()), S.end());
        bool pre = is_preconfiguration(table, S);
        bool full = pre && is_configuration(table, S);
        json params2 = params;
        params2["set"] = config_to_json(ctx, S);
        emit_document("config check", params2,
                      json{{"preconfiguration", pre}, {"configuration", full}},
                      std::string(full ? "valid" : pre ? "preconfiguration only" : "invalid") + "\n");
        if (!full) fail(errc::validation_failure, "set is not a configuration", configuration_name(ctx, S));
        return 0;
    }
    fail(errc::bad_input, "unknown config action", action);
}

struct brauer_args {
    int n = 0, d = 0;
    std::string relation;
    std::string vertices;
};

int run_brauer(const std::string& action, const brauer_args& a) {
    polygon P = polygon::from_nd(a.n, a.d);
    json params{{"n", P.n}, {"d", P.d}, {"N", P.N}};
    if (action == "enumerate") {
        auto all = enumerate_brauer(P, max_states_from_env());
        json result = json::array();
        std::ostringstream text;
        for (auto& B : all) {
            result.push_back(to_json(B));
            text << to_string(B) << "\n";
        }
        emit_document("brauer enumerate", params,
                      json{{"count", all.size()}, {"relations", result}},
                      "count " + std::to_string(all.size()) + "\n" + text.str());
        return 0;
    }
    if (action == "count") {
        std::uint64_t enumerated = count_brauer(P, max_states_from_env());
        std::uint64_t formula = count_formula(P.n, P.d);
        emit_document("brauer count", params,
                      json{{"enumerated", enumerated},
                           {"formula", formula},
                           {"agreement", enumerated == formula}},
                      std::to_string(enumerated) + " (formula " + std::to_string(formula) +
                          (enumerated == formula ? ", agree" : ", MISMATCH") + ")\n");
        return 0;
    }
    if (action == "classes") {
        auto all = enumerate_brauer(P, max_states_from_env());
        std::vector<char> seen(all.size(), 0);
        json result = json::array();
        std::ostringstream text;
        std::size_t count = 0;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (seen[i]) continue;
            std::vector<brauer_relation> orbit;
            brauer_relation cur = all[i];
            do {
                auto it = std::lower_bound(all.begin(), all.end(), cur);
                if (it != all.end() && *it == cur) seen[std::size_t(it - all.begin())] = 1;
                orbit.push_back(cur);
                cur = theta_rotate(P, cur, 1);
            } while (cur != all[i]);
            std::sort(orbit.begin(), orbit.end());
            orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
            result.push_back(json{{"representative", to_json(orbit.front())}, {"size", orbit.size()}});
            text << to_string(orbit.front()) << " (orbit size " << orbit.size() << ")\n";
            ++count;
        }
        emit_document("brauer classes", params, json{{"count", count}, {"classes", result}},
                      "classes " + std::to_string(count) + "\n" + text.str());
        return 0;
    }
    if (action == "cycles") {
        brauer_relation B = parse_relation(a.relation);
        if (!is_maximal_brauer(P, B))
            fail(errc::validation_failure, "relation is not a maximal d-Brauer relation", a.relation);
        auto cycles = b_cycles(P, B);
        json result = json::array();
        std::ostringstream text;
        for (auto& c : cycles) {
            result.push_back(to_json(c));
            text << "cycle";
            for (auto& m : c.members) text << " " << to_string(m);
            text << "  deltas";
            for (int dv : c.deltas) text << " " << dv;
            text << "\n";
        }
        json params2 = params;
        params2["relation"] = to_json(B);
        emit_document("brauer cycles", params2, json{{"cycles", result}}, text.str());
        return 0;
    }
    if (action == "theta") {
        auto V = parse_vertex_list(a.vertices);
        auto B = theta_map(P, V);
        json params2 = params;
        params2["vertices"] = V;
        emit_document("brauer theta", params2, json{{"relation", to_json(B)}}, to_string(B) + "\n",
                      {}, to_tikz(P, B));
        return 0;
    }
    fail(errc::bad_input, "unknown brauer action", action);
}

struct quiver_args {
    int n = 0, d = 0;
    std::string relation;
};

int run_quiver(const std::string& action, const quiver_args& a) {
    if (action == "brauer") {
        polygon P = polygon::from_nd(a.n, a.d);
        brauer_relation B = parse_relation(a.relation);
        auto Q = build_quiver(P, B);
        auto pres = build_presentation(Q);
        json params{{"n", P.n}, {"d", P.d}, {"relation", to_json(B)}};
        std::ostringstream text;
        for (auto& ar : Q.arrows)
            text << to_string(Q.vertices[std::size_t(ar.src)]) << " -> "
                 << to_string(Q.vertices[std::size_t(ar.dst)]) << "  degree " << ar.degree << "\n";
        emit_document("quiver brauer", params, to_json(pres), text.str(), to_dot(Q), to_tikz(Q));
        return 0;
    }
    if (action == "cm-predict") {
        quotient_context ctx(dynkin_diagram(family::A, a.n), a.d);
        hom_table table(ctx);
        polygon P = polygon::from_nd(a.n, a.d);
        brauer_relation B = parse_relation(a.relation);
        if (!is_maximal_brauer(P, B))
            fail(errc::validation_failure, "relation is not a maximal d-Brauer relation", a.relation);
        auto Q = predicted_cm_quiver(ctx, table, B);
        json params{{"n", a.n}, {"d", a.d}, {"relation", to_json(B)}};
        std::ostringstream text;
        text << "vertices " << Q.vertex_names.size() << " (base " << Q.base_size << ")\n";
        for (auto& [s, t] : Q.arrows)
            text << Q.vertex_names[std::size_t(s)] << " -> " << Q.vertex_names[std::size_t(t)] << "\n";
        emit_document("quiver cm-predict", params, to_json(Q), text.str(), to_dot(Q), to_tikz(Q));
        return 0;
    }
    if (action == "truncpoly") {
        auto Q = ar_quiver_cm(a.n, a.d);
        json params{{"n", a.n}, {"d", a.d}};
        std::ostringstream text;
        text << "objects " << Q.vertices.size() << "\n";
        for (auto& [s, t] : Q.arrows)
            text << to_string(Q.vertices[std::size_t(s)]) << " -> " << to_string(Q.vertices[std::size_t(t)])
                 << "\n";
        emit_document("quiver truncpoly", params, to_json(Q), text.str(), to_dot(Q), to_tikz(Q));
        return 0;
    }
    fail(errc::bad_input, "unknown quiver action", action);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorics of translation quiver configurations, Brauer relations and CM AR quivers"};
    app.require_subcommand(1);
    output_options out;
    g_out = &out;

    config_args ca;
    auto* config_cmd = app.add_subcommand("config", "Calabi-Yau configurations on a quotient quiver");
    config_cmd->require_subcommand(1);
    std::vector<CLI::App*> config_actions;
    for (const char* name : {"enumerate", "check", "classes"}) {
        auto* sub = config_cmd->add_subcommand(name);
        sub->add_option("--diagram", ca.diagram, "Diagram family or code (A, D6, E8)");
        sub->add_option("--rank", ca.rank, "Diagram rank when --diagram is a bare family letter");
        sub->add_option("--d", ca.d, "Calabi-Yau parameter d >= 1")->required();
        sub->add_option("--set", ca.set, "Vertex set, e.g. \"4-6,7-2\" or \"(0,1),(1,2)\"");
        sub->add_option("--format", out.format, "json | text | dot | tikz");
        config_actions.push_back(sub);
    }

    brauer_args ba;
    auto* brauer_cmd = app.add_subcommand("brauer", "Maximal d-Brauer relations on the N-gon");
    brauer_cmd->require_subcommand(1);
    for (const char* name : {"enumerate", "count", "classes", "cycles", "theta"}) {
        auto* sub = brauer_cmd->add_subcommand(name);
        sub->add_option("--n", ba.n, "Number of diagonals in a maximal relation")->required();
        sub->add_option("--d", ba.d, "Diagonal parameter d >= 1")->required();
        sub->add_option("--relation", ba.relation, "Relation, e.g. \"1-6,2-4,8-10\"");
        sub->add_option("--vertices", ba.vertices, "Vertex set for theta, e.g. \"1,4\"");
        sub->add_option("--format", out.format, "json | text | dot | tikz");
    }

    quiver_args qa;
    auto* quiver_cmd = app.add_subcommand("quiver", "Graded Brauer quivers and AR quivers");
    quiver_cmd->require_subcommand(1);
    for (const char* name : {"brauer", "cm-predict", "truncpoly"}) {
        auto* sub = quiver_cmd->add_subcommand(name);
        sub->add_option("--n", qa.n, "Rank / diagonal count")->required();
        sub->add_option("--d", qa.d, "Parameter d >= 1")->required();
        sub->add_option("--relation", qa.relation, "Relation, e.g. \"1-3,4-6,7-9\"");
        sub->add_option("--format", out.format, "json | text | dot | tikz");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        json err{{"error", {{"code", "bad_input"}, {"message", e.what()}, {"datum", ""}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        if (config_cmd->parsed()) {
            if (ca.diagram.size() == 1 && ca.rank == 0)
                fail(errc::bad_input, "--rank is required with a bare family letter", ca.diagram);
            for (auto* sub : config_cmd->get_subcommands())
                return run_config(sub->get_name(), ca);
        }
        if (brauer_cmd->parsed())
            for (auto* sub : brauer_cmd->get_subcommands()) return run_brauer(sub->get_name(), ba);
        if (quiver_cmd->parsed())
            for (auto* sub : quiver_cmd->get_subcommands()) return run_quiver(sub->get_name(), qa);
    } catch (const error& e) {
        json err{{"error",
                  {{"code", errc_name(e.code())}, {"message", e.message()}, {"datum", e.datum()}}}};
        std::cerr << err.dump() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        json err{{"error", {{"code", "internal"}, {"message", e.what()}, {"datum", ""}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 0;
}
