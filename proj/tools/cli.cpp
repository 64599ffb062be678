#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "colreconf/cliques.hpp"
#include "colreconf/construction.hpp"
#include "colreconf/error.hpp"
#include "colreconf/graph_io.hpp"
#include "colreconf/patterns.hpp"
#include "colreconf/reconfiguration.hpp"
#include "colreconf/serialization.hpp"

namespace colreconf::cli {
namespace {

struct Options {
    Config config;
    std::string format = "table";
    std::string input_format = "auto";
    std::string graph_path;
    std::string colouring_text;
    std::string pattern = "2k2";
    std::string out_path;
    std::size_t copies = 0;
    std::size_t k = 0;
    std::size_t limit = 1;
};

OutputFormat parse_output_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "table") return OutputFormat::table;
    if (s == "dot") return OutputFormat::dot;
    throw InputError("unknown output format '" + s + "'");
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports a byte offset; recover line and column from it.
        std::ifstream again(path);
        std::string text((std::istreambuf_iterator<char>(again)), std::istreambuf_iterator<char>());
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("invalid JSON", line, column);
    }
}

bool is_bundle(const Json& j) { return j.is_object() && j.contains("graph"); }

GraphFormat resolve_format(const Options& o) {
    auto f = parse_graph_format(o.input_format);
    return f == GraphFormat::automatic ? detect_graph_format(o.graph_path) : f;
}

Graph load_graph(const Options& o) {
    const std::filesystem::path path(o.graph_path);
    switch (resolve_format(o)) {
        case GraphFormat::json: {
            Json j = read_json_file(path);
            return is_bundle(j) ? graph_from_json(j.at("graph")) : graph_from_json(j);
        }
        case GraphFormat::dimacs: {
            std::ifstream in(path);
            if (!in) throw InputError("cannot open " + path.string());
            return read_dimacs(in);
        }
        default: {
            std::ifstream in(path);
            if (!in) throw InputError("cannot open " + path.string());
            return read_edge_list(in);
        }
    }
}

// A bundle keeps its own colourings; a bare graph on 16p vertices gets the
// standard block-shifted ones.
PaperInstance load_instance(const Options& o) {
    if (resolve_format(o) == GraphFormat::json) {
        Json j = read_json_file(o.graph_path);
        if (is_bundle(j)) return instance_from_json(j);
    }
    Graph g = load_graph(o);
    const std::size_t n = g.vertex_count();
    if (n == 0 || n % kBaseOrder != 0)
        throw InputError("a bare graph must have a positive multiple of 16 vertices to be verified; "
                         "supply a JSON bundle with alpha and beta instead");
    PaperInstance reference = build_family(n / kBaseOrder);
    return {reference.copies, std::move(g), std::move(reference.alpha), std::move(reference.beta)};
}

std::string colour_list(const std::vector<Vertex>& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(t[i]);
    }
    return s;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open " + path + " for writing");
    f << text;
    if (!f) throw InputError("failed writing " + path);
}

int cmd_construct(const Options& o, std::ostream& out) {
    if (o.copies == 0) throw InputError("--p must be at least 1");
    PaperInstance inst = build_family(o.copies);
    std::string text;
    if (o.config.output_format == OutputFormat::dot) {
        std::ostringstream s;
        write_dot(s, inst.graph, "G" + std::to_string(o.copies));
        text = s.str();
    } else {
        text = dump(to_json(inst));
    }
    write_text(o.out_path, text, out);
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.copies == 0 && o.graph_path.empty())
        throw InputError("verify needs a graph file or --paper <p>");
    const PaperInstance inst = o.copies > 0 ? build_family(o.copies) : load_instance(o);
    const VerificationReport report = verify(inst, o.config.limits);
    if (o.config.output_format == OutputFormat::json)
        out << dump(to_json(report));
    else
        out << render_table(report);
    return report.passed() ? exit_ok : exit_verification_failed;
}

int cmd_number(const Options& o, std::ostream& out, bool chromatic) {
    const Graph g = load_graph(o);
    const std::size_t value = chromatic ? chromatic_number(g, o.config.limits)
                                        : clique_number(g, o.config.limits);
    if (o.config.output_format == OutputFormat::json)
        out << dump(Json{{chromatic ? "chromatic_number" : "clique_number", value}});
    else
        out << value << '\n';
    return exit_ok;
}

int cmd_induced(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    const Pattern pattern = parse_pattern(o.pattern);
    const auto witness = find_induced(g, pattern);
    if (o.config.output_format == OutputFormat::json) {
        Json j{{"pattern", pattern_name(pattern)}, {"witness", nullptr}};
        if (witness) j["witness"] = *witness;
        out << dump(j);
    } else {
        out << (witness ? colour_list(*witness) : std::string("none")) << '\n';
    }
    return exit_ok;
}

int cmd_mixing(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    if (o.config.output_format == OutputFormat::dot) {
        out << reconfig_to_dot(build_reconfig(g, o.k, o.config.limits));
        return exit_ok;
    }
    const MixingVerdict v = is_mixing(g, o.k, o.config.limits);
    if (o.config.output_format == OutputFormat::json) {
        out << dump(to_json(v));
        return exit_ok;
    }
    out << "connected=" << (v.connected ? "true" : "false")
        << " components=" << (v.component_count ? std::to_string(*v.component_count) : "null") << '\n';
    if (v.frozen_witness) out << "frozen witness: " << v.frozen_witness->to_string() << '\n';
    if (v.separated_pair)
        out << "separated: " << v.separated_pair->first.to_string() << " | "
            << v.separated_pair->second.to_string() << '\n';
    return exit_ok;
}

int cmd_find_frozen(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    const FrozenSearchResult r = find_frozen(g, o.k, o.limit, o.config.limits);
    if (o.config.output_format == OutputFormat::json) {
        out << dump(to_json(r, o.k));
        return exit_ok;
    }
    out << "found=" << r.colourings.size() << " exhaustive=" << (r.exhaustive ? "true" : "false")
        << '\n';
    for (const auto& c : r.colourings) out << c.to_string() << '\n';
    return exit_ok;
}

int cmd_neighbours(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    const Colouring c = Colouring::parse(o.colouring_text, o.k);
    const auto list = neighbours(g, c);
    if (o.config.output_format == OutputFormat::json) {
        Json arr = Json::array();
        for (const auto& x : list) arr.push_back(to_json(x));
        out << dump(arr);
    } else {
        for (const auto& x : list) out << x.to_string() << '\n';
        if (list.empty()) out << "none\n";
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph colouring reconfiguration toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    app.add_option("--node-cap", o.config.limits.node_cap, "Max nodes of an explicit R_k")
        ->envname("COLRECONF_NODE_CAP")
        ->check(CLI::PositiveNumber);
    app.add_option("--lazy-budget", o.config.limits.lazy_budget, "Node budget for lazy searches")
        ->envname("COLRECONF_LAZY_BUDGET")
        ->check(CLI::PositiveNumber);
    app.add_option("--search-cap", o.config.limits.search_cap, "Vertex cap for exact clique/chromatic")
        ->envname("COLRECONF_SEARCH_CAP")
        ->check(CLI::PositiveNumber);
    app.add_option("--enumeration-cap", o.config.limits.enumeration_cap,
                   "Max candidate assignments while enumerating colourings")
        ->envname("COLRECONF_ENUMERATION_CAP")
        ->check(CLI::PositiveNumber);
    auto* format_opt = app.add_option("--format", o.format, "Output format")
                           ->check(CLI::IsMember({"json", "table", "dot"}));
    app.add_option("--input-format", o.input_format, "Graph input format")
        ->check(CLI::IsMember({"auto", "edgelist", "dimacs", "json"}));

    auto* construct = app.add_subcommand("construct", "Write the p-copy instance as a JSON bundle");
    construct->add_option("--p", o.copies, "Number of copies")->required();
    construct->add_option("--out", o.out_path, "Output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Check every claim about an instance");
    verify_cmd->add_option("graph", o.graph_path, "Bundle or graph file");
    verify_cmd->add_option("--paper", o.copies, "Verify the built-in instance with p copies")
        ->check(CLI::PositiveNumber);

    auto* chromatic = app.add_subcommand("chromatic", "Exact chromatic number");
    chromatic->add_option("graph", o.graph_path)->required();
    auto* clique = app.add_subcommand("clique", "Exact clique number");
    clique->add_option("graph", o.graph_path)->required();

    auto* induced = app.add_subcommand("induced", "Search for an induced pattern");
    induced->add_option("graph", o.graph_path)->required();
    induced->add_option("--pattern", o.pattern, "p5, 2k2 or P<t>");

    auto* mixing = app.add_subcommand("mixing", "Decide whether R_k is connected");
    mixing->add_option("graph", o.graph_path)->required();
    mixing->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);

    auto* frozen = app.add_subcommand("find-frozen", "Search for frozen k-colourings");
    frozen->add_option("graph", o.graph_path)->required();
    frozen->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    frozen->add_option("--limit", o.limit, "Maximum number of results")->check(CLI::PositiveNumber);

    auto* nbrs = app.add_subcommand("neighbours", "List single-vertex recolourings");
    nbrs->add_option("graph", o.graph_path)->required();
    nbrs->add_option("colouring", o.colouring_text, "e.g. 12 or \"1 2\"")->required();
    nbrs->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (construct->parsed() && o.copies == 0) {
            err << "error: --p must be at least 1\n";
            return exit_usage;
        }
        const bool explicit_format = format_opt->count() > 0;
        o.config.output_format = parse_output_format(
            explicit_format ? o.format : (construct->parsed() ? "json" : "table"));
        validate(o.config.limits);

        if (construct->parsed()) return cmd_construct(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
        if (chromatic->parsed()) return cmd_number(o, out, true);
        if (clique->parsed()) return cmd_number(o, out, false);
        if (induced->parsed()) return cmd_induced(o, out);
        if (mixing->parsed()) return cmd_mixing(o, out);
        if (frozen->parsed()) return cmd_find_frozen(o, out);
        if (nbrs->parsed()) return cmd_neighbours(o, out);
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return exit_error;
    } catch (const ParseError& e) {
        err << "parse error: " << o.graph_path << ": " << e.what() << '\n';
        return exit_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_usage;
}

}  // namespace colreconf::cli
