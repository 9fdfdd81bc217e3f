#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sigcover/circuits.hpp"
#include "sigcover/construct.hpp"
#include "sigcover/coverability.hpp"
#include "sigcover/graph_io.hpp"
#include "sigcover/instances.hpp"
#include "sigcover/negativeness.hpp"
#include "sigcover/oracle.hpp"
#include "sigcover/parallel.hpp"
#include "sigcover/sp.hpp"

using namespace sigcover;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

struct Options {
    bool verbose = false;
    std::string input;
    std::size_t cap = default_signed_circuit_cap;
    std::string at;
    std::string cover_file;
    std::size_t k = 6;
    std::size_t kmax = 6;
    std::uint64_t seed = 1;
    std::size_t n = 10;
    bool no_deg2 = false;
    bool serial = false;
    std::optional<std::size_t> index;
    std::string gadget;
    std::uint64_t nodes = OracleCaps{}.nodes;
};

GraphFile load(const Options& o) {
    if (o.input.empty() || o.input == "-") return read_graph(std::cin);
    return read_graph_file(o.input);
}

OracleCaps caps(const Options& o) {
    OracleCaps c;
    c.nodes = o.nodes;
    return c;
}

std::string join(const std::vector<VertexId>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
    return out;
}

std::string join_edges(const EdgeSet& es) {
    std::string out;
    for (std::size_t i = 0; i < es.size(); ++i) out += (i ? " " : "") + std::to_string(es[i]);
    return out;
}

int cmd_balance(const Options& o) {
    auto g = load(o).graph;
    auto sw = balancing_switch(g);
    std::cout << "balanced=" << (sw ? "true" : "false");
    if (sw) std::cout << " switch=" << (sw->empty() ? "-" : join(*sw));
    std::cout << "\n";
    return sw ? kTrue : kFalse;
}

int cmd_epsilon(const Options& o) {
    auto g = load(o).graph;
    std::cout << "epsilon=" << negativeness(g) << "\n";
    return kTrue;
}

int cmd_coverable(const Options& o) {
    auto g = load(o).graph;
    auto rep = is_coverable_per_component(g);
    std::cout << "coverable=" << (rep.coverable ? "true" : "false");
    if (!rep.coverable) std::cout << " reason=" << rep.reason();
    std::cout << "\n";
    if (o.verbose) {
        std::cout << "# epsilon=" << rep.epsilon << "\n";
        if (rep.bridge) std::cout << "# balanced_side=" << join(rep.balanced_side) << "\n";
    }
    return rep.coverable ? kTrue : kFalse;
}

int cmd_circuits(const Options& o) {
    auto g = load(o).graph;
    auto cs = enumerate_circuits(g, o.cap);
    auto sc = enumerate_signed_circuits(g, o.cap, o.cap);
    std::size_t bal = 0;
    for (const auto& c : cs) bal += c.balanced() ? 1 : 0;
    std::cout << "circuits=" << cs.size() << " balanced=" << bal << " unbalanced=" << cs.size() - bal
              << " signed_circuits=" << sc.size() << "\n";
    if (o.verbose)
        for (const auto& c : sc) std::cout << kind_name(c.kind()) << " : " << join_edges(c.edges) << "\n";
    return kTrue;
}

std::pair<VertexId, VertexId> parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw PreconditionError("--at expects x,y");
    try {
        return {static_cast<VertexId>(std::stoul(s.substr(0, comma))), static_cast<VertexId>(std::stoul(s.substr(comma + 1)))};
    } catch (const std::exception&) {
        throw PreconditionError("--at expects x,y");
    }
}

int cmd_decompose(const Options& o) {
    auto gf = load(o);
    const auto& g = gf.graph;
    std::optional<Terminals> at = gf.terminals;
    if (!o.at.empty()) at = parse_pair(o.at);
    if (!at) {
        auto bc = blocks_and_cuts(g);
        std::cout << "blocks=" << bc.blocks.size() << " cut_vertices=" << (bc.cut_vertices.empty() ? "-" : join(bc.cut_vertices))
                  << " k4_minor_free=" << (is_k4_minor_free(g) ? "true" : "false") << "\n";
        if (o.verbose)
            for (const auto& b : bc.blocks) std::cout << "block : " << join_edges(b) << "\n";
        return kTrue;
    }
    auto [x, y] = *at;
    auto ps = pieces_at(g, x, y);
    auto tree = sp_decompose(g, x, y);
    auto chain = parts(g, x, y);
    std::cout << "x=" << x << " y=" << y << " pieces=" << ps.size() << " parts=" << chain.parts.size()
              << " b0=" << chain.indices(PartClass::b0).size() << " b1=" << chain.indices(PartClass::b1).size()
              << " b2=" << chain.indices(PartClass::b2).size() << "\n";
    if (o.verbose) {
        for (const auto& p : chain.parts)
            std::cout << class_name(p.cls) << " " << p.source << "-" << p.target << " : " << join_edges(p.edges) << "\n";
        std::cout << render(g, tree.root) << "\n";
    }
    return kTrue;
}

int cmd_cover(const Options& o) {
    auto g = load(o).graph;
    auto r = construct_six_cover(g, caps(o));
    write_cover(std::cout, r.family, 6);
    if (o.verbose) {
        std::cout << "# oracle_calls=" << r.stats.oracle_calls << "\n";
        for (const auto& [step, n] : r.stats.steps) std::cout << "# step " << step << "=" << n << "\n";
    }
    std::cout << "# provenance=" << provenance_name(r.provenance) << "\n";
    return kTrue;
}

int cmd_verify(const Options& o) {
    auto g = load(o).graph;
    std::ifstream in(o.cover_file);
    if (!in) throw Error("cannot open " + o.cover_file);
    auto file = read_cover(in);
    auto f = family_from_file(g, file);
    auto v = verify_k_cover(g, f, o.k);
    std::cout << "valid=" << (v ? "true" : "false") << " k=" << o.k << " members=" << f.size();
    if (!v) {
        std::cout << " violation=\"" << v.violation << "\"";
        if (v.edge) std::cout << " edge=" << *v.edge;
        if (v.member) std::cout << " member=" << *v.member;
    }
    std::cout << "\n";
    return v ? kTrue : kFalse;
}

int cmd_feasible(const Options& o) {
    auto g = load(o).graph;
    auto rep = k_cover_feasible(g, o.k, caps(o));
    std::cout << "feasible=" << (rep.feasible ? "true" : "false") << " k=" << o.k << "\n";
    if (o.verbose) {
        std::cout << "# nodes=" << rep.nodes_explored << "\n";
        if (rep.family) write_cover(std::cout, *rep.family, o.k);
    }
    return rep.feasible ? kTrue : kFalse;
}

int cmd_mink(const Options& o) {
    auto g = load(o).graph;
    auto k = min_k_with_cover(g, o.kmax, caps(o));
    std::cout << "min_k=" << (k ? std::to_string(*k) : "none") << "\n";
    return k ? kTrue : kFalse;
}

int cmd_scc(const Options& o) {
    auto g = load(o).graph;
    auto rep = min_cover_length(g, caps(o));
    std::cout << "scc=" << rep.length << " members=" << rep.family.size() << "\n";
    if (o.verbose) write_cover(std::cout, rep.family, 1);
    return kTrue;
}

int cmd_gadget(const Options& o) {
    auto id = gadget_from_name(o.gadget);
    if (!id) throw PreconditionError("unknown gadget " + o.gadget);
    auto gd = gadget(*id);
    write_graph(std::cout, gd.graph, gd.terminals);
    return kTrue;
}

SpParams params(const Options& o) {
    SpParams p;
    p.no_two_vertices = o.no_deg2;
    return p;
}

int cmd_gen(const Options& o) {
    auto corpus = coverable_corpus(o.n, params(o), o.seed);
    for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
        if (o.index && *o.index != i) continue;
        if (!o.index) std::cout << "# instance=" << i << " seed=" << corpus.seeds[i] << "\n";
        write_graph(std::cout, corpus.graphs[i]);
        if (!o.index && i + 1 < corpus.graphs.size()) std::cout << "\n";
    }
    if (o.index && *o.index >= corpus.graphs.size()) throw PreconditionError("--index out of range");
    return kTrue;
}

int cmd_hunt(const Options& o) {
    auto corpus = coverable_corpus(o.n, params(o), o.seed);
    std::vector<std::string> lines(corpus.graphs.size());
    for_each_index(corpus.graphs.size(), !o.serial, [&](std::size_t i) {
        std::ostringstream line;
        const auto& g = corpus.graphs[i];
        line << "instance=" << i << " vertices=" << g.vertex_count() << " edges=" << g.edge_count() << " min_k=";
        try {
            auto k = min_k_with_cover(g, o.kmax, caps(o));
            line << (k ? std::to_string(*k) : "none");
        } catch (const CapExceeded&) {
            line << "cap";
        }
        lines[i] = line.str();
    });
    std::size_t worst = 0;
    for (const auto& l : lines) {
        std::cout << l << "\n";
        auto pos = l.rfind('=');
        auto v = l.substr(pos + 1);
        if (v != "none" && v != "cap") worst = std::max<std::size_t>(worst, std::stoul(v));
    }
    std::cout << "instances=" << lines.size() << " max_min_k=" << worst << "\n";
    return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed circuit covers of signed K4-minor-free graphs"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("-v,--verbose", o.verbose, "Print details after the result line");
    app.add_option("--nodes", o.nodes, "Node budget of the exact search");

    std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
    auto graph_cmd = [&](const char* name, const char* help, int (*fn)(const Options&)) {
        auto* sub = app.add_subcommand(name, help)->fallthrough();
        sub->add_option("input", o.input, "Graph file (default: standard input)");
        commands.emplace_back(sub, fn);
        return sub;
    };
    graph_cmd("balance", "Is the graph balanced", cmd_balance);
    graph_cmd("epsilon", "Negativeness (frustration index)", cmd_epsilon);
    graph_cmd("coverable", "Does a signed circuit cover exist", cmd_coverable);
    graph_cmd("circuits", "Count circuits and signed circuits", cmd_circuits)
        ->add_option("--cap", o.cap, "Enumeration cap");
    graph_cmd("decompose", "Blocks, or the series-parallel structure at two terminals", cmd_decompose)
        ->add_option("--at", o.at, "Terminals x,y");
    graph_cmd("cover", "Build a signed circuit 6-cover", cmd_cover);
    auto* verify = graph_cmd("verify", "Check a cover file", cmd_verify);
    verify->add_option("--cover", o.cover_file, "Cover file")->required();
    verify->add_option("--k", o.k, "Coverage multiplicity")->required();
    graph_cmd("feasible", "Decide whether a signed circuit k-cover exists", cmd_feasible)
        ->add_option("--k", o.k, "Coverage multiplicity")
        ->required();
    graph_cmd("mink", "Smallest k with a signed circuit k-cover", cmd_mink)
        ->add_option("--max", o.kmax, "Largest k tried")
        ->required();
    graph_cmd("scc", "Shortest signed circuit cover length", cmd_scc);
    auto* gad = app.add_subcommand("gadget", "Print a named gadget");
    gad->add_option("name", o.gadget, "R0..R5, D1, D2, FIG1_CHAIN, TIGHTNESS")->required();
    gad->fallthrough();
    commands.emplace_back(gad, cmd_gadget);
    auto* gen = app.add_subcommand("gen", "Generate coverable random graphs");
    gen->add_option("--seed", o.seed)->required();
    gen->add_option("--n", o.n)->required();
    gen->add_flag("--no-deg2", o.no_deg2, "No vertices of degree two");
    gen->add_option("--index", o.index, "Print only this instance");
    gen->fallthrough();
    commands.emplace_back(gen, cmd_gen);
    auto* hunt = app.add_subcommand("hunt", "Smallest k per generated instance");
    hunt->add_option("--seed", o.seed)->required();
    hunt->add_option("--n", o.n)->required();
    hunt->add_option("--kmax", o.kmax)->required();
    hunt->add_flag("--no-deg2", o.no_deg2, "No vertices of degree two");
    hunt->add_flag("--serial", o.serial, "Run instances on one thread");
    hunt->fallthrough();
    commands.emplace_back(hunt, cmd_hunt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kError;
    }
    try {
        for (auto& [sub, fn] : commands)
            if (sub->parsed()) return fn(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const CapExceeded& e) {
        std::cerr << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kError;
}
