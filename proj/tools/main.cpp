#include <cctype>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "cliffgraph/errors.hpp"
#include "cliffgraph/gates.hpp"
#include "cliffgraph/graph_analysis.hpp"
#include "cliffgraph/graph_io.hpp"
#include "cliffgraph/group.hpp"
#include "cliffgraph/quotient.hpp"
#include "cliffgraph/relations.hpp"
#include "cliffgraph/states.hpp"
#include "cliffgraph/table.hpp"

using namespace cliffgraph;
using nlohmann::ordered_json;

namespace
{

    constexpr const char *kVersion = "0.1.0";

    /** Everything a subcommand needs plus the captured stdout text. */
    struct RunContext
    {
        bool json = false;
        int threads = 0;
        std::uint64_t seed = 0;
        std::ostringstream out;
        std::map<std::string, std::string> file_digests;
    };

    struct Options
    {
        std::string gens;
        int qubits = 0;
        bool mod_phase = false;
        bool direct = false;
        std::string state;
        std::string target;
        std::string labels;
        std::string core;
        std::string overlay;
        std::string format = "json";
        std::string out_path;
        std::string input;
        std::string input_b;
        std::uint64_t budget = 100'000'000;
        std::size_t cap = CliffordGroup::kDefaultElementCap;
        int count_qubits = 0;
    };

    std::string sha256_hex(std::string_view data)
    {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
        static const char *hex = "0123456789abcdef";
        std::string out;
        out.reserve(2 * length);
        for (unsigned int i = 0; i < length; ++i)
        {
            out.push_back(hex[digest[i] >> 4]);
            out.push_back(hex[digest[i] & 0xF]);
        }
        return out;
    }

    std::vector<std::string> split_list(const std::string &text)
    {
        std::vector<std::string> out;
        std::string token;
        for (char c : text)
        {
            if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
            {
                if (!token.empty())
                {
                    out.push_back(token);
                    token.clear();
                }
            }
            else
            {
                token.push_back(c);
            }
        }
        if (!token.empty())
        {
            out.push_back(token);
        }
        return out;
    }

    std::string list_to_word(const std::string &text)
    {
        std::string joined;
        for (const std::string &token : split_list(text))
        {
            if (!joined.empty())
            {
                joined += ' ';
            }
            joined += token;
        }
        return joined;
    }

    int infer_qubits(const GateWord &word)
    {
        int n = 0;
        for (const Gate &g : word)
        {
            n = std::max({n, g.qubit, g.target});
        }
        return n;
    }

    /** "generic N" draws the seeded pseudorandom state; everything else is a preset. */
    StateVector state_from_spec(const std::string &spec, std::uint64_t seed)
    {
        std::istringstream in(spec);
        std::string head;
        in >> head;
        if (head == "generic")
        {
            int n = 0;
            if (!(in >> n) || !(in >> std::ws).eof())
            {
                throw ParseError("expected 'generic <qubits>'", 0);
            }
            return generic_state(n, seed);
        }
        return preset_state(spec);
    }

    CliffordGroup group_from(const Options &o, int default_qubits = 0)
    {
        const GateWord gens = parse_word(list_to_word(o.gens));
        int n = o.qubits;
        if (n == 0)
        {
            n = default_qubits > 0 ? default_qubits : infer_qubits(gens);
        }
        const PhaseMode mode = o.mod_phase ? PhaseMode::mod_phase : PhaseMode::exact;
        return enumerate(gens, n, mode, o.cap);
    }

    std::string display_word(const GateWord &word)
    {
        return word.empty() ? "1" : word_to_string(word);
    }

    GraphDocument load_document(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
        {
            throw std::runtime_error("cannot open '" + path + "'");
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return from_json(buffer.str());
    }

    void write_file(RunContext &ctx, const std::string &path, const std::string &text)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
        {
            throw std::runtime_error("cannot write '" + path + "'");
        }
        out << text;
        if (!out)
        {
            throw std::runtime_error("write to '" + path + "' failed");
        }
        ctx.file_digests[path] = sha256_hex(text);
    }

    int run_verify_relations(RunContext &ctx, const Options &o)
    {
        const int n = o.qubits > 0 ? o.qubits : 2;
        const RelationReport report = verify_all(n);
        if (ctx.json)
        {
            ordered_json rows = ordered_json::array();
            for (const RelationCheck &c : report.checks)
            {
                rows.push_back({{"name", c.name}, {"i", c.i}, {"j", c.j}, {"passed", c.passed}});
            }
            ctx.out << rows.dump(2) << "\n";
        }
        else
        {
            std::size_t passed = 0;
            for (const RelationCheck &c : report.checks)
            {
                passed += c.passed ? 1 : 0;
                ctx.out << (c.passed ? "ok   " : "FAIL ") << std::left << std::setw(36) << c.name
                        << " (i=" << c.i << ", j=" << c.j << ")\n";
            }
            ctx.out << passed << " of " << report.checks.size() << " checks passed at " << n
                    << " qubits\n";
        }
        return report.all_passed ? 0 : 1;
    }

    int run_enumerate(RunContext &ctx, const Options &o)
    {
        const CliffordGroup g = group_from(o);
        if (ctx.json)
        {
            const ordered_json j = {{"generators", word_to_string(g.generators())},
                                    {"qubits", g.qubits()},
                                    {"phase_mode", phase_mode_name(g.phase_mode())},
                                    {"order", g.order()}};
            ctx.out << j.dump(2) << "\n";
        }
        else
        {
            ctx.out << "generators: " << display_word(g.generators()) << "\n"
                    << "qubits: " << g.qubits() << "\n"
                    << "phase: " << phase_mode_name(g.phase_mode()) << "\n"
                    << "order: " << g.order() << "\n";
        }
        return 0;
    }

    int run_table1(RunContext &ctx, const Options &)
    {
        const auto rows = subgroup_table(ctx.threads);
        if (ctx.json)
        {
            ordered_json out = ordered_json::array();
            for (const SubgroupTableEntry &row : rows)
            {
                out.push_back({{"generators", row.generators},
                               {"order", row.order},
                               {"diameter", row.diameter},
                               {"factor", row.factor},
                               {"mod_diameter", row.mod_diameter}});
            }
            ctx.out << out.dump(2) << "\n";
            return 0;
        }
        ctx.out << std::left << std::setw(20) << "generators" << std::right << std::setw(6)
                << "order" << std::setw(10) << "diameter" << std::setw(8) << "factor"
                << std::setw(14) << "mod-diameter" << "\n";
        for (const SubgroupTableEntry &row : rows)
        {
            ctx.out << std::left << std::setw(20) << row.generators << std::right << std::setw(6)
                    << row.order << std::setw(10) << row.diameter;
            if (row.factor != 0)
            {
                ctx.out << std::setw(8) << row.factor << std::setw(14) << row.mod_diameter;
            }
            ctx.out << "\n";
        }
        return 0;
    }

    int run_diameter(RunContext &ctx, const Options &o)
    {
        const CliffordGroup g = group_from(o);
        const int d = diameter(build_cayley(g), ctx.threads);
        if (ctx.json)
        {
            const ordered_json j = {{"generators", word_to_string(g.generators())},
                                    {"qubits", g.qubits()},
                                    {"phase_mode", phase_mode_name(g.phase_mode())},
                                    {"order", g.order()},
                                    {"diameter", d}};
            ctx.out << j.dump(2) << "\n";
        }
        else
        {
            ctx.out << d << "\n";
        }
        return 0;
    }

    int run_shortest_word(RunContext &ctx, const Options &o)
    {
        const CliffordGroup g = group_from(o);
        const GateWord target = parse_word(list_to_word(o.target));
        const GateWord reduced = shortest_word(g, word_matrix(target, g.qubits()));
        if (ctx.json)
        {
            const ordered_json j = {{"word", word_to_string(reduced)},
                                    {"length", reduced.size()}};
            ctx.out << j.dump(2) << "\n";
        }
        else
        {
            ctx.out << display_word(reduced) << "\n";
        }
        return 0;
    }

    int run_stabilizer(RunContext &ctx, const Options &o)
    {
        const StateVector v = state_from_spec(o.state, ctx.seed);
        const CliffordGroup g = group_from(o, v.qubits());
        const StabilizerSubgroup stab = stabilizer_subgroup(g, v);
        if (ctx.json)
        {
            ordered_json words = ordered_json::array();
            for (const std::uint32_t id : stab.members)
            {
                words.push_back(word_to_string(g.word(id)));
            }
            const ordered_json j = {{"group_order", g.order()},
                                    {"order", stab.members.size()},
                                    {"words", words}};
            ctx.out << j.dump(2) << "\n";
        }
        else
        {
            ctx.out << "order: " << stab.members.size() << "\n";
            for (const std::uint32_t id : stab.members)
            {
                ctx.out << display_word(g.word(id)) << "\n";
            }
        }
        return 0;
    }

    int run_reachability(RunContext &ctx, const Options &o)
    {
        const StateVector v = state_from_spec(o.state, ctx.seed);
        const ReachabilityGraph r = [&]() {
            if (o.direct)
            {
                return orbit_states(parse_word(list_to_word(o.gens)), v, o.cap);
            }
            return quotient_graph(group_from(o, v.qubits()), v);
        }();
        if (ctx.json)
        {
            ctx.out << to_json(document_from(r));
        }
        else
        {
            ctx.out << "vertices: " << r.graph.num_vertices() << "\n"
                    << "edges: " << r.graph.edges().size() << "\n";
            ctx.out << "labels:";
            for (const std::string &label : r.graph.labels())
            {
                ctx.out << " " << label;
            }
            ctx.out << "\n";
        }
        return 0;
    }

    int run_components(RunContext &ctx, const Options &o)
    {
        const GraphDocument doc = load_document(o.input);
        const std::vector<std::string> labels =
            o.labels.empty() ? doc.graph.labels() : split_list(o.labels);
        const auto components = components_by_labels(doc.graph, labels);
        if (ctx.json)
        {
            ordered_json sizes = ordered_json::array();
            ordered_json members = ordered_json::array();
            for (const auto &component : components)
            {
                sizes.push_back(component.size());
                members.push_back(component);
            }
            const ordered_json j = {{"count", components.size()},
                                    {"sizes", sizes},
                                    {"components", members}};
            ctx.out << j.dump(2) << "\n";
        }
        else
        {
            ctx.out << "components: " << components.size() << "\n" << "sizes:";
            for (const auto &component : components)
            {
                ctx.out << " " << component.size();
            }
            ctx.out << "\n";
        }
        return 0;
    }

    int run_overlay(RunContext &ctx, const Options &o)
    {
        const GraphDocument doc = load_document(o.input);
        const ContractionGraph c =
            overlay_contraction(doc.graph, split_list(o.core), split_list(o.overlay));
        if (ctx.json)
        {
            ordered_json sizes = ordered_json::array();
            for (const auto &component : c.super_vertices)
            {
                sizes.push_back(component.size());
            }
            ordered_json links = ordered_json::array();
            for (const SuperEdge &e : c.super_edges)
            {
                links.push_back({e.a, e.b, e.multiplicity});
            }
            const ordered_json j = {{"component_sizes", sizes},
                                    {"super_edges", links},
                                    {"self_links", c.self_links}};
            ctx.out << j.dump(2) << "\n";
        }
        else
        {
            ctx.out << "components:";
            for (const auto &component : c.super_vertices)
            {
                ctx.out << " " << component.size();
            }
            ctx.out << "\n";
            ctx.out << "links:";
            for (const SuperEdge &e : c.super_edges)
            {
                ctx.out << " " << e.a << "-" << e.b << " x" << e.multiplicity;
            }
            ctx.out << "\n" << "internal:";
            for (const std::uint64_t count : c.self_links)
            {
                ctx.out << " " << count;
            }
            ctx.out << "\n";
        }
        return 0;
    }

    int run_isomorphic(RunContext &ctx, const Options &o)
    {
        const GraphDocument a = load_document(o.input);
        const GraphDocument b = load_document(o.input_b);
        const IsoOutcome outcome = iso_test(a.graph, b.graph, o.budget);
        const char *verdict = outcome.result == IsoResult::isomorphic      ? "isomorphic"
                              : outcome.result == IsoResult::not_isomorphic ? "not-isomorphic"
                                                                            : "inconclusive";
        if (ctx.json)
        {
            ordered_json j = {{"result", verdict}};
            if (outcome.result == IsoResult::isomorphic)
            {
                j["mapping"] = outcome.mapping;
                j["label_mapping"] = outcome.label_mapping;
            }
            ctx.out << j.dump(2) << "\n";
        }
        else
        {
            ctx.out << verdict << "\n";
        }
        return 0;
    }

    int run_export(RunContext &ctx, const Options &o)
    {
        const GraphDocument doc = [&]() {
            if (!o.input.empty())
            {
                return load_document(o.input);
            }
            if (o.gens.empty())
            {
                throw ParseError("export needs --gens or --input", 0);
            }
            if (!o.state.empty())
            {
                const StateVector v = state_from_spec(o.state, ctx.seed);
                if (o.direct)
                {
                    return document_from(orbit_states(parse_word(list_to_word(o.gens)), v, o.cap));
                }
                return document_from(quotient_graph(group_from(o, v.qubits()), v));
            }
            const CliffordGroup g = group_from(o);
            return document_from(g, build_cayley(g));
        }();
        const std::string text = o.format == "dot" ? to_dot(doc) : to_json(doc);
        if (o.out_path.empty())
        {
            ctx.out << text;
        }
        else
        {
            write_file(ctx, o.out_path, text);
        }
        return 0;
    }

    int run_count(RunContext &ctx, const Options &o)
    {
        const unsigned long long count = stabilizer_state_count(o.count_qubits);
        if (ctx.json)
        {
            const ordered_json j = {{"qubits", o.count_qubits}, {"count", count}};
            ctx.out << j.dump(2) << "\n";
        }
        else
        {
            ctx.out << count << "\n";
        }
        return 0;
    }

} // namespace

int main(int argc, char **argv)
{
    const auto start = std::chrono::steady_clock::now();
    RunContext ctx;
    Options o;
    std::string manifest_path;

    CLI::App app{"exact Clifford subgroup and state-reachability explorer"};
    app.require_subcommand(1);
    app.add_flag("--json", ctx.json, "machine-readable output");
    app.add_option("--threads", ctx.threads, "worker threads, 0 = all cores");
    app.add_option("--seed", ctx.seed, "seed for 'generic N' states");
    app.add_option("--manifest", manifest_path, "also write the run manifest to this file");

    const auto add_group_options = [&o](CLI::App *sub, bool gens_required) {
        auto *gens = sub->add_option("--gens", o.gens,
                                     "generator list, e.g. \"H1,H2,C12\" or \"H1 H2 C12\"");
        if (gens_required)
        {
            gens->required();
        }
        sub->add_option("--qubits", o.qubits, "register width (default: inferred)");
        sub->add_flag("--mod-phase", o.mod_phase, "identify elements up to a global phase");
        sub->add_option("--cap", o.cap, "enumeration element cap");
    };

    int code = 0;
    const auto bind = [&code, &ctx, &o](CLI::App *sub, int (*fn)(RunContext &, const Options &)) {
        sub->fallthrough();
        sub->callback([&code, &ctx, &o, fn]() { code = fn(ctx, o); });
    };

    {
        auto *sub = app.add_subcommand("verify-relations", "check every generator identity");
        sub->add_option("--qubits", o.qubits, "register width (default 2)");
        bind(sub, run_verify_relations);
    }
    {
        auto *sub = app.add_subcommand("enumerate", "enumerate the subgroup of a generator list");
        add_group_options(sub, true);
        bind(sub, run_enumerate);
    }
    {
        auto *sub = app.add_subcommand("table1", "orders and diameters of the 29 generator "
                                                 "subsets on two qubits");
        bind(sub, run_table1);
    }
    {
        auto *sub = app.add_subcommand("diameter", "Cayley graph diameter of a subgroup");
        add_group_options(sub, true);
        bind(sub, run_diameter);
    }
    {
        auto *sub = app.add_subcommand("shortest-word", "shortest generator word equal to a "
                                                        "target circuit");
        add_group_options(sub, true);
        sub->add_option("--target", o.target, "circuit to reduce")->required();
        bind(sub, run_shortest_word);
    }
    {
        auto *sub = app.add_subcommand("stabilizer", "subgroup elements fixing a state");
        add_group_options(sub, true);
        sub->add_option("--state", o.state, "state spec, e.g. \"ghz 3\" or \"|0 1 +>\"")
            ->required();
        bind(sub, run_stabilizer);
    }
    {
        auto *sub = app.add_subcommand("reachability", "orbit graph of a state under a "
                                                       "generator list");
        add_group_options(sub, true);
        sub->add_option("--state", o.state, "start state spec")->required();
        sub->add_flag("--direct", o.direct, "search states directly instead of quotienting "
                                            "the group");
        bind(sub, run_reachability);
    }
    {
        auto *sub = app.add_subcommand("components", "connected components under a label "
                                                     "subset");
        sub->add_option("--input", o.input, "graph JSON file")->required();
        sub->add_option("--labels", o.labels, "labels to keep (default: all)");
        bind(sub, run_components);
    }
    {
        auto *sub = app.add_subcommand("overlay", "contract core-label components and count "
                                                  "overlay edges between them");
        sub->add_option("--input", o.input, "graph JSON file")->required();
        sub->add_option("--core", o.core, "labels defining components")->required();
        sub->add_option("--overlay", o.overlay, "labels counted between components")->required();
        bind(sub, run_overlay);
    }
    {
        auto *sub = app.add_subcommand("isomorphic", "labeled-graph isomorphism up to label "
                                                     "renaming");
        sub->add_option("first", o.input, "graph JSON file")->required();
        sub->add_option("second", o.input_b, "graph JSON file")->required();
        sub->add_option("--budget", o.budget, "search step budget");
        bind(sub, run_isomorphic);
    }
    {
        auto *sub = app.add_subcommand("export", "write a Cayley or reachability graph as "
                                                 "JSON or DOT");
        add_group_options(sub, false);
        sub->add_option("--state", o.state, "quotient by this state's stabilizer");
        sub->add_flag("--direct", o.direct, "search states directly instead of quotienting "
                                            "the group");
        sub->add_option("--input", o.input, "re-emit an existing graph JSON file");
        sub->add_option("--format", o.format, "dot or json")
            ->check(CLI::IsMember({"dot", "json"}));
        sub->add_option("--out", o.out_path, "output file (default: stdout)");
        bind(sub, run_export);
    }
    {
        auto *sub = app.add_subcommand("count-stabilizer-states", "closed-form stabilizer "
                                                                  "state count");
        sub->add_option("qubits", o.count_qubits, "register width")->required();
        bind(sub, run_count);
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        code = rc == 0 ? 0 : 2;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        code = 1;
    }

    std::cout << ctx.out.str();
    std::cout.flush();

    ordered_json manifest;
    std::string command;
    for (int i = 0; i < argc; ++i)
    {
        if (i > 0)
        {
            command += ' ';
        }
        command += argv[i];
    }
    manifest["command"] = command;
    manifest["version"] = kVersion;
    manifest["seed"] = ctx.seed;
    manifest["elapsed_seconds"] = std::chrono::duration<double>(
                                      std::chrono::steady_clock::now() - start)
                                      .count();
    ordered_json outputs = ordered_json::object();
    if (const std::string text = ctx.out.str(); !text.empty())
    {
        outputs["stdout"] = "sha256:" + sha256_hex(text);
    }
    for (const auto &[path, digest] : ctx.file_digests)
    {
        outputs[path] = "sha256:" + digest;
    }
    manifest["outputs"] = outputs;
    const std::string manifest_text = manifest.dump() + "\n";
    std::cerr << manifest_text;
    if (!manifest_path.empty())
    {
        std::ofstream out(manifest_path, std::ios::binary);
        out << manifest_text;
    }

    return code;
}
