#include "cliffgraph/graph_io.hpp"

#include <stdexcept>

#include <json.hpp>

#include "cliffgraph/errors.hpp"
#include "cliffgraph/graph_analysis.hpp"
#include "cliffgraph/group.hpp"
#include "cliffgraph/quotient.hpp"

namespace cliffgraph
{

    namespace
    {

        // Fixed palette; the label index picks the color, cycling when exhausted.
        constexpr const char *kPalette[] = {
            "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
            "#f781bf", "#17becf", "#666666", "#bcbd22", "#8c564b", "#1b9e77"};
        constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

    } // namespace

    GraphDocument document_from(const CliffordGroup &g, const CayleyGraph &c)
    {
        GraphDocument doc;
        doc.phase_mode = phase_mode_name(g.phase_mode());
        doc.graph = cayley_labeled_graph(g, c);
        doc.generators = doc.graph.labels();
        doc.vertex_words.reserve(g.order());
        for (std::uint32_t id = 0; id < g.order(); ++id)
        {
            doc.vertex_words.push_back(word_to_string(g.word(id)));
        }
        return doc;
    }

    GraphDocument document_from(const ReachabilityGraph &r)
    {
        GraphDocument doc;
        doc.phase_mode = phase_mode_name(r.phase_mode);
        doc.generators = r.graph.labels();
        doc.graph = r.graph;
        doc.vertex_words.reserve(r.vertex_words.size());
        for (const GateWord &w : r.vertex_words)
        {
            doc.vertex_words.push_back(word_to_string(w));
        }
        doc.vertex_states.reserve(r.vertex_states.size());
        for (const StateVector &s : r.vertex_states)
        {
            doc.vertex_states.push_back(s.to_string());
        }
        return doc;
    }

    std::string to_json(const GraphDocument &doc)
    {
        nlohmann::ordered_json j;
        j["phase_mode"] = doc.phase_mode;
        j["generators"] = doc.generators;
        j["num_vertices"] = doc.graph.num_vertices();
        auto edges = nlohmann::ordered_json::array();
        for (const LabeledEdge &e : doc.graph.edges())
        {
            edges.push_back({e.source, e.label, e.target});
        }
        j["edges"] = std::move(edges);
        j["labels"] = doc.graph.labels();
        j["vertex_words"] = doc.vertex_words;
        if (!doc.vertex_states.empty())
        {
            j["vertex_states"] = doc.vertex_states;
        }
        return j.dump(2) + "\n";
    }

    std::string to_dot(const GraphDocument &doc)
    {
        std::string out = "digraph G {\n";
        std::vector<bool> incident(doc.graph.num_vertices(), false);
        for (const LabeledEdge &e : doc.graph.edges())
        {
            incident[e.source] = true;
            incident[e.target] = true;
            out += "  " + std::to_string(e.source) + " -> " + std::to_string(e.target) +
                   " [color=\"" + kPalette[e.label % kPaletteSize] + "\",label=\"" +
                   doc.graph.labels()[e.label] + "\"];\n";
        }
        for (std::uint32_t v = 0; v < doc.graph.num_vertices(); ++v)
        {
            if (!incident[v])
            {
                out += "  " + std::to_string(v) + ";\n";
            }
        }
        out += "}\n";
        return out;
    }

    GraphDocument from_json(std::string_view text)
    {
        nlohmann::json j;
        try
        {
            j = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error &err)
        {
            throw ParseError(std::string("graph document: ") + err.what(), err.byte);
        }

        try
        {
            GraphDocument doc;
            doc.phase_mode = j.at("phase_mode").get<std::string>();
            doc.generators = j.at("generators").get<std::vector<std::string>>();
            const auto num_vertices = j.at("num_vertices").get<std::uint32_t>();
            auto labels = j.at("labels").get<std::vector<std::string>>();
            doc.graph = LabeledGraph(num_vertices, std::move(labels));
            for (const auto &edge : j.at("edges"))
            {
                if (!edge.is_array() || edge.size() != 3)
                {
                    throw std::invalid_argument("graph document: edge entries need 3 fields");
                }
                doc.graph.add_edge(edge[0].get<std::uint32_t>(), edge[1].get<std::uint32_t>(),
                                   edge[2].get<std::uint32_t>());
            }
            doc.graph.finalize();
            doc.vertex_words = j.at("vertex_words").get<std::vector<std::string>>();
            if (j.contains("vertex_states"))
            {
                doc.vertex_states = j.at("vertex_states").get<std::vector<std::string>>();
            }
            return doc;
        }
        catch (const nlohmann::json::exception &err)
        {
            throw std::invalid_argument(std::string("graph document: ") + err.what());
        }
    }

} // namespace cliffgraph
