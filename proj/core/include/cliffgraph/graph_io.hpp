#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cliffgraph/labeled_graph.hpp"

namespace cliffgraph
{

    class CliffordGroup;
    struct CayleyGraph;
    struct ReachabilityGraph;

    /**
     * Serializable bundle of one labeled graph with its provenance: phase
     * handling, generating set, one witness word per vertex, and (for
     * reachability graphs) one state rendering per vertex.
     */
    struct GraphDocument
    {
        std::string phase_mode;
        std::vector<std::string> generators;
        LabeledGraph graph;
        std::vector<std::string> vertex_words;
        std::vector<std::string> vertex_states; // empty = omitted on export
    };

    GraphDocument document_from(const CliffordGroup &g, const CayleyGraph &c);
    GraphDocument document_from(const ReachabilityGraph &r);

    /** Deterministic JSON rendering with fixed key order and sorted edges. */
    std::string to_json(const GraphDocument &doc);

    /** Deterministic DOT rendering with one color per label. */
    std::string to_dot(const GraphDocument &doc);

    GraphDocument from_json(std::string_view text);

} // namespace cliffgraph
