#include "cliffgraph/labeled_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffgraph
{

    LabeledGraph::LabeledGraph(std::uint32_t num_vertices, std::vector<std::string> labels)
        : _num_vertices(num_vertices), _labels(std::move(labels))
    {
    }

    void LabeledGraph::add_edge(std::uint32_t source, std::uint32_t label, std::uint32_t target)
    {
        if (source >= _num_vertices || target >= _num_vertices)
        {
            throw std::domain_error("LabeledGraph: edge endpoint out of range");
        }
        if (label >= _labels.size())
        {
            throw std::domain_error("LabeledGraph: edge label out of range");
        }
        _edges.push_back({source, label, target});
    }

    void LabeledGraph::finalize()
    {
        std::sort(_edges.begin(), _edges.end());
        for (std::size_t i = 1; i < _edges.size(); ++i)
        {
            if (_edges[i].source == _edges[i - 1].source && _edges[i].label == _edges[i - 1].label)
            {
                throw std::domain_error("LabeledGraph: duplicate (source, label) edge");
            }
        }
    }

    std::uint32_t LabeledGraph::label_index(std::string_view name) const
    {
        for (std::size_t i = 0; i < _labels.size(); ++i)
        {
            if (_labels[i] == name)
            {
                return static_cast<std::uint32_t>(i);
            }
        }
        throw std::domain_error("LabeledGraph: unknown label '" + std::string(name) + "'");
    }

} // namespace cliffgraph
