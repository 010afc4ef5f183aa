#include "cliffgraph/graph_analysis.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cliffgraph
{

    LabeledGraph cayley_labeled_graph(const CliffordGroup &g, const CayleyGraph &c)
    {
        std::vector<std::string> labels;
        labels.reserve(g.generators().size());
        for (const Gate &gen : g.generators())
        {
            labels.push_back(gen.name());
        }
        LabeledGraph out(c.num_vertices, std::move(labels));
        for (std::uint32_t v = 0; v < c.num_vertices; ++v)
        {
            for (std::uint32_t gi = 0; gi < c.num_generators; ++gi)
            {
                out.add_edge(v, gi, c.target(v, gi));
            }
        }
        out.finalize();
        return out;
    }

    namespace
    {

        struct UnionFind
        {
            std::vector<std::uint32_t> parent;

            explicit UnionFind(std::uint32_t n) : parent(n)
            {
                std::iota(parent.begin(), parent.end(), 0u);
            }

            std::uint32_t find(std::uint32_t x)
            {
                while (parent[x] != x)
                {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                return x;
            }

            void unite(std::uint32_t a, std::uint32_t b)
            {
                a = find(a);
                b = find(b);
                if (a != b)
                {
                    parent[std::max(a, b)] = std::min(a, b);
                }
            }
        };

        std::vector<bool> label_mask(const LabeledGraph &g, const std::vector<std::string> &labels)
        {
            std::vector<bool> mask(g.labels().size(), false);
            for (const std::string &name : labels)
            {
                mask[g.label_index(name)] = true;
            }
            return mask;
        }

    } // namespace

    std::vector<std::vector<std::uint32_t>> components_by_labels(
        const LabeledGraph &g, const std::vector<std::string> &labels)
    {
        const std::vector<bool> mask = label_mask(g, labels);
        UnionFind uf(g.num_vertices());
        for (const LabeledEdge &e : g.edges())
        {
            if (mask[e.label])
            {
                uf.unite(e.source, e.target);
            }
        }

        std::map<std::uint32_t, std::vector<std::uint32_t>> by_root;
        for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
        {
            by_root[uf.find(v)].push_back(v);
        }
        std::vector<std::vector<std::uint32_t>> components;
        components.reserve(by_root.size());
        for (auto &[root, members] : by_root)
        {
            components.push_back(std::move(members));
        }
        return components;
    }

    ContractionGraph overlay_contraction(const LabeledGraph &g,
                                         const std::vector<std::string> &core_labels,
                                         const std::vector<std::string> &overlay_labels)
    {
        const std::vector<bool> core = label_mask(g, core_labels);
        const std::vector<bool> overlay = label_mask(g, overlay_labels);
        for (std::size_t i = 0; i < core.size(); ++i)
        {
            if (core[i] && overlay[i])
            {
                throw std::domain_error("overlay_contraction: label sets must be disjoint");
            }
        }

        ContractionGraph result;
        result.super_vertices = components_by_labels(g, core_labels);
        std::vector<std::uint32_t> component_of(g.num_vertices());
        for (std::size_t c = 0; c < result.super_vertices.size(); ++c)
        {
            for (std::uint32_t v : result.super_vertices[c])
            {
                component_of[v] = static_cast<std::uint32_t>(c);
            }
        }

        result.self_links.assign(result.super_vertices.size(), 0);
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> pair_counts;
        for (const LabeledEdge &e : g.edges())
        {
            if (!overlay[e.label])
            {
                continue;
            }
            const std::uint32_t a = component_of[e.source];
            const std::uint32_t b = component_of[e.target];
            if (a == b)
            {
                ++result.self_links[a];
            }
            else
            {
                ++pair_counts[{std::min(a, b), std::max(a, b)}];
            }
        }
        result.super_edges.reserve(pair_counts.size());
        for (const auto &[pair, count] : pair_counts)
        {
            result.super_edges.push_back({pair.first, pair.second, count});
        }
        return result;
    }

    StrippedGraph strip_trivial_loops(const LabeledGraph &g)
    {
        StrippedGraph result;
        result.removed_per_label.assign(g.labels().size(), 0);
        result.graph = LabeledGraph(g.num_vertices(), g.labels());
        for (const LabeledEdge &e : g.edges())
        {
            if (e.source == e.target)
            {
                ++result.removed_per_label[e.label];
            }
            else
            {
                result.graph.add_edge(e.source, e.label, e.target);
            }
        }
        result.graph.finalize();
        return result;
    }

    namespace
    {

        constexpr std::uint32_t kNoVertex = 0xFFFFFFFFu;
        constexpr std::uint32_t kAllPairsLimit = 5000;

        // succ[label][v] = the v out-neighbour under that label, or kNoVertex.
        std::vector<std::vector<std::uint32_t>> successor_table(const LabeledGraph &g)
        {
            std::vector<std::vector<std::uint32_t>> succ(
                g.labels().size(), std::vector<std::uint32_t>(g.num_vertices(), kNoVertex));
            for (const LabeledEdge &e : g.edges())
            {
                succ[e.label][e.source] = e.target;
            }
            return succ;
        }

        std::string degree_distribution(const std::vector<std::uint32_t> &degrees)
        {
            std::map<std::uint32_t, std::uint64_t> counts;
            for (std::uint32_t d : degrees)
            {
                ++counts[d];
            }
            std::string out = "[";
            for (const auto &[degree, count] : counts)
            {
                out += std::to_string(degree) + ":" + std::to_string(count) + ",";
            }
            out += "]";
            return out;
        }

        // Per-label invariant records, sorted by content for label-rename
        // invariance.
        std::vector<std::string> label_records(const LabeledGraph &g, bool sorted)
        {
            const std::size_t num_labels = g.labels().size();
            std::vector<std::vector<std::uint32_t>> outdeg(
                num_labels, std::vector<std::uint32_t>(g.num_vertices(), 0));
            std::vector<std::vector<std::uint32_t>> indeg(
                num_labels, std::vector<std::uint32_t>(g.num_vertices(), 0));
            std::vector<std::uint64_t> loops(num_labels, 0);
            for (const LabeledEdge &e : g.edges())
            {
                ++outdeg[e.label][e.source];
                ++indeg[e.label][e.target];
                if (e.source == e.target)
                {
                    ++loops[e.label];
                }
            }

            const auto succ = successor_table(g);
            std::vector<std::string> records;
            records.reserve(num_labels);
            for (std::size_t l = 0; l < num_labels; ++l)
            {
                std::uint64_t on_three_cycles = 0;
                for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
                {
                    const std::uint32_t s1 = succ[l][v];
                    if (s1 == kNoVertex || s1 == v)
                    {
                        continue;
                    }
                    const std::uint32_t s2 = succ[l][s1];
                    if (s2 == kNoVertex)
                    {
                        continue;
                    }
                    const std::uint32_t s3 = succ[l][s2];
                    if (s3 == v)
                    {
                        ++on_three_cycles;
                    }
                }
                records.push_back("out" + degree_distribution(outdeg[l]) + "in" +
                                  degree_distribution(indeg[l]) + "loops=" +
                                  std::to_string(loops[l]) + "tri=" +
                                  std::to_string(on_three_cycles / 3));
            }
            if (sorted)
            {
                std::sort(records.begin(), records.end());
            }
            return records;
        }

        struct UndirectedAdjacency
        {
            std::vector<std::uint32_t> offsets;
            std::vector<std::uint32_t> neighbors;
        };

        UndirectedAdjacency undirected_adjacency(const LabeledGraph &g)
        {
            std::vector<std::vector<std::uint32_t>> adj(g.num_vertices());
            for (const LabeledEdge &e : g.edges())
            {
                if (e.source != e.target)
                {
                    adj[e.source].push_back(e.target);
                    adj[e.target].push_back(e.source);
                }
            }
            UndirectedAdjacency out;
            out.offsets.reserve(g.num_vertices() + 1);
            out.offsets.push_back(0);
            for (auto &neighbors : adj)
            {
                std::sort(neighbors.begin(), neighbors.end());
                neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
                out.neighbors.insert(out.neighbors.end(), neighbors.begin(), neighbors.end());
                out.offsets.push_back(static_cast<std::uint32_t>(out.neighbors.size()));
            }
            return out;
        }

        std::string distance_record(const LabeledGraph &g)
        {
            const UndirectedAdjacency adj = undirected_adjacency(g);
            std::vector<std::uint32_t> sources;
            if (g.num_vertices() > kAllPairsLimit)
            {
                const std::uint32_t stride = g.num_vertices() / 32;
                for (std::uint32_t k = 0; k < 32; ++k)
                {
                    sources.push_back(k * stride);
                }
            }
            else
            {
                sources.resize(g.num_vertices());
                std::iota(sources.begin(), sources.end(), 0u);
            }

            std::map<std::uint32_t, std::uint64_t> counts;
            std::uint64_t unreachable = 0;
            std::vector<std::uint32_t> dist(g.num_vertices());
            std::vector<std::uint32_t> queue;
            queue.reserve(g.num_vertices());
            for (std::uint32_t s : sources)
            {
                std::fill(dist.begin(), dist.end(), kNoVertex);
                queue.clear();
                queue.push_back(s);
                dist[s] = 0;
                std::uint32_t reached = 0;
                for (std::size_t head = 0; head < queue.size(); ++head)
                {
                    const std::uint32_t v = queue[head];
                    ++reached;
                    if (v != s)
                    {
                        ++counts[dist[v]];
                    }
                    for (std::uint32_t i = adj.offsets[v]; i < adj.offsets[v + 1]; ++i)
                    {
                        const std::uint32_t w = adj.neighbors[i];
                        if (dist[w] == kNoVertex)
                        {
                            dist[w] = dist[v] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                unreachable += g.num_vertices() - reached;
            }

            std::string out = "dist[";
            for (const auto &[d, c] : counts)
            {
                out += std::to_string(d) + ":" + std::to_string(c) + ",";
            }
            out += "inf:" + std::to_string(unreachable) + "]";
            return out;
        }

    } // namespace

    GraphFingerprint fingerprint(const LabeledGraph &g)
    {
        std::string bytes = "V=" + std::to_string(g.num_vertices()) +
                            ";L=" + std::to_string(g.labels().size()) +
                            ";E=" + std::to_string(g.edges().size()) + ";";
        for (const std::string &record : label_records(g, true))
        {
            bytes += record;
            bytes += ";";
        }
        bytes += distance_record(g);
        return {std::move(bytes)};
    }

    namespace
    {

        struct VertexSignature
        {
            // Per label: out-degree, in-degree, self-loop flag.
            std::vector<std::array<std::uint32_t, 3>> per_label;

            bool matches(const VertexSignature &other,
                         const std::vector<std::uint32_t> &label_map) const
            {
                for (std::size_t l = 0; l < per_label.size(); ++l)
                {
                    if (per_label[l] != other.per_label[label_map[l]])
                    {
                        return false;
                    }
                }
                return true;
            }
        };

        struct GraphView
        {
            const LabeledGraph *g;
            std::vector<std::vector<std::uint32_t>> succ;
            std::vector<std::vector<std::vector<std::uint32_t>>> preds; // [label][v] -> sources
            std::vector<VertexSignature> signatures;

            explicit GraphView(const LabeledGraph &graph) : g(&graph), succ(successor_table(graph))
            {
                const std::size_t num_labels = graph.labels().size();
                preds.assign(num_labels,
                             std::vector<std::vector<std::uint32_t>>(graph.num_vertices()));
                VertexSignature blank;
                blank.per_label.assign(num_labels, std::array<std::uint32_t, 3>{0, 0, 0});
                signatures.assign(graph.num_vertices(), blank);
                for (const LabeledEdge &e : graph.edges())
                {
                    preds[e.label][e.target].push_back(e.source);
                    ++signatures[e.source].per_label[e.label][0];
                    ++signatures[e.target].per_label[e.label][1];
                    if (e.source == e.target)
                    {
                        signatures[e.source].per_label[e.label][2] = 1;
                    }
                }
            }
        };

        struct SearchBudgetExhausted
        {
        };

        class IsoSearcher
        {
        private:
            const GraphView &_a;
            const GraphView &_b;
            const std::vector<std::uint32_t> &_label_map;
            std::uint64_t &_budget;
            std::vector<std::uint32_t> _map;
            std::vector<bool> _used;
            // Visit order: each entry is a vertex plus how it was reached.
            struct Step
            {
                std::uint32_t vertex;
                std::uint32_t via_label; // kNoVertex when this vertex starts a component
                std::uint32_t via_parent;
                bool via_out; // parent --label--> vertex when true, else vertex --label--> parent
            };
            std::vector<Step> _order;

            bool consistent(std::uint32_t v, std::uint32_t w) const
            {
                if (!_a.signatures[v].matches(_b.signatures[w], _label_map))
                {
                    return false;
                }
                for (std::size_t l = 0; l < _a.succ.size(); ++l)
                {
                    const std::uint32_t lb = _label_map[l];
                    const std::uint32_t sv = _a.succ[l][v];
                    if (sv != kNoVertex && _map[sv] != kNoVertex &&
                        _b.succ[lb][w] != _map[sv])
                    {
                        return false;
                    }
                    for (std::uint32_t u : _a.preds[l][v])
                    {
                        if (_map[u] != kNoVertex && _b.succ[lb][_map[u]] != w)
                        {
                            return false;
                        }
                    }
                }
                return true;
            }

            bool assign(std::size_t step_index, std::uint32_t v, std::uint32_t w)
            {
                if (_budget == 0)
                {
                    throw SearchBudgetExhausted{};
                }
                --_budget;
                if (_used[w] || !consistent(v, w))
                {
                    return false;
                }
                _map[v] = w;
                _used[w] = true;
                if (search(step_index + 1))
                {
                    return true;
                }
                _map[v] = kNoVertex;
                _used[w] = false;
                return false;
            }

        public:
            IsoSearcher(const GraphView &a, const GraphView &b,
                        const std::vector<std::uint32_t> &label_map, std::uint64_t &budget)
                : _a(a), _b(b), _label_map(label_map), _budget(budget),
                  _map(a.g->num_vertices(), kNoVertex), _used(b.g->num_vertices(), false)
            {
                // Undirected BFS over a fixes the visit order; forced images
                // come from functional out-edges whenever possible.
                std::vector<bool> seen(a.g->num_vertices(), false);
                for (std::uint32_t root = 0; root < a.g->num_vertices(); ++root)
                {
                    if (seen[root])
                    {
                        continue;
                    }
                    seen[root] = true;
                    _order.push_back({root, kNoVertex, kNoVertex, false});
                    for (std::size_t head = _order.size() - 1; head < _order.size(); ++head)
                    {
                        const std::uint32_t v = _order[head].vertex;
                        for (std::size_t l = 0; l < a.succ.size(); ++l)
                        {
                            const std::uint32_t s = a.succ[l][v];
                            if (s != kNoVertex && !seen[s])
                            {
                                seen[s] = true;
                                _order.push_back({s, static_cast<std::uint32_t>(l), v, true});
                            }
                            for (std::uint32_t u : a.preds[l][v])
                            {
                                if (!seen[u])
                                {
                                    seen[u] = true;
                                    _order.push_back(
                                        {u, static_cast<std::uint32_t>(l), v, false});
                                }
                            }
                        }
                    }
                }
            }

            bool search(std::size_t step_index)
            {
                if (step_index == _order.size())
                {
                    return true;
                }
                const Step &step = _order[step_index];
                if (step.via_label == kNoVertex)
                {
                    for (std::uint32_t w = 0; w < _b.g->num_vertices(); ++w)
                    {
                        if (assign(step_index, step.vertex, w))
                        {
                            return true;
                        }
                    }
                    return false;
                }
                const std::uint32_t lb = _label_map[step.via_label];
                const std::uint32_t parent_image = _map[step.via_parent];
                if (step.via_out)
                {
                    const std::uint32_t forced = _b.succ[lb][parent_image];
                    return forced != kNoVertex && assign(step_index, step.vertex, forced);
                }
                for (std::uint32_t w : _b.preds[lb][parent_image])
                {
                    if (assign(step_index, step.vertex, w))
                    {
                        return true;
                    }
                }
                return false;
            }

            std::vector<std::uint32_t> mapping() const { return _map; }
        };

        bool verify_mapping(const LabeledGraph &a, const LabeledGraph &b,
                            const std::vector<std::uint32_t> &vertex_map,
                            const std::vector<std::uint32_t> &label_map)
        {
            if (a.edges().size() != b.edges().size())
            {
                return false;
            }
            std::vector<LabeledEdge> mapped;
            mapped.reserve(a.edges().size());
            for (const LabeledEdge &e : a.edges())
            {
                mapped.push_back({vertex_map[e.source], label_map[e.label], vertex_map[e.target]});
            }
            std::sort(mapped.begin(), mapped.end());
            return mapped == b.edges();
        }

        // Enumerates record-compatible label bijections via recursive descent.
        template <typename Fn>
        bool for_each_label_map(const std::vector<std::string> &rec_a,
                                const std::vector<std::string> &rec_b, Fn &&fn)
        {
            std::vector<std::uint32_t> map(rec_a.size(), 0);
            std::vector<bool> taken(rec_b.size(), false);
            struct Walker
            {
                const std::vector<std::string> &rec_a;
                const std::vector<std::string> &rec_b;
                std::vector<std::uint32_t> &map;
                std::vector<bool> &taken;
                Fn &fn;

                bool walk(std::size_t index)
                {
                    if (index == map.size())
                    {
                        return fn(map);
                    }
                    for (std::uint32_t j = 0; j < rec_b.size(); ++j)
                    {
                        if (!taken[j] && rec_a[index] == rec_b[j])
                        {
                            taken[j] = true;
                            map[index] = j;
                            if (walk(index + 1))
                            {
                                return true;
                            }
                            taken[j] = false;
                        }
                    }
                    return false;
                }
            } walker{rec_a, rec_b, map, taken, fn};
            return walker.walk(0);
        }

    } // namespace

    IsoOutcome iso_test(const LabeledGraph &a, const LabeledGraph &b, std::uint64_t budget)
    {
        if (fingerprint(a) != fingerprint(b))
        {
            return {IsoResult::not_isomorphic, {}, {}};
        }

        const std::vector<std::string> rec_a = label_records(a, false);
        const std::vector<std::string> rec_b = label_records(b, false);
        const GraphView view_a(a);
        const GraphView view_b(b);

        IsoOutcome outcome{IsoResult::inconclusive, {}, {}};
        bool exhausted = false;
        for_each_label_map(rec_a, rec_b, [&](const std::vector<std::uint32_t> &label_map)
                           {
            try
            {
                IsoSearcher searcher(view_a, view_b, label_map, budget);
                if (searcher.search(0) && verify_mapping(a, b, searcher.mapping(), label_map))
                {
                    outcome = {IsoResult::isomorphic, searcher.mapping(), label_map};
                    return true;
                }
            }
            catch (const SearchBudgetExhausted &)
            {
                exhausted = true;
                return true;
            }
            return false; });

        if (outcome.result == IsoResult::isomorphic)
        {
            return outcome;
        }
        if (exhausted)
        {
            return {IsoResult::inconclusive, {}, {}};
        }
        return {IsoResult::not_isomorphic, {}, {}};
    }

} // namespace cliffgraph
