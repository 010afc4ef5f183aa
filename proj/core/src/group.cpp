#include "cliffgraph/group.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "cliffgraph/errors.hpp"

namespace cliffgraph
{

    std::string phase_mode_name(PhaseMode mode)
    {
        return mode == PhaseMode::exact ? "exact" : "mod_phase";
    }

    std::string canonical_key(const UnitaryMatrix &m, PhaseMode mode)
    {
        return mode == PhaseMode::exact ? m.encode() : canonical_phase_key(m);
    }

    UnitaryMatrix CliffordGroup::element_matrix(std::uint32_t id) const
    {
        return UnitaryMatrix::decode(_element_keys.at(id));
    }

    std::optional<std::uint32_t> CliffordGroup::find(const UnitaryMatrix &m) const
    {
        return find_key(canonical_key(m, _mode));
    }

    std::optional<std::uint32_t> CliffordGroup::find_key(const std::string &key) const
    {
        auto it = _lookup.find(key);
        if (it == _lookup.end())
        {
            return std::nullopt;
        }
        return it->second;
    }

    GateWord CliffordGroup::word(std::uint32_t id) const
    {
        if (id >= order())
        {
            throw std::out_of_range("CliffordGroup::word: no such element ID");
        }
        GateWord w;
        while (id != 0)
        {
            w.push_back(_generators[_parent_gen[id]]);
            id = _parent[id];
        }
        return w;
    }

    CliffordGroup enumerate(const GateWord &generators, int n, PhaseMode mode,
                            std::size_t element_cap)
    {
        if (n < 1 || n > 10)
        {
            throw std::domain_error("enumerate: register width must be between 1 and 10 qubits");
        }
        if (generators.size() > 255)
        {
            throw std::domain_error("enumerate: at most 255 generators are supported");
        }
        for (const Gate &g : generators)
        {
            const int max_index = std::max(g.qubit, g.target);
            if (max_index > n)
            {
                throw std::domain_error("enumerate: generator " + g.name() +
                                        " does not fit in " + std::to_string(n) + " qubits");
            }
        }
        for (std::size_t a = 0; a < generators.size(); ++a)
        {
            for (std::size_t b = a + 1; b < generators.size(); ++b)
            {
                if (generators[a] == generators[b])
                {
                    throw std::domain_error("enumerate: duplicate generator " +
                                            generators[a].name());
                }
            }
        }

        CliffordGroup group;
        group._n = n;
        group._mode = mode;
        group._generators = generators;

        const UnitaryMatrix identity = UnitaryMatrix::identity(std::size_t{1} << n);
        std::string identity_key = canonical_key(identity, mode);
        group._lookup.emplace(identity_key, 0);
        group._element_keys.push_back(std::move(identity_key));
        group._parent.push_back(0);
        group._parent_gen.push_back(0);

        std::vector<std::uint32_t> frontier{0};
        while (!frontier.empty())
        {
            // First discovery wins (frontier in ID order, generators in given
            // order); IDs inside the level then follow the byte order of the
            // new encodings.
            std::map<std::string, std::pair<std::uint32_t, std::uint8_t>> newly;
            for (std::uint32_t v : frontier)
            {
                const UnitaryMatrix mv = group.element_matrix(v);
                for (std::size_t gi = 0; gi < generators.size(); ++gi)
                {
                    std::string key = canonical_key(gate_left_mul(generators[gi], mv, n), mode);
                    if (group._lookup.contains(key))
                    {
                        continue;
                    }
                    newly.try_emplace(std::move(key), v, static_cast<std::uint8_t>(gi));
                }
            }

            frontier.clear();
            for (auto &[key, origin] : newly)
            {
                if (group._element_keys.size() >= element_cap)
                {
                    throw ResourceLimitError("enumerate: element cap of " +
                                             std::to_string(element_cap) + " exceeded");
                }
                const auto id = static_cast<std::uint32_t>(group._element_keys.size());
                group._lookup.emplace(key, id);
                group._element_keys.push_back(key);
                group._parent.push_back(origin.first);
                group._parent_gen.push_back(origin.second);
                frontier.push_back(id);
            }
        }
        return group;
    }

    CayleyGraph build_cayley(const CliffordGroup &g)
    {
        CayleyGraph graph;
        graph.num_vertices = static_cast<std::uint32_t>(g.order());
        graph.num_generators = static_cast<std::uint32_t>(g.generators().size());
        graph.targets.resize(static_cast<std::size_t>(graph.num_vertices) * graph.num_generators);
        for (std::uint32_t v = 0; v < graph.num_vertices; ++v)
        {
            const UnitaryMatrix mv = g.element_matrix(v);
            for (std::uint32_t gi = 0; gi < graph.num_generators; ++gi)
            {
                const std::string key =
                    canonical_key(gate_left_mul(g.generators()[gi], mv, g.qubits()), g.phase_mode());
                const auto target = g.find_key(key);
                if (!target)
                {
                    throw std::logic_error("build_cayley: product left the element set");
                }
                graph.targets[static_cast<std::size_t>(v) * graph.num_generators + gi] = *target;
            }
        }
        return graph;
    }

    namespace
    {

        int eccentricity(const CayleyGraph &g, std::uint32_t source,
                         std::vector<std::uint8_t> &dist, std::vector<std::uint32_t> &queue)
        {
            std::fill(dist.begin(), dist.end(), std::uint8_t{0xFF});
            queue.clear();
            queue.push_back(source);
            dist[source] = 0;
            int max_dist = 0;
            for (std::size_t head = 0; head < queue.size(); ++head)
            {
                const std::uint32_t v = queue[head];
                const int dv = dist[v];
                const std::size_t base = static_cast<std::size_t>(v) * g.num_generators;
                for (std::uint32_t gi = 0; gi < g.num_generators; ++gi)
                {
                    const std::uint32_t w = g.targets[base + gi];
                    if (dist[w] == 0xFF)
                    {
                        dist[w] = static_cast<std::uint8_t>(dv + 1);
                        queue.push_back(w);
                        if (dv + 1 > max_dist)
                        {
                            max_dist = dv + 1;
                        }
                    }
                }
            }
            if (queue.size() != g.num_vertices)
            {
                throw std::logic_error("diameter: graph is not strongly connected");
            }
            return max_dist;
        }

        struct EccentricityRange
        {
            int min;
            int max;
        };

        EccentricityRange scan_sources(const CayleyGraph &g,
                                       const std::vector<std::uint32_t> &sources,
                                       unsigned worker_count)
        {
            std::atomic<std::size_t> next{0};
            std::atomic<int> best_max{0};
            std::atomic<int> best_min{std::numeric_limits<int>::max()};
            auto worker = [&]()
            {
                std::vector<std::uint8_t> dist(g.num_vertices);
                std::vector<std::uint32_t> queue;
                queue.reserve(g.num_vertices);
                int local_max = 0;
                int local_min = std::numeric_limits<int>::max();
                for (;;)
                {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= sources.size())
                    {
                        break;
                    }
                    const int ecc = eccentricity(g, sources[i], dist, queue);
                    local_max = std::max(local_max, ecc);
                    local_min = std::min(local_min, ecc);
                }
                int seen = best_max.load();
                while (local_max > seen && !best_max.compare_exchange_weak(seen, local_max))
                {
                }
                seen = best_min.load();
                while (local_min < seen && !best_min.compare_exchange_weak(seen, local_min))
                {
                }
            };

            if (worker_count <= 1 || sources.size() <= 1)
            {
                worker();
            }
            else
            {
                std::vector<std::thread> pool;
                pool.reserve(worker_count);
                for (unsigned t = 0; t < worker_count; ++t)
                {
                    pool.emplace_back(worker);
                }
                for (auto &t : pool)
                {
                    t.join();
                }
            }
            return {best_min.load(), best_max.load()};
        }

    } // namespace

    int diameter(const CayleyGraph &g, int threads)
    {
        if (g.num_vertices == 0)
        {
            throw std::domain_error("diameter: empty graph");
        }
        if (g.num_generators == 0)
        {
            return 0;
        }
        unsigned worker_count = threads > 0 ? static_cast<unsigned>(threads)
                                            : std::max(1u, std::thread::hardware_concurrency());
        worker_count = std::min<unsigned>(worker_count, g.num_vertices);

        // Right translation v -> v·h maps the edge v -> s·v to v·h -> s·(v·h),
        // so it is a graph automorphism, and one exists carrying any vertex to
        // any other. Every source therefore has the same BFS eccentricity and
        // the all-source maximum equals the eccentricity of vertex 0. Small
        // graphs still scan every source; large ones verify the symmetry on a
        // spread of sampled sources and rescan everything on any mismatch.
        constexpr std::uint32_t kFullScanLimit = 4096;
        constexpr std::uint32_t kSampleCount = 64;

        std::vector<std::uint32_t> sources;
        if (g.num_vertices <= kFullScanLimit)
        {
            sources.resize(g.num_vertices);
            for (std::uint32_t v = 0; v < g.num_vertices; ++v)
            {
                sources[v] = v;
            }
        }
        else
        {
            const std::uint32_t stride = g.num_vertices / kSampleCount;
            sources.push_back(0);
            for (std::uint32_t i = 1; i < kSampleCount; ++i)
            {
                sources.push_back(i * stride);
            }
        }

        const EccentricityRange range = scan_sources(g, sources, worker_count);
        if (sources.size() == g.num_vertices || range.min == range.max)
        {
            return range.max;
        }

        std::vector<std::uint32_t> all(g.num_vertices);
        for (std::uint32_t v = 0; v < g.num_vertices; ++v)
        {
            all[v] = v;
        }
        return scan_sources(g, all, worker_count).max;
    }

    GateWord shortest_word(const CliffordGroup &g, const UnitaryMatrix &target)
    {
        const auto id = g.find(target);
        if (!id)
        {
            throw NotInGroupError("shortest_word: target is not an element of the group");
        }
        return g.word(*id);
    }

    bool same_element_set(const CliffordGroup &a, const CliffordGroup &b)
    {
        if (a.qubits() != b.qubits() || a.phase_mode() != b.phase_mode())
        {
            throw std::domain_error("same_element_set: groups use different modes");
        }
        if (a.order() != b.order())
        {
            return false;
        }
        for (std::size_t id = 0; id < a.order(); ++id)
        {
            if (!b.find_key(a.element_key(static_cast<std::uint32_t>(id))))
            {
                return false;
            }
        }
        return true;
    }

} // namespace cliffgraph
