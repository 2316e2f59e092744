#ifndef CRYSTAL_GRAPH_HPP
#define CRYSTAL_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "crystal/lie.hpp"

namespace crystal {

// Finite colored digraph of a crystal component.  Node order is the sorted
// order of the canonical keys, so all exports are byte-stable.
struct CrystalGraph {
    std::vector<std::string> keys;
    std::vector<Weight> weights;
    std::map<std::pair<int, int>, int> out; // (node, color) -> node
    std::map<std::pair<int, int>, int> in;
    std::vector<int> highest;               // nodes with no incoming edge
    std::vector<int> colors;

    int index_of(const std::string& k) const {
        auto it = std::lower_bound(keys.begin(), keys.end(), k);
        if (it == keys.end() || *it != k) return -1;
        return int(it - keys.begin());
    }
    size_t size() const { return keys.size(); }

    std::string to_dot() const;
    std::string to_json() const;
};

// Breadth-first closure of a seed under e_i / f_i over the given colors.
// Model must provide key(), weight(), e(i) and f(i) returning optional.
template <class Model>
CrystalGraph generate_component(const Model& seed, const std::vector<int>& colors,
                                size_t node_cap = default_node_cap) {
    std::unordered_map<std::string, int> idx;
    std::vector<Model> nodes;
    std::vector<std::string> keys;
    std::queue<int> work;

    auto intern = [&](const Model& m) {
        std::string k = m.key();
        auto it = idx.find(k);
        if (it != idx.end()) return it->second;
        if (nodes.size() >= node_cap)
            throw ResourceLimit("node cap " + std::to_string(node_cap) + " exceeded");
        int id = (int)nodes.size();
        idx.emplace(k, id);
        nodes.push_back(m);
        keys.push_back(std::move(k));
        work.push(id);
        return id;
    };

    struct Edge { int from, color, to; };
    std::vector<Edge> edges;
    intern(seed);
    while (!work.empty()) {
        int u = work.front();
        work.pop();
        Model m = nodes[u]; // copy: nodes may reallocate below
        for (int i : colors) {
            if (auto fm = m.f(i)) edges.push_back({u, i, intern(*fm)});
            if (auto em = m.e(i)) edges.push_back({intern(*em), i, u});
        }
    }

    // Renumber by sorted key.
    std::vector<int> order(nodes.size());
    for (size_t j = 0; j < order.size(); ++j) order[j] = (int)j;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    std::vector<int> rank(nodes.size());
    for (size_t j = 0; j < order.size(); ++j) rank[order[j]] = (int)j;

    CrystalGraph g;
    g.colors = colors;
    g.keys.resize(nodes.size());
    g.weights.resize(nodes.size());
    for (size_t j = 0; j < nodes.size(); ++j) {
        g.keys[rank[j]] = keys[j];
        g.weights[rank[j]] = nodes[j].weight();
    }
    for (const auto& e : edges) {
        g.out[{rank[e.from], e.color}] = rank[e.to];
        g.in[{rank[e.to], e.color}] = rank[e.from];
    }
    std::vector<char> has_in(nodes.size(), 0);
    for (const auto& [kc, v] : g.in) has_in[kc.first] = 1;
    for (size_t j = 0; j < nodes.size(); ++j)
        if (!has_in[j]) g.highest.push_back((int)j);
    return g;
}

// Canonical isomorphism of connected highest-weight crystals: pair the
// highest nodes and propagate along same-colored edges.  Returns the node
// mapping g1 -> g2 iff it is total, bijective, weight preserving and edge
// preserving in both directions.
std::optional<std::vector<int>> crystal_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2);

} // namespace crystal

#endif
