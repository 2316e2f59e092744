#include "crystal/graph.hpp"

#include <queue>
#include <sstream>

#include "json.hpp"

namespace crystal {

std::string CrystalGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (size_t j = 0; j < keys.size(); ++j)
        os << "  n" << j << " [label=\"" << keys[j] << "\"];\n";
    for (const auto& [kc, v] : out)
        os << "  n" << kc.first << " -> n" << v << " [label=\"" << kc.second << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string CrystalGraph::to_json() const {
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    for (size_t k = 0; k < keys.size(); ++k)
        j["nodes"].push_back({{"key", keys[k]}, {"weight", weight_str(weights[k])}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [kc, v] : out)
        j["edges"].push_back({{"from", keys[kc.first]}, {"color", kc.second}, {"to", keys[v]}});
    j["highest"] = nlohmann::ordered_json::array();
    for (int h : highest) j["highest"].push_back(keys[h]);
    return j.dump(2) + "\n";
}

std::optional<std::vector<int>> crystal_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2) {
    if (g1.highest.size() != 1 || g2.highest.size() != 1)
        throw std::invalid_argument("crystal_isomorphic: graphs must have a unique highest node");
    if (g1.size() != g2.size()) return std::nullopt;

    std::vector<int> map1(g1.size(), -1), seen2(g2.size(), 0);
    std::queue<int> work;
    map1[g1.highest[0]] = g2.highest[0];
    seen2[g2.highest[0]] = 1;
    work.push(g1.highest[0]);
    size_t matched = 1;
    while (!work.empty()) {
        int u = work.front();
        work.pop();
        int v = map1[u];
        if (g1.weights[u] != g2.weights[v]) return std::nullopt;
        for (int c : g1.colors) {
            auto i1 = g1.out.find({u, c});
            auto i2 = g2.out.find({v, c});
            if ((i1 == g1.out.end()) != (i2 == g2.out.end())) return std::nullopt;
            if (i1 == g1.out.end()) continue;
            int nu = i1->second, nv = i2->second;
            if (map1[nu] == -1) {
                if (seen2[nv]) return std::nullopt; // not injective
                map1[nu] = nv;
                seen2[nv] = 1;
                ++matched;
                work.push(nu);
            } else if (map1[nu] != nv) {
                return std::nullopt;
            }
        }
    }
    if (matched != g1.size()) return std::nullopt; // g1 not connected from highest

    // Edge sets must correspond exactly in both directions.
    if (g1.out.size() != g2.out.size()) return std::nullopt;
    for (const auto& [kc, v] : g1.out) {
        auto it = g2.out.find({map1[kc.first], kc.second});
        if (it == g2.out.end() || it->second != map1[v]) return std::nullopt;
    }
    return map1;
}

} // namespace crystal
