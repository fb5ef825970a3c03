#include "contraction.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "errors.hpp"

namespace magnikit {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

}  // namespace

ContractionMorphism ContractionMorphism::make(Graph source, Graph target,
                                              std::vector<int> vertex_map,
                                              std::vector<int> contracted) {
    if (static_cast<int>(vertex_map.size()) != source.n())
        fail(Err::bad_parameter, "vertex map has wrong size");
    std::sort(contracted.begin(), contracted.end());
    Dsu dsu(source.n());
    for (int i : contracted) {
        const Edge& e = source.edges().at(i);
        if (e.is_loop()) fail(Err::self_loop_contraction, "contracted edge is a loop");
        if (!dsu.unite(e.u, e.v))
            fail(Err::bad_parameter, "contracted edges contain a cycle (fiber not a tree)");
    }
    // fibers must match the map, and the map must be constant on fibers
    for (int v = 0; v < source.n(); ++v) {
        if (vertex_map[v] < 0 || vertex_map[v] >= target.n())
            fail(Err::bad_endpoint, "vertex map out of range");
        if (vertex_map[dsu.find(v)] != vertex_map[v])
            fail(Err::bad_parameter, "vertex map not constant on contraction fibers");
    }
    std::vector<char> hit(target.n(), 0);
    std::map<int, int> fiber_of_class;
    for (int v = 0; v < source.n(); ++v) {
        hit[vertex_map[v]] = 1;
        auto [it, fresh] = fiber_of_class.emplace(dsu.find(v), vertex_map[v]);
        if (!fresh && it->second != vertex_map[v])
            fail(Err::bad_parameter, "vertex map not constant on contraction fibers");
    }
    if (std::count(hit.begin(), hit.end(), 1) != target.n())
        fail(Err::bad_parameter, "vertex map not surjective");
    if (static_cast<int>(fiber_of_class.size()) != target.n())
        fail(Err::bad_parameter, "two fibers map to the same target vertex");

    // non-contracted edges must map bijectively onto the target edge multiset
    std::map<std::pair<int, int>, int> need;
    for (auto& e : target.edges()) need[{e.u, e.v}]++;
    size_t ci = 0;
    for (int i = 0; i < source.edge_count(); ++i) {
        if (ci < contracted.size() && contracted[ci] == i) {
            ++ci;
            continue;
        }
        const Edge& e = source.edges()[i];
        Edge img(vertex_map[e.u], vertex_map[e.v]);
        if (--need[{img.u, img.v}] < 0)
            fail(Err::bad_parameter, "edge images do not match the target");
    }
    for (auto& [k, c] : need)
        if (c != 0) fail(Err::bad_parameter, "edge images do not match the target");

    ContractionMorphism m;
    m.source = std::move(source);
    m.target = std::move(target);
    m.vertex_map = std::move(vertex_map);
    m.contracted = std::move(contracted);
    return m;
}

ContractionMorphism ContractionMorphism::identity(const Graph& g) {
    std::vector<int> id(g.n());
    std::iota(id.begin(), id.end(), 0);
    return make(g, g, id, {});
}

ContractionMorphism ContractionMorphism::single_edge(const Graph& g, int edge_index) {
    return make(g, g.contract_edge(edge_index), g.contraction_vertex_map(edge_index),
                {edge_index});
}

bool ContractionMorphism::is_identity_map() const {
    for (size_t v = 0; v < vertex_map.size(); ++v)
        if (vertex_map[v] != static_cast<int>(v)) return false;
    return true;
}

ContractionMorphism compose(const ContractionMorphism& psi, const ContractionMorphism& phi) {
    if (!(phi.target == psi.source))
        fail(Err::bad_parameter, "morphisms do not compose: middle graphs differ");
    std::vector<int> map(phi.source.n());
    for (int v = 0; v < phi.source.n(); ++v) map[v] = psi.vertex_map[phi.vertex_map[v]];

    // pull psi's contracted edges back along phi's edge bijection
    std::vector<char> is_contracted(phi.source.edge_count(), 0);
    for (int i : phi.contracted) is_contracted[i] = 1;
    std::map<std::pair<int, int>, std::vector<int>> preimages;
    for (int i = 0; i < phi.source.edge_count(); ++i) {
        if (is_contracted[i]) continue;
        const Edge& e = phi.source.edges()[i];
        Edge img(phi.vertex_map[e.u], phi.vertex_map[e.v]);
        preimages[{img.u, img.v}].push_back(i);
    }
    std::vector<int> contracted = phi.contracted;
    for (int j : psi.contracted) {
        const Edge& e = psi.source.edges()[j];
        auto& bucket = preimages[{e.u, e.v}];
        if (bucket.empty()) fail(Err::internal, "edge bijection failure in compose");
        contracted.push_back(bucket.front());
        bucket.erase(bucket.begin());
    }
    return ContractionMorphism::make(phi.source, psi.target, std::move(map),
                                     std::move(contracted));
}

std::pair<Graph, std::vector<int>> quotient_by_edges(const Graph& g,
                                                     const std::vector<int>& edge_indices) {
    Dsu dsu(g.n());
    for (int i : edge_indices) {
        const Edge& e = g.edges().at(i);
        if (e.is_loop()) fail(Err::self_loop_contraction, "cannot contract a loop");
        if (!dsu.unite(e.u, e.v)) fail(Err::bad_parameter, "edge set contains a cycle");
    }
    // classes labelled by order of smallest member
    std::vector<int> label(g.n(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v) {
        int root = dsu.find(v);
        if (label[root] < 0) label[root] = next++;
    }
    std::vector<int> map(g.n());
    for (int v = 0; v < g.n(); ++v) map[v] = label[dsu.find(v)];

    std::vector<char> is_contracted(g.edge_count(), 0);
    for (int i : edge_indices) is_contracted[i] = 1;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (is_contracted[i]) continue;
        es.push_back({map[g.edges()[i].u], map[g.edges()[i].v]});
    }
    return {Graph::build(next, es), map};
}

std::vector<ContractionMorphism> enumerate_contractions_onto(const Graph& big,
                                                             const Graph& small,
                                                             int vertex_cap) {
    if (big.n() > vertex_cap)
        fail(Err::too_large, "graph exceeds the contraction enumeration cap");
    std::vector<ContractionMorphism> out;
    if (big.n() < small.n() || big.genus() != small.genus()) return out;
    int s = big.n() - small.n();

    // candidate edges: non-loops
    std::vector<int> candidates;
    for (int i = 0; i < big.edge_count(); ++i)
        if (!big.edges()[i].is_loop()) candidates.push_back(i);

    std::vector<int> subset;
    auto rec = [&](auto&& self, size_t from, Dsu dsu) -> void {
        if (static_cast<int>(subset.size()) == s) {
            auto [quot, qmap] = quotient_by_edges(big, subset);
            for (auto& iso : enumerate_isomorphisms(quot, small)) {
                std::vector<int> map(big.n());
                for (int v = 0; v < big.n(); ++v) map[v] = iso[qmap[v]];
                out.push_back(ContractionMorphism::make(big, small, map, subset));
            }
            return;
        }
        for (size_t i = from; i < candidates.size(); ++i) {
            const Edge& e = big.edges()[candidates[i]];
            Dsu next = dsu;
            if (!next.unite(e.u, e.v)) continue;  // keep the subset acyclic
            subset.push_back(candidates[i]);
            self(self, i + 1, next);
            subset.pop_back();
        }
    };
    rec(rec, 0, Dsu(big.n()));
    return out;
}

}  // namespace magnikit
