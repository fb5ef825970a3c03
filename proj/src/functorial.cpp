#include "functorial.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace magnikit {

SparseIntMatrix induced_chain_map(const ContractionMorphism& phi, MagnitudeWorkspace& source,
                                  MagnitudeWorkspace& target, int k, int l) {
    const MagnitudeBasis& dom = source.basis(k, l);
    const MagnitudeBasis& cod = target.basis(k, l);
    const Graph& h = phi.target;
    SparseIntMatrix m(cod.count(), dom.count());
    std::vector<int32_t> img(k + 1);
    for (int j = 0; j < dom.count(); ++j) {
        auto t = dom.tuple(j);
        for (int i = 0; i <= k; ++i) img[i] = phi.vertex_map[t[i]];
        int len = 0;
        bool degenerate = false;
        for (int i = 0; i < k; ++i) {
            if (img[i] == img[i + 1]) {
                degenerate = true;
                break;
            }
            len += h.dist(img[i], img[i + 1]);
        }
        if (degenerate || len != l) continue;
        int row = cod.index_of(img);
        if (row < 0) fail(Err::internal, "image tuple missing from target basis");
        m.set_col(j, {{row, 1}});
    }
    return m;
}

SparseIntMatrix induced_chain_map(const ContractionMorphism& phi, int k, int l) {
    MagnitudeWorkspace source(phi.source), target(phi.target);
    return induced_chain_map(phi, source, target, k, l);
}

template <class F>
DenseMat<F> induced_on_homology(const ContractionMorphism& phi, int k, int l, const F& field) {
    MagnitudeWorkspace source(phi.source), target(phi.target);
    ClassBasis<F> dom(field, source.delta(k, l), source.delta(k + 1, l));
    ClassBasis<F> cod(field, target.delta(k, l), target.delta(k + 1, l));
    SparseIntMatrix chain = induced_chain_map(phi, source, target, k, l);
    const SparseIntMatrix& check = target.delta(k, l);
    DenseMat<F> m(field, cod.dim(), dom.dim());
    for (int j = 0; j < dom.dim(); ++j) {
        auto w = apply_matrix(field, chain, dom.rep(j));
        if (!apply_matrix(field, check, w).empty())
            fail(Err::not_a_cycle, "chain-map image of a cycle is not a cycle");
        auto coords = cod.express(std::move(w));
        if (!coords) fail(Err::not_a_cycle, "image not expressible in target homology");
        for (int i = 0; i < cod.dim(); ++i) m.at(i, j) = (*coords)[i];
    }
    return m;
}

template DenseMat<RationalField> induced_on_homology(const ContractionMorphism&, int, int,
                                                     const RationalField&);
template DenseMat<PrimeField> induced_on_homology(const ContractionMorphism&, int, int,
                                                  const PrimeField&);

mpz_class VertexDecomposition::evaluate(const Graph& g, int w) const {
    mpz_class val = iota_coeff;  // iota is 1 everywhere
    for (size_t i = 0; i < tree.size(); ++i) {
        if (f_coeffs[i] == 0) continue;
        // f_e is 1 on the far side of e
        // recomputed here from the stored tree and root
        // (kept simple: BFS on the tree without edge i)
        std::vector<std::vector<int>> adj(g.n());
        for (size_t j = 0; j < tree.size(); ++j) {
            if (j == i) continue;
            adj[tree[j].u].push_back(tree[j].v);
            adj[tree[j].v].push_back(tree[j].u);
        }
        std::vector<char> seen(g.n(), 0);
        std::vector<int> stack{root};
        seen[root] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int x : adj[u])
                if (!seen[x]) {
                    seen[x] = 1;
                    stack.push_back(x);
                }
        }
        if (!seen[w]) val += f_coeffs[i];
    }
    return val;
}

VertexDecomposition vertex_generator_decomposition(const Graph& g, const std::vector<Edge>& tree,
                                                   int root, int vertex) {
    int n = g.n();
    if (static_cast<int>(tree.size()) != n - 1)
        fail(Err::bad_parameter, "tree must have n-1 edges");
    if (root < 0 || root >= n || vertex < 0 || vertex >= n)
        fail(Err::bad_endpoint, "root or vertex out of range");
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, tree edge index)
    for (size_t i = 0; i < tree.size(); ++i) {
        if (tree[i].is_loop()) fail(Err::bad_parameter, "tree edge is a loop");
        adj[tree[i].u].push_back({tree[i].v, static_cast<int>(i)});
        adj[tree[i].v].push_back({tree[i].u, static_cast<int>(i)});
    }
    // root the tree
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, -1), order;
    depth[root] = 0;
    order.push_back(root);
    for (size_t h = 0; h < order.size(); ++h) {
        int u = order[h];
        for (auto& [w, ei] : adj[u])
            if (depth[w] < 0) {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                parent_edge[w] = ei;
                order.push_back(w);
            }
    }
    for (int v = 0; v < n; ++v)
        if (depth[v] < 0) fail(Err::bad_parameter, "edges do not span the graph");

    // leaf-to-root recursion: delta_w = f_{e(w)} - sum of delta over strict
    // descendants; at the root, iota - sum over all other vertices
    std::vector<mpz_class> iota(n, 0);
    std::vector<std::vector<mpz_class>> f(n, std::vector<mpz_class>(n - 1, 0));
    std::vector<int> by_depth(n);
    std::iota(by_depth.begin(), by_depth.end(), 0);
    std::stable_sort(by_depth.begin(), by_depth.end(),
                     [&](int a, int b) { return depth[a] > depth[b]; });
    std::vector<std::vector<int>> children(n);
    for (int v = 0; v < n; ++v)
        if (parent[v] >= 0) children[parent[v]].push_back(v);
    // strict descendants accumulate bottom-up
    std::vector<std::vector<int>> descendants(n);
    for (int v : by_depth) {
        for (int c : children[v]) {
            descendants[v].push_back(c);
            descendants[v].insert(descendants[v].end(), descendants[c].begin(),
                                  descendants[c].end());
        }
    }
    for (int v : by_depth) {
        if (v == root) {
            iota[v] = 1;
            for (int w = 0; w < n; ++w) {
                if (w == root) continue;
                iota[v] -= iota[w];
                for (int i = 0; i < n - 1; ++i) f[v][i] -= f[w][i];
            }
        } else {
            f[v][parent_edge[v]] = 1;
            for (int w : descendants[v]) {
                iota[v] -= iota[w];
                for (int i = 0; i < n - 1; ++i) f[v][i] -= f[w][i];
            }
        }
    }

    VertexDecomposition out;
    out.root = root;
    out.vertex = vertex;
    out.tree = tree;
    out.iota_coeff = iota[vertex];
    out.f_coeffs = f[vertex];
    return out;
}

}  // namespace magnikit
