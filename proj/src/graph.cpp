#include "graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "errors.hpp"
#include "nlohmann/json.hpp"

namespace magnikit {

using ordered_json = nlohmann::ordered_json;

void Graph::finalize() {
    if (n_ < 1) fail(Err::bad_parameter, "graph needs at least one vertex");
    for (auto& e : edges_)
        if (e.u < 0 || e.v >= n_)
            fail(Err::bad_endpoint, "edge endpoint out of range");

    adj_.assign(n_, {});
    for (auto& e : edges_) {
        if (e.is_loop()) continue;
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    dist_.assign(n_, std::vector<int>(n_, -1));
    for (int s = 0; s < n_; ++s) {
        auto& d = dist_[s];
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj_[u])
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    q.push(w);
                }
        }
    }
    diameter_ = 0;
    for (auto& row : dist_)
        for (int d : row) {
            if (d < 0) fail(Err::disconnected, "graph is not connected");
            diameter_ = std::max(diameter_, d);
        }
}

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.n_ = n;
    for (auto& [u, v] : edges) g.edges_.push_back(Edge(u, v));
    g.finalize();
    return g;
}

Graph Graph::cycle(int m) {
    if (m < 3) fail(Err::bad_parameter, "cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i) es.push_back({i, (i + 1) % m});
    return build(m, es);
}

Graph Graph::rose(int loops) {
    if (loops < 0) fail(Err::bad_parameter, "negative loop count");
    std::vector<std::pair<int, int>> es(loops, {0, 0});
    return build(1, es);
}

Graph Graph::dumbbell(int m1, int m2, int m3) {
    if (m1 < 0 || m2 < 0 || m3 < 0) fail(Err::bad_parameter, "negative parameter");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m1; ++i) es.push_back({0, 0});
    for (int i = 0; i <= m2; ++i) es.push_back({0, 1});
    for (int i = 0; i < m3; ++i) es.push_back({1, 1});
    return build(2, es);
}

Graph Graph::complete(int n) {
    if (n < 1) fail(Err::bad_parameter, "complete graph needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return build(n, es);
}

Graph Graph::box_product(const Graph& a, const Graph& b) {
    // Cartesian product of the simple underlying graphs; (x,y) -> x*nb + y
    int nb = b.n();
    std::vector<std::pair<int, int>> es;
    for (auto& e : a.simple_edges())
        for (int y = 0; y < nb; ++y) es.push_back({e.u * nb + y, e.v * nb + y});
    for (int x = 0; x < a.n(); ++x)
        for (auto& e : b.simple_edges()) es.push_back({x * nb + e.u, x * nb + e.v});
    return build(a.n() * nb, es);
}

std::vector<Edge> Graph::simple_edges() const {
    std::vector<Edge> out;
    for (auto& e : edges_)
        if (!e.is_loop()) out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Graph Graph::simplified() const {
    std::vector<std::pair<int, int>> es;
    for (auto& e : simple_edges()) es.push_back({e.u, e.v});
    return build(n_, es);
}

int Graph::find_edge(const Edge& e, int occurrence) const {
    int seen = 0;
    for (size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i] == e) {
            if (seen == occurrence) return static_cast<int>(i);
            ++seen;
        }
    return -1;
}

std::vector<int> Graph::contraction_vertex_map(int edge_index) const {
    const Edge& e = edges_.at(edge_index);
    if (e.is_loop()) fail(Err::self_loop_contraction, "cannot contract a self-loop");
    std::vector<int> map(n_);
    for (int w = 0; w < n_; ++w) {
        if (w == e.v)
            map[w] = e.u;
        else if (w > e.v)
            map[w] = w - 1;
        else
            map[w] = w;
    }
    return map;
}

Graph Graph::contract_edge(int edge_index) const {
    if (edge_index < 0 || edge_index >= edge_count())
        fail(Err::edge_not_found, "edge index out of range");
    auto map = contraction_vertex_map(edge_index);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < edge_count(); ++i) {
        if (i == edge_index) continue;
        es.push_back({map[edges_[i].u], map[edges_[i].v]});
    }
    Graph g;
    g.n_ = n_ - 1;
    for (auto& [u, v] : es) g.edges_.push_back(Edge(u, v));
    g.finalize();
    return g;
}

Graph Graph::contract(const Edge& e, int occurrence) const {
    int idx = find_edge(e, occurrence);
    if (idx < 0) fail(Err::edge_not_found, "no such edge");
    return contract_edge(idx);
}

Graph Graph::delete_edge(int edge_index) const {
    if (edge_index < 0 || edge_index >= edge_count())
        fail(Err::edge_not_found, "edge index out of range");
    Graph g;
    g.n_ = n_;
    for (int i = 0; i < edge_count(); ++i)
        if (i != edge_index) g.edges_.push_back(edges_[i]);
    try {
        g.finalize();
    } catch (const MkError& err) {
        if (err.code() == Err::disconnected)
            fail(Err::would_disconnect, "deleting this edge disconnects the graph");
        throw;
    }
    return g;
}

Graph Graph::delete_edge(const Edge& e, int occurrence) const {
    int idx = find_edge(e, occurrence);
    if (idx < 0) fail(Err::edge_not_found, "no such edge");
    return delete_edge(idx);
}

Graph Graph::subdivide(const std::vector<Edge>& edges_to_split,
                       const std::vector<int>& counts) const {
    if (edges_to_split.size() != counts.size())
        fail(Err::arity_mismatch, "edges and counts differ in length");
    std::vector<int> idx;
    for (auto& e : edges_to_split) {
        if (e.is_loop()) fail(Err::self_loop_subdivision, "cannot subdivide a self-loop");
        // occurrence 0 of each named pair; distinct pairs required
        int i = find_edge(e, 0);
        if (i < 0) fail(Err::edge_not_found, "no such edge");
        if (std::find(idx.begin(), idx.end(), i) != idx.end())
            fail(Err::bad_parameter, "edges to split must be distinct");
        idx.push_back(i);
    }
    for (int c : counts)
        if (c < 0) fail(Err::bad_parameter, "negative subdivision count");

    // Insert new path vertices first (labels appended in order of the
    // request), then perform the count-zero contractions.
    std::vector<char> replaced(edge_count(), 0);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < edge_count(); ++i) es.push_back({edges_[i].u, edges_[i].v});
    int next = n_;
    std::vector<int> to_contract;  // indices into es
    for (size_t t = 0; t < idx.size(); ++t) {
        int i = idx[t];
        if (counts[t] == 0) {
            to_contract.push_back(i);
            continue;
        }
        int a = es[i].first, b = es[i].second;
        es[i] = {a, next};
        for (int j = 1; j < counts[t]; ++j) {
            es.push_back({next, next + 1});
            ++next;
        }
        es.push_back({next, b});
        ++next;
    }
    Graph g;
    g.n_ = next;
    for (auto& [u, v] : es) g.edges_.push_back(Edge(u, v));
    g.finalize();
    // contractions, applied in request order; later indices unaffected
    // because contraction only renumbers vertices, and we re-resolve each
    // pending edge through the accumulated vertex maps
    std::sort(to_contract.begin(), to_contract.end());
    std::vector<int> pending = to_contract;
    for (size_t t = 0; t < pending.size(); ++t) {
        g = g.contract_edge(pending[t] - static_cast<int>(t));  // earlier deletions shift indices
    }
    return g;
}

std::vector<std::vector<Edge>> Graph::spanning_trees() const {
    std::vector<Edge> simple = simple_edges();
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> cur;

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

    // lexicographic backtracking over the sorted simple edge list
    auto rec = [&](auto&& self, size_t from, Dsu dsu, int picked) -> void {
        if (picked == n_ - 1) {
            out.push_back(cur);
            return;
        }
        int remaining = n_ - 1 - picked;
        if (static_cast<int>(simple.size() - from) < remaining) return;
        for (size_t i = from; i < simple.size(); ++i) {
            Dsu next = dsu;
            if (!next.unite(simple[i].u, simple[i].v)) continue;
            cur.push_back(simple[i]);
            self(self, i + 1, next, picked + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, Dsu(n_), 0);
    return out;
}

std::string Graph::to_text() const {
    std::ostringstream os;
    os << n_ << ' ' << edges_.size() << '\n';
    for (auto& e : edges_) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Graph Graph::from_text(const std::string& text) {
    std::istringstream is(text);
    int n;
    long long m;
    if (!(is >> n >> m)) fail(Err::parse, "bad graph header");
    std::vector<std::pair<int, int>> es;
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) fail(Err::parse, "truncated edge list");
        es.push_back({u, v});
    }
    return build(n, es);
}

std::string Graph::to_json() const {
    ordered_json j;
    j["n"] = n_;
    auto arr = ordered_json::array();
    for (auto& e : edges_) arr.push_back({e.u, e.v});
    j["edges"] = arr;
    return j.dump();
}

Graph Graph::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail(Err::parse, std::string("bad graph json: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("edges")) fail(Err::parse, "graph json needs n, edges");
    std::vector<std::pair<int, int>> es;
    for (auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) fail(Err::parse, "edge must be a pair");
        es.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return build(j["n"].get<int>(), es);
}

namespace {

// degree signature: (loop count, multiset of incident multiplicities)
std::vector<std::pair<int, int>> degree_signature(const Graph& g) {
    std::vector<int> loops(g.n(), 0), deg(g.n(), 0);
    for (auto& e : g.edges()) {
        if (e.is_loop()) {
            loops[e.u]++;
        } else {
            deg[e.u]++;
            deg[e.v]++;
        }
    }
    std::vector<std::pair<int, int>> sig(g.n());
    for (int v = 0; v < g.n(); ++v) sig[v] = {loops[v], deg[v]};
    return sig;
}

std::map<std::pair<int, int>, int> edge_multiset(const Graph& g) {
    std::map<std::pair<int, int>, int> m;
    for (auto& e : g.edges()) m[{e.u, e.v}]++;
    return m;
}

}  // namespace

std::vector<std::vector<int>> enumerate_isomorphisms(const Graph& a, const Graph& b) {
    std::vector<std::vector<int>> out;
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return out;
    auto sig_a = degree_signature(a), sig_b = degree_signature(b);
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return out;
    }
    auto mult_a = edge_multiset(a), mult_b = edge_multiset(b);

    int n = a.n();
    std::vector<int> perm(n, -1);
    std::vector<char> used(n, 0);

    auto mult_of = [](const std::map<std::pair<int, int>, int>& m, int u, int v) {
        auto it = m.find({std::min(u, v), std::max(u, v)});
        return it == m.end() ? 0 : it->second;
    };

    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(perm);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || sig_a[v] != sig_b[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (mult_of(mult_a, u, v) != mult_of(mult_b, perm[u], w)) ok = false;
            if (mult_of(mult_a, v, v) != mult_of(mult_b, w, w)) ok = false;
            if (!ok) continue;
            perm[v] = w;
            used[w] = 1;
            self(self, v + 1);
            used[w] = 0;
            perm[v] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    auto sig_a = degree_signature(a), sig_b = degree_signature(b);
    std::sort(sig_a.begin(), sig_a.end());
    std::sort(sig_b.begin(), sig_b.end());
    if (sig_a != sig_b) return false;
    return !enumerate_isomorphisms(a, b).empty();
}

namespace {

std::vector<std::pair<int, int>> pair_index(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    return pairs;
}

bool mask_connected(int n, const std::vector<std::pair<int, int>>& pairs, uint32_t mask) {
    std::vector<uint32_t> adj(n, 0);
    for (size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) {
            adj[pairs[i].first] |= 1u << pairs[i].second;
            adj[pairs[i].second] |= 1u << pairs[i].first;
        }
    uint32_t seen = 1, frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

// permutation action tables: for each permutation, where each pair index goes
std::vector<std::vector<int>> pair_permutations(int n,
                                                const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> pidx(n * n, -1);
    for (size_t i = 0; i < pairs.size(); ++i) {
        pidx[pairs[i].first * n + pairs[i].second] = static_cast<int>(i);
        pidx[pairs[i].second * n + pairs[i].first] = static_cast<int>(i);
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> tables;
    do {
        std::vector<int> t(pairs.size());
        for (size_t i = 0; i < pairs.size(); ++i)
            t[i] = pidx[perm[pairs[i].first] * n + perm[pairs[i].second]];
        tables.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tables;
}

uint32_t apply_table(uint32_t mask, const std::vector<int>& t) {
    uint32_t out = 0;
    for (size_t i = 0; i < t.size(); ++i)
        if (mask >> i & 1) out |= 1u << t[i];
    return out;
}

Graph mask_to_graph(int n, const std::vector<std::pair<int, int>>& pairs, uint32_t mask) {
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) es.push_back(pairs[i]);
    return Graph::build(n, es);
}

}  // namespace

const std::vector<Graph>& all_connected_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1 || n > 6) fail(Err::too_large, "connected-graph enumeration capped at 6 vertices");

    auto pairs = pair_index(n);
    auto tables = pair_permutations(n, pairs);
    std::vector<Graph> out;
    uint32_t total = 1u << pairs.size();
    for (uint32_t mask = 0; mask < total; ++mask) {
        if (!mask_connected(n, pairs, mask)) continue;
        bool canonical = true;
        for (auto& t : tables)
            if (apply_table(mask, t) < mask) {
                canonical = false;
                break;
            }
        if (canonical) out.push_back(mask_to_graph(n, pairs, mask));
    }
    return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Graph> all_trees(int n) {
    if (n == 1) return {Graph::build(1, {})};
    if (n > 7) fail(Err::too_large, "tree enumeration capped at 7 vertices");
    auto pairs = pair_index(n);
    auto tables = pair_permutations(n, pairs);
    std::vector<Graph> out;
    // choose n-1 of the pairs; connected + right count == tree
    std::vector<int> comb(n - 1);
    std::iota(comb.begin(), comb.end(), 0);
    int np = static_cast<int>(pairs.size());
    while (true) {
        uint32_t mask = 0;
        for (int c : comb) mask |= 1u << c;
        if (mask_connected(n, pairs, mask)) {
            bool canonical = true;
            for (auto& t : tables)
                if (apply_table(mask, t) < mask) {
                    canonical = false;
                    break;
                }
            if (canonical) out.push_back(mask_to_graph(n, pairs, mask));
        }
        // next combination
        int i = n - 2;
        while (i >= 0 && comb[i] == np - (n - 1) + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < n - 1; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

}  // namespace magnikit
