#include "ftc/decoder.hpp"

#include <algorithm>
#include <numeric>

#include "ftc/rng.hpp"

namespace ftc::sim {

DecodeGraph DecodeGraph::build(const syn::SyndromeGraph& g,
                               const std::vector<syn::LogicalMembrane>& membranes) {
    DecodeGraph d;
    d.num_checks = g.num_checks;
    d.num_edges = g.edges.size();
    d.ev.resize(d.num_edges);
    std::vector<std::uint32_t> deg(d.num_checks, 0);
    for (std::uint32_t e = 0; e < d.num_edges; ++e) {
        d.ev[e] = {g.edges[e].a, g.edges[e].b};
        if (g.edges[e].a == g.edges[e].b) continue;
        deg[g.edges[e].a]++;
        deg[g.edges[e].b]++;
    }
    d.adj_off.assign(d.num_checks + 1, 0);
    for (std::size_t v = 0; v < d.num_checks; ++v) d.adj_off[v + 1] = d.adj_off[v] + deg[v];
    d.adj_edge.resize(d.adj_off.back());
    d.adj_to.resize(d.adj_off.back());
    std::vector<std::uint32_t> fill(d.num_checks, 0);
    for (std::uint32_t e = 0; e < d.num_edges; ++e) {
        auto [a, b] = d.ev[e];
        if (a == b) continue;
        d.adj_edge[d.adj_off[a] + fill[a]] = e;
        d.adj_to[d.adj_off[a] + fill[a]++] = b;
        d.adj_edge[d.adj_off[b] + fill[b]] = e;
        d.adj_to[d.adj_off[b] + fill[b]++] = a;
    }
    for (const auto& m : membranes) {
        BitVec mask(d.num_edges);
        for (auto e : m.edges) {
            if (d.ev[e][0] == d.ev[e][1])
                throw std::logic_error("membrane contains a self-loop syndrome edge");
            mask.set(e);
        }
        d.membranes.push_back(std::move(mask));
    }
    return d;
}

SyndromeSample sample(const DecodeGraph& g, const ErrorModel& model, std::uint64_t trial_seed) {
    SplitMix64 rng(trial_seed);
    SyndromeSample s;
    s.erased = BitVec(g.num_edges);
    s.flipped = BitVec(g.num_edges);
    for (std::uint32_t e = 0; e < g.num_edges; ++e) {
        bool flip = false;
        if (model.p_erasure > 0 && rng.u01() < model.p_erasure) {
            s.erased.set(e);
            flip = rng.u01() < 0.5;
        }
        if (model.p_flip > 0 && rng.u01() < model.p_flip) flip = !flip;
        if (flip) s.flipped.set(e);
    }
    s.lit = boundary_of(g, s.flipped);
    return s;
}

std::vector<char> boundary_of(const DecodeGraph& g, const BitVec& edges) {
    std::vector<char> lit(g.num_checks, 0);
    for (std::uint32_t e = 0; e < g.num_edges; ++e) {
        if (!edges.get(e)) continue;
        auto [a, b] = g.ev[e];
        if (a == b) continue;
        lit[a] ^= 1;
        lit[b] ^= 1;
    }
    return lit;
}

std::array<int, 3> membrane_parities(const DecodeGraph& g, const BitVec& residual) {
    std::array<int, 3> p{0, 0, 0};
    for (std::size_t i = 0; i < g.membranes.size() && i < 3; ++i)
        p[i] = BitVec::overlap_parity(residual, g.membranes[i]) ? 1 : 0;
    return p;
}

namespace {

// Leaf peeling of a forest: forest edges are (parent, child, edge id) in
// BFS discovery order; processing them in reverse clears the syndrome
// towards the roots.
BitVec peel_forest(const DecodeGraph& g,
                   const std::vector<std::array<std::uint32_t, 3>>& tree_edges,
                   std::vector<char>& lit) {
    BitVec corr(g.num_edges);
    for (auto it = tree_edges.rbegin(); it != tree_edges.rend(); ++it) {
        auto [parent, child, e] = *it;
        if (lit[child]) {
            corr.set(e);
            lit[child] = 0;
            lit[parent] ^= 1;
        }
    }
    return corr;
}

}  // namespace

BitVec peel_decode(const DecodeGraph& g, const SyndromeSample& s) {
    // pure-erasure precondition
    for (std::size_t w = 0; w < s.flipped.num_words(); ++w) {
        if (s.flipped.data()[w] & ~s.erased.data()[w])
            throw UnsatisfiableSyndrome("peel_decode requires flips within the erasure");
    }

    std::vector<char> lit(s.lit);
    std::vector<char> seen(g.num_checks, 0);
    std::vector<std::array<std::uint32_t, 3>> tree_edges;
    std::vector<std::uint32_t> queue;
    for (std::uint32_t root = 0; root < g.num_checks; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        queue.clear();
        queue.push_back(root);
        std::size_t head = 0;
        while (head < queue.size()) {
            std::uint32_t u = queue[head++];
            for (std::uint32_t k = g.adj_off[u]; k < g.adj_off[u + 1]; ++k) {
                std::uint32_t e = g.adj_edge[k];
                if (!s.erased.get(e)) continue;
                std::uint32_t v = g.adj_to[k];
                if (seen[v]) continue;
                seen[v] = 1;
                tree_edges.push_back({u, v, e});
                queue.push_back(v);
            }
        }
    }
    BitVec corr = peel_forest(g, tree_edges, lit);
    for (std::size_t v = 0; v < g.num_checks; ++v)
        if (lit[v])
            throw UnsatisfiableSyndrome("lit check outside the erased subgraph (check " +
                                        std::to_string(v) + ")");
    return corr;
}

BitVec uf_decode(const DecodeGraph& g, const SyndromeSample& s) {
    const std::size_t nv = g.num_checks;
    const std::size_t ne = g.num_edges;

    std::vector<std::uint32_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0u);
    std::vector<std::uint32_t> csize(nv, 1);
    std::vector<char> parity(s.lit);

    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (csize[a] < csize[b]) std::swap(a, b);
        parent[b] = a;
        csize[a] += csize[b];
        parity[a] ^= parity[b];
    };

    // Erased edges join clusters at zero cost.
    std::vector<std::uint8_t> support(ne, 0);
    for (std::uint32_t e = 0; e < ne; ++e) {
        auto [a, b] = g.ev[e];
        if (a == b) continue;
        if (s.erased.get(e)) {
            support[e] = 2;
            unite(a, b);
        }
    }

    // Grow all odd clusters by one half-edge per round until none are odd.
    bool any_odd = true;
    while (any_odd) {
        any_odd = false;
        for (std::uint32_t v = 0; v < nv; ++v)
            if (find(v) == v && parity[v]) {
                any_odd = true;
                break;
            }
        if (!any_odd) break;

        std::vector<std::uint32_t> grown;
        for (std::uint32_t e = 0; e < ne; ++e) {
            if (support[e] >= 2) continue;
            auto [a, b] = g.ev[e];
            if (a == b) continue;
            std::uint32_t ra = find(a), rb = find(b);
            if (ra == rb) continue;
            int inc = (parity[ra] ? 1 : 0) + (parity[rb] ? 1 : 0);
            if (inc == 0) continue;
            support[e] = static_cast<std::uint8_t>(std::min(2, support[e] + inc));
            if (support[e] >= 2) grown.push_back(e);
        }
        for (auto e : grown) unite(g.ev[e][0], g.ev[e][1]);
    }

    // Peel inside the grown subgraph, per cluster.
    std::vector<char> lit(s.lit);
    std::vector<char> seen(nv, 0);
    std::vector<std::array<std::uint32_t, 3>> tree_edges;
    std::vector<std::uint32_t> queue;
    for (std::uint32_t root = 0; root < nv; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        queue.clear();
        queue.push_back(root);
        std::size_t head = 0;
        while (head < queue.size()) {
            std::uint32_t u = queue[head++];
            for (std::uint32_t k = g.adj_off[u]; k < g.adj_off[u + 1]; ++k) {
                std::uint32_t e = g.adj_edge[k];
                if (support[e] < 2) continue;
                std::uint32_t v = g.adj_to[k];
                if (seen[v]) continue;
                seen[v] = 1;
                tree_edges.push_back({u, v, e});
                queue.push_back(v);
            }
        }
    }
    BitVec corr = peel_forest(g, tree_edges, lit);
    for (std::size_t v = 0; v < nv; ++v)
        if (lit[v]) throw UnsatisfiableSyndrome("union-find left an unsatisfied check");
    return corr;
}

}  // namespace ftc::sim
