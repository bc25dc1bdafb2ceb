#include "homex/connectivity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace homex {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> groups_of(UnionFind& uf, int n) {
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    // members are ascending already; order components by smallest facet
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

// Component count of the m-faces under the relation of sharing an
// (m-1)-face; the definition's skeleton formulation.
std::size_t skeleton_component_count(const SimplicialComplex& x, int m) {
    if (x.empty()) return 0;
    if (m == 0) return 1; // every pair of vertices shares the empty face
    const auto& mfaces = x.faces_of_dim(m);
    UnionFind uf(static_cast<int>(mfaces.size()));
    std::map<Face, int> seen; // (m-1)-subface -> first m-face carrying it
    for (int i = 0; i < static_cast<int>(mfaces.size()); ++i)
        for (std::size_t j = 0; j < mfaces[i].size(); ++j) {
            Face sub = mfaces[i].without_index(j);
            auto [it, inserted] = seen.emplace(sub, i);
            if (!inserted) uf.unite(i, it->second);
        }
    std::set<int> roots;
    for (int i = 0; i < static_cast<int>(mfaces.size()); ++i)
        roots.insert(uf.find(i));
    return roots.size();
}

} // namespace

FacetGraph facet_graph(const SimplicialComplex& x, int m) {
    if (m < 0) throw PreconditionError("facet_graph requires m >= 0");
    FacetGraph g;
    g.m = m;
    g.nodes = x.facets();
    const int n = static_cast<int>(g.nodes.size());
    g.adjacency.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.nodes[i].intersection_size(g.nodes[j]) >=
                static_cast<std::size_t>(m)) {
                g.adjacency[i].push_back(j);
                g.adjacency[j].push_back(i);
            }
    return g;
}

std::vector<std::vector<int>> strong_components(const SimplicialComplex& x,
                                                int m) {
    for (const Face& f : x.facets())
        if (f.dim() < m)
            throw PreconditionError(
                "strong_components requires every facet to have dimension >= m");
    FacetGraph g = facet_graph(x, m);
    const int n = static_cast<int>(g.nodes.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j : g.adjacency[i]) uf.unite(i, j);
    return groups_of(uf, n);
}

bool is_strongly_connected(const SimplicialComplex& x, int m) {
    auto comps = strong_components(x, m);
    bool connected = comps.size() == 1;
    // The two definitions provably agree for complexes whose facets all have
    // dimension >= m; a mismatch here is a bug, not an input problem.
    std::size_t sk_comps = skeleton_component_count(x, m);
    if ((connected && sk_comps != 1) ||
        (!connected && comps.size() != sk_comps))
        throw std::logic_error(
            "strong connectivity: facet-graph and skeleton formulations disagree");
    return connected;
}

GrowthProcess growth_process(const SimplicialComplex& x, int m) {
    auto comps = strong_components(x, m);
    if (comps.size() != 1)
        throw NotStronglyConnectedError(
            "growth_process requires a strongly connected complex (" +
                std::to_string(comps.size()) + " components)",
            comps);

    FacetGraph g = facet_graph(x, m);
    const int n = static_cast<int>(g.nodes.size());
    GrowthProcess gp;
    gp.m = m;
    std::vector<bool> visited(n, false);
    std::vector<int> queue{0};
    visited[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int cur = queue[head];
        gp.order.push_back(g.nodes[cur]);
        for (int nb : g.adjacency[cur])
            if (!visited[nb]) {
                visited[nb] = true;
                queue.push_back(nb);
            }
    }
    return gp;
}

SimplicialComplex apply_expansion(const SimplicialComplex& x,
                                  const ExpansionOp& op, int m) {
    if (op.new_face.dim() < m)
        throw PreconditionError("expansion face must have dimension >= m");
    bool has_attach_face = (m == 0);
    for (const Face& g : op.attach_region.facets()) {
        if (!g.is_subset_of(op.new_face) || g == op.new_face)
            throw PreconditionError(
                "attach region must lie in the boundary of the new face");
        if (!x.contains_face(g))
            throw PreconditionError("attach region is not part of the complex");
        if (g.dim() >= m - 1) has_attach_face = true;
    }
    if (!has_attach_face)
        throw PreconditionError("attach region lacks an (m-1)-face");
    return union_complexes(x, full_simplex(op.new_face)).union_complex;
}

namespace {

using FaceSet = std::set<Face>;

FaceSet closure_of(const SimplicialComplex& x) {
    FaceSet s;
    for (int i = 0; i <= x.dim(); ++i) {
        const auto& fs = x.faces_of_dim(i);
        s.insert(fs.begin(), fs.end());
    }
    return s;
}

int max_dim(const FaceSet& s) {
    int d = -1;
    for (const Face& f : s) d = std::max(d, f.dim());
    return d;
}

// Free pairs (tau, sigma): tau has exactly one superface of dimension
// dim(tau)+1 in the state; that superface is then automatically maximal.
// Only pairs whose facet exceeds the target dimension may be removed.
std::vector<std::pair<Face, Face>> free_pairs(const FaceSet& s, int d) {
    std::map<Face, std::pair<int, Face>> supers;
    for (const Face& f : s)
        for (std::size_t j = 0; j < f.size(); ++j) {
            Face sub = f.without_index(j);
            if (sub.empty()) continue;
            auto [it, inserted] = supers.emplace(sub, std::make_pair(1, f));
            if (!inserted) ++it->second.first;
        }
    std::vector<std::pair<Face, Face>> out;
    for (const auto& [tau, cnt_super] : supers)
        if (cnt_super.first == 1 && cnt_super.second.dim() > d)
            out.emplace_back(tau, cnt_super.second);
    return out; // map iteration is lex order already
}

SimplicialComplex complex_from_state(const FaceSet& s) {
    return from_facets(std::vector<Face>(s.begin(), s.end()));
}

std::vector<int> encode_state(const FaceSet& s) {
    std::vector<int> code;
    for (const Face& f : s) {
        code.push_back(static_cast<int>(f.size()));
        code.insert(code.end(), f.vertices().begin(), f.vertices().end());
    }
    return code;
}

struct CollapseSearch {
    int target;
    long long budget;
    long long explored = 0;
    bool exhausted_fully = true;
    std::set<std::vector<int>> visited;

    // DFS over removal orders; returns the final state on success.
    bool run(FaceSet& state, FaceSet& out) {
        if (max_dim(state) <= target) {
            out = state;
            return true;
        }
        if (explored >= budget) {
            exhausted_fully = false;
            return false;
        }
        ++explored;
        auto pairs = free_pairs(state, target);
        for (const auto& [tau, sigma] : pairs) {
            state.erase(tau);
            state.erase(sigma);
            auto code = encode_state(state);
            if (visited.insert(code).second) {
                if (run(state, out)) return true;
            }
            state.insert(tau);
            state.insert(sigma);
        }
        return false;
    }
};

} // namespace

CollapseResult collapse_to_dimension(const SimplicialComplex& x, int d,
                                     bool exhaustive,
                                     long long state_budget) {
    CollapseResult res;
    FaceSet state = closure_of(x);

    if (!exhaustive) {
        while (max_dim(state) > d) {
            auto pairs = free_pairs(state, d);
            if (pairs.empty()) break;
            state.erase(pairs.front().first);
            state.erase(pairs.front().second);
            ++res.states_explored;
        }
        res.remaining = complex_from_state(state);
        res.status = max_dim(state) <= d ? CollapseStatus::Collapsed
                                         : CollapseStatus::Unknown;
        return res;
    }

    CollapseSearch search{d, state_budget, 0, true, {}};
    FaceSet final_state;
    bool ok = search.run(state, final_state);
    res.states_explored = search.explored;
    if (ok) {
        res.status = CollapseStatus::Collapsed;
        res.remaining = complex_from_state(final_state);
    } else {
        res.status = search.exhausted_fully ? CollapseStatus::NotCollapsible
                                            : CollapseStatus::Unknown;
        res.remaining = x;
    }
    return res;
}

} // namespace homex
