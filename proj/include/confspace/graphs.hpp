#ifndef CONFSPACE_GRAPHS_HPP
#define CONFSPACE_GRAPHS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace confspace {

// An edge (i,j) with 1 <= i < j <= k.
using Edge = std::pair<int, int>;

// A permutation of {1..k}, stored 0-based: perm[i-1] = sigma(i).
using Perm = std::vector<int>;

inline Perm identity_perm(int k) {
    Perm p(k);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

inline Perm compose(const Perm& a, const Perm& b) { // (a*b)(i) = a(b(i))
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i] - 1];
    return r;
}

inline Perm inverse_perm(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i] - 1] = int(i) + 1;
    return r;
}

inline int perm_sign(const Perm& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

inline std::vector<Perm> all_perms(int k) {
    Perm p = identity_perm(k);
    std::vector<Perm> r;
    do r.push_back(p); while (std::next_permutation(p.begin(), p.end()));
    return r;
}

// Signature of a bijection between two linearly ordered finite sets,
// given as the list of images of the source elements taken in source
// order; the sets themselves are ordered by operator<.
template <typename T>
int bijection_signature(const std::vector<T>& images) {
    std::vector<std::size_t> order(images.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return images[a] < images[b];
    });
    // order is the permutation sorting the images; its sign equals the
    // sign of the bijection.
    int s = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (order[i] > order[j]) s = -s;
    return s;
}

// The edge set E = {(i,j) : 1 <= i < j <= k} in left lexicographic order.
class EdgeSet {
public:
    explicit EdgeSet(int k) : k_(k) {
        if (k < 1) throw std::domain_error("k must be >= 1");
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) edges_.push_back({i, j});
    }

    int k() const { return k_; }
    std::size_t size() const { return edges_.size(); }
    const Edge& edge(std::size_t idx) const { return edges_[idx]; }

    std::size_t index_of(const Edge& e) const {
        // lex position of (i,j): edges before row i, then offset in row.
        const int i = e.first, j = e.second;
        if (!(1 <= i && i < j && j <= k_))
            throw std::domain_error("edge out of range");
        std::size_t idx = 0;
        for (int r = 1; r < i; ++r) idx += std::size_t(k_ - r);
        return idx + std::size_t(j - i - 1);
    }

    // sigma applied to an edge, reordered so the smaller endpoint is first.
    Edge apply(const Perm& sigma, const Edge& e) const {
        int a = sigma[e.first - 1], b = sigma[e.second - 1];
        if (a > b) std::swap(a, b);
        return {a, b};
    }

private:
    int k_;
    std::vector<Edge> edges_;
};

// A subset gamma of E as a bitset over the lex order.
class GraphSubset {
public:
    GraphSubset(const EdgeSet& es, std::uint64_t bits) : es_(&es), bits_(bits) {}
    GraphSubset(const EdgeSet& es, const std::vector<Edge>& edges)
        : es_(&es), bits_(0) {
        for (const Edge& e : edges) bits_ |= std::uint64_t(1) << es.index_of(e);
    }

    const EdgeSet& edge_set() const { return *es_; }
    std::uint64_t bits() const { return bits_; }
    int k() const { return es_->k(); }

    bool contains(const Edge& e) const {
        return bits_ >> es_->index_of(e) & 1;
    }
    std::size_t edge_count() const {
        return std::size_t(__builtin_popcountll(bits_));
    }
    bool empty() const { return bits_ == 0; }

    std::vector<Edge> edges() const { // lex order
        std::vector<Edge> r;
        for (std::size_t i = 0; i < es_->size(); ++i)
            if (bits_ >> i & 1) r.push_back(es_->edge(i));
        return r;
    }

    GraphSubset without(const Edge& e) const {
        return GraphSubset(*es_, bits_ & ~(std::uint64_t(1) << es_->index_of(e)));
    }
    GraphSubset with(const Edge& e) const {
        return GraphSubset(*es_, bits_ | std::uint64_t(1) << es_->index_of(e));
    }

    // 1-based position of e in gamma under the order inherited from E.
    int pos(const Edge& e) const {
        if (!contains(e)) throw std::domain_error("pos: edge not in graph");
        const std::size_t idx = es_->index_of(e);
        std::uint64_t below = bits_ & ((std::uint64_t(1) << idx) - 1);
        return __builtin_popcountll(below) + 1;
    }

    // Connected components as blocks of {1..k}, ordered by minimum element;
    // each block sorted increasingly.
    std::vector<std::vector<int>> components() const {
        const int k = es_->k();
        std::vector<int> parent(k + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const Edge& e : edges()) {
            int a = find(e.first), b = find(e.second);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
        std::vector<std::vector<int>> blocks;
        std::vector<int> root_block(k + 1, -1);
        for (int v = 1; v <= k; ++v) {
            int r = find(v);
            if (root_block[r] < 0) {
                root_block[r] = int(blocks.size());
                blocks.emplace_back();
            }
            blocks[root_block[r]].push_back(v);
        }
        // blocks already come out ordered by their minimum (= root).
        return blocks;
    }

    // ||gamma|| = number of path components.
    int component_count() const { return int(components().size()); }

    // gamma is redundant iff it contains a cycle.
    bool is_redundant() const {
        return component_count() != k() - int(edge_count());
    }

    // Gamma_0: all smaller endpoints pairwise distinct.
    bool in_gamma0() const {
        std::uint64_t seen = 0;
        for (const Edge& e : edges()) {
            if (seen >> e.first & 1) return false;
            seen |= std::uint64_t(1) << e.first;
        }
        return true;
    }

    GraphSubset act(const Perm& sigma) const {
        GraphSubset r(*es_, std::uint64_t(0));
        for (const Edge& e : edges()) r = r.with(es_->apply(sigma, e));
        return r;
    }

    bool operator==(const GraphSubset& o) const { return bits_ == o.bits_; }
    bool operator<(const GraphSubset& o) const { return bits_ < o.bits_; }

private:
    const EdgeSet* es_;
    std::uint64_t bits_;
};

// sgn(sigma : gamma): signature of the edge relabeling bijection
// gamma -> sigma.gamma, both ordered lexicographically.
inline int sgn_on_graph(const Perm& sigma, const GraphSubset& gamma) {
    std::vector<Edge> images;
    for (const Edge& e : gamma.edges())
        images.push_back(gamma.edge_set().apply(sigma, e));
    return bijection_signature(images);
}

// sgn(sigma : pi_0(gamma)): signature of the induced bijection on
// components, both sides ordered by block minima.
inline int sgn_on_components(const Perm& sigma, const GraphSubset& gamma) {
    std::vector<int> images; // min of the image block, in source block order
    for (const auto& block : gamma.components()) {
        int mn = gamma.k() + 1;
        for (int v : block) mn = std::min(mn, sigma[v - 1]);
        images.push_back(mn);
    }
    return bijection_signature(images);
}

inline std::vector<GraphSubset> all_subsets(const EdgeSet& es) {
    std::vector<GraphSubset> r;
    const std::uint64_t n = std::uint64_t(1) << es.size();
    r.reserve(n);
    for (std::uint64_t b = 0; b < n; ++b) r.emplace_back(es, b);
    return r;
}

inline std::vector<GraphSubset> gamma0_graphs(const EdgeSet& es) {
    std::vector<GraphSubset> r;
    for (const GraphSubset& g : all_subsets(es))
        if (g.in_gamma0()) r.push_back(g);
    return r;
}

} // namespace confspace

#endif
