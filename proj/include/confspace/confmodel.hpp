#ifndef CONFSPACE_CONFMODEL_HPP
#define CONFSPACE_CONFMODEL_HPP

#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphs.hpp"
#include "pdalg.hpp"
#include "tensor.hpp"

namespace confspace {

// The k-point configuration model built on an oriented algebra A of formal
// dimension m: the quotient of A^{(x) k} (x) Lambda(g_e, e in E) with
// deg g_e = m - 1, by
//   - squares          g_e^2 = 0,
//   - the triple rule  g_ij g_jl + g_jl g_li + g_li g_ij = 0,
//   - the slot rule    (pi*_i(a) - pi*_j(a)) g_ij = 0,
// with g_ji = (-1)^m g_ij, and differential d(g_ij) = pi*_ij of the
// diagonal class.
//
// Normal-form monomials: a graph gamma with pairwise distinct smaller
// endpoints (necessarily a forest), generator factors in lexicographic
// order, and algebra content concentrated at the minimum of each connected
// component (units elsewhere).
class ConfModel {
public:
    // (gamma bits, tuple index in A^{(x) k}) -> coefficient
    using Key = std::pair<std::uint64_t, std::size_t>;
    using Elem = std::map<Key, Rational>;

    struct Mono {
        std::uint64_t gamma;
        std::size_t tuple;
    };

    ConfModel(const AlgebraPresentation& A, int k)
        : A_(&A), k_(k), m_(A.formal_dimension), es_(k), tensor_(A, k),
          dd_(dual_basis(A)), delta_(diagonal_class(A, dd_)) {
        auto u = A.unit_index();
        if (!u) throw std::domain_error("algebra has no unit");
        unit_ = *u;
        for (const GraphSubset& g : gamma0_graphs(es_)) {
            gamma0_index_[g.bits()] = gamma0_.size();
            gamma0_.push_back(g.bits());
        }
        build_basis();
        build_complex();
    }

    const AlgebraPresentation& algebra() const { return *A_; }
    int k() const { return k_; }
    int m() const { return m_; }
    const EdgeSet& edge_set() const { return es_; }
    const TensorAlgebra& tensor() const { return tensor_; }
    const DualityData& duality() const { return dd_; }
    const DiagonalClass& diagonal() const { return delta_; }
    std::size_t unit_slot_value() const { return unit_; }
    const std::vector<std::uint64_t>& reduced_graphs() const {
        return gamma0_;
    }

    int mono_degree(const Mono& mo) const {
        return tensor_.degree(mo.tuple) +
               int(GraphSubset(es_, mo.gamma).edge_count()) * (m_ - 1);
    }

    // --- normalization engine ----------------------------------------------

    // A product term as written: algebra tensor factor, then generator
    // factors in the given order (endpoints in either order).
    struct RawTerm {
        Rational c;
        std::size_t tuple;
        std::vector<Edge> gs;
    };

    Elem normalize(std::vector<RawTerm> input) const {
        Elem out;
        std::deque<RawTerm> work(input.begin(), input.end());
        // (-1)^{m-1}: sign for transposing two generator factors
        const int eps = (m_ % 2 == 0) ? -1 : 1;
        while (!work.empty()) {
            RawTerm t = std::move(work.front());
            work.pop_front();
            if (t.c == 0) continue;
            // orient edges small-first; g_ji = (-1)^m g_ij
            bool dead = false;
            for (Edge& e : t.gs) {
                if (e.first == e.second)
                    throw std::domain_error("generator with equal endpoints");
                if (e.first > e.second) {
                    std::swap(e.first, e.second);
                    if (m_ % 2) t.c = -t.c;
                }
            }
            // sort generator factors (insertion sort, eps per transposition)
            for (std::size_t i = 1; i < t.gs.size() && !dead; ++i)
                for (std::size_t j = i; j > 0 && t.gs[j] < t.gs[j - 1]; --j) {
                    std::swap(t.gs[j], t.gs[j - 1]);
                    if (eps < 0) t.c = -t.c;
                }
            for (std::size_t i = 0; i + 1 < t.gs.size(); ++i)
                if (t.gs[i] == t.gs[i + 1]) dead = true; // square
            if (dead) continue;
            // triple rule: a repeated smaller endpoint i gives adjacent
            // factors g_ij g_il (j < l); rewrite
            //   g_ij g_il = g_ij g_jl - g_il g_jl
            // which strictly raises the multiset of smaller endpoints.
            bool rewritten = false;
            for (std::size_t p = 0; p + 1 < t.gs.size(); ++p)
                if (t.gs[p].first == t.gs[p + 1].first) {
                    const int i = t.gs[p].first;
                    const int j = t.gs[p].second, l = t.gs[p + 1].second;
                    RawTerm a = t, b = t;
                    a.gs[p + 1] = {j, l};
                    b.gs[p] = {i, l};
                    b.gs[p + 1] = {j, l};
                    b.c = -b.c;
                    work.push_back(std::move(a));
                    work.push_back(std::move(b));
                    rewritten = true;
                    (void)i;
                    break;
                }
            if (rewritten) continue;
            // gamma is reduced; push algebra content to component minima
            GraphSubset gamma(es_, t.gs);
            std::vector<int> block_min(k_ + 1);
            for (const auto& blk : gamma.components())
                for (int v : blk) block_min[v] = blk[0];
            std::vector<std::pair<std::vector<std::size_t>, Rational>> terms =
                {{tensor_.tuple(t.tuple), t.c}};
            for (int j = 1; j <= k_; ++j) {
                const int u = block_min[j];
                if (u == j) continue;
                std::vector<std::pair<std::vector<std::size_t>, Rational>>
                    next;
                for (auto& [tup, c] : terms) {
                    if (tup[j - 1] == unit_) {
                        next.emplace_back(tup, c);
                        continue;
                    }
                    int sign_exp = 0;
                    for (int i = u + 1; i < j; ++i)
                        sign_exp += A_->degrees[tup[i - 1]];
                    sign_exp *= A_->degrees[tup[j - 1]];
                    const Rational s = (sign_exp % 2) ? -1 : 1;
                    const AlgElem& p = A_->products[tup[u - 1]][tup[j - 1]];
                    for (std::size_t l = 0; l < A_->size(); ++l)
                        if (p[l] != 0) {
                            auto nt = tup;
                            nt[u - 1] = l;
                            nt[j - 1] = unit_;
                            next.emplace_back(std::move(nt), c * s * p[l]);
                        }
                }
                terms = std::move(next);
            }
            for (auto& [tup, c] : terms) {
                Key key{gamma.bits(), tensor_.index(tup)};
                auto [it, fresh] = out.try_emplace(key, c);
                if (!fresh && (it->second += c) == 0) out.erase(it);
            }
        }
        return out;
    }

    // --- constructors of elements ------------------------------------------

    Elem zero() const { return {}; }

    Elem monomial(const Rational& c, const std::vector<std::size_t>& tuple,
                  const std::vector<Edge>& gs) const {
        return normalize({{c, tensor_.index(tuple), gs}});
    }

    Elem unit_elem() const {
        return monomial(1, std::vector<std::size_t>(k_, unit_), {});
    }

    // pi*_i(a): a placed at slot i
    Elem embed(int slot, const AlgElem& a) const {
        std::vector<RawTerm> raw;
        for (std::size_t l = 0; l < A_->size(); ++l)
            if (a[l] != 0) {
                std::vector<std::size_t> t(k_, unit_);
                t[slot - 1] = l;
                raw.push_back({a[l], tensor_.index(t), {}});
            }
        return normalize(std::move(raw));
    }

    Elem generator(const Edge& e) const {
        return monomial(1, std::vector<std::size_t>(k_, unit_), {e});
    }

    static Elem add(Elem a, const Elem& b) {
        for (auto& [key, c] : b) {
            auto [it, fresh] = a.try_emplace(key, c);
            if (!fresh && (it->second += c) == 0) a.erase(it);
        }
        return a;
    }

    static Elem scale(Elem a, const Rational& c) {
        if (c == 0) return {};
        for (auto& [key, v] : a) v *= c;
        return a;
    }

    // --- operations ---------------------------------------------------------

    Elem multiply(const Elem& a, const Elem& b) const {
        std::vector<RawTerm> raw;
        for (auto& [ka, ca] : a) {
            GraphSubset ga(es_, ka.first);
            const int glen = int(ga.edge_count());
            auto ga_edges = ga.edges();
            for (auto& [kb, cb] : b) {
                // move the second algebra factor left past the first
                // generator block
                const int sign_exp =
                    glen * (m_ - 1) * tensor_.degree(kb.second);
                Rational c = ca * cb;
                if (sign_exp % 2) c = -c;
                TensorAlgebra::Elem prod =
                    tensor_.multiply_basis(ka.second, kb.second);
                std::vector<Edge> gs = ga_edges;
                for (const Edge& e : GraphSubset(es_, kb.first).edges())
                    gs.push_back(e);
                for (std::size_t t = 0; t < prod.size(); ++t)
                    if (prod[t] != 0) raw.push_back({c * prod[t], t, gs});
            }
        }
        return normalize(std::move(raw));
    }

    Elem d(const Elem& x) const {
        std::vector<RawTerm> in;
        for (auto& [key, c] : x)
            in.push_back({c, key.second, GraphSubset(es_, key.first).edges()});
        return d_raw(in);
    }

    // Leibniz differential applied to products as written (generator
    // factors in any order and orientation), before normalization.
    Elem d_raw(const std::vector<RawTerm>& input) const {
        std::vector<RawTerm> raw;
        for (const RawTerm& t0 : input) {
            RawTerm t = t0;
            for (Edge& e : t.gs) {
                if (e.first == e.second)
                    throw std::domain_error("generator with equal endpoints");
                if (e.first > e.second) {
                    std::swap(e.first, e.second);
                    if (m_ % 2) t.c = -t.c;
                }
            }
            const Rational c = t.c;
            const auto& gs = t.gs;
            const std::size_t key_tuple = t.tuple;
            const int xdeg = tensor_.degree(key_tuple);
            // Leibniz on the algebra part
            TensorAlgebra::Elem dx = tensor_.d(tensor_.basis(key_tuple));
            for (std::size_t w = 0; w < dx.size(); ++w)
                if (dx[w] != 0) raw.push_back({c * dx[w], w, gs});
            // d(g_ij) = pi*_ij(diagonal); the inserted degree-m algebra
            // factor commutes with the remaining generator factors
            for (std::size_t p = 0; p < gs.size(); ++p) {
                int sign_exp = xdeg + (m_ - 1) * int(p);
                Rational base = (sign_exp % 2) ? -c : c;
                std::vector<Edge> rest;
                for (std::size_t q = 0; q < gs.size(); ++q)
                    if (q != p) rest.push_back(gs[q]);
                const auto [i, j] = gs[p];
                for (std::size_t l = 0; l < A_->size(); ++l)
                    for (std::size_t mu = 0; mu < A_->size(); ++mu) {
                        const Rational dc = delta_.coeffs(l, mu);
                        if (dc == 0) continue;
                        std::vector<std::size_t> ins(k_, unit_);
                        ins[i - 1] = l;
                        ins[j - 1] = mu;
                        TensorAlgebra::Elem prod = tensor_.multiply_basis(
                            key_tuple, tensor_.index(ins));
                        for (std::size_t w = 0; w < prod.size(); ++w)
                            if (prod[w] != 0)
                                raw.push_back(
                                    {base * dc * prod[w], w, rest});
                    }
            }
        }
        return normalize(std::move(raw));
    }

    // The algebra automorphism induced by sigma: slot i content moves to
    // slot sigma(i), g_ij -> g_{sigma(i) sigma(j)}.
    Elem act(const Perm& sigma, const Elem& x) const {
        std::vector<RawTerm> raw;
        for (auto& [key, c] : x) {
            auto tup = tensor_.tuple(key.second);
            std::vector<std::size_t> nt(k_);
            int sign_exp = 0;
            for (int i = 1; i <= k_; ++i) {
                nt[sigma[i - 1] - 1] = tup[i - 1];
                for (int j = i + 1; j <= k_; ++j)
                    if (sigma[i - 1] > sigma[j - 1])
                        sign_exp += A_->degrees[tup[i - 1]] *
                                    A_->degrees[tup[j - 1]];
            }
            std::vector<Edge> gs;
            for (const Edge& e : GraphSubset(es_, key.first).edges())
                gs.push_back({sigma[e.first - 1], sigma[e.second - 1]});
            raw.push_back(
                {(sign_exp % 2) ? -c : c, tensor_.index(nt), gs});
        }
        return normalize(std::move(raw));
    }

    // --- the graded complex -------------------------------------------------

    const ChainComplexQ& complex() const { return complex_; }
    const std::map<int, std::vector<Mono>>& basis_by_degree() const {
        return basis_by_degree_;
    }

    std::size_t basis_position(const Key& key) const {
        return position_.at(key).second;
    }

    std::vector<Rational> coords(const Elem& x, int degree) const {
        std::vector<Rational> v(complex_.dim(degree));
        for (auto& [key, c] : x) {
            auto [deg, idx] = position_.at(key);
            if (deg != degree)
                throw std::domain_error("element not homogeneous of degree " +
                                        std::to_string(degree));
            v[idx] = c;
        }
        return v;
    }

    Elem from_coords(const std::vector<Rational>& v, int degree) const {
        Elem x;
        auto it = basis_by_degree_.find(degree);
        if (it == basis_by_degree_.end()) return x;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) x[{it->second[i].gamma, it->second[i].tuple}] = v[i];
        return x;
    }

    Matrix action_matrix(const Perm& sigma, int degree) const {
        const std::size_t n = complex_.dim(degree);
        Matrix mat(n, n);
        auto it = basis_by_degree_.find(degree);
        if (it == basis_by_degree_.end()) return mat;
        for (std::size_t j = 0; j < n; ++j) {
            Elem img = act(sigma, {{{it->second[j].gamma,
                                     it->second[j].tuple},
                                    Rational(1)}});
            for (auto& [key, c] : img) mat(position_.at(key).second, j) = c;
        }
        return mat;
    }

    // Fixed points of the subgroup generated by the given permutations, as
    // a subcomplex (image of the averaging projector over the generated
    // group).
    ChainComplexQ fixed_subcomplex(const std::vector<Perm>& gens) const {
        std::vector<Perm> group = generated_group(gens);
        std::map<int, Matrix> spans;
        for (auto& [deg, basis] : basis_by_degree_) {
            Matrix p(basis.size(), basis.size());
            for (const Perm& g : group) p = p + action_matrix(g, deg);
            spans[deg] = p * Rational(1, (unsigned long)group.size());
        }
        return restrict_to_span(complex_, spans);
    }

    static std::vector<Perm> generated_group(const std::vector<Perm>& gens) {
        if (gens.empty()) throw std::domain_error("no generators");
        std::vector<Perm> group = {identity_perm(int(gens[0].size()))};
        for (bool grew = true; grew;) {
            grew = false;
            for (std::size_t i = 0; i < group.size(); ++i)
                for (const Perm& g : gens) {
                    Perm h = compose(g, group[i]);
                    if (std::find(group.begin(), group.end(), h) ==
                        group.end()) {
                        group.push_back(h);
                        grew = true;
                    }
                }
        }
        return group;
    }

    // Decreasing filtration by the number of generator factors:
    // F^p = span of monomials with at most (max - p) factors.
    Filtration glength_filtration() const {
        int maxg = 0;
        for (std::uint64_t g : gamma0_)
            maxg = std::max(maxg, __builtin_popcountll(g));
        Filtration f;
        f.levels.resize(maxg + 1);
        for (int p = 0; p <= maxg; ++p) {
            for (auto& [deg, basis] : basis_by_degree_) {
                std::vector<std::size_t> cols;
                for (std::size_t i = 0; i < basis.size(); ++i)
                    if (__builtin_popcountll(basis[i].gamma) <= maxg - p)
                        cols.push_back(i);
                if (cols.empty()) continue;
                Matrix s(basis.size(), cols.size());
                for (std::size_t j = 0; j < cols.size(); ++j)
                    s(cols[j], j) = 1;
                f.levels[p][deg] = std::move(s);
            }
        }
        return f;
    }

    // --- printing -----------------------------------------------------------

    std::string mono_string(const Key& key) const {
        std::ostringstream os;
        auto tup = tensor_.tuple(key.second);
        for (int i = 0; i < k_; ++i) {
            if (i) os << "|";
            os << A_->labels[tup[i]];
        }
        for (const Edge& e : GraphSubset(es_, key.first).edges())
            os << " g" << e.first << e.second;
        return os.str();
    }

    std::string elem_string(const Elem& x) const {
        if (x.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [key, c] : x) {
            if (!first) os << " + ";
            first = false;
            if (c != 1) os << rational_str(c) << "*";
            os << "(" << mono_string(key) << ")";
        }
        return os.str();
    }

private:
    void build_basis() {
        for (std::uint64_t bits : gamma0_) {
            GraphSubset gamma(es_, bits);
            std::vector<int> is_min(k_ + 1, 0);
            for (const auto& blk : gamma.components()) is_min[blk[0]] = 1;
            std::vector<std::vector<std::size_t>> tuples = {{}};
            for (int i = 1; i <= k_; ++i) {
                std::vector<std::vector<std::size_t>> next;
                for (auto& t : tuples) {
                    if (is_min[i]) {
                        for (std::size_t l = 0; l < A_->size(); ++l) {
                            auto nt = t;
                            nt.push_back(l);
                            next.push_back(std::move(nt));
                        }
                    } else {
                        auto nt = t;
                        nt.push_back(unit_);
                        next.push_back(std::move(nt));
                    }
                }
                tuples = std::move(next);
            }
            for (auto& t : tuples) {
                Mono mo{bits, tensor_.index(t)};
                const int deg = mono_degree(mo);
                position_[{mo.gamma, mo.tuple}] = {
                    deg, basis_by_degree_[deg].size()};
                basis_by_degree_[deg].push_back(mo);
            }
        }
    }

    void build_complex() {
        for (auto& [deg, basis] : basis_by_degree_)
            complex_.set_dim(deg, basis.size());
        for (auto& [deg, basis] : basis_by_degree_) {
            Matrix dmat(complex_.dim(deg + 1), basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j) {
                Elem img =
                    d({{{basis[j].gamma, basis[j].tuple}, Rational(1)}});
                for (auto& [key, c] : img) {
                    auto [dd, idx] = position_.at(key);
                    if (dd != deg + 1)
                        throw std::domain_error("differential not degree +1");
                    dmat(idx, j) = c;
                }
            }
            complex_.set_diff(deg, std::move(dmat));
        }
    }

    const AlgebraPresentation* A_;
    int k_, m_;
    EdgeSet es_;
    TensorAlgebra tensor_;
    DualityData dd_;
    DiagonalClass delta_;
    std::size_t unit_ = 0;
    std::vector<std::uint64_t> gamma0_;
    std::map<std::uint64_t, std::size_t> gamma0_index_;
    std::map<int, std::vector<Mono>> basis_by_degree_;
    std::map<Key, std::pair<int, std::size_t>> position_;
    ChainComplexQ complex_;
};

// Machine check that the defining relations hold in normal form and that
// the relation ideal is closed under the differential: for each triple
// relation, slot relation, and generator square, both the relation itself
// and its Leibniz derivative normalize to zero.
inline std::vector<AxiomCheck> differential_ideal_checks(const ConfModel& M) {
    std::vector<AxiomCheck> out;
    const int k = M.k();
    const auto& A = M.algebra();
    const std::size_t u = M.unit_slot_value();
    auto unit_tuple = [&] { return std::vector<std::size_t>(std::size_t(k), u); };
    auto tuple_index = [&](const std::vector<std::size_t>& t) {
        return M.tensor().index(t);
    };
    auto run = [&](const std::string& name,
                   const std::vector<ConfModel::RawTerm>& rel) {
        if (!M.normalize(rel).empty()) {
            out.push_back({name, false, "relation nonzero in normal form"});
            return;
        }
        if (!M.d_raw(rel).empty()) {
            out.push_back({name, false, "derivative not in the ideal"});
            return;
        }
        out.push_back({name, true, ""});
    };
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            for (int l = j + 1; l <= k; ++l)
                run("triple relation (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(l) + ")",
                    {{1, tuple_index(unit_tuple()), {{i, j}, {j, l}}},
                     {1, tuple_index(unit_tuple()), {{j, l}, {l, i}}},
                     {1, tuple_index(unit_tuple()), {{l, i}, {i, j}}}});
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            for (std::size_t a = 0; a < A.size(); ++a) {
                auto ti = unit_tuple(), tj = unit_tuple();
                ti[i - 1] = a;
                tj[j - 1] = a;
                run("slot relation a=" + A.labels[a] + " edge (" +
                        std::to_string(i) + "," + std::to_string(j) + ")",
                    {{1, tuple_index(ti), {{i, j}}},
                     {-1, tuple_index(tj), {{i, j}}}});
            }
            run("square (" + std::to_string(i) + "," + std::to_string(j) + ")",
                {{1, tuple_index(unit_tuple()), {{i, j}, {i, j}}}});
        }
    return out;
}

// Randomized cross-checks of the rewriting engine: on random monomials
// a, b, c it verifies associativity, graded commutativity, and the Leibniz
// rule, i.e. that normal forms do not depend on evaluation order.
inline AxiomCheck confluence_check(const ConfModel& M, unsigned long seed,
                                   int trials) {
    std::mt19937_64 rng(seed);
    const int k = M.k();
    const auto& A = M.algebra();
    auto rand_mono = [&]() -> std::pair<ConfModel::Elem, int> {
        std::vector<std::size_t> tup(static_cast<std::size_t>(k), 0);
        for (auto& t : tup) t = rng() % A.size();
        std::vector<Edge> gs;
        const int ng = int(rng() % 3);
        for (int q = 0; q < ng; ++q) {
            int i = 1 + int(rng() % std::size_t(k));
            int j = 1 + int(rng() % std::size_t(k));
            if (i == j) continue;
            gs.push_back({i, j}); // either orientation on purpose
        }
        int deg = int(gs.size()) * (M.m() - 1);
        for (auto t : tup) deg += A.degrees[t];
        ConfModel::Elem e = M.normalize({{Rational(1 + int(rng() % 3)),
                                          M.tensor().index(tup), gs}});
        return {e, deg};
    };
    for (int t = 0; t < trials; ++t) {
        auto [a, da] = rand_mono();
        auto [b, db] = rand_mono();
        auto [c, dc] = rand_mono();
        (void)dc;
        ConfModel::Elem ab = M.multiply(a, b);
        if (M.multiply(ab, c) != M.multiply(a, M.multiply(b, c)))
            return {"normal form order independence", false,
                    "associativity failed at trial " + std::to_string(t)};
        ConfModel::Elem ba = M.multiply(b, a);
        if ((da * db) % 2) ba = ConfModel::scale(std::move(ba), -1);
        if (ab != ba)
            return {"normal form order independence", false,
                    "graded commutativity failed at trial " +
                        std::to_string(t)};
        ConfModel::Elem leib = M.multiply(M.d(a), b);
        ConfModel::Elem adb = M.multiply(a, M.d(b));
        if (da % 2) adb = ConfModel::scale(std::move(adb), -1);
        leib = ConfModel::add(std::move(leib), adb);
        if (M.d(ab) != leib)
            return {"normal form order independence", false,
                    "Leibniz rule failed at trial " + std::to_string(t)};
    }
    return {"normal form order independence (" + std::to_string(trials) +
                " random triples)",
            true, ""};
}

// Dimension, per degree, of the invariant part of the homology of the
// model under the subgroup generated by gens, via averaged traces on
// cocycles and coboundaries (both are stable under the action).
inline std::map<int, std::size_t> invariant_homology_dims(
    const ConfModel& M, const std::vector<Perm>& gens) {
    std::vector<Perm> group = ConfModel::generated_group(gens);
    const ChainComplexQ& c = M.complex();
    auto trace_on = [&](const Matrix& sigma, const Matrix& u) {
        // trace of sigma restricted to the column span of u
        Matrix basis = column_space(u);
        Rational tr = 0;
        for (std::size_t j = 0; j < basis.cols(); ++j) {
            std::vector<Rational> col(basis.rows()), x;
            for (std::size_t i = 0; i < basis.rows(); ++i)
                col[i] = basis(i, j);
            if (!solve(basis, sigma.apply(col), x))
                throw std::domain_error("subspace not invariant");
            tr += x[j];
        }
        return tr;
    };
    std::map<int, std::size_t> out;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        if (c.dim(n) == 0) continue;
        Rational sum = 0;
        for (const Perm& g : group) {
            Matrix sigma = M.action_matrix(g, n);
            sum += trace_on(sigma, kernel(c.diff(n)));
            if (c.dim(n - 1))
                sum -= trace_on(sigma, c.diff(n - 1));
        }
        sum /= (unsigned long)group.size();
        if (sum.get_den() != 1 || sum < 0)
            throw std::domain_error("averaged trace is not a dimension");
        const std::size_t d = sum.get_num().get_ui();
        if (d) out[n] = d;
    }
    return out;
}

} // namespace confspace

#endif
