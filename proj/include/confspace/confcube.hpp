#ifndef CONFSPACE_CONFCUBE_HPP
#define CONFSPACE_CONFCUBE_HPP

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "confmodel.hpp"
#include "dgcube.hpp"
#include "graphs.hpp"
#include "tensor.hpp"

namespace confspace {

namespace detail {

// Restrict a degree-0 map given over tuple bases to its per-degree blocks.
inline std::map<int, Matrix> graded_pieces(const Matrix& full,
                                           const TensorAlgebra::Graded& src,
                                           const TensorAlgebra::Graded& dst) {
    std::map<int, Matrix> out;
    for (auto& [deg, sb] : src.basis_by_degree) {
        auto it = dst.basis_by_degree.find(deg);
        const std::size_t rows =
            it == dst.basis_by_degree.end() ? 0 : it->second.size();
        Matrix p(rows, sb.size());
        for (std::size_t j = 0; j < sb.size(); ++j)
            for (std::size_t ti = 0; ti < full.rows(); ++ti) {
                if (full(ti, sb[j]) == 0) continue;
                auto [tdeg, tpos] = dst.position[ti];
                if (tdeg != deg)
                    throw std::domain_error("map does not preserve degree");
                p(tpos, j) = full(ti, sb[j]);
            }
        out[deg] = std::move(p);
    }
    return out;
}

} // namespace detail

// The cube of dual tensor powers gamma |-> #(A^{(x) ||gamma||}) over the
// edge set of the complete graph on k vertices, with its structure maps
// (duals of block merges), orientation-twisted symmetric group action,
// sign tables, and the comparison map into the configuration model.
class ConfCube {
public:
    explicit ConfCube(const ConfModel& M)
        : M_(&M), k_(M.k()), m_(M.m()), mk_(M.m() * M.k()),
          es_(&M.edge_set()), ne_(int(M.edge_set().size())),
          cube_(int(M.edge_set().size())) {
        const AlgebraPresentation& A = M.algebra();
        tensors_.reserve(k_ + 1);
        gradeds_.resize(k_ + 1);
        duals_.resize(k_ + 1);
        for (int r = 0; r <= k_; ++r) tensors_.emplace_back(A, r);
        for (int r = 1; r <= k_; ++r) {
            gradeds_[r] = tensors_[r].graded();
            duals_[r] = dualize(gradeds_[r].complex);
        }
        auto top = A.basis_of_degree(m_);
        if (top.size() != 1)
            throw std::domain_error(
                "top degree is not one-dimensional; no counit available");
        top_ = top[0];
        top_coeff_ = M.duality().fundamental_class[top_];
        if (top_coeff_ == 0)
            throw std::domain_error("degenerate fundamental class");
        build_cube();
        tc_ = total_cofibre(cube_);
        shifted_ = suspend(tc_.complex, -mk_);
        if (shifted_.min_degree() < 0 || shifted_.max_degree() > mk_)
            throw std::domain_error("shifted total cofibre out of range");
        build_theta();
        build_sign_tables();
        build_phi();
    }

    const ConfModel& model() const { return *M_; }
    const CubicalDiagram& cube() const { return cube_; }
    const TotalCofibre& totcof() const { return tc_; }
    const ChainComplexQ& shifted() const { return shifted_; }
    const ChainMap& comparison() const { return phi_; }
    const TensorAlgebra& tensor_power(int r) const { return tensors_[r]; }
    const TensorAlgebra::Graded& graded_power(int r) const {
        return gradeds_[r];
    }

    int ncomp(std::uint64_t mask) const {
        return GraphSubset(*es_, mask).component_count();
    }

    // counit of A^{(x) r}: dual-degree -rm functional sending the r-fold
    // fundamental class to 1; coordinates over the top tuple basis
    std::vector<Rational> eps_coords(int r) const {
        const auto& basis = gradeds_[r].basis_by_degree.at(r * m_);
        std::vector<Rational> v(basis.size());
        std::vector<std::size_t> t(std::size_t(r), top_);
        Rational c = 1;
        for (int i = 0; i < r; ++i) c *= top_coeff_;
        v[gradeds_[r].position[tensors_[r].index(t)].second] = 1 / c;
        return v;
    }

    // b |-> b . eps_r from (A^{(x) r})^q to the dual in degree q - rm
    const Matrix& theta(int r, int q) const { return theta_[r].at(q); }
    const Matrix& theta_inv(int r, int q) const { return theta_inv_[r].at(q); }

    int nu(std::uint64_t mask, const Edge& e) const {
        return nu_.at({mask, es_->index_of(e)});
    }
    int lambda(std::uint64_t mask) const { return lambda_.at(mask); }

    // The diagonal inserted at the two blocks of submask joined by e, as
    // an element of A^{(x) ||submask||}.
    TensorAlgebra::Elem delta_at(std::uint64_t submask, const Edge& e) const {
        GraphSubset sub(*es_, submask);
        auto blocks = sub.components();
        const int r1 = int(blocks.size());
        std::vector<int> block_of(k_ + 1);
        for (int b = 0; b < r1; ++b)
            for (int v : blocks[b]) block_of[v] = b;
        const int bi = block_of[e.first], bj = block_of[e.second];
        if (bi == bj)
            throw std::domain_error("edge endpoints in the same block");
        const TensorAlgebra& T = tensors_[r1];
        const AlgebraPresentation& A = M_->algebra();
        TensorAlgebra::Elem w = T.zero();
        const Matrix& D = M_->diagonal().coeffs;
        for (std::size_t l = 0; l < A.size(); ++l)
            for (std::size_t mu = 0; mu < A.size(); ++mu) {
                if (D(l, mu) == 0) continue;
                std::vector<std::size_t> t1(std::size_t(r1),
                                            M_->unit_slot_value());
                t1[bi] = l;
                std::vector<std::size_t> t2(std::size_t(r1),
                                            M_->unit_slot_value());
                t2[bj] = mu;
                TensorAlgebra::Elem p =
                    T.multiply_basis(T.index(t1), T.index(t2));
                for (std::size_t x = 0; x < p.size(); ++x)
                    if (p[x] != 0) w[x] += D(l, mu) * p[x];
            }
        return w;
    }

    // Orientation-twisted action of sigma on the whole cube.
    CubeAction make_action(const Perm& sigma) const {
        CubeAction act;
        std::vector<int> eperm(ne_);
        for (int ei = 0; ei < ne_; ++ei)
            eperm[ei] = int(es_->index_of(es_->apply(sigma, es_->edge(ei))));
        act.perms.push_back(eperm);
        act.mats.emplace_back(cube_.subsets());
        const int rho = (m_ % 2) ? perm_sign(sigma) : 1;
        const Perm inv = inverse_perm(sigma);
        for (std::uint64_t mask = 0; mask < cube_.subsets(); ++mask) {
            const std::uint64_t img = GraphSubset(*es_, mask).act(sigma).bits();
            const int r = ncomp(mask);
            // factor permutation A^{(x) r} over img-blocks -> gamma-blocks
            // induced by sigma^{-1}
            auto src_blocks = GraphSubset(*es_, img).components();
            auto dst_blocks = GraphSubset(*es_, mask).components();
            std::vector<int> block_of(k_ + 1);
            for (int b = 0; b < int(dst_blocks.size()); ++b)
                for (int v : dst_blocks[b]) block_of[v] = b;
            std::vector<int> dest(src_blocks.size());
            for (std::size_t u = 0; u < src_blocks.size(); ++u)
                dest[u] = block_of[inv[src_blocks[u][0] - 1]];
            Matrix full = tensors_[r].permutation_map(dest);
            auto pieces =
                detail::graded_pieces(full, gradeds_[r], gradeds_[r]);
            for (auto& [deg, p] : pieces) {
                if (p.rows() == 0 || p.cols() == 0) continue;
                Matrix t = p.transpose();
                if (rho < 0) t = t * Rational(-1);
                if (!t.is_zero()) act.mats[0][mask][-deg] = std::move(t);
            }
        }
        return act;
    }

    Matrix action_matrix(const Perm& sigma, int shifted_degree) const {
        CubeAction act = make_action(sigma);
        return totcof_action_matrix(cube_, act, 0, tc_, shifted_degree - mk_);
    }

    // shifted degree and coordinates of the generator y_gamma eps_{||gamma||}
    std::pair<int, std::vector<Rational>> generator_coords(
        std::uint64_t mask) const {
        const int r = ncomp(mask), gl = mask_size(std::uint32_t(mask));
        const int totdeg = -r * m_ - gl;
        std::vector<Rational> v(tc_.complex.dim(totdeg));
        const std::size_t off = tc_.block_offset(std::uint32_t(mask), totdeg);
        std::vector<Rational> e = eps_coords(r);
        for (std::size_t i = 0; i < e.size(); ++i) v[off + i] = e[i];
        return {totdeg + mk_, v};
    }

    // Image in the configuration model of the block element y_gamma phi,
    // phi given in dual coordinates at dual degree n.
    ConfModel::Elem phi_on_block(std::uint64_t mask, int n,
                                 const std::vector<Rational>& coords) const {
        GraphSubset gamma(*es_, mask);
        if (gamma.is_redundant()) return {};
        const int r = int(gamma.components().size());
        const int gl = int(gamma.edge_count());
        const int q = n + r * m_; // degree of the tensor coefficient
        std::vector<Rational> b = theta_inv(r, q).apply(coords);
        const auto& basis = gradeds_[r].basis_by_degree.at(q);
        auto blocks = gamma.components();
        auto edges = gamma.edges();
        const int sgn_exp = (mk_ + gl) * q;
        const Rational lam = Rational(lambda(mask)) *
                             ((sgn_exp % 2) ? Rational(-1) : Rational(1));
        ConfModel::Elem out;
        for (std::size_t p = 0; p < b.size(); ++p) {
            if (b[p] == 0) continue;
            auto beta = tensors_[r].tuple(basis[p]);
            std::vector<std::size_t> section(std::size_t(k_),
                                             M_->unit_slot_value());
            for (int u = 0; u < r; ++u) section[blocks[u][0] - 1] = beta[u];
            out = ConfModel::add(
                out, M_->monomial(lam * b[p], section, edges));
        }
        return out;
    }

private:
    void build_cube() {
        for (std::uint64_t mask = 0; mask < cube_.subsets(); ++mask)
            cube_.set_module(std::uint32_t(mask), duals_[ncomp(mask)]);
        for (std::uint64_t mask = 1; mask < cube_.subsets(); ++mask) {
            GraphSubset gamma(*es_, mask);
            const int r = gamma.component_count();
            for (const Edge& e : gamma.edges()) {
                const int ei = int(es_->index_of(e));
                GraphSubset sub = gamma.without(e);
                const int r1 = sub.component_count();
                if (r1 == r) {
                    // deleting an edge of a cycle: identity module map
                    const ChainComplexQ& mod = duals_[r];
                    for (int n = mod.min_degree(); n <= mod.max_degree(); ++n)
                        cube_.set_generator_map(
                            std::uint32_t(mask), ei, n,
                            Matrix::identity(mod.dim(n)));
                    continue;
                }
                // dual of the merge A^{(x) r+1} -> A^{(x) r} joining the
                // two blocks of sub connected by e
                auto gblocks = gamma.components();
                std::vector<int> gblock_of(k_ + 1);
                for (int b = 0; b < r; ++b)
                    for (int v : gblocks[b]) gblock_of[v] = b;
                auto sblocks = sub.components();
                std::vector<int> group(sblocks.size());
                for (std::size_t u = 0; u < sblocks.size(); ++u)
                    group[u] = gblock_of[sblocks[u][0]];
                Matrix mu = tensors_[r1].merge_map(group, r);
                auto pieces =
                    detail::graded_pieces(mu, gradeds_[r1], gradeds_[r]);
                for (auto& [deg, p] : pieces)
                    cube_.set_generator_map(std::uint32_t(mask), ei, -deg,
                                            p.transpose());
            }
        }
    }

    void build_theta() {
        theta_.resize(k_ + 1);
        theta_inv_.resize(k_ + 1);
        for (int r = 1; r <= k_; ++r) {
            for (auto& [q, src] : gradeds_[r].basis_by_degree) {
                auto it = gradeds_[r].basis_by_degree.find(r * m_ - q);
                if (it == gradeds_[r].basis_by_degree.end())
                    throw std::domain_error("tensor power duality gap");
                const auto& dst = it->second;
                std::vector<Rational> e = eps_coords(r);
                Matrix th(dst.size(), src.size());
                for (std::size_t j = 0; j < src.size(); ++j)
                    for (std::size_t i = 0; i < dst.size(); ++i) {
                        // (b . eps)(x) = (-1)^{|b|} eps(x b)
                        TensorAlgebra::Elem p =
                            tensors_[r].multiply_basis(dst[i], src[j]);
                        Rational v = 0;
                        const auto& topb =
                            gradeds_[r].basis_by_degree.at(r * m_);
                        for (std::size_t t = 0; t < topb.size(); ++t)
                            if (p[topb[t]] != 0) v += e[t] * p[topb[t]];
                        th(i, j) = (q % 2) ? -v : v;
                    }
                theta_inv_[r][q] = inverse(th); // throws if degenerate
                theta_[r][q] = std::move(th);
            }
        }
    }

    void build_sign_tables() {
        for (std::uint64_t mask = 0; mask < cube_.subsets(); ++mask) {
            GraphSubset gamma(*es_, mask);
            const int r = gamma.component_count();
            for (const Edge& e : gamma.edges()) {
                if (gamma.without(e).component_count() == r) continue;
                // evaluate the structure map on the counit and divide by
                // the diagonal-times-counit element
                const int ei = int(es_->index_of(e));
                std::vector<Rational> u =
                    cube_.generator_matrix(std::uint32_t(mask), ei, -r * m_)
                        .apply(eps_coords(r));
                TensorAlgebra::Elem w = delta_at(gamma.without(e).bits(), e);
                std::vector<Rational> wdeg = restrict_to_degree(r + 1, m_, w);
                std::vector<Rational> v =
                    theta(r + 1, m_).apply(wdeg);
                Rational ratio = 0;
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (v[i] != 0) {
                        ratio = u[i] / v[i];
                        break;
                    }
                if (ratio != 1 && ratio != -1)
                    throw std::domain_error(
                        "split sign is not a sign on graph " +
                        std::to_string(mask));
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (u[i] != ratio * v[i])
                        throw std::domain_error(
                            "structure map is not proportional to the "
                            "diagonal insertion on graph " +
                            std::to_string(mask));
                nu_[{mask, std::size_t(ei)}] = (ratio == 1) ? 1 : -1;
            }
        }
        // lambda by recursion along the first edge
        lambda_[0] = 1;
        for (std::uint64_t mask = 1; mask < cube_.subsets(); ++mask) {
            GraphSubset gamma(*es_, mask);
            if (gamma.is_redundant()) {
                lambda_[mask] = 1;
                continue;
            }
            const Edge e = gamma.edges().front();
            // With the sign conventions used for duals and suspensions
            // here, the recursion that makes the comparison map commute
            // with the differentials carries the edge count, not the
            // component count, in the exponent; the two choices differ by
            // the global factor (-1)^{mk|gamma|}.
            int exp = m_ * (gamma.pos(e) + int(gamma.edge_count()));
            int val = -nu_.at({mask, es_->index_of(e)}) *
                      lambda_.at(gamma.without(e).bits());
            lambda_[mask] = (exp % 2) ? -val : val;
        }
    }

    std::vector<Rational> restrict_to_degree(
        int r, int deg, const TensorAlgebra::Elem& x) const {
        const auto& basis = gradeds_[r].basis_by_degree.at(deg);
        std::vector<Rational> v(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) v[i] = x[basis[i]];
        return v;
    }

    void build_phi() {
        phi_.source = shifted_;
        phi_.target = M_->complex();
        for (int D = shifted_.min_degree(); D <= shifted_.max_degree(); ++D) {
            Matrix P(M_->complex().dim(D), shifted_.dim(D));
            for (std::uint64_t mask = 0; mask < cube_.subsets(); ++mask) {
                const int gl = mask_size(std::uint32_t(mask));
                const int r = ncomp(mask);
                const int n = D - mk_ + gl; // dual degree inside the block
                const std::size_t bdim = duals_[r].dim(n);
                if (bdim == 0) continue;
                if (GraphSubset(*es_, mask).is_redundant()) continue;
                const std::size_t off =
                    tc_.block_offset(std::uint32_t(mask), D - mk_);
                for (std::size_t j = 0; j < bdim; ++j) {
                    std::vector<Rational> unit(bdim);
                    unit[j] = 1;
                    ConfModel::Elem img = phi_on_block(mask, n, unit);
                    for (auto& [key, c] : img)
                        P(M_->basis_position(key), off + j) = c;
                }
            }
            phi_.set_matrix(D, std::move(P));
        }
    }

    const ConfModel* M_;
    int k_, m_, mk_;
    const EdgeSet* es_;
    int ne_;
    std::vector<TensorAlgebra> tensors_;
    std::vector<TensorAlgebra::Graded> gradeds_;
    std::vector<ChainComplexQ> duals_;
    CubicalDiagram cube_;
    TotalCofibre tc_;
    ChainComplexQ shifted_;
    std::size_t top_ = 0;
    Rational top_coeff_;
    std::vector<std::map<int, Matrix>> theta_, theta_inv_;
    std::map<std::pair<std::uint64_t, std::size_t>, int> nu_;
    std::map<std::uint64_t, int> lambda_;
    ChainMap phi_;
};

// --- verification battery ---------------------------------------------------

// sgn(g:gamma) sgn(g:gamma\e) = (-1)^{pos(e:gamma)} (-1)^{pos(g.e:g.gamma)},
// exhaustively over permutations, graphs, and edges.
inline AxiomCheck edge_sign_identity_check(int k) {
    EdgeSet es(k);
    for (const Perm& g : all_perms(k)) {
        const std::uint64_t total = std::uint64_t(1) << es.size();
        for (std::uint64_t bits = 1; bits < total; ++bits) {
            GraphSubset gamma(es, bits);
            GraphSubset img = gamma.act(g);
            const int s1 = sgn_on_graph(g, gamma);
            for (const Edge& e : gamma.edges()) {
                const int lhs = s1 * sgn_on_graph(g, gamma.without(e));
                const int rhs = ((gamma.pos(e) + img.pos(es.apply(g, e))) % 2)
                                    ? -1
                                    : 1;
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "graph " << bits << ", edge (" << e.first << ","
                       << e.second << ")";
                    return {"edge relabeling sign identity", false, os.str()};
                }
            }
        }
    }
    return {"edge relabeling sign identity (k=" + std::to_string(k) + ")",
            true, ""};
}

// The dual of the multiplication applied to the orientation form equals,
// up to one global sign, the diagonal pushed through theta on both legs.
inline AxiomCheck dual_mult_check(const AlgebraPresentation& A,
                                  const DiagonalClass& dc, int* sign_out) {
    const std::size_t n = A.size();
    const int m = A.formal_dimension;
    int s = 0;
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t mu = 0; mu < n; ++mu) {
            const Rational lhs = A.omega(A.products[l][mu]);
            Rational rhs = 0;
            for (std::size_t la = 0; la < n; ++la)
                for (std::size_t rho = 0; rho < n; ++rho) {
                    const Rational c = dc.coeffs(la, rho);
                    if (c == 0) continue;
                    const int dl = A.degrees[l], dla = A.degrees[la],
                              drho = A.degrees[rho];
                    const int exp = m * dla + (drho + m) * dl + dla + drho;
                    Rational t = c * A.omega(A.products[l][la]) *
                                 A.omega(A.products[mu][rho]);
                    rhs += (exp % 2) ? -t : t;
                }
            if (lhs == 0 && rhs == 0) continue;
            if (rhs == 0 || (lhs != rhs && lhs != -rhs))
                return {"dual multiplication matches diagonal", false,
                        "pair (" + A.labels[l] + ", " + A.labels[mu] + ")"};
            const int here = (lhs == rhs) ? 1 : -1;
            if (s == 0)
                s = here;
            else if (s != here)
                return {"dual multiplication matches diagonal", false,
                        "inconsistent sign at (" + A.labels[l] + ", " +
                            A.labels[mu] + ")"};
        }
    if (sign_out) *sign_out = s;
    return {"dual multiplication matches diagonal", true, ""};
}

struct ComparisonReport {
    std::vector<AxiomCheck> checks;
    int dual_mult_sign = 0;
    // (graph, edge) -> nu and graph -> lambda, for reproducibility
    std::vector<std::tuple<std::string, std::string, int>> nu_table;
    std::vector<std::pair<std::string, int>> lambda_table;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline std::string graph_str(const GraphSubset& g) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const Edge& e : g.edges()) {
        if (!first) os << ",";
        first = false;
        os << "(" << e.first << "," << e.second << ")";
    }
    os << "}";
    return os.str();
}

} // namespace detail

inline ComparisonReport verify_comparison(const ConfModel& M) {
    ComparisonReport rep;
    const int k = M.k(), m = M.m();
    const EdgeSet& es = M.edge_set();
    auto push = [&](std::string name, bool ok, std::string w) {
        rep.checks.push_back({std::move(name), ok, ok ? "" : std::move(w)});
    };

    // relations and their derivatives vanish in normal form
    {
        bool ok = true;
        std::string w;
        for (const AxiomCheck& c : differential_ideal_checks(M))
            if (!c.passed && ok) {
                ok = false;
                w = c.name + ": " + c.witness;
            }
        push("relation ideal closed under differential", ok, w);
    }
    {
        int witness;
        push("model differential squares to zero",
             M.complex().check_d_squared(&witness),
             "degree " + std::to_string(witness));
    }
    rep.checks.push_back(edge_sign_identity_check(std::min(k, 4)));
    rep.checks.push_back(
        dual_mult_check(M.algebra(), M.diagonal(), &rep.dual_mult_sign));

    std::unique_ptr<ConfCube> cube;
    try {
        cube = std::make_unique<ConfCube>(M);
    } catch (const std::exception& e) {
        push("cube construction (functoriality, counit, sign tables)", false,
             e.what());
        return rep;
    }
    push("cube construction (functoriality, counit, sign tables)", true, "");
    const ConfCube& C = *cube;

    // tables
    for (std::uint64_t mask = 0; mask < C.cube().subsets(); ++mask) {
        GraphSubset gamma(es, mask);
        rep.lambda_table.push_back({detail::graph_str(gamma),
                                    C.lambda(mask)});
        for (const Edge& e : gamma.edges())
            if (gamma.without(e).component_count() !=
                gamma.component_count())
                rep.nu_table.push_back(
                    {detail::graph_str(gamma),
                     "(" + std::to_string(e.first) + "," +
                         std::to_string(e.second) + ")",
                     C.nu(mask, e)});
    }

    // merge maps are compatible with the projections from the full power
    {
        bool ok = true;
        std::string w;
        const TensorAlgebra& Tk = C.tensor_power(k);
        auto q_of = [&](const GraphSubset& g) {
            auto blocks = g.components();
            std::vector<int> group(static_cast<std::size_t>(k), 0);
            for (int b = 0; b < int(blocks.size()); ++b)
                for (int v : blocks[b]) group[std::size_t(v) - 1] = b;
            return Tk.merge_map(group, int(blocks.size()));
        };
        for (std::uint64_t mask = 1; mask < C.cube().subsets() && ok;
             ++mask) {
            GraphSubset gamma(es, mask);
            const int r = gamma.component_count();
            for (const Edge& e : gamma.edges()) {
                GraphSubset sub = gamma.without(e);
                const int r1 = sub.component_count();
                if (r1 == r) continue;
                auto gblocks = gamma.components();
                std::vector<int> gblock_of(std::size_t(k + 1));
                for (int b = 0; b < r; ++b)
                    for (int v : gblocks[b]) gblock_of[std::size_t(v)] = b;
                auto sblocks = sub.components();
                std::vector<int> group(sblocks.size());
                for (std::size_t u = 0; u < sblocks.size(); ++u)
                    group[u] = gblock_of[std::size_t(sblocks[u][0])];
                Matrix mu = C.tensor_power(r1).merge_map(group, r);
                if (mu * q_of(sub) != q_of(gamma)) {
                    ok = false;
                    w = "graph " + detail::graph_str(gamma) + " edge (" +
                        std::to_string(e.first) + "," +
                        std::to_string(e.second) + ")";
                    break;
                }
            }
        }
        push("merge maps compatible with projections", ok, w);
    }

    // nu(g,e1) nu(g\e1,e2) = (-1)^m nu(g,e2) nu(g\e2,e1)
    {
        bool ok = true;
        std::string w;
        for (std::uint64_t mask = 0; mask < C.cube().subsets() && ok;
             ++mask) {
            GraphSubset gamma(es, mask);
            if (gamma.is_redundant()) continue;
            auto edges = gamma.edges();
            for (std::size_t a = 0; a < edges.size() && ok; ++a)
                for (std::size_t b = 0; b < edges.size(); ++b) {
                    if (a == b) continue;
                    int lhs = C.nu(mask, edges[a]) *
                              C.nu(gamma.without(edges[a]).bits(), edges[b]);
                    int rhs = C.nu(mask, edges[b]) *
                              C.nu(gamma.without(edges[b]).bits(), edges[a]);
                    if (m % 2) rhs = -rhs;
                    if (lhs != rhs) {
                        ok = false;
                        w = "graph " + detail::graph_str(gamma);
                        break;
                    }
                }
        }
        push("split sign consistency", ok, w);
    }

    // lambda recursion independent of the chosen edge
    {
        bool ok = true;
        std::string w;
        for (std::uint64_t mask = 1; mask < C.cube().subsets() && ok;
             ++mask) {
            GraphSubset gamma(es, mask);
            if (gamma.is_redundant()) continue;
            for (const Edge& e : gamma.edges()) {
                const int exp = m * (gamma.pos(e) + int(gamma.edge_count()));
                int val = -C.nu(mask, e) * C.lambda(gamma.without(e).bits());
                if (exp % 2) val = -val;
                if (val != C.lambda(mask)) {
                    ok = false;
                    w = "graph " + detail::graph_str(gamma) + " edge (" +
                        std::to_string(e.first) + "," +
                        std::to_string(e.second) + ")";
                    break;
                }
            }
        }
        push("graph sign edge independence", ok, w);
    }

    // differential on generators: D(y_g eps) = sum_e (-1)^{pos} nu(g,e)
    // y_{g\e} (diagonal-at-e . eps)
    {
        bool ok = true;
        std::string w;
        for (std::uint64_t mask = 0; mask < C.cube().subsets() && ok;
             ++mask) {
            GraphSubset gamma(es, mask);
            if (gamma.is_redundant()) continue;
            const int r = gamma.component_count();
            const int gl = int(gamma.edge_count());
            const int totdeg = -r * m - gl;
            auto [sdeg, z] = C.generator_coords(mask);
            std::vector<Rational> lhs =
                C.totcof().complex.diff(totdeg).apply(z);
            std::vector<Rational> rhs(lhs.size());
            for (const Edge& e : gamma.edges()) {
                GraphSubset sub = gamma.without(e);
                std::vector<Rational> v = C.theta(r + 1, m).apply(
                    [&] {
                        TensorAlgebra::Elem wv = C.delta_at(sub.bits(), e);
                        const auto& basis =
                            C.graded_power(r + 1).basis_by_degree.at(m);
                        std::vector<Rational> out(basis.size());
                        for (std::size_t i = 0; i < basis.size(); ++i)
                            out[i] = wv[basis[i]];
                        return out;
                    }());
                const std::size_t off = C.totcof().block_offset(
                    std::uint32_t(sub.bits()), totdeg + 1);
                Rational c = C.nu(mask, e);
                if (gamma.pos(e) % 2) c = -c;
                for (std::size_t i = 0; i < v.size(); ++i)
                    rhs[off + i] += c * v[i];
            }
            if (lhs != rhs) {
                ok = false;
                w = "graph " + detail::graph_str(gamma);
            }
            (void)sdeg;
        }
        push("cofibre differential formula on generators", ok, w);
    }

    // transposition identities for tau = (p,p+1)
    {
        bool ok_nu = true, ok_lam = true, ok_g = true;
        std::string w_nu, w_lam, w_g;
        for (int p = 1; p < k; ++p) {
            Perm tau = identity_perm(k);
            std::swap(tau[p - 1], tau[p]);
            const bool meven = (m % 2 == 0);
            for (std::uint64_t mask = 0; mask < C.cube().subsets(); ++mask) {
                GraphSubset gamma(es, mask);
                GraphSubset tg = gamma.act(tau);
                const int eta_g =
                    (!meven && gamma.contains({p, p + 1})) ? -1 : 1;
                if (!gamma.is_redundant()) {
                    for (const Edge& e : gamma.edges()) {
                        const int eta_e =
                            (!meven && e == Edge{p, p + 1}) ? -1 : 1;
                        int lhs = C.nu(mask, e) *
                                  C.nu(tg.bits(), es.apply(tau, e));
                        int rhs = eta_e;
                        if (!meven)
                            rhs *= sgn_on_components(tau, gamma) *
                                   sgn_on_components(tau, gamma.without(e));
                        if (lhs != rhs && ok_nu) {
                            ok_nu = false;
                            w_nu = "p=" + std::to_string(p) + " graph " +
                                   detail::graph_str(gamma);
                        }
                    }
                    int lhs = C.lambda(mask) * C.lambda(tg.bits());
                    int rhs = eta_g;
                    if (!meven)
                        rhs *= -sgn_on_graph(tau, gamma) *
                               sgn_on_components(tau, gamma);
                    if (lhs != rhs && ok_lam) {
                        ok_lam = false;
                        w_lam = "p=" + std::to_string(p) + " graph " +
                                detail::graph_str(gamma);
                    }
                }
                // action on the generator product in the model
                ConfModel::Elem g_gamma = M.monomial(
                    1,
                    std::vector<std::size_t>(std::size_t(k),
                                             M.unit_slot_value()),
                    gamma.edges());
                ConfModel::Elem lhs = M.act(tau, g_gamma);
                ConfModel::Elem rhs = M.monomial(
                    1,
                    std::vector<std::size_t>(std::size_t(k),
                                             M.unit_slot_value()),
                    tg.edges());
                Rational c = eta_g;
                if ((m - 1) % 2 && sgn_on_graph(tau, gamma) < 0) c = -c;
                rhs = ConfModel::scale(std::move(rhs), c);
                if (lhs != rhs && ok_g) {
                    ok_g = false;
                    w_g = "p=" + std::to_string(p) + " graph " +
                          detail::graph_str(gamma);
                }
            }
        }
        push("transposition identity for split signs", ok_nu, w_nu);
        push("transposition identity for graph signs", ok_lam, w_lam);
        push("transposition action on generator products", ok_g, w_g);
    }

    // twisted action on generators:
    // sigma.(y_g eps) = sgn(sigma:g)(sgn(sigma) sgn(sigma:pi0))^m
    //                   y_{sigma.g} eps
    {
        bool ok = true;
        std::string w;
        for (const Perm& sigma : all_perms(k)) {
            for (std::uint64_t mask = 0; mask < C.cube().subsets(); ++mask) {
                GraphSubset gamma(es, mask);
                auto [deg, z] = C.generator_coords(mask);
                std::vector<Rational> lhs =
                    C.action_matrix(sigma, deg).apply(z);
                auto [deg2, z2] =
                    C.generator_coords(gamma.act(sigma).bits());
                int s = sgn_on_graph(sigma, gamma);
                if (m % 2)
                    s *= perm_sign(sigma) * sgn_on_components(sigma, gamma);
                for (auto& x : z2) x *= s;
                if (deg != deg2 || lhs != z2) {
                    ok = false;
                    w = "graph " + detail::graph_str(gamma);
                    break;
                }
            }
            if (!ok) break;
        }
        push("twisted action on generators", ok, w);
    }

    // action axioms on the total cofibre: identity, multiplicativity
    // against adjacent transpositions, commutation with D
    {
        bool ok = true;
        std::string w;
        const ChainComplexQ& tcc = C.totcof().complex;
        for (int D = tcc.min_degree(); D <= tcc.max_degree() && ok; ++D) {
            const int sdeg = D + m * k;
            if (C.action_matrix(identity_perm(k), sdeg) !=
                Matrix::identity(tcc.dim(D))) {
                ok = false;
                w = "identity fails in degree " + std::to_string(D);
            }
        }
        for (int p = 1; p < k && ok; ++p) {
            Perm tau = identity_perm(k);
            std::swap(tau[p - 1], tau[p]);
            for (const Perm& sigma : all_perms(k)) {
                Perm prod = compose(tau, sigma);
                for (int D = tcc.min_degree(); D <= tcc.max_degree(); ++D) {
                    const int sdeg = D + m * k;
                    if (C.action_matrix(prod, sdeg) !=
                        C.action_matrix(tau, sdeg) *
                            C.action_matrix(sigma, sdeg)) {
                        ok = false;
                        w = "composition fails in degree " +
                            std::to_string(D);
                        break;
                    }
                }
                if (!ok) break;
            }
            for (int D = tcc.min_degree(); D <= tcc.max_degree() && ok;
                 ++D) {
                const int sdeg = D + m * k;
                Matrix lhs =
                    C.action_matrix(tau, sdeg + 1) * tcc.diff(D);
                Matrix rhs =
                    tcc.diff(D) * C.action_matrix(tau, sdeg);
                if (lhs != rhs) {
                    ok = false;
                    w = "differential equivariance fails in degree " +
                        std::to_string(D);
                }
            }
        }
        push("twisted action axioms", ok, w);
    }

    // the three comparison-map verdicts
    {
        int witness;
        push("comparison map is a chain map",
             C.comparison().is_chain_map(&witness),
             "degree " + std::to_string(witness));
    }
    {
        bool ok = true;
        std::string w;
        for (int p = 1; p < k && ok; ++p) {
            Perm tau = identity_perm(k);
            std::swap(tau[p - 1], tau[p]);
            for (int D = C.shifted().min_degree();
                 D <= C.shifted().max_degree(); ++D) {
                Matrix lhs =
                    M.action_matrix(tau, D) * C.comparison().matrix(D);
                Matrix rhs =
                    C.comparison().matrix(D) * C.action_matrix(tau, D);
                if (lhs != rhs) {
                    ok = false;
                    w = "p=" + std::to_string(p) + " degree " +
                        std::to_string(D);
                    break;
                }
            }
        }
        push("comparison map is equivariant", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        if (betti(C.shifted()) != betti(M.complex())) {
            ok = false;
            w = "Betti numbers differ";
        } else if (!is_quasi_iso(C.comparison())) {
            ok = false;
            w = "cone not acyclic";
        } else {
            // the reduced-graph part maps by a degreewise bijection
            for (int D = C.shifted().min_degree();
                 D <= C.shifted().max_degree() && ok; ++D) {
                std::vector<std::size_t> cols;
                for (std::uint64_t mask = 0; mask < C.cube().subsets();
                     ++mask) {
                    GraphSubset gamma(es, mask);
                    if (!gamma.in_gamma0()) continue;
                    const int n =
                        D - m * k + int(gamma.edge_count());
                    const std::size_t bdim =
                        C.cube().module(std::uint32_t(mask)).dim(n);
                    if (bdim == 0) continue;
                    const std::size_t off = C.totcof().block_offset(
                        std::uint32_t(mask), D - m * k);
                    for (std::size_t j = 0; j < bdim; ++j)
                        cols.push_back(off + j);
                }
                if (cols.size() != M.complex().dim(D)) {
                    ok = false;
                    w = "reduced part has wrong dimension in degree " +
                        std::to_string(D);
                    break;
                }
                Matrix phiD = C.comparison().matrix(D);
                Matrix sq(phiD.rows(), cols.size());
                for (std::size_t j = 0; j < cols.size(); ++j)
                    for (std::size_t i = 0; i < phiD.rows(); ++i)
                        sq(i, j) = phiD(i, cols[j]);
                if (rank(sq) != sq.rows()) {
                    ok = false;
                    w = "reduced part not bijective in degree " +
                        std::to_string(D);
                }
            }
        }
        push("comparison map is a quasi-isomorphism", ok, w);
    }
    return rep;
}

} // namespace confspace

#endif
