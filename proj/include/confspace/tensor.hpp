#ifndef CONFSPACE_TENSOR_HPP
#define CONFSPACE_TENSOR_HPP

#include <vector>

#include "chain_complex.hpp"
#include "pdalg.hpp"

namespace confspace {

// The tensor power A^{(x) r} with its basis of tuples of basis elements of
// A, indexed in mixed radix (last factor fastest).
class TensorAlgebra {
public:
    TensorAlgebra(const AlgebraPresentation& A, int r) : A_(&A), r_(r) {
        size_ = 1;
        for (int i = 0; i < r; ++i) size_ *= A.size();
    }

    const AlgebraPresentation& algebra() const { return *A_; }
    int factors() const { return r_; }
    std::size_t size() const { return size_; }

    std::size_t index(const std::vector<std::size_t>& tuple) const {
        std::size_t idx = 0;
        for (int i = 0; i < r_; ++i) idx = idx * A_->size() + tuple[i];
        return idx;
    }

    std::vector<std::size_t> tuple(std::size_t idx) const {
        std::vector<std::size_t> t(r_);
        for (int i = r_ - 1; i >= 0; --i) {
            t[i] = idx % A_->size();
            idx /= A_->size();
        }
        return t;
    }

    int degree(std::size_t idx) const {
        int d = 0;
        for (std::size_t l : tuple(idx)) d += A_->degrees[l];
        return d;
    }

    // Sparse element: coordinates over the tuple basis.
    using Elem = std::vector<Rational>;

    Elem zero() const { return Elem(size_); }
    Elem basis(std::size_t idx) const {
        Elem e(size_);
        e[idx] = 1;
        return e;
    }

    // Product of two basis tensors, with the Koszul sign of interleaving.
    Elem multiply_basis(std::size_t a, std::size_t b) const {
        auto ta = tuple(a), tb = tuple(b);
        int sign_exp = 0;
        for (int i = 0; i < r_; ++i)
            for (int j = i + 1; j < r_; ++j)
                sign_exp += A_->degrees[tb[i]] * A_->degrees[ta[j]];
        // slotwise products, expanded by structure constants
        Elem acc = zero();
        std::vector<std::pair<std::vector<std::size_t>, Rational>> partial = {
            {{}, (sign_exp % 2) ? Rational(-1) : Rational(1)}};
        for (int i = 0; i < r_; ++i) {
            std::vector<std::pair<std::vector<std::size_t>, Rational>> next;
            const AlgElem& p = A_->products[ta[i]][tb[i]];
            for (auto& [pref, c] : partial)
                for (std::size_t t = 0; t < A_->size(); ++t)
                    if (p[t] != 0) {
                        auto np = pref;
                        np.push_back(t);
                        next.emplace_back(std::move(np), c * p[t]);
                    }
            partial = std::move(next);
        }
        for (auto& [tup, c] : partial) acc[index(tup)] += c;
        return acc;
    }

    Elem multiply(const Elem& x, const Elem& y) const {
        Elem r = zero();
        for (std::size_t a = 0; a < size_; ++a) {
            if (x[a] == 0) continue;
            for (std::size_t b = 0; b < size_; ++b) {
                if (y[b] == 0) continue;
                Elem p = multiply_basis(a, b);
                const Rational c = x[a] * y[b];
                for (std::size_t t = 0; t < size_; ++t)
                    if (p[t] != 0) r[t] += c * p[t];
            }
        }
        return r;
    }

    // Leibniz differential on the tensor power.
    Elem d(const Elem& x) const {
        Elem r = zero();
        for (std::size_t a = 0; a < size_; ++a) {
            if (x[a] == 0) continue;
            auto t = tuple(a);
            int sign_exp = 0;
            for (int i = 0; i < r_; ++i) {
                const AlgElem& di = A_->differential[t[i]];
                const Rational s = (sign_exp % 2) ? -1 : 1;
                for (std::size_t l = 0; l < A_->size(); ++l)
                    if (di[l] != 0) {
                        auto nt = t;
                        nt[i] = l;
                        r[index(nt)] += x[a] * s * di[l];
                    }
                sign_exp += A_->degrees[t[i]];
            }
        }
        return r;
    }

    // pi^*_i : A -> A^{(x) r} placing a at slot i (1-based), units elsewhere.
    Elem embed(int slot, const AlgElem& a, std::size_t unit) const {
        Elem r = zero();
        for (std::size_t l = 0; l < A_->size(); ++l)
            if (a[l] != 0) {
                std::vector<std::size_t> t(r_, unit);
                t[slot - 1] = l;
                r[index(t)] += a[l];
            }
        return r;
    }

    // The merge map A^{(x) r} -> A^{(x) t}: factor u goes to group[u]
    // (0-based, with t groups); factors are first permuted into group order
    // (stably, with Koszul signs), then multiplied within each group.
    // Returned as a matrix over the two tuple bases.
    Matrix merge_map(const std::vector<int>& group, int t) const {
        TensorAlgebra target(*A_, t);
        Matrix mat(target.size(), size_);
        for (std::size_t src = 0; src < size_; ++src) {
            auto tup = tuple(src);
            // Koszul sign of the stable regrouping permutation
            int sign_exp = 0;
            for (int u = 0; u < r_; ++u)
                for (int v = u + 1; v < r_; ++v)
                    if (group[u] > group[v])
                        sign_exp += A_->degrees[tup[u]] * A_->degrees[tup[v]];
            // multiply within each group, in source order
            std::vector<std::pair<std::vector<AlgElem>, Rational>> partial = {
                {{}, (sign_exp % 2) ? Rational(-1) : Rational(1)}};
            for (int g = 0; g < t; ++g) {
                std::vector<int> members;
                for (int u = 0; u < r_; ++u)
                    if (group[u] == g) members.push_back(u);
                AlgElem prod;
                if (members.empty())
                    throw std::domain_error("merge_map: empty group");
                prod = A_->basis_elem(tup[members[0]]);
                for (std::size_t mi = 1; mi < members.size(); ++mi)
                    prod = A_->multiply(prod,
                                        A_->basis_elem(tup[members[mi]]));
                for (auto& pr : partial) pr.first.push_back(prod);
            }
            // expand the product elements into tuples
            for (auto& [facs, c0] : partial) {
                std::vector<std::pair<std::vector<std::size_t>, Rational>>
                    expand = {{{}, c0}};
                for (int g = 0; g < t; ++g) {
                    std::vector<std::pair<std::vector<std::size_t>, Rational>>
                        next;
                    for (auto& [pref, c] : expand)
                        for (std::size_t l = 0; l < A_->size(); ++l)
                            if (facs[g][l] != 0) {
                                auto np = pref;
                                np.push_back(l);
                                next.emplace_back(std::move(np),
                                                  c * facs[g][l]);
                            }
                    expand = std::move(next);
                }
                for (auto& [tupT, c] : expand)
                    mat(target.index(tupT), src) += c;
            }
        }
        return mat;
    }

    // Koszul-signed permutation matrix sending factor u to slot dest[u]
    // (0-based): a special case of merging with singleton groups.
    Matrix permutation_map(const std::vector<int>& dest) const {
        return merge_map(dest, r_);
    }

    // The tensor power as a bounded cochain complex, with per-degree basis
    // maps back into tuple indices.
    struct Graded {
        ChainComplexQ complex;
        std::map<int, std::vector<std::size_t>> basis_by_degree;
        std::vector<std::pair<int, std::size_t>> position; // tuple -> (deg, i)
    };

    Graded graded() const {
        Graded g;
        g.position.resize(size_);
        for (std::size_t i = 0; i < size_; ++i) {
            const int deg = degree(i);
            g.position[i] = {deg, g.basis_by_degree[deg].size()};
            g.basis_by_degree[deg].push_back(i);
        }
        for (auto& [deg, basis] : g.basis_by_degree)
            g.complex.set_dim(deg, basis.size());
        for (auto& [deg, basis] : g.basis_by_degree) {
            Matrix dmat(g.complex.dim(deg + 1), basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j) {
                Elem img = d(this->basis(basis[j]));
                for (std::size_t t = 0; t < size_; ++t)
                    if (img[t] != 0) dmat(g.position[t].second, j) = img[t];
            }
            g.complex.set_diff(deg, std::move(dmat));
        }
        return g;
    }

private:
    const AlgebraPresentation* A_;
    int r_;
    std::size_t size_;
};

} // namespace confspace

#endif
