#ifndef CONFSPACE_PDALG_HPP
#define CONFSPACE_PDALG_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace confspace {

// An element of A in basis coordinates.
using AlgElem = std::vector<Rational>;

// A finite graded commutative differential algebra with an orientation
// form, given by structure constants over an ordered basis.  The basis is
// kept in canonical order: by degree, then input order.
class AlgebraPresentation {
public:
    struct Entry {
        std::size_t index;
        Rational coeff;
    };

    std::vector<std::string> labels;
    std::vector<int> degrees;
    int formal_dimension = 0;
    // products[l][m] = coordinates of a_l * a_m
    std::vector<std::vector<AlgElem>> products;
    // differential[l] = coordinates of d(a_l)
    std::vector<AlgElem> differential;
    // orientation form on the whole of A (supported in degree m)
    AlgElem orientation;

    std::size_t size() const { return labels.size(); }
    int degree(std::size_t l) const { return degrees[l]; }

    std::optional<std::size_t> label_index(const std::string& s) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == s) return i;
        return std::nullopt;
    }

    AlgElem zero() const { return AlgElem(size()); }
    AlgElem basis_elem(std::size_t l) const {
        AlgElem e(size());
        e[l] = 1;
        return e;
    }

    AlgElem multiply(const AlgElem& a, const AlgElem& b) const {
        AlgElem r(size());
        for (std::size_t l = 0; l < size(); ++l) {
            if (a[l] == 0) continue;
            for (std::size_t m = 0; m < size(); ++m) {
                if (b[m] == 0) continue;
                const AlgElem& p = products[l][m];
                const Rational c = a[l] * b[m];
                for (std::size_t n = 0; n < size(); ++n)
                    if (p[n] != 0) r[n] += c * p[n];
            }
        }
        return r;
    }

    AlgElem d(const AlgElem& a) const {
        AlgElem r(size());
        for (std::size_t l = 0; l < size(); ++l) {
            if (a[l] == 0) continue;
            for (std::size_t n = 0; n < size(); ++n)
                if (differential[l][n] != 0) r[n] += a[l] * differential[l][n];
        }
        return r;
    }

    Rational omega(const AlgElem& a) const {
        Rational r = 0;
        for (std::size_t l = 0; l < size(); ++l)
            if (a[l] != 0 && orientation[l] != 0) r += a[l] * orientation[l];
        return r;
    }

    std::vector<std::size_t> basis_of_degree(int deg) const {
        std::vector<std::size_t> r;
        for (std::size_t l = 0; l < size(); ++l)
            if (degrees[l] == deg) r.push_back(l);
        return r;
    }

    // The basis element acting as a two-sided unit, if any.
    std::optional<std::size_t> unit_index() const {
        for (std::size_t u : basis_of_degree(0)) {
            bool ok = true;
            for (std::size_t l = 0; l < size() && ok; ++l)
                ok = products[u][l] == basis_elem(l) &&
                     products[l][u] == basis_elem(l);
            if (ok) return u;
        }
        return std::nullopt;
    }

    // Reorders the basis by degree (stable), remapping all tables.
    void canonicalize() {
        std::vector<std::size_t> order(size());
        for (std::size_t i = 0; i < size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return degrees[a] < degrees[b];
                         });
        std::vector<std::size_t> inv(size());
        for (std::size_t i = 0; i < size(); ++i) inv[order[i]] = i;
        auto remap_elem = [&](const AlgElem& e) {
            AlgElem r(size());
            for (std::size_t i = 0; i < size(); ++i) r[inv[i]] = e[i];
            return r;
        };
        AlgebraPresentation n = *this;
        for (std::size_t i = 0; i < size(); ++i) {
            n.labels[inv[i]] = labels[i];
            n.degrees[inv[i]] = degrees[i];
            n.differential[inv[i]] = remap_elem(differential[i]);
            n.orientation[inv[i]] = orientation[i];
            for (std::size_t j = 0; j < size(); ++j)
                n.products[inv[i]][inv[j]] = remap_elem(products[i][j]);
        }
        *this = std::move(n);
    }
};

// --- validation -------------------------------------------------------------

struct AxiomCheck {
    std::string name;
    bool passed;
    std::string witness; // empty when passed
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    bool structural_error = false;
    std::string structural_message;

    bool all_passed() const {
        if (structural_error) return false;
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

inline ValidationReport validate_presentation(const AlgebraPresentation& A) {
    ValidationReport rep;
    const std::size_t n = A.size();
    const int m = A.formal_dimension;

    // Structural checks come first and short-circuit the axioms.
    auto structural = [&](const std::string& msg) {
        rep.structural_error = true;
        rep.structural_message = msg;
    };
    if (A.products.size() != n || A.differential.size() != n ||
        A.orientation.size() != n) {
        structural("table sizes do not match basis size");
        return rep;
    }
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t mu = 0; mu < n; ++mu) {
            if (A.products[l].size() != n || A.products[l][mu].size() != n) {
                structural("product table misshaped");
                return rep;
            }
            for (std::size_t t = 0; t < n; ++t)
                if (A.products[l][mu][t] != 0 &&
                    A.degrees[t] != A.degrees[l] + A.degrees[mu]) {
                    structural("degree mismatch in product " + A.labels[l] +
                               "*" + A.labels[mu] + " -> " + A.labels[t]);
                    return rep;
                }
        }
        if (A.differential[l].size() != n) {
            structural("differential table misshaped");
            return rep;
        }
        for (std::size_t t = 0; t < n; ++t)
            if (A.differential[l][t] != 0 &&
                A.degrees[t] != A.degrees[l] + 1) {
                structural("degree mismatch in d(" + A.labels[l] + ")");
                return rep;
            }
        if (A.orientation[l] != 0 && A.degrees[l] != m) {
            structural("orientation supported outside degree m at " +
                       A.labels[l]);
            return rep;
        }
    }

    auto check = [&](const std::string& name, bool ok, std::string witness) {
        rep.checks.push_back({name, ok, ok ? "" : std::move(witness)});
    };

    {
        bool ok = true;
        std::string w;
        for (std::size_t l = 0; l < n && ok; ++l)
            for (std::size_t mu = 0; mu < n && ok; ++mu) {
                Rational s = (A.degrees[l] * A.degrees[mu]) % 2 ? -1 : 1;
                AlgElem lhs = A.products[l][mu];
                AlgElem rhs = A.products[mu][l];
                for (auto& x : rhs) x *= s;
                if (lhs != rhs) {
                    ok = false;
                    w = "(" + A.labels[l] + ", " + A.labels[mu] + ")";
                }
            }
        check("graded commutativity", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b)
                for (std::size_t c = 0; c < n && ok; ++c) {
                    AlgElem lhs =
                        A.multiply(A.products[a][b], A.basis_elem(c));
                    AlgElem rhs =
                        A.multiply(A.basis_elem(a), A.products[b][c]);
                    if (lhs != rhs) {
                        ok = false;
                        w = "(" + A.labels[a] + ", " + A.labels[b] + ", " +
                            A.labels[c] + ")";
                    }
                }
        check("associativity", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b) {
                AlgElem lhs = A.d(A.products[a][b]);
                AlgElem rhs = A.multiply(A.differential[a], A.basis_elem(b));
                AlgElem t = A.multiply(A.basis_elem(a), A.differential[b]);
                const Rational s = A.degrees[a] % 2 ? -1 : 1;
                for (std::size_t i = 0; i < n; ++i) rhs[i] += s * t[i];
                if (lhs != rhs) {
                    ok = false;
                    w = "(" + A.labels[a] + ", " + A.labels[b] + ")";
                }
            }
        check("Leibniz rule", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::size_t a = 0; a < n && ok; ++a)
            if (A.d(A.differential[a]) != A.zero()) {
                ok = false;
                w = A.labels[a];
            }
        check("d^2 = 0", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::size_t a = 0; a < n && ok; ++a)
            if (A.omega(A.differential[a]) != 0) {
                ok = false;
                w = A.labels[a];
            }
        check("omega(dA) = 0", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        std::map<int, std::size_t> dim_by_degree;
        for (std::size_t l = 0; l < n; ++l) ++dim_by_degree[A.degrees[l]];
        for (auto& [deg, dim] : dim_by_degree) {
            if (deg > m || dim_by_degree.count(m - deg) == 0 ||
                dim_by_degree[m - deg] != dim) {
                ok = false;
                w = "degree " + std::to_string(deg);
                break;
            }
            auto rows = A.basis_of_degree(deg);
            auto cols = A.basis_of_degree(m - deg);
            Matrix p(rows.size(), cols.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < cols.size(); ++j)
                    p(i, j) = A.omega(A.products[rows[i]][cols[j]]);
            if (rank(p) != rows.size()) {
                ok = false;
                w = "degree " + std::to_string(deg);
                break;
            }
        }
        check("non-degenerate pairings", ok, w);
    }
    {
        auto u = A.unit_index();
        check("has unit basis element", u.has_value(), "no basis unit found");
    }
    return rep;
}

// --- duality data -----------------------------------------------------------

struct DualityData {
    // dual_basis[l] = coordinates of a_l^*, with omega(a_l * a_mu^*) = delta
    std::vector<AlgElem> dual_basis;
    AlgElem fundamental_class; // [A] with omega([A]) = 1
    std::size_t unit = 0;
};

// Computes the Poincare dual basis by inverting the pairing matrix in each
// complementary pair of degrees.  Throws std::domain_error naming the
// degree when a pairing is singular.
inline DualityData dual_basis(const AlgebraPresentation& A) {
    DualityData dd;
    const int m = A.formal_dimension;
    dd.dual_basis.assign(A.size(), A.zero());
    std::map<int, bool> seen;
    for (std::size_t l = 0; l < A.size(); ++l) {
        const int deg = A.degrees[l];
        auto rows = A.basis_of_degree(deg);
        auto cols = A.basis_of_degree(m - deg);
        if (cols.size() != rows.size())
            throw std::domain_error("duality failure in degree " +
                                    std::to_string(deg));
        Matrix p(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                p(i, j) = A.omega(A.products[rows[i]][cols[j]]);
        Matrix q;
        try {
            q = inverse(p);
        } catch (const std::domain_error&) {
            throw std::domain_error("duality failure in degree " +
                                    std::to_string(deg));
        }
        // a_{rows[i]}^* = sum_t q(t, i) a_{cols[t]}
        std::size_t i = 0;
        while (rows[i] != l) ++i;
        for (std::size_t t = 0; t < cols.size(); ++t)
            dd.dual_basis[l][cols[t]] = q(t, i);
    }
    auto u = A.unit_index();
    if (!u) throw std::domain_error("no unit basis element");
    dd.unit = *u;
    dd.fundamental_class = dd.dual_basis[*u];
    return dd;
}

// The diagonal class as a coefficient matrix: Delta = sum D(l, mu) a_l (x) a_mu.
struct DiagonalClass {
    Matrix coeffs;
};

inline DiagonalClass diagonal_class(const AlgebraPresentation& A,
                                    const DualityData& dd) {
    DiagonalClass dc;
    dc.coeffs = Matrix(A.size(), A.size());
    for (std::size_t l = 0; l < A.size(); ++l) {
        const Rational s = A.degrees[l] % 2 ? -1 : 1;
        for (std::size_t mu = 0; mu < A.size(); ++mu)
            if (dd.dual_basis[l][mu] != 0)
                dc.coeffs(l, mu) += s * dd.dual_basis[l][mu];
    }
    // Post-checks: Delta is a cocycle and (1 (x) a - a (x) 1) Delta = 0.
    // (d (x) 1 + (-1)^{deg} 1 (x) d) Delta = 0:
    Matrix dOut(A.size(), A.size());
    for (std::size_t l = 0; l < A.size(); ++l)
        for (std::size_t mu = 0; mu < A.size(); ++mu) {
            const Rational c = dc.coeffs(l, mu);
            if (c == 0) continue;
            for (std::size_t t = 0; t < A.size(); ++t) {
                if (A.differential[l][t] != 0)
                    dOut(t, mu) += c * A.differential[l][t];
                if (A.differential[mu][t] != 0)
                    dOut(l, t) += c * A.differential[mu][t] *
                                  (A.degrees[l] % 2 ? -1 : 1);
            }
        }
    if (!dOut.is_zero())
        throw std::domain_error("diagonal class is not a cocycle");
    for (std::size_t a = 0; a < A.size(); ++a) {
        // (1 (x) a) Delta - (a (x) 1) Delta over the tensor basis
        Matrix acc(A.size(), A.size());
        for (std::size_t l = 0; l < A.size(); ++l)
            for (std::size_t mu = 0; mu < A.size(); ++mu) {
                const Rational c = dc.coeffs(l, mu);
                if (c == 0) continue;
                // (1 (x) a)(a_l (x) a_mu) = (-1)^{|a||a_l|} a_l (x) (a a_mu)
                const Rational s1 =
                    (A.degrees[a] * A.degrees[l]) % 2 ? -1 : 1;
                for (std::size_t t = 0; t < A.size(); ++t)
                    if (A.products[a][mu][t] != 0)
                        acc(l, t) += s1 * c * A.products[a][mu][t];
                // (a (x) 1)(a_l (x) a_mu) = (a a_l) (x) a_mu
                for (std::size_t t = 0; t < A.size(); ++t)
                    if (A.products[a][l][t] != 0)
                        acc(t, mu) -= c * A.products[a][l][t];
            }
        if (!acc.is_zero())
            throw std::domain_error(
                "(1 (x) a - a (x) 1) Delta != 0 for a = " + A.labels[a]);
    }
    return dc;
}

// --- equivariant orientation averaging --------------------------------------

// A finite group acting linearly on a space V, each element paired with its
// orientation-representation sign.
struct SignedGroupAction {
    std::vector<Matrix> elements; // action matrices on V
    std::vector<int> rho;         // +-1 per element
};

// Averages a top form eps' over the rho-twisted action:
//   eps(x) = (1/|G|) sum_g rho(g) eps'(g . x).
// Returns the averaged form; throws when the average vanishes on the
// fundamental vector mu (no rho-equivariant form with eps(mu) = 1 exists
// in the span of the orbit of eps').
inline std::vector<Rational> equivariant_orientation(
    const SignedGroupAction& G, const std::vector<Rational>& eps_prime,
    const std::vector<Rational>& mu) {
    const std::size_t dim = eps_prime.size();
    std::vector<Rational> eps(dim, Rational(0));
    for (std::size_t gi = 0; gi < G.elements.size(); ++gi) {
        // rho(g) * eps'(g . -) as a row vector
        for (std::size_t col = 0; col < dim; ++col) {
            Rational v = 0;
            for (std::size_t row = 0; row < dim; ++row)
                if (G.elements[gi](row, col) != 0 && eps_prime[row] != 0)
                    v += G.elements[gi](row, col) * eps_prime[row];
            eps[col] += Rational(G.rho[gi]) * v;
        }
    }
    const Rational scale(1, static_cast<unsigned long>(G.elements.size()));
    Rational on_mu = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        eps[i] *= scale;
        on_mu += eps[i] * mu[i];
    }
    if (on_mu == 0)
        throw std::domain_error(
            "averaging obstruction: no equivariant form with eps(mu) = 1");
    for (auto& x : eps) x /= on_mu;
    return eps;
}

} // namespace confspace

#endif
