#ifndef CONFSPACE_CHAIN_COMPLEX_HPP
#define CONFSPACE_CHAIN_COMPLEX_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace confspace {

// A bounded cochain complex of finite-dimensional Q-vector spaces with a
// degree +1 differential.  Degrees may be negative (suspensions, duals).
class ChainComplexQ {
public:
    ChainComplexQ() = default;

    void set_dim(int degree, std::size_t dim) {
        if (dim > 0) dims_[degree] = dim;
    }

    std::size_t dim(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }

    // d_n : C^n -> C^{n+1}; rows = dim(n+1), cols = dim(n).
    void set_diff(int degree, Matrix d) {
        if (d.rows() != dim(degree + 1) || d.cols() != dim(degree))
            throw std::invalid_argument("differential shape mismatch in degree " +
                                        std::to_string(degree));
        if (!d.is_zero()) diffs_[degree] = std::move(d);
    }

    Matrix diff(int degree) const {
        auto it = diffs_.find(degree);
        if (it != diffs_.end()) return it->second;
        return Matrix(dim(degree + 1), dim(degree));
    }

    int min_degree() const {
        return dims_.empty() ? 0 : dims_.begin()->first;
    }
    int max_degree() const {
        return dims_.empty() ? 0 : dims_.rbegin()->first;
    }
    bool empty() const { return dims_.empty(); }

    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto& [deg, d] : dims_) t += d;
        return t;
    }

    // Degree of the first d^2 != 0 failure, or nullopt-style flag.
    bool check_d_squared(int* witness = nullptr) const {
        for (int n = min_degree() - 1; n <= max_degree(); ++n) {
            if ((diff(n + 1) * diff(n)).is_zero()) continue;
            if (witness) *witness = n;
            return false;
        }
        return true;
    }

private:
    std::map<int, std::size_t> dims_;
    std::map<int, Matrix> diffs_;
};

// A degree 0 chain map between complexes, one matrix per degree.
struct ChainMap {
    ChainComplexQ source, target;
    std::map<int, Matrix> mats;

    Matrix matrix(int degree) const {
        auto it = mats.find(degree);
        if (it != mats.end()) return it->second;
        return Matrix(target.dim(degree), source.dim(degree));
    }

    void set_matrix(int degree, Matrix m) {
        if (m.rows() != target.dim(degree) || m.cols() != source.dim(degree))
            throw std::invalid_argument("chain map shape mismatch in degree " +
                                        std::to_string(degree));
        if (!m.is_zero()) mats[degree] = std::move(m);
    }

    bool is_chain_map(int* witness = nullptr) const {
        const int lo = std::min(source.min_degree(), target.min_degree()) - 1;
        const int hi = std::max(source.max_degree(), target.max_degree());
        for (int n = lo; n <= hi; ++n) {
            Matrix lhs = target.diff(n) * matrix(n);
            Matrix rhs = matrix(n + 1) * source.diff(n);
            if (lhs != rhs) {
                if (witness) *witness = n;
                return false;
            }
        }
        return true;
    }
};

struct BettiTable {
    std::map<int, std::size_t> b;

    std::size_t operator[](int degree) const {
        auto it = b.find(degree);
        return it == b.end() ? 0 : it->second;
    }
    bool operator==(const BettiTable& o) const { return b == o.b; }
    bool all_zero() const {
        for (auto& [deg, v] : b)
            if (v) return false;
        return true;
    }
    long euler() const {
        long e = 0;
        for (auto& [deg, v] : b) e += (deg % 2 ? -1L : 1L) * long(v);
        return e;
    }
};

inline BettiTable betti(const ChainComplexQ& c) {
    int w;
    if (!c.check_d_squared(&w))
        throw std::domain_error("d^2 != 0 in degree " + std::to_string(w));
    BettiTable t;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        if (c.dim(n) == 0) continue;
        std::size_t b = c.dim(n) - rank(c.diff(n)) - rank(c.diff(n - 1));
        if (b) t.b[n] = b;
    }
    return t;
}

inline long euler_characteristic(const ChainComplexQ& c) {
    long e = 0;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n)
        e += (n % 2 ? -1L : 1L) * long(c.dim(n));
    return e;
}

// --- standard constructions -------------------------------------------------

// (s^j M)^i = M^{i+j}, d(s^j x) = (-1)^j s^j dx.
inline ChainComplexQ suspend(const ChainComplexQ& m, int j) {
    ChainComplexQ r;
    for (int n = m.min_degree(); n <= m.max_degree(); ++n)
        r.set_dim(n - j, m.dim(n));
    const Rational sign = (j % 2 == 0) ? 1 : -1;
    for (int n = m.min_degree() - 1; n <= m.max_degree(); ++n)
        r.set_diff(n - j, m.diff(n) * sign);
    return r;
}

// (#M)^n = Hom(M^{-n}, Q), (d phi)(x) = -(-1)^{deg phi} phi(dx).
inline ChainComplexQ dualize(const ChainComplexQ& m) {
    ChainComplexQ r;
    for (int n = m.min_degree(); n <= m.max_degree(); ++n)
        r.set_dim(-n, m.dim(n));
    for (int n = -m.max_degree(); n <= -m.min_degree(); ++n) {
        // d_#^n is (a sign times) the transpose of d_M^{-n-1}.
        const Rational sign = (n % 2 == 0) ? -1 : 1;
        r.set_diff(n, m.diff(-n - 1).transpose() * sign);
    }
    return r;
}

// C(f) = N + sM with d(y, sx) = (dy + f x, -s dx); f must be a chain map.
inline ChainComplexQ cone(const ChainMap& f) {
    int w;
    if (!f.is_chain_map(&w))
        throw std::domain_error("cone: not a chain map in degree " +
                                std::to_string(w));
    const ChainComplexQ &m = f.source, &n = f.target;
    ChainComplexQ r;
    const int lo = std::min(n.min_degree(), m.min_degree() - 1);
    const int hi = std::max(n.max_degree(), m.max_degree() - 1);
    for (int deg = lo; deg <= hi; ++deg)
        r.set_dim(deg, n.dim(deg) + m.dim(deg + 1));
    for (int deg = lo - 1; deg <= hi; ++deg) {
        Matrix d(r.dim(deg + 1), r.dim(deg));
        Matrix dn = n.diff(deg), fm = f.matrix(deg + 1), dm = m.diff(deg + 1);
        for (std::size_t i = 0; i < dn.rows(); ++i)
            for (std::size_t j = 0; j < dn.cols(); ++j) d(i, j) = dn(i, j);
        for (std::size_t i = 0; i < fm.rows(); ++i)
            for (std::size_t j = 0; j < fm.cols(); ++j)
                d(i, n.dim(deg) + j) = fm(i, j);
        for (std::size_t i = 0; i < dm.rows(); ++i)
            for (std::size_t j = 0; j < dm.cols(); ++j)
                d(n.dim(deg + 1) + i, n.dim(deg) + j) = -dm(i, j);
        r.set_diff(deg, std::move(d));
    }
    return r;
}

inline bool is_quasi_iso(const ChainMap& f) {
    return betti(cone(f)).all_zero();
}

// Subcomplex spanned per degree by the columns of spans[n] (coordinates in
// C^n).  The span must be closed under d; throws otherwise.
inline ChainComplexQ restrict_to_span(const ChainComplexQ& c,
                                      const std::map<int, Matrix>& spans) {
    std::map<int, Matrix> bases;
    for (auto& [n, s] : spans)
        if (s.cols() > 0) {
            Matrix b = column_space(s);
            if (b.cols() > 0) bases[n] = std::move(b);
        }
    ChainComplexQ r;
    for (auto& [n, b] : bases) r.set_dim(n, b.cols());
    for (auto& [n, b] : bases) {
        Matrix img = c.diff(n) * b;
        auto it = bases.find(n + 1);
        if (it == bases.end()) {
            if (!img.is_zero())
                throw std::domain_error(
                    "span not closed under d in degree " + std::to_string(n));
            continue;
        }
        Matrix d(it->second.cols(), b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::vector<Rational> col(img.rows()), x;
            for (std::size_t i = 0; i < img.rows(); ++i) col[i] = img(i, j);
            if (!solve(it->second, col, x))
                throw std::domain_error(
                    "span not closed under d in degree " + std::to_string(n));
            for (std::size_t i = 0; i < x.size(); ++i) d(i, j) = x[i];
        }
        r.set_diff(n, std::move(d));
    }
    return r;
}

// --- filtered complexes and spectral sequences ------------------------------

// A decreasing filtration C = F^0 >= F^1 >= ... >= F^P >= F^{P+1} = 0,
// each level given per degree by a spanning-set matrix (columns are
// coordinate vectors in the ambient C^n).
struct Filtration {
    // levels[p] maps degree -> spanning matrix of F^p C^degree; level 0
    // must span the whole complex.
    std::vector<std::map<int, Matrix>> levels;

    Matrix span_of(std::size_t p, int degree, const ChainComplexQ& c) const {
        if (p >= levels.size()) return Matrix(c.dim(degree), 0); // F^{>P} = 0
        auto it = levels[p].find(degree);
        if (it == levels[p].end()) return Matrix(c.dim(degree), 0);
        return it->second;
    }
};

namespace detail {

// span of { x : d x in col(U) }, where d : C^n -> C^{n+1}.
inline Matrix preimage(const Matrix& d, const Matrix& u) {
    Matrix k = kernel(d.augment(u)); // pairs (x, y) with d x + U y = 0
    Matrix x(d.cols(), k.cols());
    for (std::size_t i = 0; i < d.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) x(i, j) = k(i, j);
    return x;
}

inline std::size_t span_dim(const Matrix& u) { return rank(u); }

} // namespace detail

// One page of a spectral sequence: dims[(p, n)] = dim E_r^{p, n-p} indexed
// by filtration level p and total degree n.
struct SpectralPage {
    int r = 0;
    std::map<std::pair<int, int>, std::size_t> dims;

    bool operator==(const SpectralPage& o) const { return dims == o.dims; }
    std::size_t total(int degree) const {
        std::size_t t = 0;
        for (auto& [pn, d] : dims)
            if (pn.second == degree) t += d;
        return t;
    }
};

// Pages E_0, E_1, ... of the filtered complex, computed until two
// consecutive pages agree beyond the filtration length.  Requires the
// filtration to be preserved by d (rejected with a witness otherwise) and
// level 0 to span the whole complex.
inline std::vector<SpectralPage> spectral_pages(const ChainComplexQ& c,
                                                const Filtration& f) {
    const int P = int(f.levels.size());
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        if (detail::span_dim(f.span_of(0, n, c)) != c.dim(n))
            throw std::domain_error("filtration level 0 does not span degree " +
                                    std::to_string(n));
        for (int p = 0; p < P; ++p) {
            // d F^p <= F^p
            Matrix img = c.diff(n) * f.span_of(p, n, c);
            Matrix fp = f.span_of(p, n + 1, c);
            if (rank(fp) != rank(fp.augment(img)))
                throw std::domain_error(
                    "filtration not d-stable at level " + std::to_string(p) +
                    ", degree " + std::to_string(n));
        }
    }

    auto clamp_span = [&](int p, int degree) {
        if (p < 0) p = 0;
        return f.span_of(std::size_t(p), degree, c);
    };
    // Z_r^{p,n} = F^p C^n  intersect  d^{-1}(F^{p+r} C^{n+1})
    auto z_span = [&](int r, int p, int n) {
        Matrix fp = clamp_span(p, n);
        if (p + r <= 0) return fp; // F^{p+r} is everything
        Matrix pre = detail::preimage(c.diff(n), clamp_span(p + r, n + 1));
        if (fp.cols() == 0) return fp;
        Matrix k = kernel(fp.augment(pre * Rational(-1)));
        Matrix a(fp.cols(), k.cols());
        for (std::size_t i = 0; i < fp.cols(); ++i)
            for (std::size_t j = 0; j < k.cols(); ++j) a(i, j) = k(i, j);
        return fp * a;
    };

    std::vector<SpectralPage> pages;
    for (int r = 0;; ++r) {
        SpectralPage page;
        page.r = r;
        for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
            for (int p = 0; p <= P; ++p) {
                Matrix z = z_span(r, p, n);
                // denominator: Z_{r-1}^{p+1,n} + d Z_{r-1}^{p-r+1,n-1}
                Matrix den = z_span(r - 1, p + 1, n)
                                 .augment(c.diff(n - 1) *
                                          z_span(r - 1, p - r + 1, n - 1));
                // dim E = dim Z - dim(Z cap den) = dim(Z+den) - dim den
                std::size_t e = detail::span_dim(z.augment(den)) -
                                detail::span_dim(den);
                if (e) page.dims[{p, n}] = e;
            }
        }
        pages.push_back(std::move(page));
        const std::size_t np = pages.size();
        if (np >= 2 && int(np) > P + 1 &&
            pages[np - 1].dims == pages[np - 2].dims)
            break;
        if (r > P + 4) break; // safety; differentials vanish past P
    }
    return pages;
}

} // namespace confspace

#endif
