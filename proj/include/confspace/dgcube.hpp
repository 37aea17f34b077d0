#ifndef CONFSPACE_DGCUBE_HPP
#define CONFSPACE_DGCUBE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chain_complex.hpp"

namespace confspace {

// Subsets of an abstract linearly ordered finite set E = {0, ..., ne-1},
// encoded as bitmasks.  pos(e : gamma) is 1-based.
inline int mask_pos(std::uint32_t mask, int e) {
    return __builtin_popcount(mask & ((2u << e) - 1));
}
inline int mask_size(std::uint32_t mask) { return __builtin_popcount(mask); }

// sgn(g : gamma) for a permutation g of E given by its image table.
inline int mask_sgn(const std::vector<int>& g, std::uint32_t mask) {
    std::vector<int> images;
    for (int e = 0; e < int(g.size()); ++e)
        if (mask >> e & 1) images.push_back(g[e]);
    int s = 1;
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (images[i] > images[j]) s = -s;
    return s;
}

inline std::uint32_t mask_act(const std::vector<int>& g, std::uint32_t mask) {
    std::uint32_t r = 0;
    for (int e = 0; e < int(g.size()); ++e)
        if (mask >> e & 1) r |= 1u << g[e];
    return r;
}

// An E-cubical diagram of bounded complexes: a module N(gamma) for every
// subset and a generator map N(gamma -> gamma \ e) for every e in gamma.
// Longer structure maps are composites; functoriality of all length-2
// composites is verified by check().
class CubicalDiagram {
public:
    explicit CubicalDiagram(int ne)
        : ne_(ne), modules_(std::size_t(1) << ne),
          gen_maps_(std::size_t(1) << ne) {
        if (ne < 0 || ne > 20) throw std::domain_error("bad edge set size");
    }

    int edge_count() const { return ne_; }
    std::size_t subsets() const { return std::size_t(1) << ne_; }

    void set_module(std::uint32_t mask, ChainComplexQ m) {
        modules_[mask] = std::move(m);
    }
    const ChainComplexQ& module(std::uint32_t mask) const {
        return modules_[mask];
    }

    void set_generator_map(std::uint32_t mask, int e, int degree, Matrix m) {
        if (!(mask >> e & 1))
            throw std::domain_error("generator map for edge not in subset");
        if (m.is_zero()) {
            auto it = gen_maps_[mask].find(e);
            if (it != gen_maps_[mask].end()) it->second.erase(degree);
        } else {
            gen_maps_[mask][e][degree] = std::move(m);
        }
    }

    Matrix generator_matrix(std::uint32_t mask, int e, int degree) const {
        auto it = gen_maps_[mask].find(e);
        if (it != gen_maps_[mask].end()) {
            auto jt = it->second.find(degree);
            if (jt != it->second.end()) return jt->second;
        }
        return Matrix(modules_[mask & ~(1u << e)].dim(degree),
                      modules_[mask].dim(degree));
    }

    // Verifies chain-map property of every generator map and commutation of
    // every length-2 square.  Throws with the failing composite.
    void check() const {
        for (std::uint32_t mask = 0; mask < subsets(); ++mask) {
            const ChainComplexQ& src = modules_[mask];
            for (int e = 0; e < ne_; ++e) {
                if (!(mask >> e & 1)) continue;
                const ChainComplexQ& dst = modules_[mask & ~(1u << e)];
                for (int n = src.min_degree() - 1; n <= src.max_degree(); ++n) {
                    Matrix lhs = dst.diff(n) * generator_matrix(mask, e, n);
                    Matrix rhs = generator_matrix(mask, e, n + 1) * src.diff(n);
                    if (lhs != rhs)
                        throw std::domain_error(
                            "cube map is not a chain map: subset " +
                            std::to_string(mask) + ", edge " +
                            std::to_string(e));
                }
                for (int f = 0; f < e; ++f) {
                    if (!(mask >> f & 1)) continue;
                    for (int n = src.min_degree(); n <= src.max_degree();
                         ++n) {
                        Matrix lhs =
                            generator_matrix(mask & ~(1u << e), f, n) *
                            generator_matrix(mask, e, n);
                        Matrix rhs =
                            generator_matrix(mask & ~(1u << f), e, n) *
                            generator_matrix(mask, f, n);
                        if (lhs != rhs)
                            throw std::domain_error(
                                "cube not functorial: subset " +
                                std::to_string(mask) + ", edges " +
                                std::to_string(e) + "," + std::to_string(f));
                    }
                }
            }
        }
    }

private:
    int ne_;
    std::vector<ChainComplexQ> modules_;
    std::vector<std::map<int, std::map<int, Matrix>>> gen_maps_;
};

// A group acting on a cube: a permutation of E per element together with
// the maps N(g, gamma) : N(gamma) -> N(g gamma).
struct CubeAction {
    std::vector<std::vector<int>> perms;                      // [g][e]
    std::vector<std::vector<std::map<int, Matrix>>> mats;     // [g][mask][deg]

    Matrix matrix(const CubicalDiagram& cube, std::size_t g,
                  std::uint32_t mask, int degree) const {
        auto it = mats[g][mask].find(degree);
        if (it != mats[g][mask].end()) return it->second;
        return Matrix(cube.module(mask_act(perms[g], mask)).dim(degree),
                      cube.module(mask).dim(degree));
    }
};

// The total cofibre: TotCof = sum over gamma of y_gamma N(gamma) with
// deg(y_gamma) = -|gamma|.  Keeps the block layout so elements and group
// actions can be addressed per (gamma, module basis vector).
struct TotalCofibre {
    ChainComplexQ complex;
    // block offset of y_mask N(mask) inside TotCof^degree
    std::map<std::pair<std::uint32_t, int>, std::size_t> offset;

    std::size_t block_offset(std::uint32_t mask, int degree) const {
        auto it = offset.find({mask, degree});
        if (it == offset.end())
            throw std::domain_error("no such block in total cofibre");
        return it->second;
    }
};

inline TotalCofibre total_cofibre(const CubicalDiagram& cube) {
    cube.check();
    TotalCofibre tc;
    // Degree window
    int lo = 1, hi = 0;
    for (std::uint32_t mask = 0; mask < cube.subsets(); ++mask) {
        const ChainComplexQ& mod = cube.module(mask);
        if (mod.empty()) continue;
        lo = std::min(lo, mod.min_degree() - mask_size(mask));
        hi = std::max(hi, mod.max_degree() - mask_size(mask));
    }
    for (int n = lo; n <= hi; ++n) {
        std::size_t dim = 0;
        for (std::uint32_t mask = 0; mask < cube.subsets(); ++mask) {
            const std::size_t b = cube.module(mask).dim(n + mask_size(mask));
            if (b) tc.offset[{mask, n}] = dim;
            dim += b;
        }
        tc.complex.set_dim(n, dim);
    }
    for (int n = lo - 1; n <= hi; ++n) {
        Matrix D(tc.complex.dim(n + 1), tc.complex.dim(n));
        for (std::uint32_t mask = 0; mask < cube.subsets(); ++mask) {
            const int g = mask_size(mask);
            const ChainComplexQ& mod = cube.module(mask);
            const std::size_t bdim = mod.dim(n + g);
            if (bdim == 0) continue;
            const std::size_t src_off = tc.offset.at({mask, n});
            // internal differential, with the (-1)^{|gamma|} twist
            Matrix dmat = mod.diff(n + g);
            if (!dmat.is_zero()) {
                const std::size_t dst_off = tc.offset.at({mask, n + 1});
                const Rational s = (g % 2) ? -1 : 1;
                for (std::size_t i = 0; i < dmat.rows(); ++i)
                    for (std::size_t j = 0; j < dmat.cols(); ++j)
                        if (dmat(i, j) != 0)
                            D(dst_off + i, src_off + j) = s * dmat(i, j);
            }
            // face maps
            for (int e = 0; e < cube.edge_count(); ++e) {
                if (!(mask >> e & 1)) continue;
                const std::uint32_t sub = mask & ~(1u << e);
                Matrix f = cube.generator_matrix(mask, e, n + g);
                if (f.is_zero()) continue;
                const std::size_t dst_off = tc.offset.at({sub, n + 1});
                const Rational s = (mask_pos(mask, e) % 2) ? -1 : 1;
                for (std::size_t i = 0; i < f.rows(); ++i)
                    for (std::size_t j = 0; j < f.cols(); ++j)
                        if (f(i, j) != 0)
                            D(dst_off + i, src_off + j) += s * f(i, j);
            }
        }
        tc.complex.set_diff(n, std::move(D));
    }
    int w;
    if (!tc.complex.check_d_squared(&w))
        throw std::domain_error("total cofibre D^2 != 0 in degree " +
                                std::to_string(w));
    return tc;
}

// Matrix of the action of group element g on TotCof^degree:
//   g . (y_gamma x) = sgn(g : gamma) y_{g gamma} N(g, gamma)(x).
inline Matrix totcof_action_matrix(const CubicalDiagram& cube,
                                   const CubeAction& act, std::size_t g,
                                   const TotalCofibre& tc, int degree) {
    Matrix M(tc.complex.dim(degree), tc.complex.dim(degree));
    for (std::uint32_t mask = 0; mask < cube.subsets(); ++mask) {
        const int sz = mask_size(mask);
        const std::size_t bdim = cube.module(mask).dim(degree + sz);
        if (bdim == 0) continue;
        const std::uint32_t img = mask_act(act.perms[g], mask);
        const int s = mask_sgn(act.perms[g], mask);
        Matrix am = act.matrix(cube, g, mask, degree + sz);
        const std::size_t src_off = tc.block_offset(mask, degree);
        const std::size_t dst_off = tc.block_offset(img, degree);
        for (std::size_t i = 0; i < am.rows(); ++i)
            for (std::size_t j = 0; j < am.cols(); ++j)
                if (am(i, j) != 0)
                    M(dst_off + i, src_off + j) = Rational(s) * am(i, j);
    }
    return M;
}

// Iterated mapping cone of M_r -> ... -> M_0 with vanishing composites:
// C = sum s^i M_i, D(s^i x) = (-1)^i s^i dx + s^{i-1} f_i(x).
// chain[i] is M_i; maps[i] gives f_i : M_i -> M_{i-1} per degree.
struct IteratedCone {
    ChainComplexQ complex;
    std::map<std::pair<int, int>, std::size_t> offset; // (i, totdeg) -> offset
};

inline IteratedCone iterated_mapping_cone(
    const std::vector<ChainComplexQ>& chain,
    const std::vector<std::map<int, Matrix>>& maps) {
    const int r = int(chain.size()) - 1;
    if (r < 0) throw std::domain_error("empty chain");
    auto fmat = [&](int i, int deg) {
        auto it = maps[i - 1].find(deg);
        if (it != maps[i - 1].end()) return it->second;
        return Matrix(chain[i - 1].dim(deg), chain[i].dim(deg));
    };
    // f_i must be chain maps with f_i f_{i+1} = 0
    for (int i = 1; i <= r; ++i)
        for (int n = chain[i].min_degree() - 1; n <= chain[i].max_degree();
             ++n) {
            if (chain[i - 1].diff(n) * fmat(i, n) !=
                fmat(i, n + 1) * chain[i].diff(n))
                throw std::domain_error("f_" + std::to_string(i) +
                                        " is not a chain map");
            if (i < r) {
                Matrix comp = fmat(i, n) * fmat(i + 1, n);
                if (!comp.is_zero())
                    throw std::domain_error(
                        "composite f_" + std::to_string(i) + " f_" +
                        std::to_string(i + 1) + " != 0 in degree " +
                        std::to_string(n));
            }
        }
    IteratedCone ic;
    int lo = 1, hi = 0;
    for (int i = 0; i <= r; ++i) {
        if (chain[i].empty()) continue;
        lo = std::min(lo, chain[i].min_degree() - i);
        hi = std::max(hi, chain[i].max_degree() - i);
    }
    for (int n = lo; n <= hi; ++n) {
        std::size_t dim = 0;
        for (int i = 0; i <= r; ++i) {
            const std::size_t b = chain[i].dim(n + i);
            if (b) ic.offset[{i, n}] = dim;
            dim += b;
        }
        ic.complex.set_dim(n, dim);
    }
    for (int n = lo - 1; n <= hi; ++n) {
        Matrix D(ic.complex.dim(n + 1), ic.complex.dim(n));
        for (int i = 0; i <= r; ++i) {
            const std::size_t bdim = chain[i].dim(n + i);
            if (bdim == 0) continue;
            const std::size_t src_off = ic.offset.at({i, n});
            Matrix dmat = chain[i].diff(n + i);
            if (!dmat.is_zero()) {
                const std::size_t dst_off = ic.offset.at({i, n + 1});
                const Rational s = (i % 2) ? -1 : 1;
                for (std::size_t a = 0; a < dmat.rows(); ++a)
                    for (std::size_t b = 0; b < dmat.cols(); ++b)
                        if (dmat(a, b) != 0)
                            D(dst_off + a, src_off + b) = s * dmat(a, b);
            }
            if (i > 0) {
                Matrix f = fmat(i, n + i);
                if (!f.is_zero()) {
                    const std::size_t dst_off = ic.offset.at({i - 1, n + 1});
                    for (std::size_t a = 0; a < f.rows(); ++a)
                        for (std::size_t b = 0; b < f.cols(); ++b)
                            if (f(a, b) != 0)
                                D(dst_off + a, src_off + b) += f(a, b);
                }
            }
        }
        ic.complex.set_diff(n, std::move(D));
    }
    return ic;
}

// The complex N_* associated to a cube (N_i = sum of N(gamma) over
// |gamma| = i, f_i alternating sums of face maps) together with the cone
// offsets needed to compare with the total cofibre.
struct CubeAssociatedComplex {
    std::vector<ChainComplexQ> chain;          // chain[i] = N_i
    std::vector<std::map<int, Matrix>> maps;   // maps[i-1] = f_i
    // offset of the N(mask) block inside N_{|mask|}, per degree
    std::map<std::pair<std::uint32_t, int>, std::size_t> offset;
};

inline CubeAssociatedComplex cube_associated_complex(
    const CubicalDiagram& cube) {
    const int r = cube.edge_count();
    CubeAssociatedComplex cc;
    cc.chain.resize(r + 1);
    cc.maps.resize(r);
    std::vector<std::vector<std::uint32_t>> by_size(r + 1);
    for (std::uint32_t mask = 0; mask < cube.subsets(); ++mask)
        by_size[mask_size(mask)].push_back(mask);
    for (int i = 0; i <= r; ++i) {
        std::map<int, std::size_t> dims;
        for (std::uint32_t mask : by_size[i]) {
            const ChainComplexQ& mod = cube.module(mask);
            for (int n = mod.min_degree(); n <= mod.max_degree(); ++n) {
                if (mod.dim(n) == 0) continue;
                cc.offset[{mask, n}] = dims[n];
                dims[n] += mod.dim(n);
            }
        }
        for (auto& [n, d] : dims) cc.chain[i].set_dim(n, d);
        // block-diagonal differential
        for (int n = cc.chain[i].min_degree() - 1;
             n <= cc.chain[i].max_degree(); ++n) {
            Matrix D(cc.chain[i].dim(n + 1), cc.chain[i].dim(n));
            for (std::uint32_t mask : by_size[i]) {
                const ChainComplexQ& mod = cube.module(mask);
                if (mod.dim(n) == 0) continue;
                Matrix d = mod.diff(n);
                if (d.is_zero()) continue;
                for (std::size_t a = 0; a < d.rows(); ++a)
                    for (std::size_t b = 0; b < d.cols(); ++b)
                        if (d(a, b) != 0)
                            D(cc.offset.at({mask, n + 1}) + a,
                              cc.offset.at({mask, n}) + b) = d(a, b);
            }
            cc.chain[i].set_diff(n, std::move(D));
        }
    }
    for (int i = 1; i <= r; ++i) {
        for (int n = cc.chain[i].min_degree(); n <= cc.chain[i].max_degree();
             ++n) {
            Matrix F(cc.chain[i - 1].dim(n), cc.chain[i].dim(n));
            for (std::uint32_t mask : by_size[i]) {
                if (cube.module(mask).dim(n) == 0) continue;
                for (int e = 0; e < r; ++e) {
                    if (!(mask >> e & 1)) continue;
                    Matrix f = cube.generator_matrix(mask, e, n);
                    if (f.is_zero()) continue;
                    const Rational s = (mask_pos(mask, e) % 2) ? -1 : 1;
                    const std::uint32_t sub = mask & ~(1u << e);
                    for (std::size_t a = 0; a < f.rows(); ++a)
                        for (std::size_t b = 0; b < f.cols(); ++b)
                            if (f(a, b) != 0)
                                F(cc.offset.at({sub, n}) + a,
                                  cc.offset.at({mask, n}) + b) +=
                                    s * f(a, b);
                }
            }
            if (!F.is_zero()) cc.maps[i - 1][n] = std::move(F);
        }
    }
    return cc;
}

// The canonical relabeling y_gamma x <-> s^{|gamma|} x between the total
// cofibre and the iterated mapping cone of the associated complex, checked
// to be a chain isomorphism.
inline ChainMap totcof_cone_isomorphism(const CubicalDiagram& cube,
                                        const TotalCofibre& tc,
                                        const CubeAssociatedComplex& cc,
                                        const IteratedCone& ic) {
    ChainMap iso;
    iso.source = tc.complex;
    iso.target = ic.complex;
    for (int n = tc.complex.min_degree(); n <= tc.complex.max_degree(); ++n) {
        Matrix M(ic.complex.dim(n), tc.complex.dim(n));
        for (std::uint32_t mask = 0; mask < cube.subsets(); ++mask) {
            const int i = mask_size(mask);
            const std::size_t bdim = cube.module(mask).dim(n + i);
            if (bdim == 0) continue;
            const std::size_t src = tc.block_offset(mask, n);
            const std::size_t dst =
                ic.offset.at({i, n}) + cc.offset.at({mask, n + i});
            for (std::size_t a = 0; a < bdim; ++a) M(dst + a, src + a) = 1;
        }
        iso.set_matrix(n, std::move(M));
    }
    int w;
    if (!iso.is_chain_map(&w))
        throw std::domain_error(
            "totcof/cone comparison fails in degree " + std::to_string(w));
    return iso;
}

inline bool acyclicity_check(const CubicalDiagram& cube) {
    return betti(total_cofibre(cube).complex).all_zero();
}

} // namespace confspace

#endif
