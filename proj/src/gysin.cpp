#include "wfilt/gysin.hpp"

#include <bit>

namespace wfilt {

GenModule GradedModule::at(int k) const {
    auto it = parts.find(k);
    if (it == parts.end()) return GenModule::free_module(ring, 0);
    return it->second;
}

GradedModule GradedModule::shifted(int by) const {
    GradedModule out{ring, {}};
    for (auto& [k, g] : parts) out.parts.emplace(k + by, g);
    return out;
}

GradedModule free_graded(const Ring& rg, int k0, const std::vector<int>& ranks) {
    GradedModule out{rg, {}};
    for (size_t i = 0; i < ranks.size(); ++i)
        if (ranks[i] > 0)
            out.parts.emplace(k0 + static_cast<int>(i), GenModule::free_module(rg, ranks[i]));
    return out;
}

const GradedModule& GysinDatum::h(Stratum s) const {
    auto it = strata.find(s);
    if (it == strata.end()) throw std::invalid_argument("gysin datum: unknown stratum");
    return it->second;
}

Matrix GysinDatum::gysin_matrix(Stratum i, Stratum j, int k) const {
    int rows = has_stratum(i) ? h(i).rank(k + shift()) : 0;
    int cols = has_stratum(j) ? h(j).rank(k) : 0;
    auto it = gysin.find({i, j});
    if (it == gysin.end()) return Matrix(ring, rows, cols);
    auto dit = it->second.find(k);
    if (dit == it->second.end()) return Matrix(ring, rows, cols);
    return dit->second;
}

int GysinDatum::max_degree() const {
    int top = 0;
    for (auto& [s, gm] : strata)
        for (auto& [k, part] : gm.parts)
            if (part.gen_count() > 0) top = std::max(top, k + shift() * std::popcount(s));
    return top;
}

GysinDatum make_gysin_datum(GysinDatum g) {
    if (g.num_components < 0) throw std::invalid_argument("gysin datum: negative N");
    if (g.real_mode && !(g.ring.kind == RingKind::PrimeField && g.ring.p == 2))
        throw std::invalid_argument("gysin datum: real mode requires Z/2 coefficients");
    if (!g.has_stratum(0u)) throw std::invalid_argument("gysin datum: missing ambient stratum");
    for (auto& [s, gm] : g.strata) {
        if (gm.ring != g.ring) throw std::invalid_argument("gysin datum: stratum ring mismatch");
        if (s >= (1u << g.num_components))
            throw std::invalid_argument("gysin datum: stratum out of range");
        // downward closed
        for (int b = 0; b < g.num_components; ++b)
            if ((s & (1u << b)) && !g.strata.count(s & ~(1u << b)))
                throw std::invalid_argument("gysin datum: strata are not downward closed");
    }
    for (auto& [key, mats] : g.gysin) {
        auto [i, j] = key;
        if (!g.has_stratum(i) || !g.has_stratum(j))
            throw std::invalid_argument("gysin datum: map between unknown strata");
        if ((i & j) != i || std::popcount(j) != std::popcount(i) + 1)
            throw std::invalid_argument("gysin datum: maps must be indexed by covering pairs");
        for (auto& [k, m] : mats) {
            if (m.ring != g.ring) throw std::invalid_argument("gysin datum: matrix ring mismatch");
            if (m.rows != g.h(i).rank(k + g.shift()) || m.cols != g.h(j).rank(k))
                throw std::invalid_argument("gysin datum: matrix shape mismatch");
        }
    }
    // d*d = 0 for every relevant q (gysin_complex construction validates)
    int qmax = 0;
    for (auto& [s, gm] : g.strata)
        for (auto& [k, part] : gm.parts) qmax = std::max(qmax, k + g.shift() * g.num_components);
    for (int q = 0; q <= qmax; ++q) (void)gysin_complex(g, q);
    return g;
}

std::map<Stratum, int> gysin_offsets(const GysinDatum& g, int q, int p) {
    std::map<Stratum, int> out;
    int off = 0;
    for (auto& [s, gm] : g.strata) {
        if (std::popcount(s) != -p) continue;
        out[s] = off;
        off += gm.rank(q + g.shift() * p);
    }
    return out;
}

PresComplex gysin_complex(const GysinDatum& g, int q) {
    int lo = -g.num_components, hi = 0;
    std::vector<GenModule> cells;
    std::vector<Matrix> ds;
    for (int p = lo; p <= hi; ++p) {
        GenModule cell{g.ring, {}};
        for (auto& [s, gm] : g.strata)
            if (std::popcount(s) == -p) cell = cell.direct_sum(gm.at(q + g.shift() * p));
        cells.push_back(cell);
    }
    for (int p = lo; p <= hi; ++p) {
        int rows = (p + 1 <= hi) ? cells[static_cast<size_t>(p + 1 - lo)].gen_count() : 0;
        Matrix dm(g.ring, rows, cells[static_cast<size_t>(p - lo)].gen_count());
        if (p + 1 <= hi) {
            auto soff = gysin_offsets(g, q, p);
            auto toff = gysin_offsets(g, q, p + 1);
            for (auto& [j, joff] : soff) {
                // drop one index from j
                for (int b = 0; b < g.num_components; ++b) {
                    if (!(j & (1u << b))) continue;
                    Stratum i = j & ~(1u << b);
                    if (!g.has_stratum(i)) continue;
                    Matrix comp = g.gysin_matrix(i, j, q + g.shift() * p);
                    // sign by the position of the dropped index inside i
                    Stratum below = i & ((1u << b) - 1u);
                    int sign = (std::popcount(below) % 2 == 0) ? 1 : -1;
                    for (int r = 0; r < comp.rows; ++r)
                        for (int c = 0; c < comp.cols; ++c) {
                            Scalar v = comp.at(r, c);
                            if (sign < 0) v = s_neg(g.ring, v);
                            dm.at(toff.at(i) + r, joff + c) =
                                s_add(g.ring, dm.at(toff.at(i) + r, joff + c), v);
                        }
                }
            }
        }
        ds.push_back(dm);
    }
    return make_pres_complex(g.ring, lo, cells, ds);
}

Matrix GysinMorphismDatum::pullback_matrix(Stratum i, Stratum j, int k) const {
    int rows = source.has_stratum(j) ? source.h(j).rank(k) : 0;
    int cols = target.has_stratum(i) ? target.h(i).rank(k) : 0;
    auto it = pullbacks.find({i, j});
    if (it == pullbacks.end()) return Matrix(source.ring, rows, cols);
    auto dit = it->second.find(k);
    if (dit == it->second.end()) return Matrix(source.ring, rows, cols);
    return dit->second;
}

GysinMorphismDatum make_gysin_morphism(GysinMorphismDatum m) {
    if (m.source.ring != m.target.ring)
        throw std::invalid_argument("gysin morphism: ring mismatch");
    if (m.source.real_mode != m.target.real_mode)
        throw std::invalid_argument("gysin morphism: mode mismatch");
    if (m.multiplicity.rows != m.target.num_components ||
        m.multiplicity.cols != m.source.num_components)
        throw std::invalid_argument("gysin morphism: multiplicity shape mismatch");
    for (const auto& e : m.multiplicity.e) {
        if (sgn(e) < 0 || e.get_den() != 1)
            throw std::invalid_argument("gysin morphism: multiplicities must be >= 0 integers");
    }
    for (auto& [key, mats] : m.pullbacks) {
        auto [i, j] = key;
        if (std::popcount(i) != std::popcount(j))
            throw std::invalid_argument("gysin morphism: carried pairs need |I| = |J|");
        if (!m.target.has_stratum(i) || !m.source.has_stratum(j))
            throw std::invalid_argument("gysin morphism: carried pair of unknown strata");
        for (auto& [k, mat] : mats)
            if (mat.rows != m.source.h(j).rank(k) || mat.cols != m.target.h(i).rank(k))
                throw std::invalid_argument("gysin morphism: pullback shape mismatch");
    }
    if (!m.pullbacks.count({0u, 0u}))
        throw std::invalid_argument("gysin morphism: missing ambient pullback");
    return m;
}

Scalar multiplicity_minor(const GysinMorphismDatum& m, Stratum i, Stratum j) {
    std::vector<int> rows, cols;
    for (int b = 0; b < m.target.num_components; ++b)
        if (i & (1u << b)) rows.push_back(b);
    for (int b = 0; b < m.source.num_components; ++b)
        if (j & (1u << b)) cols.push_back(b);
    if (rows.size() != cols.size()) throw std::invalid_argument("minor: |I| != |J|");
    int n = static_cast<int>(rows.size());
    if (n == 0) return Scalar(1);
    Matrix minor(m.multiplicity.ring, n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) minor.at(a, b) = m.multiplicity.at(rows[a], cols[b]);
    return canon(m.source.ring, determinant(minor));
}

PresChainMap gysin_map(const GysinMorphismDatum& m, int q) {
    PresComplex src = gysin_complex(m.target, q);   // G^q(X,U)
    PresComplex tgt = gysin_complex(m.source, q);   // G^q(X',U')
    const Ring& rg = m.source.ring;
    int lo = std::min(src.n0, tgt.n0), hi = std::max(src.n1(), tgt.n1());
    std::vector<Matrix> fs;
    for (int p = lo; p <= hi; ++p) {
        auto soff = gysin_offsets(m.target, q, p);
        auto toff = gysin_offsets(m.source, q, p);
        Matrix f(rg, tgt.cell(p).gen_count(), src.cell(p).gen_count());
        int k = q + m.target.shift() * p;
        for (auto& [key, mats] : m.pullbacks) {
            auto [i, j] = key;
            if (std::popcount(i) != -p) continue;
            Scalar minor = multiplicity_minor(m, i, j);
            if (is_zero(minor)) continue;
            Matrix comp = m.pullback_matrix(i, j, k);
            for (int r = 0; r < comp.rows; ++r)
                for (int c = 0; c < comp.cols; ++c)
                    f.at(toff.at(j) + r, soff.at(i) + c) =
                        s_mul(rg, minor, comp.at(r, c));
        }
        fs.push_back(f);
    }
    return make_pres_chain_map(src, tgt, lo, fs);
}

GysinSquare make_gysin_square(GysinSquare s) {
    s.f = make_gysin_morphism(s.f);
    s.i = make_gysin_morphism(s.i);
    s.j = make_gysin_morphism(s.j);
    s.g = make_gysin_morphism(s.g);
    return s;
}

bool gysin_square_total_acyclic(const GysinSquare& s, int q) {
    PresChainMap gf = gysin_map(s.f, q);  // G(X) -> G(Xt)
    PresChainMap gi = gysin_map(s.i, q);  // G(X) -> G(Y)
    PresChainMap gj = gysin_map(s.j, q);  // G(Xt) -> G(Yt)
    PresChainMap gg = gysin_map(s.g, q);  // G(Y) -> G(Yt)
    PresDirectSumResult mid = pres_direct_sum(gf.target, gi.target);
    PresChainMap phi = pres_pair_into_sum(gf, gi, mid);
    PresChainMap psi = pres_difference_from_sum(gj, gg, mid);
    PresComplex cphi = pres_cone(phi);
    // (a, b) -> psi(b) out of the cone; the chain condition checked by the
    // factory is exactly psi o phi = 0
    int lo = std::min(cphi.n0, psi.target.n0), hi = std::max(cphi.n1(), psi.target.n1());
    std::vector<Matrix> fs;
    for (int m = lo; m <= hi; ++m) {
        int acnt = phi.source.cell(m + 1).gen_count();
        Matrix pm = psi.f(m);
        Matrix f(s.x.ring, pm.rows, acnt + pm.cols);
        for (int r = 0; r < pm.rows; ++r)
            for (int c = 0; c < pm.cols; ++c) f.at(r, acnt + c) = pm.at(r, c);
        fs.push_back(f);
    }
    PresChainMap chi = make_pres_chain_map(cphi, psi.target, lo, fs);
    return pres_is_acyclic(pres_cone(chi));
}

bool gysin_blowdown_quasi_iso(const GysinMorphismDatum& f, int q) {
    return pres_is_quasi_iso(gysin_map(f, q));
}

}  // namespace wfilt
