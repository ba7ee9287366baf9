#include "wfilt/complexes.hpp"

#include <algorithm>

namespace wfilt {

int CochainComplex::dim(int n) const {
    int i = n - n0;
    if (i < 0 || i >= static_cast<int>(dims.size())) return 0;
    return dims[i];
}

Matrix CochainComplex::d(int n) const {
    int i = n - n0;
    if (i < 0 || i >= static_cast<int>(ds.size())) return Matrix(ring, dim(n + 1), dim(n));
    return ds[i];
}

bool CochainComplex::operator==(const CochainComplex& o) const {
    if (ring != o.ring) return false;
    int lo = std::min(n0, o.n0), hi = std::max(n1(), o.n1());
    for (int n = lo; n <= hi; ++n) {
        if (dim(n) != o.dim(n)) return false;
        if (d(n) != o.d(n)) return false;
    }
    return true;
}

CochainComplex make_complex(Ring ring, int n0, std::vector<int> dims, std::vector<Matrix> ds) {
    if (ds.size() != dims.size())
        throw std::invalid_argument("complex: need one differential per stored degree");
    CochainComplex k{std::move(ring), n0, std::move(dims), std::move(ds)};
    for (size_t i = 0; i < k.dims.size(); ++i) {
        if (k.dims[i] < 0) throw std::invalid_argument("complex: negative rank");
        int next = (i + 1 < k.dims.size()) ? k.dims[i + 1] : 0;
        if (k.ds[i].rows != next || k.ds[i].cols != k.dims[i])
            throw std::invalid_argument("complex: differential shape mismatch at degree " +
                                        std::to_string(k.n0 + static_cast<int>(i)));
        if (k.ds[i].ring != k.ring) throw std::invalid_argument("complex: differential ring mismatch");
    }
    for (size_t i = 0; i + 1 < k.ds.size(); ++i)
        if (!k.ds[i + 1].mul(k.ds[i]).is_zero())
            throw std::invalid_argument("complex: d*d != 0 at degree " +
                                        std::to_string(k.n0 + static_cast<int>(i)));
    // trim zero degrees at both ends so support is canonical
    size_t lo = 0;
    while (lo < k.dims.size() && k.dims[lo] == 0) ++lo;
    size_t hi = k.dims.size();
    while (hi > lo && k.dims[hi - 1] == 0) --hi;
    if (lo > 0 || hi < k.dims.size()) {
        k.n0 += static_cast<int>(lo);
        k.dims = std::vector<int>(k.dims.begin() + lo, k.dims.begin() + hi);
        k.ds = std::vector<Matrix>(k.ds.begin() + lo, k.ds.begin() + hi);
        if (!k.ds.empty()) {
            Matrix& last = k.ds.back();
            last = Matrix(k.ring, 0, last.cols);
        }
    }
    return k;
}

CochainComplex formal_complex(Ring ring, int n0, const std::vector<int>& ranks) {
    std::vector<Matrix> ds;
    for (size_t i = 0; i < ranks.size(); ++i) {
        int next = (i + 1 < ranks.size()) ? ranks[i + 1] : 0;
        ds.emplace_back(ring, next, ranks[i]);
    }
    return make_complex(ring, n0, ranks, ds);
}

CochainComplex zero_complex(Ring ring) { return make_complex(std::move(ring), 0, {}, {}); }

Matrix ChainMap::f(int n) const {
    int i = n - m0;
    if (i < 0 || i >= static_cast<int>(fs.size()))
        return Matrix(source.ring, target.dim(n), source.dim(n));
    return fs[i];
}

ChainMap make_chain_map(CochainComplex source, CochainComplex target, int m0,
                        std::vector<Matrix> fs) {
    if (source.ring != target.ring) throw std::invalid_argument("chain map: ring mismatch");
    ChainMap f{std::move(source), std::move(target), m0, std::move(fs)};
    for (size_t i = 0; i < f.fs.size(); ++i) {
        int n = m0 + static_cast<int>(i);
        if (f.fs[i].rows != f.target.dim(n) || f.fs[i].cols != f.source.dim(n))
            throw std::invalid_argument("chain map: component shape mismatch at degree " +
                                        std::to_string(n));
    }
    int lo = std::min(f.source.n0, f.target.n0) - 1;
    int hi = std::max(f.source.n1(), f.target.n1()) + 1;
    for (int n = lo; n <= hi; ++n)
        if (f.f(n + 1).mul(f.source.d(n)) != f.target.d(n).mul(f.f(n)))
            throw std::invalid_argument("chain map: does not commute with d at degree " +
                                        std::to_string(n));
    return f;
}

ChainMap identity_map(const CochainComplex& k) {
    std::vector<Matrix> fs;
    for (int n = k.n0; n <= k.n1(); ++n) fs.push_back(Matrix::identity(k.ring, k.dim(n)));
    return make_chain_map(k, k, k.n0, fs);
}

ChainMap zero_map(const CochainComplex& source, const CochainComplex& target) {
    return make_chain_map(source, target, 0, {});
}

ChainMap compose(const ChainMap& outer, const ChainMap& inner) {
    if (outer.source != inner.target) throw std::invalid_argument("compose: middle mismatch");
    int lo = std::min(inner.source.n0, outer.target.n0);
    int hi = std::max(inner.source.n1(), outer.target.n1());
    std::vector<Matrix> fs;
    for (int n = lo; n <= hi; ++n) fs.push_back(outer.f(n).mul(inner.f(n)));
    return make_chain_map(inner.source, outer.target, lo, fs);
}

Subquotient cohomology(const CochainComplex& k, int n) {
    return Subquotient(kernel(k.d(n)), image(k.d(n - 1)));
}

ModulePresentation cohomology_presentation(const CochainComplex& k, int n) {
    return cohomology(k, n).presentation();
}

CochainComplex cone(const ChainMap& f) {
    const CochainComplex& K = f.source;
    const CochainComplex& L = f.target;
    const Ring& rg = K.ring;
    int lo = std::min(K.n0 - 1, L.n0), hi = std::max(K.n1() - 1, L.n1());
    std::vector<int> dims;
    std::vector<Matrix> ds;
    for (int n = lo; n <= hi; ++n) dims.push_back(K.dim(n + 1) + L.dim(n));
    for (int n = lo; n <= hi; ++n) {
        int rK = K.dim(n + 2), rL = L.dim(n + 1);
        int cK = K.dim(n + 1), cL = L.dim(n);
        Matrix m(rg, rK + rL, cK + cL);
        Matrix dK = K.d(n + 1), dL = L.d(n), fn = f.f(n + 1);
        for (int i = 0; i < rK; ++i)
            for (int j = 0; j < cK; ++j) m.at(i, j) = s_neg(rg, dK.at(i, j));
        for (int i = 0; i < rL; ++i)
            for (int j = 0; j < cK; ++j) m.at(rK + i, j) = s_neg(rg, fn.at(i, j));
        for (int i = 0; i < rL; ++i)
            for (int j = 0; j < cL; ++j) m.at(rK + i, cK + j) = dL.at(i, j);
        ds.push_back(m);
    }
    return make_complex(rg, lo, dims, ds);
}

CochainComplex shift(const CochainComplex& k, int r) {
    std::vector<int> dims;
    std::vector<Matrix> ds;
    int lo = k.n0 - r, hi = k.n1() - r;
    for (int n = lo; n <= hi; ++n) {
        dims.push_back(k.dim(n + r));
        Matrix d = k.d(n + r);
        ds.push_back(r % 2 == 0 ? d : d.neg());
    }
    return make_complex(k.ring, lo, dims, ds);
}

bool is_acyclic(const CochainComplex& k) {
    for (int n = k.n0; n <= k.n1(); ++n)
        if (!cohomology(k, n).presentation().is_zero()) return false;
    return true;
}

PresMap induced_on_cohomology(const ChainMap& f, int n) {
    return induced_map(f.f(n), cohomology(f.source, n), cohomology(f.target, n));
}

bool is_quasi_iso(const ChainMap& f) {
    int lo = std::min(f.source.n0, f.target.n0), hi = std::max(f.source.n1(), f.target.n1());
    for (int n = lo; n <= hi; ++n)
        if (!induced_iso(f.f(n), cohomology(f.source, n), cohomology(f.target, n))) return false;
    return true;
}

DirectSumResult direct_sum(const CochainComplex& a, const CochainComplex& b) {
    if (a.ring != b.ring) throw std::invalid_argument("direct sum: ring mismatch");
    const Ring& rg = a.ring;
    int lo = std::min(a.n0, b.n0), hi = std::max(a.n1(), b.n1());
    if (a.dims.empty() && b.dims.empty()) {
        CochainComplex z = zero_complex(rg);
        return DirectSumResult{z, zero_map(a, z), zero_map(b, z)};
    }
    std::vector<int> dims;
    std::vector<Matrix> ds;
    for (int n = lo; n <= hi; ++n) dims.push_back(a.dim(n) + b.dim(n));
    for (int n = lo; n <= hi; ++n) {
        Matrix da = a.d(n), db = b.d(n);
        Matrix m(rg, a.dim(n + 1) + b.dim(n + 1), a.dim(n) + b.dim(n));
        for (int i = 0; i < da.rows; ++i)
            for (int j = 0; j < da.cols; ++j) m.at(i, j) = da.at(i, j);
        for (int i = 0; i < db.rows; ++i)
            for (int j = 0; j < db.cols; ++j) m.at(a.dim(n + 1) + i, a.dim(n) + j) = db.at(i, j);
        ds.push_back(m);
    }
    CochainComplex total = make_complex(rg, lo, dims, ds);
    std::vector<Matrix> fl, fr;
    for (int n = lo; n <= hi; ++n) {
        Matrix il(rg, total.dim(n), a.dim(n));
        for (int i = 0; i < a.dim(n); ++i) il.at(i, i) = 1;
        fl.push_back(il);
        Matrix ir(rg, total.dim(n), b.dim(n));
        for (int i = 0; i < b.dim(n); ++i) ir.at(a.dim(n) + i, i) = 1;
        fr.push_back(ir);
    }
    return DirectSumResult{total, make_chain_map(a, total, lo, fl),
                           make_chain_map(b, total, lo, fr)};
}

SubcomplexResult subcomplex(const CochainComplex& k,
                            const std::vector<std::pair<int, Submodule>>& pieces) {
    auto piece = [&](int n) -> Submodule {
        for (const auto& [deg, s] : pieces)
            if (deg == n) return s;
        return Submodule::zero(k.ring, k.dim(n));
    };
    int lo = k.n0, hi = k.n1();
    std::vector<int> dims;
    std::vector<Matrix> ds;
    std::vector<Matrix> incs;
    for (int n = lo; n <= hi; ++n) {
        Submodule s = piece(n);
        if (s.ambient_rank != k.dim(n))
            throw std::invalid_argument("subcomplex: ambient rank mismatch at degree " +
                                        std::to_string(n));
        dims.push_back(s.rank());
        incs.push_back(s.gens.transpose());
    }
    for (int n = lo; n <= hi; ++n) {
        Submodule s = piece(n), t = piece(n + 1);
        Matrix dn(k.ring, t.rank(), s.rank());
        for (int j = 0; j < s.rank(); ++j) {
            Vec img = k.d(n).apply(s.gens.row(j));
            auto c = t.coords(img);
            if (!c)
                throw std::invalid_argument("subcomplex: family is not d-stable at degree " +
                                            std::to_string(n));
            for (int i = 0; i < t.rank(); ++i) dn.at(i, j) = (*c)[i];
        }
        ds.push_back(dn);
    }
    CochainComplex sub = make_complex(k.ring, lo, dims, ds);
    ChainMap inc = make_chain_map(sub, k, lo, incs);
    return SubcomplexResult{sub, inc};
}

GenModule PresComplex::cell(int n) const {
    int i = n - n0;
    if (i < 0 || i >= static_cast<int>(cells.size())) return GenModule::free_module(ring, 0);
    return cells[i];
}

Matrix PresComplex::d(int n) const {
    int i = n - n0;
    if (i < 0 || i >= static_cast<int>(ds.size()))
        return Matrix(ring, cell(n + 1).gen_count(), cell(n).gen_count());
    return ds[i];
}

Submodule PresComplex::rel(int n) const { return cell(n).rel(); }

bool PresComplex::operator==(const PresComplex& o) const {
    if (ring != o.ring) return false;
    int lo = std::min(n0, o.n0), hi = std::max(n1(), o.n1());
    for (int n = lo; n <= hi; ++n)
        if (cell(n) != o.cell(n) || d(n) != o.d(n)) return false;
    return true;
}

PresComplex make_pres_complex(Ring ring, int n0, std::vector<GenModule> cells,
                              std::vector<Matrix> ds) {
    if (ds.size() != cells.size())
        throw std::invalid_argument("presented complex: one differential per degree required");
    PresComplex p{std::move(ring), n0, std::move(cells), std::move(ds)};
    for (size_t i = 0; i < p.cells.size(); ++i) {
        int n = p.n0 + static_cast<int>(i);
        int next = (i + 1 < p.cells.size()) ? p.cells[i + 1].gen_count() : 0;
        if (p.ds[i].rows != next || p.ds[i].cols != p.cells[i].gen_count())
            throw std::invalid_argument("presented complex: differential shape mismatch at degree " +
                                        std::to_string(n));
        // well-defined on torsion generators
        for (int j = 0; j < p.cells[i].gen_count(); ++j) {
            const mpz_class& o = p.cells[i].orders[j];
            if (o == 0) continue;
            Vec col = p.ds[i].col(j);
            if (!p.rel(n + 1).contains(vec_scale(p.ring, Scalar(o), col)))
                throw std::invalid_argument(
                    "presented complex: differential not defined on torsion generator at degree " +
                    std::to_string(n));
        }
    }
    for (int n = p.n0; n <= p.n1(); ++n) {
        Matrix sq = p.d(n + 1).mul(p.d(n));
        for (int j = 0; j < sq.cols; ++j)
            if (!p.rel(n + 2).contains(sq.col(j)))
                throw std::invalid_argument("presented complex: d*d != 0 (mod relations) at degree " +
                                            std::to_string(n));
    }
    return p;
}

PresComplex to_pres_complex(const CochainComplex& k) {
    std::vector<GenModule> cells;
    for (int n = k.n0; n <= k.n1(); ++n) cells.push_back(GenModule::free_module(k.ring, k.dim(n)));
    return make_pres_complex(k.ring, k.n0, cells, k.ds);
}

Subquotient pres_cohomology(const PresComplex& p, int n) {
    Submodule num = preimage(p.d(n), p.rel(n + 1));
    Submodule den = sum(image(p.d(n - 1)), p.rel(n));
    return Subquotient(num, den);
}

bool pres_is_acyclic(const PresComplex& p) {
    for (int n = p.n0; n <= p.n1(); ++n)
        if (!pres_cohomology(p, n).presentation().is_zero()) return false;
    return true;
}

Matrix PresChainMap::f(int n) const {
    int i = n - m0;
    if (i < 0 || i >= static_cast<int>(fs.size()))
        return Matrix(source.ring, target.cell(n).gen_count(), source.cell(n).gen_count());
    return fs[i];
}

PresChainMap make_pres_chain_map(PresComplex source, PresComplex target, int m0,
                                 std::vector<Matrix> fs) {
    if (source.ring != target.ring) throw std::invalid_argument("pres chain map: ring mismatch");
    PresChainMap f{std::move(source), std::move(target), m0, std::move(fs)};
    for (size_t i = 0; i < f.fs.size(); ++i) {
        int n = m0 + static_cast<int>(i);
        if (f.fs[i].rows != f.target.cell(n).gen_count() ||
            f.fs[i].cols != f.source.cell(n).gen_count())
            throw std::invalid_argument("pres chain map: shape mismatch at degree " +
                                        std::to_string(n));
    }
    int lo = std::min(f.source.n0, f.target.n0) - 1;
    int hi = std::max(f.source.n1(), f.target.n1()) + 1;
    for (int n = lo; n <= hi; ++n) {
        // well-defined on torsion generators
        GenModule src = f.source.cell(n);
        for (int j = 0; j < src.gen_count(); ++j) {
            if (src.orders[j] == 0) continue;
            if (!f.target.rel(n).contains(vec_scale(f.source.ring, Scalar(src.orders[j]),
                                                    f.f(n).col(j))))
                throw std::invalid_argument("pres chain map: not defined on torsion at degree " +
                                            std::to_string(n));
        }
        // chain condition modulo relations
        Matrix diff = f.f(n + 1).mul(f.source.d(n)).sub(f.target.d(n).mul(f.f(n)));
        for (int j = 0; j < diff.cols; ++j)
            if (!f.target.rel(n + 1).contains(diff.col(j)))
                throw std::invalid_argument(
                    "pres chain map: does not commute with d (mod relations) at degree " +
                    std::to_string(n));
    }
    return f;
}

PresChainMap pres_compose(const PresChainMap& outer, const PresChainMap& inner) {
    if (!(outer.source == inner.target))
        throw std::invalid_argument("pres compose: middle mismatch");
    int lo = std::min(inner.source.n0, outer.target.n0);
    int hi = std::max(inner.source.n1(), outer.target.n1());
    std::vector<Matrix> fs;
    for (int n = lo; n <= hi; ++n) fs.push_back(outer.f(n).mul(inner.f(n)));
    return make_pres_chain_map(inner.source, outer.target, lo, fs);
}

PresComplex pres_cone(const PresChainMap& f) {
    const PresComplex& K = f.source;
    const PresComplex& L = f.target;
    const Ring& rg = K.ring;
    int lo = std::min(K.n0 - 1, L.n0), hi = std::max(K.n1() - 1, L.n1());
    std::vector<GenModule> cells;
    std::vector<Matrix> ds;
    for (int n = lo; n <= hi; ++n) cells.push_back(K.cell(n + 1).direct_sum(L.cell(n)));
    for (int n = lo; n <= hi; ++n) {
        int rK = K.cell(n + 2).gen_count(), rL = L.cell(n + 1).gen_count();
        int cK = K.cell(n + 1).gen_count(), cL = L.cell(n).gen_count();
        Matrix m(rg, rK + rL, cK + cL);
        Matrix dK = K.d(n + 1), dL = L.d(n), fn = f.f(n + 1);
        for (int i = 0; i < rK; ++i)
            for (int j = 0; j < cK; ++j) m.at(i, j) = s_neg(rg, dK.at(i, j));
        for (int i = 0; i < rL; ++i)
            for (int j = 0; j < cK; ++j) m.at(rK + i, j) = s_neg(rg, fn.at(i, j));
        for (int i = 0; i < rL; ++i)
            for (int j = 0; j < cL; ++j) m.at(rK + i, cK + j) = dL.at(i, j);
        ds.push_back(m);
    }
    return make_pres_complex(rg, lo, cells, ds);
}

bool pres_is_quasi_iso(const PresChainMap& f) {
    int lo = std::min(f.source.n0, f.target.n0), hi = std::max(f.source.n1(), f.target.n1());
    for (int n = lo; n <= hi; ++n)
        if (!induced_iso(f.f(n), pres_cohomology(f.source, n), pres_cohomology(f.target, n)))
            return false;
    return true;
}

PresDirectSumResult pres_direct_sum(const PresComplex& a, const PresComplex& b) {
    if (a.ring != b.ring) throw std::invalid_argument("pres direct sum: ring mismatch");
    const Ring& rg = a.ring;
    int lo = std::min(a.n0, b.n0), hi = std::max(a.n1(), b.n1());
    std::vector<GenModule> cells;
    std::vector<Matrix> ds;
    for (int n = lo; n <= hi; ++n) cells.push_back(a.cell(n).direct_sum(b.cell(n)));
    for (int n = lo; n <= hi; ++n) {
        Matrix da = a.d(n), db = b.d(n);
        Matrix m(rg, da.rows + db.rows, da.cols + db.cols);
        for (int i = 0; i < da.rows; ++i)
            for (int j = 0; j < da.cols; ++j) m.at(i, j) = da.at(i, j);
        for (int i = 0; i < db.rows; ++i)
            for (int j = 0; j < db.cols; ++j) m.at(da.rows + i, da.cols + j) = db.at(i, j);
        ds.push_back(m);
    }
    PresComplex total = make_pres_complex(rg, lo, cells, ds);
    std::vector<Matrix> fl, fr;
    for (int n = lo; n <= hi; ++n) {
        int ga = a.cell(n).gen_count(), gb = b.cell(n).gen_count();
        Matrix il(rg, ga + gb, ga);
        for (int i = 0; i < ga; ++i) il.at(i, i) = 1;
        fl.push_back(il);
        Matrix ir(rg, ga + gb, gb);
        for (int i = 0; i < gb; ++i) ir.at(ga + i, i) = 1;
        fr.push_back(ir);
    }
    return PresDirectSumResult{total, make_pres_chain_map(a, total, lo, fl),
                               make_pres_chain_map(b, total, lo, fr)};
}

PresChainMap pres_pair_into_sum(const PresChainMap& f, const PresChainMap& g,
                                const PresDirectSumResult& sum) {
    if (!(f.source == g.source)) throw std::invalid_argument("pair into sum: source mismatch");
    int lo = std::min(f.source.n0, sum.total.n0), hi = std::max(f.source.n1(), sum.total.n1());
    std::vector<Matrix> fs;
    for (int n = lo; n <= hi; ++n)
        fs.push_back(sum.left.f(n).mul(f.f(n)).add(sum.right.f(n).mul(g.f(n))));
    return make_pres_chain_map(f.source, sum.total, lo, fs);
}

PresChainMap pres_difference_from_sum(const PresChainMap& f, const PresChainMap& g,
                                      const PresDirectSumResult& sum) {
    if (!(f.target == g.target)) throw std::invalid_argument("difference from sum: target mismatch");
    int lo = std::min(sum.total.n0, f.target.n0), hi = std::max(sum.total.n1(), f.target.n1());
    std::vector<Matrix> fs;
    for (int n = lo; n <= hi; ++n) {
        int ga = sum.left.source.cell(n).gen_count();
        int gb = sum.right.source.cell(n).gen_count();
        Matrix m(f.source.ring, f.target.cell(n).gen_count(), ga + gb);
        Matrix mf = f.f(n), mg = g.f(n);
        for (int i = 0; i < mf.rows; ++i)
            for (int j = 0; j < ga; ++j) m.at(i, j) = mf.at(i, j);
        for (int i = 0; i < mg.rows; ++i)
            for (int j = 0; j < gb; ++j) m.at(i, ga + j) = s_neg(f.source.ring, mg.at(i, j));
        fs.push_back(m);
    }
    return make_pres_chain_map(sum.total, f.target, lo, fs);
}

}  // namespace wfilt
