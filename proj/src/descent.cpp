#include "wfilt/descent.hpp"

#include <bit>
#include <sstream>

namespace wfilt {

namespace {

std::string cell_str(int p, int q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

ModulePresentation SSResult::cell(int r, int p, int q) const {
    auto it = pages.find(r);
    if (it == pages.end()) return ModulePresentation{ring, 0, {}};
    auto cit = it->second.find({p, q});
    if (cit == it->second.end()) return ModulePresentation{ring, 0, {}};
    return cit->second;
}

GeneralWeightDatum make_general_weight_datum(GeneralWeightDatum d) {
    for (Subset a : all_vertices(d.n)) {
        if (!d.at.count(a)) throw std::invalid_argument("general weight datum: missing vertex");
        if (d.at.at(a).ring != d.ring)
            throw std::invalid_argument("general weight datum: vertex ring mismatch");
    }
    for (Subset a : all_vertices(d.n))
        for (int j = 0; j <= d.n; ++j) {
            if (a & (1u << j)) continue;
            Subset b = a | (1u << j);
            auto it = d.edges.find({a, b});
            if (it == d.edges.end())
                throw std::invalid_argument("general weight datum: missing edge");
        }
    // per-vertex and per-edge validation
    for (auto& [a, g] : d.at) (void)make_gysin_datum(g);
    for (auto& [key, m] : d.edges) (void)make_gysin_morphism(m);
    // edge squares must commute at the gysin_map level (n >= 2 cubes)
    for (Subset a : all_vertices(d.n))
        for (int j = 0; j <= d.n; ++j)
            for (int k = j + 1; k <= d.n; ++k) {
                if ((a & (1u << j)) || (a & (1u << k))) continue;
                Subset aj = a | (1u << j), ak = a | (1u << k), ajk = aj | (1u << k);
                int qmax = d.at.at(a).max_degree();
                for (int q = 0; q <= qmax; ++q) {
                    PresChainMap left =
                        pres_compose(gysin_map(d.edges.at({aj, ajk}), q),
                                     gysin_map(d.edges.at({a, aj}), q));
                    PresChainMap right =
                        pres_compose(gysin_map(d.edges.at({ak, ajk}), q),
                                     gysin_map(d.edges.at({a, ak}), q));
                    for (int p = left.source.n0; p <= left.source.n1(); ++p)
                        if (left.f(p) != right.f(p))
                            throw std::invalid_argument(
                                "general weight datum: edge squares do not commute");
                }
            }
    return d;
}

Matrix SquareCohomologyDatum::map_at(const std::map<int, Matrix>& fam, const GradedModule& src,
                                     const GradedModule& tgt, int q) const {
    auto it = fam.find(q);
    if (it == fam.end()) return Matrix(ring, tgt.rank(q), src.rank(q));
    return it->second;
}

SquareCohomologyDatum make_square_datum(SquareCohomologyDatum s) {
    auto check_family = [&](const std::map<int, Matrix>& fam, const GradedModule& src,
                            const GradedModule& tgt, const char* name) {
        for (auto& [q, m] : fam) {
            if (m.ring != s.ring)
                throw std::invalid_argument(std::string("square datum: ring mismatch in ") + name);
            if (m.rows != tgt.rank(q) || m.cols != src.rank(q))
                throw std::invalid_argument(std::string("square datum: shape mismatch in ") + name +
                                            " at degree " + std::to_string(q));
        }
    };
    check_family(s.f, s.hx, s.hxt, "f*");
    check_family(s.i, s.hx, s.hy, "i*");
    check_family(s.j, s.hxt, s.hyt, "j*");
    check_family(s.g, s.hy, s.hyt, "g*");
    // pullback squares commute degreewise
    int qmax = 0;
    for (auto& [k, part] : s.hx.parts) qmax = std::max(qmax, k);
    for (auto& [k, part] : s.hyt.parts) qmax = std::max(qmax, k);
    for (int q = 0; q <= qmax; ++q) {
        Matrix left = s.map_at(s.j, s.hxt, s.hyt, q).mul(s.map_at(s.f, s.hx, s.hxt, q));
        Matrix right = s.map_at(s.g, s.hy, s.hyt, q).mul(s.map_at(s.i, s.hx, s.hy, q));
        Matrix diff = left.sub(right);
        for (int c = 0; c < diff.cols; ++c)
            if (!s.hyt.at(q).rel().contains(diff.col(c)))
                throw std::invalid_argument("square datum: pullback square does not commute at q = " +
                                            std::to_string(q));
    }
    return s;
}

namespace {

// Fill an SSResult from a chain-level filtered complex: pages E_1..E_stable,
// abutment filtration recentered by the given rule.
SSResult chain_level_result(const FilteredComplex& fk, const std::string& label,
                            RecenterRule rule) {
    SSResult out;
    out.ring = fk.ring();
    out.label = label;
    auto st = stabilize(fk);
    out.r_stable = std::max(1, st.r_stable);
    for (int r = 1; r <= out.r_stable; ++r) {
        SSPage pg = page(fk, r);
        for (auto& [key, cell] : pg.cells) {
            ModulePresentation pres = cell.sq.presentation();
            if (!pres.is_zero()) out.pages[r][key] = pres;
            if (!cell.d.is_zero_map()) out.diffs[r][key] = cell.d;
        }
    }
    for (int n = fk.carrier.n0; n <= fk.carrier.n1(); ++n)
        out.filt.emplace(n, recenter(abutment_filtration(fk, n), rule));
    return out;
}

ModulePresentation sum_presentations(const Ring& rg, const std::vector<ModulePresentation>& parts) {
    GenModule acc{rg, {}};
    for (const auto& p : parts) acc = acc.direct_sum(GenModule::from_presentation(p));
    return acc.canonical();
}

// Read the filtration on H^n off the E_2 page cells: the recentered weight of
// a cell (p, q) is q, so W_k H^n accumulates the cells with q <= k. This is
// the declared E_2-degeneration reading used by page-level assemblies.
void page_level_filtration(SSResult& out) {
    std::map<int, std::map<int, std::vector<ModulePresentation>>> by_degree;  // n -> q -> cells
    auto it = out.pages.find(2);
    if (it == out.pages.end()) return;
    for (auto& [key, pres] : it->second) {
        auto [p, q] = key;
        by_degree[p + q][q].push_back(pres);
    }
    int nmax = 0;
    for (auto& [n, rows] : by_degree) nmax = std::max(nmax, n);
    for (int n = 0; n <= nmax; ++n) {
        FiltrationOnCohomology f;
        f.ring = out.ring;
        f.n = n;
        f.recentered = true;
        f.offset = n;
        f.letter = "W";
        auto rows = by_degree.count(n) ? by_degree.at(n) : std::map<int, std::vector<ModulePresentation>>{};
        int kmin = 0, kmax = 0;
        if (!rows.empty()) {
            kmin = rows.begin()->first;
            kmax = rows.rbegin()->first;
        }
        std::vector<ModulePresentation> acc;
        // leading zero step for the bound check
        FiltrationOnCohomology::Step zero_step;
        zero_step.p = kmin - 1;
        zero_step.sub = ModulePresentation{out.ring, 0, {}};
        zero_step.graded = ModulePresentation{out.ring, 0, {}};
        f.steps.push_back(zero_step);
        for (int k = kmin; k <= kmax; ++k) {
            FiltrationOnCohomology::Step st;
            st.p = k;
            if (rows.count(k)) {
                st.graded = sum_presentations(out.ring, rows.at(k));
                for (const auto& c : rows.at(k)) acc.push_back(c);
            } else {
                st.graded = ModulePresentation{out.ring, 0, {}};
            }
            st.sub = sum_presentations(out.ring, acc);
            f.steps.push_back(st);
        }
        f.total = sum_presentations(out.ring, acc);
        out.filt.emplace(n, f);
    }
}

}  // namespace

SSResult singularity_ss(const ResolutionDatum& r) {
    if (r.diagram.has_value()) {
        FilteredComplex fk = simple_r(with_trivial_filtrations(*r.diagram), 1);
        return chain_level_result(fk, "singularity", RecenterRule::Singularity);
    }
    if (!r.page_level.has_value())
        throw std::invalid_argument("resolution datum: neither chain-level nor page-level data");

    const PageLevelDatum& d = *r.page_level;
    SSResult out;
    out.ring = d.ring;
    out.label = "singularity (page-level)";
    out.page_level = true;
    out.r_stable = 2;
    out.warnings.push_back("page-level input: E_2 read under the degeneration assumption");
    // rows q: complexes in p with the supplied d_1
    std::map<int, std::pair<int, int>> row_range;  // q -> [pmin, pmax]
    for (auto& [key, cell] : d.cells) {
        auto [p, q] = key;
        if (!row_range.count(q))
            row_range[q] = {p, p};
        else {
            row_range[q].first = std::min(row_range[q].first, p);
            row_range[q].second = std::max(row_range[q].second, p);
        }
    }
    for (auto& [q, range] : row_range) {
        auto [plo, phi] = range;
        std::vector<GenModule> cells;
        std::vector<Matrix> ds;
        auto cell_at = [&](int p) {
            auto it = d.cells.find({p, q});
            return it == d.cells.end() ? GenModule::free_module(d.ring, 0) : it->second;
        };
        for (int p = plo; p <= phi; ++p) cells.push_back(cell_at(p));
        for (int p = plo; p <= phi; ++p) {
            auto it = d.d1.find({p, q});
            Matrix m = it != d.d1.end()
                           ? it->second
                           : Matrix(d.ring, cell_at(p + 1).gen_count(), cell_at(p).gen_count());
            if (p == phi) m = Matrix(d.ring, 0, cell_at(p).gen_count());
            ds.push_back(m);
        }
        PresComplex row = make_pres_complex(d.ring, plo, cells, ds);
        for (int p = plo; p <= phi; ++p) {
            ModulePresentation e1 = cell_at(p).canonical();
            if (!e1.is_zero()) out.pages[1][{p, q}] = e1;
            ModulePresentation e2 = pres_cohomology(row, p).presentation();
            if (!e2.is_zero()) out.pages[2][{p, q}] = e2;
        }
    }
    page_level_filtration(out);
    for (auto& [n, f] : out.filt) f.letter = "L";
    return out;
}

SSResult weight_compact(const ResolutionDatum& r) {
    SSResult out = singularity_ss(r);
    out.label = out.page_level ? "weight (compact, page-level)" : "weight (compact)";
    for (auto& [n, f] : out.filt) f.letter = "W";
    return out;
}

namespace {

void weight_rows_from(const std::map<int, PresComplex>& rows, SSResult& out) {
    for (auto& [q, row] : rows) {
        for (int p = row.n0; p <= row.n1(); ++p) {
            ModulePresentation e1 = row.cell(p).canonical();
            if (!e1.is_zero()) out.pages[1][{p, q}] = e1;
            ModulePresentation e2 = pres_cohomology(row, p).presentation();
            if (!e2.is_zero()) out.pages[2][{p, q}] = e2;
        }
    }
}

}  // namespace

SSResult weight_smooth(const GysinDatum& g, const std::optional<GradedModule>& expected_h) {
    GysinDatum checked = make_gysin_datum(g);
    SSResult out;
    out.ring = g.ring;
    out.label = "weight (smooth)";
    out.page_level = true;
    out.r_stable = 2;
    out.warnings.push_back("Gysin rows are the E_1 page; E_2 read under the degeneration assumption");
    std::map<int, PresComplex> rows;
    for (int q = 0; q <= checked.max_degree(); ++q) rows.emplace(q, gysin_complex(checked, q));
    weight_rows_from(rows, out);
    page_level_filtration(out);
    if (expected_h.has_value()) {
        for (auto& [n, f] : out.filt) {
            ModulePresentation expect = expected_h->at(n).canonical();
            if (!(f.total == expect))
                out.warnings.push_back(
                    "expected H^" + std::to_string(n) + " = " + expect.str() +
                    " but the E_2 reading totals " + f.total.str() +
                    "; the spectral sequence may not degenerate at E_2");
        }
        for (auto& [k, part] : expected_h->parts) {
            if (!out.filt.count(k) && part.gen_count() > 0)
                out.warnings.push_back("expected H^" + std::to_string(k) +
                                       " nonzero but no E_2 cells on that degree");
        }
    }
    return out;
}

SSResult weight_general(const GeneralWeightDatum& d0) {
    GeneralWeightDatum d = make_general_weight_datum(d0);
    SSResult out;
    out.ring = d.ring;
    out.label = "weight (general)";
    out.page_level = true;
    out.r_stable = 2;
    out.warnings.push_back("Gysin rows are the E_1 page; E_2 read under the degeneration assumption");

    int qmax = 0;
    for (auto& [a, g] : d.at) qmax = std::max(qmax, g.max_degree());

    std::map<int, PresComplex> rows;
    for (int q = 0; q <= qmax; ++q) {
        // diagram of Gysin rows with gysin_map cofaces, totaled with the
        // cubical signs: summand a sits shifted by its weight
        std::map<Subset, PresComplex> vert;
        std::map<std::pair<Subset, Subset>, PresChainMap> cof;
        for (Subset a : all_vertices(d.n)) vert.emplace(a, gysin_complex(d.at.at(a), q));
        for (auto& [key, m] : d.edges) cof.emplace(key, gysin_map(m, q));

        int lo = 0, hi = 0;
        bool any = false;
        for (Subset a : all_vertices(d.n)) {
            const PresComplex& v = vert.at(a);
            int w = subset_weight(a);
            if (!any) { lo = v.n0 + w; hi = v.n1() + w; any = true; }
            else { lo = std::min(lo, v.n0 + w); hi = std::max(hi, v.n1() + w); }
        }
        std::vector<GenModule> cells;
        std::vector<Matrix> ds;
        auto offsets = [&](int m) {
            std::map<Subset, int> off;
            int acc = 0;
            for (Subset a : all_vertices(d.n)) {
                off[a] = acc;
                acc += vert.at(a).cell(m - subset_weight(a)).gen_count();
            }
            return std::make_pair(off, acc);
        };
        for (int m = lo; m <= hi; ++m) {
            GenModule cell{d.ring, {}};
            for (Subset a : all_vertices(d.n))
                cell = cell.direct_sum(vert.at(a).cell(m - subset_weight(a)));
            cells.push_back(cell);
        }
        for (int m = lo; m <= hi; ++m) {
            auto [soff, scnt] = offsets(m);
            auto [toff, tcnt] = offsets(m + 1);
            if (m == hi) tcnt = 0;
            Matrix dm(d.ring, tcnt, scnt);
            if (m < hi) {
                for (Subset a : all_vertices(d.n)) {
                    int w = subset_weight(a);
                    Matrix di = vert.at(a).d(m - w);
                    for (int i = 0; i < di.rows; ++i)
                        for (int j2 = 0; j2 < di.cols; ++j2) {
                            Scalar v = di.at(i, j2);
                            if (w % 2 != 0) v = s_neg(d.ring, v);
                            dm.at(toff[a] + i, soff[a] + j2) = v;
                        }
                    for (int j2 = 0; j2 <= d.n; ++j2) {
                        if (a & (1u << j2)) continue;
                        Subset b = a | (1u << j2);
                        Matrix fm = cof.at({a, b}).f(m - w);
                        int sign = coface_sign(a, j2);
                        for (int i = 0; i < fm.rows; ++i)
                            for (int c = 0; c < fm.cols; ++c) {
                                Scalar v = fm.at(i, c);
                                if (sign < 0) v = s_neg(d.ring, v);
                                dm.at(toff[b] + i, soff[a] + c) =
                                    s_add(d.ring, dm.at(toff[b] + i, soff[a] + c), v);
                            }
                    }
                }
            }
            ds.push_back(dm);
        }
        rows.emplace(q, make_pres_complex(d.ring, lo, cells, ds));
    }
    weight_rows_from(rows, out);
    page_level_filtration(out);
    return out;
}

MVVerdict mayer_vietoris_check(const SquareCohomologyDatum& s0) {
    SquareCohomologyDatum s = make_square_datum(s0);
    MVVerdict out;
    const Ring& rg = s.ring;
    int qmax = 0;
    for (auto& gm : {s.hx, s.hxt, s.hy, s.hyt})
        for (auto& [k, part] : gm.parts) qmax = std::max(qmax, k);
    for (int q = 0; q <= qmax; ++q) {
        MVVerdict::PerDegree row;
        row.q = q;
        GenModule a = s.hx.at(q);
        GenModule mid = s.hxt.at(q).direct_sum(s.hy.at(q));
        GenModule c = s.hyt.at(q);
        // phi = (f, -i), psi = j + g
        Matrix mf = s.map_at(s.f, s.hx, s.hxt, q);
        Matrix mi = s.map_at(s.i, s.hx, s.hy, q);
        Matrix mj = s.map_at(s.j, s.hxt, s.hyt, q);
        Matrix mg = s.map_at(s.g, s.hy, s.hyt, q);
        Matrix phi(rg, mid.gen_count(), a.gen_count());
        for (int i2 = 0; i2 < mf.rows; ++i2)
            for (int j2 = 0; j2 < mf.cols; ++j2) phi.at(i2, j2) = mf.at(i2, j2);
        for (int i2 = 0; i2 < mi.rows; ++i2)
            for (int j2 = 0; j2 < mi.cols; ++j2)
                phi.at(mf.rows + i2, j2) = s_neg(rg, mi.at(i2, j2));
        Matrix psi = mj.hstack(mg);

        Submodule rel_a = a.rel(), rel_mid = mid.rel(), rel_c = c.rel();
        row.injective = (preimage(phi, rel_mid) == rel_a);
        row.middle = (preimage(psi, rel_c) == sum(image(phi), rel_mid));
        row.surjective = sum(image(psi), rel_c).is_full();
        out.rows.push_back(row);
    }
    return out;
}

bool MVVerdict::pass() const {
    for (const auto& r : rows)
        if (!r.pass()) return false;
    return true;
}

SquareCohomologyDatum blowup_synthesize(const GradedModule& hx, const GradedModule& hy, int m,
                                        const std::map<int, Matrix>& chern,
                                        const std::optional<std::map<int, Matrix>>& restriction) {
    if (m < 1) throw std::invalid_argument("blowup_synthesize: codimension must be >= 1");
    if (hx.ring != hy.ring) throw std::invalid_argument("blowup_synthesize: ring mismatch");
    const Ring& rg = hx.ring;
    // chern: cup with c_{m-1}(E): H^q(Y) -> H^{q+2(m-1)}(Y); degree-consistent
    for (auto& [q, mat] : chern)
        if (mat.cols != hy.rank(q) || mat.rows != hy.rank(q + 2 * (m - 1)))
            throw std::invalid_argument("blowup_synthesize: chern action degree mismatch");

    int qmax = 0;
    for (auto& [k, part] : hx.parts) qmax = std::max(qmax, k);
    for (auto& [k, part] : hy.parts) qmax = std::max(qmax, k + 2 * (m - 1));

    std::map<int, Matrix> restr;
    if (restriction.has_value()) {
        restr = *restriction;
        for (auto& [q, mat] : restr)
            if (mat.cols != hx.rank(q) || mat.rows != hy.rank(q))
                throw std::invalid_argument("blowup_synthesize: restriction shape mismatch");
    } else {
        // canonical unit map in degree 0
        if (hx.rank(0) >= 1 && hy.rank(0) >= 1) {
            Matrix unit(rg, hy.rank(0), hx.rank(0));
            for (int i2 = 0; i2 < std::min(unit.rows, unit.cols); ++i2) unit.at(i2, i2) = 1;
            restr.emplace(0, unit);
        }
    }

    SquareCohomologyDatum out;
    out.ring = rg;
    out.hx = hx;
    out.hy = hy;
    // H^q(Yt) = sum_{k=0..m-1} H^{q-2k}(Y); H^q(Xt) = H^q(X) + sum_{k=1..m-1}
    for (int q = 0; q <= qmax; ++q) {
        GenModule yt{rg, {}};
        for (int k = 0; k < m; ++k) yt = yt.direct_sum(hy.at(q - 2 * k));
        if (yt.gen_count() > 0) out.hyt.parts.emplace(q, yt);
        GenModule xt = hx.at(q);
        for (int k = 1; k < m; ++k) xt = xt.direct_sum(hy.at(q - 2 * k));
        if (xt.gen_count() > 0) out.hxt.parts.emplace(q, xt);
    }
    out.hxt.ring = rg;
    out.hyt.ring = rg;
    for (int q = 0; q <= qmax; ++q) {
        int nx = hx.rank(q);
        int nxt = out.hxt.rank(q), nyt = out.hyt.rank(q), ny = hy.rank(q);
        // f: include H(X) in H(Xt)
        if (nx > 0 || nxt > 0) {
            Matrix f(rg, nxt, nx);
            for (int i2 = 0; i2 < nx; ++i2) f.at(i2, i2) = 1;
            out.f.emplace(q, f);
        }
        // g: include H(Y) as the k = 0 summand
        if (ny > 0 || nyt > 0) {
            Matrix g(rg, nyt, ny);
            for (int i2 = 0; i2 < ny; ++i2) g.at(i2, i2) = 1;
            out.g.emplace(q, g);
        }
        // i: the restriction
        auto it = restr.find(q);
        if (it != restr.end()) out.i.emplace(q, it->second);
        // j: on H(X): i* into the k=0 summand; on the k-summand (k >= 1):
        // -1 onto the same summand of H(Yt)
        if (nxt > 0 || nyt > 0) {
            Matrix j(rg, nyt, nxt);
            Matrix iq = it != restr.end() ? it->second : Matrix(rg, ny, nx);
            for (int r2 = 0; r2 < iq.rows; ++r2)
                for (int c2 = 0; c2 < iq.cols; ++c2) j.at(r2, c2) = iq.at(r2, c2);
            int col = nx;
            int row = ny;
            for (int k = 1; k < m; ++k) {
                int cnt = hy.rank(q - 2 * k);
                for (int t = 0; t < cnt; ++t)
                    j.at(row + t, col + t) = canon(rg, Scalar(-1));
                col += cnt;
                row += cnt;
            }
            out.j.emplace(q, j);
        }
    }
    return make_square_datum(out);
}

E2CompareVerdict e2_compare(const SSResult& a, const SSResult& b) {
    E2CompareVerdict out;
    if (a.ring != b.ring) {
        out.cells_equal = false;
        out.detail = "ring mismatch";
        return out;
    }
    auto cells_of = [](const SSResult& s) {
        auto it = s.pages.find(2);
        return it == s.pages.end() ? std::map<SSResult::CellKey, ModulePresentation>{} : it->second;
    };
    auto ca = cells_of(a), cb = cells_of(b);
    for (auto& [key, pres] : ca) {
        auto it = cb.find(key);
        ModulePresentation other =
            it == cb.end() ? ModulePresentation{a.ring, 0, {}} : it->second;
        if (!(pres == other)) {
            out.cells_equal = false;
            out.detail = "E_2 cells differ at " + cell_str(key.first, key.second) + ": " +
                         pres.str() + " vs " + other.str();
            return out;
        }
    }
    for (auto& [key, pres] : cb)
        if (!ca.count(key) && !pres.is_zero()) {
            out.cells_equal = false;
            out.detail = "E_2 cells differ at " + cell_str(key.first, key.second);
            return out;
        }
    // recentered filtrations agree degreewise
    std::map<int, char> degrees;
    for (auto& [n, f] : a.filt) degrees[n] = 1;
    for (auto& [n, f] : b.filt) degrees[n] = 1;
    for (auto& [n, unused] : degrees) {
        FiltrationOnCohomology empty_a;
        empty_a.ring = a.ring;
        empty_a.n = n;
        empty_a.total = ModulePresentation{a.ring, 0, {}};
        const FiltrationOnCohomology& fa = a.filt.count(n) ? a.filt.at(n) : empty_a;
        FiltrationOnCohomology empty_b;
        empty_b.ring = b.ring;
        empty_b.n = n;
        empty_b.total = ModulePresentation{b.ring, 0, {}};
        const FiltrationOnCohomology& fb = b.filt.count(n) ? b.filt.at(n) : empty_b;
        if (!(fa.total == fb.total)) {
            out.filtrations_equal = false;
            out.detail = "totals differ at degree " + std::to_string(n);
            return out;
        }
        for (int k = -1; k <= 2 * n + 1; ++k)
            if (!(fa.step(k) == fb.step(k)) || !(fa.graded(k) == fb.graded(k))) {
                out.filtrations_equal = false;
                out.detail = "filtration steps differ at degree " + std::to_string(n) +
                             ", weight " + std::to_string(k);
                return out;
            }
    }
    return out;
}

bool filtration_bounds_ok(const FiltrationOnCohomology& f, RecenterRule rule) {
    if (!f.recentered) return false;
    int top = rule == RecenterRule::Singularity ? f.n : 2 * f.n;
    if (!f.step(-1).is_zero()) return false;
    if (!(f.step(top) == f.total)) return false;
    return true;
}

}  // namespace wfilt
