#include "wfilt/cubical.hpp"

#include <bit>

namespace wfilt {

int subset_card(Subset a) { return std::popcount(a); }
int subset_weight(Subset a) { return std::popcount(a) - 1; }

int coface_sign(Subset a, int j) {
    Subset below = a & ((1u << j) - 1u);
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

std::vector<Subset> all_vertices(int n) {
    std::vector<Subset> out;
    for (Subset a = 1; a < (1u << (n + 1)); ++a) out.push_back(a);
    return out;
}

const ChainMap& ComplexDiagram::coface(Subset a, Subset b) const {
    auto it = cofaces.find({a, b});
    if (it == cofaces.end()) throw std::invalid_argument("diagram: missing coface");
    return it->second;
}

const ChainMap& FilteredDiagram::coface(Subset a, Subset b) const {
    auto it = cofaces.find({a, b});
    if (it == cofaces.end()) throw std::invalid_argument("diagram: missing coface");
    return it->second;
}

namespace {

template <class Diagram>
void check_shape(const Diagram& d) {
    if (d.n < 0) throw std::invalid_argument("diagram: negative cube dimension");
    for (Subset a : all_vertices(d.n))
        if (!d.at.count(a)) throw std::invalid_argument("diagram: missing vertex");
    if (d.at.size() != all_vertices(d.n).size())
        throw std::invalid_argument("diagram: extra vertices");
    for (Subset a : all_vertices(d.n))
        for (int j = 0; j <= d.n; ++j) {
            if (a & (1u << j)) continue;
            Subset b = a | (1u << j);
            if (!d.cofaces.count({a, b})) throw std::invalid_argument("diagram: missing coface");
        }
}

void check_squares(const ComplexDiagram& d) {
    for (Subset a : all_vertices(d.n))
        for (int j = 0; j <= d.n; ++j)
            for (int k = j + 1; k <= d.n; ++k) {
                if ((a & (1u << j)) || (a & (1u << k))) continue;
                Subset aj = a | (1u << j), ak = a | (1u << k), ajk = aj | (1u << k);
                ChainMap left = compose(d.coface(aj, ajk), d.coface(a, aj));
                ChainMap right = compose(d.coface(ak, ajk), d.coface(a, ak));
                int lo = left.source.n0, hi = left.source.n1();
                for (int m = lo; m <= hi; ++m)
                    if (left.f(m) != right.f(m))
                        throw std::invalid_argument("diagram: coface square does not commute");
            }
}

}  // namespace

ComplexDiagram make_complex_diagram(Ring ring, int n, std::map<Subset, CochainComplex> at,
                                    std::map<std::pair<Subset, Subset>, ChainMap> cofaces) {
    ComplexDiagram d{std::move(ring), n, std::move(at), std::move(cofaces)};
    check_shape(d);
    for (auto& [a, k] : d.at)
        if (k.ring != d.ring) throw std::invalid_argument("diagram: vertex ring mismatch");
    for (auto& [key, f] : d.cofaces) {
        if (f.source != d.at.at(key.first) || f.target != d.at.at(key.second))
            throw std::invalid_argument("diagram: coface endpoints mismatch");
    }
    check_squares(d);
    return d;
}

FilteredDiagram make_filtered_diagram(Ring ring, int n, std::map<Subset, FilteredComplex> at,
                                      std::map<std::pair<Subset, Subset>, ChainMap> cofaces) {
    FilteredDiagram d{std::move(ring), n, std::move(at), std::move(cofaces)};
    check_shape(d);
    for (auto& [a, fk] : d.at)
        if (fk.ring() != d.ring) throw std::invalid_argument("diagram: vertex ring mismatch");
    // cofaces are chain maps of the carriers, compatible with the filtrations
    for (auto& [key, f] : d.cofaces) {
        const FilteredComplex& src = d.at.at(key.first);
        const FilteredComplex& tgt = d.at.at(key.second);
        if (f.source != src.carrier || f.target != tgt.carrier)
            throw std::invalid_argument("diagram: coface endpoints mismatch");
        for (int p = std::min(src.pmin, tgt.pmin) - 1; p <= std::max(src.pmax, tgt.pmax); ++p)
            for (int m = src.carrier.n0; m <= src.carrier.n1(); ++m)
                if (!tgt.w(p, m).contains(apply(f.f(m), src.w(p, m))))
                    throw std::invalid_argument("diagram: coface not filtration compatible");
    }
    check_squares(forget_filtrations(d));
    return d;
}

ComplexDiagram forget_filtrations(const FilteredDiagram& d) {
    ComplexDiagram out;
    out.ring = d.ring;
    out.n = d.n;
    for (auto& [a, fk] : d.at) out.at.emplace(a, fk.carrier);
    out.cofaces = d.cofaces;
    return out;
}

FilteredDiagram with_trivial_filtrations(const ComplexDiagram& d) {
    std::map<Subset, FilteredComplex> at;
    for (auto& [a, k] : d.at) at.emplace(a, trivial_filtration(k));
    return make_filtered_diagram(d.ring, d.n, at, d.cofaces);
}

FilteredDiagram decalage_diagram(const FilteredDiagram& d) {
    std::map<Subset, FilteredComplex> at;
    for (auto& [a, fk] : d.at) at.emplace(a, decalage(fk));
    return make_filtered_diagram(d.ring, d.n, at, d.cofaces);
}

std::map<Subset, int> simple_offsets(const ComplexDiagram& d, int m) {
    std::map<Subset, int> out;
    int off = 0;
    for (Subset a : all_vertices(d.n)) {
        out[a] = off;
        off += d.at.at(a).dim(m - subset_weight(a));
    }
    return out;
}

CochainComplex simple(const ComplexDiagram& d) {
    int lo = 0, hi = -1;
    bool any = false;
    for (auto& [a, k] : d.at) {
        if (k.dims.empty()) continue;
        int w = subset_weight(a);
        if (!any) {
            lo = k.n0 + w;
            hi = k.n1() + w;
            any = true;
        } else {
            lo = std::min(lo, k.n0 + w);
            hi = std::max(hi, k.n1() + w);
        }
    }
    if (!any) return zero_complex(d.ring);

    std::vector<int> dims;
    std::vector<Matrix> ds;
    for (int m = lo; m <= hi; ++m) {
        int total = 0;
        for (auto& [a, k] : d.at) total += k.dim(m - subset_weight(a));
        dims.push_back(total);
    }
    for (int m = lo; m <= hi; ++m) {
        auto src_off = simple_offsets(d, m);
        auto tgt_off = simple_offsets(d, m + 1);
        int rows = 0;
        for (auto& [a, k] : d.at) rows += k.dim(m + 1 - subset_weight(a));
        int cols = dims[static_cast<size_t>(m - lo)];
        Matrix dm(d.ring, rows, cols);
        for (Subset a : all_vertices(d.n)) {
            const CochainComplex& k = d.at.at(a);
            int w = subset_weight(a);
            int deg = m - w;
            // internal differential with sign (-1)^w
            Matrix di = k.d(deg);
            for (int i = 0; i < di.rows; ++i)
                for (int j = 0; j < di.cols; ++j) {
                    Scalar v = di.at(i, j);
                    if (w % 2 != 0) v = s_neg(d.ring, v);
                    dm.at(tgt_off[a] + i, src_off[a] + j) = v;
                }
            // cofaces into a u {j}
            for (int j = 0; j <= d.n; ++j) {
                if (a & (1u << j)) continue;
                Subset b = a | (1u << j);
                Matrix fm = d.coface(a, b).f(deg);
                int sign = coface_sign(a, j);
                for (int i = 0; i < fm.rows; ++i)
                    for (int c = 0; c < fm.cols; ++c) {
                        Scalar v = fm.at(i, c);
                        if (sign < 0) v = s_neg(d.ring, v);
                        dm.at(tgt_off[b] + i, src_off[a] + c) =
                            s_add(d.ring, dm.at(tgt_off[b] + i, src_off[a] + c), v);
                    }
            }
        }
        ds.push_back(dm);
    }
    return make_complex(d.ring, lo, dims, ds);
}

FilteredComplex simple_r(const FilteredDiagram& d, int r) {
    if (r < 0) throw std::invalid_argument("simple_r: r must be >= 0");
    ComplexDiagram plain = forget_filtrations(d);
    CochainComplex carrier = simple(plain);
    if (carrier.dims.empty()) return trivial_filtration(carrier);

    int pmin = 0, pmax = 0;
    bool first = true;
    for (auto& [a, fk] : d.at) {
        int shift = r * subset_weight(a);
        if (first) {
            pmin = fk.pmin - shift;
            pmax = fk.pmax - shift;
            first = false;
        } else {
            pmin = std::min(pmin, fk.pmin - shift);
            pmax = std::max(pmax, fk.pmax - shift);
        }
    }

    std::vector<std::vector<Submodule>> steps;
    for (int p = pmin; p <= pmax; ++p) {
        std::vector<Submodule> level;
        for (int m = carrier.n0; m <= carrier.n1(); ++m) {
            auto off = simple_offsets(plain, m);
            std::vector<Vec> gens;
            int total = carrier.dim(m);
            for (Subset a : all_vertices(d.n)) {
                const FilteredComplex& fk = d.at.at(a);
                int w = subset_weight(a);
                Submodule s = fk.w(p + r * w, m - w);
                for (int i = 0; i < s.gens.rows; ++i) {
                    Vec row(total, Scalar(0));
                    for (int j = 0; j < s.gens.cols; ++j) row[off[a] + j] = s.gens.at(i, j);
                    gens.push_back(row);
                }
            }
            level.push_back(
                Submodule(d.ring, total, Matrix::from_rows(d.ring, total, gens)));
        }
        steps.push_back(level);
    }
    return make_filtered(carrier, pmin, pmax, steps);
}

AugmentedComplexDiagram make_augmented(CochainComplex base, ComplexDiagram diagram,
                                       std::map<int, ChainMap> aug) {
    AugmentedComplexDiagram a{std::move(base), std::move(diagram), std::move(aug)};
    for (int i = 0; i <= a.diagram.n; ++i) {
        auto it = a.aug.find(i);
        if (it == a.aug.end()) throw std::invalid_argument("augmentation: missing component");
        if (it->second.source != a.base || it->second.target != a.diagram.at.at(1u << i))
            throw std::invalid_argument("augmentation: endpoint mismatch");
    }
    // augmentation squares commute
    for (int i = 0; i <= a.diagram.n; ++i)
        for (int j = i + 1; j <= a.diagram.n; ++j) {
            Subset si = 1u << i, sj = 1u << j, sij = si | sj;
            ChainMap left = compose(a.diagram.coface(si, sij), a.aug.at(i));
            ChainMap right = compose(a.diagram.coface(sj, sij), a.aug.at(j));
            for (int m = a.base.n0 - 1; m <= a.base.n1() + 1; ++m)
                if (left.f(m) != right.f(m))
                    throw std::invalid_argument("augmentation: squares do not commute");
        }
    return a;
}

AugmentedFilteredDiagram make_augmented_filtered(FilteredComplex base, FilteredDiagram diagram,
                                                 std::map<int, ChainMap> aug) {
    // validate through the plain version first
    make_augmented(base.carrier, forget_filtrations(diagram), aug);
    AugmentedFilteredDiagram a{std::move(base), std::move(diagram), std::move(aug)};
    for (int i = 0; i <= a.diagram.n; ++i) {
        const FilteredComplex& tgt = a.diagram.at.at(1u << i);
        const ChainMap& f = a.aug.at(i);
        for (int p = a.base.pmin - 1; p <= std::max(a.base.pmax, tgt.pmax); ++p)
            for (int m = a.base.carrier.n0; m <= a.base.carrier.n1(); ++m)
                if (!tgt.w(p, m).contains(apply(f.f(m), a.base.w(p, m))))
                    throw std::invalid_argument("augmentation: not filtration compatible");
    }
    return a;
}

FilteredMap augmentation_map(const AugmentedFilteredDiagram& a, int r) {
    FilteredComplex total = simple_r(a.diagram, r);
    ComplexDiagram plain = forget_filtrations(a.diagram);
    const CochainComplex& base = a.base.carrier;
    int lo = std::min(base.n0, total.carrier.n0);
    int hi = std::max(base.n1(), total.carrier.n1());
    std::vector<Matrix> fs;
    for (int m = lo; m <= hi; ++m) {
        Matrix f(a.base.ring(), total.carrier.dim(m), base.dim(m));
        auto off = simple_offsets(plain, m);
        for (int i = 0; i <= a.diagram.n; ++i) {
            Matrix comp = a.aug.at(i).f(m);
            for (int ii = 0; ii < comp.rows; ++ii)
                for (int jj = 0; jj < comp.cols; ++jj)
                    f.at(off[1u << i] + ii, jj) = comp.at(ii, jj);
        }
        fs.push_back(f);
    }
    ChainMap map = make_chain_map(base, total.carrier, lo, fs);
    return make_filtered_map(a.base, total, map);
}

bool is_descent_acyclic(const AugmentedFilteredDiagram& a, int r) {
    return is_er_quasi_iso(augmentation_map(a, r), r);
}

bool is_descent_acyclic(const AugmentedComplexDiagram& a, int r) {
    return is_descent_acyclic(
        AugmentedFilteredDiagram{trivial_filtration(a.base), with_trivial_filtrations(a.diagram),
                                 a.aug},
        r);
}

PresComplex diagram_page_line(const FilteredDiagram& d, int r, int p, int q) {
    int lambda = p - r * (p + q);
    // degree range of the total complex
    int lo = 0, hi = -1;
    bool any = false;
    for (auto& [a, fk] : d.at) {
        const CochainComplex& k = fk.carrier;
        if (k.dims.empty()) continue;
        int w = subset_weight(a);
        if (!any) { lo = k.n0 + w; hi = k.n1() + w; any = true; }
        else { lo = std::min(lo, k.n0 + w); hi = std::max(hi, k.n1() + w); }
    }
    if (!any) return make_pres_complex(d.ring, 0, {}, {});
    lo -= 1;
    hi += 1;

    auto vertex_cell = [&](Subset a, int n) {
        int w = subset_weight(a);
        int pn = lambda + r * n;
        int qn = n - pn;
        return page_cell(d.at.at(a), r, pn - r * w, qn + (r - 1) * w);
    };

    std::vector<Subset> verts = all_vertices(d.n);
    std::map<int, std::map<Subset, Subquotient>> cells;
    for (int n = lo; n <= hi; ++n)
        for (Subset a : verts) cells[n].emplace(a, vertex_cell(a, n));

    std::vector<GenModule> gens;
    std::vector<Matrix> ds;
    for (int n = lo; n <= hi; ++n) {
        GenModule g{d.ring, {}};
        for (Subset a : verts)
            g = g.direct_sum(GenModule::from_presentation(cells[n][a].presentation()));
        gens.push_back(g);
    }
    for (int n = lo; n <= hi; ++n) {
        std::map<Subset, int> soff, toff;
        int scount = 0, tcount = 0;
        for (Subset a : verts) {
            soff[a] = scount;
            scount += cells[n][a].presentation().gen_count();
        }
        if (n < hi)
            for (Subset a : verts) {
                toff[a] = tcount;
                tcount += cells[n + 1][a].presentation().gen_count();
            }
        Matrix dm(d.ring, tcount, scount);
        if (n < hi) {
            for (Subset a : verts) {
                int w = subset_weight(a);
                int deg = n - w;
                // vertex d_r with the simple sign
                PresMap dv = induced_map(d.at.at(a).carrier.d(deg), cells[n][a], cells[n + 1][a]);
                for (int i = 0; i < dv.m.rows; ++i)
                    for (int j = 0; j < dv.m.cols; ++j)
                        dm.at(toff[a] + i, soff[a] + j) =
                            (w % 2 == 0) ? dv.m.at(i, j) : s_neg(d.ring, dv.m.at(i, j));
                // cofaces
                for (int j = 0; j <= d.n; ++j) {
                    if (a & (1u << j)) continue;
                    Subset b = a | (1u << j);
                    PresMap cf = induced_map(d.coface(a, b).f(deg), cells[n][a], cells[n + 1][b]);
                    int sign = coface_sign(a, static_cast<int>(j));
                    for (int i = 0; i < cf.m.rows; ++i)
                        for (int c = 0; c < cf.m.cols; ++c) {
                            Scalar v = cf.m.at(i, c);
                            if (sign < 0) v = s_neg(d.ring, v);
                            dm.at(toff[b] + i, soff[a] + c) =
                                s_add(d.ring, dm.at(toff[b] + i, soff[a] + c), v);
                        }
                }
            }
        }
        ds.push_back(dm);
    }
    return make_pres_complex(d.ring, lo, gens, ds);
}

bool page_simple_exchange_check(const FilteredDiagram& d, int r) {
    FilteredComplex total = simple_r(d, r);
    const CochainComplex& k = total.carrier;
    for (int p = total.fmin() - 1; p <= total.fmax() + 1; ++p)
        for (int n = k.n0; n <= k.n1(); ++n) {
            int q = n - p;
            ModulePresentation lhs = page_cohomology_at(total, r, p, q).presentation();
            PresComplex line = diagram_page_line(d, r, p, q);
            ModulePresentation rhs = pres_cohomology(line, n).presentation();
            if (lhs != rhs) return false;
        }
    return true;
}

bool dec_simple_exchange_check(const FilteredDiagram& d, int r) {
    FilteredComplex lhs = decalage(simple_r(d, r + 1));
    FilteredComplex rhs = simple_r(decalage_diagram(d), r);
    return lhs == rhs;
}

}  // namespace wfilt
