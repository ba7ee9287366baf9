#include "wfilt/spectral.hpp"

#include <sstream>

#include "wfilt/util.hpp"

namespace wfilt {

Submodule z_term(const FilteredComplex& fk, int r, int p, int q) {
    const CochainComplex& k = fk.carrier;
    int n = p + q;
    return intersect(fk.filt(p, n), preimage(k.d(n), fk.filt(p + r, n + 1)));
}

Submodule b_term(const FilteredComplex& fk, int r, int p, int q) {
    const CochainComplex& k = fk.carrier;
    int n = p + q;
    Submodule cycles_above = intersect(fk.filt(p + 1, n), preimage(k.d(n), fk.filt(p + r, n + 1)));
    Submodule boundaries = intersect(apply(k.d(n - 1), fk.filt(p - r + 1, n - 1)), fk.filt(p, n));
    return sum(cycles_above, boundaries);
}

Subquotient page_cell(const FilteredComplex& fk, int r, int p, int q) {
    return Subquotient(z_term(fk, r, p, q), b_term(fk, r, p, q));
}

const SSPage::Cell* SSPage::cell(int p, int q) const {
    auto it = cells.find({p, q});
    return it == cells.end() ? nullptr : &it->second;
}

ModulePresentation SSPage::pres(int p, int q) const {
    const Cell* c = cell(p, q);
    if (!c) return ModulePresentation{ring, 0, {}};
    return c->sq.presentation();
}

SSPage page(const FilteredComplex& fk, int r) {
    if (r < 0) throw std::invalid_argument("page: r must be >= 0");
    const CochainComplex& k = fk.carrier;
    SSPage out;
    out.r = r;
    out.ring = k.ring;
    std::vector<std::pair<int, int>> keys;
    for (int p = fk.fmin(); p <= fk.fmax(); ++p)
        for (int n = k.n0; n <= k.n1(); ++n) keys.emplace_back(p, n - p);
    std::vector<Subquotient> sqs(keys.size());
    parallel_for(static_cast<int>(keys.size()), [&](int i) {
        sqs[i] = page_cell(fk, r, keys[i].first, keys[i].second);
    });
    for (size_t i = 0; i < keys.size(); ++i)
        out.cells.emplace(keys[i], SSPage::Cell{sqs[i], PresMap{}});
    // d_r maps, induced by the carrier differential on representatives
    for (auto& [key, cell] : out.cells) {
        auto [p, q] = key;
        int n = p + q;
        auto it = out.cells.find({p + r, q - r + 1});
        Subquotient tgt =
            it != out.cells.end() ? it->second.sq : page_cell(fk, r, p + r, q - r + 1);
        cell.d = induced_map(k.d(n), cell.sq, tgt);
    }
    return out;
}

Subquotient page_cohomology_at(const FilteredComplex& fk, int r, int p, int q) {
    const CochainComplex& k = fk.carrier;
    int n = p + q;
    Submodule num =
        intersect(z_term(fk, r, p, q), preimage(k.d(n), b_term(fk, r, p + r, q - r + 1)));
    Submodule den = sum(b_term(fk, r, p, q), apply(k.d(n - 1), z_term(fk, r, p - r, q + r - 1)));
    return Subquotient(num, den);
}

ModulePresentation FiltrationOnCohomology::step(int p) const {
    if (steps.empty()) return total;
    if (p < steps.front().p) return ModulePresentation{ring, 0, {}};
    if (p > steps.back().p) return total;
    return steps[static_cast<size_t>(p - steps.front().p)].sub;
}

ModulePresentation FiltrationOnCohomology::graded(int p) const {
    if (steps.empty() || p < steps.front().p || p > steps.back().p)
        return ModulePresentation{ring, 0, {}};
    return steps[static_cast<size_t>(p - steps.front().p)].graded;
}

int FiltrationOnCohomology::first_jump() const {
    for (const auto& s : steps)
        if (!s.sub.is_zero()) return s.p;
    return steps.empty() ? 0 : steps.back().p;
}

int FiltrationOnCohomology::last_jump() const {
    for (const auto& s : steps)
        if (s.sub == total) return s.p;
    return steps.empty() ? 0 : steps.back().p;
}

FiltrationOnCohomology abutment_filtration(const FilteredComplex& fk, int n) {
    const CochainComplex& k = fk.carrier;
    Submodule cocycles = kernel(k.d(n));
    Submodule cobound = image(k.d(n - 1));
    Subquotient h(cocycles, cobound);
    FiltrationOnCohomology out;
    out.ring = k.ring;
    out.n = n;
    out.total = h.presentation();
    Submodule prev_num = cobound;
    for (int p = fk.pmin - 1; p <= fk.pmax; ++p) {
        Submodule num = sum(intersect(fk.w(p, n), cocycles), cobound);
        FiltrationOnCohomology::Step st;
        st.p = p;
        st.sub = Subquotient(num, cobound).presentation();
        st.graded = Subquotient(num, prev_num).presentation();
        out.steps.push_back(st);
        prev_num = num;
    }
    return out;
}

FiltrationOnCohomology recenter(const FiltrationOnCohomology& f, RecenterRule rule) {
    FiltrationOnCohomology out = f;
    out.recentered = true;
    out.offset = f.n;
    out.letter = (rule == RecenterRule::Singularity) ? "L" : "W";
    for (auto& s : out.steps) s.p += f.n;
    return out;
}

std::vector<SSPage> pages(const FilteredComplex& fk, int r_lo, int r_hi) {
    std::vector<SSPage> out;
    for (int r = r_lo; r <= r_hi; ++r) out.push_back(page(fk, r));
    return out;
}

namespace {

bool page_has_zero_differentials(const SSPage& pg) {
    for (const auto& [key, cell] : pg.cells)
        if (!cell.d.is_zero_map()) return false;
    return true;
}

}  // namespace

StabilizeResult stabilize(const FilteredComplex& fk) {
    int width = fk.fmax() - fk.fmin();
    int r_bound = width + 1;  // d_r leaves the column range for r > width
    std::vector<SSPage> all = pages(fk, 0, r_bound);
    int r_stable = r_bound;
    for (int r = r_bound; r >= 0; --r) {
        if (page_has_zero_differentials(all[static_cast<size_t>(r)]))
            r_stable = r;
        else
            break;
    }
    return StabilizeResult{r_stable, all[static_cast<size_t>(r_stable)]};
}

DecalageCheck decalage_shift_check(const FilteredComplex& fk, int r) {
    if (r < 1) throw std::invalid_argument("decalage_shift_check: needs r >= 1");
    DecalageCheck out;
    FilteredComplex dec = decalage(fk);
    const CochainComplex& k = fk.carrier;

    auto fail = [&](int p, int q, const std::string& what) {
        out.detail = "cell (" + std::to_string(p) + "," + std::to_string(q) + "): " + what;
    };

    int plo = std::min(dec.fmin(), fk.fmin() - k.n1()) - 1;
    int phi = std::max(dec.fmax(), fk.fmax() - k.n0) + 1;
    for (int p = plo; p <= phi; ++p)
        for (int n = k.n0; n <= k.n1(); ++n) {
            int q = n - p;
            // source side cells
            Subquotient a = page_cell(dec, r, p, q);
            Subquotient b = page_cell(fk, r + 1, p + n, -p);
            Matrix id = Matrix::identity(k.ring, k.dim(n));
            if (!induced_iso(id, a, b)) {
                out.cells_match = false;
                fail(p, q, "comparison map is not an isomorphism");
                return out;
            }
            // d_r correspondence: phi_tgt . d_r(Dec) == d_{r+1}(K) . phi_src
            int tp = p + r, tq = q - r + 1;
            int tn = tp + tq;
            Subquotient at = page_cell(dec, r, tp, tq);
            Subquotient bt = page_cell(fk, r + 1, tp + tn, -tp);
            PresMap phi_src = induced_map(id, a, b);
            PresMap phi_tgt = induced_map(Matrix::identity(k.ring, k.dim(tn)), at, bt);
            PresMap da = induced_map(k.d(n), a, at);
            PresMap db = induced_map(k.d(n), b, bt);
            if (!(phi_tgt.compose(da) == db.compose(phi_src))) {
                out.differentials_match = false;
                fail(p, q, "d_r matrices do not correspond under the reindexing");
                return out;
            }
        }
    return out;
}

bool decalage_row_check(const FilteredComplex& fk) {
    FilteredComplex dec = decalage(fk);
    const CochainComplex& k = fk.carrier;
    int plo = std::min(dec.fmin(), fk.fmin() - k.n1()) - 1;
    int phi = std::max(dec.fmax(), fk.fmax() - k.n0) + 1;
    for (int p = plo; p <= phi; ++p)
        for (int n = k.n0; n <= k.n1(); ++n) {
            int q = n - p;
            Subquotient a = page_cohomology_at(dec, 0, p, q);
            Subquotient b = page_cohomology_at(fk, 1, p + n, -p);
            if (!induced_iso(Matrix::identity(k.ring, k.dim(n)), a, b)) return false;
        }
    return true;
}

}  // namespace wfilt
