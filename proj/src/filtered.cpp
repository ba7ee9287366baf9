#include "wfilt/filtered.hpp"

#include "wfilt/spectral.hpp"

namespace wfilt {

Submodule FilteredComplex::w(int p, int n) const {
    int amb = carrier.dim(n);
    if (p < pmin) return Submodule::zero(carrier.ring, amb);
    if (p > pmax) return Submodule::full(carrier.ring, amb);
    int ni = n - carrier.n0;
    if (ni < 0 || ni >= static_cast<int>(steps[p - pmin].size()))
        return Submodule::zero(carrier.ring, amb);
    return steps[p - pmin][ni];
}

bool FilteredComplex::operator==(const FilteredComplex& o) const {
    if (carrier != o.carrier) return false;
    int lo = std::min(pmin, o.pmin) - 1, hi = std::max(pmax, o.pmax);
    int nlo = std::min(carrier.n0, o.carrier.n0), nhi = std::max(carrier.n1(), o.carrier.n1());
    for (int p = lo; p <= hi; ++p)
        for (int n = nlo; n <= nhi; ++n)
            if (w(p, n) != o.w(p, n)) return false;
    return true;
}

FilteredComplex make_filtered(CochainComplex carrier, int pmin, int pmax,
                              std::vector<std::vector<Submodule>> steps) {
    if (pmax < pmin) throw std::invalid_argument("filtered complex: pmax < pmin");
    FilteredComplex fk{std::move(carrier), pmin, pmax, std::move(steps)};
    const CochainComplex& k = fk.carrier;
    if (static_cast<int>(fk.steps.size()) != pmax - pmin + 1)
        throw std::invalid_argument("filtered complex: wrong number of filtration levels");
    for (auto& level : fk.steps)
        if (static_cast<int>(level.size()) != static_cast<int>(k.dims.size()))
            throw std::invalid_argument("filtered complex: wrong number of degrees in a level");
    for (int p = pmin; p <= pmax; ++p)
        for (int n = k.n0; n <= k.n1(); ++n) {
            const Submodule& s = fk.steps[p - pmin][n - k.n0];
            if (s.ring != k.ring || s.ambient_rank != k.dim(n))
                throw std::invalid_argument("filtered complex: step ambient mismatch");
        }
    for (int n = k.n0; n <= k.n1(); ++n) {
        if (!fk.w(pmax, n).is_full())
            throw std::invalid_argument("filtered complex: filtration is not exhaustive at degree " +
                                        std::to_string(n));
        for (int p = pmin; p < pmax; ++p)
            if (!fk.w(p + 1, n).contains(fk.w(p, n)))
                throw std::invalid_argument("filtered complex: filtration not increasing at p = " +
                                            std::to_string(p));
        for (int p = pmin; p <= pmax; ++p)
            if (!fk.w(p, n + 1).contains(apply(k.d(n), fk.w(p, n))))
                throw std::invalid_argument(
                    "filtered complex: differential does not preserve W at p = " +
                    std::to_string(p));
    }
    // tighten the window: drop full levels from the top and zero levels from
    // the bottom (keeping at least one stored level)
    auto level_full = [&](int p) {
        for (int n = k.n0; n <= k.n1(); ++n)
            if (!fk.w(p, n).is_full()) return false;
        return true;
    };
    auto level_zero = [&](int p) {
        for (int n = k.n0; n <= k.n1(); ++n)
            if (!fk.w(p, n).is_zero()) return false;
        return true;
    };
    while (fk.pmax > fk.pmin && level_full(fk.pmax - 1)) {
        fk.steps.pop_back();
        fk.pmax -= 1;
    }
    while (fk.pmax > fk.pmin && level_zero(fk.pmin)) {
        fk.steps.erase(fk.steps.begin());
        fk.pmin += 1;
    }
    return fk;
}

FilteredComplex trivial_filtration(const CochainComplex& k) {
    std::vector<std::vector<Submodule>> steps(1);
    for (int n = k.n0; n <= k.n1(); ++n) steps[0].push_back(Submodule::full(k.ring, k.dim(n)));
    return make_filtered(k, 0, 0, steps);
}

FilteredComplex canonical_filtration(const CochainComplex& k) {
    if (k.dims.empty()) return trivial_filtration(k);
    int pmin = k.n0, pmax = k.n1();
    std::vector<std::vector<Submodule>> steps;
    for (int p = pmin; p <= pmax; ++p) {
        std::vector<Submodule> level;
        for (int n = k.n0; n <= k.n1(); ++n) {
            if (n < p)
                level.push_back(Submodule::full(k.ring, k.dim(n)));
            else if (n == p)
                level.push_back(kernel(k.d(n)));
            else
                level.push_back(Submodule::zero(k.ring, k.dim(n)));
        }
        steps.push_back(level);
    }
    return make_filtered(k, pmin, pmax, steps);
}

FilteredComplex translate(const FilteredComplex& fk, int r) {
    CochainComplex shifted = shift(fk.carrier, r);
    std::vector<std::vector<Submodule>> steps;
    int pmin = fk.pmin - r, pmax = fk.pmax - r;
    for (int p = pmin; p <= pmax; ++p) {
        std::vector<Submodule> level;
        for (int n = shifted.n0; n <= shifted.n1(); ++n) level.push_back(fk.w(p + r, n + r));
        steps.push_back(level);
    }
    return make_filtered(shifted, pmin, pmax, steps);
}

FilteredComplex decalage(const FilteredComplex& fk) {
    const CochainComplex& k = fk.carrier;
    int lo = fk.pmin + k.n0, hi = fk.pmax + k.n1() + 1;
    if (k.dims.empty()) return trivial_filtration(k);
    std::vector<std::vector<Submodule>> steps;
    for (int p = lo; p <= hi; ++p) {
        std::vector<Submodule> level;
        for (int n = k.n0; n <= k.n1(); ++n)
            level.push_back(
                intersect(fk.w(p - n, n), preimage(k.d(n), fk.w(p - n - 1, n + 1))));
        steps.push_back(level);
    }
    return make_filtered(k, lo, hi, steps);
}

FilteredMap make_filtered_map(FilteredComplex source, FilteredComplex target, ChainMap map) {
    if (map.source != source.carrier || map.target != target.carrier)
        throw std::invalid_argument("filtered map: carrier mismatch");
    FilteredMap f{std::move(source), std::move(target), std::move(map)};
    int lo = std::min(f.source.pmin, f.target.pmin) - 1;
    int hi = std::max(f.source.pmax, f.target.pmax);
    int nlo = std::min(f.source.carrier.n0, f.target.carrier.n0);
    int nhi = std::max(f.source.carrier.n1(), f.target.carrier.n1());
    for (int p = lo; p <= hi; ++p)
        for (int n = nlo; n <= nhi; ++n)
            if (!f.target.w(p, n).contains(apply(f.map.f(n), f.source.w(p, n))))
                throw std::invalid_argument("filtered map: filtration not respected at (p, n) = (" +
                                            std::to_string(p) + ", " + std::to_string(n) + ")");
    return f;
}

FilteredMap identity_filtered_map(const FilteredComplex& fk) {
    return make_filtered_map(fk, fk, identity_map(fk.carrier));
}

bool is_er_quasi_iso(const FilteredMap& f, int r) {
    if (r < 0) throw std::invalid_argument("is_er_quasi_iso: r must be >= 0");
    int s = r + 1;
    int plo = std::min(f.source.fmin(), f.target.fmin());
    int phi = std::max(f.source.fmax(), f.target.fmax());
    int nlo = std::min(f.source.carrier.n0, f.target.carrier.n0);
    int nhi = std::max(f.source.carrier.n1(), f.target.carrier.n1());
    for (int p = plo; p <= phi; ++p)
        for (int n = nlo; n <= nhi; ++n) {
            Subquotient a = page_cell(f.source, s, p, n - p);
            Subquotient b = page_cell(f.target, s, p, n - p);
            if (!induced_iso(f.map.f(n), a, b)) return false;
        }
    return true;
}

}  // namespace wfilt
