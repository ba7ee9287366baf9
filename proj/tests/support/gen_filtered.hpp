#pragma once

#include "support/gen_complex.hpp"
#include "wfilt/filtered.hpp"

namespace wfilt::testgen {

// Random bounded filtered complex: a random complex with filtration
// W_p = S_p + d(S_p), where the S_p are increasing random submodule families.
// d-compatibility and nesting hold by construction.
inline FilteredComplex random_filtered(Rng& rng, const Ring& ring, int n_lo, int n_hi,
                                       int max_rank, int num_steps = 3, int max_coef = 2) {
    auto data = random_complex(rng, ring, n_lo, n_hi, max_rank, max_coef);
    const CochainComplex& k = data.complex;
    std::vector<std::map<int, Submodule>> s(static_cast<size_t>(num_steps));
    for (int i = 0; i < num_steps; ++i)
        for (int n = k.n0; n <= k.n1(); ++n) {
            Submodule raw = (i == num_steps - 1)
                                ? Submodule::full(ring, k.dim(n))
                                : random_submodule(rng, ring, k.dim(n),
                                                   1 + static_cast<int>(rng() % 2));
            if (i > 0) raw = sum(raw, s[static_cast<size_t>(i - 1)].at(n));
            s[static_cast<size_t>(i)].emplace(n, raw);
        }
    std::vector<std::vector<Submodule>> steps;
    for (int i = 0; i < num_steps; ++i) {
        std::vector<Submodule> level;
        for (int n = k.n0; n <= k.n1(); ++n) {
            Submodule w = s[static_cast<size_t>(i)].at(n);
            if (n > k.n0) w = sum(w, apply(k.d(n - 1), s[static_cast<size_t>(i)].at(n - 1)));
            level.push_back(w);
        }
        steps.push_back(level);
    }
    return make_filtered(k, 0, num_steps - 1, steps);
}

// Pullback of a filtration along an inclusion of a subcomplex.
inline FilteredComplex pullback_filtration(const FilteredComplex& fl, const SubcomplexResult& sub) {
    const CochainComplex& c = sub.complex;
    std::vector<std::vector<Submodule>> steps;
    for (int p = fl.pmin; p <= fl.pmax; ++p) {
        std::vector<Submodule> level;
        for (int n = c.n0; n <= c.n1(); ++n)
            level.push_back(preimage(sub.inclusion.f(n), fl.w(p, n)));
        steps.push_back(level);
    }
    return make_filtered(c, fl.pmin, fl.pmax, steps);
}

}  // namespace wfilt::testgen
