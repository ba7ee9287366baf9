#include "wfilt/presentation.hpp"

#include <sstream>

namespace wfilt {

std::string ModulePresentation::str() const {
    std::ostringstream os;
    std::string base = ring.kind == RingKind::Integers    ? "Z"
                       : ring.kind == RingKind::Rationals ? "Q"
                                                          : "F" + ring.p.get_str();
    bool first = true;
    if (free_rank > 0) {
        os << base;
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Submodule GenModule::rel() const {
    const int n = gen_count();
    Matrix g(ring, 0, n);
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) {
        if (orders[i] == 0) continue;
        Vec r(n, Scalar(0));
        r[i] = Scalar(orders[i]);
        rows.push_back(r);
    }
    return Submodule(ring, n, Matrix::from_rows(ring, n, rows));
}

ModulePresentation GenModule::canonical() const {
    Subquotient sq(Submodule::full(ring, gen_count()), rel());
    return sq.presentation();
}

GenModule GenModule::direct_sum(const GenModule& o) const {
    if (ring != o.ring) throw std::invalid_argument("GenModule direct sum: ring mismatch");
    GenModule out = *this;
    out.orders.insert(out.orders.end(), o.orders.begin(), o.orders.end());
    return out;
}

GenModule GenModule::free_module(Ring rg, int n) {
    return GenModule{std::move(rg), std::vector<mpz_class>(static_cast<size_t>(n), mpz_class(0))};
}

GenModule GenModule::from_presentation(const ModulePresentation& p) {
    GenModule g{p.ring, {}};
    for (const auto& d : p.torsion) g.orders.push_back(d);
    for (int i = 0; i < p.free_rank; ++i) g.orders.emplace_back(0);
    return g;
}

Subquotient::Subquotient(const Submodule& num, const Submodule& den) : num_(num), den_(den) {
    if (num.ring != den.ring || num.ambient_rank != den.ambient_rank)
        throw std::invalid_argument("subquotient: ambient mismatch");
    const Ring& rg = num.ring;
    const int k = num.rank();

    // denominator generators in numerator coordinates
    std::vector<Vec> den_coords;
    for (int i = 0; i < den.gens.rows; ++i) {
        auto c = num.coords(den.gens.row(i));
        if (!c) throw std::invalid_argument("subquotient: den is not contained in num");
        den_coords.push_back(*c);
    }
    Matrix c_rows = Matrix::from_rows(rg, k, den_coords);
    SnfResult snf = smith_normal_form(c_rows.transpose());  // k x l

    u_ = snf.U;
    uinv_ = snf.Uinv;
    diag_.assign(k, 0);
    int t = std::min(snf.S.rows, snf.S.cols);
    for (int i = 0; i < t; ++i) diag_[i] = snf.S.at(i, i).get_num();

    pres_.ring = rg;
    for (int i = 0; i < k; ++i) {
        if (diag_[i] == 1) continue;
        kept_.push_back(i);
        if (diag_[i] == 0)
            pres_.free_rank += 1;
        else
            pres_.torsion.push_back(diag_[i]);
    }
}

Vec Subquotient::coords(const Vec& x) const {
    auto a = num_.coords(x);
    if (!a) throw std::invalid_argument("subquotient coords: element not in numerator");
    Vec b = u_.apply(*a);
    Vec c;
    c.reserve(kept_.size());
    for (int i : kept_) {
        if (diag_[i] > 1) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), b[i].get_num().get_mpz_t(), diag_[i].get_mpz_t());
            c.push_back(Scalar(r));
        } else {
            c.push_back(b[i]);
        }
    }
    return c;
}

Vec Subquotient::lift(const Vec& c) const {
    if (c.size() != kept_.size()) throw std::invalid_argument("subquotient lift: length mismatch");
    Vec b(diag_.size(), Scalar(0));
    for (size_t j = 0; j < kept_.size(); ++j) b[kept_[j]] = c[j];
    Vec a = uinv_.apply(b);
    return num_.from_coords(a);
}

Vec Subquotient::reduce(const Vec& c) const {
    if (static_cast<int>(c.size()) != pres_.gen_count())
        throw std::invalid_argument("subquotient reduce: length mismatch");
    Vec out = c;
    for (size_t j = 0; j < pres_.torsion.size(); ++j) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), out[j].get_num().get_mpz_t(), pres_.torsion[j].get_mpz_t());
        out[j] = Scalar(r);
    }
    return out;
}

PresMap::PresMap(ModulePresentation s, ModulePresentation t, Matrix mm)
    : src(std::move(s)), tgt(std::move(t)), m(std::move(mm)) {
    if (m.rows != tgt.gen_count() || m.cols != src.gen_count())
        throw std::invalid_argument("presentation map: shape mismatch");
    normalize();
}

void PresMap::normalize() {
    for (size_t i = 0; i < tgt.torsion.size(); ++i)
        for (int j = 0; j < m.cols; ++j) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), m.at(static_cast<int>(i), j).get_num().get_mpz_t(),
                       tgt.torsion[i].get_mpz_t());
            m.at(static_cast<int>(i), j) = Scalar(r);
        }
}

PresMap PresMap::compose(const PresMap& inner) const {
    if (inner.tgt != src) throw std::invalid_argument("presentation map compose: mismatch");
    PresMap out;
    out.src = inner.src;
    out.tgt = tgt;
    out.m = m.mul(inner.m);
    out.normalize();
    return out;
}

PresMap induced_map(const Matrix& t, const Subquotient& a, const Subquotient& b) {
    const int n = a.presentation().gen_count();
    Matrix cols(b.ring(), b.presentation().gen_count(), n);
    for (int j = 0; j < n; ++j) {
        Vec e(n, Scalar(0));
        e[j] = 1;
        Vec img = t.apply(a.lift(e));
        Vec c = b.coords(img);
        for (int i = 0; i < cols.rows; ++i) cols.at(i, j) = c[i];
    }
    return PresMap(a.presentation(), b.presentation(), cols);
}

bool induced_iso(const Matrix& t, const Subquotient& a, const Subquotient& b) {
    Submodule ta = apply(t, a.num());
    if (!b.num().contains(ta)) throw std::invalid_argument("induced map is not defined (num)");
    if (!b.den().contains(apply(t, a.den())))
        throw std::invalid_argument("induced map is not defined (den)");
    if (sum(ta, b.den()) != b.num()) return false;                       // surjective
    return intersect(preimage(t, b.den()), a.num()) == a.den();          // injective
}

}  // namespace wfilt
