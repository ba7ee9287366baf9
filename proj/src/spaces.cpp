#include "wfilt/spaces.hpp"

namespace wfilt {

void DeltaModel::validate() const {
    for (int k = 1; k <= max_dim(); ++k) {
        for (size_t c = 0; c < cells[k].size(); ++c) {
            const auto& faces = cells[k][c];
            if (static_cast<int>(faces.size()) != k + 1)
                throw std::invalid_argument("delta model: cell needs k+1 faces");
            for (int fi : faces)
                if (fi < 0 || fi >= count(k - 1))
                    throw std::invalid_argument("delta model: face index out of range");
            // simplicial identities face_i(face_j) = face_{j-1}(face_i), i < j
            if (k >= 2) {
                for (int j = 1; j <= k; ++j)
                    for (int i = 0; i < j; ++i) {
                        int a = cells[k - 1][faces[j]][i];
                        int b = cells[k - 1][faces[i]][j - 1];
                        if (a != b)
                            throw std::invalid_argument("delta model: face identities fail");
                    }
            }
        }
    }
}

DeltaModel point() {
    DeltaModel m;
    m.cells = {{{}}};
    return m;
}

DeltaModel points(int k) {
    DeltaModel m;
    m.cells.emplace_back();
    for (int i = 0; i < k; ++i) m.cells[0].push_back({});
    return m;
}

DeltaModel circle() { return wedge_circles(1); }

DeltaModel wedge_circles(int k) {
    DeltaModel m;
    m.cells = {{{}}, {}};
    for (int i = 0; i < k; ++i) m.cells[1].push_back({0, 0});
    if (k == 0) m.cells.pop_back();
    return m;
}

DeltaModel sphere2() {
    // boundary of the tetrahedron on vertices 0..3
    DeltaModel m;
    m.cells.resize(3);
    m.cells[0] = {{}, {}, {}, {}};
    // edges 01,02,03,12,13,23; edge [vi,vj] has faces (vj, vi)
    const int E[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (auto& e : E) m.cells[1].push_back({e[1], e[0]});
    // triangle [ijk] has faces ([jk], [ik], [ij])
    m.cells[2] = {{3, 1, 0}, {4, 2, 0}, {5, 2, 1}, {5, 4, 3}};
    m.validate();
    return m;
}

DeltaModel torus() {
    // one vertex, loops a, b, c and two triangles with boundary a + b - c
    DeltaModel m;
    m.cells.resize(3);
    m.cells[0] = {{}};
    m.cells[1] = {{0, 0}, {0, 0}, {0, 0}};
    m.cells[2] = {{0, 2, 1}, {0, 2, 1}};
    m.validate();
    return m;
}

DeltaModel identify_vertices(const DeltaModel& m, int v, int w) {
    if (v == w) return m;
    if (v >= m.count(0) || w >= m.count(0) || v < 0 || w < 0)
        throw std::invalid_argument("identify_vertices: vertex out of range");
    auto remap = [&](int x) {
        if (x == w) x = v;
        if (x > w) --x;
        return x;
    };
    DeltaModel out = m;
    out.cells[0].erase(out.cells[0].begin() + w);
    if (out.max_dim() >= 1)
        for (auto& e : out.cells[1])
            for (auto& f : e) f = remap(f);
    out.validate();
    return out;
}

DeltaModel disjoint_union(const DeltaModel& a, const DeltaModel& b) {
    DeltaModel out = a;
    int dims = std::max(a.max_dim(), b.max_dim());
    out.cells.resize(dims + 1);
    for (int k = 0; k <= dims; ++k) {
        int off = a.count(k - 1);
        for (int c = 0; c < b.count(k); ++c) {
            auto faces = b.cells[k][c];
            for (auto& f : faces) f += off;
            out.cells[k].push_back(faces);
        }
    }
    out.validate();
    return out;
}

CochainComplex cochains(const DeltaModel& m, const Ring& ring) {
    m.validate();
    std::vector<int> dims;
    std::vector<Matrix> ds;
    int top = m.max_dim();
    for (int k = 0; k <= top; ++k) dims.push_back(m.count(k));
    for (int k = 0; k <= top; ++k) {
        Matrix d(ring, m.count(k + 1), m.count(k));
        for (int s = 0; s < m.count(k + 1); ++s) {
            const auto& faces = m.cells[k + 1][s];
            for (size_t i = 0; i < faces.size(); ++i) {
                Scalar sign((i % 2 == 0) ? 1 : -1);
                d.at(s, faces[i]) = s_add(ring, d.at(s, faces[i]), canon(ring, sign));
            }
        }
        ds.push_back(d);
    }
    return make_complex(ring, 0, dims, ds);
}

void CellMap::validate() const {
    source.validate();
    target.validate();
    if (static_cast<int>(assign.size()) < source.max_dim() + 1)
        throw std::invalid_argument("cell map: missing dimension assignments");
    for (int k = 0; k <= source.max_dim(); ++k) {
        if (static_cast<int>(assign[k].size()) != source.count(k))
            throw std::invalid_argument("cell map: wrong number of assignments");
        for (int c = 0; c < source.count(k); ++c) {
            int img = assign[k][c];
            if (img < 0 || img >= target.count(k))
                throw std::invalid_argument("cell map: image cell out of range");
            if (k >= 1)
                for (int i = 0; i <= k; ++i)
                    if (target.cells[k][img][i] != assign[k - 1][source.cells[k][c][i]])
                        throw std::invalid_argument("cell map: not face compatible");
        }
    }
}

CellMap make_cell_map(DeltaModel source, DeltaModel target, std::vector<std::vector<int>> assign) {
    CellMap f{std::move(source), std::move(target), std::move(assign)};
    f.validate();
    return f;
}

CellMap identity_cell_map(const DeltaModel& m) {
    std::vector<std::vector<int>> assign;
    for (int k = 0; k <= m.max_dim(); ++k) {
        std::vector<int> a(m.count(k));
        for (int c = 0; c < m.count(k); ++c) a[c] = c;
        assign.push_back(a);
    }
    return make_cell_map(m, m, assign);
}

CellMap compose(const CellMap& outer, const CellMap& inner) {
    std::vector<std::vector<int>> assign;
    for (int k = 0; k <= inner.source.max_dim(); ++k) {
        std::vector<int> a(inner.source.count(k));
        for (int c = 0; c < inner.source.count(k); ++c) a[c] = outer.assign[k][inner.assign[k][c]];
        assign.push_back(a);
    }
    return make_cell_map(inner.source, outer.target, assign);
}

ChainMap induced(const CellMap& f, const Ring& ring) {
    f.validate();
    CochainComplex ct = cochains(f.target, ring);   // source of the pullback
    CochainComplex cs = cochains(f.source, ring);   // target of the pullback
    std::vector<Matrix> fs;
    int hi = std::max(ct.n1(), cs.n1());
    for (int k = 0; k <= hi; ++k) {
        Matrix m(ring, cs.dim(k), ct.dim(k));
        if (k <= f.source.max_dim())
            for (int c = 0; c < f.source.count(k); ++c) m.at(c, f.assign[k][c]) = 1;
        fs.push_back(m);
    }
    return make_chain_map(ct, cs, 0, fs);
}

}  // namespace wfilt
