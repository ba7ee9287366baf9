#include "wfilt/io.hpp"

#include <fstream>

namespace wfilt {

namespace {

constexpr int64_t kI64Max = std::numeric_limits<int64_t>::max();

Json int_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(static_cast<int64_t>(z.get_si()));
    return Json(z.get_str());
}

mpz_class int_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

Json ring_to_json(const Ring& r) {
    Json j;
    switch (r.kind) {
        case RingKind::Integers: j["kind"] = "Z"; break;
        case RingKind::Rationals: j["kind"] = "Q"; break;
        case RingKind::PrimeField:
            j["kind"] = "Zp";
            j["p"] = int_to_json(r.p);
            break;
    }
    return j;
}

Ring ring_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Z") return Ring::integers();
    if (kind == "Q") return Ring::rationals();
    if (kind == "Zp") return Ring::prime_field(int_from_json(j.at("p")));
    throw std::invalid_argument("unknown ring kind '" + kind + "'");
}

}  // namespace

Json scalar_to_json(const Ring& ring, const Scalar& x) {
    if (ring.kind == RingKind::Rationals && x.get_den() != 1) {
        Json j = Json::array();
        j.push_back(int_to_json(x.get_num()));
        j.push_back(int_to_json(x.get_den()));
        return j;
    }
    return int_to_json(x.get_num());
}

Scalar scalar_from_json(const Ring& ring, const Json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw std::invalid_argument("rational must be a [num, den] pair");
        Scalar x(int_from_json(j[0]), int_from_json(j[1]));
        return canon(ring, x);
    }
    return canon(ring, Scalar(int_from_json(j)));
}

Json matrix_to_json(const Matrix& m) {
    Json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    Json entries = Json::array();
    for (const auto& x : m.e) entries.push_back(scalar_to_json(m.ring, x));
    j["entries"] = entries;
    return j;
}

Matrix matrix_from_json(const Ring& ring, const Json& j) {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows * cols)
        throw std::invalid_argument("matrix entries length does not match rows*cols");
    std::vector<Scalar> e;
    e.reserve(entries.size());
    for (const auto& x : entries) e.push_back(scalar_from_json(ring, x));
    return Matrix(ring, rows, cols, e);
}

Json presentation_to_json(const ModulePresentation& p) {
    Json j;
    j["free_rank"] = p.free_rank;
    Json t = Json::array();
    for (const auto& d : p.torsion) t.push_back(int_to_json(d));
    j["torsion"] = t;
    return j;
}

namespace {

Json genmodule_to_json(const GenModule& g) {
    int free = 0;
    Json t = Json::array();
    for (const auto& o : g.orders) {
        if (o == 0)
            ++free;
        else
            t.push_back(int_to_json(o));
    }
    Json j;
    j["free_rank"] = free;
    j["torsion"] = t;
    return j;
}

GenModule genmodule_from_json(const Ring& ring, const Json& j) {
    GenModule g{ring, {}};
    for (const auto& d : j.at("torsion")) {
        mpz_class o = int_from_json(d);
        if (o <= 1) throw std::invalid_argument("torsion orders must be > 1");
        g.orders.push_back(o);
    }
    int free = j.at("free_rank").get<int>();
    for (int i = 0; i < free; ++i) g.orders.emplace_back(0);
    return g;
}

}  // namespace

Json graded_to_json(const GradedModule& g) {
    Json arr = Json::array();
    for (const auto& [k, part] : g.parts) {
        if (part.gen_count() == 0) continue;
        Json j = genmodule_to_json(part);
        Json withq;
        withq["q"] = k;
        withq["free_rank"] = j["free_rank"];
        withq["torsion"] = j["torsion"];
        arr.push_back(withq);
    }
    return arr;
}

GradedModule graded_from_json(const Ring& ring, const Json& j) {
    GradedModule g{ring, {}};
    for (const auto& part : j) {
        int q = part.at("q").get<int>();
        g.parts.emplace(q, genmodule_from_json(ring, part));
    }
    return g;
}

namespace {

Json complex_to_json(const CochainComplex& k) {
    Json j;
    j["n0"] = k.n0;
    j["dims"] = k.dims;
    Json ds = Json::array();
    for (const auto& d : k.ds) ds.push_back(matrix_to_json(d));
    j["d"] = ds;
    return j;
}

CochainComplex complex_from_json(const Ring& ring, const Json& j) {
    int n0 = j.at("n0").get<int>();
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    std::vector<Matrix> ds;
    for (const auto& d : j.at("d")) ds.push_back(matrix_from_json(ring, d));
    return make_complex(ring, n0, dims, ds);
}

Json filtered_to_json(const FilteredComplex& fk) {
    Json j;
    j["complex"] = complex_to_json(fk.carrier);
    j["pmin"] = fk.pmin;
    j["pmax"] = fk.pmax;
    Json levels = Json::array();
    for (int p = fk.pmin; p <= fk.pmax; ++p) {
        Json level;
        level["p"] = p;
        Json gens = Json::array();
        for (int n = fk.carrier.n0; n <= fk.carrier.n1(); ++n)
            gens.push_back(matrix_to_json(fk.w(p, n).gens));
        level["generators"] = gens;
        levels.push_back(level);
    }
    j["filtration"] = levels;
    return j;
}

FilteredComplex filtered_from_json(const Ring& ring, const Json& j) {
    CochainComplex k = complex_from_json(ring, j.at("complex"));
    int pmin = j.at("pmin").get<int>();
    int pmax = j.at("pmax").get<int>();
    const Json& levels = j.at("filtration");
    if (static_cast<int>(levels.size()) != pmax - pmin + 1)
        throw std::invalid_argument("filtration level count does not match pmin/pmax");
    std::vector<std::vector<Submodule>> steps;
    for (const auto& level : levels) {
        std::vector<Submodule> row;
        const Json& gens = level.at("generators");
        int idx = 0;
        for (int n = k.n0; n <= k.n1(); ++n) {
            Matrix g = matrix_from_json(ring, gens.at(idx++));
            row.emplace_back(ring, k.dim(n), g);
        }
        steps.push_back(row);
    }
    return make_filtered(k, pmin, pmax, steps);
}

Json chainmap_to_json(const ChainMap& f) {
    Json j;
    j["m0"] = f.m0;
    Json maps = Json::array();
    for (const auto& m : f.fs) maps.push_back(matrix_to_json(m));
    j["maps"] = maps;
    return j;
}

std::vector<Matrix> chainmap_matrices_from_json(const Ring& ring, const Json& j, int& m0) {
    m0 = j.at("m0").get<int>();
    std::vector<Matrix> out;
    for (const auto& m : j.at("maps")) out.push_back(matrix_from_json(ring, m));
    return out;
}

Json diagram_to_json(const FilteredDiagram& d, bool filtered) {
    Json j;
    j["n"] = d.n;
    Json verts = Json::array();
    for (const auto& [a, fk] : d.at) {
        Json v;
        v["subset"] = a;
        if (filtered)
            v["filtered"] = filtered_to_json(fk);
        else
            v["complex"] = complex_to_json(fk.carrier);
        verts.push_back(v);
    }
    j["vertices"] = verts;
    Json cof = Json::array();
    for (const auto& [key, f] : d.cofaces) {
        Json c = chainmap_to_json(f);
        Json e;
        e["from"] = key.first;
        e["to"] = key.second;
        e["m0"] = c["m0"];
        e["maps"] = c["maps"];
        cof.push_back(e);
    }
    j["cofaces"] = cof;
    return j;
}

FilteredDiagram diagram_from_json(const Ring& ring, const Json& j, bool* was_filtered = nullptr) {
    int n = j.at("n").get<int>();
    std::map<Subset, FilteredComplex> at;
    bool any_filtered = false;
    for (const auto& v : j.at("vertices")) {
        Subset a = v.at("subset").get<Subset>();
        if (v.contains("filtered")) {
            at.emplace(a, filtered_from_json(ring, v.at("filtered")));
            any_filtered = true;
        } else {
            at.emplace(a, trivial_filtration(complex_from_json(ring, v.at("complex"))));
        }
    }
    std::map<std::pair<Subset, Subset>, ChainMap> cofaces;
    for (const auto& e : j.at("cofaces")) {
        Subset from = e.at("from").get<Subset>(), to = e.at("to").get<Subset>();
        int m0 = 0;
        std::vector<Matrix> maps = chainmap_matrices_from_json(ring, e, m0);
        if (!at.count(from) || !at.count(to))
            throw std::invalid_argument("coface references a missing vertex");
        cofaces.emplace(std::make_pair(from, to),
                        make_chain_map(at.at(from).carrier, at.at(to).carrier, m0, maps));
    }
    if (was_filtered) *was_filtered = any_filtered;
    return make_filtered_diagram(ring, n, at, cofaces);
}

Json gysin_to_json(const GysinDatum& g) {
    Json j;
    j["mode"] = g.real_mode ? "real" : "complex";
    j["components"] = g.num_components;
    Json strata = Json::array();
    for (const auto& [s, gm] : g.strata) {
        Json st;
        st["mask"] = s;
        st["h"] = graded_to_json(gm);
        strata.push_back(st);
    }
    j["strata"] = strata;
    Json maps = Json::array();
    for (const auto& [key, per] : g.gysin)
        for (const auto& [k, m] : per) {
            Json e;
            e["i"] = key.first;
            e["j"] = key.second;
            e["degree"] = k;
            e["matrix"] = matrix_to_json(m);
            maps.push_back(e);
        }
    j["maps"] = maps;
    return j;
}

GysinDatum gysin_from_json(const Ring& ring, const Json& j) {
    GysinDatum g;
    g.ring = ring;
    g.real_mode = j.at("mode").get<std::string>() == "real";
    g.num_components = j.at("components").get<int>();
    for (const auto& st : j.at("strata"))
        g.strata.emplace(st.at("mask").get<Stratum>(), graded_from_json(ring, st.at("h")));
    for (const auto& e : j.at("maps")) {
        Stratum i = e.at("i").get<Stratum>(), jj = e.at("j").get<Stratum>();
        g.gysin[{i, jj}][e.at("degree").get<int>()] = matrix_from_json(ring, e.at("matrix"));
    }
    return make_gysin_datum(g);
}

Json morphism_to_json(const GysinMorphismDatum& m) {
    Json j;
    j["multiplicity"] = matrix_to_json(m.multiplicity);
    Json pb = Json::array();
    for (const auto& [key, per] : m.pullbacks)
        for (const auto& [k, mat] : per) {
            Json e;
            e["i"] = key.first;
            e["j"] = key.second;
            e["degree"] = k;
            e["matrix"] = matrix_to_json(mat);
            pb.push_back(e);
        }
    j["pullbacks"] = pb;
    return j;
}

GysinMorphismDatum morphism_from_json(const Ring& ring, const Json& j, GysinDatum source,
                                      GysinDatum target) {
    GysinMorphismDatum m;
    m.source = std::move(source);
    m.target = std::move(target);
    m.multiplicity = matrix_from_json(ring, j.at("multiplicity"));
    for (const auto& e : j.at("pullbacks")) {
        Stratum i = e.at("i").get<Stratum>(), jj = e.at("j").get<Stratum>();
        m.pullbacks[{i, jj}][e.at("degree").get<int>()] = matrix_from_json(ring, e.at("matrix"));
    }
    return make_gysin_morphism(m);
}

Json resolution_to_json(const ResolutionDatum& r) {
    Json j;
    if (r.diagram.has_value()) {
        j["mode"] = "chain";
        FilteredDiagram fd = with_trivial_filtrations(*r.diagram);
        j["diagram"] = diagram_to_json(fd, false);
    } else if (r.page_level.has_value()) {
        j["mode"] = "page";
        Json cells = Json::array();
        for (const auto& [key, g] : r.page_level->cells) {
            Json c = genmodule_to_json(g);
            Json e;
            e["p"] = key.first;
            e["q"] = key.second;
            e["free_rank"] = c["free_rank"];
            e["torsion"] = c["torsion"];
            cells.push_back(e);
        }
        j["cells"] = cells;
        Json d1 = Json::array();
        for (const auto& [key, m] : r.page_level->d1) {
            Json e;
            e["p"] = key.first;
            e["q"] = key.second;
            e["matrix"] = matrix_to_json(m);
            d1.push_back(e);
        }
        j["d1"] = d1;
    }
    return j;
}

ResolutionDatum resolution_from_json(const Ring& ring, const Json& j) {
    ResolutionDatum r;
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "chain") {
        FilteredDiagram fd = diagram_from_json(ring, j.at("diagram"));
        r.diagram = forget_filtrations(fd);
    } else if (mode == "page") {
        PageLevelDatum d;
        d.ring = ring;
        for (const auto& c : j.at("cells"))
            d.cells[{c.at("p").get<int>(), c.at("q").get<int>()}] = genmodule_from_json(ring, c);
        for (const auto& e : j.at("d1"))
            d.d1[{e.at("p").get<int>(), e.at("q").get<int>()}] =
                matrix_from_json(ring, e.at("matrix"));
        r.page_level = d;
    } else {
        throw std::invalid_argument("resolution mode must be 'chain' or 'page'");
    }
    return r;
}

Json square_to_json(const SquareCohomologyDatum& s) {
    Json j;
    j["hx"] = graded_to_json(s.hx);
    j["hxt"] = graded_to_json(s.hxt);
    j["hy"] = graded_to_json(s.hy);
    j["hyt"] = graded_to_json(s.hyt);
    auto fam = [&](const std::map<int, Matrix>& f) {
        Json arr = Json::array();
        for (const auto& [q, m] : f) {
            Json e;
            e["degree"] = q;
            e["matrix"] = matrix_to_json(m);
            arr.push_back(e);
        }
        return arr;
    };
    j["f"] = fam(s.f);
    j["i"] = fam(s.i);
    j["j"] = fam(s.j);
    j["g"] = fam(s.g);
    return j;
}

SquareCohomologyDatum square_from_json(const Ring& ring, const Json& j) {
    SquareCohomologyDatum s;
    s.ring = ring;
    s.hx = graded_from_json(ring, j.at("hx"));
    s.hxt = graded_from_json(ring, j.at("hxt"));
    s.hy = graded_from_json(ring, j.at("hy"));
    s.hyt = graded_from_json(ring, j.at("hyt"));
    auto fam = [&](const Json& arr) {
        std::map<int, Matrix> out;
        for (const auto& e : arr)
            out.emplace(e.at("degree").get<int>(), matrix_from_json(ring, e.at("matrix")));
        return out;
    };
    s.f = fam(j.at("f"));
    s.i = fam(j.at("i"));
    s.j = fam(j.at("j"));
    s.g = fam(j.at("g"));
    return make_square_datum(s);
}

}  // namespace

InputDocument parse_document(const Json& j) {
    InputDocument doc;
    if (!j.contains("schema") || !j.at("schema").is_number_integer() ||
        j.at("schema").get<int>() != 1)
        throw std::invalid_argument("document must declare \"schema\": 1");
    doc.kind = j.at("kind").get<std::string>();
    doc.ring = ring_from_json(j.at("ring"));

    if (doc.kind == "filtered_complex") {
        doc.filtered = filtered_from_json(doc.ring, j.at("filtered"));
    } else if (doc.kind == "cubical") {
        doc.cubical = diagram_from_json(doc.ring, j.at("cubical"));
        if (j.contains("base")) {
            doc.base = complex_from_json(doc.ring, j.at("base"));
            std::map<int, ChainMap> aug;
            for (const auto& a : j.at("augmentation")) {
                int i = a.at("index").get<int>();
                int m0 = 0;
                std::vector<Matrix> maps = chainmap_matrices_from_json(doc.ring, a, m0);
                Subset s = 1u << i;
                aug.emplace(i, make_chain_map(*doc.base, doc.cubical->at.at(s).carrier, m0, maps));
            }
            doc.augmentation = aug;
            // validate the augmented structure
            make_augmented(*doc.base, forget_filtrations(*doc.cubical), aug);
        }
    } else if (doc.kind == "resolution") {
        doc.resolution = resolution_from_json(doc.ring, j.at("resolution"));
        if (j.contains("alternate"))
            doc.alternate = resolution_from_json(doc.ring, j.at("alternate"));
    } else if (doc.kind == "gysin") {
        if (j.contains("datum")) doc.gysin = gysin_from_json(doc.ring, j.at("datum"));
        if (j.contains("expected_h"))
            doc.expected_h = graded_from_json(doc.ring, j.at("expected_h"));
        if (j.contains("square")) {
            const Json& sq = j.at("square");
            GysinSquare s;
            s.x = gysin_from_json(doc.ring, sq.at("x"));
            s.xt = gysin_from_json(doc.ring, sq.at("xt"));
            s.y = gysin_from_json(doc.ring, sq.at("y"));
            s.yt = gysin_from_json(doc.ring, sq.at("yt"));
            s.f = morphism_from_json(doc.ring, sq.at("f"), s.xt, s.x);
            s.i = morphism_from_json(doc.ring, sq.at("i"), s.y, s.x);
            s.j = morphism_from_json(doc.ring, sq.at("j"), s.yt, s.xt);
            s.g = morphism_from_json(doc.ring, sq.at("g"), s.yt, s.y);
            doc.gysin_square = make_gysin_square(s);
        }
        if (j.contains("blowdown")) {
            const Json& bd = j.at("blowdown");
            GysinDatum x = gysin_from_json(doc.ring, bd.at("x"));
            GysinDatum xt = gysin_from_json(doc.ring, bd.at("xt"));
            doc.blowdown = morphism_from_json(doc.ring, bd.at("f"), xt, x);
        }
        if (!doc.gysin.has_value() && !doc.gysin_square.has_value() && !doc.blowdown.has_value())
            throw std::invalid_argument("gysin document needs a 'datum', 'square' or 'blowdown'");
    } else if (doc.kind == "general_weight") {
        const Json& gw = j.at("general_weight");
        GeneralWeightDatum d;
        d.ring = doc.ring;
        d.n = gw.at("n").get<int>();
        for (const auto& v : gw.at("vertices"))
            d.at.emplace(v.at("subset").get<Subset>(), gysin_from_json(doc.ring, v.at("datum")));
        for (const auto& e : gw.at("edges")) {
            Subset from = e.at("from").get<Subset>(), to = e.at("to").get<Subset>();
            if (!d.at.count(from) || !d.at.count(to))
                throw std::invalid_argument("general weight edge references a missing vertex");
            d.edges.emplace(std::make_pair(from, to),
                            morphism_from_json(doc.ring, e.at("morphism"), d.at.at(to),
                                               d.at.at(from)));
        }
        doc.general_weight = make_general_weight_datum(d);
    } else if (doc.kind == "square") {
        doc.square = square_from_json(doc.ring, j.at("square"));
    } else {
        throw std::invalid_argument("unknown document kind '" + doc.kind + "'");
    }
    return doc;
}

InputDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("JSON parse error in '" + path + "': " + e.what());
    }
    return parse_document(j);
}

Json serialize_document(const InputDocument& doc) {
    Json j;
    j["schema"] = 1;
    j["kind"] = doc.kind;
    j["ring"] = ring_to_json(doc.ring);
    if (doc.kind == "filtered_complex") {
        j["filtered"] = filtered_to_json(*doc.filtered);
    } else if (doc.kind == "cubical") {
        j["cubical"] = diagram_to_json(*doc.cubical, true);
        if (doc.base.has_value()) {
            j["base"] = complex_to_json(*doc.base);
            Json aug = Json::array();
            for (const auto& [i, f] : *doc.augmentation) {
                Json a = chainmap_to_json(f);
                Json e;
                e["index"] = i;
                e["m0"] = a["m0"];
                e["maps"] = a["maps"];
                aug.push_back(e);
            }
            j["augmentation"] = aug;
        }
    } else if (doc.kind == "resolution") {
        j["resolution"] = resolution_to_json(*doc.resolution);
        if (doc.alternate.has_value()) j["alternate"] = resolution_to_json(*doc.alternate);
    } else if (doc.kind == "gysin") {
        if (doc.gysin.has_value()) j["datum"] = gysin_to_json(*doc.gysin);
        if (doc.expected_h.has_value()) j["expected_h"] = graded_to_json(*doc.expected_h);
        if (doc.gysin_square.has_value()) {
            Json sq;
            sq["x"] = gysin_to_json(doc.gysin_square->x);
            sq["xt"] = gysin_to_json(doc.gysin_square->xt);
            sq["y"] = gysin_to_json(doc.gysin_square->y);
            sq["yt"] = gysin_to_json(doc.gysin_square->yt);
            sq["f"] = morphism_to_json(doc.gysin_square->f);
            sq["i"] = morphism_to_json(doc.gysin_square->i);
            sq["j"] = morphism_to_json(doc.gysin_square->j);
            sq["g"] = morphism_to_json(doc.gysin_square->g);
            j["square"] = sq;
        }
        if (doc.blowdown.has_value()) {
            Json bd;
            bd["x"] = gysin_to_json(doc.blowdown->target);
            bd["xt"] = gysin_to_json(doc.blowdown->source);
            bd["f"] = morphism_to_json(*doc.blowdown);
            j["blowdown"] = bd;
        }
    } else if (doc.kind == "general_weight") {
        Json gw;
        gw["n"] = doc.general_weight->n;
        Json verts = Json::array();
        for (const auto& [a, g] : doc.general_weight->at) {
            Json v;
            v["subset"] = a;
            v["datum"] = gysin_to_json(g);
            verts.push_back(v);
        }
        gw["vertices"] = verts;
        Json edges = Json::array();
        for (const auto& [key, m] : doc.general_weight->edges) {
            Json e;
            e["from"] = key.first;
            e["to"] = key.second;
            e["morphism"] = morphism_to_json(m);
            edges.push_back(e);
        }
        gw["edges"] = edges;
        j["general_weight"] = gw;
    } else if (doc.kind == "square") {
        j["square"] = square_to_json(*doc.square);
    }
    return j;
}

std::string dump_document(const InputDocument& doc) {
    return serialize_document(doc).dump(2) + "\n";
}

}  // namespace wfilt
