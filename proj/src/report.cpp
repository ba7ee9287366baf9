#include "wfilt/report.hpp"

#include <iomanip>
#include <sstream>

namespace wfilt {

SSResult pages_result(const FilteredComplex& fk, std::optional<int> r_max) {
    SSResult out;
    out.ring = fk.ring();
    out.label = "pages";
    auto st = stabilize(fk);
    out.r_stable = st.r_stable;
    int hi = r_max.value_or(st.r_stable);
    for (int r = 0; r <= hi; ++r) {
        SSPage pg = page(fk, r);
        for (auto& [key, cell] : pg.cells) {
            ModulePresentation pres = cell.sq.presentation();
            if (!pres.is_zero()) out.pages[r][key] = pres;
            if (!cell.d.is_zero_map()) out.diffs[r][key] = cell.d;
        }
    }
    for (int n = fk.carrier.n0; n <= fk.carrier.n1(); ++n)
        out.filt.emplace(n, abutment_filtration(fk, n));
    return out;
}

namespace {

std::string grid_for_page(const SSResult& s, int r) {
    auto it = s.pages.find(r);
    std::ostringstream os;
    os << "E_" << r << " page";
    if (it == s.pages.end() || it->second.empty()) {
        os << ": zero\n";
        return os.str();
    }
    os << "\n";
    int plo = 0, phi = 0, qlo = 0, qhi = 0;
    bool first = true;
    for (auto& [key, pres] : it->second) {
        auto [p, q] = key;
        if (first) {
            plo = phi = p;
            qlo = qhi = q;
            first = false;
        }
        plo = std::min(plo, p);
        phi = std::max(phi, p);
        qlo = std::min(qlo, q);
        qhi = std::max(qhi, q);
    }
    std::vector<std::vector<std::string>> rows;
    size_t width = 1;
    for (int q = qhi; q >= qlo; --q) {
        std::vector<std::string> row;
        row.push_back("q=" + std::to_string(q));
        for (int p = plo; p <= phi; ++p) {
            auto cit = it->second.find({p, q});
            std::string cell = (cit == it->second.end()) ? "." : cit->second.str();
            width = std::max(width, cell.size());
            row.push_back(cell);
        }
        rows.push_back(row);
    }
    std::vector<std::string> header;
    header.push_back("");
    for (int p = plo; p <= phi; ++p) {
        std::string h = "p=" + std::to_string(p);
        width = std::max(width, h.size());
        header.push_back(h);
    }
    size_t label_w = 6;
    auto emit = [&](const std::vector<std::string>& row) {
        os << "  " << std::setw(static_cast<int>(label_w)) << row[0];
        for (size_t i = 1; i < row.size(); ++i)
            os << "  " << std::setw(static_cast<int>(width)) << row[i];
        os << "\n";
    };
    emit(header);
    for (auto& row : rows) emit(row);

    auto dit = s.diffs.find(r);
    if (dit != s.diffs.end() && !dit->second.empty()) {
        os << "  d_" << r << ":\n";
        for (auto& [key, pm] : dit->second) {
            auto [p, q] = key;
            os << "    (" << p << "," << q << ") -> (" << p + r << "," << q - r + 1
               << "): " << pm.m.str() << "\n";
        }
    }
    return os.str();
}

std::string filtration_text(const FiltrationOnCohomology& f) {
    std::ostringstream os;
    const std::string& name = f.letter;
    os << "  H^" << f.n << " = " << f.total.str() << "\n";
    for (const auto& st : f.steps) {
        if (st.sub.is_zero() && st.graded.is_zero()) continue;
        os << "    " << name << "_" << st.p << " = " << st.sub.str();
        if (!st.graded.is_zero()) os << "   (Gr_" << st.p << " = " << st.graded.str() << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_text(const SSResult& s) {
    std::ostringstream os;
    os << "== " << s.label << " ==\n";
    os << "ring: " << s.ring.name();
    if (s.page_level) os << "  (page-level: E_1 rows and E_2 only)";
    os << "\n";
    for (auto& [r, cells] : s.pages) os << grid_for_page(s, r);
    if (!s.filt.empty()) {
        os << (s.filt.begin()->second.recentered ? "filtration (recentered):\n"
                                                 : "abutment filtration:\n");
        for (auto& [n, f] : s.filt) os << filtration_text(f);
    }
    for (const auto& w : s.warnings) os << "warning: " << w << "\n";
    return os.str();
}

Json render_machine(const SSResult& s) {
    Json j;
    j["report"] = "spectral";
    j["label"] = s.label;
    j["ring"] = s.ring.name();
    j["page_level"] = s.page_level;
    j["r_stable"] = s.r_stable;
    Json pages = Json::array();
    for (auto& [r, cells] : s.pages) {
        Json pr;
        pr["r"] = r;
        Json arr = Json::array();
        for (auto& [key, pres] : cells) {
            Json c;
            c["p"] = key.first;
            c["q"] = key.second;
            c["free_rank"] = pres.free_rank;
            Json t = Json::array();
            for (auto& d : pres.torsion) t.push_back(d.get_str());
            c["torsion"] = t;
            auto dit = s.diffs.find(r);
            if (dit != s.diffs.end()) {
                auto mit = dit->second.find(key);
                if (mit != dit->second.end()) {
                    Json dm;
                    dm["target"] = {key.first + r, key.second - r + 1};
                    dm["matrix"] = matrix_to_json(mit->second.m);
                    c["d"] = dm;
                }
            }
            arr.push_back(c);
        }
        pr["cells"] = arr;
        pages.push_back(pr);
    }
    j["pages"] = pages;
    Json filts = Json::array();
    for (auto& [n, f] : s.filt) {
        Json e;
        e["n"] = n;
        e["recentered"] = f.recentered;
        e["total"] = presentation_to_json(f.total);
        Json steps = Json::array();
        for (const auto& st : f.steps) {
            Json se;
            se["p"] = st.p;
            se["sub"] = presentation_to_json(st.sub);
            se["graded"] = presentation_to_json(st.graded);
            steps.push_back(se);
        }
        e["steps"] = steps;
        filts.push_back(e);
    }
    j["filtrations"] = filts;
    j["warnings"] = s.warnings;
    return j;
}

std::string render_text_verdicts(const std::string& check, const std::vector<Verdict>& vs) {
    std::ostringstream os;
    os << "== verify: " << check << " ==\n";
    bool all = true;
    for (const auto& v : vs) {
        os << (v.pass ? "  [pass] " : "  [FAIL] ") << v.name;
        if (!v.detail.empty()) os << "  (" << v.detail << ")";
        os << "\n";
        all = all && v.pass;
    }
    os << (all ? "verified\n" : "verification FAILED\n");
    return os.str();
}

Json render_machine_verdicts(const std::string& check, const std::vector<Verdict>& vs) {
    Json j;
    j["report"] = "verify";
    j["check"] = check;
    Json arr = Json::array();
    bool all = true;
    for (const auto& v : vs) {
        Json e;
        e["name"] = v.name;
        e["pass"] = v.pass;
        e["detail"] = v.detail;
        arr.push_back(e);
        all = all && v.pass;
    }
    j["verdicts"] = arr;
    j["pass"] = all;
    return j;
}

}  // namespace wfilt
