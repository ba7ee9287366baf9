#include "wfilt/cli.hpp"

#include <iostream>

#include "wfilt/report.hpp"

namespace wfilt {

namespace {

const char* kUsage =
    "usage: wfilt <command> <file> [options]\n"
    "\n"
    "commands:\n"
    "  pages <file>        spectral pages of a filtered complex (--r R)\n"
    "  singularity <file>  singularity spectral sequence of a resolution document\n"
    "  weight <file>       weight spectral sequence (gysin, resolution or\n"
    "                      general_weight document)\n"
    "  verify <file>       --check decalage|simple-exchange|mv|gysin-acyclic|\n"
    "                      e2-independence\n"
    "  report <file>       the natural report for the document kind\n"
    "\n"
    "options:\n"
    "  --r N               page bound for `pages`\n"
    "  --check NAME        verification to run\n"
    "  --format text|machine   report format (default text)\n"
    "\n"
    "environment: WFILT_THREADS caps the worker count for page computations.\n";

struct Options {
    std::string command;
    std::string file;
    std::optional<int> r;
    std::string check;
    std::string format = "text";
};

int parse_args(const std::vector<std::string>& args, Options& opt, std::ostream& err) {
    if (args.empty()) {
        err << kUsage;
        return 2;
    }
    opt.command = args[0];
    size_t i = 1;
    if (i < args.size() && args[i].rfind("--", 0) != 0) opt.file = args[i++];
    for (; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto need_value = [&](const char* name) -> const std::string& {
            if (i + 1 >= args.size())
                throw std::invalid_argument(std::string(name) + " needs a value");
            return args[++i];
        };
        if (a == "--r")
            opt.r = std::stoi(need_value("--r"));
        else if (a == "--check")
            opt.check = need_value("--check");
        else if (a == "--format")
            opt.format = need_value("--format");
        else
            throw std::invalid_argument("unknown option '" + a + "'");
    }
    if (opt.format != "text" && opt.format != "machine")
        throw std::invalid_argument("--format must be text or machine");
    return 0;
}

void emit(const SSResult& s, const Options& opt, std::ostream& out) {
    if (opt.format == "machine")
        out << render_machine(s).dump(2) << "\n";
    else
        out << render_text(s);
}

int emit_verdicts(const std::string& check, const std::vector<Verdict>& vs, const Options& opt,
                  std::ostream& out) {
    if (opt.format == "machine")
        out << render_machine_verdicts(check, vs).dump(2) << "\n";
    else
        out << render_text_verdicts(check, vs);
    for (const auto& v : vs)
        if (!v.pass) return 1;
    return 0;
}

SSResult dispatch_weight(const InputDocument& doc) {
    if (doc.kind == "gysin") {
        if (!doc.gysin.has_value())
            throw std::invalid_argument("gysin document carries only a square payload; "
                                        "use verify --check gysin-acyclic");
        return weight_smooth(*doc.gysin, doc.expected_h);
    }
    if (doc.kind == "resolution") return weight_compact(*doc.resolution);
    if (doc.kind == "general_weight") return weight_general(*doc.general_weight);
    throw std::invalid_argument("weight expects a gysin, resolution or general_weight document");
}

std::vector<Verdict> verify_decalage(const InputDocument& doc) {
    if (doc.kind != "filtered_complex")
        throw std::invalid_argument("decalage check expects a filtered_complex document");
    std::vector<Verdict> out;
    const FilteredComplex& fk = *doc.filtered;
    for (int r : {1, 2}) {
        DecalageCheck c = decalage_shift_check(fk, r);
        out.push_back({"E_" + std::to_string(r) + "(Dec) matches E_" + std::to_string(r + 1),
                       c.pass(), c.detail});
    }
    out.push_back({"E_0(Dec) row cohomology matches E_1", decalage_row_check(fk), ""});
    return out;
}

std::vector<Verdict> verify_simple_exchange(const InputDocument& doc) {
    if (doc.kind != "cubical")
        throw std::invalid_argument("simple-exchange check expects a cubical document");
    std::vector<Verdict> out;
    const FilteredDiagram& d = *doc.cubical;
    for (int r : {0, 1})
        out.push_back({"Dec(simple_" + std::to_string(r + 1) + ") = simple_" + std::to_string(r) +
                           "(Dec)",
                       dec_simple_exchange_check(d, r), ""});
    for (int r : {0, 1})
        out.push_back({"page/simple exchange at r = " + std::to_string(r),
                       page_simple_exchange_check(d, r), ""});
    return out;
}

std::vector<Verdict> verify_mv(const InputDocument& doc) {
    if (doc.kind != "square")
        throw std::invalid_argument("mv check expects a square document");
    MVVerdict v = mayer_vietoris_check(*doc.square);
    std::vector<Verdict> out;
    for (const auto& row : v.rows) {
        std::string detail;
        if (!row.injective) detail += "injectivity fails; ";
        if (!row.middle) detail += "middle exactness fails; ";
        if (!row.surjective) detail += "surjectivity fails; ";
        out.push_back({"degree " + std::to_string(row.q), row.pass(), detail});
    }
    return out;
}

std::vector<Verdict> verify_gysin_acyclic(const InputDocument& doc) {
    if (doc.kind != "gysin")
        throw std::invalid_argument("gysin-acyclic check expects a gysin document");
    std::vector<Verdict> out;
    if (doc.gysin.has_value())
        out.push_back({"datum validates (d*d = 0 in all rows)", true, ""});
    if (doc.gysin_square.has_value()) {
        const GysinSquare& s = *doc.gysin_square;
        int qmax = std::max(std::max(s.x.max_degree(), s.xt.max_degree()),
                            std::max(s.y.max_degree(), s.yt.max_degree())) +
                   2;
        for (int q = 0; q <= qmax; ++q)
            out.push_back({"total complex acyclic at q = " + std::to_string(q),
                           gysin_square_total_acyclic(s, q), ""});
    }
    if (doc.blowdown.has_value()) {
        int qmax =
            std::max(doc.blowdown->source.max_degree(), doc.blowdown->target.max_degree()) + 2;
        for (int q = 0; q <= qmax; ++q)
            out.push_back({"blow-down quasi-isomorphism at q = " + std::to_string(q),
                           gysin_blowdown_quasi_iso(*doc.blowdown, q), ""});
    }
    if (out.empty())
        throw std::invalid_argument("gysin-acyclic needs a datum, square or blowdown payload");
    return out;
}

std::vector<Verdict> verify_e2_independence(const InputDocument& doc) {
    if (doc.kind != "resolution" || !doc.alternate.has_value())
        throw std::invalid_argument(
            "e2-independence expects a resolution document with an 'alternate' payload");
    SSResult a = singularity_ss(*doc.resolution);
    SSResult b = singularity_ss(*doc.alternate);
    E2CompareVerdict v = e2_compare(a, b);
    return {{"E_2 cells agree", v.cells_equal, v.detail},
            {"recentered filtrations agree", v.filtrations_equal, v.detail}};
}

int run_inner(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    int rc = parse_args(args, opt, err);
    if (rc != 0) return rc;
    if (opt.command == "help" || opt.command == "--help") {
        out << kUsage;
        return 0;
    }
    if (opt.file.empty()) throw std::invalid_argument("missing input file");
    InputDocument doc = load_document(opt.file);

    if (opt.command == "pages") {
        if (doc.kind != "filtered_complex")
            throw std::invalid_argument("pages expects a filtered_complex document");
        emit(pages_result(*doc.filtered, opt.r), opt, out);
        return 0;
    }
    if (opt.command == "singularity") {
        if (doc.kind != "resolution")
            throw std::invalid_argument("singularity expects a resolution document");
        emit(singularity_ss(*doc.resolution), opt, out);
        return 0;
    }
    if (opt.command == "weight") {
        emit(dispatch_weight(doc), opt, out);
        return 0;
    }
    if (opt.command == "verify") {
        if (opt.check.empty()) throw std::invalid_argument("verify needs --check NAME");
        std::vector<Verdict> vs;
        if (opt.check == "decalage")
            vs = verify_decalage(doc);
        else if (opt.check == "simple-exchange")
            vs = verify_simple_exchange(doc);
        else if (opt.check == "mv")
            vs = verify_mv(doc);
        else if (opt.check == "gysin-acyclic")
            vs = verify_gysin_acyclic(doc);
        else if (opt.check == "e2-independence")
            vs = verify_e2_independence(doc);
        else
            throw std::invalid_argument("unknown check '" + opt.check + "'");
        return emit_verdicts(opt.check, vs, opt, out);
    }
    if (opt.command == "report") {
        if (doc.kind == "filtered_complex") {
            emit(pages_result(*doc.filtered, opt.r), opt, out);
        } else if (doc.kind == "resolution") {
            emit(singularity_ss(*doc.resolution), opt, out);
        } else if (doc.kind == "gysin" || doc.kind == "general_weight") {
            emit(dispatch_weight(doc), opt, out);
        } else if (doc.kind == "square") {
            return emit_verdicts("mv", verify_mv(doc), opt, out);
        } else if (doc.kind == "cubical") {
            return emit_verdicts("simple-exchange", verify_simple_exchange(doc), opt, out);
        } else {
            throw std::invalid_argument("no report for document kind '" + doc.kind + "'");
        }
        return 0;
    }
    err << kUsage;
    throw std::invalid_argument("unknown command '" + opt.command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_inner(args, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace wfilt
