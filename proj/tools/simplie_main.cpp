#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "simplie/dgla/build.hpp"
#include "simplie/hypercrossed/nerve.hpp"
#include "simplie/io/document.hpp"

using namespace simplie;

namespace {

struct Options {
    std::string input_path;
    std::string out_path;
    std::string format = "json";
    int truncation = -1;
    int level = -1;
    bool recheck = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string kind_of(const std::string& raw) {
    try {
        Json j = Json::parse(raw);
        if (j.is_object() && j.contains("kind") && j.at("kind").is_string())
            return j.at("kind").get<std::string>();
    } catch (...) {
    }
    return "unknown";
}

Json header(const std::string& command, const std::string& raw, const std::string& kind,
            int truncation) {
    Json j = Json::object();
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    Json in = Json::object();
    in["kind"] = kind;
    in["hash"] = "fnv1a64:" + fnv1a64(raw);
    if (truncation >= 0) in["truncation"] = truncation;
    j["input"] = in;
    return j;
}

// ---------------------------------------------------------------------------
// Text rendering of an output document
// ---------------------------------------------------------------------------

std::string join_strings(const Json& arr) {
    std::string s;
    for (size_t i = 0; i < arr.size(); ++i) {
        if (i) s += ", ";
        s += arr.at(i).is_string() ? arr.at(i).get<std::string>() : arr.at(i).dump();
    }
    return s;
}

void text_matrix(std::ostringstream& os, const Json& mj, const std::string& indent) {
    size_t r = mj.at("rows").get<size_t>(), c = mj.at("cols").get<size_t>();
    const Json& e = mj.at("entries");
    if (r == 0 || c == 0) {
        os << indent << "(empty)\n";
        return;
    }
    for (size_t i = 0; i < r; ++i) {
        os << indent;
        for (size_t j = 0; j < c; ++j) {
            if (j) os << "  ";
            os << e.at(i * c + j).get<std::string>();
        }
        os << "\n";
    }
}

void text_bracket_tables(std::ostringstream& os, const Json& brackets) {
    for (const Json& e : brackets) {
        int n1 = e.at("degrees").at(0).get<int>(), n2 = e.at("degrees").at(1).get<int>();
        size_t d1 = e.at("shape").at(0).get<size_t>(), d2 = e.at("shape").at(1).get<size_t>();
        if (d1 == 0 || d2 == 0) continue;
        os << "  degrees (" << n1 << "," << n2 << "):\n";
        const Json& vals = e.at("values");
        for (size_t i = 0; i < d1; ++i)
            for (size_t j = 0; j < d2; ++j)
                os << "    [" << n1 << ":" << i << ", " << n2 << ":" << j << "] = ("
                   << join_strings(vals.at(i * d2 + j)) << ")\n";
    }
}

void text_issue_list(std::ostringstream& os, const Json& arr, const std::string& name) {
    os << "  " << name << ": ";
    if (arr.empty()) {
        os << "ok\n";
        return;
    }
    os << arr.size() << " issue(s)\n";
    for (const Json& is : arr) {
        os << "    " << is.at("law").get<std::string>();
        const Json& w = is.at("where");
        if (!w.empty()) {
            os << " @(";
            for (size_t i = 0; i < w.size(); ++i) {
                if (i) os << ",";
                os << w.at(i).get<long>();
            }
            os << ")";
        }
        if (is.contains("detail")) os << ": " << is.at("detail").get<std::string>();
        os << "\n";
    }
}

std::string render_text(const Json& doc) {
    std::ostringstream os;
    os << doc.at("tool").get<std::string>() << " " << doc.at("version").get<std::string>() << " "
       << doc.at("command").get<std::string>() << "\n";
    const Json& in = doc.at("input");
    os << "input: " << in.at("kind").get<std::string>() << " (" << in.at("hash").get<std::string>()
       << ")";
    if (in.contains("truncation")) os << ", truncation " << in.at("truncation").get<int>();
    os << "\n";
    if (doc.contains("moore")) {
        const Json& m = doc.at("moore");
        os << "chain complex: length " << m.at("length").get<size_t>() << ", dims ["
           << join_strings(m.at("dims")) << "]\n";
        const Json& bs = m.at("boundaries");
        for (size_t n = 0; n < bs.size(); ++n) {
            os << "  boundary " << (n + 1) << " -> " << n << ":\n";
            text_matrix(os, bs.at(n), "    ");
        }
    }
    if (doc.contains("dgla")) {
        os << "bracket tables:\n";
        text_bracket_tables(os, doc.at("dgla").at("brackets"));
    }
    if (doc.contains("sign_table")) {
        const Json& st = doc.at("sign_table");
        bool all_plus = true;
        for (const Json& s : st.at("differential"))
            if (s.get<int>() != 1) all_plus = false;
        for (const Json& e : st.at("brackets"))
            if (e.at("sign").get<int>() != 1) all_plus = false;
        if (all_plus) {
            os << "route comparison: all tables agree with sign +1\n";
        } else {
            os << "route comparison:\n";
            for (size_t n = 0; n < st.at("differential").size(); ++n)
                os << "  differential " << (n + 1) << ": sign "
                   << st.at("differential").at(n).get<int>() << "\n";
            for (const Json& e : st.at("brackets"))
                os << "  bracket (" << e.at("degrees").at(0).get<int>() << ","
                   << e.at("degrees").at(1).get<int>() << "): sign " << e.at("sign").get<int>()
                   << "\n";
        }
    }
    if (doc.contains("oracle")) {
        for (const Json& lvl : doc.at("oracle")) {
            os << "oracle tables at level " << lvl.at("level").get<int>() << ":\n";
            if (lvl.contains("differential")) {
                os << "  differential:\n";
                text_matrix(os, lvl.at("differential"), "    ");
            }
            text_bracket_tables(os, lvl.at("brackets"));
        }
    }
    if (doc.contains("reports")) {
        os << "reports:\n";
        for (const auto& [name, arr] : doc.at("reports").items()) text_issue_list(os, arr, name);
    }
    os << "status: " << doc.at("status").get<std::string>();
    if (doc.contains("failed_stage")) os << " (stage: " << doc.at("failed_stage").get<std::string>() << ")";
    os << "\n";
    return os.str();
}

void emit(const Options& opt, const Json& doc) {
    std::string text = opt.format == "text" ? render_text(doc) : doc.dump(2) + "\n";
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) throw InputError("cannot write '" + opt.out_path + "'");
        out << text;
    }
}

int finish(const Options& opt, Json& doc, bool ok, const std::string& failed_stage) {
    doc["status"] = ok ? "ok" : "failed";
    if (!ok && !failed_stage.empty()) doc["failed_stage"] = failed_stage;
    emit(opt, doc);
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Command pipelines
// ---------------------------------------------------------------------------

// Depth at which a presentation is expanded into its tower; -1 for direct input.
int effective_truncation(const InputDocument& in, int flag) {
    if (in.simplicial) {
        if (flag >= 0 && (size_t)flag != in.simplicial->truncation())
            throw InputError("--truncation cannot reshape a directly given tower");
        return -1;
    }
    int K = flag >= 0 ? flag : in.truncation;
    if (in.crossed) {
        if (K < 0) K = 2;
        if (K < 1 || K > 6) throw InputError("truncation for a crossed module must lie in 1..6");
    } else {
        if (K < 0) K = 3;
        if (K < 2 || K > 6) throw InputError("truncation for a two crossed module must lie in 2..6");
    }
    return K;
}

SimplicialLieAlgebra realize(const InputDocument& in, int K) {
    if (in.simplicial) return *in.simplicial;
    if (in.crossed) return from_crossed_module(*in.crossed, (size_t)K);
    return from_two_crossed_module(*in.two_crossed, (size_t)K);
}

Report validate_presentation(const InputDocument& in) {
    if (in.simplicial) return validate_simplicial(*in.simplicial);
    if (in.crossed) return check_crossed_module(*in.crossed);
    return check_two_crossed_module(*in.two_crossed);
}

int run_validate(const Options& opt) {
    std::string raw = read_file(opt.input_path);
    Report rep;
    std::string kind;
    try {
        InputDocument in = parse_input(raw);
        kind = in.kind;
        rep = validate_presentation(in);
    } catch (const ValidationError& e) {
        kind = kind_of(raw);
        rep = e.report;
    }
    Json doc = header("validate", raw, kind, -1);
    Json reports = Json::object();
    reports["validation"] = issues_to_json(rep);
    doc["reports"] = reports;
    return finish(opt, doc, rep.ok(), "validate");
}

Json bracket_entry(int n1, int n2, size_t d1, size_t d2, const std::vector<Vec>& vals) {
    Json e = Json::object();
    e["degrees"] = Json::array({n1, n2});
    e["shape"] = Json::array({d1, d2});
    Json vj = Json::array();
    for (const Vec& v : vals) vj.push_back(vec_to_json(v));
    e["values"] = vj;
    return e;
}

enum class Cmd { Moore, Dgla, Oracle };

int run_tower(const Options& opt, Cmd cmd) {
    std::string raw = read_file(opt.input_path);
    std::string kind;
    int trunc = -1;
    Report vrep;
    std::optional<SimplicialLieAlgebra> S;
    try {
        InputDocument in = parse_input(raw);
        kind = in.kind;
        trunc = effective_truncation(in, opt.truncation);
        vrep = validate_presentation(in);
        if (vrep.ok()) {
            SimplicialLieAlgebra T = realize(in, trunc);
            if (!in.simplicial) vrep.merge(validate_simplicial(T));
            if (vrep.ok()) S = std::move(T);
        }
    } catch (const ValidationError& e) {
        if (kind.empty()) kind = kind_of(raw);
        vrep.merge(e.report);
    }
    const char* name = cmd == Cmd::Moore ? "moore" : (cmd == Cmd::Dgla ? "dgla" : "oracle");
    Json doc = header(name, raw, kind, trunc);
    Json reports = Json::object();
    reports["validation"] = issues_to_json(vrep);
    if (!vrep.ok()) {
        doc["reports"] = reports;
        return finish(opt, doc, false, "validate");
    }

    MooreComplex M;
    Report mrep;
    try {
        M = moore_complex(*S);
        mrep.merge(check_moore(*S, M));
        mrep.merge(check_decomposition(*S, M));
    } catch (const ValidationError& e) {
        mrep.merge(e.report);
    }
    reports["moore"] = issues_to_json(mrep);
    if (!mrep.ok()) {
        doc["reports"] = reports;
        return finish(opt, doc, false, "moore");
    }
    size_t k = M.length();

    if (cmd == Cmd::Moore) {
        doc["moore"] = moore_to_json(M);
        doc["reports"] = reports;
        return finish(opt, doc, true, "");
    }

    if (cmd == Cmd::Oracle) {
        if (opt.level > (int)k)
            throw InputError("level " + std::to_string(opt.level) +
                             " is out of range: the chain complex has length " + std::to_string(k));
        doc["moore"] = moore_to_json(M);
        Json tables = Json::array();
        int lo = opt.level >= 0 ? opt.level : 0;
        int hi = opt.level >= 0 ? opt.level : (int)k;
        for (int n = lo; n <= hi; ++n) {
            Json t = Json::object();
            t["level"] = n;
            if (n >= 1)
                t["differential"] = mat_to_json(oracle_d_matrix(*S, M, (size_t)n),
                                                detail::degree_tag(n), detail::degree_tag(n - 1));
            Json brs = Json::array();
            for (int n1 = 0; n1 <= n; ++n1) {
                int n2 = n - n1;
                std::vector<Vec> tab = oracle_bracket_matrix(*S, M, (size_t)n1, (size_t)n2);
                brs.push_back(bracket_entry(n1, n2, M.N[(size_t)n1].dim(), M.N[(size_t)n2].dim(),
                                            tab));
            }
            t["brackets"] = brs;
            tables.push_back(t);
        }
        doc["oracle"] = tables;
        doc["reports"] = reports;
        return finish(opt, doc, true, "");
    }

    DglaBuild B;
    try {
        B = build_dgla(*S);
    } catch (const ValidationError& e) {
        Report brep = e.report;
        reports["build"] = issues_to_json(brep);
        doc["moore"] = moore_to_json(M);
        doc["reports"] = reports;
        return finish(opt, doc, false, "build");
    }
    Report arep = verify_dgla(B.dgla);
    Report orep = route_sign_report(B);
    doc["moore"] = moore_to_json(B.moore);
    doc["dgla"] = dgla_to_json(B.dgla, B.moore);
    doc["sign_table"] = sign_table_to_json(B);
    reports["axioms"] = issues_to_json(arep);
    reports["oracle"] = issues_to_json(orep);
    doc["reports"] = reports;
    bool ok = arep.ok() && orep.ok();
    return finish(opt, doc, ok, !arep.ok() ? "verify" : "oracle");
}

int run_recheck(const Options& opt) {
    std::string raw = read_file(opt.input_path);
    Json j;
    try {
        j = Json::parse(raw);
    } catch (const std::exception& e) {
        throw InputError(std::string("not a structured document: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dgla"))
        throw InputError("document has no dgla section to recheck");
    Dgla G;
    try {
        G = dgla_from_json(j.at("dgla"));
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed dgla section: ") + e.what());
    }
    Report arep = verify_dgla(G);
    Json doc = header("dgla", raw, "dgla_output", -1);
    Json reports = Json::object();
    reports["axioms"] = issues_to_json(arep);
    doc["reports"] = reports;
    return finish(opt, doc, arep.ok(), "verify");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chain-level invariants of truncated simplicial Lie algebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool tower) {
        sub->add_option("input", opt.input_path, "input document (JSON)")->required();
        sub->add_option("--out", opt.out_path, "write the report here instead of stdout");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        if (tower)
            sub->add_option("--truncation", opt.truncation,
                            "generation depth for presented inputs");
    };

    CLI::App* c_validate = app.add_subcommand("validate", "check the axioms of the input object");
    add_common(c_validate, false);
    CLI::App* c_moore = app.add_subcommand("moore", "normalized chain complex of the tower");
    add_common(c_moore, true);
    CLI::App* c_dgla =
        app.add_subcommand("dgla", "assemble and verify the graded structure of the tower");
    add_common(c_dgla, true);
    c_dgla->add_flag("--recheck", opt.recheck,
                     "treat the input as a previous report and re-verify its dgla section");
    CLI::App* c_oracle =
        app.add_subcommand("oracle", "independently derived tables, for convention debugging");
    add_common(c_oracle, true);
    c_oracle->add_option("--level", opt.level, "restrict to one total degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_validate)) return run_validate(opt);
        if (app.got_subcommand(c_moore)) return run_tower(opt, Cmd::Moore);
        if (app.got_subcommand(c_dgla))
            return opt.recheck ? run_recheck(opt) : run_tower(opt, Cmd::Dgla);
        if (app.got_subcommand(c_oracle)) return run_tower(opt, Cmd::Oracle);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << e.report.to_string();
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
