#include "pellkit/cli.hpp"

#include "pellkit/applications.hpp"
#include "pellkit/lehmer.hpp"
#include "pellkit/splitting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace pellkit::cli {

namespace {

using json = nlohmann::ordered_json;

std::string dec(const Int& v) { return v.get_str(); }

json tuple_json(const std::vector<Int>& tuple) {
    json arr = json::array();
    for (const auto& v : tuple) arr.push_back(dec(v));
    return arr;
}

json witness_json(const ExceptionWitness& w) {
    json j;
    j["witness"] = tuple_json(w.tuple);
    j["m"] = w.m;
    j["kind"] = w.kind;
    j["known"] = w.known;
    return j;
}

json report_json(const VerificationReport& rep) {
    json j;
    j["theorem"] = rep.theorem;
    j["dmax"] = rep.bounds.d_max;
    j["mmax"] = rep.bounds.m_max;
    j["strict"] = rep.bounds.strict_power_reading;
    j["instances"] = rep.instances;
    j["matches"] = rep.matches;
    j["indeterminate"] = rep.indeterminate;
    j["exceptions"] = json::array();
    for (const auto& e : rep.exceptions) j["exceptions"].push_back(witness_json(e));
    j["remark_exceptions"] = json::array();
    for (const auto& e : rep.remark_exceptions) j["remark_exceptions"].push_back(witness_json(e));
    j["unexplained"] = rep.has_unexplained();
    j["partial"] = rep.partial;
    return j;
}

std::string report_table(const VerificationReport& rep) {
    std::ostringstream os;
    os << "theorem       " << rep.theorem << "\n";
    os << "dmax          " << rep.bounds.d_max << "\n";
    os << "mmax          " << rep.bounds.m_max << "\n";
    os << "instances     " << rep.instances << "\n";
    os << "matches       " << rep.matches << "\n";
    os << "indeterminate " << rep.indeterminate << "\n";
    os << "partial       " << (rep.partial ? "yes" : "no") << "\n";
    auto list = [&os](const char* label, const std::vector<ExceptionWitness>& ws) {
        os << label;
        if (ws.empty()) {
            os << " []\n";
            return;
        }
        os << "\n";
        for (const auto& w : ws) {
            os << "  m=" << w.m << " kind=" << w.kind
               << (w.known ? " (known)" : " (UNEXPLAINED)") << " [";
            for (std::size_t i = 0; i < w.tuple.size(); ++i)
                os << (i ? "," : "") << dec(w.tuple[i]);
            os << "]\n";
        }
    };
    list("exceptions:", rep.exceptions);
    list("remark exceptions:", rep.remark_exceptions);
    return os.str();
}

std::string solution_doc(const std::optional<Int>& x, const std::optional<Int>& y,
                         bool json_mode) {
    if (json_mode) {
        json j;
        if (x) {
            j["x"] = dec(*x);
            j["y"] = dec(*y);
        } else {
            j["solvable"] = false;
        }
        return j.dump();
    }
    std::ostringstream os;
    if (x)
        os << "x " << dec(*x) << "\ny " << dec(*y) << "\n";
    else
        os << "unsolvable\n";
    return os.str();
}

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("not an integer: " + s);
    }
}

void write_out(const std::string& doc, const std::string& out_file, std::ostream& out) {
    if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + out_file);
        f << doc;
        if (doc.empty() || doc.back() != '\n') f << '\n';
        return;
    }
    out << doc;
    if (doc.empty() || doc.back() != '\n') out << '\n';
}

}  // namespace

std::string emit_report(const VerificationReport& report, bool json_mode) {
    return json_mode ? report_json(report).dump() : report_table(report);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pellkit: Pell-type equation structure toolkit"};
    app.require_subcommand(1);
    bool table_mode = false;
    std::string out_file;
    app.add_flag("--table", table_mode, "fixed-width table output instead of json");
    app.add_option("--out", out_file, "write the output document to a file");

    std::string doc;

    // pell
    auto* pell_cmd = app.add_subcommand("pell", "fundamental solution of x^2 - d y^2 = rhs");
    std::string pell_d;
    int pell_rhs = 1;
    bool pell_odd = false;
    unsigned long pell_count = 1;
    std::string pell_k, pell_l;
    pell_cmd->add_option("--d", pell_d, "radicand")->required();
    pell_cmd->add_option("--rhs", pell_rhs, "right-hand side: 1, -1, 4 or -4");
    pell_cmd->add_flag("--odd", pell_odd, "require odd x, y (rhs +-4)");
    pell_cmd->add_option("--count", pell_count, "number of solutions to list");
    pell_cmd->callback([&] {
        auto f = fundamental_solution(parse_int(pell_d), pell_rhs, pell_odd);
        if (!f || pell_count <= 1) {
            doc = solution_doc(f ? std::optional<Int>(f->x) : std::nullopt,
                               f ? std::optional<Int>(f->y) : std::nullopt, !table_mode);
            return;
        }
        auto sols = solutions(*f, pell_count);
        if (!table_mode) {
            json j;
            j["solutions"] = json::array();
            for (const auto& s : sols) {
                json e;
                e["x"] = dec(s.x);
                e["y"] = dec(s.y);
                j["solutions"].push_back(e);
            }
            doc = j.dump();
        } else {
            std::ostringstream os;
            for (const auto& s : sols) os << dec(s.x) << " " << dec(s.y) << "\n";
            doc = os.str();
        }
    });

    // lemma24
    auto* lemma_cmd = app.add_subcommand("lemma24", "minimal-solution identities for (k, l)");
    lemma_cmd->add_option("--k", pell_k, "k")->required();
    lemma_cmd->add_option("--l", pell_l, "l")->required();
    lemma_cmd->callback([&] {
        auto rep = lemma24_relations(parse_int(pell_k), parse_int(pell_l));
        json j;
        auto put_mixed = [&](const char* name, const std::optional<MixedSolution>& s) {
            if (s) {
                json e;
                e["x"] = dec(s->x());
                e["y"] = dec(s->y());
                j[name] = e;
            } else {
                j[name] = nullptr;
            }
        };
        put_mixed("eps1", rep.eps1);
        if (rep.eps2) {
            json e;
            e["x"] = dec(rep.eps2->x);
            e["y"] = dec(rep.eps2->y);
            j["eps2"] = e;
        }
        put_mixed("eps3", rep.eps3);
        put_mixed("eps4", rep.eps4);
        if (rep.eps5) {
            json e;
            e["x"] = dec(rep.eps5->x);
            e["y"] = dec(rep.eps5->y);
            j["eps5"] = e;
        } else {
            j["eps5"] = nullptr;
        }
        j["identities"] = json::array();
        for (const auto& ident : rep.identities) {
            json e;
            e["id"] = ident.id;
            e["status"] = ident.status == IdentityStatus::holds    ? "holds"
                          : ident.status == IdentityStatus::failed ? "failed"
                                                                   : "skipped";
            if (!ident.note.empty()) e["note"] = ident.note;
            j["identities"].push_back(e);
        }
        doc = table_mode ? j.dump(2) : j.dump();
    });

    // minimal
    auto* min_cmd = app.add_subcommand("minimal", "minimal solution of k x^2 - l y^2 = c");
    std::string min_k, min_l;
    int min_c = 1;
    unsigned long min_count = 1;
    min_cmd->add_option("--k", min_k)->required();
    min_cmd->add_option("--l", min_l)->required();
    min_cmd->add_option("--c", min_c, "1, 2 or 4");
    min_cmd->add_option("--count", min_count, "number of solutions to list");
    min_cmd->callback([&] {
        auto s = minimal_solution(parse_int(min_k), parse_int(min_l), min_c);
        if (!s || min_count <= 1) {
            doc = solution_doc(s ? std::optional<Int>(s->x()) : std::nullopt,
                               s ? std::optional<Int>(s->y()) : std::nullopt, !table_mode);
            return;
        }
        auto sols = solutions(*s, min_count);
        json j;
        j["solutions"] = json::array();
        for (const auto& m : sols) {
            json e;
            e["x"] = dec(m.x());
            e["y"] = dec(m.y());
            j["solutions"].push_back(e);
        }
        doc = j.dump();
    });

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "exponent of a solution over the minimal one");
    std::string cls_x, cls_y, cls_d, cls_k, cls_l;
    int cls_rhs = 0, cls_c = 4;
    cls_cmd->add_option("--x", cls_x)->required();
    cls_cmd->add_option("--y", cls_y)->required();
    cls_cmd->add_option("--d", cls_d, "pure equation x^2 - d y^2 = rhs");
    cls_cmd->add_option("--rhs", cls_rhs, "rhs (default: detected from x, y, d)");
    cls_cmd->add_option("--k", cls_k, "mixed equation k x^2 - l y^2 = c");
    cls_cmd->add_option("--l", cls_l);
    cls_cmd->add_option("--c", cls_c);
    cls_cmd->callback([&] {
        Int x = parse_int(cls_x), y = parse_int(cls_y);
        unsigned long m = 0;
        if (!cls_d.empty()) {
            Int d = parse_int(cls_d);
            Int value = x * x - d * y * y;
            int rhs = cls_rhs;
            if (rhs == 0) {
                if (value != 1 && value != -1 && value != 4 && value != -4)
                    throw std::domain_error("classify: (x, y) solves no supported equation");
                rhs = static_cast<int>(value.get_si());
            } else if (value != rhs) {
                throw std::domain_error("classify: x^2 - d y^2 != rhs");
            }
            bool odd = (rhs == 4 || rhs == -4) && mpz_odd_p(x.get_mpz_t());
            auto fund = fundamental_solution(d, rhs, odd);
            if (!fund) throw std::domain_error("classify: equation unsolvable");
            int denom = ((rhs == 4 || rhs == -4) && mpz_odd_p(x.get_mpz_t())) ? 2 : 1;
            m = classify_exponent(PellSolution{x, y, d, rhs, denom}, *fund);
        } else if (!cls_k.empty() && !cls_l.empty()) {
            Int k = parse_int(cls_k), l = parse_int(cls_l);
            auto min = minimal_solution(k, l, cls_c);
            if (!min) throw std::domain_error("classify: equation unsolvable");
            m = classify_exponent(MixedSolution(x, y, k, l, cls_c), *min);
        } else {
            throw CLI::ValidationError("classify needs --d or --k/--l");
        }
        if (!table_mode) {
            json j;
            j["m"] = m;
            doc = j.dump();
        } else {
            doc = "m " + std::to_string(m) + "\n";
        }
    });

    // split
    auto* split_cmd = app.add_subcommand("split", "constructive splitting of d");
    std::string split_d;
    bool split_q = false, split_perron = false;
    split_cmd->add_option("--d", split_d)->required();
    split_cmd->add_flag("--quartic", split_q, "the k x^2 - l y^2 = 4 splitting");
    split_cmd->add_flag("--perron", split_perron, "solvability of x^2 - d y^2 = -1, 2, -2");
    split_cmd->callback([&] {
        Int d = parse_int(split_d);
        if (split_perron) {
            auto ws = perron_trichotomy(d);
            json j;
            j["witnesses"] = json::array();
            for (const auto& w : ws) {
                json e;
                e["rhs"] = w.rhs;
                e["x"] = dec(w.x);
                e["y"] = dec(w.y);
                j["witnesses"].push_back(e);
            }
            doc = j.dump();
            return;
        }
        std::optional<SplitResult> res;
        if (split_q) {
            res = split_quartic(d);
            if (!res) {
                json j;
                j["solvable"] = false;
                doc = j.dump();
                return;
            }
        } else {
            res = split(d);
        }
        json j;
        j["k"] = dec(res->k);
        j["l"] = dec(res->l);
        j["c"] = res->c;
        j["modulus"] = dec(res->modulus);
        json w;
        w["x"] = dec(res->witness.x());
        w["y"] = dec(res->witness.y());
        j["witness"] = w;
        j["unique"] = res->unique == Uniqueness::unique       ? "yes"
                      : res->unique == Uniqueness::not_unique ? "no"
                                                              : "unknown";
        doc = j.dump();
    });

    // lehmer
    auto* leh_cmd = app.add_subcommand("lehmer", "Lehmer sequence values and scans");
    unsigned long leh_n = 0, leh_scan = 0;
    std::string leh_r, leh_q, leh_prop;
    leh_cmd->add_option("--n", leh_n, "index");
    leh_cmd->add_option("--r", leh_r, "parameter R")->required();
    leh_cmd->add_option("--q", leh_q, "parameter Q")->required();
    leh_cmd->add_option("--scan", leh_scan, "square-class scan bound (odd n)");
    leh_cmd->add_option("--prop21", leh_prop, "check claims on a pair m,n");
    leh_cmd->callback([&] {
        LehmerParams params(parse_int(leh_r), parse_int(leh_q));
        json j;
        if (leh_scan > 0) {
            auto scan = lemma23_scan(params, leh_scan);
            j["hits"] = json::array();
            for (const auto& h : scan.hits) {
                json e;
                e["n"] = h.n;
                e["k"] = dec(h.k);
                e["u"] = dec(h.u);
                e["form"] = h.form == 1 ? "ku^2" : "2ku^2";
                j["hits"].push_back(e);
            }
            j["outside"] = json::array();
            for (const auto& h : scan.outside) {
                json e;
                e["n"] = h.n;
                e["form"] = h.form == 1 ? "ku^2" : "2ku^2";
                j["outside"].push_back(e);
            }
        } else if (!leh_prop.empty()) {
            auto comma = leh_prop.find(',');
            if (comma == std::string::npos)
                throw CLI::ValidationError("--prop21 expects m,n");
            unsigned long m = std::stoul(leh_prop.substr(0, comma));
            unsigned long n = std::stoul(leh_prop.substr(comma + 1));
            auto rep = prop21_check(m, n, params);
            j["m"] = m;
            j["n"] = n;
            j["claims"] = json::array();
            for (const auto& c : rep.claims) {
                json e;
                e["claim"] = c.claim;
                e["applicable"] = c.applicable;
                e["pass"] = c.pass;
                if (!c.note.empty()) e["note"] = c.note;
                j["claims"].push_back(e);
            }
        } else {
            j["n"] = leh_n;
            j["p"] = dec(lehmer_P(leh_n, params));
            j["q"] = dec(lehmer_Q(leh_n, params));
        }
        doc = j.dump();
    });

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "bounded verification of a theorem");
    std::string ver_theorem;
    VerifyBounds ver_bounds;
    ver_cmd->add_option("--theorem", ver_theorem, "3.1 .. 3.12")->required();
    ver_cmd->add_option("--dmax", ver_bounds.d_max, "d (or k*l) bound");
    ver_cmd->add_option("--mmax", ver_bounds.m_max, "power bound");
    ver_cmd->add_flag("--strict", ver_bounds.strict_power_reading,
                      "strict q^r reading (Remark 3.3)");
    ver_cmd->add_option("--budget-seconds", ver_bounds.budget_seconds,
                        "abort cleanly after this many seconds");
    ver_cmd->callback([&] {
        auto id = theorem_from_name(ver_theorem);
        if (!id) throw CLI::ValidationError("unknown theorem " + ver_theorem);
        doc = emit_report(verify_theorem(*id, ver_bounds), !table_mode);
    });

    // gp
    auto* gp_cmd = app.add_subcommand("gp", "triangular geometric progressions");
    unsigned long gp_n = 0, gp_bound = 0;
    int gp_len = 3;
    std::string gp_form_d;
    int gp_form_c = 1;
    std::string gp_cap;
    gp_cmd->add_option("--construct", gp_n, "build the triple seeded at T_n");
    gp_cmd->add_option("--scan", gp_bound, "scan T_i for i up to the bound");
    gp_cmd->add_option("--length", gp_len, "3 or 4");
    gp_cmd->add_option("--form-d", gp_form_d, "scan values D m^2 +- C instead");
    gp_cmd->add_option("--form-c", gp_form_c, "C in {1, 2, 4}");
    gp_cmd->add_option("--cap", gp_cap, "value cap for the form scan");
    gp_cmd->callback([&] {
        json j;
        if (gp_n > 0) {
            auto g = gp_construct(Int(gp_n));
            if (!g) {
                j["progression"] = nullptr;
            } else {
                j["indices"] = json::array({dec(g->n1), dec(g->n2), dec(g->n3)});
                j["values"] = json::array({dec(g->t1), dec(g->t2), dec(g->t3)});
                j["ratio"] = g->ratio.get_str();
            }
        } else if (!gp_form_d.empty()) {
            Int cap = gp_cap.empty() ? Int(2'001'000) : parse_int(gp_cap);
            auto rows = gp_scan_form(parse_int(gp_form_d), gp_form_c, cap, gp_len);
            j["progressions"] = json::array();
            for (const auto& row : rows) j["progressions"].push_back(tuple_json(row));
        } else if (gp_bound > 0) {
            auto rows = gp_scan(gp_bound, gp_len);
            j["progressions"] = json::array();
            for (const auto& row : rows) j["progressions"].push_back(tuple_json(row));
        } else {
            throw CLI::ValidationError("gp needs --construct, --scan or --form-d");
        }
        doc = j.dump();
    });

    // ma
    auto* ma_cmd = app.add_subcommand("ma", "Ma-family equation solver");
    std::string ma_p;
    unsigned long ma_a = 1, ma_b = 1;
    std::vector<std::string> ma_k;
    std::vector<unsigned long> ma_t, ma_r;
    int ma_delta = 1, ma_c0 = 1;
    std::string ma_brute;
    ma_cmd->add_option("--p", ma_p, "odd prime (2 allowed for delta = +-1)")->required();
    ma_cmd->add_option("--a", ma_a)->required();
    ma_cmd->add_option("--b", ma_b)->required();
    ma_cmd->add_option("--k", ma_k, "k_i list")->required();
    ma_cmd->add_option("--t", ma_t, "t_i list")->required();
    ma_cmd->add_option("--r", ma_r, "r_i list")->required();
    ma_cmd->add_option("--delta", ma_delta, "+-1, +-2 or +-4");
    ma_cmd->add_option("--rhs-const", ma_c0, "1 or 4");
    ma_cmd->add_option("--bruteforce", ma_brute, "exhaustive scan bound instead");
    ma_cmd->callback([&] {
        std::vector<Int> ks;
        for (const auto& s : ma_k) ks.push_back(parse_int(s));
        MaInstance inst(parse_int(ma_p), ma_a, ma_b, ks, ma_t, ma_r, ma_delta, ma_c0);
        auto sols = ma_brute.empty() ? ma_solve(inst) : ma_bruteforce(inst, parse_int(ma_brute));
        json j;
        j["solutions"] = json::array();
        for (const auto& [x, y] : sols) j["solutions"].push_back(json::array({dec(x), dec(y)}));
        doc = j.dump();
    });

    // ljunggren
    auto* lj_cmd = app.add_subcommand("ljunggren", "quotient equation families");
    std::string lj_family = "quotient";
    LjQuery lj_query;
    std::string lj_a;
    bool lj_brute = false;
    lj_cmd->add_option("--family", lj_family, "quotient | shifted | general | general-linear");
    lj_cmd->add_option("--c", lj_query.c, "+-1, +-2 or +-4")->required();
    lj_cmd->add_option("--a", lj_a, "fix the coefficient a");
    lj_cmd->add_option("--amax", lj_query.bounds.a_max);
    lj_cmd->add_option("--xmax", lj_query.bounds.x_max);
    lj_cmd->add_option("--nmax", lj_query.bounds.n_max);
    lj_cmd->add_option("--lmax", lj_query.bounds.l_max);
    lj_cmd->add_option("--tmax", lj_query.bounds.t_max);
    lj_cmd->add_option("--bmax", lj_query.bounds.b_max);
    lj_cmd->add_flag("--bruteforce", lj_brute, "direct evaluation oracle instead");
    lj_cmd->callback([&] {
        if (lj_family == "quotient") lj_query.family = LjFamily::power_over_linear;
        else if (lj_family == "shifted") lj_query.family = LjFamily::shifted;
        else if (lj_family == "general") lj_query.family = LjFamily::general;
        else if (lj_family == "general-linear") lj_query.family = LjFamily::general_linear;
        else throw CLI::ValidationError("unknown family " + lj_family);
        if (!lj_a.empty()) lj_query.fixed_a = parse_int(lj_a);
        auto sols = lj_brute ? ljunggren_bruteforce(lj_query) : ljunggren_solve(lj_query);
        json j;
        j["solutions"] = json::array();
        for (const auto& s : sols) {
            json e;
            e["a"] = dec(s.a);
            e["b"] = dec(s.b);
            e["x"] = dec(s.x);
            e["y"] = dec(s.y);
            e["n"] = s.n;
            e["t"] = s.t;
            e["l"] = s.l;
            j["solutions"].push_back(e);
        }
        doc = j.dump();
    });

    std::vector<std::string> argv_like;
    argv_like.push_back("pellkit");
    argv_like.insert(argv_like.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_like) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const uncovered_error& e) {
        err << "uncovered: " << e.what() << "\n";
        return 1;
    } catch (const incomplete_factorization& e) {
        err << "incomplete factorization: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return 1;
    }

    try {
        write_out(doc, out_file, out);
    } catch (const std::runtime_error& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace pellkit::cli
