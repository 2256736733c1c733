// drg: command-line interface for exact distance-regular graph parameter
// computations, feasibility checking, triple-intersection-number systems,
// nonexistence proof replays, and distance-partition diagrams.
//
// Exit codes: 0 = feasible / no failure found, 2 = infeasibility or
// nonexistence established, 1 = usage or validation error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "drg/checks.hpp"
#include "drg/classical.hpp"
#include "drg/proofs.hpp"
#include "drg/render.hpp"
#include "drg/triples.hpp"

using namespace drg;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------
// input grammar: "{b0, ...; c1, ...}", "srg(k,l,m)", "srg(v,k,l,m)",
// "classical(d,b,alpha,beta)" with rational p/q literals

std::vector<std::string> split_args(const std::string& body) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : body) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

IntersectionArray parse_input(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!isspace(static_cast<unsigned char>(ch))) text += ch;
    if (text.empty()) throw std::invalid_argument("empty input");
    if (text[0] == '{') return IntersectionArray::parse(raw);
    auto call = [&](const std::string& head) -> std::optional<std::vector<std::string>> {
        if (text.rfind(head + "(", 0) != 0 || text.back() != ')')
            return std::nullopt;
        return split_args(
            text.substr(head.size() + 1, text.size() - head.size() - 2));
    };
    if (auto a = call("srg")) {
        if (a->size() == 3)
            return IntersectionArray::from_srg(Int((*a)[0]), Int((*a)[1]),
                                               Int((*a)[2]));
        if (a->size() == 4) {
            auto ia = IntersectionArray::from_srg(Int((*a)[1]), Int((*a)[2]),
                                                  Int((*a)[3]));
            if (ia.n() != Int((*a)[0]))
                throw std::invalid_argument(
                    "srg: stated order " + (*a)[0] + " does not match n = " +
                    ia.n().get_str());
            return ia;
        }
        throw std::invalid_argument("srg takes 3 or 4 arguments");
    }
    if (auto a = call("classical")) {
        if (a->size() != 4)
            throw std::invalid_argument("classical takes 4 arguments");
        return IntersectionArray::from_classical(std::stoi((*a)[0]),
                                                 Int((*a)[1]),
                                                 parse_rat((*a)[2]),
                                                 parse_rat((*a)[3]));
    }
    throw std::invalid_argument("unrecognized input: " + raw);
}

// ---------------------------------------------------------------------
// JSON value policy: integers that fit a machine long are numbers,
// everything else is exact "num/den" (or symbolic) text

json rat_json(const Rat& r) {
    if (is_integer(r) && r.get_num().fits_slong_p())
        return json(r.get_num().get_si());
    return json(rat_str(r));
}

json int_json(const Int& v) { return rat_json(Rat(v)); }

json nf_json(const NFElem& e) {
    if (e.is_rational()) return rat_json(e.to_rat());
    return json(e.str());
}

template <typename T, typename F>
json tensor_json(const Array3D<T>& a, F&& f) {
    json out = json::array();
    for (size_t b = 0; b < a.dim(); ++b) {
        json blk = json::array();
        for (size_t r = 0; r < a.dim(); ++r) {
            json row = json::array();
            for (size_t c = 0; c < a.dim(); ++c) row.push_back(f(a(b, r, c)));
            blk.push_back(row);
        }
        out.push_back(blk);
    }
    return out;
}

json matrix_json(const NFMatrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(nf_json(e));
        out.push_back(r);
    }
    return out;
}

template <typename Seq, typename F>
std::string join(const Seq& seq, F&& f) {
    std::string out;
    for (const auto& x : seq) {
        if (!out.empty()) out += ", ";
        out += f(x);
    }
    return out;
}

// ---------------------------------------------------------------------
// params

int cmd_params(const std::string& input, const std::string& format) {
    IntersectionArray ia = parse_input(input);
    Spectrum sp = spectrum(ia);
    Eigenmatrices em = eigenmatrices(ia, sp);
    KreinTensor q = krein(ia, sp);
    auto classical = is_classical(ia);
    auto gp = gen_poly_params(ia);
    int d = ia.d();

    std::vector<Int> at, bt, ct, kt;
    for (int i = 1; i <= d; ++i) at.push_back(ia.a(i));
    for (int i = 0; i < d; ++i) bt.push_back(ia.b(i));
    for (int i = 1; i <= d; ++i) ct.push_back(ia.c(i));
    for (int i = 0; i <= d; ++i) kt.push_back(ia.kk(i));
    auto ints = [](const std::vector<Int>& v) {
        return join(v, [](const Int& x) { return x.get_str(); });
    };

    if (format == "json") {
        json j;
        j["array"] = ia.str();
        j["order"] = int_json(ia.n());
        j["valency"] = int_json(ia.k());
        j["diameter"] = d;
        json ja = json::array(), jb = json::array(), jc = json::array(),
             jk = json::array();
        for (const Int& x : at) ja.push_back(int_json(x));
        for (const Int& x : bt) jb.push_back(int_json(x));
        for (const Int& x : ct) jc.push_back(int_json(x));
        for (const Int& x : kt) jk.push_back(int_json(x));
        j["aTable"] = ja;
        j["bTable"] = jb;
        j["cTable"] = jc;
        j["kTable"] = jk;
        j["pTable"] = tensor_json(ia.p(), int_json);
        json ev = json::array(), mu = json::array();
        for (const auto& e : sp.eigenvalues)
            ev.push_back(e.is_rational() ? rat_json(e.to_rat())
                                         : json(e.str()));
        for (const Rat& m : sp.mults) mu.push_back(rat_json(m));
        j["eigenvalues"] = ev;
        j["multiplicities"] = mu;
        j["cosineSequences"] = matrix_json(sp.cosines);
        j["P"] = matrix_json(em.P);
        j["Q"] = matrix_json(em.Q);
        j["formallySelfDual"] = is_formally_self_dual(ia);
        j["kreinParameters"] = tensor_json(q, rat_json);
        json cl = json::array();
        for (const auto& cp : classical)
            cl.push_back({cp.d, int_json(cp.b), rat_json(cp.alpha),
                          rat_json(cp.beta)});
        j["classicalParameters"] = cl;
        if (gp)
            j["genPoly"] = {gp->g, int_json(gp->s), int_json(gp->t)};
        else
            j["genPoly"] = nullptr;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "array: " << ia.str() << "\n";
    std::cout << "order: " << ia.n().get_str() << "\n";
    std::cout << "valency: " << ia.k().get_str() << "\n";
    std::cout << "diameter: " << d << "\n";
    std::cout << "aTable: " << ints(at) << "\n";
    std::cout << "bTable: " << ints(bt) << "\n";
    std::cout << "cTable: " << ints(ct) << "\n";
    std::cout << "kTable: " << ints(kt) << "\n";
    std::cout << "pTable:\n" << render_tensor(ia.p());
    std::cout << "eigenvalues: "
              << join(sp.eigenvalues,
                      [](const AlgebraicNumber& e) { return e.str(); })
              << "\n";
    std::cout << "multiplicities: "
              << join(sp.mults, [](const Rat& m) { return rat_str(m); })
              << "\n";
    std::cout << "cosine sequences:\n" << render_matrix(sp.cosines);
    std::cout << "eigenmatrix P:\n" << render_matrix(em.P);
    std::cout << "dual eigenmatrix Q:\n" << render_matrix(em.Q);
    std::cout << "formally self-dual: "
              << (is_formally_self_dual(ia) ? "yes" : "no") << "\n";
    std::cout << "Krein parameters:\n" << render_tensor(q);
    if (classical.empty()) {
        std::cout << "classical parameters: none\n";
    } else {
        std::cout << "classical parameters: "
                  << join(classical,
                          [](const ClassicalParams& cp) {
                              return "(" + std::to_string(cp.d) + ", " +
                                     cp.b.get_str() + ", " +
                                     rat_str(cp.alpha) + ", " +
                                     rat_str(cp.beta) + ")";
                          })
                  << "\n";
    }
    if (gp)
        std::cout << "generalized polygon: (" << gp->g << ", "
                  << gp->s.get_str() << ", " << gp->t.get_str() << ")\n";
    else
        std::cout << "generalized polygon: none\n";
    return 0;
}

// ---------------------------------------------------------------------
// check

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
        case CheckStatus::not_implemented: return "not implemented";
    }
    return "?";
}

void print_report(const CheckReport& rep, const std::string& indent) {
    std::cout << indent << rep.array.str() << "\n";
    for (const auto& o : rep.outcomes) {
        std::cout << indent << "  " << o.name << ": " << status_str(o.status);
        if (!o.message.empty()) std::cout << " — " << o.message;
        if (!o.refs.empty())
            std::cout << " ["
                      << join(o.refs, [](const std::string& t) { return t; })
                      << "]";
        std::cout << "\n";
    }
    for (const auto& [path, child] : rep.derived) {
        std::cout << indent << "  " << path << ":\n";
        print_report(child, indent + "    ");
    }
}

json report_json(const CheckReport& rep) {
    json j;
    j["array"] = rep.array.str();
    j["feasible"] = rep.feasible();
    j["outcomes"] = json::array();
    for (const auto& o : rep.outcomes) {
        json jo;
        jo["name"] = o.name;
        jo["status"] = status_str(o.status);
        jo["message"] = o.message;
        jo["refs"] = o.refs;
        j["outcomes"].push_back(jo);
    }
    j["derived"] = json::array();
    for (const auto& [path, child] : rep.derived)
        j["derived"].push_back({{"path", path}, {"report", report_json(child)}});
    return j;
}

int cmd_check(const std::string& input, const std::set<std::string>& skip,
              bool recurse, const std::string& format) {
    IntersectionArray ia = parse_input(input);
    CheckReport rep = check_feasible(ia, skip, recurse);
    if (format == "json") {
        json j = report_json(rep);
        if (auto ff = rep.first_failure()) j["firstFailure"] = *ff;
        std::cout << j.dump(2) << "\n";
    } else {
        print_report(rep, "");
        if (auto ff = rep.first_failure())
            std::cout << "InfeasibleError: " << *ff << "\n";
        else
            std::cout << "feasible\n";
    }
    return rep.feasible() ? 0 : 2;
}

// ---------------------------------------------------------------------
// triples

int cmd_triples(const std::string& input, int u, int v, int w,
                const std::vector<std::string>& pin_args, bool enumerate,
                const std::string& format) {
    IntersectionArray ia = parse_input(input);
    // arguments follow the printed layout: the tensor entry [i j h] counts
    // vertices at distances i, j, h from the three vertices, whose pairwise
    // distances are given in the same order as the blocks below
    TripleScenario sc{ia, w, v, u};
    for (const std::string& p : pin_args) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("pin must look like i,j,h=value");
        auto idx = split_args(p.substr(0, eq));
        if (idx.size() != 3)
            throw std::invalid_argument("pin needs three indices: " + p);
        Triple t{std::stoi(idx[0]), std::stoi(idx[1]), std::stoi(idx[2])};
        std::string rhs = p.substr(eq + 1);
        bool numeric = !rhs.empty() &&
                       rhs.find_first_not_of("0123456789/-") == std::string::npos;
        if (numeric)
            sc.pins[t] = parse_rat(rhs);
        else
            sc.params[rhs] = t;
    }
    ParametricTriples pt = solve_triples(sc);
    std::optional<TripleAnalysis> an;
    if (enumerate) an = analyze(pt, true);

    if (format == "json") {
        json j;
        j["array"] = ia.str();
        j["scenario"] = {u, v, w};
        j["entries"] = tensor_json(
            pt.entries, [](const AffineForm& f) { return json(f.str()); });
        j["parameters"] = pt.free_vars;
        if (an) {
            json ja;
            ja["verdict"] = an->verdict == TripleAnalysis::Verdict::consistent
                                ? "consistent"
                                : (an->verdict ==
                                           TripleAnalysis::Verdict::contradiction
                                       ? "contradiction"
                                       : "inconclusive");
            ja["reason"] = an->reason;
            ja["feasiblePoints"] = json::array();
            for (const auto& asg : an->feasible_assignments) {
                json pj = json::object();
                for (const auto& [name, val] : asg) pj[name] = rat_json(val);
                ja["feasiblePoints"].push_back(pj);
            }
            ja["forced"] = json::array();
            for (const auto& [t, val] : an->forced)
                ja["forced"].push_back(
                    {{"entry", {t[0], t[1], t[2]}}, {"value", rat_json(val)}});
            j["analysis"] = ja;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_tensor(pt.entries);
        if (!pt.free_vars.empty())
            std::cout << "parameters: "
                      << join(pt.free_vars,
                              [](const std::string& s) { return s; })
                      << "\n";
        if (an) {
            if (an->verdict == TripleAnalysis::Verdict::contradiction) {
                std::cout << "no feasible points: " << an->reason << "\n";
            } else if (an->verdict == TripleAnalysis::Verdict::inconclusive) {
                std::cout << "inconclusive: " << an->reason << "\n";
            } else {
                std::cout << "feasible points: "
                          << an->feasible_assignments.size() << "\n";
                for (const auto& asg : an->feasible_assignments) {
                    std::string line;
                    for (const auto& [name, val] : asg) {
                        if (!line.empty()) line += ", ";
                        line += name + " = " + rat_str(val);
                    }
                    std::cout << "  " << (line.empty() ? "(unique)" : line)
                              << "\n";
                }
                std::cout << "forced entries:\n";
                for (const auto& [t, val] : an->forced)
                    std::cout << "  [" << t[0] << " " << t[1] << " " << t[2]
                              << "] = " << rat_str(val) << "\n";
            }
        }
    }
    if (an && an->verdict == TripleAnalysis::Verdict::contradiction) return 2;
    return 0;
}

// ---------------------------------------------------------------------
// prove / scan

int cmd_prove(const std::string& name, const std::string& format) {
    Certificate cert = prove_builtin(name);
    if (format == "json")
        std::cout << certificate_to_json(cert) << "\n";
    else
        std::cout << certificate_trace(cert);
    return cert.verdict == Certificate::Verdict::nonexistent ? 2 : 0;
}

std::pair<long, long> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        long v = std::stol(text);
        return {v, v};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
}

int cmd_scan(const std::string& family, const std::string& r_range,
             const std::string& t_range, const std::string& format) {
    if (family != "fameven")
        throw std::invalid_argument("unknown family: " + family);
    auto [r0, r1] = parse_range(r_range);
    auto [t0, t1] = parse_range(t_range);
    if (r0 < 1 || t0 < 1 || r1 < r0 || t1 < t0)
        throw std::invalid_argument("invalid scan range");
    long total = 0, nonex = 0;
    json items = json::array();
    for (long r = r0; r <= r1; ++r)
        for (long t = t0; t <= t1; ++t) {
            std::string name =
                "family(" + std::to_string(r) + "," + std::to_string(t) + ")";
            Certificate cert = prove_builtin(name);
            ++total;
            bool ne = cert.verdict == Certificate::Verdict::nonexistent;
            if (ne) ++nonex;
            if (format == "json")
                items.push_back(json::parse(certificate_to_json(cert)));
            else
                std::cout << name << " " << cert.array << ": "
                          << (ne ? "nonexistent" : "inconclusive") << "\n";
        }
    if (format == "json") {
        json j;
        j["certificates"] = items;
        j["total"] = total;
        j["nonexistent"] = nonex;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << total << " instances: " << nonex << " nonexistent, "
                  << (total - nonex) << " inconclusive\n";
    }
    return 0;
}

// ---------------------------------------------------------------------
// partition

int cmd_partition(const std::string& input, std::optional<int> distance,
                  const std::string& format) {
    IntersectionArray ia = parse_input(input);
    std::string dot = partition_dot(ia, distance);
    if (format == "json") {
        json j;
        j["array"] = ia.str();
        j["dot"] = dot;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << dot;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "drg — exact computations with distance-regular graph parameters.\n"
        "Inputs: \"{b0, ...; c1, ..., cd}\", \"srg(k,l,m)\", "
        "\"srg(v,k,l,m)\", \"classical(d,b,alpha,beta)\" (rationals as "
        "p/q).\n"
        "Three-dimensional arrays print in blocks: the block index is the "
        "distance from the third vertex, rows are distances from the "
        "first, columns from the second."};
    app.require_subcommand(1);
    std::string format = "text";

    std::string in_params;
    auto* sub_params =
        app.add_subcommand("params", "derived parameter tables");
    sub_params->add_option("array", in_params, "intersection array")
        ->required();
    sub_params->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json"}));

    std::string in_check, skip_csv;
    bool no_recurse = false;
    auto* sub_check = app.add_subcommand("check", "feasibility battery");
    sub_check->add_option("array", in_check, "intersection array")
        ->required();
    sub_check->add_option("--skip", skip_csv, "checks to skip (commas)");
    sub_check->add_flag("--no-recurse", no_recurse,
                        "do not recurse into derived graphs");
    sub_check->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json"}));

    std::string in_triples;
    int tu = 0, tv = 0, tw = 0;
    std::vector<std::string> pins;
    bool enumerate = false;
    auto* sub_triples =
        app.add_subcommand("triples", "triple intersection numbers");
    sub_triples->add_option("array", in_triples)->required();
    sub_triples->add_option("U", tu)->required();
    sub_triples->add_option("V", tv)->required();
    sub_triples->add_option("W", tw)->required();
    sub_triples->add_option("--pin", pins,
                            "i,j,h=value (pin) or i,j,h=name (parameter)");
    sub_triples->add_flag("--enumerate", enumerate,
                          "enumerate integral solutions");
    sub_triples->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json"}));

    std::string case_name;
    auto* sub_prove =
        app.add_subcommand("prove", "replay a nonexistence proof");
    sub_prove
        ->add_option("case", case_name,
                     "g1360, g1600, bip5, or family(r,t)")
        ->required();
    sub_prove->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json"}));

    std::string family = "fameven", r_range = "1..4", t_range = "1..4";
    auto* sub_scan = app.add_subcommand("scan", "scan a parameter family");
    sub_scan->add_option("--family", family, "family name (fameven)");
    sub_scan->add_option("--r", r_range, "range, e.g. 1..4");
    sub_scan->add_option("--t", t_range, "range, e.g. 1..4");
    sub_scan->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json"}));

    std::string in_part;
    int part_dist = -1;
    auto* sub_part = app.add_subcommand(
        "partition", "distance partition diagram (DOT)");
    sub_part->add_option("array", in_part)->required();
    sub_part->add_option("distance", part_dist,
                         "distance between the two base vertices");
    sub_part->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(sub_params))
            return cmd_params(in_params, format);
        if (app.got_subcommand(sub_check)) {
            std::set<std::string> skip;
            if (!skip_csv.empty())
                for (const std::string& s : split_args(skip_csv))
                    skip.insert(s);
            return cmd_check(in_check, skip, !no_recurse, format);
        }
        if (app.got_subcommand(sub_triples))
            return cmd_triples(in_triples, tu, tv, tw, pins, enumerate,
                               format);
        if (app.got_subcommand(sub_prove)) return cmd_prove(case_name, format);
        if (app.got_subcommand(sub_scan))
            return cmd_scan(family, r_range, t_range, format);
        if (app.got_subcommand(sub_part))
            return cmd_partition(
                in_part,
                part_dist < 0 ? std::nullopt : std::optional<int>(part_dist),
                format);
    } catch (const InfeasibleError& e) {
        std::cout << "InfeasibleError: " << e.reason() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
