#include "drg/checks.hpp"

#include <json.hpp>

#include <functional>
#include <map>

#include "drg/classical.hpp"
#include "drg/derived.hpp"
#include "drg/spectrum.hpp"

namespace drg {

namespace detail {
extern const char* const REFERENCES_JSON;
}

// ---------------------------------------------------------------------------
// Report structure

bool CheckReport::feasible() const {
    for (const auto& o : outcomes)
        if (o.status == CheckStatus::fail) return false;
    for (const auto& [path, rep] : derived)
        if (!rep.feasible()) return false;
    return true;
}

static std::optional<std::string> first_failure_rec(const CheckReport& rep,
                                                    const std::string& prefix) {
    for (const auto& o : rep.outcomes)
        if (o.status == CheckStatus::fail) {
            std::string msg = "nonexistence by ";
            for (size_t i = 0; i < o.refs.size(); ++i)
                msg += (i ? ", " : "") + o.refs[i];
            return prefix.empty() ? msg : prefix + ": " + msg;
        }
    for (const auto& [path, sub] : rep.derived) {
        auto full = prefix.empty() ? path : prefix + ": " + path;
        if (auto r = first_failure_rec(sub, full)) return r;
    }
    return std::nullopt;
}

std::optional<std::string> CheckReport::first_failure() const {
    return first_failure_rec(*this, "");
}

const std::vector<std::string>& check_catalog() {
    static const std::vector<std::string> names = {
        // implemented battery, in execution order
        "sporadic", "family", "classical", "2graph", "conference",
        "geodeticEmbedding", "hadamard", "genPoly", "combinatorial",
        "absoluteBound",
        // catalogued but not implemented here
        "classicalCharacterization", "2design", "antipodal", "clawBound",
        "terwilliger", "secondEigenvalue", "localEigenvalue"};
    return names;
}

static CheckOutcome pass(const char* name) {
    return {name, CheckStatus::pass, "", {}};
}
static CheckOutcome fail(const char* name, std::string msg,
                         std::vector<std::string> refs) {
    return {name, CheckStatus::fail, std::move(msg), std::move(refs)};
}

// ---------------------------------------------------------------------------
// sporadic

CheckOutcome check_sporadic(const IntersectionArray& ia) {
    struct Entry {
        const char* text;
        std::vector<std::string> refs;
    };
    static const std::vector<Entry> table = {
        {"{14, 12; 1, 4}", {"WilbrinkBrouwer83"}},
        {"{16, 12; 1, 6}", {"BussemakerHaemersMathonWilbrink89"}},
        {"{21, 18; 1, 7}", {"Haemers93"}},
        {"{30, 21; 1, 14}", {"BondarenkoPrymakRadchenko17"}},
        {"{32, 21; 1, 16}", {"AzarijaMarc18"}},
        {"{38, 27; 1, 18}", {"Degraer07"}},
        {"{40, 27; 1, 20}", {"AzarijaMarc16"}},
        {"{57, 56; 1, 12}", {"GavrilyukMakhnev05"}},
        {"{67, 56; 1, 2}", {"BrouwerNeumaier81"}},
        {"{116, 115; 1, 20}", {"Makhnev17"}},
        {"{153, 120; 1, 60}", {"BondarenkoEtAl18"}},
        {"{165, 128; 1, 66}", {"Makhnev02"}},
        {"{486, 320; 1, 243}", {"Makhnev02"}},
        {"{5, 4, 3; 1, 1, 2}", {"FonDerFlaass93b"}},
        {"{11, 10, 10; 1, 1, 11}", {"LamThielSwiercz89"}},
        {"{13, 10, 7; 1, 2, 7}", {"Coolsaet95"}},
        {"{18, 12, 1; 1, 2, 18}", {"BCN", "PayneThas09"}},
        {"{20, 10, 10; 1, 1, 2}", {"LamThielSwiercz89"}},
        {"{21, 16, 8; 1, 4, 14}", {"Coolsaet05"}},
        {"{22, 16, 5; 1, 2, 20}", {"SumalrojWorawannotai16"}},
        {"{27, 20, 10; 1, 2, 18}", {"BrouwerSumalrojWorawannotai16"}},
        {"{36, 28, 4; 1, 2, 24}", {"BrouwerSumalrojWorawannotai16"}},
        {"{39, 24, 1; 1, 4, 39}", {"BangGavrilyukKoolen18"}},
        {"{45, 30, 7; 1, 2, 27}", {"GavrilyukMakhnev13"}},
        {"{52, 35, 16; 1, 4, 28}", {"GavrilyukMakhnev12"}},
        {"{55, 36, 11; 1, 4, 45}", {"Gavrilyuk11"}},
        {"{56, 36, 9; 1, 3, 48}", {"Gavrilyuk11"}},
        {"{69, 48, 24; 1, 4, 46}", {"GavrilyukMakhnev12"}},
        {"{74, 54, 15; 1, 9, 60}", {"CoolsaetJurisic08"}},
        {"{105, 102, 99; 1, 2, 35}", {"DeBruynVanhove15"}},
        {"{130, 96, 18; 1, 12, 117}", {"JurisicVidali17"}},
        {"{135, 128, 16; 1, 16, 120}", {"Cert1360"}},
        {"{234, 165, 12; 1, 30, 198}", {"Cert1600"}},
        {"{4818, 4248, 192; 1, 72, 4672}", {"JurisicVidali17"}},
        {"{5928, 5920, 5888; 1, 5, 741}", {"DeBruynVanhove15"}},
        {"{120939612, 120939520, 120933632; 1, 65, 1314561}",
         {"DeBruynVanhove15"}},
        {"{97571175, 97571080, 97569275; 1, 20, 1027065}",
         {"DeBruynVanhove15"}},
        {"{290116365, 290116260, 290100825; 1, 148, 2763013}",
         {"DeBruynVanhove15"}},
        {"{5, 4, 3, 3; 1, 1, 1, 2}", {"FonDerFlaass93a"}},
        {"{10, 9, 1, 1; 1, 1, 9, 10}", {"BCN"}},
        {"{32, 27, 6, 1; 1, 6, 27, 32}", {"Soicher17"}},
        {"{32, 27, 9, 1; 1, 3, 27, 32}", {"Soicher17"}},
        {"{56, 45, 20, 1; 1, 4, 45, 56}", {"BCN"}},
        {"{55, 54, 50, 35, 10; 1, 5, 20, 45, 55}", {"CertBip5"}},
        {"{15, 14, 12, 6, 1, 1; 1, 1, 3, 12, 14, 15}",
         {"IvanovShpectorov90"}},
    };
    const std::string key = ia.str();
    for (const auto& e : table)
        if (key == e.text)
            return fail("sporadic", "known nonexistent parameter set", e.refs);
    return pass("sporadic");
}

// ---------------------------------------------------------------------------
// family

namespace {

using BC = std::pair<std::vector<Int>, std::vector<Int>>;

struct Family {
    int nparams;
    long rmin, tmin;
    std::function<BC(const Int&, const Int&)> make;
    std::function<bool(const Int&, const Int&)> ok;  // side conditions
    std::vector<std::string> refs;
};

bool entries_match(const IntersectionArray& ia, const BC& bc) {
    const auto& [b, c] = bc;
    if (static_cast<int>(b.size()) != ia.d()) return false;
    for (int i = 0; i < ia.d(); ++i)
        if (ia.b(i) != b[i] || ia.c(i + 1) != c[i]) return false;
    return true;
}

const std::vector<Family>& family_table() {
    auto always = [](const Int&, const Int&) { return true; };
    static const std::vector<Family> fams = {
        {1, 3, 0,
         [](const Int& r, const Int&) -> BC {
             return {{r * r * (r + 3), (r + 1) * (r * r + 2 * r - 2)},
                     {Int(1), r * (r + 1)}};
         },
         [](const Int& r, const Int&) { return r != 4; },
         {"BondarenkoRadchenko13"}},
        {1, 2, 0,
         [](const Int& r, const Int&) -> BC {
             return {{(2 * r * r - 1) * (2 * r + 1), 4 * r * (r * r - 1),
                      2 * r * r},
                     {Int(1), 2 * (r * r - 1), r * (4 * r * r - 2)}};
         },
         always,
         {"JurisicVidali12"}},
        {1, 2, 0,
         [](const Int& r, const Int&) -> BC {
             return {{2 * r * r * (2 * r + 1),
                      (2 * r - 1) * (2 * r * r + r + 1), 2 * r * r},
                     {Int(1), 2 * r * r, r * (4 * r * r - 1)}};
         },
         always,
         {"JurisicVidali12"}},
        {1, 1, 0,
         [](const Int& r, const Int&) -> BC {
             return {{4 * r * r * r + 8 * r * r + 6 * r + 1,
                      2 * r * (r + 1) * (2 * r + 1), 2 * r * r + 2 * r + 1},
                     {Int(1), 2 * r * (r + 1),
                      (2 * r + 1) * (2 * r * r + 2 * r + 1)}};
         },
         always,
         {"CoolsaetJurisic08"}},
        {2, 1, 1,
         [](const Int& r, const Int& t) -> BC {
             return {{(2 * r + 1) * (4 * r + 1) * (4 * t - 1),
                      8 * r * (4 * r * t - r + 2 * t), (r + t) * (4 * r + 1)},
                     {Int(1), (r + t) * (4 * r + 1),
                      4 * r * (2 * r + 1) * (4 * t - 1)}};
         },
         always,
         {"CertFamily"}},
        {1, 3, 0,
         [](const Int& r, const Int&) -> BC {
             return {{(r + 1) * (r * r * r - 1),
                      r * (r - 1) * (r * r + r - 1), r * r - 1},
                     {Int(1), r * (r + 1),
                      (r * r - 1) * (r * r + r - 1)}};
         },
         always,
         {"Urlep12"}},
        {2, 3, 1,
         [](const Int& r, const Int& t) -> BC {
             return {{r * r * (r * t + t + 1), (r * r - 1) * (r * t + 1),
                      r * (r - 1) * (t + 1), Int(1)},
                     {Int(1), r * (t + 1), (r * r - 1) * (r * t + 1),
                      r * r * (r * t + t + 1)}};
         },
         [](const Int& r, const Int& t) {
             return !((r == 3 && t == 1) || (r == 3 && t == 3) ||
                      (r == 4 && t == 2));
         },
         {"JurisicKoolen11"}},
        {1, 2, 0,
         [](const Int& r, const Int&) -> BC {
             return {{2 * r * r + r, 2 * r * r + r - 1, r * r, r, Int(1)},
                     {Int(1), r, r * r, 2 * r * r + r - 1, 2 * r * r + r}};
         },
         always,
         {"CoolsaetJurisicKoolen08"}},
    };
    return fams;
}

}  // namespace

CheckOutcome check_family(const IntersectionArray& ia) {
    // b_0 is strictly increasing in each parameter over the allowed
    // ranges, so a bounded search over the parameters suffices.
    for (const auto& f : family_table()) {
        for (Int r(f.rmin);; ++r) {
            Int t0(f.nparams == 2 ? f.tmin : 0);
            if (f.make(r, t0).first[0] > ia.k()) break;
            if (f.nparams == 1) {
                if (f.ok(r, t0) && entries_match(ia, f.make(r, t0)))
                    return fail("family",
                                "member of a known nonexistent family",
                                f.refs);
                continue;
            }
            for (Int t(f.tmin); f.make(r, t).first[0] <= ia.k(); ++t)
                if (f.ok(r, t) && entries_match(ia, f.make(r, t)))
                    return fail("family",
                                "member of a known nonexistent family",
                                f.refs);
        }
    }
    return pass("family");
}

// ---------------------------------------------------------------------------
// classical

static Int ipow(Int base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

CheckOutcome check_classical_families(const IntersectionArray& ia) {
    for (const auto& cp : is_classical(ia)) {
        if (cp.d < 4) continue;
        if (cp.b == -2 && cp.alpha == -2 &&
            cp.beta == make_rat(ipow(Int(-2), cp.d + 1) - 1, Int(3)))
            return fail("classical",
                        "known nonexistent classical parameters",
                        {"HuangPanWeng15"});
        Int r = -cp.b;
        if (r >= 2 && cp.alpha == make_rat(-r, r - 1)) {
            Rat beta = Rat(r) + make_rat(r * r * (ipow(-r, cp.d - 1) - 1),
                                         r * r - 1);
            if (cp.beta == beta)
                return fail("classical",
                            "known nonexistent classical parameters",
                            {"DeBruynVanhove15"});
        }
    }
    return pass("classical");
}

// ---------------------------------------------------------------------------
// 2graph

CheckOutcome check_2graph(
    const IntersectionArray& ia,
    std::vector<std::pair<std::string, IntersectionArray>>* derived_out) {
    if (ia.d() == 2) {
        Int v = ia.n(), k = ia.k(), l = ia.a(1), m = ia.c(2);
        if (v == 2 * (2 * k - l - m) && k > m) {
            // parameters of the descendant strongly regular graph; recorded
            // for recursive checking when they are nondegenerate
            Int dv = v - 1, dk = 2 * (k - m), dl = k + l - 2 * m, dm = k - m;
            try {
                auto srg = IntersectionArray::from_srg(dk, dl, dm);
                if (srg.n() == dv && derived_out)
                    derived_out->push_back({"2graph", srg});
            } catch (const std::exception&) {
                // not a valid parameter set: nothing to record
            }
        }
    }
    if (ia.d() == 3 && ia.a(1) > 0) {
        auto r = ia.antipodal_index();
        if (r && *r == 2) {
            // Taylor graph
            Int k = ia.k(), a1 = ia.a(1);
            if (a1 % 2 != 0)
                return fail("2graph", "a_1 of a Taylor graph must be even",
                            {"BCN"});
            if (ia.n() % 4 != 0)
                return fail("2graph",
                            "order of a Taylor graph must be divisible by 4",
                            {"BCN"});
            Int ll = 3 * a1 - k - 1;
            if (ll % 2 != 0)
                return fail("2graph",
                            "local graph of a Taylor graph has nonintegral "
                            "parameters",
                            {"BCN"});
            try {
                auto local = IntersectionArray::from_srg(a1, ll / 2, a1 / 2);
                if (local.n() != k)
                    return fail("2graph",
                                "local parameters of a Taylor graph are not "
                                "those of a strongly regular graph",
                                {"BCN"});
                if (derived_out) derived_out->push_back({"local", local});
            } catch (const std::exception&) {
                return fail("2graph",
                            "local parameters of a Taylor graph are not "
                            "those of a strongly regular graph",
                            {"BCN"});
            }
        }
    }
    return pass("2graph");
}

// ---------------------------------------------------------------------------
// conference

CheckOutcome check_conference(const IntersectionArray& ia) {
    if (ia.d() != 2) return pass("conference");
    Int k = ia.k(), l = ia.a(1), m = ia.c(2), n = ia.n();
    if (k != 2 * m || m != k - l - 1) return pass("conference");
    if (n % 4 != 1)
        return fail("conference",
                    "conference graph order is not 1 mod 4", {"BCN"});
    if (!is_sum_of_two_squares(n))
        return fail("conference",
                    "conference graph order is not a sum of two squares",
                    {"BCN"});
    return pass("conference");
}

// ---------------------------------------------------------------------------
// geodeticEmbedding / hadamard

CheckOutcome check_geodetic_embedding(const IntersectionArray& ia) {
    // pattern {2b, b, 1; 1, 1, 2b}
    if (ia.d() == 3 && ia.c(2) == 1 && ia.b(2) == 1 && ia.c(3) == ia.k() &&
        2 * ia.b(1) == ia.k()) {
        if (ia.b(1) > 4)
            return fail("geodeticEmbedding",
                        "no geodetic embedding for b > 4", {"BCN"});
    }
    return pass("geodeticEmbedding");
}

CheckOutcome check_hadamard(const IntersectionArray& ia) {
    // pattern {2u, 2u-1, u, 1; 1, u, 2u-1, 2u} with u > 1
    if (ia.d() == 4) {
        Int u = ia.c(2);
        if (u > 1 && ia.k() == 2 * u && ia.b(1) == 2 * u - 1 &&
            ia.b(2) == u && ia.b(3) == 1 && ia.c(3) == 2 * u - 1 &&
            ia.c(4) == 2 * u && u % 2 != 0)
            return fail("hadamard",
                        "no Hadamard matrix of order 2 mod 4", {"BCN"});
    }
    return pass("hadamard");
}

// ---------------------------------------------------------------------------
// genPoly

static bool gq_divisibility(const Int& s, const Int& t) {
    return (s * t * (s + 1) * (t + 1)) % (s + t) == 0;
}

CheckOutcome check_gen_poly(const IntersectionArray& ia) {
    if (auto gp = gen_poly_params(ia)) {
        if (gp->s >= 2 && gp->t >= 2) {
            static const std::set<int> allowed = {2, 3, 4, 6, 8, 12};
            if (!allowed.count(gp->g))
                return fail("genPoly",
                            "no thick generalized polygon with this gonality",
                            {"BCN"});
            if (gp->g == 4 && !gq_divisibility(gp->s, gp->t))
                return fail("genPoly",
                            "generalized quadrangle divisibility condition "
                            "violated",
                            {"PayneThas09"});
        }
        if (gp->g == 6 && gp->t == 1) {
            // thin hexagon: projective plane of order s
            Int s = gp->s;
            Int res = s % 4;
            if ((res == 1 || res == 2) && !is_sum_of_two_squares(s))
                return fail("genPoly",
                            "no projective plane of this order", {"BCN"});
        }
    }
    if (ia.d() == 3) {
        auto r = ia.antipodal_index();
        if (r && ia.k() == (*r - 1) * (ia.c(2) + 1)) {
            // underlying generalized quadrangle of order (r-1, c_2+1)
            Int s = *r - 1, t = ia.c(2) + 1;
            if (s >= 2 && t >= 2 && !gq_divisibility(s, t))
                return fail("genPoly",
                            "underlying generalized quadrangle is infeasible",
                            {"BCN", "PayneThas09"});
        }
    }
    return pass("genPoly");
}

// ---------------------------------------------------------------------------
// combinatorial

CheckOutcome check_combinatorial_basic(const IntersectionArray& ia) {
    if (ia.d() >= 2 && ia.b(1) == 1) {
        bool polygon = ia.k() == 2;
        bool cocktail = ia.d() == 2 && ia.c(2) == ia.k();
        if (!polygon && !cocktail)
            return fail("combinatorial",
                        "a graph with b_1 = 1 must be a cycle or a cocktail "
                        "party graph",
                        {"BCN"});
    }
    // handshake conditions (also enforced at construction)
    for (int i = 1; i <= ia.d(); ++i)
        if ((ia.kk(i) * ia.a(i)) % 2 != 0)
            return fail("combinatorial", "handshake lemma violated", {"BCN"});
    return pass("combinatorial");
}

// ---------------------------------------------------------------------------
// absoluteBound

CheckOutcome check_absolute_bound(const IntersectionArray& ia) {
    try {
        auto sp = spectrum(ia);
        auto q = krein(ia, sp);
        int d = ia.d();
        for (int i = 1; i <= d; ++i)
            for (int j = i; j <= d; ++j) {
                Rat sum = 0;
                for (int h = 0; h <= d; ++h)
                    if (q(h, i, j) != 0) sum += sp.mults[h];
                Rat bound = i == j
                                ? sp.mults[i] * (sp.mults[i] + 1) / 2
                                : Rat(sp.mults[i] * sp.mults[j]);
                if (sum > bound)
                    return fail("absoluteBound",
                                "absolute bound on multiplicities exceeded",
                                {"BCN"});
            }
    } catch (const InfeasibleError& e) {
        auto refs = e.refs();
        if (refs.empty()) refs = {"BCN"};
        return fail("absoluteBound", e.reason(), std::move(refs));
    } catch (const UnsupportedError& e) {
        return {"absoluteBound", CheckStatus::skipped, e.what(), {}};
    }
    return pass("absoluteBound");
}

// ---------------------------------------------------------------------------
// battery

static CheckReport run_battery(const IntersectionArray& ia,
                               const std::set<std::string>& skip, bool recurse,
                               std::set<std::string>& visited) {
    visited.insert(ia.str());
    CheckReport rep{ia, {}, {}};
    std::vector<std::pair<std::string, IntersectionArray>> derived;

    for (const auto& name : check_catalog()) {
        if (skip.count(name)) {
            rep.outcomes.push_back({name, CheckStatus::skipped, "", {}});
            continue;
        }
        if (name == "sporadic")
            rep.outcomes.push_back(check_sporadic(ia));
        else if (name == "family")
            rep.outcomes.push_back(check_family(ia));
        else if (name == "classical")
            rep.outcomes.push_back(check_classical_families(ia));
        else if (name == "2graph")
            rep.outcomes.push_back(check_2graph(ia, &derived));
        else if (name == "conference")
            rep.outcomes.push_back(check_conference(ia));
        else if (name == "geodeticEmbedding")
            rep.outcomes.push_back(check_geodetic_embedding(ia));
        else if (name == "hadamard")
            rep.outcomes.push_back(check_hadamard(ia));
        else if (name == "genPoly")
            rep.outcomes.push_back(check_gen_poly(ia));
        else if (name == "combinatorial")
            rep.outcomes.push_back(check_combinatorial_basic(ia));
        else if (name == "absoluteBound")
            rep.outcomes.push_back(check_absolute_bound(ia));
        else
            rep.outcomes.push_back({name, CheckStatus::not_implemented, "",
                                    {}});
    }

    if (!recurse) return rep;

    std::vector<std::pair<std::string, IntersectionArray>> targets;
    if (ia.d() >= 2 && ia.antipodal_index())
        targets.push_back({"antipodalQuotient", antipodal_quotient(ia)});
    if (ia.d() >= 2 && ia.is_bipartite())
        targets.push_back({"bipartiteHalf", bipartite_half(ia)});
    if (ia.d() == 2) {
        try {
            targets.push_back({"complement", complement_srg(ia)});
        } catch (const std::exception&) {
            // disconnected complement: nothing to derive
        }
    }
    for (auto& dg : derived) targets.push_back(std::move(dg));
    if (ia.d() <= 8) {
        for (const auto& [S, arr] : distance_graphs(ia)) {
            std::string path = "merge(";
            bool first = true;
            for (int i : S) {
                path += (first ? "" : ",") + std::to_string(i);
                first = false;
            }
            path += ")";
            targets.push_back({path, arr});
        }
    }

    for (const auto& [path, arr] : targets) {
        if (visited.count(arr.str())) continue;
        rep.derived.push_back(
            {path, run_battery(arr, skip, recurse, visited)});
    }
    return rep;
}

CheckReport check_feasible(const IntersectionArray& ia,
                           const std::set<std::string>& skip, bool recurse) {
    std::set<std::string> visited;
    return run_battery(ia, skip, recurse, visited);
}

// ---------------------------------------------------------------------------
// reference database

static std::map<std::string, RefEntry> load_refs() {
    auto doc = nlohmann::json::parse(detail::REFERENCES_JSON);
    std::map<std::string, RefEntry> refs;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() == "_meta") continue;
        const auto& j = *it;
        RefEntry e;
        e.tag = it.key();
        if (j.contains("authors"))
            for (const auto& a : j["authors"]) {
                std::vector<std::string> given;
                if (a.size() > 1)
                    for (const auto& g : a[1])
                        given.push_back(g.get<std::string>());
                e.authors.push_back({a[0].get<std::string>(), given});
            }
        if (j.contains("title")) e.title = j["title"].get<std::string>();
        if (j.contains("journal")) e.journal = j["journal"].get<std::string>();
        if (j.contains("fjournal"))
            e.fjournal = j["fjournal"].get<std::string>();
        if (j.contains("type")) e.type = j["type"].get<std::string>();
        if (j.contains("number")) e.number = j["number"].get<long>();
        if (j.contains("volume")) e.volume = j["volume"].get<long>();
        if (j.contains("year")) e.year = j["year"].get<long>();
        if (j.contains("pages"))
            e.pages = std::pair<long, long>(j["pages"][0].get<long>(),
                                            j["pages"][1].get<long>());
        refs[e.tag] = std::move(e);
    }
    return refs;
}

const RefEntry& refs_lookup(const std::string& tag) {
    static const std::map<std::string, RefEntry> refs = load_refs();
    return refs.at(tag);
}

}  // namespace drg
