// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <queue>

#include "drg/checks.hpp"
#include "drg/derived.hpp"
#include "drg/proofs.hpp"
#include "drg/render.hpp"
#include "drg/triples.hpp"

using namespace drg;

namespace {

int failures = 0;

template <typename F>
void criterion(int n, const char* name, F&& f) {
    bool ok = false;
    std::string err;
    try {
        ok = f();
    } catch (const std::exception& e) {
        err = e.what();
    }
    std::cout << "criterion " << n << " (" << name
              << "): " << (ok ? "pass" : "fail");
    if (!err.empty()) std::cout << " [" << err << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

AffineForm linear(const Rat& coeff, const Rat& constant) {
    return AffineForm::variable("alpha", coeff) + AffineForm(constant);
}

// adjacency list -> all-pairs distances by BFS
std::vector<std::vector<int>> distances(
    const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::queue<int> q;
        q.push(s);
        dist[s][s] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[x])
                if (dist[s][y] < 0) {
                    dist[s][y] = dist[s][x] + 1;
                    q.push(y);
                }
        }
    }
    return dist;
}

std::vector<std::vector<int>> petersen_graph() {
    std::vector<std::vector<int>> adj(10);
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int i = 0; i < 5; ++i) {
        link(i, (i + 1) % 5);
        link(i, i + 5);
        link(5 + i, 5 + (i + 2) % 5);
    }
    return adj;
}

std::vector<std::vector<int>> cycle_graph(int n) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        adj[i].push_back((i + 1) % n);
        adj[(i + 1) % n].push_back(i);
    }
    return adj;
}

// brute-force oracle: p-tensor and triple-system membership
bool oracle_matches(const IntersectionArray& ia,
                    const std::vector<std::vector<int>>& adj) {
    auto dist = distances(adj);
    int n = static_cast<int>(adj.size());
    int d = ia.d();
    if (ia.n() != n) return false;
    // intersection numbers
    for (int h = 0; h <= d; ++h)
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j) {
                long count = -1;
                for (int u = 0; u < n && count < 0; ++u)
                    for (int v = 0; v < n; ++v)
                        if (dist[u][v] == h) {
                            count = 0;
                            for (int x = 0; x < n; ++x)
                                if (dist[u][x] == i && dist[v][x] == j)
                                    ++count;
                            break;
                        }
                if (count < 0) count = 0;  // empty distance class
                if (ia.p()(h, i, j) != count) return false;
            }
    // triple intersection numbers satisfy the parametric solutions
    std::set<std::array<int, 3>> seen;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w) {
                if (u == v || u == w || v == w) continue;
                std::array<int, 3> uvw{dist[v][w], dist[u][w], dist[u][v]};
                if (!seen.insert(uvw).second) continue;
                Array3D<Rat> count(d + 1);
                for (int x = 0; x < n; ++x)
                    count(dist[u][x], dist[v][x], dist[w][x]) += 1;
                TripleScenario sc{ia, uvw[0], uvw[1], uvw[2]};
                ParametricTriples pt = solve_triples(sc);
                std::map<std::string, Rat> vals;
                for (const std::string& fv : pt.free_vars) {
                    int i, j, h;
                    if (sscanf(fv.c_str(), "t_%d_%d_%d", &i, &j, &h) != 3)
                        return false;
                    vals[fv] = count(i, j, h);
                }
                for (int i = 0; i <= d; ++i)
                    for (int j = 0; j <= d; ++j)
                        for (int h = 0; h <= d; ++h)
                            if (pt.entries(i, j, h).evaluate(vals) !=
                                count(i, j, h))
                                return false;
            }
    return !seen.empty();
}

bool rational_row(const std::vector<NFElem>& row,
                  const std::vector<Rat>& want) {
    if (row.size() != want.size()) return false;
    for (size_t i = 0; i < row.size(); ++i)
        if (!row[i].is_rational() || row[i].to_rat() != want[i]) return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "Sylvester exact fixtures", [] {
        auto ia = IntersectionArray::parse("{5, 4, 2; 1, 1, 4}");
        bool ok = ia.n() == 36;
        auto sp = spectrum(ia);
        std::vector<Rat> ev_want = {Rat(5), Rat(2), Rat(-1), Rat(-3)};
        for (int i = 0; i <= 3; ++i)
            ok = ok && sp.eigenvalues[i].is_rational() &&
                 sp.eigenvalues[i].to_rat() == ev_want[i];
        ok = ok && sp.mults == std::vector<Rat>{Rat(1), Rat(16), Rat(10),
                                                Rat(9)};
        ok = ok && rational_row(sp.cosines[1], {Rat(1), make_rat(2, 5),
                                                make_rat(-1, 20),
                                                make_rat(-1, 5)});
        auto em = eigenmatrices(ia, sp);
        ok = ok && rational_row(em.P[1], {Rat(1), Rat(2), Rat(-1), Rat(-2)});
        ok = ok && rational_row(em.Q[1], {Rat(1), make_rat(32, 5), Rat(-2),
                                          make_rat(-27, 5)});
        auto q = krein(ia, sp);
        ok = ok && q(1, 1, 1) == make_rat(44, 5) &&
             q(2, 1, 1) == make_rat(176, 25) && q(3, 3, 3) == 0;
        // full p-tensor against the reference table
        long pw[4][4][4] = {
            {{1, 0, 0, 0}, {0, 5, 0, 0}, {0, 0, 20, 0}, {0, 0, 0, 10}},
            {{0, 1, 0, 0}, {1, 0, 4, 0}, {0, 4, 8, 8}, {0, 0, 8, 2}},
            {{0, 0, 1, 0}, {0, 1, 2, 2}, {1, 2, 11, 6}, {0, 2, 6, 2}},
            {{0, 0, 0, 1}, {0, 0, 4, 1}, {0, 4, 12, 4}, {1, 1, 4, 4}}};
        for (int h = 0; h <= 3; ++h)
            for (int i = 0; i <= 3; ++i)
                for (int j = 0; j <= 3; ++j)
                    ok = ok && ia.p()(h, i, j) == pw[h][i][j];
        // unique triple tensor for pairwise distances (1, 1, 2)
        TripleScenario sc{ia, 2, 1, 1};
        auto pt = solve_triples(sc);
        long tw[4][4][4] = {
            {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
            {{0, 0, 1, 0}, {0, 0, 0, 0}, {1, 0, 3, 0}, {0, 0, 0, 0}},
            {{0, 0, 0, 0}, {0, 0, 2, 2}, {0, 2, 2, 4}, {0, 2, 4, 2}},
            {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 6, 2}, {0, 0, 2, 0}}};
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j)
                for (int h = 0; h <= 3; ++h)
                    ok = ok && pt.entries(i, j, h).is_constant() &&
                         pt.entries(i, j, h).constant() == tw[i][j][h];
        return ok;
    });

    criterion(2, "diameter-3 triangle scenario replay", [] {
        auto ia = IntersectionArray::parse("{135, 128, 16; 1, 16, 120}");
        TripleScenario sc{ia, 1, 1, 1};
        sc.params = {{"alpha", Triple{1, 1, 1}}};
        auto pt = solve_triples(sc);
        bool ok =
            pt.entries(3, 3, 3) == linear(make_rat(-27, 8), make_rat(71, 8));
        // nonnegativity bounds alpha to {0, 1, 2}; each value makes
        // [3 3 3] nonintegral
        for (long a = 0; a <= 2; ++a) {
            Rat v = pt.entries(3, 3, 3).evaluate({{"alpha", Rat(a)}});
            ok = ok && v >= 0 && !is_integer(v);
        }
        ok = ok && pt.entries(3, 3, 3).evaluate({{"alpha", Rat(3)}}) < 0;
        auto an = analyze(pt, true);
        ok = ok && an.verdict == TripleAnalysis::Verdict::contradiction;
        auto cert = prove_builtin("g1360");
        return ok && cert.verdict == Certificate::Verdict::nonexistent;
    });

    criterion(3, "diameter-3 (3,3,3) scenario replay", [] {
        auto ia = IntersectionArray::parse("{234, 165, 12; 1, 30, 198}");
        TripleScenario sc{ia, 3, 3, 3};
        sc.params = {{"alpha", Triple{3, 3, 3}}};
        auto pt = solve_triples(sc);
        bool ok = pt.entries(3, 3, 2) == linear(Rat(-4), Rat(-17));
        auto an = analyze(pt, false);
        ok = ok && an.verdict == TripleAnalysis::Verdict::contradiction;
        auto cert = prove_builtin("g1600");
        return ok && cert.verdict == Certificate::Verdict::nonexistent;
    });

    criterion(4, "bipartite diameter-5 counting replay", [] {
        auto ia = IntersectionArray::parse(
            "{55, 54, 50, 35, 10; 1, 5, 20, 45, 55}");
        TripleScenario sc{ia, 2, 2, 2};
        sc.params = {{"alpha", Triple{1, 1, 1}}};
        auto pt = solve_triples(sc);
        bool ok = pt.entries(5, 5, 5) == linear(Rat(-12), Rat(20));
        auto an = analyze(pt, true);
        Rat cap(-1);
        if (auto it = an.forced.find({1, 1, 1}); it != an.forced.end()) {
            cap = it->second;
        } else {
            for (const auto& asg : an.feasible_assignments)
                if (auto a = asg.find("alpha"); a != asg.end())
                    cap = std::max(cap, a->second);
        }
        ok = ok && cap == 1;
        auto cb = counting_bound(ia, cap);
        ok = ok && cb.edges_out == 265 && cb.capacity == 243 && cb.violated;
        auto cert = prove_builtin("bip5");
        return ok && cert.verdict == Certificate::Verdict::nonexistent;
    });

    criterion(5, "two-parameter family sweep (r,t) in [1,4]^2", [] {
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        for (long r = 1; r <= 4; ++r)
            for (long t = 1; t <= 4; ++t) {
                std::string name = "family(" + std::to_string(r) + "," +
                                   std::to_string(t) + ")";
                auto cert = prove_builtin(name);
                ok = ok && cert.verdict == Certificate::Verdict::nonexistent;
                bool short_circuit =
                    cert.steps.size() == 1 &&
                    cert.steps[0].description.find("infeasible") !=
                        std::string::npos;
                if (short_circuit) continue;  // fails a standard condition
                bool saw_alpha = false, saw_113 = false;
                for (const auto& s : cert.steps) {
                    if (auto a = s.values.find("alpha"); a != s.values.end()) {
                        ok = ok && parse_rat(a->second) == Rat(4 * r - 1);
                        saw_alpha = true;
                    }
                    if (auto e = s.values.find("[1 1 3]");
                        e != s.values.end()) {
                        ok = ok && parse_rat(e->second) ==
                                       Rat(2 * t) - make_rat(1, 2);
                        saw_113 = true;
                    }
                }
                ok = ok && saw_alpha && saw_113;
            }
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        return ok && elapsed < 10000;
    });

    criterion(6, "derived-graph fixtures", [] {
        auto q7 = IntersectionArray::parse(
            "{7, 6, 5, 4, 3, 2, 1; 1, 2, 3, 4, 5, 6, 7}");
        bool ok = antipodal_quotient(q7).str() == "{7, 6, 5; 1, 2, 3}";
        ok = ok && bipartite_half(q7).str() == "{21, 10, 3; 1, 6, 15}";
        auto m236 = merge_classes(q7, {2, 3, 6});
        ok = ok && m236 && m236->str() == "{63, 30, 1; 1, 30, 63}";
        auto m246 = merge_classes(q7, {2, 4, 6});
        ok = ok && m246 && m246->str() == "{63; 1}";
        auto m17 = merge_classes(q7, {1, 7});
        ok = ok && m17 && m17->str() == "{8, 7, 6, 5; 1, 2, 3, 8}";
        auto pet = IntersectionArray::parse("{3, 2; 1, 1}");
        ok = ok && complement_srg(pet).str() == "{6, 2; 1, 4}";
        // all fifteen distance graphs of the 7-cube
        std::map<std::set<int>, std::string> want = {
            {{1, 2}, "{28, 15, 6, 1; 1, 6, 15, 28}"},
            {{1, 2, 3, 4, 5, 6}, "{126, 1; 1, 126}"},
            {{1, 3, 5}, "{63, 62, 1; 1, 62, 63}"},
            {{1, 3, 5, 7}, "{64, 63; 1, 64}"},
            {{1, 4, 5}, "{63, 32, 1; 1, 32, 63}"},
            {{1, 5}, "{28, 27, 16; 1, 12, 28}"},
            {{1, 7}, "{8, 7, 6, 5; 1, 2, 3, 8}"},
            {{2}, "{21, 10, 3; 1, 6, 15}"},
            {{2, 3, 6}, "{63, 30, 1; 1, 30, 63}"},
            {{2, 4, 6}, "{63; 1}"},
            {{2, 6}, "{28, 15; 1, 12}"},
            {{3, 7}, "{36, 35, 16; 1, 20, 36}"},
            {{4}, "{35, 16; 1, 20}"},
            {{6}, "{7, 6, 5; 1, 2, 3}"},
            {{7}, "{1; 1}"}};
        auto got = distance_graphs(q7);
        ok = ok && got.size() == want.size();
        for (const auto& [s, text] : want) {
            auto it = got.find(s);
            ok = ok && it != got.end() && it->second.str() == text;
        }
        return ok;
    });

    criterion(7, "feasibility battery fixtures", [] {
        auto bad = check_feasible(
            IntersectionArray::from_srg(Int(266), Int(220), Int(210)));
        bool ok = !bad.feasible() &&
                  bad.first_failure() ==
                      "complement: nonexistence by GavrilyukMakhnev05";
        for (const char* text :
             {"{3, 2; 1, 1}", "{2, 1; 1, 1}", "{4, 3, 2, 1; 1, 2, 3, 4}",
              "{7, 6, 5, 4, 3, 2, 1; 1, 2, 3, 4, 5, 6, 7}",
              "{5, 4, 2; 1, 1, 4}"})
            ok = ok && check_feasible(IntersectionArray::parse(text))
                           .feasible();
        return ok;
    });

    criterion(8, "brute-force oracle equivalence", [] {
        bool ok = oracle_matches(IntersectionArray::parse("{3, 2; 1, 1}"),
                                 petersen_graph());
        return ok && oracle_matches(IntersectionArray::parse("{2, 1; 1, 1}"),
                                    cycle_graph(5));
    });

    criterion(9, "exact identity property suites", [] {
        bool ok = true;
        for (const char* text :
             {"{3, 2; 1, 1}", "{2, 1; 1, 1}", "{5, 4, 2; 1, 1, 4}",
              "{4, 3, 2, 1; 1, 2, 3, 4}",
              "{7, 6, 5, 4, 3, 2, 1; 1, 2, 3, 4, 5, 6, 7}"}) {
            auto ia = IntersectionArray::parse(text);
            auto sp = spectrum(ia);
            int d = ia.d();
            Rat total(0);
            for (const Rat& m : sp.mults) total += m;
            ok = ok && total == Rat(ia.n());
            auto em = eigenmatrices(ia, sp);
            for (int i = 0; i <= d; ++i)
                for (int j = 0; j <= d; ++j) {
                    NFElem s(Rat(0));
                    for (int l = 0; l <= d; ++l)
                        s = s + em.P[i][l] * em.Q[l][j];
                    ok = ok && s == NFElem(i == j ? Rat(ia.n()) : Rat(0));
                }
            auto q = krein(ia, sp);
            for (int h = 0; h <= d; ++h)
                for (int i = 0; i <= d; ++i)
                    for (int j = 0; j <= d; ++j) {
                        ok = ok && Int(ia.kk(h) * ia.p()(h, i, j)) ==
                                       Int(ia.kk(i) * ia.p()(i, h, j));
                        ok = ok && sp.mults[h] * q(h, i, j) ==
                                       sp.mults[i] * q(i, h, j);
                    }
        }
        // 4-cube: formally self-dual, P = Q
        auto h4 = IntersectionArray::parse("{4, 3, 2, 1; 1, 2, 3, 4}");
        ok = ok && is_formally_self_dual(h4);
        auto sp4 = spectrum(h4);
        auto em4 = eigenmatrices(h4, sp4);
        ok = ok && em4.P == em4.Q;
        return ok;
    });

    criterion(10, "pentagon number-field path", [] {
        auto ia = IntersectionArray::parse("{2, 1; 1, 1}");
        auto sp = spectrum(ia);
        bool ok = sp.eigenvalues[0].is_rational() &&
                  sp.eigenvalues[0].to_rat() == 2;
        ok = ok && !sp.eigenvalues[1].is_rational() &&
             sp.eigenvalues[1].minpoly().str() == "x^2 + x - 1";
        ok = ok && !sp.eigenvalues[2].is_rational() &&
             sp.eigenvalues[2].minpoly().str() == "x^2 + x - 1";
        ok = ok && sp.mults == std::vector<Rat>{Rat(1), Rat(2), Rat(2)};
        auto q = krein(ia, sp);  // Krein entries are exact rationals
        Rat sum(0);
        for (int h = 0; h <= 2; ++h)
            for (int i = 0; i <= 2; ++i)
                for (int j = 0; j <= 2; ++j) sum += q(h, i, j);
        return ok && sum > 0;
    });

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
