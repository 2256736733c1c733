#include "drg/derived.hpp"

namespace drg {

IntersectionArray antipodal_quotient(const IntersectionArray& ia) {
    auto r = ia.antipodal_index();
    if (!r)
        throw std::domain_error("antipodal_quotient: graph is not antipodal");
    int d = ia.d(), e = d / 2;
    if (e < 1)
        throw std::domain_error("antipodal_quotient: diameter too small");
    std::vector<Int> b, c;
    for (int i = 0; i < e; ++i) b.push_back(ia.b(i));
    for (int i = 1; i < e; ++i) c.push_back(ia.c(i));
    Int gamma = (d % 2 == 0) ? *r : Int(1);
    c.push_back(gamma * ia.c(e));
    return IntersectionArray(std::move(b), std::move(c));
}

IntersectionArray bipartite_half(const IntersectionArray& ia) {
    if (!ia.is_bipartite())
        throw std::domain_error("bipartite_half: graph is not bipartite");
    int d = ia.d(), e = d / 2;
    if (e < 1)
        throw std::domain_error("bipartite_half: diameter too small");
    const Int& c2 = ia.c(2);
    std::vector<Int> b, c;
    for (int i = 0; i < e; ++i) {
        Int num = ia.b(2 * i) * ia.b(2 * i + 1);
        if (num % c2 != 0)
            throw InfeasibleError("halved-graph b_" + std::to_string(i) +
                                  " is not integral");
        b.push_back(num / c2);
    }
    for (int i = 1; i <= e; ++i) {
        Int num = ia.c(2 * i - 1) * ia.c(2 * i);
        if (num % c2 != 0)
            throw InfeasibleError("halved-graph c_" + std::to_string(i) +
                                  " is not integral");
        c.push_back(num / c2);
    }
    return IntersectionArray(std::move(b), std::move(c));
}

IntersectionArray complement_srg(const IntersectionArray& ia) {
    if (ia.d() != 2)
        throw std::domain_error("complement_srg: graph is not strongly regular");
    Int v = ia.n(), k = ia.k();
    Int lambda = ia.a(1), mu = ia.c(2);
    Int kc = v - k - 1;
    Int lc = v - 2 * k + mu - 2;
    Int mc = v - 2 * k + lambda;
    if (mc <= 0 || kc >= v - 1)
        throw std::domain_error("complement_srg: complement is disconnected");
    return IntersectionArray::from_srg(kc, lc, mc);
}

std::optional<IntersectionArray> merge_classes(const IntersectionArray& ia,
                                               const std::set<int>& S) {
    int d = ia.d();
    if (S.empty()) throw std::invalid_argument("merge_classes: empty class set");
    for (int s : S)
        if (s < 1 || s > d)
            throw std::invalid_argument("merge_classes: class index out of range");
    const auto& p = ia.p();
    // BFS layering of the classes under the merged adjacency
    std::vector<int> layer(d + 1, -1);
    layer[0] = 0;
    std::vector<std::vector<int>> layers{{0}};
    while (true) {
        std::vector<int> next;
        for (int h = 0; h <= d; ++h) {
            if (layer[h] >= 0) continue;
            bool adj = false;
            for (int i : S) {
                for (int j : layers.back())
                    if (p(h, i, j) > 0) {
                        adj = true;
                        break;
                    }
                if (adj) break;
            }
            if (adj) next.push_back(h);
        }
        if (next.empty()) break;
        for (int h : next) layer[h] = static_cast<int>(layers.size());
        layers.push_back(std::move(next));
    }
    int dd = static_cast<int>(layers.size()) - 1;
    if (dd < 1) return std::nullopt;
    // merged b/c parameters must be constant across each layer
    std::vector<Int> b, c;
    for (int m = 0; m <= dd; ++m) {
        std::optional<Int> bm, cm;
        for (int h : layers[m]) {
            Int bh = 0, ch = 0;
            if (m < dd)
                for (int i : S)
                    for (int j : layers[m + 1]) bh += p(h, i, j);
            if (m > 0)
                for (int i : S)
                    for (int j : layers[m - 1]) ch += p(h, i, j);
            if (!bm) {
                bm = bh;
                cm = ch;
            } else if (*bm != bh || *cm != ch) {
                return std::nullopt;
            }
        }
        if (m < dd) b.push_back(*bm);
        if (m > 0) c.push_back(*cm);
    }
    try {
        return IntersectionArray(std::move(b), std::move(c));
    } catch (const InfeasibleError&) {
        return std::nullopt;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::map<std::set<int>, IntersectionArray> distance_graphs(
    const IntersectionArray& ia) {
    int d = ia.d();
    std::map<std::set<int>, IntersectionArray> out;
    for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
        std::set<int> S;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) S.insert(i + 1);
        if (S == std::set<int>{1}) continue;
        auto merged = merge_classes(ia, S);
        if (merged) out.emplace(std::move(S), std::move(*merged));
    }
    return out;
}

}  // namespace drg
