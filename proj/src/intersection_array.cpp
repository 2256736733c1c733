#include "drg/intersection_array.hpp"

#include <sstream>

namespace drg {

IntersectionArray::IntersectionArray(std::vector<Int> b, std::vector<Int> c) {
    if (b.empty() || b.size() != c.size())
        throw std::invalid_argument(
            "intersection array needs equal-length nonempty halves");
    d_ = static_cast<int>(b.size());
    b_ = std::move(b);
    b_.push_back(0);
    c_ = std::move(c);
    c_.insert(c_.begin(), 0);
    a_.resize(d_ + 1);
    for (int i = 0; i <= d_; ++i) a_[i] = b_[0] - b_[i] - c_[i];
    validate_shape();
    kseq_.assign(1, 1);
    for (int i = 0; i < d_; ++i) {
        Int num = kseq_[i] * b_[i];
        if (num % c_[i + 1] != 0)
            throw InfeasibleError("k_" + std::to_string(i + 1) +
                                  " is not an integer");
        kseq_.push_back(num / c_[i + 1]);
    }
    n_ = 0;
    for (const Int& ki : kseq_) n_ += ki;
    // handshake conditions for each subconstituent, edges and triangles
    for (int i = 0; i <= d_; ++i)
        if ((kseq_[i] * a_[i]) % 2 != 0)
            throw InfeasibleError("handshake fails in subconstituent " +
                                  std::to_string(i));
    if ((n_ * b_[0]) % 2 != 0)
        throw InfeasibleError("odd number of edge endpoints");
    if ((n_ * b_[0] * a_[1]) % 6 != 0)
        throw InfeasibleError("triangle count is not an integer");
    build_tensor();
}

void IntersectionArray::validate_shape() const {
    for (int i = 0; i < d_; ++i)
        if (b_[i] <= 0)
            throw InfeasibleError("b_" + std::to_string(i) + " must be positive");
    for (int i = 1; i <= d_; ++i)
        if (c_[i] <= 0)
            throw InfeasibleError("c_" + std::to_string(i) + " must be positive");
    for (int i = 0; i <= d_; ++i)
        if (a_[i] < 0)
            throw InfeasibleError("a_" + std::to_string(i) + " is negative");
    for (int i = 0; i + 1 < d_; ++i)
        if (b_[i] < b_[i + 1])
            throw InfeasibleError("b sequence must be non-ascending");
    for (int i = 1; i < d_; ++i)
        if (c_[i] > c_[i + 1])
            throw InfeasibleError("c sequence must be non-descending");
    for (int i = 1; i <= d_; ++i)
        for (int j = 0; j < d_; ++j)
            if (i + j <= d_ && b_[j] < c_[i])
                throw InfeasibleError("b_j >= c_i fails for i+j <= d");
}

void IntersectionArray::build_tensor() {
    int m = d_ + 1;
    // B_i[h][j] = p^h_ij via the regular-representation recurrence
    auto mat = [m]() { return std::vector<std::vector<Int>>(m, std::vector<Int>(m, 0)); };
    std::vector<std::vector<std::vector<Int>>> B;
    B.push_back(mat());
    for (int h = 0; h < m; ++h) B[0][h][h] = 1;
    auto B1 = mat();
    for (int h = 0; h < m; ++h) {
        if (h > 0) B1[h][h - 1] = c_[h];
        B1[h][h] = a_[h];
        if (h < d_) B1[h][h + 1] = b_[h];
    }
    B.push_back(B1);
    for (int i = 1; i < d_; ++i) {
        auto next = mat();
        for (int h = 0; h < m; ++h)
            for (int j = 0; j < m; ++j) {
                Int v = 0;
                for (int l = 0; l < m; ++l) v += B1[h][l] * B[i][l][j];
                v -= a_[i] * B[i][h][j];
                if (i >= 1) v -= b_[i - 1] * B[i - 1][h][j];
                if (v % c_[i + 1] != 0)
                    throw InfeasibleError("intersection number p^" +
                                          std::to_string(h) + "_{" +
                                          std::to_string(i + 1) + "," +
                                          std::to_string(j) + "} is not integral");
                next[h][j] = v / c_[i + 1];
                if (next[h][j] < 0)
                    throw InfeasibleError("intersection number p^" +
                                          std::to_string(h) + "_{" +
                                          std::to_string(i + 1) + "," +
                                          std::to_string(j) + "} is negative");
            }
        B.push_back(std::move(next));
    }
    p_ = PTensor(m);
    for (int h = 0; h < m; ++h)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) p_(h, i, j) = B[i][h][j];
}

IntersectionArray IntersectionArray::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 5 || s.front() != '{' || s.back() != '}')
        throw std::invalid_argument("intersection array must look like {b...; c...}");
    s = s.substr(1, s.size() - 2);
    auto semi = s.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("intersection array needs a ';'");
    auto split_ints = [](const std::string& part) {
        std::vector<Int> out;
        std::stringstream ss(part);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("invalid integer in intersection array: '" +
                                            tok + "'");
            out.emplace_back(tok);
        }
        return out;
    };
    auto b = split_ints(s.substr(0, semi));
    auto c = split_ints(s.substr(semi + 1));
    if (b.empty() || b.size() != c.size())
        throw std::invalid_argument("intersection array halves must be nonempty and equal length");
    return IntersectionArray(std::move(b), std::move(c));
}

IntersectionArray IntersectionArray::from_srg(const Int& k, const Int& lambda,
                                              const Int& mu) {
    if (mu <= 0) throw InfeasibleError("mu must be positive");
    Int num = k * (k - lambda - 1);
    if (num % mu != 0)
        throw InfeasibleError("number of vertices of the strongly regular graph is not integral");
    Int v = 1 + k + num / mu;
    (void)v;
    return IntersectionArray({k, k - 1 - lambda}, {1, mu});
}

IntersectionArray IntersectionArray::from_classical(int d, const Int& b,
                                                    const Rat& alpha,
                                                    const Rat& beta) {
    if (b == 0 || b == -1)
        throw std::invalid_argument("classical parameter b must not be 0 or -1");
    if (d < 1) throw std::invalid_argument("classical diameter must be positive");
    // Gaussian bracket [i]_b
    auto bracket = [&](int i) {
        if (b == 1) return Rat(i);
        Rat bi(1);
        for (int t = 0; t < i; ++t) bi *= Rat(b);
        return Rat((bi - 1) / (Rat(b) - 1));
    };
    std::vector<Int> bs, cs;
    for (int i = 0; i < d; ++i) {
        Rat bi = (bracket(d) - bracket(i)) * (beta - alpha * bracket(i));
        if (!is_integer(bi) || bi <= 0)
            throw InfeasibleError("classical b_" + std::to_string(i) +
                                  " is not a positive integer");
        bs.push_back(to_int(bi));
    }
    for (int i = 1; i <= d; ++i) {
        Rat ci = bracket(i) * (Rat(1) + alpha * bracket(i - 1));
        if (!is_integer(ci) || ci <= 0)
            throw InfeasibleError("classical c_" + std::to_string(i) +
                                  " is not a positive integer");
        cs.push_back(to_int(ci));
    }
    return IntersectionArray(std::move(bs), std::move(cs));
}

bool IntersectionArray::is_bipartite() const {
    for (int i = 0; i <= d_; ++i)
        if (a_[i] != 0) return false;
    return true;
}

std::optional<Int> IntersectionArray::antipodal_index() const {
    int half = d_ / 2;
    for (int i = 0; i <= d_; ++i) {
        if (i == half) continue;
        if (b_[i] != c_[d_ - i]) return std::nullopt;
    }
    return kseq_[d_] + 1;
}

std::string IntersectionArray::str() const {
    std::ostringstream os;
    os << "{";
    for (int i = 0; i < d_; ++i) os << (i ? ", " : "") << b_[i].get_str();
    os << "; ";
    for (int i = 1; i <= d_; ++i) os << (i > 1 ? ", " : "") << c_[i].get_str();
    os << "}";
    return os.str();
}

}  // namespace drg
