#include "cubics/monomial.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace cubics {

const char* const kVarNames[kNumVars] = {"x0", "x1", "x2", "x3", "t"};

Monomial Monomial::var(int v, int e) {
    Monomial m;
    m.exps[v] = e;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.exps[i] = exps[i] + o.exps[i];
    return r;
}

std::string Monomial::str() const {
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += kVarNames[i];
        if (exps[i] >= 2) s += '^' + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
}

bool graded_lex_before(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    // lex with x0 > x1 > x2 > x3 > t
    for (int i = 0; i < kNumVars; ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    }
    return false;
}

namespace {

std::vector<Monomial> enumerate_degree(int d) {
    std::vector<Monomial> out;
    for (int e0 = d; e0 >= 0; --e0)
        for (int e1 = d - e0; e1 >= 0; --e1)
            for (int e2 = d - e0 - e1; e2 >= 0; --e2) {
                Monomial m;
                m.exps = {e0, e1, e2, d - e0 - e1 - e2, 0};
                out.push_back(m);
            }
    return out;
}

}  // namespace

const std::vector<Monomial>& monomials_of_degree(int d) {
    if (d < 0) throw std::invalid_argument("monomials_of_degree: negative degree");
    // deque: element addresses stay valid while the cache grows
    static std::deque<std::vector<Monomial>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= d)
        cache.push_back(enumerate_degree(static_cast<int>(cache.size())));
    return cache[d];
}

long graded_dim(int d) {
    if (d < 0) throw std::invalid_argument("graded_dim: negative degree");
    return static_cast<long>(d + 1) * (d + 2) * (d + 3) / 6;
}

}  // namespace cubics
