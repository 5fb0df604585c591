#pragma once

// Independent reference computations used to cross-check the library.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <random>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

using Int = std::int64_t;
using Q = boost::rational<Int>;

// Fraction-free Gaussian elimination.
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Gaussian elimination over Q on a sparse copy of the matrix, so banded inputs stay cheap.
inline Q rational_det(const std::vector<std::vector<Int>>& in) {
    const std::size_t n = in.size();
    std::vector<std::map<std::size_t, Q>> rows(n);
    std::vector<std::set<std::size_t>> cols(n);  // rows with a nonzero entry in each column
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (in[i][j] != 0) {
                rows[i][j] = Q(in[i][j]);
                cols[j].insert(i);
            }
    std::vector<std::size_t> perm(n);  // logical row k lives in rows[perm[k]]
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> where(n);
    std::iota(where.begin(), where.end(), 0);
    Q det(1);
    for (std::size_t k = 0; k < n; ++k) {
        // pivot: any physical row not yet used with a nonzero in column k
        std::size_t piv = n;
        for (std::size_t r : cols[k])
            if (where[r] >= k) {
                piv = r;
                break;
            }
        if (piv == n) return Q(0);
        if (where[piv] != k) {
            const std::size_t other = perm[k];
            std::swap(perm[k], perm[where[piv]]);
            std::swap(where[piv], where[other]);
            det = -det;
        }
        const Q pivot = rows[piv].at(k);
        det *= pivot;
        std::vector<std::size_t> targets;
        for (std::size_t r : cols[k])
            if (where[r] > k) targets.push_back(r);
        for (std::size_t r : targets) {
            const Q f = rows[r].at(k) / pivot;
            for (const auto& [j, v] : rows[piv]) {
                Q& e = rows[r][j];
                e -= f * v;
                if (e.numerator() == 0) {
                    rows[r].erase(j);
                    cols[j].erase(r);
                } else {
                    cols[j].insert(r);
                }
            }
        }
    }
    return det;
}

// b0 - 1/(b1 - 1/(...))
inline Q continued_fraction(const std::vector<Int>& b) {
    Q v(b.back());
    for (std::size_t i = b.size() - 1; i-- > 0;) v = Q(b[i]) - Q(1) / v;
    return v;
}

inline Int pow3(int e) {
    Int p = 1;
    while (e-- > 0) p *= 3;
    return p;
}

struct Form {
    Int a;
    bool y;
};

// x^a w for a <= m(g-1); x^a y w for a <= (m-1)(g-1) - 2.
inline std::vector<Form> basis(Int g, Int m) {
    std::vector<Form> out;
    for (Int a = 0; a <= m * (g - 1); ++a) out.push_back({a, false});
    if (!(m == 2 && g == 2))
        for (Int a = 0; a <= (m - 1) * (g - 1) - 2; ++a) out.push_back({a, true});
    return out;
}

// Survival as the two integer inequalities alpha1 + 2 alpha2 >= 3m(3^{c-1} - 1),
// alpha2 >= 0, for the point (Q, P) and for (P, Q) with the axes exchanged.
inline bool survives(const Form& l, const Form& r, int c, Int m) {
    const Int n = pow3(c), g = (n - 1) / 2;
    const Int bound = 3 * m * (n / 3 - 1);
    auto at_q = [&](const Form& f) { return 2 * m * (g - 1) - 2 * f.a - (f.y ? n : 0); };
    const bool alpha = at_q(l) + 2 * r.a >= bound && r.a >= 0;
    const bool beta = at_q(r) + 2 * l.a >= bound && l.a >= 0;
    return alpha && beta;
}

inline bool invariant(const Form& l, const Form& r, int c, Int m) {
    const Int n = pow3(c);
    return (((r.a + m) - (l.a + m)) % n + n) % n == 0;
}

inline Int plurigenus(int c, Int m) {
    const Int g = (pow3(c) - 1) / 2;
    Int count = 0;
    const auto b = basis(g, m);
    for (const auto& l : b)
        for (const auto& r : b)
            if (survives(l, r, c, m) && invariant(l, r, c, m)) ++count;
    return count;
}

// Three blow-up/quotient rounds written out with plain fractions.
inline std::pair<Q, Q> tower_stepwise(Q a1, Q a2, int c, Int m) {
    a1 = a1 + a2 + Q(m);
    a1 = a1 + a2 + Q(m);
    a1 = (a1 - Q(2 * m)) / Q(3);
    for (int i = 2; i <= c; ++i) a1 = (a1 - Q(2 * m)) / Q(3);
    return {a1, a2};
}

using Elem = std::pair<Int, Int>;

inline Elem add(Elem x, Elem y, Int n1, Int n2) { return {(x.first + y.first) % n1, (x.second + y.second) % n2}; }

inline Int order(Elem x, Int n1, Int n2) {
    Int k = 1;
    Elem y = x;
    while (y != Elem{0, 0}) {
        y = add(y, x, n1, n2);
        ++k;
    }
    return k;
}

// All images of Z/4 (first) or Z/2 x Z/2 (second) in Z/n1 x Z/n2 that are injective and whose
// four points have pairwise-distinct coordinates in both factors.
inline std::pair<int, int> distinct_component_injections(Int n1, Int n2) {
    std::vector<Elem> all;
    for (Int i = 0; i < n1; ++i)
        for (Int j = 0; j < n2; ++j) all.push_back({i, j});
    auto distinct = [](const std::vector<Elem>& pts) {
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (pts[i].first == pts[j].first || pts[i].second == pts[j].second) return false;
        return true;
    };
    int cyclic = 0, klein = 0;
    for (const Elem& g : all) {
        if (order(g, n1, n2) != 4) continue;
        Elem g2 = add(g, g, n1, n2), g3 = add(g2, g, n1, n2);
        if (distinct({{0, 0}, g, g2, g3})) ++cyclic;
    }
    for (const Elem& u : all)
        for (const Elem& v : all) {
            if (order(u, n1, n2) != 2 || order(v, n1, n2) != 2 || u == v) continue;
            if (distinct({{0, 0}, u, v, add(u, v, n1, n2)})) ++klein;
        }
    return {cyclic, klein};
}

}  // namespace oracle
