#include "ellmod/pluricanonical_tower.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellmod {

namespace {

Int genus_checked(int c, Int g) {
    require_c(c);
    if (g != genus_for(c)) throw DomainError("form genus does not match (3^c - 1)/2");
    return g;
}

std::vector<Int> differences(const std::vector<Int>& v) {
    std::vector<Int> out;
    for (std::size_t i = 1; i < v.size(); ++i) out.push_back(v[i] - v[i - 1]);
    return out;
}

bool all_equal(const std::vector<Int>& v, Int x) {
    return std::all_of(v.begin(), v.end(), [x](Int y) { return y == x; });
}

}  // namespace

std::string BasisForm::to_string() const {
    std::string out;
    if (a == 1) out += "x";
    else if (a > 1) out += "x^" + std::to_string(a);
    if (uses_y) out += "y";
    return out + "w";
}

std::vector<BasisForm> kock_tait_basis(Int g, Int m) {
    if (g < 2) throw DomainError("genus must be >= 2");
    if (m < 1) throw DomainError("m must be >= 1");
    std::vector<BasisForm> basis;
    if (m == 1) {
        for (Int a = 0; a <= g - 1; ++a) basis.push_back({a, false, m, g});
        return basis;
    }
    const Int x_top = checked_mul(m, g - 1);
    for (Int a = 0; a <= x_top; ++a) basis.push_back({a, false, m, g});
    if (m == 2 && g == 2) return basis;
    const Int y_top = (m - 1) * (g - 1) - 2;
    for (Int a = 0; a <= y_top; ++a) basis.push_back({a, true, m, g});
    return basis;
}

VanishingOrders vanishing_orders(const BasisForm& f, int c) {
    const Int g = genus_checked(c, f.g);
    Int at_q = 2 * f.m * (g - 1) - 2 * f.a;
    if (f.uses_y) at_q -= pow3(c);
    return {f.a, at_q};
}

VanishSeq blowup_transform(const VanishSeq& v, Int m) { return {v.first + v.second + m, v.second}; }

VanishSeq quotient_transform_point(const VanishSeq& v, Int m) {
    return {(v.first - Rational(2 * m)) / Rational(3), v.second};
}

Int survival_threshold(int c, Int m) { return checked_mul(3 * m, pow3(c - 1) - 1); }

namespace {

VanishSeq tower_closed_form(const VanishSeq& v, int c, Int m) {
    const Rational threshold(survival_threshold(c, m));
    return {(v.first + Rational(2) * v.second - threshold) / Rational(pow3(c)), v.second};
}

}  // namespace

TowerResult tower_pushforward(const VanishSeq& v, int c, Int m) {
    require_c(c);
    TowerResult out;
    out.closed_form = tower_closed_form(v, c, m);

    out.trace.levels.push_back({0, v});
    // Round 1: two blow-ups over the point, then the first Z/3 quotient.
    VanishSeq cur = quotient_transform_point(blowup_transform(blowup_transform(v, m), m), m);
    out.trace.levels.push_back({1, cur});
    // Later rounds: the point lies on a pointwise-fixed divisor, so the blow-ups are
    // isomorphisms locally and only the quotient acts.
    for (int level = 2; level <= c; ++level) {
        cur = quotient_transform_point(cur, m);
        out.trace.levels.push_back({level, cur});
    }
    return out;
}

bool section_survives(const ProductForm& p, int c) {
    if (p.left.m != p.right.m || p.left.g != p.right.g) throw DomainError("product form factors disagree on m or g");
    const Int m = p.left.m;
    const VanishingOrders left = vanishing_orders(p.left, c);
    const VanishingOrders right = vanishing_orders(p.right, c);
    // (alpha1, alpha2) at (Q, P1); (beta1, beta2) at (P1, Q).
    const VanishSeq alpha{Rational(left.at_q), Rational(right.at_p)};
    const VanishSeq beta{Rational(left.at_p), Rational(right.at_q)};
    const VanishSeq top_alpha = tower_closed_form(alpha, c, m);
    // At (P1, Q) the fixed divisor lies along the other axis.
    const VanishSeq top_beta = tower_closed_form({beta.second, beta.first}, c, m);
    auto nonneg = [](const VanishSeq& s) { return s.first >= Rational(0) && s.second >= Rational(0); };
    return nonneg(top_alpha) && nonneg(top_beta);
}

bool gc_invariant(const ProductForm& p, int c) {
    const Int n = pow3(c);
    // psi scales x by zeta and omega by zeta^m and fixes y; the left factor carries psi^-1.
    const Int left = -(p.left.a + p.left.m);
    const Int right = p.right.a + p.right.m;
    return mod(left + right, n) == 0;
}

PlurigenusResult plurigenus(int c, Int m) {
    require_c(c);
    if (m < 2) throw DomainError("m must be >= 2");
    const std::vector<BasisForm> basis = kock_tait_basis(genus_for(c), m);
    PlurigenusResult out;
    for (const BasisForm& l : basis) {
        for (const BasisForm& r : basis) {
            ++out.pairs_examined;
            const ProductForm p{l, r};
            if (!section_survives(p, c) || !gc_invariant(p, c)) continue;
            ++out.value;
            out.survivors.push_back(p);
            out.surviving_exponents.push_back(l.a);
        }
    }
    std::sort(out.surviving_exponents.begin(), out.surviving_exponents.end());
    return out;
}

KodairaDimensionResult kodaira_dimension(int c, Int m_min, Int m_max) {
    require_c(c);
    if (m_min < 2 || m_max < m_min + 3) throw DomainError("need at least four values of m >= 2");
    KodairaDimensionResult out{0, genus_for(c), {}};
    std::vector<Int> values;
    for (Int m = m_min; m <= m_max; ++m) {
        const Int pm = plurigenus(c, m).value;
        out.plurigenera.emplace_back(m, pm);
        values.push_back(pm);
    }
    const auto d1 = differences(values);
    const auto d2 = differences(d1);
    const auto d3 = differences(d2);
    if (all_equal(values, 0) && out.p1 == 0) {
        out.kappa = -1;  // -infinity
    } else if (all_equal(d1, 0)) {
        out.kappa = 0;
    } else if (all_equal(d2, 0) && d1.front() > 0) {
        out.kappa = 1;
    } else if (all_equal(d3, 0) && d2.front() > 0) {
        out.kappa = 2;
    } else {
        throw std::logic_error("plurigenera do not follow a polynomial growth class");
    }
    return out;
}

bool iitaka_base_check(const std::vector<std::pair<Int, Int>>& exponents) {
    if (exponents.empty()) return false;
    const auto [x0, y0] = exponents.front();
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        const Int a = static_cast<Int>(i);
        if (exponents[i].first - x0 != a || exponents[i].second - y0 != a) return false;
    }
    return true;
}

bool iitaka_base_check(int c, Int m) {
    const PlurigenusResult p = plurigenus(c, m);
    std::vector<std::pair<Int, Int>> exps;
    for (const ProductForm& s : p.survivors) {
        // A y factor would make s_a / s_0 more than a monomial in x1 x2.
        if (s.shape() != 1) return false;
        exps.emplace_back(s.left.a, s.right.a);
    }
    std::sort(exps.begin(), exps.end());
    return iitaka_base_check(exps);
}

}  // namespace ellmod
