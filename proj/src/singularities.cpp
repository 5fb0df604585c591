#include "ellmod/singularities.hpp"

#include <sstream>

namespace ellmod {

QuotientSingularity::QuotientSingularity(Int r, Int a) : r_(r), a_(a) {
    if (r < 1) throw DomainError("group order must be positive");
    if (r == 1) {
        if (a != 0) throw DomainError("smooth point must have a = 0");
        return;
    }
    if (a < 1 || a >= r) throw DomainError("weight out of range [1, r-1]");
    if (std::gcd(r, a) != 1) throw DomainError("weights not coprime to order");
}

std::vector<Int> HJChain::self_intersections() const {
    std::vector<Int> out;
    out.reserve(coefficients.size());
    for (Int b : coefficients) out.push_back(-b);
    return out;
}

QuotientSingularity normalize_weights(Int r, Int w1, Int w2) {
    if (r < 1) throw DomainError("group order must be positive");
    if (r == 1) return {1, 0};
    Int inv = mod_inverse(w1, r);
    if (inv == 0 || std::gcd(mod(w2, r), r) != 1) throw DomainError("weights not coprime to order");
    // w2 * w1^-1 never overflows: both factors are below r.
    Int a = static_cast<Int>((static_cast<__int128>(mod(w2, r)) * inv) % r);
    return {r, a};
}

HJChain hj_expansion(const QuotientSingularity& s) {
    HJChain chain;
    Int p = s.order();
    Int q = s.weight();
    while (q != 0) {
        Int b = (p + q - 1) / q;  // ceil(p/q)
        chain.coefficients.push_back(b);
        Int next = b * q - p;
        p = q;
        q = next;
    }
    return chain;
}

HJChain resolve(const QuotientSingularity& s) {
    HJChain chain = hj_expansion(s);
    const std::size_t n = chain.size();
    chain.intersection_matrix.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        chain.intersection_matrix[i][i] = -chain.coefficients[i];
        if (i + 1 < n) {
            chain.intersection_matrix[i][i + 1] = 1;
            chain.intersection_matrix[i + 1][i] = 1;
        }
    }
    return chain;
}

Int chain_determinant(const std::vector<Int>& coefficients) {
    // D_k = -b_k D_{k-1} - D_{k-2}, D_{-1} = 1, D_{-2} = 0.
    Int prev = 0, cur = 1;
    for (Int b : coefficients) {
        Int next = checked_add(checked_mul(-b, cur), -prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::string chain_to_dot(const HJChain& chain, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (std::size_t i = 0; i < chain.size(); ++i)
        out << "  E" << i << " [label=\"" << -chain.coefficients[i] << "\"];\n";
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        out << "  E" << i << " -- E" << i + 1 << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_string(CurvePoint p) {
    switch (p) {
        case CurvePoint::P1: return "P1";
        case CurvePoint::P2: return "P2";
        case CurvePoint::Q: return "Q";
    }
    return "?";
}

std::string to_string(FixedPointKind k) { return k == FixedPointKind::TypeI ? "I" : "II"; }

std::string FixedPoint::label() const {
    return "(" + to_string(factors.first) + "," + to_string(factors.second) + ")";
}

std::vector<FixedPoint> schreieder_fixed_points(int c) {
    require_c(c);
    const Int r = pow3(c);
    const Int g = (r - 1) / 2;
    using CP = CurvePoint;
    // psi acts with weight 1 at P1, P2 and weight g at Q; the left factor carries psi^-1.
    auto local = [g](CP p) -> Int { return p == CP::Q ? g : 1; };
    const std::array<std::pair<CP, CP>, 9> order{{
        {CP::P1, CP::P1}, {CP::P1, CP::P2}, {CP::P2, CP::P1}, {CP::P2, CP::P2}, {CP::Q, CP::Q},
        {CP::P1, CP::Q}, {CP::P2, CP::Q}, {CP::Q, CP::P1}, {CP::Q, CP::P2},
    }};
    std::vector<FixedPoint> out;
    out.reserve(order.size());
    for (const auto& f : order) {
        const bool mixed = (f.first == CP::Q) != (f.second == CP::Q);
        out.push_back({f, {-local(f.first), local(f.second)},
                       mixed ? FixedPointKind::TypeII : FixedPointKind::TypeI, r});
    }
    return out;
}

}  // namespace ellmod
