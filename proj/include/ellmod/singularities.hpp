#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ellmod/arith.hpp"

namespace ellmod {

/// Cyclic quotient singularity 1/r(1,a) with gcd(r, a) = 1 and 1 <= a < r.
/// The smooth point is represented as r = 1, a = 0.
class QuotientSingularity {
public:
    QuotientSingularity(Int r, Int a);

    Int order() const { return r_; }
    Int weight() const { return a_; }
    bool smooth() const { return r_ == 1; }

    friend bool operator==(const QuotientSingularity&, const QuotientSingularity&) = default;

private:
    Int r_;
    Int a_;
};

/// Resolution chain of a cyclic quotient singularity. Curve i has
/// self-intersection -coefficients[i] and meets curves i-1 and i+1 once.
struct HJChain {
    std::vector<Int> coefficients;
    std::vector<std::vector<Int>> intersection_matrix;

    std::size_t size() const { return coefficients.size(); }
    std::vector<Int> self_intersections() const;
};

/// Reduces the weight pair (w1, w2) to the form 1/r(1,a) by multiplying through
/// by the inverse of w1 modulo r.
QuotientSingularity normalize_weights(Int r, Int w1, Int w2);

/// Hirzebruch-Jung continued fraction coefficients of r/a (every b_i >= 2).
/// Empty for the smooth point.
HJChain hj_expansion(const QuotientSingularity& s);

/// hj_expansion with the tridiagonal intersection matrix filled in.
HJChain resolve(const QuotientSingularity& s);

/// Determinant of the chain's intersection matrix via the tridiagonal recurrence.
Int chain_determinant(const std::vector<Int>& coefficients);

std::string chain_to_dot(const HJChain& chain, const std::string& name = "chain");

enum class CurvePoint { P1, P2, Q };
enum class FixedPointKind { TypeI, TypeII };

std::string to_string(CurvePoint p);
std::string to_string(FixedPointKind k);

/// A fixed point of psi^-1 x psi on C_g x C_g with the local weights of the action.
struct FixedPoint {
    std::pair<CurvePoint, CurvePoint> factors;
    std::pair<Int, Int> weights;
    FixedPointKind kind;
    Int order;  // 3^c

    QuotientSingularity singularity() const { return normalize_weights(order, weights.first, weights.second); }
    std::string label() const;
};

/// The nine fixed points, Type I first: (P1,P1), (P1,P2), (P2,P1), (P2,P2), (Q,Q),
/// then Type II: (P1,Q), (P2,Q), (Q,P1), (Q,P2).
std::vector<FixedPoint> schreieder_fixed_points(int c);

}  // namespace ellmod
