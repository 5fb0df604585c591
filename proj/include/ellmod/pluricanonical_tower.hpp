#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ellmod/arith.hpp"

namespace ellmod {

/// x^a * omega or x^a * y * omega in H^0(C_g, K^m), omega = dx^m / y^m.
struct BasisForm {
    Int a = 0;
    bool uses_y = false;
    Int m = 1;
    Int g = 2;

    std::string to_string() const;
    friend bool operator==(const BasisForm&, const BasisForm&) = default;
};

/// left (x) right on C_g x C_g. Shape 1: neither uses y, 2: exactly one, 3: both.
struct ProductForm {
    BasisForm left;
    BasisForm right;

    int shape() const { return 1 + int(left.uses_y) + int(right.uses_y); }
};

/// Vanishing orders along the two coordinate axes at a point.
struct VanishSeq {
    Rational first;
    Rational second;

    friend bool operator==(const VanishSeq&, const VanishSeq&) = default;
};

struct TowerLevel {
    int level;
    VanishSeq seq;
};

struct TowerTrace {
    std::vector<TowerLevel> levels;
};

struct TowerResult {
    VanishSeq closed_form;
    TowerTrace trace;
};

struct VanishingOrders {
    Int at_p;
    Int at_q;
};

struct PlurigenusResult {
    Int value = 0;
    std::vector<ProductForm> survivors;
    std::vector<Int> surviving_exponents;  // exponent of x1 in each survivor, sorted
    Int pairs_examined = 0;
};

struct KodairaDimensionResult {
    int kappa;
    Int p1;  // h^0(K) = g
    std::vector<std::pair<Int, Int>> plurigenera;  // (m, P_m)
};

std::vector<BasisForm> kock_tait_basis(Int g, Int m);

/// Orders at P1/P2 (a) and at Q: 2m(g-1) - 2a, minus 3^c more when y is present.
VanishingOrders vanishing_orders(const BasisForm& f, int c);

VanishSeq blowup_transform(const VanishSeq& v, Int m);
VanishSeq quotient_transform_point(const VanishSeq& v, Int m);

/// Image at the top of the tower of a vanishing sequence at a Type II point,
/// both in closed form and by applying the blow-up/quotient steps level by level.
TowerResult tower_pushforward(const VanishSeq& v, int c, Int m);

/// 3m(3^{c-1} - 1) = 2m(g-1): the threshold in the survival constraints.
Int survival_threshold(int c, Int m);

bool section_survives(const ProductForm& p, int c);

/// Weight of p under psi^-1 x psi is zero modulo 3^c.
bool gc_invariant(const ProductForm& p, int c);

/// Brute-force count over all pairs of basis forms.
PlurigenusResult plurigenus(int c, Int m);

KodairaDimensionResult kodaira_dimension(int c, Int m_min = 2, Int m_max = 12);

/// True when the surviving exponent pairs are (a, a) for a = 0..N, i.e. s_a = s_0 * (x1 x2)^a.
bool iitaka_base_check(const std::vector<std::pair<Int, Int>>& exponents);
bool iitaka_base_check(int c, Int m);

}  // namespace ellmod
