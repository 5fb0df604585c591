#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellmod/arith.hpp"

namespace ellmod {

enum class FiberKind { I, IStar, II, III, IV, IVStar, IIIStar, IIStar };

/// Kodaira fiber type. `b` is only meaningful for I_b and I_b*; I_0 is the smooth fiber.
struct KodairaFiber {
    FiberKind kind = FiberKind::I;
    Int b = 0;

    static KodairaFiber In(Int b);
    static KodairaFiber InStar(Int b);
    static KodairaFiber of(FiberKind kind);
    /// Accepts "I_36", "I36", "I_9*", "I0*", "II", "III*", ...
    static KodairaFiber parse(std::string_view text);

    bool smooth() const { return kind == FiberKind::I && b == 0; }
    bool has_parameter() const { return kind == FiberKind::I || kind == FiberKind::IStar; }
    std::string to_string() const;

    friend bool operator==(const KodairaFiber&, const KodairaFiber&) = default;
};

/// Abelian group as a product of cyclic factors.
struct ComponentGroup {
    std::vector<Int> invariant_factors;

    Int order() const;
    bool cyclic() const { return invariant_factors.size() <= 1; }
    friend bool operator==(const ComponentGroup&, const ComponentGroup&) = default;
};

/// 2x2 integer matrix stored row-major.
struct Matrix2 {
    Int a, b, c, d;
    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

enum class JValue { Zero, J1728, Infinity, Finite };

std::string to_string(JValue j);

/// Dual graph of a fiber: component multiplicities and intersection edges
/// (a repeated edge means intersection number 2, a self-loop a node).
struct DualGraph {
    std::vector<Int> multiplicities;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

Int components(const KodairaFiber& f);
Int euler_number(const KodairaFiber& f);
ComponentGroup component_group(const KodairaFiber& f);
Matrix2 monodromy_class(const KodairaFiber& f);
JValue j_value(const KodairaFiber& f);

DualGraph dual_graph(const KodairaFiber& f);
std::string fiber_to_dot(const KodairaFiber& f, const std::string& name = "fiber");

}  // namespace ellmod
