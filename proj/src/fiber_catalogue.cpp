#include "ellmod/fiber_catalogue.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace ellmod {

namespace {

void require_parameter(const KodairaFiber& f) {
    if (f.b < 0) throw DomainError("fiber parameter must be nonnegative");
}

void require_multiplicative(const KodairaFiber& f, const char* op) {
    require_parameter(f);
    if (f.kind == FiberKind::I && f.b >= 1) return;
    if (f.kind == FiberKind::IStar) return;
    throw Unsupported(std::string(op) + " is only available for I_b (b >= 1) and I_b*: got " + f.to_string());
}

// Affine E6, E7, E8 as (multiplicities, edges).
DualGraph affine_e(int n) {
    DualGraph g;
    if (n == 6) {
        // Center 3, three arms 2-1.
        g.multiplicities = {3, 2, 1, 2, 1, 2, 1};
        g.edges = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
    } else if (n == 7) {
        // Long chain 1-2-3-4-3-2-1 with a 2 off the center.
        g.multiplicities = {1, 2, 3, 4, 3, 2, 1, 2};
        g.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}};
    } else {
        // Chain 1-2-3-4-5-6-4-2 with a 3 off the 6.
        g.multiplicities = {1, 2, 3, 4, 5, 6, 4, 2, 3};
        g.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
    }
    return g;
}

}  // namespace

KodairaFiber KodairaFiber::In(Int b) {
    if (b < 0) throw DomainError("fiber parameter must be nonnegative");
    return {FiberKind::I, b};
}

KodairaFiber KodairaFiber::InStar(Int b) {
    if (b < 0) throw DomainError("fiber parameter must be nonnegative");
    return {FiberKind::IStar, b};
}

KodairaFiber KodairaFiber::of(FiberKind kind) {
    if (kind == FiberKind::I || kind == FiberKind::IStar) throw DomainError("I_b types need a parameter");
    return {kind, 0};
}

KodairaFiber KodairaFiber::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s == "II") return of(FiberKind::II);
    if (s == "III") return of(FiberKind::III);
    if (s == "IV") return of(FiberKind::IV);
    if (s == "IV*") return of(FiberKind::IVStar);
    if (s == "III*") return of(FiberKind::IIIStar);
    if (s == "II*") return of(FiberKind::IIStar);
    if (s.size() >= 2 && s[0] == 'I') {
        std::size_t pos = 1;
        if (s[pos] == '_') ++pos;
        bool star = !s.empty() && s.back() == '*';
        std::string_view digits(s.data() + pos, s.size() - pos - (star ? 1 : 0));
        Int b = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), b);
        if (!digits.empty() && ec == std::errc{} && end == digits.data() + digits.size())
            return star ? InStar(b) : In(b);
    }
    throw DomainError("unrecognized fiber type '" + std::string(text) + "'");
}

std::string KodairaFiber::to_string() const {
    switch (kind) {
        case FiberKind::I: return "I_" + std::to_string(b);
        case FiberKind::IStar: return "I_" + std::to_string(b) + "*";
        case FiberKind::II: return "II";
        case FiberKind::III: return "III";
        case FiberKind::IV: return "IV";
        case FiberKind::IVStar: return "IV*";
        case FiberKind::IIIStar: return "III*";
        case FiberKind::IIStar: return "II*";
    }
    return "?";
}

Int ComponentGroup::order() const {
    Int out = 1;
    for (Int n : invariant_factors) out = checked_mul(out, n);
    return out;
}

std::string to_string(JValue j) {
    switch (j) {
        case JValue::Zero: return "0";
        case JValue::J1728: return "1728";
        case JValue::Infinity: return "inf";
        case JValue::Finite: return "finite";
    }
    return "?";
}

Int components(const KodairaFiber& f) {
    switch (f.kind) {
        case FiberKind::I:
            require_parameter(f);
            return f.b == 0 ? 1 : f.b;
        case FiberKind::IStar:
            require_parameter(f);
            return checked_add(f.b, 5);
        case FiberKind::II: return 1;
        case FiberKind::III: return 2;
        case FiberKind::IV: return 3;
        case FiberKind::IVStar: return 7;
        case FiberKind::IIIStar: return 8;
        case FiberKind::IIStar: return 9;
    }
    return 0;
}

Int euler_number(const KodairaFiber& f) {
    if (f.smooth()) return 0;
    Int m = components(f);
    return f.kind == FiberKind::I ? m : m + 1;
}

ComponentGroup component_group(const KodairaFiber& f) {
    require_multiplicative(f, "component_group");
    if (f.kind == FiberKind::I) return {{f.b}};
    if (f.b % 2 == 0) return {{2, 2}};
    return {{4}};
}

Matrix2 monodromy_class(const KodairaFiber& f) {
    require_multiplicative(f, "monodromy_class");
    if (f.kind == FiberKind::I) return {1, f.b, 0, 1};
    return {-1, -f.b, 0, -1};
}

JValue j_value(const KodairaFiber& f) {
    switch (f.kind) {
        case FiberKind::I: return f.b > 0 ? JValue::Infinity : JValue::Finite;
        case FiberKind::IStar: return f.b > 0 ? JValue::Infinity : JValue::Finite;
        case FiberKind::II:
        case FiberKind::IV:
        case FiberKind::IVStar:
        case FiberKind::IIStar: return JValue::Zero;
        case FiberKind::III:
        case FiberKind::IIIStar: return JValue::J1728;
    }
    return JValue::Finite;
}

DualGraph dual_graph(const KodairaFiber& f) {
    DualGraph g;
    switch (f.kind) {
        case FiberKind::I: {
            require_parameter(f);
            const Int n = f.b == 0 ? 1 : f.b;
            g.multiplicities.assign(static_cast<std::size_t>(n), 1);
            if (f.b == 0) break;
            // Cycle; I_1 is a self-loop, I_2 a doubled edge.
            for (Int i = 0; i < n; ++i)
                g.edges.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % n));
            break;
        }
        case FiberKind::IStar: {
            require_parameter(f);
            // Spine of b+1 double components, two simple leaves at each end.
            const auto spine = static_cast<std::size_t>(f.b + 1);
            g.multiplicities.assign(spine, 2);
            for (std::size_t i = 0; i + 1 < spine; ++i) g.edges.emplace_back(i, i + 1);
            for (std::size_t end : {std::size_t{0}, spine - 1}) {
                for (int k = 0; k < 2; ++k) {
                    g.multiplicities.push_back(1);
                    g.edges.emplace_back(end, g.multiplicities.size() - 1);
                }
            }
            break;
        }
        case FiberKind::II: g.multiplicities = {1}; break;
        case FiberKind::III:
            g.multiplicities = {1, 1};
            g.edges = {{0, 1}, {0, 1}};
            break;
        case FiberKind::IV:
            g.multiplicities = {1, 1, 1};
            g.edges = {{0, 1}, {1, 2}, {2, 0}};
            break;
        case FiberKind::IVStar: g = affine_e(6); break;
        case FiberKind::IIIStar: g = affine_e(7); break;
        case FiberKind::IIStar: g = affine_e(8); break;
    }
    return g;
}

std::string fiber_to_dot(const KodairaFiber& f, const std::string& name) {
    const DualGraph g = dual_graph(f);
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  label=\"" << f.to_string() << "\";\n";
    for (std::size_t i = 0; i < g.multiplicities.size(); ++i)
        out << "  " << name << "_" << i << " [label=\"" << g.multiplicities[i] << "\"];\n";
    for (const auto& [u, v] : g.edges)
        out << "  " << name << "_" << u << " -- " << name << "_" << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace ellmod
