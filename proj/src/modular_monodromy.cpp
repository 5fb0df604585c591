#include "ellmod/modular_monodromy.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ellmod {

namespace {

void require_unimodular(const IntMatrix2& x) {
    if (x.det() != 1) throw DomainError("matrix is not in SL(2,Z)");
}

IntMatrix2 raw_mul(const IntMatrix2& x, const IntMatrix2& y) {
    return {
        checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
        checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
        checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
        checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d)),
    };
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void sort_widths(std::vector<Int>& w) { std::sort(w.begin(), w.end(), std::greater<>()); }

std::vector<Int> parse_widths(const std::string& field, const std::string& where) {
    std::vector<Int> out;
    std::stringstream ss(field);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v < 1) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw TableFormatError(where + ": bad cusp width '" + item + "'");
        }
    }
    if (out.empty()) throw TableFormatError(where + ": empty cusp-width list");
    return out;
}

}  // namespace

IntMatrix2 mat_mul(const IntMatrix2& x, const IntMatrix2& y) {
    require_unimodular(x);
    require_unimodular(y);
    return raw_mul(x, y);
}

IntMatrix2 mat_inv(const IntMatrix2& x) {
    require_unimodular(x);
    return {x.d, -x.b, -x.c, x.a};
}

Int mat_trace(const IntMatrix2& x) {
    require_unimodular(x);
    return x.trace();
}

IntMatrix2 mat_conj(const IntMatrix2& g, const IntMatrix2& h) { return mat_mul(mat_mul(h, g), mat_inv(h)); }

Int abelianization_image(const IntMatrix2& x) {
    require_unimodular(x);
    // Peel x = T^q * S^-1 * x' until the lower-left entry vanishes.
    // chi(T) = 1, chi(S^-1) = 3.
    IntMatrix2 m = x;
    Int chi = 0;
    while (m.c != 0) {
        const Int q = floor_div(m.a, m.c);
        m = {m.a - q * m.c, m.b - q * m.d, m.c, m.d};  // T^-q * m
        chi += q;
        m = {-m.c, -m.d, m.a, m.b};  // S * m
        chi += 3;
    }
    // m = +-[[1, b], [0, 1]] up to sign: T^b, or -Id * T^-b.
    if (m.a == 1) chi += m.b;
    else chi += 6 - m.b;
    return mod(chi, 12);
}

std::string Presentation::relation() const {
    std::string out;
    for (const auto& cls : classes) {
        if (!out.empty()) out += " ";
        out += cls.name;
    }
    return out + " = Id";
}

Presentation gamma_presentation(int c) {
    require_c(c);
    if (c > 12) throw DomainError("presentation lists 3^c + 2 generators; c > 12 is not enumerated");
    const Int n = pow3(c);
    Presentation p;
    p.classes.reserve(static_cast<std::size_t>(n + 2));
    p.classes.push_back({"A_0", monodromy_class(KodairaFiber::In(4 * n))});
    for (Int i = 1; i <= n; ++i) p.classes.push_back({"A_" + std::to_string(i), monodromy_class(KodairaFiber::In(1))});
    p.classes.push_back({"A_inf", monodromy_class(KodairaFiber::InStar(n))});
    return p;
}

Int abelianization_sum(const Presentation& p) {
    Int total = 0;
    for (const auto& cls : p.classes) total = mod(total + abelianization_image(cls.rep), 12);
    return total;
}

bool abelianization_check(const Presentation& p) { return abelianization_sum(p) == 0; }

CuspSignature signature_from_widths(std::vector<Int> widths) {
    if (widths.empty()) throw DomainError("no cusps");
    CuspSignature sig;
    sig.level = 1;
    for (Int w : widths) {
        if (w < 1) throw DomainError("cusp widths must be positive");
        sig.index = checked_add(sig.index, w);
        sig.level = std::lcm(sig.level, w);
    }
    sig.cusp_count = static_cast<Int>(widths.size());
    // 12 g = 12 + index - 6 * cusps
    const Int twelve_g = 12 + sig.index - 6 * sig.cusp_count;
    if (twelve_g % 12 != 0 || twelve_g < 0)
        throw InconsistentConfiguration("genus formula gives " + to_string(Rational(twelve_g, 12)) +
                                        ", not a nonnegative integer");
    sig.genus = twelve_g / 12;
    sort_widths(widths);
    sig.cusp_widths = std::move(widths);
    return sig;
}

CuspSignature cusp_signature(int c) {
    require_c(c);
    const Int n = pow3(c);
    if (n > 10'000'000) throw DomainError("c too large to list cusp widths");
    std::vector<Int> widths;
    widths.reserve(static_cast<std::size_t>(n + 2));
    widths.push_back(4 * n);
    widths.push_back(n);
    widths.insert(widths.end(), static_cast<std::size_t>(n), 1);
    return signature_from_widths(std::move(widths));
}

CongruenceTable CongruenceTable::parse(std::istream& in, const std::string& source) {
    CongruenceTable table;
    table.source_ = source;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const std::string where = source + ":" + std::to_string(lineno);
        std::istringstream fields(line);
        CongruenceRecord rec;
        std::string widths;
        if (!(fields >> rec.name >> rec.level >> rec.index >> rec.genus >> rec.cusp_count >> widths))
            throw TableFormatError(where + ": expected 'name level index genus cuspCount widths'");
        std::string extra;
        if (fields >> extra) throw TableFormatError(where + ": trailing field '" + extra + "'");
        rec.cusp_widths = parse_widths(widths, where);
        sort_widths(rec.cusp_widths);
        Int sum = 0, lcm = 1;
        for (Int w : rec.cusp_widths) {
            sum += w;
            lcm = std::lcm(lcm, w);
        }
        if (sum != rec.index) throw TableFormatError(where + ": cusp widths do not sum to the index");
        if (static_cast<Int>(rec.cusp_widths.size()) != rec.cusp_count)
            throw TableFormatError(where + ": cusp count does not match the width list");
        if (lcm != rec.level) throw TableFormatError(where + ": level is not the lcm of the cusp widths");
        if (rec.genus < 0) throw TableFormatError(where + ": negative genus");
        table.records_.push_back(std::move(rec));
    }
    return table;
}

CongruenceTable CongruenceTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw TableUnavailable("cannot open " + path.string());
    return parse(in, path.string());
}

std::optional<CongruenceTable> load_table(const std::optional<std::string>& path) {
    if (path && !path->empty()) return CongruenceTable::load(*path);
    if (const char* env = std::getenv(kTableEnvVar); env && *env) return CongruenceTable::load(env);
    return std::nullopt;
}

std::optional<CongruenceRecord> congruence_match(const CuspSignature& sig, const CongruenceTable* table) {
    if (table == nullptr) throw TableUnavailable();
    std::vector<Int> widths = sig.cusp_widths;
    sort_widths(widths);
    for (const auto& rec : table->records()) {
        if (rec.level != sig.level && rec.index != sig.index) continue;
        if (rec.cusp_widths == widths) return rec;
    }
    return std::nullopt;
}

bool congruence_lookup(const CuspSignature& sig, const CongruenceTable* table) {
    return congruence_match(sig, table).has_value();
}

}  // namespace ellmod
