#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "ellmod/fiber_catalogue.hpp"

namespace ellmod {

using IntMatrix2 = Matrix2;

inline constexpr IntMatrix2 kIdentity{1, 0, 0, 1};
inline constexpr IntMatrix2 kT{1, 1, 0, 1};
inline constexpr IntMatrix2 kS{0, -1, 1, 0};

// All four throw DomainError unless every argument has determinant 1.
IntMatrix2 mat_mul(const IntMatrix2& x, const IntMatrix2& y);
IntMatrix2 mat_inv(const IntMatrix2& x);
Int mat_trace(const IntMatrix2& x);
/// h * g * h^-1
IntMatrix2 mat_conj(const IntMatrix2& g, const IntMatrix2& h);

/// Image of x in the abelianization Z/12 of SL(2,Z), with T -> 1 and S -> -3
/// (so -Id -> 6). Computed from an S/T word for x, hence a class function.
Int abelianization_image(const IntMatrix2& x);

struct ClassRep {
    std::string name;
    IntMatrix2 rep;
};

/// Generators given by conjugacy-class representatives, subject to the single
/// relation "product of all generators in order = Id".
struct Presentation {
    std::vector<ClassRep> classes;
    std::string relation() const;
};

/// A_0 ~ [[1, 4*3^c], [0, 1]], A_1..A_{3^c} ~ T, A_inf ~ [[-1, -3^c], [0, -1]].
Presentation gamma_presentation(int c);

/// The relation's abelianized image vanishes modulo 12 (a necessary condition).
bool abelianization_check(const Presentation& p);
Int abelianization_sum(const Presentation& p);

struct CuspSignature {
    std::vector<Int> cusp_widths;  // sorted, largest first
    Int cusp_count = 0;
    Int index = 0;
    Int genus = 0;
    Int level = 0;
};

/// Index, level, and genus of a torsion-free subgroup with the given cusp widths
/// (genus = 1 + index/12 - cusps/2). Throws if the genus is not a nonnegative integer.
CuspSignature signature_from_widths(std::vector<Int> widths);

CuspSignature cusp_signature(int c);

struct CongruenceRecord {
    std::string name;
    Int level = 0;
    Int index = 0;
    Int genus = 0;
    Int cusp_count = 0;
    std::vector<Int> cusp_widths;  // sorted, largest first
};

/// Line format: `name level index genus cuspCount w1,w2,...`; '#' starts a comment line.
class CongruenceTable {
public:
    static CongruenceTable parse(std::istream& in, const std::string& source = "<stream>");
    static CongruenceTable load(const std::filesystem::path& path);

    const std::vector<CongruenceRecord>& records() const { return records_; }
    const std::string& source() const { return source_; }

private:
    std::vector<CongruenceRecord> records_;
    std::string source_;
};

inline constexpr const char* kTableEnvVar = "ELLMOD_CONGRUENCE_TABLE";

/// Loads the table named by `path`, else by $ELLMOD_CONGRUENCE_TABLE; nullopt when neither is set.
std::optional<CongruenceTable> load_table(const std::optional<std::string>& path);

/// True iff some record has the same cusp-width multiset and agrees on level or index.
/// Throws TableUnavailable when `table` is null.
bool congruence_lookup(const CuspSignature& sig, const CongruenceTable* table);
std::optional<CongruenceRecord> congruence_match(const CuspSignature& sig, const CongruenceTable* table);

}  // namespace ellmod
