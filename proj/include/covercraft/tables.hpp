#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covercraft/cover.hpp"

namespace covercraft {

/// Integer linear form c + cm*m + ce*e, parsed from strings like
/// "2m+2", "2m-e+1", "3" or "0".
struct LinearForm {
    Int c{0};
    Int cm{0};
    Int ce{0};

    Int eval(Int m, Int e) const {
        return checked_add(c, checked_add(checked_mul(cm, m), checked_mul(ce, e)));
    }
    static LinearForm parse(std::string_view text);  // throws TableParseError
    std::string str() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct ExpectedCaseTemplate {
    std::string label;
    GaloisGroup group{GaloisGroup::Z2xZ2};
    SurfaceKind surface{SurfaceKind::LinearP2};
    Int e_min{0}, e_max{0};               // scroll rows
    LinearForm m_min;                     // lower bound, may reference e
    std::optional<Int> m_exact;           // rows pinned to a single m
    LinearForm d1_a, d1_b, d2_a, d2_b;    // P2 rows use d1_a / d2_a only
    std::optional<std::string> swap_duplicate_of;  // applies on S(1,1) only
    std::string source;
    std::string paper_ref;

    bool applies(const MinimalDegreeSurface& w) const;
};

/// A template instantiated at a concrete base surface.
struct ExpectedCaseInstance {
    std::string label;
    DivisorClass D1, D2;
    std::optional<std::string> swap_duplicate_of;
    std::string source;
    std::string paper_ref;
};

/// The transcribed theorem tables: the single reference that classification
/// output is diffed against. The copy under data/ is embedded into the
/// binaries at build time; --tables / COVERCRAFT_TABLES override it.
class ExpectedTables {
public:
    static ExpectedTables parse(std::string_view text);       // throws TableParseError
    static ExpectedTables load_file(const std::string& path); // throws TableParseError
    static const ExpectedTables& builtin();

    int version() const { return version_; }
    const std::vector<ExpectedCaseTemplate>& records() const { return records_; }
    const ExpectedCaseTemplate* find(std::string_view label) const;

    std::vector<ExpectedCaseInstance> instantiate(const MinimalDegreeSurface& w,
                                                  GaloisGroup g) const;

    /// Copy with one record removed; mutation testing hook.
    ExpectedTables without(std::string_view label) const;

    std::string to_text() const;

private:
    int version_{0};
    std::vector<ExpectedCaseTemplate> records_;
};

struct DiffReport {
    std::vector<std::string> missing;           // expected but not produced
    std::vector<std::string> extra;             // produced but not expected
    std::vector<std::string> mislabeled;        // same classes, wrong label/link/source
    std::vector<std::string> shape_mismatches;  // pushforward profile off

    bool empty() const {
        return missing.empty() && extra.empty() && mislabeled.empty() && shape_mismatches.empty();
    }
    std::string str() const;
};

struct ClassificationCase;  // classify.hpp

/// Whether the pushforward summands of a case follow the splitting profile
/// forced by its (ir)regularity: {0, (1,m+1), (2,e+1), (3,m+e+2)} negated
/// when q = 0, one of the three e = 0 irregular shapes when q > 0, and
/// {0, 2, 2, 4} negated over P2.
bool matches_splitting_profile(const ClassificationCase& c);

/// Compare a classification run against the tables at one base surface, and
/// check every produced case's pushforward summands against the regular /
/// irregular splitting profiles.
DiffReport diff_against_builtin(const std::vector<ClassificationCase>& cases,
                                const MinimalDegreeSurface& w, GaloisGroup g,
                                const ExpectedTables& tables);

}  // namespace covercraft
