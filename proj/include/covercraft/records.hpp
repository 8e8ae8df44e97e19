#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covercraft/classify.hpp"

namespace covercraft {

/// Flat, serialization-ready view of a classification case. Field order is
/// the output schema; rendering is deterministic byte-for-byte.
struct OutputRecord {
    std::string label;
    std::string surface;  // "P2" or "scroll"
    std::optional<Int> e, m;
    std::string D1, D2;   // "(a,b)" on scrolls, plain integer on P2
    Int p_g{0}, q{0}, chi{0}, K2{0}, generic_A1{0};
    std::string source;
    std::optional<std::string> swap_duplicate_of;
    std::string paper_ref;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Builds the record; paper_ref is looked up by label when tables are given.
OutputRecord to_record(const ClassificationCase& c, const ExpectedTables* tables = nullptr);
std::vector<OutputRecord> to_records(const std::vector<ClassificationCase>& cases,
                                     const ExpectedTables* tables = nullptr);

/// Ordering contract: lexicographic by (surface, e, m, label), independent of
/// how the cases were produced.
void sort_records(std::vector<OutputRecord>& records);

enum class OutputFormat { Json, Csv, Md };
OutputFormat parse_format(std::string_view s);  // throws UsageError

std::string render(const std::vector<OutputRecord>& records, OutputFormat format);

/// Inverse of the json rendering; round-trips every field of the schema.
std::vector<OutputRecord> parse_json_records(const std::string& text);

}  // namespace covercraft
