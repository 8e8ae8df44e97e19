#include "covercraft/records.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace covercraft {

OutputRecord to_record(const ClassificationCase& c, const ExpectedTables* tables) {
    const MinimalDegreeSurface& w = c.candidate.W;
    OutputRecord r;
    r.label = c.label;
    r.surface = w.is_scroll() ? "scroll" : "P2";
    if (w.is_scroll()) {
        r.e = w.e();
        r.m = w.m();
    }
    r.D1 = w.class_to_string(c.candidate.D1);
    r.D2 = w.class_to_string(c.candidate.D2);
    r.p_g = c.invariants.p_g;
    r.q = c.invariants.q;
    r.chi = c.invariants.chi;
    r.K2 = c.invariants.K2;
    r.generic_A1 = c.invariants.generic_A1;
    r.source = c.source;
    r.swap_duplicate_of = c.swap_duplicate_of;
    if (tables) {
        if (const ExpectedCaseTemplate* t = tables->find(c.label)) r.paper_ref = t->paper_ref;
    }
    return r;
}

std::vector<OutputRecord> to_records(const std::vector<ClassificationCase>& cases,
                                     const ExpectedTables* tables) {
    std::vector<OutputRecord> out;
    out.reserve(cases.size());
    for (const auto& c : cases) out.push_back(to_record(c, tables));
    return out;
}

void sort_records(std::vector<OutputRecord>& records) {
    std::sort(records.begin(), records.end(), [](const OutputRecord& x, const OutputRecord& y) {
        if (x.surface != y.surface) return x.surface < y.surface;  // "P2" < "scroll"
        if (x.e != y.e) return x.e.value_or(-1) < y.e.value_or(-1);
        if (x.m != y.m) return x.m.value_or(-1) < y.m.value_or(-1);
        return x.label < y.label;
    });
}

OutputFormat parse_format(std::string_view s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "md") return OutputFormat::Md;
    throw UsageError("unknown format '" + std::string(s) + "' (expected json, csv or md)");
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_to_json(const OutputRecord& r) {
    ordered_json j;
    j["label"] = r.label;
    j["surface"] = r.surface;
    j["e"] = r.e ? ordered_json(*r.e) : ordered_json(nullptr);
    j["m"] = r.m ? ordered_json(*r.m) : ordered_json(nullptr);
    j["D1"] = r.D1;
    j["D2"] = r.D2;
    j["p_g"] = r.p_g;
    j["q"] = r.q;
    j["chi"] = r.chi;
    j["K2"] = r.K2;
    j["generic_A1"] = r.generic_A1;
    j["source"] = r.source;
    j["swap_duplicate_of"] =
        r.swap_duplicate_of ? ordered_json(*r.swap_duplicate_of) : ordered_json(nullptr);
    j["paper_ref"] = r.paper_ref;
    return j;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_csv(const std::vector<OutputRecord>& records) {
    std::ostringstream out;
    out << "label,surface,e,m,D1,D2,p_g,q,chi,K2,generic_A1,source\n";
    for (const auto& r : records) {
        out << csv_quote(r.label) << ',' << r.surface << ','
            << (r.e ? std::to_string(*r.e) : "") << ',' << (r.m ? std::to_string(*r.m) : "")
            << ',' << csv_quote(r.D1) << ',' << csv_quote(r.D2) << ',' << r.p_g << ',' << r.q
            << ',' << r.chi << ',' << r.K2 << ',' << r.generic_A1 << ',' << csv_quote(r.source)
            << '\n';
    }
    return out.str();
}

std::string render_md(const std::vector<OutputRecord>& records) {
    std::ostringstream out;
    out << "| label | e | m | D1 | D2 | p_g | q | chi | K2 | A1 | source |\n";
    out << "| --- | --- | --- | --- | --- | --- | --- | --- | --- | --- | --- |\n";
    for (const auto& r : records) {
        out << "| " << r.label << " | e=" << (r.e ? std::to_string(*r.e) : "-")
            << " | m=" << (r.m ? std::to_string(*r.m) : "-") << " | D1=" << r.D1
            << " | D2=" << r.D2 << " | p_g=" << r.p_g << " | q=" << r.q << " | chi=" << r.chi
            << " | K2=" << r.K2 << " | A1=" << r.generic_A1 << " | source=" << r.source
            << " |\n";
    }
    return out.str();
}

}  // namespace

std::string render(const std::vector<OutputRecord>& records, OutputFormat format) {
    if (format == OutputFormat::Csv) return render_csv(records);
    if (format == OutputFormat::Md) return render_md(records);
    ordered_json arr = ordered_json::array();
    for (const auto& r : records) arr.push_back(record_to_json(r));
    return arr.dump(2) + "\n";
}

std::vector<OutputRecord> parse_json_records(const std::string& text) {
    ordered_json arr = ordered_json::parse(text);
    std::vector<OutputRecord> out;
    for (const auto& j : arr) {
        OutputRecord r;
        r.label = j.at("label").get<std::string>();
        r.surface = j.at("surface").get<std::string>();
        if (!j.at("e").is_null()) r.e = j.at("e").get<Int>();
        if (!j.at("m").is_null()) r.m = j.at("m").get<Int>();
        r.D1 = j.at("D1").get<std::string>();
        r.D2 = j.at("D2").get<std::string>();
        r.p_g = j.at("p_g").get<Int>();
        r.q = j.at("q").get<Int>();
        r.chi = j.at("chi").get<Int>();
        r.K2 = j.at("K2").get<Int>();
        r.generic_A1 = j.at("generic_A1").get<Int>();
        r.source = j.at("source").get<std::string>();
        if (!j.at("swap_duplicate_of").is_null())
            r.swap_duplicate_of = j.at("swap_duplicate_of").get<std::string>();
        r.paper_ref = j.at("paper_ref").get<std::string>();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace covercraft
