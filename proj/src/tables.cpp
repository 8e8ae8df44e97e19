#include "covercraft/tables.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "covercraft/classify.hpp"

namespace covercraft {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

}  // namespace

LinearForm LinearForm::parse(std::string_view text) {
    LinearForm f;
    std::string s;
    for (char c : text)
        if (!is_space(c)) s.push_back(c);
    if (s.empty()) throw TableParseError("empty linear form");
    std::size_t i = 0;
    while (i < s.size()) {
        Int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        bool have_digits = false;
        Int value = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            value = checked_add(checked_mul(value, 10), s[i] - '0');
            have_digits = true;
            ++i;
        }
        if (i < s.size() && (s[i] == 'm' || s[i] == 'e')) {
            Int coeff = sign * (have_digits ? value : 1);
            if (s[i] == 'm')
                f.cm = checked_add(f.cm, coeff);
            else
                f.ce = checked_add(f.ce, coeff);
            ++i;
        } else if (have_digits) {
            f.c = checked_add(f.c, sign * value);
        } else {
            throw TableParseError("cannot parse linear form '" + std::string(text) + "'");
        }
    }
    return f;
}

std::string LinearForm::str() const {
    std::string out;
    auto append = [&out](Int coeff, const char* var) {
        if (coeff == 0) return;
        if (!out.empty()) out += coeff > 0 ? "+" : "-";
        else if (coeff < 0) out += "-";
        Int mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1 || *var == '\0') out += std::to_string(mag);
        out += var;
    };
    append(cm, "m");
    append(ce, "e");
    append(c, "");
    return out.empty() ? "0" : out;
}

bool ExpectedCaseTemplate::applies(const MinimalDegreeSurface& w) const {
    if (w.kind() != surface) return false;
    if (surface != SurfaceKind::Scroll) return true;
    Int e = w.e();
    Int m = w.m();
    if (e < e_min || e > e_max) return false;
    if (m_exact) return m == *m_exact;
    return m >= m_min.eval(0, e);  // the bound may reference e ("e+1..")
}

namespace {

std::pair<LinearForm, LinearForm> parse_class_forms(std::string_view text, SurfaceKind kind) {
    text = trim(text);
    if (kind != SurfaceKind::Scroll) return {LinearForm::parse(text), LinearForm{}};
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw TableParseError("scroll class must look like (a, b): '" + std::string(text) + "'");
    text.remove_prefix(1);
    text.remove_suffix(1);
    auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw TableParseError("scroll class needs two components: '" + std::string(text) + "'");
    return {LinearForm::parse(trim(text.substr(0, comma))),
            LinearForm::parse(trim(text.substr(comma + 1)))};
}

}  // namespace

ExpectedTables ExpectedTables::parse(std::string_view text) {
    ExpectedTables tables;
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<ExpectedCaseTemplate> current;
    std::optional<std::string> pending_d1, pending_d2;
    int lineno = 0;
    auto fail = [&lineno](const std::string& msg) {
        throw TableParseError("expected-tables line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        auto space = sv.find(' ');
        std::string_view key = sv.substr(0, space);
        std::string_view rest = space == std::string_view::npos ? "" : trim(sv.substr(space + 1));
        if (key == "version") {
            tables.version_ = std::stoi(std::string(rest));
            continue;
        }
        if (key == "case") {
            if (current) fail("nested case block");
            current.emplace();
            current->label = std::string(rest);
            pending_d1.reset();
            pending_d2.reset();
            continue;
        }
        if (!current) fail("directive outside a case block: '" + std::string(key) + "'");
        if (key == "group") {
            current->group = parse_group(rest);
        } else if (key == "surface") {
            if (rest == "P2")
                current->surface = SurfaceKind::LinearP2;
            else if (rest == "scroll")
                current->surface = SurfaceKind::Scroll;
            else
                fail("unknown surface '" + std::string(rest) + "'");
        } else if (key == "e") {
            auto dots = rest.find("..");
            if (dots == std::string_view::npos) fail("e range must be lo..hi");
            current->e_min = std::stoll(std::string(rest.substr(0, dots)));
            current->e_max = std::stoll(std::string(rest.substr(dots + 2)));
        } else if (key == "m") {
            auto dots = rest.find("..");
            if (dots == std::string_view::npos) {
                current->m_exact = std::stoll(std::string(rest));
            } else {
                current->m_min = LinearForm::parse(rest.substr(0, dots));
                if (!trim(rest.substr(dots + 2)).empty()) fail("bounded m ranges are not used");
            }
        } else if (key == "D1") {
            pending_d1 = std::string(rest);
        } else if (key == "D2") {
            pending_d2 = std::string(rest);
        } else if (key == "swap_duplicate_of") {
            current->swap_duplicate_of = std::string(rest);
        } else if (key == "source") {
            current->source = std::string(rest);
        } else if (key == "ref") {
            current->paper_ref = std::string(rest);
        } else if (key == "end") {
            if (!pending_d1 || !pending_d2) fail("case '" + current->label + "' lacks D1/D2");
            std::tie(current->d1_a, current->d1_b) = parse_class_forms(*pending_d1, current->surface);
            std::tie(current->d2_a, current->d2_b) = parse_class_forms(*pending_d2, current->surface);
            tables.records_.push_back(std::move(*current));
            current.reset();
        } else {
            fail("unknown directive '" + std::string(key) + "'");
        }
    }
    if (current) throw TableParseError("unterminated case block '" + current->label + "'");
    if (tables.version_ == 0) throw TableParseError("missing version line");
    if (tables.records_.empty()) throw TableParseError("no case records");
    return tables;
}

ExpectedTables ExpectedTables::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TableParseError("cannot open tables file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

const ExpectedCaseTemplate* ExpectedTables::find(std::string_view label) const {
    for (const auto& r : records_)
        if (r.label == label) return &r;
    return nullptr;
}

std::vector<ExpectedCaseInstance> ExpectedTables::instantiate(const MinimalDegreeSurface& w,
                                                              GaloisGroup g) const {
    std::vector<ExpectedCaseInstance> out;
    if (w.kind() == SurfaceKind::Veronese) return out;
    Int m = w.is_scroll() ? w.m() : 0;
    Int e = w.is_scroll() ? w.e() : 0;
    for (const auto& r : records_) {
        if (r.group != g || !r.applies(w)) continue;
        ExpectedCaseInstance inst;
        inst.label = r.label;
        inst.D1 = {r.d1_a.eval(m, e), r.d1_b.eval(m, e)};
        inst.D2 = {r.d2_a.eval(m, e), r.d2_b.eval(m, e)};
        // The two rulings of S(1,1) are interchangeable; that is the only
        // place a swap link means anything.
        if (r.swap_duplicate_of && w.is_scroll() && e == 0 && m == 1)
            inst.swap_duplicate_of = r.swap_duplicate_of;
        inst.source = r.source;
        inst.paper_ref = r.paper_ref;
        out.push_back(std::move(inst));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.label < y.label; });
    return out;
}

ExpectedTables ExpectedTables::without(std::string_view label) const {
    ExpectedTables copy = *this;
    std::erase_if(copy.records_, [&](const ExpectedCaseTemplate& r) { return r.label == label; });
    return copy;
}

std::string ExpectedTables::to_text() const {
    std::ostringstream out;
    out << "version " << version_ << "\n";
    for (const auto& r : records_) {
        out << "\ncase " << r.label << "\n";
        out << "  group " << to_string(r.group) << "\n";
        out << "  surface " << (r.surface == SurfaceKind::Scroll ? "scroll" : "P2") << "\n";
        if (r.surface == SurfaceKind::Scroll) {
            out << "  e " << r.e_min << ".." << r.e_max << "\n";
            if (r.m_exact)
                out << "  m " << *r.m_exact << "\n";
            else
                out << "  m " << r.m_min.str() << "..\n";
            out << "  D1 (" << r.d1_a.str() << ", " << r.d1_b.str() << ")\n";
            out << "  D2 (" << r.d2_a.str() << ", " << r.d2_b.str() << ")\n";
        } else {
            out << "  D1 " << r.d1_a.str() << "\n";
            out << "  D2 " << r.d2_a.str() << "\n";
        }
        if (r.swap_duplicate_of) out << "  swap_duplicate_of " << *r.swap_duplicate_of << "\n";
        out << "  source " << r.source << "\n";
        if (!r.paper_ref.empty()) out << "  ref " << r.paper_ref << "\n";
        out << "end\n";
    }
    return out.str();
}

std::string DiffReport::str() const {
    std::ostringstream out;
    for (const auto& s : missing) out << "missing: " << s << "\n";
    for (const auto& s : extra) out << "extra: " << s << "\n";
    for (const auto& s : mislabeled) out << "mislabeled: " << s << "\n";
    for (const auto& s : shape_mismatches) out << "shape: " << s << "\n";
    return out.str();
}

// Splitting profiles of the pushforward, as multisets of negated summands.
// Regular: {0, (1,m+1), (2,e+1), (3,m+e+2)}. Irregular (e = 0 only):
// {0, (1,m+2), (2,0), (3,m+2)}, {0, (0,m+1), (3,1), (3,m+2)} or
// {0, (0,m+2), (3,0), (3,m+2)}.
bool matches_splitting_profile(const ClassificationCase& c) {
    const MinimalDegreeSurface& w = c.candidate.W;
    std::vector<DivisorClass> neg;
    for (const DivisorClass& s : pushforward_summands(c.candidate)) neg.push_back(-s);
    auto sorted = [](std::vector<DivisorClass> v) {
        std::sort(v.begin(), v.end(), [](const DivisorClass& x, const DivisorClass& y) {
            return x.a != y.a ? x.a < y.a : x.b < y.b;
        });
        return v;
    };
    neg = sorted(neg);
    if (!w.is_scroll()) {
        return neg == sorted({{0, 0}, {2, 0}, {2, 0}, {4, 0}});
    }
    Int e = w.e();
    Int m = w.m();
    if (c.invariants.q == 0)
        return neg == sorted({{0, 0}, {1, m + 1}, {2, e + 1}, {3, m + e + 2}});
    if (e != 0) return false;
    return neg == sorted({{0, 0}, {1, m + 2}, {2, 0}, {3, m + 2}}) ||
           neg == sorted({{0, 0}, {0, m + 1}, {3, 1}, {3, m + 2}}) ||
           neg == sorted({{0, 0}, {0, m + 2}, {3, 0}, {3, m + 2}});
}

namespace {

std::string describe_case(const MinimalDegreeSurface& w, const std::string& label,
                          const DivisorClass& d1, const DivisorClass& d2) {
    return label + " D1=" + w.class_to_string(d1) + " D2=" + w.class_to_string(d2);
}

}  // namespace

DiffReport diff_against_builtin(const std::vector<ClassificationCase>& cases,
                                const MinimalDegreeSurface& w, GaloisGroup g,
                                const ExpectedTables& tables) {
    DiffReport report;
    std::vector<ExpectedCaseInstance> expected = tables.instantiate(w, g);
    std::vector<bool> used(expected.size(), false);
    for (const ClassificationCase& c : cases) {
        auto it = std::find_if(expected.begin(), expected.end(), [&](const auto& inst) {
            return inst.D1 == c.candidate.D1 && inst.D2 == c.candidate.D2;
        });
        if (it == expected.end()) {
            report.extra.push_back(describe_case(w, c.label, c.candidate.D1, c.candidate.D2));
        } else {
            used[static_cast<std::size_t>(it - expected.begin())] = true;
            if (it->label != c.label || it->source != c.source ||
                it->swap_duplicate_of != c.swap_duplicate_of)
                report.mislabeled.push_back(describe_case(w, c.label, c.candidate.D1,
                                                          c.candidate.D2) +
                                            " vs table entry " + it->label);
        }
        if (!matches_splitting_profile(c))
            report.shape_mismatches.push_back(
                describe_case(w, c.label, c.candidate.D1, c.candidate.D2));
    }
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (!used[i])
            report.missing.push_back(
                describe_case(w, expected[i].label, expected[i].D1, expected[i].D2));
    return report;
}

}  // namespace covercraft
