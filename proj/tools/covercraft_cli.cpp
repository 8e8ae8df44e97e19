#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covercraft/checks.hpp"
#include "covercraft/classify.hpp"
#include "covercraft/records.hpp"

namespace {

using namespace covercraft;

ExpectedTables resolve_tables(const std::string& cli_path) {
    if (!cli_path.empty()) return ExpectedTables::load_file(cli_path);
    if (const char* env = std::getenv("COVERCRAFT_TABLES"))
        if (*env) return ExpectedTables::load_file(env);
    return ExpectedTables::builtin();
}

MinimalDegreeSurface make_surface(const std::string& kind, std::optional<Int> e,
                                  std::optional<Int> m) {
    if (kind == "p2") {
        if (e || m) throw UsageError("--e/--m apply to scrolls only");
        return MinimalDegreeSurface::linear_p2();
    }
    if (kind == "veronese") {
        if (e || m) throw UsageError("--e/--m apply to scrolls only");
        return MinimalDegreeSurface::veronese();
    }
    if (kind == "scroll") {
        if (!e || !m) throw UsageError("scroll needs --e and --m");
        return MinimalDegreeSurface::scroll(*e, *m);  // enforces m >= e+1
    }
    throw UsageError("unknown surface '" + kind + "' (expected p2, veronese or scroll)");
}

DivisorClass parse_class(const std::string& text, const MinimalDegreeSurface& w) {
    try {
        std::string s = text;
        std::erase(s, ' ');
        if (!s.empty() && s.front() == '(') {
            if (!w.is_scroll()) throw UsageError("P2 classes are plain integers");
            if (s.back() != ')') throw UsageError("malformed class '" + text + "'");
            s = s.substr(1, s.size() - 2);
            auto comma = s.find(',');
            if (comma == std::string::npos) throw UsageError("malformed class '" + text + "'");
            return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
        }
        if (w.is_scroll()) throw UsageError("scroll classes are written (a,b)");
        return {std::stoll(s), 0};
    } catch (const std::invalid_argument&) {
        throw UsageError("cannot parse divisor class '" + text + "'");
    } catch (const std::out_of_range&) {
        throw UsageError("divisor class out of range '" + text + "'");
    }
}

int emit_and_diff(std::vector<ClassificationCase> cases, const MinimalDegreeSurface& w,
                  GaloisGroup g, const ExpectedTables& tables, OutputFormat format) {
    DiffReport diff = diff_against_builtin(cases, w, g, tables);
    auto records = to_records(cases, &tables);
    sort_records(records);
    std::cout << render(records, format);
    if (!diff.empty()) {
        std::cerr << "mismatch against the expected tables:\n" << diff.str();
        return 1;
    }
    return 0;
}

struct ClassifyOptions {
    std::string surface;
    std::optional<Int> e, m;
    std::string group;
    std::string format = "md";
    std::string tables_path;
};

int run_classify(const ClassifyOptions& opt) {
    OutputFormat format = parse_format(opt.format);
    ExpectedTables tables = resolve_tables(opt.tables_path);
    MinimalDegreeSurface w = make_surface(opt.surface, opt.e, opt.m);
    if (w.kind() == SurfaceKind::Veronese) {
        VeroneseClassification result = classify_veronese();
        std::cout << render({}, format);
        std::cerr << "no covers of the Veronese surface: each eigensheaf would restrict to "
                     "degree "
                  << result.witness.required_degree
                  << " on a hyperplane conic, but restricted degrees are multiples of "
                  << result.witness.parity_modulus << "\n";
        return 0;
    }
    if (opt.group.empty()) throw UsageError("--group is required for p2 and scroll");
    GaloisGroup g = parse_group(opt.group);
    auto cases = w.is_scroll() ? classify_scroll(w.e(), w.m(), g) : classify_p2(g);
    return emit_and_diff(std::move(cases), w, g, tables, format);
}

struct TableOptions {
    std::string group;
    std::vector<Int> e_list{0, 1, 2, 3};
    Int m_max = 20;
    std::string format = "md";
    std::string tables_path;
};

int run_table(const TableOptions& opt) {
    OutputFormat format = parse_format(opt.format);
    ExpectedTables tables = resolve_tables(opt.tables_path);
    GaloisGroup g = parse_group(opt.group);
    struct Cell {
        MinimalDegreeSurface w;
        std::future<std::vector<ClassificationCase>> work;
    };
    std::vector<Cell> cells;
    for (Int e : opt.e_list) {
        if (e < 0) throw UsageError("--e entries must be nonnegative");
        for (Int m = e + 1; m <= opt.m_max; ++m)
            cells.push_back({MinimalDegreeSurface::scroll(e, m),
                             std::async(std::launch::async, classify_scroll, e, m, g)});
    }
    if (cells.empty()) throw UsageError("empty grid: --m-max is below every e+1");
    std::vector<OutputRecord> records;
    bool mismatch = false;
    for (Cell& cell : cells) {  // ordered merge regardless of completion order
        auto cases = cell.work.get();
        DiffReport diff = diff_against_builtin(cases, cell.w, g, tables);
        if (!diff.empty()) {
            mismatch = true;
            std::cerr << "mismatch at " << cell.w.name() << ":\n" << diff.str();
        }
        for (auto& r : to_records(cases, &tables)) records.push_back(std::move(r));
    }
    sort_records(records);
    std::cout << render(records, format);
    return mismatch ? 1 : 0;
}

struct NonexistenceOptions {
    std::string kind = "simple-cyclic";
    Int degree_min = 4;
    Int degree_max = 20;
    Int e_max = 10;
    Int m_max = 50;
};

int run_nonexistence(const NonexistenceOptions& opt) {
    if (opt.kind == "simple-cyclic") {
        // Degrees below 4 sit outside the non-existence statement; tuples
        // found there are reported as advisory and do not fail the run.
        for (Int n = std::min<Int>(opt.degree_min, 4); n < 4 && n >= 2; ++n)
            for (const auto& v : probe_simple_cyclic_degree(n, opt.e_max, opt.m_max))
                std::cerr << "advisory: degree " << v.n << " tuple at e=" << v.e
                          << ", m=" << v.m << "\n";
        auto violations = check_simple_cyclic_nonexistence(opt.degree_max, opt.e_max, opt.m_max);
        std::cout << violations.size() << " violations\n";
        for (const auto& v : violations)
            std::cout << "n=" << v.n << " e=" << v.e << " m=" << v.m << "\n";
        return violations.empty() ? 0 : 1;
    }
    if (opt.kind == "z4-simple-cyclic") {
        bool ok = z4_no_simple_cyclic_property(opt.e_max, opt.m_max);
        std::cout << (ok ? "0 violations\n" : "simple cyclic Z4 case found\n");
        return ok ? 0 : 1;
    }
    throw UsageError("unknown kind '" + opt.kind +
                     "' (expected simple-cyclic or z4-simple-cyclic)");
}

struct CohomologyOptions {
    std::string surface;
    std::optional<Int> e, m;
    std::string klass;
    std::string format = "plain";
};

int run_cohomology(const CohomologyOptions& opt) {
    MinimalDegreeSurface w = make_surface(opt.surface, opt.e, opt.m);
    DivisorClass d = parse_class(opt.klass, w);
    CohomologyDims dims = w.cohomology(d);
    Int chi = w.euler_characteristic_rr(d);
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["surface"] = w.name();
        j["class"] = w.class_to_string(d);
        j["h0"] = dims.h0;
        j["h1"] = dims.h1;
        j["h2"] = dims.h2;
        j["chi"] = chi;
        std::cout << j.dump(2) << "\n";
    } else if (opt.format == "plain") {
        std::cout << "h0=" << dims.h0 << " h1=" << dims.h1 << " h2=" << dims.h2 << " chi=" << chi
                  << "\n";
    } else {
        throw UsageError("cohomology formats: plain, json");
    }
    return 0;
}

struct InvariantsOptions {
    std::string label;
    std::optional<Int> e, m;
    std::string format = "md";
    std::string tables_path;
    bool plan = false;
};

int run_invariants(const InvariantsOptions& opt) {
    OutputFormat format = parse_format(opt.format);
    ExpectedTables tables = resolve_tables(opt.tables_path);
    const ExpectedCaseTemplate* record = tables.find(opt.label);
    if (!record) throw UsageError("unknown case label '" + opt.label + "'");
    MinimalDegreeSurface w = MinimalDegreeSurface::linear_p2();
    if (record->surface == SurfaceKind::Scroll) {
        Int e = opt.e.value_or(record->e_min);
        Int m = opt.m ? *opt.m
                      : (record->m_exact ? *record->m_exact : record->m_min.eval(0, e));
        w = MinimalDegreeSurface::scroll(e, m);
        if (!record->applies(w))
            throw UsageError(opt.label + " does not occur at e=" + std::to_string(e) +
                             ", m=" + std::to_string(m));
    } else if (opt.e || opt.m) {
        throw UsageError("--e/--m apply to scroll cases only");
    }
    auto cases =
        w.is_scroll() ? classify_scroll(w.e(), w.m(), record->group) : classify_p2(record->group);
    for (const auto& c : cases) {
        if (c.label != opt.label) continue;
        std::cout << render(to_records({c}, &tables), format);
        if (opt.plan) {
            std::cout << "plan: " << describe(construction_plan(c.candidate), c.candidate.W)
                      << "\n";
            std::cout << "branches: " << c.existence_note << "\n";
        }
        return 0;
    }
    std::cerr << "case " << opt.label << " was not produced by the search\n";
    return 1;
}

struct SelfcheckOptions {
    std::string suite;
    std::string tables_path;
};

int run_selfcheck(const SelfcheckOptions& opt) {
    ExpectedTables tables = resolve_tables(opt.tables_path);
    int failures = 0;
    bool matched = false;
    for (const CheckResult& r : run_all_checks(tables)) {
        if (!opt.suite.empty() && r.name != opt.suite) continue;
        matched = true;
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " — " << r.detail << "\n";
        if (!r.pass) ++failures;
    }
    if (!matched) throw UsageError("unknown suite '" + opt.suite + "'");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covercraft — exact classification tables for quadruple Galois canonical "
                 "covers of smooth surfaces of minimal degree"};
    app.require_subcommand(1);

    ClassifyOptions classify_opt;
    auto* classify = app.add_subcommand("classify", "classify covers of one base surface");
    classify->add_option("--surface", classify_opt.surface, "p2, veronese or scroll")->required();
    classify->add_option("--e", classify_opt.e, "scroll invariant e (C0^2 = -e)");
    classify->add_option("--m", classify_opt.m, "scroll embedding degree parameter");
    classify->add_option("--group", classify_opt.group, "z4 or z2z2");
    classify->add_option("--format", classify_opt.format, "json, csv or md");
    classify->add_option("--tables", classify_opt.tables_path, "expected-tables override");

    TableOptions table_opt;
    auto* table = app.add_subcommand("table", "classification table over an (e, m) grid");
    table->add_option("--group", table_opt.group, "z4 or z2z2")->required();
    table->add_option("--e", table_opt.e_list, "e values (default 0 1 2 3)")->delimiter(',');
    table->add_option("--m-max", table_opt.m_max, "largest m per e (default 20)");
    table->add_option("--format", table_opt.format, "json, csv or md");
    table->add_option("--tables", table_opt.tables_path, "expected-tables override");

    NonexistenceOptions nonex_opt;
    auto* nonex = app.add_subcommand("nonexistence", "run the non-existence searches");
    nonex->add_option("--kind", nonex_opt.kind, "simple-cyclic or z4-simple-cyclic");
    nonex->add_option("--degree-min", nonex_opt.degree_min,
                      "probe degrees below 4 as advisory (default 4)");
    nonex->add_option("--degree-max", nonex_opt.degree_max, "largest cover degree (default 20)");
    nonex->add_option("--e-max", nonex_opt.e_max, "largest e (default 10)");
    nonex->add_option("--m-max", nonex_opt.m_max, "largest m (default 50)");

    CohomologyOptions coh_opt;
    auto* coh = app.add_subcommand("cohomology", "line bundle cohomology on a base surface");
    coh->add_option("--surface", coh_opt.surface, "p2, veronese or scroll")->required();
    coh->add_option("--e", coh_opt.e, "scroll invariant e");
    coh->add_option("--m", coh_opt.m, "scroll parameter m");
    coh->add_option("--class", coh_opt.klass, "divisor class, \"(a,b)\" or an integer")
        ->required();
    coh->add_option("--format", coh_opt.format, "plain or json");

    InvariantsOptions inv_opt;
    auto* inv = app.add_subcommand("invariants", "invariants of one classified case");
    inv->add_option("--label", inv_opt.label, "case label, e.g. B.2.1")->required();
    inv->add_option("--e", inv_opt.e, "scroll invariant e");
    inv->add_option("--m", inv_opt.m, "scroll parameter m");
    inv->add_option("--format", inv_opt.format, "json, csv or md");
    inv->add_option("--tables", inv_opt.tables_path, "expected-tables override");
    inv->add_flag("--plan", inv_opt.plan, "also print the double-cover construction plan");

    SelfcheckOptions self_opt;
    auto* self = app.add_subcommand("selfcheck", "run every property suite");
    self->add_option("--suite", self_opt.suite, "run a single suite by name");
    self->add_option("--tables", self_opt.tables_path, "expected-tables override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) return run_classify(classify_opt);
        if (table->parsed()) return run_table(table_opt);
        if (nonex->parsed()) return run_nonexistence(nonex_opt);
        if (coh->parsed()) return run_cohomology(coh_opt);
        if (inv->parsed()) return run_invariants(inv_opt);
        if (self->parsed()) return run_selfcheck(self_opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidSurface& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidBase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TableParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
