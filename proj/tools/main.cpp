// Command-line front end: table validation, sharpness checks, constructed
// families, exhaustive searches, and the bundled example suite.
//
// Exit codes: 0 success / all checks pass, 1 a check or verification failed,
// 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sharpchar/chartab.hpp"
#include "sharpchar/errors.hpp"
#include "sharpchar/parse.hpp"
#include "sharpchar/reporting.hpp"
#include "sharpchar/search.hpp"
#include "sharpchar/sharp.hpp"
#include "sharpchar/table_io.hpp"

namespace {

using namespace sharpchar;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void emit_json(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ----- validate -----

int run_validate(const std::string& file, bool json) {
    auto table = load_table(file);
    const ValidationReport report = validate(*table);
    if (json)
        emit_json(validation_json(*table, report));
    else
        std::cout << validation_text(*table, report);
    return report.ok() ? kOk : kCheckFailed;
}

// ----- table -----

std::string table_grid(const CharacterTable& t) {
    // name column + one column per class, every cell pre-rendered
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head{"class"};
    std::vector<std::string> sizes{"size"};
    for (const ClassData& c : t.classes()) {
        head.push_back(c.label);
        sizes.push_back(std::to_string(c.size));
    }
    grid.push_back(std::move(head));
    grid.push_back(std::move(sizes));
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        std::vector<std::string> line{t.row_names()[i]};
        for (const Cyclotomic& v : t.row_at(i)) line.push_back(to_expression_string(v));
        grid.push_back(std::move(line));
    }

    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& line : grid)
        for (std::size_t c = 0; c < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());

    std::string out = "table: " + t.name() + " (order " + std::to_string(t.order()) + ", " +
                      std::to_string(t.num_classes()) + " classes" +
                      (t.complete() ? "" : ", partial") + ")\n";
    for (const auto& line : grid) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            const std::string& cell = line[c];
            if (c == 0)
                out += cell + std::string(width[0] - cell.size(), ' ') + " |";
            else
                out += " " + std::string(width[c] - cell.size(), ' ') + cell;
        }
        out += "\n";
    }
    return out;
}

int run_table(const std::string& family, std::int64_t param, bool json) {
    std::shared_ptr<const CharacterTable> table;
    if (family == "cyclic")
        table = cyclic_table(param);
    else if (family == "dihedral")
        table = dihedral_table(param);
    else
        table = quaternion_table(param);
    if (json)
        std::cout << table_to_json(*table);
    else
        std::cout << table_grid(*table);
    return kOk;
}

// ----- check -----

int run_check(const std::string& file, const std::string& combo, bool json) {
    auto table = load_table(file);
    VirtualCharacter vc = parse_combo(table, combo);
    check_virtual_character(vc);
    const SharpReport report = analyze(vc);
    if (json)
        emit_json(sharp_report_json(*table, combo_string(vc), report));
    else
        std::cout << sharp_report_text(*table, combo_string(vc), report);
    return report.sharp ? kOk : kCheckFailed;
}

// ----- search / counterexamples -----

struct SearchCliOpts {
    std::string table_file;
    std::int64_t lo = -2;
    std::int64_t hi = 2;
    bool character = false;
    bool normalized = false;
    bool faithful = false;
    bool irrational = false;
    std::int64_t max_nonzero = -1; // < 0: no cap
    std::int64_t max_results = -1; // < 0: no cap
    unsigned jobs = 1;
    bool no_prefilter = false;
};

SearchSpec make_spec(const SearchCliOpts& o) {
    SearchSpec spec;
    spec.table = load_table(o.table_file);
    spec.coeff_min = o.lo;
    spec.coeff_max = o.hi;
    spec.require_character = o.character;
    spec.require_normalized = o.normalized;
    spec.require_faithful = o.faithful;
    spec.require_irrational_in_L = o.irrational;
    if (o.max_nonzero >= 0) spec.max_nonzero_rows = static_cast<std::size_t>(o.max_nonzero);
    if (o.max_results >= 0) spec.max_results = static_cast<std::size_t>(o.max_results);
    spec.workers = o.jobs == 0 ? 1 : o.jobs;
    spec.prefilter_faithful = !o.no_prefilter;
    return spec;
}

int run_search(const SearchCliOpts& o, bool json) {
    const SearchSpec spec = make_spec(o);
    const SearchResult result = enumerate_sharp(spec);
    if (json) {
        ordered_json doc;
        doc["table"] = spec.table->name();
        doc["coeff_min"] = spec.coeff_min;
        doc["coeff_max"] = spec.coeff_max;
        ordered_json hits = ordered_json::array();
        for (const SearchHit& hit : result.hits) hits.push_back(search_hit_json(hit));
        doc["hits"] = std::move(hits);
        doc["truncated"] = result.truncated;
        doc["partial_table"] = result.partial_table;
        emit_json(doc);
    } else {
        std::cout << "table: " << spec.table->name() << " | coefficients [" << spec.coeff_min
                  << ", " << spec.coeff_max << "] | " << result.hits.size() << " sharp hit"
                  << (result.hits.size() == 1 ? "" : "s")
                  << (result.truncated ? " (truncated)" : "") << "\n";
        if (result.partial_table)
            std::cout << "note: table is partial; the search covers only its rows\n";
        for (const SearchHit& hit : result.hits) std::cout << search_hit_text(hit) << "\n";
    }
    return kOk;
}

int run_counterexamples(const SearchCliOpts& o, bool json) {
    const SearchSpec spec = make_spec(o);
    const std::vector<CounterexampleFamily> families = find_counterexamples(spec);
    if (json) {
        ordered_json doc;
        doc["table"] = spec.table->name();
        doc["coeff_min"] = spec.coeff_min;
        doc["coeff_max"] = spec.coeff_max;
        ordered_json fams = ordered_json::array();
        for (const CounterexampleFamily& fam : families) fams.push_back(family_json(fam));
        doc["families"] = std::move(fams);
        emit_json(doc);
    } else {
        std::cout << "table: " << spec.table->name() << " | coefficients [" << spec.coeff_min
                  << ", " << spec.coeff_max << "]\n";
        if (families.empty())
            std::cout << "no counterexamples: every value set determines one norm\n";
        else
            for (const CounterexampleFamily& fam : families) std::cout << family_text(fam);
    }
    return families.empty() ? kOk : kCheckFailed;
}

// ----- predict -----

int run_predict(const std::string& literal, bool json) {
    const std::vector<Cyclotomic> L = parse_value_set(literal);
    const int predicted = predict_norm(L);
    if (json) {
        ordered_json doc;
        ordered_json values = ordered_json::array();
        for (const Cyclotomic& v : L) values.push_back(to_expression_string(v));
        doc["L"] = std::move(values);
        ordered_json ints = ordered_json::array();
        for (const BigInt& v : integer_part(L)) ints.push_back(v.str());
        doc["integer_values"] = std::move(ints);
        doc["real"] = l_is_real(L);
        doc["predicted_norm"] = predicted;
        emit_json(doc);
    } else {
        std::cout << predicted << "\n";
    }
    return kOk;
}

// ----- lemmas -----

struct LemmaCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

LemmaCheck check_product_identities(std::int64_t m_max) {
    LemmaCheck check{"product identities (m <= " + std::to_string(m_max) + ")", true, ""};
    auto expect = [&](std::int64_t m, ProductVariant v, const Rational& want,
                      const char* label) {
        if (!check.pass) return;
        const Cyclotomic got = product_identity(m, v);
        if (got != Cyclotomic(want)) {
            check.pass = false;
            check.detail = std::string(label) + " at m=" + std::to_string(m) + ": got " +
                           to_expression_string(got);
        }
    };
    for (std::int64_t m = 2; m <= m_max; ++m) {
        expect(m, ProductVariant::full, Rational(m), "full product");
        if (m % 2 == 1 && m >= 5) expect(m, ProductVariant::half_odd, Rational(m), "half product");
        if (m % 2 == 0 && m >= 8)
            expect(m, ProductVariant::half_even, Rational(m, 2), "half product");
    }
    return check;
}

LemmaCheck sweep_family(SharpFamily family, int type, std::int64_t m_max) {
    LemmaCheck check{family_name(family), true, ""};
    std::size_t pairs = 0;
    auto try_pair = [&](std::int64_t m, std::int64_t j) {
        if (!check.pass) return;
        const FamilyPair pair = build_family_pair(family, m, j);
        const SharpReport report = analyze(pair.character);
        const bool ok = report.sharp && report.L == l_type(type, m) &&
                        report.norm == Rational(predict_norm(report.L));
        if (!ok) {
            check.pass = false;
            check.detail = "fails at m=" + std::to_string(m) + ", j=" + std::to_string(j);
            return;
        }
        ++pairs;
    };
    switch (family) {
    case SharpFamily::cyclic_linear:
        for (std::int64_t m = 3; m <= m_max; ++m)
            for (std::int64_t j = 1; j < m; ++j)
                if (std::gcd(j, m) == 1) try_pair(m, j);
        break;
    case SharpFamily::cyclic_conjugate_sum:
        for (std::int64_t m = 5; m <= m_max; m += 2)
            for (std::int64_t j = 1; j <= (m - 1) / 2; ++j)
                if (std::gcd(j, m) == 1) try_pair(m, j);
        break;
    case SharpFamily::dihedral_odd:
        for (std::int64_t m = 5; m <= m_max; m += 2)
            for (std::int64_t j = 1; j <= (m - 1) / 2; ++j)
                if (std::gcd(j, m) == 1) try_pair(m, j);
        break;
    case SharpFamily::psi_even:
        for (std::int64_t m = 8; m <= m_max; m += 4)
            for (std::int64_t j = 1; j <= m / 2 - 1; ++j)
                if (std::gcd(j, m) == 1) try_pair(m, j);
        break;
    case SharpFamily::psi_plus_epsilon:
        for (std::int64_t m = 8; m <= m_max; m += 2)
            for (std::int64_t j = 1; j <= m / 2 - 1; ++j)
                if (std::gcd(j, m) == 1) try_pair(m, j);
        break;
    }
    if (check.pass)
        check.name += " (" + std::to_string(pairs) + " sharp pairs, m <= " +
                      std::to_string(m_max) + ")";
    return check;
}

int run_lemmas(std::int64_t m_max, bool json) {
    std::vector<LemmaCheck> checks;
    checks.push_back(check_product_identities(m_max));
    checks.push_back(sweep_family(SharpFamily::cyclic_linear, 1, m_max));
    checks.push_back(sweep_family(SharpFamily::cyclic_conjugate_sum, 2, m_max));
    checks.push_back(sweep_family(SharpFamily::dihedral_odd, 3, m_max));
    checks.push_back(sweep_family(SharpFamily::psi_even, 4, m_max));
    checks.push_back(sweep_family(SharpFamily::psi_plus_epsilon, 5, m_max));

    std::size_t failed = 0;
    for (const LemmaCheck& c : checks)
        if (!c.pass) ++failed;

    if (json) {
        ordered_json doc;
        ordered_json arr = ordered_json::array();
        for (const LemmaCheck& c : checks) {
            ordered_json cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            if (!c.pass) cj["detail"] = c.detail;
            arr.push_back(std::move(cj));
        }
        doc["checks"] = std::move(arr);
        doc["all_pass"] = failed == 0;
        emit_json(doc);
    } else {
        for (const LemmaCheck& c : checks) {
            std::cout << (c.pass ? "pass" : "FAIL") << " " << c.name;
            if (!c.pass) std::cout << ": " << c.detail;
            std::cout << "\n";
        }
        if (failed == 0)
            std::cout << "all lemma checks pass (" << checks.size() << " checks)\n";
        else
            std::cout << failed << " of " << checks.size() << " lemma checks failed\n";
    }
    return failed == 0 ? kOk : kCheckFailed;
}

// ----- examples -----

int run_examples(const std::string& fixtures, bool json) {
    const ExamplesReport report = verify_examples(fixtures);
    if (json)
        emit_json(examples_json(report));
    else
        std::cout << examples_text(report);
    return report.all_pass() ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sharp-character toolkit: Sh(chi) products, value sets,"
                 " norm prediction, and exhaustive searches on character tables"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    std::string validate_file;
    CLI::App* cmd_validate =
        app.add_subcommand("validate", "check a table file's structural and"
                                       " orthogonality invariants");
    cmd_validate->add_option("file", validate_file, "table file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    add_format(cmd_validate);

    std::string table_family;
    std::int64_t table_param = 0;
    CLI::App* cmd_table = app.add_subcommand(
        "table", "emit a constructed character table (cyclic m; dihedral of order 2m;"
                 " generalized quaternion of order 4t)");
    cmd_table->add_option("family", table_family, "cyclic | dihedral | quaternion")
        ->required()
        ->check(CLI::IsMember({"cyclic", "dihedral", "quaternion"}));
    cmd_table->add_option("param", table_param, "family parameter (m, m, or t)")->required();
    add_format(cmd_table);

    std::string check_file;
    std::string check_combo;
    CLI::App* cmd_check =
        app.add_subcommand("check", "analyze one integer combination of table rows;"
                                    " exit 0 iff it is sharp");
    cmd_check->add_option("--table", check_file, "table file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_check->add_option("--combo", check_combo, "row combination, e.g. \"chi1+2*chi2-chi5\"")
        ->required();
    add_format(cmd_check);

    SearchCliOpts search_opts;
    SearchCliOpts counter_opts;
    auto add_search_opts = [&](CLI::App* cmd, SearchCliOpts& o) {
        cmd->add_option("--table", o.table_file, "table file (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--min", o.lo, "smallest row coefficient")->capture_default_str();
        cmd->add_option("--max", o.hi, "largest row coefficient")->capture_default_str();
        cmd->add_flag("--character", o.character, "require nonnegative coefficients");
        cmd->add_flag("--normalized", o.normalized, "require (chi, 1) = 0");
        cmd->add_flag("--faithful", o.faithful, "require a faithful pair");
        cmd->add_flag("--irrational", o.irrational, "require an irrational value in L");
        cmd->add_option("--max-nonzero", o.max_nonzero, "cap on nonzero coefficients");
        cmd->add_option("--max-results", o.max_results, "stop after this many hits");
        cmd->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
        cmd->add_flag("--no-prefilter", o.no_prefilter,
                      "disable the Sh = 0 skip (results never change)");
        add_format(cmd);
    };
    add_search_opts(app.add_subcommand("search", "enumerate sharp combinations over a"
                                                 " coefficient box"),
                    search_opts);
    add_search_opts(app.add_subcommand("counterexamples",
                                       "group sharp hits by value set and report any set"
                                       " carrying two different norms"),
                    counter_opts);

    std::string predict_literal;
    CLI::App* cmd_predict = app.add_subcommand(
        "predict", "predict the norm of a normalized sharp character from its value set");
    cmd_predict
        ->add_option("--l", predict_literal, "value-set literal, e.g. \"{-1, 0, z(8)+z(8)^7}\"")
        ->required();
    add_format(cmd_predict);

    std::int64_t lemmas_m_max = 60;
    CLI::App* cmd_lemmas = app.add_subcommand(
        "lemmas", "verify the product identities and the five sharp families up to m-max");
    cmd_lemmas->add_option("--m-max", lemmas_m_max, "largest cyclic parameter m")
        ->capture_default_str()
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{10000}));
    add_format(cmd_lemmas);

    std::string fixtures_dir = SHARPCHAR_FIXTURE_DIR;
    CLI::App* cmd_examples =
        app.add_subcommand("examples", "re-check every bundled example table and pair");
    cmd_examples->add_option("--fixtures", fixtures_dir, "fixtures directory")
        ->capture_default_str()
        ->check(CLI::ExistingDirectory);
    add_format(cmd_examples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    const bool json = format == "json";
    try {
        if (cmd_validate->parsed()) return run_validate(validate_file, json);
        if (cmd_table->parsed()) return run_table(table_family, table_param, json);
        if (cmd_check->parsed()) return run_check(check_file, check_combo, json);
        if (app.get_subcommand("search")->parsed()) return run_search(search_opts, json);
        if (app.get_subcommand("counterexamples")->parsed())
            return run_counterexamples(counter_opts, json);
        if (cmd_predict->parsed()) return run_predict(predict_literal, json);
        if (cmd_lemmas->parsed()) return run_lemmas(lemmas_m_max, json);
        if (cmd_examples->parsed()) return run_examples(fixtures_dir, json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage; // unreachable: require_subcommand(1)
}
