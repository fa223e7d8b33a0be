#include "sharpchar/reporting.hpp"

#include <sstream>

namespace sharpchar {
namespace {

using nlohmann::ordered_json;

const char* yesno(bool b) { return b ? "yes" : "no"; }

ordered_json value_array(const std::vector<Cyclotomic>& values) {
    ordered_json arr = ordered_json::array();
    for (const Cyclotomic& v : values) arr.push_back(to_expression_string(v));
    return arr;
}

} // namespace

std::string braced_values(const std::vector<Cyclotomic>& values) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ", ";
        os << values[i];
    }
    os << '}';
    return os.str();
}

std::string sharp_report_text(const CharacterTable& t, const std::string& combo,
                              const SharpReport& r) {
    std::ostringstream os;
    os << "table: " << t.name() << " (order " << t.order() << ", " << t.num_classes()
       << " classes" << (t.complete() ? "" : ", partial") << ")\n";
    os << "combo: " << combo << "\n";
    os << "degree: " << r.degree << "\n";
    os << "L: " << braced_values(r.L) << "\n";
    os << "Sh: " << r.sh_value << "\n";
    os << "sharp: " << yesno(r.sharp) << "\n";
    os << "normalized: " << yesno(r.normalized) << "\n";
    os << "character: " << yesno(r.character) << "\n";
    os << "faithful: " << yesno(r.faithful) << "\n";
    os << "norm: " << format_rational(r.norm) << "\n";
    std::ostringstream ints;
    for (std::size_t i = 0; i < r.integer_values.size(); ++i) {
        if (i) ints << ", ";
        ints << r.integer_values[i];
    }
    os << "L integers: {" << ints.str() << "}\n";
    os << "L has irrational: " << yesno(r.has_irrational) << "\n";
    os << "L real: " << yesno(r.real_valued) << "\n";
    return os.str();
}

ordered_json sharp_report_json(const CharacterTable& t, const std::string& combo,
                               const SharpReport& r) {
    ordered_json doc;
    doc["table"] = t.name();
    doc["combo"] = combo;
    doc["degree"] = r.degree;
    doc["L"] = value_array(r.L);
    doc["sh"] = to_expression_string(r.sh_value);
    doc["sharp"] = r.sharp;
    doc["normalized"] = r.normalized;
    doc["character"] = r.character;
    doc["faithful"] = r.faithful;
    doc["norm"] = format_rational(r.norm);
    ordered_json ints = ordered_json::array();
    for (const BigInt& v : r.integer_values) ints.push_back(v.str());
    doc["integer_values"] = std::move(ints);
    doc["has_irrational"] = r.has_irrational;
    doc["real_valued"] = r.real_valued;
    doc["partial_table"] = !t.complete();
    return doc;
}

std::string validation_text(const CharacterTable& t, const ValidationReport& r) {
    std::ostringstream os;
    if (r.ok()) {
        os << "table " << t.name() << ": ok\n";
        return os.str();
    }
    os << "table " << t.name() << ": " << r.issues.size() << " issue"
       << (r.issues.size() == 1 ? "" : "s") << "\n";
    for (const ValidationIssue& issue : r.issues)
        os << "  [" << issue.where << "] " << issue.message << "\n";
    return os.str();
}

ordered_json validation_json(const CharacterTable& t, const ValidationReport& r) {
    ordered_json doc;
    doc["table"] = t.name();
    doc["ok"] = r.ok();
    ordered_json issues = ordered_json::array();
    for (const ValidationIssue& issue : r.issues) {
        ordered_json ij;
        ij["where"] = issue.where;
        ij["message"] = issue.message;
        issues.push_back(std::move(ij));
    }
    doc["issues"] = std::move(issues);
    return doc;
}

std::string search_hit_text(const SearchHit& hit) {
    std::ostringstream os;
    os << combo_string(hit.character) << " | degree " << hit.report.degree << " | norm "
       << format_rational(hit.report.norm) << " | L = " << braced_values(hit.report.L);
    return os.str();
}

ordered_json search_hit_json(const SearchHit& hit) {
    ordered_json doc;
    doc["combo"] = combo_string(hit.character);
    doc["degree"] = hit.report.degree;
    doc["norm"] = format_rational(hit.report.norm);
    doc["L"] = value_array(hit.report.L);
    doc["normalized"] = hit.report.normalized;
    doc["character"] = hit.report.character;
    doc["faithful"] = hit.report.faithful;
    return doc;
}

std::string family_text(const CounterexampleFamily& fam) {
    std::ostringstream os;
    os << "family L = " << braced_values(fam.L) << " | norms {";
    for (std::size_t i = 0; i < fam.distinct_norms.size(); ++i) {
        if (i) os << ", ";
        os << format_rational(fam.distinct_norms[i]);
    }
    os << "} | " << fam.members.size() << " member" << (fam.members.size() == 1 ? "" : "s")
       << "\n";
    for (const SearchHit& hit : fam.members)
        os << "  " << combo_string(hit.character) << " (norm "
           << format_rational(hit.report.norm) << ")\n";
    return os.str();
}

ordered_json family_json(const CounterexampleFamily& fam) {
    ordered_json doc;
    doc["L"] = value_array(fam.L);
    ordered_json norms = ordered_json::array();
    for (const Rational& n : fam.distinct_norms) norms.push_back(format_rational(n));
    doc["norms"] = std::move(norms);
    ordered_json members = ordered_json::array();
    for (const SearchHit& hit : fam.members) members.push_back(search_hit_json(hit));
    doc["members"] = std::move(members);
    return doc;
}

std::string examples_text(const ExamplesReport& r) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const ExampleCheck& c : r.checks) {
        os << (c.pass ? "pass" : "FAIL") << " " << c.name;
        if (!c.pass) {
            os << ": " << c.detail;
            ++failed;
        }
        os << "\n";
    }
    if (failed == 0)
        os << "all examples pass (" << r.checks.size() << " checks)\n";
    else
        os << failed << " of " << r.checks.size() << " example checks failed\n";
    return os.str();
}

ordered_json examples_json(const ExamplesReport& r) {
    ordered_json doc;
    ordered_json checks = ordered_json::array();
    for (const ExampleCheck& c : r.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.pass) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    doc["checks"] = std::move(checks);
    doc["all_pass"] = r.all_pass();
    return doc;
}

} // namespace sharpchar
