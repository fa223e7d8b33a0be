#include <algorithm>
#include <functional>
#include <sstream>

#include "sharpchar/errors.hpp"
#include "sharpchar/parse.hpp"
#include "sharpchar/search.hpp"
#include "sharpchar/table_io.hpp"

namespace sharpchar {
namespace {

// accumulates expectations; keeps the first failure's description
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (ok || failed_) return;
        failed_ = true;
        detail_ = what;
    }

    template <typename T>
    void expect_eq(const T& got, const T& want, const std::string& what) {
        if (got == want || failed_) return;
        failed_ = true;
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want;
        detail_ = os.str();
    }

    bool failed() const { return failed_; }
    const std::string& detail() const { return detail_; }

private:
    bool failed_ = false;
    std::string detail_;
};

std::vector<Cyclotomic> values_of(std::initializer_list<const char*> exprs) {
    std::vector<Cyclotomic> out;
    for (const char* e : exprs) out.push_back(parse_value(e));
    std::sort(out.begin(), out.end(), display_less);
    return out;
}

std::string l_string(const std::vector<Cyclotomic>& L) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (i) os << ", ";
        os << L[i];
    }
    os << '}';
    return os.str();
}

// analyze one combination and require the core sharp facts
SharpReport expect_sharp(Checker& c, const std::shared_ptr<const CharacterTable>& t,
                         const std::string& combo, const std::vector<Cyclotomic>& l_want,
                         const Rational& norm_want) {
    const SharpReport r = analyze(parse_combo(t, combo));
    c.expect(r.sharp, combo + " should be sharp (Sh = " + to_expression_string(r.sh_value) +
                          ", |G| = " + std::to_string(t->order()) + ")");
    c.expect(r.L == l_want, combo + ": L is " + l_string(r.L) + ", want " + l_string(l_want));
    c.expect_eq(r.norm, norm_want, combo + ": norm");
    return r;
}

bool contains_combo(const std::vector<SearchHit>& hits, const std::string& combo) {
    return std::any_of(hits.begin(), hits.end(), [&](const SearchHit& h) {
        return combo_string(h.character) == combo;
    });
}

} // namespace

ExamplesReport verify_examples(const std::filesystem::path& fixtures_dir) {
    ExamplesReport report;
    auto check = [&](const std::string& name, const std::function<void(Checker&)>& body) {
        Checker c;
        std::string error;
        try {
            body(c);
        } catch (const std::exception& e) {
            error = e.what();
        }
        ExampleCheck result;
        result.name = name;
        result.pass = error.empty() && !c.failed();
        result.detail = !error.empty() ? error : c.detail();
        report.checks.push_back(std::move(result));
    };
    auto table = [&](const char* stem) { return load_table(fixtures_dir / (std::string(stem) + ".json")); };

    // one group, two sharp characters of the same type with norms 6 and 4
    check("sg32_6_pair", [&](Checker& c) {
        auto t = table("sg32_6");
        const auto L = values_of({"-1", "3"});
        expect_sharp(c, t, "chi1+2*chi2+chi5", L, Rational(6));
        expect_sharp(c, t, "chi2+chi3+chi4+chi5", L, Rational(4));
    });

    // same type, both normalized, norms 2 vs 3; the norm-3 witness needs a
    // virtual character, and restricting to genuine characters removes it
    check("sg192_1494_virtual_pair", [&](Checker& c) {
        auto t = table("sg192_1494");
        const auto L = values_of({"-2", "0", "2"});
        const SharpReport chi = expect_sharp(c, t, "chi2+chi5", L, Rational(2));
        c.expect(chi.normalized, "chi2+chi5 should be normalized");
        c.expect(chi.character, "chi2+chi5 should be a character");
        const SharpReport theta = expect_sharp(c, t, "chi3+chi4-chi1", L, Rational(3));
        c.expect(theta.normalized, "chi3+chi4-chi1 should be normalized");
        c.expect(!theta.character, "chi3+chi4-chi1 should not be a character");

        SearchSpec spec;
        spec.table = t;
        spec.coeff_min = -1;
        spec.coeff_max = 1;
        const auto families = find_counterexamples(spec);
        const auto* fam = [&]() -> const CounterexampleFamily* {
            for (const auto& f : families)
                if (f.L == L) return &f;
            return nullptr;
        }();
        c.expect(fam != nullptr, "bounds [-1,1]: no counterexample family of type {-2, 0, 2}");
        if (fam) {
            c.expect(contains_combo(fam->members, "chi2+chi5"),
                     "family misses chi2+chi5");
            c.expect(contains_combo(fam->members, "-chi1+chi3+chi4"),
                     "family misses -chi1+chi3+chi4");
            c.expect(std::count(fam->distinct_norms.begin(), fam->distinct_norms.end(),
                                Rational(2)) == 1 &&
                         std::count(fam->distinct_norms.begin(), fam->distinct_norms.end(),
                                    Rational(3)) == 1,
                     "family should reach norms 2 and 3");
        }

        SearchSpec chars_only = spec;
        chars_only.require_character = true;
        for (const auto& f : find_counterexamples(chars_only))
            c.expect(f.L != L,
                     "restricted to characters, type {-2, 0, 2} should no longer split norms");
    });

    // non-isomorphic groups sharing the type {-1, 0, 2} with norms 1 vs 2
    check("a7_d12_cross_group", [&](Checker& c) {
        const auto L = values_of({"-1", "0", "2"});
        expect_sharp(c, table("a7_chi"), "chi", L, Rational(1));
        expect_sharp(c, table("d12"), "chi2+chi6", L, Rational(2));
    });

    // equal group order, type {-2, 0, 2}, norms 1 vs 2
    check("order192_cross_group", [&](Checker& c) {
        const auto L = values_of({"-2", "0", "2"});
        expect_sharp(c, table("sg192_955_chi"), "chi", L, Rational(1));
        expect_sharp(c, table("sg192_1494_theta"), "theta1+theta2", L, Rational(2));
    });

    // same type, norms 5 vs 3 -- possible only because neither is normalized
    check("d16_normalization", [&](Checker& c) {
        auto t = table("d16");
        const auto L = values_of({"0", "2", "2+z(8)-z(8)^3", "2-z(8)+z(8)^3"});
        const SharpReport chi = expect_sharp(c, t, "2*chi1+chi3", L, Rational(5));
        c.expect(!chi.normalized, "2*chi1+chi3 should not be normalized");
        const SharpReport theta = expect_sharp(c, t, "chi1+chi2+chi3", L, Rational(3));
        c.expect(!theta.normalized, "chi1+chi2+chi3 should not be normalized");

        SearchSpec spec;
        spec.table = t;
        spec.coeff_min = 0;
        spec.coeff_max = 2;
        spec.require_character = true;
        const SearchResult found = enumerate_sharp(spec);
        c.expect(found.partial_table, "d16 table is partial; the search should say so");
        c.expect(contains_combo(found.hits, "2*chi1+chi3"), "search misses 2*chi1+chi3");
        c.expect(contains_combo(found.hits, "chi1+chi2+chi3"), "search misses chi1+chi2+chi3");
    });

    return report;
}

} // namespace sharpchar
