#include <doctest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "sharpchar/errors.hpp"
#include "sharpchar/parse.hpp"
#include "sharpchar/search.hpp"
#include "sharpchar/table_io.hpp"

using namespace sharpchar;

namespace {

std::shared_ptr<const CharacterTable> fixture(const char* stem) {
    return load_table(std::filesystem::path(SHARPCHAR_FIXTURE_DIR) /
                      (std::string(stem) + ".json"));
}

std::vector<std::string> combos(const std::vector<SearchHit>& hits) {
    std::vector<std::string> out;
    out.reserve(hits.size());
    for (const SearchHit& h : hits) out.push_back(combo_string(h.character));
    return out;
}

std::vector<Cyclotomic> values_of(std::initializer_list<const char*> exprs) {
    std::vector<Cyclotomic> out;
    for (const char* e : exprs) out.push_back(parse_value(e));
    std::sort(out.begin(), out.end(), display_less);
    return out;
}

// reference enumeration: same box, no shortcuts, plain odometer
std::vector<std::string> brute_force(const SearchSpec& spec) {
    const CharacterTable& t = *spec.table;
    std::vector<std::int64_t> coeffs(t.num_rows(), spec.coeff_min);
    std::vector<std::string> out;
    for (;;) {
        bool nonzero = false;
        for (std::int64_t c : coeffs) nonzero |= c != 0;
        if (nonzero) {
            VirtualCharacter vc{spec.table, {}};
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                if (coeffs[i] != 0) vc.coefficients[t.row_names()[i]] = coeffs[i];
            Rational deg(0);
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                deg += coeffs[i] * t.row_at(i)[t.identity_index()].as_rational();
            if (deg >= 1 && analyze(vc).sharp) out.push_back(combo_string(vc));
        }
        std::size_t i = coeffs.size();
        while (i-- > 0) {
            if (coeffs[i] < spec.coeff_max) {
                ++coeffs[i];
                break;
            }
            coeffs[i] = spec.coeff_min;
        }
        if (i == std::size_t(-1)) break;
    }
    return out;
}

} // namespace

TEST_CASE("search over a small cyclic group finds the known sharp sums") {
    SearchSpec spec;
    spec.table = cyclic_table(4);
    spec.coeff_min = 0;
    spec.coeff_max = 1;
    spec.require_character = true;
    spec.require_normalized = true;

    const SearchResult found = enumerate_sharp(spec);
    CHECK(!found.partial_table);
    CHECK(!found.truncated);
    CHECK(combos(found.hits) ==
          std::vector<std::string>{"lambda3", "lambda1", "lambda1+lambda2+lambda3"});

    SearchSpec irr = spec;
    irr.require_irrational_in_L = true;
    CHECK(combos(enumerate_sharp(irr).hits) ==
          std::vector<std::string>{"lambda3", "lambda1"});
}

TEST_CASE("per-row bounds override the box") {
    SearchSpec spec;
    spec.table = cyclic_table(4);
    spec.coeff_min = 0;
    spec.coeff_max = 1;
    spec.row_bounds["lambda1"] = {1, 1};

    CHECK(combos(enumerate_sharp(spec).hits) ==
          std::vector<std::string>{"lambda1", "lambda1+lambda2+lambda3",
                                   "lambda0+lambda1",
                                   "lambda0+lambda1+lambda2+lambda3"});

    SearchSpec unknown = spec;
    unknown.row_bounds["lambda9"] = {0, 1};
    CHECK_THROWS_AS(enumerate_sharp(unknown), precondition_error);

    SearchSpec empty = spec;
    empty.row_bounds["lambda1"] = {2, 1};
    CHECK_THROWS_AS(enumerate_sharp(empty), precondition_error);

    SearchSpec inverted;
    inverted.table = cyclic_table(4);
    inverted.coeff_min = 1;
    inverted.coeff_max = 0;
    CHECK_THROWS_AS(enumerate_sharp(inverted), precondition_error);
    CHECK_THROWS_AS(enumerate_sharp(SearchSpec{}), precondition_error);
}

TEST_CASE("worker count never changes the hit sequence") {
    for (const auto& make : {+[] { return cyclic_table(5); }, +[] { return dihedral_table(6); }}) {
        SearchSpec spec;
        spec.table = make();
        spec.coeff_min = -1;
        spec.coeff_max = 1;
        const auto lone = combos(enumerate_sharp(spec).hits);
        for (unsigned workers : {2u, 3u, 8u}) {
            SearchSpec parallel = spec;
            parallel.workers = workers;
            CHECK(combos(enumerate_sharp(parallel).hits) == lone);
        }
    }
}

TEST_CASE("search agrees with plain brute force on cyclic groups") {
    for (std::int64_t m = 2; m <= 6; ++m) {
        CAPTURE(m);
        SearchSpec spec;
        spec.table = cyclic_table(m);
        spec.coeff_min = -1;
        spec.coeff_max = 1;
        spec.workers = 2;
        CHECK(combos(enumerate_sharp(spec).hits) == brute_force(spec));
    }
}

TEST_CASE("the faithfulness prefilter is invisible in results") {
    SearchSpec spec;
    spec.table = cyclic_table(6);
    spec.coeff_min = -1;
    spec.coeff_max = 1;
    SearchSpec bare = spec;
    bare.prefilter_faithful = false;
    CHECK(combos(enumerate_sharp(spec).hits) == combos(enumerate_sharp(bare).hits));
}

TEST_CASE("filters act exactly like the report flags") {
    SearchSpec spec;
    spec.table = dihedral_table(8);
    spec.coeff_min = -1;
    spec.coeff_max = 1;
    const SearchResult all = enumerate_sharp(spec);
    REQUIRE(!all.hits.empty());

    auto filtered = [&](auto&& keep) {
        std::vector<std::string> out;
        for (const SearchHit& h : all.hits)
            if (keep(h.report)) out.push_back(combo_string(h.character));
        return out;
    };

    SearchSpec s1 = spec;
    s1.require_normalized = true;
    CHECK(combos(enumerate_sharp(s1).hits) ==
          filtered([](const SharpReport& r) { return r.normalized; }));

    SearchSpec s2 = spec;
    s2.require_faithful = true;
    CHECK(combos(enumerate_sharp(s2).hits) ==
          filtered([](const SharpReport& r) { return r.faithful; }));

    SearchSpec s3 = spec;
    s3.require_irrational_in_L = true;
    CHECK(combos(enumerate_sharp(s3).hits) ==
          filtered([](const SharpReport& r) { return r.has_irrational; }));

    SearchSpec s4 = spec;
    s4.require_character = true;
    CHECK(combos(enumerate_sharp(s4).hits) ==
          filtered([](const SharpReport& r) { return r.character; }));
}

TEST_CASE("truncation keeps a prefix and raises the flag") {
    SearchSpec spec;
    spec.table = cyclic_table(5);
    spec.coeff_min = -1;
    spec.coeff_max = 1;
    const auto full = combos(enumerate_sharp(spec).hits);
    REQUIRE(full.size() > 2);

    SearchSpec capped = spec;
    capped.max_results = 2;
    const SearchResult cut = enumerate_sharp(capped);
    CHECK(cut.truncated);
    CHECK(combos(cut.hits) == std::vector<std::string>(full.begin(), full.begin() + 2));

    capped.max_results = full.size();
    CHECK(!enumerate_sharp(capped).truncated);
}

TEST_CASE("single-row hits on the cyclic group of order five") {
    SearchSpec spec;
    spec.table = cyclic_table(5);
    spec.coeff_min = -1;
    spec.coeff_max = 1;
    spec.max_nonzero_rows = 1;
    CHECK(combos(enumerate_sharp(spec).hits) ==
          std::vector<std::string>{"lambda4", "lambda3", "lambda2", "lambda1"});
}

TEST_CASE("partial tables are flagged") {
    SearchSpec spec;
    spec.table = fixture("sg32_6");
    spec.coeff_min = 0;
    spec.coeff_max = 1;
    CHECK(enumerate_sharp(spec).partial_table);
}

TEST_CASE("norm-splitting families on the order-192 table") {
    SearchSpec spec;
    spec.table = fixture("sg192_1494");
    spec.coeff_min = -1;
    spec.coeff_max = 1;

    const auto families = find_counterexamples(spec);
    const auto L = values_of({"-2", "0", "2"});
    const CounterexampleFamily* fam = nullptr;
    for (const auto& f : families)
        if (f.L == L) fam = &f;
    REQUIRE(fam != nullptr);
    CHECK(fam->l_key == "-2, 0, 2");
    const auto member_combos = combos(fam->members);
    CHECK(std::count(member_combos.begin(), member_combos.end(), "chi2+chi5") == 1);
    CHECK(std::count(member_combos.begin(), member_combos.end(), "-chi1+chi3+chi4") == 1);
    CHECK(std::count(fam->distinct_norms.begin(), fam->distinct_norms.end(), Rational(2)) == 1);
    CHECK(std::count(fam->distinct_norms.begin(), fam->distinct_norms.end(), Rational(3)) == 1);
    CHECK(std::is_sorted(fam->distinct_norms.begin(), fam->distinct_norms.end()));

    // genuine characters alone never split this type's norm
    SearchSpec chars_only = spec;
    chars_only.require_character = true;
    for (const auto& f : find_counterexamples(chars_only)) CHECK(f.L != L);
}

TEST_CASE("the two published order-16 witnesses form the only character family") {
    SearchSpec spec;
    spec.table = fixture("d16");
    spec.coeff_min = 0;
    spec.coeff_max = 2;
    spec.require_character = true;

    const auto hits = enumerate_sharp(spec);
    CHECK(combos(hits.hits) ==
          std::vector<std::string>{"chi3", "chi2+chi3", "chi1+chi3", "chi1+chi2+chi3",
                                   "2*chi1+chi3", "2*chi1+chi2+chi3"});

    const auto families = find_counterexamples(spec);
    REQUIRE(families.size() == 1);
    CHECK(families[0].L == values_of({"0", "2", "2-z(8)+z(8)^3", "2+z(8)-z(8)^3"}));
    CHECK(families[0].distinct_norms == std::vector<Rational>{Rational(3), Rational(5)});
    CHECK(combos(families[0].members) ==
          std::vector<std::string>{"chi1+chi2+chi3", "2*chi1+chi3"});
}

TEST_CASE("no counterexamples among normalized sharp characters of the families") {
    // spot-check the conjecture on a whole table: every normalized character
    // hit on D20 determines its norm from L alone
    SearchSpec spec;
    spec.table = dihedral_table(10);
    spec.coeff_min = 0;
    spec.coeff_max = 1;
    spec.require_character = true;
    spec.require_normalized = true;
    CHECK(find_counterexamples(spec).empty());
}
