#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sharpchar/sharp.hpp"

namespace sharpchar {

// Exhaustive search for sharp virtual characters over a coefficient box.
// Enumeration order is lexicographic in the coefficient vector (rows in
// table order), and the result is independent of the worker count.
struct SearchSpec {
    std::shared_ptr<const CharacterTable> table;
    std::int64_t coeff_min = -2;
    std::int64_t coeff_max = 2;
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> row_bounds; // per-row override
    std::optional<std::size_t> max_nonzero_rows;

    bool require_character = false;
    bool require_normalized = false;
    bool require_faithful = false;
    bool require_irrational_in_L = false;

    std::optional<std::size_t> max_results;
    unsigned workers = 1;

    // Performance knob only: skip the full report for vectors whose value on
    // some non-identity class equals the degree (those have Sh = 0 and can
    // never be sharp).  Never changes the result set.
    bool prefilter_faithful = true;
};

struct SearchHit {
    VirtualCharacter character;
    SharpReport report;
};

struct SearchResult {
    std::vector<SearchHit> hits;
    bool truncated = false;     // max_results cut the list short
    bool partial_table = false; // the table is not marked complete
};

SearchResult enumerate_sharp(const SearchSpec& spec);

// Sharp finds grouped by value set; a group is a "counterexample family"
// when its members achieve two or more distinct norms.
struct CounterexampleFamily {
    std::vector<Cyclotomic> L;
    std::string l_key; // canonical serialization of L, the grouping key
    std::vector<SearchHit> members;
    std::vector<Rational> distinct_norms; // ascending
};

std::vector<CounterexampleFamily> find_counterexamples(const SearchSpec& spec);

// Re-checks of the bundled example tables; detail holds the first failing
// comparison, if any.
struct ExampleCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ExamplesReport {
    std::vector<ExampleCheck> checks;
    bool all_pass() const;
};

ExamplesReport verify_examples(const std::filesystem::path& fixtures_dir);

} // namespace sharpchar
