#include "sharpchar/search.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "sharpchar/errors.hpp"

namespace sharpchar {
namespace {

struct RowRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

std::vector<RowRange> resolve_bounds(const SearchSpec& spec) {
    if (!spec.table) throw precondition_error("search: no table");
    if (spec.coeff_min > spec.coeff_max)
        throw precondition_error("search: empty coefficient range");
    std::vector<RowRange> ranges;
    ranges.reserve(spec.table->num_rows());
    for (const std::string& name : spec.table->row_names()) {
        RowRange r{spec.coeff_min, spec.coeff_max};
        auto it = spec.row_bounds.find(name);
        if (it != spec.row_bounds.end()) r = {it->second.first, it->second.second};
        if (r.lo > r.hi) throw precondition_error("search: empty range for row " + name);
        ranges.push_back(r);
    }
    for (const auto& [name, bounds] : spec.row_bounds)
        if (!spec.table->has_row(name))
            throw precondition_error("search: bounds for unknown row '" + name + "'");
    return ranges;
}

// One candidate: build the full report and apply the sharpness predicate
// (degree >= 1 and Sh = |G|) plus the requested filters.
void consider(const SearchSpec& spec, const std::vector<std::int64_t>& coeffs,
              std::vector<SearchHit>& out) {
    const CharacterTable& t = *spec.table;

    if (spec.max_nonzero_rows) {
        std::size_t nonzero = 0;
        for (std::int64_t c : coeffs)
            if (c != 0) ++nonzero;
        if (nonzero > *spec.max_nonzero_rows) return;
    }
    if (spec.require_character &&
        std::any_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c < 0; }))
        return;

    // exact class values, cheapest checks first
    std::vector<Rational> weights;
    std::vector<std::span<const Cyclotomic>> rows;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        weights.emplace_back(coeffs[i]);
        rows.push_back(t.row_at(i));
    }
    const std::size_t id = t.identity_index();
    std::vector<Cyclotomic> column(rows.size());
    std::vector<Cyclotomic> vals(t.num_classes());
    for (std::size_t g = 0; g < t.num_classes(); ++g) {
        for (std::size_t i = 0; i < rows.size(); ++i) column[i] = rows[i][g];
        vals[g] = Cyclotomic::weighted_sum(weights, column);
    }
    const Cyclotomic& deg = vals[id];
    if (!deg.is_integer() || deg.as_integer() < 1) return; // degree <= 0 is never sharp here
    if (spec.prefilter_faithful) {
        for (std::size_t g = 0; g < vals.size(); ++g)
            if (g != id && vals[g] == deg) return; // Sh would vanish
    }

    VirtualCharacter vc;
    vc.table = spec.table;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) vc.coefficients[t.row_names()[i]] = coeffs[i];

    const SharpReport report = analyze(vc);
    if (!report.sharp) return;
    if (spec.require_normalized && !report.normalized) return;
    if (spec.require_faithful && !report.faithful) return;
    if (spec.require_irrational_in_L && !report.has_irrational) return;
    out.push_back(SearchHit{std::move(vc), report});
}

// Enumerate the sub-box where the first coefficient runs over
// [ranges[0].lo + chunk_lo, ranges[0].lo + chunk_hi), in lexicographic order.
void run_chunk(const SearchSpec& spec, const std::vector<RowRange>& ranges,
               std::int64_t first_lo, std::int64_t first_hi, std::vector<SearchHit>& out) {
    const std::size_t n = ranges.size();
    std::vector<std::int64_t> coeffs(n);
    for (std::int64_t first = first_lo; first < first_hi; ++first) {
        coeffs[0] = first;
        for (std::size_t i = 1; i < n; ++i) coeffs[i] = ranges[i].lo;
        for (;;) {
            if (std::any_of(coeffs.begin(), coeffs.end(),
                            [](std::int64_t c) { return c != 0; }))
                consider(spec, coeffs, out);
            // odometer step on positions 1..n-1 (position 0 is the chunk's)
            std::size_t i = n;
            while (i-- > 1) {
                if (coeffs[i] < ranges[i].hi) {
                    ++coeffs[i];
                    break;
                }
                coeffs[i] = ranges[i].lo;
            }
            if (i == 0) break;
        }
    }
}

} // namespace

SearchResult enumerate_sharp(const SearchSpec& spec) {
    const std::vector<RowRange> ranges = resolve_bounds(spec);
    SearchResult result;
    result.partial_table = !spec.table->complete();

    const std::int64_t first_span = ranges[0].hi - ranges[0].lo + 1;
    const unsigned workers =
        std::max(1u, std::min<unsigned>(spec.workers, static_cast<unsigned>(first_span)));

    std::vector<std::vector<SearchHit>> chunks(workers);
    if (workers == 1) {
        run_chunk(spec, ranges, ranges[0].lo, ranges[0].hi + 1, chunks[0]);
    } else {
        // contiguous slices of the leading coefficient keep the concatenation
        // in global lexicographic order
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::int64_t lo = ranges[0].lo + first_span * w / workers;
            const std::int64_t hi = ranges[0].lo + first_span * (w + 1) / workers;
            threads.emplace_back([&, lo, hi, w] { run_chunk(spec, ranges, lo, hi, chunks[w]); });
        }
        for (std::thread& th : threads) th.join();
    }

    for (std::vector<SearchHit>& chunk : chunks)
        for (SearchHit& hit : chunk) result.hits.push_back(std::move(hit));
    if (spec.max_results && result.hits.size() > *spec.max_results) {
        result.hits.resize(*spec.max_results);
        result.truncated = true;
    }
    return result;
}

namespace {

std::string l_key_of(const std::vector<Cyclotomic>& L) {
    std::ostringstream os;
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (i) os << ", ";
        os << to_expression_string(L[i]);
    }
    return os.str();
}

bool l_sequence_less(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (display_less(a[i], b[i])) return true;
        if (display_less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
}

} // namespace

std::vector<CounterexampleFamily> find_counterexamples(const SearchSpec& spec) {
    const SearchResult found = enumerate_sharp(spec);

    std::map<std::string, CounterexampleFamily> groups;
    for (const SearchHit& hit : found.hits) {
        const std::string key = l_key_of(hit.report.L);
        CounterexampleFamily& fam = groups[key];
        if (fam.members.empty()) {
            fam.L = hit.report.L;
            fam.l_key = key;
        }
        fam.members.push_back(hit);
    }

    std::vector<CounterexampleFamily> families;
    for (auto& [key, fam] : groups) {
        std::vector<Rational> norms;
        for (const SearchHit& hit : fam.members) norms.push_back(hit.report.norm);
        std::sort(norms.begin(), norms.end());
        norms.erase(std::unique(norms.begin(), norms.end()), norms.end());
        if (norms.size() < 2) continue;
        fam.distinct_norms = std::move(norms);
        families.push_back(std::move(fam));
    }
    std::sort(families.begin(), families.end(),
              [](const CounterexampleFamily& a, const CounterexampleFamily& b) {
                  return l_sequence_less(a.L, b.L);
              });
    return families;
}

bool ExamplesReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ExampleCheck& c) { return c.pass; });
}

} // namespace sharpchar
