#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sharpchar/cyclotomic.hpp"

namespace sharpchar {

struct ClassData {
    std::string label;
    std::int64_t size = 0;
    std::optional<std::int64_t> element_order; // informational only

    friend bool operator==(const ClassData&, const ClassData&) = default;
};

// A (possibly partial) complex character table: conjugacy-class data plus any
// number of rows.  Structural invariants (distinct labels, matching row
// lengths, known identity) are enforced at construction; arithmetic
// invariants (orthogonality and friends) are checked by validate() so that
// defective tables can still be loaded and inspected.
class CharacterTable {
public:
    CharacterTable(std::string name, std::int64_t order, std::vector<ClassData> classes,
                   std::size_t identity_index, bool complete);

    void add_row(std::string name, std::vector<Cyclotomic> values);

    const std::string& name() const noexcept { return name_; }
    std::int64_t order() const noexcept { return order_; }
    const std::vector<ClassData>& classes() const noexcept { return classes_; }
    std::size_t identity_index() const noexcept { return identity_index_; }
    bool complete() const noexcept { return complete_; }

    std::size_t num_classes() const noexcept { return classes_.size(); }
    std::size_t num_rows() const noexcept { return row_names_.size(); }
    const std::vector<std::string>& row_names() const noexcept { return row_names_; }

    bool has_row(std::string_view name) const;
    const std::vector<Cyclotomic>& row(std::string_view name) const; // throws if unknown
    const std::vector<Cyclotomic>& row_at(std::size_t i) const { return rows_[i]; }
    std::optional<std::size_t> class_index(std::string_view label) const;

    // class sizes as rationals, in class order (cached for inner products)
    const std::vector<Rational>& class_weights() const noexcept { return weights_; }

    friend bool operator==(const CharacterTable& a, const CharacterTable& b);

private:
    std::string name_;
    std::int64_t order_;
    std::vector<ClassData> classes_;
    std::size_t identity_index_;
    bool complete_;
    std::vector<Rational> weights_;
    std::vector<std::string> row_names_;
    std::vector<std::vector<Cyclotomic>> rows_;
    std::map<std::string, std::size_t, std::less<>> row_index_;
    std::map<std::string, std::size_t, std::less<>> class_index_;
};

struct ValidationIssue {
    enum class Kind {
        structure,          // malformed bookkeeping (empty table, bad sizes, ...)
        size_sum,           // class sizes do not add up to the group order
        degree,             // a row's identity value is not a positive integer
        row_orthogonality,  // <row_i, row_j> != delta_ij
        degree_squares,     // complete table: sum of squared degrees != order
        column_orthogonality
    };
    Kind kind;
    std::string where;   // offending rows/classes, e.g. "rows chi2, chi3"
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const noexcept { return issues.empty(); }
};

ValidationReport validate(const CharacterTable& table);

// Full table of the cyclic group of order m (m >= 1): classes 1, a1..a{m-1},
// rows lambda0..lambda{m-1} with lambda_j(a^r) = zeta_m^{jr}.
std::shared_ptr<const CharacterTable> cyclic_table(std::int64_t m);

// Full table of the dihedral group of order 2m (m >= 3), both parities of m.
std::shared_ptr<const CharacterTable> dihedral_table(std::int64_t m);

// Full table of the generalized quaternion (dicyclic) group of order 4t (t >= 2).
std::shared_ptr<const CharacterTable> quaternion_table(std::int64_t t);

} // namespace sharpchar
