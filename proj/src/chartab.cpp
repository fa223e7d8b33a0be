#include "sharpchar/chartab.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "sharpchar/errors.hpp"

namespace sharpchar {

CharacterTable::CharacterTable(std::string name, std::int64_t order,
                               std::vector<ClassData> classes, std::size_t identity_index,
                               bool complete)
    : name_(std::move(name)),
      order_(order),
      classes_(std::move(classes)),
      identity_index_(identity_index),
      complete_(complete) {
    if (order_ < 1) throw precondition_error("character table: order must be positive");
    if (classes_.empty()) throw precondition_error("character table: no classes");
    if (identity_index_ >= classes_.size())
        throw precondition_error("character table: identity index out of range");
    weights_.reserve(classes_.size());
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        weights_.emplace_back(classes_[i].size);
        class_index_.emplace(classes_[i].label, i); // first wins on duplicates
    }
}

void CharacterTable::add_row(std::string name, std::vector<Cyclotomic> values) {
    if (values.size() != classes_.size())
        throw precondition_error("add_row: row '" + name + "' has " +
                                 std::to_string(values.size()) + " values, expected " +
                                 std::to_string(classes_.size()));
    if (row_index_.count(name))
        throw precondition_error("add_row: duplicate row name '" + name + "'");
    row_index_.emplace(name, row_names_.size());
    row_names_.push_back(std::move(name));
    rows_.push_back(std::move(values));
}

bool CharacterTable::has_row(std::string_view name) const {
    return row_index_.find(name) != row_index_.end();
}

const std::vector<Cyclotomic>& CharacterTable::row(std::string_view name) const {
    auto it = row_index_.find(name);
    if (it == row_index_.end())
        throw precondition_error("unknown row '" + std::string(name) + "' in table '" + name_ + "'");
    return rows_[it->second];
}

std::optional<std::size_t> CharacterTable::class_index(std::string_view label) const {
    auto it = class_index_.find(label);
    if (it == class_index_.end()) return std::nullopt;
    return it->second;
}

bool operator==(const CharacterTable& a, const CharacterTable& b) {
    return a.name_ == b.name_ && a.order_ == b.order_ && a.classes_ == b.classes_ &&
           a.identity_index_ == b.identity_index_ && a.complete_ == b.complete_ &&
           a.row_names_ == b.row_names_ && a.rows_ == b.rows_;
}

ValidationReport validate(const CharacterTable& t) {
    ValidationReport report;
    auto issue = [&](ValidationIssue::Kind kind, std::string where, std::string message) {
        report.issues.push_back({kind, std::move(where), std::move(message)});
    };

    std::set<std::string_view> seen;
    for (const ClassData& c : t.classes()) {
        if (!seen.insert(c.label).second)
            issue(ValidationIssue::Kind::structure, "class " + c.label,
                  "duplicate class label");
        if (c.size < 1)
            issue(ValidationIssue::Kind::structure, "class " + c.label,
                  "class size must be positive");
    }

    const ClassData& id = t.classes()[t.identity_index()];
    if (id.size != 1)
        issue(ValidationIssue::Kind::structure, "class " + id.label,
              "identity class must have size 1");

    std::int64_t size_sum = 0;
    for (const ClassData& c : t.classes()) size_sum += c.size;
    if (size_sum != t.order())
        issue(ValidationIssue::Kind::size_sum, "classes",
              "class sizes sum to " + std::to_string(size_sum) + ", expected " +
                  std::to_string(t.order()));

    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        const Cyclotomic& deg = t.row_at(i)[t.identity_index()];
        if (!deg.is_integer() || deg.as_integer() <= 0)
            issue(ValidationIssue::Kind::degree, "row " + t.row_names()[i],
                  "identity value " + to_expression_string(deg) +
                      " is not a positive integer");
    }

    // <row_i, row_j> = delta_ij, computed exactly
    const auto& w = t.class_weights();
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        for (std::size_t j = i; j < t.num_rows(); ++j) {
            const Cyclotomic ip = Cyclotomic::weighted_dot(w, t.row_at(i), t.row_at(j));
            const Cyclotomic expect = i == j ? Cyclotomic(t.order()) : Cyclotomic(0);
            if (ip != expect)
                issue(ValidationIssue::Kind::row_orthogonality,
                      "rows " + t.row_names()[i] + ", " + t.row_names()[j],
                      "inner product is " + to_expression_string(ip) + "/" +
                          std::to_string(t.order()) + ", expected " +
                          (i == j ? "1" : "0"));
        }
    }

    if (t.complete()) {
        Rational square_sum(0);
        bool degrees_ok = true;
        for (std::size_t i = 0; i < t.num_rows(); ++i) {
            const Cyclotomic& deg = t.row_at(i)[t.identity_index()];
            if (!deg.is_rational()) {
                degrees_ok = false;
                continue;
            }
            square_sum += deg.as_rational() * deg.as_rational();
        }
        if (!degrees_ok || square_sum != t.order())
            issue(ValidationIssue::Kind::degree_squares, "table",
                  "squared degrees sum to " + format_rational(square_sum) +
                      ", expected " + std::to_string(t.order()));

        // column orthogonality: sum_chi chi(g) conj(chi(h)) = delta_gh |G|/|class g|
        const std::vector<Rational> ones(t.num_rows(), Rational(1));
        std::vector<Cyclotomic> col_g(t.num_rows()), col_h(t.num_rows());
        for (std::size_t g = 0; g < t.num_classes(); ++g) {
            for (std::size_t h = g; h < t.num_classes(); ++h) {
                for (std::size_t i = 0; i < t.num_rows(); ++i) {
                    col_g[i] = t.row_at(i)[g];
                    col_h[i] = t.row_at(i)[h];
                }
                const Cyclotomic ip = Cyclotomic::weighted_dot(ones, col_g, col_h);
                const Cyclotomic expect =
                    g == h ? Cyclotomic(Rational(t.order(), t.classes()[g].size))
                           : Cyclotomic(0);
                if (ip != expect)
                    issue(ValidationIssue::Kind::column_orthogonality,
                          "classes " + t.classes()[g].label + ", " + t.classes()[h].label,
                          "column inner product is " + to_expression_string(ip) +
                              ", expected " + to_expression_string(expect));
            }
        }
    }
    return report;
}

namespace {

std::shared_ptr<CharacterTable> start_table(std::string name, std::int64_t order,
                                            std::vector<ClassData> classes) {
    return std::make_shared<CharacterTable>(std::move(name), order, std::move(classes),
                                            0, true);
}

} // namespace

std::shared_ptr<const CharacterTable> cyclic_table(std::int64_t m) {
    if (m < 1) throw precondition_error("cyclic_table: order must be positive");
    std::vector<ClassData> classes;
    classes.push_back({"1", 1, 1});
    for (std::int64_t r = 1; r < m; ++r)
        classes.push_back({"a" + std::to_string(r), 1, m / std::gcd(m, r)});
    auto t = start_table("c" + std::to_string(m), m, std::move(classes));
    for (std::int64_t j = 0; j < m; ++j) {
        std::vector<Cyclotomic> row;
        row.reserve(static_cast<std::size_t>(m));
        for (std::int64_t r = 0; r < m; ++r) row.push_back(root_of_unity(m, j * r));
        t->add_row("lambda" + std::to_string(j), std::move(row));
    }
    return t;
}

std::shared_ptr<const CharacterTable> dihedral_table(std::int64_t m) {
    if (m < 3) throw precondition_error("dihedral_table: requires m >= 3");
    const std::int64_t order = 2 * m;
    std::vector<ClassData> classes;
    std::vector<Cyclotomic> one_row;

    if (m % 2 == 1) {
        // classes: 1, a^r (r = 1..(m-1)/2, size 2), reflections (size m)
        classes.push_back({"1", 1, 1});
        for (std::int64_t r = 1; r <= (m - 1) / 2; ++r)
            classes.push_back({"a" + std::to_string(r), 2, m / std::gcd(m, r)});
        classes.push_back({"b", m, 2});
        auto t = start_table("d" + std::to_string(order), order, std::move(classes));

        const std::size_t width = t->num_classes();
        std::vector<Cyclotomic> row(width, Cyclotomic(1));
        t->add_row("chi1", row);
        row.assign(width, Cyclotomic(1));
        row.back() = Cyclotomic(-1);
        t->add_row("chi2", std::move(row));
        for (std::int64_t j = 1; j <= (m - 1) / 2; ++j) {
            std::vector<Cyclotomic> psi;
            psi.push_back(Cyclotomic(2));
            for (std::int64_t r = 1; r <= (m - 1) / 2; ++r)
                psi.push_back(root_of_unity(m, j * r) + root_of_unity(m, -j * r));
            psi.push_back(Cyclotomic(0));
            t->add_row("psi" + std::to_string(j), std::move(psi));
        }
        return t;
    }

    // even m = 2t: classes 1, a^t, a^r (r = 1..t-1, size 2), b, ab (size m/2 each)
    const std::int64_t half = m / 2;
    classes.push_back({"1", 1, 1});
    for (std::int64_t r = 1; r < half; ++r)
        classes.push_back({"a" + std::to_string(r), 2, m / std::gcd(m, r)});
    classes.push_back({"a" + std::to_string(half), 1, 2});
    classes.push_back({"b", half, 2});
    classes.push_back({"ab", half, 2});
    auto t = start_table("d" + std::to_string(order), order, std::move(classes));

    auto linear = [&](std::int64_t on_a, std::int64_t on_b, std::int64_t on_ab) {
        std::vector<Cyclotomic> row;
        row.push_back(Cyclotomic(1));
        for (std::int64_t r = 1; r <= half; ++r)
            row.push_back(Cyclotomic(on_a == 1 ? 1 : (r % 2 == 0 ? 1 : -1)));
        row.push_back(Cyclotomic(on_b));
        row.push_back(Cyclotomic(on_ab));
        return row;
    };
    t->add_row("chi1", linear(1, 1, 1));
    t->add_row("chi2", linear(1, -1, -1));
    t->add_row("chi3", linear(-1, 1, -1));
    t->add_row("chi4", linear(-1, -1, 1));
    for (std::int64_t j = 1; j < half; ++j) {
        std::vector<Cyclotomic> psi;
        psi.push_back(Cyclotomic(2));
        for (std::int64_t r = 1; r <= half; ++r)
            psi.push_back(root_of_unity(m, j * r) + root_of_unity(m, -j * r));
        psi.push_back(Cyclotomic(0));
        psi.push_back(Cyclotomic(0));
        t->add_row("psi" + std::to_string(j), std::move(psi));
    }
    return t;
}

std::shared_ptr<const CharacterTable> quaternion_table(std::int64_t t_param) {
    if (t_param < 2) throw precondition_error("quaternion_table: requires t >= 2");
    const std::int64_t t = t_param;
    const std::int64_t m = 2 * t; // order of the cyclic subgroup <a>
    const std::int64_t order = 4 * t;

    std::vector<ClassData> classes;
    classes.push_back({"1", 1, 1});
    for (std::int64_t r = 1; r < t; ++r)
        classes.push_back({"a" + std::to_string(r), 2, m / std::gcd(m, r)});
    classes.push_back({"a" + std::to_string(t), 1, 2});
    classes.push_back({"b", t, 4});
    classes.push_back({"ab", t, 4});
    auto tab = start_table("q" + std::to_string(order), order, std::move(classes));

    const Cyclotomic i_unit = root_of_unity(4, 1);
    auto linear = [&](bool sign_on_a, const Cyclotomic& on_b, const Cyclotomic& on_ab) {
        std::vector<Cyclotomic> row;
        row.push_back(Cyclotomic(1));
        for (std::int64_t r = 1; r <= t; ++r)
            row.push_back(Cyclotomic(!sign_on_a ? 1 : (r % 2 == 0 ? 1 : -1)));
        row.push_back(on_b);
        row.push_back(on_ab);
        return row;
    };
    tab->add_row("chi1", linear(false, Cyclotomic(1), Cyclotomic(1)));
    tab->add_row("chi2", linear(false, Cyclotomic(-1), Cyclotomic(-1)));
    if (t % 2 == 1) {
        tab->add_row("chi3", linear(true, i_unit, -i_unit));
        tab->add_row("chi4", linear(true, -i_unit, i_unit));
    } else {
        tab->add_row("chi3", linear(true, Cyclotomic(1), Cyclotomic(-1)));
        tab->add_row("chi4", linear(true, Cyclotomic(-1), Cyclotomic(1)));
    }
    for (std::int64_t j = 1; j < t; ++j) {
        std::vector<Cyclotomic> psi;
        psi.push_back(Cyclotomic(2));
        for (std::int64_t r = 1; r <= t; ++r)
            psi.push_back(root_of_unity(m, j * r) + root_of_unity(m, -j * r));
        psi.push_back(Cyclotomic(0));
        psi.push_back(Cyclotomic(0));
        tab->add_row("psi" + std::to_string(j), std::move(psi));
    }
    return tab;
}

} // namespace sharpchar
