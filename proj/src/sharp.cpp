#include "sharpchar/sharp.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "sharpchar/errors.hpp"

namespace sharpchar {

void check_virtual_character(const VirtualCharacter& vc) {
    if (!vc.table) throw precondition_error("virtual character: no table");
    bool any = false;
    for (const auto& [name, coeff] : vc.coefficients) {
        if (!vc.table->has_row(name))
            throw precondition_error("virtual character: unknown row '" + name + "'");
        if (coeff != 0) any = true;
    }
    if (!any) throw precondition_error("virtual character: all coefficients are zero");
}

VirtualCharacter parse_combo(std::shared_ptr<const CharacterTable> table,
                             std::string_view text) {
    if (!table) throw precondition_error("parse_combo: no table");
    VirtualCharacter vc;
    vc.table = std::move(table);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw parse_error("empty combination", pos);
    bool first = true;
    while (pos < text.size()) {
        std::int64_t sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw parse_error("expected '+' or '-'", pos);
        }
        std::int64_t magnitude = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const std::size_t at = pos;
            std::int64_t v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                if (v > 1000000000) throw parse_error("coefficient too large", at);
                ++pos;
            }
            magnitude = v;
            skip_ws();
            if (pos >= text.size() || text[pos] != '*')
                throw parse_error("expected '*' after coefficient", pos);
            ++pos;
            skip_ws();
        }
        const std::size_t name_at = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == name_at) throw parse_error("expected a row name", pos);
        std::string name(text.substr(name_at, pos - name_at));
        if (!vc.table->has_row(name))
            throw parse_error("unknown row '" + name + "'", name_at);
        vc.coefficients[name] += sign * magnitude;
        skip_ws();
        first = false;
    }
    check_virtual_character(vc);
    return vc;
}

std::string combo_string(const VirtualCharacter& vc) {
    check_virtual_character(vc);
    std::ostringstream os;
    bool first = true;
    for (const std::string& name : vc.table->row_names()) {
        auto it = vc.coefficients.find(name);
        if (it == vc.coefficients.end() || it->second == 0) continue;
        const std::int64_t c = it->second;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? '-' : '+');
        }
        const std::int64_t mag = c < 0 ? -c : c;
        if (mag != 1) os << mag << '*';
        os << name;
    }
    return os.str();
}

std::vector<Cyclotomic> class_values(const VirtualCharacter& vc) {
    check_virtual_character(vc);
    const CharacterTable& t = *vc.table;
    std::vector<Rational> weights;
    std::vector<std::span<const Cyclotomic>> rows;
    weights.reserve(vc.coefficients.size());
    for (const auto& [name, coeff] : vc.coefficients) {
        if (coeff == 0) continue;
        weights.emplace_back(coeff);
        rows.push_back(t.row(name));
    }
    std::vector<Cyclotomic> out;
    out.reserve(t.num_classes());
    std::vector<Cyclotomic> column(weights.size());
    for (std::size_t g = 0; g < t.num_classes(); ++g) {
        for (std::size_t i = 0; i < rows.size(); ++i) column[i] = rows[i][g];
        out.push_back(Cyclotomic::weighted_sum(weights, column));
    }
    return out;
}

std::int64_t degree(const VirtualCharacter& vc) {
    check_virtual_character(vc);
    Rational d(0);
    for (const auto& [name, coeff] : vc.coefficients) {
        if (coeff == 0) continue;
        const Cyclotomic& v = vc.table->row(name)[vc.table->identity_index()];
        if (!v.is_rational())
            throw precondition_error("degree: row '" + name + "' has an irrational identity value");
        d += coeff * v.as_rational();
    }
    if (!is_integral(d)) throw precondition_error("degree: not an integer");
    return numerator(d).convert_to<std::int64_t>();
}

Cyclotomic value_at(const VirtualCharacter& vc, std::string_view class_label) {
    check_virtual_character(vc);
    const auto idx = vc.table->class_index(class_label);
    if (!idx)
        throw precondition_error("value_at: unknown class '" + std::string(class_label) + "'");
    std::vector<Rational> weights;
    std::vector<Cyclotomic> column;
    for (const auto& [name, coeff] : vc.coefficients) {
        if (coeff == 0) continue;
        weights.emplace_back(coeff);
        column.push_back(vc.table->row(name)[*idx]);
    }
    return Cyclotomic::weighted_sum(weights, column);
}

namespace {

void require_same_table(const VirtualCharacter& a, const VirtualCharacter& b) {
    if (a.table.get() == b.table.get()) return;
    if (a.table && b.table && *a.table == *b.table) return;
    throw precondition_error("inner_product: characters live on different tables");
}

Rational inner_product_values(const CharacterTable& t, std::span<const Cyclotomic> va,
                              std::span<const Cyclotomic> vb) {
    const Cyclotomic total = Cyclotomic::weighted_dot(t.class_weights(), va, vb);
    if (!total.is_rational())
        throw precondition_error("inner_product: result is irrational");
    return total.as_rational() / t.order();
}

std::vector<Cyclotomic> distinct_sorted(std::vector<Cyclotomic> values) {
    std::sort(values.begin(), values.end(), display_less);
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

} // namespace

Rational inner_product(const VirtualCharacter& a, const VirtualCharacter& b) {
    require_same_table(a, b);
    return inner_product_values(*a.table, class_values(a), class_values(b));
}

std::vector<Cyclotomic> value_set_L(const VirtualCharacter& vc) {
    std::vector<Cyclotomic> vals = class_values(vc);
    vals.erase(vals.begin() + static_cast<std::ptrdiff_t>(vc.table->identity_index()));
    return distinct_sorted(std::move(vals));
}

Cyclotomic sh_product(const VirtualCharacter& vc) {
    const Cyclotomic deg(degree(vc));
    Cyclotomic sh(1);
    for (const Cyclotomic& l : value_set_L(vc)) sh *= deg - l;
    return sh;
}

bool is_sharp(const VirtualCharacter& vc) {
    return sh_product(vc) == Cyclotomic(vc.table->order());
}

bool blichfeldt_check(const VirtualCharacter& vc) {
    const Cyclotomic sh = sh_product(vc);
    if (!sh.is_integer()) return false;
    return sh.as_integer() % vc.table->order() == 0;
}

SharpReport analyze(const VirtualCharacter& vc) {
    check_virtual_character(vc);
    const CharacterTable& t = *vc.table;
    const std::vector<Cyclotomic> vals = class_values(vc);
    const std::size_t id = t.identity_index();

    SharpReport r;
    const Cyclotomic& deg_value = vals[id];
    if (!deg_value.is_integer())
        throw precondition_error("analyze: degree is not a rational integer");
    r.degree = deg_value.as_integer().convert_to<std::int64_t>();

    std::vector<Cyclotomic> others;
    others.reserve(vals.size() - 1);
    for (std::size_t g = 0; g < vals.size(); ++g)
        if (g != id) others.push_back(vals[g]);
    r.L = distinct_sorted(std::move(others));

    r.sh_value = Cyclotomic(1);
    for (const Cyclotomic& l : r.L) r.sh_value *= deg_value - l;
    r.sharp = r.sh_value == Cyclotomic(t.order());

    const std::vector<Cyclotomic> ones(vals.size(), Cyclotomic(1));
    r.normalized = Cyclotomic::weighted_dot(t.class_weights(), vals, ones).is_zero();

    r.character = true;
    for (const auto& [name, coeff] : vc.coefficients)
        if (coeff < 0) r.character = false;

    r.faithful = std::none_of(r.L.begin(), r.L.end(),
                              [&](const Cyclotomic& l) { return l == deg_value; });

    r.norm = inner_product_values(t, vals, vals);

    r.integer_values = integer_part(r.L);
    r.has_irrational = contains_irrational(r.L);
    r.real_valued = l_is_real(r.L);
    return r;
}

std::vector<BigInt> integer_part(std::span<const Cyclotomic> L) {
    std::vector<BigInt> out;
    for (const Cyclotomic& l : L)
        if (l.is_integer()) out.push_back(l.as_integer());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool contains_irrational(std::span<const Cyclotomic> L) {
    return std::any_of(L.begin(), L.end(),
                       [](const Cyclotomic& l) { return !l.is_rational(); });
}

bool l_is_real(std::span<const Cyclotomic> L) {
    return std::all_of(L.begin(), L.end(), [](const Cyclotomic& l) { return l.is_real(); });
}

std::vector<Cyclotomic> l_type(int family, std::int64_t m) {
    auto cosine = [&](std::int64_t r) {
        return root_of_unity(m, r) + root_of_unity(m, -r);
    };
    std::vector<Cyclotomic> out;
    switch (family) {
    case 1:
        if (m < 3) throw precondition_error("l_type(1): requires m >= 3");
        for (std::int64_t r = 1; r < m; ++r) out.push_back(root_of_unity(m, r));
        break;
    case 2:
        if (m < 5 || m % 2 == 0) throw precondition_error("l_type(2): requires odd m >= 5");
        for (std::int64_t r = 1; r <= (m - 1) / 2; ++r) out.push_back(cosine(r));
        break;
    case 3:
        if (m < 5 || m % 2 == 0) throw precondition_error("l_type(3): requires odd m >= 5");
        out.push_back(Cyclotomic(0));
        for (std::int64_t r = 1; r <= (m - 1) / 2; ++r) out.push_back(cosine(r));
        break;
    case 4:
        if (m < 8 || m % 2 != 0) throw precondition_error("l_type(4): requires even m >= 8");
        out.push_back(Cyclotomic(-2));
        out.push_back(Cyclotomic(0));
        for (std::int64_t r = 1; r <= m / 2 - 1; ++r) out.push_back(cosine(r));
        break;
    case 5:
        if (m < 8 || m % 2 != 0) throw precondition_error("l_type(5): requires even m >= 8");
        out.push_back(Cyclotomic(-1));
        for (std::int64_t r = 1; r <= m / 2 - 1; ++r) out.push_back(Cyclotomic(1) + cosine(r));
        break;
    case 6: {
        if (m != 0) throw precondition_error("l_type(6): takes no parameter");
        const Cyclotomic sqrt2 = root_of_unity(8, 1) + root_of_unity(8, -1);
        out = {Cyclotomic(-2), Cyclotomic(-1), Cyclotomic(0), Cyclotomic(1), sqrt2, -sqrt2};
        break;
    }
    case 7: {
        if (m != 0) throw precondition_error("l_type(7): takes no parameter");
        const Cyclotomic sqrt5 = Cyclotomic(1) + Cyclotomic(2) * (root_of_unity(5, 1) + root_of_unity(5, -1));
        const Rational half(1, 2);
        out = {Cyclotomic(-2), Cyclotomic(-1), Cyclotomic(0), Cyclotomic(1),
               half * (Cyclotomic(1) + sqrt5), half * (Cyclotomic(1) - sqrt5),
               half * (Cyclotomic(-1) + sqrt5), half * (Cyclotomic(-1) - sqrt5)};
        break;
    }
    case 8: {
        if (m != 0) throw precondition_error("l_type(8): takes no parameter");
        const Cyclotomic sqrt5 = Cyclotomic(1) + Cyclotomic(2) * (root_of_unity(5, 1) + root_of_unity(5, -1));
        const Rational half(1, 2);
        out = {Cyclotomic(-1), Cyclotomic(0), half * (Cyclotomic(1) + sqrt5),
               half * (Cyclotomic(1) - sqrt5)};
        break;
    }
    default:
        throw precondition_error("l_type: family index must be 1..8");
    }
    return distinct_sorted(std::move(out));
}

int predict_norm(std::span<const Cyclotomic> L) {
    if (!contains_irrational(L))
        throw precondition_error("predict_norm: L must contain an irrational value");
    if (L.size() < 2) throw precondition_error("predict_norm: requires |L| >= 2");
    if (!l_is_real(L)) return 1;
    static const std::vector<std::vector<BigInt>> norm_two_sets = {
        {},
        {BigInt(-1)},
        {BigInt(-1), BigInt(1)},
        {BigInt(-1), BigInt(0), BigInt(2)},
        {BigInt(-1), BigInt(0), BigInt(1), BigInt(2)},
    };
    const std::vector<BigInt> ints = integer_part(L);
    for (const auto& s : norm_two_sets)
        if (ints == s) return 2;
    return 1;
}

const char* family_name(SharpFamily family) {
    switch (family) {
    case SharpFamily::cyclic_linear: return "cyclic_linear";
    case SharpFamily::cyclic_conjugate_sum: return "cyclic_conjugate_sum";
    case SharpFamily::dihedral_odd: return "dihedral_odd";
    case SharpFamily::psi_even: return "psi_even";
    case SharpFamily::psi_plus_epsilon: return "psi_plus_epsilon";
    }
    throw precondition_error("family_name: unknown family");
}

std::optional<SharpFamily> family_from_name(std::string_view name) {
    for (SharpFamily f : {SharpFamily::cyclic_linear, SharpFamily::cyclic_conjugate_sum,
                          SharpFamily::dihedral_odd, SharpFamily::psi_even,
                          SharpFamily::psi_plus_epsilon})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

FamilyPair build_family_pair(SharpFamily family, std::int64_t m, std::optional<std::int64_t> j) {
    auto named = [&](const std::string& condition) -> precondition_error {
        return precondition_error(std::string(family_name(family)) + ": " + condition);
    };

    switch (family) {
    case SharpFamily::cyclic_linear: {
        if (m < 3) throw named("requires m >= 3");
        const std::int64_t jj = j.value_or(1);
        if (jj < 1 || jj >= m) throw named("requires 1 <= j <= m-1");
        if (std::gcd(jj, m) != 1) throw named("requires gcd(j, m) = 1 (faithful character)");
        FamilyPair out{cyclic_table(m), {}};
        out.character.table = out.table;
        out.character.coefficients["lambda" + std::to_string(jj)] = 1;
        return out;
    }
    case SharpFamily::cyclic_conjugate_sum: {
        if (m < 5 || m % 2 == 0) throw named("requires odd m >= 5");
        const std::int64_t jj = j.value_or(1);
        if (jj < 1 || jj >= m) throw named("requires 1 <= j <= m-1");
        if (std::gcd(jj, m) != 1) throw named("requires gcd(j, m) = 1 (faithful character)");
        FamilyPair out{cyclic_table(m), {}};
        out.character.table = out.table;
        out.character.coefficients["lambda" + std::to_string(jj)] += 1;
        out.character.coefficients["lambda" + std::to_string(m - jj)] += 1;
        return out;
    }
    case SharpFamily::dihedral_odd: {
        if (m < 5 || m % 2 == 0) throw named("requires odd m >= 5");
        const std::int64_t jj = j.value_or(1);
        if (jj < 1 || jj > (m - 1) / 2) throw named("requires 1 <= j <= (m-1)/2");
        if (std::gcd(jj, m) != 1) throw named("requires gcd(j, m) = 1 (faithful character)");
        FamilyPair out{dihedral_table(m), {}};
        out.character.table = out.table;
        out.character.coefficients["psi" + std::to_string(jj)] = 1;
        return out;
    }
    case SharpFamily::psi_even: {
        if (m < 8 || m % 2 != 0) throw named("requires even m >= 8");
        if (m % 4 != 0) throw named("requires m divisible by 4 (else Sh = 4m, not 2m)");
        const std::int64_t jj = j.value_or(1);
        if (jj < 1 || jj > m / 2 - 1) throw named("requires 1 <= j <= m/2-1");
        if (std::gcd(jj, m) != 1) throw named("requires odd j with gcd(j, m) = 1 (faithful character)");
        FamilyPair out{dihedral_table(m), {}};
        out.character.table = out.table;
        out.character.coefficients["psi" + std::to_string(jj)] = 1;
        return out;
    }
    case SharpFamily::psi_plus_epsilon: {
        if (m < 8 || m % 2 != 0) throw named("requires even m >= 8");
        const std::int64_t jj = j.value_or(1);
        if (jj < 1 || jj > m / 2 - 1) throw named("requires 1 <= j <= m/2-1");
        if (std::gcd(jj, m) != 1) throw named("requires odd j with gcd(j, m) = 1 (faithful character)");
        FamilyPair out{dihedral_table(m), {}};
        out.character.table = out.table;
        out.character.coefficients["psi" + std::to_string(jj)] = 1;
        out.character.coefficients["chi2"] = 1;
        return out;
    }
    }
    throw precondition_error("build_family_pair: unknown family");
}

} // namespace sharpchar
