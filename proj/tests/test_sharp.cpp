#include <doctest.h>

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "sharpchar/errors.hpp"
#include "sharpchar/parse.hpp"
#include "sharpchar/sharp.hpp"
#include "sharpchar/table_io.hpp"

using namespace sharpchar;

namespace {

std::shared_ptr<const CharacterTable> fixture(const char* stem) {
    return load_table(std::filesystem::path(SHARPCHAR_FIXTURE_DIR) /
                      (std::string(stem) + ".json"));
}

std::vector<Cyclotomic> values_of(std::initializer_list<const char*> exprs) {
    std::vector<Cyclotomic> out;
    for (const char* e : exprs) out.push_back(parse_value(e));
    std::sort(out.begin(), out.end(), display_less);
    return out;
}

bool message_mentions(const std::exception& e, const char* needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("combination parsing and canonical strings") {
    const auto t = fixture("sg192_1494");

    const VirtualCharacter vc = parse_combo(t, "chi3+chi4-chi1");
    CHECK(combo_string(vc) == "-chi1+chi3+chi4"); // rows back in table order
    CHECK(vc.coefficients.at("chi1") == -1);

    CHECK(combo_string(parse_combo(t, "chi2 + chi2")) == "2*chi2");
    CHECK(combo_string(parse_combo(t, " 3*chi5 - 2 * chi2 ")) == "-2*chi2+3*chi5");
    CHECK(combo_string(parse_combo(t, "chi1+chi2-chi1")) == "chi2");

    CHECK_THROWS_AS(parse_combo(t, ""), parse_error);
    CHECK_THROWS_AS(parse_combo(t, "chi2+"), parse_error);
    CHECK_THROWS_AS(parse_combo(t, "2*"), parse_error);
    CHECK_THROWS_AS(parse_combo(t, "2chi1"), parse_error);
    CHECK_THROWS_AS(parse_combo(t, "chi9"), parse_error);
    CHECK_THROWS_AS(parse_combo(t, "chi2 chi3"), parse_error);
    CHECK_THROWS_AS(parse_combo(t, "1000000001*chi1"), parse_error);
    CHECK_THROWS_AS(parse_combo(t, "chi1-chi1"), precondition_error); // zero combination
    CHECK_THROWS_AS(parse_combo(nullptr, "chi1"), precondition_error);
}

TEST_CASE("virtual character preconditions") {
    const auto t = fixture("d12");
    VirtualCharacter vc{t, {{"chi1", 1}}};
    CHECK_NOTHROW(check_virtual_character(vc));

    vc.coefficients["ghost"] = 1;
    CHECK_THROWS_AS(check_virtual_character(vc), precondition_error);

    VirtualCharacter zero{t, {{"chi1", 0}, {"chi2", 0}}};
    CHECK_THROWS_AS(check_virtual_character(zero), precondition_error);
    CHECK_THROWS_AS(check_virtual_character(VirtualCharacter{}), precondition_error);
}

TEST_CASE("degrees, values and inner products") {
    const auto t = fixture("sg32_6");
    const VirtualCharacter chi = parse_combo(t, "chi1+2*chi2+chi5");

    CHECK(degree(chi) == 7);
    CHECK(value_at(chi, "c6") == Cyclotomic(-1)); // the center absorbs chi5 = -4
    CHECK(value_at(chi, "c3") == Cyclotomic(3));
    CHECK_THROWS_AS(value_at(chi, "c99"), precondition_error);

    const std::vector<Cyclotomic> vals = class_values(chi);
    REQUIRE(vals.size() == 11);
    CHECK(vals[0] == Cyclotomic(7));
    CHECK(vals[5] == Cyclotomic(-1));

    CHECK(inner_product(chi, chi) == Rational(6));
    CHECK(inner_product(chi, parse_combo(t, "chi1")) == Rational(1));

    const auto other = fixture("d12");
    CHECK_THROWS_AS(inner_product(chi, parse_combo(other, "chi1")), precondition_error);
}

TEST_CASE("inner products agree with coefficient dot products on a complete table") {
    // rows of a valid complete table are orthonormal, so <a, b> is just the
    // coefficient dot product; random combinations cross-check the exact
    // cyclotomic arithmetic against plain integers
    const auto t = fixture("d12");
    std::mt19937_64 rng(1206);
    std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        VirtualCharacter a{t, {}}, b{t, {}};
        std::int64_t dot = 0;
        bool a_zero = true, b_zero = true;
        for (const std::string& name : t->row_names()) {
            const std::int64_t ca = coeff(rng), cb = coeff(rng);
            a.coefficients[name] = ca;
            b.coefficients[name] = cb;
            dot += ca * cb;
            a_zero &= ca == 0;
            b_zero &= cb == 0;
        }
        if (a_zero || b_zero) continue;
        CHECK(inner_product(a, b) == Rational(dot));
    }
}

TEST_CASE("value sets and the Sh product") {
    const auto t = fixture("sg32_6");
    const VirtualCharacter chi = parse_combo(t, "chi1+2*chi2+chi5");
    CHECK(value_set_L(chi) == values_of({"-1", "3"}));
    CHECK(sh_product(chi) == Cyclotomic(32)); // (7+1)(7-3)
    CHECK(is_sharp(chi));
    CHECK(blichfeldt_check(chi));

    const VirtualCharacter theta = parse_combo(t, "chi2+chi3+chi4+chi5");
    CHECK(value_set_L(theta) == values_of({"-1", "3"}));
    CHECK(is_sharp(theta));

    // a trivial summand keeps the degree inside L, killing the product
    const VirtualCharacter blunt = parse_combo(t, "chi2");
    CHECK(sh_product(blunt) == Cyclotomic(0));
    CHECK(!is_sharp(blunt));
    CHECK(blichfeldt_check(blunt)); // zero is divisible by anything

    const auto a7 = fixture("a7_chi");
    CHECK(sh_product(parse_combo(a7, "chi")) == Cyclotomic(2520));
}

TEST_CASE("analyze assembles the full report") {
    const auto t = fixture("sg192_1494");

    const SharpReport chi = analyze(parse_combo(t, "chi2+chi5"));
    CHECK(chi.degree == 6);
    CHECK(chi.L == values_of({"-2", "0", "2"}));
    CHECK(chi.sharp);
    CHECK(chi.normalized);
    CHECK(chi.character);
    CHECK(chi.norm == Rational(2));
    CHECK(chi.integer_values == std::vector<BigInt>{BigInt(-2), BigInt(0), BigInt(2)});
    CHECK(!chi.has_irrational);
    CHECK(chi.real_valued);
    CHECK(chi.faithful);

    const SharpReport theta = analyze(parse_combo(t, "chi3+chi4-chi1"));
    CHECK(theta.degree == 6);
    CHECK(theta.L == chi.L);
    CHECK(theta.sharp);
    CHECK(theta.normalized);
    CHECK(!theta.character);
    CHECK(theta.norm == Rational(3));

    const SharpReport wide = analyze(parse_combo(fixture("d16"), "2*chi1+chi3"));
    CHECK(wide.degree == 4);
    CHECK(wide.L == values_of({"0", "2", "2-z(8)+z(8)^3", "2+z(8)-z(8)^3"}));
    CHECK(wide.sharp);
    CHECK(!wide.normalized);
    CHECK(wide.norm == Rational(5));
    CHECK(wide.has_irrational);
    CHECK(wide.real_valued);
    CHECK(wide.integer_values == std::vector<BigInt>{BigInt(0), BigInt(2)});
    CHECK(wide.faithful);
}

TEST_CASE("value-set catalog") {
    CHECK(l_type(1, 4) == values_of({"z(4)", "-1", "-z(4)"}));
    CHECK(l_type(2, 5) == values_of({"z(5)+z(5)^4", "z(5)^2+z(5)^3"}));
    CHECK(l_type(3, 5) == values_of({"0", "z(5)+z(5)^4", "z(5)^2+z(5)^3"}));
    CHECK(l_type(4, 8) ==
          values_of({"-2", "0", "z(8)-z(8)^3", "-z(8)+z(8)^3"}));
    CHECK(l_type(5, 8) ==
          values_of({"-1", "1", "1+z(8)-z(8)^3", "1-z(8)+z(8)^3"}));
    CHECK(l_type(6) == values_of({"-2", "-1", "0", "1", "z(8)-z(8)^3", "-z(8)+z(8)^3"}));

    // the two golden-ratio sets: eight and four values, integer parts fixed
    CHECK(l_type(7).size() == 8);
    CHECK(integer_part(l_type(7)) ==
          std::vector<BigInt>{BigInt(-2), BigInt(-1), BigInt(0), BigInt(1)});
    CHECK(l_type(8).size() == 4);
    CHECK(integer_part(l_type(8)) == std::vector<BigInt>{BigInt(-1), BigInt(0)});
    CHECK(l_type(8) ==
          values_of({"-1", "0", "1/2+1/2*(1+2*z(5)+2*z(5)^4)",
                     "1/2-1/2*(1+2*z(5)+2*z(5)^4)"}));

    // the duplicate 0 appearing for 4 | m collapses
    CHECK(l_type(4, 8).size() == 4);
    CHECK(l_type(4, 12).size() == 6);
    CHECK(l_type(4, 10).size() == 6); // no duplicate when m = 2 mod 4

    CHECK_THROWS_AS(l_type(1, 2), precondition_error);
    CHECK_THROWS_AS(l_type(2, 4), precondition_error);
    CHECK_THROWS_AS(l_type(3, 6), precondition_error);
    CHECK_THROWS_AS(l_type(4, 6), precondition_error);
    CHECK_THROWS_AS(l_type(5, 9), precondition_error);
    CHECK_THROWS_AS(l_type(6, 5), precondition_error);
    CHECK_THROWS_AS(l_type(0), precondition_error);
    CHECK_THROWS_AS(l_type(9), precondition_error);
}

TEST_CASE("integer parts of the parameterized sets") {
    using Ints = std::vector<BigInt>;
    auto ints = [](std::initializer_list<int> xs) {
        Ints out;
        for (int x : xs) out.emplace_back(x);
        return out;
    };

    CHECK(integer_part(l_type(2, 5)) == ints({}));
    CHECK(integer_part(l_type(2, 9)) == ints({-1})); // 2cos(2*pi/3) shows up
    CHECK(integer_part(l_type(3, 7)) == ints({0}));
    CHECK(integer_part(l_type(3, 15)) == ints({-1, 0}));
    CHECK(integer_part(l_type(4, 8)) == ints({-2, 0}));
    CHECK(integer_part(l_type(4, 12)) == ints({-2, -1, 0, 1}));
    CHECK(integer_part(l_type(5, 8)) == ints({-1, 1}));
    CHECK(integer_part(l_type(5, 10)) == ints({-1}));
    CHECK(integer_part(l_type(5, 12)) == ints({-1, 0, 1, 2}));
    CHECK(integer_part(l_type(5, 18)) == ints({-1, 0, 2}));
}

TEST_CASE("norm prediction from the value set") {
    CHECK(predict_norm(l_type(2, 7)) == 2);  // empty integer part
    CHECK(predict_norm(l_type(2, 9)) == 2);  // {-1}
    CHECK(predict_norm(l_type(5, 8)) == 2);  // {-1, 1}
    CHECK(predict_norm(l_type(5, 18)) == 2); // {-1, 0, 2}
    CHECK(predict_norm(l_type(5, 12)) == 2); // {-1, 0, 1, 2}

    CHECK(predict_norm(l_type(1, 5)) == 1); // not real
    CHECK(predict_norm(l_type(3, 9)) == 1); // {-1, 0} predicts multiplicity one
    CHECK(predict_norm(l_type(4, 8)) == 1);
    CHECK(predict_norm(l_type(6)) == 1);
    CHECK(predict_norm(l_type(7)) == 1);
    CHECK(predict_norm(l_type(8)) == 1);

    CHECK_THROWS_AS(predict_norm(values_of({"-1", "3"})), precondition_error);
    CHECK_THROWS_AS(predict_norm(values_of({"z(8)-z(8)^3"})), precondition_error);
}

TEST_CASE("families produce sharp pairs matching the catalog") {
    struct Expect {
        SharpFamily family;
        std::int64_t m;
        std::optional<std::int64_t> j;
        int type;
        std::int64_t type_m;
        std::int64_t deg;
        Rational norm;
    };
    const std::vector<Expect> cases = {
        {SharpFamily::cyclic_linear, 7, 3, 1, 7, 1, Rational(1)},
        {SharpFamily::cyclic_linear, 8, std::nullopt, 1, 8, 1, Rational(1)},
        {SharpFamily::cyclic_conjugate_sum, 5, std::nullopt, 2, 5, 2, Rational(2)},
        {SharpFamily::cyclic_conjugate_sum, 9, 2, 2, 9, 2, Rational(2)},
        {SharpFamily::dihedral_odd, 5, std::nullopt, 3, 5, 2, Rational(1)},
        {SharpFamily::dihedral_odd, 9, 2, 3, 9, 2, Rational(1)},
        {SharpFamily::psi_even, 8, std::nullopt, 4, 8, 2, Rational(1)},
        {SharpFamily::psi_even, 12, 5, 4, 12, 2, Rational(1)},
        {SharpFamily::psi_plus_epsilon, 8, std::nullopt, 5, 8, 3, Rational(2)},
        {SharpFamily::psi_plus_epsilon, 10, 3, 5, 10, 3, Rational(2)},
    };
    for (const Expect& e : cases) {
        CAPTURE(family_name(e.family));
        CAPTURE(e.m);
        const FamilyPair pair = build_family_pair(e.family, e.m, e.j);
        const SharpReport r = analyze(pair.character);
        CHECK(r.sharp);
        CHECK(r.degree == e.deg);
        CHECK(r.L == l_type(e.type, e.type_m));
        CHECK(r.norm == e.norm);
        CHECK(r.normalized);
        CHECK(r.has_irrational);
        CHECK(r.norm == Rational(predict_norm(r.L)));
    }
}

TEST_CASE("family hypotheses are enforced") {
    CHECK_THROWS_AS(build_family_pair(SharpFamily::cyclic_linear, 2), precondition_error);
    CHECK_THROWS_AS(build_family_pair(SharpFamily::cyclic_linear, 6, 2), precondition_error);
    CHECK_THROWS_AS(build_family_pair(SharpFamily::cyclic_linear, 6, 6), precondition_error);
    CHECK_THROWS_AS(build_family_pair(SharpFamily::cyclic_conjugate_sum, 6), precondition_error);
    CHECK_THROWS_AS(build_family_pair(SharpFamily::cyclic_conjugate_sum, 3), precondition_error);
    CHECK_THROWS_AS(build_family_pair(SharpFamily::dihedral_odd, 9, 3), precondition_error);
    CHECK_THROWS_AS(build_family_pair(SharpFamily::dihedral_odd, 9, 5), precondition_error);
    CHECK_THROWS_AS(build_family_pair(SharpFamily::psi_even, 6), precondition_error);
    CHECK_THROWS_AS(build_family_pair(SharpFamily::psi_plus_epsilon, 7), precondition_error);
    CHECK_THROWS_AS(build_family_pair(SharpFamily::psi_plus_epsilon, 8, 2), precondition_error);

    // the parity obstruction gets an explanation, not just a refusal
    try {
        build_family_pair(SharpFamily::psi_even, 10);
        FAIL("expected precondition_error");
    } catch (const precondition_error& e) {
        CHECK(message_mentions(e, "divisible by 4"));
    }
}

TEST_CASE("family names round-trip") {
    for (SharpFamily f : {SharpFamily::cyclic_linear, SharpFamily::cyclic_conjugate_sum,
                          SharpFamily::dihedral_odd, SharpFamily::psi_even,
                          SharpFamily::psi_plus_epsilon})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK(!family_from_name("octahedral").has_value());
}

TEST_CASE("quaternion groups carry the same psi families") {
    const auto q16 = quaternion_table(4);

    VirtualCharacter psi{q16, {{"psi1", 1}}};
    const SharpReport r1 = analyze(psi);
    CHECK(r1.sharp);
    CHECK(r1.L == l_type(4, 8));
    CHECK(r1.norm == Rational(1));

    VirtualCharacter shifted{q16, {{"psi1", 1}, {"chi2", 1}}};
    const SharpReport r2 = analyze(shifted);
    CHECK(r2.sharp);
    CHECK(r2.L == l_type(5, 8));
    CHECK(r2.norm == Rational(2));
    CHECK(r2.norm == Rational(predict_norm(r2.L)));
}

TEST_CASE("Sh is always a multiple of the group order") {
    std::mt19937_64 rng(8128);
    std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
    for (const char* stem : {"sg32_6", "sg192_1494", "sg192_1494_theta", "sg192_955_chi",
                             "a7_chi", "d12", "d16"}) {
        CAPTURE(stem);
        const auto t = fixture(stem);
        for (int trial = 0; trial < 60; ++trial) {
            VirtualCharacter vc{t, {}};
            bool zero = true;
            for (const std::string& name : t->row_names()) {
                const std::int64_t c = coeff(rng);
                vc.coefficients[name] = c;
                zero &= c == 0;
            }
            if (zero) continue;
            CHECK(blichfeldt_check(vc));
        }
    }
}
