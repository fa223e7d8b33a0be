#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sharpchar/chartab.hpp"

namespace sharpchar {

// An integer linear combination of table rows.  Invariants (table set, all
// names present, not the zero combination) are enforced by every consumer
// via check_virtual_character.
struct VirtualCharacter {
    std::shared_ptr<const CharacterTable> table;
    std::map<std::string, std::int64_t> coefficients; // absent rows count as 0
};

void check_virtual_character(const VirtualCharacter& vc);

// "chi1+2*chi2-chi5": signed sum of [integer '*'] row-name terms
VirtualCharacter parse_combo(std::shared_ptr<const CharacterTable> table,
                             std::string_view text);
// canonical inverse of parse_combo: rows in table order, zero rows omitted
std::string combo_string(const VirtualCharacter& vc);

std::int64_t degree(const VirtualCharacter& vc);
Cyclotomic value_at(const VirtualCharacter& vc, std::string_view class_label);
// all class values, in table class order
std::vector<Cyclotomic> class_values(const VirtualCharacter& vc);

// exact (a, b) = (1/|G|) sum over classes of size * a(g) * conj(b(g));
// requires both on the same table, and the result to be rational
Rational inner_product(const VirtualCharacter& a, const VirtualCharacter& b);

// L(chi): distinct values on the non-identity classes, in display order
std::vector<Cyclotomic> value_set_L(const VirtualCharacter& vc);
// Sh(chi) = prod_{l in L} (chi(1) - l)
Cyclotomic sh_product(const VirtualCharacter& vc);
bool is_sharp(const VirtualCharacter& vc);       // Sh(chi) == |G|
bool blichfeldt_check(const VirtualCharacter& vc); // |G| divides Sh(chi)

struct SharpReport {
    std::int64_t degree = 0;
    std::vector<Cyclotomic> L;       // display order
    Cyclotomic sh_value;
    bool sharp = false;
    bool normalized = false;         // (chi, 1) == 0
    bool character = false;          // all coefficients >= 0
    bool faithful = false;           // no non-identity class takes the degree value
    Rational norm;                   // (chi, chi)
    std::vector<BigInt> integer_values; // L intersect Z, ascending
    bool has_irrational = false;     // some value of L outside Q
    bool real_valued = false;        // L subset of R
};

SharpReport analyze(const VirtualCharacter& vc);

// ----- value-set helpers and the norm prediction -----

std::vector<BigInt> integer_part(std::span<const Cyclotomic> L);
bool contains_irrational(std::span<const Cyclotomic> L); // irrational = not rational
bool l_is_real(std::span<const Cyclotomic> L);

// The catalog of value-set shapes attached to the known families of sharp
// pairs, indexed 1..8 (entries 1..5 take the cyclic parameter m and are
// written in terms of w = zeta_m; 6..8 are fixed sets).  Display order.
//   1: { w^r | 1 <= r <= m-1 }                          (m >= 3)
//   2: { w^r + w^-r | 1 <= r <= (m-1)/2 }               (odd m >= 5)
//   3: { 0 } + entry 2's set                            (odd m >= 5)
//   4: { -2, 0 } + { w^r + w^-r | 1 <= r <= m/2-1 }     (even m >= 8)
//   5: { -1 } + { 1 + w^r + w^-r | 1 <= r <= m/2-1 }    (even m >= 8)
//   6: { -2, -1, 0, 1, sqrt2, -sqrt2 }
//   7: { -2, -1, 0, 1, (1+sqrt5)/2, (1-sqrt5)/2, (-1+sqrt5)/2, (-1-sqrt5)/2 }
//   8: { -1, 0, (1+sqrt5)/2, (1-sqrt5)/2 }
std::vector<Cyclotomic> l_type(int family, std::int64_t m = 0);

// Predicted multiplicity norm of a normalized sharp character from its value
// set alone: 2 when L is real and L intersect Z is one of {}, {-1}, {-1,1},
// {-1,0,2}, {-1,0,1,2}; otherwise 1.  Preconditions: L contains an
// irrational value and |L| >= 2.
int predict_norm(std::span<const Cyclotomic> L);

// ----- constructive families of sharp pairs -----

// The five parameterized families of sharp pairs with irrational values.
// The two psi families hold for dihedral and generalized quaternion groups
// alike; the builder instantiates them on the dihedral table.
enum class SharpFamily {
    cyclic_linear,        // (C_m, lambda_j), m >= 3, gcd(j, m) = 1; type 1
    cyclic_conjugate_sum, // (C_m, lambda_j + lambda_{m-j}), odd m >= 5; type 2
    dihedral_odd,         // (D_2m, psi_j), odd m >= 5, gcd(j, m) = 1; type 3
    psi_even,             // (D_2m, psi_j), 4 | m, m >= 8, gcd(j, m) = 1; type 4
    psi_plus_epsilon      // (D_2m, psi_j + chi2), even m >= 8, gcd(j, m) = 1; type 5
};

const char* family_name(SharpFamily family);
std::optional<SharpFamily> family_from_name(std::string_view name);

struct FamilyPair {
    std::shared_ptr<const CharacterTable> table;
    VirtualCharacter character;
};

// Build the (G, chi) pair of the given family; j defaults to the smallest
// valid parameter.  Violated hypotheses raise precondition_error naming the
// failed condition.
FamilyPair build_family_pair(SharpFamily family, std::int64_t m,
                             std::optional<std::int64_t> j = std::nullopt);

} // namespace sharpchar
