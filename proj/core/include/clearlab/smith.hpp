#pragma once

#include "clearlab/element.hpp"

namespace clearlab {

/// Diagonal reduction P*A*Q = D of a 2x2 matrix over Z or Z/n, with the
/// transforms accumulated exactly. Over Z the form is canonical: d1, d2 >= 0,
/// d1 = gcd of the entries, d1 | d2, d1*d2 = |det A|. Over Z/n the reduction
/// is obtained by lifting to Z and re-reducing, so it is valid but not
/// canonical; divisibility is witnessed by `multiplier` (d2 = multiplier*d1).
struct SmithForm {
    Element original;
    Element P;
    Element D;
    Element Q;
    Element multiplier; // base-ring element with d2 = multiplier * d1

    Element d1() const { return D.entry(0, 0); }
    Element d2() const { return D.entry(1, 1); }
};

/// Requires a 2x2 matrix over Z or Z/n. The zero matrix yields D = 0 with
/// P = Q = I.
SmithForm smith_normal_form(const Element& a);

struct FullnessVerdict {
    bool is_full = false;       // entry gcd is a unit
    Element gcd_of_entries;     // base-ring element
    bool is_nonsingular = false; // det != 0 over Z; det a unit over Z/n
};

FullnessVerdict fullness(const Element& a);

struct UnitDiagReduction {
    Element P;
    Element Q;
    Element d; // base element; P*A*Q = diag(1, d). d may be 0 (singular full A).
};

/// Normalization of a full matrix to diag(1, d). Throws NotFullError with
/// the gcd obstruction when the entry gcd is not a unit.
UnitDiagReduction reduce_full_to_unit_diag(const Element& a);

} // namespace clearlab
