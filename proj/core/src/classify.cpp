#include "clearlab/classify.hpp"

#include <limits>
#include <stdexcept>

#include "clearlab/clear_decomp.hpp"
#include "clearlab/enumerate.hpp"
#include "clearlab/error.hpp"
#include "clearlab/smith.hpp"

namespace clearlab {

namespace {

constexpr std::uint64_t kNoRank = std::numeric_limits<std::uint64_t>::max();

// cardinality cap for plain O(|R|) exhaustive scans
constexpr std::uint64_t kScanCap = 1u << 16;

bool small_finite(const RingPtr& ring, std::uint64_t cap = kScanCap) {
    return ring->finite() && ring->cardinality() <= Int(cap);
}

bool is_two_sided_inverse(const Element& a, const Element& b) {
    return (a * b).is_one() && (b * a).is_one();
}

// ---- analytic unit-regularity ----------------------------------------------

// Inner unit for a residue a in Z/n, when one exists. With g = gcd(a, n) and
// m = n/g, a is unit-regular iff gcd(g, m) = 1; then u = a^-1 mod m glued
// with 1 mod g is a unit with a*u*a = a.
std::optional<Element> modular_ur_inner_unit(const Element& a) {
    Int n(a.ring()->modulus());
    Int la = a.lift();
    Int g = gcd_int(la, n);
    if (g == 0) g = n; // a == 0
    Int m = n / g;
    if (gcd_int(g, m) != 1) return std::nullopt;
    if (m == 1) return Element::one(a.ring());

    Int x, y;
    xgcd(la % m, m, x, y); // (a mod m) * x = 1 mod m
    Int ainv = x % m;
    if (ainv < 0) ainv += m;
    // u = ainv (mod m), u = 1 (mod g)
    Int minv_mod_g, t;
    xgcd(m % g == 0 ? Int(0) : m % g, g, minv_mod_g, t);
    if (g == 1) return Element::from_int(a.ring(), ainv);
    Int k = ((Int(1) - ainv) % g) * minv_mod_g % g;
    Int u = ainv + m * k;
    return Element::from_int(a.ring(), u);
}

// Analytic routes only; Outcome::unknown means "no analytic route", not a
// bounded search result.
TriVerdict<UnitRegularWitness> ur_structural(const Element& a) {
    using V = TriVerdict<UnitRegularWitness>;
    const RingPtr& ring = a.ring();
    switch (ring->kind()) {
    case RingKind::integers: {
        const Int& v = a.int_value();
        if (v == 0 || v == 1)
            return V::make_yes({a, Element::one(ring), Element::one(ring)});
        if (v == -1) return V::make_yes({a, a, a});
        return V::make_no(RefutationKind::analytic_oracle);
    }
    case RingKind::modular: {
        auto u = modular_ur_inner_unit(a);
        if (!u) return V::make_no(RefutationKind::analytic_oracle);
        auto inv = inverse_of(*u);
        return V::make_yes({a, *u, *inv});
    }
    case RingKind::product: {
        auto lv = ur_structural(a.first());
        auto rv = ur_structural(a.second());
        if (lv.no() || rv.no()) return V::make_no(RefutationKind::analytic_oracle);
        if (lv.yes() && rv.yes()) {
            UnitRegularWitness w{
                a,
                Element::pair(ring, lv.witness->inner_unit, rv.witness->inner_unit),
                Element::pair(ring, lv.witness->inner_unit_inverse,
                              rv.witness->inner_unit_inverse)};
            return V::make_yes(std::move(w));
        }
        return V::make_unknown(0);
    }
    case RingKind::matrix: {
        const RingPtr& base = ring->base();
        if (ring->size() == 1) {
            auto bv = ur_structural(a.entry(0, 0));
            if (bv.no()) return V::make_no(RefutationKind::analytic_oracle);
            if (!bv.yes()) return V::make_unknown(0);
            return V::make_yes({a, Element::matrix(ring, {bv.witness->inner_unit}),
                                Element::matrix(ring, {bv.witness->inner_unit_inverse})});
        }
        if (ring->size() != 2 || (base->kind() != RingKind::integers &&
                                  base->kind() != RingKind::modular))
            return V::make_unknown(0);

        // A = P^-1 D Q^-1; A is unit-regular iff both invariant factors are,
        // and then u = Q diag(u1,u2) P satisfies A u A = A.
        SmithForm snf = smith_normal_form(a);
        auto v1 = ur_structural(snf.d1());
        auto v2 = ur_structural(snf.d2());
        if (!v1.yes() || !v2.yes())
            return V::make_no(RefutationKind::analytic_oracle);
        Element ud = Element::matrix(ring, {v1.witness->inner_unit,
                                            Element::zero(base),
                                            Element::zero(base),
                                            v2.witness->inner_unit});
        Element u = snf.Q * ud * snf.P;
        auto inv = inverse_of(u);
        if (!inv) throw std::logic_error("assembled inner unit is not invertible");
        UnitRegularWitness w{a, u, *inv};
        if (!validate(w))
            throw std::logic_error("Smith-form unit-regular witness failed validation");
        return V::make_yes(std::move(w));
    }
    }
    throw std::logic_error("unreachable");
}

// ---- analytic clear construction (unit-regular a = u^-1 - e*u^-1) ----------

ClearWitness clear_from_unit_regular(const UnitRegularWitness& urw) {
    const Element& a = urw.element;
    const Element& u = urw.inner_unit;
    const Element& u_inv = urw.inner_unit_inverse;
    const RingPtr& ring = a.ring();

    Element e = Element::one(ring) - a * u; // idempotent
    Element r = -(e * u_inv);               // unit-regular with inner unit -u
    ClearWitness w{
        a,
        UnitRegularWitness{r, -u, -u_inv},
        u_inv,
        u,
        false,
    };
    w.nontrivial = !r.is_zero() && !is_unit(r);
    return w;
}

// ---- bounded families over M2(Z) --------------------------------------------

// 2x2 idempotents over Z are 0, I and [[t,b],[c,1-t]] with t(1-t) = bc.
// Visits them with all entries bounded, in a fixed order; the callback
// returns true to stop.
template <typename F>
bool for_each_bounded_idempotent(const RingPtr& ring, std::int64_t bound, F&& visit) {
    if (visit(Element::zero(ring))) return true;
    if (visit(Element::one(ring))) return true;
    for (std::int64_t t = -bound; t <= bound; ++t) {
        if (t < 1 - bound || t > 1 + bound) continue; // |1-t| <= bound
        Int prod = Int(t) * Int(1 - t);
        for (std::int64_t b = -bound; b <= bound; ++b) {
            for (std::int64_t c = -bound; c <= bound; ++c) {
                if (Int(b) * Int(c) != prod) continue;
                Element e = Element::matrix_from_ints(
                    ring, {Int(t), Int(b), Int(c), Int(1 - t)});
                if (e.is_zero() || e.is_one()) continue; // already visited
                if (visit(e)) return true;
            }
        }
    }
    return false;
}

// Unimodular 2x2 integer matrices [[p,q],[r,s]] with all entries bounded:
// coprime top row, second row solved from p*s - q*r = +-1 and shifted by
// t*(p,q).
template <typename F>
bool for_each_bounded_unit_matrix(const RingPtr& ring, std::int64_t bound, F&& visit) {
    for (std::int64_t p = -bound; p <= bound; ++p) {
        for (std::int64_t q = -bound; q <= bound; ++q) {
            Int x, y;
            Int g = xgcd(Int(p), Int(q), x, y);
            if (g != 1) continue;
            for (int sign = 0; sign < 2; ++sign) {
                Int eps = sign == 0 ? 1 : -1;
                // p*s0 - q*r0 = eps
                Int s0 = eps * x;
                Int r0 = -eps * y;
                // family s = s0 + t*q, r = r0 + t*p; clamp t so both stay bounded
                Int tlo(-2 * bound - 2), thi(2 * bound + 2);
                auto clamp = [&](const Int& coeff, const Int& from) {
                    if (coeff == 0) return;
                    Int lo = (-Int(bound) - from), hi = (Int(bound) - from);
                    // t*coeff in [lo, hi]
                    Int a1 = lo, b1 = hi;
                    if (coeff < 0) std::swap(a1, b1);
                    // ceil(a1/coeff), floor(b1/coeff) with truncation fixups
                    Int c = coeff < 0 ? -coeff : coeff;
                    Int aa = coeff < 0 ? -a1 : a1, bb = coeff < 0 ? -b1 : b1;
                    Int lo_t = aa >= 0 ? (aa + c - 1) / c : -((-aa) / c);
                    Int hi_t = bb >= 0 ? bb / c : -((-bb + c - 1) / c);
                    if (lo_t > tlo) tlo = lo_t;
                    if (hi_t < thi) thi = hi_t;
                };
                clamp(Int(q), s0);
                clamp(Int(p), r0);
                if (p == 0 && q == 0) continue; // unreachable, g would be 0
                for (Int t = tlo; t <= thi; ++t) {
                    Int s = s0 + t * q;
                    Int r = r0 + t * p;
                    if (abs_int(s) > bound || abs_int(r) > bound) continue;
                    if (visit(Element::matrix_from_ints(ring, {Int(p), Int(q), r, s})))
                        return true;
                }
            }
        }
    }
    return false;
}

const std::int64_t kNoSearch = 0;

} // namespace

// ---- validators --------------------------------------------------------------

bool validate(const UnitWitness& w) {
    return is_two_sided_inverse(w.element, w.inverse);
}

bool validate(const UnitRegularWitness& w) {
    return w.element * w.inner_unit * w.element == w.element &&
           is_two_sided_inverse(w.inner_unit, w.inner_unit_inverse);
}

bool validate(const CleanWitness& w) {
    return w.idempotent * w.idempotent == w.idempotent &&
           w.idempotent + w.unit == w.element &&
           is_two_sided_inverse(w.unit, w.unit_inverse);
}

bool validate(const ClearWitness& w) {
    if (!validate(w.unit_regular_part)) return false;
    if (w.unit_regular_part.element + w.unit != w.element) return false;
    if (!is_two_sided_inverse(w.unit, w.unit_inverse)) return false;
    const Element& r = w.unit_regular_part.element;
    bool nontrivial = !r.is_zero() && !is_unit(r);
    return nontrivial == w.nontrivial;
}

bool validate(const TwoGoodWitness& w) {
    return w.first_unit + w.second_unit == w.element &&
           is_two_sided_inverse(w.first_unit, w.first_inverse) &&
           is_two_sided_inverse(w.second_unit, w.second_inverse);
}

bool validate(const TwoCleanWitness& w) {
    return w.idempotent * w.idempotent == w.idempotent &&
           w.idempotent + w.first_unit + w.second_unit == w.element &&
           is_two_sided_inverse(w.first_unit, w.first_inverse) &&
           is_two_sided_inverse(w.second_unit, w.second_inverse);
}

bool validate_exchange(const Element& a, const ExchangeWitness& w) {
    const Element one = Element::one(a.ring());
    return w.idempotent * w.idempotent == w.idempotent &&
           a * w.x == w.idempotent && (one - a) * w.y == one - w.idempotent;
}

// ---- element predicates --------------------------------------------------------

TriVerdict<UnitWitness> unit_witness(const Element& a) {
    using V = TriVerdict<UnitWitness>;
    const RingPtr& ring = a.ring();
    if (small_finite(ring)) {
        std::uint64_t card = cardinality_u64(ring);
        for (std::uint64_t i = 0; i < card; ++i) {
            Element b = unrank(ring, i);
            if (is_two_sided_inverse(a, b)) return V::make_yes({a, std::move(b)});
        }
        return V::make_no(RefutationKind::exhaustive_enumeration);
    }
    auto inv = inverse_of(a); // exact structural test (Z: +-1; M2(Z): det +-1)
    if (inv) return V::make_yes({a, std::move(*inv)});
    return V::make_no(RefutationKind::analytic_oracle);
}

bool idempotent_test(const Element& a) { return a * a == a; }

TriVerdict<UnitRegularWitness> unit_regular_witness(const Element& a) {
    using V = TriVerdict<UnitRegularWitness>;
    const RingPtr& ring = a.ring();
    if (small_finite(ring)) {
        std::uint64_t card = cardinality_u64(ring);
        for (std::uint64_t i = 0; i < card; ++i) {
            Element u = unrank(ring, i);
            auto inv = inverse_of(u);
            if (!inv) continue;
            if (a * u * a == a) return V::make_yes({a, std::move(u), std::move(*inv)});
        }
        return V::make_no(RefutationKind::exhaustive_enumeration);
    }
    return ur_structural(a);
}

TriVerdict<CleanWitness> clean_witness(const Element& a, std::int64_t bound) {
    using V = TriVerdict<CleanWitness>;
    const RingPtr& ring = a.ring();

    if (small_finite(ring)) {
        std::uint64_t card = cardinality_u64(ring);
        for (std::uint64_t i = 0; i < card; ++i) {
            Element e = unrank(ring, i);
            if (e * e != e) continue;
            Element u = a - e;
            auto inv = inverse_of(u);
            if (inv)
                return V::make_yes({a, std::move(e), std::move(u), std::move(*inv)});
        }
        return V::make_no(RefutationKind::exhaustive_enumeration);
    }

    switch (ring->kind()) {
    case RingKind::integers: {
        for (int ev = 0; ev <= 1; ++ev) {
            Element e = Element::from_int(ring, Int(ev));
            Element u = a - e;
            auto inv = inverse_of(u);
            if (inv) return V::make_yes({a, std::move(e), std::move(u), std::move(*inv)});
        }
        return V::make_no(RefutationKind::analytic_oracle); // idempotents of Z are 0,1
    }
    case RingKind::product: {
        auto lv = clean_witness(a.first(), bound);
        auto rv = clean_witness(a.second(), bound);
        if (lv.no() || rv.no()) return V::make_no(RefutationKind::analytic_oracle);
        if (lv.yes() && rv.yes()) {
            CleanWitness w{
                a,
                Element::pair(ring, lv.witness->idempotent, rv.witness->idempotent),
                Element::pair(ring, lv.witness->unit, rv.witness->unit),
                Element::pair(ring, lv.witness->unit_inverse, rv.witness->unit_inverse)};
            return V::make_yes(std::move(w));
        }
        return V::make_unknown(bound);
    }
    case RingKind::matrix: {
        if (ring->size() == 1) {
            auto bv = clean_witness(a.entry(0, 0), bound);
            if (bv.no()) return V::make_no(RefutationKind::analytic_oracle);
            if (!bv.yes()) return V::make_unknown(bound);
            return V::make_yes({a, Element::matrix(ring, {bv.witness->idempotent}),
                                Element::matrix(ring, {bv.witness->unit}),
                                Element::matrix(ring, {bv.witness->unit_inverse})});
        }
        if (ring->size() == 2 && ring->base()->kind() == RingKind::integers) {
            V found = V::make_unknown(bound);
            for_each_bounded_idempotent(ring, bound, [&](const Element& e) {
                Element u = a - e;
                auto inv = inverse_of(u);
                if (!inv) return false;
                found = V::make_yes({a, e, u, *inv});
                return true;
            });
            return found; // exhausting the bound is Unknown, never No
        }
        return V::make_unknown(kNoSearch);
    }
    default:
        return V::make_unknown(kNoSearch);
    }
}

TriVerdict<ClearWitness> clear_witness(const Element& a, std::int64_t bound) {
    using V = TriVerdict<ClearWitness>;
    const RingPtr& ring = a.ring();

    if (small_finite(ring)) {
        FiniteContext ctx(ring, kScanCap);
        return clear_witness(ctx, ctx.rank(a));
    }

    switch (ring->kind()) {
    case RingKind::integers: {
        const Int candidates[3] = {Int(0), Int(1), Int(-1)};
        for (const Int& rv : candidates) {
            Element r = Element::from_int(ring, rv);
            Element u = a - r;
            auto inv = inverse_of(u);
            if (!inv) continue;
            Element inner = rv == -1 ? r : Element::one(ring);
            ClearWitness w{a, UnitRegularWitness{r, inner, inner},
                           u, *inv, !r.is_zero() && !is_unit(r)};
            return V::make_yes(std::move(w));
        }
        return V::make_no(RefutationKind::analytic_oracle); // clear in Z = [-2,2]
    }
    case RingKind::product: {
        auto lv = clear_witness(a.first(), bound);
        auto rv = clear_witness(a.second(), bound);
        if (lv.no() || rv.no()) return V::make_no(RefutationKind::analytic_oracle);
        if (lv.yes() && rv.yes()) {
            Element r = Element::pair(ring, lv.witness->unit_regular_part.element,
                                      rv.witness->unit_regular_part.element);
            ClearWitness w{
                a,
                UnitRegularWitness{
                    r,
                    Element::pair(ring, lv.witness->unit_regular_part.inner_unit,
                                  rv.witness->unit_regular_part.inner_unit),
                    Element::pair(ring, lv.witness->unit_regular_part.inner_unit_inverse,
                                  rv.witness->unit_regular_part.inner_unit_inverse)},
                Element::pair(ring, lv.witness->unit, rv.witness->unit),
                Element::pair(ring, lv.witness->unit_inverse, rv.witness->unit_inverse),
                false};
            w.nontrivial = !r.is_zero() && !is_unit(r);
            return V::make_yes(std::move(w));
        }
        return V::make_unknown(bound);
    }
    case RingKind::matrix: {
        if (ring->size() == 1) {
            auto bv = clear_witness(a.entry(0, 0), bound);
            if (bv.no()) return V::make_no(RefutationKind::analytic_oracle);
            if (!bv.yes()) return V::make_unknown(bound);
            const ClearWitness& bw = *bv.witness;
            ClearWitness w{
                a,
                UnitRegularWitness{
                    Element::matrix(ring, {bw.unit_regular_part.element}),
                    Element::matrix(ring, {bw.unit_regular_part.inner_unit}),
                    Element::matrix(ring, {bw.unit_regular_part.inner_unit_inverse})},
                Element::matrix(ring, {bw.unit}),
                Element::matrix(ring, {bw.unit_inverse}),
                bw.nontrivial};
            return V::make_yes(std::move(w));
        }
        if (ring->size() != 2 || (ring->base()->kind() != RingKind::integers &&
                                  ring->base()->kind() != RingKind::modular))
            return V::make_unknown(kNoSearch);

        // unit-regular matrices decompose directly: a = u^-1 - e*u^-1
        auto ur = ur_structural(a);
        if (ur.yes()) return V::make_yes(clear_from_unit_regular(*ur.witness));

        // full matrices always decompose as nontrivial clear
        if (fullness(a).is_full)
            return V::make_yes(to_clear_witness(clear_decompose_full(a)));

        if (ring->base()->kind() != RingKind::integers)
            return V::make_unknown(kNoSearch);

        // bounded search: a - U unit-regular for a bounded unit summand U
        V found = V::make_unknown(bound);
        for_each_bounded_unit_matrix(ring, bound, [&](const Element& u) {
            Element r = a - u;
            auto rv = ur_structural(r);
            if (!rv.yes()) return false;
            auto u_inv = inverse_of(u);
            ClearWitness w{a, *rv.witness, u, *u_inv,
                           !r.is_zero() && !is_unit(r)};
            found = V::make_yes(std::move(w));
            return true;
        });
        return found;
    }
    default:
        return V::make_unknown(kNoSearch);
    }
}

TriVerdict<TwoGoodWitness> two_good_test(const Element& a, std::int64_t bound) {
    using V = TriVerdict<TwoGoodWitness>;
    const RingPtr& ring = a.ring();

    if (small_finite(ring)) {
        std::uint64_t card = cardinality_u64(ring);
        for (std::uint64_t i = 0; i < card; ++i) {
            Element u = unrank(ring, i);
            auto ui = inverse_of(u);
            if (!ui) continue;
            Element v = a - u;
            auto vi = inverse_of(v);
            if (!vi)
                continue;
            return V::make_yes({a, std::move(u), std::move(*ui), std::move(v),
                                std::move(*vi)});
        }
        return V::make_no(RefutationKind::exhaustive_enumeration);
    }

    switch (ring->kind()) {
    case RingKind::integers: {
        const Int& v = a.int_value();
        Element one = Element::one(ring), neg = -one;
        if (v == 2) return V::make_yes({a, one, one, one, one});
        if (v == 0) return V::make_yes({a, one, one, neg, neg});
        if (v == -2) return V::make_yes({a, neg, neg, neg, neg});
        return V::make_no(RefutationKind::analytic_oracle); // units of Z are +-1
    }
    case RingKind::product: {
        auto lv = two_good_test(a.first(), bound);
        auto rv = two_good_test(a.second(), bound);
        if (lv.no() || rv.no()) return V::make_no(RefutationKind::analytic_oracle);
        if (lv.yes() && rv.yes()) {
            TwoGoodWitness w{
                a,
                Element::pair(ring, lv.witness->first_unit, rv.witness->first_unit),
                Element::pair(ring, lv.witness->first_inverse, rv.witness->first_inverse),
                Element::pair(ring, lv.witness->second_unit, rv.witness->second_unit),
                Element::pair(ring, lv.witness->second_inverse,
                              rv.witness->second_inverse)};
            return V::make_yes(std::move(w));
        }
        return V::make_unknown(bound);
    }
    case RingKind::matrix: {
        if (ring->size() == 1) {
            auto bv = two_good_test(a.entry(0, 0), bound);
            if (bv.no()) return V::make_no(RefutationKind::analytic_oracle);
            if (!bv.yes()) return V::make_unknown(bound);
            return V::make_yes({a,
                                Element::matrix(ring, {bv.witness->first_unit}),
                                Element::matrix(ring, {bv.witness->first_inverse}),
                                Element::matrix(ring, {bv.witness->second_unit}),
                                Element::matrix(ring, {bv.witness->second_inverse})});
        }
        if (ring->size() == 2 && ring->base()->kind() == RingKind::integers) {
            V found = V::make_unknown(bound);
            for_each_bounded_unit_matrix(ring, bound, [&](const Element& u) {
                Element v = a - u;
                auto vi = inverse_of(v);
                if (!vi) return false;
                found = V::make_yes({a, u, *inverse_of(u), v, *vi});
                return true;
            });
            return found;
        }
        return V::make_unknown(kNoSearch);
    }
    default:
        return V::make_unknown(kNoSearch);
    }
}

TriVerdict<TwoCleanWitness> two_clean_test(const Element& a, std::int64_t bound) {
    using V = TriVerdict<TwoCleanWitness>;
    const RingPtr& ring = a.ring();

    if (small_finite(ring)) {
        FiniteContext ctx(ring, kScanCap);
        return two_clean_test(ctx, ctx.rank(a));
    }

    switch (ring->kind()) {
    case RingKind::integers: {
        Element one = Element::one(ring), neg = -one;
        for (int ev = 0; ev <= 1; ++ev) {
            Element e = Element::from_int(ring, Int(ev));
            Int rest = a.int_value() - ev;
            if (rest == 2) return V::make_yes({a, e, one, one, one, one});
            if (rest == 0) return V::make_yes({a, e, one, one, neg, neg});
            if (rest == -2) return V::make_yes({a, e, neg, neg, neg, neg});
        }
        return V::make_no(RefutationKind::analytic_oracle);
    }
    case RingKind::product: {
        auto lv = two_clean_test(a.first(), bound);
        auto rv = two_clean_test(a.second(), bound);
        if (lv.no() || rv.no()) return V::make_no(RefutationKind::analytic_oracle);
        if (lv.yes() && rv.yes()) {
            TwoCleanWitness w{
                a,
                Element::pair(ring, lv.witness->idempotent, rv.witness->idempotent),
                Element::pair(ring, lv.witness->first_unit, rv.witness->first_unit),
                Element::pair(ring, lv.witness->first_inverse, rv.witness->first_inverse),
                Element::pair(ring, lv.witness->second_unit, rv.witness->second_unit),
                Element::pair(ring, lv.witness->second_inverse,
                              rv.witness->second_inverse)};
            return V::make_yes(std::move(w));
        }
        return V::make_unknown(bound);
    }
    case RingKind::matrix: {
        if (ring->size() == 1) {
            auto bv = two_clean_test(a.entry(0, 0), bound);
            if (bv.no()) return V::make_no(RefutationKind::analytic_oracle);
            if (!bv.yes()) return V::make_unknown(bound);
            return V::make_yes({a, Element::matrix(ring, {bv.witness->idempotent}),
                                Element::matrix(ring, {bv.witness->first_unit}),
                                Element::matrix(ring, {bv.witness->first_inverse}),
                                Element::matrix(ring, {bv.witness->second_unit}),
                                Element::matrix(ring, {bv.witness->second_inverse})});
        }
        if (ring->size() == 2 && ring->base()->kind() == RingKind::integers) {
            // a = e + U from a clean witness, then split the unit summand
            // as U = U*A1 + U*A2 with A1 + A2 = I and A1, A2 units
            auto cv = clean_witness(a, bound);
            if (!cv.yes()) return V::make_unknown(bound);
            Element a1 = Element::matrix_from_ints(ring, {Int(1), Int(1), Int(1), Int(0)});
            Element a2 = Element::matrix_from_ints(ring, {Int(0), Int(-1), Int(-1), Int(1)});
            Element u1 = cv.witness->unit * a1;
            Element u2 = cv.witness->unit * a2;
            return V::make_yes({a, cv.witness->idempotent, u1, *inverse_of(u1), u2,
                                *inverse_of(u2)});
        }
        return V::make_unknown(kNoSearch);
    }
    default:
        return V::make_unknown(kNoSearch);
    }
}

ExchangeResult exchange_test(const Element& a) {
    const RingPtr& ring = a.ring();
    if (!ring->finite())
        throw InfiniteRingError("exchange test needs a finite ring, got " + ring->name());
    std::uint64_t card = cardinality_u64(ring);
    if (card > kScanCap)
        throw BudgetError("exchange test on " + ring->name(), card);

    const Element one = Element::one(ring);
    Element complement = one - a;
    for (std::uint64_t i = 0; i < card; ++i) {
        Element e = unrank(ring, i);
        if (e * e != e) continue;
        Element ce = one - e;
        std::optional<Element> x, y;
        for (std::uint64_t j = 0; j < card && !x; ++j) {
            Element cand = unrank(ring, j);
            if (a * cand == e) x = std::move(cand);
        }
        if (!x) continue;
        for (std::uint64_t j = 0; j < card && !y; ++j) {
            Element cand = unrank(ring, j);
            if (complement * cand == ce) y = std::move(cand);
        }
        if (!y) continue;
        return {true, ExchangeWitness{std::move(e), std::move(*x), std::move(*y)}};
    }
    return {false, std::nullopt};
}

// ---- FiniteContext -----------------------------------------------------------

FiniteContext::FiniteContext(RingPtr ring, std::uint64_t budget)
    : ring_(std::move(ring)), budget_(budget), elements_(all_elements(ring_, budget)) {}

std::uint64_t FiniteContext::rank(const Element& x) const {
    if (!same_ring(x.ring(), ring_))
        throw std::invalid_argument("element of " + x.ring()->name() +
                                    " ranked against " + ring_->name());
    return rank_of(x);
}

void FiniteContext::ensure_units() const {
    if (units_ready_) return;
    inverse_.assign(elements_.size(), kNoRank);
    for (std::uint64_t i = 0; i < elements_.size(); ++i) {
        auto inv = inverse_of(elements_[i]);
        if (inv) {
            units_.push_back(i);
            inverse_[i] = rank_of(*inv);
        }
    }
    units_ready_ = true;
}

const std::vector<std::uint64_t>& FiniteContext::units() const {
    ensure_units();
    return units_;
}

bool FiniteContext::unit_at(std::uint64_t rank) const {
    ensure_units();
    return inverse_[rank] != kNoRank;
}

std::uint64_t FiniteContext::inverse_at(std::uint64_t unit_rank) const {
    ensure_units();
    if (inverse_[unit_rank] == kNoRank)
        throw std::invalid_argument("inverse_at on a non-unit");
    return inverse_[unit_rank];
}

void FiniteContext::ensure_idempotents() const {
    if (idempotents_ready_) return;
    idempotent_bits_.assign(elements_.size(), false);
    for (std::uint64_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] * elements_[i] == elements_[i]) {
            idempotents_.push_back(i);
            idempotent_bits_[i] = true;
        }
    }
    idempotents_ready_ = true;
}

const std::vector<std::uint64_t>& FiniteContext::idempotents() const {
    ensure_idempotents();
    return idempotents_;
}

bool FiniteContext::idempotent_at(std::uint64_t rank) const {
    ensure_idempotents();
    return idempotent_bits_[rank];
}

void FiniteContext::ensure_unit_regulars() const {
    if (unit_regulars_ready_) return;
    ensure_units();
    bool analytic = !ur_structural(elements_[0]).unknown();
    if (!analytic && elements_.size() * units_.size() > 20'000'000)
        throw BudgetError("unit-regular scan on " + ring_->name(),
                          elements_.size());
    inner_unit_.assign(elements_.size(), kNoRank);
    for (std::uint64_t i = 0; i < elements_.size(); ++i) {
        const Element& a = elements_[i];
        if (analytic) {
            auto structural = ur_structural(a);
            if (structural.yes()) {
                unit_regulars_.push_back(i);
                inner_unit_[i] = rank_of(structural.witness->inner_unit);
            }
            continue;
        }
        // no analytic route for this ring shape: exhaust the unit group
        for (std::uint64_t u : units_) {
            if (a * elements_[u] * a == a) {
                unit_regulars_.push_back(i);
                inner_unit_[i] = u;
                break;
            }
        }
    }
    unit_regulars_ready_ = true;
}

const std::vector<std::uint64_t>& FiniteContext::unit_regulars() const {
    ensure_unit_regulars();
    return unit_regulars_;
}

bool FiniteContext::unit_regular_at(std::uint64_t rank) const {
    ensure_unit_regulars();
    return inner_unit_[rank] != kNoRank;
}

std::uint64_t FiniteContext::inner_unit_at(std::uint64_t ur_rank) const {
    ensure_unit_regulars();
    if (inner_unit_[ur_rank] == kNoRank)
        throw std::invalid_argument("inner_unit_at on a non-unit-regular element");
    return inner_unit_[ur_rank];
}

void FiniteContext::ensure_right_products() const {
    if (right_products_ready_) return;
    std::uint64_t card = elements_.size();
    if (card > 8192)
        throw BudgetError("right ideal tables on " + ring_->name(), card);
    right_products_.assign(card, std::vector<bool>(card, false));
    for (std::uint64_t i = 0; i < card; ++i)
        for (std::uint64_t j = 0; j < card; ++j)
            right_products_[i][rank_of(elements_[i] * elements_[j])] = true;
    right_products_ready_ = true;
}

const std::vector<bool>& FiniteContext::right_products(std::uint64_t a_rank) const {
    ensure_right_products();
    return right_products_[a_rank];
}

// ---- context-aware predicate variants ------------------------------------------

TriVerdict<UnitRegularWitness> unit_regular_witness(const FiniteContext& ctx,
                                                    std::uint64_t rank) {
    using V = TriVerdict<UnitRegularWitness>;
    if (!ctx.unit_regular_at(rank))
        return V::make_no(RefutationKind::exhaustive_enumeration);
    std::uint64_t u = ctx.inner_unit_at(rank);
    return V::make_yes(
        {ctx.at(rank), ctx.at(u), ctx.at(ctx.inverse_at(u))});
}

TriVerdict<CleanWitness> clean_witness(const FiniteContext& ctx, std::uint64_t rank) {
    using V = TriVerdict<CleanWitness>;
    const Element& a = ctx.at(rank);
    for (std::uint64_t e : ctx.idempotents()) {
        Element u = a - ctx.at(e);
        std::uint64_t ur = ctx.rank(u);
        if (ctx.unit_at(ur))
            return V::make_yes({a, ctx.at(e), std::move(u), ctx.at(ctx.inverse_at(ur))});
    }
    return V::make_no(RefutationKind::exhaustive_enumeration);
}

TriVerdict<ClearWitness> clear_witness(const FiniteContext& ctx, std::uint64_t rank) {
    using V = TriVerdict<ClearWitness>;
    const Element& a = ctx.at(rank);
    for (std::uint64_t r : ctx.unit_regulars()) {
        Element u = a - ctx.at(r);
        std::uint64_t ur = ctx.rank(u);
        if (!ctx.unit_at(ur)) continue;
        std::uint64_t v = ctx.inner_unit_at(r);
        const Element& rel = ctx.at(r);
        ClearWitness w{a,
                       UnitRegularWitness{rel, ctx.at(v), ctx.at(ctx.inverse_at(v))},
                       std::move(u), ctx.at(ctx.inverse_at(ur)),
                       !rel.is_zero() && !ctx.unit_at(r)};
        return V::make_yes(std::move(w));
    }
    return V::make_no(RefutationKind::exhaustive_enumeration);
}

TriVerdict<TwoGoodWitness> two_good_test(const FiniteContext& ctx, std::uint64_t rank) {
    using V = TriVerdict<TwoGoodWitness>;
    const Element& a = ctx.at(rank);
    for (std::uint64_t u : ctx.units()) {
        Element v = a - ctx.at(u);
        std::uint64_t vr = ctx.rank(v);
        if (!ctx.unit_at(vr)) continue;
        return V::make_yes({a, ctx.at(u), ctx.at(ctx.inverse_at(u)), std::move(v),
                            ctx.at(ctx.inverse_at(vr))});
    }
    return V::make_no(RefutationKind::exhaustive_enumeration);
}

TriVerdict<TwoCleanWitness> two_clean_test(const FiniteContext& ctx, std::uint64_t rank) {
    using V = TriVerdict<TwoCleanWitness>;
    const Element& a = ctx.at(rank);
    for (std::uint64_t e : ctx.idempotents()) {
        Element rest = a - ctx.at(e);
        for (std::uint64_t u : ctx.units()) {
            Element v = rest - ctx.at(u);
            std::uint64_t vr = ctx.rank(v);
            if (!ctx.unit_at(vr)) continue;
            return V::make_yes({a, ctx.at(e), ctx.at(u), ctx.at(ctx.inverse_at(u)),
                                std::move(v), ctx.at(ctx.inverse_at(vr))});
        }
    }
    return V::make_no(RefutationKind::exhaustive_enumeration);
}

ExchangeResult exchange_test(const FiniteContext& ctx, std::uint64_t rank) {
    const Element& a = ctx.at(rank);
    const Element one = Element::one(ctx.ring());
    std::uint64_t comp = ctx.rank(one - a);
    const auto& ar = ctx.right_products(rank);
    const auto& cr = ctx.right_products(comp);
    for (std::uint64_t e : ctx.idempotents()) {
        std::uint64_t ce = ctx.rank(one - ctx.at(e));
        if (!ar[e] || !cr[ce]) continue;
        // recover the multipliers for the witness
        std::optional<Element> x, y;
        for (std::uint64_t j = 0; j < ctx.size() && !x; ++j)
            if (a * ctx.at(j) == ctx.at(e)) x = ctx.at(j);
        for (std::uint64_t j = 0; j < ctx.size() && !y; ++j)
            if ((one - a) * ctx.at(j) == ctx.at(ce)) y = ctx.at(j);
        return {true, ExchangeWitness{ctx.at(e), std::move(*x), std::move(*y)}};
    }
    return {false, std::nullopt};
}

Ursr1Result ursr1_test(const FiniteContext& ctx) {
    std::uint64_t card = ctx.size();
    const Element one = Element::one(ctx.ring());
    std::uint64_t words = (card + 63) / 64;

    // complement[p] = rank(1 - p), an involution on ranks
    std::vector<std::uint64_t> complement(card);
    for (std::uint64_t p = 0; p < card; ++p)
        complement[p] = ctx.rank(one - ctx.at(p));

    // packed right-ideal bitsets, plus flipped[a] = { 1 - p : p in a*R };
    // unimodularity of (a, b) is then a word-level intersection with b*R
    std::vector<std::uint64_t> ideals(card * words, 0), flipped(card * words, 0);
    for (std::uint64_t a = 0; a < card; ++a) {
        const auto& ar = ctx.right_products(a);
        for (std::uint64_t p = 0; p < card; ++p) {
            if (!ar[p]) continue;
            ideals[a * words + p / 64] |= std::uint64_t(1) << (p % 64);
            std::uint64_t q = complement[p];
            flipped[a * words + q / 64] |= std::uint64_t(1) << (q % 64);
        }
    }

    for (std::uint64_t a = 0; a < card; ++a) {
        const std::uint64_t* fa = &flipped[a * words];
        for (std::uint64_t b = 0; b < card; ++b) {
            const std::uint64_t* br = &ideals[b * words];
            bool unimodular = false;
            for (std::uint64_t w = 0; w < words; ++w)
                if (fa[w] & br[w]) { unimodular = true; break; }
            if (!unimodular) continue;

            bool solved = false;
            for (std::uint64_t r : ctx.unit_regulars()) {
                Element candidate = ctx.at(a) + ctx.at(b) * ctx.at(r);
                if (ctx.unit_at(ctx.rank(candidate))) { solved = true; break; }
            }
            if (!solved)
                return {false, std::make_pair(ctx.at(a), ctx.at(b))};
        }
    }
    return {true, std::nullopt};
}

Ursr1Result ursr1_test(const RingPtr& ring, std::uint64_t budget) {
    if (!ring->finite())
        throw InfiniteRingError("unit-regular stable range test needs a finite ring, got " +
                                ring->name());
    FiniteContext ctx(ring, budget);
    return ursr1_test(ctx);
}

} // namespace clearlab
