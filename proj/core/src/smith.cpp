#include "clearlab/smith.hpp"

#include <array>
#include <stdexcept>

#include "clearlab/error.hpp"

namespace clearlab {

namespace {

using Mat = std::array<std::array<Int, 2>, 2>;

const Mat kIdentity = {{{Int(1), Int(0)}, {Int(0), Int(1)}}};

void require_reducible(const Element& a) {
    const RingPtr& ring = a.ring();
    if (ring->kind() != RingKind::matrix || ring->size() != 2)
        throw std::invalid_argument("diagonal reduction is defined for 2x2 matrices, got " +
                                    ring->name());
    RingKind base = ring->base()->kind();
    if (base != RingKind::integers && base != RingKind::modular)
        throw std::invalid_argument("diagonal reduction needs a Z or Z/n base, got " +
                                    ring->base()->name());
}

Mat lift_matrix(const Element& a) {
    Mat m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = a.entry(i, j).lift();
    return m;
}

Element to_element(const RingPtr& ring, const Mat& m) {
    return Element::matrix_from_ints(ring, {m[0][0], m[0][1], m[1][0], m[1][1]});
}

void swap_rows(Mat& m) { std::swap(m[0], m[1]); }

void swap_cols(Mat& m) {
    std::swap(m[0][0], m[0][1]);
    std::swap(m[1][0], m[1][1]);
}

// row[i] -= q * row[k], applied to M and accumulated into P
void row_op(Mat& m, Mat& p, int i, int k, const Int& q) {
    for (int j = 0; j < 2; ++j) {
        m[i][j] -= q * m[k][j];
        p[i][j] -= q * p[k][j];
    }
}

void col_op(Mat& m, Mat& q_acc, int j, int k, const Int& q) {
    for (int i = 0; i < 2; ++i) {
        m[i][j] -= q * m[i][k];
        q_acc[i][j] -= q * q_acc[i][k];
    }
}

void negate_col(Mat& m, Mat& q_acc, int j) {
    for (int i = 0; i < 2; ++i) {
        m[i][j] = -m[i][j];
        q_acc[i][j] = -q_acc[i][j];
    }
}

bool matrix_is_zero(const Mat& m) {
    return m[0][0] == 0 && m[0][1] == 0 && m[1][0] == 0 && m[1][1] == 0;
}

// Euclidean elimination with alternating row/column steps. Produces
// P*A*Q = diag(d1, d2) with d1, d2 >= 0 and d1 | d2; det P, det Q = +-1.
void integer_snf(const Mat& a, Mat& p, Mat& d, Mat& q) {
    p = kIdentity;
    q = kIdentity;
    d = a;

    while (!matrix_is_zero(d)) {
        // move the smallest nonzero entry (by absolute value) to the pivot
        int bi = -1, bj = -1;
        Int best;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                if (d[i][j] == 0) continue;
                Int mag = abs_int(d[i][j]);
                if (bi < 0 || mag < best) {
                    best = mag;
                    bi = i;
                    bj = j;
                }
            }
        if (bi == 1) { swap_rows(d); swap_rows(p); }
        if (bj == 1) { swap_cols(d); swap_cols(q); }

        if (d[1][0] % d[0][0] != 0) {
            row_op(d, p, 1, 0, d[1][0] / d[0][0]);
            continue; // remainder is a strictly smaller pivot candidate
        }
        if (d[0][1] % d[0][0] != 0) {
            col_op(d, q, 1, 0, d[0][1] / d[0][0]);
            continue;
        }
        if (d[1][0] != 0) row_op(d, p, 1, 0, d[1][0] / d[0][0]);
        if (d[0][1] != 0) col_op(d, q, 1, 0, d[0][1] / d[0][0]);

        if (d[1][1] % d[0][0] != 0) {
            // pull the second diagonal entry up to restore the divisor chain
            for (int j = 0; j < 2; ++j) {
                d[0][j] += d[1][j];
                p[0][j] += p[1][j];
            }
            continue;
        }
        break;
    }

    // nonnegative diagonal, sign absorbed into Q
    if (d[0][0] < 0) negate_col(d, q, 0);
    if (d[1][1] < 0) negate_col(d, q, 1);
}

Int det2(const Mat& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

} // namespace

SmithForm smith_normal_form(const Element& a) {
    require_reducible(a);
    const RingPtr& ring = a.ring();
    const RingPtr& base = ring->base();

    Mat p, d, q;
    integer_snf(lift_matrix(a), p, d, q);

    Int mult(1);
    if (d[0][0] != 0) mult = d[1][1] / d[0][0];

    SmithForm out{
        a,
        to_element(ring, p),
        to_element(ring, d),
        to_element(ring, q),
        Element::from_int(base, mult),
    };
    return out;
}

FullnessVerdict fullness(const Element& a) {
    require_reducible(a);
    const RingPtr& base = a.ring()->base();
    Mat m = lift_matrix(a);

    Int g = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g = gcd_int(g, m[i][j]);

    FullnessVerdict v{false, Element::zero(base), false};
    if (base->kind() == RingKind::integers) {
        v.gcd_of_entries = Element::from_int(base, g);
        v.is_full = (g == 1);
        v.is_nonsingular = det2(m) != 0;
    } else {
        Int n(base->modulus());
        Int ideal_gen = gcd_int(g, n); // generator of the entry ideal in Z/n
        v.gcd_of_entries = Element::from_int(base, ideal_gen);
        v.is_full = (ideal_gen == 1);
        v.is_nonsingular = gcd_int(det2(m), n) == 1; // det a non-zero-divisor
    }
    return v;
}

UnitDiagReduction reduce_full_to_unit_diag(const Element& a) {
    FullnessVerdict v = fullness(a);
    if (!v.is_full)
        throw NotFullError("matrix is not full: entry gcd " +
                           v.gcd_of_entries.str() + " is not a unit of " +
                           a.ring()->base()->name());

    SmithForm snf = smith_normal_form(a);
    Element d1 = snf.d1();
    UnitDiagReduction out{snf.P, snf.Q, snf.d2()};
    if (!d1.is_one()) {
        // d1 is a unit (full matrix); scale the first row of P by its inverse
        auto d1_inv = inverse_of(d1);
        if (!d1_inv)
            throw std::logic_error("full matrix with non-unit d1 slipped through");
        const RingPtr& ring = a.ring();
        Element scale = Element::matrix(
            ring, {*d1_inv, Element::zero(ring->base()),
                   Element::zero(ring->base()), Element::one(ring->base())});
        out.P = scale * snf.P;
        out.d = snf.d2();
    }
    return out;
}

} // namespace clearlab
