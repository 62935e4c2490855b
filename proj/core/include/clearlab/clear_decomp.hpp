#pragma once

#include <string>

#include "clearlab/classify.hpp"
#include "clearlab/smith.hpp"

namespace clearlab {

/// Constructive split A = r + u of a full 2x2 matrix: r unit-regular with an
/// explicit inner unit v (r*v*r = r), u invertible. P, Q are the conjugating
/// transforms (the unit-diagonal reduction with the column swap folded into
/// Q), so r = P^-1*E*Q^-1, u = P^-1*U0*Q^-1 and v = Q*P.
struct MatrixClearDecomposition {
    Element input;
    Element r;
    Element u;
    Element inner_unit;
    Element P;
    Element Q;
    bool nontrivial = false;
};

/// Decompose a full 2x2 matrix over Z or Z/n as a nontrivial clear element:
/// reduce to diag(1, d), swap columns to [[0,1],[d,0]], split that as the
/// idempotent [[0,0],[d+1,1]] plus the unit [[0,1],[-1,-1]], and conjugate
/// back. Works for singular full matrices (d = 0) as well. Throws
/// NotFullError when the entry gcd is not a unit.
MatrixClearDecomposition clear_decompose_full(const Element& a);

struct DecompositionVerification {
    bool ok = false;
    std::string failed_clause;          // empty when ok
    std::vector<std::string> checks;    // clauses verified, in order
};

/// Re-checks every invariant by arithmetic alone: the sum, invertibility of
/// the unit part and the inner unit, r*v*r = r, and consistency of the
/// nontriviality flag. Stops at the first failing clause.
DecompositionVerification verify_clear_decomposition(const MatrixClearDecomposition& w);

ClearWitness to_clear_witness(const MatrixClearDecomposition& w);

/// Unit-regularity of the column matrix [[a,0],[b,0]] over Z or Z/n: decided
/// through the idempotent-times-unimodular-column criterion, with the inner
/// unit assembled from an explicit Bezout relation.
TriVerdict<UnitRegularWitness> unit_regular_matrix_from_column(const Element& a,
                                                               const Element& b);

/// Entrywise reduction of a decomposition over Z to one over Z/n; the
/// nontriviality flag is recomputed in the image ring.
MatrixClearDecomposition reduce_decomposition_mod(const MatrixClearDecomposition& w,
                                                  std::uint64_t n);

} // namespace clearlab
