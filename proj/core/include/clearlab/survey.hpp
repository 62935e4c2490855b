#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "clearlab/classify.hpp"

namespace clearlab {

struct RingFlags {
    bool is_clean_ring = false;
    bool is_clear_ring = false;
    bool is_unit_regular_ring = false;
    bool is_2good_ring = false;
    bool is_2clean_ring = false;
    bool is_exchange_ring = false;
    bool has_ursr1 = false;
    bool is_semisimple = false;
    bool has_nontrivial_idempotents = false;
};

/// Per-ring classification across every implemented element property, with
/// the first counterexample (in enumeration order) for each failed flag.
struct RingReport {
    RingPtr ring;
    std::uint64_t cardinality = 0;
    RingFlags flags;
    std::map<std::string, Element> counterexamples;
};

/// Exhaustive classification of a finite ring. Rejects rings above the
/// budget with the required budget attached. The implication structure
/// (clean ring => clear ring, unit-regular ring => clear ring) is enforced
/// at construction; a violation is an internal error, not data.
RingReport classify_ring(const RingPtr& ring,
                         std::uint64_t budget = FiniteContext::kDefaultBudget);

enum class PropositionId {
    P1,     // clean element is clear
    P2,     // unit-regular element is clear, with the explicit construction
    P4,     // residue-ring image of a clear element stays clear
    P5,     // clearness in a direct product is componentwise
    L6,     // a clear <=> u*a and a*u clean for some unit u
    L7,     // unit-regular stable range 1 forces every element clear
    P8,     // clear element is 2-clean
    P109,   // without nontrivial idempotents: clear <=> unit or 2-good
    P21i,   // 2x2 matrix with a unit off-diagonal entry is clean
    P21iii, // clean element is exchange
};

/// Canonical identifier, e.g. "P1-clean-implies-clear".
std::string proposition_name(PropositionId id);
/// Accepts the canonical identifier or the short alias ("P1", "L6", "P2.1i").
std::optional<PropositionId> proposition_from_string(const std::string& text);

struct PropositionCheck {
    PropositionId id;
    std::string ring_name;
    bool verified = false;
    std::optional<Element> counterexample;
    std::string detail;
};

/// Exhaustive verification of one proposition on one finite ring, or a
/// re-validating counterexample. P21i requires a 2x2 matrix ring.
PropositionCheck check_proposition(PropositionId id, const RingPtr& ring,
                                   std::uint64_t budget = FiniteContext::kDefaultBudget);

/// P5 on the product of two finite rings.
PropositionCheck check_proposition_product(const RingPtr& left, const RingPtr& right,
                                           std::uint64_t budget = FiniteContext::kDefaultBudget);

/// P4 for Z/n or M2(Z/n): each modulus must divide n; empty list means all
/// proper divisors >= 2.
PropositionCheck check_proposition_hom(const RingPtr& ring,
                                       std::vector<std::uint64_t> moduli,
                                       std::uint64_t budget = FiniteContext::kDefaultBudget);

/// One report per modulus 2..n_max (n_max <= 512), with the monotone
/// implication columns validated.
std::vector<RingReport> survey_zn(std::uint64_t n_max);

struct TheoremForwardReport {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::int64_t entry_bound = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t rejected = 0; // draws discarded as not full or singular
};

/// Seeded sampling check over M2(Z): random full nonsingular matrices must
/// all decompose as verified nontrivial clear elements.
TheoremForwardReport theorem_1_3_forward_check(std::uint64_t samples, std::uint64_t seed,
                                               std::int64_t entry_bound);

struct NonCleanCandidate {
    Int c;
    Int d;
    bool sign_plus = false; // which of 5c - 12d = +-1 produced it
    Int b_numerator;        // d*(1-d); the idempotent needs b = b_numerator/c
    bool b_integral = false;
};

/// Exact cleanness reduction for [[12,5],[0,0]] over Z: any clean witness
/// needs an idempotent E with det(A - E) = +-1, which forces 5c - 12d = +-1
/// on the bottom row of E plus integrality of the remaining entry. The
/// report enumerates and refutes every candidate within the bounds, plus
/// the two direct branches E = 0 and E = I.
struct NonCleanOracleReport {
    std::int64_t c_bound = 0;
    std::int64_t d_bound = 0;
    Int det_zero_branch;     // det(A - 0)
    Int det_identity_branch; // det(A - I)
    std::vector<NonCleanCandidate> candidates;
    std::uint64_t clean_witnesses_found = 0; // stays 0
};

NonCleanOracleReport non_clean_oracle_12_5(std::int64_t c_bound, std::int64_t d_bound);

/// The fixed survey catalog: Z/2..Z/16, Z/2 x Z/2, Z/2 x Z/3, M2(Z/2),
/// M2(Z/3). Mirrors data/catalog.txt.
std::vector<RingPtr> default_catalog();

/// Catalog manifest: one ring descriptor per line; '#' starts a comment.
std::vector<RingPtr> parse_catalog(std::istream& in);

} // namespace clearlab
