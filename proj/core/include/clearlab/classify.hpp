#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "clearlab/element.hpp"
#include "clearlab/verdict.hpp"

namespace clearlab {

// ---- witnesses ------------------------------------------------------------

struct UnitWitness {
    Element element;
    Element inverse; // two-sided
};

/// a = a*u*a with u a unit.
struct UnitRegularWitness {
    Element element;
    Element inner_unit;
    Element inner_unit_inverse;
};

/// a = e + u, e idempotent, u a unit.
struct CleanWitness {
    Element element;
    Element idempotent;
    Element unit;
    Element unit_inverse;
};

/// a = r + u, r unit-regular, u a unit. Nontrivial when r is neither 0 nor
/// a unit.
struct ClearWitness {
    Element element;
    UnitRegularWitness unit_regular_part;
    Element unit;
    Element unit_inverse;
    bool nontrivial = false;
};

struct TwoGoodWitness {
    Element element;
    Element first_unit, first_inverse;
    Element second_unit, second_inverse;
};

struct TwoCleanWitness {
    Element element;
    Element idempotent;
    Element first_unit, first_inverse;
    Element second_unit, second_inverse;
};

/// e = a*x and 1-e = (1-a)*y with e idempotent.
struct ExchangeWitness {
    Element idempotent;
    Element x;
    Element y;
};

// Re-validation by arithmetic alone; no trust in the search that produced
// the witness.
bool validate(const UnitWitness& w);
bool validate(const UnitRegularWitness& w);
bool validate(const CleanWitness& w);
bool validate(const ClearWitness& w);
bool validate(const TwoGoodWitness& w);
bool validate(const TwoCleanWitness& w);
bool validate_exchange(const Element& a, const ExchangeWitness& w);

// ---- element predicates ----------------------------------------------------

/// Default entry bound for the bounded searches over M2(Z).
inline constexpr std::int64_t kDefaultSearchRadius = 30;

TriVerdict<UnitWitness> unit_witness(const Element& a);

bool idempotent_test(const Element& a);

/// Finite rings: exhaustive over units. Z: a in {0,+-1}. M2(Z) and M2(Z/n):
/// decided through the Smith form (each invariant factor unit-regular in the
/// base), witness assembled from the reduction matrices. Products:
/// componentwise.
TriVerdict<UnitRegularWitness> unit_regular_witness(const Element& a);

/// Finite rings: exhaustive over idempotents. M2(Z): bounded search over
/// the exact 2x2 idempotent family {0, I} u {trace 1, det 0} with entries
/// bounded; exhausting the bound yields Unknown, never No.
TriVerdict<CleanWitness> clean_witness(const Element& a,
                                       std::int64_t bound = kDefaultSearchRadius);

/// Finite rings: exhaustive over unit-regular elements. M2(Z): unit-regular
/// elements decompose constructively; full matrices decompose through the
/// diagonal reduction; everything else gets a bounded search.
TriVerdict<ClearWitness> clear_witness(const Element& a,
                                       std::int64_t bound = kDefaultSearchRadius);

TriVerdict<TwoGoodWitness> two_good_test(const Element& a,
                                         std::int64_t bound = kDefaultSearchRadius);

TriVerdict<TwoCleanWitness> two_clean_test(const Element& a,
                                           std::int64_t bound = kDefaultSearchRadius);

struct ExchangeResult {
    bool value = false;
    std::optional<ExchangeWitness> witness;
};

/// Finite rings only; throws InfiniteRingError.
ExchangeResult exchange_test(const Element& a);

struct Ursr1Result {
    bool holds = false;
    std::optional<std::pair<Element, Element>> counterexample;
};

/// Unit-regular stable range 1: every unimodular pair (a, b) admits a
/// unit-regular r with a + b*r a unit. Finite rings only.
Ursr1Result ursr1_test(const RingPtr& ring, std::uint64_t budget = 4096);

// ---- shared exhaustive machinery -------------------------------------------

/// Precomputed enumeration caches for one finite ring: element table,
/// unit/idempotent/unit-regular sets with witnesses, and right-ideal
/// membership tables. Caches fill lazily; an instance is not thread-safe,
/// build one per thread.
class FiniteContext {
public:
    static constexpr std::uint64_t kDefaultBudget = 4096;

    explicit FiniteContext(RingPtr ring, std::uint64_t budget = kDefaultBudget);

    const RingPtr& ring() const { return ring_; }
    std::uint64_t size() const { return static_cast<std::uint64_t>(elements_.size()); }
    const Element& at(std::uint64_t rank) const { return elements_[rank]; }
    std::uint64_t rank(const Element& x) const;

    const std::vector<std::uint64_t>& units() const;
    bool unit_at(std::uint64_t rank) const;
    std::uint64_t inverse_at(std::uint64_t unit_rank) const;

    const std::vector<std::uint64_t>& idempotents() const;
    bool idempotent_at(std::uint64_t rank) const;

    const std::vector<std::uint64_t>& unit_regulars() const;
    bool unit_regular_at(std::uint64_t rank) const;
    /// Rank of a unit u with a*u*a = a (enumeration-order-minimal).
    std::uint64_t inner_unit_at(std::uint64_t ur_rank) const;

    /// Membership bitset of the right ideal a*R, indexed by rank.
    const std::vector<bool>& right_products(std::uint64_t a_rank) const;

private:
    void ensure_units() const;
    void ensure_idempotents() const;
    void ensure_unit_regulars() const;
    void ensure_right_products() const;

    RingPtr ring_;
    std::uint64_t budget_;
    std::vector<Element> elements_;

    mutable std::vector<std::uint64_t> units_;
    mutable std::vector<std::uint64_t> inverse_; // by rank; npos for non-units
    mutable std::vector<std::uint64_t> idempotents_;
    mutable std::vector<bool> idempotent_bits_;
    mutable std::vector<std::uint64_t> unit_regulars_;
    mutable std::vector<std::uint64_t> inner_unit_; // by rank; npos otherwise
    mutable std::vector<std::vector<bool>> right_products_;
    mutable bool units_ready_ = false;
    mutable bool idempotents_ready_ = false;
    mutable bool unit_regulars_ready_ = false;
    mutable bool right_products_ready_ = false;
};

// Context-aware variants used by ring-level surveys (identical results to
// the element-level operations above).
TriVerdict<UnitRegularWitness> unit_regular_witness(const FiniteContext& ctx,
                                                    std::uint64_t rank);
TriVerdict<CleanWitness> clean_witness(const FiniteContext& ctx, std::uint64_t rank);
TriVerdict<ClearWitness> clear_witness(const FiniteContext& ctx, std::uint64_t rank);
TriVerdict<TwoGoodWitness> two_good_test(const FiniteContext& ctx, std::uint64_t rank);
TriVerdict<TwoCleanWitness> two_clean_test(const FiniteContext& ctx, std::uint64_t rank);
ExchangeResult exchange_test(const FiniteContext& ctx, std::uint64_t rank);
Ursr1Result ursr1_test(const FiniteContext& ctx);

} // namespace clearlab
