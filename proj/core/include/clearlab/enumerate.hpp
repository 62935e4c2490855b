#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clearlab/element.hpp"

namespace clearlab {

/// Enumeration rank of a finite ring, guarded against overflowing the
/// 64-bit index space. Throws InfiniteRingError on a Z leaf.
std::uint64_t cardinality_u64(const RingPtr& ring);

/// Element at a given position of the deterministic enumeration order:
/// residues ascend 0..n-1; product pairs are ordered lexicographically with
/// the left component most significant; matrix entries are row-major with
/// the (0,0) entry most significant.
Element unrank(const RingPtr& ring, std::uint64_t index);

std::uint64_t rank_of(const Element& x);

/// Restartable stream over a finite ring, yielding each element exactly
/// once in enumeration order.
class ElementStream {
public:
    explicit ElementStream(RingPtr ring);

    std::optional<Element> next();
    void reset() { index_ = 0; }

private:
    RingPtr ring_;
    std::uint64_t cardinality_;
    std::uint64_t index_ = 0;
};

/// Materialized enumeration; rejects rings larger than `budget`.
std::vector<Element> all_elements(const RingPtr& ring,
                                  std::uint64_t budget = 1u << 20);

} // namespace clearlab
