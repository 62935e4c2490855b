#pragma once

#include <vector>

#include "clearlab/element.hpp"

namespace clearlab {

struct RadicalReport {
    RingPtr ring;
    std::vector<Element> radical_elements; // enumeration order
    bool is_semisimple = false;            // radical == {0}
};

/// Jacobson radical of a finite ring by the quasi-regularity test:
/// J(R) = { x : 1 - x*y is a unit for every y }. For matrix rings the
/// right-sided variant is computed as well and checked to agree.
/// Throws InfiniteRingError / BudgetError.
RadicalReport jacobson_radical(const RingPtr& ring, std::uint64_t budget = 4096);

} // namespace clearlab
