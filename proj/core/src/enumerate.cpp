#include "clearlab/enumerate.hpp"

#include <limits>

#include "clearlab/error.hpp"

namespace clearlab {

std::uint64_t cardinality_u64(const RingPtr& ring) {
    Int card = ring->cardinality(); // throws InfiniteRingError on a Z leaf
    if (card > Int(std::numeric_limits<std::uint64_t>::max()))
        throw BudgetError("ring too large to index: " + ring->name(),
                          std::numeric_limits<std::uint64_t>::max());
    return static_cast<std::uint64_t>(card);
}

Element unrank(const RingPtr& ring, std::uint64_t index) {
    switch (ring->kind()) {
    case RingKind::integers:
        throw InfiniteRingError("infinite ring: Z");
    case RingKind::modular:
        return Element::from_int(ring, Int(index % ring->modulus()));
    case RingKind::product: {
        std::uint64_t rc = cardinality_u64(ring->right());
        return Element::pair(ring, unrank(ring->left(), index / rc),
                             unrank(ring->right(), index % rc));
    }
    case RingKind::matrix: {
        std::uint64_t bc = cardinality_u64(ring->base());
        int n = ring->size() * ring->size();
        std::vector<std::uint64_t> digits(static_cast<std::size_t>(n));
        for (int t = n - 1; t >= 0; --t) {
            digits[static_cast<std::size_t>(t)] = index % bc;
            index /= bc;
        }
        std::vector<Element> entries;
        entries.reserve(static_cast<std::size_t>(n));
        for (std::uint64_t d : digits) entries.push_back(unrank(ring->base(), d));
        return Element::matrix(ring, std::move(entries));
    }
    }
    throw std::logic_error("unreachable");
}

std::uint64_t rank_of(const Element& x) {
    const RingPtr& ring = x.ring();
    switch (ring->kind()) {
    case RingKind::integers:
        throw InfiniteRingError("infinite ring: Z");
    case RingKind::modular:
        return x.residue();
    case RingKind::product:
        return rank_of(x.first()) * cardinality_u64(ring->right()) +
               rank_of(x.second());
    case RingKind::matrix: {
        std::uint64_t bc = cardinality_u64(ring->base());
        std::uint64_t acc = 0;
        for (const Element& e : x.parts()) acc = acc * bc + rank_of(e);
        return acc;
    }
    }
    throw std::logic_error("unreachable");
}

ElementStream::ElementStream(RingPtr ring)
    : ring_(std::move(ring)), cardinality_(cardinality_u64(ring_)) {}

std::optional<Element> ElementStream::next() {
    if (index_ >= cardinality_) return std::nullopt;
    return unrank(ring_, index_++);
}

std::vector<Element> all_elements(const RingPtr& ring, std::uint64_t budget) {
    std::uint64_t card = cardinality_u64(ring);
    if (card > budget)
        throw BudgetError("enumeration of " + ring->name() + " needs budget " +
                              std::to_string(card) + ", configured " +
                              std::to_string(budget),
                          card);
    std::vector<Element> out;
    out.reserve(card);
    for (std::uint64_t i = 0; i < card; ++i) out.push_back(unrank(ring, i));
    return out;
}

} // namespace clearlab
