#include "clearlab/radical.hpp"

#include <stdexcept>

#include "clearlab/enumerate.hpp"

namespace clearlab {

RadicalReport jacobson_radical(const RingPtr& ring, std::uint64_t budget) {
    std::vector<Element> elems = all_elements(ring, budget);
    Element unity = Element::one(ring);

    auto in_left_radical = [&](const Element& x) {
        for (const Element& y : elems)
            if (!is_unit(unity - x * y)) return false;
        return true;
    };

    RadicalReport report;
    report.ring = ring;
    for (const Element& x : elems)
        if (in_left_radical(x)) report.radical_elements.push_back(x);

    if (ring->kind() == RingKind::matrix) {
        // the quasi-regularity test is side-symmetric; make sure of it
        std::vector<Element> right_side;
        for (const Element& x : elems) {
            bool ok = true;
            for (const Element& y : elems)
                if (!is_unit(unity - y * x)) { ok = false; break; }
            if (ok) right_side.push_back(x);
        }
        if (right_side != report.radical_elements)
            throw std::logic_error("left/right Jacobson radical disagree on " +
                                   ring->name());
    }

    report.is_semisimple = report.radical_elements.size() == 1 &&
                           report.radical_elements[0].is_zero();
    return report;
}

} // namespace clearlab
