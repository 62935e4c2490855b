#pragma once

#include <cstdint>
#include <optional>

namespace clearlab {

enum class Outcome { yes, no, unknown };

/// How a No was established. A bounded search never produces No; over an
/// infinite ring only the analytic kind is legal.
enum class RefutationKind { exhaustive_enumeration, analytic_oracle };

/// Three-valued verdict. Yes always carries a witness that re-validates by
/// ring arithmetic alone; Unknown records the exhausted search bound.
template <typename W>
struct TriVerdict {
    Outcome outcome = Outcome::unknown;
    std::optional<W> witness;
    std::optional<RefutationKind> refutation;
    std::optional<std::int64_t> search_bound;

    bool yes() const { return outcome == Outcome::yes; }
    bool no() const { return outcome == Outcome::no; }
    bool unknown() const { return outcome == Outcome::unknown; }

    static TriVerdict make_yes(W w) {
        TriVerdict v;
        v.outcome = Outcome::yes;
        v.witness = std::move(w);
        return v;
    }

    static TriVerdict make_no(RefutationKind kind) {
        TriVerdict v;
        v.outcome = Outcome::no;
        v.refutation = kind;
        return v;
    }

    static TriVerdict make_unknown(std::int64_t bound) {
        TriVerdict v;
        v.outcome = Outcome::unknown;
        v.search_bound = bound;
        return v;
    }
};

} // namespace clearlab
