#include "clearlab/survey.hpp"

#include <istream>
#include <stdexcept>

#include "clearlab/clear_decomp.hpp"
#include "clearlab/error.hpp"
#include "clearlab/radical.hpp"
#include "clearlab/smith.hpp"

namespace clearlab {

namespace {

// per-element predicate bitsets for one context
std::vector<bool> clean_bits(const FiniteContext& ctx) {
    std::vector<bool> bits(ctx.size(), false);
    for (std::uint64_t i = 0; i < ctx.size(); ++i)
        bits[i] = clean_witness(ctx, i).yes();
    return bits;
}

std::vector<bool> clear_bits(const FiniteContext& ctx) {
    std::vector<bool> bits(ctx.size(), false);
    for (std::uint64_t i = 0; i < ctx.size(); ++i)
        bits[i] = clear_witness(ctx, i).yes();
    return bits;
}

} // namespace

RingReport classify_ring(const RingPtr& ring, std::uint64_t budget) {
    FiniteContext ctx(ring, budget); // rejects infinite / over-budget rings
    RingReport report;
    report.ring = ring;
    report.cardinality = ctx.size();

    auto scan = [&](const char* flag, auto&& holds) {
        for (std::uint64_t i = 0; i < ctx.size(); ++i) {
            if (!holds(i)) {
                report.counterexamples.emplace(flag, ctx.at(i));
                return false;
            }
        }
        return true;
    };

    RingFlags& f = report.flags;
    f.is_clean_ring = scan("is_clean_ring",
                           [&](std::uint64_t i) { return clean_witness(ctx, i).yes(); });
    f.is_clear_ring = scan("is_clear_ring",
                           [&](std::uint64_t i) { return clear_witness(ctx, i).yes(); });
    f.is_unit_regular_ring =
        scan("is_unit_regular_ring",
             [&](std::uint64_t i) { return ctx.unit_regular_at(i); });
    f.is_2good_ring = scan("is_2good_ring",
                           [&](std::uint64_t i) { return two_good_test(ctx, i).yes(); });
    f.is_2clean_ring = scan("is_2clean_ring",
                            [&](std::uint64_t i) { return two_clean_test(ctx, i).yes(); });
    f.is_exchange_ring = scan("is_exchange_ring",
                              [&](std::uint64_t i) { return exchange_test(ctx, i).value; });

    Ursr1Result stable = ursr1_test(ctx);
    f.has_ursr1 = stable.holds;
    if (!stable.holds)
        report.counterexamples.emplace("has_ursr1", stable.counterexample->first);

    RadicalReport radical = jacobson_radical(ring, budget);
    f.is_semisimple = radical.is_semisimple;
    if (!radical.is_semisimple) {
        for (const Element& x : radical.radical_elements)
            if (!x.is_zero()) {
                report.counterexamples.emplace("is_semisimple", x);
                break;
            }
    }

    f.has_nontrivial_idempotents = ctx.idempotents().size() > 2;

    if (f.is_clean_ring && !f.is_clear_ring)
        throw std::logic_error("clean ring classified as non-clear: " + ring->name());
    if (f.is_unit_regular_ring && !f.is_clear_ring)
        throw std::logic_error("unit-regular ring classified as non-clear: " + ring->name());
    return report;
}

std::string proposition_name(PropositionId id) {
    switch (id) {
    case PropositionId::P1: return "P1-clean-implies-clear";
    case PropositionId::P2: return "P2-unitregular-implies-clear";
    case PropositionId::P4: return "P4-hom-image";
    case PropositionId::P5: return "P5-direct-product";
    case PropositionId::L6: return "L6-ua-au";
    case PropositionId::L7: return "L7-ursr1-implies-clear";
    case PropositionId::P8: return "P8-2clean";
    case PropositionId::P109: return "P109-no-idempotents";
    case PropositionId::P21i: return "P2.1i-unit-entry-clean";
    case PropositionId::P21iii: return "P2.1iii-clean-exchange";
    }
    throw std::logic_error("unreachable proposition id");
}

std::optional<PropositionId> proposition_from_string(const std::string& text) {
    static const std::pair<const char*, PropositionId> aliases[] = {
        {"P1", PropositionId::P1},        {"P2", PropositionId::P2},
        {"P4", PropositionId::P4},        {"P5", PropositionId::P5},
        {"L6", PropositionId::L6},        {"L7", PropositionId::L7},
        {"P8", PropositionId::P8},        {"P109", PropositionId::P109},
        {"P2.1i", PropositionId::P21i},   {"P2.1iii", PropositionId::P21iii},
    };
    for (const auto& [alias, id] : aliases)
        if (text == alias || text == proposition_name(id)) return id;
    return std::nullopt;
}

PropositionCheck check_proposition(PropositionId id, const RingPtr& ring,
                                   std::uint64_t budget) {
    if (id == PropositionId::P4)
        return check_proposition_hom(ring, {}, budget);
    if (id == PropositionId::P5)
        throw std::invalid_argument("P5 takes two rings; use check_proposition_product");

    FiniteContext ctx(ring, budget);
    PropositionCheck out{id, ring->name(), true, std::nullopt, ""};
    auto refute = [&](const Element& x, std::string detail) {
        out.verified = false;
        out.counterexample = x;
        out.detail = std::move(detail);
    };

    switch (id) {
    case PropositionId::P1: {
        for (std::uint64_t i = 0; i < ctx.size() && out.verified; ++i)
            if (clean_witness(ctx, i).yes() && !clear_witness(ctx, i).yes())
                refute(ctx.at(i), "clean but not clear");
        break;
    }
    case PropositionId::P2: {
        for (std::uint64_t i = 0; i < ctx.size() && out.verified; ++i) {
            auto ur = unit_regular_witness(ctx, i);
            if (!ur.yes()) continue;
            if (!clear_witness(ctx, i).yes()) {
                refute(ctx.at(i), "unit-regular but not clear");
                break;
            }
            ClearWitness constructed = clear_from_unit_regular(*ur.witness);
            if (!validate(constructed))
                refute(ctx.at(i), "explicit construction a = u^-1 - e*u^-1 failed");
        }
        break;
    }
    case PropositionId::L6: {
        std::vector<bool> clean = clean_bits(ctx);
        std::vector<bool> clear = clear_bits(ctx);
        for (std::uint64_t i = 0; i < ctx.size() && out.verified; ++i) {
            bool via_units = false;
            for (std::uint64_t u : ctx.units()) {
                if (clean[ctx.rank(ctx.at(u) * ctx.at(i))] &&
                    clean[ctx.rank(ctx.at(i) * ctx.at(u))]) {
                    via_units = true;
                    break;
                }
            }
            if (via_units != clear[i])
                refute(ctx.at(i), via_units ? "u*a, a*u clean but a not clear"
                                            : "clear but no unit makes u*a and a*u clean");
        }
        break;
    }
    case PropositionId::L7: {
        Ursr1Result stable = ursr1_test(ctx);
        if (!stable.holds) {
            out.detail = "premise fails: ring does not have unit-regular stable range 1";
            break; // nothing to conclude; the implication is vacuous
        }
        out.detail = "premise holds";
        for (std::uint64_t i = 0; i < ctx.size() && out.verified; ++i)
            if (!clear_witness(ctx, i).yes())
                refute(ctx.at(i), "stable range 1 ring with a non-clear element");
        break;
    }
    case PropositionId::P8: {
        for (std::uint64_t i = 0; i < ctx.size() && out.verified; ++i)
            if (clear_witness(ctx, i).yes() && !two_clean_test(ctx, i).yes())
                refute(ctx.at(i), "clear but not 2-clean");
        break;
    }
    case PropositionId::P109: {
        bool no_nontrivial = ctx.idempotents().size() <= 2;
        bool all_clear = true;
        std::uint64_t first_non_clear = 0;
        for (std::uint64_t i = 0; i < ctx.size(); ++i)
            if (!clear_witness(ctx, i).yes()) {
                all_clear = false;
                first_non_clear = i;
                break;
            }
        bool lhs = all_clear && no_nontrivial;
        bool rhs = true;
        std::uint64_t first_bad = 0;
        for (std::uint64_t i = 0; i < ctx.size(); ++i)
            if (!ctx.unit_at(i) && !two_good_test(ctx, i).yes()) {
                rhs = false;
                first_bad = i;
                break;
            }
        if (lhs != rhs) {
            if (lhs)
                refute(ctx.at(first_bad), "clear without nontrivial idempotents, "
                                          "but element is neither unit nor 2-good");
            else if (!no_nontrivial)
                refute(ctx.at(ctx.idempotents()[2]),
                       "every element unit or 2-good, but a nontrivial idempotent exists");
            else
                refute(ctx.at(first_non_clear),
                       "every element unit or 2-good, but ring is not clear");
        } else {
            out.detail = lhs ? "both sides hold" : "both sides fail";
        }
        break;
    }
    case PropositionId::P21i: {
        if (ring->kind() != RingKind::matrix || ring->size() != 2)
            throw std::invalid_argument(proposition_name(id) +
                                        " needs a 2x2 matrix ring, got " + ring->name());
        for (std::uint64_t i = 0; i < ctx.size() && out.verified; ++i) {
            const Element& a = ctx.at(i);
            if (!is_unit(a.entry(0, 1)) && !is_unit(a.entry(1, 0))) continue;
            if (!clean_witness(ctx, i).yes())
                refute(a, "unit off-diagonal entry but not clean");
        }
        break;
    }
    case PropositionId::P21iii: {
        for (std::uint64_t i = 0; i < ctx.size() && out.verified; ++i)
            if (clean_witness(ctx, i).yes() && !exchange_test(ctx, i).value)
                refute(ctx.at(i), "clean but not exchange");
        break;
    }
    default:
        throw std::logic_error("unhandled proposition id");
    }
    return out;
}

PropositionCheck check_proposition_product(const RingPtr& left, const RingPtr& right,
                                           std::uint64_t budget) {
    RingPtr prod = Ring::product(left, right);
    FiniteContext pc(prod, budget), lc(left, budget), rc(right, budget);
    PropositionCheck out{PropositionId::P5, prod->name(), true, std::nullopt, ""};

    std::vector<bool> lclear = clear_bits(lc), rclear = clear_bits(rc);
    for (std::uint64_t i = 0; i < pc.size(); ++i) {
        const Element& x = pc.at(i);
        bool componentwise = lclear[lc.rank(x.first())] && rclear[rc.rank(x.second())];
        if (clear_witness(pc, i).yes() != componentwise) {
            out.verified = false;
            out.counterexample = x;
            out.detail = "clearness in the product disagrees with the components";
            break;
        }
    }
    return out;
}

PropositionCheck check_proposition_hom(const RingPtr& ring,
                                       std::vector<std::uint64_t> moduli,
                                       std::uint64_t budget) {
    bool matrix = ring->kind() == RingKind::matrix;
    RingPtr scalar = matrix ? ring->base() : ring;
    if (scalar->kind() != RingKind::modular)
        throw std::invalid_argument("P4 needs Z/n or a matrix ring over Z/n, got " +
                                    ring->name());
    std::uint64_t n = scalar->modulus();
    if (moduli.empty()) {
        for (std::uint64_t m = 2; m < n; ++m)
            if (n % m == 0) moduli.push_back(m);
    }
    for (std::uint64_t m : moduli)
        if (m < 2 || n % m != 0)
            throw std::invalid_argument("P4 modulus " + std::to_string(m) +
                                        " does not divide " + std::to_string(n));

    FiniteContext src(ring, budget);
    std::vector<bool> src_clear = clear_bits(src);
    PropositionCheck out{PropositionId::P4, ring->name(), true, std::nullopt,
                         moduli.empty() ? "no proper moduli" : ""};

    for (std::uint64_t m : moduli) {
        RingPtr image_ring = matrix ? Ring::matrix_ring(Ring::modular(m), ring->size())
                                    : Ring::modular(m);
        FiniteContext img(image_ring, budget);
        std::vector<bool> img_clear = clear_bits(img);

        auto project = [&](const Element& x) {
            if (!matrix) return Element::from_int(image_ring, x.lift());
            std::vector<Element> entries;
            entries.reserve(x.parts().size());
            for (const Element& e : x.parts())
                entries.push_back(Element::from_int(image_ring->base(), e.lift()));
            return Element::matrix(image_ring, std::move(entries));
        };

        for (std::uint64_t i = 0; i < src.size(); ++i) {
            if (!src_clear[i]) continue;
            if (!img_clear[img.rank(project(src.at(i)))]) {
                out.verified = false;
                out.counterexample = src.at(i);
                out.detail = "clear element with non-clear image mod " + std::to_string(m);
                return out;
            }
        }
    }
    return out;
}

std::vector<RingReport> survey_zn(std::uint64_t n_max) {
    if (n_max < 2 || n_max > 512)
        throw std::invalid_argument("survey range must be within [2, 512]");
    std::vector<RingReport> rows;
    rows.reserve(n_max - 1);
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        RingReport row = classify_ring(Ring::modular(n), 512);
        if (row.flags.is_clean_ring && !row.flags.is_clear_ring)
            throw std::logic_error("implication column broken at n=" + std::to_string(n));
        if (row.flags.is_clear_ring && !row.flags.is_2clean_ring)
            throw std::logic_error("implication column broken at n=" + std::to_string(n));
        rows.push_back(std::move(row));
    }
    return rows;
}

TheoremForwardReport theorem_1_3_forward_check(std::uint64_t samples, std::uint64_t seed,
                                               std::int64_t entry_bound) {
    if (samples < 1) throw std::invalid_argument("sample count must be positive");
    if (entry_bound < 1) throw std::invalid_argument("entry bound must be positive");

    RingPtr m2z = Ring::matrix_ring(Ring::integers(), 2);
    SplitMix64 rng(seed);
    TheoremForwardReport report{samples, seed, entry_bound, 0, 0, 0};

    for (std::uint64_t s = 0; s < samples; ++s) {
        Element a = Element::zero(m2z);
        for (;;) {
            a = Element::matrix_from_ints(m2z, {Int(rng.symmetric(entry_bound)),
                                                Int(rng.symmetric(entry_bound)),
                                                Int(rng.symmetric(entry_bound)),
                                                Int(rng.symmetric(entry_bound))});
            FullnessVerdict f = fullness(a);
            if (f.is_full && f.is_nonsingular) break;
            ++report.rejected;
        }
        MatrixClearDecomposition w = clear_decompose_full(a);
        if (verify_clear_decomposition(w).ok && w.nontrivial)
            ++report.passed;
        else
            ++report.failed;
    }
    return report;
}

NonCleanOracleReport non_clean_oracle_12_5(std::int64_t c_bound, std::int64_t d_bound) {
    if (c_bound < 1 || d_bound < 1)
        throw std::invalid_argument("oracle bounds must be positive");

    RingPtr m2z = Ring::matrix_ring(Ring::integers(), 2);
    Element a = Element::matrix_from_ints(m2z, {Int(12), Int(5), Int(0), Int(0)});

    NonCleanOracleReport report;
    report.c_bound = c_bound;
    report.d_bound = d_bound;
    report.det_zero_branch = determinant(a).int_value();
    report.det_identity_branch = determinant(a - Element::one(m2z)).int_value();
    report.clean_witnesses_found = 0;

    // A - E invertible for a rank-one idempotent E = [[1-d, b],[c, d]] forces
    // 5c - 12d = +-1 and then b = d*(1-d)/c, which must be an integer.
    for (std::int64_t c = -c_bound; c <= c_bound; ++c) {
        if (c == 0) continue; // 12d = -+1 has no integer solution
        for (int sign = 0; sign < 2; ++sign) {
            Int target = Int(5) * c - (sign == 0 ? 1 : -1);
            if (target % 12 != 0) continue;
            Int d = target / 12;
            if (abs_int(d) > d_bound) continue;
            NonCleanCandidate cand;
            cand.c = c;
            cand.d = d;
            cand.sign_plus = sign == 0;
            cand.b_numerator = d * (Int(1) - d);
            cand.b_integral = cand.b_numerator % c == 0;
            if (cand.b_integral) {
                Int b = cand.b_numerator / c;
                Element e = Element::matrix_from_ints(
                    m2z, {Int(1) - d, b, Int(c), d});
                Element u = a - e;
                if (e * e == e && is_unit(u)) ++report.clean_witnesses_found;
            }
            report.candidates.push_back(std::move(cand));
        }
    }
    return report;
}

std::vector<RingPtr> default_catalog() {
    std::vector<RingPtr> rings;
    for (std::uint64_t n = 2; n <= 16; ++n) rings.push_back(Ring::modular(n));
    rings.push_back(Ring::product(Ring::modular(2), Ring::modular(2)));
    rings.push_back(Ring::product(Ring::modular(2), Ring::modular(3)));
    rings.push_back(Ring::matrix_ring(Ring::modular(2), 2));
    rings.push_back(Ring::matrix_ring(Ring::modular(3), 2));
    return rings;
}

std::vector<RingPtr> parse_catalog(std::istream& in) {
    std::vector<RingPtr> rings;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r\n");
        rings.push_back(parse_ring(line.substr(first, last - first + 1)));
    }
    return rings;
}

} // namespace clearlab
