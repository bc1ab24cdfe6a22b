#pragma once

#include "circnorm/catalog.hpp"
#include "circnorm/circulant.hpp"
#include "circnorm/config.hpp"
#include "circnorm/table3.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace circnorm {

/// Pass requires every route that ran to agree with the exact row sum.
/// When several routes fail at once, the most structural failure wins:
/// stated formula, then printed table entry, then floating spectrum.
enum class Outcome { Pass, StatedFormulaMismatch, TableEntryMismatch, FloatDivergence };

inline std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "Pass";
        case Outcome::StatedFormulaMismatch: return "StatedFormulaMismatch";
        case Outcome::TableEntryMismatch: return "TableEntryMismatch";
        default: return "FloatDivergence";
    }
}

/// Every route's value for one (family, order) pair. The oracle is the
/// exact first-row sum; everything else is judged against it.
struct VerificationReport {
    Family family = Family::B1;
    int n = 0;
    ExactInt oracle;
    std::optional<ExactInt> closed_stated; // empty when the printed form is not evaluable
    std::optional<ExactInt> closed_used;   // empty only for garbled-without-correction
    Status closed_status = Status::AsStated;
    std::optional<double> spectral_float; // empty when the float route was skipped
    ExactInt one_norm_val;
    Outcome outcome = Outcome::Pass;
};

inline Circulant family_circulant(Family f, int n) {
    return Circulant::from_exact(family_first_row(f, n));
}

/// Cross-validates one family at one order. The float route is skipped
/// (reported empty, never fatal) when the row or its sum does not fit in
/// finite doubles, or when the caller opted out; exact routes always run.
inline VerificationReport verify_family(Family f, int n, const Tolerances& tol = {},
                                        bool attempt_float = true,
                                        DftKernel kernel = DftKernel::Direct) {
    const Circulant c = family_circulant(f, n);

    VerificationReport r;
    r.family = f;
    r.n = n;
    r.oracle = perron_row_sum(c);
    r.one_norm_val = one_norm(c);
    r.closed_stated = family_stated_norm(f, n);
    r.closed_status = family_status(f);
    if (auto closed = family_closed_norm(f, n)) r.closed_used = closed->value;
    if (attempt_float && c.has_real_row() && fits_finite_double(r.oracle))
        r.spectral_float = spectral_norm(c, kernel);

    const bool stated_bad = r.closed_stated && *r.closed_stated != r.oracle;
    const bool catalog_bad =
        !r.closed_used || *r.closed_used != r.oracle || r.one_norm_val != r.oracle;
    const auto printed = table3_printed_value(f, n);
    const bool table_bad = printed && ExactInt(*printed) != r.oracle;
    bool float_bad = false;
    if (r.spectral_float) {
        const double target = to_double(r.oracle);
        float_bad = std::abs(*r.spectral_float - target) > tol.spectral_rel * std::max(1.0, target);
    }

    if (stated_bad || catalog_bad) r.outcome = Outcome::StatedFormulaMismatch;
    else if (table_bad) r.outcome = Outcome::TableEntryMismatch;
    else if (float_bad) r.outcome = Outcome::FloatDivergence;
    else r.outcome = Outcome::Pass;
    return r;
}

/// One printed grid cell vs the exact oracle. For a mismatch, swap_partner
/// is the family whose true value was printed here, when one exists.
struct TableCell {
    Family family = Family::B1;
    int n = 0;
    long long printed = 0;
    ExactInt computed;
    bool match = false;
    std::optional<Family> swap_partner;
};

struct TableAudit {
    std::vector<TableCell> cells; // all 70, row-major by order then family

    std::vector<TableCell> discrepancies() const {
        std::vector<TableCell> out;
        for (const auto& c : cells)
            if (!c.match) out.push_back(c);
        return out;
    }
};

/// Recomputes the printed grid from the exact oracle and annotates every
/// discrepancy. Partner choice prefers a mutual swap (each one's oracle
/// value printed in the other's cell), then the lowest family index.
inline TableAudit reproduce_table3() {
    TableAudit audit;
    for (std::size_t oi = 0; oi < table3_orders.size(); ++oi) {
        const int n = table3_orders[oi];
        std::array<ExactInt, 14> computed;
        for (std::size_t fi = 0; fi < 14; ++fi) {
            ExactInt sum = 0;
            for (const auto& x : family_first_row(all_families[fi], n)) sum += x;
            computed[fi] = sum;
        }
        for (std::size_t fi = 0; fi < 14; ++fi) {
            TableCell cell;
            cell.family = all_families[fi];
            cell.n = n;
            cell.printed = table3_printed[oi][fi];
            cell.computed = computed[fi];
            cell.match = computed[fi] == cell.printed;
            if (!cell.match) {
                std::optional<Family> one_way;
                for (std::size_t gi = 0; gi < 14 && !cell.swap_partner; ++gi) {
                    if (gi == fi || computed[gi] != cell.printed) continue;
                    if (table3_printed[oi][gi] == computed[fi]) cell.swap_partner = all_families[gi];
                    else if (!one_way) one_way = all_families[gi];
                }
                if (!cell.swap_partner) cell.swap_partner = one_way;
            }
            audit.cells.push_back(std::move(cell));
        }
    }
    return audit;
}

struct FamilySummary {
    Family family = Family::B1;
    int pass = 0;
    int flagged = 0;
};

struct ScanReport {
    int lo = 0;
    int hi = 0;
    int float_max = 0;
    std::vector<VerificationReport> reports; // ordered by (family, n)
    std::vector<FamilySummary> summary;
};

/// Verifies each family over lo..hi. The float route runs only up to
/// float_max; exact routes cover the whole range.
inline ScanReport scan(std::vector<Family> families, int lo, int hi, const Tolerances& tol = {},
                       int float_max = default_float_max_order,
                       DftKernel kernel = DftKernel::Direct) {
    if (lo < 1 || hi < lo)
        throw std::invalid_argument("scan range must satisfy 1 <= lo <= hi");
    std::sort(families.begin(), families.end());
    families.erase(std::unique(families.begin(), families.end()), families.end());

    ScanReport out;
    out.lo = lo;
    out.hi = hi;
    out.float_max = float_max;
    for (Family f : families) {
        FamilySummary s;
        s.family = f;
        for (int n = lo; n <= hi; ++n) {
            auto rep = verify_family(f, n, tol, n <= float_max, kernel);
            (rep.outcome == Outcome::Pass ? s.pass : s.flagged) += 1;
            out.reports.push_back(std::move(rep));
        }
        out.summary.push_back(s);
    }
    return out;
}

} // namespace circnorm
