#pragma once

#include "circnorm/exact.hpp"
#include "circnorm/sequences.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circnorm {

enum class Table { One, Two, Synthetic };

enum class IdentityKey {
    Table1Row1, Table1Row2, Table1Row3, Table1Row4, Table1Row5, Table1Row6, Table1Row7,
    Table2Row1, Table2Row2, Table2Row3, Table2Row4, Table2Row5, Table2Row6, Table2Row7,
    Table2Row8, Table2Row9,
    InnerLucasSquares,
};

inline constexpr int identity_count = 17;

/// AsStated: printed closed form survives the oracle sweep unchanged.
/// Corrected: printed form fails the sweep; an oracle-validated correction is used.
/// Garbled: printed text does not even evaluate to a valid identity; a
/// correction may still be attached.
enum class Status { AsStated, Corrected, Garbled };

enum class Family { B1 = 1, B2, B3, B4, B5, B6, B7, B8, B9, B10, B11, B12, B13, B14 };

inline constexpr std::array<Family, 14> all_families{
    Family::B1, Family::B2, Family::B3, Family::B4, Family::B5, Family::B6, Family::B7,
    Family::B8, Family::B9, Family::B10, Family::B11, Family::B12, Family::B13, Family::B14,
};

namespace detail {

// Term generators: entry i of the length-n sum/first row. All are pure
// iterative walks; the nested-sum rows accumulate their inner sum in the
// same pass instead of re-summing per k.

inline ExactInt t1r1_term(int i, int) { return fib(i); }
inline ExactInt t1r2_term(int i, int) { return fib(2 * i + 1); }
inline ExactInt t1r3_term(int i, int) { return fib(2 * i); }
inline ExactInt t1r4_term(int i, int) { return i * fib(i); }
inline ExactInt t1r5_term(int i, int n) { return fib(i) * fib(n - 1 - i); }

inline ExactInt t1r6_term(int i, int) {
    ExactInt sum = 0, a = 0, b = 1;
    for (int k = 0; k <= i; ++k) {
        sum += a * a;
        ExactInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return sum;
}

inline ExactInt t1r7_term(int i, int) { return fib(i) * fib(i + 1); }

inline ExactInt t2r1_term(int i, int) { return lucas(i); }
inline ExactInt t2r2_term(int i, int) { return lucas(2 * i + 1); }
inline ExactInt t2r3_term(int i, int) { return lucas(2 * i); }
inline ExactInt t2r4_term(int i, int) { return fib(i) * lucas(i); }
inline ExactInt t2r5_term(int i, int n) { return lucas(i) * fib(n - 1 - i); }
inline ExactInt t2r6_term(int i, int) { return fib(i) + lucas(i); }

inline ExactInt t2r7_term(int i, int) {
    ExactInt sum = 0, a = 2, b = 1;
    for (int k = 0; k <= i; ++k) {
        sum += a * a;
        ExactInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return sum;
}

inline ExactInt t2r8_term(int i, int) { return lucas(i) * lucas(i + 1); }
inline ExactInt t2r9_term(int i, int) { return i * lucas(i); }
inline ExactInt inner_sq_term(int i, int) { ExactInt l = lucas(i); return l * l; }

// Closed forms.

// ((-1)^n - 1)/2: 0 for even n, -1 for odd.
inline ExactInt parity_step(int n) { return (n % 2 == 0) ? ExactInt(0) : ExactInt(-1); }
// ((-1)^{n-1} * 5 - 3)/2: +1 for odd n, -4 for even.
inline ExactInt parity_step5(int n) { return (n % 2 == 0) ? ExactInt(-4) : ExactInt(1); }

inline ExactInt t1r1_closed(int n) { return fib(n + 1) - 1; }
inline ExactInt t1r2_closed(int n) { return fib(2 * n); }
inline ExactInt t1r3_closed(int n) { return fib(2 * n - 1) - 1; }
inline ExactInt t1r4_closed(int n) { return (n - 1) * fib(n + 1) - fib(n + 2) + 2; }
inline ExactInt t1r5_corrected(int n) { return exact_div((n - 1) * lucas(n - 1) - fib(n - 1), 5); }
inline ExactInt fib_sq_closed(int n) { return fib(n) * fib(n) + parity_step(n); }

inline ExactInt t2r1_closed(int n) { return lucas(n + 1) - 1; }
inline ExactInt t2r2_closed(int n) { return 2 * fib(2 * n + 1) - fib(2 * n) - 2; }
inline ExactInt t2r3_stated(int n) { return fib(2 * n + 1) + 2 * fib(2 * n) - 1; }
inline ExactInt t2r3_corrected(int n) { return lucas(2 * n - 1) + 1; }

inline ExactInt t2r4_closed(int n) {
    const ExactInt f = fib(n - 1);
    return 2 * f * f + f * fib(n) + ((n % 2 == 0) ? -1 : 1) - 1;
}

inline ExactInt t2r5_stated(int n) { return n * fib(n); }
inline ExactInt t2r5_corrected(int n) { return n * fib(n - 1); }
inline ExactInt t2r6_closed(int n) { return 4 * fib(n) + 2 * fib(n - 1) - 2; }
inline ExactInt t2r7_closed(int n) { return lucas(n) * lucas(n) + 2 * n + parity_step5(n); }
inline ExactInt t2r8_closed(int n) { return lucas(n) * lucas(n) + parity_step5(n); }

inline ExactInt t2r9_closed(int n) {
    return (3 * n - 5) * fib(n) + (n - 2) * fib(n - 1) - 2 * fib(n + 1) + 4;
}

inline ExactInt inner_sq_closed(int n) { return lucas(n - 1) * lucas(n) + 2; }

} // namespace detail

/// One catalog entry: the summand, the closed form as printed, its audit
/// status, and (when needed) the oracle-validated correction.
struct IdentityRecord {
    IdentityKey id;
    Table table;
    int row; // 1-based within its table; 0 for the synthetic entry
    std::string_view term_text;
    std::string_view printed_formula;
    Status status;
    std::string_view corrected_formula; // empty when the printed form stands
    ExactInt (*term)(int i, int n);
    ExactInt (*stated)(int n);    // null when the printed text is not evaluable
    ExactInt (*corrected)(int n); // null when no correction is needed
};

inline const std::array<IdentityRecord, identity_count>& identity_catalog() {
    using namespace detail;
    using K = IdentityKey;
    static const std::array<IdentityRecord, identity_count> records{{
        {K::Table1Row1, Table::One, 1, "F_i", "F_{n+1} - 1",
         Status::AsStated, "", &t1r1_term, &t1r1_closed, nullptr},
        {K::Table1Row2, Table::One, 2, "F_{2i+1}", "F_{2n}",
         Status::AsStated, "", &t1r2_term, &t1r2_closed, nullptr},
        {K::Table1Row3, Table::One, 3, "F_{2i}", "F_{2n-1} - 1",
         Status::AsStated, "", &t1r3_term, &t1r3_closed, nullptr},
        {K::Table1Row4, Table::One, 4, "i F_i", "(n-1)F_{n+1} - F_{n+2} + 2",
         Status::AsStated, "", &t1r4_term, &t1r4_closed, nullptr},
        {K::Table1Row5, Table::One, 5, "F_i F_{n-1-i}", "(n F_{n+1} + (n+2) F_{n+1-2}) / 5",
         Status::Garbled, "((n-1) L_{n-1} - F_{n-1}) / 5",
         &t1r5_term, nullptr, &t1r5_corrected},
        {K::Table1Row6, Table::One, 6, "sum_{k=0}^{i} F_k^2", "F_n^2 + ((-1)^n - 1)/2",
         Status::AsStated, "", &t1r6_term, &fib_sq_closed, nullptr},
        {K::Table1Row7, Table::One, 7, "F_i F_{i+1}", "F_n^2 + ((-1)^n - 1)/2",
         Status::AsStated, "", &t1r7_term, &fib_sq_closed, nullptr},
        {K::Table2Row1, Table::Two, 1, "L_i", "L_{n+1} - 1",
         Status::AsStated, "", &t2r1_term, &t2r1_closed, nullptr},
        {K::Table2Row2, Table::Two, 2, "L_{2i+1}", "2F_{2n+1} - F_{2n} - 2",
         Status::AsStated, "", &t2r2_term, &t2r2_closed, nullptr},
        {K::Table2Row3, Table::Two, 3, "L_{2i}", "F_{2n+1} + 2F_{2n} - 1",
         Status::Corrected, "L_{2n-1} + 1", &t2r3_term, &t2r3_stated, &t2r3_corrected},
        {K::Table2Row4, Table::Two, 4, "F_i L_i", "2F_{n-1}^2 + F_{n-1}F_n + (-1)^{n-1} - 1",
         Status::AsStated, "", &t2r4_term, &t2r4_closed, nullptr},
        {K::Table2Row5, Table::Two, 5, "L_i F_{n-1-i}", "n F_n",
         Status::Corrected, "n F_{n-1}", &t2r5_term, &t2r5_stated, &t2r5_corrected},
        {K::Table2Row6, Table::Two, 6, "F_i + L_i", "4F_n + 2F_{n-1} - 2",
         Status::AsStated, "", &t2r6_term, &t2r6_closed, nullptr},
        {K::Table2Row7, Table::Two, 7, "sum_{k=0}^{i} L_k^2", "L_n^2 + 2n + ((-1)^{n-1} 5 - 3)/2",
         Status::AsStated, "", &t2r7_term, &t2r7_closed, nullptr},
        {K::Table2Row8, Table::Two, 8, "L_i L_{i+1}", "L_n^2 + ((-1)^{n-1} 5 - 3)/2",
         Status::AsStated, "", &t2r8_term, &t2r8_closed, nullptr},
        {K::Table2Row9, Table::Two, 9, "i L_i", "(3n-5)F_n + (n-2)F_{n-1} - 2F_{n+1} + 4",
         Status::AsStated, "", &t2r9_term, &t2r9_closed, nullptr},
        {K::InnerLucasSquares, Table::Synthetic, 0, "L_i^2", "L_{n-1} L_n + 2",
         Status::AsStated, "", &inner_sq_term, &inner_sq_closed, nullptr},
    }};
    return records;
}

inline const IdentityRecord& record(IdentityKey id) {
    return identity_catalog()[static_cast<std::size_t>(id)];
}

namespace detail {
inline void check_order(int n) {
    if (n < 1) throw std::invalid_argument("order must be at least 1");
}
} // namespace detail

/// Entry i of the length-n sum for one catalog identity.
inline ExactInt term(IdentityKey id, int i, int n) {
    detail::check_order(n);
    if (i < 0 || i >= n) throw std::out_of_range("term index outside 0..n-1");
    return record(id).term(i, n);
}

/// Ground truth for every identity: literal summation of the terms.
inline ExactInt direct_sum(IdentityKey id, int n) {
    detail::check_order(n);
    const auto& r = record(id);
    ExactInt sum = 0;
    for (int i = 0; i < n; ++i) sum += r.term(i, n);
    return sum;
}

struct ClosedSum {
    ExactInt value;
    Status status;
};

/// Best available closed form (the correction when one exists, else the
/// printed form). Empty only for a garbled entry with no correction.
inline std::optional<ClosedSum> closed_sum(IdentityKey id, int n) {
    detail::check_order(n);
    const auto& r = record(id);
    if (r.corrected) return ClosedSum{r.corrected(n), r.status};
    if (r.stated) return ClosedSum{r.stated(n), r.status};
    return std::nullopt;
}

/// Value of the closed form exactly as printed, when it is evaluable.
inline std::optional<ExactInt> stated_sum(IdentityKey id, int n) {
    detail::check_order(n);
    const auto& r = record(id);
    if (r.stated) return r.stated(n);
    return std::nullopt;
}

/// One matrix family: which identity supplies its first row and claimed
/// norm, plus the row/norm text as printed in the source theorems.
struct FamilySpec {
    Family id;
    IdentityKey identity;
    std::string_view row_text;
    std::string_view printed_norm;
};

inline const std::array<FamilySpec, 14>& family_catalog() {
    using K = IdentityKey;
    static const std::array<FamilySpec, 14> specs{{
        {Family::B1, K::Table1Row4, "(0 F_0, 1 F_1, ..., (n-1) F_{n-1})",
         "(n-1)F_{n+1} - F_{n+2} + 2"},
        {Family::B2, K::Table1Row7, "(F_0 F_1, F_1 F_2, ..., F_{n-1} F_n)",
         "F_n^2 + ((-1)^n - 1)/2"},
        {Family::B3, K::Table1Row2, "(F_1, F_3, ..., F_{2n-1})", "F_{2n}"},
        {Family::B4, K::Table1Row3, "(F_0, F_2, ..., F_{2n-2})", "F_{2n-1} - 1"},
        {Family::B5, K::Table1Row5, "(F_0 F_{n-1}, F_1 F_{n-2}, ..., F_{n-1} F_0)",
         "(n F_{n+1} + (n+2) F_{n+1} - 2) / 5"},
        {Family::B6, K::Table2Row9, "(0 L_0, 1 L_1, ..., (n-1) L_{n-1})",
         "(3n-5)F_n + (n-2)F_{n-1} - 2F_{n+1} + 4"},
        {Family::B7, K::InnerLucasSquares, "(L_0^2, L_1^2, ..., L_{n-1}^2)",
         "L_{n-1} L_n + 2"},
        {Family::B8, K::Table2Row2, "(L_1, L_3, ..., L_{2n-1})", "2F_{2n+1} - F_{2n} - 2"},
        {Family::B9, K::Table2Row3, "(L_0, L_2, ..., L_{2n-2})", "F_{2n+1} + 2F_{2n} - 1"},
        {Family::B10, K::Table2Row8, "(L_0 L_1, L_1 L_2, ..., L_{n-1} L_n)",
         "L_n^2 - 4 (n even); L_n^2 + 1 (n odd)"},
        {Family::B11, K::Table2Row7, "(L_0^2, L_0^2 + L_1^2, ..., sum_{k=0}^{n-1} L_k^2)",
         "L_n^2 + 2n - 4 (n even); L_n^2 + 2n + 1 (n odd)"},
        {Family::B12, K::Table2Row4, "(F_0 L_0, F_1 L_1, ..., F_{n-1} L_{n-1})",
         "2F_{n-1}^2 + F_{n-1}F_n + (-1)^{n-1} - 1"},
        {Family::B13, K::Table2Row6, "(F_0 + L_0, F_1 + L_1, ..., F_{n-1} + L_{n-1})",
         "4F_n + 2F_{n-1} - 2"},
        {Family::B14, K::Table2Row5, "(L_0 F_{n-1}, L_1 F_{n-2}, ..., L_{n-1} F_0)", "n F_n"},
    }};
    return specs;
}

inline const FamilySpec& family_spec(Family f) {
    return family_catalog()[static_cast<std::size_t>(f) - 1];
}

inline std::vector<ExactInt> family_first_row(Family f, int n) {
    detail::check_order(n);
    const auto& r = record(family_spec(f).identity);
    std::vector<ExactInt> row(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = r.term(i, n);
    return row;
}

inline std::optional<ClosedSum> family_closed_norm(Family f, int n) {
    return closed_sum(family_spec(f).identity, n);
}

inline std::optional<ExactInt> family_stated_norm(Family f, int n) {
    return stated_sum(family_spec(f).identity, n);
}

inline Status family_status(Family f) {
    return record(family_spec(f).identity).status;
}

// Naming and parsing helpers.

inline int family_index(Family f) { return static_cast<int>(f); }

inline std::string family_name(Family f) {
    return "B" + std::to_string(family_index(f));
}

inline std::optional<Family> parse_family(std::string_view text) {
    if (text.size() < 2 || (text[0] != 'B' && text[0] != 'b')) return std::nullopt;
    int value = 0;
    for (char c : text.substr(1)) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
        if (value > 14) return std::nullopt;
    }
    if (value < 1) return std::nullopt;
    return static_cast<Family>(value);
}

inline std::string_view table_name(Table t) {
    switch (t) {
        case Table::One: return "Table1";
        case Table::Two: return "Table2";
        default: return "Synthetic";
    }
}

inline std::string identity_name(IdentityKey id) {
    const auto& r = record(id);
    if (r.table == Table::Synthetic) return "InnerLucasSquares";
    return std::string(table_name(r.table)) + ".row" + std::to_string(r.row);
}

inline std::string_view status_name(Status s) {
    switch (s) {
        case Status::AsStated: return "AsStated";
        case Status::Corrected: return "Corrected";
        default: return "Garbled";
    }
}

} // namespace circnorm
