#ifndef WILSONQ_CLI_HPP
#define WILSONQ_CLI_HPP

/**
 * @file cli.hpp
 * @brief Command-line front-end: compute single values, emit the Z / Z+ / M_k
 *        tables, run verification suites, and benchmark the balanced-k
 *        primality path.
 *
 * stdout carries data, stderr carries diagnostics. Exit codes: 0 = success
 * and all asserted checks hold, 1 = at least one asserted check failed,
 * 2 = usage or domain error.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wilsonq/congruence.hpp"
#include "wilsonq/numeric.hpp"

namespace wilsonq::cli {

enum class TableKind { kZ, kZPlus, kM };

// One table cell. `k` is -1 for the Z-type tables; `value` is empty for the
// undefined M-table cells (k >= n), rendered as null / an empty CSV field.
struct TableRow {
    std::int64_t k = -1;
    std::int64_t n = 0;
    std::optional<Rational> value;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

std::vector<TableRow> make_table(TableKind kind, std::int64_t max);

// Rendering is canonical: parse_* of a rendered table re-renders
// byte-identically.
std::string render_table_csv(TableKind kind, const std::vector<TableRow>& rows);
std::string render_table_json(TableKind kind, const std::vector<TableRow>& rows);
std::vector<TableRow> parse_table_csv(TableKind kind, const std::string& text);
std::vector<TableRow> parse_table_json(TableKind kind, const std::string& text);

// Formal-series identity checks wrapped in the flat report schema
// (modulus 0, no residues; mismatch index in the note).
std::vector<CongruenceReport> run_series_family(std::size_t order);

std::string render_verify_json(const std::string& command,
                               const std::vector<CongruenceReport>& reports,
                               const SuiteSummary& summary);
std::string render_verify_csv(const std::vector<CongruenceReport>& reports,
                              const SuiteSummary& summary);

// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wilsonq::cli

#endif
