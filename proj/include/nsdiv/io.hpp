#ifndef NSDIV_IO_HPP
#define NSDIV_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsdiv/criteria.hpp"
#include "nsdiv/nslattice.hpp"
#include "nsdiv/search.hpp"

namespace nsdiv {

/// A loaded input: either a period matrix (NS computed here) or a saved
/// polarized-ns document.
struct Problem {
    int n = 0;
    std::optional<PeriodMatrix> tau;
    PolarizedNS pns;
    /// Advisory messages, e.g. a failed Siegel sample check.
    std::vector<std::string> warnings;
};

/// Parses either JSON schema. Throws ParseError for malformed or unknown
/// fields and DomainError for mathematically invalid input.
Problem load_problem(std::string_view json_text);

/// Reads a file ("-" for stdin) and calls load_problem. Throws ParseError if
/// the file cannot be read.
Problem load_problem_file(const std::string& path);

enum class Format { text, json, csv };

Format parse_format(std::string_view s);

std::string format_qform(int n, int r, const PolyScalar& q, Format f);
std::string format_ns(const PolarizedNS& pns, Format f);
std::string format_records(const PolarizedNS& pns, const std::vector<DivisorRecord>& records, Format f);
/// Three-column layout: divisor class, (Z . Theta^{n-1}), (E . Theta).
std::string format_table(const PolarizedNS& pns, const std::vector<DivisorRecord>& records, Format f);
std::string format_report(const ClassificationReport& report, const std::vector<EllipticCover>* covers, Format f);

}  // namespace nsdiv

#endif  // NSDIV_IO_HPP
