#ifndef SUPERCODIM_REPORT_HPP
#define SUPERCODIM_REPORT_HPP

#include <string>
#include <string_view>

#include "supercodim/codimension.hpp"
#include "supercodim/exponent.hpp"

namespace supercodim {

/// Machine-readable reports: JSON documents following schema/report.schema.json.
/// Exact integers and rationals are decimal strings; reals are objects
/// {"value", "precision_bits", "error_log2"}. Keys keep a fixed order, so
/// identical inputs give byte-identical output.
std::string to_machine(const CodimensionTable& table);
std::string to_machine(const ExponentReport& report);

/// Inverses of to_machine; throw ParseError on malformed documents.
CodimensionTable codimension_table_from_machine(std::string_view text);
ExponentReport exponent_report_from_machine(std::string_view text);

/// Human-readable aligned tables.
std::string to_table(const CodimensionTable& table);
std::string to_table(const ExponentReport& report);

/// Real from its decimal rendering at a given precision.
Real parse_real(std::string_view decimal, unsigned precision_bits, long error_log2);

}  // namespace supercodim

#endif
