#pragma once

// JSON records for the report types and CSV for tables. Numbers are written
// with 17 significant digits so that parsing reproduces them exactly.

#include <iosfwd>
#include <map>
#include <string>

#include "dilbasis/appendix_bounds.hpp"
#include "dilbasis/criterion.hpp"
#include "dilbasis/profiles.hpp"
#include "dilbasis/thresholds.hpp"

namespace dilbasis {

std::string to_json(const CriterionReport& r, int indent = 2);
std::string to_json(const TwoTermReport& r, int indent = 2);
std::string to_json(const PSineMultiTermReport& r, int indent = 2);
std::string to_json(const PSineThreeTermReport& r, int indent = 2);
std::string to_json(const ThresholdValue& v, int indent = 2);
std::string to_json(const std::map<std::string, ThresholdValue>& values, int indent = 2);
std::string to_json(const BoundResult& r, int indent = 2);
std::string to_json(const IntervalBound& r, int indent = 2);
std::string to_json(const WitnessResult& r, int indent = 2);
std::string to_json(const Table& t, int indent = 2);

/// Header row, then one line per row; LF endings, '.' decimal separator.
/// Fewer than 17 digits is display rounding and does not round-trip.
void write_csv(std::ostream& out, const Table& t, int digits = 17);
/// Inverse of write_csv. Throws std::invalid_argument on malformed input.
Table read_csv(std::istream& in);

/// "%.<digits>g", with nan / inf spelled as such.
std::string format_number(double x, int digits = 17);

}  // namespace dilbasis
