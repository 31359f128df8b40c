#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qtrend/model.hpp"

namespace qtrend {

/// Parses the line-oriented model format (.qtm):
///
///   # comment
///   @polarity standard|swapped
///   @coupling weak|strong
///   @var NAME [value=SET] [desire=inc|dec|neutral]
///   TYPE X Y [w=REAL] [coupling=weak|strong]
///
/// Keywords and relation types are case-insensitive; names are not.
/// Variables first used in a relation are declared with defaults.
/// Throws Error with the offending line number.
TrendModel parse_model(std::string_view text);

/// Canonical text; parse_model(serialize_model(m)) == m. Only the @var lines
/// needed to reproduce declaration order and non-default settings are emitted.
std::string serialize_model(const TrendModel& model);

/// Shortest decimal text that parses back to the same double.
std::string format_real(double value);

bool is_identifier(std::string_view name) noexcept;

struct CorrelationMatrix {
  std::vector<std::string> names;
  std::vector<std::vector<double>> entries;

  /// Throws NotSquare, EntryOutOfRange, DiagonalNotUnit or NotSymmetric.
  void validate(double tolerance = 1e-9) const;
};

/// CSV with a header row of names (optionally preceded by a corner cell),
/// then one row per variable: name followed by n reals.
CorrelationMatrix parse_correlation_csv(std::string_view text);

/// INC for c > threshold, DEC for c < -threshold, nothing otherwise; one
/// relation per pair i < j in row-major order, weighted by |c|.
TrendModel from_correlation(const CorrelationMatrix& matrix, double threshold = 0.0);

}  // namespace qtrend
