#pragma once

#include <string>

namespace ks13 {

/// Compact "value(err)" notation: the bracket carries the uncertainty on
/// the last digits, e.g. format_value_err(0.328, 0.018) == "0.328(18)".
/// The bracket keeps two significant digits when the uncertainty's
/// leading digit is 1 and one digit otherwise; the value is rounded to
/// the same decimal place. A non-positive or non-finite sigma yields the
/// bare value.
std::string format_value_err(double value, double sigma);

}  // namespace ks13
