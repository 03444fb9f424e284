#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "udesign/design.hpp"

namespace udesign {

/// Text format:
///
///   design v=<v> b=<b> p=<p>
///   dense <C(v,b) values in colex order>
///
/// or, after the header, a line `sparse` followed by one `e1,...,eb=value`
/// line per nonzero block. Lines starting with `#` after the header are
/// comments. The text must end with a newline.
enum class DesignFormat { Dense, Sparse };

class DesignParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_design(std::ostream& out, const Design& u, DesignFormat format = DesignFormat::Dense);
std::string format_design(const Design& u, DesignFormat format = DesignFormat::Dense);

/// Throws DesignParseError on any deviation from the format.
Design parse_design(std::string_view text);
Design read_design(std::istream& in);

}  // namespace udesign
