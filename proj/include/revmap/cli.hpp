#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revmap
{

namespace exit_code
{
inline constexpr int success = 0;
inline constexpr int mismatch = 1;
inline constexpr int format_error = 2;
inline constexpr int unsupported = 3;
inline constexpr int usage = 4;
} // namespace exit_code

/*! \brief Runs one CLI invocation; `args` excludes the program name. */
int dispatch( std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err );

} // namespace revmap
