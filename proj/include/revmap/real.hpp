#pragma once

#include "rev.hpp"

#include <string>
#include <string_view>

namespace revmap
{

/*! \brief Serializes to the `.real` dialect (version 2.0, t1/t2/t3 gates, target last). */
std::string write_real( rev_circuit const& circuit );

/*! \brief Inverse of write_real; `.real` carries no circuit name, so it is passed in. */
rev_circuit parse_real( std::string_view text, std::string name = {} );

} // namespace revmap
