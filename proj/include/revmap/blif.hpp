#pragma once

#include "ir.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revmap
{

/*! \brief One row of a `.names` cover, e.g. pattern "1-" with output '1'. */
struct cover_row
{
  std::string pattern;
  char output{ '1' };
};

/*! \brief Result of cover classification: a gate kind, or a plain buffer (wire alias). */
struct cover_class
{
  bool buffer{};
  gate_kind kind{ gate_kind::NOT };

  bool operator==( cover_class const& ) const = default;
};

/*! \brief On-set as a bitmask over minterms; input 0 is the most significant pattern bit. */
std::optional<uint32_t> expand_on_set( std::vector<cover_row> const& rows, std::size_t num_inputs );

/*! \brief Classifies a cover over 1 or 2 inputs.
 *
 * Throws revmap_error(unrecognized_cover) when the expanded on-set is none of
 * NOT/AND/NAND/OR/NOR/XOR/XNOR/BUF, or when a row has output bit 0.
 * `gate` names the cover in the diagnostic.
 */
cover_class classify_cover( std::vector<cover_row> const& rows, std::size_t num_inputs,
                            std::string const& gate = "cover" );

/*! \brief Parses the plain BLIF subset; `.copy` is rejected. */
ir_circuit parse_blif( std::string_view text );

/*! \brief Parses the BLIF subset plus the `.copy <in> <out1> <out2>` extension. */
ir_circuit parse_intermediate( std::string_view text );

/*! \brief Writes a single-output-gate circuit; throws if it contains COPY gates. */
std::string write_blif( ir_circuit const& circuit );

std::string write_intermediate( ir_circuit const& circuit );

} // namespace revmap
