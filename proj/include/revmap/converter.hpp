#pragma once

#include "mapping_lib.hpp"
#include "rev.hpp"
#include "slotting.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace revmap
{

/*! \brief One gate replacement, in the order replacements happen. */
struct trace_entry
{
  std::size_t slot{};
  std::string gate;
  gate_kind kind{};
  /*! \brief Lines bound to in1 (and in2). */
  std::vector<uint32_t> input_lines;
  /*! \brief Constant lines allocated for this gate. */
  std::vector<uint32_t> ancilla_lines;
  /*! \brief Lines carrying the gate outputs afterwards. */
  std::vector<uint32_t> output_lines;

  bool operator==( trace_entry const& ) const = default;
};

struct conversion_result
{
  rev_circuit circuit;
  std::vector<trace_entry> trace;
};

/*! \brief Replaces every gate slot-by-slot with its library template.
 *
 * PI lines come first in input order; each template constant becomes a new
 * line appended in allocation order and named `x<k>`. Lines holding PO nets at
 * the end get PO terminals, all others are garbage.
 */
conversion_result convert( slotted_circuit const& slotted, template_options const& options = {} );

rev_circuit convert_circuit( slotted_circuit const& slotted, template_options const& options = {} );

std::vector<trace_entry> conversion_trace( slotted_circuit const& slotted, template_options const& options = {} );

/*! \brief Rebuilds the gate list from a trace; lines are taken from `reference`. */
rev_circuit replay_trace( std::vector<trace_entry> const& trace, rev_circuit const& reference,
                          template_options const& options = {} );

std::string format_trace( std::vector<trace_entry> const& trace );

/*! \brief validate, detect cycles, insert copiers, slot, convert. */
conversion_result compile( ir_circuit const& circuit, template_options const& options = {} );

} // namespace revmap
