#pragma once

#include "ir.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace revmap
{

struct slot
{
  /*! \brief Gate ids in declaration order; empty for slot 0. */
  std::vector<uint32_t> gates;
  /*! \brief New gate outputs first (gate order), then nets passing through from the previous slot. */
  std::vector<std::string> nets;

  bool operator==( slot const& ) const = default;
};

struct slotted_circuit
{
  ir_circuit circuit;
  std::vector<slot> slots;
};

/*! \brief Partitions a fanout-free, acyclic circuit into time slots.
 *
 * Slot 0 holds the primary inputs. Slot k holds every unassigned gate whose
 * inputs are all available in slot k-1, the outputs of those gates, and the
 * slot k-1 nets they did not consume. The walk ends when every gate is
 * assigned; the last net set is then the PO set plus any dead nets (unused
 * inputs, unread gate outputs).
 *
 * Throws revmap_error(fanout_present) if a net has several sinks, and
 * revmap_error(stuck) if no gate qualifies while gates remain.
 */
slotted_circuit slot_circuit( ir_circuit const& circuit );

/*! \brief Slot table, one row per slot: `<k> | <gates> | <nets>`. */
std::string format_slot_table( slotted_circuit const& slotted );

} // namespace revmap
