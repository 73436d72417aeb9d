#pragma once

#include "ir.hpp"

#include <string>
#include <utility>
#include <vector>

namespace revmap
{

struct fanout_entry
{
  std::string net;
  std::size_t degree{};

  bool operator==( fanout_entry const& ) const = default;
};

/*! \brief Nets with two or more sinks, in first-appearance order. */
std::vector<fanout_entry> fanout_report( ir_circuit const& circuit );

/*! \brief Rewrites the circuit so that every net has exactly one sink.
 *
 * A net with d sinks gets a chain of d-1 COPY gates placed right after its
 * driver (PI-driven chains go first, in input order). Both outputs of each
 * copier are fresh `<net>__cp<k>` nets, so the original name stays the chain
 * input. If the net is a primary output, the driver is renamed instead and the
 * PO keeps the original name on the first copier output.
 *
 * Throws revmap_error(unsupported_construct) for a primary input that is also a
 * primary output and feeds gates, since neither name may change.
 */
ir_circuit insert_copiers( ir_circuit const& circuit );

} // namespace revmap
