#include <revmap/errors.hpp>
#include <revmap/netlist.hpp>
#include <revmap/slotting.hpp>

#include <algorithm>
#include <unordered_set>

namespace revmap
{

slotted_circuit slot_circuit( ir_circuit const& circuit )
{
  const auto netlist = build_netlist( circuit );
  for ( auto const& record : netlist.records() )
  {
    if ( record.sinks.size() > 1u )
    {
      throw revmap_error( error_code::fanout_present, "net " + record.net + " has " +
                                                          std::to_string( record.sinks.size() ) +
                                                          " sinks; run fanout preprocessing first" );
    }
  }

  slotted_circuit result{ circuit, {} };
  result.slots.push_back( { {}, circuit.inputs } );

  std::vector<bool> assigned( circuit.gates.size(), false );
  std::size_t remaining = circuit.gates.size();

  while ( remaining > 0u )
  {
    auto const& previous = result.slots.back().nets;
    const std::unordered_set<std::string> available( previous.begin(), previous.end() );

    slot current;
    std::unordered_set<std::string> consumed;
    for ( std::size_t i = 0; i < circuit.gates.size(); ++i )
    {
      auto const& gate = circuit.gates[i];
      if ( assigned[i] || !std::all_of( gate.inputs.begin(), gate.inputs.end(),
                                        [&]( auto const& net ) { return available.count( net ) > 0u; } ) )
      {
        continue;
      }
      assigned[i] = true;
      --remaining;
      current.gates.push_back( gate.id );
      consumed.insert( gate.inputs.begin(), gate.inputs.end() );
      current.nets.insert( current.nets.end(), gate.outputs.begin(), gate.outputs.end() );
    }

    if ( current.gates.empty() )
    {
      std::string pending;
      for ( std::size_t i = 0; i < circuit.gates.size(); ++i )
      {
        if ( !assigned[i] )
        {
          pending += ( pending.empty() ? "" : " " ) + circuit.gates[i].name();
        }
      }
      throw revmap_error( error_code::stuck, "slotting stuck after slot " + std::to_string( result.slots.size() - 1u ) +
                                                 "; unassigned gates: " + pending );
    }

    for ( auto const& net : previous )
    {
      if ( !consumed.count( net ) )
      {
        current.nets.push_back( net );
      }
    }
    result.slots.push_back( std::move( current ) );
  }
  return result;
}

std::string format_slot_table( slotted_circuit const& slotted )
{
  std::string text = "slot | gates | nets\n";
  for ( std::size_t k = 0; k < slotted.slots.size(); ++k )
  {
    auto const& s = slotted.slots[k];
    text += std::to_string( k ) + " |";
    for ( auto id : s.gates )
    {
      text += " " + slotted.circuit.find_gate( id )->name();
    }
    text += " |";
    for ( auto const& net : s.nets )
    {
      text += " " + net;
    }
    text += "\n";
  }
  return text;
}

} // namespace revmap
