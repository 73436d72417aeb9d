#include <revmap/netlist.hpp>

namespace revmap
{

net_record& net_list::get_or_add( std::string const& net )
{
  auto [it, inserted] = index_.emplace( net, records_.size() );
  if ( inserted )
  {
    records_.push_back( { net, {}, {} } );
  }
  return records_[it->second];
}

net_record const* net_list::find( std::string const& net ) const
{
  auto it = index_.find( net );
  return it == index_.end() ? nullptr : &records_[it->second];
}

net_list build_netlist( ir_circuit const& circuit )
{
  net_list nl;
  for ( auto const& pi : circuit.inputs )
  {
    nl.get_or_add( pi ).source = { source_kind::primary_input, 0u };
  }
  for ( auto const& po : circuit.outputs )
  {
    nl.get_or_add( po ).sinks.push_back( net_sink::po() );
  }
  for ( auto const& gate : circuit.gates )
  {
    for ( std::size_t pin = 0; pin < gate.inputs.size(); ++pin )
    {
      nl.get_or_add( gate.inputs[pin] ).sinks.push_back( net_sink::gate( gate.id, static_cast<uint32_t>( pin ) ) );
    }
    for ( auto const& net : gate.outputs )
    {
      nl.get_or_add( net ).source = { source_kind::gate, gate.id };
    }
  }
  return nl;
}

} // namespace revmap
