#include <revmap/errors.hpp>
#include <revmap/fanout.hpp>
#include <revmap/netlist.hpp>

#include <map>
#include <unordered_map>
#include <unordered_set>

namespace revmap
{

std::vector<fanout_entry> fanout_report( ir_circuit const& circuit )
{
  std::vector<fanout_entry> report;
  const auto netlist = build_netlist( circuit );
  for ( auto const& record : netlist.records() )
  {
    if ( record.sinks.size() >= 2u )
    {
      report.push_back( { record.net, record.sinks.size() } );
    }
  }
  return report;
}

namespace
{

class name_pool
{
public:
  explicit name_pool( ir_circuit const& circuit )
  {
    used_.insert( circuit.inputs.begin(), circuit.inputs.end() );
    used_.insert( circuit.outputs.begin(), circuit.outputs.end() );
    for ( auto const& gate : circuit.gates )
    {
      used_.insert( gate.inputs.begin(), gate.inputs.end() );
      used_.insert( gate.outputs.begin(), gate.outputs.end() );
    }
  }

  /* `<net>__cp<k>`, with extra underscores until unused */
  std::string copy_net( std::string const& net, std::size_t k )
  {
    std::string separator = "__";
    for ( ;; separator += '_' )
    {
      auto candidate = net + separator + "cp" + std::to_string( k );
      if ( used_.insert( candidate ).second )
      {
        return candidate;
      }
    }
  }

private:
  std::unordered_set<std::string> used_;
};

} // namespace

ir_circuit insert_copiers( ir_circuit const& circuit )
{
  const auto nl = build_netlist( circuit );
  name_pool names( circuit );

  ir_circuit result = circuit;
  std::unordered_map<uint32_t, std::size_t> position;
  for ( std::size_t i = 0; i < result.gates.size(); ++i )
  {
    position.emplace( result.gates[i].id, i );
  }
  /* chains keyed by the net they split; emitted right after the driver */
  std::map<std::string, std::vector<ir_gate>> chains;
  /* driver output renames for PO nets */
  std::map<std::string, std::string> driver_rename;

  for ( auto const& record : nl.records() )
  {
    if ( record.sinks.size() < 2u || record.source.kind == source_kind::none )
    {
      continue;
    }
    const bool feeds_po = record.sinks.front().primary_output;
    std::size_t next = 0u;

    std::string current = record.net;
    if ( feeds_po )
    {
      if ( record.source.kind == source_kind::primary_input )
      {
        throw revmap_error( error_code::unsupported_construct,
                            "primary input " + record.net + " is also a primary output and feeds gates" );
      }
      current = names.copy_net( record.net, next++ );
      driver_rename.emplace( record.net, current );
    }

    std::vector<std::string> endpoints;
    auto& chain = chains[record.net];
    for ( std::size_t j = 1u; j < record.sinks.size(); ++j )
    {
      auto first = ( feeds_po && j == 1u ) ? record.net : names.copy_net( record.net, next++ );
      auto second = names.copy_net( record.net, next++ );
      chain.push_back( { 0u, gate_kind::COPY, { current }, { first, second }, {} } );
      endpoints.push_back( std::move( first ) );
      current = std::move( second );
    }
    endpoints.push_back( std::move( current ) );

    for ( std::size_t s = 0; s < record.sinks.size(); ++s )
    {
      auto const& sink = record.sinks[s];
      if ( !sink.primary_output )
      {
        result.gates[position.at( sink.gate_id )].inputs[sink.pin] = endpoints[s];
      }
    }
  }

  if ( chains.empty() )
  {
    return result;
  }

  std::vector<ir_gate> gates;
  gates.reserve( circuit.gates.size() + nl.size() );
  auto emit_chain = [&]( std::string const& net ) {
    if ( auto it = chains.find( net ); it != chains.end() )
    {
      gates.insert( gates.end(), it->second.begin(), it->second.end() );
    }
  };
  for ( auto const& pi : circuit.inputs )
  {
    emit_chain( pi );
  }
  for ( auto& gate : result.gates )
  {
    std::vector<std::string> original_outputs = gate.outputs;
    for ( auto& net : gate.outputs )
    {
      if ( auto it = driver_rename.find( net ); it != driver_rename.end() )
      {
        net = it->second;
      }
    }
    gates.push_back( std::move( gate ) );
    for ( auto const& net : original_outputs )
    {
      emit_chain( net );
    }
  }
  result.gates = std::move( gates );
  result.renumber();
  return result;
}

} // namespace revmap
