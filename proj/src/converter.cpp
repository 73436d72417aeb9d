#include <revmap/converter.hpp>
#include <revmap/errors.hpp>
#include <revmap/fanout.hpp>

#include <unordered_map>
#include <unordered_set>

namespace revmap
{

namespace
{

rev_gate bind( role_gate const& g, uint32_t const ( &lines )[3] )
{
  rev_gate result;
  for ( auto c : g.controls )
  {
    result.controls.push_back( lines[static_cast<std::size_t>( c )] );
  }
  result.target = lines[static_cast<std::size_t>( g.target )];
  return result;
}

std::string join_lines( std::vector<uint32_t> const& lines )
{
  std::string text;
  for ( auto l : lines )
  {
    text += ( text.empty() ? "" : "," ) + std::to_string( l );
  }
  return text.empty() ? "-" : text;
}

} // namespace

conversion_result convert( slotted_circuit const& slotted, template_options const& options )
{
  auto const& circuit = slotted.circuit;
  conversion_result result;
  auto& rev = result.circuit;
  rev.name = circuit.name;

  std::unordered_map<std::string, uint32_t> net_line;
  std::unordered_set<std::string> line_names;
  for ( auto const& pi : circuit.inputs )
  {
    const auto index = static_cast<uint32_t>( rev.lines.size() );
    line l;
    l.index = index;
    l.name = pi;
    l.origin = line_origin::primary_input;
    l.input_name = pi;
    rev.lines.push_back( std::move( l ) );
    net_line.emplace( pi, index );
    line_names.insert( pi );
  }

  std::size_t next_constant = 0u;
  auto allocate_constant = [&]( bool value ) {
    std::string name = "x" + std::to_string( next_constant++ );
    while ( line_names.count( name ) )
    {
      name += '_';
    }
    line_names.insert( name );
    const auto index = static_cast<uint32_t>( rev.lines.size() );
    line l;
    l.index = index;
    l.name = std::move( name );
    l.origin = line_origin::constant;
    l.constant_value = value;
    rev.lines.push_back( std::move( l ) );
    return index;
  };

  for ( std::size_t k = 1; k < slotted.slots.size(); ++k )
  {
    for ( auto id : slotted.slots[k].gates )
    {
      auto const& gate = *circuit.find_gate( id );
      auto const& tpl = template_for( gate.kind, options );

      trace_entry entry{ k, gate.name(), gate.kind, {}, {}, {} };
      uint32_t roles[3] = { 0u, 0u, 0u };
      for ( std::size_t pin = 0; pin < gate.inputs.size(); ++pin )
      {
        auto it = net_line.find( gate.inputs[pin] );
        if ( it == net_line.end() )
        {
          throw revmap_error( error_code::internal_role_clash,
                              "net " + gate.inputs[pin] + " of " + gate.name() + " is not bound to a line" );
        }
        roles[pin] = it->second;
        entry.input_lines.push_back( it->second );
      }
      if ( entry.input_lines.size() == 2u && entry.input_lines[0] == entry.input_lines[1] )
      {
        throw revmap_error( error_code::internal_role_clash,
                            "both inputs of " + gate.name() + " map to line " + std::to_string( roles[0] ) );
      }
      for ( auto value : tpl.constant_inputs )
      {
        roles[static_cast<std::size_t>( role::anc )] = allocate_constant( value );
        entry.ancilla_lines.push_back( roles[static_cast<std::size_t>( role::anc )] );
      }

      for ( auto const& g : tpl.gate_sequence )
      {
        rev.gates.push_back( bind( g, roles ) );
      }
      for ( auto const& net : gate.inputs )
      {
        net_line.erase( net );
      }
      for ( std::size_t o = 0; o < gate.outputs.size(); ++o )
      {
        const auto l = roles[static_cast<std::size_t>( tpl.output_roles.at( o ) )];
        net_line[gate.outputs[o]] = l;
        entry.output_lines.push_back( l );
      }
      result.trace.push_back( std::move( entry ) );
    }
  }

  for ( auto const& po : circuit.outputs )
  {
    auto it = net_line.find( po );
    if ( it == net_line.end() )
    {
      throw revmap_error( error_code::internal_role_clash, "primary output " + po + " is not bound to a line" );
    }
    auto& l = rev.lines[it->second];
    if ( l.terminal == line_terminal::primary_output )
    {
      throw revmap_error( error_code::internal_role_clash,
                          "primary outputs " + l.output_name + " and " + po + " share line " + l.name );
    }
    l.terminal = line_terminal::primary_output;
    l.output_name = po;
  }
  return result;
}

rev_circuit convert_circuit( slotted_circuit const& slotted, template_options const& options )
{
  return convert( slotted, options ).circuit;
}

std::vector<trace_entry> conversion_trace( slotted_circuit const& slotted, template_options const& options )
{
  return convert( slotted, options ).trace;
}

rev_circuit replay_trace( std::vector<trace_entry> const& trace, rev_circuit const& reference,
                          template_options const& options )
{
  rev_circuit result{ reference.name, reference.lines, {} };
  for ( auto const& entry : trace )
  {
    auto const& tpl = template_for( entry.kind, options );
    uint32_t roles[3] = { 0u, 0u, 0u };
    for ( std::size_t i = 0; i < entry.input_lines.size() && i < 2u; ++i )
    {
      roles[i] = entry.input_lines[i];
    }
    if ( !entry.ancilla_lines.empty() )
    {
      roles[static_cast<std::size_t>( role::anc )] = entry.ancilla_lines.front();
    }
    for ( auto const& g : tpl.gate_sequence )
    {
      result.gates.push_back( bind( g, roles ) );
    }
  }
  return result;
}

std::string format_trace( std::vector<trace_entry> const& trace )
{
  std::string text;
  for ( auto const& e : trace )
  {
    text += "slot " + std::to_string( e.slot ) + " " + e.gate + " " + std::string( to_string( e.kind ) ) +
            " in=" + join_lines( e.input_lines ) + " anc=" + join_lines( e.ancilla_lines ) +
            " out=" + join_lines( e.output_lines ) + "\n";
  }
  return text;
}

conversion_result compile( ir_circuit const& circuit, template_options const& options )
{
  require_valid( circuit );
  if ( auto cycle = detect_cycles( circuit ) )
  {
    throw feedback_error( std::move( *cycle ) );
  }
  return convert( slot_circuit( insert_copiers( circuit ) ), options );
}

} // namespace revmap
