#include <revmap/errors.hpp>
#include <revmap/ir.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace revmap
{

std::string_view to_string( gate_kind kind )
{
  switch ( kind )
  {
  case gate_kind::NOT: return "NOT";
  case gate_kind::AND: return "AND";
  case gate_kind::NAND: return "NAND";
  case gate_kind::OR: return "OR";
  case gate_kind::NOR: return "NOR";
  case gate_kind::XOR: return "XOR";
  case gate_kind::XNOR: return "XNOR";
  case gate_kind::COPY: return "COPY";
  }
  return "?";
}

std::optional<gate_kind> gate_kind_from_string( std::string_view name )
{
  for ( auto kind : all_gate_kinds )
  {
    if ( to_string( kind ) == name )
    {
      return kind;
    }
  }
  return std::nullopt;
}

std::size_t input_arity( gate_kind kind )
{
  return ( kind == gate_kind::NOT || kind == gate_kind::COPY ) ? 1u : 2u;
}

std::size_t output_arity( gate_kind kind )
{
  return kind == gate_kind::COPY ? 2u : 1u;
}

bool evaluate( gate_kind kind, bool a, bool b )
{
  switch ( kind )
  {
  case gate_kind::NOT: return !a;
  case gate_kind::AND: return a && b;
  case gate_kind::NAND: return !( a && b );
  case gate_kind::OR: return a || b;
  case gate_kind::NOR: return !( a || b );
  case gate_kind::XOR: return a != b;
  case gate_kind::XNOR: return a == b;
  case gate_kind::COPY: return a;
  }
  return false;
}

uint32_t ir_circuit::add_gate( gate_kind kind, std::vector<std::string> ins, std::vector<std::string> outs,
                               std::string label )
{
  const auto id = static_cast<uint32_t>( gates.size() + 1u );
  gates.push_back( { id, kind, std::move( ins ), std::move( outs ), std::move( label ) } );
  return id;
}

void ir_circuit::renumber()
{
  for ( std::size_t i = 0; i < gates.size(); ++i )
  {
    gates[i].id = static_cast<uint32_t>( i + 1u );
  }
}

ir_gate const* ir_circuit::find_gate( uint32_t id ) const
{
  if ( id >= 1u && id <= gates.size() && gates[id - 1u].id == id )
  {
    return &gates[id - 1u];
  }
  auto it = std::find_if( gates.begin(), gates.end(), [id]( auto const& g ) { return g.id == id; } );
  return it == gates.end() ? nullptr : &*it;
}

std::string_view to_string( violation_kind kind )
{
  switch ( kind )
  {
  case violation_kind::multiple_drivers: return "MultipleDrivers";
  case violation_kind::undriven_output: return "UndrivenOutput";
  case violation_kind::undriven_input: return "UndrivenInput";
  case violation_kind::bad_arity: return "BadArity";
  case violation_kind::duplicate_name: return "DuplicateName";
  case violation_kind::invalid_name: return "InvalidName";
  }
  return "?";
}

std::string validation_report::to_string() const
{
  if ( ok() )
  {
    return "ok";
  }
  std::string text;
  for ( auto const& v : violations )
  {
    if ( !text.empty() )
    {
      text += "; ";
    }
    text += std::string( revmap::to_string( v.kind ) ) + "(" + v.element + ")";
  }
  return text;
}

bool is_valid_net_name( std::string_view name )
{
  if ( name.empty() )
  {
    return false;
  }
  return std::none_of( name.begin(), name.end(), []( unsigned char c ) { return std::isspace( c ) || c == '\\' || c == '#' || c < 0x20; } );
}

validation_report validate_circuit( ir_circuit const& circuit )
{
  validation_report report;
  auto add = [&]( violation_kind kind, std::string const& element ) {
    violation v{ kind, element };
    if ( std::find( report.violations.begin(), report.violations.end(), v ) == report.violations.end() )
    {
      report.violations.push_back( std::move( v ) );
    }
  };
  auto check_name = [&]( std::string const& name ) {
    if ( !is_valid_net_name( name ) )
    {
      add( violation_kind::invalid_name, name );
    }
  };

  std::unordered_map<std::string, std::size_t> drivers;
  std::unordered_set<std::string> seen;
  for ( auto const& pi : circuit.inputs )
  {
    check_name( pi );
    if ( !seen.insert( pi ).second )
    {
      add( violation_kind::duplicate_name, pi );
      continue;
    }
    ++drivers[pi];
  }

  seen.clear();
  for ( auto const& po : circuit.outputs )
  {
    check_name( po );
    if ( !seen.insert( po ).second )
    {
      add( violation_kind::duplicate_name, po );
    }
  }

  for ( auto const& gate : circuit.gates )
  {
    if ( gate.inputs.size() != input_arity( gate.kind ) || gate.outputs.size() != output_arity( gate.kind ) )
    {
      add( violation_kind::bad_arity, gate.name() );
    }
    for ( auto const& net : gate.inputs )
    {
      check_name( net );
    }
    seen.clear();
    for ( auto const& net : gate.outputs )
    {
      check_name( net );
      if ( !seen.insert( net ).second )
      {
        add( violation_kind::duplicate_name, net );
        continue;
      }
      ++drivers[net];
    }
  }

  for ( auto const& pi : circuit.inputs )
  {
    if ( drivers[pi] > 1u )
    {
      add( violation_kind::multiple_drivers, pi );
    }
  }
  for ( auto const& gate : circuit.gates )
  {
    for ( auto const& net : gate.outputs )
    {
      if ( drivers[net] > 1u )
      {
        add( violation_kind::multiple_drivers, net );
      }
    }
  }
  for ( auto const& po : circuit.outputs )
  {
    if ( !drivers.count( po ) )
    {
      add( violation_kind::undriven_output, po );
    }
  }
  for ( auto const& gate : circuit.gates )
  {
    for ( auto const& net : gate.inputs )
    {
      if ( !drivers.count( net ) )
      {
        add( violation_kind::undriven_input, net );
      }
    }
  }
  return report;
}

void require_valid( ir_circuit const& circuit )
{
  if ( auto report = validate_circuit( circuit ); !report.ok() )
  {
    throw revmap_error( error_code::invalid_circuit, "invalid circuit: " + report.to_string() );
  }
}

namespace
{

/* consumers[i] = indices of gates reading an output of gate i, ascending, no duplicates */
std::vector<std::vector<std::size_t>> consumer_graph( ir_circuit const& circuit )
{
  std::unordered_map<std::string, std::size_t> driver;
  for ( std::size_t i = 0; i < circuit.gates.size(); ++i )
  {
    for ( auto const& net : circuit.gates[i].outputs )
    {
      driver.emplace( net, i );
    }
  }
  std::vector<std::vector<std::size_t>> consumers( circuit.gates.size() );
  for ( std::size_t i = 0; i < circuit.gates.size(); ++i )
  {
    for ( auto const& net : circuit.gates[i].inputs )
    {
      if ( auto it = driver.find( net ); it != driver.end() )
      {
        auto& list = consumers[it->second];
        if ( list.empty() || list.back() != i )
        {
          list.push_back( i );
        }
      }
    }
  }
  return consumers;
}

} // namespace

std::optional<std::vector<uint32_t>> detect_cycles( ir_circuit const& circuit )
{
  const auto consumers = consumer_graph( circuit );
  const auto n = circuit.gates.size();

  enum class color : uint8_t { white, grey, black };
  std::vector<color> state( n, color::white );
  std::vector<std::size_t> path;
  std::vector<std::size_t> next_child;

  for ( std::size_t root = 0; root < n; ++root )
  {
    if ( state[root] != color::white )
    {
      continue;
    }
    path.assign( 1u, root );
    next_child.assign( 1u, 0u );
    state[root] = color::grey;

    while ( !path.empty() )
    {
      const auto node = path.back();
      auto& child_index = next_child.back();
      if ( child_index == consumers[node].size() )
      {
        state[node] = color::black;
        path.pop_back();
        next_child.pop_back();
        continue;
      }
      const auto child = consumers[node][child_index++];
      if ( state[child] == color::grey )
      {
        auto start = std::find( path.begin(), path.end(), child );
        std::vector<uint32_t> cycle;
        for ( auto it = start; it != path.end(); ++it )
        {
          cycle.push_back( circuit.gates[*it].id );
        }
        std::rotate( cycle.begin(), std::min_element( cycle.begin(), cycle.end() ), cycle.end() );
        return cycle;
      }
      if ( state[child] == color::white )
      {
        state[child] = color::grey;
        path.push_back( child );
        next_child.push_back( 0u );
      }
    }
  }
  return std::nullopt;
}

std::vector<uint32_t> topological_order( ir_circuit const& circuit )
{
  const auto consumers = consumer_graph( circuit );
  const auto n = circuit.gates.size();
  std::vector<std::size_t> pending( n, 0u );
  for ( auto const& list : consumers )
  {
    for ( auto c : list )
    {
      ++pending[c];
    }
  }

  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( pending[i] == 0u )
    {
      ready.push( i );
    }
  }

  std::vector<uint32_t> order;
  order.reserve( n );
  while ( !ready.empty() )
  {
    const auto i = ready.top();
    ready.pop();
    order.push_back( circuit.gates[i].id );
    for ( auto c : consumers[i] )
    {
      if ( --pending[c] == 0u )
      {
        ready.push( c );
      }
    }
  }

  if ( order.size() != n )
  {
    throw feedback_error( detect_cycles( circuit ).value_or( std::vector<uint32_t>{} ) );
  }
  return order;
}

} // namespace revmap
