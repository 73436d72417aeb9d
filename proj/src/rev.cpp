#include <revmap/rev.hpp>

#include <algorithm>
#include <unordered_set>

namespace revmap
{

std::string check_rev_circuit( rev_circuit const& circuit )
{
  const auto n = circuit.lines.size();
  bool constants_started = false;
  std::unordered_set<std::string> names, outputs;
  for ( std::size_t i = 0; i < n; ++i )
  {
    auto const& l = circuit.lines[i];
    if ( l.index != i )
    {
      return "line " + l.name + " has index " + std::to_string( l.index ) + " at position " + std::to_string( i );
    }
    if ( !names.insert( l.name ).second )
    {
      return "duplicate line name " + l.name;
    }
    if ( l.is_constant() )
    {
      constants_started = true;
    }
    else if ( constants_started )
    {
      return "primary input line " + l.name + " follows a constant line";
    }
    if ( !l.is_garbage() && !outputs.insert( l.output_name ).second )
    {
      return "primary output " + l.output_name + " appears on two lines";
    }
  }
  for ( std::size_t k = 0; k < circuit.gates.size(); ++k )
  {
    auto const& g = circuit.gates[k];
    if ( g.controls.size() > 2u )
    {
      return "gate " + std::to_string( k ) + " has more than two controls";
    }
    std::vector<uint32_t> all = g.controls;
    all.push_back( g.target );
    for ( auto l : all )
    {
      if ( l >= n )
      {
        return "gate " + std::to_string( k ) + " references line " + std::to_string( l ) + " out of range";
      }
    }
    std::sort( all.begin(), all.end() );
    if ( std::adjacent_find( all.begin(), all.end() ) != all.end() )
    {
      return "gate " + std::to_string( k ) + " uses a line twice";
    }
  }
  return {};
}

} // namespace revmap
