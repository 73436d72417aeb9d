#include <revmap/blif.hpp>
#include <revmap/errors.hpp>

#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace revmap
{

std::optional<uint32_t> expand_on_set( std::vector<cover_row> const& rows, std::size_t num_inputs )
{
  if ( num_inputs > 4u )
  {
    return std::nullopt;
  }
  uint32_t mask = 0u;
  for ( auto const& row : rows )
  {
    if ( row.pattern.size() != num_inputs )
    {
      return std::nullopt;
    }
    for ( auto c : row.pattern )
    {
      if ( c != '0' && c != '1' && c != '-' )
      {
        return std::nullopt;
      }
    }
    if ( row.output != '1' )
    {
      continue;
    }
    for ( uint32_t m = 0u; m < ( 1u << num_inputs ); ++m )
    {
      bool match = true;
      for ( std::size_t i = 0; i < num_inputs && match; ++i )
      {
        const bool bit = ( m >> ( num_inputs - 1u - i ) ) & 1u;
        const char c = row.pattern[i];
        match = c == '-' || ( c == '1' ) == bit;
      }
      if ( match )
      {
        mask |= 1u << m;
      }
    }
  }
  return mask;
}

cover_class classify_cover( std::vector<cover_row> const& rows, std::size_t num_inputs, std::string const& gate )
{
  auto fail = [&]( std::string const& why ) {
    return revmap_error( error_code::unrecognized_cover, "unrecognized cover for " + gate + ": " + why );
  };

  if ( num_inputs < 1u || num_inputs > 2u )
  {
    throw fail( "expected 1 or 2 inputs" );
  }
  if ( rows.empty() )
  {
    throw fail( "empty cover (constant 0)" );
  }
  for ( auto const& row : rows )
  {
    if ( row.output == '0' )
    {
      throw fail( "off-set rows are not supported" );
    }
    if ( row.output != '1' )
    {
      throw fail( "output bit must be 0 or 1" );
    }
  }
  const auto mask = expand_on_set( rows, num_inputs );
  if ( !mask )
  {
    throw fail( "malformed input pattern" );
  }

  if ( num_inputs == 1u )
  {
    switch ( *mask )
    {
    case 0b01u: return { false, gate_kind::NOT };
    case 0b10u: return { true, gate_kind::NOT };
    default: break;
    }
  }
  else
  {
    switch ( *mask )
    {
    case 0b1000u: return { false, gate_kind::AND };
    case 0b0111u: return { false, gate_kind::NAND };
    case 0b1110u: return { false, gate_kind::OR };
    case 0b0001u: return { false, gate_kind::NOR };
    case 0b0110u: return { false, gate_kind::XOR };
    case 0b1001u: return { false, gate_kind::XNOR };
    default: break;
    }
  }

  std::string on_set;
  for ( uint32_t m = 0u; m < ( 1u << num_inputs ); ++m )
  {
    if ( ( *mask >> m ) & 1u )
    {
      std::string minterm;
      for ( std::size_t i = 0; i < num_inputs; ++i )
      {
        minterm += ( ( m >> ( num_inputs - 1u - i ) ) & 1u ) ? '1' : '0';
      }
      on_set += ( on_set.empty() ? "" : "," ) + minterm;
    }
  }
  throw fail( "on-set {" + on_set + "} is not one of NOT, AND, NAND, OR, NOR, XOR, XNOR, BUF" );
}

namespace
{

struct logical_line
{
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<logical_line> split_lines( std::string_view text )
{
  std::vector<logical_line> result;
  std::vector<std::string> pending;
  std::size_t pending_start = 0u;
  bool continuing = false;

  std::size_t number = 0u;
  std::size_t pos = 0u;
  while ( pos <= text.size() )
  {
    auto end = text.find( '\n', pos );
    if ( end == std::string_view::npos )
    {
      end = text.size();
    }
    auto raw = text.substr( pos, end - pos );
    pos = end + 1u;
    ++number;

    if ( auto hash = raw.find( '#' ); hash != std::string_view::npos )
    {
      raw = raw.substr( 0u, hash );
    }
    while ( !raw.empty() && ( raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t' ) )
    {
      raw.remove_suffix( 1u );
    }
    bool continues = !raw.empty() && raw.back() == '\\';
    if ( continues )
    {
      raw.remove_suffix( 1u );
    }

    if ( !continuing )
    {
      pending_start = number;
    }
    std::istringstream words{ std::string( raw ) };
    for ( std::string token; words >> token; )
    {
      pending.push_back( std::move( token ) );
    }
    continuing = continues;
    if ( !continuing && !pending.empty() )
    {
      result.push_back( { pending_start, std::move( pending ) } );
      pending.clear();
    }
  }
  if ( !pending.empty() )
  {
    result.push_back( { pending_start, std::move( pending ) } );
  }
  return result;
}

class blif_reader
{
public:
  explicit blif_reader( bool allow_copy ) : allow_copy_( allow_copy ) {}

  ir_circuit read( std::string_view text )
  {
    for ( auto const& line : split_lines( text ) )
    {
      handle( line );
    }
    close_names();
    return finish();
  }

private:
  struct names_block
  {
    std::size_t line;
    std::vector<std::string> nets;
    std::vector<cover_row> rows;
  };

  void handle( logical_line const& line )
  {
    auto const& tokens = line.tokens;
    auto const& head = tokens.front();

    if ( ended_ )
    {
      if ( head == ".model" )
      {
        throw revmap_error( error_code::unsupported_construct,
                            "line " + std::to_string( line.number ) + ": multiple .model blocks are not supported" );
      }
      throw syntax_error( line.number, "content after .end" );
    }

    if ( head.front() != '.' )
    {
      if ( !names_ )
      {
        throw syntax_error( line.number, "unexpected '" + head + "' outside a .names block" );
      }
      add_row( line );
      return;
    }

    close_names();
    if ( head == ".model" )
    {
      if ( seen_model_ )
      {
        throw revmap_error( error_code::unsupported_construct,
                            "line " + std::to_string( line.number ) + ": multiple .model blocks are not supported" );
      }
      if ( tokens.size() > 2u )
      {
        throw syntax_error( line.number, ".model takes one name" );
      }
      seen_model_ = true;
      circuit_.name = tokens.size() == 2u ? tokens[1] : std::string{};
    }
    else if ( head == ".inputs" )
    {
      circuit_.inputs.insert( circuit_.inputs.end(), tokens.begin() + 1, tokens.end() );
    }
    else if ( head == ".outputs" )
    {
      circuit_.outputs.insert( circuit_.outputs.end(), tokens.begin() + 1, tokens.end() );
    }
    else if ( head == ".names" )
    {
      if ( tokens.size() < 2u )
      {
        throw syntax_error( line.number, ".names needs an output net" );
      }
      const auto output = tokens.back();
      if ( tokens.size() == 2u )
      {
        throw revmap_error( error_code::constant_cover, "line " + std::to_string( line.number ) +
                                                            ": constant .names for " + output + " is not supported" );
      }
      if ( tokens.size() > 4u )
      {
        throw revmap_error( error_code::too_many_inputs,
                            "line " + std::to_string( line.number ) + ": .names for " + output + " has " +
                                std::to_string( tokens.size() - 2u ) + " inputs (at most 2 supported)" );
      }
      names_ = names_block{ line.number, { tokens.begin() + 1, tokens.end() }, {} };
    }
    else if ( head == ".copy" )
    {
      if ( !allow_copy_ )
      {
        throw revmap_error( error_code::unsupported_construct,
                            "line " + std::to_string( line.number ) + ": .copy is only valid in intermediate format" );
      }
      if ( tokens.size() != 4u )
      {
        throw syntax_error( line.number, ".copy takes one input and two outputs" );
      }
      circuit_.add_gate( gate_kind::COPY, { tokens[1] }, { tokens[2], tokens[3] } );
    }
    else if ( head == ".end" )
    {
      if ( tokens.size() != 1u )
      {
        throw syntax_error( line.number, ".end takes no arguments" );
      }
      ended_ = true;
    }
    else if ( head == ".latch" || head == ".subckt" || head == ".gate" || head == ".mlatch" || head == ".exdc" ||
              head == ".search" )
    {
      throw revmap_error( error_code::unsupported_construct,
                          "line " + std::to_string( line.number ) + ": " + head + " is not supported" );
    }
    else
    {
      throw syntax_error( line.number, "unknown directive " + head );
    }
  }

  void add_row( logical_line const& line )
  {
    auto const& tokens = line.tokens;
    const auto num_inputs = names_->nets.size() - 1u;
    if ( tokens.size() != 2u )
    {
      throw syntax_error( line.number, "cover row needs an input pattern and an output bit" );
    }
    cover_row row{ tokens[0], tokens[1].size() == 1u ? tokens[1][0] : '?' };
    if ( row.pattern.size() != num_inputs )
    {
      throw syntax_error( line.number, "cover row width " + std::to_string( row.pattern.size() ) +
                                           " does not match " + std::to_string( num_inputs ) + " inputs" );
    }
    if ( row.pattern.find_first_not_of( "01-" ) != std::string::npos )
    {
      throw syntax_error( line.number, "cover pattern may only contain 0, 1 and -" );
    }
    if ( row.output != '0' && row.output != '1' )
    {
      throw syntax_error( line.number, "cover output must be 0 or 1" );
    }
    names_->rows.push_back( std::move( row ) );
  }

  void close_names()
  {
    if ( !names_ )
    {
      return;
    }
    auto block = std::move( *names_ );
    names_.reset();

    const auto output = block.nets.back();
    block.nets.pop_back();
    const auto cls = classify_cover( block.rows, block.nets.size(),
                                     "gate driving " + output + " (line " + std::to_string( block.line ) + ")" );
    if ( cls.buffer )
    {
      if ( !aliases_.emplace( output, block.nets.front() ).second )
      {
        throw revmap_error( error_code::invalid_circuit, "invalid circuit: MultipleDrivers(" + output + ")" );
      }
      return;
    }
    circuit_.add_gate( cls.kind, std::move( block.nets ), { output } );
  }

  std::string const& resolve( std::string const& net ) const
  {
    std::string const* current = &net;
    std::unordered_set<std::string> visited;
    for ( auto it = aliases_.find( *current ); it != aliases_.end(); it = aliases_.find( *current ) )
    {
      if ( !visited.insert( *current ).second )
      {
        throw revmap_error( error_code::feedback_detected, "feedback loop through buffers at " + net );
      }
      current = &it->second;
    }
    return *current;
  }

  ir_circuit finish()
  {
    if ( aliases_.empty() )
    {
      return std::move( circuit_ );
    }
    std::unordered_set<std::string> driven( circuit_.inputs.begin(), circuit_.inputs.end() );
    for ( auto const& gate : circuit_.gates )
    {
      driven.insert( gate.outputs.begin(), gate.outputs.end() );
    }
    for ( auto const& [alias, source] : aliases_ )
    {
      if ( driven.count( alias ) )
      {
        throw revmap_error( error_code::invalid_circuit, "invalid circuit: MultipleDrivers(" + alias + ")" );
      }
    }
    for ( auto const& entry : aliases_ )
    {
      resolve( entry.first );
    }
    for ( auto& gate : circuit_.gates )
    {
      for ( auto& net : gate.inputs )
      {
        net = resolve( net );
      }
    }
    for ( auto& po : circuit_.outputs )
    {
      po = resolve( po );
    }
    return std::move( circuit_ );
  }

  bool allow_copy_;
  bool seen_model_{};
  bool ended_{};
  ir_circuit circuit_;
  std::optional<names_block> names_;
  std::unordered_map<std::string, std::string> aliases_;
};

std::string_view cover_rows( gate_kind kind )
{
  switch ( kind )
  {
  case gate_kind::NOT: return "0 1\n";
  case gate_kind::AND: return "11 1\n";
  case gate_kind::NAND: return "0- 1\n-0 1\n";
  case gate_kind::OR: return "1- 1\n-1 1\n";
  case gate_kind::NOR: return "00 1\n";
  case gate_kind::XOR: return "01 1\n10 1\n";
  case gate_kind::XNOR: return "00 1\n11 1\n";
  case gate_kind::COPY: break;
  }
  return {};
}

std::string write_netlist( ir_circuit const& circuit, bool allow_copy )
{
  std::string text = ".model";
  if ( !circuit.name.empty() )
  {
    text += " " + circuit.name;
  }
  text += "\n";
  auto list = [&]( std::string_view directive, std::vector<std::string> const& nets ) {
    if ( nets.empty() )
    {
      return;
    }
    text += directive;
    for ( auto const& net : nets )
    {
      text += " " + net;
    }
    text += "\n";
  };
  list( ".inputs", circuit.inputs );
  list( ".outputs", circuit.outputs );
  for ( auto const& gate : circuit.gates )
  {
    if ( gate.kind == gate_kind::COPY )
    {
      if ( !allow_copy )
      {
        throw revmap_error( error_code::unsupported_construct,
                            "COPY gate " + gate.name() + " needs the intermediate format" );
      }
      text += ".copy " + gate.inputs.at( 0 ) + " " + gate.outputs.at( 0 ) + " " + gate.outputs.at( 1 ) + "\n";
      continue;
    }
    text += ".names";
    for ( auto const& net : gate.inputs )
    {
      text += " " + net;
    }
    text += " " + gate.outputs.at( 0 ) + "\n";
    text += cover_rows( gate.kind );
  }
  text += ".end\n";
  return text;
}

} // namespace

ir_circuit parse_blif( std::string_view text )
{
  return blif_reader( false ).read( text );
}

ir_circuit parse_intermediate( std::string_view text )
{
  return blif_reader( true ).read( text );
}

std::string write_blif( ir_circuit const& circuit )
{
  return write_netlist( circuit, false );
}

std::string write_intermediate( ir_circuit const& circuit )
{
  return write_netlist( circuit, true );
}

} // namespace revmap
