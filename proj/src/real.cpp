#include <revmap/errors.hpp>
#include <revmap/real.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace revmap
{

std::string write_real( rev_circuit const& circuit )
{
  std::string variables, inputs, outputs, constants, garbage;
  std::size_t garbage_index = 0u;
  for ( auto const& l : circuit.lines )
  {
    variables += " " + l.name;
    if ( l.is_constant() )
    {
      inputs += l.constant_value ? " 1" : " 0";
      constants += l.constant_value ? '1' : '0';
    }
    else
    {
      inputs += " " + l.input_name;
      constants += '-';
    }
    if ( l.is_garbage() )
    {
      outputs += " g" + std::to_string( garbage_index++ );
      garbage += '1';
    }
    else
    {
      outputs += " " + l.output_name;
      garbage += '-';
    }
  }

  std::string text = ".version 2.0\n";
  text += ".numvars " + std::to_string( circuit.lines.size() ) + "\n";
  text += ".variables" + variables + "\n";
  text += ".inputs" + inputs + "\n";
  text += ".outputs" + outputs + "\n";
  text += ".constants " + constants + "\n";
  text += ".garbage " + garbage + "\n";
  text += ".begin\n";
  for ( auto const& g : circuit.gates )
  {
    text += "t" + std::to_string( g.controls.size() + 1u );
    for ( auto c : g.controls )
    {
      text += " " + circuit.lines.at( c ).name;
    }
    text += " " + circuit.lines.at( g.target ).name + "\n";
  }
  text += ".end\n";
  return text;
}

namespace
{

revmap_error inconsistent( std::string const& what )
{
  return revmap_error( error_code::inconsistent_header, "inconsistent header: " + what );
}

} // namespace

rev_circuit parse_real( std::string_view text, std::string name )
{
  std::optional<std::size_t> numvars;
  std::vector<std::string> variables, inputs, outputs;
  std::optional<std::string> constants, garbage;
  std::unordered_map<std::string, uint32_t> index;
  std::vector<rev_gate> gates;
  bool in_body = false, ended = false, have_variables = false;

  std::istringstream stream{ std::string( text ) };
  std::size_t number = 0u;
  for ( std::string raw; std::getline( stream, raw ); )
  {
    ++number;
    if ( auto hash = raw.find( '#' ); hash != std::string::npos )
    {
      raw.erase( hash );
    }
    std::istringstream words( raw );
    std::vector<std::string> tokens;
    for ( std::string t; words >> t; )
    {
      tokens.push_back( std::move( t ) );
    }
    if ( tokens.empty() )
    {
      continue;
    }
    auto const& head = tokens.front();
    if ( ended )
    {
      throw syntax_error( number, "content after .end" );
    }

    if ( in_body )
    {
      if ( head == ".end" )
      {
        ended = true;
        continue;
      }
      std::size_t arity = 0u;
      const bool toffoli_family = head.size() >= 2u && ( head[0] == 't' || head[0] == 'T' );
      if ( toffoli_family )
      {
        auto [ptr, ec] = std::from_chars( head.data() + 1, head.data() + head.size(), arity );
        if ( ec != std::errc{} || ptr != head.data() + head.size() || arity == 0u )
        {
          throw syntax_error( number, "malformed gate " + head );
        }
      }
      if ( !toffoli_family || arity > 3u )
      {
        throw revmap_error( error_code::unsupported_gate,
                            "line " + std::to_string( number ) + ": unsupported gate " + head + " (only t1, t2, t3)" );
      }
      if ( tokens.size() != arity + 1u )
      {
        throw syntax_error( number, head + " expects " + std::to_string( arity ) + " lines" );
      }
      std::vector<uint32_t> operands;
      for ( std::size_t i = 1; i < tokens.size(); ++i )
      {
        auto it = index.find( tokens[i] );
        if ( it == index.end() )
        {
          throw syntax_error( number, "unknown variable " + tokens[i] );
        }
        if ( std::find( operands.begin(), operands.end(), it->second ) != operands.end() )
        {
          throw syntax_error( number, "variable " + tokens[i] + " used twice in one gate" );
        }
        operands.push_back( it->second );
      }
      const auto target = operands.back();
      operands.pop_back();
      gates.push_back( { std::move( operands ), target } );
      continue;
    }

    const std::vector<std::string> args( tokens.begin() + 1, tokens.end() );
    if ( head == ".version" )
    {
    }
    else if ( head == ".numvars" )
    {
      std::size_t n = 0u;
      if ( args.size() != 1u )
      {
        throw syntax_error( number, ".numvars takes one number" );
      }
      auto [ptr, ec] = std::from_chars( args[0].data(), args[0].data() + args[0].size(), n );
      if ( ec != std::errc{} || ptr != args[0].data() + args[0].size() )
      {
        throw syntax_error( number, "malformed .numvars" );
      }
      numvars = n;
    }
    else if ( head == ".variables" )
    {
      variables = args;
      have_variables = true;
      for ( std::size_t i = 0; i < variables.size(); ++i )
      {
        if ( !index.emplace( variables[i], static_cast<uint32_t>( i ) ).second )
        {
          throw syntax_error( number, "duplicate variable " + variables[i] );
        }
      }
    }
    else if ( head == ".inputs" )
    {
      inputs = args;
    }
    else if ( head == ".outputs" )
    {
      outputs = args;
    }
    else if ( head == ".constants" || head == ".garbage" )
    {
      if ( args.size() > 1u )
      {
        throw syntax_error( number, head + " takes one word" );
      }
      const auto word = args.empty() ? std::string{} : args[0];
      const auto allowed = head == ".constants" ? "01-" : "1-";
      if ( word.find_first_not_of( allowed ) != std::string::npos )
      {
        throw syntax_error( number, "invalid character in " + head );
      }
      ( head == ".constants" ? constants : garbage ) = word;
    }
    else if ( head == ".begin" )
    {
      if ( !numvars )
      {
        throw syntax_error( number, ".begin before .numvars" );
      }
      if ( !have_variables )
      {
        throw syntax_error( number, ".begin before .variables" );
      }
      if ( variables.size() != *numvars )
      {
        throw inconsistent( ".numvars " + std::to_string( *numvars ) + " but " + std::to_string( variables.size() ) +
                            " variables" );
      }
      in_body = true;
    }
    else
    {
      throw syntax_error( number, "unknown directive " + head );
    }
  }

  if ( !ended )
  {
    throw syntax_error( number, in_body ? "missing .end" : "missing .begin" );
  }

  const auto n = variables.size();
  if ( inputs.empty() && n > 0u && !constants )
  {
    inputs = variables;
  }
  if ( outputs.empty() && n > 0u && !garbage )
  {
    outputs = variables;
  }
  const auto constants_word = constants.value_or( std::string( n, '-' ) );
  const auto garbage_word = garbage.value_or( std::string( n, '-' ) );
  if ( inputs.size() != n )
  {
    throw inconsistent( std::to_string( inputs.size() ) + " inputs for " + std::to_string( n ) + " variables" );
  }
  if ( outputs.size() != n )
  {
    throw inconsistent( std::to_string( outputs.size() ) + " outputs for " + std::to_string( n ) + " variables" );
  }
  if ( constants_word.size() != n )
  {
    throw inconsistent( ".constants has " + std::to_string( constants_word.size() ) + " entries for " +
                        std::to_string( n ) + " variables" );
  }
  if ( garbage_word.size() != n )
  {
    throw inconsistent( ".garbage has " + std::to_string( garbage_word.size() ) + " entries for " +
                        std::to_string( n ) + " variables" );
  }

  rev_circuit circuit;
  circuit.name = std::move( name );
  for ( std::size_t i = 0; i < n; ++i )
  {
    line l;
    l.index = static_cast<uint32_t>( i );
    l.name = variables[i];
    if ( constants_word[i] == '-' )
    {
      l.origin = line_origin::primary_input;
      l.input_name = inputs[i];
    }
    else
    {
      l.origin = line_origin::constant;
      l.constant_value = constants_word[i] == '1';
    }
    if ( garbage_word[i] == '1' )
    {
      l.terminal = line_terminal::garbage;
    }
    else
    {
      l.terminal = line_terminal::primary_output;
      l.output_name = outputs[i];
    }
    circuit.lines.push_back( std::move( l ) );
  }
  circuit.gates = std::move( gates );
  return circuit;
}

} // namespace revmap
