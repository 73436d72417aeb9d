#include <revmap/cli.hpp>
#include <revmap/revmap.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace revmap
{

namespace
{

int exit_code_for( error_code code )
{
  switch ( code )
  {
  case error_code::unsupported_construct:
  case error_code::too_many_inputs:
  case error_code::unrecognized_cover:
  case error_code::constant_cover:
  case error_code::feedback_detected:
  case error_code::fanout_present:
  case error_code::stuck:
  case error_code::unsupported_gate:
    return exit_code::unsupported;
  default:
    return exit_code::format_error;
  }
}

enum class file_format
{
  blif,
  real
};

class session
{
public:
  session( std::istream& in, std::ostream& out ) : in_( in ), out_( out ) {}

  std::string read( std::string const& path )
  {
    if ( path == "-" )
    {
      std::ostringstream buffer;
      buffer << in_.rdbuf();
      return buffer.str();
    }
    std::ifstream file( path, std::ios::binary );
    if ( !file )
    {
      throw revmap_error( error_code::io_error, "cannot open " + path );
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }

  void write( std::string const& path, std::string const& text )
  {
    if ( path.empty() || path == "-" )
    {
      out_ << text;
      return;
    }
    std::ofstream file( path, std::ios::binary | std::ios::trunc );
    if ( !file || !( file << text ) )
    {
      throw revmap_error( error_code::io_error, "cannot write " + path );
    }
  }

  ir_circuit read_blif( std::string const& path ) { return parse_intermediate( read( path ) ); }

  rev_circuit read_real( std::string const& path )
  {
    auto circuit = parse_real( read( path ), path == "-" ? std::string{} : std::filesystem::path( path ).stem().string() );
    if ( auto problem = check_rev_circuit( circuit ); !problem.empty() )
    {
      throw revmap_error( error_code::inconsistent_header, "malformed circuit: " + problem );
    }
    return circuit;
  }

private:
  std::istream& in_;
  std::ostream& out_;
};

file_format detect_format( std::string const& path, std::string const& override_format )
{
  if ( override_format == "blif" )
  {
    return file_format::blif;
  }
  if ( override_format == "real" )
  {
    return file_format::real;
  }
  const auto extension = std::filesystem::path( path ).extension().string();
  if ( extension == ".real" )
  {
    return file_format::real;
  }
  if ( extension == ".blif" )
  {
    return file_format::blif;
  }
  throw CLI::ValidationError( "cannot infer the format of '" + path + "'; pass --format blif|real" );
}

void require_convertible( ir_circuit const& circuit )
{
  require_valid( circuit );
  if ( auto cycle = detect_cycles( circuit ) )
  {
    throw feedback_error( std::move( *cycle ) );
  }
}

} // namespace

int dispatch( std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "revmap: map combinational BLIF circuits onto NOT/CNOT/Toffoli reversible netlists", "revmap" };
  app.require_subcommand( 1 );

  session io( in, out );
  std::string input, second_input, output, format, bits;
  bool trace = false, no_restore = false;
  std::size_t max_exhaustive = 12u, samples = 4096u, max_bijective = 16u, num_inputs = 0u, num_gates = 0u;
  uint64_t seed = 1u;

  auto* convert_cmd = app.add_subcommand( "convert", "BLIF to .real through the full pipeline" );
  convert_cmd->add_option( "input", input, "BLIF file or - for stdin" )->required();
  convert_cmd->add_option( "-o,--output", output, ".real output (default stdout)" );
  convert_cmd->add_flag( "--trace", trace, "print the slot-wise replacement trace" );
  convert_cmd->add_flag( "--no-restore-controls", no_restore, "leave OR/NOR input lines inverted" );

  auto* prep_cmd = app.add_subcommand( "prep", "insert copier gates and emit the intermediate format" );
  prep_cmd->add_option( "input", input, "BLIF file or - for stdin" )->required();
  prep_cmd->add_option( "-o,--output", output, "output file (default stdout)" );

  auto* slots_cmd = app.add_subcommand( "slots", "print the slot table of the preprocessed circuit" );
  slots_cmd->add_option( "input", input, "BLIF file or - for stdin" )->required();

  auto* verify_cmd = app.add_subcommand( "verify", "check a .real circuit against its BLIF source" );
  verify_cmd->add_option( "blif", input, "irreversible circuit" )->required();
  verify_cmd->add_option( "real", second_input, "reversible circuit" )->required();
  verify_cmd->add_option( "--max-exhaustive", max_exhaustive, "largest input count simulated exhaustively" );
  verify_cmd->add_option( "--samples", samples, "random assignments above the exhaustive cap" );
  verify_cmd->add_option( "--seed", seed, "seed for sampled checking" );
  verify_cmd->add_option( "--max-bijective", max_bijective, "largest line count checked for bijectivity" );

  auto* sim_cmd = app.add_subcommand( "sim", "evaluate a circuit on one assignment" );
  sim_cmd->add_option( "file", input, ".blif or .real file" )->required();
  sim_cmd->add_option( "--input", bits, "input bits, primary-input (or line) order" )->required();
  sim_cmd->add_option( "--format", format, "override format detection" )->check( CLI::IsMember( { "blif", "real" } ) );

  auto* stats_cmd = app.add_subcommand( "stats", "print line, gate and quantum cost figures" );
  stats_cmd->add_option( "real", input, ".real file" )->required();

  auto* gen_cmd = app.add_subcommand( "gen", "emit a random combinational BLIF circuit" );
  gen_cmd->add_option( "--seed", seed, "generator seed" )->required();
  gen_cmd->add_option( "--inputs", num_inputs, "number of primary inputs" )->required()->check( CLI::PositiveNumber );
  gen_cmd->add_option( "--gates", num_gates, "number of gates" )->required();
  gen_cmd->add_option( "-o,--output", output, "output file (default stdout)" );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( CLI::CallForHelp const& )
  {
    out << app.help();
    return exit_code::success;
  }
  catch ( CLI::CallForAllHelp const& )
  {
    out << app.help( "", CLI::AppFormatMode::All );
    return exit_code::success;
  }
  catch ( CLI::ParseError const& e )
  {
    err << "error[usage]: " << e.what() << "\n";
    return exit_code::usage;
  }

  try
  {
    if ( convert_cmd->parsed() )
    {
      const auto circuit = io.read_blif( input );
      const auto result = compile( circuit, { !no_restore } );
      io.write( output, write_real( result.circuit ) );
      if ( trace )
      {
        ( output.empty() || output == "-" ? err : out ) << format_trace( result.trace );
      }
      return exit_code::success;
    }
    if ( prep_cmd->parsed() )
    {
      const auto circuit = io.read_blif( input );
      require_convertible( circuit );
      io.write( output, write_intermediate( insert_copiers( circuit ) ) );
      return exit_code::success;
    }
    if ( slots_cmd->parsed() )
    {
      const auto circuit = io.read_blif( input );
      require_convertible( circuit );
      out << format_slot_table( slot_circuit( insert_copiers( circuit ) ) );
      return exit_code::success;
    }
    if ( verify_cmd->parsed() )
    {
      const auto circuit = io.read_blif( input );
      require_convertible( circuit );
      const auto reversible = io.read_real( second_input );
      const auto report = check_equivalence( circuit, reversible, { max_exhaustive, samples, seed } );
      out << report.to_string();

      bool bijective = true;
      if ( reversible.num_lines() <= max_bijective )
      {
        const auto b = check_bijectivity( reversible, max_bijective );
        bijective = b.bijective;
        if ( bijective )
        {
          out << "bijective: yes (" << b.states << " states)\n";
        }
        else
        {
          out << "bijective: no, states " << to_bit_string( unpack_bits( b.collision->first, reversible.num_lines() ) )
              << " and " << to_bit_string( unpack_bits( b.collision->second, reversible.num_lines() ) )
              << " share an image\n";
        }
      }
      else
      {
        out << "bijective: skipped (" << reversible.num_lines() << " lines > " << max_bijective << ")\n";
      }
      out << report.summary() << "\n";
      return report.equivalent() && bijective ? exit_code::success : exit_code::mismatch;
    }
    if ( sim_cmd->parsed() )
    {
      const auto values = from_bit_string( bits );
      if ( detect_format( input, format ) == file_format::blif )
      {
        const auto circuit = io.read_blif( input );
        require_convertible( circuit );
        const auto result = ir_simulator( circuit )( values );
        for ( std::size_t i = 0; i < circuit.outputs.size(); ++i )
        {
          out << circuit.outputs[i] << "=" << result[i] << "\n";
        }
        out << "outputs=" << to_bit_string( result ) << "\n";
        return exit_code::success;
      }
      const auto circuit = io.read_real( input );
      const auto num_pi = static_cast<std::size_t>(
          std::count_if( circuit.lines.begin(), circuit.lines.end(), []( auto const& l ) { return !l.is_constant(); } ) );
      bit_vector state( circuit.num_lines() );
      if ( values.size() == circuit.num_lines() )
      {
        state = values;
      }
      else if ( values.size() == num_pi )
      {
        std::size_t next = 0u;
        for ( auto const& l : circuit.lines )
        {
          state[l.index] = l.is_constant() ? l.constant_value : values[next++];
        }
      }
      else
      {
        throw revmap_error( error_code::state_length_mismatch,
                            "expected " + std::to_string( num_pi ) + " input bits or " +
                                std::to_string( circuit.num_lines() ) + " line bits, got " +
                                std::to_string( values.size() ) );
      }
      const auto final_state = eval_rev( circuit, state );
      for ( auto const& l : circuit.lines )
      {
        if ( !l.is_garbage() )
        {
          out << l.output_name << "=" << final_state[l.index] << "\n";
        }
      }
      out << "state=" << to_bit_string( final_state ) << "\n";
      return exit_code::success;
    }
    if ( stats_cmd->parsed() )
    {
      out << stats( io.read_real( input ) ).to_string();
      return exit_code::success;
    }
    if ( gen_cmd->parsed() )
    {
      io.write( output, write_blif( gen_random_circuit( seed, num_inputs, num_gates ) ) );
      return exit_code::success;
    }
  }
  catch ( CLI::Error const& e )
  {
    err << "error[usage]: " << e.what() << "\n";
    return exit_code::usage;
  }
  catch ( revmap_error const& e )
  {
    err << "error[" << to_string( e.code() ) << "]: " << e.what() << "\n";
    return exit_code_for( e.code() );
  }
  return exit_code::usage;
}

} // namespace revmap
