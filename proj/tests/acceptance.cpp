/* End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure. */

#include "oracles.hpp"

#include <revmap/cli.hpp>
#include <revmap/revmap.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace revmap;

namespace
{

struct check_failed
{
  std::string reason;
};

void expect( bool condition, std::string const& reason )
{
  if ( !condition )
  {
    throw check_failed{ reason };
  }
}

std::string data( std::string const& name )
{
  std::ifstream file( std::string( REVMAP_TEST_DATA ) + "/" + name, std::ios::binary );
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

int run_cli( std::vector<std::string> const& args, std::string* err_text = nullptr )
{
  std::istringstream in;
  std::ostringstream out, err;
  const int code = dispatch( args, in, out, err );
  if ( err_text )
  {
    *err_text = err.str();
  }
  return code;
}

ir_circuit single_gate( gate_kind kind )
{
  const bool unary = input_arity( kind ) == 1u;
  ir_circuit c;
  c.name = std::string( to_string( kind ) );
  c.inputs = unary ? std::vector<std::string>{ "a" } : std::vector<std::string>{ "a", "b" };
  c.outputs = { "c" };
  c.add_gate( kind, c.inputs, { "c" } );
  /* go through text so the parser and cover classifier are part of the run */
  return parse_blif( write_blif( c ) );
}

std::vector<ir_circuit> random_suite()
{
  std::vector<ir_circuit> suite;
  for ( uint64_t seed = 0; seed < 200; ++seed )
  {
    suite.push_back( gen_random_circuit( 1000 + seed, 1 + seed % 8, seed % 13 ) );
  }
  return suite;
}

int failures = 0;

void criterion( int number, std::string const& title, double budget_seconds, std::function<void()> const& body )
{
  const auto start = std::chrono::steady_clock::now();
  std::string reason;
  try
  {
    body();
  }
  catch ( check_failed const& e )
  {
    reason = e.reason;
  }
  catch ( std::exception const& e )
  {
    reason = std::string( "exception: " ) + e.what();
  }
  const double seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  if ( reason.empty() && budget_seconds > 0 && seconds >= budget_seconds )
  {
    reason = "took " + std::to_string( seconds ) + " s, budget " + std::to_string( budget_seconds ) + " s";
  }
  std::ostringstream line;
  line.precision( 3 );
  line << std::fixed << ( reason.empty() ? "[PASS] " : "[FAIL] " ) << number << ". " << title << " (" << seconds << " s)";
  if ( !reason.empty() )
  {
    line << ": " << reason;
    ++failures;
  }
  std::cout << line.str() << std::endl;
}

} // namespace

int main()
{
  criterion( 1, "single-gate suite is exhaustively equivalent", 1.0, [] {
    for ( auto kind : logic_gate_kinds )
    {
      const auto c = single_gate( kind );
      const auto r = compile( c ).circuit;
      const auto report = check_equivalence( c, r );
      expect( report.equivalent(), std::string( to_string( kind ) ) + ": " + report.summary() );
      expect( report.mode == equivalence_report::mode_t::exhaustive, "not exhaustive" );
      expect( report.checked == ( std::size_t{ 1 } << c.inputs.size() ), "wrong assignment count" );
    }
  } );

  criterion( 2, "template structure in emitted .real", 0.0, [] {
    auto emitted = []( gate_kind kind ) { return parse_real( write_real( compile( single_gate( kind ) ).circuit ) ); };
    auto count = []( rev_circuit const& r, rev_gate_type type ) {
      return std::count_if( r.gates.begin(), r.gates.end(), [type]( auto const& g ) { return g.type() == type; } );
    };
    auto constants = []( rev_circuit const& r ) {
      std::vector<bool> values;
      for ( auto const& l : r.lines )
      {
        if ( l.is_constant() )
        {
          values.push_back( l.constant_value );
        }
      }
      return values;
    };
    const auto and_r = emitted( gate_kind::AND );
    expect( and_r.gates.size() == 1u && count( and_r, rev_gate_type::t3 ) == 1 && constants( and_r ) == std::vector<bool>{ false },
            "AND is not one Toffoli on constant 0" );
    const auto nand_r = emitted( gate_kind::NAND );
    expect( nand_r.gates.size() == 1u && count( nand_r, rev_gate_type::t3 ) == 1 && constants( nand_r ) == std::vector<bool>{ true },
            "NAND is not one Toffoli on constant 1" );
    const auto or_r = emitted( gate_kind::OR );
    expect( or_r.gates.size() == 5u && count( or_r, rev_gate_type::t1 ) == 4 && count( or_r, rev_gate_type::t3 ) == 1 &&
                constants( or_r ) == std::vector<bool>{ true },
            "OR is not 4 NOT + 1 Toffoli on constant 1" );
    const auto nor_r = emitted( gate_kind::NOR );
    expect( nor_r.gates.size() == 5u && count( nor_r, rev_gate_type::t1 ) == 4 && count( nor_r, rev_gate_type::t3 ) == 1 &&
                constants( nor_r ) == std::vector<bool>{ false },
            "NOR is not 4 NOT + 1 Toffoli on constant 0" );
    const auto xor_r = emitted( gate_kind::XOR );
    expect( xor_r.gates.size() == 1u && count( xor_r, rev_gate_type::t2 ) == 1 && constants( xor_r ).empty(),
            "XOR is not a single Feynman gate" );
    const auto xnor_r = emitted( gate_kind::XNOR );
    expect( xnor_r.gates.size() == 2u && xnor_r.gates[0].type() == rev_gate_type::t2 && xnor_r.gates[1].type() == rev_gate_type::t1 &&
                constants( xnor_r ).empty(),
            "XNOR is not Feynman + NOT" );
  } );

  criterion( 3, "half adder: equivalent, bijective, 5 lines", 1.0, [] {
    const auto c = parse_blif( data( "half_adder.blif" ) );
    const auto prepared = insert_copiers( c );
    std::vector<gate_kind> kinds;
    for ( auto const& g : prepared.gates )
    {
      kinds.push_back( g.kind );
    }
    expect( kinds == std::vector<gate_kind>{ gate_kind::COPY, gate_kind::COPY, gate_kind::XOR, gate_kind::AND },
            "preprocessing is not 2 COPY + XOR + AND" );
    const auto r = convert_circuit( slot_circuit( prepared ) );
    expect( r.num_lines() == 5u, "line count " + std::to_string( r.num_lines() ) );
    const auto report = check_equivalence( c, r );
    expect( report.equivalent() && report.checked == 4u, report.summary() );
    for ( auto const& a : oracle::all_assignments( c.inputs ) )
    {
      const auto out = oracle::eval_rev_outputs( r, a );
      expect( out.at( "s" ) == ( a.at( "a" ) ^ a.at( "b" ) ) && out.at( "c" ) == ( a.at( "a" ) & a.at( "b" ) ), "sum/carry wrong" );
    }
    const auto b = check_bijectivity( r );
    expect( b.bijective && b.states == 32u, "not bijective on 32 states" );
  } );

  criterion( 4, "slotting example: {X,Y} then {Z,T}, E passes through", 0.0, [] {
    ir_circuit c;
    c.name = "slots";
    c.inputs = { "A", "B", "C", "D", "E" };
    c.outputs = { "H", "I" };
    const auto x = c.add_gate( gate_kind::AND, { "A", "B" }, { "F" }, "X" );
    const auto y = c.add_gate( gate_kind::OR, { "C", "D" }, { "G" }, "Y" );
    const auto z = c.add_gate( gate_kind::NOT, { "F" }, { "H" }, "Z" );
    const auto t = c.add_gate( gate_kind::AND, { "G", "E" }, { "I" }, "T" );
    const auto s = slot_circuit( c );
    expect( s.slots.size() == 3u, "slot count " + std::to_string( s.slots.size() ) );
    expect( s.slots[0].nets == c.inputs, "slot 0 is not the PI set" );
    expect( s.slots[1].gates == std::vector<uint32_t>{ x, y }, "slot 1 gates" );
    expect( s.slots[1].nets == std::vector<std::string>{ "F", "G", "E" }, "slot 1 nets" );
    expect( s.slots[2].gates == std::vector<uint32_t>{ z, t }, "slot 2 gates" );
    expect( s.slots[2].nets == std::vector<std::string>{ "H", "I" }, "slot 2 nets" );
  } );

  const auto suite = random_suite();

  criterion( 5, "fanout preprocessing on 200 random circuits", 5.0, [&] {
    for ( auto const& c : suite )
    {
      std::size_t extra = 0;
      for ( auto const& [net, sinks] : oracle::sink_counts( c ) )
      {
        extra += sinks > 1u ? sinks - 1u : 0u;
      }
      const auto p = insert_copiers( c );
      expect( validate_circuit( p ).ok(), c.name + ": invalid after preprocessing" );
      for ( auto const& [net, sinks] : oracle::sink_counts( p ) )
      {
        const bool dead_net = sinks == 0u;
        expect( sinks == 1u || dead_net, c.name + ": net " + net + " has " + std::to_string( sinks ) + " sinks" );
      }
      expect( p.gates.size() == c.gates.size() + extra, c.name + ": gate-count arithmetic" );
      for ( auto const& a : oracle::all_assignments( c.inputs ) )
      {
        expect( oracle::eval_ir( c, a ) == oracle::eval_ir( p, a ), c.name + ": preprocessing changed the function" );
      }
    }
  } );

  criterion( 6, "200 random circuits convert, verify and are bijective", 30.0, [&] {
    for ( auto const& c : suite )
    {
      const auto r = convert_circuit( slot_circuit( insert_copiers( c ) ) );
      const auto report = check_equivalence( c, r, { 12u, 4096u, 1u } );
      expect( report.equivalent() && report.mode == equivalence_report::mode_t::exhaustive, c.name + ": " + report.summary() );
      if ( r.num_lines() <= 16u )
      {
        expect( check_bijectivity( r ).bijective, c.name + ": not bijective" );
      }
    }
  } );

  criterion( 7, "format round trips and byte stability", 0.0, [&] {
    std::vector<ir_circuit> corpus = suite;
    for ( auto const& name : { "and.blif", "half_adder.blif" } )
    {
      corpus.push_back( parse_blif( data( name ) ) );
    }
    for ( auto const& c : corpus )
    {
      const auto blif = write_blif( c );
      expect( parse_blif( blif ) == c, c.name + ": parse_blif(write_blif) differs" );
      expect( write_blif( parse_blif( blif ) ) == blif, c.name + ": BLIF text not stable" );

      const auto p = insert_copiers( c );
      const auto intermediate = write_intermediate( p );
      expect( parse_intermediate( intermediate ) == p, c.name + ": intermediate round trip" );
      expect( write_intermediate( parse_intermediate( intermediate ) ) == intermediate, c.name + ": intermediate text not stable" );

      const auto r = compile( c ).circuit;
      const auto real = write_real( r );
      expect( parse_real( real, r.name ) == r, c.name + ": parse_real(write_real) differs" );
      expect( write_real( compile( parse_blif( blif ) ).circuit ) == real, c.name + ": .real output not byte stable" );
    }
    expect( write_real( compile( parse_blif( data( "and.blif" ) ) ).circuit ) == data( "and.real" ), "and.real golden" );
    expect( write_real( compile( parse_blif( data( "half_adder.blif" ) ) ).circuit ) == data( "half_adder.real" ),
            "half_adder.real golden" );
  } );

  criterion( 8, "quantum cost: double Feynman is 2, templates match the cost table", 0.0, [] {
    rev_circuit r = parse_real( ".numvars 2\n.variables a b\n.begin\nt2 a b\nt2 b a\n.end\n", "feynman2" );
    expect( stats( r ).quantum_cost == 2u, "double Feynman cost " + std::to_string( stats( r ).quantum_cost ) );
    const std::map<gate_kind, std::size_t> costs{ { gate_kind::NOT, 1u }, { gate_kind::AND, 5u }, { gate_kind::NAND, 5u },
                                                  { gate_kind::OR, 9u },  { gate_kind::NOR, 9u }, { gate_kind::XOR, 1u },
                                                  { gate_kind::XNOR, 2u } };
    for ( auto const& [kind, cost] : costs )
    {
      std::size_t from_template = 0;
      for ( auto const& g : template_for( kind ).gate_sequence )
      {
        from_template += g.controls.size() == 2u ? 5u : 1u;
      }
      const auto measured = stats( compile( single_gate( kind ) ).circuit ).quantum_cost;
      expect( measured == cost && from_template == cost,
              std::string( to_string( kind ) ) + " cost " + std::to_string( measured ) );
    }
  } );

  criterion( 9, "negative paths exit 3 with diagnostics", 0.0, [] {
    const std::string dir = REVMAP_TEST_DATA;
    std::string err;
    expect( run_cli( { "convert", dir + "/cyclic.blif" }, &err ) == exit_code::unsupported, "feedback exit code" );
    expect( err.rfind( "error[FeedbackDetected]:", 0 ) == 0 && err.find( "g1 g2 -> g1" ) != std::string::npos,
            "feedback diagnostic: " + err );
    expect( run_cli( { "convert", dir + "/three_input.blif" }, &err ) == exit_code::unsupported, "3-input exit code" );
    expect( err.rfind( "error[TooManyInputs]:", 0 ) == 0, "3-input diagnostic: " + err );
    expect( run_cli( { "convert", dir + "/implication.blif" }, &err ) == exit_code::unsupported, "cover exit code" );
    expect( err.rfind( "error[UnrecognizedCover]:", 0 ) == 0 && err.find( "{10}" ) != std::string::npos,
            "cover diagnostic: " + err );
    try
    {
      parse_blif( data( "implication.blif" ) );
      expect( false, "on-set {10} accepted" );
    }
    catch ( revmap_error const& e )
    {
      expect( e.code() == error_code::unrecognized_cover, "wrong error code" );
    }
  } );

  std::cout << ( failures == 0 ? "all criteria passed" : std::to_string( failures ) + " criteria failed" ) << std::endl;
  return failures == 0 ? 0 : 1;
}
