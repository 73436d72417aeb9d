#include "oracles.hpp"

#include <revmap/blif.hpp>
#include <revmap/converter.hpp>
#include <revmap/errors.hpp>
#include <revmap/fanout.hpp>
#include <revmap/mapping_lib.hpp>
#include <revmap/simulation.hpp>
#include <revmap/slotting.hpp>

#include <doctest.h>

using namespace revmap;
using oracle::make;

namespace
{

ir_circuit single( gate_kind kind )
{
  if ( input_arity( kind ) == 1u )
  {
    return make( { "a" }, { "c" }, { { kind, { "a" }, { "c" } } } );
  }
  return make( { "a", "b" }, { "c" }, { { kind, { "a", "b" }, { "c" } } } );
}

line pi_line( uint32_t index, std::string name, bool garbage, std::string po = {} )
{
  line l;
  l.index = index;
  l.name = name;
  l.origin = line_origin::primary_input;
  l.input_name = name;
  l.terminal = garbage ? line_terminal::garbage : line_terminal::primary_output;
  l.output_name = po;
  return l;
}

line constant_line( uint32_t index, std::string name, bool value, bool garbage, std::string po = {} )
{
  line l;
  l.index = index;
  l.name = name;
  l.origin = line_origin::constant;
  l.constant_value = value;
  l.terminal = garbage ? line_terminal::garbage : line_terminal::primary_output;
  l.output_name = po;
  return l;
}

/* every PO agrees with the reference evaluator on every assignment */
void check_function( ir_circuit const& c, rev_circuit const& r )
{
  for ( auto const& assignment : oracle::all_assignments( c.inputs ) )
  {
    CHECK( oracle::eval_rev_outputs( r, assignment ) == oracle::eval_ir( c, assignment ) );
  }
}

} // namespace

TEST_CASE( "single AND conversion" )
{
  const auto r = compile( single( gate_kind::AND ) ).circuit;
  CHECK( r.lines == std::vector<line>{ pi_line( 0, "a", true ), pi_line( 1, "b", true ), constant_line( 2, "x0", false, false, "c" ) } );
  CHECK( r.gates == std::vector<rev_gate>{ rev_gate::t3( 0, 1, 2 ) } );
  CHECK( check_rev_circuit( r ).empty() );
}

TEST_CASE( "single XOR conversion needs no constants" )
{
  const auto r = compile( single( gate_kind::XOR ) ).circuit;
  CHECK( r.lines == std::vector<line>{ pi_line( 0, "a", true ), pi_line( 1, "b", false, "c" ) } );
  CHECK( r.gates == std::vector<rev_gate>{ rev_gate::t2( 0, 1 ) } );
}

TEST_CASE( "half adder conversion" )
{
  const auto result = compile( oracle::half_adder() );
  auto const& r = result.circuit;
  REQUIRE( r.num_lines() == 5u );
  CHECK( r.gates == std::vector<rev_gate>{ rev_gate::t2( 0, 2 ), rev_gate::t2( 1, 3 ), rev_gate::t2( 0, 1 ), rev_gate::t3( 2, 3, 4 ) } );
  std::size_t constants = 0, pos = 0;
  for ( auto const& l : r.lines )
  {
    constants += l.is_constant() ? 1u : 0u;
    pos += l.is_garbage() ? 0u : 1u;
    if ( l.is_constant() )
    {
      CHECK_FALSE( l.constant_value );
    }
  }
  CHECK( constants == 3u );
  CHECK( pos == 2u );
  check_function( oracle::half_adder(), r );
}

TEST_CASE( "every single-gate circuit converts correctly" )
{
  for ( bool restore : { true, false } )
  {
    for ( auto kind : logic_gate_kinds )
    {
      const auto c = single( kind );
      const auto r = compile( c, { restore } ).circuit;
      CAPTURE( to_string( kind ) );
      CHECK( check_rev_circuit( r ).empty() );
      CHECK( r.gates.size() == template_for( kind, { restore } ).gate_sequence.size() );
      check_function( c, r );
    }
  }
}

TEST_CASE( "trace" )
{
  const auto single_and = compile( single( gate_kind::AND ) );
  REQUIRE( single_and.trace.size() == 1u );
  CHECK( single_and.trace[0] == trace_entry{ 1u, "g1", gate_kind::AND, { 0u, 1u }, { 2u }, { 2u } } );
  CHECK( format_trace( single_and.trace ) == "slot 1 g1 AND in=0,1 anc=2 out=2\n" );

  const auto ha = compile( oracle::half_adder() );
  REQUIRE( ha.trace.size() == 4u );
  CHECK( ha.trace[0].kind == gate_kind::COPY );
  CHECK( ha.trace[1].kind == gate_kind::COPY );
  CHECK( ha.trace[2].kind == gate_kind::XOR );
  CHECK( ha.trace[3].kind == gate_kind::AND );

  const auto wire = slot_circuit( make( { "a" }, { "a" }, {} ) );
  CHECK( conversion_trace( wire ).empty() );
  const auto r = convert_circuit( wire );
  CHECK( r.lines == std::vector<line>{ pi_line( 0, "a", false, "a" ) } );
}

TEST_CASE( "constant names avoid primary inputs" )
{
  const auto c = make( { "x0", "b" }, { "c" }, { { gate_kind::AND, { "x0", "b" }, { "c" } } } );
  const auto r = compile( c ).circuit;
  CHECK( check_rev_circuit( r ).empty() );
  CHECK( r.lines[2].name != "x0" );
  check_function( c, r );
}

TEST_CASE( "role clash on hand-built slotted circuits" )
{
  const auto c = make( { "a" }, { "y" }, { { gate_kind::AND, { "a", "a" }, { "y" } } } );
  slotted_circuit s{ c, { slot{ {}, { "a" } }, slot{ { 1u }, { "y" } } } };
  try
  {
    convert( s );
    FAIL( "accepted" );
  }
  catch ( revmap_error const& e )
  {
    CHECK( e.code() == error_code::internal_role_clash );
  }
}

TEST_CASE( "compile rejects invalid and cyclic circuits" )
{
  CHECK_THROWS_AS( compile( make( { "a" }, { "z" }, {} ) ), revmap_error );
  const auto loop = make( { "a", "b" }, { "p" },
                          { { gate_kind::XOR, { "a", "q" }, { "p" } }, { gate_kind::XOR, { "b", "p" }, { "q" } } } );
  CHECK_THROWS_AS( compile( loop ), feedback_error );
}

TEST_CASE( "conversion properties on random circuits" )
{
  for ( uint64_t seed = 0; seed < 200; ++seed )
  {
    const auto c = gen_random_circuit( seed, 1 + seed % 8, seed % 13 );
    const auto slotted = slot_circuit( insert_copiers( c ) );
    const auto result = convert( slotted );
    auto const& r = result.circuit;
    CAPTURE( seed );
    REQUIRE( check_rev_circuit( r ).empty() );

    std::size_t constants = 0, gates = 0;
    for ( auto const& g : slotted.circuit.gates )
    {
      constants += template_for( g.kind ).constant_inputs.size();
      gates += template_for( g.kind ).gate_sequence.size();
    }
    CHECK( r.num_lines() == c.inputs.size() + constants );
    CHECK( r.gates.size() == gates );

    std::size_t po_lines = 0;
    for ( auto const& l : r.lines )
    {
      po_lines += l.is_garbage() ? 0u : 1u;
    }
    CHECK( po_lines == c.outputs.size() );
    check_function( c, r );

    CHECK( replay_trace( result.trace, r ) == r );
    CHECK( convert( slotted ).circuit == r );
    CHECK( conversion_trace( slotted ) == result.trace );
  }
}
