#include "oracles.hpp"

#include <revmap/mapping_lib.hpp>

#include <doctest.h>

#include <set>

using namespace revmap;

namespace
{

/* runs a template on explicit role values; roles index a small state vector in roles() order */
std::map<role, int> run( gate_template const& t, int a, int b )
{
  std::map<role, int> state;
  std::size_t next_constant = 0;
  for ( auto r : t.roles() )
  {
    if ( r == role::in1 )
    {
      state[r] = a;
    }
    else if ( r == role::in2 )
    {
      state[r] = b;
    }
    else
    {
      state[r] = t.constant_inputs.at( next_constant++ );
    }
  }
  for ( auto const& g : t.gate_sequence )
  {
    int fire = 1;
    for ( auto c : g.controls )
    {
      fire &= state.at( c );
    }
    state.at( g.target ) ^= fire;
  }
  return state;
}

} // namespace

TEST_CASE( "every template computes its gate on all assignments" )
{
  for ( bool restore : { true, false } )
  {
    for ( auto kind : all_gate_kinds )
    {
      auto const& t = template_for( kind, { restore } );
      CAPTURE( to_string( kind ) );
      CHECK( t.kind == kind );
      const auto table = oracle::truth_table( kind );
      const bool unary = input_arity( kind ) == 1u;
      for ( int a = 0; a < 2; ++a )
      {
        for ( int b = 0; b < ( unary ? 1 : 2 ); ++b )
        {
          const auto state = run( t, a, b );
          const int expected = unary ? table[a] : table[a * 2 + b];
          if ( kind == gate_kind::COPY )
          {
            REQUIRE( t.output_roles.size() == 2u );
            CHECK( state.at( t.output_roles[0] ) == a );
            CHECK( state.at( t.output_roles[1] ) == a );
          }
          else
          {
            REQUIRE( t.output_roles.size() == 1u );
            CHECK( state.at( t.output_roles[0] ) == expected );
          }
          if ( t.restored )
          {
            for ( auto r : t.garbage_roles )
            {
              CHECK( state.at( r ) == ( r == role::in1 ? a : b ) );
            }
          }
        }
      }
    }
  }
}

TEST_CASE( "roles are split into outputs and garbage" )
{
  for ( auto kind : all_gate_kinds )
  {
    auto const& t = template_for( kind );
    std::multiset<role> all( t.output_roles.begin(), t.output_roles.end() );
    all.insert( t.garbage_roles.begin(), t.garbage_roles.end() );
    const auto roles = t.roles();
    CHECK( all == std::multiset<role>( roles.begin(), roles.end() ) );
    for ( auto const& g : t.gate_sequence )
    {
      CHECK( g.controls.size() <= 2u );
      for ( auto c : g.controls )
      {
        CHECK( c != g.target );
      }
    }
  }
}

TEST_CASE( "template shapes" )
{
  using enum role;
  auto const& and_t = template_for( gate_kind::AND );
  CHECK( and_t.constant_inputs == std::vector<bool>{ false } );
  CHECK( and_t.gate_sequence == std::vector<role_gate>{ { { in1, in2 }, anc } } );
  CHECK( and_t.output_roles == std::vector<role>{ anc } );

  auto const& nand_t = template_for( gate_kind::NAND );
  CHECK( nand_t.constant_inputs == std::vector<bool>{ true } );
  CHECK( nand_t.gate_sequence == and_t.gate_sequence );

  auto const& or_t = template_for( gate_kind::OR );
  CHECK( or_t.constant_inputs == std::vector<bool>{ true } );
  CHECK( or_t.gate_sequence == std::vector<role_gate>{ { {}, in1 }, { {}, in2 }, { { in1, in2 }, anc }, { {}, in1 }, { {}, in2 } } );
  auto const& nor_t = template_for( gate_kind::NOR );
  CHECK( nor_t.constant_inputs == std::vector<bool>{ false } );
  CHECK( nor_t.gate_sequence == or_t.gate_sequence );

  auto const& plain_or = template_for( gate_kind::OR, { false } );
  CHECK( plain_or.gate_sequence.size() == 3u );
  CHECK_FALSE( plain_or.restored );
  CHECK( template_for( gate_kind::AND, { false } ).gate_sequence == and_t.gate_sequence );

  auto const& xor_t = template_for( gate_kind::XOR );
  CHECK( xor_t.constant_inputs.empty() );
  CHECK( xor_t.gate_sequence == std::vector<role_gate>{ { { in1 }, in2 } } );
  CHECK( xor_t.output_roles == std::vector<role>{ in2 } );
  CHECK( xor_t.garbage_roles == std::vector<role>{ in1 } );

  CHECK( template_for( gate_kind::XNOR ).gate_sequence == std::vector<role_gate>{ { { in1 }, in2 }, { {}, in2 } } );
  CHECK( template_for( gate_kind::NOT ).gate_sequence == std::vector<role_gate>{ { {}, in1 } } );
  auto const& copy_t = template_for( gate_kind::COPY );
  CHECK( copy_t.constant_inputs == std::vector<bool>{ false } );
  CHECK( copy_t.gate_sequence == std::vector<role_gate>{ { { in1 }, anc } } );
  CHECK( copy_t.output_roles == std::vector<role>{ in1, anc } );
}

TEST_CASE( "template gate counts" )
{
  const std::map<gate_kind, std::size_t> expected{ { gate_kind::NOT, 1u }, { gate_kind::AND, 1u }, { gate_kind::NAND, 1u },
                                                   { gate_kind::OR, 5u },  { gate_kind::NOR, 5u }, { gate_kind::XOR, 1u },
                                                   { gate_kind::XNOR, 2u }, { gate_kind::COPY, 1u } };
  for ( auto const& [kind, count] : expected )
  {
    CHECK( template_gate_count( kind ) == count );
    CHECK( template_for( kind ).gate_sequence.size() == count );
  }
}

TEST_CASE( "NAND and NOR differ from AND and OR only in the constant" )
{
  CHECK( template_for( gate_kind::NAND ).constant_inputs[0] != template_for( gate_kind::AND ).constant_inputs[0] );
  CHECK( template_for( gate_kind::NOR ).constant_inputs[0] != template_for( gate_kind::OR ).constant_inputs[0] );
}
