#include <revmap/errors.hpp>
#include <revmap/simulation.hpp>

#include <random>
#include <unordered_map>
#include <unordered_set>

namespace revmap
{

/* irreversible evaluation */

ir_simulator::ir_simulator( ir_circuit const& circuit )
{
  std::unordered_map<std::string, uint32_t> ids;
  auto id_of = [&]( std::string const& net ) {
    return ids.emplace( net, static_cast<uint32_t>( ids.size() ) ).first->second;
  };
  for ( auto const& pi : circuit.inputs )
  {
    input_nets_.push_back( id_of( pi ) );
  }
  for ( auto gate_id : topological_order( circuit ) )
  {
    auto const& g = *circuit.find_gate( gate_id );
    step s{ g.kind, 0u, 0u, 0u, 0u };
    s.in0 = id_of( g.inputs.at( 0 ) );
    s.in1 = g.inputs.size() > 1u ? id_of( g.inputs[1] ) : s.in0;
    s.out0 = id_of( g.outputs.at( 0 ) );
    s.out1 = g.outputs.size() > 1u ? id_of( g.outputs[1] ) : s.out0;
    steps_.push_back( s );
  }
  for ( auto const& po : circuit.outputs )
  {
    output_nets_.push_back( id_of( po ) );
  }
  num_nets_ = ids.size();
}

bit_vector ir_simulator::operator()( bit_vector const& inputs ) const
{
  if ( inputs.size() != input_nets_.size() )
  {
    throw revmap_error( error_code::state_length_mismatch, "expected " + std::to_string( input_nets_.size() ) +
                                                               " input values, got " + std::to_string( inputs.size() ) );
  }
  std::vector<uint8_t> value( num_nets_, 0u );
  for ( std::size_t i = 0; i < inputs.size(); ++i )
  {
    value[input_nets_[i]] = inputs[i];
  }
  for ( auto const& s : steps_ )
  {
    const bool v = evaluate( s.kind, value[s.in0], value[s.in1] );
    value[s.out0] = v;
    value[s.out1] = s.kind == gate_kind::COPY ? v : value[s.out1];
  }
  bit_vector outputs( output_nets_.size() );
  for ( std::size_t i = 0; i < output_nets_.size(); ++i )
  {
    outputs[i] = value[output_nets_[i]];
  }
  return outputs;
}

std::map<std::string, bool> eval_ir( ir_circuit const& circuit, std::map<std::string, bool> const& assignment )
{
  bit_vector inputs;
  for ( auto const& pi : circuit.inputs )
  {
    auto it = assignment.find( pi );
    if ( it == assignment.end() )
    {
      throw revmap_error( error_code::name_mismatch, "no value for primary input " + pi );
    }
    inputs.push_back( it->second );
  }
  const auto values = ir_simulator( circuit )( inputs );
  std::map<std::string, bool> result;
  for ( std::size_t i = 0; i < circuit.outputs.size(); ++i )
  {
    result[circuit.outputs[i]] = values[i];
  }
  return result;
}

/* reversible evaluation */

bit_vector eval_rev( rev_circuit const& circuit, bit_vector state )
{
  if ( state.size() != circuit.lines.size() )
  {
    throw revmap_error( error_code::state_length_mismatch, "state has " + std::to_string( state.size() ) +
                                                               " bits for " + std::to_string( circuit.lines.size() ) +
                                                               " lines" );
  }
  for ( auto const& g : circuit.gates )
  {
    bool active = true;
    for ( auto c : g.controls )
    {
      active = active && state[c];
    }
    if ( active )
    {
      state[g.target] = !state[g.target];
    }
  }
  return state;
}

uint64_t eval_rev_packed( rev_circuit const& circuit, uint64_t state )
{
  for ( auto const& g : circuit.gates )
  {
    uint64_t mask = 0u;
    for ( auto c : g.controls )
    {
      mask |= uint64_t{ 1 } << c;
    }
    if ( ( state & mask ) == mask )
    {
      state ^= uint64_t{ 1 } << g.target;
    }
  }
  return state;
}

uint64_t pack_bits( bit_vector const& bits )
{
  uint64_t word = 0u;
  for ( std::size_t i = 0; i < bits.size() && i < 64u; ++i )
  {
    word |= uint64_t{ bits[i] } << i;
  }
  return word;
}

bit_vector unpack_bits( uint64_t word, std::size_t count )
{
  bit_vector bits( count );
  for ( std::size_t i = 0; i < count && i < 64u; ++i )
  {
    bits[i] = ( word >> i ) & 1u;
  }
  return bits;
}

std::string to_bit_string( bit_vector const& bits )
{
  std::string text;
  text.reserve( bits.size() );
  for ( bool b : bits )
  {
    text += b ? '1' : '0';
  }
  return text;
}

bit_vector from_bit_string( std::string_view text )
{
  bit_vector bits;
  for ( std::size_t i = 0; i < text.size(); ++i )
  {
    if ( text[i] != '0' && text[i] != '1' )
    {
      throw syntax_error( 0u, "bit string may only contain 0 and 1" );
    }
    bits.push_back( text[i] == '1' );
  }
  return bits;
}

/* equivalence */

std::string equivalence_report::summary() const
{
  return std::string( "status=" ) + ( equivalent() ? "Equivalent" : "Mismatch" ) + " checked=" +
         std::to_string( checked ) + " witness=" + ( witness ? to_bit_string( witness->assignment ) : "none" );
}

std::string equivalence_report::to_string() const
{
  std::string text = "mode: ";
  text += mode == mode_t::exhaustive ? "exhaustive" : "sampled (seed " + std::to_string( seed ) + ")";
  text += "\nassignments checked: " + std::to_string( checked ) + "\n";
  text += std::string( "result: " ) + ( equivalent() ? "equivalent" : "MISMATCH" ) + "\n";
  if ( witness )
  {
    text += "witness:";
    for ( std::size_t i = 0; i < input_names.size(); ++i )
    {
      text += " " + input_names[i] + "=" + ( witness->assignment[i] ? "1" : "0" );
    }
    text += "\n";
    for ( std::size_t i = 0; i < output_names.size(); ++i )
    {
      if ( witness->expected[i] != witness->actual[i] )
      {
        text += "  " + output_names[i] + ": expected " + ( witness->expected[i] ? "1" : "0" ) + ", actual " +
                ( witness->actual[i] ? "1" : "0" ) + "\n";
      }
    }
  }
  return text;
}

namespace
{

void check_names( std::vector<std::string> const& expected, std::unordered_set<std::string> const& actual,
                  std::string_view what )
{
  const std::unordered_set<std::string> want( expected.begin(), expected.end() );
  if ( want.size() != actual.size() || want != actual )
  {
    std::string a, b;
    for ( auto const& n : expected )
    {
      a += " " + n;
    }
    for ( auto const& n : actual )
    {
      b += " " + n;
    }
    throw revmap_error( error_code::name_mismatch,
                        std::string( what ) + " names differ: irreversible {" + a + " } vs reversible {" + b + " }" );
  }
}

} // namespace

equivalence_report check_equivalence( ir_circuit const& irreversible, rev_circuit const& reversible,
                                      equivalence_options const& options )
{
  std::unordered_map<std::string, uint32_t> pi_line, po_line;
  std::unordered_set<std::string> pi_names, po_names;
  for ( auto const& l : reversible.lines )
  {
    if ( !l.is_constant() )
    {
      pi_line[l.input_name] = l.index;
      pi_names.insert( l.input_name );
    }
    if ( !l.is_garbage() )
    {
      po_line[l.output_name] = l.index;
      po_names.insert( l.output_name );
    }
  }
  check_names( irreversible.inputs, pi_names, "primary input" );
  check_names( irreversible.outputs, po_names, "primary output" );

  const ir_simulator simulate( irreversible );
  const auto n = irreversible.inputs.size();
  const auto width = reversible.lines.size();
  const bool packed = width <= 64u;

  bit_vector initial( width );
  for ( auto const& l : reversible.lines )
  {
    initial[l.index] = l.is_constant() && l.constant_value;
  }

  equivalence_report report;
  report.input_names = irreversible.inputs;
  report.output_names = irreversible.outputs;
  report.seed = options.seed;

  auto check = [&]( bit_vector const& assignment ) {
    const auto expected = simulate( assignment );
    auto state = initial;
    for ( std::size_t i = 0; i < n; ++i )
    {
      state[pi_line.at( irreversible.inputs[i] )] = assignment[i];
    }
    state = packed ? unpack_bits( eval_rev_packed( reversible, pack_bits( state ) ), width )
                   : eval_rev( reversible, std::move( state ) );
    bit_vector actual( irreversible.outputs.size() );
    for ( std::size_t o = 0; o < actual.size(); ++o )
    {
      actual[o] = state[po_line.at( irreversible.outputs[o] )];
    }
    ++report.checked;
    if ( actual != expected )
    {
      report.status = equivalence_report::status_t::mismatch;
      report.witness = equivalence_witness{ assignment, expected, actual };
      return false;
    }
    return true;
  };

  if ( n <= options.max_exhaustive_inputs && n < 63u )
  {
    report.mode = equivalence_report::mode_t::exhaustive;
    const uint64_t total = uint64_t{ 1 } << n;
    bit_vector assignment( n );
    for ( uint64_t k = 0; k < total; ++k )
    {
      for ( std::size_t i = 0; i < n; ++i )
      {
        assignment[i] = ( k >> ( n - 1u - i ) ) & 1u;
      }
      if ( !check( assignment ) )
      {
        break;
      }
    }
  }
  else
  {
    report.mode = equivalence_report::mode_t::sampled;
    std::mt19937_64 rng( options.seed );
    bit_vector assignment( n );
    for ( std::size_t s = 0; s < options.samples; ++s )
    {
      for ( std::size_t i = 0; i < n; ++i )
      {
        assignment[i] = rng() & 1u;
      }
      if ( !check( assignment ) )
      {
        break;
      }
    }
  }
  return report;
}

bijectivity_report check_bijectivity( rev_circuit const& circuit, std::size_t max_lines )
{
  const auto n = circuit.lines.size();
  if ( n > max_lines || n > 32u )
  {
    throw revmap_error( error_code::too_many_lines, "bijectivity check limited to " + std::to_string( max_lines ) +
                                                        " lines, circuit has " + std::to_string( n ) );
  }
  const uint64_t total = uint64_t{ 1 } << n;
  std::vector<int64_t> preimage( total, -1 );
  bijectivity_report report;
  report.states = static_cast<std::size_t>( total );
  for ( uint64_t s = 0; s < total; ++s )
  {
    const auto image = eval_rev_packed( circuit, s );
    if ( preimage[image] >= 0 )
    {
      report.bijective = false;
      report.collision = std::make_pair( static_cast<uint64_t>( preimage[image] ), s );
      break;
    }
    preimage[image] = static_cast<int64_t>( s );
  }
  return report;
}

/* metrics */

std::size_t quantum_cost( rev_gate const& gate )
{
  switch ( gate.type() )
  {
  case rev_gate_type::t1: return 1u;
  case rev_gate_type::t2: return 1u;
  case rev_gate_type::t3: return 5u;
  }
  return 0u;
}

circuit_stats stats( rev_circuit const& circuit )
{
  circuit_stats s;
  s.lines = circuit.lines.size();
  for ( auto const& l : circuit.lines )
  {
    s.constant_inputs += l.is_constant() ? 1u : 0u;
    s.garbage_outputs += l.is_garbage() ? 1u : 0u;
  }
  s.gate_count = circuit.gates.size();
  for ( auto const& g : circuit.gates )
  {
    s.quantum_cost += quantum_cost( g );
    switch ( g.type() )
    {
    case rev_gate_type::t1: ++s.t1_count; break;
    case rev_gate_type::t2: ++s.t2_count; break;
    case rev_gate_type::t3: ++s.t3_count; break;
    }
  }
  return s;
}

std::string circuit_stats::to_string() const
{
  return "lines=" + std::to_string( lines ) + "\nconstant_inputs=" + std::to_string( constant_inputs ) +
         "\ngarbage_outputs=" + std::to_string( garbage_outputs ) + "\ngate_count=" + std::to_string( gate_count ) +
         "\nquantum_cost=" + std::to_string( quantum_cost ) + "\nt1=" + std::to_string( t1_count ) +
         "\nt2=" + std::to_string( t2_count ) + "\nt3=" + std::to_string( t3_count ) + "\n";
}

/* random circuits */

ir_circuit gen_random_circuit( uint64_t seed, std::size_t num_inputs, std::size_t num_gates )
{
  if ( num_inputs == 0u )
  {
    throw revmap_error( error_code::invalid_circuit, "random circuit needs at least one input" );
  }
  std::mt19937_64 rng( seed );
  auto draw = [&]( std::size_t bound ) { return static_cast<std::size_t>( rng() % bound ); };

  ir_circuit circuit;
  circuit.name = "random_" + std::to_string( seed );
  std::vector<std::string> nets;
  for ( std::size_t i = 0; i < num_inputs; ++i )
  {
    circuit.inputs.push_back( "i" + std::to_string( i ) );
    nets.push_back( circuit.inputs.back() );
  }
  std::vector<std::size_t> sinks( nets.size(), 0u );

  constexpr auto num_kinds = std::size( logic_gate_kinds );
  for ( std::size_t k = 0; k < num_gates; ++k )
  {
    const auto kind = logic_gate_kinds[draw( num_kinds )];
    std::vector<std::string> ins;
    for ( std::size_t p = 0; p < input_arity( kind ); ++p )
    {
      const auto pick = draw( nets.size() );
      ++sinks[pick];
      ins.push_back( nets[pick] );
    }
    nets.push_back( "w" + std::to_string( k ) );
    sinks.push_back( 0u );
    circuit.add_gate( kind, std::move( ins ), { nets.back() } );
  }
  for ( std::size_t i = 0; i < nets.size(); ++i )
  {
    if ( sinks[i] == 0u )
    {
      circuit.outputs.push_back( nets[i] );
    }
  }
  return circuit;
}

} // namespace revmap
