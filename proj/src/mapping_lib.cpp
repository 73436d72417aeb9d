#include <revmap/mapping_lib.hpp>

#include <algorithm>
#include <array>

namespace revmap
{

std::string_view to_string( role r )
{
  switch ( r )
  {
  case role::in1: return "IN1";
  case role::in2: return "IN2";
  case role::anc: return "ANC";
  }
  return "?";
}

std::vector<role> gate_template::roles() const
{
  std::vector<role> used;
  auto note = [&]( role r ) {
    if ( std::find( used.begin(), used.end(), r ) == used.end() )
    {
      used.push_back( r );
    }
  };
  for ( auto const& g : gate_sequence )
  {
    for ( auto c : g.controls )
    {
      note( c );
    }
    note( g.target );
  }
  std::sort( used.begin(), used.end() );
  return used;
}

namespace
{

using enum role;

role_gate not_( role target ) { return { {}, target }; }
role_gate cnot( role control, role target ) { return { { control }, target }; }
role_gate toffoli( role c1, role c2, role target ) { return { { c1, c2 }, target }; }

/* OR/NOR: invert both inputs, Toffoli onto the constant, then undo the inversions */
gate_template inverted_toffoli( gate_kind kind, bool constant, bool restore )
{
  gate_template t{ kind, { constant }, { not_( in1 ), not_( in2 ), toffoli( in1, in2, anc ) }, { anc }, { in1, in2 }, restore };
  if ( restore )
  {
    t.gate_sequence.push_back( not_( in1 ) );
    t.gate_sequence.push_back( not_( in2 ) );
  }
  return t;
}

std::array<gate_template, 8> make_library( bool restore_controls )
{
  return { {
      { gate_kind::NOT, {}, { not_( in1 ) }, { in1 }, {}, true },
      { gate_kind::AND, { false }, { toffoli( in1, in2, anc ) }, { anc }, { in1, in2 }, true },
      { gate_kind::NAND, { true }, { toffoli( in1, in2, anc ) }, { anc }, { in1, in2 }, true },
      inverted_toffoli( gate_kind::OR, true, restore_controls ),
      inverted_toffoli( gate_kind::NOR, false, restore_controls ),
      { gate_kind::XOR, {}, { cnot( in1, in2 ) }, { in2 }, { in1 }, true },
      { gate_kind::XNOR, {}, { cnot( in1, in2 ), not_( in2 ) }, { in2 }, { in1 }, true },
      { gate_kind::COPY, { false }, { cnot( in1, anc ) }, { in1, anc }, {}, true },
  } };
}

} // namespace

gate_template const& template_for( gate_kind kind, template_options const& options )
{
  static const auto restoring = make_library( true );
  static const auto plain = make_library( false );
  auto const& library = options.restore_controls ? restoring : plain;
  return library[static_cast<std::size_t>( kind )];
}

std::size_t template_gate_count( gate_kind kind )
{
  return template_for( kind ).gate_sequence.size();
}

} // namespace revmap
