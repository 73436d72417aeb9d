#include <revmap/revmap.hpp>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace revmap;

PYBIND11_MODULE( _core, m )
{
  m.doc() = "BLIF to NOT/CNOT/Toffoli reversible circuit mapping";

  static py::exception<revmap_error> error( m, "RevmapError" );
  py::register_exception_translator( []( std::exception_ptr p ) {
    try
    {
      if ( p )
      {
        std::rethrow_exception( p );
      }
    }
    catch ( revmap_error const& e )
    {
      py::set_error( error, ( std::string( to_string( e.code() ) ) + ": " + e.what() ).c_str() );
    }
  } );

  py::enum_<gate_kind>( m, "GateKind" )
      .value( "NOT", gate_kind::NOT )
      .value( "AND", gate_kind::AND )
      .value( "NAND", gate_kind::NAND )
      .value( "OR", gate_kind::OR )
      .value( "NOR", gate_kind::NOR )
      .value( "XOR", gate_kind::XOR )
      .value( "XNOR", gate_kind::XNOR )
      .value( "COPY", gate_kind::COPY );

  py::class_<ir_gate>( m, "IrGate" )
      .def_readonly( "id", &ir_gate::id )
      .def_readonly( "kind", &ir_gate::kind )
      .def_readonly( "inputs", &ir_gate::inputs )
      .def_readonly( "outputs", &ir_gate::outputs )
      .def_property_readonly( "name", &ir_gate::name )
      .def( py::self == py::self );

  py::class_<ir_circuit>( m, "IrCircuit" )
      .def( py::init<>() )
      .def_readwrite( "name", &ir_circuit::name )
      .def_readwrite( "inputs", &ir_circuit::inputs )
      .def_readwrite( "outputs", &ir_circuit::outputs )
      .def_readonly( "gates", &ir_circuit::gates )
      .def( "add_gate", &ir_circuit::add_gate, py::arg( "kind" ), py::arg( "inputs" ), py::arg( "outputs" ),
            py::arg( "label" ) = "" )
      .def( py::self == py::self );

  py::class_<rev_gate>( m, "RevGate" )
      .def_readonly( "controls", &rev_gate::controls )
      .def_readonly( "target", &rev_gate::target )
      .def( py::self == py::self );

  py::class_<line>( m, "Line" )
      .def_readonly( "index", &line::index )
      .def_readonly( "name", &line::name )
      .def_readonly( "constant_value", &line::constant_value )
      .def_readonly( "output_name", &line::output_name )
      .def_property_readonly( "is_constant", &line::is_constant )
      .def_property_readonly( "is_garbage", &line::is_garbage );

  py::class_<rev_circuit>( m, "RevCircuit" )
      .def_readonly( "name", &rev_circuit::name )
      .def_readonly( "lines", &rev_circuit::lines )
      .def_readonly( "gates", &rev_circuit::gates )
      .def_property_readonly( "num_lines", &rev_circuit::num_lines )
      .def( py::self == py::self );

  py::class_<slot>( m, "Slot" ).def_readonly( "gates", &slot::gates ).def_readonly( "nets", &slot::nets );
  py::class_<slotted_circuit>( m, "SlottedCircuit" )
      .def_readonly( "circuit", &slotted_circuit::circuit )
      .def_readonly( "slots", &slotted_circuit::slots );

  py::class_<equivalence_report>( m, "EquivalenceReport" )
      .def_property_readonly( "equivalent", &equivalence_report::equivalent )
      .def_readonly( "checked", &equivalence_report::checked )
      .def_readonly( "seed", &equivalence_report::seed )
      .def_property_readonly( "exhaustive",
                              []( equivalence_report const& r ) { return r.mode == equivalence_report::mode_t::exhaustive; } )
      .def_property_readonly( "witness",
                              []( equivalence_report const& r ) -> py::object {
                                if ( !r.witness )
                                {
                                  return py::none();
                                }
                                return py::make_tuple( r.witness->assignment, r.witness->expected, r.witness->actual );
                              } )
      .def( "summary", &equivalence_report::summary )
      .def( "__str__", &equivalence_report::to_string );

  py::class_<circuit_stats>( m, "CircuitStats" )
      .def_readonly( "lines", &circuit_stats::lines )
      .def_readonly( "constant_inputs", &circuit_stats::constant_inputs )
      .def_readonly( "garbage_outputs", &circuit_stats::garbage_outputs )
      .def_readonly( "gate_count", &circuit_stats::gate_count )
      .def_readonly( "quantum_cost", &circuit_stats::quantum_cost )
      .def( "__str__", &circuit_stats::to_string );

  m.def( "parse_blif", []( std::string const& text ) { return parse_blif( text ); } );
  m.def( "parse_intermediate", []( std::string const& text ) { return parse_intermediate( text ); } );
  m.def( "write_blif", &write_blif );
  m.def( "write_intermediate", &write_intermediate );
  m.def( "insert_copiers", &insert_copiers );
  m.def( "slot_circuit", &slot_circuit );
  m.def( "format_slot_table", &format_slot_table );
  m.def(
      "compile",
      []( ir_circuit const& c, bool restore_controls ) { return compile( c, { restore_controls } ).circuit; },
      py::arg( "circuit" ), py::arg( "restore_controls" ) = true );
  m.def(
      "trace",
      []( ir_circuit const& c, bool restore_controls ) { return format_trace( compile( c, { restore_controls } ).trace ); },
      py::arg( "circuit" ), py::arg( "restore_controls" ) = true );
  m.def( "write_real", &write_real );
  m.def(
      "parse_real", []( std::string const& text, std::string name ) { return parse_real( text, std::move( name ) ); },
      py::arg( "text" ), py::arg( "name" ) = "" );
  m.def( "simulate", []( ir_circuit const& c, bit_vector const& inputs ) { return ir_simulator( c )( inputs ); } );
  m.def( "eval_rev", &eval_rev );
  m.def(
      "check_equivalence",
      []( ir_circuit const& c, rev_circuit const& r, std::size_t max_exhaustive, std::size_t samples, uint64_t seed ) {
        return check_equivalence( c, r, { max_exhaustive, samples, seed } );
      },
      py::arg( "irreversible" ), py::arg( "reversible" ), py::arg( "max_exhaustive_inputs" ) = 12u,
      py::arg( "samples" ) = 4096u, py::arg( "seed" ) = 1u );
  m.def(
      "is_bijective", []( rev_circuit const& r, std::size_t max_lines ) { return check_bijectivity( r, max_lines ).bijective; },
      py::arg( "circuit" ), py::arg( "max_lines" ) = 16u );
  m.def( "stats", &stats );
  m.def( "gen_random_circuit", &gen_random_circuit, py::arg( "seed" ), py::arg( "num_inputs" ), py::arg( "num_gates" ) );
}
