#include <revmap/errors.hpp>

namespace revmap
{

std::string_view to_string( error_code code )
{
  switch ( code )
  {
  case error_code::syntax_error: return "SyntaxError";
  case error_code::unsupported_construct: return "UnsupportedConstruct";
  case error_code::too_many_inputs: return "TooManyInputs";
  case error_code::unrecognized_cover: return "UnrecognizedCover";
  case error_code::constant_cover: return "ConstantCover";
  case error_code::invalid_circuit: return "InvalidCircuit";
  case error_code::feedback_detected: return "FeedbackDetected";
  case error_code::fanout_present: return "FanoutPresent";
  case error_code::stuck: return "Stuck";
  case error_code::internal_role_clash: return "InternalRoleClash";
  case error_code::unsupported_gate: return "UnsupportedGate";
  case error_code::inconsistent_header: return "InconsistentHeader";
  case error_code::state_length_mismatch: return "StateLengthMismatch";
  case error_code::name_mismatch: return "NameMismatch";
  case error_code::too_many_lines: return "TooManyLines";
  case error_code::io_error: return "IoError";
  }
  return "Unknown";
}

namespace
{

std::string describe_cycle( std::vector<uint32_t> const& cycle )
{
  std::string text = "feedback loop through gates";
  for ( auto id : cycle )
  {
    text += " g" + std::to_string( id );
  }
  if ( !cycle.empty() )
  {
    text += " -> g" + std::to_string( cycle.front() );
  }
  return text;
}

} // namespace

feedback_error::feedback_error( std::vector<uint32_t> cycle )
    : revmap_error( error_code::feedback_detected, describe_cycle( cycle ) ), cycle_( std::move( cycle ) )
{
}

} // namespace revmap
