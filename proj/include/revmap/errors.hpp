#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace revmap
{

enum class error_code
{
  syntax_error,
  unsupported_construct,
  too_many_inputs,
  unrecognized_cover,
  constant_cover,
  invalid_circuit,
  feedback_detected,
  fanout_present,
  stuck,
  internal_role_clash,
  unsupported_gate,
  inconsistent_header,
  state_length_mismatch,
  name_mismatch,
  too_many_lines,
  io_error
};

/*! \brief Stable identifier used in `error[<code>]:` diagnostics. */
std::string_view to_string( error_code code );

class revmap_error : public std::runtime_error
{
public:
  revmap_error( error_code code, std::string const& message )
      : std::runtime_error( message ), code_( code )
  {
  }

  error_code code() const noexcept { return code_; }

private:
  error_code code_;
};

/*! \brief Parse error carrying the 1-based source line (0 if unknown). */
class syntax_error : public revmap_error
{
public:
  syntax_error( std::size_t line, std::string const& reason )
      : revmap_error( error_code::syntax_error, "line " + std::to_string( line ) + ": " + reason ), line_( line )
  {
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/*! \brief Raised when a combinational loop is found; carries one witness cycle of gate ids. */
class feedback_error : public revmap_error
{
public:
  explicit feedback_error( std::vector<uint32_t> cycle );

  std::vector<uint32_t> const& cycle() const noexcept { return cycle_; }

private:
  std::vector<uint32_t> cycle_;
};

} // namespace revmap
