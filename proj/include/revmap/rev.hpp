#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace revmap
{

enum class rev_gate_type : uint8_t
{
  t1, /* NOT */
  t2, /* Feynman / CNOT */
  t3  /* Toffoli */
};

/*! \brief A multiple-control Toffoli gate with zero, one or two positive controls. */
struct rev_gate
{
  std::vector<uint32_t> controls;
  uint32_t target{};

  static rev_gate t1( uint32_t target ) { return { {}, target }; }
  static rev_gate t2( uint32_t control, uint32_t target ) { return { { control }, target }; }
  static rev_gate t3( uint32_t c1, uint32_t c2, uint32_t target ) { return { { c1, c2 }, target }; }

  rev_gate_type type() const { return static_cast<rev_gate_type>( controls.size() ); }

  bool operator==( rev_gate const& ) const = default;
};

enum class line_origin : uint8_t
{
  primary_input,
  constant
};

enum class line_terminal : uint8_t
{
  primary_output,
  garbage
};

struct line
{
  uint32_t index{};
  /*! \brief Variable name in `.real`; PI lines carry the PI net name. */
  std::string name;
  line_origin origin{ line_origin::primary_input };
  /*! \brief Primary input name (origin primary_input). */
  std::string input_name;
  /*! \brief Initial bit (origin constant). */
  bool constant_value{};
  line_terminal terminal{ line_terminal::garbage };
  /*! \brief Primary output name (terminal primary_output). */
  std::string output_name;

  bool is_constant() const { return origin == line_origin::constant; }
  bool is_garbage() const { return terminal == line_terminal::garbage; }

  bool operator==( line const& ) const = default;
};

struct rev_circuit
{
  std::string name;
  std::vector<line> lines;
  std::vector<rev_gate> gates;

  std::size_t num_lines() const { return lines.size(); }

  bool operator==( rev_circuit const& ) const = default;
};

/*! \brief Empty string when well-formed, otherwise the first broken invariant. */
std::string check_rev_circuit( rev_circuit const& circuit );

} // namespace revmap
