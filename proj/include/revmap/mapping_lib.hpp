#pragma once

#include "ir.hpp"
#include "rev.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace revmap
{

/*! \brief Template line roles: the gate's inputs and its (at most one) ancilla. */
enum class role : uint8_t
{
  in1,
  in2,
  anc
};

std::string_view to_string( role r );

struct role_gate
{
  std::vector<role> controls;
  role target;

  rev_gate_type type() const { return static_cast<rev_gate_type>( controls.size() ); }

  bool operator==( role_gate const& ) const = default;
};

struct gate_template
{
  gate_kind kind;
  /*! \brief One fresh constant line per entry, bound to role anc. */
  std::vector<bool> constant_inputs;
  std::vector<role_gate> gate_sequence;
  /*! \brief Lines carrying the gate outputs, in output order (two for COPY). */
  std::vector<role> output_roles;
  std::vector<role> garbage_roles;
  /*! \brief Garbage lines end with their original input values. */
  bool restored{ true };

  /*! \brief Roles the template touches, in in1, in2, anc order. */
  std::vector<role> roles() const;
};

struct template_options
{
  /*! \brief OR/NOR undo their input inversions so garbage lines hold the inputs again. */
  bool restore_controls{ true };
};

gate_template const& template_for( gate_kind kind, template_options const& options = {} );

/*! \brief Gate-sequence length of the default template. */
std::size_t template_gate_count( gate_kind kind );

} // namespace revmap
