#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revmap
{

/*! \brief Irreversible gate kinds. COPY only appears in the intermediate (fanout-free) format. */
enum class gate_kind : uint8_t
{
  NOT,
  AND,
  NAND,
  OR,
  NOR,
  XOR,
  XNOR,
  COPY
};

inline constexpr gate_kind all_gate_kinds[] = { gate_kind::NOT, gate_kind::AND, gate_kind::NAND, gate_kind::OR,
                                                gate_kind::NOR, gate_kind::XOR, gate_kind::XNOR, gate_kind::COPY };

/*! \brief The seven kinds a user circuit may contain. */
inline constexpr gate_kind logic_gate_kinds[] = { gate_kind::NOT, gate_kind::AND, gate_kind::NAND, gate_kind::OR,
                                                  gate_kind::NOR, gate_kind::XOR, gate_kind::XNOR };

std::string_view to_string( gate_kind kind );
std::optional<gate_kind> gate_kind_from_string( std::string_view name );

std::size_t input_arity( gate_kind kind );
std::size_t output_arity( gate_kind kind );

/*! \brief Boolean function of a single-output kind; COPY evaluates to its input. */
bool evaluate( gate_kind kind, bool a, bool b = false );

struct ir_gate
{
  /*! \brief 1-based declaration ordinal. */
  uint32_t id{};
  gate_kind kind{};
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  /*! \brief Optional display name; empty means `g<id>`. Not serialized to BLIF. */
  std::string label;

  std::string name() const { return label.empty() ? "g" + std::to_string( id ) : label; }

  bool operator==( ir_gate const& ) const = default;
};

struct ir_circuit
{
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<ir_gate> gates;

  /*! \brief Appends a gate with the next free id and returns that id. */
  uint32_t add_gate( gate_kind kind, std::vector<std::string> inputs, std::vector<std::string> outputs,
                     std::string label = {} );

  /*! \brief Reassigns ids 1..n in vector order. */
  void renumber();

  ir_gate const* find_gate( uint32_t id ) const;

  bool operator==( ir_circuit const& ) const = default;
};

/* validation */

enum class violation_kind
{
  multiple_drivers,
  undriven_output,
  undriven_input,
  bad_arity,
  duplicate_name,
  invalid_name
};

std::string_view to_string( violation_kind kind );

struct violation
{
  violation_kind kind;
  /*! \brief Offending net name, or gate name for bad_arity. */
  std::string element;

  bool operator==( violation const& ) const = default;
};

struct validation_report
{
  std::vector<violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

bool is_valid_net_name( std::string_view name );

validation_report validate_circuit( ir_circuit const& circuit );

/*! \brief Throws invalid_circuit with the full report when validation fails. */
void require_valid( ir_circuit const& circuit );

/*! \brief Returns one witness cycle (gate ids in data-flow order, smallest id first) or nullopt when acyclic. */
std::optional<std::vector<uint32_t>> detect_cycles( ir_circuit const& circuit );

/*! \brief Gate ids in a deterministic topological order; throws feedback_error on a loop. */
std::vector<uint32_t> topological_order( ir_circuit const& circuit );

} // namespace revmap
