#pragma once

#include "ir.hpp"
#include "rev.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace revmap
{

using bit_vector = std::vector<bool>;

/*! \brief Compiled form of an irreversible circuit for repeated evaluation. */
class ir_simulator
{
public:
  /*! \brief Throws feedback_error if the circuit has a loop. */
  explicit ir_simulator( ir_circuit const& circuit );

  /*! \brief Values in primary-input order in, primary-output order out. */
  bit_vector operator()( bit_vector const& inputs ) const;

  std::size_t num_inputs() const { return input_nets_.size(); }
  std::size_t num_outputs() const { return output_nets_.size(); }

private:
  struct step
  {
    gate_kind kind;
    uint32_t in0, in1, out0, out1;
  };

  std::size_t num_nets_{};
  std::vector<uint32_t> input_nets_;
  std::vector<uint32_t> output_nets_;
  std::vector<step> steps_;
};

std::map<std::string, bool> eval_ir( ir_circuit const& circuit, std::map<std::string, bool> const& assignment );

/*! \brief Applies the gate list; throws state_length_mismatch when sizes differ. */
bit_vector eval_rev( rev_circuit const& circuit, bit_vector state );

/*! \brief Packed variant for circuits of at most 64 lines; bit i is line i. */
uint64_t eval_rev_packed( rev_circuit const& circuit, uint64_t state );

uint64_t pack_bits( bit_vector const& bits );
bit_vector unpack_bits( uint64_t word, std::size_t count );
std::string to_bit_string( bit_vector const& bits );
/*! \brief Throws syntax_error on characters other than 0/1. */
bit_vector from_bit_string( std::string_view text );

/* equivalence */

struct equivalence_options
{
  std::size_t max_exhaustive_inputs{ 12u };
  std::size_t samples{ 4096u };
  uint64_t seed{ 1u };
};

struct equivalence_witness
{
  /*! \brief PI assignment, primary-input order. */
  bit_vector assignment;
  bit_vector expected;
  bit_vector actual;
};

struct equivalence_report
{
  enum class status_t
  {
    equivalent,
    mismatch
  };
  enum class mode_t
  {
    exhaustive,
    sampled
  };

  status_t status{ status_t::equivalent };
  mode_t mode{ mode_t::exhaustive };
  std::size_t checked{};
  uint64_t seed{};
  std::optional<equivalence_witness> witness;
  std::vector<std::string> input_names;
  std::vector<std::string> output_names;

  bool equivalent() const { return status == status_t::equivalent; }

  /*! \brief `status=<Equivalent|Mismatch> checked=<n> witness=<bits|none>` */
  std::string summary() const;
  std::string to_string() const;
};

/*! \brief Compares PO lines of the reversible circuit against the irreversible outputs.
 *
 * Exhaustive when the circuit has at most `max_exhaustive_inputs` inputs,
 * otherwise `samples` seeded random assignments. Assignment k of the
 * exhaustive walk sets input 0 to the most significant bit of k.
 */
equivalence_report check_equivalence( ir_circuit const& irreversible, rev_circuit const& reversible,
                                      equivalence_options const& options = {} );

/* bijectivity */

struct bijectivity_report
{
  bool bijective{ true };
  std::size_t states{};
  /*! \brief Two distinct line states with the same image (line i is bit i). */
  std::optional<std::pair<uint64_t, uint64_t>> collision;
};

/*! \brief Throws too_many_lines above `max_lines`. */
bijectivity_report check_bijectivity( rev_circuit const& circuit, std::size_t max_lines = 16u );

/* metrics */

struct circuit_stats
{
  std::size_t lines{};
  std::size_t constant_inputs{};
  std::size_t garbage_outputs{};
  std::size_t gate_count{};
  std::size_t quantum_cost{};
  std::size_t t1_count{};
  std::size_t t2_count{};
  std::size_t t3_count{};

  bool operator==( circuit_stats const& ) const = default;
  std::string to_string() const;
};

/*! \brief Quantum cost per gate: NOT 1, CNOT 1, Toffoli 5. */
std::size_t quantum_cost( rev_gate const& gate );

circuit_stats stats( rev_circuit const& circuit );

/* random circuits */

/*! \brief Deterministic random circuit; unread nets become primary outputs. */
ir_circuit gen_random_circuit( uint64_t seed, std::size_t num_inputs, std::size_t num_gates );

} // namespace revmap
