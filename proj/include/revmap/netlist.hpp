#pragma once

#include "ir.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace revmap
{

enum class source_kind : uint8_t
{
  none,
  primary_input,
  gate
};

struct net_source
{
  source_kind kind{ source_kind::none };
  uint32_t gate_id{};

  bool operator==( net_source const& ) const = default;
};

struct net_sink
{
  /*! \brief True for a primary output reference; gate_id and pin are then unused. */
  bool primary_output{};
  uint32_t gate_id{};
  uint32_t pin{};

  static net_sink po() { return { true, 0u, 0u }; }
  static net_sink gate( uint32_t id, uint32_t pin ) { return { false, id, pin }; }

  bool operator==( net_sink const& ) const = default;
};

struct net_record
{
  std::string net;
  net_source source;
  std::vector<net_sink> sinks;
};

/*! \brief Per-net source/sink bookkeeping, records kept in first-appearance order. */
class net_list
{
public:
  net_record& get_or_add( std::string const& net );
  net_record const* find( std::string const& net ) const;

  std::vector<net_record> const& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

private:
  std::vector<net_record> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

/*! \brief Builds the net list: PIs as sources, POs as sinks, then every gate's pins in declaration order. */
net_list build_netlist( ir_circuit const& circuit );

} // namespace revmap
