#pragma once

#include "blif.hpp"
#include "converter.hpp"
#include "errors.hpp"
#include "fanout.hpp"
#include "ir.hpp"
#include "mapping_lib.hpp"
#include "netlist.hpp"
#include "real.hpp"
#include "rev.hpp"
#include "simulation.hpp"
#include "slotting.hpp"
