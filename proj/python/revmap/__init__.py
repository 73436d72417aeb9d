"""Map combinational BLIF circuits onto NOT/CNOT/Toffoli reversible netlists."""

from ._core import (
    CircuitStats,
    EquivalenceReport,
    GateKind,
    IrCircuit,
    IrGate,
    Line,
    RevCircuit,
    RevGate,
    RevmapError,
    Slot,
    SlottedCircuit,
    check_equivalence,
    compile,
    eval_rev,
    format_slot_table,
    gen_random_circuit,
    insert_copiers,
    is_bijective,
    parse_blif,
    parse_intermediate,
    parse_real,
    simulate,
    slot_circuit,
    stats,
    trace,
    write_blif,
    write_intermediate,
    write_real,
)

__all__ = [name for name in dir() if not name.startswith("_")]
