"""Gate-level netlists: structure checks, dense simulation, envelopes."""

import pytest

from inertia.circuit import (
    BridcDelay,
    Envelope,
    FixedDelay,
    Gate,
    Netlist,
    NetlistError,
    classify_delay,
    delay_from_dict,
    delay_to_dict,
    envelope_propagate,
    netlist_from_dict,
    netlist_to_dict,
    simulate,
)
from inertia.conditions import BdcParams, ConsistencyError
from inertia.signals import Signal

NOT = (1, 0)
AND = (0, 0, 0, 1)
NOR = (1, 0, 0, 0)
BUF = (0, 1)


def single(gate):
    return Netlist(tuple(gate.inputs), (gate,), (gate.name,))


# -- worked examples ----------------------------------------------------------


def test_not_gate_with_fixed_delay():
    n = single(Gate("y", ("a",), NOT, FixedDelay(1)))
    out = simulate(n, {"a": Signal(0, (0, 2))}, (-2, 8))
    assert out["y"] == Signal(1, (1, 3))


def test_and_gate_with_fixed_delay():
    n = Netlist(("a", "b"), (Gate("y", ("a", "b"), AND, FixedDelay(2)),), ("y",))
    out = simulate(n, {"a": Signal(0, (0,)), "b": Signal(0, (1,))}, (-2, 10))
    assert out["y"] == Signal(0, (3,))


def test_not_gate_with_windowed_delay_swallows_the_pulse():
    n = single(Gate("y", ("a",), NOT, BridcDelay(BdcParams(1, 2, 1, 2))))
    out = simulate(n, {"a": Signal(0, (0, 1))}, (-2, 10))
    assert out["y"] == Signal.const(1)


# -- delay models -------------------------------------------------------------


def test_delay_classification():
    assert classify_delay(FixedDelay(3)) == "ideal"
    assert classify_delay(BridcDelay(BdcParams(1, 2, 1, 2))) == "inertial"
    assert classify_delay(BridcDelay(BdcParams(0, 2, 0, 2))) == "ideal"


def test_delay_validation():
    with pytest.raises(NetlistError):
        FixedDelay(-1)
    with pytest.raises(ConsistencyError):
        BridcDelay(BdcParams(0, 3, 0, 2))


def test_delay_dict_round_trip():
    for model in (FixedDelay(2), BridcDelay(BdcParams(1, 3, 0, 2))):
        assert delay_from_dict(delay_to_dict(model)) == model
    with pytest.raises(NetlistError):
        delay_from_dict({"kind": "bogus"})


def test_delay_latency_bounds():
    assert FixedDelay(3).min_latency == 3
    assert BridcDelay(BdcParams(2, 3, 1, 4)).min_latency == 1
    assert BridcDelay(BdcParams(2, 3, 1, 4)).lookback == 4


# -- structural validation ------------------------------------------------------


def test_gate_table_must_match_arity():
    with pytest.raises(NetlistError):
        Gate("y", ("a", "b"), NOT, FixedDelay(0))
    with pytest.raises(NetlistError):
        Gate("y", ("a",), (0, 2), FixedDelay(0))


def test_undriven_net_is_rejected():
    with pytest.raises(NetlistError):
        Netlist(("a",), (Gate("y", ("ghost",), BUF, FixedDelay(1)),), ("y",))
    with pytest.raises(NetlistError):
        Netlist(("a",), (), ("ghost",))


def test_double_driver_is_rejected():
    with pytest.raises(NetlistError):
        Netlist(
            ("a",),
            (
                Gate("y", ("a",), BUF, FixedDelay(1)),
                Gate("y", ("a",), NOT, FixedDelay(1)),
            ),
            ("y",),
        )


def test_zero_delay_cycle_is_rejected():
    with pytest.raises(NetlistError):
        Netlist(
            ("a",),
            (
                Gate("x", ("y",), BUF, FixedDelay(0)),
                Gate("y", ("x",), BUF, FixedDelay(0)),
            ),
            ("x",),
        )


def test_netlist_dict_round_trip():
    n = Netlist(
        ("a", "b"),
        (Gate("y", ("a", "b"), AND, BridcDelay(BdcParams(1, 2, 1, 2))),),
        ("y",),
    )
    d = netlist_to_dict(n)
    assert d["gates"][0]["delay"] == {"kind": "bridc", "mr": 1, "dr": 2, "mf": 1, "df": 2}
    assert netlist_from_dict(d) == n


# -- simulation ------------------------------------------------------------------


def test_simulation_input_checks():
    n = single(Gate("y", ("a",), BUF, FixedDelay(1)))
    with pytest.raises(NetlistError):
        simulate(n, {}, (0, 5))
    with pytest.raises(NetlistError):
        simulate(n, {"a": Signal.const(0), "zz": Signal.const(0)}, (0, 5))
    with pytest.raises(NetlistError):
        simulate(n, {"a": Signal.const(0)}, (5, 0))


def test_horizon_placement_does_not_change_the_traces():
    n = single(Gate("y", ("a",), NOT, BridcDelay(BdcParams(1, 3, 1, 3))))
    stim = {"a": Signal(0, (0, 2, 4, 9))}
    full = simulate(n, stim, (-5, 20))
    part = simulate(n, stim, (3, 11))
    assert full["y"] == Signal(1, (3, 5, 7, 12))
    assert part["y"].values_on(3, 11) == full["y"].values_on(3, 11)


def test_feedback_latch_holds_its_state():
    latch = Netlist(
        ("s", "r"),
        (
            Gate("q", ("r", "qb"), NOR, FixedDelay(1)),
            Gate("qb", ("s", "q"), NOR, FixedDelay(1)),
        ),
        ("q", "qb"),
    )
    assert latch.has_feedback
    out = simulate(latch, {"s": Signal(0, (5, 7)), "r": Signal(1, (2,))}, (0, 14))
    # the set pulse ends at 7, yet q stays up: the loop is storing it
    assert out["q"] == Signal(0, (7,))
    assert out["qb"] == Signal(1, (6,))


def test_unsettled_feedback_is_reported():
    ring = Netlist((), (Gate("y", ("y",), NOT, FixedDelay(1)),), ("y",))
    with pytest.raises(NetlistError):
        simulate(ring, {}, (0, 5))


# -- envelopes --------------------------------------------------------------------


def test_envelope_of_a_single_windowed_wire():
    n = single(Gate("x", ("u",), BUF, BridcDelay(BdcParams(1, 3, 1, 3))))
    env = envelope_propagate(n, {"u": Envelope.exact(Signal(0, (0, 5)))})
    assert env["x"].low == Signal(0, (3, 7))
    assert env["x"].high == Signal(0, (2, 8))


def test_envelope_of_an_ideal_wire_is_exact():
    n = single(Gate("x", ("u",), BUF, BridcDelay(BdcParams(0, 2, 0, 2))))
    env = envelope_propagate(n, {"u": Envelope.exact(Signal(0, (0, 5)))})
    assert env["x"].low == env["x"].high == Signal(0, (2, 7))


def test_envelope_and_with_a_constant_zero_pins_the_output():
    n = Netlist(
        ("a", "b"),
        (Gate("y", ("a", "b"), AND, FixedDelay(2)),),
        ("y",),
    )
    unknown = Envelope(Signal.const(0), Signal.const(1))
    env = envelope_propagate(
        n, {"a": Envelope.exact(Signal.const(0)), "b": unknown}
    )
    assert env["y"].low == env["y"].high == Signal.const(0)


def test_envelope_requires_an_acyclic_netlist():
    latch = Netlist(
        ("s",),
        (
            Gate("q", ("s", "qb"), NOR, FixedDelay(1)),
            Gate("qb", ("q",), NOT, FixedDelay(1)),
        ),
        ("q",),
    )
    with pytest.raises(NetlistError):
        envelope_propagate(latch, {"s": Envelope.exact(Signal.const(0))})


def test_envelope_brackets_the_simulation():
    n = Netlist(
        ("a", "b"),
        (
            Gate("m", ("a", "b"), AND, BridcDelay(BdcParams(1, 2, 1, 2))),
            Gate("y", ("m",), NOT, FixedDelay(1)),
        ),
        ("y",),
    )
    stims = {"a": Signal(0, (0, 6)), "b": Signal(0, (1, 9))}
    traces = simulate(n, stims, (-2, 16))
    envs = envelope_propagate(n, {k: Envelope.exact(v) for k, v in stims.items()})
    for net in ("m", "y"):
        assert envs[net].low.leq(traces[net])
        assert traces[net].leq(envs[net].high)


def test_envelope_ordering_is_validated():
    with pytest.raises(NetlistError):
        Envelope(Signal.const(1), Signal.const(0))
