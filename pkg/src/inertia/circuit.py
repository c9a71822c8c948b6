"""Gate-level simulation with explicit delay elements.

A gate is a zero-delay truth table feeding one delay element; its name
doubles as its output net.  Delays are either fixed shifts or the
deterministic inertial transfer (memory parameters filter pulses shorter
than the memory).  Feedback is legal only through delays that look back
at least one tick, which makes the tick-by-tick fixed point unique; the
simulator sweeps a padded tick range densely, so results are exact and
bit-reproducible regardless of gate listing order.

Envelope propagation pushes lower/upper signal pairs through the same
netlist conservatively (per-gate corner enumeration, no cross-net
correlation), for acyclic netlists only.
"""

from dataclasses import dataclass
from itertools import product

from .conditions import BdcParams, bdc_max_solution, bdc_min_solution, require_cc
from .signals import Signal, Tick

MAX_GATE_ARITY = 8


class NetlistError(ValueError):
    """Structurally invalid netlist, stimuli or simulation request."""


# -- delay models -----------------------------------------------------------


@dataclass(frozen=True)
class FixedDelay:
    """Pure shift by d ticks."""

    d: int

    def __post_init__(self):
        if self.d < 0:
            raise NetlistError(f"fixed delay must be >= 0, got {self.d}")

    @property
    def lookback(self) -> int:
        return self.d

    @property
    def min_latency(self) -> int:
        return self.d


@dataclass(frozen=True)
class BridcDelay:
    """Deterministic bounded/inertial delay driven by BdcParams (mu = m,
    delta = d); memories > 0 swallow pulses shorter than the memory."""

    params: BdcParams

    def __post_init__(self):
        require_cc(self.params)

    @property
    def lookback(self) -> int:
        return max(self.params.dr, self.params.df)

    @property
    def min_latency(self) -> int:
        p = self.params
        return min(p.dr - p.mr, p.df - p.mf)


DelayModel = FixedDelay | BridcDelay


def classify_delay(model: DelayModel) -> str:
    """'ideal' for pure shifts, 'inertial' when memory filters pulses."""
    if isinstance(model, FixedDelay):
        return "ideal"
    p = model.params
    return "inertial" if (p.mr > 0 or p.mf > 0) else "ideal"


def delay_to_dict(model: DelayModel) -> dict:
    if isinstance(model, FixedDelay):
        return {"kind": "fixed", "d": model.d}
    return {"kind": "bridc", **model.params.as_dict()}


def delay_from_dict(obj: dict) -> DelayModel:
    kind = obj.get("kind")
    if kind == "fixed":
        return FixedDelay(int(obj["d"]))
    if kind == "bridc":
        return BridcDelay(BdcParams.from_dict(obj))
    raise NetlistError(f"unknown delay kind in {obj!r}")


# -- netlist ----------------------------------------------------------------


@dataclass(frozen=True)
class Gate:
    """Truth table plus output delay; the gate name is its output net.

    Table indexing is most-significant-bit-first over `inputs`: the row
    for input bits (b0, b1, ...) is table[b0 << (k-1) | ... | b_{k-1}].
    """

    name: str
    inputs: tuple[str, ...]
    table: tuple[int, ...]
    delay: DelayModel

    def __post_init__(self):
        if not isinstance(self.inputs, tuple):
            object.__setattr__(self, "inputs", tuple(self.inputs))
        if not isinstance(self.table, tuple):
            object.__setattr__(self, "table", tuple(self.table))
        k = len(self.inputs)
        if k > MAX_GATE_ARITY:
            raise NetlistError(f"gate {self.name!r} has {k} inputs, max is {MAX_GATE_ARITY}")
        if len(self.table) != 1 << k:
            raise NetlistError(
                f"gate {self.name!r} needs a table of {1 << k} entries, "
                f"got {len(self.table)}"
            )
        if any(v not in (0, 1) for v in self.table):
            raise NetlistError(f"gate {self.name!r} table entries must be 0/1")

    def eval_bits(self, bits) -> int:
        idx = 0
        for b in bits:
            idx = (idx << 1) | b
        return self.table[idx]


@dataclass(frozen=True)
class Netlist:
    inputs: tuple[str, ...]
    gates: tuple[Gate, ...]
    outputs: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.inputs, tuple):
            object.__setattr__(self, "inputs", tuple(self.inputs))
        if not isinstance(self.gates, tuple):
            object.__setattr__(self, "gates", tuple(self.gates))
        if not isinstance(self.outputs, tuple):
            object.__setattr__(self, "outputs", tuple(self.outputs))
        driven = list(self.inputs) + [g.name for g in self.gates]
        seen = set()
        for net in driven:
            if net in seen:
                raise NetlistError(f"net {net!r} driven more than once")
            seen.add(net)
        for g in self.gates:
            for net in g.inputs:
                if net not in seen:
                    raise NetlistError(f"gate {g.name!r} reads undriven net {net!r}")
        for net in self.outputs:
            if net not in seen:
                raise NetlistError(f"output net {net!r} is undriven")
        cycle = _find_cycle(self.gates, zero_latency_only=True)
        if cycle:
            raise NetlistError(
                "zero-delay cycle through gates " + " -> ".join(cycle)
            )

    @property
    def has_feedback(self) -> bool:
        return _find_cycle(self.gates, zero_latency_only=False) is not None

    def gate_map(self) -> dict[str, Gate]:
        return {g.name: g for g in self.gates}


def _find_cycle(gates, zero_latency_only: bool) -> list[str] | None:
    by_name = {g.name: g for g in gates}
    deps: dict[str, list[str]] = {}
    for g in gates:
        if zero_latency_only and g.delay.min_latency > 0:
            deps[g.name] = []
        else:
            deps[g.name] = [n for n in g.inputs if n in by_name]
    state: dict[str, int] = {}
    stack: list[str] = []

    def visit(n: str) -> list[str] | None:
        state[n] = 1
        stack.append(n)
        for m in deps[n]:
            if state.get(m, 0) == 1:
                return stack[stack.index(m):] + [m]
            if state.get(m, 0) == 0:
                found = visit(m)
                if found:
                    return found
        stack.pop()
        state[n] = 2
        return None

    for g in sorted(deps):
        if state.get(g, 0) == 0:
            found = visit(g)
            if found:
                return found
    return None


def _topo_gates(gates, zero_latency_only: bool) -> list[Gate]:
    """Deterministic topological order (name-sorted Kahn)."""
    by_name = {g.name: g for g in gates}
    deps = {}
    for g in gates:
        if zero_latency_only and g.delay.min_latency > 0:
            deps[g.name] = set()
        else:
            deps[g.name] = {n for n in g.inputs if n in by_name}
    order = []
    remaining = dict(deps)
    while remaining:
        ready = sorted(n for n, d in remaining.items() if not d)
        if not ready:
            raise NetlistError("cycle survived validation")  # defensive
        for n in ready:
            order.append(by_name[n])
            del remaining[n]
        for d in remaining.values():
            d.difference_update(ready)
    return order


def netlist_to_dict(n: Netlist) -> dict:
    return {
        "inputs": list(n.inputs),
        "gates": [
            {
                "name": g.name,
                "inputs": list(g.inputs),
                "table": list(g.table),
                "delay": delay_to_dict(g.delay),
            }
            for g in n.gates
        ],
        "outputs": list(n.outputs),
    }


def netlist_from_dict(obj: dict) -> Netlist:
    try:
        gates = tuple(
            Gate(
                name=str(g["name"]),
                inputs=tuple(str(i) for i in g["inputs"]),
                table=tuple(int(v) for v in g["table"]),
                delay=delay_from_dict(g["delay"]),
            )
            for g in obj["gates"]
        )
        return Netlist(
            inputs=tuple(str(i) for i in obj["inputs"]),
            gates=gates,
            outputs=tuple(str(o) for o in obj["outputs"]),
        )
    except (KeyError, TypeError) as exc:
        raise NetlistError(f"malformed netlist object: {exc}") from exc


# -- simulation ---------------------------------------------------------------


def _prehistory(n: Netlist, inputs: dict[str, Signal]) -> dict[str, int]:
    """Constant fixed point of the zero-delay network at t -> -inf.

    Delays preserve constants, so the prehistory solves v[g] = table(v).
    Computed by parallel sweeps from an all-zero gate state; refusing to
    settle means the feedback has no (reachable) constant prehistory.
    """
    vals = {net: sig.initial for net, sig in inputs.items()}
    for g in n.gates:
        vals[g.name] = 0
    for _ in range(2 * len(n.gates) + 4):
        new = {g.name: g.eval_bits([vals[i] for i in g.inputs]) for g in n.gates}
        if all(vals[k] == v for k, v in new.items()):
            return vals
        vals.update(new)
    raise NetlistError("feedback does not settle to a constant prehistory")


def simulate(
    n: Netlist, inputs: dict[str, Signal], horizon: tuple[Tick, Tick]
) -> dict[str, Signal]:
    """Exact dense-tick simulation; returns every net restricted to horizon.

    The sweep starts early enough that each gate's delay window is fed by
    settled history, so the restriction to [lo, hi] is exact for any
    horizon placement.
    """
    lo, hi = horizon
    if lo > hi:
        raise NetlistError(f"empty horizon [{lo}, {hi}]")
    missing = [net for net in n.inputs if net not in inputs]
    if missing:
        raise NetlistError(f"missing stimuli for inputs: {missing}")
    extra = [net for net in inputs if net not in n.inputs]
    if extra:
        raise NetlistError(f"stimuli for unknown inputs: {extra}")

    warmup = sum(g.delay.lookback + 1 for g in n.gates) + 4
    first_stim = min(
        (s.switches[0] for s in inputs.values() if s.switches), default=lo
    )
    start = min(lo, first_stim) - warmup
    size = hi - start + 1

    pre = _prehistory(n, inputs)
    xs: dict[str, list[int]] = {
        net: sig.values_on(start, hi) for net, sig in inputs.items()
    }
    for g in n.gates:
        xs[g.name] = [0] * size
    ys: dict[str, list[int | None]] = {g.name: [None] * size for g in n.gates}
    y_pre = {g.name: g.eval_bits([pre[i] for i in g.inputs]) for g in n.gates}

    order = _topo_gates(n.gates, zero_latency_only=True)

    def yval(g: Gate, j: int) -> int:
        if j < 0:
            return y_pre[g.name]
        cached = ys[g.name][j]
        if cached is None:
            cached = g.eval_bits([xs[i][j] for i in g.inputs])
            ys[g.name][j] = cached
        return cached

    for i in range(size):
        for g in order:
            d = g.delay
            if isinstance(d, FixedDelay):
                xs[g.name][i] = yval(g, i - d.d)
            else:
                p = d.params
                prev = xs[g.name][i - 1] if i > 0 else pre[g.name]
                if prev == 0:
                    rise = all(
                        yval(g, j) for j in range(i - p.dr, i - p.dr + p.mr + 1)
                    )
                    xs[g.name][i] = 1 if rise else 0
                else:
                    fall = not any(
                        yval(g, j) for j in range(i - p.df, i - p.df + p.mf + 1)
                    )
                    xs[g.name][i] = 0 if fall else 1
        for g in n.gates:
            yval(g, i)

    out: dict[str, Signal] = {}
    base = lo - start
    for net, arr in xs.items():
        initial = arr[base]
        switches = [
            start + j for j in range(base + 1, size) if arr[j] != arr[j - 1]
        ]
        out[net] = Signal(initial, tuple(switches))
    return out


# -- envelope propagation ------------------------------------------------------


@dataclass(frozen=True)
class Envelope:
    """Pointwise bracket low <= high on a net's admissible waveforms."""

    low: Signal
    high: Signal

    def __post_init__(self):
        if not self.low.leq(self.high):
            raise NetlistError("envelope needs low <= high pointwise")

    @classmethod
    def exact(cls, s: Signal) -> "Envelope":
        return cls(s, s)


def _table_envelope(g: Gate, envs: list[Envelope]) -> Envelope:
    """Corner enumeration: extremes of the table over all input bit
    combinations consistent with the input envelopes, per segment."""
    sigs = [e.low for e in envs] + [e.high for e in envs]
    times = sorted(set().union(*(s.switches for s in sigs)))

    def extremes(t: Tick | None) -> tuple[int, int]:
        ranges = []
        for e in envs:
            if t is None:
                a, b = e.low.initial, e.high.initial
            else:
                a, b = e.low.value_at(t), e.high.value_at(t)
            ranges.append(range(a, b + 1))
        lo_v, hi_v = 1, 0
        for combo in product(*ranges):
            v = g.eval_bits(combo)
            lo_v = min(lo_v, v)
            hi_v = max(hi_v, v)
        return lo_v, hi_v

    lo0, hi0 = extremes(None)
    lo_sw, hi_sw = [], []
    lo_val, hi_val = lo0, hi0
    for t in times:
        lv, hv = extremes(t)
        if lv != lo_val:
            lo_sw.append(t)
            lo_val = lv
        if hv != hi_val:
            hi_sw.append(t)
            hi_val = hv
    return Envelope(Signal(lo0, tuple(lo_sw)), Signal(hi0, tuple(hi_sw)))


def _delay_params(model: DelayModel) -> BdcParams:
    if isinstance(model, FixedDelay):
        return BdcParams(0, model.d, 0, model.d)
    return model.params


def envelope_propagate(
    n: Netlist, input_envelopes: dict[str, Envelope]
) -> dict[str, Envelope]:
    """Conservative per-net envelopes through an acyclic netlist.

    Every delay is interpreted through its bounded-delay parameters, so
    the result brackets every admissible behavior (per gate; cross-net
    correlation is deliberately ignored).
    """
    if n.has_feedback:
        raise NetlistError("envelope propagation requires an acyclic netlist")
    missing = [net for net in n.inputs if net not in input_envelopes]
    if missing:
        raise NetlistError(f"missing envelopes for inputs: {missing}")
    extra = [net for net in input_envelopes if net not in n.inputs]
    if extra:
        raise NetlistError(f"envelopes for unknown inputs: {extra}")

    envs: dict[str, Envelope] = dict(input_envelopes)
    for g in _topo_gates(n.gates, zero_latency_only=False):
        stage = _table_envelope(g, [envs[i] for i in g.inputs])
        p = _delay_params(g.delay)
        envs[g.name] = Envelope(
            bdc_min_solution(stage.low, p), bdc_max_solution(stage.high, p)
        )
    return envs
