"""Energy Flow on an Inconsistency Graph.

Every node starts with the same energy. At each step a node keeps a
fraction ``1 - p`` of its energy and sends the rest to its neighbours,
split in proportion to the neighbours' attraction factors
``AF(i) = -log10(E(i) / sum(E))``. Nodes already holding little energy
(the reliable ones) attract more. The propagation matrix is column
stochastic, so total energy is conserved, and it is rebuilt from the
current energies before every step. Iteration stops at the fixed point
``E = M(E) E``.

The fixed point does not depend on ``p``; ``p`` only changes how fast it
is reached.
"""
from __future__ import annotations

import csv
import json
import math
import warnings
from dataclasses import dataclass, field, replace

import numpy as np
import scipy.sparse as sp

from .errors import ConvergenceWarning, DegenerateGraphError, FormatError, ParameterError
from .incograph import IncoGraph, component_index

ZERO_GUARD = 1e-12

ENERGY_COLUMNS = ("node_id", "news_id", "energy", "relative_energy", "degree", "component")


@dataclass(frozen=True)
class FlowParams:
    """Knobs of the flow.

    p : fraction of a node's energy emitted per step, in (0, 1).
    tol : stop once the L1 change of one step is at most ``tol * sum(E)``.
    max_iters : hard cap on the number of steps.
    initial_energy : energy given to every node at the start.
    """

    p: float = 0.5
    tol: float = 1e-9
    max_iters: int = 100_000
    initial_energy: float = 100.0

    def __post_init__(self):
        if not (0.0 < self.p < 1.0):
            raise ParameterError(f"p must lie in (0, 1), got {self.p}")
        if not self.tol > 0:
            raise ParameterError(f"tol must be positive, got {self.tol}")
        if int(self.max_iters) != self.max_iters or self.max_iters < 1:
            raise ParameterError(f"max_iters must be a positive integer, got {self.max_iters}")
        if not (self.initial_energy > 0 and math.isfinite(self.initial_energy)):
            raise ParameterError(f"initial_energy must be positive, got {self.initial_energy}")


@dataclass(frozen=True)
class EnergyState:
    """Energies indexed by ``nodes`` (graph order) after ``iteration`` steps."""

    e: np.ndarray
    iteration: int = 0
    total: float = field(default=None)
    nodes: tuple = ()
    converged: bool = False
    residual: float = math.nan

    def __post_init__(self):
        e = np.asarray(self.e, dtype=float)
        object.__setattr__(self, "e", e)
        if self.total is None:
            object.__setattr__(self, "total", float(math.fsum(e)))
        if self.nodes and len(self.nodes) != len(e):
            raise ParameterError("nodes and energy vector differ in length")

    @classmethod
    def uniform(cls, graph: IncoGraph, energy: float = 100.0) -> "EnergyState":
        return cls(np.full(graph.n_nodes, float(energy)), 0, nodes=graph.nodes)

    def as_dict(self) -> dict:
        return {n: float(x) for n, x in zip(self.nodes, self.e)}


def attraction_factors(state) -> np.ndarray:
    """``-log10`` of each node's share of the total energy.

    Shares are floored at ``1e-12`` of the total so that a node drained to
    zero still has a finite factor.
    """
    e = np.asarray(getattr(state, "e", state), dtype=float)
    if e.size < 2:
        raise DegenerateGraphError("attraction factors need at least two nodes")
    total = math.fsum(e)
    e = np.maximum(e, ZERO_GUARD * total)
    return -np.log10(e / total)


def build_matrix(graph: IncoGraph, state, params: FlowParams | None = None) -> sp.csc_matrix:
    """Propagation matrix for the current energies.

    Column ``j`` describes where node ``j``'s energy goes: ``1 - p`` stays
    on the diagonal, and ``p`` is shared among the neighbours ``i`` with
    weight ``AF(i) / sum(AF(k) for k in neighbours(j))``.
    """
    p = (params or FlowParams()).p
    af = attraction_factors(state)
    adj = graph.adjacency.tocoo()
    rows, cols = adj.row, adj.col
    # Sum of neighbour factors per sending column.
    denom = np.zeros(graph.n_nodes)
    np.add.at(denom, cols, af[rows])
    weights = p * af[rows] / denom[cols]
    n = graph.n_nodes
    keep = np.ones(n)
    keep[graph.degrees > 0] = 1.0 - p
    diag = np.arange(n)
    m = sp.csc_matrix(
        (np.concatenate([keep, weights]), (np.concatenate([diag, rows]), np.concatenate([diag, cols]))),
        shape=(n, n),
    )
    m.sort_indices()
    return m


def step(m, state: EnergyState) -> EnergyState:
    e = m @ state.e
    return replace(state, e=np.asarray(e).ravel(), iteration=state.iteration + 1, converged=False)


def run_flow(graph: IncoGraph, params: FlowParams | None = None, initial=None) -> EnergyState:
    """Iterate to the fixed point.

    The returned state is the last one whose own step changed the energy by
    at most ``tol * total`` in L1, so ``residual`` is the measured
    ``||M(E) E - E||_1`` of the returned energies. If ``max_iters`` runs out
    first, the latest state comes back with ``converged=False`` and a
    :class:`ConvergenceWarning` is issued.
    """
    params = params or FlowParams()
    if graph.n_edges == 0:
        raise DegenerateGraphError("energy flow needs at least one edge")
    if initial is None:
        state = EnergyState.uniform(graph, params.initial_energy)
    else:
        state = EnergyState(np.asarray(initial, dtype=float), 0, nodes=graph.nodes)
    limit = params.tol * state.total
    residual = math.inf
    for _ in range(params.max_iters):
        nxt = step(build_matrix(graph, state, params), state)
        residual = float(np.abs(nxt.e - state.e).sum())
        if residual <= limit:
            return replace(state, converged=True, residual=residual)
        state = nxt
    warnings.warn(
        f"energy flow did not converge in {params.max_iters} iterations "
        f"(last L1 change {residual:.3e})",
        ConvergenceWarning,
        stacklevel=2,
    )
    return replace(state, converged=False, residual=residual)


def relative_energy(state) -> np.ndarray:
    """Energies divided by the largest one."""
    e = np.asarray(getattr(state, "e", state), dtype=float)
    top = e.max() if e.size else 0.0
    if not top > 0:
        raise ParameterError("relative energy needs at least one positive entry")
    return e / top


def residual(graph: IncoGraph, state: EnergyState, params: FlowParams | None = None) -> float:
    m = build_matrix(graph, state, params)
    return float(np.abs(m @ state.e - state.e).sum())


def _fmt(x: float) -> str:
    return repr(float(x))


def energy_rows(graph: IncoGraph, state: EnergyState) -> list:
    rel = relative_energy(state)
    comp = component_index(graph)
    return [
        {
            "node_id": i + 1,
            "news_id": n,
            "energy": float(state.e[i]),
            "relative_energy": float(rel[i]),
            "degree": graph.degree(n),
            "component": comp[n],
        }
        for i, n in enumerate(graph.nodes)
    ]


def write_energy_csv(graph: IncoGraph, state: EnergyState, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(ENERGY_COLUMNS)
        for row in energy_rows(graph, state):
            writer.writerow(
                [_fmt(row[c]) if isinstance(row[c], float) else row[c] for c in ENERGY_COLUMNS]
            )


def energy_json(graph: IncoGraph, state: EnergyState) -> str:
    return json.dumps(energy_rows(graph, state), indent=2) + "\n"


def convergence_metadata(state: EnergyState) -> dict:
    return {
        "iterations": state.iteration,
        "residual": float(state.residual),
        "converged": bool(state.converged),
    }


def read_energy_csv(path, graph: IncoGraph) -> EnergyState:
    """Load energies written by :func:`write_energy_csv` back onto ``graph``."""
    by_news = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = [c for c in ("news_id", "energy") if c not in (reader.fieldnames or [])]
        if missing:
            raise FormatError(f"{path}: missing column {missing[0]!r}")
        for row in reader:
            try:
                by_news[int(row["news_id"])] = float(row["energy"])
            except ValueError:
                raise FormatError(f"{path}:{reader.line_num}: bad energy record") from None
    try:
        e = np.array([by_news[n] for n in graph.nodes])
    except KeyError as exc:
        raise FormatError(f"{path}: no energy for node {exc.args[0]}") from None
    return EnergyState(e, 0, nodes=graph.nodes)
