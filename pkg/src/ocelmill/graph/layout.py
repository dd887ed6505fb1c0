"""Deterministic force-directed layout.

Edges act as springs toward a rest length; every node pair repels with an
inverse-square force. Each iteration clamps per-node displacement to a
cooling temperature and then backtracks the step until total energy does not
increase, so the energy trace is non-increasing by construction. Everything
is a pure function of (graph, seed, iterations): nodes start on a circle in
node-id order with seeded jitter, and the final placement is recentred on the
centroid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ocelmill.graph.model import SchemaGraph

REST_LENGTH = 1.0
SPRING_STRENGTH = 0.5
REPULSION_STRENGTH = 0.2
STEP_SIZE = 1.0
COOLING = 0.95
JITTER_FRACTION = 0.01
DEFAULT_ITERATIONS = 300

_EPS = 1e-9
_MAX_BACKTRACKS = 40


@dataclass(frozen=True)
class LayoutResult:
    positions: dict[str, tuple[float, float]]
    iterations: int
    seed: int


def _energy(pos: np.ndarray, edges_a: np.ndarray, edges_b: np.ndarray) -> float:
    n = pos.shape[0]
    total = 0.0
    if n > 1:
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.sqrt((delta ** 2).sum(axis=2))
        iu = np.triu_indices(n, k=1)
        total += REPULSION_STRENGTH * float((1.0 / np.maximum(dist[iu], _EPS)).sum())
    if edges_a.size:
        d = np.sqrt(((pos[edges_a] - pos[edges_b]) ** 2).sum(axis=1))
        total += 0.5 * SPRING_STRENGTH * float(((d - REST_LENGTH) ** 2).sum())
    return total


def _forces(pos: np.ndarray, edges_a: np.ndarray, edges_b: np.ndarray) -> np.ndarray:
    n = pos.shape[0]
    force = np.zeros_like(pos)
    if n > 1:
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.maximum(np.sqrt((delta ** 2).sum(axis=2)), _EPS)
        np.fill_diagonal(dist, np.inf)
        # Inverse-square repulsion along the unit direction: magnitude k/d^2.
        force += REPULSION_STRENGTH * (delta / dist[:, :, None] ** 3).sum(axis=1)
    if edges_a.size:
        delta = pos[edges_a] - pos[edges_b]
        dist = np.maximum(np.sqrt((delta ** 2).sum(axis=1)), _EPS)
        pull = -SPRING_STRENGTH * (dist - REST_LENGTH) / dist
        contrib = delta * pull[:, None]
        np.add.at(force, edges_a, contrib)
        np.add.at(force, edges_b, -contrib)
    return force


def layout(
    graph: SchemaGraph,
    seed: int = 0,
    iterations: int = DEFAULT_ITERATIONS,
    energy_hook: Callable[[float], None] | None = None,
) -> LayoutResult:
    """Place every node of the graph; see module docstring for the model.

    `energy_hook` receives the total energy before the first iteration and
    after every accepted step; it exists so tests can assert monotonicity.
    """
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    ids = sorted(graph.nodes)
    n = len(ids)
    if n == 0:
        return LayoutResult(positions={}, iterations=iterations, seed=seed)

    index = {node_id: i for i, node_id in enumerate(ids)}
    pairs = {
        (index[edge.a], index[edge.b])
        for edge in graph.edges.values()
        if edge.a != edge.b
    }
    if pairs:
        edges_a, edges_b = (np.array(part, dtype=np.intp) for part in zip(*sorted(pairs)))
    else:
        edges_a = edges_b = np.empty(0, dtype=np.intp)

    rng = np.random.default_rng(seed)
    radius = max(1.0, np.sqrt(n))
    angles = 2.0 * np.pi * np.arange(n) / n
    pos = np.column_stack((radius * np.cos(angles), radius * np.sin(angles)))
    pos += rng.uniform(-JITTER_FRACTION * radius, JITTER_FRACTION * radius, size=(n, 2))

    energy = _energy(pos, edges_a, edges_b)
    if energy_hook is not None:
        energy_hook(energy)

    temperature = radius / 2.0
    for _ in range(iterations):
        force = _forces(pos, edges_a, edges_b)
        disp = force * STEP_SIZE
        norms = np.maximum(np.sqrt((disp ** 2).sum(axis=1)), _EPS)
        scale = np.minimum(norms, temperature) / norms
        disp *= scale[:, None]

        factor = 1.0
        moved = False
        for _ in range(_MAX_BACKTRACKS):
            candidate = pos + factor * disp
            candidate_energy = _energy(candidate, edges_a, edges_b)
            if candidate_energy <= energy:
                pos = candidate
                energy = candidate_energy
                moved = True
                break
            factor *= 0.5
        if energy_hook is not None:
            energy_hook(energy)
        temperature *= COOLING
        if not moved and temperature < _EPS:
            break

    pos = pos - pos.mean(axis=0)
    if not np.isfinite(pos).all():
        raise ArithmeticError("layout produced non-finite coordinates")
    positions = {node_id: (float(pos[i, 0]), float(pos[i, 1])) for node_id, i in index.items()}
    return LayoutResult(positions=positions, iterations=iterations, seed=seed)
