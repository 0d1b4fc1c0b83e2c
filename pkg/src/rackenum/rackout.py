"""Post-processing of a completed enumeration table.

Everything here is read-only over the table: representative words, the
total operation table on the surviving rows, exhaustive axiom checks,
algebraic components, Cayley graph extraction, and compaction.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .engine import EnumerationTable, TraceWord
from .words import Word, concat, invert_word

__all__ = [
    "RackTable",
    "ComponentPartition",
    "CayleyGraph",
    "representative_word",
    "representative_words",
    "operation_table",
    "verify_rack_axioms",
    "components",
    "cayley_graph",
    "compact",
    "operation_table_csv",
]


@dataclass
class RackTable:
    """Total operation table over the surviving rows.

    op and inv_op are (n, n) integer arrays over positions 0..n-1;
    elements[pos] is the original row id and labels[pos] its trace label.
    """

    elements: list[int]
    labels: list[str]
    op: np.ndarray
    inv_op: np.ndarray

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass
class ComponentPartition:
    """Connected components of the live rows under the generator action."""

    blocks: list[list[int]]

    @property
    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]


@dataclass
class CayleyGraph:
    """Labelled digraph: one edge per live row and positive generator."""

    nodes: list[tuple[int, str]]            # (row, label)
    edges: list[tuple[int, int, int]]       # (source row, generator, target row)
    generator_names: tuple[str, ...]

    def to_dot(self, merge_involutive: bool = False) -> str:
        """Deterministic DOT text; involutive edge pairs may be drawn as a
        single undirected edge."""
        lines = ["digraph cayley {"]
        for row, label in self.nodes:
            lines.append(f'  n{row} [label="{label}"];')
        drawn = set()
        by_pair = {(src, gen): dst for src, gen, dst in self.edges}
        for src, gen, dst in self.edges:
            name = self.generator_names[gen - 1]
            if merge_involutive and src != dst and by_pair.get((dst, gen)) == src:
                if (dst, gen, src) in drawn:
                    continue
                drawn.add((src, gen, dst))
                lines.append(f'  n{src} -> n{dst} [label="{name}", dir=none];')
            else:
                lines.append(f'  n{src} -> n{dst} [label="{name}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _require_complete(table: EnumerationTable) -> list[int]:
    live = table.live_rows()
    for i in live:
        if 0 in table.action[i]:
            raise ValueError(f"table is not complete: row {i} has undefined entries")
    return live


def representative_words(table: EnumerationTable) -> dict[int, tuple[int, Word]]:
    """For every live row, a pair (generator row, word) reaching it.

    Breadth-first from the live generator rows, visiting rows in index
    order and letters in the fixed order, so the choice is reproducible.
    """
    live = _require_complete(table)
    g = table.generator_count
    found: dict[int, tuple[int, Word]] = {}
    frontier: list[int] = []
    for k in range(1, g + 1):
        if table.is_live(k) and k not in found:
            found[k] = (k, ())
            frontier.append(k)
    letters = table.letters()
    while frontier:
        nxt = []
        for row in frontier:
            base, word = found[row]
            for y in letters:
                target = table.lookup(row, y)
                if target and target not in found:
                    found[target] = (base, word + (y,))
                    nxt.append(target)
        frontier = nxt
    for i in live:
        if i not in found:
            raise RuntimeError(f"live row {i} is unreachable from the generator rows")
    return found


def representative_word(table: EnumerationTable, row: int) -> tuple[int, Word]:
    """First (generator row, word) found whose action reaches the row."""
    if not table.is_live(row):
        raise ValueError(f"row {row} is not live")
    return representative_words(table)[row]


def operation_table(table: EnumerationTable) -> RackTable:
    """Derive the total operation table on the surviving rows.

    Acting by the element of row j, with representative j = k^w, is acting
    by the word w-bar x_k w; the inverse operation uses w-bar ~x_k w.
    Completeness guarantees every application is defined.
    """
    live = _require_complete(table)
    reps = representative_words(table)
    n = len(live)
    position = {row: idx for idx, row in enumerate(live)}
    op = np.zeros((n, n), dtype=np.int64)
    inv_op = np.zeros((n, n), dtype=np.int64)
    for j_idx, j_row in enumerate(live):
        base, word = reps[j_row]
        col_word = concat(invert_word(word), (base,), word)
        inv_col_word = concat(invert_word(word), (-base,), word)
        for i_idx, i_row in enumerate(live):
            target = table.apply_word(i_row, col_word)
            inv_target = table.apply_word(i_row, inv_col_word)
            if target is None or inv_target is None:
                raise RuntimeError("operation undefined on a complete table")
            op[i_idx, j_idx] = position[target]
            inv_op[i_idx, j_idx] = position[inv_target]
    labels = [table.trace_label(row) if table.trace is not None else str(row) for row in live]
    return RackTable(elements=live, labels=labels, op=op, inv_op=inv_op)


def verify_rack_axioms(rt: RackTable, quandle: bool = False,
                       n: int | None = None) -> list[str]:
    """Exhaustively check the rack axioms on an operation table.

    Right cancellation is checked on all pairs and self-distributivity on
    all triples; the quandle flag adds idempotence, and n adds the n-fold
    identity x acted on by y n times returning x.  Returns all violations.
    """
    size = rt.size
    op, inv_op = rt.op, rt.inv_op
    idx = np.arange(size)
    problems: list[str] = []

    for j in range(size):
        col, icol = op[:, j], inv_op[:, j]
        for i in np.nonzero(inv_op[col, j] != idx)[0]:
            problems.append(f"cancellation fails: ({rt.labels[i]} > {rt.labels[j]}) >inv {rt.labels[j]}")
        for i in np.nonzero(op[icol, j] != idx)[0]:
            problems.append(f"cancellation fails: ({rt.labels[i]} >inv {rt.labels[j]}) > {rt.labels[j]}")

    lhs = op[op]                                   # lhs[i,j,k] = (i>j)>k
    rhs = op[op[:, None, :], op[None, :, :]]       # rhs[i,j,k] = (i>k)>(j>k)
    for i, j, k in np.argwhere(lhs != rhs):
        problems.append(
            f"distributivity fails on ({rt.labels[i]}, {rt.labels[j]}, {rt.labels[k]})"
        )

    if quandle or n is not None:
        for i in np.nonzero(np.diagonal(op) != idx)[0]:
            problems.append(f"idempotence fails: {rt.labels[i]} > {rt.labels[i]}")
    if n is not None:
        power = np.tile(idx[:, None], (1, size))
        for _ in range(n):
            power = op[power, idx[None, :]]
        for i, j in np.argwhere(power != idx[:, None]):
            problems.append(f"{n}-fold identity fails on ({rt.labels[i]}, {rt.labels[j]})")
    return problems


def components(table: EnumerationTable) -> ComponentPartition:
    """Connected components of the live rows, joining i with each i^y."""
    live = _require_complete(table)
    live_set = set(live)
    seen: set[int] = set()
    blocks: list[list[int]] = []
    letters = table.letters()
    for start in live:
        if start in seen:
            continue
        block = []
        frontier = [start]
        seen.add(start)
        while frontier:
            row = frontier.pop()
            block.append(row)
            for y in letters:
                target = table.lookup(row, y)
                if target in live_set and target not in seen:
                    seen.add(target)
                    frontier.append(target)
        blocks.append(sorted(block))
    return ComponentPartition(blocks)


def cayley_graph(table: EnumerationTable) -> CayleyGraph:
    live = _require_complete(table)
    nodes = [(row, table.trace_label(row) if table.trace is not None else str(row))
             for row in live]
    edges = []
    for row in live:
        for gen in range(1, table.generator_count + 1):
            edges.append((row, gen, table.lookup(row, gen)))
    return CayleyGraph(nodes=nodes, edges=edges, generator_names=table.generator_names)


def compact(table: EnumerationTable) -> EnumerationTable:
    """Renumber the live rows 1..n in order, dropping dead rows.

    The action and traces carry over; the representative map becomes the
    identity.  Note the first rows of the result need not trace to bare
    generators when generator rows died during the run.
    """
    live = _require_complete(table)
    mapping = {row: idx + 1 for idx, row in enumerate(live)}
    out = EnumerationTable(table.generator_count, table.generator_names,
                           keep_trace=table.trace is not None)
    out.row_count = len(live)
    out.action = [None] + [[mapping[e] for e in table.action[row]] for row in live]
    out.parent = list(range(len(live) + 1))
    if table.trace is not None:
        out.trace = [None] + [table.trace[row] for row in live]
    out.live_count = len(live)
    out.peak_live = len(live)
    out._max_live = len(live)
    return out


def operation_table_csv(rt: RackTable) -> tuple[str, str]:
    """CSV texts for the operation and inverse-operation tables."""

    def render(matrix: np.ndarray) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + rt.labels)
        for i in range(rt.size):
            writer.writerow([rt.labels[i]] + [rt.labels[matrix[i, j]] for j in range(rt.size)])
        return buf.getvalue()

    return render(rt.op), render(rt.inv_op)
