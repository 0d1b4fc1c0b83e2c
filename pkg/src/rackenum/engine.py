"""The mutable enumeration table and its core procedures.

A table holds a partial action of the generators and their inverses on rows
1..row_count, a union-find style representative map (parent), and an
optional trace expressing each row as generator^word.  Rows are never
recycled; a row is live while parent[i] == i and dead afterwards.

Entries are stored as ints with 0 meaning undefined; they are added and
removed strictly in inverse pairs, so i^y == j always coexists with
j^(~y) == i.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from .presentation import (
    Presentation,
    PresentationError,
    derive_secondary,
    format_element,
    inject_axioms,
)
from .words import Letter, Word, minimal_cyclic_representative, reduce_word

__all__ = [
    "TraceWord",
    "ScanKind",
    "ScanOutcome",
    "EnumerationTable",
    "init",
    "validate_properties",
]


class TraceWord(NamedTuple):
    """A row expressed as the rack element base^exponent."""

    base: int
    exponent: Word


class ScanKind(enum.Enum):
    COMPLETED = "completed"
    DEDUCTION = "deduction"
    COINCIDENCE = "coincidence"


class ScanOutcome(NamedTuple):
    kind: ScanKind
    row: int
    letter: Letter | None
    other: int | None


class EnumerationTable:
    def __init__(self, generator_count: int, generator_names: tuple[str, ...] | None = None,
                 keep_trace: bool = True):
        if generator_count < 1:
            raise ValueError("need at least one generator")
        g = generator_count
        self.generator_count = g
        self.generator_names = generator_names or tuple(f"x{i}" for i in range(1, g + 1))
        self.row_count = g
        # index 0 of every per-row list is unused; rows are 1-based as rendered
        self.action: list[list[int] | None] = [None] + [[0] * (2 * g) for _ in range(g)]
        self.parent: list[int] = list(range(g + 1))
        self.trace: list[TraceWord | None] | None = None
        if keep_trace:
            self.trace = [None] + [TraceWord(k, ()) for k in range(1, g + 1)]
        self.live_count = g
        self.peak_live = g
        self.scan_count = 0
        self.deduction_count = 0
        self.merge_count = 0  # rows killed, cascades included
        self._max_live = g

    # -- letters and lookups --------------------------------------------

    def letters(self) -> list[int]:
        """All letters in the fixed visiting order x1..xg, ~x1..~xg."""
        g = self.generator_count
        return list(range(1, g + 1)) + [-k for k in range(1, g + 1)]

    def column(self, letter: Letter) -> int:
        return letter - 1 if letter > 0 else self.generator_count - letter - 1

    def lookup(self, row: int, letter: Letter) -> int:
        """The action entry row^letter, 0 when undefined."""
        return self.action[row][self.column(letter)]

    def is_live(self, row: int) -> bool:
        return self.parent[row] == row

    def live_rows(self) -> list[int]:
        return [i for i in range(1, self.row_count + 1) if self.parent[i] == i]

    def max_live_row(self) -> int:
        """Largest live row index (row 1 is always live)."""
        i = self._max_live
        while i > 1 and self.parent[i] != i:
            i -= 1
        self._max_live = i
        return i

    def is_complete(self) -> bool:
        return all(0 not in self.action[i] for i in self.live_rows())

    # -- core procedures --------------------------------------------------

    def define(self, row: int, letter: Letter) -> int:
        """Add a new row as the image of row^letter, with its inverse entry."""
        assert self.is_live(row) and self.lookup(row, letter) == 0
        self.row_count += 1
        new = self.row_count
        self.action.append([0] * (2 * self.generator_count))
        self.parent.append(new)
        self.action[row][self.column(letter)] = new
        self.action[new][self.column(-letter)] = row
        if self.trace is not None:
            prev = self.trace[row]
            self.trace.append(TraceWord(prev.base, reduce_word(prev.exponent + (letter,))))
        self.live_count += 1
        if self.live_count > self.peak_live:
            self.peak_live = self.live_count
        self._max_live = new
        return new

    def deduction(self, row: int, letter: Letter, other: int) -> None:
        """Record the forced pair row^letter = other, other^(~letter) = row."""
        assert self.lookup(row, letter) == 0 and self.lookup(other, -letter) == 0
        self.action[row][self.column(letter)] = other
        self.action[other][self.column(-letter)] = row
        self.deduction_count += 1

    def rep(self, row: int) -> int:
        """Least representative of row: follow parent to its fixed point."""
        j = row
        while self.parent[j] < j:
            j = self.parent[j]
        return j

    def update(self, row: int) -> None:
        """Point every element on row's parent chain at its representative."""
        parent = self.parent
        rep = self.rep(row)
        n = row
        m = parent[n]
        while m < n:
            parent[n] = rep
            n = m
            m = parent[n]

    def merge(self, queue: list[int], m: int, n: int) -> None:
        """Queue the larger representative of m, n for deletion, if distinct."""
        mu = self.rep(m)
        nu = self.rep(n)
        if mu != nu:
            big, small = max(mu, nu), min(mu, nu)
            queue.append(big)
            self.parent[big] = small
            self.live_count -= 1
            self.merge_count += 1

    def coincidence(self, m: int, n: int) -> None:
        """Resolve the coincidence m == n, cascading through a work queue.

        Each queued row is dead; its entries are removed in inverse pairs
        and either migrate to the representatives or force further merges.
        """
        assert m != n and self.is_live(m) and self.is_live(n)
        action = self.action
        col = self.column
        queue: list[int] = []
        self.merge(queue, m, n)
        q = 0
        while q < len(queue):
            dead = queue[q]
            q += 1
            for y in self.letters():
                e = action[dead][col(y)]
                if e == 0:
                    continue
                action[dead][col(y)] = 0
                assert action[e][col(-y)] == dead
                action[e][col(-y)] = 0
                delta = self.rep(dead)
                self.update(dead)
                eps = self.rep(e)
                self.update(e)
                if action[delta][col(y)]:
                    self.merge(queue, eps, action[delta][col(y)])
                elif action[eps][col(-y)]:
                    self.merge(queue, delta, action[eps][col(-y)])
                else:
                    action[delta][col(y)] = eps
                    action[eps][col(-y)] = delta

    def scan(self, i: int, word: Word, j: int) -> ScanOutcome:
        """Push row i through the relation word, expecting to land on row j.

        Scans forward while entries exist, then backward; a gap of two or
        more is filled by a definition at the forward frontier, a gap of one
        forces a deduction, and an incorrect overlap is a coincidence.
        """
        assert self.is_live(i) and self.is_live(j)
        assert word, "cannot scan an empty relation word"
        self.scan_count += 1
        action = self.action
        col = self.column
        f, b = 0, len(word) - 1
        k, ell = i, j
        defined_any = False
        while f <= b:
            while f <= b:
                nxt = action[k][col(word[f])]
                if nxt == 0:
                    break
                k = nxt
                f += 1
            while f <= b:
                nxt = action[ell][col(-word[b])]
                if nxt == 0:
                    break
                ell = nxt
                b -= 1
            if f < b:
                self.define(k, word[f])
                defined_any = True
            elif f == b:
                self.deduction(k, word[f], ell)
                return ScanOutcome(ScanKind.DEDUCTION, k, word[f], ell)
            elif k != ell:
                assert not defined_any, "a scan that defined rows must end in a deduction"
                self.coincidence(k, ell)
                return ScanOutcome(ScanKind.COINCIDENCE, k, None, ell)
            else:
                break
        assert not defined_any, "a scan that defined rows must end in a deduction"
        return ScanOutcome(ScanKind.COMPLETED, k, None, ell)

    def apply_word(self, row: int, word: Word) -> int | None:
        """Follow the partial action; None at the first undefined step."""
        cur = row
        for y in word:
            nxt = self.action[cur][self.column(y)]
            if nxt == 0:
                return None
            cur = nxt
        return cur

    # -- presentation-facing helpers --------------------------------------

    def trace_label(self, row: int) -> str:
        if self.trace is None or self.trace[row] is None:
            return str(row)
        t = self.trace[row]
        return format_element(self.generator_names, t.base, t.exponent)

    def render(self) -> str:
        """Text table: one row per index, generator and inverse columns,
        trace and representative columns, blanks for undefined entries."""
        names = self.generator_names
        headers = ["row"] + list(names) + ["~" + n for n in names] + ["trace", "rep"]
        rows = []
        for i in range(1, self.row_count + 1):
            cells = [str(i)]
            cells += [str(e) if e else "" for e in self.action[i]]
            cells.append(self.trace_label(i) if self.trace is not None else "")
            cells.append(str(self.parent[i]))
            rows.append(cells)
        widths = [max(len(h), *(len(r[c]) for r in rows)) if rows else len(h)
                  for c, h in enumerate(headers)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
        for cells in rows:
            lines.append("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
        return "\n".join(lines) + "\n"


def init(p: Presentation, minimal_secondary: bool = False,
         keep_trace: bool = True) -> tuple[list[Word], EnumerationTable]:
    """Fresh table with one live row per generator, plus the secondary
    relation words derived from the (axiom-injected) primary relations.

    Words that reduce to nothing are dropped and duplicates are removed
    preserving first occurrence.  With minimal_secondary each word is
    replaced by its minimal cyclic representative first.
    """
    relations = inject_axioms(p)
    for rel in relations:
        if not rel.exponent:
            base = p.generator_names[rel.base - 1]
            target = p.generator_names[rel.target - 1]
            raise PresentationError(
                f"relation {base}^[] = {target} has an empty exponent and cannot be scanned"
            )
    g = p.generator_count
    secondary: list[Word] = []
    for rel in relations:
        word = derive_secondary(rel)
        if word is None:
            continue
        if minimal_secondary:
            word = minimal_cyclic_representative(word, g)
        if word not in secondary:
            secondary.append(word)
    table = EnumerationTable(g, p.generator_names, keep_trace=keep_trace)
    return secondary, table


def validate_properties(table: EnumerationTable, p: Presentation | None = None) -> list[str]:
    """Check the structural invariants of a quiescent table.

    Verifies that row 1 is live and the first g traces are the bare
    generators, that entries come in inverse pairs, that representatives
    never exceed their rows, that dead rows hold no entries, and that every
    live row is reachable from a live generator row.  Returns a list of
    violation messages, empty when the table is sound.
    """
    problems: list[str] = []
    g = table.generator_count
    if p is not None and p.generator_count != g:
        problems.append("table and presentation disagree on the generator count")

    if not table.is_live(1):
        problems.append("row 1 is dead")
    if table.trace is not None:
        for k in range(1, g + 1):
            if table.trace[k] != TraceWord(k, ()):
                problems.append(f"row {k} should trace to its generator")

    for i in range(1, table.row_count + 1):
        if table.parent[i] > i:
            problems.append(f"parent({i}) exceeds {i}")
        dead = table.parent[i] != i
        for y in table.letters():
            e = table.lookup(i, y)
            if e == 0:
                continue
            if dead:
                problems.append(f"dead row {i} still has {i}^{y} defined")
            if not 1 <= e <= table.row_count:
                problems.append(f"{i}^{y} = {e} is out of range")
            elif table.lookup(e, -y) != i:
                problems.append(f"{i}^{y} = {e} lacks its inverse entry")

    # reachability from live generator rows over defined entries
    seeds = [k for k in range(1, g + 1) if table.is_live(k)]
    seen = set(seeds)
    frontier = seeds
    while frontier:
        nxt = []
        for row in frontier:
            for y in table.letters():
                e = table.lookup(row, y)
                if e and e not in seen:
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    for i in table.live_rows():
        if i not in seen:
            problems.append(f"live row {i} is unreachable from the generator rows")
    return problems
