"""Top-level enumeration runs: the main loop, the subrack coset variant,
run options, and per-run metrics."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

from .engine import EnumerationTable, ScanKind, init, validate_properties
from .presentation import Presentation, PresentationError, inject_axioms
from .words import Word, concat, invert_word, minimal_cyclic_representative, reduce_word

__all__ = [
    "EnumOptions",
    "RunStatus",
    "Metrics",
    "EnumResult",
    "SubrackSpec",
    "enumerate_rack",
    "enumerate_cosets",
    "collect_metrics",
    "metrics_json",
    "InvariantViolation",
]


class InvariantViolation(RuntimeError):
    """A debug-validated run broke one of the table invariants."""


@dataclass(frozen=True)
class EnumOptions:
    """Knobs for an enumeration run.

    run_limit bounds the row index of the secondary-relation loop, not the
    table size or wall time.  ward keeps the fill-the-row step that defines
    every missing entry of a row before moving past it; switching it off
    can make finite racks non-terminating.  minimal_secondary replaces each
    secondary word by its minimal cyclic representative.  debug_validate
    re-checks the table invariants after every top-level engine call.
    """

    run_limit: int = 10000
    ward: bool = True
    minimal_secondary: bool = False
    keep_trace: bool = True
    debug_validate: bool = False

    def __post_init__(self):
        if self.run_limit < 1:
            raise ValueError("run_limit must be at least 1")


class RunStatus(enum.Enum):
    COMPLETED = "completed"
    RUN_LIMIT_EXCEEDED = "run_limit_exceeded"


@dataclass
class Metrics:
    """Run accounting: peak live rows, total rows defined, and counters."""

    max_live: int
    total_defined: int
    scans: int
    deductions: int
    coincidences: int
    wall_time: float
    order: int | None = None


@dataclass
class EnumResult:
    status: RunStatus
    table: EnumerationTable
    metrics: Metrics
    coset_mode: bool = False

    @property
    def completed(self) -> bool:
        return self.status is RunStatus.COMPLETED


@dataclass(frozen=True)
class SubrackSpec:
    """Generators of a subrack, each an element base^word of the rack."""

    generators: tuple[tuple[int, Word], ...]

    def __post_init__(self):
        if not self.generators:
            raise PresentationError("a subrack needs at least one generator")
        for base, word in self.generators:
            if reduce_word(word) != word:
                raise PresentationError(f"subrack element word {word} is not reduced")
            if base < 1:
                raise PresentationError(f"subrack element base {base} is not a generator index")


def collect_metrics(table: EnumerationTable, status: RunStatus, wall_time: float) -> Metrics:
    order = table.live_count if status is RunStatus.COMPLETED else None
    return Metrics(
        max_live=table.peak_live,
        total_defined=table.row_count,
        scans=table.scan_count,
        deductions=table.deduction_count,
        coincidences=table.merge_count,
        wall_time=wall_time,
        order=order,
    )


def metrics_json(result: EnumResult) -> dict:
    """Flat JSON object for a run, with null ratios on unfinished runs."""
    m = result.metrics
    order = m.order
    return {
        "status": result.status.value,
        "order": order,
        "L": m.max_live,
        "E": m.total_defined,
        "scans": m.scans,
        "deductions": m.deductions,
        "coincidences": m.coincidences,
        "wall_time_s": m.wall_time,
        "L_over_order": (m.max_live / order) if order else None,
        "E_over_order": (m.total_defined / order) if order else None,
    }


class _DebugChecker:
    """Re-checks invariants after each top-level engine call.

    Calls that only add entries (definitions, deductions, correct
    completions) cannot break pair symmetry, representative bounds, or
    reachability elsewhere, so they get O(1) local checks; any call that
    killed rows triggers a full table validation.
    """

    def __init__(self, table: EnumerationTable, presentation: Presentation):
        self.table = table
        self.presentation = presentation
        self.last_merges = table.merge_count

    def _fail(self, problems: list[str], context: str):
        raise InvariantViolation(f"after {context}: " + "; ".join(problems))

    def full(self, context: str):
        problems = validate_properties(self.table, self.presentation)
        if problems:
            self._fail(problems, context)
        self.last_merges = self.table.merge_count

    def after_define(self, row: int, letter: int, new: int):
        t = self.table
        problems = []
        if not t.is_live(new) or t.parent[new] != new:
            problems.append(f"new row {new} is not live")
        if t.lookup(row, letter) != new or t.lookup(new, -letter) != row:
            problems.append(f"definition {row}^{letter} = {new} lacks its inverse pair")
        if problems:
            self._fail(problems, f"define({row}, {letter})")

    def after_scan(self, outcome, context: str):
        t = self.table
        if t.merge_count != self.last_merges:
            self.full(context)
            return
        if outcome.kind is ScanKind.DEDUCTION:
            row, letter, other = outcome.row, outcome.letter, outcome.other
            if t.lookup(row, letter) != other or t.lookup(other, -letter) != row:
                self._fail([f"deduction {row}^{letter} = {other} lacks its inverse pair"], context)
        if not t.is_live(1):
            self._fail(["row 1 is dead"], context)


def _main_loop(table: EnumerationTable, secondary: list[Word], opts: EnumOptions,
               checker: _DebugChecker | None) -> bool:
    """Secondary-relation loop with the optional row-fill step; returns
    True when the loop index passed the last live row (run completed)."""
    letters = table.letters()
    i = 1
    while i <= table.max_live_row() and i <= opts.run_limit:
        for word in secondary:
            if table.is_live(i):
                outcome = table.scan(i, word, i)
                if checker:
                    checker.after_scan(outcome, f"secondary scan at row {i}")
            else:
                break
        if opts.ward and table.is_live(i):
            for y in letters:
                if table.lookup(i, y) == 0:
                    new = table.define(i, y)
                    if checker:
                        checker.after_define(i, y, new)
        i += 1
    return i > table.max_live_row()


def _finish(table: EnumerationTable, completed: bool, started: float,
            checker: _DebugChecker | None, coset_mode: bool = False) -> EnumResult:
    status = RunStatus.COMPLETED if completed else RunStatus.RUN_LIMIT_EXCEEDED
    if checker:
        checker.full("run end")
    wall = time.perf_counter() - started
    return EnumResult(status, table, collect_metrics(table, status, wall), coset_mode=coset_mode)


def enumerate_rack(p: Presentation, opts: EnumOptions | None = None) -> EnumResult:
    """Enumerate the elements of the presented rack.

    Scans every primary relation once at the generator representatives,
    then scans every secondary relation at each live row in turn, filling
    rows when ward is on, until the loop index passes the last live row or
    exceeds the run limit.
    """
    opts = opts or EnumOptions()
    relations = inject_axioms(p)
    started = time.perf_counter()
    secondary, table = init(p, minimal_secondary=opts.minimal_secondary,
                            keep_trace=opts.keep_trace)
    checker = _DebugChecker(table, p) if opts.debug_validate else None
    if checker:
        checker.full("init")
    for rel in relations:
        outcome = table.scan(table.rep(rel.base), rel.exponent, table.rep(rel.target))
        if checker:
            checker.after_scan(outcome, f"primary scan of {rel}")
    completed = _main_loop(table, secondary, opts, checker)
    return _finish(table, completed, started, checker)


def enumerate_cosets(p: Presentation, sub: SubrackSpec,
                     opts: EnumOptions | None = None) -> EnumResult:
    """Enumerate the cosets of a finitely generated subrack.

    Row 1 stands for the subrack itself, so each subrack generator
    base^word is first scanned as the fixing relation 1^(w-bar base w) = 1.
    The secondary relations gain one word per ordered pair of distinct
    subrack generators, equating their actions.  Trace labels are
    diagnostic only in this mode: rows denote cosets, not rack elements.

    Rack cosets need not partition the rack; the result carries a
    coset_mode flag so reports can say so.
    """
    opts = opts or EnumOptions()
    g = p.generator_count
    for base, word in sub.generators:
        if base > g or any(abs(y) > g for y in word):
            raise PresentationError(
                f"subrack element ({base}, {word}) references a generator outside 1..{g}"
            )
    relations = inject_axioms(p)
    started = time.perf_counter()
    secondary, table = init(p, minimal_secondary=opts.minimal_secondary,
                            keep_trace=opts.keep_trace)

    action_words = [concat(invert_word(word), (base,), word) for base, word in sub.generators]
    for s, ws in enumerate(action_words):
        for t, wt in enumerate(action_words):
            if s == t:
                continue
            extra = concat(ws, invert_word(wt))
            if not extra:
                continue
            if opts.minimal_secondary:
                extra = minimal_cyclic_representative(extra, g)
            if extra not in secondary:
                secondary.append(extra)

    checker = _DebugChecker(table, p) if opts.debug_validate else None
    if checker:
        checker.full("init")
    for word in action_words:
        outcome = table.scan(1, word, 1)
        if checker:
            checker.after_scan(outcome, "subrack generator scan")
    for rel in relations:
        outcome = table.scan(table.rep(rel.base), rel.exponent, table.rep(rel.target))
        if checker:
            checker.after_scan(outcome, f"primary scan of {rel}")
    completed = _main_loop(table, secondary, opts, checker)
    return _finish(table, completed, started, checker, coset_mode=True)
