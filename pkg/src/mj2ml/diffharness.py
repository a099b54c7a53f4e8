"""Differential execution: run a program on both interpreters and compare.

Per program the verdict is one of:
  match             both ran cleanly and printed the same integers
  output-mismatch   both ran cleanly, outputs differ
  fault-mismatch    the source ran cleanly, the translation faulted
  skipped-faulting  the source run faulted (including fuel), nothing to compare
  error             the program did not get through lexing/parsing/typechecking

A batch passes when every verdict is match or skipped-faulting.

The report is a fixed-width table `program | mj | ml | verdict | ms`,
sorted by program name; everything except the timing column is
reproducible run to run.
"""

from __future__ import annotations

import re
import shutil
import subprocess
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path

from .lexer import LexError
from .mjast import MjProgram
from .mjinterp import interpret_mj
from .mleval import eval_program
from .outcome import DEFAULT_FUEL, RunOutcome
from .parser import ParseError, parse_source
from .randgen import generate_program
from .sema import ClassTable, MjTypeError, typecheck
from .translate import translate

PASSING_VERDICTS = frozenset({"match", "skipped-faulting"})


@dataclass
class DiffResult:
    name: str
    mj: RunOutcome | None
    ml: RunOutcome | None
    verdict: str
    millis: float
    detail: str = ""


def diff_ast(name: str, program: MjProgram, table: ClassTable | None = None,
             fuel: int = DEFAULT_FUEL) -> DiffResult:
    """Compare both runs of an already parsed program.  The fuel bound
    applies to each side separately."""
    start = time.perf_counter()

    def done(mj, ml, verdict, detail=""):
        return DiffResult(name, mj, ml, verdict,
                          (time.perf_counter() - start) * 1000.0, detail)

    try:
        if table is None:
            table = typecheck(program)
    except MjTypeError as err:
        return done(None, None, "error", str(err))
    mj = interpret_mj(program, table, fuel=fuel)
    if mj.fault is not None:
        return done(mj, None, "skipped-faulting")
    ml_program = translate(program, table)
    ml, _ = eval_program(ml_program, fuel=fuel)
    if ml.fault is not None:
        return done(mj, ml, "fault-mismatch", f"translation faulted: {ml.fault.value}")
    if mj.output != ml.output:
        return done(mj, ml, "output-mismatch",
                    f"source printed {mj.output}, translation printed {ml.output}")
    return done(mj, ml, "match")


def diff_source(name: str, source: str, fuel: int = DEFAULT_FUEL) -> DiffResult:
    start = time.perf_counter()
    try:
        program = parse_source(source)
    except (LexError, ParseError) as err:
        return DiffResult(name, None, None, "error",
                          (time.perf_counter() - start) * 1000.0, str(err))
    return diff_ast(name, program, fuel=fuel)


def diff_files(paths: list[Path | str], fuel: int = DEFAULT_FUEL) -> list[DiffResult]:
    results = []
    for path in map(Path, paths):
        try:
            source = path.read_text()
        except OSError as err:
            results.append(DiffResult(path.name, None, None, "error", 0.0, str(err)))
            continue
        results.append(diff_source(path.name, source, fuel=fuel))
    return sorted(results, key=lambda r: r.name)


def diff_generated(seeds: list[int], size: int = 40,
                   fuel: int = DEFAULT_FUEL) -> list[DiffResult]:
    results = []
    for seed in seeds:
        name = f"seed{seed:03d}"
        start = time.perf_counter()
        try:
            program = generate_program(seed, size)
        except Exception as err:
            results.append(DiffResult(name, None, None, "error",
                                      (time.perf_counter() - start) * 1000.0,
                                      str(err)))
            continue
        results.append(diff_ast(name, program, fuel=fuel))
    return sorted(results, key=lambda r: r.name)


def all_passing(results: list[DiffResult]) -> bool:
    return all(r.verdict in PASSING_VERDICTS for r in results)


def _outcome_cell(outcome: RunOutcome | None) -> str:
    if outcome is None:
        return "-"
    return "ok" if outcome.fault is None else outcome.fault.value


def render_report(results: list[DiffResult]) -> str:
    headers = ("program", "mj", "ml", "verdict", "ms")
    rows = [(r.name, _outcome_cell(r.mj), _outcome_cell(r.ml), r.verdict,
             f"{r.millis:.1f}") for r in results]
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    lines = [" | ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("-+-".join("-" * w for w in widths))
    for row in rows:
        lines.append(" | ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    counts: dict[str, int] = {}
    for r in results:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    summary = ", ".join(f"{v}: {counts[v]}" for v in sorted(counts))
    lines.append("")
    lines.append(f"{len(results)} program(s); {summary}")
    return "\n".join(lines) + "\n"


# -- running the emitted text on a real SML system, when one is installed ----

_INT_LINE = re.compile(r"^-?\d+$")


def find_sml_system() -> str | None:
    """Name of an installed SML implementation, in order of preference."""
    for cmd in ("mlton", "polyc", "sml"):
        if shutil.which(cmd):
            return cmd
    return None


def run_system_sml(sml_text: str, timeout: float = 120.0) -> list[int]:
    """Compile and run with the installed SML system; returns printed ints.

    Raises RuntimeError when no system is installed or the run fails.
    """
    system = find_sml_system()
    if system is None:
        raise RuntimeError("no SML system installed")
    with tempfile.TemporaryDirectory(prefix="mj2ml-") as tmp:
        tmpdir = Path(tmp)
        src = tmpdir / "program.sml"
        src.write_text(sml_text)
        if system in ("mlton", "polyc"):
            exe = tmpdir / "program"
            compile_cmd = ([system, "-output", str(exe), str(src)]
                           if system == "mlton"
                           else [system, "-o", str(exe), str(src)])
            built = subprocess.run(compile_cmd, capture_output=True, text=True,
                                   timeout=timeout)
            if built.returncode != 0:
                raise RuntimeError(f"{system} failed:\n{built.stderr}")
            ran = subprocess.run([str(exe)], capture_output=True, text=True,
                                 timeout=timeout)
            if ran.returncode != 0:
                raise RuntimeError(f"compiled program failed:\n{ran.stderr}")
            out = ran.stdout
        else:
            ran = subprocess.run([system], input=src.read_text(),
                                 capture_output=True, text=True, timeout=timeout)
            if ran.returncode != 0:
                raise RuntimeError(f"sml failed:\n{ran.stderr}")
            out = ran.stdout
        return [int(line) for line in out.splitlines()
                if _INT_LINE.match(line.strip())]
