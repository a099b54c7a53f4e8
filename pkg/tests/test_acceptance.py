"""End-to-end gate: every promised behavior, one test and one verdict line each.

Run with `pytest -sv tests/test_acceptance.py` to see the verdict lines.
"""

import time

import pytest

from mj2ml.diffharness import (
    all_passing,
    diff_ast,
    diff_files,
    diff_generated,
    find_sml_system,
    run_system_sml,
)
from mj2ml.cli import main as cli_main
from mj2ml.lexer import LexError, tokenize
from mj2ml.mjinterp import interpret_mj
from mj2ml.mlast import validate_core
from mj2ml.mleval import VCon, alloc_order, eval_program
from mj2ml.mlprint import print_ml_program
from mj2ml.parser import ParseError, parse, parse_source
from mj2ml.randgen import generate_program
from mj2ml.sema import MjTypeError, typecheck
from mj2ml.translate import translate

RANDOM_SEEDS = list(range(200))
RANDOM_SIZE = 40


def report(label: str, ok: bool, detail: str = "") -> None:
    verdict = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[acceptance] {verdict}: {label}{suffix}")


@pytest.fixture(scope="module")
def generated_programs():
    return [(seed, generate_program(seed, RANDOM_SIZE)) for seed in RANDOM_SEEDS]


def test_corpus_differential_equivalence(corpus_files):
    start = time.monotonic()
    results = diff_files(corpus_files)
    elapsed = time.monotonic() - start
    matches = sum(r.verdict == "match" for r in results)
    ok = matches == 8 == len(results) and elapsed < 10.0
    report("differential equivalence on the 8-program corpus", ok,
           f"{matches}/8 match in {elapsed:.2f}s")
    assert ok, [(r.name, r.verdict, r.detail) for r in results if r.verdict != "match"]


def test_random_differential_testing():
    start = time.monotonic()
    results = diff_generated(RANDOM_SEEDS, size=RANDOM_SIZE)
    elapsed = time.monotonic() - start
    bad = [r for r in results if r.verdict != "match"]
    ok = not bad and len(results) == len(RANDOM_SEEDS) and elapsed < 60.0
    report("random differential testing, 200 seeds", ok,
           f"{len(results) - len(bad)}/{len(RANDOM_SEEDS)} match in {elapsed:.1f}s")
    assert ok, [(r.name, r.verdict, r.detail) for r in bad]


def test_core_feature_purity(corpus_files, generated_programs):
    violations = []
    for path in corpus_files:
        violations += validate_core(translate(parse_source(path.read_text())))
    for seed, program in generated_programs:
        violations += validate_core(translate(program))
    ok = violations == []
    report("translations stay inside the functional core", ok,
           f"{len(violations)} violation(s) over {8 + len(generated_programs)} programs")
    assert ok, violations


ALLOC_PROGRAM = """\
class AllocOrder {
    public static void main(String[] a) {
        System.out.println(new Maker().build());
    }
}
class Maker {
    public int build() {
        Pair p;
        int[] xs;
        Pair q;
        int[] ys;
        p = new Pair();
        xs = new int[3];
        q = new Pair();
        ys = new int[1];
        return p.ping() + q.ping() + xs.length + ys.length;
    }
}
class Pair {
    public int ping() { return 1; }
}
"""


def test_allocation_discipline():
    program = parse_source(ALLOC_PROGRAM)
    trace = []
    mj = interpret_mj(program, alloc_trace=trace)
    ml_outcome, final_state = eval_program(translate(program))
    expected = list(range(5))
    ok = (mj.ok and ml_outcome.ok
          and trace == expected
          and alloc_order(final_state) == expected
          and mj.output == ml_outcome.output == [6])
    report("pointers issue as 0,1,2,... in both interpreters", ok,
           f"mj {trace}, ml {alloc_order(final_state)}")
    assert ok


SUBCLASS_PROGRAM = """\
class SubclassEncoding {
    public static void main(String[] a) {
        System.out.println(new Driver().go());
    }
}
class Driver {
    public int go() {
        A a;
        a = new C();
        System.out.println(a.tag());
        System.out.println(a.describe());
        return 0;
    }
}
class A {
    int base;
    public int tag() { return 1; }
    public int describe() { return this.tag() * 10; }
}
class B extends A {
    int mid;
    public int tag() { return 2; }
}
class C extends B {
    public int tag() { return 3; }
}
"""


def _ext_chain(obj: VCon) -> int:
    # follow the extension slot (always last) down to the innermost NONE
    depth = 0
    ext = obj.args[-1]
    while isinstance(ext, VCon) and ext.name == "SOME":
        depth += 1
        ext = ext.args[0].args[-1]
    assert isinstance(ext, VCon) and ext.name == "NONE"
    return depth


def test_subclass_encoding():
    program = parse_source(SUBCLASS_PROGRAM)
    ml = translate(program)

    by_name = {d.name: [c.name for c in d.cons] for d in ml.datatypes}
    structure_ok = (by_name.get("mj_ext_A") == ["Ext_B"]
                    and by_name.get("mj_ext_B") == ["Ext_C"]
                    and "mj_ext_C" not in by_name
                    and "HObj_A" in by_name.get("heapval", []))

    mj = interpret_mj(program)
    ml_outcome, final_state = eval_program(ml)
    behavior_ok = mj.output == ml_outcome.output == [3, 30, 0]

    heap = dict(_heap_cells(final_state))
    c_object = next(v for v in heap.values() if v.name == "HObj_A")
    depth_ok = _ext_chain(c_object) == 2

    ok = structure_ok and behavior_ok and depth_ok
    report("three-level subclass encoding, structure and dispatch", ok,
           f"dispatch printed {ml_outcome.output}, extension depth "
           f"{_ext_chain(c_object)}")
    assert ok


def _heap_cells(state):
    _, cell = state
    while isinstance(cell, VCon) and cell.name == "::":
        key, value = cell.args[0]
        yield key, value
        cell = cell.args[1]


STAGES = {
    "lex": (LexError, 1),
    "parse": (ParseError, 1),
    "type": (MjTypeError, 2),
}


def test_negative_suite(negative_files, capsys):
    failures = []
    for path in negative_files:
        stage = path.name.split("_")[0]
        exc_type, wanted_code = STAGES[stage]
        try:
            typecheck(parse(tokenize(path.read_text())))
            failures.append(f"{path.name}: accepted")
            continue
        except (LexError, ParseError, MjTypeError) as err:
            if not isinstance(err, exc_type):
                failures.append(f"{path.name}: {type(err).__name__}")
        code = cli_main(["run-mj", str(path)])
        capsys.readouterr()
        if code != wanted_code:
            failures.append(f"{path.name}: exit {code} != {wanted_code}")
    with capsys.disabled():
        ok = not failures and len(negative_files) >= 10
        report("ill-formed programs rejected at the right stage", ok,
               f"{len(negative_files) - len(failures)}/{len(negative_files)} as expected")
    assert ok, failures


def test_external_sml_system(corpus_files):
    system = find_sml_system()
    if system is None:
        report("emitted files compile under a system SML", True,
               "skipped: no SML implementation on PATH")
        pytest.skip("no SML implementation on PATH")
    mismatched = []
    for path in corpus_files:
        program = parse_source(path.read_text())
        ml = translate(program)
        text = print_ml_program(ml, source_name=path.name)
        external = run_system_sml(text)
        internal, _ = eval_program(ml)
        if external != internal.output:
            mismatched.append(path.name)
    ok = not mismatched
    report(f"emitted files compile and agree under {system}", ok,
           f"{8 - len(mismatched)}/8 agree")
    assert ok, mismatched
