from mj2ml.mjast import IdentExpr, IntLitExpr, LessExpr, WhileStmt, print_program, walk
from mj2ml.mjinterp import interpret_mj
from mj2ml.parser import parse_source
from mj2ml.randgen import GENERATOR_FUEL, MAX_LITERAL, generate_program
from mj2ml.sema import typecheck


def test_same_seed_same_program():
    a = generate_program(3, 40)
    b = generate_program(3, 40)
    assert a == b
    assert print_program(a) == print_program(b)


def test_different_seeds_differ_somewhere():
    texts = {print_program(generate_program(seed, 40)) for seed in range(6)}
    assert len(texts) > 1


def test_generated_programs_typecheck_and_run_clean():
    for seed in range(12):
        program = generate_program(seed, 40)
        table = typecheck(program)
        out = interpret_mj(program, table, fuel=GENERATOR_FUEL)
        assert out.ok, f"seed {seed} faulted: {out.fault}"
        assert out.output, f"seed {seed} printed nothing"


def test_generated_text_parses_back_to_the_same_ast():
    for seed in range(8):
        program = generate_program(seed, 40)
        assert parse_source(print_program(program)) == program


def test_literals_stay_small():
    for seed in range(8):
        program = generate_program(seed, 40)
        for node in walk(program):
            if isinstance(node, IntLitExpr):
                assert 0 <= node.value <= MAX_LITERAL


def test_loops_are_counter_bounded():
    # every while condition has the shape `0 < counter`
    found = 0
    for seed in range(20):
        program = generate_program(seed, 40)
        for node in walk(program):
            if isinstance(node, WhileStmt):
                found += 1
                assert isinstance(node.cond, LessExpr)
                assert node.cond.left == IntLitExpr(0)
                assert isinstance(node.cond.right, IdentExpr)
    assert found > 0
