import re

import pytest

from mj2ml.cli import main

FAULTING = """\
class NullCall {
    public static void main(String[] a) {
        System.out.println(new W().run());
    }
}
class W {
    W other;
    public int run() {
        return other.run();
    }
}
"""

LOOPING = """\
class Loop {
    public static void main(String[] a) {
        System.out.println(new W().spin());
    }
}
class W {
    public int spin() {
        int x;
        x = 0;
        while (x < 1) { x = x - 1; }
        return x;
    }
}
"""


@pytest.fixture
def factorial(corpus_dir):
    return str(corpus_dir / "Factorial.java")


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_translate_to_stdout(factorial, capsys):
    assert main(["translate", factorial]) == 0
    out = capsys.readouterr().out
    assert "fun mj_main () =" in out


def test_translate_to_file(factorial, tmp_path, capsys):
    target = tmp_path / "out.sml"
    assert main(["translate", factorial, "-o", str(target)]) == 0
    assert "val _ = mj_main ()" in target.read_text()
    assert capsys.readouterr().out == ""


def test_run_mj_prints_one_integer_per_line(factorial, capsys):
    assert main(["run-mj", factorial]) == 0
    assert capsys.readouterr().out == "3628800\n"


def test_run_ml_matches_run_mj(factorial, capsys):
    main(["run-mj", factorial])
    mj_out = capsys.readouterr().out
    assert main(["run-ml", factorial]) == 0
    assert capsys.readouterr().out == mj_out


def test_syntax_error_exits_1_with_position(tmp_path, capsys):
    path = write(tmp_path, "bad.java", "class X {")
    assert main(["run-mj", path]) == 1
    err = capsys.readouterr().err
    assert re.search(rf"{re.escape(path)}:\d+:\d+: ", err)


def test_type_error_exits_2(tmp_path, capsys):
    src = FAULTING.replace("other.run()", "missing + 1")
    path = write(tmp_path, "ill.java", src)
    assert main(["run-mj", path]) == 2
    assert "missing" in capsys.readouterr().err


def test_runtime_fault_exits_3_with_fault_line(tmp_path, capsys):
    path = write(tmp_path, "null.java", FAULTING)
    assert main(["run-mj", path]) == 3
    err = capsys.readouterr().err
    assert re.match(r"fault: NullDereference at \d+:\d+", err)


def test_ml_fault_line_has_no_position(tmp_path, capsys):
    path = write(tmp_path, "null.java", FAULTING)
    assert main(["run-ml", path]) == 3
    err = capsys.readouterr().err
    assert err.startswith("fault: ")
    assert " at " not in err


def test_missing_file_exits_4(capsys):
    assert main(["run-mj", "no/such/file.java"]) == 4
    assert "file.java" in capsys.readouterr().err


def test_fuel_exhaustion_exits_5(tmp_path, capsys):
    path = write(tmp_path, "loop.java", LOOPING)
    assert main(["run-mj", path, "--fuel", "200"]) == 5
    assert main(["run-ml", path, "--fuel", "200"]) == 5


def test_diff_corpus_exits_0(corpus_dir, capsys):
    assert main(["diff", str(corpus_dir)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].split() == ["program", "|", "mj", "|", "ml",
                                           "|", "verdict", "|", "ms"]
    assert out.count("match") >= 8


def test_diff_skips_programs_that_fault_on_the_source_side(tmp_path, capsys):
    path = write(tmp_path, "null.java", FAULTING)
    assert main(["diff", path]) == 0
    assert "skipped-faulting" in capsys.readouterr().out


def test_diff_counts_unreadable_files_as_failures(tmp_path, capsys):
    assert main(["diff", str(tmp_path / "ghost.java")]) == 3
    assert "error" in capsys.readouterr().out


def test_diff_report_is_reproducible_modulo_timing(corpus_dir, capsys):
    def stripped():
        main(["diff", str(corpus_dir), "--count", "2"])
        rows = capsys.readouterr().out.splitlines()
        return [row.rsplit("|", 1)[0] for row in rows]

    assert stripped() == stripped()


def test_check_runs_generated_programs(capsys):
    assert main(["check", "--count", "3", "--size", "30"]) == 0
    out = capsys.readouterr().out
    assert "seed000" in out and "seed002" in out


def test_generate_is_deterministic_and_parses(capsys):
    assert main(["generate", "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert main(["generate", "--seed", "5"]) == 0
    assert capsys.readouterr().out == first
    from mj2ml.parser import parse_source
    parse_source(first)


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "mj2ml" in capsys.readouterr().out
