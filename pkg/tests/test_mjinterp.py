import math

from mj2ml.mjast import INT_MAX
from mj2ml.mjinterp import interpret_mj
from mj2ml.outcome import FaultKind
from mj2ml.parser import parse_source


def run(source, fuel=10_000_000, alloc_trace=None):
    return interpret_mj(parse_source(source), fuel=fuel, alloc_trace=alloc_trace)


def worker(body, main_expr="new W().run()", extra=""):
    return f"""\
class Main {{
    public static void main(String[] a) {{
        System.out.println({main_expr});
    }}
}}
class W {{
{extra}
    public int run() {{
{body}
    }}
}}
"""


def test_factorial_matches_math_oracle(corpus_dir):
    out = run((corpus_dir / "Factorial.java").read_text())
    assert out.ok
    assert out.output == [math.factorial(10)]


def test_bubble_sort_matches_sorted_oracle(corpus_dir):
    data = [20, 7, 12, 18, 2, 11, 6, 9, 19, 5]
    out = run((corpus_dir / "BubbleSort.java").read_text())
    assert out.output == data + [99999] + sorted(data) + [0]


def test_quick_sort_matches_sorted_oracle(corpus_dir):
    data = [14, 3, 17, 8, 0, 18, 9, 1, 20, 11]
    out = run((corpus_dir / "QuickSort.java").read_text())
    assert out.output == data + [77777] + sorted(data) + [0]


def test_binary_search_matches_membership_oracle(corpus_dir):
    table = [20 + 2 * j for j in range(20)]
    probes = [8, 22, 41, 58, 60]
    out = run((corpus_dir / "BinarySearch.java").read_text())
    assert out.output == [int(p in table) for p in probes] + [999]


def test_linear_search_matches_membership_oracle(corpus_dir):
    table = [2 * j + 3 for j in range(10)]
    probes = [9, 12, 17, 50]
    out = run((corpus_dir / "LinearSearch.java").read_text())
    assert out.output == [int(p in table) for p in probes] + [55]


def test_linked_list_matches_sum_oracle(corpus_dir):
    values = [5, 8, 13]
    out = run((corpus_dir / "LinkedList.java").read_text())
    assert out.output == [sum(values)] + values + [len(values)] + [0]


def test_binary_tree_matches_sorted_and_membership_oracles(corpus_dir):
    inserted = [16, 8, 24, 4, 12, 20, 28, 14]
    probes = [24, 12, 50, 5]
    out = run((corpus_dir / "BinaryTree.java").read_text())
    expected = sorted(inserted) + [100000000]
    expected += [int(p in inserted) for p in probes] + [0]
    assert out.output == expected


def test_tree_visitor_matches_aggregate_oracles(corpus_dir):
    weights = [30, 42, 25, 15]
    out = run((corpus_dir / "TreeVisitor.java").read_text())
    assert out.output == [sum(weights), len(weights), max(weights), 0]


def test_addition_overflow_faults():
    out = run(worker(f"        return {INT_MAX} + 1;"))
    assert out.fault == FaultKind.INTEGER_OVERFLOW
    assert out.output == []


def test_subtraction_underflow_faults():
    out = run(worker(f"        return 0 - {INT_MAX} - 2;"))
    assert out.fault == FaultKind.INTEGER_OVERFLOW


def test_in_range_arithmetic_is_exact_at_the_edge():
    out = run(worker(f"        return {INT_MAX} + 0;"))
    assert out.ok and out.output == [INT_MAX]


def test_null_field_call_faults_with_position():
    out = run(worker("        return other.run();", extra="    W other;"))
    assert out.fault == FaultKind.NULL_DEREFERENCE
    assert out.fault_pos is not None


def test_index_out_of_bounds_faults():
    body = "        int[] xs;\n        xs = new int[3];\n        return xs[3];"
    out = run(worker(body))
    assert out.fault == FaultKind.INDEX_OUT_OF_BOUNDS


def test_negative_index_faults():
    body = "        int[] xs;\n        xs = new int[3];\n        return xs[0 - 1];"
    out = run(worker(body))
    assert out.fault == FaultKind.INDEX_OUT_OF_BOUNDS


def test_negative_array_size_faults():
    body = "        int[] xs;\n        xs = new int[0 - 2];\n        return xs.length;"
    out = run(worker(body))
    assert out.fault == FaultKind.NEGATIVE_ARRAY_SIZE


def test_fresh_array_is_zeroed_and_has_length():
    body = ("        int[] xs;\n        xs = new int[4];\n"
            "        return xs[0] + xs[3] + xs.length;")
    out = run(worker(body))
    assert out.ok and out.output == [4]


def test_fuel_exhaustion_on_endless_loop():
    body = ("        int x;\n        x = 0;\n"
            "        while (0 < 1) { x = x + 1; }\n        return x;")
    out = run(worker(body), fuel=1_000)
    assert out.fault == FaultKind.FUEL_EXHAUSTED


def test_short_circuit_and_skips_right_operand():
    body = ("        int[] xs;\n        int r;\n        xs = new int[1];\n"
            "        if (0 < 0 && xs[9] < 1) r = 1; else r = 2;\n"
            "        return r;")
    out = run(worker(body))
    assert out.ok and out.output == [2]


def test_fields_default_to_zero_and_false():
    src = worker("        int r;\n        if (flag) r = 1; else r = n;\n        return r;",
                 extra="    int n;\n    boolean flag;")
    out = run(src)
    assert out.ok and out.output == [0]


def test_dynamic_dispatch_picks_runtime_class():
    src = """\
class Main {
    public static void main(String[] a) {
        System.out.println(new Caller().go());
    }
}
class Caller {
    public int go() {
        Base b;
        b = new Derived();
        return b.tag();
    }
}
class Base {
    public int tag() { return 1; }
}
class Derived extends Base {
    public int tag() { return 2; }
}
"""
    out = run(src)
    assert out.output == [2]


def test_alloc_trace_counts_objects_and_arrays_in_order():
    body = ("        int[] xs;\n        W w;\n"
            "        xs = new int[2];\n        w = new W2();\n"
            "        xs = new int[1];\n        return xs.length;")
    src = worker(body) + "\nclass W2 extends W {\n}\n"
    trace = []
    out = run(src, alloc_trace=trace)
    assert out.ok
    assert trace == [0, 1, 2, 3]
