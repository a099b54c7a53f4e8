from hypothesis import given
from hypothesis import strategies as st

from mj2ml.mlast import validate_core
from mj2ml.parser import parse_source
from mj2ml.translate import mangle_method, mangle_new, mangle_var, translate

CHAIN = """\
class Main {
    public static void main(String[] a) {
        System.out.println(new C().tag());
    }
}

class A {
    int shared;
    public int tag() { return 1; }
}

class B extends A {
    int extra;
    public int tag() { return 2; }
}

class C extends B {
    public int tag() { return 3; }
}
"""


def tr(source):
    return translate(parse_source(source))


def test_translation_is_deterministic():
    assert tr(CHAIN) == tr(CHAIN)


def test_corpus_translations_stay_in_the_core(corpus_files):
    for path in corpus_files:
        assert validate_core(tr(path.read_text())) == []


def test_heapval_groups_one_constructor_per_root():
    ml = tr(CHAIN)
    heapval = next(d for d in ml.datatypes if d.name == "heapval")
    names = [c.name for c in heapval.cons]
    assert names == ["HArr", "HObj_A"]


def test_extension_datatypes_follow_the_hierarchy():
    ml = tr(CHAIN)
    by_name = {d.name: d for d in ml.datatypes}
    assert set(by_name) == {"heapval", "mj_ext_A", "mj_ext_B"}
    assert [c.name for c in by_name["mj_ext_A"].cons] == ["Ext_B"]
    assert [c.name for c in by_name["mj_ext_B"].cons] == ["Ext_C"]


def test_function_group_layout():
    ml = tr(CHAIN)
    names = [[f.name for f in group] for group in ml.fun_groups]
    assert names[:7] == [["mj_lookup"], ["mj_update"], ["mj_getnth"],
                         ["mj_setnth"], ["mj_length"], ["mj_zeros"],
                         ["mj_alloc"]]
    assert names[-1] == ["mj_main"]
    big = names[-2]
    assert big[:3] == ["mj_new_A", "mj_new_B", "mj_new_C"]
    assert set(big[3:]) == {mangle_method(i, "tag") for i in range(3)}


def test_methods_mangle_with_declaring_class_index():
    ml = tr(CHAIN)
    flat = [f.name for group in ml.fun_groups for f in group]
    for i, cls in enumerate(["A", "B", "C"]):
        assert mangle_method(i, "tag") in flat
        assert mangle_new(cls) in flat


def test_main_calls_the_entry_function():
    ml = tr(CHAIN)
    text = repr(ml.main)
    assert "mj_main" in text


def test_generated_programs_stay_in_the_core():
    from mj2ml.randgen import generate_program
    for seed in range(10):
        assert validate_core(translate(generate_program(seed, 40))) == []


# identifiers: a letter, then letters, digits and underscores
names = st.from_regex(r"[a-dm-n][a-d0-3_]{0,6}", fullmatch=True)
versions = st.integers(min_value=0, max_value=99)


@given(st.tuples(names, versions), st.tuples(names, versions))
def test_variable_mangling_is_injective(a, b):
    if mangle_var(*a) == mangle_var(*b):
        assert a == b


@given(st.integers(0, 50), names, st.integers(0, 50), names)
def test_method_mangling_is_injective(i, m, j, n):
    if mangle_method(i, m) == mangle_method(j, n):
        assert (i, m) == (j, n)


@given(names, versions, st.integers(0, 50), names, names)
def test_mangling_families_do_not_collide(v, ver, i, m, cls):
    assert mangle_var(v, ver) != mangle_method(i, m)
    assert mangle_var(v, ver) != mangle_new(cls)
    assert mangle_method(i, m) != mangle_new(cls)
    assert mangle_var(v, ver) not in {"mj_lookup", "mj_update", "mj_getnth",
                                      "mj_setnth", "mj_length", "mj_zeros",
                                      "mj_alloc", "mj_print", "mj_main"}
