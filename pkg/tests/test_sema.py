import pytest

from mj2ml.mjast import BOOL, INT, CallExpr, ClassType, IdentExpr, walk
from mj2ml.parser import parse_source
from mj2ml.sema import MjTypeError, build_class_table, typecheck

CHAIN = """\
class Main {
    public static void main(String[] a) {
        System.out.println(new C().tag());
    }
}

class A {
    int shared;
    public int tag() { return 1; }
    public int base() { return 10; }
}

class B extends A {
    int extra;
    public int tag() { return 2; }
}

class C extends B {
    public int tag() { return 3; }
}
"""


def check(source):
    program = parse_source(source)
    return program, typecheck(program)


def expect_type_error(source, fragment):
    with pytest.raises(MjTypeError) as err:
        check(source)
    assert fragment in err.value.message


def test_class_table_shape():
    _, table = check(CHAIN)
    assert table.superchain("C") == ["C", "B", "A"]
    assert table.roots() == ["A"]
    assert table.path_from_root("C") == ["A", "B", "C"]


def test_field_lookup_walks_up_the_chain():
    _, table = check(CHAIN)
    assert table.lookup_field("C", "shared") == ("A", INT)
    assert table.lookup_field("C", "extra") == ("B", INT)
    assert table.lookup_field("A", "extra") is None


def test_method_lookup_is_most_derived():
    _, table = check(CHAIN)
    assert table.lookup_method("C", "tag")[0] == "C"
    assert table.lookup_method("B", "tag")[0] == "B"
    assert table.lookup_method("C", "base")[0] == "A"
    assert table.intro_class_of_method("C", "tag") == "A"
    assert table.intro_class_of_method("B", "tag") == "A"


def test_assignability_follows_subtyping():
    _, table = check(CHAIN)
    assert table.is_assignable(ClassType("C"), ClassType("A"))
    assert table.is_assignable(ClassType("B"), ClassType("B"))
    assert not table.is_assignable(ClassType("A"), ClassType("C"))
    assert not table.is_assignable(INT, BOOL)


def test_annotations_record_bindings_and_receivers():
    program, _ = check(CHAIN)
    call = next(e for e in walk(program) if isinstance(e, CallExpr))
    assert call.receiver_class == "C"
    c_tag = next(c for c in program.classes if c.name == "C").methods[0]
    assert c_tag.return_expr.ty == INT


def test_locals_may_shadow_fields():
    src = CHAIN.replace("public int base() { return 10; }",
                        "public int base(int shared) { return shared; }")
    program, _ = check(src)
    a = next(c for c in program.classes if c.name == "A")
    base = next(m for m in a.methods if m.name == "base")
    assert isinstance(base.return_expr, IdentExpr)
    assert base.return_expr.binding.kind == "formal"


def test_formal_and_local_may_not_collide():
    expect_type_error(CHAIN.replace(
        "public int base() { return 10; }",
        "public int base(int x) { int x; x = 1; return x; }"), "x")


def test_redeclaring_inherited_field_rejected():
    expect_type_error(CHAIN.replace("int extra;", "int shared;"), "shared")


def test_override_must_keep_signature():
    expect_type_error(CHAIN.replace("public int tag() { return 2; }",
                                    "public int tag(int n) { return 2; }"),
                      "signature")


def test_unknown_superclass_rejected():
    expect_type_error(CHAIN.replace("class A {", "class A extends Z {"), "Z")


def test_duplicate_class_rejected():
    expect_type_error(CHAIN + "\nclass A { public int z() { return 0; } }\n",
                      "duplicate")


def test_inheritance_cycle_rejected():
    src = """\
class Main {
    public static void main(String[] a) {
        System.out.println(1);
    }
}
class P extends Q { public int p() { return 1; } }
class Q extends P { public int q() { return 2; } }
"""
    expect_type_error(src, "cycle")


def test_condition_must_be_boolean():
    expect_type_error(CHAIN.replace("return 10;",
                                    "if (1) shared = 1; else shared = 2; return 10;"),
                      "boolean")


def test_call_on_non_object_rejected():
    expect_type_error(CHAIN.replace("new C().tag()", "5.tag()"), "receiver")


def test_argument_types_checked():
    src = CHAIN.replace("public int base() { return 10; }",
                        "public int base(int n) { return n; }")
    expect_type_error(src.replace("new C().tag()", "new C().base(true)"),
                      "must be int")


def test_this_rejected_in_main():
    expect_type_error(CHAIN.replace("new C().tag()", "this.tag()"), "this")


def test_build_class_table_alone_accepts_valid_hierarchy():
    program = parse_source(CHAIN)
    table = build_class_table(program)
    assert table.has("A") and table.has("B") and table.has("C")
