"""Class table construction and typechecking.

`typecheck` builds the inheritance table, then checks every method body
and the main statement list.  It annotates the AST in place: every
expression gets `.ty`, identifier reads/writes get `.binding`, and calls
get `.receiver_class`.  Later stages rely on those annotations.

Rules beyond the obvious typing of operators:
  * single inheritance, no cycles, superclasses must exist
  * the main class cannot be extended, instantiated, or named as a type
  * no overloading: a subclass method with a declared parent method's
    name must repeat its signature exactly (an override)
  * a subclass may not redeclare an inherited field name
  * locals and formals may shadow fields, but not each other
  * the main body has no variables in scope ('this' is also unavailable)
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .mjast import (
    BOOL,
    INT,
    INT_ARRAY,
    AndExpr,
    ArrayAssignStmt,
    ArrayIndexExpr,
    ArrayLengthExpr,
    AssignStmt,
    BlockStmt,
    CallExpr,
    ClassDecl,
    ClassType,
    Expr,
    FalseExpr,
    IdentExpr,
    IfStmt,
    IntLitExpr,
    LessExpr,
    MainClass,
    MethodDecl,
    MinusExpr,
    MjProgram,
    MjType,
    NewArrayExpr,
    NewObjectExpr,
    NotExpr,
    PlusExpr,
    Pos,
    PrintStmt,
    Stmt,
    ThisExpr,
    TimesExpr,
    TrueExpr,
    VarBinding,
    WhileStmt,
)


class MjTypeError(Exception):
    def __init__(self, pos: Pos, message: str):
        super().__init__(f"{pos}: {message}")
        self.pos = pos
        self.message = message


@dataclass
class ClassInfo:
    """One class: members introduced here plus inheritance links."""

    name: str
    superclass: str | None
    decl: ClassDecl
    index: int
    fields: dict[str, MjType] = field(default_factory=dict)
    methods: dict[str, MethodDecl] = field(default_factory=dict)
    children: list[str] = field(default_factory=list)


class ClassTable:
    def __init__(self, main_name: str, classes: dict[str, ClassInfo]):
        self.main_name = main_name
        self.classes = classes

    def info(self, name: str) -> ClassInfo:
        return self.classes[name]

    def has(self, name: str) -> bool:
        return name in self.classes

    def superchain(self, name: str) -> list[str]:
        """name, its superclass, ... up to the root."""
        chain = []
        cur: str | None = name
        while cur is not None:
            chain.append(cur)
            cur = self.classes[cur].superclass
        return chain

    def path_from_root(self, name: str) -> list[str]:
        return list(reversed(self.superchain(name)))

    def root_of(self, name: str) -> str:
        return self.superchain(name)[-1]

    def roots(self) -> list[str]:
        return [c.name for c in self.classes.values() if c.superclass is None]

    def is_subclass(self, sub: str, sup: str) -> bool:
        return sup in self.superchain(sub)

    def is_assignable(self, src: MjType, dst: MjType) -> bool:
        if isinstance(src, ClassType) and isinstance(dst, ClassType):
            return self.is_subclass(src.name, dst.name)
        return src == dst

    def lookup_field(self, cls: str, fname: str) -> tuple[str, MjType] | None:
        """(declaring class, type) for fname visible in cls, else None."""
        for c in self.superchain(cls):
            ty = self.classes[c].fields.get(fname)
            if ty is not None:
                return c, ty
        return None

    def lookup_method(self, cls: str, mname: str) -> tuple[str, MethodDecl] | None:
        """Most-derived declaration of mname at or above cls."""
        for c in self.superchain(cls):
            decl = self.classes[c].methods.get(mname)
            if decl is not None:
                return c, decl
        return None

    def intro_class_of_method(self, cls: str, mname: str) -> str:
        """Topmost class on cls's chain declaring mname (the slot owner)."""
        owner = None
        for c in self.superchain(cls):
            if mname in self.classes[c].methods:
                owner = c
        assert owner is not None
        return owner


def build_class_table(program: MjProgram) -> ClassTable:
    main_name = program.main.name
    classes: dict[str, ClassInfo] = {}
    for index, decl in enumerate(program.classes):
        if decl.name == main_name or decl.name in classes:
            raise MjTypeError(decl.span.start, f"duplicate class '{decl.name}'")
        classes[decl.name] = ClassInfo(decl.name, decl.superclass, decl, index)

    for info in classes.values():
        sup = info.superclass
        if sup is None:
            continue
        if sup == main_name:
            raise MjTypeError(info.decl.span.start,
                              f"cannot extend main class '{sup}'")
        if sup not in classes:
            raise MjTypeError(info.decl.span.start, f"unknown superclass '{sup}'")
        classes[sup].children.append(info.name)

    for info in classes.values():
        seen = {info.name}
        cur = info.superclass
        while cur is not None:
            if cur in seen:
                raise MjTypeError(info.decl.span.start,
                                  f"inheritance cycle through '{info.name}'")
            seen.add(cur)
            cur = classes[cur].superclass

    table = ClassTable(main_name, classes)

    for info in classes.values():
        for fdecl in info.decl.fields:
            if fdecl.name in info.fields:
                raise MjTypeError(fdecl.span.start,
                                  f"duplicate field '{fdecl.name}' in class '{info.name}'")
            if info.superclass is not None:
                inherited = table.lookup_field(info.superclass, fdecl.name)
                if inherited is not None:
                    raise MjTypeError(
                        fdecl.span.start,
                        f"field '{fdecl.name}' in class '{info.name}' "
                        f"redeclares a field of class '{inherited[0]}'")
            _require_known_type(table, fdecl.var_type, fdecl.span.start)
            info.fields[fdecl.name] = fdecl.var_type
        for mdecl in info.decl.methods:
            if mdecl.name in info.methods:
                raise MjTypeError(mdecl.span.start,
                                  f"duplicate method '{mdecl.name}' in class '{info.name}'")
            info.methods[mdecl.name] = mdecl

    for info in classes.values():
        if info.superclass is None:
            continue
        for mdecl in info.decl.methods:
            above = table.lookup_method(info.superclass, mdecl.name)
            if above is None:
                continue
            _, parent = above
            same = (len(parent.formals) == len(mdecl.formals)
                    and all(a.var_type == b.var_type
                            for a, b in zip(parent.formals, mdecl.formals))
                    and parent.return_type == mdecl.return_type)
            if not same:
                raise MjTypeError(
                    mdecl.span.start,
                    f"method '{mdecl.name}' in class '{info.name}' "
                    "changes the signature of the method it overrides")
    return table


def _require_known_type(table: ClassTable, ty: MjType, pos: Pos) -> None:
    if isinstance(ty, ClassType) and not table.has(ty.name):
        raise MjTypeError(pos, f"unknown class '{ty.name}'")


class _Checker:
    def __init__(self, table: ClassTable):
        self.table = table
        self.current_class: str | None = None
        self.scope: dict[str, tuple[VarBinding, MjType]] = {}

    # -- scope --------------------------------------------------------------

    def enter_method(self, cls: str, method: MethodDecl) -> None:
        self.current_class = cls
        self.scope = {}
        chain = self.table.superchain(cls)
        for c in reversed(chain):
            for fname, fty in self.table.info(c).fields.items():
                self.scope[fname] = (VarBinding("field", c), fty)
        for formal in method.formals:
            if formal.name in self.scope and self.scope[formal.name][0].kind != "field":
                raise MjTypeError(formal.span.start,
                                  f"duplicate parameter '{formal.name}'")
            _require_known_type(self.table, formal.var_type, formal.span.start)
            self.scope[formal.name] = (VarBinding("formal", cls), formal.var_type)
        for local in method.local_vars:
            if local.name in self.scope and self.scope[local.name][0].kind != "field":
                raise MjTypeError(local.span.start,
                                  f"'{local.name}' is already a parameter or local")
            _require_known_type(self.table, local.var_type, local.span.start)
            self.scope[local.name] = (VarBinding("local", cls), local.var_type)

    def enter_main(self) -> None:
        self.current_class = None
        self.scope = {}

    # -- expressions ----------------------------------------------------------

    def expr(self, e: Expr) -> MjType:
        ty = self._expr(e)
        e.ty = ty
        return ty

    def _expect(self, e: Expr, want: MjType, what: str) -> None:
        got = self.expr(e)
        if got != want:
            raise MjTypeError(e.span.start, f"{what} must be {want}, got {got}")

    def _expr(self, e: Expr) -> MjType:
        if isinstance(e, IntLitExpr):
            return INT
        if isinstance(e, (TrueExpr, FalseExpr)):
            return BOOL
        if isinstance(e, AndExpr):
            self._expect(e.left, BOOL, "left operand of '&&'")
            self._expect(e.right, BOOL, "right operand of '&&'")
            return BOOL
        if isinstance(e, LessExpr):
            self._expect(e.left, INT, "left operand of '<'")
            self._expect(e.right, INT, "right operand of '<'")
            return BOOL
        if isinstance(e, (PlusExpr, MinusExpr, TimesExpr)):
            op = {PlusExpr: "+", MinusExpr: "-", TimesExpr: "*"}[type(e)]
            self._expect(e.left, INT, f"left operand of '{op}'")
            self._expect(e.right, INT, f"right operand of '{op}'")
            return INT
        if isinstance(e, NotExpr):
            self._expect(e.operand, BOOL, "operand of '!'")
            return BOOL
        if isinstance(e, ArrayIndexExpr):
            self._expect(e.array, INT_ARRAY, "indexed value")
            self._expect(e.index, INT, "array index")
            return INT
        if isinstance(e, ArrayLengthExpr):
            self._expect(e.array, INT_ARRAY, "'.length' receiver")
            return INT
        if isinstance(e, IdentExpr):
            entry = self.scope.get(e.name)
            if entry is None:
                raise MjTypeError(e.span.start, f"undeclared variable '{e.name}'")
            e.binding = entry[0]
            return entry[1]
        if isinstance(e, ThisExpr):
            if self.current_class is None:
                raise MjTypeError(e.span.start, "'this' cannot be used in main")
            return ClassType(self.current_class)
        if isinstance(e, NewArrayExpr):
            self._expect(e.length, INT, "array length")
            return INT_ARRAY
        if isinstance(e, NewObjectExpr):
            if not self.table.has(e.class_name):
                raise MjTypeError(e.span.start, f"unknown class '{e.class_name}'")
            return ClassType(e.class_name)
        if isinstance(e, CallExpr):
            recv = self.expr(e.receiver)
            if not isinstance(recv, ClassType):
                raise MjTypeError(e.span.start,
                                  f"method call receiver must be an object, got {recv}")
            found = self.table.lookup_method(recv.name, e.method)
            if found is None:
                raise MjTypeError(e.span.start,
                                  f"class '{recv.name}' has no method '{e.method}'")
            _, decl = found
            if len(e.args) != len(decl.formals):
                raise MjTypeError(
                    e.span.start,
                    f"method '{e.method}' expects {len(decl.formals)} "
                    f"argument(s), got {len(e.args)}")
            for arg, formal in zip(e.args, decl.formals):
                got = self.expr(arg)
                if not self.table.is_assignable(got, formal.var_type):
                    raise MjTypeError(
                        arg.span.start,
                        f"argument for '{formal.name}' must be "
                        f"{formal.var_type}, got {got}")
            e.receiver_class = recv.name
            return decl.return_type
        raise AssertionError(f"unhandled expression {type(e).__name__}")

    # -- statements -----------------------------------------------------------

    def stmt(self, s: Stmt) -> None:
        if isinstance(s, BlockStmt):
            for sub in s.body:
                self.stmt(sub)
        elif isinstance(s, IfStmt):
            self._expect(s.cond, BOOL, "'if' condition")
            self.stmt(s.then_branch)
            self.stmt(s.else_branch)
        elif isinstance(s, WhileStmt):
            self._expect(s.cond, BOOL, "'while' condition")
            self.stmt(s.body)
        elif isinstance(s, PrintStmt):
            self._expect(s.value, INT, "println argument")
        elif isinstance(s, AssignStmt):
            entry = self.scope.get(s.name)
            if entry is None:
                raise MjTypeError(s.span.start, f"undeclared variable '{s.name}'")
            binding, ty = entry
            s.binding = binding
            got = self.expr(s.value)
            if not self.table.is_assignable(got, ty):
                raise MjTypeError(s.value.span.start,
                                  f"cannot assign {got} to '{s.name}' of type {ty}")
        elif isinstance(s, ArrayAssignStmt):
            entry = self.scope.get(s.name)
            if entry is None:
                raise MjTypeError(s.span.start, f"undeclared variable '{s.name}'")
            binding, ty = entry
            if ty != INT_ARRAY:
                raise MjTypeError(s.span.start,
                                  f"'{s.name}[...]=' requires int[], got {ty}")
            s.binding = binding
            self._expect(s.index, INT, "array index")
            self._expect(s.value, INT, "assigned value")
        else:
            raise AssertionError(f"unhandled statement {type(s).__name__}")


def typecheck(program: MjProgram) -> ClassTable:
    """Check the whole program, annotate the AST, return the class table."""
    table = build_class_table(program)
    checker = _Checker(table)
    for info in table.classes.values():
        for method in info.decl.methods:
            checker.enter_method(info.name, method)
            for s in method.body:
                checker.stmt(s)
            got = checker.expr(method.return_expr)
            if not table.is_assignable(got, method.return_type):
                raise MjTypeError(
                    method.return_expr.span.start,
                    f"return value must be {method.return_type}, got {got}")
    checker.enter_main()
    for s in program.main.body:
        checker.stmt(s)
    return table
