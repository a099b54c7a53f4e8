"""Core ML abstract syntax, plus the well-formedness validator.

The expression language is a small pure subset of Standard ML: tuples,
datatype constructors, primitive integer operators, let/letfun, lambdas,
application, conditionals and pattern matching.  There are no refs,
exceptions, strings, or records.  Booleans are the usual constructors
``true``/``false``; lists and options use the builtin ``nil``/``::``/
``NONE``/``SOME``.

Types (`Ty*`) appear only in datatype declarations; expressions are
untyped here and checked structurally by `validate_core`.
"""

from __future__ import annotations

from dataclasses import dataclass, field


# -- types (for datatype declarations only) -----------------------------------

class MlType:
    pass


@dataclass(frozen=True)
class TyName(MlType):
    name: str


@dataclass(frozen=True)
class TyApp(MlType):
    """Postfix application: TyApp('list', int) is 'int list'."""
    base: str
    arg: MlType


@dataclass(frozen=True)
class TyTuple(MlType):
    items: tuple[MlType, ...]


@dataclass(frozen=True)
class TyArrow(MlType):
    param: MlType
    result: MlType


TY_INT = TyName("int")
TY_BOOL = TyName("bool")
TY_UNIT = TyTuple(())


# -- patterns ------------------------------------------------------------------

class Pat:
    pass


@dataclass(frozen=True)
class PVar(Pat):
    name: str


@dataclass(frozen=True)
class PWild(Pat):
    pass


@dataclass(frozen=True)
class PInt(Pat):
    value: int


@dataclass(frozen=True)
class PTuple(Pat):
    items: tuple[Pat, ...]


@dataclass(frozen=True)
class PCon(Pat):
    name: str
    args: tuple[Pat, ...] = ()


# -- expressions ----------------------------------------------------------------

class MlExpr:
    pass


@dataclass(frozen=True)
class Var(MlExpr):
    name: str


@dataclass(frozen=True)
class IntLit(MlExpr):
    value: int


@dataclass(frozen=True)
class Tuple(MlExpr):
    """n-tuple for n = 0 (unit) or n >= 2; 1-tuples do not exist."""
    items: tuple[MlExpr, ...]


@dataclass(frozen=True)
class Con(MlExpr):
    name: str
    args: tuple[MlExpr, ...] = ()


@dataclass(frozen=True)
class PrimOp(MlExpr):
    op: str
    args: tuple[MlExpr, ...]


@dataclass(frozen=True)
class If(MlExpr):
    cond: MlExpr
    then: MlExpr
    orelse: MlExpr


@dataclass(frozen=True)
class Let(MlExpr):
    pat: Pat
    rhs: MlExpr
    body: MlExpr


@dataclass(frozen=True)
class FunDef:
    name: str
    param: Pat
    body: MlExpr


@dataclass(frozen=True)
class LetFun(MlExpr):
    """let fun f p = e and g q = e' ... in body end (mutually recursive)."""
    funs: tuple[FunDef, ...]
    body: MlExpr


@dataclass(frozen=True)
class Fn(MlExpr):
    param: Pat
    body: MlExpr


@dataclass(frozen=True)
class App(MlExpr):
    func: MlExpr
    arg: MlExpr


@dataclass(frozen=True)
class Case(MlExpr):
    scrutinee: MlExpr
    rules: tuple[tuple[Pat, MlExpr], ...]


# -- declarations ----------------------------------------------------------------

@dataclass(frozen=True)
class DataCon:
    name: str
    arg: MlType | None = None

    @property
    def arity(self) -> int:
        if self.arg is None:
            return 0
        if isinstance(self.arg, TyTuple):
            return len(self.arg.items)
        return 1


@dataclass(frozen=True)
class DataType:
    name: str
    cons: tuple[DataCon, ...]


@dataclass
class MlProgram:
    """Datatypes, then function groups in order, then the entry expression.

    Each inner list of `fun_groups` is one mutually recursive group; a
    group may refer to itself and to every earlier group.  `main` is
    evaluated last with all groups in scope.
    """

    datatypes: list[DataType] = field(default_factory=list)
    fun_groups: list[list[FunDef]] = field(default_factory=list)
    main: MlExpr = Tuple(())


BUILTIN_CON_ARITIES = {
    "nil": 0,
    "::": 2,
    "NONE": 0,
    "SOME": 1,
    "true": 0,
    "false": 0,
}

PRIM_OPS = {"+": 2, "-": 2, "*": 2, "<": 2, "=": 2}

# Names the runtime provides without a definition in the program.
RUNTIME_VARS = frozenset({"mj_print"})


@dataclass(frozen=True)
class Violation:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


class _Validator:
    def __init__(self, con_arities: dict[str, int]):
        self.con_arities = con_arities
        self.violations: list[Violation] = []

    def flag(self, path: str, message: str) -> None:
        self.violations.append(Violation(path, message))

    def pattern_vars(self, pat: Pat, path: str, seen: set[str]) -> None:
        if isinstance(pat, PVar):
            if pat.name in seen:
                self.flag(path, f"duplicate variable '{pat.name}' in pattern")
            seen.add(pat.name)
        elif isinstance(pat, PWild):
            pass
        elif isinstance(pat, PInt):
            pass
        elif isinstance(pat, PTuple):
            if len(pat.items) == 1:
                self.flag(path, "1-element tuple pattern")
            for i, sub in enumerate(pat.items):
                self.pattern_vars(sub, f"{path}.{i}", seen)
        elif isinstance(pat, PCon):
            arity = self.con_arities.get(pat.name)
            if arity is None:
                self.flag(path, f"unknown constructor '{pat.name}' in pattern")
            elif arity != len(pat.args):
                self.flag(path, f"constructor '{pat.name}' takes {arity} "
                                f"argument(s), pattern has {len(pat.args)}")
            for i, sub in enumerate(pat.args):
                self.pattern_vars(sub, f"{path}.{i}", seen)
        else:
            self.flag(path, f"not a core pattern: {type(pat).__name__}")

    def expr(self, e: MlExpr, env: frozenset[str], path: str) -> None:
        if isinstance(e, Var):
            if e.name not in env:
                self.flag(path, f"unbound variable '{e.name}'")
        elif isinstance(e, IntLit):
            pass
        elif isinstance(e, Tuple):
            if len(e.items) == 1:
                self.flag(path, "1-element tuple")
            for i, sub in enumerate(e.items):
                self.expr(sub, env, f"{path}/tuple.{i}")
        elif isinstance(e, Con):
            arity = self.con_arities.get(e.name)
            if arity is None:
                self.flag(path, f"unknown constructor '{e.name}'")
            elif arity != len(e.args):
                self.flag(path, f"constructor '{e.name}' takes {arity} "
                                f"argument(s), got {len(e.args)}")
            for i, sub in enumerate(e.args):
                self.expr(sub, env, f"{path}/{e.name}.{i}")
        elif isinstance(e, PrimOp):
            arity = PRIM_OPS.get(e.op)
            if arity is None:
                self.flag(path, f"unknown primitive '{e.op}'")
            elif arity != len(e.args):
                self.flag(path, f"primitive '{e.op}' takes {arity} "
                                f"argument(s), got {len(e.args)}")
            for i, sub in enumerate(e.args):
                self.expr(sub, env, f"{path}/{e.op}.{i}")
        elif isinstance(e, If):
            self.expr(e.cond, env, f"{path}/if-cond")
            self.expr(e.then, env, f"{path}/if-then")
            self.expr(e.orelse, env, f"{path}/if-else")
        elif isinstance(e, Let):
            self.expr(e.rhs, env, f"{path}/let-rhs")
            bound: set[str] = set()
            self.pattern_vars(e.pat, f"{path}/let-pat", bound)
            self.expr(e.body, env | bound, f"{path}/let-body")
        elif isinstance(e, LetFun):
            names = [f.name for f in e.funs]
            if len(set(names)) != len(names):
                self.flag(path, "duplicate function name in group")
            inner = env | set(names)
            for f in e.funs:
                bound: set[str] = set()
                self.pattern_vars(f.param, f"{path}/fun {f.name}/param", bound)
                self.expr(f.body, inner | bound, f"{path}/fun {f.name}")
            self.expr(e.body, inner, f"{path}/letfun-body")
        elif isinstance(e, Fn):
            bound = set()
            self.pattern_vars(e.param, f"{path}/fn-param", bound)
            self.expr(e.body, env | bound, f"{path}/fn-body")
        elif isinstance(e, App):
            self.expr(e.func, env, f"{path}/app-fn")
            self.expr(e.arg, env, f"{path}/app-arg")
        elif isinstance(e, Case):
            self.expr(e.scrutinee, env, f"{path}/case-scrutinee")
            if not e.rules:
                self.flag(path, "case with no rules")
            for i, (pat, rhs) in enumerate(e.rules):
                bound = set()
                self.pattern_vars(pat, f"{path}/case-rule{i}-pat", bound)
                self.expr(rhs, env | bound, f"{path}/case-rule{i}")
        else:
            self.flag(path, f"not a core expression: {type(e).__name__}")


def validate_core(program: MlProgram) -> list[Violation]:
    """Structural check: core nodes only, known constructors and primitives
    at the right arities, no unbound variables, no 1-tuples."""
    con_arities = dict(BUILTIN_CON_ARITIES)
    checker = _Validator(con_arities)
    for dt in program.datatypes:
        for con in dt.cons:
            if con.name in con_arities:
                checker.flag(f"datatype {dt.name}",
                             f"constructor '{con.name}' declared twice")
            con_arities[con.name] = con.arity

    env = frozenset(RUNTIME_VARS)
    for group in program.fun_groups:
        names = [f.name for f in group]
        if len(set(names)) != len(names):
            checker.flag("fun group", "duplicate function name in group")
        inner = env | set(names)
        for f in group:
            bound: set[str] = set()
            checker.pattern_vars(f.param, f"fun {f.name}/param", bound)
            checker.expr(f.body, inner | bound, f"fun {f.name}")
        env = inner
    checker.expr(program.main, env, "main")
    return checker.violations
