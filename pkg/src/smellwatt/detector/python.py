"""Front end for Python-like sources, built on ``ast`` and ``tokenize``."""

from __future__ import annotations

import ast
import bisect
import io
import keyword
import re
import tokenize

from .model import (
    ClassRecord,
    FieldRecord,
    Import,
    MethodRecord,
    Param,
    SourceUnit,
    Statement,
    SwitchBlock,
    Token,
)

BRANCH_KEYWORDS = frozenset({"if", "elif", "for", "while", "except"})
PRIMITIVE_NAMES = frozenset({"int", "float", "str", "bool", "bytes", "complex"})
_CONST_RE = re.compile(r"^[A-Z][A-Z0-9_]*$")


class PythonParseError(ValueError):
    pass


def _tokens(source: str) -> tuple[list[Token], list[tuple[int, int]]]:
    toks: list[Token] = []
    pos: list[tuple[int, int]] = []
    try:
        for tk in tokenize.generate_tokens(io.StringIO(source).readline):
            if tk.type == tokenize.NAME:
                kind = "kw" if keyword.iskeyword(tk.string) else "id"
            elif tk.type == tokenize.OP:
                kind = "op"
            elif tk.type == tokenize.NUMBER:
                kind = "num"
            elif tk.type == tokenize.STRING:
                kind = "str"
            else:
                continue
            toks.append(Token(kind, tk.string, tk.start[0]))
            pos.append(tk.start)
    except (tokenize.TokenError, IndentationError) as exc:
        raise PythonParseError(str(exc)) from exc
    return toks, pos


def _visibility(name: str) -> str:
    if name.startswith("__") and name.endswith("__"):
        return "public"
    if name.startswith("_"):
        return "private"
    return "public"


def _decorator_names(node) -> list[str]:
    out = []
    for d in node.decorator_list:
        target = d.func if isinstance(d, ast.Call) else d
        out.append(ast.unparse(target).rsplit(".", 1)[-1])
    return out


def _is_primitive(annotation, value) -> bool:
    if annotation is not None:
        return isinstance(annotation, ast.Name) and annotation.id in PRIMITIVE_NAMES
    return (
        isinstance(value, ast.Constant)
        and value.value is not None
        and type(value.value).__name__ in PRIMITIVE_NAMES
    )


def complexity_of(body: list[Token]) -> int:
    return 1 + sum(1 for t in body if t.kind == "kw" and t.text in BRANCH_KEYWORDS)


class _Builder:
    def __init__(self, source: str, module: str, is_package: bool):
        self.toks, self.pos = _tokens(source)
        self.module = module
        self.package = module if is_package else module.rpartition(".")[0]
        self.classes: list[ClassRecord] = []
        self.functions: list[MethodRecord] = []
        self.imports: list[Import] = []

    def span(self, start: tuple[int, int], end: tuple[int, int]) -> list[Token]:
        lo = bisect.bisect_left(self.pos, start)
        hi = bisect.bisect_left(self.pos, end)
        return self.toks[lo:hi]

    def node_tokens(self, node) -> list[Token]:
        return self.span((node.lineno, node.col_offset), (node.end_lineno, node.end_col_offset))

    def resolve_relative(self, level: int, mod: str | None) -> str:
        if level == 0:
            return mod or ""
        base = self.package.split(".") if self.package else []
        if level > 1:
            base = base[: len(base) - (level - 1)]
        parts = base + ([mod] if mod else [])
        return ".".join(p for p in parts if p)

    def visit_module(self, tree: ast.Module) -> None:
        for node in ast.walk(tree):
            if isinstance(node, ast.Import):
                for a in node.names:
                    self.imports.append(Import(a.name, node.lineno, alias=a.asname))
            elif isinstance(node, ast.ImportFrom):
                base = self.resolve_relative(node.level, node.module)
                for a in node.names:
                    if a.name == "*":
                        self.imports.append(Import(base, node.lineno, is_wildcard=True, from_module=base))
                    else:
                        self.imports.append(
                            Import(
                                f"{base}.{a.name}" if base else a.name,
                                node.lineno,
                                alias=a.asname or a.name,
                                from_module=base,
                                name=a.name,
                            )
                        )
        for node in tree.body:
            if isinstance(node, ast.ClassDef):
                self.visit_class(node, self.module)
            elif isinstance(node, (ast.FunctionDef, ast.AsyncFunctionDef)):
                self.functions.append(self.make_method(node, owner=self.module, in_class=False))

    def visit_class(self, node: ast.ClassDef, prefix: str) -> None:
        qual = f"{prefix}.{node.name}"
        start = min([node.lineno] + [d.lineno for d in node.decorator_list])
        bases = [ast.unparse(b) for b in node.bases]
        cls = ClassRecord(
            name=node.name,
            qualname=qual,
            package=self.module,
            start=start,
            end=node.end_lineno,
            bases=[b for b in bases if b.rsplit(".", 1)[-1] not in ("ABC", "Protocol", "object")],
            is_abstract=any(b.rsplit(".", 1)[-1] in ("ABC", "Protocol") for b in bases),
        )
        self.classes.append(cls)
        nested = []
        seen_fields: set[str] = set()
        for item in node.body:
            if isinstance(item, ast.ClassDef):
                nested.append(item)
            elif isinstance(item, (ast.FunctionDef, ast.AsyncFunctionDef)):
                m = self.make_method(item, owner=qual, in_class=True)
                cls.methods.append(m)
                if m.is_abstract:
                    cls.is_abstract = True
            elif isinstance(item, (ast.Assign, ast.AnnAssign)):
                targets = item.targets if isinstance(item, ast.Assign) else [item.target]
                ann = item.annotation if isinstance(item, ast.AnnAssign) else None
                for t in targets:
                    if isinstance(t, ast.Name) and t.id not in seen_fields:
                        seen_fields.add(t.id)
                        const = bool(_CONST_RE.match(t.id))
                        cls.fields.append(
                            FieldRecord(
                                name=t.id,
                                type=ast.unparse(ann) if ann is not None else "",
                                line=item.lineno,
                                visibility=_visibility(t.id),
                                is_static=True,
                                is_final=const,
                                is_constant=const,
                                is_primitive=_is_primitive(ann, item.value),
                            )
                        )
        for item in node.body:
            if not isinstance(item, (ast.FunctionDef, ast.AsyncFunctionDef)):
                continue
            for sub in ast.walk(item):
                if isinstance(sub, (ast.Assign, ast.AnnAssign, ast.AugAssign)):
                    targets = sub.targets if isinstance(sub, ast.Assign) else [sub.target]
                    ann = sub.annotation if isinstance(sub, ast.AnnAssign) else None
                    for t in targets:
                        if (
                            isinstance(t, ast.Attribute)
                            and isinstance(t.value, ast.Name)
                            and t.value.id == "self"
                            and t.attr not in seen_fields
                        ):
                            seen_fields.add(t.attr)
                            cls.fields.append(
                                FieldRecord(
                                    name=t.attr,
                                    type=ast.unparse(ann) if ann is not None else "",
                                    line=sub.lineno,
                                    visibility=_visibility(t.attr),
                                    is_primitive=_is_primitive(ann, sub.value),
                                )
                            )
        nested_ranges = [(n.lineno, n.end_lineno) for n in nested]
        cls.tokens = [
            t
            for t in self.span((start, 0), (node.end_lineno + 1, 0))
            if not any(a <= t.line <= b for a, b in nested_ranges)
        ]
        for n in nested:
            self.visit_class(n, qual)

    def make_method(self, node, owner: str, in_class: bool) -> MethodRecord:
        a = node.args
        decos = _decorator_names(node)
        plist = list(a.posonlyargs) + list(a.args)
        if in_class and "staticmethod" not in decos and plist:
            plist = plist[1:]
        plist += list(a.kwonlyargs)
        if a.vararg:
            plist.append(a.vararg)
        if a.kwarg:
            plist.append(a.kwarg)
        params = [Param(p.arg, ast.unparse(p.annotation) if p.annotation else "") for p in plist]
        start = min([node.lineno] + [d.lineno for d in node.decorator_list])
        first = node.body[0]
        body = self.span((first.lineno, first.col_offset), (node.end_lineno + 1, 0))
        stmts = []
        switches = []
        for sub in ast.walk(node):
            if sub is node or not isinstance(sub, ast.stmt):
                continue
            if isinstance(sub, ast.Match):
                switches.append(SwitchBlock(len(sub.cases), sub.lineno, sub.end_lineno))
            header = None
            if not hasattr(sub, "body"):
                header = sub
            elif isinstance(sub, (ast.If, ast.While)):
                header = sub.test
            elif isinstance(sub, (ast.For, ast.AsyncFor)):
                header = sub.iter
            if header is not None:
                toks = self.node_tokens(header)
                if toks:
                    stmts.append(Statement(len(toks), header.lineno, header.end_lineno))
        stmts.sort(key=lambda s: (s.start, s.end))
        return MethodRecord(
            name=node.name,
            owner=owner,
            params=params,
            start=start,
            end=node.end_lineno,
            body=body,
            visibility=_visibility(node.name),
            annotations=decos,
            is_abstract="abstractmethod" in decos,
            is_constructor=in_class and node.name == "__init__",
            statements=stmts,
            switches=switches,
            in_class=in_class,
        )


def parse_python(path: str, source: str, module: str, is_package: bool = False) -> SourceUnit:
    try:
        tree = ast.parse(source, filename=path)
    except SyntaxError as exc:
        raise PythonParseError(f"syntax error at line {exc.lineno}: {exc.msg}") from exc
    b = _Builder(source, module, is_package)
    b.visit_module(tree)
    line_count = source.count("\n") + (0 if source.endswith("\n") or not source else 1)
    return SourceUnit(
        path=path,
        package_or_module=module,
        line_count=line_count,
        imports=b.imports,
        classes=b.classes,
        functions=b.functions,
        tokens=b.toks,
    )
