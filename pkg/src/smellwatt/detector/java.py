"""Declaration-level front end for Java-like sources.

Not a grammar: the scanner finds packages, imports, type declarations,
fields, methods and their bodies by bracket matching over a token stream.
That is enough for every detection rule and keeps the front end tolerant
of syntax it does not understand.
"""

from __future__ import annotations

import re

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

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while record var yield
    true false null""".split()
)
MODIFIERS = frozenset(
    "public private protected static final abstract native synchronized "
    "transient volatile strictfp default sealed".split()
)
TYPE_KEYWORDS = frozenset({"class", "interface", "enum", "record"})
BRANCH_KEYWORDS = frozenset({"if", "for", "while", "case", "catch"})
PRIMITIVE_TYPES = frozenset(
    {"int", "long", "short", "byte", "char", "boolean", "float", "double", "String"}
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\f]+)
  | (?P<nl>\n)
  | (?P<lcomment>//[^\n]*)
  | (?P<bcomment>/\*.*?\*/)
  | (?P<textblock>\"\"\".*?\"\"\")
  | (?P<str>"(?:\\.|[^"\\\n])*")
  | (?P<chr>'(?:\\.|[^'\\\n])*')
  | (?P<num>0[xX][0-9a-fA-F_]+[lL]?|(?:\d[\d_]*\.?[\d_]*|\.\d[\d_]*)(?:[eE][+-]?\d+)?[fFdDlL]?)
  | (?P<id>[A-Za-z_$][A-Za-z0-9_$]*)
  | (?P<op>\.\.\.|->|::|\+\+|--|&&|\|\||==|!=|<=|>=|\+=|-=|\*=|/=|%=|&=|\|=|\^=|<<=|<<|[-+*/%=<>!~?:;,.()\[\]{}&|^@])
    """,
    re.VERBOSE | re.DOTALL,
)


class JavaParseError(ValueError):
    pass


def tokenize(source: str) -> list[Token]:
    out: list[Token] = []
    line = 1
    pos = 0
    n = len(source)
    while pos < n:
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise JavaParseError(f"unexpected character {source[pos]!r} at line {line}")
        kind = m.lastgroup
        text = m.group()
        if kind in ("str", "chr", "textblock"):
            out.append(Token("str", text, line))
        elif kind == "num":
            out.append(Token("num", text, line))
        elif kind == "id":
            out.append(Token("kw" if text in KEYWORDS else "id", text, line))
        elif kind == "op":
            out.append(Token("op", text, line))
        line += text.count("\n")
        pos = m.end()
    return out


_OPEN = {"(": ")", "[": "]", "{": "}"}
_CLOSE = {")", "]", "}"}


def _match(toks: list[Token], i: int) -> int:
    """Index of the bracket closing the one at ``i``."""
    depth = 0
    for j in range(i, len(toks)):
        t = toks[j].text
        if toks[j].kind != "op":
            continue
        if t in _OPEN:
            depth += 1
        elif t in _CLOSE:
            depth -= 1
            if depth == 0:
                return j
    raise JavaParseError(f"unbalanced {toks[i].text!r} opened at line {toks[i].line}")


def _split_top(toks: list[Token], sep: str = ",", angles: bool = True) -> list[list[Token]]:
    parts: list[list[Token]] = [[]]
    depth = 0
    angle = 0
    for t in toks:
        if t.kind == "op":
            if t.text in _OPEN:
                depth += 1
            elif t.text in _CLOSE:
                depth -= 1
            elif angles and t.text == "<":
                angle += 1
            elif angles and t.text == ">":
                angle = max(0, angle - 1)
            elif t.text == sep and depth == 0 and angle == 0:
                parts.append([])
                continue
        parts[-1].append(t)
    return [p for p in parts if p]


def _strip_generics(toks: list[Token]) -> list[Token]:
    out = []
    angle = 0
    for t in toks:
        if t.text == "<":
            angle += 1
        elif t.text == ">":
            angle -= 1
        elif angle == 0:
            out.append(t)
    return out


def _type_names(toks: list[Token]) -> list[str]:
    names = []
    for part in _split_top(toks):
        bare = [t.text for t in _strip_generics(part) if t.kind == "id" or t.text == "."]
        if bare:
            names.append("".join(bare))
    return names


def statements_of(body: list[Token]) -> list[Statement]:
    """Split a body at ``;``, ``{`` and ``}`` outside parentheses."""
    stmts = []
    cur: list[Token] = []
    paren = 0
    for t in body:
        if t.kind == "op" and t.text in ("(", "["):
            paren += 1
        elif t.kind == "op" and t.text in (")", "]"):
            paren -= 1
        if t.kind == "op" and paren == 0 and t.text in (";", "{", "}"):
            if cur:
                stmts.append(Statement(len(cur), cur[0].line, t.line))
            cur = []
            continue
        cur.append(t)
    if cur:
        stmts.append(Statement(len(cur), cur[0].line, cur[-1].line))
    return stmts


def switches_of(body: list[Token]) -> list[SwitchBlock]:
    out = []
    for i, t in enumerate(body):
        if t.text != "switch" or t.kind != "kw":
            continue
        if i + 1 >= len(body) or body[i + 1].text != "(":
            continue
        close = _match(body, i + 1)
        if close + 1 >= len(body) or body[close + 1].text != "{":
            continue
        end = _match(body, close + 1)
        depth = 0
        cases = 0
        for t2 in body[close + 1 : end + 1]:
            if t2.text == "{":
                depth += 1
            elif t2.text == "}":
                depth -= 1
            elif t2.text == "case" and depth == 1:
                cases += 1
        out.append(SwitchBlock(cases, t.line, body[end].line))
    return out


def complexity_of(body: list[Token]) -> int:
    return 1 + sum(1 for t in body if t.kind == "kw" and t.text in BRANCH_KEYWORDS)


class _Parser:
    def __init__(self, toks: list[Token]):
        self.t = toks
        self.package = ""
        self.imports: list[Import] = []
        self.classes: list[ClassRecord] = []

    def text(self, i: int) -> str:
        return self.t[i].text if i < len(self.t) else ""

    def parse(self) -> None:
        i = 0
        n = len(self.t)
        while i < n:
            tx = self.text(i)
            if tx == "package":
                j = self._until(i, ";")
                self.package = "".join(x.text for x in self.t[i + 1 : j])
                i = j + 1
            elif tx == "import":
                j = self._until(i, ";")
                body = [x.text for x in self.t[i + 1 : j] if x.text != "static"]
                target = "".join(body)
                wildcard = target.endswith(".*")
                if wildcard:
                    target = target[:-2]
                self.imports.append(Import(target, self.t[i].line, is_wildcard=wildcard))
                i = j + 1
            elif tx == ";":
                i += 1
            else:
                i = self._type_decl(i, None)

    def _until(self, i: int, text: str) -> int:
        for j in range(i, len(self.t)):
            if self.t[j].text == text:
                return j
        raise JavaParseError(f"missing {text!r} after line {self.t[i].line}")

    def _modifiers(self, i: int) -> tuple[set[str], list[str], int]:
        mods: set[str] = set()
        anns: list[str] = []
        while i < len(self.t):
            tx = self.text(i)
            if tx == "@" and self.text(i + 1) != "interface":
                j = i + 1
                name = []
                while j < len(self.t) and (self.t[j].kind == "id" or self.text(j) == "."):
                    name.append(self.text(j))
                    j += 1
                anns.append("".join(name).rsplit(".", 1)[-1])
                if self.text(j) == "(":
                    j = _match(self.t, j) + 1
                i = j
            elif tx in MODIFIERS or tx == "non":
                if tx == "non":  # non-sealed
                    i += 3
                    continue
                mods.add(tx)
                i += 1
            else:
                break
        return mods, anns, i

    def _type_decl(self, i: int, outer: ClassRecord | None) -> int:
        start = i
        mods, _anns, k = self._modifiers(i)
        kind_tok = self.text(k)
        if kind_tok == "@" and self.text(k + 1) == "interface":
            kind = "interface"
            k += 1
        elif kind_tok in TYPE_KEYWORDS:
            kind = kind_tok
        else:
            raise JavaParseError(
                f"expected a type declaration at line {self.t[min(k, len(self.t) - 1)].line}, "
                f"found {kind_tok!r}"
            )
        name = self.text(k + 1)
        j = k + 2
        # header up to the body brace
        hdr_end = j
        depth = 0
        while hdr_end < len(self.t):
            tx = self.text(hdr_end)
            if tx == "(":
                hdr_end = _match(self.t, hdr_end) + 1
                continue
            if tx == "{" and depth == 0:
                break
            hdr_end += 1
        else:
            raise JavaParseError(f"type {name} has no body")
        header = self.t[j:hdr_end]
        bases, interfaces = self._inheritance(header, kind)
        close = _match(self.t, hdr_end)
        qual_prefix = outer.qualname if outer else self.package
        qualname = f"{qual_prefix}.{name}" if qual_prefix else name
        cls = ClassRecord(
            name=name,
            qualname=qualname,
            package=self.package or "(default)",
            start=self.t[start].line,
            end=self.t[close].line,
            kind=kind,
            is_abstract="abstract" in mods,
            bases=bases,
            interfaces=interfaces,
        )
        cls.tokens.extend(self.t[start : hdr_end + 1])
        self.classes.append(cls)
        self._body(hdr_end, close, cls)
        cls.tokens.append(self.t[close])
        return close + 1

    @staticmethod
    def _inheritance(header: list[Token], kind: str) -> tuple[list[str], list[str]]:
        header = _strip_generics(header)
        sections: dict[str, list[Token]] = {}
        cur = None
        for t in header:
            if t.text in ("extends", "implements", "permits"):
                cur = t.text
                sections[cur] = []
            elif cur:
                sections[cur].append(t)
        ext = _type_names(sections.get("extends", []))
        impl = _type_names(sections.get("implements", []))
        if kind == "interface":
            return [], ext
        return ext, impl

    def _body(self, open_i: int, close_i: int, cls: ClassRecord) -> None:
        j = open_i + 1
        if cls.kind == "enum":
            depth = 0
            while j < close_i:
                tx = self.text(j)
                if tx in _OPEN:
                    depth += 1
                elif tx in _CLOSE:
                    depth -= 1
                elif tx == ";" and depth == 0:
                    cls.tokens.extend(self.t[open_i + 1 : j + 1])
                    j += 1
                    break
                j += 1
            else:
                cls.tokens.extend(self.t[open_i + 1 : close_i])
                return
        while j < close_i:
            tx = self.text(j)
            if tx == ";":
                j += 1
                continue
            if tx == "{" or (tx == "static" and self.text(j + 1) == "{"):
                b = j if tx == "{" else j + 1
                e = _match(self.t, b)
                cls.tokens.extend(self.t[j : e + 1])
                j = e + 1
                continue
            mods, anns, k = self._modifiers(j)
            if self.text(k) in TYPE_KEYWORDS or (self.text(k) == "@" and self.text(k + 1) == "interface"):
                j = self._type_decl(j, cls)
                continue
            p = k
            depth = 0
            while p < close_i:
                tx2 = self.text(p)
                if depth == 0 and tx2 in ("(", "=", ";", "{"):
                    break
                if tx2 in ("[",):
                    depth += 1
                elif tx2 == "]":
                    depth -= 1
                p += 1
            if p >= close_i:
                raise JavaParseError(f"unterminated member in {cls.name} at line {self.t[j].line}")
            stop = self.text(p)
            if stop == "(":
                j = self._method(j, k, p, mods, anns, cls)
            elif stop == "{":
                e = _match(self.t, p)
                cls.tokens.extend(self.t[j : e + 1])
                j = e + 1
            else:
                j = self._field(j, k, mods, cls)

    def _method(self, j, k, p, mods, anns, cls: ClassRecord) -> int:
        name = self.text(p - 1)
        ret = [t for t in self.t[k : p - 1]]
        ret = _strip_generics(ret)
        is_ctor = name == cls.name and not ret
        q = _match(self.t, p)
        params = []
        for part in _split_top(self.t[p + 1 : q]):
            toks = []
            x = 0
            while x < len(part):
                if part[x].text == "@":
                    x += 2
                    while x < len(part) and part[x].text == ".":
                        x += 2
                    if x < len(part) and part[x].text == "(":
                        x = _match(part, x) + 1
                    continue
                if part[x].text == "final":
                    x += 1
                    continue
                toks.append(part[x])
                x += 1
            ids = [t for t in toks if t.kind == "id"]
            if not ids:
                continue
            pname = ids[-1].text
            ptype = "".join(t.text for t in toks if t is not ids[-1])
            params.append(Param(pname, ptype))
        r = q + 1
        while r < len(self.t) and self.text(r) not in ("{", ";"):
            if self.text(r) == "(":
                r = _match(self.t, r)
            r += 1
        if r >= len(self.t):
            raise JavaParseError(f"method {name} is not terminated")
        vis = _visibility(mods, cls)
        m = MethodRecord(
            name=name,
            owner=cls.qualname,
            params=params,
            start=self.t[j].line,
            end=self.t[r].line,
            visibility=vis,
            annotations=anns,
            is_constructor=is_ctor,
        )
        if self.text(r) == "{":
            e = _match(self.t, r)
            m.body = self.t[r + 1 : e]
            m.end = self.t[e].line
            m.statements = statements_of(m.body)
            m.switches = switches_of(m.body)
            cls.tokens.extend(self.t[j : e + 1])
            nxt = e + 1
        else:
            m.is_abstract = True
            cls.tokens.extend(self.t[j : r + 1])
            nxt = r + 1
        cls.methods.append(m)
        return nxt

    def _field(self, j, k, mods, cls: ClassRecord) -> int:
        s = k
        depth = 0
        while s < len(self.t):
            tx = self.text(s)
            if tx in _OPEN:
                depth += 1
            elif tx in _CLOSE:
                depth -= 1
            elif tx == ";" and depth == 0:
                break
            s += 1
        decl = self.t[k:s]
        declarators: list[list[Token]] = [[]]
        depth = angle = 0
        in_init = False
        for t in decl:
            if t.kind == "op":
                if t.text in _OPEN:
                    depth += 1
                elif t.text in _CLOSE:
                    depth -= 1
                elif not in_init and t.text == "<":
                    angle += 1
                elif not in_init and t.text == ">":
                    angle -= 1
                elif t.text == "=" and depth == 0 and angle == 0:
                    in_init = True
                elif t.text == "," and depth == 0 and angle == 0:
                    declarators.append([])
                    in_init = False
                    continue
            declarators[-1].append(t)
        vis = _visibility(mods, cls)
        is_static = "static" in mods or cls.kind == "interface"
        is_final = "final" in mods or cls.kind == "interface"
        type_text = ""
        for n_decl, d in enumerate(declarators):
            head = d
            for x, t in enumerate(d):
                if t.text == "=":
                    head = d[:x]
                    break
            ids = [t for t in head if t.kind == "id"]
            if not ids:
                continue
            name_tok = ids[-1]
            if n_decl == 0:
                type_text = "".join(t.text for t in head if t is not name_tok and t.text not in ("[", "]"))
            init = d[len(head):]
            bare_type = re.sub(r"<.*>", "", type_text).rsplit(".", 1)[-1]
            cls.fields.append(
                FieldRecord(
                    name=name_tok.text,
                    type=type_text,
                    line=name_tok.line,
                    visibility=vis,
                    is_static=is_static,
                    is_final=is_final,
                    is_constant=is_static and is_final,
                    is_primitive=bare_type in PRIMITIVE_TYPES and "[" not in "".join(t.text for t in head),
                    uses_string_buffer=bare_type == "StringBuffer"
                    or any(t.text == "StringBuffer" for t in init),
                )
            )
        cls.tokens.extend(self.t[j : s + 1])
        return s + 1


def _visibility(mods: set[str], cls: ClassRecord) -> str:
    for v in ("private", "protected", "public"):
        if v in mods:
            return v
    if cls.kind == "interface":
        return "public"
    return "package"


def parse_java(path: str, source: str) -> SourceUnit:
    """Parse one Java-like file; raises ``JavaParseError`` on structural failure."""
    toks = tokenize(source)
    p = _Parser(toks)
    p.parse()
    line_count = source.count("\n") + (0 if source.endswith("\n") or not source else 1)
    return SourceUnit(
        path=path,
        package_or_module=p.package or "(default)",
        line_count=line_count,
        imports=p.imports,
        classes=p.classes,
        tokens=toks,
    )
