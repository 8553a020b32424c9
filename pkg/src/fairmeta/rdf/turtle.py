"""Turtle parser and serializer for the subset the toolkit works with.

Supported syntax: ``@prefix`` / ``@base`` directives, prefixed names,
IRIREFs, the ``a`` keyword, predicate-object lists (``;``), object lists
(``,``), anonymous ``[ ... ]`` and labeled ``_:x`` blank nodes, string
literals with ``@lang`` / ``^^datatype``, and integer/decimal shorthand.
Unicode is permitted in IRIs and local names.

Deliberately rejected with a named error: RDF collections ``( ... )``,
numeric exponents, and triple-quoted ``\"\"\"`` literals.

Serialization is deterministic: prefixes sorted by label, subjects and
predicates in term order, blank nodes nested inline when referenced
exactly once.
"""

from __future__ import annotations

import re

from .errors import RelativeIriError, TurtleSyntaxError, UnresolvedPrefixError
from .graph import Graph
from .terms import (
    XSD_STRING,
    BlankNode,
    Iri,
    Literal,
    Term,
    Triple,
    term_sort_key,
)

XSD_INTEGER = "http://www.w3.org/2001/XMLSchema#integer"
XSD_DECIMAL = "http://www.w3.org/2001/XMLSchema#decimal"
RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"

_SCHEME_RE = re.compile(r"^([A-Za-z][A-Za-z0-9+.-]*):")
_INTEGER_RE = re.compile(r"^[+-]?[0-9]+$")
_DECIMAL_RE = re.compile(r"^[+-]?[0-9]*\.[0-9]+$")
_LANGTAG_RE = re.compile(r"^[a-zA-Z]+(-[a-zA-Z0-9]+)*$")
# generated labels for anonymous [] nodes use '#', which the tokenizer
# never allows in an explicit _:label, so they cannot collide
_ANON_PREFIX = "#"

_ESCAPES = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}


# ---------------------------------------------------------------------------
# IRI resolution (RFC 3986 section 5.2, over unicode strings)
# ---------------------------------------------------------------------------

def _split_iri(iri: str) -> tuple[str | None, str | None, str, str | None, str | None]:
    scheme = None
    m = _SCHEME_RE.match(iri)
    rest = iri
    if m:
        scheme = m.group(1)
        rest = iri[m.end():]
    fragment = None
    if "#" in rest:
        rest, fragment = rest.split("#", 1)
    query = None
    if "?" in rest:
        rest, query = rest.split("?", 1)
    authority = None
    if rest.startswith("//"):
        rest = rest[2:]
        slash = rest.find("/")
        if slash == -1:
            authority, path = rest, ""
        else:
            authority, path = rest[:slash], rest[slash:]
    else:
        path = rest
    return scheme, authority, path, query, fragment


def _merge_paths(base_authority: str | None, base_path: str, ref_path: str) -> str:
    if base_authority is not None and not base_path:
        return "/" + ref_path
    slash = base_path.rfind("/")
    if slash == -1:
        return ref_path
    return base_path[: slash + 1] + ref_path


def _remove_dot_segments(path: str) -> str:
    output: list[str] = []
    while path:
        if path.startswith("../"):
            path = path[3:]
        elif path.startswith("./"):
            path = path[2:]
        elif path.startswith("/./"):
            path = "/" + path[3:]
        elif path == "/.":
            path = "/"
        elif path.startswith("/../"):
            path = "/" + path[4:]
            if output:
                output.pop()
        elif path == "/..":
            path = "/"
            if output:
                output.pop()
        elif path in (".", ".."):
            path = ""
        else:
            if path.startswith("/"):
                slash = path.find("/", 1)
            else:
                slash = path.find("/")
            if slash == -1:
                output.append(path)
                path = ""
            else:
                output.append(path[:slash])
                path = path[slash:]
    return "".join(output)


def _recompose(scheme: str | None, authority: str | None, path: str, query: str | None, fragment: str | None) -> str:
    out = ""
    if scheme is not None:
        out += scheme + ":"
    if authority is not None:
        out += "//" + authority
    out += path
    if query is not None:
        out += "?" + query
    if fragment is not None:
        out += "#" + fragment
    return out


def _lowercase_host(authority: str) -> str:
    # authority = [userinfo@]host[:port]; only the host is case-normalized
    userinfo = ""
    host_port = authority
    if "@" in authority:
        userinfo, host_port = authority.rsplit("@", 1)
        userinfo += "@"
    if ":" in host_port:
        host, port = host_port.split(":", 1)
        return userinfo + host.lower() + ":" + port
    return userinfo + host_port.lower()


def normalize_iri(iri: str) -> str:
    """Case-normalize the scheme and host; leave everything else as-is."""
    scheme, authority, path, query, fragment = _split_iri(iri)
    if scheme is not None:
        scheme = scheme.lower()
    if authority is not None:
        authority = _lowercase_host(authority)
    return _recompose(scheme, authority, path, query, fragment)


def resolve_iri(base: str | None, ref: str) -> str | None:
    """Resolve ref against base per RFC 3986; None when ref is relative and no base exists."""
    if _SCHEME_RE.match(ref):
        return normalize_iri(ref)
    if base is None:
        return None
    b_scheme, b_auth, b_path, b_query, _ = _split_iri(base)
    r_scheme, r_auth, r_path, r_query, r_frag = _split_iri(ref)
    if r_auth is not None:
        target = (b_scheme, r_auth, _remove_dot_segments(r_path), r_query, r_frag)
    elif not r_path:
        target = (b_scheme, b_auth, b_path, r_query if r_query is not None else b_query, r_frag)
    elif r_path.startswith("/"):
        target = (b_scheme, b_auth, _remove_dot_segments(r_path), r_query, r_frag)
    else:
        merged = _merge_paths(b_auth, b_path, r_path)
        target = (b_scheme, b_auth, _remove_dot_segments(merged), r_query, r_frag)
    return normalize_iri(_recompose(*target))


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

class _Token:
    __slots__ = ("kind", "value", "extra", "line", "column")

    def __init__(self, kind: str, value: str, line: int, column: int, extra: str | None = None):
        self.kind = kind
        self.value = value
        self.extra = extra
        self.line = line
        self.column = column

    def __repr__(self) -> str:
        return f"_Token({self.kind}, {self.value!r}, {self.line}:{self.column})"


def _is_pn_chars_base(c: str) -> bool:
    return bool(c) and (c.isalpha() or c == "_")


def _is_pn_char(c: str) -> bool:
    # c may be "" at end of input; "" is a substring of anything, so guard
    return bool(c) and (c.isalnum() or c in "_-")


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.column = 1

    def error(self, message: str, line: int | None = None, column: int | None = None):
        raise TurtleSyntaxError(message, line or self.line, column or self.column)

    def _advance(self, n: int = 1):
        for _ in range(n):
            if self.pos < len(self.text):
                if self.text[self.pos] == "\n":
                    self.line += 1
                    self.column = 1
                else:
                    self.column += 1
                self.pos += 1

    def _peek(self, offset: int = 0) -> str:
        j = self.pos + offset
        return self.text[j] if j < len(self.text) else ""

    def tokens(self) -> list[_Token]:
        out = []
        while True:
            tok = self.next_token()
            out.append(tok)
            if tok.kind == "eof":
                return out

    def next_token(self) -> _Token:
        self._skip_ws_and_comments()
        line, col = self.line, self.column
        c = self._peek()
        if not c:
            return _Token("eof", "", line, col)
        if c == "<":
            return self._iriref(line, col)
        if c == '"':
            return self._string(line, col)
        if c == "'":
            self.error("single-quoted string literals are not supported; use double quotes", line, col)
        if c == "@":
            return self._at_word(line, col)
        if c == "^":
            if self._peek(1) == "^":
                self._advance(2)
                return _Token("hathat", "^^", line, col)
            self.error("unexpected '^' (datatype marker is '^^')", line, col)
        if c == "(":
            self.error("RDF collections '( ... )' are not supported in this Turtle subset", line, col)
        if c == ")":
            self.error("unexpected ')' (RDF collections are not supported)", line, col)
        if c in "[];,.":
            self._advance()
            kind = {"[": "lbracket", "]": "rbracket", ";": "semicolon", ",": "comma", ".": "dot"}[c]
            return _Token(kind, c, line, col)
        if c == "_" and self._peek(1) == ":":
            return self._blank_label(line, col)
        if c.isdigit() or (c in "+-" and (self._peek(1).isdigit() or self._peek(1) == ".")):
            return self._number(line, col)
        if c == "." and self._peek(1).isdigit():
            return self._number(line, col)
        if _is_pn_chars_base(c) or c == ":":
            return self._pname_or_keyword(line, col)
        self.error(f"unexpected character {c!r}", line, col)

    def _skip_ws_and_comments(self):
        while True:
            c = self._peek()
            if c and c.isspace():
                self._advance()
            elif c == "#":
                while self._peek() and self._peek() != "\n":
                    self._advance()
            else:
                return

    def _iriref(self, line: int, col: int) -> _Token:
        self._advance()  # <
        chars: list[str] = []
        while True:
            c = self._peek()
            if not c or c == "\n":
                self.error("unterminated IRI (missing '>')", line, col)
            if c == ">":
                self._advance()
                return _Token("iriref", "".join(chars), line, col)
            if c in ' "{}|^`' or ord(c) <= 0x20:
                self.error(f"character {c!r} is not allowed inside an IRI", self.line, self.column)
            if c == "\\":
                nxt = self._peek(1)
                if nxt in ("u", "U"):
                    chars.append(self._unicode_escape())
                    continue
                self.error("only \\u and \\U escapes are allowed inside an IRI", self.line, self.column)
            chars.append(c)
            self._advance()

    def _unicode_escape(self) -> str:
        line, col = self.line, self.column
        self._advance()  # backslash
        kind = self._peek()
        self._advance()
        width = 4 if kind == "u" else 8
        digits = ""
        for _ in range(width):
            d = self._peek()
            if not d or d not in "0123456789abcdefABCDEF":
                self.error(f"\\{kind} escape needs {width} hex digits", line, col)
            digits += d
            self._advance()
        code = int(digits, 16)
        if code > 0x10FFFF:
            self.error(f"\\{kind} escape {digits} is outside the Unicode range", line, col)
        return chr(code)

    def _string(self, line: int, col: int) -> _Token:
        if self.text.startswith('"""', self.pos):
            self.error("triple-quoted (multi-line) string literals are not supported", line, col)
        self._advance()  # opening quote
        chars: list[str] = []
        while True:
            c = self._peek()
            if not c or c in "\n\r":
                self.error("unterminated string literal", line, col)
            if c == '"':
                self._advance()
                return _Token("string", "".join(chars), line, col)
            if c == "\\":
                nxt = self._peek(1)
                if nxt in ("u", "U"):
                    chars.append(self._unicode_escape())
                    continue
                if nxt in _ESCAPES:
                    chars.append(_ESCAPES[nxt])
                    self._advance(2)
                    continue
                self.error(f"unknown escape sequence '\\{nxt}' in string literal", self.line, self.column)
            chars.append(c)
            self._advance()

    def _at_word(self, line: int, col: int) -> _Token:
        self._advance()  # @
        word = ""
        while self._peek().isalpha() or (word and self._peek() == "-") or self._peek().isdigit():
            word += self._peek()
            self._advance()
        if word == "prefix":
            return _Token("at_prefix", word, line, col)
        if word == "base":
            return _Token("at_base", word, line, col)
        # language tags are produced here too; the parser validates placement
        if _LANGTAG_RE.match(word):
            return _Token("langtag", word, line, col)
        self.error(f"unknown directive '@{word}'", line, col)

    def _blank_label(self, line: int, col: int) -> _Token:
        self._advance(2)  # _:
        label = ""
        c = self._peek()
        if not (c.isalnum() or c == "_"):
            self.error("blank node label expected after '_:'", line, col)
        while True:
            c = self._peek()
            if _is_pn_char(c):
                label += c
                self._advance()
            elif c == "." and _is_pn_char(self._peek(1)):
                label += c
                self._advance()
            else:
                break
        return _Token("blank_label", label, line, col)

    def _number(self, line: int, col: int) -> _Token:
        lex = ""
        if self._peek() in ("+", "-"):
            lex += self._peek()
            self._advance()
        while self._peek().isdigit():
            lex += self._peek()
            self._advance()
        is_decimal = False
        if self._peek() == "." and self._peek(1).isdigit():
            is_decimal = True
            lex += "."
            self._advance()
            while self._peek().isdigit():
                lex += self._peek()
                self._advance()
        if self._peek() in ("e", "E") and (self._peek(1).isdigit() or (self._peek(1) in "+-" and self._peek(2).isdigit())):
            self.error("numeric literals with exponents are not supported in this Turtle subset", line, col)
        if not lex.strip("+-"):
            self.error("malformed numeric literal", line, col)
        return _Token("decimal" if is_decimal else "integer", lex, line, col)

    def _pname_or_keyword(self, line: int, col: int) -> _Token:
        prefix = ""
        c = self._peek()
        if c != ":":
            if not _is_pn_chars_base(c):
                self.error(f"unexpected character {c!r}", line, col)
            while True:
                c = self._peek()
                if _is_pn_char(c):
                    prefix += c
                    self._advance()
                elif c == "." and _is_pn_char(self._peek(1)):
                    prefix += c
                    self._advance()
                else:
                    break
        if self._peek() != ":":
            if prefix == "a":
                return _Token("a", "a", line, col)
            self.error(
                f"unexpected token '{prefix}' (expected a prefixed name, IRI, or keyword 'a')",
                line,
                col,
            )
        self._advance()  # :
        local = ""
        while True:
            c = self._peek()
            if c and (c.isalnum() or c in "_-" or ord(c) > 0x7F):
                local += c
                self._advance()
            elif c == "." and (_is_pn_char(self._peek(1)) or (self._peek(1) and ord(self._peek(1)) > 0x7F)):
                local += c
                self._advance()
            else:
                break
        return _Token("pname", local, line, col, extra=prefix)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, base_iri: str | None):
        self.tokens = _Tokenizer(text).tokens()
        self.index = 0
        self.base = normalize_iri(base_iri) if base_iri else None
        self.prefixes: dict[str, str] = {}
        self.triples: list[Triple] = []
        self.anon_counter = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def take(self) -> _Token:
        tok = self.tokens[self.index]
        if tok.kind != "eof":
            self.index += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.take()
        if tok.kind != kind:
            raise TurtleSyntaxError(f"expected {what}, found {self._describe(tok)}", tok.line, tok.column)
        return tok

    @staticmethod
    def _describe(tok: _Token) -> str:
        if tok.kind == "eof":
            return "end of input"
        return f"'{tok.value}'"

    def parse(self) -> Graph:
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind == "at_prefix":
                self._prefix_directive()
            elif tok.kind == "at_base":
                self._base_directive()
            else:
                self._triples_statement()
        return Graph(self.triples, self.prefixes)

    def _prefix_directive(self):
        self.take()
        tok = self.take()
        if tok.kind != "pname" or tok.value != "":
            raise TurtleSyntaxError(
                f"expected a prefix label ending in ':', found {self._describe(tok)}", tok.line, tok.column
            )
        label = tok.extra or ""
        iri_tok = self.expect("iriref", "a namespace IRI in '<...>'")
        namespace = self._resolve(iri_tok)
        self.expect("dot", "'.' after @prefix directive")
        self.prefixes[label] = namespace

    def _base_directive(self):
        self.take()
        iri_tok = self.expect("iriref", "a base IRI in '<...>'")
        self.base = self._resolve(iri_tok)
        self.expect("dot", "'.' after @base directive")

    def _resolve(self, tok: _Token) -> str:
        resolved = resolve_iri(self.base, tok.value)
        if resolved is None:
            raise RelativeIriError(tok.value, tok.line, tok.column)
        return resolved

    def _fresh_anon(self) -> BlankNode:
        node = BlankNode(f"{_ANON_PREFIX}{self.anon_counter}")
        self.anon_counter += 1
        return node

    def _triples_statement(self):
        tok = self.peek()
        if tok.kind == "lbracket":
            subject = self._blank_node_property_list()
            if self.peek().kind != "dot":
                self._predicate_object_list(subject)
        else:
            subject = self._subject()
            self._predicate_object_list(subject)
        self.expect("dot", "'.' at end of statement")

    def _subject(self) -> Term:
        tok = self.take()
        if tok.kind == "iriref":
            return Iri(self._resolve(tok))
        if tok.kind == "pname":
            return Iri(self._expand_pname(tok))
        if tok.kind == "blank_label":
            return BlankNode(tok.value)
        if tok.kind in ("string", "integer", "decimal"):
            raise TurtleSyntaxError("a literal cannot be the subject of a triple", tok.line, tok.column)
        raise TurtleSyntaxError(f"expected a subject, found {self._describe(tok)}", tok.line, tok.column)

    def _expand_pname(self, tok: _Token) -> str:
        prefix = tok.extra or ""
        if prefix not in self.prefixes:
            raise UnresolvedPrefixError(prefix, tok.line, tok.column)
        return self.prefixes[prefix] + tok.value

    def _predicate_object_list(self, subject: Term):
        while True:
            predicate = self._verb()
            self._object_list(subject, predicate)
            if self.peek().kind == "semicolon":
                while self.peek().kind == "semicolon":
                    self.take()
                if self.peek().kind in ("dot", "rbracket", "eof"):
                    return
                continue
            return

    def _verb(self) -> Iri:
        tok = self.take()
        if tok.kind == "a":
            return Iri(RDF_TYPE)
        if tok.kind == "iriref":
            return Iri(self._resolve(tok))
        if tok.kind == "pname":
            return Iri(self._expand_pname(tok))
        if tok.kind == "blank_label":
            raise TurtleSyntaxError("a blank node cannot be used as a predicate", tok.line, tok.column)
        raise TurtleSyntaxError(f"expected a predicate, found {self._describe(tok)}", tok.line, tok.column)

    def _object_list(self, subject: Term, predicate: Iri):
        while True:
            obj = self._object()
            self.triples.append(Triple(subject, predicate, obj))
            if self.peek().kind == "comma":
                self.take()
                continue
            return

    def _object(self) -> Term:
        tok = self.peek()
        if tok.kind == "lbracket":
            return self._blank_node_property_list()
        tok = self.take()
        if tok.kind == "iriref":
            return Iri(self._resolve(tok))
        if tok.kind == "pname":
            return Iri(self._expand_pname(tok))
        if tok.kind == "blank_label":
            return BlankNode(tok.value)
        if tok.kind == "string":
            return self._finish_literal(tok)
        if tok.kind == "integer":
            return Literal(tok.value, datatype=XSD_INTEGER)
        if tok.kind == "decimal":
            return Literal(tok.value, datatype=XSD_DECIMAL)
        raise TurtleSyntaxError(f"expected an object, found {self._describe(tok)}", tok.line, tok.column)

    def _finish_literal(self, tok: _Token) -> Literal:
        nxt = self.peek()
        if nxt.kind == "langtag":
            self.take()
            return Literal(tok.value, lang=nxt.value)
        if nxt.kind == "hathat":
            self.take()
            dt_tok = self.take()
            if dt_tok.kind == "iriref":
                return Literal(tok.value, datatype=self._resolve(dt_tok))
            if dt_tok.kind == "pname":
                return Literal(tok.value, datatype=self._expand_pname(dt_tok))
            raise TurtleSyntaxError(
                f"expected a datatype IRI after '^^', found {self._describe(dt_tok)}", dt_tok.line, dt_tok.column
            )
        return Literal(tok.value)

    def _blank_node_property_list(self) -> BlankNode:
        open_tok = self.expect("lbracket", "'['")
        node = self._fresh_anon()
        if self.peek().kind == "rbracket":
            self.take()
            return node
        self._predicate_object_list(node)
        tok = self.take()
        if tok.kind != "rbracket":
            raise TurtleSyntaxError(
                f"unclosed '[' opened at line {open_tok.line}, column {open_tok.column}", tok.line, tok.column
            )
        return node


def parse_turtle(text: str, base_iri: str | None = None) -> Graph:
    """Parse Turtle text into a Graph.

    Raises TurtleSyntaxError (or a subclass) with a 1-based line/column on
    any malformed input; never raises anything else.
    """
    if not isinstance(text, str):
        raise TypeError("parse_turtle expects a str")
    return _Parser(text, base_iri).parse()


# ---------------------------------------------------------------------------
# Serializer
# ---------------------------------------------------------------------------

def _escape_string(value: str) -> str:
    out = []
    for c in value:
        if c == "\\":
            out.append("\\\\")
        elif c == '"':
            out.append('\\"')
        elif c == "\n":
            out.append("\\n")
        elif c == "\r":
            out.append("\\r")
        elif c == "\t":
            out.append("\\t")
        elif ord(c) < 0x20:
            out.append(f"\\u{ord(c):04X}")
        else:
            out.append(c)
    return "".join(out)


def _valid_local_name(local: str) -> bool:
    if not local:
        return False
    for i, c in enumerate(local):
        if c.isalnum() or c in "_-" or ord(c) > 0x7F:
            continue
        if c == "." and 0 < i < len(local) - 1:
            continue
        return False
    return not local.startswith(".") and not local.endswith(".")


def _valid_bnode_label(label: str) -> bool:
    if not label:
        return False
    if not (label[0].isalnum() or label[0] == "_"):
        return False
    for i, c in enumerate(label):
        if c.isalnum() or c in "_-":
            continue
        if c == "." and 0 < i < len(label) - 1:
            continue
        return False
    return not label.endswith(".")


class _Serializer:
    def __init__(self, graph: Graph):
        self.graph = graph
        self.prefixes = dict(sorted(graph.prefixes.items()))
        self.bnode_labels = self._assign_labels()
        self.inline = self._inlineable()
        self.by_subject: dict[Term, list[Triple]] = {}
        for t in sorted(graph.triples, key=lambda t: (term_sort_key(t.predicate), term_sort_key(t.object))):
            self.by_subject.setdefault(t.subject, []).append(t)

    def _assign_labels(self) -> dict[BlankNode, str]:
        nodes = sorted(self.graph.blank_nodes(), key=lambda n: n.label)
        taken = {n.label for n in nodes if _valid_bnode_label(n.label)}
        labels: dict[BlankNode, str] = {}
        counter = 0
        for node in nodes:
            if _valid_bnode_label(node.label):
                labels[node] = node.label
            else:
                while f"b{counter}" in taken:
                    counter += 1
                labels[node] = f"b{counter}"
                taken.add(f"b{counter}")
        return labels

    def _inlineable(self) -> set[BlankNode]:
        object_count: dict[BlankNode, int] = {}
        for t in self.graph.triples:
            if isinstance(t.object, BlankNode):
                object_count[t.object] = object_count.get(t.object, 0) + 1
        candidates = {n for n, c in object_count.items() if c == 1}
        # drop candidates that sit on a blank-node cycle
        def reaches(start: BlankNode, target: BlankNode, seen: set[BlankNode]) -> bool:
            if start in seen:
                return False
            seen.add(start)
            for t in self.graph.match(subject=start):
                if isinstance(t.object, BlankNode):
                    if t.object == target or reaches(t.object, target, seen):
                        return True
            return False

        return {n for n in candidates if not reaches(n, n, set())}

    def _iri(self, iri: Iri) -> str:
        if iri.value == RDF_TYPE:
            return "a"
        for label, namespace in self.prefixes.items():
            if iri.value.startswith(namespace):
                local = iri.value[len(namespace):]
                if _valid_local_name(local) or local == "":
                    return f"{label}:{local}"
        return f"<{iri.value}>"

    def _datatype_iri(self, value: str) -> str:
        for label, namespace in self.prefixes.items():
            if value.startswith(namespace):
                local = value[len(namespace):]
                if _valid_local_name(local):
                    return f"{label}:{local}"
        return f"<{value}>"

    def _literal(self, lit: Literal) -> str:
        if lit.lang:
            return f'"{_escape_string(lit.lexical)}"@{lit.lang}'
        if lit.datatype == XSD_INTEGER and _INTEGER_RE.match(lit.lexical):
            return lit.lexical
        if lit.datatype == XSD_DECIMAL and _DECIMAL_RE.match(lit.lexical):
            return lit.lexical
        if lit.datatype == XSD_STRING:
            return f'"{_escape_string(lit.lexical)}"'
        return f'"{_escape_string(lit.lexical)}"^^{self._datatype_iri(lit.datatype)}'

    def _term(self, term: Term, indent: int) -> str:
        if isinstance(term, Iri):
            return self._iri(term)
        if isinstance(term, Literal):
            return self._literal(term)
        assert isinstance(term, BlankNode)
        if term in self.inline:
            return self._inline_block(term, indent)
        return f"_:{self.bnode_labels[term]}"

    def _inline_block(self, node: BlankNode, indent: int) -> str:
        triples = self.by_subject.get(node, [])
        if not triples:
            return "[]"
        inner = self._predicate_objects(node, triples, indent + 1)
        pad = "    " * indent
        return "[\n" + inner + "\n" + pad + "]"

    def _predicate_objects(self, subject: Term, triples: list[Triple], indent: int) -> str:
        pad = "    " * indent
        groups: dict[Iri, list[Term]] = {}
        for t in triples:
            groups.setdefault(t.predicate, []).append(t.object)
        # rdf:type first, then predicate order
        def pred_key(p: Iri):
            return (0 if p.value == RDF_TYPE else 1, term_sort_key(p))

        lines = []
        for predicate in sorted(groups, key=pred_key):
            objects = groups[predicate]
            rendered = ", ".join(self._term(o, indent) for o in objects)
            lines.append(f"{pad}{self._iri(predicate)} {rendered}")
        return " ;\n".join(lines)

    def serialize(self) -> str:
        lines = []
        for label, namespace in self.prefixes.items():
            lines.append(f"@prefix {label}: <{namespace}> .")
        if lines:
            lines.append("")
        subjects = sorted(self.by_subject, key=term_sort_key)
        for subject in subjects:
            if isinstance(subject, BlankNode) and subject in self.inline:
                continue
            head = self._term(subject, 0) if not isinstance(subject, BlankNode) else f"_:{self.bnode_labels[subject]}"
            body = self._predicate_objects(subject, self.by_subject[subject], 1)
            lines.append(f"{head}\n{body} .")
            lines.append("")
        while lines and lines[-1] == "":
            lines.pop()
        return "\n".join(lines) + ("\n" if lines else "")


def serialize_turtle(graph: Graph) -> str:
    """Serialize a Graph to deterministic Turtle text that re-parses to an isomorphic graph."""
    return _Serializer(graph).serialize()
