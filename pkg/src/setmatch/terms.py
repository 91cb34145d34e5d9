"""Terms over a first-order signature, with a single wildcard.

The data model is deliberately small: a :class:`Symbol` is a name with a
fixed arity, a :class:`Signature` is an ordered registry of symbols, and a
:class:`Term` is an ordered tree of symbols.  The one wildcard ``_`` stands
for "any subterm here"; a *pattern* is any term other than the bare wildcard
and a *subject* is a term containing no wildcard at all.

Concrete syntax is ``name(child,child)`` with constants written without
parentheses, e.g. ``f(g(a),_)``.  Whitespace is insignificant.  All parse
errors carry the byte offset at which the input stopped making sense.
"""

import re
from dataclasses import dataclass

from .errors import ParseError, PatternSetError, PositionError, SignatureError
from .positions import Position, format_position


@dataclass(frozen=True)
class Symbol:
    """A function symbol: a name with a fixed argument count."""

    name: str
    arity: int


class Term:
    """An immutable ordered tree of symbols.

    ``symbol`` is ``None`` exactly for the wildcard.  The hash is computed at
    construction, so terms built from shared subtrees stay cheap to hash and
    compare no matter how large they print.
    """

    __slots__ = ("symbol", "children", "_hash", "_text")

    def __init__(self, symbol: Symbol | None, children=()):
        children = tuple(children)
        if symbol is None:
            if children:
                raise SignatureError("the wildcard takes no arguments")
        elif len(children) != symbol.arity:
            raise SignatureError(
                f"'{symbol.name}' has arity {symbol.arity}, "
                f"got {len(children)} arguments")
        self.symbol = symbol
        self.children = children
        self._hash = hash((symbol, children))
        self._text = None

    @property
    def is_wildcard(self) -> bool:
        return self.symbol is None

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Term):
            return NotImplemented
        if self._hash != other._hash or self.symbol != other.symbol:
            return False
        return self.children == other.children

    def __str__(self):
        return format_term(self)

    def __repr__(self):
        return f"Term({format_term(self)!r})"


WILDCARD = Term(None)


def format_term(t: Term) -> str:
    """Canonical text: ``_`` for the wildcard, ``name(child,...)`` otherwise."""
    text = t._text
    if text is None:
        if t.symbol is None:
            text = "_"
        elif not t.children:
            text = t.symbol.name
        else:
            text = t.symbol.name + "(" + ",".join(format_term(c) for c in t.children) + ")"
        t._text = text
    return text


def term_depth(t: Term) -> int:
    """Nesting depth in edges; leaves (constants and wildcards) have depth 0."""
    if not t.children:
        return 0
    return 1 + max(term_depth(c) for c in t.children)


def term_size(t: Term) -> int:
    """Number of nodes, wildcards included."""
    return 1 + sum(term_size(c) for c in t.children)


def contains_wildcard(t: Term) -> bool:
    if t.symbol is None:
        return True
    return any(contains_wildcard(c) for c in t.children)


class Signature:
    """Ordered registry of symbols; declaration order is iteration order.

    Iteration order matters: the automaton builder walks symbols in this
    order, which keeps rebuilds byte-for-byte reproducible.
    """

    def __init__(self, symbols=()):
        self._by_name: dict[str, Symbol] = {}
        for entry in symbols:
            if isinstance(entry, Symbol):
                self.declare(entry.name, entry.arity)
            else:
                name, arity = entry
                self.declare(name, arity)

    def declare(self, name: str, arity: int) -> Symbol:
        """Register name/arity, or return the existing symbol if consistent."""
        if not isinstance(name, str) or not _IDENT_RE.fullmatch(name) or name == "_":
            raise SignatureError(f"invalid symbol name {name!r}")
        if arity < 0:
            raise SignatureError(f"'{name}': negative arity {arity}")
        have = self._by_name.get(name)
        if have is not None:
            if have.arity != arity:
                raise SignatureError(
                    f"'{name}' already declared with arity {have.arity}, not {arity}")
            return have
        sym = Symbol(name, arity)
        self._by_name[name] = sym
        return sym

    def get(self, name: str) -> Symbol | None:
        return self._by_name.get(name)

    def symbol(self, name: str) -> Symbol:
        sym = self._by_name.get(name)
        if sym is None:
            raise SignatureError(f"undeclared symbol '{name}'")
        return sym

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __iter__(self):
        return iter(self._by_name.values())

    def __len__(self):
        return len(self._by_name)

    @property
    def max_arity(self) -> int:
        return max((s.arity for s in self._by_name.values()), default=0)

    def __repr__(self):
        inner = ", ".join(f"{s.name}/{s.arity}" for s in self)
        return f"Signature({inner})"


def read_signature(text: str) -> Signature:
    """Parse ``name/arity`` lines; ``#`` starts a comment, blank lines skip."""
    sig = Signature()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, arity_text = line.partition("/")
        name = name.strip()
        arity_text = arity_text.strip()
        if not sep or not arity_text.isdigit():
            raise SignatureError(f"line {lineno}: expected 'name/arity', got {line!r}")
        try:
            sig.declare(name, int(arity_text))
        except SignatureError as e:
            raise SignatureError(f"line {lineno}: {e}") from None
    return sig


def write_signature(sig: Signature) -> str:
    return "".join(f"{s.name}/{s.arity}\n" for s in sig)


_IDENT_RE = re.compile(r"[A-Za-z0-9_]+")
_WS_RE = re.compile(r"\s*")


def parse_term(text: str, sig: Signature, *, allow_wildcard: bool = False,
               extend: bool = False) -> Term:
    """Parse the canonical syntax against ``sig``.

    With ``extend`` unknown symbols are declared at the arity they are used,
    otherwise they are rejected.  Wildcards (``_``) are only accepted with
    ``allow_wildcard``.  Known symbols must be used at their declared arity.
    """
    pos = _WS_RE.match(text, 0).end()
    term, pos = _parse_node(text, pos, sig, allow_wildcard, extend)
    pos = _WS_RE.match(text, pos).end()
    if pos != len(text):
        raise ParseError("trailing input after term", pos)
    return term


def _parse_node(text, pos, sig, allow_wildcard, extend):
    if pos >= len(text):
        raise ParseError("expected a term", pos)
    m = _IDENT_RE.match(text, pos)
    if not m:
        raise ParseError(f"unexpected character {text[pos]!r}", pos)
    name = m.group()
    start = pos
    if name == "_":
        if not allow_wildcard:
            raise ParseError("wildcard not allowed here", pos)
        return WILDCARD, m.end()
    pos = _WS_RE.match(text, m.end()).end()
    children = []
    if pos < len(text) and text[pos] == "(":
        pos = _WS_RE.match(text, pos + 1).end()
        while True:
            child, pos = _parse_node(text, pos, sig, allow_wildcard, extend)
            children.append(child)
            pos = _WS_RE.match(text, pos).end()
            if pos >= len(text):
                raise ParseError("expected ',' or ')'", pos)
            ch = text[pos]
            if ch == ",":
                pos = _WS_RE.match(text, pos + 1).end()
            elif ch == ")":
                pos += 1
                break
            else:
                raise ParseError("expected ',' or ')'", pos)
    arity = len(children)
    sym = sig.get(name)
    if sym is None:
        if not extend:
            raise ParseError(f"unknown symbol '{name}'", start)
        sym = sig.declare(name, arity)
    elif sym.arity != arity:
        raise ParseError(
            f"'{name}' has arity {sym.arity}, used with {arity}", start)
    return Term(sym, children), pos


def domain(t: Term) -> set[Position]:
    """All positions of ``t``, the root included."""
    out = set()
    stack = [((), t)]
    while stack:
        pos, node = stack.pop()
        out.add(pos)
        for i, child in enumerate(node.children, 1):
            stack.append((pos + (i,), child))
    return out


def subterm_at(t: Term, pos: Position) -> Term:
    """The subterm reached by walking ``pos`` from the root of ``t``."""
    node = t
    for depth, i in enumerate(pos):
        if i < 1 or i > len(node.children):
            raise PositionError(
                f"position {format_position(pos)} leaves the term "
                f"after {depth} steps")
        node = node.children[i - 1]
    return node


def matches(pattern: Term, subject: Term, at: Position = ()) -> bool:
    """Does ``pattern`` match ``subject`` at position ``at``?

    A wildcard matches any subterm; every other pattern node must find its
    own symbol in the subject.  ``at`` must be a position of ``subject``.
    """
    return _match(pattern, subterm_at(subject, at))


def _match(l: Term, t: Term) -> bool:
    if l.symbol is None:
        return True
    if l.symbol != t.symbol:
        return False
    for lc, tc in zip(l.children, t.children):
        if not _match(lc, tc):
            return False
    return True


class PatternSet:
    """A non-empty, duplicate-free, indexed list of patterns over one signature.

    The index of a pattern is its identity everywhere else: automaton
    outputs, match reports and the serialized form all refer to patterns by
    their position in this list.
    """

    def __init__(self, patterns, signature: Signature):
        patterns = tuple(patterns)
        if not patterns:
            raise PatternSetError("at least one pattern is required")
        seen: dict[str, int] = {}
        for i, p in enumerate(patterns):
            if not isinstance(p, Term):
                raise PatternSetError(f"pattern {i} is not a term")
            if p.is_wildcard:
                raise PatternSetError(f"pattern {i}: the bare wildcard is not a pattern")
            _check_over_signature(p, signature, i)
            text = format_term(p)
            other = seen.get(text)
            if other is not None:
                raise PatternSetError(f"pattern {i} duplicates pattern {other}: {text}")
            seen[text] = i
        self.patterns = patterns
        self.signature = signature

    @classmethod
    def from_text(cls, text: str, signature: Signature | None = None) -> "PatternSet":
        """One pattern per line; blank lines and ``#`` comments are skipped.

        Without an explicit signature, arities are inferred from use; with
        one, every symbol must already be declared.
        """
        extend = signature is None
        sig = Signature() if extend else signature
        pats = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                pats.append(parse_term(line, sig, allow_wildcard=True, extend=extend))
            except ParseError as e:
                raise ParseError(e.reason, e.offset, line=lineno) from None
        return cls(pats, sig)

    def texts(self) -> list[str]:
        return [format_term(p) for p in self.patterns]

    def subpatterns(self) -> set[Term]:
        """Every non-wildcard subterm of every pattern."""
        out: set[Term] = set()
        stack = list(self.patterns)
        while stack:
            t = stack.pop()
            if t.symbol is not None:
                out.add(t)
                stack.extend(t.children)
        return out

    def max_depth(self) -> int:
        return max(term_depth(p) for p in self.patterns)

    def __len__(self):
        return len(self.patterns)

    def __getitem__(self, i):
        return self.patterns[i]

    def __iter__(self):
        return iter(self.patterns)

    def __repr__(self):
        return f"PatternSet({self.texts()!r})"


def _check_over_signature(t: Term, sig: Signature, idx: int) -> None:
    if t.symbol is None:
        return
    have = sig.get(t.symbol.name)
    if have is None or have.arity != t.symbol.arity:
        raise PatternSetError(
            f"pattern {idx}: symbol '{t.symbol.name}/{t.symbol.arity}' "
            "is not in the signature")
    for c in t.children:
        _check_over_signature(c, sig, idx)
