"""JSON form of a compiled automaton (schema version 1).

The document is self-contained: signature, pattern texts, and per-state
labels and transitions.  Goal sets are included by default so a reloaded
automaton can be re-verified, but they are optional debug payload; an
automaton without them still evaluates.  Serialization is deterministic, and
``from_json`` validates structure and cross-references with a JSON-path in
every error message.
"""

import json

from .automaton import SetAutomaton, State, Transition
from .errors import FormatError, ParseError, PatternSetError, SignatureError
from .goals import Goal, canonical_goals
from .terms import PatternSet, Signature, format_term, parse_term

SCHEMA_VERSION = 1


def to_json(a: SetAutomaton, *, include_goals: bool = True, indent: int = 2) -> str:
    states = []
    for sid, st in enumerate(a.states):
        entry = {"id": sid, "label": list(st.label)}
        if include_goals and st.goals is not None:
            entry["goals"] = [_goal_doc(g) for g in st.goals]
        entry["delta"] = {
            name: {
                "outputs": [{"pattern": pid, "pos": list(pos)} for pid, pos in tr.outputs],
                "targets": [{"state": tid, "shift": list(shift)} for tid, shift in tr.targets],
            }
            for name, tr in st.delta.items()
        }
        states.append(entry)
    doc = {
        "version": SCHEMA_VERSION,
        "signature": [{"name": s.name, "arity": s.arity} for s in a.signature],
        "patterns": a.patterns.texts(),
        "initial": a.initial,
        "states": states,
    }
    return json.dumps(doc, indent=indent) + "\n"


def _goal_doc(g: Goal) -> dict:
    pairs = sorted((pos, format_term(term)) for term, pos in g.obligation)
    return {
        "obligation": [{"term": text, "pos": list(pos)} for pos, text in pairs],
        "announce": {"pattern": g.pattern, "pos": list(g.announce)},
    }


def from_json(text: str) -> SetAutomaton:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}", "$") from None

    _need(isinstance(doc, dict), "$", "document must be an object")
    version = _field(doc, "version", "$")
    _need(version == SCHEMA_VERSION, "$.version",
          f"unsupported version {version!r}, expected {SCHEMA_VERSION}")

    sig = Signature()
    raw_sig = _field(doc, "signature", "$")
    _need(isinstance(raw_sig, list) and raw_sig, "$.signature",
          "must be a non-empty array")
    for i, entry in enumerate(raw_sig):
        path = f"$.signature[{i}]"
        _need(isinstance(entry, dict), path, "must be an object")
        name = _field(entry, "name", path)
        arity = _field(entry, "arity", path)
        _need(isinstance(name, str), path + ".name", "must be a string")
        _need(isinstance(arity, int) and not isinstance(arity, bool) and arity >= 0,
              path + ".arity", "must be a non-negative integer")
        try:
            sig.declare(name, arity)
        except SignatureError as e:
            raise FormatError(str(e), path) from None

    raw_pats = _field(doc, "patterns", "$")
    _need(isinstance(raw_pats, list) and raw_pats, "$.patterns",
          "must be a non-empty array")
    terms = []
    for i, text_i in enumerate(raw_pats):
        path = f"$.patterns[{i}]"
        _need(isinstance(text_i, str), path, "must be a string")
        try:
            terms.append(parse_term(text_i, sig, allow_wildcard=True, extend=False))
        except ParseError as e:
            raise FormatError(f"unparseable pattern: {e}", path) from None
    try:
        patterns = PatternSet(terms, sig)
    except PatternSetError as e:
        raise FormatError(str(e), "$.patterns") from None

    raw_states = _field(doc, "states", "$")
    _need(isinstance(raw_states, list) and raw_states, "$.states",
          "must be a non-empty array")
    n_states = len(raw_states)

    initial = _field(doc, "initial", "$")
    _need(isinstance(initial, int) and 0 <= initial < n_states, "$.initial",
          f"must be a state id below {n_states}")

    sym_names = [s.name for s in sig]
    states: list[State] = []
    for i, entry in enumerate(raw_states):
        path = f"$.states[{i}]"
        _need(isinstance(entry, dict), path, "must be an object")
        _need(_field(entry, "id", path) == i, path + ".id",
              f"state ids must be dense and ascending (expected {i})")
        label = _position(_field(entry, "label", path), path + ".label")

        goals = None
        if "goals" in entry:
            goals = tuple(
                _goal_from(doc_g, f"{path}.goals[{j}]", sig, len(terms))
                for j, doc_g in enumerate(_list(entry["goals"], path + ".goals")))
            goals = canonical_goals(goals)

        raw_delta = _field(entry, "delta", path)
        _need(isinstance(raw_delta, dict), path + ".delta", "must be an object")
        for name in raw_delta:
            _need(name in sym_names, f"{path}.delta.{name}",
                  "symbol is not in the signature")
        delta = {}
        for name in sym_names:
            dpath = f"{path}.delta.{name}"
            _need(name in raw_delta, path + ".delta",
                  f"missing transition for symbol '{name}'")
            tr = raw_delta[name]
            _need(isinstance(tr, dict), dpath, "must be an object")
            outs = []
            for j, o in enumerate(_list(_field(tr, "outputs", dpath), dpath + ".outputs")):
                opath = f"{dpath}.outputs[{j}]"
                _need(isinstance(o, dict), opath, "must be an object")
                pid = _field(o, "pattern", opath)
                _need(isinstance(pid, int) and 0 <= pid < len(terms),
                      opath + ".pattern", "unknown pattern id")
                outs.append((pid, _position(_field(o, "pos", opath), opath + ".pos")))
            tgts = []
            for j, t in enumerate(_list(_field(tr, "targets", dpath), dpath + ".targets")):
                tpath = f"{dpath}.targets[{j}]"
                _need(isinstance(t, dict), tpath, "must be an object")
                tid = _field(t, "state", tpath)
                _need(isinstance(tid, int) and 0 <= tid < n_states,
                      tpath + ".state", f"unknown state id {tid!r}")
                tgts.append((tid, _position(_field(t, "shift", tpath), tpath + ".shift")))
            delta[name] = Transition(outputs=tuple(outs), targets=tuple(tgts))
        states.append(State(label=label, goals=goals, delta=delta))

    return SetAutomaton(signature=sig, patterns=patterns, states=states,
                        initial=initial)


def _goal_from(doc_g, path, sig, n_patterns) -> Goal:
    _need(isinstance(doc_g, dict), path, "must be an object")
    raw_ob = _list(_field(doc_g, "obligation", path), path + ".obligation")
    _need(len(raw_ob) > 0, path + ".obligation", "must be non-empty")
    pairs = []
    for j, pair in enumerate(raw_ob):
        ppath = f"{path}.obligation[{j}]"
        _need(isinstance(pair, dict), ppath, "must be an object")
        text = _field(pair, "term", ppath)
        _need(isinstance(text, str), ppath + ".term", "must be a string")
        try:
            term = parse_term(text, sig, allow_wildcard=True, extend=False)
        except ParseError as e:
            raise FormatError(f"unparseable term: {e}", ppath + ".term") from None
        pairs.append((term, _position(_field(pair, "pos", ppath), ppath + ".pos")))
    ann = _field(doc_g, "announce", path)
    _need(isinstance(ann, dict), path + ".announce", "must be an object")
    pid = _field(ann, "pattern", path + ".announce")
    _need(isinstance(pid, int) and 0 <= pid < n_patterns,
          path + ".announce.pattern", "unknown pattern id")
    pos = _position(_field(ann, "pos", path + ".announce"), path + ".announce.pos")
    return Goal(frozenset(pairs), pid, pos)


def _need(cond, path, msg):
    if not cond:
        raise FormatError(msg, path)


def _field(obj, key, path):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"missing field '{key}'", path)
    return obj[key]


def _list(value, path):
    _need(isinstance(value, list), path, "must be an array")
    return value


def _position(value, path) -> tuple:
    _need(isinstance(value, list), path, "must be an array of positive integers")
    for x in value:
        _need(isinstance(x, int) and not isinstance(x, bool) and x >= 1, path,
              "must be an array of positive integers")
    return tuple(value)
