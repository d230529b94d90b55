"""Canonical JSON for categories, simplicial sets, diagrams, operads and permutative categories.

Labels are nested tuples of ints and strings; JSON stores them as nested
lists and decoding turns lists back into tuples.  Every list that has no
intrinsic order is sorted with :func:`_util.sort_key`, so equal values
serialize to identical bytes.
"""

from __future__ import annotations

import json

from ._util import CapError, sort_key
from . import fincat
from . import sset as S
from .injcat import Injection


class FormatError(ValueError):
    """Malformed input; the message names the path and location."""


def to_tuple(x):
    if isinstance(x, list):
        return tuple(to_tuple(y) for y in x)
    return x


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def emit(obj, path) -> None:
    """Write canonical JSON for a core value; I/O errors propagate unchanged."""
    data = encode(obj)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(data))


def load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise FormatError(f"{path}: {e.strerror}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from e


# -- encoders -----------------------------------------------------------------

def encode_fincat(C: fincat.FinCat) -> dict:
    objs, mors, idents, comp = C.tables()
    return {
        "kind": "fincat",
        "objects": sorted(objs, key=sort_key),
        "morphisms": sorted((list(m) for m in mors), key=lambda m: sort_key(tuple(m))),
        "identities": sorted(([o, f] for o, f in idents.items()), key=lambda p: sort_key(tuple(p))),
        "compose": sorted((list(c) for c in comp), key=lambda c: sort_key(tuple(c))),
    }


def encode_sset(X: S.SSet) -> dict:
    return {
        "kind": "sset",
        "cap": X.cap,
        "nondeg": [sorted(level, key=sort_key) for level in X.nondeg],
        "faces": sorted(([y, [list(f) for f in fs]] for y, fs in X.faces.items()),
                        key=lambda p: sort_key(p[0])),
    }


def encode_smap(f: S.SMap) -> list:
    return sorted(([y, list(s)] for y, s in f.mapping.items()), key=lambda p: sort_key(p[0]))


def encode_idiagram(X) -> dict:
    acts = {a.key(): encode_smap(X.action(a)) for a in X.all_injections() if not a.is_identity()}
    return {"kind": "idiagram", "N": X.N, "d": X.d,
            "levels": [encode_sset(v) for v in X.values], "actions": acts}


def encode_operad(O, gamma_dim: int = 0) -> dict:
    from itertools import product as iprod
    from ._util import permutations
    from .operad import _arity_tuples
    acts = {}
    for n in range(O.n_max + 1):
        acts[str(n)] = {",".join(map(str, p)): encode_smap(O.act(n, p)) for p in permutations(n)}
    gamma = []
    for q in range(gamma_dim + 1):
        for n in range(O.n_max + 1):
            for ks in _arity_tuples(n, O.n_max):
                for c in O.spaces[n].simplices(q):
                    for ds in iprod(*(O.spaces[k].simplices(q) for k in ks)):
                        gamma.append([c, list(ks), list(ds), O.gamma(c, ks, ds)])
    gamma.sort(key=lambda e: sort_key(to_tuple(json.loads(json.dumps(e)))))
    return {"kind": "operad", "name": O.name, "n_max": O.n_max, "cap": O.cap,
            "spaces": [encode_sset(X) for X in O.spaces], "actions": acts,
            "unit": O.unit, "gamma_dim": gamma_dim, "gamma": gamma}


def encode_permcat(A) -> dict:
    C = A.base
    out = encode_fincat(C)
    out["kind"] = "permcat"
    out["name"] = A.name
    n, nm = C.num_objects, C.num_morphisms
    out["tensor"] = {
        "objects": sorted(([C.objects[a], C.objects[b], C.objects[A.tob(a, b)]]
                           for a in range(n) for b in range(n)), key=lambda t: sort_key(tuple(t))),
        "morphisms": sorted(([C.morphisms[f], C.morphisms[g], C.morphisms[A.tmor(f, g)]]
                             for f in range(nm) for g in range(nm)),
                            key=lambda t: sort_key(tuple(t))),
    }
    out["unit"] = C.objects[A.unit]
    out["symmetry"] = sorted(([C.objects[a], C.objects[b], C.morphisms[t]]
                              for (a, b), t in A.sym.items()), key=lambda t: sort_key(tuple(t)))
    return out


def encode(obj) -> dict:
    from .idiag import IDiagram, CommIMonoid
    from .operad import Operad
    from .phicon import PermCat
    if isinstance(obj, fincat.FinCat):
        return encode_fincat(obj)
    if isinstance(obj, S.SSet):
        return encode_sset(obj)
    if isinstance(obj, IDiagram):
        return encode_idiagram(obj)
    if isinstance(obj, CommIMonoid):
        return encode_idiagram(obj.A)
    if isinstance(obj, Operad):
        return encode_operad(obj)
    if isinstance(obj, PermCat):
        return encode_permcat(obj)
    if isinstance(obj, dict):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# -- decoders -----------------------------------------------------------------

def _need(data, key, where):
    if not isinstance(data, dict) or key not in data:
        raise FormatError(f"{where}: missing key {key!r}")
    return data[key]


def decode_fincat(data, where="$") -> fincat.FinCat:
    objs = [to_tuple(o) for o in _need(data, "objects", where)]
    mors = [tuple(to_tuple(x) for x in m) for m in _need(data, "morphisms", where)]
    ids = {to_tuple(o): to_tuple(f) for o, f in _need(data, "identities", where)}
    comp = [tuple(to_tuple(x) for x in c) for c in _need(data, "compose", where)]
    try:
        return fincat.FinCat(objs, mors, ids, comp)
    except fincat.InvalidCategory as e:
        raise FormatError(f"{where}: {e}") from e


def decode_sset(data, where="$") -> S.SSet:
    cap = _need(data, "cap", where)
    nd = [[to_tuple(y) for y in level] for level in _need(data, "nondeg", where)]
    if len(nd) != cap + 1:
        raise FormatError(f"{where}.nondeg: expected {cap + 1} degrees")
    faces = {}
    for i, entry in enumerate(_need(data, "faces", where)):
        y, fs = entry
        faces[to_tuple(y)] = tuple((to_tuple(z), tuple(t)) for z, t in fs)
    X = S.SSet(cap, nd, faces)
    problems = S.validate(X)
    if problems:
        raise FormatError(f"{where}: {problems[0]}")
    return X


def _decode_map(entries, source, target):
    return S.SMap(source, target, {to_tuple(y): (to_tuple(s[0]), tuple(s[1])) for y, s in entries})


def parse_injection_key(key: str) -> Injection:
    try:
        head, vals = key.split(":")
        m, n = map(int, head.split(">"))
        values = tuple(int(v) for v in vals.split(",")) if vals else ()
    except ValueError as e:
        raise FormatError(f"bad injection key {key!r}") from e
    a = Injection(n, values)
    if a.m != m:
        raise FormatError(f"bad injection key {key!r}")
    return a


def decode_idiagram(data, where="$"):
    from .idiag import IDiagram, validate_idiagram
    N, d = _need(data, "N", where), _need(data, "d", where)
    levels = [decode_sset(v, f"{where}.levels[{i}]") for i, v in enumerate(_need(data, "levels", where))]
    if len(levels) != N + 1:
        raise FormatError(f"{where}.levels: expected {N + 1} levels")
    table = {}
    for key, entries in _need(data, "actions", where).items():
        a = parse_injection_key(key)
        if a.n > N:
            raise FormatError(f"{where}.actions[{key!r}]: level above cap")
        table[a] = _decode_map(entries, levels[a.m], levels[a.n])

    def act(a):
        if a.is_identity() and a not in table:
            return S.identity_map(levels[a.n])
        if a not in table:
            raise FormatError(f"{where}.actions: no entry for {a.key()}")
        return table[a]

    X = IDiagram(N, d, levels, act, name=data.get("name", "input"))
    problems = validate_idiagram(X)
    if problems:
        raise FormatError(f"{where}: {problems[0]}")
    return X


def decode_operad(data, where="$"):
    from .operad import Operad
    spaces = [decode_sset(v, f"{where}.spaces[{i}]") for i, v in enumerate(_need(data, "spaces", where))]
    acts = {}
    for n, table in _need(data, "actions", where).items():
        for p, entries in table.items():
            perm = tuple(int(x) for x in p.split(",")) if p else ()
            acts[(int(n), perm)] = _decode_map(entries, spaces[int(n)], spaces[int(n)])
    gamma = {}
    for c, ks, ds, r in _need(data, "gamma", where):
        gamma[(to_tuple(c), tuple(ks), to_tuple(ds))] = to_tuple(r)

    def g(c, ks, ds):
        key = (c, ks, ds)
        if key not in gamma:
            raise CapError("composition not stored for these simplices")
        return gamma[key]

    return Operad(spaces, lambda n, p: acts[(n, p)], to_tuple(_need(data, "unit", where)), g,
                  name=data.get("name", "input"))


def decode_permcat(data, where="$"):
    from .phicon import from_tables
    objs = [to_tuple(o) for o in _need(data, "objects", where)]
    mors = [tuple(to_tuple(x) for x in m) for m in _need(data, "morphisms", where)]
    ids = {to_tuple(o): to_tuple(f) for o, f in _need(data, "identities", where)}
    comp = [tuple(to_tuple(x) for x in c) for c in _need(data, "compose", where)]
    ten = _need(data, "tensor", where)
    tob = {(to_tuple(a), to_tuple(b)): to_tuple(c) for a, b, c in _need(ten, "objects", f"{where}.tensor")}
    tmor = {(to_tuple(a), to_tuple(b)): to_tuple(c) for a, b, c in _need(ten, "morphisms", f"{where}.tensor")}
    sym = {(to_tuple(a), to_tuple(b)): to_tuple(t) for a, b, t in _need(data, "symmetry", where)}
    try:
        return from_tables(objs, mors, ids, comp, tob, tmor, to_tuple(_need(data, "unit", where)),
                           sym, name=data.get("name", "input"))
    except (KeyError, fincat.InvalidCategory) as e:
        raise FormatError(f"{where}: incomplete or invalid tables ({e})") from e


def decode(data, where="$"):
    kind = _need(data, "kind", where)
    decoders = {"fincat": decode_fincat, "sset": decode_sset, "idiagram": decode_idiagram,
                "operad": decode_operad, "permcat": decode_permcat}
    if kind not in decoders:
        raise FormatError(f"{where}.kind: unknown kind {kind!r}")
    return decoders[kind](data, where)
