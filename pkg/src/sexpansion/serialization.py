"""JSON formats for algebras, semigroups and resonant decompositions.

Algebra indices are 0-based; semigroup elements are written 1-based
(λ1..λP) and converted at this boundary.  ``dumps`` is canonical: sorted
keys and reduced rationals, so equal objects give equal bytes.
"""

import json
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .expansion import ExpandedAlgebra, ResonantDecomposition
from .liecore import LieAlgebra
from .semigroups import Semigroup

INDEX_MAP = "A*P+alpha"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _term(k: int, v: Fraction) -> dict:
    v = Fraction(v)
    return {"k": k, "num": v.numerator, "den": v.denominator}


def algebra_to_dict(L: LieAlgebra, expansion: dict | None = None) -> dict:
    brackets = []
    for (i, j) in sorted(L.constants):
        terms = L.constants[(i, j)]
        brackets.append({"i": i, "j": j, "terms": [_term(k, terms[k]) for k in sorted(terms)]})
    out = {"name": L.name, "dim": L.dim, "generators": list(L.names), "brackets": brackets}
    if expansion is not None:
        out["expansion"] = expansion
    return out


def expanded_to_dict(E: ExpandedAlgebra) -> dict:
    note = {"semigroup": semigroup_to_dict(E.semigroup), "base": E.base.name, "index_map": INDEX_MAP}
    return algebra_to_dict(E.algebra, note)


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    return x


def algebra_from_dict(d: dict) -> LieAlgebra:
    try:
        dim = _int(d["dim"], "dim")
        constants: dict = {}
        for b in d.get("brackets", []):
            i, j = _int(b["i"], "i"), _int(b["j"], "j")
            terms = {}
            for t in b["terms"]:
                den = _int(t.get("den", 1), "den")
                if den == 0:
                    raise ParseError("zero denominator")
                v = Fraction(_int(t["num"], "num"), den)
                if v:
                    terms[_int(t["k"], "k")] = terms.get(t["k"], 0) + v
            if (i, j) in constants:
                raise ParseError(f"bracket ({i},{j}) listed twice")
            constants[(i, j)] = terms
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed algebra JSON: {exc!r}") from None
    return LieAlgebra(dim, constants, d.get("generators"), name=d.get("name"))


def semigroup_to_dict(S: Semigroup) -> dict:
    return {"name": S.name, "order": S.order, "table": [[x + 1 for x in row] for row in S.table]}


def semigroup_from_dict(d: dict) -> Semigroup:
    try:
        table = d["table"]
        P = _int(d.get("order", len(table)), "order")
        if len(table) != P or any(len(row) != P for row in table):
            raise ParseError(f"table must be {P}x{P}")
        rows = [[_int(x, "table entry") - 1 for x in row] for row in table]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed semigroup JSON: {exc!r}") from None
    return Semigroup(rows, d.get("name"))


def decomposition_to_dict(D: ResonantDecomposition) -> dict:
    targets = [
        {"p": p, "q": q, "r": sorted(rs)} for (p, q), rs in sorted(D.bracket_targets.items())
    ]
    return {
        "g_partition": [sorted(part) for part in D.g_partition],
        "s_partition": [sorted(a + 1 for a in part) for part in D.s_partition],
        "bracket_targets": targets,
    }


def decomposition_from_dict(d: dict) -> ResonantDecomposition:
    try:
        g = [[_int(x, "generator") for x in part] for part in d["g_partition"]]
        s = [[_int(a, "element") - 1 for a in part] for part in d["s_partition"]]
        targets = {(t["p"], t["q"]): set(t["r"]) for t in d["bracket_targets"]}
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed decomposition JSON: {exc!r}") from None
    return ResonantDecomposition(g, s, targets)


def parse(text: str):
    """Algebra or semigroup, detected from the keys present."""
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(d, dict):
        raise ParseError("top level must be an object")
    if "table" in d:
        return semigroup_from_dict(d)
    if "dim" in d:
        return algebra_from_dict(d)
    if "g_partition" in d:
        return decomposition_from_dict(d)
    raise ParseError("cannot tell what this JSON describes")


def load(path) -> object:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)
