"""The .palg file format, deterministic corpus constructions, and exhaustive
enumeration of small Poisson structures.

Documents are UTF-8 JSON with schema_version "1".  Coefficients are decimal
integer or num/den strings, never JSON numbers, so no parser can silently
coerce them to floats.  Dot entries are stored with i <= j and bracket
entries with i < j; loading symmetrises and antisymmetrises accordingly.
Random structure constants are useless here (they essentially never satisfy
associativity, Jacobi and the compatibility identity simultaneously), so the
corpus consists of closed constructions plus exhaustive small scans.
"""

from __future__ import annotations

import itertools
import json
import re
from typing import Sequence

from .algebra import (
    AxiomViolation,
    DialgebraTensors,
    PoissonAlgebra,
    direct_sum,
    tensors_from_maps,
    validate,
)
from .fields import FieldError, FieldSpec
from .lattice import BudgetExceededError

SCHEMA_VERSION = "1"
COEFF_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class CorpusFormatError(ValueError):
    """Malformed .palg document; the message carries the offending location."""


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def parse_document(text: str, allow_invalid: bool = False) -> PoissonAlgebra:
    """Parse and validate one document; round-trips with serialize_document.

    With allow_invalid the axioms are skipped (negative-control corpora);
    everything structural is still enforced.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CorpusFormatError(f"syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise CorpusFormatError("document must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise CorpusFormatError(f"unsupported schema_version {doc.get('schema_version')!r}")
    field = _parse_field(doc.get("field"))
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise CorpusFormatError(f"dim must be a nonnegative integer, got {dim!r}")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise CorpusFormatError("name must be a string")
    labels = doc.get("basis", [f"e{i}" for i in range(dim)])
    if (not isinstance(labels, list) or len(labels) != dim
            or not all(isinstance(x, str) for x in labels)):
        raise CorpusFormatError("basis must be a list of dim labels")
    dot_map = _parse_entries(field, dim, doc.get("dot", []), "dot", strict=False)
    bracket_map = _parse_entries(field, dim, doc.get("bracket", []), "bracket", strict=True)
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise CorpusFormatError("metadata must be an object")
    meta = tuple(sorted((k, json.dumps(v, sort_keys=True)) for k, v in metadata.items()))
    tensors = tensors_from_maps(field, dim, dot_map, bracket_map)
    if allow_invalid:
        return PoissonAlgebra(field, dim, tensors.dot, tensors.bracket,
                              name=name, basis_labels=tuple(labels), meta=meta)
    return validate(tensors, name=name, basis_labels=tuple(labels), meta=meta)


def _parse_field(value) -> FieldSpec:
    if value == "Q":
        return FieldSpec.rationals()
    if isinstance(value, dict) and set(value) == {"p"}:
        p = value["p"]
        if not isinstance(p, int):
            raise CorpusFormatError("field modulus must be an integer")
        try:
            return FieldSpec.prime(p)
        except FieldError as exc:
            raise CorpusFormatError(str(exc))
    raise CorpusFormatError(f"field must be \"Q\" or {{\"p\": prime}}, got {value!r}")


def _parse_entries(field: FieldSpec, dim: int, entries, label: str, strict: bool) -> dict:
    if not isinstance(entries, list):
        raise CorpusFormatError(f"{label} must be a list")
    out = {}
    for pos, entry in enumerate(entries):
        where = f"{label}[{pos}]"
        if not isinstance(entry, dict) or set(entry) != {"i", "j", "k", "c"}:
            raise CorpusFormatError(f"{where}: expected keys i, j, k, c")
        i, j, k, c = entry["i"], entry["j"], entry["k"], entry["c"]
        for idx_name, idx in (("i", i), ("j", j), ("k", k)):
            if not isinstance(idx, int) or not 0 <= idx < dim:
                raise CorpusFormatError(f"{where}: index {idx_name}={idx!r} out of range")
        if strict and i >= j:
            raise CorpusFormatError(f"{where}: bracket entries need i < j")
        if not strict and i > j:
            raise CorpusFormatError(f"{where}: dot entries need i <= j")
        if not isinstance(c, str):
            raise CorpusFormatError(f"{where}: coefficient must be a string, got {type(c).__name__}")
        if not COEFF_RE.match(c):
            raise CorpusFormatError(f"{where}: bad coefficient {c!r} (floats are forbidden)")
        if (i, j, k) in out:
            raise CorpusFormatError(f"{where}: duplicate entry for ({i},{j},{k})")
        out[(i, j, k)] = field.parse_scalar(c)
    return out


# ---------------------------------------------------------------------------
# serialisation
# ---------------------------------------------------------------------------


def serialize_document(alg: PoissonAlgebra) -> str:
    """Canonical text: sorted nonzero canonical entries, string coefficients."""
    f = alg.field
    dot_entries = []
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            for k in range(alg.dim):
                c = alg.dot_tensor[i][j][k]
                if c != 0:
                    dot_entries.append({"i": i, "j": j, "k": k, "c": f.format_scalar(c)})
    bracket_entries = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            for k in range(alg.dim):
                c = alg.bracket_tensor[i][j][k]
                if c != 0:
                    bracket_entries.append({"i": i, "j": j, "k": k, "c": f.format_scalar(c)})
    doc = {
        "schema_version": SCHEMA_VERSION,
        "name": alg.name,
        "field": "Q" if not f.is_finite else {"p": f.order},
        "dim": alg.dim,
        "basis": list(alg.labels()),
        "dot": dot_entries,
        "bracket": bracket_entries,
        "metadata": {k: json.loads(v) for k, v in alg.meta},
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------------------
# manifests
# ---------------------------------------------------------------------------


def serialize_manifest(members: Sequence[str]) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, "members": list(members)},
                      indent=2) + "\n"


def parse_manifest(text: str) -> list:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CorpusFormatError(f"manifest syntax error: {exc.msg}")
    if (not isinstance(doc, dict) or doc.get("schema_version") != SCHEMA_VERSION
            or not isinstance(doc.get("members"), list)
            or not all(isinstance(m, str) for m in doc["members"])):
        raise CorpusFormatError("manifest must hold schema_version and a member list")
    return list(doc["members"])


# ---------------------------------------------------------------------------
# closed constructions
# ---------------------------------------------------------------------------


def zero_algebra(field: FieldSpec, n: int, name: str = "") -> PoissonAlgebra:
    t = tensors_from_maps(field, n, {}, {})
    return validate(t, name=name or f"zero-d{n}-{field}")


def idempotent_line(field: FieldSpec, name: str = "") -> PoissonAlgebra:
    """One basis vector e with e.e = e and trivial bracket."""
    t = tensors_from_maps(field, 1, {(0, 0, 0): 1}, {})
    return validate(t, name=name or f"idem-line-{field}", basis_labels=("e",))


def lie_zero_dot(field: FieldSpec, n: int, brackets: dict, name: str = "",
                 basis_labels: tuple = ()) -> PoissonAlgebra:
    """A Lie algebra made Poisson by the zero dot (compatibility is vacuous)."""
    t = tensors_from_maps(field, n, {}, brackets)
    return validate(t, name=name, basis_labels=basis_labels)


def assoc_zero_bracket(field: FieldSpec, n: int, dots: dict, name: str = "",
                       basis_labels: tuple = ()) -> PoissonAlgebra:
    """A commutative associative algebra made Poisson by the zero bracket."""
    t = tensors_from_maps(field, n, dots, {})
    return validate(t, name=name, basis_labels=basis_labels)


def heisenberg_zero_dot(field: FieldSpec, name: str = "") -> PoissonAlgebra:
    """Basis x, y, z with [x, y] = z, zero dot."""
    return lie_zero_dot(field, 3, {(0, 1, 2): 1},
                        name=name or f"heisenberg-{field}", basis_labels=("x", "y", "z"))


def two_dim_nonabelian(field: FieldSpec, name: str = "") -> PoissonAlgebra:
    """Basis x, y with [x, y] = x, zero dot."""
    return lie_zero_dot(field, 2, {(0, 1, 0): 1},
                        name=name or f"solv2-{field}", basis_labels=("x", "y"))


def rotation3(field: FieldSpec, name: str = "") -> PoissonAlgebra:
    """Basis a, u, v with [a, u] = v, [a, v] = -u, zero dot; the bracket
    operator of a has characteristic polynomial t(t^2 + 1)."""
    return lie_zero_dot(field, 3, {(0, 1, 2): 1, (0, 2, 1): -1},
                        name=name or f"rot3-{field}", basis_labels=("a", "u", "v"))


def fe_plus_nilpotent_line(field: FieldSpec, name: str = "") -> PoissonAlgebra:
    """Fe (+) Fn with e.e = e and n.n = 0: the idempotent line next to a
    one-dimensional zero ideal."""
    alg = direct_sum(idempotent_line(field), zero_algebra(field, 1))
    return alg.with_name(name or f"fe-plus-n-{field}")


def xyz_tensors(field: FieldSpec) -> DialgebraTensors:
    """Basis x, y, z with x.x = z, [x, y] = x, [z, y] = 2z.

    These constants are mutually inconsistent: the compatibility identity at
    (x, y, x) gives [x.y, x] = 0 but [x,x].y + x.[y,x] = -z, so validation
    rejects them over every field.  They are kept as the canonical
    compatibility-violating negative control.
    """
    return tensors_from_maps(field, 3, {(0, 0, 2): 1}, {(0, 1, 0): 1, (1, 2, 2): -2})


def xyz_algebra(field: FieldSpec, allow_invalid: bool = False,
                name: str = "") -> PoissonAlgebra:
    t = xyz_tensors(field)
    label = name or f"xyz-{field}"
    if allow_invalid:
        return PoissonAlgebra(field, 3, t.dot, t.bracket, name=label,
                              basis_labels=("x", "y", "z"))
    return validate(t, name=label, basis_labels=("x", "y", "z"))


def semidirect_sum(assoc_part: PoissonAlgebra, lie_part: PoissonAlgebra,
                   action: Sequence, name: str = "") -> PoissonAlgebra:
    """Dot from the first algebra, bracket from the second, and the second
    acting on the first: [l, a] = action(l)(a).

    The action must consist of derivations of the dot assembling into a Lie
    homomorphism; this is not assumed, the result is validated and a
    violation raises.
    """
    if assoc_part.field != lie_part.field:
        raise ValueError("field mismatch")
    f = assoc_part.field
    m, l = assoc_part.dim, lie_part.dim
    if len(action) != l:
        raise ValueError("one action matrix per Lie basis vector is required")
    n = m + l
    dot_map = {}
    for i in range(m):
        for j in range(i, m):
            for k in range(m):
                c = assoc_part.dot_tensor[i][j][k]
                if c != 0:
                    dot_map[(i, j, k)] = c
    bracket_map = {}
    for i in range(l):
        for j in range(i + 1, l):
            for k in range(l):
                c = lie_part.bracket_tensor[i][j][k]
                if c != 0:
                    bracket_map[(m + i, m + j, m + k)] = c
    for li, mat in enumerate(action):
        rows = [[f.coerce(x) for x in row] for row in mat]
        if len(rows) != m or any(len(r) != m for r in rows):
            raise ValueError("action matrices must be square of the dot part's size")
        for a_idx in range(m):
            for k in range(m):
                c = rows[k][a_idx]
                if c != 0:
                    # [a, l] entry with a before l in the basis order
                    bracket_map[(a_idx, m + li, k)] = f.neg(c)
    t = tensors_from_maps(f, n, dot_map, bracket_map)
    return validate(t, name=name or f"semidirect-{assoc_part.name}-{lie_part.name}")


# ---------------------------------------------------------------------------
# declarative corpus builder
# ---------------------------------------------------------------------------


def build(spec: Sequence[dict]) -> list:
    """Materialise a list of construction descriptors deterministically.

    Each item carries a "kind" plus parameters; a "field" is "Q" or a prime.
    Direct sums refer to earlier items by index.
    """
    out: list = []
    for pos, item in enumerate(spec):
        kind = item.get("kind")
        field = FieldSpec.parse(str(item["field"])) if "field" in item else None
        if kind == "zero":
            alg = zero_algebra(field, item["n"])
        elif kind == "idempotent_line":
            alg = idempotent_line(field)
        elif kind == "heisenberg_zero_dot":
            alg = heisenberg_zero_dot(field)
        elif kind == "two_dim_nonabelian":
            alg = two_dim_nonabelian(field)
        elif kind == "fe_plus_n":
            alg = fe_plus_nilpotent_line(field)
        elif kind == "rotation3":
            alg = rotation3(field)
        elif kind == "xyz_example":
            alg = xyz_algebra(field, allow_invalid=bool(item.get("allow_invalid")))
        elif kind == "lie_zero_dot":
            alg = lie_zero_dot(field, item["n"],
                               {tuple(map(int, k.split(","))): v
                                for k, v in item["brackets"].items()})
        elif kind == "assoc_zero_bracket":
            alg = assoc_zero_bracket(field, item["n"],
                                     {tuple(map(int, k.split(","))): v
                                      for k, v in item["dots"].items()})
        elif kind == "direct_sum":
            refs = item["refs"]
            alg = out[refs[0]]
            for r in refs[1:]:
                alg = direct_sum(alg, out[r])
        elif kind == "semidirect":
            alg = semidirect_sum(out[item["assoc"]], out[item["lie"]], item["action"])
        else:
            raise ValueError(f"unknown construction kind {kind!r} at position {pos}")
        if "name" in item:
            alg = alg.with_name(item["name"])
        if "metadata" in item:
            alg = alg.with_meta(item["metadata"])
        out.append(alg)
    return out


# ---------------------------------------------------------------------------
# exhaustive enumeration of small Poisson structures
# ---------------------------------------------------------------------------

ENUM_CANDIDATE_CAP = 10 ** 7


def free_entry_count(n: int) -> tuple:
    """(dot, bracket) counts of canonical structure-constant positions."""
    return n * n * (n + 1) // 2, n * n * (n - 1) // 2


def enumerate_poisson_structures(n: int, q: int, cap: int = ENUM_CANDIDATE_CAP) -> list:
    """Every assignment of canonical structure constants over GF(q) that
    passes validation, in lexicographic tensor order, deduplicated only by
    literal tensor equality (distinct assignments are distinct tensors, so
    nothing collapses)."""
    field = FieldSpec.prime(q)
    dot_free, bracket_free = free_entry_count(n)
    total = q ** (dot_free + bracket_free)
    if total > cap:
        raise BudgetExceededError("enumeration-candidates", f"{total} > {cap}")
    dot_positions = [(i, j, k) for i in range(n) for j in range(i, n) for k in range(n)]
    bracket_positions = [(i, j, k) for i in range(n) for j in range(i + 1, n) for k in range(n)]
    elems = list(field.elements())
    out = []
    for assignment in itertools.product(elems, repeat=len(dot_positions) + len(bracket_positions)):
        dot_map = {pos: val for pos, val in zip(dot_positions, assignment) if val != 0}
        bracket_map = {pos: val
                       for pos, val in zip(bracket_positions, assignment[len(dot_positions):])
                       if val != 0}
        tensors = tensors_from_maps(field, n, dot_map, bracket_map)
        try:
            alg = validate(tensors, name=f"gf{q}-d{n}-{len(out):05d}")
        except AxiomViolation:
            continue
        out.append(alg)
    return out


# ---------------------------------------------------------------------------
# the curated corpus
# ---------------------------------------------------------------------------


def curated_corpus() -> list:
    """The named benchmark algebras over GF(2), GF(3) and Q.

    Rational members carry verified radical/nilradical metadata so that
    characteristic-zero checks have something to chew on.  The xyz structure
    constants are omitted: they violate the compatibility identity (see
    xyz_tensors) and live on only as a negative control.
    """
    gf2, gf3, q = FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.rationals()
    out: list = []
    for field, tag in ((gf2, "gf2"), (gf3, "gf3"), (q, "q")):
        for n in range(1, 5):
            alg = zero_algebra(field, n, name=f"zero-d{n}-{tag}")
            if not field.is_finite:
                full = [[("1" if i == j else "0") for j in range(n)] for i in range(n)]
                alg = alg.with_meta({"radical": full, "nilradical": full})
            out.append(alg)
        idem = idempotent_line(field, name=f"idem-line-{tag}")
        if not field.is_finite:
            idem = idem.with_meta({"radical": [], "nilradical": []})
        out.append(idem)
        heis = heisenberg_zero_dot(field, name=f"heisenberg-{tag}")
        if not field.is_finite:
            eye3 = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
            heis = heis.with_meta({"radical": eye3, "nilradical": eye3})
        out.append(heis)
        solv = two_dim_nonabelian(field, name=f"solv2-{tag}")
        if not field.is_finite:
            solv = solv.with_meta({
                "radical": [["1", "0"], ["0", "1"]],
                "nilradical": [["1", "0"]],
                "phi_free": True,
                "complement": [["0", "1"]],
            })
        out.append(solv)
        fe = fe_plus_nilpotent_line(field, name=f"fe-plus-n-{tag}")
        if not field.is_finite:
            fe = fe.with_meta({"radical": [["0", "1"]], "nilradical": [["0", "1"]]})
        out.append(fe)
        idem_heis = direct_sum(idem, heis).with_name(f"idem+heis-{tag}")
        solv_fe = direct_sum(solv, fe).with_name(f"solv2+fe-{tag}")
        if not field.is_finite:
            heis_rows = [["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]
            idem_heis = idem_heis.with_meta({"radical": heis_rows, "nilradical": heis_rows})
            solv_fe = solv_fe.with_meta({
                "radical": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "0", "1"]],
                "nilradical": [["1", "0", "0", "0"], ["0", "0", "0", "1"]],
            })
        out.append(idem_heis)
        out.append(solv_fe)
    out.append(direct_sum(heisenberg_zero_dot(gf2), two_dim_nonabelian(gf2))
               .with_name("heis+solv2-gf2"))
    out.append(rotation3(q, name="rot3-q").with_meta({
        "radical": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        "nilradical": [["0", "1", "0"], ["0", "0", "1"]],
    }))
    return out
