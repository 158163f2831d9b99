"""JSON (de)serialization for all structure-constant files.

Schemas (schema_version 1; all matrices row-major, scalars in the cyclotomic
serialization {"conductor": n, "coeffs": [[num, den], ...]}; integer and
"p/q" string shorthands are accepted on input):

  hopf      {"dim", "mult", "unit", "comult", "counit", "antipode", "antipode_inv"}
  braiding  {"dim", "psi": Matrix, "lambda": Scalar}
  bimodule  {"hopf": <ref>, "dim", "mu_l", "mu_r", "nu_l", "nu_r"}
  crossed   {"hopf": <ref>, "dim", "mu_r", "nu_r"}
  calculus  {"hopf": <ref>, "submodule": {"ambient": "ker_counit",
             "generators": [vectors]}}  or  {"hopf": <ref>, "X": bimodule
             fields, "d": Matrix}

A <ref> is an inline object, a path relative to the referring file, or
"bundled:<name>" for a file shipped with the package under data/.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .braiding import BraidedSpace
from .bimodules import CrossedModule, HopfBimodule
from .cyclotomic import Scalar
from .errors import BraidedFormsError, ParseError
from .hopf import HopfAlgebraData
from .matrix import Matrix

SCHEMA_VERSION = 1


def bundled_path(name: str) -> Path:
    """Path of a corpus file shipped with the package."""
    if not name.endswith(".json"):
        name += ".json"
    return Path(__file__).parent / "data" / name


def scalar_from_obj(obj) -> Scalar:
    """Scalar from the full serialization, an integer, "p/q", or [p, q]."""
    if isinstance(obj, bool):
        raise ParseError(f"not a scalar: {obj!r}")
    if isinstance(obj, int):
        return Scalar.rational(obj)
    if isinstance(obj, str):
        return Scalar.rational(Fraction(obj))
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return Scalar.rational(Fraction(int(obj[0]), int(obj[1])))
    if isinstance(obj, dict):
        return Scalar.from_obj(obj)
    raise ParseError(f"not a scalar: {obj!r}")


def matrix_from_obj(obj) -> Matrix:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    entries = obj["entries"]
    if len(entries) != rows * cols:
        raise ParseError(f"matrix {rows}x{cols} needs {rows * cols} entries, got {len(entries)}")
    return Matrix(rows, cols, [scalar_from_obj(e) for e in entries])


def vector_to_matrix(vec, dim: int) -> Matrix:
    if len(vec) != dim:
        raise ParseError(f"vector of length {len(vec)} in a {dim}-dimensional space")
    return Matrix(dim, 1, [scalar_from_obj(e) for e in vec])


def load_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as f:
            obj = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: top level must be a JSON object")
    return obj


def save_json(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(obj, f, indent=2, sort_keys=True)
        f.write("\n")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _resolve_ref(ref, base_dir):
    """Inline object, relative path, or bundled:<name> -> (obj, its base dir)."""
    if isinstance(ref, dict):
        return ref, base_dir
    if isinstance(ref, str):
        if ref.startswith("bundled:"):
            path = bundled_path(ref[len("bundled:"):])
        else:
            path = Path(base_dir or ".") / ref
        return load_json(path), path.parent
    raise ParseError(f"bad file reference: {ref!r}")


def _wrap(fn, obj, what):
    try:
        return fn(obj)
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError, BraidedFormsError) as exc:
        raise ParseError(f"bad {what} data: {exc!r}") from exc


def hopf_from_obj(obj) -> HopfAlgebraData:
    def build(o):
        n = int(o["dim"])
        shapes = {"mult": (n, n * n), "unit": (n, 1), "comult": (n * n, n),
                  "counit": (1, n), "antipode": (n, n), "antipode_inv": (n, n)}
        for key, (r, c) in shapes.items():
            m = o[key]
            if int(m["rows"]) != r or int(m["cols"]) != c:
                raise ParseError(f'"{key}" must be {r}x{c}, got {m["rows"]}x{m["cols"]}')
        return HopfAlgebraData(
            int(o["dim"]),
            matrix_from_obj(o["mult"]),
            matrix_from_obj(o["unit"]),
            matrix_from_obj(o["comult"]),
            matrix_from_obj(o["counit"]),
            matrix_from_obj(o["antipode"]),
            matrix_from_obj(o["antipode_inv"]),
            name=o.get("name", ""),
        )

    return _wrap(build, obj, "hopf")


def braiding_from_obj(obj) -> BraidedSpace:
    def build(o):
        lam = scalar_from_obj(o["lambda"]) if "lambda" in o else None
        return BraidedSpace(int(o["dim"]), matrix_from_obj(o["psi"]), lam, check=False)

    return _wrap(build, obj, "braiding")


def load_hopf_ref(ref, base_dir) -> HopfAlgebraData:
    obj, _ = _resolve_ref(ref, base_dir)
    return hopf_from_obj(obj)


def bimodule_from_obj(obj, base_dir=None) -> HopfBimodule:
    if "hopf" not in obj:
        raise ParseError('bimodule file needs a "hopf" reference')
    h = load_hopf_ref(obj["hopf"], base_dir)

    def build(o):
        return HopfBimodule(
            h,
            int(o["dim"]),
            matrix_from_obj(o["mu_l"]),
            matrix_from_obj(o["mu_r"]),
            matrix_from_obj(o["nu_l"]),
            matrix_from_obj(o["nu_r"]),
            name=o.get("name", ""),
        )

    return _wrap(build, obj, "bimodule")


def crossed_from_obj(obj, base_dir=None) -> CrossedModule:
    if "hopf" not in obj:
        raise ParseError('crossed module file needs a "hopf" reference')
    h = load_hopf_ref(obj["hopf"], base_dir)

    def build(o):
        return CrossedModule(
            h,
            int(o["dim"]),
            matrix_from_obj(o["mu_r"]),
            matrix_from_obj(o["nu_r"]),
            name=o.get("name", ""),
        )

    return _wrap(build, obj, "crossed")


def calculus_from_obj(obj, base_dir=None):
    """Calculus bundle -> FirstOrderCalculus (imported lazily to avoid cycles)."""
    from .calculus import FirstOrderCalculus, fodc_from_submodule, kernel_counit_crossed

    if "hopf" not in obj:
        raise ParseError('calculus bundle needs a "hopf" reference')
    h = load_hopf_ref(obj["hopf"], base_dir)
    if "submodule" in obj:
        sub = obj["submodule"]
        if not isinstance(sub, dict) or sub.get("ambient") != "ker_counit":
            raise ParseError('submodule spec needs {"ambient": "ker_counit", "generators": [...]}')
        mc, _ = kernel_counit_crossed(h)
        vecs = sub.get("generators", [])
        if vecs:
            cols = [_wrap(lambda v: vector_to_matrix(v, mc.dim), v, "generator") for v in vecs]
            gens = Matrix(mc.dim, len(cols), [c.entries[r] for r in range(mc.dim) for c in cols])
        else:
            gens = Matrix.zero(mc.dim, 0)
        return fodc_from_submodule(h, gens)
    if "X" in obj and "d" in obj:
        xobj = dict(obj["X"])
        xobj.setdefault("hopf", obj["hopf"])
        x = bimodule_from_obj(xobj, base_dir)
        d = _wrap(matrix_from_obj, obj["d"], "differential")
        return FirstOrderCalculus(h, x, d)
    raise ParseError('calculus bundle needs either "submodule" or explicit "X" and "d"')
