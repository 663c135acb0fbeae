"""Line-oriented text formats: field descriptions, root-set files, matrix files.

All three share the same conventions: one record per line, `key = value`
pairs, rationals written as p/q, vectors as space-separated rationals,
matrix rows separated by `;` (or one row per line for bare matrix files).
"""

from __future__ import annotations

from fractions import Fraction

from .exact import Mat, QuadForm, fr, vec
from .rootsystems import RootSet


def _parse_rationals(text: str) -> list:
    return [fr(Fraction(tok)) for tok in text.split()]


def _parse_keyed_lines(text: str) -> list[tuple[str, str]]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"malformed line (expected key = value): {raw!r}")
        key, value = line.split("=", 1)
        out.append((key.strip(), value.strip()))
    return out

def parse_matrix_file(text: str) -> Mat:
    """Row-major rationals, one row per line, fractions as p/q."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(_parse_rationals(line))
    if not rows:
        raise ValueError("matrix file contains no rows")
    return Mat(rows)


def parse_field_file(text: str) -> dict:
    """Keys: name, min_poly (ascending coefficients), integral_basis (row-major), conjugation."""
    spec: dict = {}
    dim = None
    for key, value in _parse_keyed_lines(text):
        if key == "name":
            spec["name"] = value
        elif key == "min_poly":
            coeffs = _parse_rationals(value)
            spec["min_poly"] = coeffs
            dim = len(coeffs) - 1
        elif key == "integral_basis":
            if dim is None:
                raise ValueError("min_poly must precede integral_basis")
            flat = _parse_rationals(value)
            if len(flat) != dim * dim:
                raise ValueError("integral_basis must have degree^2 entries")
            spec["integral_basis"] = [flat[i * dim : (i + 1) * dim] for i in range(dim)]
        elif key == "conjugation":
            spec["conjugation"] = value if value in ("auto", "none") else int(value)
        elif key == "irreducible":
            spec["irreducible_certified"] = value == "certified"
        else:
            raise ValueError(f"unknown field file key {key!r}")
    for required in ("min_poly", "integral_basis"):
        if required not in spec:
            raise ValueError(f"field file is missing {required!r}")
    return spec


def parse_rootset_file(text: str) -> RootSet:
    """Keys: dim, form (row-major rationals), one root line per root."""
    dim = None
    form = None
    roots = []
    for key, value in _parse_keyed_lines(text):
        if key == "dim":
            dim = int(value)
        elif key == "form":
            if dim is None:
                raise ValueError("dim must precede form")
            flat = _parse_rationals(value)
            if len(flat) != dim * dim:
                raise ValueError("form must have dim^2 entries")
            form = QuadForm(Mat([flat[i * dim : (i + 1) * dim] for i in range(dim)]))
        elif key == "root":
            roots.append(vec(_parse_rationals(value)))
        else:
            raise ValueError(f"unknown root-set file key {key!r}")
    if dim is None or form is None:
        raise ValueError("root-set file needs dim and form")
    if not roots:
        raise ValueError("root-set file contains no roots")
    return RootSet(dim, form, tuple(roots))
