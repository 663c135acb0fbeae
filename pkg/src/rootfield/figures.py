"""Static SVG drawings of the imaginary-quadratic integer lattices with the
norm level sets that carry the rank-2 constructions marked."""

from __future__ import annotations

from fractions import Fraction

from .numberfield import NumberField, make_field
from .realizations import norm_level_set

_SQRT3_HALF = 0.8660254037844386
_SCALE = 48.0
_FIGURES = {
    "eisenstein": (1, 3),
    "gaussian": (1, 2, 4),
}

_MARK_STYLE = {
    1: '<circle class="mark-n1" cx="{x}" cy="{y}" r="9" fill="none" stroke="#1a6faa" stroke-width="2"/>',
    2: '<rect class="mark-n2" x="{x0}" y="{y0}" width="18" height="18" fill="none" stroke="#b3541e" stroke-width="2"/>',
    3: '<rect class="mark-n3" x="{x0}" y="{y0}" width="18" height="18" fill="none" stroke="#b3541e" stroke-width="2"/>',
    4: (
        '<circle class="mark-n4" cx="{x}" cy="{y}" r="9" fill="none" stroke="#2e7d32" stroke-width="2"/>'
        '<circle class="mark-n4-outer" cx="{x}" cy="{y}" r="13" fill="none" stroke="#2e7d32" stroke-width="2"/>'
    ),
}


def _embed(field: NumberField, coords) -> tuple[float, float]:
    x, y = (float(Fraction(c)) for c in coords)
    if field.name == "eisenstein":
        return x + y / 2.0, y * _SQRT3_HALF
    return x, y


def lattice_figure(field_name: str, radius: Fraction) -> str:
    """SVG of the integer lattice inside the given radius, with level sets marked."""
    field = make_field(field_name)
    levels = _FIGURES[field_name]
    max_norm = radius * radius
    half = float(radius) * _SCALE + 30.0
    size = 2.0 * half
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" height="{size:.0f}" '
        f'viewBox="0 0 {size:.0f} {size:.0f}">',
        f'<rect width="{size:.0f}" height="{size:.0f}" fill="white"/>',
    ]
    d = 0
    while d <= max_norm:
        for el in norm_level_set(field, d):
            px, py = _embed(field, el.coords)
            x, y = half + px * _SCALE, half - py * _SCALE
            parts.append(f'<circle class="lattice" cx="{x:.2f}" cy="{y:.2f}" r="3.5" fill="#222"/>')
            if d in levels and d > 0:
                style = _MARK_STYLE[d]
                parts.append(style.format(x=f"{x:.2f}", y=f"{y:.2f}", x0=f"{x - 9:.2f}", y0=f"{y - 9:.2f}"))
        d += 1
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def figure_names() -> tuple[str, ...]:
    return tuple(f"lattice_{name}.svg" for name in _FIGURES)


def write_figures(outdir: str, radius: Fraction) -> list[str]:
    import os

    paths = []
    for name in _FIGURES:
        path = os.path.join(outdir, f"lattice_{name}.svg")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(lattice_figure(name, radius))
        paths.append(path)
    return paths
