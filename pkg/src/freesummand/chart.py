"""Grids of unstable sphere verdicts over the (d, e)-plane, as TSV or SVG."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from html import escape

from .exceptions import BudgetExceeded
from .ranges import (
    Assumptions,
    KernelKind,
    Verdict,
    VerdictKind,
    classify_sphere_unstable,
)

MAX_CELLS = 10**6

REGION_CODES = ("Z", "ISO", "BS", "DIV", "S0", "S-1", "NC")

COLORS = {
    "Z": "#f2f2f2",
    "ISO": "#8fd19e",
    "BS": "#f5d76e",
    "DIV": "#9ec5fe",
    "S0": "#e6a0a0",
    "S-1": "#c9a0dc",
    "NC": "#ffffff",
}

DESCRIPTIONS = {
    "Z": "source vanishes",
    "ISO": "isomorphism",
    "BS": "split surjective; isomorphism under Beilinson-Soule",
    "DIV": "target zero, kernel motivic cohomology",
    "S0": "0-stem, excluded",
    "S-1": "-1-stem, target zero, divisible kernel",
    "NC": "not covered",
}


def region_code(v: Verdict) -> str:
    if v.kind is VerdictKind.ZERO_SOURCE:
        return "Z"
    if v.kind is VerdictKind.ISOMORPHISM:
        return "ISO"
    if v.kind is VerdictKind.SPLIT_SURJECTIVE:
        return "BS"
    if v.kind is VerdictKind.TARGET_ZERO_DIVISIBLE_KERNEL:
        return "S-1" if v.kernel.kind is KernelKind.DIVISIBLE else "DIV"
    if v.kind is VerdictKind.EXCLUDED_ZERO_STEM:
        return "S0"
    return "NC"


@dataclass(frozen=True)
class BoundaryLine:
    """The line ``a*d + b*e = c``."""

    name: str
    equation: str
    a: int
    b: int
    c: int

    def to_json(self) -> dict:
        return {"name": self.name, "equation": self.equation,
                "a": self.a, "b": self.b, "c": self.c}


def boundary_lines(x: int, y: int) -> list[BoundaryLine]:
    m = min(2 * x - 2, x + y - 2)
    return [
        BoundaryLine("coweight 0", f"d = {x}", 1, 0, x),
        BoundaryLine("Freudenthal bound", f"d = {m}", 1, 0, m),
        BoundaryLine("weight -1", f"e = {y - 1}", 0, 1, y - 1),
        BoundaryLine("stable comparison", f"e = d + {y - x + 2}", -1, 1, y - x + 2),
        BoundaryLine("0-stem", f"d + e = {x + y}", 1, 1, x + y),
        BoundaryLine("-1-stem", f"d + e = {x + y - 1}", 1, 1, x + y - 1),
    ]


@dataclass(frozen=True)
class Chart:
    x: int
    y: int
    d_values: tuple[int, ...]
    e_values: tuple[int, ...]
    cells: tuple[tuple[Verdict, ...], ...]  # cells[i][j] at e_values[i], d_values[j]
    lines: tuple[BoundaryLine, ...]
    assumptions: Assumptions

    def verdict(self, d: int, e: int) -> Verdict:
        return self.cells[self.e_values.index(e)][self.d_values.index(d)]

    def codes(self) -> dict[tuple[int, int], str]:
        return {
            (d, e): region_code(v)
            for e, row in zip(self.e_values, self.cells)
            for d, v in zip(self.d_values, row)
        }

    def to_tsv(self) -> str:
        """One row per ``e``, highest first; the header row lists ``d``."""
        out = ["e\\d\t" + "\t".join(str(d) for d in self.d_values)]
        for e, row in sorted(zip(self.e_values, self.cells), key=lambda t: -t[0]):
            out.append(f"{e}\t" + "\t".join(region_code(v) for v in row))
        return "\n".join(out) + "\n"

    def to_svg(self, cell: int = 24) -> str:
        return _render_svg(self, cell)


def chart(x: int, y: int, d_range: tuple[int, int], e_range: tuple[int, int],
          asm: Assumptions = Assumptions()) -> Chart:
    """Classify every ``(d, e)`` in the inclusive ranges."""
    d0, d1 = d_range
    e0, e1 = e_range
    if d1 < d0 or e1 < e0:
        raise ValueError("ranges must be nonempty")
    total = (d1 - d0 + 1) * (e1 - e0 + 1)
    if total > MAX_CELLS:
        raise BudgetExceeded(f"{total} cells exceeds the limit of {MAX_CELLS}")
    d_values = tuple(range(d0, d1 + 1))
    e_values = tuple(range(e0, e1 + 1))
    cells = tuple(
        tuple(classify_sphere_unstable(x, y, d, e, asm) for d in d_values) for e in e_values
    )
    return Chart(x, y, d_values, e_values, cells, tuple(boundary_lines(x, y)), asm)


def _clip(line: BoundaryLine, lo_d, hi_d, lo_e, hi_e):
    """Endpoints of the line inside the box, or None."""
    pts = set()
    if line.b:
        for d in (lo_d, hi_d):
            e = Fraction(line.c - line.a * d, line.b)
            if lo_e <= e <= hi_e:
                pts.add((Fraction(d), e))
    if line.a:
        for e in (lo_e, hi_e):
            d = Fraction(line.c - line.b * e, line.a)
            if lo_d <= d <= hi_d:
                pts.add((d, Fraction(e)))
    if len(pts) < 2:
        return None
    pts = sorted(pts)
    return pts[0], pts[-1]


def _render_svg(c: Chart, cell: int) -> str:
    margin, legend_w = 40, 330
    nd, ne = len(c.d_values), len(c.e_values)
    width = margin * 2 + nd * cell + legend_w
    height = margin * 2 + ne * cell
    d_lo, e_hi = c.d_values[0], c.e_values[-1]

    def px(d):
        return margin + (d - d_lo + Fraction(1, 2)) * cell

    def py(e):
        return margin + (e_hi - e + Fraction(1, 2)) * cell

    def f(v):
        return f"{float(v):.2f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" style="fill:#ffffff"/>',
    ]
    for e, row in zip(c.e_values, c.cells):
        for d, v in zip(c.d_values, row):
            code = region_code(v)
            out.append(
                f'<rect x="{f(px(d) - Fraction(cell, 2))}" y="{f(py(e) - Fraction(cell, 2))}" '
                f'width="{cell}" height="{cell}" '
                f'style="fill:{COLORS[code]};stroke:#cccccc;stroke-width:0.5">'
                f"<title>d={d} e={e}: {escape(str(v))}</title></rect>"
            )
    for d in c.d_values:
        out.append(f'<text x="{f(px(d))}" y="{f(py(c.e_values[0]) + cell)}" '
                   f'style="font:9px sans-serif;text-anchor:middle">{d}</text>')
    for e in c.e_values:
        out.append(f'<text x="{f(px(d_lo) - cell)}" y="{f(py(e) + 3)}" '
                   f'style="font:9px sans-serif;text-anchor:middle">{e}</text>')
    box = (Fraction(2 * d_lo - 1, 2), Fraction(2 * c.d_values[-1] + 1, 2),
           Fraction(2 * c.e_values[0] - 1, 2), Fraction(2 * e_hi + 1, 2))
    for line in c.lines:
        seg = _clip(line, *box)
        if seg is None:
            continue
        (da, ea), (db, eb) = seg
        dash = ";stroke-dasharray:4,3" if line.name == "-1-stem" else ""
        out.append(
            f'<line x1="{f(px(da))}" y1="{f(py(ea))}" x2="{f(px(db))}" y2="{f(py(eb))}" '
            f'style="stroke:#000000;stroke-width:1.5{dash}"/>'
        )
        out.append(
            f'<text x="{f(px(db) + 2)}" y="{f(py(eb) - 2)}" '
            f'style="font:10px sans-serif;fill:#000000">{escape(line.equation)}</text>'
        )
    lx = margin * 2 + nd * cell
    out.append(f'<text x="{lx}" y="{margin - 10}" style="font:12px sans-serif">'
               f"x={c.x}, y={c.y}, Beilinson-Soule "
               f"{'assumed' if c.assumptions.beilinson_soule else 'not assumed'}</text>")
    for i, code in enumerate(REGION_CODES):
        yy = margin + i * 20
        out.append(f'<rect x="{lx}" y="{yy}" width="14" height="14" '
                   f'style="fill:{COLORS[code]};stroke:#000000;stroke-width:0.5"/>')
        out.append(f'<text x="{lx + 20}" y="{yy + 11}" style="font:11px sans-serif">'
                   f"{code}: {escape(DESCRIPTIONS[code])}</text>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
