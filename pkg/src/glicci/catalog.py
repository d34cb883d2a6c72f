"""Registry of the concrete geometric objects the toolkit reasons about.

Surfaces: the cubic scroll, Del Pezzo, Castelnuovo and Bordiga surfaces
in 4-space (as plane blow-ups), the quadric and cubic surfaces in
3-space, and the degree-10 determinantal surface in 4-space (abstract,
lattice generated by H and K).  Curves: the ACM families on the quadric
and on the cubic surface, the table of how many general points of
3-space lie on small ACM curves, the descent catalog for ACM curves of
degree at most 9 (and the (10,6) case) in 4-space, and the eight
divisor classes of (10,6) curves on a Bordiga surface.

The registry is built once at import time and never mutated; reads are
unrestricted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DegreeTooSmall, NotInTable, UnknownSurface
from .picard import DivisorClass, SurfaceModel


def _blowup(name: str, h: str, ambient_dim: int, degree: int,
            sectional_genus: int) -> SurfaceModel:
    H = DivisorClass.parse(h)
    r = len(H) - 1
    gram = tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(r + 1))
        for i in range(r + 1)
    )
    return SurfaceModel(
        name=name,
        gram=gram,
        H=H,
        K=DivisorClass((-3,) + (-1,) * r),
        ambient_dim=ambient_dim,
        degree=degree,
        sectional_genus=sectional_genus,
        euler_char=1,
    )


_SURFACES: dict[str, SurfaceModel] = {}

for _model in (
    # Blow-up of one point, embedded by 2l - e.
    _blowup("scroll", "2;1", 4, 3, 0),
    # Blow-up of five points, no three collinear, embedded by 3l - sum e_i.
    _blowup("delpezzo", "3;1^5", 4, 4, 1),
    # Blow-up of eight points; the first carries multiplicity 2 in H.
    _blowup("castelnuovo", "4;2,1^7", 4, 5, 2),
    # Blow-up of ten points, embedded by quartics through all of them.
    _blowup("bordiga", "4;1^10", 4, 6, 3),
    # Nonsingular cubic surface in 3-space, blow-up of six points.
    _blowup("cubic", "3;1^6", 3, 3, 1),
    # Nonsingular quadric in 3-space, basis the two rulings.
    SurfaceModel(
        name="quadric",
        gram=((0, 1), (1, 0)),
        H=DivisorClass((1, 1)),
        K=DivisorClass((-2, -2)),
        ambient_dim=3,
        degree=2,
        sectional_genus=0,
        euler_char=1,
    ),
    # General ACM surface of degree 10 and sectional genus 11 in 4-space,
    # cut out by the 4x4 minors of a 4x5 matrix of general linear forms.
    # Its class group is generated by H and K, so the model is abstract.
    SurfaceModel(
        name="det10",
        gram=((10, 10), (10, 5)),
        H=DivisorClass((1, 0)),
        K=DivisorClass((0, 1)),
        ambient_dim=4,
        degree=10,
        sectional_genus=11,
        euler_char=5,
    ),
):
    _SURFACES[_model.name] = _model


def surface(name: str) -> SurfaceModel:
    """Look up a registered surface model by name."""
    try:
        return _SURFACES[name]
    except KeyError:
        known = ", ".join(sorted(_SURFACES))
        raise UnknownSurface(f"no surface named {name!r}; known: {known}") from None


def surface_names() -> tuple[str, ...]:
    return tuple(sorted(_SURFACES))


@dataclass(frozen=True)
class CurveFamily:
    """A family of curves of fixed degree and genus in a fixed ambient.

    ``linsys_dim`` is the dimension of the family the curve moves in when
    that family is a linear system (plane curves, curves on the quadric
    or the cubic surface).  When a divisor class and surface are given,
    the stored (d, g) is recomputed from the lattice on construction.
    """

    ambient: str
    d: int
    g: int | None
    linsys_dim: int | None = None
    divisor: DivisorClass | None = None
    surface: str | None = None
    label: str = ""

    def __post_init__(self):
        if self.divisor is not None and self.surface is not None:
            model = _SURFACES[self.surface]
            d = model.degree_of(self.divisor)
            if d != self.d:
                raise ValueError(
                    f"{self.label or self.divisor}: stored degree {self.d} != lattice degree {d}"
                )
            if self.g is not None:
                g = model.genus_of(self.divisor)
                if g != self.g:
                    raise ValueError(
                        f"{self.label or self.divisor}: stored genus {self.g} != lattice genus {g}"
                    )

    @property
    def dg(self) -> tuple[int, int | None]:
        return (self.d, self.g)

    def __str__(self) -> str:
        tag = f" {self.label}" if self.label else ""
        return f"({self.d},{self.g}){tag}"


# Proper transforms generating the four ACM families on the cubic surface:
# a line, a conic, a twisted cubic, and a plane cubic (the hyperplane class).
_CUBIC_BASE = {
    "i": DivisorClass.parse("0;0^5,-1"),
    "ii": DivisorClass.parse("1;1,0^5"),
    "iii": DivisorClass.parse("1;0^6"),
    "iv": DivisorClass.parse("3;1^6"),
}


@lru_cache(maxsize=None)
def cubic_surface_type(kind: str, a: int) -> CurveFamily:
    """The four families of smooth ACM curves on a nonsingular cubic
    surface, indexed by kind i..iv and a parameter a >= 1:

        i)   d = 3a - 2,  g = (3a^2 - 7a + 4) / 2
        ii)  d = 3a - 1,  g = (3a^2 - 5a + 2) / 2
        iii) d = 3a,      g = (3a^2 - 3a) / 2
        iv)  d = 3a,      g = (3a^2 - 3a + 2) / 2

    Each moves in a linear system of dimension d + g - 1 on the surface.
    Kind k at parameter a is kind k at a-1 raised by one height-1
    biliaison on the surface.
    """
    kind = kind.lower()
    if kind not in _CUBIC_BASE:
        raise ValueError(f"kind must be one of i, ii, iii, iv; got {kind!r}")
    if a < 1:
        raise DegreeTooSmall(f"need a >= 1, got {a}")
    if kind == "i":
        d, g = 3 * a - 2, (3 * a * a - 7 * a + 4) // 2
    elif kind == "ii":
        d, g = 3 * a - 1, (3 * a * a - 5 * a + 2) // 2
    elif kind == "iii":
        d, g = 3 * a, (3 * a * a - 3 * a) // 2
    else:
        d, g = 3 * a, (3 * a * a - 3 * a + 2) // 2
    model = _SURFACES["cubic"]
    divisor = _CUBIC_BASE[kind] + (a - 1) * model.H
    return CurveFamily(
        ambient="p3-cubic",
        d=d,
        g=g,
        linsys_dim=d + g - 1,
        divisor=divisor,
        surface="cubic",
        label=f"type {kind}",
    )


@lru_cache(maxsize=None)
def quadric_family(a: int, case: str) -> CurveFamily:
    """ACM curves on the nonsingular quadric: case i is the complete
    intersection of bidegree (a, a) with degree 2a, genus (a-1)^2, moving
    in dimension a^2 + 2a; case ii is bidegree (a, a+1) with degree
    2a + 1, genus a(a-1), dimension a^2 + 3a + 1."""
    case = case.lower()
    if case not in ("i", "ii"):
        raise ValueError(f"case must be i or ii, got {case!r}")
    if a < 1:
        raise DegreeTooSmall(f"need a >= 1, got {a}")
    if case == "i":
        d, g, dim = 2 * a, (a - 1) ** 2, a * a + 2 * a
        divisor = DivisorClass((a, a))
    else:
        d, g, dim = 2 * a + 1, a * (a - 1), a * a + 3 * a + 1
        divisor = DivisorClass((a, a + 1))
    return CurveFamily(
        ambient="p3-quadric",
        d=d,
        g=g,
        linsys_dim=dim,
        divisor=divisor,
        surface="quadric",
        label=f"bidegree {tuple(divisor.coeffs)}",
    )


def quadric_ruling_line() -> CurveFamily:
    """A line of one ruling of the quadric; it moves in a pencil."""
    return CurveFamily(
        ambient="p3-quadric",
        d=1,
        g=0,
        linsys_dim=1,
        divisor=DivisorClass((1, 0)),
        surface="quadric",
        label="ruling line",
    )


@lru_cache(maxsize=None)
def plane_curve_family(d: int) -> CurveFamily:
    """Plane curves of degree d: genus (d-1)(d-2)/2, moving in the
    complete linear system of dimension d(d+3)/2."""
    if d < 1:
        raise DegreeTooSmall(f"need d >= 1, got {d}")
    return CurveFamily(
        ambient="p2",
        d=d,
        g=(d - 1) * (d - 2) // 2,
        linsys_dim=d * (d + 3) // 2,
        label=f"plane curve of degree {d}",
    )


@dataclass(frozen=True)
class PerrinEntry:
    """Row of the general-points table: an ACM curve of type (d, g) in
    3-space passes through at most m general points."""

    d: int
    g: int
    m: int


_PERRIN_ROWS = (
    PerrinEntry(1, 0, 2),
    PerrinEntry(2, 0, 3),
    PerrinEntry(3, 0, 6),
    PerrinEntry(4, 1, 8),
    PerrinEntry(5, 2, 9),
    PerrinEntry(6, 3, 12),
    PerrinEntry(7, 5, 14),
    PerrinEntry(8, 7, 16),
    PerrinEntry(9, 9, 18),
    PerrinEntry(10, 11, 20),
)

_PERRIN_M = {(row.d, row.g): row.m for row in _PERRIN_ROWS}


def perrin_table() -> tuple[PerrinEntry, ...]:
    return _PERRIN_ROWS


def perrin_m(d: int, g: int) -> int:
    """Maximum number of general points of 3-space on an ACM (d, g)
    curve.  The naive value 2d holds except for the conic (plane bound 3)
    and the (5, 2) curve (quadric bound 9)."""
    try:
        return _PERRIN_M[(d, g)]
    except KeyError:
        raise NotInTable(f"({d},{g}) is not in the general-points table") from None


def p3_acm_family(d: int, g: int) -> CurveFamily:
    """Table row as a curve family (raises NotInTable off the table)."""
    perrin_m(d, g)
    return CurveFamily(ambient="p3", d=d, g=g, label=f"ACM ({d},{g})")


@dataclass(frozen=True)
class DescentEntry:
    """An ACM curve family in 4-space with its recorded biliaison descent:
    the class C sits on a named surface and C - height*H is a smaller
    well-understood curve."""

    family: CurveFamily
    height: int
    descent: DivisorClass
    descent_d: int
    descent_g: int
    descent_label: str


def _p4_family(surface_name: str, class_text: str, d: int, g: int, label: str) -> CurveFamily:
    return CurveFamily(
        ambient=f"p4-{surface_name}",
        d=d,
        g=g,
        divisor=DivisorClass.parse(class_text),
        surface=surface_name,
        label=label,
    )


def small_degree_descents() -> tuple[DescentEntry, ...]:
    """The descent catalog for general ACM curves of degree at most 9 in
    4-space (both (7,3) and both (8,5) cases recorded separately), with
    the degree-10 genus-6 entry handled by :func:`bordiga_ten_six`."""
    def entry(surface_name, class_text, d, g, label, height, descent_text,
              descent_d, descent_g, descent_label):
        return DescentEntry(
            family=_p4_family(surface_name, class_text, d, g, label),
            height=height,
            descent=DivisorClass.parse(descent_text),
            descent_d=descent_d,
            descent_g=descent_g,
            descent_label=descent_label,
        )

    return (
        entry("scroll", "2;0", 4, 0, "(4,0) rational normal curve",
              1, "0;-1", 1, 0, "line"),
        entry("scroll", "3;1", 5, 1, "(5,1) elliptic curve",
              1, "1;0", 2, 0, "conic"),
        entry("scroll", "4;2", 6, 2, "(6,2) curve",
              1, "2;1", 3, 0, "twisted cubic"),
        entry("delpezzo", "4;1^5", 7, 3, "(7,3) curve, finitely many trisecants",
              1, "1;0^5", 3, 0, "twisted cubic"),
        entry("scroll", "4;1", 7, 3, "(7,3) curve, infinitely many trisecants",
              2, "0;-1", 1, 0, "line"),
        entry("delpezzo", "5;2^2,1^3", 8, 4, "(8,4) curve",
              1, "2;1^2,0^3", 4, 0, "(4,0) curve"),
        entry("delpezzo", "6;2^5", 8, 5, "(8,5) canonical curve, not trigonal",
              1, "3;1^5", 4, 1, "elliptic quartic"),
        entry("scroll", "5;2", 8, 5, "(8,5) canonical curve, trigonal",
              2, "1;0", 2, 0, "conic"),
        entry("castelnuovo", "5;2,1^7", 9, 5, "(9,5) curve",
              1, "1;0^8", 4, 0, "(4,0) curve"),
        entry("delpezzo", "6;2^4,1", 9, 6, "(9,6) curve",
              2, "0;0^4,-1", 1, 0, "line"),
        entry("scroll", "6;3", 9, 7, "(9,7) curve of maximal genus",
              2, "2;1", 3, 0, "twisted cubic"),
    )


def small_degree_acm_pairs() -> tuple[tuple[int, int], ...]:
    """The nine admissible (d, g) pairs for integral nondegenerate ACM
    curves of degree at most 9 in 4-space.  The lower bounds come from
    the minimal-genus formula; the upper bounds are recorded data."""
    return ((4, 0), (5, 1), (6, 2), (7, 3), (8, 4), (8, 5), (9, 5), (9, 6), (9, 7))


_BORDIGA_TEN_SIX = tuple(
    DivisorClass.parse(text)
    for text in (
        "5;1^10",
        "6;2^4,1^6",
        "7;2^9,0",
        "7;3,2^6,1^3",
        "8;3^3,2^6,1",
        "8;4,2^9",
        "9;3^6,2^4",
        "10;3^10",
    )
)


def bordiga_ten_six() -> tuple[DivisorClass, ...]:
    """The eight divisor classes (up to point permutation) of (10, 6)
    curves on a general Bordiga surface, in ascending plane degree."""
    return _BORDIGA_TEN_SIX


def bordiga_eleven_seven() -> tuple[DivisorClass, ...]:
    """Representative classes of (11, 7) curves on a Bordiga surface.
    Any such class satisfies C.C = 23 - a where a is the plane degree,
    and a >= 6 is forced by the genus."""
    return tuple(
        DivisorClass.parse(text)
        for text in ("6;2^3,1^7", "7;2^8,1,0", "7;3,2^5,1^4", "8;3^3,2^5,1^2")
    )


def skew_plane_union(d: int) -> CurveFamily:
    """Minimal curve of degree d with one-dimensional Rao module in
    degree zero: a plane curve of degree d - 1 plus a skew line.  Only
    the degree accounting is recorded; the genus of a disconnected curve
    is out of scope here."""
    if d < 2:
        raise DegreeTooSmall(f"need d >= 2, got {d}")
    return CurveFamily(
        ambient="p4",
        d=d,
        g=None,
        label=f"plane curve of degree {d - 1} plus a skew line",
    )
