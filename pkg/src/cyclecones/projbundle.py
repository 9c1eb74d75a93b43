"""Cycle cones on a projective bundle over a smooth curve.

The whole model is driven by the numerical data of the bundle's
semistable filtration: an ordered list of (rank, degree) pieces with
strictly increasing slopes.  Every cone of k-dimensional classes is
two-dimensional, spanned by powers of the relative hyperplane class and
the fiber class, and the three cone constants are read off a slope
polygon.  Decompositions are available in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cones import PolyCone, contains
from .decomposition import Certificate, Decomposition
from .errors import DomainError, InputError
from .rationals import rat_str
from .vectors import ClassVector, dual_basis, register_basis


@dataclass(frozen=True)
class HNProfile:
    """Numerical slope data: ordered (rank, degree) pieces.

    Slopes degree/rank must strictly increase along the list; that is the
    ordering under which the slope polygon below is convex.
    """

    pieces: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pieces = tuple((int(r), int(d)) for r, d in self.pieces)
        object.__setattr__(self, "pieces", pieces)
        if not pieces:
            raise InputError("profile needs at least one (rank, degree) piece")
        for r, _ in pieces:
            if r < 1:
                raise InputError("ranks must be positive integers")
        slopes = self.slopes
        for a, b in zip(slopes, slopes[1:]):
            if a >= b:
                raise InputError(
                    "slopes must strictly increase: "
                    + ", ".join(rat_str(s) for s in slopes)
                )

    @staticmethod
    def parse(text: str) -> "HNProfile":
        """Parse the CLI syntax ``"r:d,r:d,..."``, e.g. ``"2:0,2:2"``."""
        pieces = []
        for chunk in text.split(","):
            try:
                r, d = chunk.split(":")
                pieces.append((int(r), int(d)))
            except ValueError as exc:
                raise InputError(f"bad profile piece {chunk!r}") from exc
        return HNProfile(tuple(pieces))

    @property
    def rank(self) -> int:
        return sum(r for r, _ in self.pieces)

    @property
    def degree(self) -> int:
        return sum(d for _, d in self.pieces)

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, r) for r, d in self.pieces)

    @property
    def top_slope(self) -> Fraction:
        return self.slopes[-1]

    def text(self) -> str:
        return ",".join(f"{r}:{d}" for r, d in self.pieces)

    def polygon_breakpoints(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """Vertices of the slope polygon from (0, -degree) to (rank, 0)."""
        x, y = Fraction(0), Fraction(-self.degree)
        points = [(x, y)]
        for r, d in self.pieces:
            x, y = x + r, y + d
            points.append((x, y))
        return tuple(points)


def class_basis(profile: HNProfile, k: int) -> str:
    """Basis name for k-dimensional classes: coordinates (x, y) meaning
    x*xi^(n-k) + y*xi^(n-k-1)f."""
    name = f"pb[{profile.text()}].N{k}"
    register_basis(name, 2, dual=f"pb[{profile.text()}].N{k}*")
    return name


def _check_k(profile: HNProfile, k: int, low: int, high: int) -> None:
    if not (low <= k <= high):
        raise InputError(
            f"k={k} outside the valid range {low}..{high} for rank "
            f"{profile.rank}"
        )


def epsilon(profile: HNProfile, k: int) -> Fraction:
    """Height of the slope polygon over x = k.

    The polygon starts at (0, -degree), glues segments of horizontal
    length rank_i and slope slope_i in increasing order, and ends at
    (rank, 0).
    """
    _check_k(profile, k, 0, profile.rank)
    x = Fraction(0)
    y = Fraction(-profile.degree)
    for (r, _), slope in zip(profile.pieces, profile.slopes):
        if k <= x + r:
            return y + (Fraction(k) - x) * slope
        x += r
        y += r * slope
    return y  # k == rank: polygon ends at height 0


def nu(profile: HNProfile, k: int) -> Fraction:
    """Boundary constant of the nef cone in dimension k."""
    _check_k(profile, k, 1, profile.rank - 1)
    return -profile.degree - epsilon(profile, profile.rank - k)


def sigma(profile: HNProfile, k: int) -> Fraction:
    """Boundary constant of the movable cone in dimension k."""
    _check_k(profile, k, 1, profile.rank - 1)
    value = epsilon(profile, k - 1) + profile.top_slope
    assert value >= epsilon(profile, k)
    return value


def cones_at(profile: HNProfile, k: int):
    """(eff, nef, mov) cones of k-dimensional classes, each 2D.

    eff = <(1, eps_k), (0, 1)>, nef = <(1, nu_k), (0, 1)>,
    mov = <(1, sigma_k), (0, 1)>; the nesting nef <= mov <= eff is
    verified before returning.
    """
    _check_k(profile, k, 1, profile.rank - 1)
    basis = class_basis(profile, k)
    eps, nu_k, sig = epsilon(profile, k), nu(profile, k), sigma(profile, k)
    if not (nu_k >= sig >= eps):
        raise DomainError(
            "cone constants out of order",
            epsilon=rat_str(eps),
            sigma=rat_str(sig),
            nu=rat_str(nu_k),
        )
    eff = PolyCone.from_generators(basis, [(1, eps), (0, 1)])
    nef = PolyCone.from_generators(basis, [(1, nu_k), (0, 1)])
    mov = PolyCone.from_generators(basis, [(1, sig), (0, 1)])
    return eff, nef, mov


def cone_coincidence(profile: HNProfile, k: int):
    """Flags (mov == eff, nef == eff) in dimension k, verified two ways.

    Movable equals effective exactly when k exceeds rank minus the last
    piece's rank.  Nef equals effective exactly for a single-piece profile:
    convexity of the slope polygon gives eps_k + eps_(n-k) < -degree as
    soon as there are two distinct slopes, so the nef and effective
    boundary constants can never meet in any dimension.  Both closed forms
    are independently confirmed against the computed cone constants.
    """
    _check_k(profile, k, 1, profile.rank - 1)
    mov_eq_eff = profile.rank - profile.pieces[-1][0] < k
    nef_eq_eff = len(profile.pieces) == 1
    if mov_eq_eff != (sigma(profile, k) == epsilon(profile, k)):
        raise DomainError("movable/effective coincidence flags disagree")
    if nef_eq_eff != (nu(profile, k) == epsilon(profile, k)):
        raise DomainError("nef/effective coincidence flags disagree")
    return mov_eq_eff, nef_eq_eff


def pair_classes(profile: HNProfile, k: int, a: ClassVector, b: ClassVector) -> Fraction:
    """Intersection number of classes in complementary dimensions k, n-k.

    With a = (x, y) and b = (x', y'): x*x'*degree + x*y' + x'*y, from the
    three monomial relations of the bundle.
    """
    n = profile.rank
    if a.basis != class_basis(profile, k) or b.basis != class_basis(profile, n - k):
        raise InputError("classes must live in complementary dimensions")
    (x, y), (xp, yp) = a.coords, b.coords
    return x * xp * profile.degree + x * yp + xp * y


def eff_coordinates(profile: HNProfile, k: int, v: ClassVector) -> tuple[Fraction, Fraction]:
    """Coordinates (a, b) of v against the eff generators (1, eps_k), (0, 1)."""
    x, y = v.coords
    return x, y - x * epsilon(profile, k)


def degree_functional(profile: HNProfile, k: int) -> ClassVector:
    """Default objective: pairing with the sum of the two complementary-
    dimension nef generators (1, nu_{n-k}) + (0, 1).

    As a functional on (x, y) this is x*(1 - eps_k) ... concretely
    (d + nu_{n-k} + 1, 1); it is strictly positive on both eff extremal
    rays, which a single nef generator is not.
    """
    n = profile.rank
    nu_comp = nu(profile, n - k)
    basis = class_basis(profile, k)
    return ClassVector(
        dual_basis(basis), (profile.degree + nu_comp + 1, Fraction(1))
    )


def zariski_decompose(profile: HNProfile, k: int, alpha: ClassVector) -> Decomposition:
    """Closed-form decomposition of a pseudo-effective class.

    Writing alpha = a*(1, eps_k) + b*(0, 1) with a, b >= 0: if
    b >= a*(sigma_k - eps_k) the class is movable and is its own positive
    part; otherwise the positive part is the multiple of the movable
    boundary ray (1, sigma_k) with coefficient b/(sigma_k - eps_k) and the
    negative part is the leftover multiple of the effective boundary ray
    (1, eps_k).
    """
    basis = class_basis(profile, k)
    if alpha.basis != basis:
        raise InputError(f"class must be given in basis {basis!r}")
    eff, _, mov = cones_at(profile, k)
    a, b = eff_coordinates(profile, k, alpha)
    if a < 0 or b < 0:
        verdict = contains(eff, alpha)
        raise DomainError(
            "class is not pseudo-effective",
            separating_functional=[rat_str(c) for c in verdict.separating.coords],
        )
    eps, sig = epsilon(profile, k), sigma(profile, k)
    gap = sig - eps
    if b >= a * gap:
        positive, negative = alpha, ClassVector(basis, (0, 0))
        negative_multiple = Fraction(0)
    else:
        positive = ClassVector(basis, (1, sig)).scale(b / gap)
        negative_multiple = (a * gap - b) / gap
        negative = ClassVector(basis, (1, eps)).scale(negative_multiple)
    assert (positive + negative).coords == alpha.coords
    certificates = (
        Certificate(
            "positive-part-movable",
            {"combination": _combination(mov, positive)},
        ),
        Certificate(
            "negative-part-on-effective-boundary-ray",
            {
                "ray": [rat_str(Fraction(1)), rat_str(eps)],
                "multiple": rat_str(negative_multiple),
            },
        ),
    )
    return Decomposition(
        input=alpha,
        positive=positive,
        negative=negative,
        certificates=certificates,
        metadata={
            "method": "closed-form",
            "eff_coordinates": [rat_str(a), rat_str(b)],
            "constants": {
                "epsilon": rat_str(eps),
                "sigma": rat_str(sig),
                "nu": rat_str(nu(profile, k)),
            },
        },
    )


def _combination(cone: PolyCone, v: ClassVector) -> list[str]:
    verdict = contains(cone, v)
    if not verdict:
        raise DomainError("expected member produced a separation certificate")
    return [rat_str(c) for c in verdict.combination]


def constants_table(profile: HNProfile) -> dict:
    """JSON-ready table of the polygon and all cone constants."""
    n = profile.rank
    return {
        "profile": profile.text(),
        "rank": n,
        "degree": profile.degree,
        "slopes": [rat_str(s) for s in profile.slopes],
        "polygon": [
            [rat_str(x), rat_str(y)] for x, y in profile.polygon_breakpoints()
        ],
        "epsilon": {str(k): rat_str(epsilon(profile, k)) for k in range(n + 1)},
        "nu": {str(k): rat_str(nu(profile, k)) for k in range(1, n)},
        "sigma": {str(k): rat_str(sigma(profile, k)) for k in range(1, n)},
    }
