"""Closed-form distance spectra and determinant/inertia formulas.

Every function here evaluates a published formula directly, with exact
integer or quadratic-irrational values wherever the formula allows it; only
cycle spectra are float-valued (trigonometric).  The numeric eigensolver
never feeds into these, so the two sides stay independent for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb, cos, pi, sin

from .exact import Inertia
from .spectra import QuadraticNumber, Spectrum, Value


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """A Spectrum plus the name of the formula that produced it."""

    spectrum: Spectrum
    formula: str

    def __post_init__(self):
        if self.spectrum.dimension < 1:
            raise ValueError("empty spectrum")

    @property
    def order(self) -> int:
        return self.spectrum.dimension


def _comb0(a: int, b: int) -> int:
    """Binomial coefficient extended by zero outside 0 <= b <= a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


# ---------------------------------------------------------------------------
# spectra

def cycle_spectrum(n: int) -> ClosedFormSpectrum:
    """Distance spectrum of the cycle C_n.

    Odd n = 2p+1: (n^2-1)/4 once and -sec^2(pi j / n)/4 twice for j = 1..p.
    Even n = 2p: n^2/4 once, 0 with multiplicity p-1, -csc^2(pi(2j-1)/n)
    twice for j = 1..p/2, and a single extra -1 exactly when p is odd.
    """
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    pairs: list[tuple[Value, int]] = []
    if n % 2:
        p = (n - 1) // 2
        pairs.append(((n * n - 1) // 4, 1))
        for j in range(1, p + 1):
            pairs.append((-1.0 / (4.0 * cos(pi * j / n) ** 2), 2))
    else:
        p = n // 2
        pairs.append((n * n // 4, 1))
        pairs.append((0, p - 1))
        for j in range(1, p // 2 + 1):
            pairs.append((-1.0 / sin(pi * (2 * j - 1) / n) ** 2, 2))
        if p % 2:
            pairs.append((-1, 1))
    return ClosedFormSpectrum(Spectrum(pairs), f"cycle({n})")


def hamming_spectrum(d: int, n: int) -> ClosedFormSpectrum:
    """Distance spectrum of H(d, n): one eigenvalue d n^(d-1) (n-1), zeros,
    and -n^(d-1) with multiplicity d(n-1)."""
    if d < 1 or n < 2:
        raise ValueError("hamming spectrum needs d >= 1 and n >= 2")
    total = n ** d
    big = n ** (d - 1)
    pairs = [(d * big * (n - 1), 1),
             (0, total - d * (n - 1) - 1),
             (-big, d * (n - 1))]
    return ClosedFormSpectrum(Spectrum(pairs), f"hamming({d},{n})")


def shrikhande_power_spectrum(m: int) -> ClosedFormSpectrum:
    """Distance spectrum of the m-fold cartesian power of the Shrikhande graph."""
    if m < 1:
        raise ValueError("needs m >= 1")
    big = 4 ** (2 * m - 1)
    pairs = [(6 * m * big, 1), (0, 16 ** m - 6 * m - 1), (-big, 6 * m)]
    return ClosedFormSpectrum(Spectrum(pairs), f"shrikhande-power({m})")


def doob_spectrum(m: int, d: int) -> ClosedFormSpectrum:
    """Distance spectrum of the Doob graph D(m, d), order 4^(2m+d).

    Matches the Hamming pattern with exponent q = 2m+d: spectral radius
    3q 4^(q-1), eigenvalue -4^(q-1) with multiplicity 3q, zeros elsewhere.
    """
    if m < 1 or d < 0:
        raise ValueError("doob spectrum needs m >= 1 and d >= 0")
    q = 2 * m + d
    big = 4 ** (q - 1)
    pairs = [(3 * q * big, 1), (0, 4 ** q - 3 * q - 1), (-big, 3 * q)]
    return ClosedFormSpectrum(Spectrum(pairs), f"doob({m},{d})")


def s_value(n: int, r: int) -> int:
    """The sum over j of j C(r, j) C(n-r, j); spectral radius of D(J(n, r))."""
    if not 1 <= r <= n - 1:
        raise ValueError("needs 1 <= r <= n-1")
    return sum(j * comb(r, j) * _comb0(n - r, j) for j in range(r + 1))


def johnson_spectrum(n: int, r: int) -> ClosedFormSpectrum:
    """Distance spectrum of J(n, r): s(n, r) once, -s(n, r)/(n-1) with
    multiplicity n-1, zeros elsewhere."""
    s = s_value(n, r)
    pairs = [(s, 1),
             (0, comb(n, r) - n),
             (Fraction(-s, n - 1), n - 1)]
    return ClosedFormSpectrum(Spectrum(pairs), f"johnson({n},{r})")


def eberlein(i: int, j: int, n: int, r: int) -> int:
    """Eberlein polynomial value p_i(j) for the Johnson scheme on r-subsets."""
    if not (0 <= i <= r and 0 <= j <= r):
        raise ValueError("needs 0 <= i, j <= r")
    return sum((-1) ** t * comb(j, t) * _comb0(r - j, i - t) * _comb0(n - r - j, i - t)
               for t in range(j + 1))


def kneser_f(i: int, n: int, r: int) -> int:
    """Distance in K(n, r) between r-sets whose intersection has size r-i."""
    if n <= 2 * r:
        raise ValueError("kneser distance needs n > 2r")
    if not 0 <= i <= r:
        raise ValueError("needs 0 <= i <= r")
    gap = n - 2 * r
    return min(2 * ceil(i / gap), 2 * ceil((r - i) / gap) + 1)


def kneser_multiplicity(j: int, n: int) -> int:
    """Dimension of the j-th common eigenspace of the Johnson scheme."""
    if j < 0 or n < 2 * j - 1:
        raise ValueError("eigenspace index out of range")
    m = Fraction(n - 2 * j + 1, n - j + 1) * comb(n, j)
    if m.denominator != 1:
        raise AssertionError("eigenspace dimension must be integral")
    return int(m)


def kneser_spectrum(n: int, r: int) -> ClosedFormSpectrum:
    """Distance spectrum of K(n, r) for n > 2r.

    Eigenvalue on the j-th eigenspace is the f-weighted sum of Eberlein
    values; equal eigenvalues across eigenspaces merge with added
    multiplicities.
    """
    if not 1 <= r <= n - 1:
        raise ValueError("needs 1 <= r <= n-1")
    if n <= 2 * r:
        raise ValueError("kneser spectrum needs n > 2r (connected case)")
    pairs = []
    for j in range(r + 1):
        theta = sum(kneser_f(i, n, r) * eberlein(i, j, n, r) for i in range(r + 1))
        pairs.append((theta, kneser_multiplicity(j, n)))
    return ClosedFormSpectrum(Spectrum(pairs), f"kneser({n},{r})")


def double_odd_spectrum(r: int) -> ClosedFormSpectrum:
    """Distance spectrum of the double odd graph DO(r), order 2 C(2r+1, r)."""
    if r < 2:
        raise ValueError("needs r >= 2")
    c = comb(2 * r + 1, r)
    s = s_value(2 * r + 1, r)
    pairs = [((2 * r + 1) * c, 1),
             (0, 2 * c - 2 * r - 2),
             (Fraction(-2 * s, r), 2 * r),
             (4 * s - (2 * r + 1) * c, 1)]
    return ClosedFormSpectrum(Spectrum(pairs), f"double-odd({r})")


def halved_cube_spectrum(d: int) -> ClosedFormSpectrum:
    """Distance spectrum of the halved cube on even-weight words, d >= 4.

    The formula pattern starts at d = 4; smaller halved cubes are complete
    graphs better served by the numeric route, so they are rejected here.
    """
    if d < 4:
        raise ValueError("halved cube closed form needs d >= 4; use the numeric route below that")
    big = 2 ** (d - 3)
    pairs = [(d * big, 1), (0, 2 ** (d - 1) - d - 1), (-big, d)]
    return ClosedFormSpectrum(Spectrum(pairs), f"halved-cube({d})")


def cocktail_party_spectrum(m: int) -> ClosedFormSpectrum:
    """Distance spectrum of CP(m) = K_{2m} minus a perfect matching, m >= 2."""
    if m < 2:
        raise ValueError("needs m >= 2 (CP(1) is disconnected)")
    pairs = [(2 * m, 1), (0, m - 1), (-2, m)]
    return ClosedFormSpectrum(Spectrum(pairs), f"cocktail-party({m})")


def complete_spectrum(n: int) -> ClosedFormSpectrum:
    if n < 2:
        raise ValueError("needs n >= 2")
    return ClosedFormSpectrum(Spectrum([(n - 1, 1), (-1, n - 1)]), f"complete({n})")


def petersen_spectrum() -> ClosedFormSpectrum:
    return ClosedFormSpectrum(kneser_spectrum(5, 2).spectrum, "petersen")


def icosahedron_spectrum() -> ClosedFormSpectrum:
    pairs = [(18, 1), (0, 5),
             (QuadraticNumber(-3, 1, 5), 3),
             (QuadraticNumber(-3, -1, 5), 3)]
    return ClosedFormSpectrum(Spectrum(pairs), "icosahedron")


def dodecahedron_spectrum() -> ClosedFormSpectrum:
    pairs = [(50, 1), (0, 9),
             (QuadraticNumber(-7, 3, 5), 3),
             (-2, 4),
             (QuadraticNumber(-7, -3, 5), 3)]
    return ClosedFormSpectrum(Spectrum(pairs), "dodecahedron")


def order9_target_spectrum() -> ClosedFormSpectrum:
    """Validation target for the known order-9 transmission-regular graph of
    degree set {3, 4}: {14, ((-5+sqrt(33))/2)^2, (-1)^4, ((-5-sqrt(33))/2)^2}.

    No generator is provided; compare a candidate graph's numeric spectrum
    against this constant.
    """
    h = Fraction(1, 2)
    pairs = [(14, 1),
             (QuadraticNumber(-5 * h, h, 33), 2),
             (-1, 4),
             (QuadraticNumber(-5 * h, -h, 33), 2)]
    return ClosedFormSpectrum(Spectrum(pairs), "order9-target")


# ---------------------------------------------------------------------------
# composition rules

def _split_radius(spec: Spectrum) -> tuple[Value, list[tuple[Value, int]]]:
    (top, mult), rest = spec.entries[0], list(spec.entries[1:])
    if mult > 1:
        rest.insert(0, (top, mult - 1))
    return top, rest


def product_spectrum(g_spec: Spectrum, h_spec: Spectrum) -> ClosedFormSpectrum:
    """Distance spectrum of a cartesian product of transmission-regular graphs.

    With orders n, n' and radii rho, rho': the product has n' rho + n rho'
    once, n' theta for each remaining theta of the first factor, n theta' for
    each remaining theta' of the second, and 0 with multiplicity
    (n-1)(n'-1).  Callers must ensure both factors are transmission regular.
    """
    ng, nh = g_spec.dimension, h_spec.dimension
    rho_g, rest_g = _split_radius(g_spec)
    rho_h, rest_h = _split_radius(h_spec)
    pairs: list[tuple[Value, int]] = [(nh * rho_g + ng * rho_h, 1)]
    pairs.extend((nh * v, m) for v, m in rest_g)
    pairs.extend((ng * v, m) for v, m in rest_h)
    pairs.append((0, (ng - 1) * (nh - 1)))
    return ClosedFormSpectrum(Spectrum(pairs), "cartesian-product")


def block_lemma_spectrum(d_spec: Spectrum,
                         even: tuple[Value, Value, Value],
                         odd: tuple[Value, Value, Value]) -> ClosedFormSpectrum:
    """Spectrum of [[A, B], [B, A]] with A = a_e D + b_e J + c_e I and
    B = a_o D + b_o J + c_o I, for D transmission regular with spectrum d_spec.

    The two eigenvalue groups come from the sum and difference blocks: for
    each sign, (a_e +- a_o) rho + (b_e +- b_o) n + (c_e +- c_o) once and
    (a_e +- a_o) theta + (c_e +- c_o) for every remaining theta.
    """
    n = d_spec.dimension
    rho, rest = _split_radius(d_spec)
    ae, be, ce = even
    ao, bo, co = odd
    pairs: list[tuple[Value, int]] = []
    for sign in (1, -1):
        a = ae + sign * ao
        b = be + sign * bo
        c = ce + sign * co
        pairs.append((a * rho + b * n + c, 1))
        pairs.extend((a * v + c, m) for v, m in rest)
    return ClosedFormSpectrum(Spectrum(pairs), "two-block")


# ---------------------------------------------------------------------------
# determinants and inertia

def barbell_determinant(k: int, m: int, length: int) -> int:
    """det D for the generalized barbell B(k; m; length)."""
    if k < 2 or m < 2 or length < 0:
        raise ValueError("needs k, m >= 2 and length >= 0")
    return (-1) ** (k + m + length - 1) * 2 ** length * (
        k * m * (length + 5) - 2 * (k + m))


def barbell_inertia(k: int, m: int, length: int) -> Inertia:
    """Inertia of D for the generalized barbell: one positive, no zeros."""
    if k < 2 or m < 2 or length < 0:
        raise ValueError("needs k, m >= 2 and length >= 0")
    return Inertia(1, 0, k + m + length - 1)


def lollipop_determinant(k: int, length: int) -> int:
    """det D for the lollipop L(k, length); length = 0 is the bare clique."""
    if k < 2 or length < 0:
        raise ValueError("needs k >= 2 and length >= 0")
    if length == 0:
        return (-1) ** (k - 1) * (k - 1)
    return (-1) ** (k + length - 1) * 2 ** (length - 1) * (k * (length + 2) - 2)


def lollipop_inertia(k: int, length: int) -> Inertia:
    if k < 2 or length < 0:
        raise ValueError("needs k >= 2 and length >= 0")
    return Inertia(1, 0, k + length - 1)


def tree_determinant(n: int) -> int:
    """det D for any tree on n vertices; depends only on the order."""
    if n < 2:
        raise ValueError("needs n >= 2")
    return (-1) ** (n - 1) * (n - 1) * 2 ** (n - 2)


def tree_inertia(n: int) -> Inertia:
    if n < 2:
        raise ValueError("needs n >= 2")
    return Inertia(1, 0, n - 1)


# ---------------------------------------------------------------------------
# summation identities

def lemma_identity(selector: int, *, s: int | None = None, d: int | None = None,
                   a: int | None = None, b: int | None = None) -> tuple[int, int]:
    """Evaluate both sides of one of six binomial summation identities.

    Returns (summation side, closed-form side) as exact integers.  Ranges:
    (1) s >= 1, (2) s >= 2, (3) and (4) d >= 2, (5) d >= 3, (6) a >= 2 and
    b >= 0.  Identity (5) genuinely fails at d = 2 (sum 4 against 3), so
    that value is rejected rather than reported as a mismatch.
    """
    if selector == 1:
        if s is None or s < 1:
            raise ValueError("identity 1 needs s >= 1")
        return sum((-1) ** k * comb(s, k) for k in range(s + 1)), 0
    if selector == 2:
        if s is None or s < 2:
            raise ValueError("identity 2 needs s >= 2")
        return sum((-1) ** k * k * comb(s, k) for k in range(s + 1)), 0
    if selector == 3:
        if d is None or d < 2:
            raise ValueError("identity 3 needs d >= 2")
        lhs = sum(2 * i * comb(d, 2 * i) for i in range(d // 2 + 1))
        return lhs, d * 2 ** (d - 2)
    if selector == 4:
        if d is None or d < 2:
            raise ValueError("identity 4 needs d >= 2")
        lhs = sum((2 * i + 1) * _comb0(d, 2 * i + 1) for i in range((d - 1) // 2 + 1))
        return lhs, d * 2 ** (d - 2)
    if selector == 5:
        if d is None or d < 3:
            raise ValueError("identity 5 needs d >= 3")
        lhs = sum((2 * i) ** 2 * comb(d, 2 * i) for i in range(d // 2 + 1))
        return lhs, d * (d + 1) * 2 ** (d - 3)
    if selector == 6:
        if a is None or b is None or a < 2 or b < 0:
            raise ValueError("identity 6 needs a >= 2 and b >= 0")
        lo = ceil(b / 2)
        hi = (a + b) // 2
        lhs = sum(i * _comb0(a, 2 * i - b) for i in range(lo, hi + 1))
        rhs = Fraction(a + 2 * b, 8) * 2 ** a
        if rhs.denominator != 1:
            raise AssertionError("identity 6 right side must be integral")
        return lhs, int(rhs)
    raise ValueError(f"unknown identity selector {selector}")
