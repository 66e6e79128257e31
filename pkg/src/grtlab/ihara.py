"""Stable derivation algebra of the free Lie algebra on x, y.

A homogeneous Lie polynomial f(x, y) of degree n >= 2 belongs to the
stable subspace D_n when it satisfies four exact linear conditions, with
z := -x - y throughout:

* special: [y, f] = [z, u] for some u (the witness u is unique in
  degree >= 2 because ad z is injective there);
* 2-cycle: f(x, y) + f(y, x) = 0;
* 3-cycle: f(x, y) + f(y, z) + f(z, x) = 0;
* 5-cycle: the five-term cyclic sum of f evaluated at consecutive chord
  generators of the five-strand sphere braid Lie algebra vanishes.

The sphere braid algebra in question is modelled concretely as a
semidirect product F(a1, a2, a3) x| F(x, y): the fiber letters are the
chords meeting the fifth strand, and x, y act by the chord relations
(see ``_ACT_IM``).  Every chord x_{ij} is an explicit element of this
model, so the 5-cycle sum is a finite exact computation.

Each f in D_n determines the derivation D_f with D_f(x) = 0 and
D_f(y) = [y, f]; the space of all D_f closes under the bracket

    <f, g> = D_f(g) - D_g(f) + [f, g],

which is the bracket implemented by :func:`ihara_bracket`.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Mapping, Sequence

from .derivations import X, XY, Y, Derivation
from .errors import (DegenerateLeadingTermError, InhomogeneousError,
                     NotOneDimensionalError, SpecialConditionError)
from .lie import (LieElement, _basis_bracket, _merge_scaled, bracket,
                  from_coordinates, lie_to_string, substitute)
from .linalg import kernel_basis, kernel_dim_mod, reduced_echelon
from .motivic import image_model_dims
from .words import _lyndon_tuples, _std_factorization

Z = LieElement(XY, {(0,): -1, (1,): -1})

#: Default cap on the degree of stable-space computations offered by the
#: command line.  Everything through here runs in seconds to a couple of
#: minutes; the cost of the 5-cycle rows grows quickly past it.
DEFAULT_MAX_DEGREE = 12
HARD_MAX_DEGREE = 16


# ---------------------------------------------------------------------
# 5-cycle evaluation in the semidirect model of the sphere braid algebra.
#
# Elements of the model are pairs (fiber, base) of raw coefficient dicts
# {word tuple: int}, fiber over the letters a1, a2, a3 (indices 0, 1, 2)
# and base over x, y.  All caches below are global on purpose: the
# evaluation of a basis word at a fixed argument pair does not depend on
# the element being tested, so rows are shared across degrees and calls.
# ---------------------------------------------------------------------

def _braw(t1: Mapping, t2: Mapping) -> dict:
    """Bracket of two raw coefficient dicts, in the Lyndon basis."""
    acc: dict = {}
    for u, cu in t1.items():
        for v, cv in t2.items():
            c = cu * cv
            for w, n in _basis_bracket(u, v):
                new = acc.get(w, 0) + c * n
                if new:
                    acc[w] = new
                else:
                    del acc[w]
    return acc


_A1 = {(0,): 1}
_A2 = {(1,): 1}
_A3 = {(2,): 1}

# Images of the fiber letters under the action of the base letters: x
# moves the chord a1 a2 pair, y the a2 a3 pair, matching the relations
# among chords of five points on a sphere.
_ACT_IM = {
    (0,): (_braw(_A1, _A2), _braw(_A2, _A1), {}),
    (1,): ({}, _braw(_A2, _A3), _braw(_A3, _A2)),
}

_ACT_ON_WORD: dict = {}


def _act_im(w):
    """Images of a1, a2, a3 under the action of the base word w."""
    im = _ACT_IM.get(w)
    if im is None:
        u, v = _std_factorization(w)
        imv, imu = _act_im(v), _act_im(u)
        im = tuple(_sub(_act_apply(u, imv[i]), _act_apply(v, imu[i]))
                   for i in range(3))
        _ACT_IM[w] = im
    return im


def _sub(d1: Mapping, d2: Mapping) -> dict:
    acc = dict(d1)
    _merge_scaled(acc, d2, -1)
    return acc


def _act_on_word(w, v) -> dict:
    """Action of the base basis word w on the fiber basis word v."""
    key = (w, v)
    r = _ACT_ON_WORD.get(key)
    if r is None:
        if len(v) == 1:
            r = _act_im(w)[v[0]]
        else:
            u2, v2 = _std_factorization(v)
            r = _braw(_act_on_word(w, u2), {v2: 1})
            _merge_scaled(r, _braw({u2: 1}, _act_on_word(w, v2)), 1)
        _ACT_ON_WORD[key] = r
    return r


def _act_apply(w, fiber: Mapping) -> dict:
    acc: dict = {}
    for v, cv in fiber.items():
        _merge_scaled(acc, _act_on_word(w, v), cv)
    return acc


def _act_dense(base: Mapping, fiber: Mapping) -> dict:
    acc: dict = {}
    for w, cw in base.items():
        for v, cv in fiber.items():
            _merge_scaled(acc, _act_on_word(w, v), cw * cv)
    return acc


def _sd_bracket(e1, e2):
    """Bracket in the semidirect product, on (fiber, base) dict pairs."""
    (fa, pa), (fb, pb) = e1, e2
    fib = _braw(fa, fb)
    if pa and fb:
        _merge_scaled(fib, _act_dense(pa, fb), 1)
    if pb and fa:
        _merge_scaled(fib, _act_dense(pb, fa), -1)
    return fib, _braw(pa, pb)


# Consecutive chords x_{12}, x_{23}, x_{34}, x_{45}, x_{51} written in the
# semidirect model; the 5-cycle condition sums f over consecutive pairs.
_CHORDS = [
    ({}, {(0,): 1}),
    ({}, {(1,): 1}),
    ({(0,): 1, (1,): 1}, {(0,): 1}),
    ({(0,): -1, (1,): -1, (2,): -1}, {}),
    ({(0,): 1}, {}),
]
_PAIR_ARGS = [(_CHORDS[i], _CHORDS[(i + 1) % 5]) for i in range(5)]
_EVAL_CACHE: list[dict] = [{} for _ in range(5)]


def _eval_word(p: int, w):
    """Standard bracketing of w evaluated at the p-th consecutive pair."""
    cache = _EVAL_CACHE[p]
    r = cache.get(w)
    if r is None:
        if len(w) == 1:
            r = _PAIR_ARGS[p][w[0]]
        else:
            u, v = _std_factorization(w)
            r = _sd_bracket(_eval_word(p, u), _eval_word(p, v))
        cache[w] = r
    return r


@functools.lru_cache(maxsize=None)
def _pentagon_rows(n: int):
    """For each Lyndon word of degree n, the 5-cycle sum of its standard
    bracketing, as a (fiber dict, base dict) pair of raw coefficient
    dicts.  The base part equals f + f(y, x) termwise, so it vanishes on
    anything satisfying the 2-cycle condition."""
    rows = {}
    for w in _lyndon_tuples((1, 1), n):
        fib: dict = {}
        base: dict = {}
        for p in range(5):
            fw, bw = _eval_word(p, w)
            _merge_scaled(fib, fw, 1)
            _merge_scaled(base, bw, 1)
        rows[w] = (fib, base)
    return rows


# ---------------------------------------------------------------------
# The stable space itself.
# ---------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _special_pair_matrix(n: int):
    """Integer matrix whose kernel is {(f, u) : [y, f] = [z, u]} in the
    coordinates (f over the degree-n Lyndon basis, then u likewise)."""
    basis = _lyndon_tuples((1, 1), n)
    cols = []
    for w in basis:
        sw = LieElement(XY, {w: 1})
        cols.append(bracket(Y, sw).coordinates(n + 1))
    for w in basis:
        sw = LieElement(XY, {w: 1})
        cols.append([-c for c in bracket(Z, sw).coordinates(n + 1)])
    return [list(row) for row in zip(*cols)]


def _symmetry_rows(f: LieElement, n: int) -> list:
    """Coordinates of the 2-cycle and 3-cycle defects of f."""
    tau = f + substitute(f, (Y, X))
    cyc = f + substitute(f, (Y, Z)) + substitute(f, (Z, X))
    return tau.coordinates(n) + cyc.coordinates(n)


@functools.lru_cache(maxsize=None)
def _hex_pairs(n: int) -> tuple:
    """Basis of {(f, u)} satisfying special, 2-cycle and 3-cycle, before
    the 5-cycle cut.  Entries are (f, u) LieElement pairs."""
    ker = kernel_basis(_special_pair_matrix(n))
    d = len(_lyndon_tuples((1, 1), n))
    pairs = [(from_coordinates(XY, n, v[:d]), from_coordinates(XY, n, v[d:]))
             for v in ker]
    if not pairs:
        return ()
    cond = [_symmetry_rows(f, n) for f, _ in pairs]
    combos = kernel_basis([list(col) for col in zip(*cond)])
    out = []
    for t in combos:
        f = LieElement.zero(XY)
        u = LieElement.zero(XY)
        for ti, (fi, ui) in zip(t, pairs):
            f = f + fi.scale(ti)
            u = u + ui.scale(ti)
        out.append((f, u))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _stable_pairs(n: int) -> tuple:
    """Canonical basis of {(f, u) : f in D_n}, cut out of the hex space
    by the 5-cycle rows and put in reduced echelon form over the
    f-coordinates."""
    if n < 2:
        return ()
    hexes = _hex_pairs(n)
    if not hexes:
        return ()
    rows = _pentagon_rows(n)
    fiber_basis = _lyndon_tuples((1, 1, 1), n)
    cols = []
    for f, _ in hexes:
        fib: dict = {}
        base: dict = {}
        for w, c in f.terms.items():
            rf, rb = rows[w]
            _merge_scaled(fib, rf, c)
            _merge_scaled(base, rb, c)
        if base:
            raise AssertionError(
                "5-cycle base component failed to cancel on a 2-cycle "
                "symmetric element")
        cols.append([fib.get(v, 0) for v in fiber_basis])
    combos = kernel_basis([list(row) for row in zip(*cols)])
    if not combos:
        return ()
    d = len(_lyndon_tuples((1, 1), n))
    raw = []
    for t in combos:
        f = LieElement.zero(XY)
        u = LieElement.zero(XY)
        for ti, (fi, ui) in zip(t, hexes):
            f = f + fi.scale(ti)
            u = u + ui.scale(ti)
        raw.append((f, u))
    # Canonical form: reduced echelon over the f-coordinates, with the u
    # witnesses transformed alongside.
    fm = [f.coordinates(n) + u.coordinates(n) for f, u in raw]
    ech = reduced_echelon(fm)
    return tuple(
        (from_coordinates(XY, n, row[:d]), from_coordinates(XY, n, row[d:]))
        for row in ech)


def special_basis(n: int) -> list[LieElement]:
    """Canonical basis of the stable space D_n (reduced echelon form,
    primitive integer coordinate vectors)."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    return [LieElement(XY, dict(f.terms)) for f, _ in _stable_pairs(n)]


def special_dim(n: int) -> int:
    """dim D_n."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    return len(_stable_pairs(n))


def special_witness(f: LieElement) -> LieElement:
    """The unique u with [y, f] = [z, u], given f special of degree >= 2."""
    n = f.homogeneous_degree()
    if n is None or n < 2:
        raise SpecialConditionError("witness is defined in degree >= 2")
    basis = _lyndon_tuples((1, 1), n)
    target = bracket(Y, f).coordinates(n + 1)
    cols = []
    for w in basis:
        sw = LieElement(XY, {w: 1})
        cols.append(bracket(Z, sw).coordinates(n + 1))
    cols.append([-t for t in target])
    aug = [list(row) for row in zip(*cols)]
    # Solve [z, u] = [y, f] by joining the target as an extra column and
    # reading the kernel; the witness exists iff some kernel vector has a
    # nonzero last coordinate.
    for v in kernel_basis(aug):
        if v[-1]:
            scale = v[-1]
            return from_coordinates(
                XY, n, [Fraction(c, scale) for c in v[:-1]])
    raise SpecialConditionError("[y, f] is not of the form [z, u]")


def is_stable(f: LieElement, check_five_cycle: bool = True) -> bool:
    """Whether f satisfies the defining conditions of the stable space.

    The 5-cycle check prices in the cost of the sphere braid evaluation;
    pass ``check_five_cycle=False`` for the cheap necessary conditions
    only.
    """
    n = f.homogeneous_degree()
    if n is None:
        return not f.terms
    if n < 2:
        return False
    try:
        special_witness(f)
    except SpecialConditionError:
        return False
    if any(_symmetry_rows(f, n)):
        return False
    if check_five_cycle:
        rows = _pentagon_rows(n)
        fib: dict = {}
        base: dict = {}
        for w, c in f.terms.items():
            rf, rb = rows[w]
            _merge_scaled(fib, rf, c)
            _merge_scaled(base, rb, c)
        if fib or base:
            return False
    return True


def _stacked_condition_matrix(n: int):
    """All four condition blocks as one integer matrix over (f, u)
    coordinates.  Its kernel is {(f, u) : f in D_n}; intended for
    modest degrees, where it feeds the modular cross-check."""
    basis = _lyndon_tuples((1, 1), n)
    d = len(basis)
    rows = [list(r) for r in _special_pair_matrix(n)]
    sym_cols = []
    for w in basis:
        sw = LieElement(XY, {w: 1})
        sym_cols.append(_symmetry_rows(sw, n))
    for row in zip(*sym_cols):
        rows.append(list(row) + [0] * d)
    penta = _pentagon_rows(n)
    fiber_basis = _lyndon_tuples((1, 1, 1), n)
    penta_cols = [[penta[w][0].get(v, 0) for v in fiber_basis]
                  for w in basis]
    for row in zip(*penta_cols):
        rows.append(list(row) + [0] * d)
    return rows


def special_dim_mod(n: int, p: int) -> int:
    """dim of the stable pair space computed entirely mod p.

    Over the rationals this equals :func:`special_dim` for n >= 2; a
    random prime giving a different answer would flag an integrality
    defect in the condition matrix.
    """
    if n < 2:
        raise ValueError("modular route is defined for degree >= 2")
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    return kernel_dim_mod(_stacked_condition_matrix(n), p)


# ---------------------------------------------------------------------
# Distinguished generators and the bracket.
# ---------------------------------------------------------------------

def soule_generator(m: int) -> LieElement:
    """The canonical generator of D_m when that space is a line.

    Normalisation: primitive integer coordinates with the coefficient of
    the word x^(m-1) y positive.  Raises
    :class:`~grtlab.errors.NotOneDimensionalError` when dim D_m != 1 and
    :class:`~grtlab.errors.DegenerateLeadingTermError` when the
    x^(m-1) y coefficient vanishes.
    """
    basis = special_basis(m)
    if len(basis) != 1:
        raise NotOneDimensionalError(
            f"stable space in degree {m} has dimension {len(basis)}, "
            "so there is no canonical generator")
    f = basis[0]
    lead = f.terms.get((0,) * (m - 1) + (1,), 0)
    if not lead:
        raise DegenerateLeadingTermError(
            f"degree-{m} generator has zero coefficient on x^{m - 1} y")
    if lead < 0:
        f = f.scale(-1)
    return f


def stable_derivation(f: LieElement) -> Derivation:
    """The derivation D_f with D_f(x) = 0 and D_f(y) = [y, f]."""
    return Derivation(LieElement.zero(XY), bracket(Y, f))


def ihara_bracket(f: LieElement, g: LieElement,
                  verify: bool = True) -> LieElement:
    """<f, g> = D_f(g) - D_g(f) + [f, g].

    With ``verify`` set, both arguments are checked against the cheap
    necessary conditions (special with witness, 2-cycle, 3-cycle); the
    5-cycle condition is not re-derived here because the stable space is
    closed under this bracket.
    """
    if verify:
        for name, e in (("left", f), ("right", g)):
            if not is_stable(e, check_five_cycle=False):
                raise SpecialConditionError(
                    f"{name} operand fails the stable-space conditions")
    return stable_derivation(f)(g) - stable_derivation(g)(f) + bracket(f, g)


# ---------------------------------------------------------------------
# The cusp-form congruence and the freeness table.
# ---------------------------------------------------------------------

def check_congruence(modulus: int = 691,
                     combination: Sequence[tuple[int, int, int]] = (
                         (2, 3, 9), (-27, 5, 7))) -> dict:
    """Divisibility report for an integer combination of brackets.

    ``combination`` lists (coefficient, m1, m2) triples; the element
    tested is sum of coefficient * <sigma_m1, sigma_m2> over the triples,
    with sigma_m the normalised generator from :func:`soule_generator`.
    The default is the degree-12 combination whose coefficients are all
    divisible by 691.

    Returns a dict with the element, the gcd of its coordinates, the
    verdict, and, when the verdict is negative, a report of how close
    other sign choices for the generators come.
    """
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    gens: dict[int, LieElement] = {}
    for _, m1, m2 in combination:
        for m in (m1, m2):
            if m not in gens:
                gens[m] = soule_generator(m)
    element = LieElement.zero(XY)
    for c, m1, m2 in combination:
        element = element + ihara_bracket(gens[m1], gens[m2]).scale(c)
    degree = element.homogeneous_degree()
    coords = [int(c) for c in element.coordinates(degree)] if degree else []
    g = 0
    for c in coords:
        g = math.gcd(g, c)
    divisible = bool(coords) and g % modulus == 0
    report = {
        "element": lie_to_string(element),
        "degree": degree,
        "modulus": modulus,
        "coordinate_gcd": g,
        "divisible": divisible,
    }
    if not divisible:
        report["discrepancy"] = _sign_discrepancy_report(
            gens, combination, modulus)
    return report


def _sign_discrepancy_report(gens: dict[int, LieElement],
                             combination, modulus: int) -> dict:
    """When the headline divisibility fails, search the 2^k sign choices
    on the generators for one that restores it, and record the residue
    profile of each choice.  A mismatch here means the generator
    normalisation disagrees with the lattice the congruence was stated
    in, and the sign table localises the disagreement."""
    ms = sorted(gens)
    results = []
    for mask in range(1 << len(ms)):
        signs = {m: (-1 if mask >> i & 1 else 1) for i, m in enumerate(ms)}
        element = LieElement.zero(XY)
        for c, m1, m2 in combination:
            term = ihara_bracket(gens[m1].scale(signs[m1]),
                                 gens[m2].scale(signs[m2]), verify=False)
            element = element + term.scale(c)
        degree = element.homogeneous_degree()
        coords = [int(c) for c in element.coordinates(degree)] if degree else []
        g = 0
        for c in coords:
            g = math.gcd(g, c)
        results.append({"signs": signs, "coordinate_gcd": g,
                        "divisible": bool(coords) and g % modulus == 0})
    return {
        "generator_degrees": ms,
        "sign_table": results,
        "some_sign_choice_works": any(r["divisible"] for r in results),
    }


def freeness_table(max_degree: int = DEFAULT_MAX_DEGREE) -> list[dict]:
    """Per-degree comparison of dim D_n with the free Lie algebra on
    generators in odd degrees 3, 5, 7, ...

    Each row reports the computed stable dimension, the free-algebra
    prediction (:func:`grtlab.motivic.image_model_dims`), and whether
    they agree.  Degrees 11 and 12 take tens of seconds; see
    DEFAULT_MAX_DEGREE.
    """
    if max_degree < 3:
        raise ValueError("max_degree must be >= 3")
    expected = image_model_dims(max_degree)
    out = []
    for n in range(2, max_degree + 1):
        got = special_dim(n)
        out.append({"degree": n, "computed": got,
                    "expected": expected[n], "match": got == expected[n]})
    return out
