"""Free Lie algebra elements in the Lyndon basis.

An element is a finite rational combination of Lyndon words; the word ``w``
stands for its standard bracketing sigma(w), defined recursively by
sigma(letter) = letter and sigma(w) = [sigma(u), sigma(v)] for the standard
factorization w = u v.  Brackets of basis elements are rewritten back into
the basis by the classical Lyndon rewriting process, with integer structure
constants, and never touch the tensor algebra.

The tensor algebra route (:func:`expand_assoc` / :func:`project_lyndon`)
is implemented independently on purpose: the two routes cross-check each
other, and projection doubles as a membership test for the free Lie
algebra inside the tensor algebra.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .errors import (AlphabetMismatchError, InhomogeneousError,
                     NotALiePolynomialError)
from .words import (GradedAlphabet, LyndonWord, Word, _lyndon_tuples,
                    _std_factorization, is_lyndon)


def _merge_scaled(acc: dict, terms: Mapping, scale) -> None:
    """acc += scale * terms, pruning exact zeros."""
    for key, c in terms.items():
        new = acc.get(key, 0) + scale * c
        if new:
            acc[key] = new
        else:
            acc.pop(key, None)


class LieElement:
    """A rational linear combination of Lyndon-basis elements.

    ``terms`` maps Lyndon words (letter-index tuples) to nonzero
    coefficients.  Coefficients are whatever exact ring the caller feeds
    in; integers and :class:`fractions.Fraction` mix freely.
    """

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: GradedAlphabet, terms: Mapping[Word, object]):
        self.alphabet = alphabet
        self.terms: dict[Word, object] = {w: c for w, c in terms.items() if c}

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(alphabet: GradedAlphabet) -> "LieElement":
        return LieElement(alphabet, {})

    @staticmethod
    def generator(alphabet: GradedAlphabet, name: str) -> "LieElement":
        return LieElement(alphabet, {(alphabet.index(name),): 1})

    @staticmethod
    def from_word(w: LyndonWord, coeff=1) -> "LieElement":
        return LieElement(w.alphabet, {w.letters: coeff})

    # -- vector space structure --------------------------------------

    def _check(self, other: "LieElement") -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError(
                f"cannot combine elements over {self.alphabet!r} "
                f"and {other.alphabet!r}")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        acc = dict(self.terms)
        _merge_scaled(acc, other.terms, 1)
        return LieElement(self.alphabet, acc)

    def __sub__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        acc = dict(self.terms)
        _merge_scaled(acc, other.terms, -1)
        return LieElement(self.alphabet, acc)

    def __neg__(self) -> "LieElement":
        return LieElement(self.alphabet,
                          {w: -c for w, c in self.terms.items()})

    def scale(self, scalar) -> "LieElement":
        if not scalar:
            return LieElement.zero(self.alphabet)
        return LieElement(self.alphabet,
                          {w: scalar * c for w, c in self.terms.items()})

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return (isinstance(other, LieElement)
                and self.alphabet == other.alphabet
                and self.terms == other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    # -- grading -----------------------------------------------------

    def graded_components(self) -> dict[int, "LieElement"]:
        split: dict[int, dict] = {}
        for w, c in self.terms.items():
            split.setdefault(self.alphabet.word_degree(w), {})[w] = c
        return {n: LieElement(self.alphabet, t)
                for n, t in sorted(split.items())}

    def component(self, degree: int) -> "LieElement":
        return LieElement(self.alphabet,
                          {w: c for w, c in self.terms.items()
                           if self.alphabet.word_degree(w) == degree})

    def homogeneous_degree(self) -> int | None:
        """Degree of a homogeneous element, None for zero; raises
        :class:`InhomogeneousError` when components of several degrees
        are present."""
        degrees = {self.alphabet.word_degree(w) for w in self.terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise InhomogeneousError(
                f"element mixes degrees {sorted(degrees)}")
        return degrees.pop()

    def max_degree(self) -> int:
        return max((self.alphabet.word_degree(w) for w in self.terms),
                   default=0)

    def truncate(self, max_degree: int) -> "LieElement":
        return LieElement(self.alphabet,
                          {w: c for w, c in self.terms.items()
                           if self.alphabet.word_degree(w) <= max_degree})

    # -- coordinates -------------------------------------------------

    def coordinates(self, degree: int) -> list:
        """Coefficient vector of the degree-``degree`` component with
        respect to the lex-ordered Lyndon basis in that degree."""
        basis = _lyndon_tuples(self.alphabet.degrees, degree)
        return [self.terms.get(w, 0) for w in basis]

    def support(self) -> list[LyndonWord]:
        return [LyndonWord(self.alphabet, w)
                for w in sorted(self.terms,
                                key=lambda w: (self.alphabet.word_degree(w), w))]

    def map_coefficients(self, fn: Callable) -> "LieElement":
        return LieElement(self.alphabet,
                          {w: fn(c) for w, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"LieElement({lie_to_string(self)})"

    def __str__(self) -> str:
        return lie_to_string(self)


def from_coordinates(alphabet: GradedAlphabet, degree: int,
                     vector: Iterable) -> LieElement:
    """Inverse of :meth:`LieElement.coordinates` for one graded piece."""
    basis = _lyndon_tuples(alphabet.degrees, degree)
    vector = list(vector)
    if len(vector) != len(basis):
        raise ValueError(
            f"expected {len(basis)} coordinates in degree {degree}, "
            f"got {len(vector)}")
    return LieElement(alphabet, dict(zip(basis, vector)))


# ---------------------------------------------------------------------------
# bracket via Lyndon rewriting


def _is_standard_pair(u: Word, v: Word) -> bool:
    """For Lyndon u < v: is (u, v) the standard factorization of u+v?
    Holds iff u is a letter or the right standard factor of u is >= v."""
    return len(u) == 1 or _std_factorization(u)[1] >= v


@functools.lru_cache(maxsize=None)
def _basis_bracket(u: Word, v: Word) -> tuple[tuple[Word, int], ...]:
    """[sigma(u), sigma(v)] expanded in the Lyndon basis, as a tuple of
    (word, integer coefficient) pairs.

    For u < v with (u, v) standard the result is sigma(uv).  Otherwise u
    is composite, u = ab, and the Jacobi identity
    [[a,b],v] = [a,[b,v]] - [b,[a,v]] pushes the computation to brackets
    of lower total degree plus pairs with shorter left factors; the
    process terminates and produces integer constants.
    """
    if u == v:
        return ()
    if v < u:
        return tuple((w, -c) for w, c in _basis_bracket(v, u))
    if _is_standard_pair(u, v):
        return ((u + v, 1),)
    a, b = _std_factorization(u)
    acc: dict[Word, int] = {}
    for t, c in _basis_bracket(b, v):
        _merge_scaled(acc, dict(_basis_bracket(a, t)), c)
    for t, c in _basis_bracket(a, v):
        # [[a,v], b] = -[b, [a,v]]
        _merge_scaled(acc, dict(_basis_bracket(t, b)), c)
    return tuple(sorted(acc.items()))


def bracket(a: LieElement, b: LieElement,
            max_degree: int | None = None) -> LieElement:
    """Lie bracket [a, b], bilinear over the memoized basis brackets.

    ``max_degree`` discards products landing above the bound before they
    are computed, which is what keeps truncated group computations cheap.
    """
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError("bracket operands over different alphabets")
    alph = a.alphabet
    acc: dict[Word, object] = {}
    deg = alph.word_degree
    for u, cu in a.terms.items():
        du = deg(u)
        for v, cv in b.terms.items():
            if max_degree is not None and du + deg(v) > max_degree:
                continue
            coeff = cu * cv
            for w, n in _basis_bracket(u, v):
                new = acc.get(w, 0) + coeff * n
                if new:
                    acc[w] = new
                else:
                    del acc[w]
    return LieElement(alph, acc)


def substitute(f: LieElement, images: Iterable[LieElement],
               max_degree: int | None = None) -> LieElement:
    """Image of f under the Lie algebra map letter i -> images[i].

    The images may live over any alphabet (all the same one).  With
    ``max_degree`` set, brackets are truncated as they form, so
    substitution into a nilpotent quotient never materializes the
    discarded degrees.
    """
    imgs = tuple(images)
    if not imgs:
        raise ValueError("need at least one image")
    target = imgs[0].alphabet
    cache: dict[Word, LieElement] = {}

    def on_word(w: Word) -> LieElement:
        got = cache.get(w)
        if got is None:
            if len(w) == 1:
                got = imgs[w[0]]
                if max_degree is not None:
                    got = got.truncate(max_degree)
            else:
                u, v = _std_factorization(w)
                got = bracket(on_word(u), on_word(v), max_degree)
            cache[w] = got
        return got

    out = LieElement.zero(target)
    for w, c in f.terms.items():
        out = out + on_word(w).scale(c)
    return out


# ---------------------------------------------------------------------------
# tensor algebra: expansion and projection


class AssocPoly:
    """An element of the tensor algebra: words with exact coefficients,
    multiplied by concatenation.  Used as the independent oracle for the
    bracket and for Lie-membership tests."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: GradedAlphabet, terms: Mapping[Word, object]):
        self.alphabet = alphabet
        self.terms: dict[Word, object] = {w: c for w, c in terms.items() if c}

    @staticmethod
    def zero(alphabet: GradedAlphabet) -> "AssocPoly":
        return AssocPoly(alphabet, {})

    def _check(self, other: "AssocPoly") -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError(
                "tensor operands over different alphabets")

    def __add__(self, other: "AssocPoly") -> "AssocPoly":
        self._check(other)
        acc = dict(self.terms)
        _merge_scaled(acc, other.terms, 1)
        return AssocPoly(self.alphabet, acc)

    def __sub__(self, other: "AssocPoly") -> "AssocPoly":
        self._check(other)
        acc = dict(self.terms)
        _merge_scaled(acc, other.terms, -1)
        return AssocPoly(self.alphabet, acc)

    def __neg__(self) -> "AssocPoly":
        return AssocPoly(self.alphabet, {w: -c for w, c in self.terms.items()})

    def scale(self, scalar) -> "AssocPoly":
        if not scalar:
            return AssocPoly.zero(self.alphabet)
        return AssocPoly(self.alphabet,
                         {w: scalar * c for w, c in self.terms.items()})

    __rmul__ = scale

    def __mul__(self, other: "AssocPoly") -> "AssocPoly":
        self._check(other)
        acc: dict[Word, object] = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                new = acc.get(u + v, 0) + cu * cv
                if new:
                    acc[u + v] = new
                else:
                    del acc[u + v]
        return AssocPoly(self.alphabet, acc)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AssocPoly)
                and self.alphabet == other.alphabet
                and self.terms == other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def truncate(self, max_degree: int) -> "AssocPoly":
        deg = self.alphabet.word_degree
        return AssocPoly(self.alphabet,
                         {w: c for w, c in self.terms.items()
                          if deg(w) <= max_degree})

    def __repr__(self) -> str:
        if not self.terms:
            return "AssocPoly(0)"
        parts = [f"{c}*{self.alphabet.word_str(w) or '1'}"
                 for w, c in sorted(self.terms.items())]
        return f"AssocPoly({' + '.join(parts)})"


@functools.lru_cache(maxsize=None)
def _sigma_tensor(w: Word) -> tuple[tuple[Word, int], ...]:
    """sigma(w) written out in the tensor algebra, integer coefficients.

    Triangular: the expansion is w itself plus lexicographically larger
    words of the same length, which is what makes projection a simple
    elimination."""
    if len(w) == 1:
        return ((w, 1),)
    u, v = _std_factorization(w)
    acc: dict[Word, int] = {}
    for (a, ca) in _sigma_tensor(u):
        for (b, cb) in _sigma_tensor(v):
            c = ca * cb
            # accumulate the two words separately: a+b can equal b+a
            _merge_scaled(acc, {a + b: c}, 1)
            _merge_scaled(acc, {b + a: -c}, 1)
    return tuple(sorted(acc.items()))


def expand_assoc(e: LieElement) -> AssocPoly:
    """Image of a Lie element under the embedding into the tensor algebra."""
    acc: dict[Word, object] = {}
    for w, c in e.terms.items():
        _merge_scaled(acc, dict(_sigma_tensor(w)), c)
    return AssocPoly(e.alphabet, acc)


def project_lyndon(p: AssocPoly) -> LieElement:
    """Rewrite a tensor element as a combination of standard bracketings.

    Works degreewise by triangular elimination: repeatedly look at the
    lexicographically least surviving word; it must be Lyndon (else the
    input was not a Lie polynomial, and :class:`NotALiePolynomialError`
    reports it), and its coefficient is the Lyndon-basis coefficient.
    Leading coefficients are 1, so no division happens and the procedure
    is valid over any exact coefficient ring.
    """
    remaining = dict(p.terms)
    out: dict[Word, object] = {}
    while remaining:
        w = min(remaining)
        c = remaining.pop(w)
        if not is_lyndon(w):
            raise NotALiePolynomialError(
                f"leading word {p.alphabet.word_str(w)!r} is not Lyndon; "
                f"input is not a Lie polynomial", word=w)
        out[w] = c
        for t, n in _sigma_tensor(w):
            if t == w:
                continue
            new = remaining.get(t, 0) - c * n
            if new:
                remaining[t] = new
            else:
                remaining.pop(t, None)
    return LieElement(p.alphabet, out)


# ---------------------------------------------------------------------------
# canonical printing


def _word_bracket_str(alphabet: GradedAlphabet, w: Word) -> str:
    if len(w) == 1:
        return alphabet.names[w[0]]
    u, v = _std_factorization(w)
    return (f"[{_word_bracket_str(alphabet, u)},"
            f"{_word_bracket_str(alphabet, v)}]")


def lie_to_string(e: LieElement) -> str:
    """Canonical rendering: terms sorted by (degree, word), coefficients
    in lowest terms, Lyndon words printed as their standard bracketings.
    ``parse_lie`` inverts this exactly."""
    if not e.terms:
        return "0"
    items = sorted(e.terms.items(),
                   key=lambda kv: (e.alphabet.word_degree(kv[0]), kv[0]))
    parts: list[str] = []
    for w, c in items:
        frac = c if isinstance(c, Fraction) else Fraction(c)
        mag = abs(frac)
        body = _word_bracket_str(e.alphabet, w)
        text = body if mag == 1 else f"{mag}*{body}"
        if not parts:
            parts.append(text if frac > 0 else f"-{text}")
        else:
            parts.append(f"{'+' if frac > 0 else '-'} {text}")
    return " ".join(parts)
