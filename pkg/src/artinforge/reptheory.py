"""Symmetric-group machinery: partitions, conjugacy classes, class functions
and the permutation characters used by the verification claims.

Characters are compared as class functions (rational-valued functions on
cycle types), which in characteristic zero is the same as equality of
virtual representations; no decomposition into irreducibles happens here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

Partition = tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n as weakly decreasing tuples, sorted ascending."""
    if n < 0:
        raise ValueError("partitions of a negative integer")
    out: list[Partition] = []

    def rec(remaining: int, biggest: int, acc: tuple[int, ...]):
        if remaining == 0:
            out.append(acc)
            return
        for part in range(min(remaining, biggest), 0, -1):
            rec(remaining - part, part, acc + (part,))

    rec(n, n, ())
    return tuple(sorted(out))


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0, ..., n-1} stored as its image tuple."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        image = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                image[a] = b
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("permutations of different degrees")
        return Permutation(tuple(self.image[other.image[i]] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def extend(self, n: int) -> "Permutation":
        """Embed into a larger symmetric group, fixing the new points."""
        if n < self.n:
            raise ValueError("cannot extend to a smaller degree")
        return Permutation(self.image + tuple(range(self.n, n)))

    def cycles(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self.image[i]
            out.append(cycle)
        return out


def cycle_type(p: Permutation) -> Partition:
    return tuple(sorted((len(c) for c in p.cycles()), reverse=True))


def class_size(lam: Partition) -> int:
    """n!/z_lambda with z = prod(l^m_l * m_l!) over cycle lengths l."""
    n = sum(lam)
    z = 1
    for length in set(lam):
        m = lam.count(length)
        z *= length**m * factorial(m)
    return factorial(n) // z


def representative(lam: Partition) -> Permutation:
    """Canonical representative: cycles laid out on consecutive blocks."""
    n = sum(lam)
    image = list(range(n))
    pos = 0
    for length in lam:
        for i in range(length):
            image[pos + i] = pos + (i + 1) % length
        pos += length
    return Permutation(tuple(image))


def conjugacy_classes(n: int) -> list[tuple[Partition, int, Permutation]]:
    """(cycle type, class size, canonical representative) for each class."""
    if n < 1:
        raise ValueError("conjugacy classes need n >= 1")
    return [(lam, class_size(lam), representative(lam)) for lam in partitions(n)]


# ---------------------------------------------------------------------------
# class functions

def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class ClassFunction:
    """A rational-valued function on the partitions of n."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values):
        expected = partitions(n)
        vals = dict(values)
        if set(vals) != set(expected):
            raise ValueError("class function must be defined on all cycle types")
        self.n = n
        self.values = {lam: _norm(vals[lam]) for lam in expected}

    @classmethod
    def from_function(cls, n: int, fn) -> "ClassFunction":
        return cls(n, {lam: fn(lam) for lam in partitions(n)})

    def __call__(self, lam: Partition):
        return self.values[lam]

    def _check(self, other: "ClassFunction"):
        if self.n != other.n:
            raise ValueError("class functions on different symmetric groups")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(
            self.n, {lam: v + other.values[lam] for lam, v in self.values.items()}
        )

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(
            self.n, {lam: v - other.values[lam] for lam, v in self.values.items()}
        )

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return ClassFunction(
            self.n, {lam: v * scalar for lam, v in self.values.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    __hash__ = None

    def inner_product(self, other: "ClassFunction"):
        """(1/n!) * sum over classes of size * f * g."""
        self._check(other)
        total = sum(
            class_size(lam) * self.values[lam] * other.values[lam]
            for lam in partitions(self.n)
        )
        return _norm(Fraction(total, factorial(self.n)))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "values": [
                {"cycle_type": list(lam), "value": str(self.values[lam])}
                for lam in partitions(self.n)
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ClassFunction":
        return cls(
            data["n"],
            {
                tuple(entry["cycle_type"]): _norm(Fraction(entry["value"]))
                for entry in data["values"]
            },
        )

    def __repr__(self):
        body = ", ".join(f"{lam}: {v}" for lam, v in self.values.items())
        return f"ClassFunction(S{self.n}; {body})"


@dataclass(frozen=True)
class GradedClassFunction:
    """A polynomial in t whose coefficients are class functions on S_n."""

    n: int
    terms: tuple[tuple[int, ClassFunction], ...]

    def __post_init__(self):
        for _, cf in self.terms:
            if cf.n != self.n:
                raise ValueError("graded class function mixes symmetric groups")
        object.__setattr__(self, "terms", tuple(sorted(self.terms, key=lambda t: t[0])))

    def at_t1(self) -> ClassFunction:
        out = ClassFunction.from_function(self.n, lambda lam: 0)
        for _, cf in self.terms:
            out = out + cf
        return out

    def identity_vector(self) -> list:
        ones = (1,) * self.n
        return [cf.values[ones] for _, cf in self.terms]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"degree": d, "class_function": cf.to_dict()} for d, cf in self.terms
            ],
        }


# ---------------------------------------------------------------------------
# permutation characters

def trivial_character(n: int) -> ClassFunction:
    return ClassFunction.from_function(n, lambda lam: 1)


def subset_character(n: int, k: int) -> ClassFunction:
    """Character of S_n acting on k-element subsets: the value on a cycle
    type counts the unions of cycles of total size k."""
    if not 0 <= k <= n:
        raise ValueError(f"subset size {k} out of range 0..{n}")

    def value(lam: Partition) -> int:
        # coefficient of x^k in prod(1 + x^l) over the cycle lengths
        coeffs = [0] * (k + 1)
        coeffs[0] = 1
        for length in lam:
            if length <= k:
                for j in range(k, length - 1, -1):
                    coeffs[j] += coeffs[j - length]
        return coeffs[k]

    return ClassFunction.from_function(n, value)


def powerset_character(n: int) -> ClassFunction:
    """Character of S_n on all subsets: 2 ** (number of cycles)."""
    return ClassFunction.from_function(n, lambda lam: 2 ** len(lam))


def half_powerset_character(n: int) -> ClassFunction:
    """Character of S_n on the even-size subsets, defined for odd n only.

    Every permutation of an odd-size set has an odd cycle; toggling it swaps
    even- and odd-size invariant subsets, so the count is 2**(cycles - 1).
    """
    if n % 2 == 0:
        raise ValueError("half powerset character requires odd n")

    def value(lam: Partition) -> int:
        total = 0
        for pick in product((0, 1), repeat=len(lam)):
            if sum(l for l, p in zip(lam, pick) if p) % 2 == 0:
                total += 1
        return total

    return ClassFunction.from_function(n, value)


def xn_character(n: int) -> ClassFunction:
    """Permutation character of S_n on the point configuration X_n.

    A point away from the origin is a root index k in 0..n-3 plus a sign
    vector with sign product (-1)^k; a permutation fixes it exactly when the
    signs are constant on its cycles.  Signs constant on cycles are sign
    choices per cycle, and only odd cycles affect the product, so the count
    is combinatorial; the origin contributes 1.
    """
    if n < 2:
        raise ValueError("the point configuration is defined for n >= 2")

    def value(lam: Partition) -> int:
        c = len(lam)
        odd = sum(1 for length in lam if length % 2)
        total = 1
        for k in range(n - 2):
            target = 1 if k % 2 == 0 else -1
            if odd:
                total += 2 ** (c - 1)
            elif target == 1:
                total += 2**c
        return total

    return ClassFunction.from_function(n, value)
