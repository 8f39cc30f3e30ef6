"""Finite fields GF(p^f) and square matrices over them.

Field construction is deterministic: the defining polynomial is the
lexicographically least monic irreducible of degree f (comparing constant-first
coefficient vectors), and the designated generator is the least element, in the
same ordering, of full multiplicative order.  This makes every matrix built
downstream bit-reproducible.

Polynomials over GF(p) are coefficient tuples, constant term first.
"""

from __future__ import annotations

from functools import lru_cache

from .arith import factorize, is_prime

FIELD_SIZE_CAP = 2**16


def _poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) > dm:
        coef = a[-1]
        if coef:
            shift = len(a) - 1 - dm
            for j in range(dm):
                a[shift + j] = (a[shift + j] - coef * m[j]) % p
        a.pop()
    return _poly_trim(a)


def _poly_divides(d, a, p):
    """True if monic d divides a over GF(p)."""
    return not _poly_mod(a, d, p)


def _monic_polys(degree, p):
    """All monic polynomials of the given degree, in lex (constant-first) order."""
    for code in range(p**degree):
        coeffs = []
        c = code
        for _ in range(degree):
            coeffs.append(c % p)
            c //= p
        yield tuple(coeffs) + (1,)


def _is_irreducible(poly, p):
    f = len(poly) - 1
    if f == 1:
        return True
    # no roots kills linear factors; trial division handles the rest
    for r in range(p):
        if sum(c * pow(r, i, p) for i, c in enumerate(poly)) % p == 0:
            return False
    for d in range(2, f // 2 + 1):
        for cand in _monic_polys(d, p):
            if _poly_divides(cand, poly, p):
                return False
    return True


class FieldElement:
    """Element of a FiniteField, stored as a length-f coefficient tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "FiniteField", coeffs):
        self.field = field
        c = tuple(x % field.p for x in coeffs)
        self.coeffs = c + (0,) * (field.f - len(c))

    def __add__(self, other):
        return FieldElement(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return FieldElement(self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coeffs])

    def __mul__(self, other):
        p = self.field.p
        prod = _poly_mul(_poly_trim(self.coeffs), _poly_trim(other.coeffs), p)
        return FieldElement(self.field, _poly_mod(prod, self.field.modulus, p))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        return self ** (self.field.q - 2)

    def multiplicative_order(self) -> int:
        if not self:
            raise ValueError("zero has no multiplicative order")
        order = self.field.q - 1
        for prime, _ in factorize(order):
            while order % prime == 0 and self ** (order // prime) == self.field.one:
                order //= prime
        return order

    def to_int(self) -> int:
        """Encode as sum coeffs[i] * p**i (the canonical element ordering)."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * self.field.p + c
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __repr__(self):
        return f"FieldElement(GF({self.field.q}), {list(self.coeffs)})"


class FiniteField:
    """GF(p^f) with a fixed irreducible modulus and designated generator."""

    def __init__(self, p: int, f: int, modulus=None):
        if not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if f < 1:
            raise ValueError(f"degree must be >= 1, got {f}")
        if p**f > FIELD_SIZE_CAP:
            raise ValueError(f"field size {p}**{f} exceeds cap {FIELD_SIZE_CAP}")
        self.p = p
        self.f = f
        self.q = p**f
        if modulus is None:
            modulus = self._least_irreducible()
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != f + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree f")
            if not _is_irreducible(modulus, p):
                raise ValueError("modulus is not irreducible")
        self.modulus = modulus
        self.zero = FieldElement(self, ())
        self.one = FieldElement(self, (1,))
        self.generator = self._least_primitive()

    def _least_irreducible(self):
        for poly in _monic_polys(self.f, self.p):
            if _is_irreducible(poly, self.p):
                return poly
        raise AssertionError("no irreducible polynomial found")

    def _least_primitive(self):
        for x in self.elements():
            if x and x.multiplicative_order() == self.q - 1:
                return x
        raise AssertionError("no primitive element found")

    def element(self, coeffs) -> FieldElement:
        return FieldElement(self, coeffs)

    def from_int(self, code: int) -> FieldElement:
        coeffs = []
        for _ in range(self.f):
            coeffs.append(code % self.p)
            code //= self.p
        return FieldElement(self, coeffs)

    def elements(self):
        """All q elements, in canonical (p-adic code) order."""
        return [self.from_int(i) for i in range(self.q)]

    def __repr__(self):
        return f"FiniteField({self.p}, {self.f})"


@lru_cache(maxsize=None)
def field_make(p: int, f: int) -> FiniteField:
    """Construct GF(p^f) deterministically (cached)."""
    return FiniteField(p, f)


def subfield_primitive_element(F: FiniteField, e: int) -> FieldElement:
    """Least element of F of multiplicative order exactly p^e - 1.

    Such elements generate the unique subfield GF(p^e); requires e | f.
    """
    if F.f % e != 0:
        raise ValueError(f"subfield degree {e} does not divide {F.f}")
    target = F.p**e - 1
    for x in F.elements():
        if x and x.multiplicative_order() == target:
            return x
    raise AssertionError("subfield primitive element must exist")


class FieldMatrix:
    """Immutable n x n matrix over a FiniteField."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: FiniteField, rows):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        for r in self.rows:
            if len(r) != self.n:
                raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "FieldMatrix":
        return cls(
            field,
            [[field.one if i == j else field.zero for j in range(n)] for i in range(n)],
        )

    @classmethod
    def from_int_rows(cls, field: FiniteField, rows) -> "FieldMatrix":
        """Build from integer entries (reduced into the prime subfield)."""
        return cls(field, [[field.element((x,)) for x in r] for r in rows])

    def __mul__(self, other: "FieldMatrix") -> "FieldMatrix":
        n = self.n
        z = self.field.zero
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = z
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return FieldMatrix(self.field, out)

    def det(self) -> FieldElement:
        n = self.n
        m = [list(r) for r in self.rows]
        det = self.field.one
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col]), None)
            if pivot is None:
                return self.field.zero
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det
            det = det * m[col][col]
            inv = m[col][col].inverse()
            for r in range(col + 1, n):
                if m[r][col]:
                    factor = m[r][col] * inv
                    for c in range(col, n):
                        m[r][c] = m[r][c] - factor * m[col][c]
        return det

    def __eq__(self, other):
        return (
            isinstance(other, FieldMatrix)
            and self.field is other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((id(self.field), self.rows))

    def __repr__(self):
        ints = [[x.to_int() for x in r] for r in self.rows]
        return f"FieldMatrix(GF({self.field.q}), {ints})"
