"""Permutations on {0, ..., n-1}.

Composition convention: (p * q)(x) = q(p(x)), i.e. p is applied first.  This
matches right actions, so coset actions multiply on the right without fuss.

Points are 0-indexed internally; the printed / parsed cycle notation is
1-indexed.
"""

from __future__ import annotations

import re


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Permutation":
        """Build from 0-indexed cycles."""
        images = list(range(n))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        oi = other.images
        return Permutation(tuple(oi[x] for x in self.images))

    def inverse(self) -> "Permutation":
        out = [0] * self.degree
        for i, x in enumerate(self.images):
            out[x] = i
        return Permutation(out)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self, include_fixed: bool = False):
        """Disjoint cycles, 0-indexed, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def cycle_string(self) -> str:
        """Disjoint-cycle notation with 1-indexed points, '()' for identity."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycs)

    @classmethod
    def parse(cls, s: str, n: int = 0) -> "Permutation":
        """Parse 1-indexed disjoint-cycle notation, e.g. '(1 2)(3 4 5)'."""
        s = s.strip()
        if s in ("()", "", "id"):
            return cls.identity(n)
        cycles = []
        pos = 0
        for m in re.finditer(r"\(([^()]*)\)", s):
            if s[pos : m.start()].strip():
                raise ValueError(f"could not parse permutation {s!r}")
            pos = m.end()
            pts = [int(t) - 1 for t in re.split(r"[,\s]+", m.group(1).strip()) if t]
            if any(x < 0 for x in pts) or len(set(pts)) != len(pts):
                raise ValueError(f"bad cycle in {s!r}")
            if pts:
                cycles.append(pts)
        if pos != len(s) and s[pos:].strip():
            raise ValueError(f"could not parse permutation {s!r}")
        need = max((max(c) + 1 for c in cycles), default=0)
        return cls.from_cycles(cycles, max(n, need))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"
