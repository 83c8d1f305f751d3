"""Sparse multivariate polynomials over any coefficient ring.

The coefficient ring only needs the small protocol shared by ResidueRing,
FiniteField and CyclotomicField: ``zero, one, add, sub, neg, mul, inv,
is_zero, fmt``.  Terms are stored as ``{exponent tuple: coefficient}`` with
zero coefficients never present.
"""
from __future__ import annotations

import heapq
from typing import Iterable


def _heap_key(e):
    # max-heap on graded lex order via negation
    return (-sum(e), tuple(-x for x in e))


def _from_heap_key(k):
    return tuple(-x for x in k[1])


class Poly:
    __slots__ = ("ring", "nvars", "terms", "_hash")

    def __init__(self, ring, nvars: int, terms: dict | None = None):
        self.ring = ring
        self.nvars = nvars
        self.terms = {}
        self._hash = None
        if terms:
            for e, c in terms.items():
                if not ring.is_zero(c):
                    self.terms[tuple(e)] = c

    # constructors
    @classmethod
    def zero(cls, ring, nvars):
        return cls(ring, nvars)

    @classmethod
    def const(cls, ring, nvars, c):
        return cls(ring, nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, ring, nvars):
        return cls.const(ring, nvars, ring.one)

    @classmethod
    def var(cls, ring, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(ring, nvars, {tuple(e): ring.one})

    @classmethod
    def linear(cls, ring, coeffs: Iterable):
        """a_0 X_0 + ... + a_{k-1} X_{k-1} + a_k from the list [a_0, ..., a_k]."""
        coeffs = list(coeffs)
        n = len(coeffs) - 1
        terms = {}
        for i, a in enumerate(coeffs[:-1]):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = a
        terms[(0,) * n] = coeffs[-1]
        return cls(ring, n, terms)

    def _new(self, terms):
        p = Poly(self.ring, self.nvars)
        p.terms = terms
        return p

    # basic predicates
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, self.ring.zero)

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def __len__(self):
        return len(self.terms)

    # arithmetic
    def __add__(self, other):
        other = self._lift(other)
        R = self.ring
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = R.add(out[e], c)
                if R.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        R = self.ring
        return self._new({e: R.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        R = self.ring
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = R.mul(c1, c2)
                if e in out:
                    v = R.add(out[e], v)
                    if R.is_zero(v):
                        del out[e]
                        continue
                elif R.is_zero(v):
                    continue
                out[e] = v
        return self._new(out)

    __rmul__ = __mul__

    def scale(self, c):
        R = self.ring
        if R.is_zero(c):
            return self._new({})
        return self._new({e: R.mul(c, v) for e, v in self.terms.items()
                          if not R.is_zero(R.mul(c, v))})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.one(self.ring, self.nvars), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        if isinstance(other, int):
            c = self.ring.zero
            one = self.ring.one
            for _ in range(abs(other)):
                c = self.ring.add(c, one)
            if other < 0:
                c = self.ring.neg(c)
            return Poly.const(self.ring, self.nvars, c)
        return Poly.const(self.ring, self.nvars, other)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # division
    def leading(self):
        """Leading (exponent, coefficient) in graded lex order."""
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def divmod_exact(self, other: "Poly"):
        """Return the quotient if other divides self exactly, else None."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        R = self.ring
        le, lc = other.leading()
        lc_inv = R.inv(lc)
        rest = [(e, c) for e, c in other.terms.items() if e != le]
        rem = dict(self.terms)
        heap = [_heap_key(e) for e in rem]
        heapq.heapify(heap)
        quot = {}
        while rem:
            e = _from_heap_key(heapq.heappop(heap))
            c = rem.pop(e, None)
            if c is None:
                continue
            if any(a < b for a, b in zip(e, le)):
                return None
            qe = tuple(a - b for a, b in zip(e, le))
            qc = R.mul(c, lc_inv)
            quot[qe] = qc
            for oe, oc in rest:
                ne = tuple(a + b for a, b in zip(qe, oe))
                v = R.mul(qc, oc)
                if ne in rem:
                    v = R.sub(rem[ne], v)
                    if R.is_zero(v):
                        del rem[ne]
                    else:
                        rem[ne] = v
                else:
                    rem[ne] = R.neg(v)
                    heapq.heappush(heap, _heap_key(ne))
        return self._new(quot)

    def exact_div(self, other: "Poly") -> "Poly":
        q = self.divmod_exact(other)
        if q is None:
            raise ArithmeticError("inexact polynomial division")
        return q

    def order_at(self, lin: "Poly") -> int:
        """Largest k with lin^k dividing self (self nonzero)."""
        if self.is_zero():
            raise ValueError("order of the zero polynomial")
        k, cur = 0, self
        while True:
            nxt = cur.divmod_exact(lin)
            if nxt is None:
                return k
            k, cur = k + 1, nxt

    def evaluate(self, point):
        R = self.ring
        acc = R.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                for _ in range(k):
                    v = R.mul(v, x)
            acc = R.add(acc, v)
        return acc

    # display
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))

    def to_string(self, names=None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"X{i}" for i in range(self.nvars)]
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            cs = self.ring.fmt(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self.to_string()})"

    def to_json(self) -> dict:
        return {",".join(map(str, e)): self.ring.fmt(c) for e, c in self.sorted_terms()}
