"""Finite fields GF(p^m) with explicit moduli and integer element encoding.

An element is a plain Python int in ``0..q-1``.  Its base-p digits, least
significant first, are the coordinates in the power basis ``1, x, x^2, ...``
of GF(p)[x] modulo the field modulus.  Example: in GF(2^3) with modulus
``1 + x + x^3`` the int 6 has digits (0, 1, 1), i.e. the element ``x + x^2``.
The root ``x`` itself is always the int ``p``... for p = 2 that is element 2,
which is the usual primitive element of the tabulated binary fields.

The field object carries the arithmetic; elements stay bare ints so they can
sit in tuples, matrices and dict keys without wrapping.  Mixing ints that
belong to different fields is the caller's bug; the matrix and code layers
guard the boundaries where two fields could meet.

Moduli for GF(4), GF(8), GF(16), GF(32) and GF(64) are built in:

    GF(2^2): 1,1,1        GF(2^3): 1,1,0,1      GF(2^4): 1,1,0,0,1
    GF(2^5): 1,0,1,0,0,1  GF(2^6): 1,1,0,0,0,0,1

All listed moduli are primitive, so the int 2 generates the multiplicative
group of each tabulated field.
"""

from __future__ import annotations

from .errors import (
    BadLength,
    BadParams,
    DivisionByZero,
    NotPrime,
    ParseError,
    ReducibleModulus,
)

# coefficient tuples, ascending powers, for (p, m) -> modulus of length m+1
MODULUS_TABLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
}

MAX_EXT_DEGREE = 8
_TABLE_LIMIT = 4096  # build exp/log multiplication tables up to this q


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FiniteField:
    """Arithmetic context for GF(p^m) with a fixed irreducible modulus."""

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1 or m > MAX_EXT_DEGREE:
            raise BadParams(f"extension degree {m} outside 1..{MAX_EXT_DEGREE}")
        if modulus is None:
            if m == 1:
                modulus = (0, 1)
            elif (p, m) in MODULUS_TABLE:
                modulus = MODULUS_TABLE[(p, m)]
            else:
                raise BadParams(f"no built-in modulus for GF({p}^{m}); pass one")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1:
            raise BadLength(f"modulus needs {m + 1} coefficients, got {len(modulus)}")
        if modulus[m] == 0:
            raise BadLength("modulus leading coefficient vanishes")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        if self.q > 1 << 20:
            raise BadParams(f"field size {self.q} above supported 2^20")
        if m > 1:
            _check_irreducible(p, modulus)
        self._xred = self._reduction_rows()
        self._exp = None
        self._log = None
        self._gen = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    # --- representation -------------------------------------------------

    def digits(self, a: int):
        """Base-p digit tuple of an element, ascending powers."""
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(a % p)
            a //= p
        return tuple(out)

    def from_digits(self, ds) -> int:
        v = 0
        for d in reversed(list(ds)):
            v = v * self.p + d % self.p
        return v

    def elements(self):
        return range(self.q)

    def __str__(self):
        return f"GF({self.p}^{self.m}; {','.join(str(c) for c in self.modulus)})"

    def __repr__(self):
        return str(self)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    # --- arithmetic on int encodings -------------------------------------

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise BadParams(f"{a} is not an element of {self}")
        return a

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        return self.from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        return self.from_digits(-x for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self._log is not None:
            return self._exp[(self.q - 1) - self._log[a]] if self._log[a] else 1
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def generator(self) -> int:
        """Smallest int encoding that generates the multiplicative group."""
        if self._gen is None:
            n = self.q - 1
            if n == 1:
                self._gen = 1
            else:
                for g in range(2, self.q):
                    if self._order(g) == n:
                        self._gen = g
                        break
        return self._gen

    def _order(self, a: int) -> int:
        x = a
        k = 1
        while x != 1:
            x = self._mul_raw(x, a) if self._log is None else self.mul(x, a)
            k += 1
        return k

    # --- internals --------------------------------------------------------

    def _reduction_rows(self):
        # digit rows for x^m .. x^(2m-2) reduced by the modulus
        p, m, mod = self.p, self.m, self.modulus
        lead_inv = pow(mod[m], p - 2, p)
        base = [(-c * lead_inv) % p for c in mod[:m]]  # x^m = base (as digits)
        rows = [base]
        for _ in range(m - 2):
            prev = rows[-1]
            shifted = [0] + prev[:-1]
            carry = prev[-1]
            rows.append([(shifted[i] + carry * base[i]) % p for i in range(m)])
        return [tuple(r) for r in rows]

    def _mul_raw(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return (a * b) % p
        da, db = self.digits(a), self.digits(b)
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        out = [c % p for c in conv[:m]]
        for i in range(m, 2 * m - 1):
            c = conv[i] % p
            if c:
                row = self._xred[i - m]
                for t in range(m):
                    out[t] = (out[t] + c * row[t]) % p
        return self.from_digits(out)

    def _build_tables(self):
        n = self.q - 1
        if n == 1:
            self._exp = [1, 1]
            self._log = [0, 0]
            self._gen = 1
            return
        for g in range(2, self.q):
            exp = [1] * (2 * n)
            log = [0] * self.q
            x = 1
            ok = True
            for i in range(1, n):
                x = self._mul_raw(x, g)
                if x == 1:
                    ok = False
                    break
                exp[i] = x
                log[x] = i
            if ok:
                for i in range(n, 2 * n):
                    exp[i] = exp[i - n]
                self._exp = exp
                self._log = log
                self._gen = g
                return
        raise BadParams("multiplicative group has no generator; modulus corrupt?")


def _check_irreducible(p: int, modulus):
    """Trial division by all monic polynomials of degree 1..deg/2 over GF(p)."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for idx in range(p**d):
            div = []
            v = idx
            for _ in range(d):
                div.append(v % p)
                v //= p
            div.append(1)
            if _poly_mod_zero(p, modulus, div):
                raise ReducibleModulus(
                    f"modulus {list(modulus)} divisible by {div} over GF({p})"
                )


def _poly_mod_zero(p, num, den):
    r = [c % p for c in num]
    dd = len(den) - 1
    inv_lead = pow(den[dd], p - 2, p)
    while len(r) - 1 >= dd:
        if r[-1] == 0:
            r.pop()
            continue
        c = (r[-1] * inv_lead) % p
        off = len(r) - 1 - dd
        for i in range(dd + 1):
            r[off + i] = (r[off + i] - c * den[i]) % p
        r.pop()
    return all(c == 0 for c in r)


def field_make(p: int, m: int = 1, modulus=None) -> FiniteField:
    return FiniteField(p, m, modulus)


def standard_field(q: int) -> FiniteField:
    """Field of size q using the built-in modulus table (or a prime field)."""
    if is_prime(q):
        return FiniteField(q)
    for (p, m), mod in MODULUS_TABLE.items():
        if p**m == q:
            return FiniteField(p, m, mod)
    raise BadParams(f"no built-in field of size {q}; construct one explicitly")


def parse_field(text: str) -> FiniteField:
    """Parse 'GF(p^m; c0,c1,...,cm)' or the prime shorthand 'GF(p)'."""
    s = text.strip()
    if not (s.startswith("GF(") and s.endswith(")")):
        raise ParseError(f"bad field syntax: {text!r}")
    body = s[3:-1]
    if ";" in body:
        head, coeffs = body.split(";", 1)
        modulus = tuple(int(c) for c in coeffs.replace(" ", "").split(","))
    else:
        head, modulus = body, None
    head = head.strip()
    if "^" in head:
        ps, ms = head.split("^", 1)
        p, m = int(ps), int(ms)
    else:
        p, m = int(head), 1
    return FiniteField(p, m, modulus)
