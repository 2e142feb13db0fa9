"""
Exact arithmetic in finite fields GF(p^k), built on :mod:`galois`.

An element is stored as a non-negative integer whose base-p digits are its
coefficients in the power basis ``1, t, ..., t^(k-1)``, where ``t`` is a root of
the field modulus. This is the integer representation galois uses, so values
pass between the two without conversion. Vectorized operations go through the
galois field class. Fields up to :attr:`FieldCtx.table_limit` elements also
keep log/exp/Zech lists for fast scalar arithmetic.
"""
import logging
import random
import threading
from functools import lru_cache
from math import gcd

import galois
import numpy as np
import sympy

logger = logging.getLogger("uqg")

MAX_DEGREE = 18


class NotPrime(ValueError):
    pass


class DegreeOutOfRange(ValueError):
    pass


class CtxMismatch(ValueError):
    pass


class ZeroElement(ValueError):
    pass


class NotASubfield(ValueError):
    pass


class DegreeTooHigh(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


def _modulus_poly(p, modulus):
    return galois.Poly(list(reversed(modulus)), field=galois.GF(p))


def _canonical_modulus(p, k):
    """
    The smallest monic irreducible polynomial of degree k over GF(p).

    Polynomials are ordered by their galois integer representation, so the
    coefficient of t^(k-1) is the most significant one.
    """
    poly = galois.irreducible_poly(p, k, method="min")
    return tuple(int(c) for c in reversed(poly.coeffs))


class FieldCtx:
    """
    The field GF(p^k) with a fixed modulus.

    Use :func:`make_field` to obtain the canonical field for ``(p, k)``.
    """

    #: Largest field order for which log, exp and Zech lists are built.
    table_limit = 2**20

    #: Largest field order for which root finding scans every element.
    scan_limit = 10**6

    def __init__(self, p, k, modulus=None, table_limit=None, scan_limit=None):
        if not sympy.isprime(p):
            raise NotPrime("Characteristic {} is not prime".format(p))
        if not 1 <= k <= MAX_DEGREE:
            raise DegreeOutOfRange(
                "Extension degree {} outside 1..{}".format(k, MAX_DEGREE)
            )
        if table_limit is not None:
            self.table_limit = table_limit
        if scan_limit is not None:
            self.scan_limit = scan_limit

        self.p = p
        self.k = k
        self.order = p**k
        if modulus is None:
            modulus = _canonical_modulus(p, k)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if (
                len(modulus) != k + 1
                or modulus[-1] != 1
                or not _modulus_poly(p, modulus).is_irreducible()
            ):
                raise ValueError(
                    "Modulus {} is not monic irreducible of degree {}".format(modulus, k)
                )
        self.modulus = modulus
        self.key = (p, k, modulus)

        if k == 1:
            self.primitive = int(galois.primitive_root(p))
            self.GF = galois.GF(p, primitive_element=self.primitive)
        else:
            poly = _modulus_poly(p, modulus)
            self.primitive = int(galois.primitive_element(poly))
            self.GF = galois.GF(p**k, irreducible_poly=poly, primitive_element=self.primitive)

        self.tabled = self.order <= self.table_limit
        if self.tabled:
            self._build_tables()

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.k == 1:
            return "GF({})".format(self.p)
        return "GF({}^{})".format(self.p, self.k)

    def _build_tables(self):
        n = self.order - 1
        exp = self._out(self.GF.primitive_element ** np.arange(n))
        log = np.zeros(self.order, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        plus_one = self._out(self.GF(exp) + self.GF(1))
        zech = np.where(plus_one == 0, -1, log[plus_one])

        self._exp_list = np.concatenate([exp, exp]).tolist()
        self._log_list = log.tolist()
        self._zech_list = zech.tolist()
        logger.debug("Built tables for {} with primitive element {}".format(self, self.primitive))

    # Conversions between integer encodings and galois arrays

    def _arr(self, a):
        return self.GF(np.asarray(a, dtype=np.int64))

    @staticmethod
    def _out(x):
        return np.asarray(x.view(np.ndarray), dtype=np.int64)

    def _scalar(self, a):
        return self.GF(int(a))

    # Scalar arithmetic on integer encodings

    def coeffs(self, a):
        """Little-endian coefficients of ``a`` over GF(p)."""
        if self.k == 1:
            return [int(a)]
        return [int(c) for c in reversed(self._scalar(a).vector())]

    def from_coeffs(self, coeffs):
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.k:
            raise ValueError("Too many coefficients for {}: {}".format(self, coeffs))
        coeffs += [0] * (self.k - len(coeffs))
        if self.k == 1:
            return coeffs[0]
        return int(self.GF.Vector(coeffs[::-1]))

    def from_int(self, n):
        return n % self.p

    def coerce(self, x):
        """Integer encoding of a FieldElem, an integer (prime field) or a coefficient list."""
        if isinstance(x, FieldElem):
            if x.ctx != self:
                raise CtxMismatch("Element of {} used in {}".format(x.ctx, self))
            return x.value
        if isinstance(x, (int, np.integer)):
            return self.from_int(int(x))
        if isinstance(x, (list, tuple)):
            return self.from_coeffs(x)
        raise TypeError("Cannot interpret {!r} as an element of {}".format(x, self))

    def elem(self, x):
        return FieldElem(self, self.coerce(x))

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        if self.tabled:
            n = self.order - 1
            la = self._log_list[a]
            z = self._zech_list[(self._log_list[b] - la) % n]
            if z < 0:
                return 0
            return self._exp_list[la + z]
        return int(self._scalar(a) + self._scalar(b))

    def neg(self, a):
        if self.p == 2 or not a:
            return a
        if self.k == 1:
            return self.p - a
        return int(-self._scalar(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return 0
        if self.k == 1:
            return a * b % self.p
        if self.tabled:
            return self._exp_list[self._log_list[a] + self._log_list[b]]
        return int(self._scalar(a) * self._scalar(b))

    def inv(self, a):
        if not a:
            raise DivisionByZero("Inverse of zero in {}".format(self))
        if self.tabled:
            n = self.order - 1
            return self._exp_list[(n - self._log_list[a]) % n]
        return int(np.reciprocal(self._scalar(a)))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if not a:
            if e < 0:
                raise DivisionByZero("Negative power of zero in {}".format(self))
            return 0 if e else 1
        n = self.order - 1
        if self.tabled:
            return self._exp_list[self._log_list[a] * e % n]
        return int(self._scalar(a) ** (e % n))

    def frob(self, a, j=1):
        """The j-th power of the Frobenius map x -> x^p."""
        return self.pow(a, self.p ** (j % self.k))

    def order_of(self, a):
        if not a:
            raise ZeroElement("Zero has no multiplicative order")
        if self.tabled:
            n = self.order - 1
            return n // gcd(self._log_list[a], n)
        return int(self._scalar(a).multiplicative_order())

    def log(self, a):
        """Discrete logarithm to the base :attr:`primitive`."""
        if not a:
            raise ZeroElement("Zero has no logarithm")
        if self.tabled:
            return self._log_list[a]
        return int(self._scalar(a).log())

    def root_of_unity(self, m):
        """The canonical element of multiplicative order m, namely primitive^((|F|-1)/m)."""
        n = self.order - 1
        if m < 1 or n % m:
            raise ValueError("{} has no element of order {}".format(self, m))
        return self.pow(self.primitive, n // m)

    # Vectorized arithmetic on numpy arrays of integer encodings

    def elements(self):
        return np.arange(self.order, dtype=np.int64)

    def vadd(self, a, b):
        return self._out(self._arr(a) + self._arr(b))

    def vneg(self, a):
        return self._out(-self._arr(a))

    def vsub(self, a, b):
        return self._out(self._arr(a) - self._arr(b))

    def vmul(self, a, b):
        return self._out(self._arr(a) * self._arr(b))

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("Inverse of zero in {}".format(self))
        return self._out(np.reciprocal(self._arr(a)))

    def vpow(self, a, e):
        a = np.asarray(a, dtype=np.int64)
        if e < 0:
            return self.vpow(self.vinv(a), -e)
        return self._out(self._arr(a) ** int(e))

    def to_json(self):
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(d):
        field = make_field(d["p"], d["k"])
        if "modulus" in d and tuple(d["modulus"]) != field.modulus:
            return FieldCtx(d["p"], d["k"], d["modulus"])
        return field


@lru_cache(maxsize=None)
def make_field(p, k):
    """
    The canonical field GF(p^k).

    Equal arguments always return the same context object, so elements built
    from separate calls interoperate.
    """
    field = FieldCtx(p, k)
    logger.debug("Created {} with modulus {}".format(field, field.modulus))
    return field


class FieldElem:
    __slots__ = ("ctx", "value")

    def __init__(self, ctx, value):
        self.ctx = ctx
        self.value = value

    @property
    def coeffs(self):
        return self.ctx.coeffs(self.value)

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise CtxMismatch("Cannot combine {} and {}".format(self.ctx, other.ctx))
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.ctx.from_int(int(other))
        return None

    def __add__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.div(b, self.value))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e):
        return FieldElem(self.ctx, self.ctx.pow(self.value, int(e)))

    def frobenius(self, j=1):
        return FieldElem(self.ctx, self.ctx.frob(self.value, j))

    def inverse(self):
        return FieldElem(self.ctx, self.ctx.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == self.ctx.from_int(int(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.key, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "t" if i == 1 else "t^{}".format(i)
                terms.append(mono if c == 1 else "{}*{}".format(c, mono))
        return "{}({})".format(self.ctx, " + ".join(reversed(terms)) or "0")

    def to_json(self):
        return self.coeffs


def field_arith(a, b, op):
    """
    Apply ``op`` to field elements.

    ``op`` is one of ``add``, ``sub``, ``mul``, ``div`` (``b`` an element of the
    same field), ``pow`` (``b`` an integer exponent) or ``frobenius`` (``b`` the
    number of Frobenius steps).
    """
    if op == "pow":
        return a ** int(b)
    if op == "frobenius":
        return a.frobenius(int(b))
    if isinstance(b, FieldElem) and b.ctx != a.ctx:
        raise CtxMismatch("Cannot combine {} and {}".format(a.ctx, b.ctx))
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("Unknown field operation '{}'".format(op))


def mult_order(a):
    return a.ctx.order_of(a.value)


class Poly:
    """
    A univariate polynomial over a field, coefficients little-endian and trimmed.

    Coefficients are integer encodings in ``ctx``. Ring operations delegate to
    :class:`galois.Poly`.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        cs = [ctx.coerce(c) if isinstance(c, FieldElem) else int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, ctx):
        return cls(ctx, [0, 1])

    @classmethod
    def from_galois(cls, ctx, gp):
        return cls(ctx, [int(c) for c in reversed(gp.coeffs)])

    def to_galois(self):
        return galois.Poly(list(reversed(self.coeffs)) or [0], field=self.ctx.GF)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def _check(self, other):
        if not isinstance(other, Poly):
            other = Poly(self.ctx, [other])
        if other.ctx != self.ctx:
            raise CtxMismatch("Polynomials over {} and {}".format(self.ctx, other.ctx))
        return other

    def __add__(self, other):
        other = self._check(other)
        return Poly.from_galois(self.ctx, self.to_galois() + other.to_galois())

    def __neg__(self):
        return Poly(self.ctx, [self.ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        return Poly.from_galois(self.ctx, self.to_galois() - other.to_galois())

    def __mul__(self, other):
        other = self._check(other)
        return Poly.from_galois(self.ctx, self.to_galois() * other.to_galois())

    def scale(self, c):
        return Poly(self.ctx, [self.ctx.mul(c, a) for a in self.coeffs])

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.ctx.inv(self.lead))

    def __divmod__(self, other):
        other = self._check(other)
        if not other.coeffs:
            raise DivisionByZero("Polynomial division by zero")
        quot, rem = divmod(self.to_galois(), other.to_galois())
        return Poly.from_galois(self.ctx, quot), Poly.from_galois(self.ctx, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.key, self.coeffs))

    def __call__(self, x):
        """Evaluate at an integer encoding (returns int) or a FieldElem (returns FieldElem)."""
        if isinstance(x, FieldElem):
            return FieldElem(self.ctx, self(self.ctx.coerce(x)))
        acc = 0
        for c in reversed(self.coeffs):
            acc = self.ctx.add(self.ctx.mul(acc, x), c)
        return acc

    def evaluate_all(self, xs):
        """Vectorized evaluation at an array of integer encodings."""
        ctx = self.ctx
        return ctx._out(self.to_galois()(ctx._arr(xs)))

    def powmod(self, e, mod):
        mod = self._check(mod)
        return Poly.from_galois(self.ctx, pow(self.to_galois(), int(e), mod.to_galois()))

    def gcd(self, other):
        other = self._check(other)
        if not self.coeffs and not other.coeffs:
            return self
        return Poly.from_galois(self.ctx, galois.gcd(self.to_galois(), other.to_galois()))

    def map(self, f, ctx):
        return Poly(ctx, [f(c) for c in self.coeffs])

    def __repr__(self):
        return "Poly({}, {})".format(self.ctx, list(self.coeffs))


def _scan_roots(f):
    roots, mults = f.to_galois().roots(multiplicity=True)
    return {int(r): int(m) for r, m in sorted(zip(roots.tolist(), mults.tolist()))}


def _split_candidate(g, a):
    ctx = g.ctx
    if ctx.p == 2:
        # Tr(a x) splits roots whose difference has a-trace 1
        acc = Poly(ctx, [])
        term = Poly(ctx, [0, a]) % g
        for _ in range(ctx.k):
            acc = acc + term
            term = (term * term) % g
        return acc
    return Poly(ctx, [a, 1]).powmod((ctx.order - 1) // 2, g) - 1


def _split_roots(g, rng):
    # g is monic and a product of distinct linear factors
    ctx = g.ctx
    if g.degree <= 0:
        return []
    if g.degree == 1:
        return [ctx.neg(g.coeffs[0])]
    while True:
        d = g.gcd(_split_candidate(g, rng.randrange(ctx.order)))
        if 0 < d.degree < g.degree:
            return _split_roots(d, rng) + _split_roots(g // d, rng)


def _roots(f, method=None):
    """
    Roots of f in its coefficient field, as a dict from integer encoding to
    multiplicity. Any degree is accepted.

    ``scan`` evaluates f at every element. ``split`` isolates the distinct roots
    with gcd(f, x^|F| - x) and splits that product by random equal-degree
    factoring, which stays cheap in fields too large to scan.
    """
    ctx = f.ctx
    if not f.coeffs:
        raise ValueError("The zero polynomial has no finite root set")
    if f.degree == 0:
        return {}
    if method is None:
        method = "scan" if ctx.order <= ctx.scan_limit else "split"
    if method == "scan":
        return _scan_roots(f)
    if method != "split":
        raise ValueError("Unknown root finding method '{}'".format(method))

    x = Poly.x(ctx)
    g = f.gcd(x.powmod(ctx.order, f) - x)
    roots = {}
    for r in sorted(_split_roots(g, random.Random(0))):
        linear = Poly(ctx, [ctx.neg(r), 1])
        h, m = f, 0
        while True:
            q, rem = divmod(h, linear)
            if rem.coeffs:
                break
            h, m = q, m + 1
        roots[r] = m
    return roots


def poly_roots_in(f, target, method=None):
    """
    Roots of a polynomial of degree at most 3 in a field containing its
    coefficient field, with multiplicities.

    :returns: dict mapping :class:`FieldElem` of ``target`` to multiplicity.
    """
    if f.degree > 3:
        raise DegreeTooHigh("Degree {} exceeds 3".format(f.degree))
    if f.ctx != target:
        emb = embedding(f.ctx, target)
        f = f.map(emb.image, target)
    return {target.elem(r): m for r, m in _roots(f, method).items()}


class Embedding:
    """
    The field homomorphism GF(p^k) -> GF(p^K) for k | K.

    The generator t of the subfield is sent to the smallest root of the
    subfield modulus in the larger field.
    """

    def __init__(self, sub, sup):
        if sub.p != sup.p or sup.k % sub.k:
            raise NotASubfield("{} is not a subfield of {}".format(sub, sup))
        self.sub = sub
        self.sup = sup
        if sub == sup or sub.k == 1:
            self.gen = None
            return
        modulus = galois.Poly(list(reversed(sub.modulus)), field=sup.GF)
        self.gen = min(int(r) for r in modulus.roots())

        # Horner over the descending coefficient columns of every subfield element
        digits = sub.GF.elements.vector().view(np.ndarray).astype(np.int64)
        gen = sup.GF(self.gen)
        acc = sup.GF(np.zeros(sub.order, dtype=np.int64))
        for j in range(sub.k):
            acc = acc * gen + sup.GF(digits[:, j])
        self._images = sup._out(acc).tolist()
        self._preimages = {b: a for a, b in enumerate(self._images)}

    def image(self, a):
        if self.gen is None:
            return a
        return self._images[a]

    def restrict(self, b):
        """The preimage of b, raising NotASubfield when b lies outside the image."""
        if self.gen is None:
            if b >= self.sub.order:
                raise NotASubfield("{} does not lie in {}".format(b, self.sub))
            return b
        try:
            return self._preimages[b]
        except KeyError:
            raise NotASubfield("{} does not lie in {}".format(b, self.sub))

    def __call__(self, a):
        return FieldElem(self.sup, self.image(self.sub.coerce(a)))


_embeddings = {}
_embeddings_lock = threading.Lock()


def embedding(sub, sup):
    key = (sub.key, sup.key)
    with _embeddings_lock:
        emb = _embeddings.get(key)
        if emb is None:
            emb = Embedding(sub, sup)
            _embeddings[key] = emb
            logger.debug("Embedded {} into {}".format(sub, sup))
    return emb


def embed(sub, sup, a):
    return embedding(sub, sup)(a)
