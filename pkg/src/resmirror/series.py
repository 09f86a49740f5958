"""Truncated exponential series, mirror maps, and their transforms.

The objects here are finite sums

    c1*x_1 + c2*x_2 + c0  +  sum_dd  coef(dd) * e^{da*x_1 + db*x_2}

truncated by total degree da + db.  Generating functions of two-point
numbers live in this ring: the affine part collects the classical triple
pairings against the degree-one classes, the exponential part collects
the quantum numbers degree by degree.  Contracting the unit-insertion
generating functions with the inverse pairing block yields the mirror
map; inverting it by fixed-point substitution and composing gives the
transformed series whose coefficients are the invariants on the other
side of the correspondence.

One-form geometries use the same representation with the second slot
pinned to zero, so every routine below is written once for both shapes.
"""

import math
from fractions import Fraction

from . import _linalg
from .cache import cached_two_point
from .geoms import Insertion, geometry, parse_insertion
from .parts import ordered_partitions
from .polys import frac_from_str, frac_to_str
from .vsc import vsc_recursive

_F0 = Fraction(0)
_NO_AFFINE = (_F0, _F0)


class InvalidExp(ValueError):
    """Exponential of a series whose affine part does not vanish."""


class SingularMetric(ArithmeticError):
    """The pairing block needed for a mirror map is not invertible."""


class GradedSeries:
    """One element of the truncated ring described in the module docstring.

    Degrees are pairs (da, db) of non-negative integers, not both zero;
    the degree-(0,0) slot is the separate constant field.  Every operation
    drops terms of total degree beyond the truncation bound.
    """

    __slots__ = ("affine", "const", "terms", "trunc")

    def __init__(self, affine=(0, 0), const=0, terms=None, trunc=0):
        self.affine = (Fraction(affine[0]), Fraction(affine[1]))
        self.const = Fraction(const)
        self.trunc = int(trunc)
        if self.trunc < 0:
            raise ValueError("truncation bound must be non-negative")
        clean = {}
        if terms:
            for dd, c in terms.items():
                da, db = int(dd[0]), int(dd[1])
                if da < 0 or db < 0 or (da == 0 and db == 0):
                    raise ValueError("bad exponential degree %r" % (dd,))
                c = Fraction(c)
                if c and da + db <= self.trunc:
                    clean[(da, db)] = c
        self.terms = clean

    # -- inspection --------------------------------------------------------

    def coefficient(self, dd):
        da, db = int(dd[0]), int(dd[1])
        if da == 0 and db == 0:
            return self.const
        return self.terms.get((da, db), _F0)

    def is_zero(self):
        return self.affine == _NO_AFFINE and self.const == 0 and not self.terms

    def quantum_part(self):
        """The pure exponential terms, with affine and constant dropped."""
        return GradedSeries(_NO_AFFINE, 0, self.terms, self.trunc)

    def __eq__(self, other):
        return (isinstance(other, GradedSeries)
                and self.affine == other.affine and self.const == other.const
                and self.terms == other.terms and self.trunc == other.trunc)

    def __repr__(self):
        return "<series %s | trunc %d>" % (self.pretty(), self.trunc)

    def pretty(self, names=("x1", "x2")):
        """Deterministic plain-text rendering, low degrees first."""
        chunks = []
        for c, label in ((self.affine[0], names[0]), (self.affine[1], names[1])):
            if c:
                chunks.append((c, label))
        if self.const:
            chunks.append((self.const, ""))
        single = self.affine[1] == 0 and all(db == 0 for _, db in self.terms)
        for (da, db), c in sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0][1])):
            mono = []
            if da:
                mono.append("q^%d" % da if single and da > 1
                            else ("q" if single else ("q1^%d" % da if da > 1 else "q1")))
            if db:
                mono.append("q2^%d" % db if db > 1 else "q2")
            chunks.append((c, "*".join(mono)))
        if not chunks:
            return "0"
        out = []
        for i, (c, label) in enumerate(chunks):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            body = label if (mag == 1 and label) else (
                str(mag) if not label else "%s*%s" % (mag, label))
            if i == 0:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append("%s %s" % (sign, body))
        return " ".join(out)

    # -- arithmetic --------------------------------------------------------

    def _same_trunc(self, other):
        if self.trunc != other.trunc:
            raise ValueError("truncation mismatch: %d vs %d"
                             % (self.trunc, other.trunc))

    def __add__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        self._same_trunc(other)
        terms = dict(self.terms)
        for dd, c in other.terms.items():
            s = terms.get(dd, _F0) + c
            if s:
                terms[dd] = s
            else:
                terms.pop(dd, None)
        return GradedSeries((self.affine[0] + other.affine[0],
                             self.affine[1] + other.affine[1]),
                            self.const + other.const, terms, self.trunc)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return GradedSeries((self.affine[0] * c, self.affine[1] * c),
                            self.const * c,
                            {dd: v * c for dd, v in self.terms.items()},
                            self.trunc)

    def __mul__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        self._same_trunc(other)
        if self.affine != _NO_AFFINE or other.affine != _NO_AFFINE:
            raise ValueError("a product with an affine factor leaves the ring")
        D = self.trunc
        terms = {}

        def put(dd, c):
            s = terms.get(dd, _F0) + c
            if s:
                terms[dd] = s
            else:
                terms.pop(dd, None)

        if other.const:
            for dd, c in self.terms.items():
                put(dd, c * other.const)
        if self.const:
            for dd, c in other.terms.items():
                put(dd, c * self.const)
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                da, db = a1 + a2, b1 + b2
                if da + db <= D:
                    put((da, db), c1 * c2)
        return GradedSeries(_NO_AFFINE, self.const * other.const, terms, D)

    def exp_of_pure_q(self):
        if self.affine != _NO_AFFINE or self.const != 0:
            raise InvalidExp("exponential needs a vanishing affine part")
        out = GradedSeries(_NO_AFFINE, 1, None, self.trunc)
        power = out
        for m in range(1, self.trunc + 1):
            power = power * self
            if power.is_zero():
                break
            out = out + power.scale(Fraction(1, math.factorial(m)))
        return out

    def shifted(self, dd):
        """Multiplication by e^{da*x_1 + db*x_2}; affine part must vanish."""
        da, db = int(dd[0]), int(dd[1])
        if da == 0 and db == 0:
            return self
        if da < 0 or db < 0:
            raise ValueError("bad shift degree %r" % (dd,))
        if self.affine != _NO_AFFINE:
            raise ValueError("a shift of an affine series leaves the ring")
        terms = {}
        if self.const and da + db <= self.trunc:
            terms[(da, db)] = self.const
        for (a1, b1), c in self.terms.items():
            if a1 + da + b1 + db <= self.trunc:
                terms[(a1 + da, b1 + db)] = c
        return GradedSeries(_NO_AFFINE, 0, terms, self.trunc)

    def div_unit(self, den):
        """Divide by a series with a non-zero constant term."""
        if not isinstance(den, GradedSeries):
            raise TypeError("denominator must be a series")
        self._same_trunc(den)
        if self.affine != _NO_AFFINE or den.affine != _NO_AFFINE:
            raise ValueError("division with affine parts leaves the ring")
        if den.const == 0:
            raise ZeroDivisionError("denominator has no constant term")
        tail = den.quantum_part().scale(Fraction(1) / den.const)
        inv = GradedSeries(_NO_AFFINE, 1, None, self.trunc)
        power = inv
        for m in range(1, self.trunc + 1):
            power = power * tail
            if power.is_zero():
                break
            inv = inv + power.scale((-1) ** m)
        return (self * inv).scale(Fraction(1) / den.const)


def series_arith(op, a, b=None):
    """Dispatcher mirroring the polynomial-layer arithmetic entry points."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    if op == "exp_of_pure_q":
        return a.exp_of_pure_q()
    raise ValueError("unknown series op %r" % (op,))


def series_to_json(s):
    return {
        "affine": {"x1": frac_to_str(s.affine[0]),
                   "x2": frac_to_str(s.affine[1]),
                   "const": frac_to_str(s.const)},
        "terms": [{"d": [da, db], "coef": frac_to_str(c)}
                  for (da, db), c in sorted(s.terms.items())],
        "trunc": s.trunc,
    }


def series_from_json(obj):
    aff = obj.get("affine", {})
    terms = {}
    for t in obj.get("terms", ()):
        da, db = t["d"]
        terms[(int(da), int(db))] = frac_from_str(t["coef"])
    return GradedSeries((frac_from_str(aff.get("x1", "0")),
                         frac_from_str(aff.get("x2", "0"))),
                        frac_from_str(aff.get("const", "0")),
                        terms, int(obj["trunc"]))


# -- generating functions --------------------------------------------------


def _unit(g):
    return Insertion(*([0] * g.n_forms))


def _degree_list(g, D):
    if g.n_forms == 1:
        return [(d, 0) for d in range(1, D + 1)]
    return [(da, db) for tot in range(1, D + 1)
            for da in range(tot, -1, -1) for db in (tot - da,)]


def _geom_degree(g, dd):
    return dd[0] if g.n_forms == 1 else dd


def build_generating_function(g, a, b, D):
    """Affine classical part plus all quantum terms through total degree D.

    Insertions outside the geometry's basis but inside its classical
    pairing domain (the virtual ring of the local surface) produce a
    purely classical series: their quantum part vanishes identically.
    """
    if D < 1:
        raise ValueError("need a truncation bound of at least 1")
    pa, pb = parse_insertion(g, a), parse_insertion(g, b)
    affine = [_F0, _F0]
    for i, v in enumerate(g.kahler_classes()):
        affine[i] = g.classical_triple(pa, pb, v)
    terms = {}
    basis = g.basis()
    if pa in basis and pb in basis:
        want = pa.degree() + pb.degree()
        for dd in _degree_list(g, D):
            gd = _geom_degree(g, dd)
            if g.selection_degree(gd) != want:
                continue
            val = cached_two_point(g, gd, pa, pb)
            if val:
                terms[dd] = val
    return GradedSeries(tuple(affine), 0, terms, D)


# -- mirror maps -----------------------------------------------------------


class MirrorMap:
    """Forward components t_i(x), and once inverted also x_i(t).

    Components always come as a pair; a one-form geometry carries the
    identity in the second slot.
    """

    __slots__ = ("geom", "trunc", "forward", "inverse")

    def __init__(self, geom, trunc, forward, inverse=None):
        self.geom = geom
        self.trunc = trunc
        self.forward = tuple(forward)
        self.inverse = None if inverse is None else tuple(inverse)

    def __repr__(self):
        state = "inverted" if self.inverse else "forward-only"
        return "<mirror map for %r at trunc %d (%s)>" % (self.geom, self.trunc, state)


def _axis_affine(i):
    return (Fraction(1), _F0) if i == 0 else (_F0, Fraction(1))


def _mirror_components(g, D):
    rows = g.kahler_classes()
    cols = g.pairing_partners()
    unit = _unit(g)
    if len(rows) != len(cols):
        raise SingularMetric("pairing block is not square for %s" % g.name)
    block = [[g.classical_triple(v, alpha, unit) for alpha in cols] for v in rows]
    try:
        inv = _linalg.invert(block)
    except _linalg.SingularMatrix:
        raise SingularMetric("degree-one pairing block is singular for %s" % g.name)
    gens = [build_generating_function(g, unit, alpha, D) for alpha in cols]
    comps = []
    for i in range(len(rows)):
        t = GradedSeries(_NO_AFFINE, 0, None, D)
        for j, gen in enumerate(gens):
            t = t + gen.scale(inv[i][j])
        if t.affine != _axis_affine(i) or t.const != 0:
            raise ArithmeticError("pairing contraction failed to normalize "
                                  "the degree-one direction %d of %s" % (i, g.name))
        comps.append(t)
    while len(comps) < 2:
        comps.append(GradedSeries(_axis_affine(len(comps)), 0, None, D))
    return tuple(comps)


def mirror_map(g, D):
    """The coordinate change t_i = x_i + (pure exponential terms).

    Built by contracting the unit-insertion generating functions with the
    inverse of the degree-one pairing block.  For the local surface the
    result must not depend on the free classical parameter; this is
    checked by evaluating at a second parameter value.
    """
    comps = _mirror_components(g, D)
    if g.name == "kf0":
        twin = geometry("kf0", k=g.k % 7 + 1)
        if _mirror_components(twin, D) != comps:
            raise ArithmeticError("local-surface mirror map depends on the "
                                  "classical parameter")
    return MirrorMap(g, D, comps)


def _compose_q(f, shifts):
    """f with x_j replaced by t_j + shifts[j]; f and shifts are pure q."""
    out = GradedSeries(_NO_AFFINE, 0, None, f.trunc)
    for (da, db), c in sorted(f.terms.items()):
        arg = shifts[0].scale(da) + shifts[1].scale(db)
        out = out + arg.exp_of_pure_q().shifted((da, db)).scale(c)
    return out


def invert_mirror_map(m):
    """Fill in x_i(t) by fixed-point substitution.

    The forward components are tangent to the identity, so each pass
    fixes one more total degree and the truncation bound many passes
    close the composition identity exactly.
    """
    D = m.trunc
    fs = []
    for i, t in enumerate(m.forward):
        if t.affine != _axis_affine(i) or t.const != 0:
            raise ValueError("component %d is not x_%d plus exponential terms"
                             % (i, i + 1))
        fs.append(t.quantum_part())
    shifts = (GradedSeries(_NO_AFFINE, 0, None, D),) * 2
    for _ in range(D):
        shifts = tuple(-_compose_q(fs[i], shifts) for i in range(2))
    for i in range(2):
        if not (shifts[i] + _compose_q(fs[i], shifts)).is_zero():
            raise ArithmeticError("fixed point failed to close at trunc %d" % D)
    inverse = tuple(GradedSeries(_axis_affine(i), 0, shifts[i].terms, D)
                    for i in range(2))
    return MirrorMap(m.geom, D, m.forward, inverse)


def transform(F, m):
    """F rewritten in the flat coordinates of the mirror map.

    The affine slots of the result are coefficients of t_1, t_2.  The map
    is inverted on demand when only the forward direction is present.
    """
    if m.inverse is None:
        m = invert_mirror_map(m)
    if F.trunc != m.trunc:
        raise ValueError("truncation mismatch between series and map")
    shifts = tuple(x.quantum_part() for x in m.inverse)
    out = GradedSeries(F.affine, F.const, None, F.trunc)
    for i in range(2):
        if F.affine[i]:
            out = out + shifts[i].scale(F.affine[i])
    return out + _compose_q(F.quantum_part(), shifts)


# -- the degree <= 3 transform in closed form ------------------------------


def gmt_upto3(N, k, ltable=None):
    """Invariants through degree three from the structure-constant table.

    Valid on the side N < k where the closed-form transform is known.
    Returns a map (d, (a, b)) -> value over all insertion pairs allowed
    at each degree.  ltable may supply the structure constants as a map
    (d, n) -> value (absent entries read zero); by default they are
    computed by the level recursion.
    """
    if N >= k:
        raise ValueError("closed-form transform needs N < k")

    if ltable is None:
        def L(d, n):
            return vsc_recursive(N, k, d, n)
    else:
        def L(d, n):
            return ltable.get((d, n), _F0)

    e = k - N

    def s_range(f, lo, hi):
        return sum(f(j) for j in range(lo, hi + 1))

    out = {}
    for d in (1, 2, 3):
        for n in range(1 + e * d, N - 1):
            pair = (N - 2 - n, n - 1 - e * d)
            if d == 1:
                val = L(1, n) - L(1, 1 + e)
            elif d == 2:
                val = (L(2, n) - L(2, 1 + 2 * e)) / 2 \
                    - L(1, 1 + e) * s_range(
                        lambda j: L(1, n - j) - L(1, 1 + 2 * e - j), 0, e)
            else:
                def A(j):
                    return Fraction(j + 1 if j <= e else 1 + 2 * e - j)

                def B(nn):
                    tot = _F0
                    full = s_range(lambda m: L(1, nn - m), 0, 2 * e)
                    for j in range(0, e):
                        tot += s_range(lambda m: L(1, nn - m)
                                       * L(1, nn - 2 * e + j - m), 0, j)
                        tot -= L(1, e + 2 + j) * full
                        tot += L(1, 1 + e) * s_range(
                            lambda m: L(1, nn - m), j + 1, 2 * e - j - 1)
                    return tot

                val = (L(3, n) - L(3, 1 + 3 * e)) / 3 \
                    - L(1, 1 + e) * (s_range(
                        lambda j: L(2, n - j) - L(2, 1 + 3 * e - j), 0, e)
                        + B(n) - B(1 + 3 * e)) \
                    - Fraction(1, 2) * L(2, 1 + 2 * e) * s_range(
                        lambda j: L(1, n - j) - L(1, 1 + 3 * e - j), 0, 2 * e) \
                    + Fraction(3, 2) * L(1, 1 + e) ** 2 * s_range(
                        lambda j: A(j) * (L(1, n - j) - L(1, 1 + 3 * e - j)),
                        0, 2 * e)
            out[(d, pair)] = k * val
    return out


# -- solution basis of the level-k operator --------------------------------


def _dual_mul(u, v):
    return (u[0] * v[0], u[0] * v[1] + u[1] * v[0])


def picard_fuchs_basis(k, j, D):
    """Coefficient series of the j-th solution at the large-volume point.

    j = 0 is the holomorphic solution.  For j = 1 the log-free component
    is returned: the full solution is x times the j = 0 series plus this
    one, and their unit ratio minus x is the mirror map of the level-k
    geometry.  Derivatives are taken with a nilpotent auxiliary, so every
    coefficient stays an exact rational.
    """
    if j not in (0, 1):
        raise ValueError("solution index must be 0 or 1")
    if D < 0:
        raise ValueError("need a non-negative truncation")
    terms = {}
    for d in range(1, D + 1):
        lead = Fraction(math.factorial(k * d), math.factorial(d) ** k)
        val = (lead, _F0)
        for m in range(1, k * d + 1):
            val = _dual_mul(val, (1, Fraction(k, m)))
        for m in range(1, d + 1):
            val = _dual_mul(val, (1, Fraction(-k, m)))
        c = val[j]
        if c:
            terms[(d, 0)] = c
    return GradedSeries(_NO_AFFINE, 1 if j == 0 else 0, terms, D)


# -- modular expansion -----------------------------------------------------


class JExpansion:
    """Exact expansion coefficients j_d alongside the reversion weights w_d."""

    __slots__ = ("j", "w", "dmax")

    def __init__(self, j, w, dmax):
        self.j = tuple(Fraction(v) for v in j)
        self.w = tuple(Fraction(v) for v in w)
        self.dmax = int(dmax)

    def __repr__(self):
        return "<j-expansion through degree %d>" % self.dmax


def _ps_mul(a, b, D):
    out = [_F0] * (D + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for jj in range(0, D + 1 - i):
            if b[jj]:
                out[i + jj] += ai * b[jj]
    return out


def _ps_inv(a, D):
    out = [_F0] * (D + 1)
    out[0] = 1 / a[0]
    for n in range(1, D + 1):
        s = _F0
        for m in range(1, n + 1):
            s += a[m] * out[n - m]
        out[n] = -s / a[0]
    return out


def _ps_log_unit(a, D):
    s = [_F0] + list(a[1:D + 1])
    out = [_F0] * (D + 1)
    power = [Fraction(1)] + [_F0] * D
    for m in range(1, D + 1):
        power = _ps_mul(power, s, D)
        c = Fraction((-1) ** (m + 1), m)
        for i, v in enumerate(power):
            out[i] += c * v
    return out


def reversion_weights(js):
    """Recover the w_d from the j_d via the logarithmic reversion identity."""
    D = len(js)
    A = [Fraction(1)] + [Fraction(v) for v in js]
    target = _ps_log_unit(A, D)
    Ainv = _ps_inv(A, D)
    power = [Fraction(1)] + [_F0] * D
    out = []
    for d in range(1, D + 1):
        power = _ps_mul(power, Ainv, D)
        wd = target[d]
        out.append(wd)
        for i in range(0, D + 1 - d):
            target[i + d] -= wd * power[i]
    return out


def j_coefficients(dmax):
    """Expansion coefficients through q^{dmax-1} from the degree-6 surface.

    Each weight w_d is half the (1, z) two-point number at degree d; the
    coefficient j_d sums the weights over ordered partitions.  The
    reversion identity is re-solved as a cross-check before returning.
    """
    if not 1 <= dmax <= 6:
        raise ValueError("desk-scale expansion stops at degree 6")
    g = geometry("wp2")
    one, zc = Insertion(0), Insertion(1)
    w = [cached_two_point(g, d, one, zc) / 2 for d in range(1, dmax + 1)]
    js = []
    for d in range(1, dmax + 1):
        tot = _F0
        for sigma in ordered_partitions(d):
            l = len(sigma)
            prod = Fraction((-(d - 1)) ** (l - 1), math.factorial(l))
            for dj in sigma:
                prod *= w[dj - 1]
            tot += prod
        js.append(tot)
    if reversion_weights(js) != w:
        raise ArithmeticError("reversion failed to recover the weights")
    if js[0] != 744:
        raise ArithmeticError("leading expansion coefficient is off")
    return JExpansion(js, w, dmax)
