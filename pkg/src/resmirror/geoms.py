"""Fixed-point localization data for the supported target geometries.

A two-point number at degree d is a sum over ordered chains of irreducible
components (compositions of d; for two-form targets, axis-decorated
compositions).  Each chain contributes an amplitude: a product of per-part
deformation/obstruction blocks and per-node smoothing factors, integrated
by one residue per vertex, innermost vertex first.  All amplitudes are
exact rationals.

Supported geometries and their string names:

  cpn   degree-k hypersurface data in projective space of N variables
        (two free integer parameters N >= 2 and k >= 1)
  kf0   canonical bundle of the quadric surface P1 x P1 (free parameter k
        enters only classical pairings; quantum numbers are k-free)
  f3    Hirzebruch surface of twist 3
  wp1   degree-4 hypersurface in the weighted space P(1,1,2,2,2)
  wp2   degree-6 hypersurface in P(1,1,1,3), a K3 surface
  wp3   degree-6 hypersurface in P(1,1,2,2,6)
"""

import re
from fractions import Fraction

from .parts import InvalidDegree, ordered_bipartitions, ordered_partitions
from .polys import RatFunc, VarSet
from .residues import PoleSpec, residue_at, residue_sum


class InvalidInsertion(ValueError):
    """An insertion outside the geometry's cohomology basis."""


class Insertion:
    """A monomial cohomology class, stored as generator exponents.

    One-form geometries use a single exponent (powers of the hyperplane
    class); two-form geometries use a pair (s, t) for z^s w^t.
    """

    __slots__ = ("exps",)

    def __init__(self, *exps):
        self.exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in self.exps):
            raise InvalidInsertion("negative exponent in %r" % (self.exps,))

    def degree(self):
        return sum(self.exps)

    def label(self):
        if len(self.exps) == 1:
            a = self.exps[0]
            return "1" if a == 0 else ("z" if a == 1 else "z%d" % a)
        s, t = self.exps
        if s == 0 and t == 0:
            return "1"
        zs = "" if s == 0 else ("z" if s == 1 else "z%d" % s)
        ws = "" if t == 0 else ("w" if t == 1 else "w%d" % t)
        return zs + ws

    def __eq__(self, other):
        return isinstance(other, Insertion) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return "Insertion(%s)" % ", ".join(map(str, self.exps))


_TWO_FORM_LABEL = re.compile(r"^(?:(z)(\d*))?(?:(w)(\d*))?$")


def parse_insertion(geom, label):
    """Turn a CLI-style label into an Insertion for the given geometry.

    One-form labels: an integer, or "1", "z", "z2", ..., or "h0", "h1", ...
    Two-form labels: "1", "z", "w", "zw", "w2", "z2w3", ...
    """
    if isinstance(label, Insertion):
        return label
    if isinstance(label, int):
        if geom.n_forms != 1:
            raise InvalidInsertion("integer labels are for one-form geometries")
        return Insertion(label)
    if isinstance(label, tuple):
        return Insertion(*label)
    label = str(label).strip()
    if geom.n_forms == 1:
        if label == "1":
            return Insertion(0)
        m = re.match(r"^(?:h|z)?(\d+)$", label) or re.match(r"^(h|z)$", label)
        if not m:
            raise InvalidInsertion("bad label %r" % label)
        g = m.group(1)
        return Insertion(1 if g in ("h", "z") else int(g))
    if label == "1":
        return Insertion(0, 0)
    m = _TWO_FORM_LABEL.match(label)
    if not m or (m.group(1) is None and m.group(3) is None):
        raise InvalidInsertion("bad label %r" % label)
    s = 0 if m.group(1) is None else int(m.group(2) or 1)
    t = 0 if m.group(3) is None else int(m.group(4) or 1)
    return Insertion(s, t)


def _axis(part):
    return "a" if part[0] > 0 else "b"


def _part_deg(part):
    return part[0] + part[1]


class Geometry:
    """Base for all targets; subclasses fill in blocks and residue rules."""

    name = None
    n_forms = None
    dim = None

    def params(self):
        return ()

    def key(self):
        return (self.name,) + tuple(self.params())

    def __repr__(self):
        ps = ", ".join("%s=%s" % kv for kv in self.params())
        return "%s(%s)" % (self.name, ps)

    def basis(self):
        raise NotImplementedError

    def check_insertion(self, a):
        a = parse_insertion(self, a)
        if a not in self.basis():
            raise InvalidInsertion("%s is not in the %s basis" % (a.label(), self.name))
        return a

    def selection_degree(self, dd):
        """Total insertion degree required for a nonzero number at degree dd."""
        raise NotImplementedError

    def kahler_classes(self):
        """Degree-one generators, one per form."""
        raise NotImplementedError

    def pairing_partners(self):
        """Classes of degree dim-1 pairing against the generators."""
        return [a for a in self.basis() if a.degree() == self.dim - 1]

    def two_point(self, dd, a, b):
        """Sum of chain amplitudes at degree dd with the two insertions."""
        a, b = self.check_insertion(a), self.check_insertion(b)
        dd = self._check_degree(dd)
        key = (dd, a.exps, b.exps)
        memo = self.__dict__.setdefault("_memo", {})
        if key not in memo:
            total = Fraction(0)
            for sigma in self._chains(dd):
                total += self.amplitude(sigma, a, b)
            memo[key] = total
        return memo[key]

    def amplitude(self, sigma, a, b):
        raise NotImplementedError

    def classical_triple(self, a, b, c):
        raise NotImplementedError


class _OneFormGeometry(Geometry):
    n_forms = 1

    def _check_degree(self, dd):
        if isinstance(dd, tuple):
            dd, = dd
        if not isinstance(dd, int) or dd <= 0:
            raise InvalidDegree("degree must be a positive integer, got %r" % (dd,))
        return dd

    def _chains(self, d):
        return ordered_partitions(d)


class _TwoFormGeometry(Geometry):
    n_forms = 2

    def kahler_classes(self):
        return [Insertion(1, 0), Insertion(0, 1)]

    def _check_degree(self, dd):
        if not (isinstance(dd, tuple) and len(dd) == 2):
            raise InvalidDegree("bi-degree required, got %r" % (dd,))
        return (int(dd[0]), int(dd[1]))

    def _chains(self, dd):
        return ordered_bipartitions(*dd)

    # residue-step profiles: (w power in the measure, measure carries the
    # branch factor (w - c z), contour also encircles w = c z)
    _RES_FIRST_B = _RES_AB = _RES_BB = _RES_LAST_A = _RES_LAST_B = None
    _BRANCH = None          # c in the movable zero w = c z, if any
    _W_SCALE = Fraction(1)  # orbifold weight per w residue

    def _block_a(self, d, zp, wp, zq):
        raise NotImplementedError

    def _block_b(self, d, wp, wq, zp):
        raise NotImplementedError

    def _node(self, axes, zj, wj, form):
        raise NotImplementedError

    def amplitude(self, sigma, a, b):
        """One chain's contribution, including the 1/deg part prefactors."""
        a, b = self.check_insertion(a), self.check_insertion(b)
        sigma = tuple(tuple(p) for p in sigma)
        l = len(sigma)
        names = []
        for j in range(l + 1):
            names += ["z%d" % j, "w%d" % j]
        vs = VarSet(names)
        z = [vs.poly("z%d" % j) for j in range(l + 1)]
        w = [vs.poly("w%d" % j) for j in range(l + 1)]

        f = RatFunc(z[0] ** a.exps[0] * w[0] ** a.exps[1]
                    * z[l] ** b.exps[0] * w[l] ** b.exps[1])
        for i, part in enumerate(sigma):
            if _axis(part) == "a":
                f = f * self._block_a(part[0], z[i], w[i], z[i + 1])
            else:
                f = f * self._block_b(part[1], w[i], w[i + 1], z[i])
        for j in range(1, l):
            prv, nxt = sigma[j - 1], sigma[j]
            A = (z[j] - z[j - 1]) if _axis(prv) == "a" else (w[j] - w[j - 1])
            B = (z[j] - z[j + 1]) if _axis(nxt) == "a" else (w[j] - w[j + 1])
            form = A * Fraction(1, _part_deg(prv)) + B * Fraction(1, _part_deg(nxt))
            f = f * self._node((_axis(prv), _axis(nxt)), z[j], w[j], form)

        for j in range(l):
            if _axis(sigma[j]) == "a":
                f = f.substitute("w%d" % j, w[j + 1])
                f = f * RatFunc(vs.const(1), [(z[j], 2)])
                f = residue_at(f, PoleSpec("z%d" % j, 0))
            else:
                if j == 0:
                    prof = self._RES_FIRST_B
                else:
                    prof = self._RES_AB if _axis(sigma[j - 1]) == "a" else self._RES_BB
                f = self._w_residue(f, "w%d" % j, z[j], prof)
                f = f.substitute("z%d" % j, z[j + 1])
        prof = self._RES_LAST_A if _axis(sigma[-1]) == "a" else self._RES_LAST_B
        f = self._w_residue(f, "w%d" % l, z[l], prof)
        f = f * RatFunc(vs.const(1), [(z[l], 2)])
        f = residue_at(f, PoleSpec("z%d" % l, 0))

        val = f.as_rational()
        for part in sigma:
            val /= _part_deg(part)
        return val

    def _w_residue(self, f, wname, zj, prof):
        power, with_factor, with_branch_pole = prof
        wj = f.vars.poly(wname)
        den = [(wj, power)]
        specs = [PoleSpec(wname, 0)]
        if with_factor:
            den.append((wj - self._BRANCH * zj, 1))
        if with_factor or with_branch_pole:
            specs.append(PoleSpec(wname, self._BRANCH * zj))
        f = f * RatFunc(f.vars.const(1), den)
        out = residue_sum(f, specs)
        if self._W_SCALE != 1:
            out = out * self._W_SCALE
        return out


def _linform(c1, p1, c2, p2, scale):
    return (p1 * c1 + p2 * c2) * scale


class CpnGeometry(_OneFormGeometry):
    """Two-point numbers of degree-k hypersurface data in projective space.

    Insertions are powers of the hyperplane class, 0 .. N-2.  Chains are
    plain compositions; every vertex carries one variable, integrated about
    the origin in descending vertex order.
    """

    name = "cpn"

    def __init__(self, N, k):
        if N < 2 or k < 1:
            raise ValueError("need N >= 2 and k >= 1")
        self.N = int(N)
        self.k = int(k)
        self.dim = N - 2

    def params(self):
        return (("N", self.N), ("k", self.k))

    def basis(self):
        return [Insertion(i) for i in range(self.N - 1)]

    def selection_degree(self, d):
        return self.N - 3 + (self.N - self.k) * d

    def kahler_classes(self):
        return [Insertion(1)]

    def classical_triple(self, a, b, c):
        a, b, c = (self.check_insertion(x) for x in (a, b, c))
        deg = a.degree() + b.degree() + c.degree()
        return Fraction(self.k) if deg == self.N - 2 else Fraction(0)

    def amplitude(self, sigma, a, b):
        a, b = self.check_insertion(a), self.check_insertion(b)
        sigma = tuple(sigma)
        l = len(sigma)
        vs = VarSet(["z%d" % j for j in range(l + 1)])
        z = [vs.poly("z%d" % j) for j in range(l + 1)]
        num = z[0] ** a.exps[0] * z[l] ** b.exps[0]
        den = [(zz, self.N) for zz in z]
        for i, d in enumerate(sigma):
            zp, zq = z[i], z[i + 1]
            for j in range(0, self.k * d + 1):
                num = num * _linform(j, zp, self.k * d - j, zq, Fraction(1, d))
            for j in range(1, d):
                den.append((_linform(j, zp, d - j, zq, Fraction(1, d)), self.N))
        for j in range(1, l):
            form = (z[j] - z[j - 1]) * Fraction(1, sigma[j - 1]) \
                 + (z[j] - z[j + 1]) * Fraction(1, sigma[j])
            den += [(form, 1), (z[j], 1)]
            num = num * Fraction(1, self.k)
        f = RatFunc(num, den)
        for j in range(l, -1, -1):
            f = residue_at(f, PoleSpec("z%d" % j, 0))
        val = f.as_rational()
        for d in sigma:
            val /= d
        return val


class Kf0Geometry(_TwoFormGeometry):
    """The canonical bundle over P1 x P1 (a local surface).

    Quantum two-point numbers are independent of the ring parameter k; the
    classical triple pairing is a k-linear table on the six-element virtual
    ring {1, z, w, z^2, zw, z^3}.
    """

    name = "kf0"
    dim = 3

    _RES_FIRST_B = _RES_AB = _RES_BB = (2, False, False)
    _RES_LAST_A = _RES_LAST_B = (2, False, False)

    def __init__(self, k=1):
        self.k = int(k)

    def params(self):
        return (("k", self.k),)

    def basis(self):
        return [Insertion(0, 0), Insertion(1, 0), Insertion(0, 1), Insertion(1, 1)]

    def virtual_ring(self):
        return [Insertion(0, 0), Insertion(1, 0), Insertion(0, 1),
                Insertion(2, 0), Insertion(1, 1), Insertion(3, 0)]

    def pairing_partners(self):
        # degree-two slots of the virtual ring; the basis alone lacks z^2
        return [Insertion(2, 0), Insertion(1, 1)]

    def selection_degree(self, dd):
        return 2

    def classical_triple(self, a, b, c):
        table = {(3, 0): Fraction(self.k), (2, 1): Fraction(-self.k),
                 (1, 2): Fraction(self.k) - Fraction(1, 2),
                 (0, 3): Fraction(1, 2) - Fraction(self.k)}
        exps = [parse_insertion(self, x) for x in (a, b, c)]
        ring = self.virtual_ring()
        for x in exps:
            if x not in ring:
                raise InvalidInsertion("%s is outside the virtual ring" % x.label())
        s = sum(x.exps[0] for x in exps)
        t = sum(x.exps[1] for x in exps)
        return table.get((s, t), Fraction(0))

    def _block_a(self, d, zp, wp, zq):
        # obstruction roots (i(zp - zq))/d - 2 zp - 2 wp with the same-axis
        # -2 zp absorbed into the linear part; only -2 wp stays undivided
        num = zp.vars.const(1)
        for i in range(1, 2 * d):
            num = num * ((-i * zp - (2 * d - i) * zq) * Fraction(1, d) - 2 * wp)
        den = [(_linform(i, zp, d - i, zq, Fraction(1, d)), 2) for i in range(1, d)]
        return RatFunc(num, den)

    def _block_b(self, d, wp, wq, zp):
        num = wp.vars.const(1)
        for i in range(1, 2 * d):
            num = num * ((-i * wp - (2 * d - i) * wq) * Fraction(1, d) - 2 * zp)
        den = [(_linform(i, wp, d - i, wq, Fraction(1, d)), 2) for i in range(1, d)]
        return RatFunc(num, den)

    def _node(self, axes, zj, wj, form):
        return RatFunc(-2 * (zj + wj), [(form, 1)])


class F3Geometry(_TwoFormGeometry):
    """The Hirzebruch surface of twist 3 (fiber class squares to zero)."""

    name = "f3"
    dim = 2

    _BRANCH = 3
    _RES_FIRST_B = _RES_BB = _RES_LAST_B = (1, True, True)
    _RES_AB = (1, False, False)
    _RES_LAST_A = (1, False, False)

    def basis(self):
        return [Insertion(0, 0), Insertion(1, 0), Insertion(0, 1), Insertion(0, 2)]

    def selection_degree(self, dd):
        da, db = dd
        return 1 - da + 2 * db

    def classical_triple(self, a, b, c):
        a, b, c = (self.check_insertion(x) for x in (a, b, c))
        vs = VarSet(["z", "w"])
        zz, ww = vs.poly("z"), vs.poly("w")
        s = a.exps[0] + b.exps[0] + c.exps[0]
        t = a.exps[1] + b.exps[1] + c.exps[1]
        f = RatFunc(zz ** s * ww ** t, [(ww, 1), (ww - 3 * zz, 1), (zz, 2)])
        g = residue_sum(f, [PoleSpec("w", 0), PoleSpec("w", 3 * zz)])
        return residue_at(g, PoleSpec("z", 0)).as_rational()

    def _block_a(self, d, zp, wp, zq):
        num = zp.vars.const(1)
        for i in range(1, 3 * d):
            num = num * ((-i * zp - (3 * d - i) * zq) * Fraction(1, d) + wp)
        den = [(_linform(i, zp, d - i, zq, Fraction(1, d)), 2) for i in range(1, d)]
        return RatFunc(num, den)

    def _block_b(self, d, wp, wq, zp):
        den = []
        for i in range(1, d):
            pt = _linform(i, wp, d - i, wq, Fraction(1, d))
            den += [(pt - 3 * zp, 1), (pt, 1)]
        return RatFunc(wp.vars.const(1), den)

    def _node(self, axes, zj, wj, form):
        num = (wj - 3 * zj) if axes == ("a", "a") else zj.vars.const(1)
        return RatFunc(num, [(form, 1)])


class Wp1Geometry(_TwoFormGeometry):
    """Degree-4 hypersurface in P(1,1,2,2,2), fibered over P1."""

    name = "wp1"
    dim = 3

    _BRANCH = 2
    _RES_FIRST_B = _RES_BB = _RES_LAST_B = (3, True, True)
    _RES_AB = (3, False, True)
    _RES_LAST_A = (3, False, True)

    def basis(self):
        return [Insertion(s, t) for t in range(4) for s in range(2)]

    def selection_degree(self, dd):
        return 2

    def classical_triple(self, a, b, c):
        a, b, c = (self.check_insertion(x) for x in (a, b, c))
        vs = VarSet(["z", "w"])
        zz, ww = vs.poly("z"), vs.poly("w")
        s = a.exps[0] + b.exps[0] + c.exps[0]
        t = a.exps[1] + b.exps[1] + c.exps[1] + 1
        f = RatFunc(4 * zz ** s * ww ** t, [(ww, 3), (ww - 2 * zz, 1), (zz, 2)])
        g = residue_sum(f, [PoleSpec("w", 0), PoleSpec("w", 2 * zz)])
        return residue_at(g, PoleSpec("z", 0)).as_rational()

    def _block_a(self, d, zp, wp, zq):
        num = 4 * wp
        for i in range(1, 2 * d):
            num = num * ((-i * zp - (2 * d - i) * zq) * Fraction(1, d) + wp)
        den = [(_linform(i, zp, d - i, zq, Fraction(1, d)), 2) for i in range(1, d)]
        return RatFunc(num, den)

    def _block_b(self, d, wp, wq, zp):
        num = wp.vars.const(1)
        for i in range(0, 4 * d + 1):
            num = num * _linform(i, wp, 4 * d - i, wq, Fraction(1, d))
        den = []
        for i in range(1, d):
            pt = _linform(i, wp, d - i, wq, Fraction(1, d))
            den += [(pt, 3), (pt - 2 * zp, 1)]
        return RatFunc(num, den)

    def _node(self, axes, zj, wj, form):
        num = (wj - 2 * zj) if axes == ("a", "a") else zj.vars.const(1)
        return RatFunc(num * Fraction(1, 4), [(form, 1), (wj, 1)])


class Wp2Geometry(_OneFormGeometry):
    """Degree-6 hypersurface in P(1,1,1,3): a K3 surface with one form.

    Every vertex residue carries the orbifold weight 1/3 and a fourth-order
    pole at the origin.
    """

    name = "wp2"
    dim = 2

    def basis(self):
        return [Insertion(i) for i in range(4)]

    def selection_degree(self, d):
        return 1

    def kahler_classes(self):
        return [Insertion(1)]

    def classical_triple(self, a, b, c):
        a, b, c = (self.check_insertion(x) for x in (a, b, c))
        vs = VarSet(["z"])
        zz = vs.poly("z")
        s = a.exps[0] + b.exps[0] + c.exps[0] + 1
        f = RatFunc(6 * zz ** s * Fraction(1, 3), [(zz, 4)])
        return residue_at(f, PoleSpec("z", 0)).as_rational()

    def amplitude(self, sigma, a, b):
        a, b = self.check_insertion(a), self.check_insertion(b)
        sigma = tuple(sigma)
        l = len(sigma)
        vs = VarSet(["z%d" % j for j in range(l + 1)])
        z = [vs.poly("z%d" % j) for j in range(l + 1)]
        num = z[0] ** a.exps[0] * z[l] ** b.exps[0] * Fraction(1, 3) ** (l + 1)
        den = [(zz, 4) for zz in z]
        for i, d in enumerate(sigma):
            zp, zq = z[i], z[i + 1]
            for j in range(0, 6 * d + 1):
                num = num * _linform(j, zp, 6 * d - j, zq, Fraction(1, d))
            for j in range(1, d):
                den.append((_linform(j, zp, d - j, zq, Fraction(1, d)), 3))
            for j in range(1, 3 * d):
                den.append((_linform(j, zp, 3 * d - j, zq, Fraction(1, d)), 1))
        for j in range(1, l):
            form = (z[j] - z[j - 1]) * Fraction(1, sigma[j - 1]) \
                 + (z[j] - z[j + 1]) * Fraction(1, sigma[j])
            den += [(form, 1), (z[j], 1)]
            num = num * Fraction(1, 6)
        f = RatFunc(num, den)
        for j in range(0, l + 1):
            f = residue_at(f, PoleSpec("z%d" % j, 0))
        val = f.as_rational()
        for d in sigma:
            val /= d
        return val


class Wp3Geometry(_TwoFormGeometry):
    """Degree-6 hypersurface in P(1,1,2,2,6), fibered over P1.

    The fiber is the P(1,1,1,3) model: two unit-weight directions, one
    twisted unit-weight direction, one weight-3 direction; each fiber
    residue carries the orbifold weight 1/3.
    """

    name = "wp3"
    dim = 3

    _BRANCH = 2
    _W_SCALE = Fraction(1, 3)
    _RES_FIRST_B = _RES_BB = _RES_LAST_B = (3, True, True)
    _RES_AB = (3, False, True)
    _RES_LAST_A = (3, False, True)

    def basis(self):
        return [Insertion(s, t) for t in range(4) for s in range(2)]

    def selection_degree(self, dd):
        return 2

    def classical_triple(self, a, b, c):
        a, b, c = (self.check_insertion(x) for x in (a, b, c))
        vs = VarSet(["z", "w"])
        zz, ww = vs.poly("z"), vs.poly("w")
        s = a.exps[0] + b.exps[0] + c.exps[0]
        t = a.exps[1] + b.exps[1] + c.exps[1] + 1
        f = RatFunc(2 * zz ** s * ww ** t, [(ww, 3), (ww - 2 * zz, 1), (zz, 2)])
        g = residue_sum(f, [PoleSpec("w", 0), PoleSpec("w", 2 * zz)])
        return residue_at(g, PoleSpec("z", 0)).as_rational()

    def _block_a(self, d, zp, wp, zq):
        num = 6 * wp
        for i in range(1, 2 * d):
            num = num * ((-i * zp - (2 * d - i) * zq) * Fraction(1, d) + wp)
        den = [(_linform(i, zp, d - i, zq, Fraction(1, d)), 2) for i in range(1, d)]
        return RatFunc(num, den)

    def _block_b(self, d, wp, wq, zp):
        num = wp.vars.const(1)
        for i in range(0, 6 * d + 1):
            num = num * _linform(i, wp, 6 * d - i, wq, Fraction(1, d))
        den = []
        for i in range(1, d):
            pt = _linform(i, wp, d - i, wq, Fraction(1, d))
            den += [(pt, 2), (pt - 2 * zp, 1)]
        for i in range(1, 3 * d):
            den.append((_linform(i, wp, 3 * d - i, wq, Fraction(1, d)), 1))
        return RatFunc(num, den)

    def _node(self, axes, zj, wj, form):
        num = (wj - 2 * zj) if axes == ("a", "a") else zj.vars.const(1)
        return RatFunc(num * Fraction(1, 6), [(form, 1), (wj, 1)])


_GEOMETRIES = {
    "cpn": CpnGeometry,
    "kf0": Kf0Geometry,
    "f3": F3Geometry,
    "wp1": Wp1Geometry,
    "wp2": Wp2Geometry,
    "wp3": Wp3Geometry,
}

_INSTANCES = {}


def geometry(name, **params):
    """Shared geometry instances, so two-point memoization is global."""
    if name not in _GEOMETRIES:
        raise ValueError("unknown geometry %r (have: %s)" % (name, ", ".join(sorted(_GEOMETRIES))))
    key = (name, tuple(sorted(params.items())))
    if key not in _INSTANCES:
        _INSTANCES[key] = _GEOMETRIES[name](**params)
    return _INSTANCES[key]


def amplitude(g, sigma, a, b):
    return g.amplitude(sigma, a, b)


def classical_triple(g, a, b, c):
    return g.classical_triple(a, b, c)


def two_point_cpn(N, k, d, a, b):
    return geometry("cpn", N=N, k=k).two_point(d, a, b)


def two_point_kf0(dd, a, b, k=1):
    return geometry("kf0", k=k).two_point(dd, a, b)


def two_point_f3(dd, a, b):
    return geometry("f3").two_point(dd, a, b)


def two_point_wp1(dd, a, b):
    return geometry("wp1").two_point(dd, a, b)


def two_point_wp2(d, a, b):
    return geometry("wp2").two_point(d, a, b)


def two_point_wp3(dd, a, b):
    return geometry("wp3").two_point(dd, a, b)
