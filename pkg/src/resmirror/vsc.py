"""Structure constants of the quantum ring, by recursion and by residues.

The constant family L(N, k, d, n) attached to a degree-k hypersurface in
projective space of N variables is pinned down two independent ways:

  * a recursion in N, grounded at N >= 2k, whose step expands a universal
    polynomial (one per degree d) and maps each monomial to a product of
    constants at level N + 1;
  * a residue formula: a rescaled two-point number of the cpn geometry.

The agreement of the two routes is a checkable statement, wired up in
:func:`check_theorem1`.  A third route, :func:`vsc_merged_contour`, fuses
the chain sum into one contour integral with movable poles; it must agree
with both and is exercised by the test suite at low degree.

The universal polynomials rest on one combinatorial fact: the product
z_1 ... z_{d-1} decomposes uniquely over products of the node forms
r_i = 2z_i - z_{i-1} - z_{i+1}, with each coefficient polynomial depending
only on the endpoints and its own indexed variables.  The coefficients are
solved for exactly (:func:`decomposition_coefficient`); a contour
representation of the same coefficients is kept as an independent oracle
(:func:`decomposition_by_contours`).
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from threading import Lock

from ._linalg import solve
from .geoms import two_point_cpn
from .polys import MultiPoly, RatFunc, VarSet
from .residues import PoleSpec, residue_at


class InvalidComb(ValueError):
    """An index set outside 1 <= i_1 < ... < i_k <= d-1."""


def _on_vars(p, vs, rename=None):
    """The same polynomial re-indexed onto another variable set, by name."""
    rename = rename or {}
    out = {}
    for exps, coef in p.terms.items():
        tgt = [0] * len(vs.names)
        for pos, e in enumerate(exps):
            if e:
                name = p.vars.names[pos]
                tgt[vs.index(rename.get(name, name))] += e
        out[tuple(tgt)] = out.get(tuple(tgt), 0) + coef
    return MultiPoly(vs, out)


def _as_poly(f):
    f = f.reduce()
    if f.den:
        raise ArithmeticError("residue result is not polynomial: %r" % (f,))
    return f.num


def _check_indices(d, indices):
    idx = tuple(int(i) for i in indices)
    if list(idx) != sorted(set(idx)) or any(not 1 <= i <= d - 1 for i in idx):
        raise InvalidComb(
            "need 1 <= i_1 < ... < i_k <= %d, got %r" % (d - 1, indices))
    return idx


def _interior_subsets(d):
    items = range(1, d)
    for mask in range(1 << (d - 1)):
        yield tuple(i for i in items if mask >> (i - 1) & 1)


def _supported_monomials(positions, deg, nvars):
    """Exponent tuples of total degree deg using only the given positions."""
    for pick in combinations_with_replacement(positions, deg):
        e = [0] * nvars
        for p in pick:
            e[p] += 1
        yield tuple(e)


_DEC_CACHE = {}


def _decomposition_table(d):
    """All decomposition coefficients f_S at once, S over interior subsets.

    Unknowns are the monomial coefficients of every f_S (homogeneous of
    degree d-1-|S|, supported on z_0, z_d and the indexed variables);
    matching all degree-(d-1) monomials of the defining identity gives a
    square linear system, and its unique solution is the table.
    """
    if d in _DEC_CACHE:
        return _DEC_CACHE[d]
    vs = VarSet(["z%d" % j for j in range(d + 1)])
    z = [vs.poly("z%d" % j) for j in range(d + 1)]
    slots = []
    columns = []
    for sub in _interior_subsets(d):
        rprod = vs.const(1)
        for i in sub:
            rprod = rprod * (2 * z[i] - z[i - 1] - z[i + 1])
        for mono in _supported_monomials((0,) + sub + (d,), d - 1 - len(sub), d + 1):
            slots.append((sub, mono))
            columns.append({tuple(a + b for a, b in zip(e, mono)): c
                            for e, c in rprod.terms.items()})
    rows = sorted({key for col in columns for key in col})
    if len(rows) != len(slots):
        raise ArithmeticError(
            "decomposition system is not square: %d rows, %d unknowns"
            % (len(rows), len(slots)))
    target = tuple(int(1 <= j <= d - 1) for j in range(d + 1))
    matrix = [[col.get(key, 0) for col in columns] for key in rows]
    rhs = [int(key == target) for key in rows]
    sol = solve(matrix, rhs)
    table = {}
    for (sub, mono), c in zip(slots, sol):
        table.setdefault(sub, vs.zero())
        if c:
            table[sub] = table[sub] + vs.monomial(mono, c)
    _DEC_CACHE[d] = table
    return table


def decomposition_coefficient(d, indices):
    """The polynomial weighting prod(r_i for i in indices) when the product
    z_1 ... z_{d-1} is expanded over the node forms r_i = 2z_i - z_{i-1} - z_{i+1}.

    Returned on variables z0 .. z{d}; it only involves z0, z{d} and the
    indexed interior variables, and is homogeneous of degree d-1-len(indices).
    """
    d = int(d)
    if d < 1:
        raise InvalidComb("d must be positive, got %r" % (d,))
    return _decomposition_table(d)[_check_indices(d, indices)]


def _movable_residues(f, forms, names, fixed):
    """Iterated residues where each contour follows one denominator form.

    ``forms`` maps a variable name to the node form whose root the contour
    encircles (along with any ``fixed`` locations for that variable); the
    other denominator factors contribute no poles, however the variable
    enters them.  Residues substitute the pole location everywhere, so the
    not-yet-integrated forms are carried per branch and updated after each
    step; branches never merge until all variables are gone.
    """
    branches = [(f, forms)]
    for name in names:
        nxt = []
        for g, live in branches:
            locs = list(fixed.get(name, ()))
            own = live.get(name)
            if own is not None and own.max_exp(name) == 1:
                parts = own.split_by(name)
                if not parts[1].is_constant():
                    raise ArithmeticError("movable pole is not linear: %r" % (own,))
                root = parts.get(0, own.vars.zero()) * (
                    Fraction(-1) / parts[1].constant_value())
                if all(root != q for q in locs):
                    locs.append(root)
            elif own is not None and own.max_exp(name) > 1:
                raise ArithmeticError("movable pole is not linear: %r" % (own,))
            for loc in locs:
                res = residue_at(g, PoleSpec(name, loc))
                if res.is_zero():
                    continue
                nxt.append((res, {h: p.subs(name, loc)
                                  for h, p in live.items() if h != name}))
        branches = nxt
    total = RatFunc(f.vars.const(0))
    for g, _ in branches:
        total = total + g
    return total.reduce()


def decomposition_by_contours(d, indices, order=None):
    """decomposition_coefficient from its contour representation.

    Endpoint variables are integrated about z_0 and z_d; each interior
    variable about the root of its own node form, plus z_i when indexed.
    ``order`` permutes the interior steps; the result is order-independent
    (a fact the tests exercise).  Kept as an oracle for the solved route.
    """
    d = int(d)
    if d < 1:
        raise InvalidComb("d must be positive, got %r" % (d,))
    idx = _check_indices(d, indices)
    vs = VarSet(["u%d" % j for j in range(d + 1)]
                + ["z%d" % j for j in range(d + 1)])
    u = [vs.poly("u%d" % j) for j in range(d + 1)]
    z = [vs.poly("z%d" % j) for j in range(d + 1)]
    num = vs.const(1)
    den = [(u[0] - z[0], 1), (u[d] - z[d], 1)]
    forms = {}
    fixed = {"u0": [z[0]], "u%d" % d: [z[d]]}
    for j in range(1, d):
        num = num * u[j]
        forms["u%d" % j] = 2 * u[j] - u[j - 1] - u[j + 1]
    for i in idx:
        den.append((u[i] - z[i], 1))
        fixed["u%d" % i] = [z[i]]
    den += [(forms["u%d" % j], 1) for j in range(1, d)]
    names = ["u0", "u%d" % d] + ["u%d" % j for j in (order or range(1, d))]
    f = _movable_residues(RatFunc(num, den), forms, names, fixed)
    bounds = (0,) + idx + (d,)
    pref = 1
    for lo, hi in zip(bounds, bounds[1:]):
        pref *= hi - lo
    out = VarSet(["z%d" % j for j in range(d + 1)])
    return _on_vars(_as_poly(f) * pref, out)


_POLY_CACHE = {}


def poly_d(d):
    """The degree-(d-1) universal polynomial in x, y, z1 .. z{d-1} whose
    monomials drive one step of the level recursion."""
    d = int(d)
    if d < 1:
        raise InvalidComb("d must be positive, got %r" % (d,))
    if d not in _POLY_CACHE:
        vs = VarSet(["x", "y"] + ["z%d" % i for i in range(1, d)])
        rename = {"z0": "x", "z%d" % d: "y"}
        total = vs.const(0)
        for comb in _interior_subsets(d):
            bounds = (0,) + comb + (d,)
            coef = Fraction(d)
            for lo, hi in zip(bounds, bounds[1:]):
                coef /= hi - lo
            term = vs.const(1) * coef
            for i in comb:
                term = term * vs.poly("z%d" % i)
            f = _on_vars(decomposition_coefficient(d, comb), vs, rename)
            total = total + term * f
        _POLY_CACHE[d] = total
    return _POLY_CACHE[d]


def poly_d_direct(d):
    """poly_d evaluated straight from its movable-pole contour definition.

    Each interior variable is integrated about z_j and about the root of
    its own node form, innermost first.  Slower and kept as a low-degree
    oracle; use poly_d elsewhere.
    """
    d = int(d)
    if d < 1:
        raise InvalidComb("d must be positive, got %r" % (d,))
    out = VarSet(["x", "y"] + ["z%d" % i for i in range(1, d)])
    if d == 1:
        return out.const(1)
    vs = VarSet(["u%d" % j for j in range(1, d)] + list(out.names))
    u = {j: vs.poly("u%d" % j) for j in range(1, d)}
    u[0], u[d] = vs.poly("x"), vs.poly("y")
    num = vs.const(1)
    den = []
    forms = {}
    fixed = {}
    for j in range(1, d):
        num = num * u[j] ** 2
        forms["u%d" % j] = 2 * u[j] - u[j - 1] - u[j + 1]
        fixed["u%d" % j] = [vs.poly("z%d" % j)]
        den += [(forms["u%d" % j], 1), (u[j] - vs.poly("z%d" % j), 1)]
    names = ["u%d" % j for j in range(1, d)]
    f = _movable_residues(RatFunc(num, den), forms, names, fixed)
    return _on_vars(_as_poly(f) * d, out)


def _initial_coeffs(k):
    """Coefficient list of the grounding polynomial k * prod(j w + (k - j))."""
    poly = [1]
    for j in range(1, k):
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] += c * (k - j)
            nxt[i + 1] += c * j
        poly = nxt
    return [Fraction(k * c) for c in poly]


_MEMO = {}
_MEMO_LOCK = Lock()


def vsc_recursive(N, k, d, n):
    """L(N, k, d, n) by the level recursion, memoized.

    Out-of-range n yields zero; the recursion grounds where N >= 2k.
    """
    N, k, d, n = int(N), int(k), int(d), int(n)
    if N < 2 or k < 1 or d < 1:
        raise ValueError("need N >= 2, k >= 1, d >= 1")
    if not 0 <= n <= N - 1 - (N - k) * d:
        return Fraction(0)
    key = (N, k, d, n)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    if N >= 2 * k:
        val = _initial_coeffs(k)[n] if d == 1 else Fraction(0)
    else:
        p = poly_d(d)
        val = Fraction(0)
        for exps, coef in p.terms.items():
            points = [0]
            ms = [exps[p.vars.index("x")]]
            for i in range(1, d):
                e = exps[p.vars.index("z%d" % i)]
                if e:
                    points.append(i)
                    ms.append(e)
            points.append(d)
            ms.append(exps[p.vars.index("y")])
            term = Fraction(coef)
            for j in range(1, len(points)):
                delta = points[j - 1] * (N - k + 1) + 1 - d + sum(ms[j:])
                term *= vsc_recursive(N + 1, k, points[j] - points[j - 1], n + delta)
                if not term:
                    break
            val += term
    with _MEMO_LOCK:
        _MEMO[key] = val
    return val


def vsc_residue(N, k, d, n):
    """L(N, k, d, n) from the cpn two-point number at matched insertions."""
    N, k, d, n = int(N), int(k), int(d), int(n)
    return Fraction(d, k) * two_point_cpn(N, k, d, N - 2 - n, n - 1 + (N - k) * d)


def vsc_merged_contour(N, k, d, n):
    """L(N, k, d, n) as a single iterated contour with movable interior poles.

    Interior variables are integrated about both the origin and the midpoint
    of their neighbors, innermost first; the endpoint variables about the
    origin only.  Unlike vsc_residue, the endpoint exponents may be negative
    here.
    """
    N, k, d, n = int(N), int(k), int(d), int(n)
    vs = VarSet(["z%d" % j for j in range(d + 1)])
    z = [vs.poly("z%d" % j) for j in range(d + 1)]
    num = vs.const(1)
    den = []
    for j, e in ((0, N - 2 - n), (d, n - 1 + (N - k) * d)):
        if e >= 0:
            num = num * z[j] ** e
        else:
            den.append((z[j], -e))
    den += [(z[0], N), (z[d], N)]
    forms = {}
    fixed = {"z0": [0], "z%d" % d: [0]}
    for i in range(1, d):
        forms["z%d" % i] = 2 * z[i] - z[i - 1] - z[i + 1]
        fixed["z%d" % i] = [vs.const(0)]
        den += [(z[i], N), (forms["z%d" % i], 1), (k * z[i], 1)]
    for j in range(1, d + 1):
        for m in range(0, k + 1):
            num = num * (m * z[j - 1] + (k - m) * z[j])
    names = ["z%d" % i for i in range(1, d)] + ["z0", "z%d" % d]
    f = _movable_residues(RatFunc(num, den), forms, names, fixed)
    return Fraction(d, k) * f.as_rational()


class Theorem1Report:
    """Per-n comparison of the recursive and residue routes."""

    def __init__(self, N, k, d, rows):
        self.N, self.k, self.d = N, k, d
        self.rows = rows

    @property
    def ok(self):
        return all(rec == res for _, rec, res in self.rows)

    def lines(self):
        out = []
        for n, rec, res in self.rows:
            mark = "ok" if rec == res else "MISMATCH"
            out.append("n=%d recursive=%s residue=%s %s" % (n, rec, res, mark))
        out.append("theorem1 N=%d k=%d d=%d: %s"
                   % (self.N, self.k, self.d, "agree" if self.ok else "DISAGREE"))
        return out


def check_theorem1(N, k, d):
    """Compare vsc_recursive and vsc_residue on every n both routes cover."""
    N, k, d = int(N), int(k), int(d)
    lo = max(0, 1 - (N - k) * d)
    hi = min(N - 2, N - 1 - (N - k) * d)
    rows = [(n, vsc_recursive(N, k, d, n), vsc_residue(N, k, d, n))
            for n in range(lo, hi + 1)]
    return Theorem1Report(N, k, d, rows)
