"""Sparse multivariate polynomials and rational functions over the rationals.

Every coefficient is an exact rational (a Python int or a
:class:`fractions.Fraction`); no floats ever enter.  A polynomial is a dict
mapping exponent tuples to coefficients, indexed against a fixed ordered
:class:`VarSet`.  A rational function keeps its denominator as a list of
(polynomial factor, multiplicity) pairs and never expands it; cancellation
is by trial division of the numerator by denominator factors only, which is
all the residue calculus downstream needs.
"""

from fractions import Fraction


class IdenticallySingular(ArithmeticError):
    """A substitution or expansion made a denominator factor vanish identically."""


def _as_coeff(c):
    if isinstance(c, (int, Fraction)):
        return c
    raise TypeError("coefficient must be an int or Fraction, got %r" % (c,))


class VarSet:
    """An ordered, immutable set of variable names.

    Exponent tuples of every polynomial built against this set are indexed
    by position in `names`.  Two VarSets compare equal iff their name tuples
    are equal; mixing polynomials from different sets is an error.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names: %r" % (names,))
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, VarSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "VarSet(%s)" % ", ".join(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError("no variable %r in %r" % (name, self)) from None

    def zero(self):
        return MultiPoly(self, {})

    def const(self, c):
        c = _as_coeff(c)
        if c == 0:
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * len(self.names): c})

    def poly(self, name):
        """The variable `name` as a degree-one monomial."""
        e = [0] * len(self.names)
        e[self.index(name)] = 1
        return MultiPoly(self, {tuple(e): 1})

    def monomial(self, exps, c=1):
        exps = tuple(exps)
        assert len(exps) == len(self.names)
        if c == 0:
            return MultiPoly(self, {})
        return MultiPoly(self, {exps: _as_coeff(c)})


class MultiPoly:
    """A sparse polynomial: {exponent tuple: nonzero rational coefficient}.

    Treat instances as immutable.  Arithmetic always returns new objects and
    never stores a zero coefficient.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars_, terms):
        self.vars = vars_
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- basic queries ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        """The value of a constant polynomial, as a plain rational."""
        if not self.terms:
            return Fraction(0)
        (e, c), = self.terms.items()
        if any(e):
            raise ValueError("not a constant: %r" % self)
        return Fraction(c)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def max_exp(self, name):
        i = self.vars.index(name)
        if not self.terms:
            return 0
        return max(e[i] for e in self.terms)

    def min_exp(self, name):
        i = self.vars.index(name)
        if not self.terms:
            return 0
        return min(e[i] for e in self.terms)

    def leading(self):
        """(exponent tuple, coefficient) of the lexicographically largest term."""
        e = max(self.terms)
        return e, self.terms[e]

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError("mixing distinct variable sets")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.vars.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.vars.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.vars.zero()
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        out = self.vars.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.vars.const(other)
        return isinstance(other, MultiPoly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                n if k == 1 else "%s^%d" % (n, k)
                for n, k in zip(self.vars.names, e) if k
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append("%s*%s" % (c, mono))
        s = " + ".join(bits)
        return s.replace("+ -", "- ")

    # -- substitution and evaluation --------------------------------------

    def split_by(self, name):
        """Decompose as sum_j v^j * A_j(rest); returns {j: MultiPoly}.

        Each A_j lives on the same VarSet with zero exponent in `name`.
        """
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            j = e[i]
            rest = e[:i] + (0,) + e[i + 1:]
            d = out.setdefault(j, {})
            d[rest] = d.get(rest, 0) + c
        return {j: MultiPoly(self.vars, d) for j, d in out.items()}

    def subs(self, name, value):
        """Substitute `value` (polynomial or rational) for the variable.

        The value may itself involve the substituted variable; the split is
        taken first, so e.g. subs("z", z + a) is the shift z -> z + a.
        """
        if isinstance(value, (int, Fraction)):
            value = self.vars.const(value)
        self._check(value)
        parts = self.split_by(name)
        out = self.vars.zero()
        # Horner over descending powers keeps the number of multiplies at
        # max-exponent even for sparse splits.
        degs = sorted(parts, reverse=True)
        top = degs[0] if degs else 0
        acc = self.vars.zero()
        for j in range(top, -1, -1):
            if j != top:
                acc = acc * value
            if j in parts:
                acc = acc + parts[j]
        return acc if degs else out

    def evaluate(self, assignment):
        """Full evaluation; `assignment` maps every used variable name to a rational."""
        total = Fraction(0)
        vals = [assignment.get(n) for n in self.vars.names]
        for e, c in self.terms.items():
            v = Fraction(c)
            for x, k in zip(vals, e):
                if k:
                    if x is None:
                        raise KeyError("unassigned variable with nonzero exponent")
                    v *= Fraction(x) ** k
            total += v
        return total

    def exact_div(self, divisor):
        """Exact polynomial quotient self/divisor, or None if it does not divide.

        Single-divisor long division in lexicographic term order; only exact
        leading-term steps are taken, so a None return is a proof of
        non-divisibility within this monomial order.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        de, dc = divisor.leading()
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem)
            diff = tuple(a - b for a, b in zip(e, de))
            if any(x < 0 for x in diff):
                return None
            q = Fraction(rem[e], 1) / dc if isinstance(rem[e], int) else rem[e] / dc
            if q.denominator == 1:
                q = int(q)
            quot[diff] = q
            for e2, c2 in divisor.terms.items():
                tgt = tuple(a + b for a, b in zip(diff, e2))
                s = rem.get(tgt, 0) - q * c2
                if s:
                    rem[tgt] = s
                else:
                    rem.pop(tgt, None)
        return MultiPoly(self.vars, quot)


def poly_combine(op, p, q):
    """Combine two polynomials: op is "add", "mul", or "pow" (q an int)."""
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "pow":
        return p ** q
    raise ValueError("unknown op %r" % (op,))


def _monic(f):
    """Normalize a factor to leading (lex) coefficient 1; returns (monic, lead)."""
    e, c = f.leading()
    if c == 1:
        return f, 1
    return f * (Fraction(1) / Fraction(c)), c


class RatFunc:
    """num / prod(factor_i ^ mult_i), all over one VarSet.

    Denominator factors are kept monic (lex-leading coefficient 1) with the
    constants folded into the numerator, so equal factors merge reliably.
    The denominator is never expanded.
    """

    __slots__ = ("vars", "num", "den")

    def __init__(self, num, den=()):
        if isinstance(num, RatFunc):
            assert not den
            self.vars, self.num, self.den = num.vars, num.num, num.den
            return
        self.vars = num.vars
        merged = []
        scale = Fraction(1)
        for f, m in den:
            if m == 0:
                continue
            if m < 0:
                raise ValueError("negative multiplicity in denominator")
            if f.is_zero():
                raise ZeroDivisionError("zero factor in denominator")
            if f.is_constant():
                scale *= Fraction(f.constant_value()) ** m
                continue
            f, lead = _monic(f)
            if lead != 1:
                scale *= Fraction(lead) ** m
            for i, (g, mg) in enumerate(merged):
                if g == f:
                    merged[i] = (g, mg + m)
                    break
            else:
                merged.append((f, m))
        if scale != 1:
            num = num * (1 / scale)
        if num.is_zero():
            merged = []
        self.num = num
        self.den = tuple(merged)

    @classmethod
    def const(cls, vars_, c):
        return cls(vars_.const(c))

    def is_zero(self):
        return self.num.is_zero()

    def __repr__(self):
        if not self.den:
            return repr(self.num)
        ds = " * ".join(
            "(%r)" % (f,) if m == 1 else "(%r)^%d" % (f, m) for f, m in self.den
        )
        return "(%r) / [%s]" % (self.num, ds)

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError("mixing distinct variable sets")

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.vars.const(other))
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        if isinstance(other, RatFunc):
            return other
        return None

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._check(o)
        return RatFunc(self.num * o.num, self.den + o.den)

    __rmul__ = __mul__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._check(o)
        # common denominator: for each factor take the max multiplicity
        factors = {}
        for f, m in self.den:
            factors[f] = max(factors.get(f, 0), m)
        for f, m in o.den:
            factors[f] = max(factors.get(f, 0), m)
        a = self.num
        for f, m in factors.items():
            need = m - dict(self.den).get(f, 0)
            if need:
                a = a * f ** need
        b = o.num
        for f, m in factors.items():
            need = m - dict(o.den).get(f, 0)
            if need:
                b = b * f ** need
        return RatFunc(a + b, tuple(factors.items()))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def inv(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverting the zero function")
        num = self.vars.const(1)
        for f, m in self.den:
            num = num * f ** m
        return RatFunc(num, ((self.num, 1),))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("powers must be integers")
        if n < 0:
            return self.inv() ** (-n)
        out = RatFunc(self.vars.const(1))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).num.is_zero()

    def substitute(self, name, value):
        """Substitute for a variable in numerator and every denominator factor.

        `value` must not involve the substituted variable.  Raises
        IdenticallySingular when a denominator factor becomes identically
        zero (the substitution lands on a pole).
        """
        pv = self._coerce(value)
        if pv is None:
            raise TypeError("cannot substitute %r" % (value,))
        if pv.num.max_exp(name) > 0 or any(f.max_exp(name) > 0 for f, _ in pv.den):
            raise ValueError("substituted value may not involve %r" % name)
        if not pv.den:
            num = self.num.subs(name, pv.num)
            den = []
            for f, m in self.den:
                g = f.subs(name, pv.num)
                if g.is_zero():
                    raise IdenticallySingular(
                        "denominator factor %r vanishes at %s = %r" % (f, name, pv.num))
                den.append((g, m))
            return RatFunc(num, den)
        # rational value: substitute p/q by clearing q powers
        qpoly = self.vars.const(1)
        for f, m in pv.den:
            qpoly = qpoly * f ** m
        p, q = RatFunc(pv.num), RatFunc(qpoly)
        out = _poly_subs_rat(self.num, name, p, q)
        for f, m in self.den:
            out = out * _poly_subs_rat(f, name, p, q).inv() ** m
        return out

    def reduce(self):
        """Cancel denominator factors that divide the numerator exactly."""
        num = self.num
        den = []
        for f, m in self.den:
            while m and not num.is_zero():
                q = num.exact_div(f)
                if q is None:
                    break
                num, m = q, m - 1
            if m:
                den.append((f, m))
        return RatFunc(num, den)

    def evaluate(self, assignment):
        v = self.num.evaluate(assignment)
        for f, m in self.den:
            fv = f.evaluate(assignment)
            if fv == 0:
                raise ZeroDivisionError("denominator factor vanishes at the point")
            v /= fv ** m
        return v

    def as_rational(self):
        """The value of a variable-free function, as a Fraction."""
        r = self.reduce()
        v = r.num.constant_value()
        for f, m in r.den:
            v /= Fraction(f.constant_value()) ** m
        return v


def _poly_subs_rat(poly, name, p, q):
    """poly with name := p/q, returned as a RatFunc (p, q RatFuncs, q poly-free ok)."""
    parts = poly.split_by(name)
    if not parts:
        return RatFunc(poly)
    top = max(parts)
    out = RatFunc(poly.vars.const(0))
    for j, a in parts.items():
        out = out + RatFunc(a) * p ** j * q ** (top - j)
    return out * q.inv() ** top


def ratfunc_arith(op, r, s=None):
    """Arithmetic dispatch: op in {"add", "mul", "neg", "inv"}."""
    if op == "add":
        return r + s
    if op == "mul":
        return r * s
    if op == "neg":
        assert s is None
        return -r
    if op == "inv":
        assert s is None
        return r.inv()
    raise ValueError("unknown op %r" % (op,))


def ratfunc_substitute(r, name, value):
    return r.substitute(name, value)


def ratfunc_reduce(r):
    return r.reduce()


# -- serialization --------------------------------------------------------

def frac_to_str(c):
    """Exact decimal-free text form: "num/den", with "/den" omitted when 1."""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def frac_from_str(s):
    return Fraction(s)


def poly_to_json(p):
    """{"vars": [...], "terms": [{"coef": "...", "exps": [...]}, ...]} sorted by exponents."""
    return {
        "vars": list(p.vars.names),
        "terms": [
            {"coef": frac_to_str(p.terms[e]), "exps": list(e)}
            for e in sorted(p.terms, reverse=True)
        ],
    }


def poly_from_json(obj):
    vs = VarSet(obj["vars"])
    terms = {}
    for t in obj["terms"]:
        e = tuple(t["exps"])
        if len(e) != len(vs):
            raise ValueError("exponent arity mismatch")
        terms[e] = terms.get(e, 0) + frac_from_str(t["coef"])
    return MultiPoly(vs, terms)
