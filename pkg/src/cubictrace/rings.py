"""Exact multivariate Laurent arithmetic over arbitrary-precision rationals.

Every ring element used in this project is a Laurent polynomial: a finite
map from integer exponent vectors (negative entries allowed) to nonzero
`Fraction` coefficients, over a fixed ordered tuple of variable names.
There is no floating point anywhere.

Quotient rings such as Q[a,b,c,(abc)^-1]/(a - bc) or Q[a,x,x^-1]/(a^2 - 1)
are handled by `QuotientSpec`: an ordered list of substitution rules, each
of which either eliminates a variable (``a -> b*c``) or reduces the powers
of a variable modulo k (``a^2 -> 1``).  Rules are validated at construction
so that a single left-to-right pass is a normal form (reduction terminates
and is idempotent).

`pit_equal` is probabilistic polynomial-identity testing (Schwartz-Zippel)
for checks whose fully symbolic form is expensive, e.g. 24x24 Gram
determinants.  It evaluates both sides at seeded rational points compatible
with the active quotient and reports the one-sided error bound alongside
the verdict.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

Monomial = tuple[int, ...]


class RingError(ValueError):
    pass


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise RingError(f"coefficient must be an int or Fraction, got {type(c)!r}")


class LaurentPolynomial:
    """A Laurent polynomial with exact rational coefficients.

    Terms are stored sparsely; zero coefficients are never kept.  Two
    polynomials compare equal iff they have the same variable tuple and
    bit-identical term maps, so the representation is canonical.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, Fraction]):
        variables = tuple(variables)
        clean: dict[Monomial, Fraction] = {}
        nvars = len(variables)
        for mono, coeff in terms.items():
            mono = tuple(mono)
            if len(mono) != nvars:
                raise RingError(f"exponent vector {mono} has wrong length for {variables}")
            coeff = _as_fraction(coeff)
            if coeff != 0:
                acc = clean.get(mono)
                if acc is None:
                    clean[mono] = coeff
                else:
                    acc = acc + coeff
                    if acc == 0:
                        del clean[mono]
                    else:
                        clean[mono] = acc
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "LaurentPolynomial":
        return cls(variables, {})

    @classmethod
    def constant(cls, c, variables: Sequence[str]) -> "LaurentPolynomial":
        c = _as_fraction(c)
        if c == 0:
            return cls.zero(variables)
        return cls(variables, {tuple([0] * len(variables)): c})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "LaurentPolynomial":
        return cls.constant(1, variables)

    @classmethod
    def var(cls, name: str, variables: Sequence[str], power: int = 1) -> "LaurentPolynomial":
        variables = tuple(variables)
        if name not in variables:
            raise RingError(f"{name!r} is not among variables {variables}")
        mono = tuple(power if v == name else 0 for v in variables)
        return cls(variables, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, coeff, exponents: Monomial, variables: Sequence[str]) -> "LaurentPolynomial":
        return cls(variables, {tuple(exponents): _as_fraction(coeff)})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        z = tuple([0] * len(self.variables))
        return not self.terms or (len(self.terms) == 1 and z in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise RingError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Max over terms of the sum of |exponents| (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        return max(sum(abs(e) for e in mono) for mono in self.terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items())

    # -- arithmetic ----------------------------------------------------

    def _check_compatible(self, other: "LaurentPolynomial") -> None:
        if self.variables != other.variables:
            raise RingError(f"mismatched variable lists {self.variables} vs {other.variables}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self.variables)
        self._check_compatible(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            acc = terms.get(mono, Fraction(0)) + c
            if acc == 0:
                terms.pop(mono, None)
            else:
                terms[mono] = acc
        return LaurentPolynomial(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self.variables)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                return LaurentPolynomial.zero(self.variables)
            return LaurentPolynomial(self.variables, {m: c * v for m, v in self.terms.items()})
        self._check_compatible(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                acc = out.get(mono)
                prod = c1 * c2
                if acc is None:
                    out[mono] = prod
                else:
                    acc = acc + prod
                    if acc == 0:
                        del out[mono]
                    else:
                        out[mono] = acc
        return LaurentPolynomial(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise RingError("exponent must be an integer")
        if n < 0:
            inv = self.monomial_inverse()
            return inv ** (-n)
        result = LaurentPolynomial.one(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monomial_inverse(self) -> "LaurentPolynomial":
        """Inverse, defined only for single-term (unit) polynomials."""
        if len(self.terms) != 1:
            raise RingError(f"{self} is not a unit monomial")
        (mono, coeff), = self.terms.items()
        return LaurentPolynomial(self.variables, {tuple(-e for e in mono): Fraction(1) / coeff})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self.variables)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.variables, tuple(sorted(self.terms.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    # -- substitution / evaluation --------------------------------------

    def substitute(self, mapping: Mapping[str, "LaurentPolynomial"],
                   target_variables: Sequence[str] | None = None) -> "LaurentPolynomial":
        """Substitute polynomials for variables.

        Unmapped variables must exist in the target variable tuple.  A
        negative power of a mapped variable requires its image to be an
        invertible monomial.
        """
        if target_variables is None:
            first = next(iter(mapping.values()), None)
            target_variables = first.variables if first is not None else self.variables
        target_variables = tuple(target_variables)
        images: list[LaurentPolynomial] = []
        for v in self.variables:
            if v in mapping:
                img = mapping[v]
                if img.variables != target_variables:
                    raise RingError("substitution images must share the target variable tuple")
                images.append(img)
            else:
                images.append(LaurentPolynomial.var(v, target_variables))
        out = LaurentPolynomial.zero(target_variables)
        pow_cache: list[dict[int, LaurentPolynomial]] = [dict() for _ in images]
        for mono, coeff in self.terms.items():
            term = LaurentPolynomial.constant(coeff, target_variables)
            for i, e in enumerate(mono):
                if e == 0:
                    continue
                cached = pow_cache[i].get(e)
                if cached is None:
                    cached = images[i] ** e
                    pow_cache[i][e] = cached
                term = term * cached
            out = out + term
        return out

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        vals = [Fraction(point[v]) for v in self.variables]
        for mono, coeff in self.terms.items():
            acc = coeff
            for val, e in zip(vals, mono):
                if e:
                    if val == 0 and e < 0:
                        raise RingError("evaluation divides by zero")
                    acc *= val ** e
            total += acc
        return total

    def rename(self, variables: Sequence[str]) -> "LaurentPolynomial":
        variables = tuple(variables)
        if len(variables) != len(self.variables):
            raise RingError("rename needs the same number of variables")
        return LaurentPolynomial(variables, self.terms)

    def extend(self, variables: Sequence[str]) -> "LaurentPolynomial":
        """Re-express over a superset of variables (new ones with exponent 0)."""
        variables = tuple(variables)
        idx = []
        for v in self.variables:
            if v not in variables:
                raise RingError(f"{v} missing from extension {variables}")
            idx.append(variables.index(v))
        terms = {}
        for mono, coeff in self.terms.items():
            new = [0] * len(variables)
            for pos, e in zip(idx, mono):
                new[pos] = e
            terms[tuple(new)] = coeff
        return LaurentPolynomial(variables, terms)

    # -- exact division --------------------------------------------------

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact quotient self/divisor; raises RingError when not divisible."""
        self._check_compatible(divisor)
        if divisor.is_zero():
            raise RingError("division by zero polynomial")
        if self.is_zero():
            return self
        # Shift both by monomials so all exponents are nonnegative; lex
        # order is then well founded for the division loop.
        nvars = len(self.variables)
        shift = [0] * nvars
        for mono in list(self.terms) + list(divisor.terms):
            for i, e in enumerate(mono):
                shift[i] = min(shift[i], e)
        shift_t = tuple(shift)

        def shifted(p: LaurentPolynomial) -> dict[Monomial, Fraction]:
            return {tuple(e - s for e, s in zip(m, shift_t)): c for m, c in p.terms.items()}

        num = shifted(self)
        den = shifted(divisor)
        lead_d = max(den)
        lead_dc = den[lead_d]
        # In an exact division the intermediate numerators are tail-sums of
        # quotient * divisor, whose exponents stay inside the dividend's
        # bounding box (extreme monomials of a product never cancel).  A
        # lead escaping the box therefore certifies non-divisibility, and
        # the strictly lex-decreasing leads inside a finite box terminate.
        lo = [min(m[i] for m in num) for i in range(nvars)]
        hi = [max(m[i] for m in num) for i in range(nvars)]
        quo: dict[Monomial, Fraction] = {}
        while num:
            lead_n = max(num)
            if any(e < l or e > h for e, l, h in zip(lead_n, lo, hi)):
                raise RingError("non-exact polynomial division")
            q_mono = tuple(en - ed for en, ed in zip(lead_n, lead_d))
            q_coeff = num[lead_n] / lead_dc
            quo[q_mono] = quo.get(q_mono, Fraction(0)) + q_coeff
            for m, c in den.items():
                mono = tuple(e1 + e2 for e1, e2 in zip(q_mono, m))
                acc = num.get(mono, Fraction(0)) - q_coeff * c
                if acc == 0:
                    num.pop(mono, None)
                else:
                    num[mono] = acc
            if num and max(num) >= lead_n:
                raise RingError("non-exact polynomial division")
        # The numerator shift cancels the denominator shift exactly, so the
        # quotient needs no adjustment.
        return LaurentPolynomial(self.variables, quo)

    # -- rendering / parsing ----------------------------------------------

    def render(self) -> str:
        """Canonical text form: terms sorted lexicographically on exponents."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for mono, coeff in self.sorted_terms():
            factors: list[str] = []
            for v, e in zip(self.variables, mono):
                if e == 1:
                    factors.append(v)
                elif e != 0:
                    factors.append(f"{v}^{e}")
            body = "*".join(factors)
            c = coeff
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if body and c == 1:
                text = body
            elif body:
                text = f"{c}*{body}"
            else:
                text = str(c)
            parts.append((sign, text))
        first_sign, first_text = parts[0]
        out = (first_sign if first_sign == "-" else "") + first_text
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    __str__ = render

    def __repr__(self):
        return f"LaurentPolynomial({self.variables}, {self.render()!r})"

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> "LaurentPolynomial":
        """Parse polynomial text: +, -, *, ^, parentheses, rationals p/q.

        The canonical `render` output is a sublanguage of this grammar, so
        rendering and parsing round-trip.
        """
        return _Parser(text, tuple(variables)).parse()


class _Parser:
    """Recursive-descent parser for Laurent polynomial expressions."""

    _TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\*\*|[-+*/^()])")

    def __init__(self, text: str, variables: tuple[str, ...]):
        self.variables = variables
        self.tokens: list[str] = []
        pos = 0
        while pos < len(text):
            m = self._TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise RingError(f"cannot tokenize {text[pos:]!r}")
                break
            self.tokens.append(m.group(1))
            pos = m.end()
        self.index = 0
        if not self.tokens:
            raise RingError("empty polynomial text")

    def _peek(self) -> str | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _next(self) -> str:
        tok = self._peek()
        if tok is None:
            raise RingError("unexpected end of polynomial text")
        self.index += 1
        return tok

    def parse(self) -> LaurentPolynomial:
        value = self._expr()
        if self._peek() is not None:
            raise RingError(f"trailing tokens at {self.tokens[self.index:]}")
        return value

    def _expr(self) -> LaurentPolynomial:
        sign = 1
        while self._peek() in ("+", "-"):
            if self._next() == "-":
                sign = -sign
        value = self._term() * sign
        while self._peek() in ("+", "-"):
            op = self._next()
            term = self._term()
            value = value + term if op == "+" else value - term
        return value

    def _term(self) -> LaurentPolynomial:
        value = self._factor()
        while True:
            tok = self._peek()
            if tok == "*":
                self._next()
                value = value * self._factor()
            elif tok == "/":
                self._next()
                divisor = self._factor()
                if divisor.is_constant():
                    value = value * (Fraction(1) / divisor.constant_value())
                else:
                    value = value * divisor.monomial_inverse()
            elif tok is not None and (tok[0].isalpha() or tok == "("):
                value = value * self._factor()  # implicit product
            else:
                return value

    def _factor(self) -> LaurentPolynomial:
        tok = self._peek()
        if tok in ("+", "-"):
            self._next()
            base = self._factor()
            return -base if tok == "-" else base
        base = self._base()
        while self._peek() in ("^", "**"):
            self._next()
            sign = 1
            if self._peek() == "-":
                self._next()
                sign = -1
            exp_tok = self._next()
            if not exp_tok.isdigit():
                raise RingError(f"bad exponent {exp_tok!r}")
            base = base ** (sign * int(exp_tok))
        return base

    def _base(self) -> LaurentPolynomial:
        tok = self._next()
        if tok == "(":
            value = self._expr()
            if self._next() != ")":
                raise RingError("unbalanced parentheses")
            return value
        if tok.isdigit():
            return LaurentPolynomial.constant(Fraction(int(tok)), self.variables)
        if tok[0].isalpha():
            return LaurentPolynomial.var(tok, self.variables)
        raise RingError(f"unexpected token {tok!r}")


# -- quotient specifications ------------------------------------------------


@dataclass(frozen=True)
class Substitute:
    """Eliminate `variable`, replacing it by `image` (over the target variables)."""

    variable: str
    image: LaurentPolynomial


@dataclass(frozen=True)
class PowerReduce:
    """Reduce powers of `variable` modulo `modulus`: variable^modulus -> image."""

    variable: str
    modulus: int
    image: LaurentPolynomial


Rule = Substitute | PowerReduce


@dataclass(frozen=True)
class QuotientSpec:
    """An ordered, single-pass-normalizing list of substitution rules.

    The constructor rejects rule sets whose images mention eliminated
    variables, which is what guarantees termination and idempotence of
    `reduce` and makes reduction a ring homomorphism onto the target ring.
    """

    name: str
    source_variables: tuple[str, ...]
    rules: tuple[Rule, ...]

    def __post_init__(self):
        eliminated = {r.variable for r in self.rules if isinstance(r, Substitute)}
        targets = tuple(v for v in self.source_variables if v not in eliminated)
        for rule in self.rules:
            if rule.variable not in self.source_variables:
                raise RingError(f"rule variable {rule.variable!r} not among source variables")
            if isinstance(rule, PowerReduce) and rule.modulus < 1:
                raise RingError("PowerReduce modulus must be positive")
            img_vars = rule.image.variables
            if tuple(img_vars) != targets:
                raise RingError(
                    f"rule image for {rule.variable!r} must live over the target "
                    f"variables {targets}, got {img_vars}"
                )
            reduced_mods = {r.variable: r.modulus for r in self.rules if isinstance(r, PowerReduce)}
            for mono in rule.image.terms:
                for v, e in zip(img_vars, mono):
                    if v in eliminated and e != 0:
                        raise RingError("rule image mentions an eliminated variable")
                    if v in reduced_mods and not (0 <= e < reduced_mods[v]):
                        raise RingError(
                            "rule image carries an unreduced power; the rule set "
                            "would not terminate"
                        )
        object.__setattr__(self, "_targets", targets)

    @property
    def target_variables(self) -> tuple[str, ...]:
        return self._targets  # type: ignore[attr-defined]

    def reduce(self, p: LaurentPolynomial) -> LaurentPolynomial:
        """Canonical representative of p modulo the relations."""
        if p.variables == self.source_variables:
            pass
        elif p.variables == self.target_variables:
            p = p.extend(self.source_variables)
        else:
            raise RingError(
                f"{self.name}: polynomial over {p.variables} does not match "
                f"source {self.source_variables}"
            )
        targets = self.target_variables
        substitutions: dict[str, LaurentPolynomial] = {}
        reductions: dict[str, PowerReduce] = {}
        for rule in self.rules:
            if isinstance(rule, Substitute):
                substitutions[rule.variable] = rule.image
            else:
                reductions[rule.variable] = rule
        out = LaurentPolynomial.zero(targets)
        pow_cache: dict[tuple[str, int], LaurentPolynomial] = {}
        for mono, coeff in p.terms.items():
            term = LaurentPolynomial.constant(coeff, targets)
            for v, e in zip(p.variables, mono):
                if e == 0:
                    continue
                if v in substitutions:
                    key = (v, e)
                    img = pow_cache.get(key)
                    if img is None:
                        img = substitutions[v] ** e
                        pow_cache[key] = img
                    term = term * img
                elif v in reductions:
                    rule = reductions[v]
                    q, r = divmod(e, rule.modulus)
                    img = LaurentPolynomial.var(v, targets, r) if r else LaurentPolynomial.one(targets)
                    if q:
                        key = (v, q * rule.modulus)
                        pw = pow_cache.get(key)
                        if pw is None:
                            pw = rule.image ** q
                            pow_cache[key] = pw
                        img = img * pw
                    term = term * img
                else:
                    term = term * LaurentPolynomial.var(v, targets, e)
            out = out + term
        # Substitution images may carry negative powers of a reduced
        # variable (e.g. x^-1 -> a^-1/2 under x -> 2a, a^2 -> 1); one more
        # pass settles those.  Rule validation keeps this terminating.
        if self._needs_reduction(out, reductions):
            return self.reduce(out)
        return out

    @staticmethod
    def _needs_reduction(p: LaurentPolynomial, reductions: Mapping[str, PowerReduce]) -> bool:
        for mono in p.terms:
            for v, e in zip(p.variables, mono):
                rule = reductions.get(v)
                if rule is not None and not (0 <= e < rule.modulus):
                    return True
        return False

    def compatible_point(self, rng: random.Random, low: int = 1, high: int = 10 ** 6) -> "RingPoint":
        """A random rational point satisfying all relations.

        Free variables are drawn uniformly from +-[low, high]; substituted
        variables are computed from their images; power-reduced variables
        with image 1 become random modulus-th roots of unity in Q (i.e. +-1
        when the modulus is even).
        """
        assignment: dict[str, Fraction] = {}
        reductions = {r.variable: r for r in self.rules if isinstance(r, PowerReduce)}
        for v in self.target_variables:
            if v in reductions:
                rule = reductions[v]
                img = rule.image
                if img == LaurentPolynomial.one(img.variables) and rule.modulus % 2 == 0:
                    assignment[v] = Fraction(rng.choice([-1, 1]))
                elif img == LaurentPolynomial.one(img.variables):
                    assignment[v] = Fraction(1)
                else:
                    raise RingError("cannot sample a point for a non-unit power relation")
            else:
                mag = Fraction(rng.randint(low, high))
                assignment[v] = mag if rng.random() < 0.5 else -mag
        for rule in reversed(self.rules):
            if isinstance(rule, Substitute):
                assignment[rule.variable] = rule.image.evaluate(assignment)
        return RingPoint(assignment=assignment, spec=self)


@dataclass(frozen=True)
class RingPoint:
    """A rational point; must satisfy the relations of the attached spec."""

    assignment: Mapping[str, Fraction]
    spec: QuotientSpec | None = None

    def __post_init__(self):
        if self.spec is not None:
            for rule in self.spec.rules:
                v = Fraction(self.assignment[rule.variable])
                if isinstance(rule, Substitute):
                    expected = rule.image.evaluate(self.assignment)
                    ok = v == expected
                else:
                    ok = v ** rule.modulus == rule.image.evaluate(self.assignment)
                if not ok:
                    raise RingError(
                        f"point violates relation on {rule.variable!r} of spec {self.spec.name!r}"
                    )

    def value(self, p: LaurentPolynomial) -> Fraction:
        return p.evaluate(self.assignment)


@dataclass(frozen=True)
class PitResult:
    equal: bool
    points_used: int
    error_bound: Fraction

    def __bool__(self) -> bool:
        return self.equal


def pit_points(spec: QuotientSpec, count: int, seed: int) -> list[RingPoint]:
    rng = random.Random(seed)
    return [spec.compatible_point(rng) for _ in range(count)]


def pit_equal(p: LaurentPolynomial, q: LaurentPolynomial,
              points: Sequence[RingPoint] | None = None, seed: int = 0,
              spec: QuotientSpec | None = None, count: int = 7) -> PitResult:
    """Schwartz-Zippel identity test for p == q.

    With d = total degree of p - q and points drawn coordinatewise from a
    set of size >= 10^6, a nonzero difference evaluates to zero at one point
    with probability <= d/10^6; the reported bound is (d/10^6)^k for k
    independent points.  Equality of polynomials is never misreported.
    """
    if points is None:
        if spec is None:
            spec = QuotientSpec("free", p.variables, ())
        if count < 5:
            raise RingError("pit_equal needs at least 5 points")
        points = pit_points(spec, count, seed)
    if len(points) < 5:
        raise RingError("pit_equal needs at least 5 points")
    diff = p - q
    degree = max(diff.total_degree(), 1)
    bound = Fraction(min(degree, 10 ** 6), 10 ** 6) ** len(points)
    for pt in points:
        if pt.value(diff) != 0:
            return PitResult(equal=False, points_used=len(points), error_bound=Fraction(0))
    return PitResult(equal=True, points_used=len(points), error_bound=bound)


# -- commonly used rings -----------------------------------------------------

ABC = ("a", "b", "c")
AX = ("a", "x")
A_ONLY = ("a",)


def poly_abc(text: str) -> LaurentPolynomial:
    return LaurentPolynomial.parse(text, ABC)


def spec_free_abc() -> QuotientSpec:
    """R = Q[a,b,c,(abc)^-1] with no relations."""
    return QuotientSpec("R", ABC, ())


def spec_r_plus() -> QuotientSpec:
    """R+ = R/(a - bc)."""
    bc = ("b", "c")
    return QuotientSpec("R+", ABC, (Substitute("a", LaurentPolynomial.parse("b*c", bc)),))


def spec_r_minus() -> QuotientSpec:
    """R- = R/(a + bc)."""
    bc = ("b", "c")
    return QuotientSpec("R-", ABC, (Substitute("a", LaurentPolynomial.parse("-b*c", bc)),))


def spec_dagger_dagger() -> QuotientSpec:
    """S-dagger-dagger: y = bc -> 1 (i.e. c -> 1/b) and a^2 -> 1."""
    ab = ("a", "b")
    return QuotientSpec(
        "Sdd",
        ABC,
        (
            Substitute("c", LaurentPolynomial.var("b", ab, -1)),
            PowerReduce("a", 2, LaurentPolynomial.one(ab)),
        ),
    )


def spec_a_squared_one(variables: Sequence[str] = A_ONLY) -> QuotientSpec:
    """Q[a]/(a^2-1) style reduction on any ring containing the variable a."""
    variables = tuple(variables)
    return QuotientSpec(
        f"a2=1 over {variables}",
        variables,
        (PowerReduce("a", 2, LaurentPolynomial.one(variables)),),
    )


def spec_ax_point(x_image_text: str) -> QuotientSpec:
    """Quotient of Q[a,x,x^-1]/(a^2-1) sending x to a multiple of a power of a."""
    a = ("a",)
    return QuotientSpec(
        f"x->{x_image_text}",
        AX,
        (
            Substitute("x", LaurentPolynomial.parse(x_image_text, a)),
            PowerReduce("a", 2, LaurentPolynomial.one(a)),
        ),
    )
