"""Noncommutative polynomials with presentation-driven normal forms.

Words are tuples of generator symbols; expressions are finite sums of
words with :class:`~qsymball.scalars.LaurentScalar` coefficients.  A
presentation supplies two-letter rewrite rules (star-left to star-right,
descending to ascending letter order) whose exhaustive application
yields the canonical normal form.  The four algebras of interest are
available through :func:`preset`:

* ``pol-matsym-q`` -- polynomials on quantum symmetric 2x2 matrices,
  generators z11, z21, z22 and their stars;
* ``c-su2-q``     -- the quantum SU(2) coordinate algebra, generators
  t11, t12, t21, t22 with the star folded into the alphabet;
* ``uq-sl2``      -- the quantized enveloping algebra, generators
  E, F, K, K^(-1);
* ``pol-c-q``     -- the single-generator Wick algebra with
  z* z = q^4 z z* + 1 - q^4.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .scalars import ONE, ZERO, LaurentScalar


class RewriteLimitError(RuntimeError):
    """Raised when a normal-form computation exceeds its step budget."""


@dataclass(frozen=True)
class Gen:
    """Generator symbol; ``star`` marks the adjoint letter."""

    name: str
    star: bool = False

    def starred(self):
        return Gen(self.name, not self.star)

    def __repr__(self):
        return self.name + ("*" if self.star else "")


class NcExpr:
    """Finite sum of words with exact scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {
            w: c for w, c in (terms or {}).items() if not c.is_zero()
        }

    @staticmethod
    def zero():
        return NcExpr({})

    @staticmethod
    def unit(coeff=None):
        return NcExpr({(): coeff if coeff is not None else ONE})

    @staticmethod
    def word(*letters, coeff=None):
        return NcExpr({tuple(letters): coeff if coeff is not None else ONE})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, ZERO) + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return NcExpr(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NcExpr({w: -c for w, c in self.terms.items()})

    def scale(self, coeff):
        return NcExpr({w: c * coeff for w, c in self.terms.items()})

    def raw_mul(self, other):
        """Concatenation product, no rewriting."""
        out = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                w = wa + wb
                s = out.get(w, ZERO) + ca * cb
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        return NcExpr(out)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((len(w) for w in self.terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, NcExpr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda w: (len(w), tuple(map(repr, w))))
        parts = []
        for w in keys:
            mono = " ".join(map(repr, w)) if w else "1"
            parts.append(f"({self.terms[w]!r})·{mono}")
        return " + ".join(parts)


@dataclass(frozen=True)
class Presentation:
    """Alphabet, rewrite rules, star structure and defining relations."""

    name: str
    alphabet: tuple
    rules: dict          # (Gen, Gen) -> NcExpr replacement (normal form)
    star_map: dict       # Gen -> NcExpr, or {} when no star is defined
    relations: tuple     # ((lhs NcExpr, rhs NcExpr), ...) verbatim rules
    aliases: dict        # extra names, e.g. z12 = q z21

    def __hash__(self):
        return hash(self.name)

    def gen(self, name, star=False):
        g = Gen(name, star)
        if g not in self.alphabet:
            raise KeyError(f"{g!r} not in alphabet of {self.name}")
        return g


def normal_form(e: NcExpr, P: Presentation, cap: int = 10**6) -> NcExpr:
    """Rewrite until no rule pattern occurs in any word."""
    out = {}
    stack = list(e.terms.items())
    steps = 0
    while stack:
        word, coeff = stack.pop()
        for i in range(len(word) - 1):
            rule = P.rules.get((word[i], word[i + 1]))
            if rule is None:
                continue
            steps += 1
            if steps > cap:
                raise RewriteLimitError(
                    f"rewrite cap {cap} exceeded in {P.name}"
                )
            pre, suf = word[:i], word[i + 2:]
            for rw, rc in rule.terms.items():
                stack.append((pre + rw + suf, coeff * rc))
            break
        else:
            s = out.get(word, ZERO) + coeff
            if s.is_zero():
                out.pop(word, None)
            else:
                out[word] = s
    return NcExpr(out)


def nc_mul(a: NcExpr, b: NcExpr, P: Presentation) -> NcExpr:
    return normal_form(a.raw_mul(b), P)


def nc_star(e: NcExpr, P: Presentation) -> NcExpr:
    """Antilinear antihomomorphism determined by the star table."""
    if not P.star_map:
        raise ValueError(f"presentation {P.name} has no star structure")
    total = NcExpr.zero()
    for word, coeff in e.terms.items():
        factor = NcExpr.unit(coeff.conj())
        for letter in reversed(word):
            factor = factor.raw_mul(P.star_map[letter])
        total = total + factor
    return normal_form(total, P)


def nc_equal(a: NcExpr, b: NcExpr, P: Presentation) -> bool:
    return normal_form(a - b, P).is_zero()


# ---------------------------------------------------------------------------
# Presets
# ---------------------------------------------------------------------------

def _q(k, coeff=1):
    return LaurentScalar.q_pow(k, coeff)


def _s(k, coeff=1):
    return LaurentScalar.s_pow(k, coeff)


def _pol_matsym_q() -> Presentation:
    z11, z21, z22 = Gen("z11"), Gen("z21"), Gen("z22")
    z11s, z21s, z22s = z11.starred(), z21.starred(), z22.starred()
    W = NcExpr.word
    one = NcExpr.unit

    # q(q^-1 - q)(1+q^2)^2 and friends, built from the factors verbatim.
    qm = _q(1) * (_q(-1) - _q(1))                 # q(q^-1 - q) = 1 - q^2
    c11_21 = (-qm) * (ONE + _q(2)) * (ONE + _q(2))
    c11_22 = (_q(-1) - _q(1)) * (_q(-1) - _q(1)) * (ONE + _q(2))
    c_mix = (-qm) * (_q(-1) + _q(1))              # -(1-q^2)(q^-1+q)
    comm = _q(1) * (_q(2) - _q(-2))               # q(q^2 - q^-2)

    rules = {
        # holomorphic block
        (z21, z11): W(z11, z21, coeff=_q(-2)),
        (z22, z21): W(z21, z22, coeff=_q(-2)),
        (z22, z11): W(z11, z22) + W(z21, z21, coeff=-comm),
        # starred block (star of the above)
        (z21s, z11s): W(z11s, z21s, coeff=_q(2)),
        (z22s, z21s): W(z21s, z22s, coeff=_q(2)),
        (z22s, z11s): W(z11s, z22s) + W(z21s, z21s, coeff=comm),
        # star-left to star-right
        (z11s, z11): W(z11, z11s, coeff=_q(4))
        + W(z21, z21s, coeff=c11_21)
        + W(z22, z22s, coeff=c11_22)
        + one(ONE - _q(4)),
        (z11s, z21): W(z21, z11s, coeff=_q(2)) + W(z22, z21s, coeff=c_mix),
        (z11s, z22): W(z22, z11s),
        (z21s, z21): W(z21, z21s, coeff=_q(2))
        + W(z22, z22s, coeff=-(ONE - _q(2)))
        + one(ONE - _q(2)),
        (z21s, z22): W(z22, z21s, coeff=_q(2)),
        (z22s, z22): W(z22, z22s, coeff=_q(4)) + one(ONE - _q(4)),
        # stars of the mixed rules
        (z21s, z11): W(z11, z21s, coeff=_q(2)) + W(z21, z22s, coeff=c_mix),
        (z22s, z11): W(z11, z22s),
        (z22s, z21): W(z21, z22s, coeff=_q(2)),
    }
    star_map = {g: NcExpr.word(g.starred()) for g in
                (z11, z21, z22, z11s, z21s, z22s)}
    relations = tuple(
        (NcExpr.word(*pat), rep) for pat, rep in rules.items()
    )
    return Presentation(
        name="pol-matsym-q",
        alphabet=(z11, z21, z22, z11s, z21s, z22s),
        rules=rules,
        star_map=star_map,
        relations=relations,
        aliases={"z12": (_q(1), z21), "z12*": (_q(1), z21s)},
    )


def _c_su2_q() -> Presentation:
    t11, t12, t21, t22 = Gen("t11"), Gen("t12"), Gen("t21"), Gen("t22")
    W = NcExpr.word
    rules = {
        (t11, t21): W(t21, t11, coeff=_q(1)),
        (t11, t12): W(t12, t11, coeff=_q(1)),
        (t12, t21): W(t21, t12),
        # t22 t21 = q^-1 t21 t22: the listed relation has a typo (t11 for
        # t22); the corrected form is validated against pi_phi numerically.
        (t22, t21): W(t21, t22, coeff=_q(-1)),
        (t22, t12): W(t12, t22, coeff=_q(-1)),
        (t11, t22): W(t21, t12, coeff=_q(1)) + NcExpr.unit(),
        (t22, t11): W(t21, t12, coeff=_q(-1)) + NcExpr.unit(),
    }
    star_map = {
        t11: W(t22),
        t22: W(t11),
        t12: W(t21, coeff=_q(1, -1)),
        t21: W(t12, coeff=_q(-1, -1)),
    }
    relations = tuple((NcExpr.word(*pat), rep) for pat, rep in rules.items())
    return Presentation(
        name="c-su2-q",
        alphabet=(t21, t12, t11, t22),
        rules=rules,
        star_map=star_map,
        relations=relations,
        aliases={},
    )


def _uq_sl2() -> Presentation:
    E, F, K, Ki = Gen("E"), Gen("F"), Gen("K"), Gen("Kinv")
    W = NcExpr.word
    dinv = LaurentScalar.delta_inv()
    rules = {
        (K, F): W(F, K, coeff=_q(-2)),
        (Ki, F): W(F, Ki, coeff=_q(2)),
        (E, K): W(K, E, coeff=_q(-2)),
        (E, Ki): W(Ki, E, coeff=_q(2)),
        (K, Ki): NcExpr.unit(),
        (Ki, K): NcExpr.unit(),
        (E, F): W(F, E) + W(K, coeff=dinv) + W(Ki, coeff=-dinv),
    }
    # the U_q(su2) star: E* = K F, F* = E K^(-1), K* = K
    star_map = {
        E: W(K, F),
        F: W(E, Ki),
        K: W(K),
        Ki: W(Ki),
    }
    relations = tuple((NcExpr.word(*pat), rep) for pat, rep in rules.items())
    return Presentation(
        name="uq-sl2",
        alphabet=(F, K, Ki, E),
        rules=rules,
        star_map=star_map,
        relations=relations,
        aliases={},
    )


def _pol_c_q() -> Presentation:
    z = Gen("z")
    zs = z.starred()
    rules = {
        (zs, z): NcExpr.word(z, zs, coeff=_q(4)) + NcExpr.unit(ONE - _q(4)),
    }
    star_map = {z: NcExpr.word(zs), zs: NcExpr.word(z)}
    relations = tuple((NcExpr.word(*pat), rep) for pat, rep in rules.items())
    return Presentation(
        name="pol-c-q",
        alphabet=(z, zs),
        rules=rules,
        star_map=star_map,
        relations=relations,
        aliases={},
    )


_PRESETS = {
    "pol-matsym-q": _pol_matsym_q,
    "c-su2-q": _c_su2_q,
    "uq-sl2": _uq_sl2,
    "pol-c-q": _pol_c_q,
}


@lru_cache(maxsize=None)
def preset(name: str) -> Presentation:
    try:
        builder = _PRESETS[name]
    except KeyError:
        raise KeyError(
            f"unknown preset {name!r}; choose from {sorted(_PRESETS)}"
        ) from None
    return builder()


def gen_expr(P: Presentation, name: str, star=False) -> NcExpr:
    """Single-generator expression, resolving aliases like z12 = q z21."""
    key = name + ("*" if star else "")
    if key in P.aliases:
        coeff, g = P.aliases[key]
        return NcExpr.word(g, coeff=coeff)
    return NcExpr.word(P.gen(name, star))


# ---------------------------------------------------------------------------
# Local confluence
# ---------------------------------------------------------------------------

def local_confluence_check(P: Presentation, max_deg: int = 3, cap: int = 10**6):
    """Diamond-lemma style check on all words of length <= max_deg.

    Every word is reduced once at each reducible position and then
    normalized; all results must agree.  Returns the list of violations
    as (word, [distinct normal forms]) pairs.
    """
    if max_deg < 3:
        raise ValueError("max_deg must be at least 3")
    violations = []

    def words(length):
        if length == 0:
            yield ()
            return
        for w in words(length - 1):
            for g in P.alphabet:
                yield w + (g,)

    for length in range(2, max_deg + 1):
        for word in words(length):
            outcomes = []
            for i in range(length - 1):
                rule = P.rules.get((word[i], word[i + 1]))
                if rule is None:
                    continue
                pre, suf = word[:i], word[i + 2:]
                e = NcExpr.word(*pre).raw_mul(rule).raw_mul(NcExpr.word(*suf))
                outcomes.append(normal_form(e, P, cap))
            if len(outcomes) > 1:
                first = outcomes[0]
                if any(o != first for o in outcomes[1:]):
                    violations.append((word, outcomes))
    return violations
