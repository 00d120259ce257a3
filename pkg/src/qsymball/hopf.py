"""Hopf structure on U_q(sl2), the dual pairing with the quantum SU(2)
coordinate algebra, the module-algebra action on the symmetric quantum
matrix algebra, and the coaction that encodes Z -> U^T Z U.
"""

from __future__ import annotations

from .ncalg import (
    Gen,
    NcExpr,
    Presentation,
    gen_expr,
    nc_mul,
    nc_star,
    normal_form,
    preset,
)
from .scalars import ONE, ZERO, LaurentScalar

_q = LaurentScalar.q_pow
_s = LaurentScalar.s_pow

UQ = preset("uq-sl2")
SU2 = preset("c-su2-q")
POL = preset("pol-matsym-q")

E, F, K, Ki = Gen("E"), Gen("F"), Gen("K"), Gen("Kinv")
_T = {(i, j): Gen(f"t{i}{j}") for i in (1, 2) for j in (1, 2)}


class TensorExpr:
    """Sum of two-leg tensors a (x) b with exact coefficients.

    Keys are (word-in-A, word-in-B); both legs are kept in normal form
    with respect to the leg presentations.
    """

    __slots__ = ("terms", "pa", "pb")

    def __init__(self, pa: Presentation, pb: Presentation, terms=None):
        self.pa = pa
        self.pb = pb
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def unit(pa, pb):
        return TensorExpr(pa, pb, {((), ()): ONE})

    @staticmethod
    def of(a: NcExpr, b: NcExpr, pa, pb):
        out = {}
        for wa, ca in a.terms.items():
            for wb, cb in b.terms.items():
                c = ca * cb
                if not c.is_zero():
                    out[(wa, wb)] = out.get((wa, wb), ZERO) + c
        return TensorExpr(pa, pb, out)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, ZERO) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return TensorExpr(self.pa, self.pb, out)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def scale(self, coeff):
        return TensorExpr(
            self.pa, self.pb, {k: c * coeff for k, c in self.terms.items()}
        )

    def __mul__(self, other):
        """Componentwise product (a (x) b)(c (x) d) = ac (x) bd."""
        out = TensorExpr(self.pa, self.pb)
        for (wa, wb), c1 in self.terms.items():
            for (va, vb), c2 in other.terms.items():
                a = normal_form(NcExpr({(wa + va): c1 * c2}), self.pa)
                b = normal_form(NcExpr.word(*(wb + vb)), self.pb)
                out = out + TensorExpr.of(a, b, self.pa, self.pb)
        return out

    def star(self):
        """Componentwise star, matching the *-structure of A (x) B."""
        out = TensorExpr(self.pa, self.pb)
        for (wa, wb), c in self.terms.items():
            a = nc_star(NcExpr({wa: c}), self.pa)
            b = nc_star(NcExpr.word(*wb), self.pb)
            out = out + TensorExpr.of(a, b, self.pa, self.pb)
        return out

    def apply_second(self, fn):
        """Map leg-B words through ``fn(word) -> LaurentScalar`` and
        collapse to an NcExpr over leg A."""
        out = NcExpr.zero()
        for (wa, wb), c in self.terms.items():
            val = fn(wb)
            if not val.is_zero():
                out = out + NcExpr({wa: c * val})
        return out

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorExpr):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (wa, wb), c in sorted(
            self.terms.items(), key=lambda kv: repr(kv[0])
        ):
            ma = " ".join(map(repr, wa)) if wa else "1"
            mb = " ".join(map(repr, wb)) if wb else "1"
            parts.append(f"({c!r})·{ma} ⊗ {mb}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# Hopf tables for U_q(sl2)
# ---------------------------------------------------------------------------

def _uq_tensor(terms):
    return TensorExpr(UQ, UQ, terms)


COPRODUCT = {
    E: _uq_tensor({((E,), ()): ONE, ((K,), (E,)): ONE}),
    F: _uq_tensor({((F,), (Ki,)): ONE, ((), (F,)): ONE}),
    K: _uq_tensor({((K,), (K,)): ONE}),
    Ki: _uq_tensor({((Ki,), (Ki,)): ONE}),
}

COUNIT = {E: ZERO, F: ZERO, K: ONE, Ki: ONE}

ANTIPODE = {
    E: NcExpr.word(Ki, E, coeff=-ONE),
    F: NcExpr.word(F, K, coeff=-ONE),
    K: NcExpr.word(Ki),
    Ki: NcExpr.word(K),
}


def coproduct(x: NcExpr) -> TensorExpr:
    """Multiplicative extension of the generator coproduct table."""
    total = TensorExpr(UQ, UQ)
    for word, coeff in x.terms.items():
        acc = TensorExpr.unit(UQ, UQ).scale(coeff)
        for letter in word:
            acc = acc * COPRODUCT[letter]
        total = total + acc
    return total


def counit(x: NcExpr) -> LaurentScalar:
    total = ZERO
    for word, coeff in x.terms.items():
        val = coeff
        for letter in word:
            val = val * COUNIT[letter]
            if val.is_zero():
                break
        total = total + val
    return total


def antipode(x: NcExpr) -> NcExpr:
    """Algebra antihomomorphism from the generator table."""
    total = NcExpr.zero()
    for word, coeff in x.terms.items():
        acc = NcExpr.unit(coeff)
        for letter in reversed(word):
            acc = acc.raw_mul(ANTIPODE[letter])
        total = total + acc
    return normal_form(total, UQ)


# ---------------------------------------------------------------------------
# The dual pairing via the fundamental representation
# ---------------------------------------------------------------------------

# 2x2 matrix images; t_ij evaluates to the (i, j) entry.
_FUND = {
    E: ((ZERO, _s(-1)), (ZERO, ZERO)),
    F: ((ZERO, ZERO), (_s(1), ZERO)),
    K: ((_q(1), ZERO), (ZERO, _q(-1))),
    Ki: ((_q(-1), ZERO), (ZERO, _q(1))),
}
_ID2 = ((ONE, ZERO), (ZERO, ONE))


def fundamental_rep():
    """Generator images of the 2x2 fundamental representation."""
    return dict(_FUND)


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(n)), ZERO)
            for j in range(n)
        )
        for i in range(n)
    )


def _mat_add(a, b):
    n = len(a)
    return tuple(
        tuple(a[i][j] + b[i][j] for j in range(n)) for i in range(n)
    )


def _kron(a, b):
    na, nb = len(a), len(b)
    return tuple(
        tuple(
            a[i // nb][j // nb] * b[i % nb][j % nb]
            for j in range(na * nb)
        )
        for i in range(na * nb)
    )


def _kron_power(m, n):
    out = ((ONE,),)
    for _ in range(n):
        out = _kron(out, m)
    return out


def _iterated_rep(letter, n):
    """Matrix of the (n-1)-fold coproduct of a generator in the n-th
    tensor power of the fundamental representation."""
    if n == 0:
        return ((COUNIT[letter],),)
    if letter in (K, Ki):
        return _kron_power(_FUND[letter], n)
    out = None
    left = _FUND[K] if letter == E else _ID2
    right = _ID2 if letter == E else _FUND[Ki]
    for pos in range(n):
        m = ((ONE,),)
        for j in range(n):
            if j < pos:
                m = _kron(m, left)
            elif j == pos:
                m = _kron(m, _FUND[letter])
            else:
                m = _kron(m, right)
        out = m if out is None else _mat_add(out, m)
    return out


def _pair_word(t_word, xi_word) -> LaurentScalar:
    n = len(t_word)
    mat = None
    for letter in xi_word:
        m = _iterated_rep(letter, n)
        mat = m if mat is None else _mat_mul(mat, m)
    if mat is None:  # xi = 1: counit of the t-word
        mat = _kron_power(_ID2, n) if n else ((ONE,),)
    row = 0
    col = 0
    for g in t_word:
        i, j = int(g.name[1]), int(g.name[2])
        row = 2 * row + (i - 1)
        col = 2 * col + (j - 1)
    return mat[row][col]


def pairing(a: NcExpr, xi: NcExpr) -> LaurentScalar:
    """Dual pairing of the SU(2) coordinate algebra with U_q(sl2)."""
    total = ZERO
    for t_word, ca in a.terms.items():
        for xi_word, cx in xi.terms.items():
            total = total + ca * cx * _pair_word(t_word, xi_word)
    return total


def su2_coproduct(a: NcExpr) -> TensorExpr:
    """Matrix coproduct of the coordinate algebra, extended
    multiplicatively: Delta(t_ij) = sum_k t_ik (x) t_kj."""
    total = TensorExpr(SU2, SU2)
    for word, coeff in a.terms.items():
        acc = TensorExpr.unit(SU2, SU2).scale(coeff)
        for g in word:
            i, j = int(g.name[1]), int(g.name[2])
            step = TensorExpr(
                SU2,
                SU2,
                {
                    ((_T[(i, k)],), (_T[(k, j)],)): ONE
                    for k in (1, 2)
                },
            )
            acc = acc * step
        total = total + acc
    return total


# ---------------------------------------------------------------------------
# The module-algebra action
# ---------------------------------------------------------------------------

def _z(name, star=False, coeff=None):
    g = POL.gen(name, star)
    return NcExpr.word(g, coeff=coeff if coeff is not None else ONE)


_PLUS = _q(1) + _q(-1)  # q + q^(-1)

ACTION = {
    (E, ("z11", False)): NcExpr.zero(),
    (E, ("z21", False)): _z("z11", coeff=_s(-1)),
    (E, ("z22", False)): _z("z21", coeff=_s(-1) * _PLUS),
    (F, ("z11", False)): _z("z21", coeff=_s(1) * _PLUS),
    (F, ("z21", False)): _z("z22", coeff=_s(1)),
    (F, ("z22", False)): NcExpr.zero(),
    (K, ("z11", False)): _z("z11", coeff=_q(2)),
    (K, ("z21", False)): _z("z21"),
    (K, ("z22", False)): _z("z22", coeff=_q(-2)),
    (Ki, ("z11", False)): _z("z11", coeff=_q(-2)),
    (Ki, ("z21", False)): _z("z21"),
    (Ki, ("z22", False)): _z("z22", coeff=_q(2)),
}

# Extension to starred generators:
#   E z* = -q^(-2) (F z)*,  F z* = -q^2 (E z)*,  K z* = (K^(-1) z)*.
for _name in ("z11", "z21", "z22"):
    _g = ("z" + _name[1:], False)
    ACTION[(E, (_name, True))] = nc_star(
        ACTION[(F, (_name, False))], POL
    ).scale(-_q(-2))
    ACTION[(F, (_name, True))] = nc_star(
        ACTION[(E, (_name, False))], POL
    ).scale(-_q(2))
    ACTION[(K, (_name, True))] = nc_star(ACTION[(Ki, (_name, False))], POL)
    ACTION[(Ki, (_name, True))] = nc_star(ACTION[(K, (_name, False))], POL)


def _act_letter_word(letter, word) -> NcExpr:
    if not word:
        return NcExpr.unit(COUNIT[letter])
    if len(word) == 1:
        g = word[0]
        return ACTION[(letter, (g.name, g.star))]
    head, tail = word[:1], word[1:]
    total = NcExpr.zero()
    for (wa, wb), c in COPRODUCT[letter].terms.items():
        left = _act_part(wa, head)
        if left.is_zero():
            continue
        right = _act_part(wb, tail)
        if right.is_zero():
            continue
        total = total + nc_mul(left, right, POL).scale(c)
    return total


def _act_part(xi_word, target_word) -> NcExpr:
    out = NcExpr.word(*target_word)
    for letter in reversed(xi_word):
        out = _act_expr_letter(letter, out)
    return out


def _act_expr_letter(letter, f: NcExpr) -> NcExpr:
    total = NcExpr.zero()
    for word, coeff in f.terms.items():
        total = total + _act_letter_word(letter, word).scale(coeff)
    return normal_form(total, POL)


def act(xi: NcExpr, f: NcExpr) -> NcExpr:
    """Module-algebra action of U_q(sl2) (and its star extension)."""
    total = NcExpr.zero()
    for xi_word, c in xi.terms.items():
        part = f
        for letter in reversed(xi_word):
            part = _act_expr_letter(letter, part)
        total = total + part.scale(c)
    return normal_form(total, POL)


# ---------------------------------------------------------------------------
# The coaction
# ---------------------------------------------------------------------------

def _coaction_gen_table():
    """D(z_ij) = sum_{k,l} z_kl (x) t_ki t_lj with z12 = q z21."""
    table = {}
    z_sub = {
        (1, 1): (ONE, Gen("z11")),
        (2, 1): (ONE, Gen("z21")),
        (1, 2): (_q(1), Gen("z21")),
        (2, 2): (ONE, Gen("z22")),
    }
    for (i, j) in ((1, 1), (2, 1), (2, 2)):
        terms = {}
        for k in (1, 2):
            for l in (1, 2):
                coeff, zg = z_sub[(k, l)]
                t_word = (_T[(k, i)], _T[(l, j)])
                key = ((zg,), t_word)
                terms[key] = terms.get(key, ZERO) + coeff
        expr = TensorExpr(POL, SU2, terms)
        # normalize the second leg
        norm = TensorExpr(POL, SU2)
        for (wa, wb), c in expr.terms.items():
            b = normal_form(NcExpr.word(*wb), SU2)
            norm = norm + TensorExpr.of(NcExpr({wa: c}), b, POL, SU2)
        table[(i, j)] = norm
    return table


_COACTION_GENS = _coaction_gen_table()


def _coaction_letter(g: Gen, table=None) -> TensorExpr:
    table = table if table is not None else _COACTION_GENS
    i, j = int(g.name[1]), int(g.name[2])
    base = table[(i, j)]
    return base.star() if g.star else base


def coaction(f: NcExpr, table=None) -> TensorExpr:
    """Multiplicative extension of the generator coaction; starred
    letters go through the componentwise tensor star."""
    total = TensorExpr(POL, SU2)
    for word, coeff in f.terms.items():
        acc = TensorExpr.unit(POL, SU2).scale(coeff)
        for letter in word:
            acc = acc * _coaction_letter(letter, table)
        total = total + acc
    return total


def coaction_eval(f: NcExpr, xi: NcExpr) -> NcExpr:
    """Pair the second tensor leg of the coaction against xi."""
    return normal_form(
        coaction(f).apply_second(lambda wb: pairing(NcExpr.word(*wb), xi)),
        POL,
    )


def verify_coaction_hom(gens=None, table=None):
    """Check D(fg) = D(f) D(g) over ordered pairs of generator
    expressions (each generator and its star image); returns the list
    of mismatching pairs."""
    if gens is None:
        letters = [NcExpr.word(g) for g in POL.alphabet]
        gens = letters + [nc_star(e, POL) for e in letters]
    failures = []
    images = [coaction(f, table) for f in gens]
    for i, f in enumerate(gens):
        for j, g in enumerate(gens):
            lhs = coaction(nc_mul(f, g, POL), table)
            rhs = images[i] * images[j]
            if lhs != rhs:
                failures.append((f, g))
    return failures


# ---------------------------------------------------------------------------
# Hopf-algebra laws
# ---------------------------------------------------------------------------

def _three_leg_coproduct(x: NcExpr, side: int):
    """(Delta (x) id) Delta(x) for side=0, (id (x) Delta) Delta(x) for
    side=1, as a dict of three-leg normal words."""
    out = {}
    for (w1, w2), c in coproduct(x).terms.items():
        inner = coproduct(NcExpr.word(*(w1 if side == 0 else w2)))
        for (u1, u2), d in inner.terms.items():
            key = (u1, u2, w2) if side == 0 else (w1, u1, u2)
            s = out.get(key, ZERO) + c * d
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def coassociativity_check(x: NcExpr) -> bool:
    return _three_leg_coproduct(x, 0) == _three_leg_coproduct(x, 1)


def counit_law_check(x: NcExpr) -> bool:
    """(eps (x) id) Delta = id = (id (x) eps) Delta."""
    left = NcExpr.zero()
    right = NcExpr.zero()
    for (w1, w2), c in coproduct(x).terms.items():
        left = left + NcExpr.word(*w2).scale(c * counit(NcExpr.word(*w1)))
        right = right + NcExpr.word(*w1).scale(c * counit(NcExpr.word(*w2)))
    nf = normal_form(x, UQ)
    return normal_form(left, UQ) == nf and normal_form(right, UQ) == nf


def antipode_law_check(x: NcExpr) -> bool:
    """m (S (x) id) Delta = eps(.) 1 = m (id (x) S) Delta."""
    left = NcExpr.zero()
    right = NcExpr.zero()
    for (w1, w2), c in coproduct(x).terms.items():
        a, b = NcExpr.word(*w1), NcExpr.word(*w2)
        left = left + nc_mul(antipode(a), b, UQ).scale(c)
        right = right + nc_mul(a, antipode(b), UQ).scale(c)
    target = NcExpr.unit(counit(x))
    return (normal_form(left, UQ) == target
            and normal_form(right, UQ) == target)


def pairing_bialgebra_check(xi: NcExpr, a: NcExpr, b: NcExpr) -> bool:
    """<xi, ab> = <Delta xi, a (x) b>, exactly."""
    lhs = pairing(nc_mul(a, b, SU2), xi)
    rhs = ZERO
    for (w1, w2), c in coproduct(xi).terms.items():
        rhs = rhs + c * pairing(a, NcExpr.word(*w1)) * pairing(
            b, NcExpr.word(*w2)
        )
    return lhs == rhs
