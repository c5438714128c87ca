"""
Exact polynomial algebra for localmodels.
Reduced Gröbner bases over Q and F_p, and the ideal-theoretic decisions built
on them: quotients, saturation, elimination, dimension and flatness over k[u].
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from operator import itemgetter
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import Rational, isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.monomials import monomial_deg, monomial_div, monomial_divides, monomial_lcm
from sympy.polys.orderings import ProductOrder, grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing

# Names reserved for auxiliary variables introduced by the tricks below
TAG_VAR = '_t'
INVERSE_VAR = '_w'
HOMOGENIZING_VAR = '_h'

EMPTY_DIMENSION = -1


class BudgetExhausted(RuntimeError):
    """Raised when a Buchberger run exceeds its pair or degree budget."""

    def __init__(self, budget, pairs_done, degree_reached):
        self.budget = budget
        self.pairs_done = pairs_done
        self.degree_reached = degree_reached
        super().__init__(
            f"budget exhausted after {pairs_done} pairs at sugar degree {degree_reached} "
            f"(max_pairs={budget.max_pairs}, max_degree={budget.max_degree})"
        )


@dataclass(frozen=True)
class Budget:
    """Hard limits for one Buchberger run."""
    max_pairs: int = 20000
    max_degree: int = 24


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class CoefficientField:
    """
    Exact coefficient field: the rationals (modulus None) or F_p.

    Attributes:
    -----------
    modulus : int or None
        Odd prime p, or None for Q
    """
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is None:
            return
        if self.modulus == 2:
            raise ValueError("characteristic 2 is not supported")
        if not isprime(self.modulus):
            raise ValueError(f"modulus must be prime, got {self.modulus}")

    @property
    def domain(self):
        return QQ if self.modulus is None else _finite_field(self.modulus)

    @property
    def label(self):
        return 'Q' if self.modulus is None else f'F{self.modulus}'

    def parse(self, text) -> object:
        """Read a decimal or "a/b" string into a field element."""
        value = Rational(str(text))
        den = self.domain(int(value.q))
        if not den:
            raise ValueError(f"denominator of {text} vanishes in {self.label}")
        return self.domain(int(value.p)) / den

    def format(self, element) -> str:
        """Canonical string: lowest terms for Q, a residue in [0, p) for F_p."""
        return str(self.domain.to_sympy(element))

    def element(self, value):
        """Coerce an int, Rational or field element into the field."""
        if isinstance(value, int):
            return self.domain(value)
        if isinstance(value, Rational):
            return self.domain(int(value.p)) / self.domain(int(value.q))
        return self.domain.convert(value)


RATIONALS = CoefficientField()


@lru_cache(maxsize=None)
def _finite_field(p):
    return GF(p, symmetric=False)


@dataclass(frozen=True)
class MonomialOrder:
    """
    grevlex, lex, or a block order eliminating the first `block` variables
    (grevlex inside each block).
    """
    kind: str = 'grevlex'
    block: int = 0

    def __post_init__(self):
        if self.kind not in ('grevlex', 'lex', 'block'):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == 'block' and self.block <= 0:
            raise ValueError("block orders need a nonempty prefix of eliminated variables")

    @classmethod
    def eliminating(cls, k):
        return cls('block', k)

    def sympy_order(self, nvars):
        if self.kind == 'grevlex':
            return grevlex
        if self.kind == 'lex':
            return lex
        if self.block >= nvars:
            raise ValueError(f"block of {self.block} leaves no variables among {nvars}")
        return _block_order(self.block)


GREVLEX = MonomialOrder()
LEX = MonomialOrder('lex')


@lru_cache(maxsize=None)
def _block_order(k):
    # cached so equal block orders give equal rings
    return ProductOrder(
        (grevlex, itemgetter(slice(0, k))),
        (grevlex, itemgetter(slice(k, None))),
    )


@lru_cache(maxsize=None)
def make_ring(names: Tuple[str, ...], field: CoefficientField = RATIONALS,
              order: MonomialOrder = GREVLEX) -> PolyRing:
    """Polynomial ring over `field` in `names` with the given monomial order."""
    if not names:
        raise ValueError("a polynomial ring needs at least one variable")
    if len(set(names)) != len(names):
        raise ValueError(f"repeated variable names in {names}")
    return PolyRing(list(names), field.domain, order.sympy_order(len(names)))


@dataclass(frozen=True)
class RingSpec:
    """Variable names, coefficient field and monomial order of a ring."""
    names: Tuple[str, ...]
    field: CoefficientField = RATIONALS
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        object.__setattr__(self, 'names', tuple(self.names))

    @property
    def ring(self) -> PolyRing:
        return make_ring(self.names, self.field, self.order)

    @property
    def gens(self):
        return self.ring.gens

    def var(self, name) -> PolyElement:
        try:
            return self.ring.gens[self.names.index(name)]
        except ValueError:
            raise ValueError(f"{name!r} is not a variable of {self.names}") from None

    def with_order(self, order):
        return RingSpec(self.names, self.field, order)

    def with_field(self, field):
        return RingSpec(self.names, field, self.order)

    def without(self, dropped):
        kept = tuple(n for n in self.names if n not in set(dropped))
        order = GREVLEX if self.order.kind == 'block' else self.order
        return RingSpec(kept, self.field, order)

    def prefixed(self, extra, order=None):
        """Ring with `extra` variables in front, eliminating them by default."""
        for name in extra:
            if name in self.names:
                raise ValueError(f"variable {name!r} already present")
        if order is None:
            order = MonomialOrder.eliminating(len(extra))
        return RingSpec(tuple(extra) + self.names, self.field, order)


def transfer(f: PolyElement, ring: PolyRing) -> PolyElement:
    """Move f into another ring, matching variables by name."""
    return f.set_ring(ring)


def reduce_coefficients(f: PolyElement, spec: RingSpec) -> PolyElement:
    """Map f into a ring over a different field, coefficient by coefficient."""
    ring = spec.ring
    source = f.ring.domain
    terms = {}
    for monom, coeff in _reordered_terms(f, ring):
        if source == ring.domain:
            value = coeff
        elif source.is_QQ:
            value = ring.domain(int(source.numer(coeff))) / ring.domain(int(source.denom(coeff)))
        else:
            value = ring.domain(int(source.to_sympy(coeff)))
        if value:
            terms[monom] = value
    return ring.from_dict(terms) if terms else ring.zero


def _reordered_terms(f, ring):
    index = [f.ring.symbols.index(s) if s in f.ring.symbols else None for s in ring.symbols]
    for monom, coeff in f.iterterms():
        yield tuple(monom[i] if i is not None else 0 for i in index), coeff


@dataclass(frozen=True, eq=False)
class Ideal:
    """
    Ideal of a polynomial ring: generators plus an optional cached reduced
    Gröbner basis for the ring's order. An empty generator tuple with an empty
    basis is the zero ideal.
    """
    spec: RingSpec
    gens: Tuple[PolyElement, ...]
    basis: Optional[Tuple[PolyElement, ...]] = None

    def __post_init__(self):
        ring = self.spec.ring
        gens = tuple(self.gens)
        for g in gens:
            if g.ring != ring:
                raise ValueError(f"generator {g} does not belong to ring {self.spec.names}")
        object.__setattr__(self, 'gens', gens)

    @classmethod
    def of(cls, spec, gens):
        return cls(spec, tuple(gens))

    @classmethod
    def zero(cls, spec):
        return cls(spec, (), ())

    @property
    def ring(self):
        return self.spec.ring

    @property
    def is_zero(self):
        return self.basis == ()

    def is_unit(self, budget: Budget = DEFAULT_BUDGET):
        basis = groebner_basis(self, budget).basis
        return len(basis) == 1 and basis[0] == self.ring.one

    def with_gens(self, extra):
        return Ideal(self.spec, self.gens + tuple(extra))

    def __repr__(self):
        shown = self.basis if self.basis is not None else self.gens
        return f"Ideal({self.spec.field.label}[{', '.join(self.spec.names)}]; {', '.join(map(str, shown))})"


def _sugar_degree(f):
    return max(monomial_deg(m) for m in f.itermonoms())


def _spoly(p, q):
    lcm = monomial_lcm(p.LM, q.LM)
    return p.mul_monom(monomial_div(lcm, p.LM)) - q.mul_monom(monomial_div(lcm, q.LM))


def _buchberger(polys, budget, verbose=False):
    """
    Buchberger's algorithm with the Gebauer–Möller update and sugar selection.
    Returns the reduced Gröbner basis, monic and sorted by decreasing leading
    monomial.
    """
    ring = polys[0].ring
    order = ring.order

    basis: List[PolyElement] = []
    sugar: List[int] = []
    G: set = set()
    pairs: Dict[Tuple[int, int], int] = {}

    def lm(i):
        return basis[i].LM

    def pair_sugar(i, j):
        lcm_deg = monomial_deg(monomial_lcm(lm(i), lm(j)))
        return max(sugar[i] + lcm_deg - monomial_deg(lm(i)), sugar[j] + lcm_deg - monomial_deg(lm(j)))

    def update(ih):
        nonlocal G, pairs
        mh = lm(ih)

        candidates = sorted(G)
        kept: List[int] = []
        while candidates:
            ig = candidates.pop(0)
            lcm_hg = monomial_lcm(mh, lm(ig))

            def redundant_by(ix):
                return monomial_divides(monomial_lcm(mh, lm(ix)), lcm_hg)

            coprime = monomial_deg(lcm_hg) == monomial_deg(mh) + monomial_deg(lm(ig))
            if coprime or (not any(redundant_by(ix) for ix in candidates)
                           and not any(redundant_by(ix) for ix in kept)):
                kept.append(ig)

        new_pairs = {}
        for ig in kept:
            lcm_hg = monomial_lcm(mh, lm(ig))
            if monomial_deg(lcm_hg) != monomial_deg(mh) + monomial_deg(lm(ig)):
                new_pairs[(ig, ih)] = pair_sugar(ig, ih)

        survivors = {}
        for (i, j), s in pairs.items():
            lcm_ij = monomial_lcm(lm(i), lm(j))
            if (not monomial_divides(mh, lcm_ij)
                    or monomial_lcm(lm(i), mh) == lcm_ij
                    or monomial_lcm(lm(j), mh) == lcm_ij):
                survivors[(i, j)] = s
        survivors.update(new_pairs)
        pairs = survivors

        G = {ig for ig in G if not monomial_divides(mh, lm(ig))}
        G.add(ih)

    def add(h, s):
        basis.append(h.monic())
        sugar.append(s)
        update(len(basis) - 1)

    for f in sorted(polys, key=lambda p: order(p.LM)):
        h = f.rem([basis[i] for i in sorted(G)]) if G else f
        if h:
            add(h, _sugar_degree(f))

    steps = 0
    while pairs:
        ij = min(pairs, key=lambda k: (pairs[k], order(monomial_lcm(lm(k[0]), lm(k[1]))), k))
        s = pairs.pop(ij)
        steps += 1
        if steps > budget.max_pairs or s > budget.max_degree:
            raise BudgetExhausted(budget, steps - 1, s)

        reducers = [basis[i] for i in sorted(G, key=lambda i: order(lm(i)))]
        h = _spoly(basis[ij[0]], basis[ij[1]]).rem(reducers)
        if h:
            add(h, s)
            if verbose and len(basis) % 50 == 0:
                print(f"  ... {len(basis)} polynomials, {len(pairs)} pairs pending, sugar {s}")

    minimal = [basis[i] for i in sorted(G)]
    reduced = []
    for g in minimal:
        others = [q for q in minimal if q is not g]
        reduced.append((g.rem(others) if others else g).monic())
    reduced.sort(key=lambda p: order(p.LM), reverse=True)
    if verbose:
        print(f"✓ Gröbner basis: {len(reduced)} elements after {steps} pairs")
    return reduced


def groebner_basis(I: Ideal, budget: Budget = DEFAULT_BUDGET, verbose=False) -> Ideal:
    """
    Compute the reduced Gröbner basis of I for its ring's order.

    Parameters:
    -----------
    I : Ideal
        Ideal with at least one generator (or the zero ideal from Ideal.zero)
    budget : Budget
        Pair and degree limits

    Returns:
    --------
    Ideal
        Same generators, basis populated

    Raises:
    -------
    ValueError
        On an empty generator list or a zero generator
    BudgetExhausted
        When the budget runs out
    """
    if I.basis is not None:
        return I
    if not I.gens:
        raise ValueError("an ideal needs at least one generator; use Ideal.zero for (0)")
    if any(not g for g in I.gens):
        raise ValueError("zero generator rejected")
    if any(g.is_ground for g in I.gens):
        return Ideal(I.spec, I.gens, (I.ring.one,))
    return Ideal(I.spec, I.gens, tuple(_buchberger(list(I.gens), budget, verbose)))


def ideal_from(spec: RingSpec, polys: Iterable[PolyElement], budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """Ideal of the nonzero polys among `polys`, with its basis; (0) if none remain."""
    gens = tuple(p for p in polys if p)
    if not gens:
        return Ideal.zero(spec)
    return groebner_basis(Ideal(spec, gens), budget)


def _check_ring(f, I):
    if f.ring != I.ring:
        raise ValueError(f"polynomial ring {f.ring.symbols} does not match ideal ring {I.spec.names}")


def normal_form(f: PolyElement, I: Ideal, budget: Budget = DEFAULT_BUDGET) -> PolyElement:
    """Remainder of f on division by the reduced basis of I; zero iff f ∈ I."""
    _check_ring(f, I)
    basis = groebner_basis(I, budget).basis
    if not basis or not f:
        return f
    return f.rem(list(basis))


def contains(I: Ideal, f: PolyElement, budget: Budget = DEFAULT_BUDGET) -> bool:
    return not normal_form(f, I, budget)


def same_ideal(I: Ideal, J: Ideal, budget: Budget = DEFAULT_BUDGET) -> bool:
    if I.spec != J.spec:
        raise ValueError(f"cannot compare ideals of {I.spec.names} and {J.spec.names}")
    return groebner_basis(I, budget).basis == groebner_basis(J, budget).basis


def ideal_sum(I: Ideal, polys: Iterable[PolyElement], budget: Budget = DEFAULT_BUDGET) -> Ideal:
    polys = list(polys)
    for f in polys:
        _check_ring(f, I)
    base = groebner_basis(I, budget).basis
    return ideal_from(I.spec, list(base) + polys, budget)


def _involves(f, indices):
    return any(m[i] for m in f.itermonoms() for i in indices)


def _eliminate_in(spec: RingSpec, polys, k, budget):
    """Eliminate the first k variables of `spec` (which must be a block-k order)."""
    target = spec.without(spec.names[:k])
    basis = groebner_basis(Ideal(spec, tuple(polys)), budget).basis
    kept = [transfer(g, target.ring) for g in basis if not _involves(g, range(k))]
    if not kept:
        return Ideal.zero(target)
    kept.sort(key=lambda p: target.ring.order(p.LM), reverse=True)
    return Ideal(target, tuple(kept), tuple(kept))


def eliminate(I: Ideal, variables: Sequence[str], budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """
    Intersect I with the subring in the remaining variables, via a block order.
    The result lives in the grevlex ring on the remaining variables.
    """
    variables = [v for v in I.spec.names if v in set(variables)]
    if not variables:
        raise ValueError("nothing to eliminate")
    missing = set(variables) - set(I.spec.names)
    if missing:
        raise ValueError(f"unknown variables {sorted(missing)}")
    if len(variables) == len(I.spec.names):
        raise ValueError("cannot eliminate every variable")
    if I.is_zero:
        return Ideal.zero(I.spec.without(variables))

    keep = tuple(n for n in I.spec.names if n not in variables)
    elim_spec = RingSpec(tuple(variables) + keep, I.spec.field, MonomialOrder.eliminating(len(variables)))
    polys = [transfer(g, elim_spec.ring) for g in I.gens]
    return _eliminate_in(elim_spec, polys, len(variables), budget)


def _back_to(J: Ideal, spec: RingSpec, budget):
    """Re-express an ideal on the same variables in another order of `spec`."""
    if J.spec == spec:
        return J
    if J.is_zero:
        return Ideal.zero(spec)
    return groebner_basis(Ideal(spec, tuple(transfer(g, spec.ring) for g in J.basis)), budget)


def intersect(I: Ideal, J: Ideal, budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """I ∩ J via t·I + (1 − t)·J and elimination of t."""
    if I.spec != J.spec:
        raise ValueError("ideals live in different rings")
    if I.is_zero or J.is_zero:
        return Ideal.zero(I.spec)
    spec_t = I.spec.prefixed((TAG_VAR,))
    ring = spec_t.ring
    t = ring.gens[0]
    polys = [t * transfer(f, ring) for f in I.gens] + [(1 - t) * transfer(g, ring) for g in J.gens]
    return _back_to(_eliminate_in(spec_t, polys, 1, budget), I.spec, budget)


def ideal_quotient(I: Ideal, f: PolyElement, budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """(I : f) = {g : g·f ∈ I}, from I ∩ (f) divided by f."""
    _check_ring(f, I)
    if not f:
        raise ValueError("cannot take the quotient by zero")
    if I.is_zero:
        return Ideal.zero(I.spec)
    if contains(I, f, budget):
        return ideal_from(I.spec, [I.ring.one], budget)
    meet = intersect(I, Ideal(I.spec, (f,)), budget)
    return ideal_from(I.spec, [g.exquo(f) for g in meet.basis], budget)


def saturate(I: Ideal, f: PolyElement, budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """(I : f^∞) via I + (1 − w·f) and elimination of w."""
    _check_ring(f, I)
    if not f:
        raise ValueError("cannot saturate by zero")
    if I.is_zero:
        return Ideal.zero(I.spec)
    spec_w = I.spec.prefixed((INVERSE_VAR,))
    ring = spec_w.ring
    w = ring.gens[0]
    polys = [transfer(g, ring) for g in I.gens] + [1 - w * transfer(f, ring)]
    return _back_to(_eliminate_in(spec_w, polys, 1, budget), I.spec, budget)


def _unit_after_inverting(I: Ideal, f: PolyElement, budget):
    spec_w = I.spec.prefixed((INVERSE_VAR,), order=GREVLEX)
    ring = spec_w.ring
    w = ring.gens[0]
    gens = [] if I.is_zero else [transfer(g, ring) for g in I.gens]
    J = groebner_basis(Ideal(spec_w, tuple(gens) + (1 - w * transfer(f, ring),)), budget)
    return J.basis == (ring.one,)


def is_generically_empty(I: Ideal, u: str, budget: Budget = DEFAULT_BUDGET) -> bool:
    """True iff the locus where u is invertible is empty: 1 ∈ I + (1 − w·u)."""
    return _unit_after_inverting(I, I.spec.var(u), budget)


def radical_membership(f: PolyElement, I: Ideal, budget: Budget = DEFAULT_BUDGET) -> bool:
    """True iff f ∈ √I, via 1 ∈ I + (1 − w·f)."""
    _check_ring(f, I)
    if not f:
        raise ValueError("radical membership of zero is trivial; pass a nonzero polynomial")
    return _unit_after_inverting(I, f, budget)


def radicals_agree(I: Ideal, J: Ideal, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Two-sided radical containment: every generator of each lies in the other's radical."""
    return (all(radical_membership(g, J, budget) for g in groebner_basis(I, budget).basis)
            and all(radical_membership(g, I, budget) for g in groebner_basis(J, budget).basis))


def _min_hitting_set(supports: List[frozenset], limit: int) -> int:
    # drop supersets: hitting the minimal supports suffices
    supports = sorted(set(supports), key=len)
    minimal = [s for i, s in enumerate(supports) if not any(t < s for t in supports[:i])]
    best = [limit]

    def search(chosen):
        if len(chosen) >= best[0]:
            return
        for s in minimal:
            if not s & chosen:
                break
        else:
            best[0] = len(chosen)
            return
        for v in sorted(s):
            search(chosen | {v})

    search(frozenset())
    return best[0]


def krull_dim(I: Ideal, budget: Budget = DEFAULT_BUDGET) -> int:
    """
    Dimension of Spec of the quotient ring, from the leading-term ideal: the
    number of variables minus the smallest set of variables meeting the
    support of every leading monomial. Returns EMPTY_DIMENSION for the unit ideal.
    """
    nvars = len(I.spec.names)
    if I.is_zero:
        return nvars
    basis = groebner_basis(I, budget).basis
    if basis == (I.ring.one,):
        return EMPTY_DIMENSION
    supports = [frozenset(i for i, e in enumerate(g.LM) if e) for g in basis]
    return nvars - _min_hitting_set(supports, nvars)


@dataclass(frozen=True)
class FlatnessVerdict:
    """Outcome of the u-torsion test; witness g has g·u ∈ I but g ∉ I."""
    flat: bool
    witness: Optional[PolyElement] = None

    def __bool__(self):
        return self.flat


def is_flat_over_dvr(I: Ideal, u: str, budget: Budget = DEFAULT_BUDGET) -> FlatnessVerdict:
    """
    Flatness over the DVR generated by `u`: u is a nonzerodivisor modulo I,
    i.e. (I : u) = I. The unit ideal (empty scheme) counts as flat.
    """
    uu = I.spec.var(u)
    if I.is_unit(budget):
        return FlatnessVerdict(True, None)
    if contains(I, uu, budget):
        raise ValueError("special fiber is everything: u lies in the ideal")
    I = groebner_basis(I, budget)
    Q = ideal_quotient(I, uu, budget)
    for g in Q.basis:
        r = normal_form(g, I, budget)
        if r:
            return FlatnessVerdict(False, r)
    return FlatnessVerdict(True, None)


def _is_homogeneous(f):
    degrees = {monomial_deg(m) for m in f.itermonoms()}
    return len(degrees) <= 1


def homogenize(I: Ideal, budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """Projective closure in one more variable, from a grevlex basis."""
    J = _back_to(groebner_basis(I, budget), I.spec.with_order(GREVLEX), budget)
    spec_h = RingSpec(I.spec.names + (HOMOGENIZING_VAR,), I.spec.field, GREVLEX)
    ring = spec_h.ring
    if J.is_zero:
        return Ideal.zero(spec_h)
    polys = []
    for g in J.basis:
        top = _sugar_degree(g)
        polys.append(ring.from_dict({m + (top - monomial_deg(m),): c for m, c in g.iterterms()}))
    return ideal_from(spec_h, polys, budget)


def hilbert_function(I: Ideal, d: int, homogenize_input: bool = False,
                     budget: Budget = DEFAULT_BUDGET) -> int:
    """
    Dimension of the degree-d piece of the quotient ring of a homogeneous
    ideal: the number of degree-d monomials outside the grevlex leading-term
    ideal. With homogenize_input=True a non-homogeneous ideal is replaced by
    its homogenization, whose value in degree d counts monomials of degree ≤ d
    of the affine quotient.
    """
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")
    if not all(_is_homogeneous(g) for g in I.gens):
        if not homogenize_input:
            raise ValueError("ideal is not homogeneous; pass homogenize_input=True")
        I = homogenize(I, budget)
    nvars = len(I.spec.names)
    if I.is_zero:
        leads = []
    else:
        J = _back_to(groebner_basis(I, budget), I.spec.with_order(GREVLEX), budget)
        leads = [g.LM for g in J.basis]
    count = 0
    for combo in combinations_with_replacement(range(nvars), d):
        monom = [0] * nvars
        for i in combo:
            monom[i] += 1
        if not any(monomial_divides(lead, tuple(monom)) for lead in leads):
            count += 1
    return count


def substitute(I: Ideal, values: Dict[str, object], budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """Set the named variables to constants and drop them from the ring."""
    target = I.spec.without(values)
    if I.is_zero:
        return Ideal.zero(target)
    polys = []
    for g in I.gens:
        for name, value in values.items():
            g = g.subs(I.spec.var(name), I.spec.field.element(value))
        polys.append(transfer(g, target.ring))
    return ideal_from(target, polys, budget)


def special_fiber(I: Ideal, u: str, budget: Budget = DEFAULT_BUDGET) -> Ideal:
    return substitute(I, {u: 0}, budget)


def count_points(I: Ideal, p: int) -> int:
    """Brute-force count of F_p-points of an affine ideal."""
    spec = I.spec.with_field(CoefficientField(p))
    if I.is_zero:
        return p ** len(spec.names)
    polys = [reduce_coefficients(g, spec) for g in I.gens]
    return sum(1 for point in product(range(p), repeat=len(spec.names))
               if all(not f(*point) for f in polys))


def jacobian_corank(polys: Sequence[PolyElement], variables: Sequence[str], point: Sequence[int]) -> int:
    """
    len(variables) minus the rank of the Jacobian of `polys` with respect to
    `variables`, evaluated at `point` (values for every ring variable).
    """
    if not polys:
        return len(variables)
    ring = polys[0].ring
    names = [s.name for s in ring.symbols]
    rows = []
    for f in polys:
        row = []
        for v in variables:
            df = f.diff(ring.gens[names.index(v)])
            row.append(ring.domain.convert(df(*point)) if df else ring.domain.zero)
        rows.append(row)
    rank = DomainMatrix(rows, (len(rows), len(variables)), ring.domain).rank()
    return len(variables) - rank


if __name__ == "__main__":
    print("Exact Algebra Test")
    print("=" * 60)
    spec = RingSpec(('x2', 'x3', 'y2', 'y3'), CoefficientField(5))
    x2, x3, y2, y3 = spec.gens
    I = groebner_basis(Ideal.of(spec, [x2 * x3, y2 * y3, x2 * y2, x3 * y3, x2 * y3 + x3 * y2]))
    print(f"Basis: {I.basis}")
    print(f"Dimension: {krull_dim(I)}")
    print("\n" + "=" * 60)
