"""
JSON codecs for ideals, Iwahori-Weyl elements, wedge vectors and chart specs.
Encoders return plain dicts; json.dumps(..., sort_keys=True, indent=2) of
them is byte-stable across runs.
"""

import json
import re
from pathlib import Path

from sympy import sympify

from src import dvr
from src.exactalg import CoefficientField, Ideal, MonomialOrder, RingSpec
from src.spin import WedgeVector, check_index
from src.weyl import AffineWeylElement


def field_to_json(field: CoefficientField):
    return 'Q' if field.modulus is None else {'Fp': field.modulus}


def field_from_json(data) -> CoefficientField:
    if data == 'Q':
        return CoefficientField()
    if isinstance(data, dict) and set(data) == {'Fp'}:
        return CoefficientField(int(data['Fp']))
    raise ValueError(f"unrecognised field {data!r}")


def order_to_json(order: MonomialOrder):
    return order.kind if order.kind != 'block' else {'block': order.block}


def order_from_json(data) -> MonomialOrder:
    if data in ('grevlex', 'lex'):
        return MonomialOrder(data)
    if isinstance(data, dict) and set(data) == {'block'}:
        return MonomialOrder.eliminating(int(data['block']))
    raise ValueError(f"unrecognised monomial order {data!r}")


def _poly_to_json(f, field):
    return [[field.format(c), list(m)] for m, c in f.terms()]


def ideal_to_json(I: Ideal, use_basis=False):
    """
    {"field", "vars", "order", "gens"}; each generator is a list of
    [coefficient-string, exponent-vector] terms in decreasing monomial order.
    """
    polys = I.basis if use_basis and I.basis is not None else I.gens
    return {
        'field': field_to_json(I.spec.field),
        'vars': list(I.spec.names),
        'order': order_to_json(I.spec.order),
        'gens': [_poly_to_json(g, I.spec.field) for g in polys],
    }


def ideal_from_json(data) -> Ideal:
    try:
        field = field_from_json(data['field'])
        spec = RingSpec(tuple(data['vars']), field, order_from_json(data.get('order', 'grevlex')))
        gens = data['gens']
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed ideal JSON: {exc}") from exc
    ring = spec.ring
    polys = []
    for g in gens:
        terms = {}
        for coeff, exps in g:
            if len(exps) != len(spec.names):
                raise ValueError(f"exponent vector {exps} does not match {len(spec.names)} variables")
            key = tuple(int(e) for e in exps)
            terms[key] = terms.get(key, field.domain.zero) + field.parse(coeff)
        terms = {m: c for m, c in terms.items() if c}
        polys.append(ring.from_dict(terms) if terms else ring.zero)
    if any(not p for p in polys):
        raise ValueError("zero generators are not allowed")
    return Ideal(spec, tuple(polys))


def read_ideal(path) -> Ideal:
    with open(Path(path), encoding='utf-8') as f:
        return ideal_from_json(json.load(f))


def element_to_json(w: AffineWeylElement):
    """Translation, 1-based signed permutation and Ω-component."""
    return {
        'n': w.n,
        't': list(w.t),
        'perm': [p + 1 for p in w.perm],
        'signs': list(w.signs),
        'omega': w.omega,
    }


def element_from_json(data) -> AffineWeylElement:
    w = AffineWeylElement(int(data['n']), tuple(int(c) for c in data['t']),
                          tuple(int(p) - 1 for p in data['perm']),
                          tuple(int(s) for s in data['signs']))
    if sorted(w.perm) != list(range(w.m)) or any(s not in (1, -1) for s in w.signs):
        raise ValueError(f"not a signed permutation: {data['perm']}, {data['signs']}")
    if 'omega' in data and int(data['omega']) != w.omega:
        raise ValueError(f"omega {data['omega']} disagrees with translation {w.t}")
    return w


def laurent_to_string(f, K) -> str:
    """
    A k(u) element as "c*u^k" terms when its denominator is a power of u,
    otherwise as a quotient of two polynomials.
    """
    if not f:
        return '0'
    numer, denom = f.numer, f.denom
    if len(denom.terms()) == 1:
        ((shift,), dc) = denom.terms()[0]
        parts = []
        for (e,), c in sorted(numer.terms(), reverse=True):
            coeff = K.domain.to_sympy(c / dc)
            k = e - shift
            if k == 0:
                parts.append(str(coeff))
            else:
                power = 'u' if k == 1 else f'u^{k}'
                parts.append(power if coeff == 1 else f'-{power}' if coeff == -1 else f'{coeff}*{power}')
        return ' + '.join(parts).replace('+ -', '- ')
    return f"({_sympy_text(numer.as_expr())})/({_sympy_text(denom.as_expr())})"


def _sympy_text(expr):
    return str(expr).replace('**', '^')


def laurent_from_string(text, K):
    text = re.sub(r'\^', '**', text)
    return K.from_sympy(sympify(text, locals={'u': dvr.U_SYMBOL}))


def wedge_to_json(v: WedgeVector, K=None):
    def coeff(c):
        if K is not None and K.of_type(c):
            return laurent_to_string(c, K)
        return str(c)
    return {'n': v.n, 'terms': [[list(S), coeff(c)] for S, c in v.terms]}


def wedge_from_json(data, K=None) -> WedgeVector:
    K = K or dvr.laurent_domain()
    n = int(data['n'])
    return WedgeVector.from_dict(n, {check_index(S, n): laurent_from_string(c, K) for S, c in data['terms']})


def chart_spec_to_json(spec):
    return {'case': spec.case, 'n': spec.n, 'r': spec.r, 's': spec.s, 'level': spec.level}


def chart_spec_from_json(data):
    from src.charts import ChartSpec
    missing = [k for k in ('case', 'n', 'r', 's') if k not in data]
    if missing:
        raise ValueError(f"chart spec is missing {missing}")
    return ChartSpec(data['case'], int(data['n']), int(data['r']), int(data['s']), data.get('level', 'naive'))


def read_chart_spec(path):
    with open(Path(path), encoding='utf-8') as f:
        return chart_spec_from_json(json.load(f))


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def write_json(data, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(data), encoding='utf-8')
    return path


if __name__ == "__main__":
    print("Interchange Test")
    print("=" * 60)
    spec = RingSpec(('a', 'b'), CoefficientField(5))
    a, b = spec.gens
    print(dumps(ideal_to_json(Ideal.of(spec, [a * b, a ** 2 - 2]))))
    K = dvr.laurent_domain()
    print(laurent_to_string(K.from_sympy(dvr.U_SYMBOL ** -1 + 3 * dvr.U_SYMBOL ** 2), K))
    print("\n" + "=" * 60)
