import math
import random

import pytest

from factorlab.errors import (
    NonIntegralQuotient,
    ShapeSyntaxError,
    UnboundSymbol,
    UnknownFamily,
)
from factorlab.shapes import (
    Bracket,
    Family,
    IntAtom,
    Named,
    PowerAtom,
    classical_order,
    factorize,
    named_order,
    order_of,
    parse_shape,
    ppd,
    print_shape,
)


def roundtrip(s):
    ast = parse_shape(s)
    printed = print_shape(ast)
    ast2 = parse_shape(printed)
    assert ast2 == ast
    assert print_shape(ast2) == printed
    return ast


def test_parse_basic_shapes():
    ast = roundtrip("2^3:SL(3,2)")
    term = ast.prod.terms[0]
    assert isinstance(term.atoms[0], PowerAtom)
    assert isinstance(term.atoms[1], Family) and term.atoms[1].name == "SL"

    ast = roundtrip("[gcd(q^5,q^6/4)]:SL(2,q)")
    assert isinstance(ast.prod.terms[0].atoms[0], Bracket)

    ast = roundtrip("3.M22")
    atoms = ast.prod.terms[0].atoms
    assert atoms == (IntAtom(3), Named("M22"))

    roundtrip("(SL(2,3) x SL(2,9))/2")
    roundtrip("q^c:Sp(a,q^(2*b))")
    roundtrip("[q^(c-2*b+1)].SL(a-1,q^(2*b))")
    roundtrip("Omega-(2*a,q^b):[gcd(2,b)]")
    roundtrip("3^(2+4):(SL(2,5) x 8)")
    roundtrip("Sp(4,2)'")
    roundtrip("2^(1+4).A5")
    roundtrip("Sz(q^(m/2))")
    roundtrip("D(2*(q^(m/2)-1))")
    roundtrip("[(q-1)/2].2")


def test_parse_errors():
    with pytest.raises(ShapeSyntaxError):
        parse_shape("SL(3,2")
    with pytest.raises(UnknownFamily):
        parse_shape("Foo(3,2)")
    with pytest.raises(UnboundSymbol):
        order_of("SL(a,q)", {"q": 4})


def test_order_examples():
    assert order_of("2^3:SL(3,2)", {}) == 1344
    assert order_of("[gcd(q^5,q^6/4)]:SL(2,q)", {"q": 2}) == 96
    assert order_of("(SL(2,3) x SL(2,9))/2", {}) == 8640
    assert order_of("3.M22", {}) == 3 * 443520
    assert order_of("q^(a*b-b):SL(a-1,q^b)", {"q": 2, "a": 2, "b": 2}) == 4


def test_order_multiplicative_over_separators():
    rng = random.Random(5)
    pieces = ["SL(3,2)", "2^3", "A7", "[q^2]", "Sp(4,3)"]
    for _ in range(20):
        k = rng.randrange(2, 4)
        chosen = [rng.choice(pieces) for _ in range(k)]
        seps = [rng.choice([":", ".", " x "]) for _ in range(k - 1)]
        s = chosen[0]
        for sep, piece in zip(seps, chosen[1:]):
            s += sep + piece
        expect = math.prod(order_of(p, {"q": 3}) for p in chosen)
        assert order_of(s, {"q": 3}) == expect


def test_nonintegral_quotient():
    with pytest.raises(NonIntegralQuotient):
        order_of("SL(3,2)/5", {})
    with pytest.raises(NonIntegralQuotient):
        order_of("[q/4]", {"q": 2})


def test_classical_orders_known_values():
    assert classical_order("SL", 4, 2) == 20160
    assert classical_order("SU", 4, 2) == 25920
    assert classical_order("SU", 4, 2) // classical_order("SU", 3, 2) == 120
    assert classical_order("Sp", 6, 2) == 1451520
    assert classical_order("Omega+", 8, 2) == 174182400
    assert classical_order("SigmaL", 2, 4) == 120
    assert classical_order("Omega-", 4, 2) == 60  # PSL(2,4)
    assert classical_order("OmegaOdd", 7, 3) == 4585351680
    assert classical_order("G2", 2, primed=True) == 6048
    assert classical_order("Sp", 4, 2, primed=True) == 360
    assert classical_order("Sp", 0, 5) == 1
    assert classical_order("SL", 1, 9) == 1
    assert classical_order("POmega+", 8, 3) == 4952179814400
    assert classical_order("Omega-", 6, 3) == 6531840
    assert classical_order("GammaO-", 4, 4) == 16320
    assert classical_order("Spin", 9, 3) == 2 * classical_order("OmegaOdd", 9, 3)
    assert classical_order("TwoG2", 3) == 1512
    assert classical_order("Sz", 8) == 29120
    assert classical_order("D", 18) == 18
    assert classical_order("A", 9) == 181440


def test_named_orders():
    assert named_order("A7") == 2520
    assert named_order("S6") == 720
    assert named_order("D10") == 10
    assert named_order("M10") == 720
    assert named_order("Co3") == 495766656000
    with pytest.raises(UnknownFamily):
        named_order("Nope")


def test_factorize():
    rng = random.Random(6)
    for _ in range(30):
        n = rng.randrange(2, 10 ** 12)
        f = factorize(n)
        acc = 1
        for p, e in f.items():
            assert p > 1
            acc *= p ** e
        assert acc == n
    big = (2 ** 46 - 1) * (2 ** 46 + 1)
    f = factorize(big)
    assert math.prod(p ** e for p, e in f.items()) == big


def _oracle_ppd(a, k):
    # literal definition, via a full factorization of a^k - 1
    if (a, k) == (2, 6):
        return frozenset({7})
    out = set()
    for r in factorize(a ** k - 1):
        if all((a ** j - 1) % r for j in range(1, k)):
            out.add(r)
    return frozenset(out)


def test_ppd_conventions():
    assert ppd(2, 4) == frozenset({5})
    assert ppd(2, 6) == frozenset({7})
    assert ppd(2, 2) == frozenset({3})
    assert ppd(3, 2) == frozenset()  # 3 = 2^2 - 1 is Mersenne
    assert ppd(7, 2) == frozenset()  # 7 = 2^3 - 1 is Mersenne
    assert ppd(2, 10) == frozenset({11})
    assert ppd(4, 3) == frozenset({7})  # hits non-prime a as well


def test_ppd_matches_oracle_small():
    for a in range(2, 9):
        for k in range(2, 13):
            assert ppd(a, k) == _oracle_ppd(a, k), (a, k)
