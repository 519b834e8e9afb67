import pytest

from pispec.arithmetic import PrimeSet, cyclotomic_value, factor_over, sieve_primes
from pispec.catalog import (
    GroupId,
    GroupNameError,
    canonical_id,
    coincidence_classes,
    order_int,
    order_shape,
    parse_name,
    spectrum,
    sporadic_catalog,
)


def test_parse_examples():
    g = parse_name("L2(7)")
    assert (g.family, g.n, g.p, g.k) == ("L", 2, 7, 1)
    g = parse_name("O+8(3)")
    assert (g.family, g.n, g.p, g.k) == ("O+", 8, 3, 1)
    assert parse_name("2F4(2)'").family == "T"
    assert parse_name("Sz(8)") == parse_name("2B2(8)")
    assert parse_name("M11").sporadic == "M11"


def test_parse_errors():
    with pytest.raises(GroupNameError):
        parse_name("")
    with pytest.raises(GroupNameError):
        parse_name("L2(6)")  # not a prime power
    with pytest.raises(GroupNameError):
        parse_name("X9(2)")
    with pytest.raises(GroupNameError):
        parse_name("M13")  # unknown sporadic name


def test_canonical_aliases():
    assert canonical_id(parse_name("L2(4)")).group == parse_name("A5")
    assert canonical_id(parse_name("L2(5)")).group == parse_name("A5")
    assert canonical_id(parse_name("L2(9)")).group == parse_name("A6")
    assert canonical_id(parse_name("L4(2)")).group == parse_name("A8")
    assert canonical_id(parse_name("L3(2)")).group == parse_name("L2(7)")
    assert canonical_id(parse_name("S4(3)")).group == parse_name("U4(2)")


def test_canonical_not_simple():
    for name in ("L2(2)", "L2(3)", "U3(2)", "S4(2)", "G2(2)", "A4", "Sz(2)", "2G2(3)"):
        assert canonical_id(parse_name(name)).kind == "not-simple"
    res = canonical_id(parse_name("2F4(2)"))
    assert res.kind == "not-simple"
    assert "Tits" in res.reason


def test_even_characteristic_odd_orthogonal_is_symplectic():
    res = canonical_id(parse_name("O7(2)"))
    assert res.kind == "alias"
    assert res.group == parse_name("S6(2)")
    # odd characteristic stays its own class, despite the equal order
    assert canonical_id(parse_name("O7(3)")).kind == "canonical"
    assert order_int(parse_name("O7(3)")) == order_int(parse_name("S6(3)"))


def test_order_shape_examples():
    sh = order_shape(parse_name("L2(7)"))
    assert (sh.power, sh.phis, sh.divisor) == (1, ((1, 1), (2, 1)), 2)
    sh = order_shape(parse_name("3D4(2)"))
    phis = dict(sh.phis)
    assert phis[3] >= 1 and phis[6] >= 1 and phis[12] >= 1
    assert (2**4 + 2**2 + 1) * (2**4 - 2**2 + 1) == 273 == 7 * 3 * 13
    sh = order_shape(parse_name("A7"))
    assert sh.kind == "explicit" and sh.value == 2520


def test_order_examples():
    assert order_int(parse_name("A5")) == 60
    assert order_int(parse_name("Sz(8)")) == 64 * 65 * 7 == 29120
    assert order_int(parse_name("U4(2)")) == 25920


def _product_form_order(g):
    """Independent route: multiply out the q^i +- 1 factors directly."""
    import math

    q, n = g.q, g.n
    if g.family == "L":
        num = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            num *= q**i - 1
        return num // math.gcd(n, q - 1)
    if g.family == "U":
        num = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            num *= q**i - (-1) ** i
        return num // math.gcd(n, q + 1)
    if g.family in ("S", "O"):
        m = n // 2
        num = q ** (m * m)
        for i in range(1, m + 1):
            num *= q ** (2 * i) - 1
        return num // math.gcd(2, q - 1)
    if g.family == "O+":
        m = n // 2
        num = q ** (m * (m - 1)) * (q**m - 1)
        for i in range(1, m):
            num *= q ** (2 * i) - 1
        return num // math.gcd(4, q**m - 1)
    if g.family == "O-":
        m = n // 2
        num = q ** (m * (m - 1)) * (q**m + 1)
        for i in range(1, m):
            num *= q ** (2 * i) - 1
        return num // math.gcd(4, q**m + 1)
    raise AssertionError


def test_classical_orders_match_product_form():
    qs = [2, 3, 4, 5, 7, 8, 9]
    for q in qs:
        p = 2 if q in (2, 4, 8) else (3 if q == 9 else q)
        k = {2: 1, 4: 2, 8: 3}.get(q, 2 if q == 9 else 1)
        for family, dims in (
            ("L", range(2, 13)), ("U", range(3, 13)),
            ("S", range(4, 13, 2)), ("O", range(7, 13, 2)),
            ("O+", range(8, 13, 2)), ("O-", range(8, 13, 2)),
        ):
            for n in dims:
                g = GroupId(family, n=n, p=p, k=k)
                if canonical_id(g).kind != "canonical":
                    continue
                assert order_int(g) == _product_form_order(g), g.name


def test_twisted_orders():
    # Sz(q) = q^2 (q^2+1)(q-1); 2G2(q) = q^3 (q^3+1)(q-1)
    assert order_int(parse_name("Sz(32)")) == 32**2 * (32**2 + 1) * 31
    assert order_int(parse_name("2G2(27)")) == 27**3 * (27**3 + 1) * 26
    q = 8
    assert order_int(parse_name("2F4(8)")) == q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)


def test_spectrum_examples():
    assert spectrum(parse_name("A5"), PrimeSet((2, 3, 5))).parts == ((2, 2), (3, 1), (5, 1))
    assert spectrum(parse_name("L2(7)"), sieve_primes(7)).parts == ((2, 3), (3, 1), (7, 1))
    f = spectrum(parse_name("Sz(32)"), sieve_primes(41))
    assert f.parts == ((2, 10), (5, 2), (31, 1), (41, 1)) and f.smooth


def test_spectrum_reconstructs_order():
    P = sieve_primes(1000)
    for name in ("A20", "L5(9)", "U6(4)", "O-10(3)", "E7(2)", "3D4(8)", "M24", "2F4(2)'"):
        g = parse_name(name)
        assert spectrum(g, P).value() == order_int(g), name


def test_spectrum_honest_cofactor():
    P = PrimeSet((2, 3))
    f = spectrum(parse_name("L2(7)"), P)
    assert f.value() == 168 and f.cofactor == 7


def test_alternating_spectrum_matches_factor_over():
    P = sieve_primes(47)
    import math

    for n in (5, 12, 23, 57, 101, 200):
        f = spectrum(GroupId("A", n=n), P)
        assert f == factor_over(math.factorial(n) // 2, P)


def test_sporadic_catalog():
    cat = sporadic_catalog()
    assert len(cat) == 27
    for gid, fact in cat:
        assert fact.value() == order_int(gid)
    by_name = {g.name: f for g, f in cat}
    assert by_name["M11"].parts == ((2, 4), (3, 2), (5, 1), (11, 1))
    assert by_name["M11"].value() == 7920
    assert by_name["2F4(2)'"].parts == ((2, 11), (3, 3), (5, 2), (13, 1))
    assert by_name["2F4(2)'"].value() == 17971200


def test_coincidence_classes():
    classes = {c.representative.name: c for c in coincidence_classes()}
    assert len(classes) == 5
    assert {a.name for a in classes["A5"].aliases} == {"L2(4)", "L2(5)"}
    assert {a.name for a in classes["A8"].aliases} == {"L4(2)"}
    assert {a.name for a in classes["L2(7)"].aliases} == {"L3(2)"}
    for c in coincidence_classes():
        for a in c.aliases:
            assert order_int(a) == order_int(c.representative)


def test_order_coincidence_without_isomorphism():
    # A8 and L3(4) share the order 20160; only L4(2) aliases to A8.
    assert order_int(parse_name("A8")) == order_int(parse_name("L3(4)")) == 20160
    assert canonical_id(parse_name("L4(2)")).group == parse_name("A8")
    assert canonical_id(parse_name("L3(4)")).kind == "canonical"
