import random

import pytest
from hypothesis import given, strategies as st

from dsl_corpus import random_bytes, random_expr
from unitgroups.dsl import (GA, GF, PQ, CyclicG, DihedralG, EvalError, GammaHandle, Mat, ParseError,
                            Prod, Quot, Term, Zn, evaluate, generator_context, parse_element,
                            parse_ring_expr, ring_element, to_text)
from unitgroups.units import unit_group


# -- parsing examples -----------------------------------------------------------


def test_parse_examples():
    assert parse_ring_expr("M(2,GF(2))") == Mat(2, GF(2))
    assert parse_ring_expr("Z(4) x M(2,GF(2))") == Prod(Zn(4), Mat(2, GF(2)))
    with pytest.raises(ParseError, match="6 is not a prime power"):
        parse_ring_expr("GF(6)")


def test_product_is_left_associative():
    assert parse_ring_expr("Z(2) x Z(3) x Z(5)") == Prod(Prod(Zn(2), Zn(3)), Zn(5))


def test_whitespace_insensitive():
    a = parse_ring_expr("GA(GF(2),D(6))xZ(4)")
    b = parse_ring_expr("  GA ( GF ( 2 ) ,\tD( 6 ) )\n x  Z( 4 ) ")
    assert a == b and isinstance(a, Prod)
    with pytest.raises(ParseError):
        parse_ring_expr("G A(GF(2), D(6))")


def test_groups_and_polys():
    assert parse_ring_expr("GA(Z(3), C(4))") == GA(Zn(3), CyclicG(4))
    assert parse_ring_expr("GA(Z(3), D(4))").group == DihedralG(4)
    assert parse_ring_expr("PQ(Z(4), [1, 0, -3, 1])") == PQ(Zn(4), (1, 0, -3, 1))


def test_quot_elements():
    e = parse_ring_expr("Quot(GA(GF(2), D(12)), [r^2 + r^4; 3*r^5*s + 1; 2*1])")
    assert isinstance(e, Quot) and len(e.elems) == 3
    assert e.elems[1].terms == (Term(3, "r", 5, True), Term(None, "1"))
    assert e.elems[2].terms == (Term(2, "1"),)


@pytest.mark.parametrize("text,offset,fragment", [
    ("GF(6)", 3, "not a prime power"),
    ("GA(GF(2), D(5))", 12, "even"),
    ("PQ(Z(4), [1, 2])", 9, "not monic"),
    ("PQ(Z(4), [1])", 9, "degree"),
    ("Quot(Z(4), [r])", 12, "generator r"),
    ("Quot(GA(GF(2), C(3)), [s])", 23, "generator s"),
    ("Quot(PQ(GF(2), [0, 1]), [2])", 25, "2*1"),
    ("Z(4) x", 6, "end of input"),
    ("Z(4))", 4, "unexpected byte"),
    ("Y(4)", 0, "unexpected"),
    ("Z(0)", 2, "positive"),
    ("Z(99999999999999)", 2, "too large"),
    ("Z(" + "9" * 6000 + ")", 2, "too large"),
    ("", 0, "end of input"),
])
def test_error_offsets(text, offset, fragment):
    with pytest.raises(ParseError) as info:
        parse_ring_expr(text)
    assert info.value.offset == offset
    assert fragment in str(info.value)
    assert f"at byte {offset}" in str(info.value)


def test_leading_zeros():
    assert parse_ring_expr("Z(0000000000000000000004)") == Zn(4)


def test_error_expected_set():
    with pytest.raises(ParseError) as info:
        parse_ring_expr("GA(GF(2), Q(3))")
    assert {"C", "D"} <= info.value.expected
    with pytest.raises(ParseError) as info:
        parse_ring_expr("Z(4) Z(5)")
    assert "x" in info.value.expected


def test_depth_limit():
    deep = "M(1, " * 100 + "Z(2)" + ")" * 100
    with pytest.raises(ParseError, match="too deeply"):
        parse_ring_expr(deep)
    ok = "M(1, " * 20 + "Z(2)" + ")" * 20
    assert parse_ring_expr(ok)


def test_bytes_input_and_offsets():
    with pytest.raises(ParseError) as info:
        parse_ring_expr(b"Z(4) x \xff")
    assert info.value.offset == 7
    with pytest.raises(ParseError) as info:
        parse_ring_expr("Z(4) x ü")
    assert info.value.offset == 7


def test_parse_element_standalone():
    assert parse_element("x^2 + 1", "x").terms == (Term(None, "x", 2), Term(None, "1"))
    with pytest.raises(ParseError):
        parse_element("x + ", "x")
    with pytest.raises(ParseError):
        parse_element("r", "x")


def test_generator_context():
    assert generator_context(parse_ring_expr("GA(Z(2), D(4))")) == {"r", "s"}
    assert generator_context(parse_ring_expr("GA(Z(2), C(4))")) == {"g"}
    assert generator_context(parse_ring_expr("Quot(PQ(Z(2), [0, 1]), [x])")) == {"x"}
    assert generator_context(parse_ring_expr("M(2, GF(2))")) == frozenset()


# -- evaluation -----------------------------------------------------------------


def test_eval_examples():
    R = evaluate("GA(GF(2), D(6))")
    assert R.order == 64 and unit_group(R).structure.n == 6
    assert evaluate("PQ(Z(4), [1,0,0,0,1])").order == 256
    Q = evaluate("Quot(GA(GF(2), D(2)), [1+s])")
    assert Q.order == 2 and unit_group(Q).order == 1


def test_eval_gamma_handle():
    h = evaluate("Gamma(5)")
    assert isinstance(h, GammaHandle) and h.units().structure.n == 10
    with pytest.raises(EvalError):
        evaluate("Gamma(5) x Z(2)")
    with pytest.raises(EvalError):
        evaluate("M(2, Gamma(3))")


def test_eval_budget_and_semantics():
    with pytest.raises(EvalError, match="budget"):
        evaluate("M(3, GF(8))")
    with pytest.raises(EvalError):
        evaluate("PQ(M(2, GF(2)), [0, 1])")


def test_ring_element_values():
    R = evaluate("GA(GF(2), D(6))")
    r, s = R.generators["r"], R.generators["s"]
    assert ring_element(R, "r^3") == R.one
    assert ring_element(R, "r*s") == int(R.mul(r, s))
    assert ring_element(R, "r + r") == R.zero
    assert ring_element(R, "3*s") == s
    S = evaluate("PQ(Z(5), [1, 0, 1])")
    assert ring_element(S, "x^2 + 1") == S.zero
    assert ring_element(S, "0*x") == S.zero


def test_quotient_tag():
    Q = evaluate("Quot(Z(12), [4*1])")
    assert Q.order == 4 and "4*1" in Q.tag


# -- round trip and fuzz -------------------------------------------------------


def round_trip_corpus(seed: int, count: int = 200):
    rng = random.Random(seed)
    return [random_expr(rng, rng.randint(0, 4)) for _ in range(count)]


@pytest.mark.parametrize("seed", [0, 1])
def test_round_trip(seed):
    for e in round_trip_corpus(seed):
        text = to_text(e)
        assert parse_ring_expr(text) == e, text
        assert to_text(parse_ring_expr(text)) == text


def test_right_nested_product_has_no_text():
    with pytest.raises(ValueError):
        to_text(Prod(Zn(2), Prod(Zn(3), Zn(5))))


def check_no_crash(data: bytes) -> None:
    try:
        e = parse_ring_expr(data)
    except ParseError as exc:
        assert 0 <= exc.offset <= len(data)
        assert str(exc).startswith(f"at byte {exc.offset}")
    else:
        assert parse_ring_expr(to_text(e)) == e


@given(st.binary(max_size=60))
def test_fuzz_bytes(data):
    check_no_crash(data)


def test_fuzz_mutations():
    rng = random.Random(11)
    for _ in range(5000):
        check_no_crash(random_bytes(rng))
