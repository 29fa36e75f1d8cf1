"""Smoke test for the skewroot extension module.

Build and install first, e.g.  pip install maturin && maturin build -m crates/py/Cargo.toml
then pip install the wheel from target/wheels/.
"""

from fractions import Fraction

import skewroot


def main():
    H = skewroot.Algebra("quat:-1,-1")
    i, j, k = H.generator("i"), H.generator("j"), H.generator("k")
    assert i * j == k and j * i == -k and i * i == -1

    p = H.element("1/2 + 3i - j")
    assert p.coords == [Fraction(1, 2), 3, -1, 0]
    assert p * p.inverse() == H.one()
    assert skewroot.minimal_polynomial(i) == [1, 0, 1]

    # (x - (1+j))(x - i): d_1 = i is the rightmost factor
    ds = [i, H.element("1 + j")]
    z1, z2 = skewroot.linear_factor_roots(ds)
    assert z1 == i
    assert z2 == H.element("1 + 2/3*i + 1/3*j + 2/3*k")
    assert skewroot.minimal_polynomial(z2) == [2, -2, 1]
    assert skewroot.quaternion_roots(ds) == [z1, z2]
    P = skewroot.Polynomial.from_linear_factors(ds)
    assert P(z1).is_zero() and P(z2).is_zero()

    d, d3 = skewroot.swap_factors(i, H.element("1 + j"))
    assert skewroot.Polynomial.from_linear_factors([d3, d]) == P

    q, r = H.poly("x^3 + i*x + j").right_divide(H.poly("x - k"))
    assert r.coeffs == [H.poly("x^3 + i*x + j")(k)]

    C = skewroot.Algebra("cyclic:default")
    th, u = C.generator("th"), C.generator("u")
    assert u * th == (th * th - 2) * u
    t = skewroot.find_conjugator(th, th * th - 2)
    assert th.conjugated_by(t) == th * th - 2
    rep = skewroot.build_quadratic_counterexample(th, u, 4, 4, seed=7)
    assert rep["class_polynomial"] == [1, -3, 0, 1]
    assert all(rep["polynomial"](z).is_zero() for z in rep["roots"])
    assert not any(rep["polynomial"](s).is_zero() for s in rep["nonroots"])
    assert rep["remainder"].degree is not None

    try:
        H.poly("x*i")
    except skewroot.SkewrootError as e:
        assert "NoncommutativeAmbiguity" in str(e)
    else:
        raise AssertionError("expected an error")
    try:
        i + th
    except ValueError:
        pass
    else:
        raise AssertionError("expected an error")

    print("skewroot smoke test: ok")


if __name__ == "__main__":
    main()
