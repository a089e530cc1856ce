"""Smoke test for the pyehz extension module.

Build and install first, e.g. `pip install --no-build-isolation ./crates/py`
(needs maturin), or copy target/release/libpyehz.so to pyehz.so on PYTHONPATH.
"""

from fractions import Fraction
import math

import pyehz


def main():
    assert "euler-hurwitz" in pyehz.formulas()

    r = pyehz.eval_series("sondow-alt", 80, s="1", digits=30)
    assert r["mode"] == "HIGH"
    assert r["value"].startswith("0.69314718055994530941"), r
    assert r["abs_error"] <= 3 * r["tail_estimate"]

    r = pyehz.eval_series("euler-hurwitz", 100000, s="4", x="1", mode="fast")
    assert abs(float(r["value"]) - 1.0369277551433699) <= 3 * r["tail_estimate"]

    consts = dict(pyehz.constants(20))
    assert consts["gamma"] == "0.57721566490153286061"
    assert math.isclose(float(consts["zeta2"]), math.pi ** 2 / 6, rel_tol=1e-15)

    assert pyehz.stirling1(10, 3) == -1172700
    assert pyehz.stirling1(30, 1) == -math.factorial(29)
    assert Fraction(pyehz.harmonic(4, 1)) == Fraction(25, 12)
    assert Fraction(pyehz.harmonic(2, 2, "1/2")) == Fraction(4) + Fraction(4, 9)

    reports = pyehz.verify_identities("coppo_30", n_max=30, q_max=4, x="1/3")
    assert len(reports) == 31 * 4
    assert all(rep["status"] == "PASS" for rep in reports)

    summary = pyehz.verify_identities(profile="quick")
    assert len(summary) == len(pyehz.identity_ids())
    assert not [rep["id"] for rep in summary if rep["status"] == "FAIL"]

    for bad in (lambda: pyehz.eval_series("nope", 10),
                lambda: pyehz.harmonic(3, 1, "0.5"),
                lambda: pyehz.verify_identities("no_such")):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    try:
        pyehz.eval_series("euler-hurwitz", 10, s="1", x="-1")
    except ArithmeticError:
        pass
    else:
        raise AssertionError("expected ArithmeticError")

    print("pyehz smoke test passed")


if __name__ == "__main__":
    main()
