import math

import numpy as np
import pytest

from primelab.logdomain import LogValue, ln_of


def test_roundtrip_inside_float_range():
    rng = np.random.default_rng(0)
    for _ in range(2000):
        x = float(rng.uniform(-1, 1) * 10.0 ** rng.uniform(-300, 300))
        if x == 0.0:
            continue
        back = LogValue.from_float(x).to_float()
        assert math.isclose(back, x, rel_tol=1e-12)


def test_multiplication_adds_logs():
    a = LogValue.from_float(3.5e200)
    b = LogValue.from_float(-2.0e150)
    c = a * b
    assert c.sign == -1
    assert math.isclose(c.ln_mag, a.ln_mag + b.ln_mag)
    assert str(c).startswith("-7e+350")


def test_addition_and_subtraction():
    rng = np.random.default_rng(1)
    for _ in range(2000):
        x, y = rng.normal(size=2) * 10.0 ** rng.uniform(0, 30)
        s = (LogValue.from_float(x) + LogValue.from_float(y)).to_float()
        assert math.isclose(s, x + y, rel_tol=1e-9, abs_tol=1e-280 * max(1, abs(x)))
    z = LogValue.from_float(1.0) - LogValue.from_float(1.0)
    assert z.sign == 0 and z.to_float() == 0.0


def test_comparisons_match_floats():
    vals = [-4.2e10, -1.0, -1e-20, 0.0, 3e-8, 1.0, 7.7e99]
    lvs = [LogValue.from_float(v) for v in vals]
    for i, a in enumerate(vals):
        for j, b in enumerate(vals):
            assert (lvs[i] < lvs[j]) == (a < b)
            assert (lvs[i] >= lvs[j]) == (a >= b)


def test_big_integer_entry_points():
    n = 10**400  # far beyond float range
    lv = LogValue.from_float(n)
    assert math.isclose(lv.ln_mag, 400 * math.log(10))
    assert math.isclose(ln_of(n), 400 * math.log(10))
    assert lv.to_float() == math.inf


def test_mantissa_exponent():
    m, e = LogValue.from_ln(300 * math.log(10) + math.log(5.32)).mantissa_exponent()
    assert e == 300
    assert math.isclose(m, 5.32, rel_tol=1e-9)


def test_power_and_division():
    v = LogValue.from_float(2.0) ** 1000
    assert math.isclose(v.ln_mag, 1000 * math.log(2))
    w = v / v
    assert math.isclose(w.to_float(), 1.0)
    with pytest.raises(ZeroDivisionError):
        v / LogValue.from_float(0.0)
    with pytest.raises(ValueError):
        LogValue(2, 0.0)
