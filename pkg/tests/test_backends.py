"""Compiled vs interpreted kernel: selection, and bit-identical results."""

import random

import pytest

from paraq.backend import BACKEND, kern, load_pure_kernel


def test_backend_reported():
    assert BACKEND in ("compiled", "python")
    assert kern.COMPILED == (BACKEND == "compiled")


@pytest.fixture(scope="module")
def pure():
    return load_pure_kernel()


def _mirror_qkernel(mod, table):
    def ri(x):
        return mod.RI(x.lo, x.hi)

    def cb(z):
        return mod.CB(ri(z.re), ri(z.im))

    return mod.QKernel(ri(table.sigma), ri(table.nu), ri(table.kappa),
                       ri(table.tau), cb(table.mu),
                       ri(table.sqrt5.mul_scalar(2.0 / 3.0)))


def test_bit_identical_arithmetic(pure):
    rng = random.Random(7)
    for _ in range(3000):
        a = rng.uniform(-20, 20)
        b = a + rng.uniform(0, 4)
        c = rng.uniform(-20, 20)
        d = c + rng.uniform(0, 4)
        x1, y1 = kern.RI(a, b), kern.RI(c, d)
        x2, y2 = pure.RI(a, b), pure.RI(c, d)
        for op in ("add", "sub", "mul", "sin", "cos", "atan"):
            r1 = getattr(x1, op)(y1) if op in ("add", "sub", "mul") else getattr(x1, op)()
            r2 = getattr(x2, op)(y2) if op in ("add", "sub", "mul") else getattr(x2, op)()
            assert (r1.lo, r1.hi) == (r2.lo, r2.hi), op
        if a > 0.01:
            assert (x1.log().lo, x1.log().hi) == (x2.log().lo, x2.log().hi)


def test_bit_identical_q(pure, table):
    if not kern.COMPILED:
        pytest.skip("single backend available")
    qk2 = _mirror_qkernel(pure, table)
    rng = random.Random(8)
    done = 0
    while done < 200:
        re = rng.uniform(-15, 15)
        im = rng.uniform(-15, 15)
        if abs(complex(re, im)) < 1.2:
            continue
        z1 = kern.CB(kern.RI(re, re + 1e-6), kern.RI(im, im + 1e-6))
        z2 = pure.CB(pure.RI(re, re + 1e-6), pure.RI(im, im + 1e-6))
        try:
            q1 = table.qk.q(z1, True)
        except kern.KernelError:
            with pytest.raises(pure.KernelError):
                qk2.q(z2, True)
            continue
        q2 = qk2.q(z2, True)
        assert (q1.re_lo, q1.re_hi, q1.im_lo, q1.im_hi) == \
               (q2.re_lo, q2.re_hi, q2.im_lo, q2.im_hi)
        done += 1


def test_pure_env_override(tmp_path):
    import subprocess
    import sys

    code = ("import paraq; print(paraq.BACKEND)")
    out = subprocess.run([sys.executable, "-c", code],
                         env={"PARAQ_PURE": "1", "PATH": "/usr/bin:/bin"},
                         capture_output=True, text=True, cwd=str(tmp_path))
    assert out.stdout.strip() == "python"
