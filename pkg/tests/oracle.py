"""50-digit mpmath oracle used by the soundness suites.

Everything here is test-only; the package itself never imports mpmath."""

import mpmath as mp

mp.mp.dps = 50


class Oracle:
    """High-precision constants and map evaluations."""

    def __init__(self):
        self.sigma = 2 / mp.pi * mp.atan((3 + mp.sqrt(5)) / 2)
        self.nu = 1 - 2 * mp.sqrt(5) / 3
        self.c_mu = (self.sigma * (self.sigma - 2) / 3
                     * mp.sqrt(2 / (1 - mp.cos(self.sigma * mp.pi))))
        self.mu = self.c_mu * mp.exp(1j * self.sigma * mp.pi / 2)
        a = self.nu * (2 - self.sigma) / self.c_mu
        b = (2 - self.sigma) / self.sigma
        self.kappa = mp.findroot(lambda y: -y * y + a * y ** self.sigma + b,
                                 mp.mpf("2.21421906860446"))
        self.tau = -2 * (self.kappa ** 2 + 1) * self.c_mu / self.kappa ** self.sigma
        self.cv = 225 * mp.sqrt(5) * self.tau / 64

    def p(self, z):
        return z * (1 + 2 * mp.sqrt(5) / 3 * z + z * z) ** 2

    def psi11(self, z):
        return 1j * self.kappa * (z - 1) / (z + 1)

    def psi12(self, z):
        zs = mp.exp(-self.sigma * mp.log(z))
        return self.mu * zs * (z * z / (2 - self.sigma) + 1 / self.sigma) + self.nu

    def q(self, z):
        return -self.tau / self.p(self.psi12(self.psi11(z)))

    def q_d1(self, z):
        h = mp.mpf(10) ** -25
        return (self.q(z + h) - self.q(z - h)) / (2 * h)


_ORACLE = None


def oracle() -> Oracle:
    global _ORACLE
    if _ORACLE is None:
        _ORACLE = Oracle()
    return _ORACLE


def in_ri(value, ri) -> bool:
    """Whether the高-precision value lies in the RealInterval."""
    return mp.mpf(ri.lo) <= value <= mp.mpf(ri.hi)


def in_cb(value, cb) -> bool:
    value = mp.mpc(value)
    return (mp.mpf(cb.re_lo) <= value.real <= mp.mpf(cb.re_hi)
            and mp.mpf(cb.im_lo) <= value.imag <= mp.mpf(cb.im_hi))
