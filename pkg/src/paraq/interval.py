"""Public interval surface: canonical names plus a few helpers the kernel
keeps out of its hot path."""

from .backend import kern

RealInterval = kern.RI
ComplexBox = kern.CB

KernelError = kern.KernelError
DomainViolation = kern.DomainViolation
DivisionByIntervalContainingZero = kern.DivisionByIntervalContainingZero
DivisionByBoxContainingZero = kern.DivisionByBoxContainingZero
BranchCutStraddle = kern.BranchCutStraddle
ArgBranchCutStraddle = kern.ArgBranchCutStraddle

PI = RealInterval(kern.PI_LO, kern.PI_HI)
TWO_PI = PI.mul_scalar(2.0)


def ri(lo, hi=None) -> "RealInterval":
    return RealInterval(lo, hi)


def point(x) -> "RealInterval":
    return RealInterval(x, x)


def box(re, im=0.0) -> "ComplexBox":
    return ComplexBox(re, im)


def cpoint(z) -> "ComplexBox":
    z = complex(z)
    return ComplexBox(z.real, z.imag)


def sqrt5() -> "RealInterval":
    return point(5.0).sqrt()


def from_decimal_window(value: float, decimals: int) -> "RealInterval":
    """Window of a printed approximation: `x =. 0.1234` means the digit
    string was truncated, i.e. |x| in (|v|, |v| + 10^-k) with v's sign."""
    step = 10.0 ** (-decimals)
    if value >= 0:
        return RealInterval(value, value + step)
    return RealInterval(value - step, value)
