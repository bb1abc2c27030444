"""Exact rational kernels Q, Q~, P_B and the Addison weight.

The public functions return :class:`~fractions.Fraction` values and check
the identities that tie the different closed forms together.  The
``*_ratio`` helpers return an unreduced ``(numerator, denominator)`` pair of
plain integers; the summation engines use those in their inner loops.
"""
from __future__ import annotations

from fractions import Fraction


class KernelIdentityError(ArithmeticError):
    """Two closed forms of the same kernel disagreed."""


def _check(k: int, B: int) -> None:
    if k < 1:
        raise ValueError("k must be >= 1")
    if B < 2:
        raise ValueError("base must be >= 2")


def kernel_Q(k: int, B: int) -> Fraction:
    """Q(k, B) = sum_{m=1}^{B-1} m / (Bk (Bk + m))."""
    _check(k, B)
    n = B * k
    return sum((Fraction(m, n * (n + m)) for m in range(1, B)), Fraction(0))


def kernel_Qtilde(k: int, B: int) -> Fraction:
    _check(k, B)
    split = Fraction(B - 1, B * k * (k + 1)) - kernel_Q(k, B)
    n = B * k
    direct = sum((Fraction(B - m, (n + B) * (n + m)) for m in range(1, B)), Fraction(0))
    if split != direct:
        raise KernelIdentityError(f"Q~({k},{B}): {split} != {direct}")
    return direct


def kernel_P(k: int, B: int) -> Fraction:
    """P_B(k) = (Bk+1)...(Bk+B-1) * sum m (B-m) / (Bk+m); always an integer."""
    _check(k, B)
    n = B * k
    prod = 1
    for m in range(1, B):
        prod *= n + m
    value = prod * sum((Fraction(m * (B - m), n + m) for m in range(1, B)), Fraction(0))
    if value.denominator != 1:
        raise KernelIdentityError(f"P_{B}({k}) = {value} is not an integer")
    return value


def addison_weight(k: int, B: int) -> Fraction:
    """P_B(k) / (Bk (Bk+1) ... (Bk+B))."""
    _check(k, B)
    n = B * k
    den = n
    for m in range(1, B + 1):
        den *= n + m
    w = kernel_P(k, B) / den
    if w != kernel_Q(k, B) - Fraction(B - 1, 2 * B * k * (k + 1)):
        raise KernelIdentityError(f"Addison weight identity fails at k={k}, B={B}")
    return w


# -- integer fast paths ---------------------------------------------------

def _products_except(n: int, B: int) -> tuple[int, list[int]]:
    """Full product (n+1)...(n+B-1) and the products omitting each factor."""
    factors = [n + m for m in range(1, B)]
    prefix = [1]
    for f in factors:
        prefix.append(prefix[-1] * f)
    suffix = [1] * (len(factors) + 1)
    for i in range(len(factors) - 1, -1, -1):
        suffix[i] = suffix[i + 1] * factors[i]
    return prefix[-1], [prefix[i] * suffix[i + 1] for i in range(len(factors))]


def q_ratio(k: int, B: int) -> tuple[int, int]:
    n = B * k
    if B == 2:
        return 1, n * (n + 1)
    full, omit = _products_except(n, B)
    return sum(m * omit[m - 1] for m in range(1, B)), n * full


def qtilde_ratio(k: int, B: int) -> tuple[int, int]:
    n = B * k
    if B == 2:
        return 1, (n + 2) * (n + 1)
    full, omit = _products_except(n, B)
    return sum((B - m) * omit[m - 1] for m in range(1, B)), (n + B) * full


def addison_ratio(k: int, B: int) -> tuple[int, int]:
    n = B * k
    if B == 2:
        return 1, n * (n + 1) * (n + 2)
    full, omit = _products_except(n, B)
    p = sum(m * (B - m) * omit[m - 1] for m in range(1, B))
    return p, n * full * (n + B)


def epsilon_ratio(k: int, B: int) -> tuple[int, int]:
    return (B - 1 if k % B == 0 else -1), k


RATIOS = {
    "vacca": q_ratio,
    "complement": qtilde_ratio,
    "addison": addison_ratio,
}
