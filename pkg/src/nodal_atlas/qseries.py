"""Truncated q-power series over exact rationals, the quasi-modular inputs
of the generating-function identity, and the recovery of the two unknown
series from the table of linear forms.

Channel decomposition.  Write t = D G_2.  Taking the logarithm of the
generating identity

    sum_r Z_r(d,k,s,x) t^r =
        (D G_2/q)^{chi(L)} B_1(q)^s B_2(q)^k / (Delta D^2 G_2 / q^2)^{chi(O)/2}

and using Z_r = P_r(a_1,...,a_r)/r! together with the Bell formal identity
turns the left side into sum_l a_l t^l / l!.  With
chi(L) = (d - k)/2 + chi(O) and chi(O) = (s + x)/12 (Riemann-Roch and
Noether, used silently by the identity), matching the coefficient of each
Chern number gives one scalar series identity per channel:

    d:  sum_l (-1)^{l-1} D_l t^l / l  =  1/2 log(D G_2/q)
    k:  sum_l (-1)^{l-1} E_l t^l / l  =  -1/2 log(D G_2/q) + log B_2
    s:  sum_l (-1)^{l-1} F_l t^l / l  =
            1/12 log(D G_2/q) - 1/24 log(Delta D^2 G_2/q^2) + log B_1
    x:  sum_l (-1)^{l-1} G_l t^l / l  =
            1/12 log(D G_2/q) - 1/24 log(Delta D^2 G_2/q^2)

The d and x channels involve only known quasi-modular data, so their
residuals vanishing is a genuine consistency check of the coefficient
table.  The k channel defines log B_2, so its residual vanishes by
construction.  The s channel defines log B_1 through the combination
F_l - G_l, so its residual equals the x-channel residual identically and
vanishes exactly when that one does.
"""

from __future__ import annotations

from fractions import Fraction

from .bell import bell_transform
from .exact import format_rational

DEFAULT_ORDER = 16
TABLE_ORDER = 15  # the coefficient table supplies rows 1..15

CHANNELS = ("d", "k", "s", "x")


class PowerSeries:
    """q-series c_0 + c_1 q + ... + c_T q^T with exact rational coefficients.

    Binary operations truncate to the smaller order of the two operands.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = cs
        self.order = order

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    def __getitem__(self, n):
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        t = min(self.order, other.order)
        return self.coeffs[: t + 1] == other.coeffs[: t + 1]

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def truncate(self, order):
        return PowerSeries(self.coeffs, min(order, self.order))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PowerSeries([other], self.order)
        t = min(self.order, other.order)
        return PowerSeries(
            [self.coeffs[n] + other.coeffs[n] for n in range(t + 1)], t
        )

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PowerSeries([other], self.order)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        t = min(self.order, other.order)
        out = [Fraction(0)] * (t + 1)
        for i, a in enumerate(self.coeffs[: t + 1]):
            if a == 0:
                continue
            for j in range(t + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries(out, t)

    __rmul__ = __mul__

    def shift_down(self, k):
        """Divide by q^k; the low-order coefficients must vanish.

        The truncation order drops by k since nothing is known past it.
        """
        if any(self.coeffs[i] != 0 for i in range(min(k, self.order + 1))):
            raise ValueError(f"series is not divisible by q^{k}")
        return PowerSeries(self.coeffs[k:], self.order - k)

    def to_list(self):
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self):
        shown = ", ".join(self.to_list()[: min(8, self.order + 1)])
        return f"PowerSeries([{shown}, ...] order={self.order})"


def series_mul(a, b):
    return a * b


def series_pow(s, r):
    if not isinstance(r, int) or r < 0:
        raise ValueError(f"series_pow: exponent must be a non-negative integer, got {r}")
    result = PowerSeries.one(s.order)
    base = s
    while r:
        if r & 1:
            result = result * base
        base = base * base
        r >>= 1
    return result


def series_exp(s):
    """exp of a series with zero constant term, by the standard recurrence."""
    if s[0] != 0:
        raise ValueError("series_exp requires constant term 0")
    t = s.order
    out = [Fraction(1)] + [Fraction(0)] * t
    for n in range(1, t + 1):
        out[n] = sum(Fraction(k) * s.coeffs[k] * out[n - k] for k in range(1, n + 1)) / n
    return PowerSeries(out, t)


def series_log(s):
    """log of a series with constant term 1."""
    if s[0] != 1:
        raise ValueError("series_log requires constant term 1")
    t = s.order
    out = [Fraction(0)] * (t + 1)
    for n in range(1, t + 1):
        acc = s.coeffs[n]
        for k in range(1, n):
            acc -= Fraction(k, n) * out[k] * s.coeffs[n - k]
        out[n] = acc
    return PowerSeries(out, t)


def _sigma(n):
    return sum(d for d in range(1, n + 1) if n % d == 0)


def eisenstein_g2(order=DEFAULT_ORDER):
    """-1/24 + sum sigma(n) q^n."""
    return PowerSeries(
        [Fraction(-1, 24)] + [_sigma(n) for n in range(1, order + 1)], order
    )


def discriminant(order=DEFAULT_ORDER):
    """q * prod_{m>0} (1 - q^m)^24, truncated; factors with m > order cannot
    contribute."""
    if order < 1:
        raise ValueError("discriminant needs order >= 1")
    prod = PowerSeries.one(order)
    for m in range(1, order + 1):
        factor = PowerSeries([1] + [0] * (m - 1) + [-1], order)
        prod = prod * series_pow(factor, 24)
    shifted = [Fraction(0)] + prod.coeffs[:order]
    return PowerSeries(shifted, order)


def d_operator(s):
    """q d/dq: multiplies the n-th coefficient by n."""
    return PowerSeries([n * c for n, c in enumerate(s.coeffs)], s.order)


def dg2(order=DEFAULT_ORDER):
    return d_operator(eisenstein_g2(order))


def dg2_power_coeff(r, n):
    """Coefficient of q^n in (D G_2)^r; zero for n < r."""
    if r < 1:
        raise ValueError(f"dg2_power_coeff: r must be >= 1, got {r}")
    if n < r:
        return Fraction(0)
    return series_pow(dg2(n), r)[n]


def _check_table(order, forms):
    if order > TABLE_ORDER:
        raise ValueError(
            f"truncation order {order} exceeds the coefficient table extent {TABLE_ORDER}"
        )
    if len(forms) < order:
        raise ValueError(f"need {order} table rows, got {len(forms)}")


def _channel_sum(order, coeffs):
    """sum_{l>=1} (-1)^{l-1} coeffs[l-1] * (D G_2)^l / l through q^order."""
    t = dg2(order)
    acc = PowerSeries.zero(order)
    t_pow = PowerSeries.one(order)
    for l in range(1, order + 1):
        t_pow = t_pow * t
        acc = acc + t_pow * Fraction((-1) ** (l - 1) * coeffs[l - 1], l)
    return acc


def _log_dg2_over_q(order):
    return series_log(dg2(order + 1).shift_down(1))


def _log_disc_d2g2_over_q2(order):
    prod = discriminant(order + 2) * d_operator(dg2(order + 2))
    return series_log(prod.shift_down(2))


def recover_log_b1(order, forms):
    """log B_1 through q^order: c_n = sum_r y_r(n) (-1)^{r-1} (F_r - G_r)/r,
    with y_r(n) the q^n coefficient of (D G_2)^r."""
    _check_table(order, forms)
    t_pows = []
    t = dg2(order)
    acc = PowerSeries.one(order)
    for _ in range(order):
        acc = acc * t
        t_pows.append(acc)
    out = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        out[n] = sum(
            t_pows[r - 1][n] * Fraction((-1) ** (r - 1) * (forms[r - 1].F - forms[r - 1].G), r)
            for r in range(1, n + 1)
        )
    return PowerSeries(out, order)


def recover_log_b1_direct(order, forms):
    """Same series by direct substitution of t = D G_2 into
    sum_l (-1)^{l-1} (F_l - G_l) t^l / l; an independent code path."""
    _check_table(order, forms)
    return _channel_sum(order, [f.F - f.G for f in forms])


def recover_b1(order, forms):
    """B_1 itself: the Bell transform (series exp) of log B_1; b_0 = 1."""
    log_b1 = recover_log_b1(order, forms)
    return PowerSeries(bell_transform(log_b1.coeffs[1 : order + 1]), order)


def recover_log_b2(order, forms):
    """log B_2 through q^order: 1/2 log(D G_2/q) plus the k-channel sum."""
    _check_table(order, forms)
    return _channel_sum(order, [f.E for f in forms]) + _log_dg2_over_q(order) * Fraction(1, 2)


def recover_b2(order, forms):
    log_b2 = recover_log_b2(order, forms)
    return PowerSeries(bell_transform(log_b2.coeffs[1 : order + 1]), order)


def gyz_channel_residual(channel, order, forms):
    """Residual of one Chern-number channel of the log generating identity.

    The d and x channels must vanish identically if the coefficient table is
    consistent with the quasi-modular data; the k channel vanishes by
    construction (it defines log B_2), and the s channel cancels down to the
    x-channel residual because log B_1 is built from F_l - G_l.
    """
    _check_table(order, forms)
    if channel not in CHANNELS:
        raise ValueError(f"unknown channel {channel!r}; expected one of {CHANNELS}")
    log_dg2 = _log_dg2_over_q(order)
    if channel == "d":
        return _channel_sum(order, [f.D for f in forms]) - log_dg2 * Fraction(1, 2)
    if channel == "x":
        return (
            _channel_sum(order, [f.G for f in forms])
            - log_dg2 * Fraction(1, 12)
            + _log_disc_d2g2_over_q2(order) * Fraction(1, 24)
        )
    if channel == "s":
        return (
            _channel_sum(order, [f.F for f in forms])
            - log_dg2 * Fraction(1, 12)
            + _log_disc_d2g2_over_q2(order) * Fraction(1, 24)
            - recover_log_b1(order, forms)
        )
    # k channel
    return (
        _channel_sum(order, [f.E for f in forms])
        + log_dg2 * Fraction(1, 2)
        - recover_log_b2(order, forms)
    )
