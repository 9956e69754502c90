"""The one-variable S-transform and its multiplicativity.

S(mu)(z) = ((1 + z) / z) * psi^{<-1>}(z) where psi(z) = sum mu(X**k) z**k.
The compositional inverse is computed with sympy's ring series over QQ.
"""

import logging
from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_mul, rs_series_reversion
from sympy.polys.rings import ring

from app.errors import InvalidArgumentError, NotInvertibleError
from app.models.distribution import JointDistribution
from app.models.power_series import ZERO, NCSeries, SSeries
from app.tools.freeprob import from_r_series

logger = logging.getLogger(__name__)

_REVERSION_RING, _x, _y = ring("x, y", QQ)
_PRODUCT_RING, _t = ring("t", QQ)


def _to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def s_transform_1d(mu: JointDistribution) -> SSeries:
    """S-transform coefficients beta_0, ..., beta_{d-1} of a one-variable distribution.

    Args:
        mu: Distribution with max_degree d >= 2.

    Returns:
        The truncated S-series; moments through degree d fix exactly d coefficients.

    Raises:
        InvalidArgumentError: If mu is not one-dimensional or d < 2.
        NotInvertibleError: If the first moment vanishes.
    """
    if mu.n != 1:
        raise InvalidArgumentError(f"S-transform needs a one-variable distribution, got n={mu.n}")
    d = mu.max_degree
    if d < 2:
        raise InvalidArgumentError(f"S-transform needs max_degree >= 2, got {d}")
    if not mu.moment((1,)):
        raise NotInvertibleError("first moment is zero, the moment series has no inverse")

    psi = _REVERSION_RING.from_dict({
        (k, 0): _to_qq(mu.moment((1,) * k))
        for k in range(1, d + 1)
        if mu.moment((1,) * k)
    })
    chi = rs_series_reversion(psi, _x, d + 1, _y)
    inverse = [ZERO] * (d + 1)
    for monom, value in chi.items():
        inverse[monom[1]] = _to_fraction(value)
    # (1 + z)/z * sum_{k>=1} c_k z**k has coefficient c_{j+1} + c_j at z**j
    beta = tuple(inverse[j + 1] + inverse[j] for j in range(d))
    logger.debug(f"[s_transform_1d] degree {d}: beta = {[str(b) for b in beta]}")
    return SSeries(coefficients=beta)


def multiply_s_series(left: SSeries, right: SSeries) -> SSeries:
    """Cauchy product, truncated at the smaller precision."""
    precision = min(left.precision, right.precision)
    p1 = _PRODUCT_RING.from_dict({(j,): _to_qq(c) for j, c in enumerate(left.coefficients) if c})
    p2 = _PRODUCT_RING.from_dict({(j,): _to_qq(c) for j, c in enumerate(right.coefficients) if c})
    product = rs_mul(p1, p2, _t, precision)
    coefficients = [ZERO] * precision
    for monom, value in product.items():
        coefficients[monom[0]] = _to_fraction(value)
    return SSeries(coefficients=tuple(coefficients))


def f_transform(f: NCSeries) -> SSeries:
    """The map sending R(mu) to S(mu) for one-variable series.

    Turns the boxed star into the ordinary product of S-series.
    """
    if f.n != 1:
        raise InvalidArgumentError(f"f_transform needs a one-variable series, got n={f.n}")
    return s_transform_1d(from_r_series(f))
