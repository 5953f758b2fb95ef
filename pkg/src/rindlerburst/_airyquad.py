"""Internal quadrature engine for radial integrals against squared / mixed
Airy-type Bessel kernels.

The emission and dipole-dipole kernels of an accelerated atom reduce, through
the uniform large-order asymptotics of specfun, to linear combinations of the
Airy products

    kind 'ai2' :  E1 = Ai^2,  E2 = Ai Ai',          E3 = Ai'^2
    kind 'aibi':  F1 = Ai Bi, F2 = (Ai'Bi + AiBi')/2, F3 = Ai'Bi'

evaluated at w = nu^(2/3) zeta(k), which oscillates ~nu times over the
integration range.  Both triplets obey the same first-order closure

    T1' = 2 T2,   T2' = w T1 + T3,   T3' = 2 w T2,

so any integral of (polynomial in w) x (triplet member) has an exact
antiderivative a(w) T1 + b(w) T2 + c(w) T3 with polynomial a, b, c.  Panels fit
the smooth cofactor by Chebyshev interpolation in a local variable and then
integrate exactly against the triplet ("Filon-Airy" panels), which makes the
cost independent of nu.  In the deeply oscillatory region (w below -W_AIRY)
the products are split analytically into mean and oscillatory parts; the mean
is integrated by ordinary Gauss panels and the oscillation contributes only
stationary-endpoint and junction terms.
"""
from __future__ import annotations

import math

import numpy as np
from scipy.linalg import lstsq as _sp_lstsq
from scipy.special import airy, airye

W_AIRY = 280.0          # |w| boundary of the exact Filon-Airy zone
W_DEATH = 26.0          # Ai^2 tail cutoff (suppression ~ e^{-2*(2/3)*26^{3/2}})
FILON_DEG = 10          # Chebyshev fit degree per panel

AI2, AIBI = "ai2", "aibi"

# ------------------------------------------------------------------ products
def airy_triplet(w, kind):
    w = np.asarray(w, dtype=float)
    if kind == AI2:
        ai, aip, _, _ = airy(w)
        return ai * ai, ai * aip, aip * aip
    # mixed products: use scaled functions on the positive side (Ai underflows,
    # Bi overflows, the product is O(w^{-1/2}))
    out1 = np.empty_like(w)
    out2 = np.empty_like(w)
    out3 = np.empty_like(w)
    neg = w <= 20.0
    if neg.any():
        ai, aip, bi, bip = airy(w[neg])
        out1[neg] = ai * bi
        out2[neg] = 0.5 * (aip * bi + ai * bip)
        out3[neg] = aip * bip
    pos = ~neg
    if pos.any():
        ai, aip, bi, bip = airye(w[pos])   # Ai*e^{+xi}, Bi*e^{-xi}
        out1[pos] = ai * bi
        out2[pos] = 0.5 * (aip * bi + ai * bip)
        out3[pos] = aip * bip
    return out1, out2, out3


# ------------------------------------------------------- Filon-Airy moments
_CHEB_NODES = np.cos(np.pi * np.arange(FILON_DEG + 1) / FILON_DEG)  # Lobatto, degree+1 pts
_CHEB_VAND = np.polynomial.chebyshev.chebvander(_CHEB_NODES, FILON_DEG)
_CHEB_FIT = np.linalg.inv(_CHEB_VAND)           # cheb coeffs = FIT @ fvals
_C2P = np.zeros((FILON_DEG + 1, FILON_DEG + 1))
for _j in range(FILON_DEG + 1):
    _e = np.zeros(FILON_DEG + 1)
    _e[_j] = 1.0
    _p = np.polynomial.chebyshev.cheb2poly(_e)
    _C2P[: len(_p), _j] = _p
_MONO_FIT = _C2P @ _CHEB_FIT                    # monomial coeffs (in t) = MONO_FIT @ fvals


_MOMENT_CACHE = {}


def panel_moments(m0, h, triplet_ends, cache_key=None):
    """Moments M[i, m] = int_{-1}^{1} t^m T_i(m0 + h t) h dt for m <= FILON_DEG.

    Found by solving for the antiderivative a(t) T1 + b(t) T2 + c(t) T3 in local
    coordinates (w = m0 + h t), where the closure gives the linear system
        a' + h b w = r1,  2 h a + b' + 2 h c w = r2,  h b + c' = r3.
    triplet_ends: array (3, 2) of T_i values at t = -1, +1.
    """
    if cache_key is not None:
        hit = _MOMENT_CACHE.get((round(m0, 9), round(h, 9), cache_key))
        if hit is not None:
            return hit
    D = FILON_DEG + 4
    n = 3 * D
    A = np.zeros((3 * (D + 1), n))
    # derivative blocks
    for j in range(1, D):
        A[j - 1, j] += j                       # a' in eq1
        A[D + 1 + j - 1, D + j] += j           # b' in eq2
        A[2 * (D + 1) + j - 1, 2 * D + j] += j  # c' in eq3
    # multiplication by h*w = h*m0 + h^2 t
    for j in range(D):
        A[j, D + j] += h * m0                  # h b w -> eq1
        if j + 1 <= D:
            A[j + 1, D + j] += h * h
        A[D + 1 + j, j] += 2 * h               # 2 h a -> eq2
        A[D + 1 + j, 2 * D + j] += 2 * h * m0  # 2 h c w -> eq2
        A[D + 1 + j + 1, 2 * D + j] += 2 * h * h
        A[2 * (D + 1) + j, D + j] += h         # h b -> eq3
    rhs = np.zeros((3 * (D + 1), 3 * (FILON_DEG + 1)))
    for i in range(3):
        for m in range(FILON_DEG + 1):
            rhs[i * (D + 1) + m, i * (FILON_DEG + 1) + m] = h
    # row equilibration improves the lstsq conditioning for |m0| >> 1 panels
    scale = np.maximum(np.abs(A).max(axis=1), 1e-30)
    sol, *_ = _sp_lstsq(A / scale[:, None], rhs / scale[:, None],
                        lapack_driver="gelsy", check_finite=False)
    tp = np.ones(D)
    tm = np.array([(-1.0) ** j for j in range(D)])
    a = sol[:D]
    b = sol[D:2 * D]
    c = sol[2 * D:]
    Tm, Tp = triplet_ends[:, 0], triplet_ends[:, 1]
    Fp = (tp @ a) * Tp[0] + (tp @ b) * Tp[1] + (tp @ c) * Tp[2]
    Fm = (tm @ a) * Tm[0] + (tm @ b) * Tm[1] + (tm @ c) * Tm[2]
    out = (Fp - Fm).reshape(3, FILON_DEG + 1)
    if cache_key is not None:
        if len(_MOMENT_CACHE) > 40000:
            _MOMENT_CACHE.clear()
        _MOMENT_CACHE[(round(m0, 9), round(h, 9), cache_key)] = out
    return out


def filon_panel_integrate(m0, h, fvals, triplet_nodes, triplet_ends):
    """Integral over w in [m0-h, m0+h] of sum_i f_i(w) T_i(w), with f_i sampled at
    the Lobatto nodes (fvals: (3, n_nodes))."""
    mom = panel_moments(m0, h, triplet_ends)
    total = 0.0
    for i in range(3):
        mono = _MONO_FIT @ fvals[i]
        total += float(mono @ mom[i])
    return total


# ------------------------------------------- oscillatory asymptotics (w -> -inf)
_UCO = [1.0]
_VCO = [1.0]
for _k in range(1, 8):
    _UCO.append(_UCO[-1] * (6 * _k - 5) * (6 * _k - 3) * (6 * _k - 1) / ((2 * _k - 1) * 216.0 * _k))
    _VCO.append((6 * _k + 1) / (1.0 - 6 * _k) * _UCO[_k])


def _pq_series(xi):
    # Ai(-y)  = y^{-1/4}/sqrt(pi) Re[p e^{i theta}], p = U1 - i U2
    # Ai'(-y) = y^{+1/4}/sqrt(pi) Re[q e^{i theta}], q = -V2 - i V1
    # Bi, Bi' carry amplitudes i p, i q (theta = xi - pi/4); DLMF 9.7.9-9.7.12
    ix = 1.0 / xi
    U1 = 1.0 - _UCO[2] * ix * ix + _UCO[4] * ix ** 4 - _UCO[6] * ix ** 6
    U2 = _UCO[1] * ix - _UCO[3] * ix ** 3 + _UCO[5] * ix ** 5
    V1 = 1.0 - _VCO[2] * ix * ix + _VCO[4] * ix ** 4 - _VCO[6] * ix ** 6
    V2 = _VCO[1] * ix - _VCO[3] * ix ** 3 + _VCO[5] * ix ** 5
    return U1 - 1j * U2, -V2 - 1j * V1


def deep_mean_osc(y, kind):
    """Mean values and complex oscillatory amplitudes of the triplet at w = -y:

        T_i(-y) = mean_i(y) + Re[ osc_i(y) * e^{2 i xi} ],   xi = (2/3) y^{3/2}.

    Built from Ai(-y) = y^{-1/4}/sqrt(pi) Re[p e^{i theta}], Ai'(-y) =
    y^{1/4}/sqrt(pi) Re[q e^{i theta}], Bi = Re[i p ...], Bi' = Re[i q ...],
    theta = xi - pi/4 (so e^{2 i theta} = -i e^{2 i xi}).
    """
    y = np.asarray(y, dtype=float)
    xi = (2.0 / 3.0) * y ** 1.5
    p, q = _pq_series(xi)
    s1 = 1.0 / (2.0 * math.pi * np.sqrt(y))
    s2 = 1.0 / (2.0 * math.pi) * np.ones_like(y)
    s3 = np.sqrt(y) / (2.0 * math.pi)
    phase_fold = -1j  # e^{2 i theta} = -i e^{2 i xi}
    if kind == AI2:
        # Re[a]Re[b] = (Re[a conj(b)] + Re[a b]) / 2
        mean1 = s1 * (p * p.conjugate()).real
        mean2 = s2 * (q * p.conjugate()).real
        mean3 = s3 * (q * q.conjugate()).real
        osc1 = s1 * p * p * phase_fold
        osc2 = s2 * p * q * phase_fold
        osc3 = s3 * q * q * phase_fold
        return mean1, mean2, mean3, osc1, osc2, osc3, xi
    # mixed: Bi-type partner i p, i q; all means cancel except the Wronskian split,
    # which is symmetric-combination-free
    mean1 = s1 * ((p * (1j * p).conjugate()).real)
    mean2 = 0.5 * s2 * ((q * (1j * p).conjugate()).real + (p * (1j * q).conjugate()).real)
    mean3 = s3 * ((q * (1j * q).conjugate()).real)
    osc1 = s1 * (1j * p * p) * phase_fold
    osc2 = s2 * (1j * p * q) * phase_fold
    osc3 = s3 * (1j * q * q) * phase_fold
    return mean1, mean2, mean3, osc1, osc2, osc3, xi


def aibi_uv_means(w):
    """Smooth (non-oscillatory) values of the mixed triplet for large positive w,
    with the first ξ^{-2} correction: AiBi = (1 + (5/72)/xi^2)/(2 pi sqrt(w)),
    F2 = -1/(12 pi xi) - ..., Ai'Bi' = -sqrt(w)(1 - (7/72)/xi^2)/(2 pi)."""
    w = np.asarray(w, dtype=float)
    xi = (2.0 / 3.0) * w ** 1.5
    f1 = (1.0 + (5.0 / 72.0) / xi ** 2) / (2.0 * math.pi * np.sqrt(w))
    f2 = -1.0 / (12.0 * math.pi * xi)
    f3 = -np.sqrt(w) * (1.0 - (7.0 / 72.0) / xi ** 2) / (2.0 * math.pi)
    return f1, f2, f3
