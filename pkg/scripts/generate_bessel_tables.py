#!/usr/bin/env python3
"""Regenerate src/rindlerburst/_uniform_tables.py from scratch.

Derivation chain for the uniform (Airy-type) large-order expansion of the scaled
modified Bessel kernels of imaginary order,

    Kt(nu, nu z) = e^{pi nu/2} K_{i nu}(nu z)
                 ~ pi sqrt(2) nu^{-1/3} (zeta/(z^2-1))^{1/4}
                   [ Ai(nu^{2/3} zeta) Sum_k A_k(zeta) nu^{-2k}
                     + nu^{-4/3} Ai'(nu^{2/3} zeta) Sum_k B_k(zeta) nu^{-2k} ],

with zeta(z) the Liouville turning-point map of w'' = (nu^2 f + g) w,
f = (z^2-1)/z^2, g = -1/(4 z^2).  Steps:

1. Debye coefficients w_k(tau), tau = (z^2-1)^{-1/2}, on the monotone side via the
   standard LG recursion  w_{k+1}' = [(P w_k)'' - g P w_k] / (2 sqrt(f) P),
   P = f^{-1/4}, integrated from tau = 0 (z = infinity).
2. A_k, B_k by matching the uniform form against the Debye series using the
   Ai / Ai' asymptotic constants (DLMF 9.7.2).
3. Taylor series of A_k, B_k and of the map zeta about the turning point, where
   the closed forms suffer catastrophic cancellation.

Everything is validated against mpmath in tests/test_specfun.py; this script
only needs to run when the expansion order changes.  Runtime: a few minutes.
"""
import json
import os

import mpmath as mp
import sympy as sp

NS = 5          # number of A_k / B_k pairs (k = 0..4)
NDEBYE = 2 * NS  # Debye coefficients needed: w_0..w_{2 NS - 1}
NY = 44         # power-series order in y (turning-point expansions)

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, os.pardir, "src", "rindlerburst", "_uniform_tables.py")


# ----------------------------------------------------------------- step 1
def debye_coefficients():
    z = sp.symbols("z", positive=True)
    tau = sp.symbols("tau", positive=True)
    f = (z**2 - 1) / z**2
    g = -1 / (4 * z**2)
    Sp = sp.sqrt(z**2 - 1) / z
    P = f ** sp.Rational(-1, 4)
    zt = sp.sqrt(1 + tau**2) / tau
    dzdtau = sp.diff(zt, tau)
    tau_of_z = 1 / sp.sqrt(z**2 - 1)

    w_z = [sp.Integer(1)]
    w_tau = [sp.Integer(1)]
    for k in range(NDEBYE - 1):
        expr = ((P * w_z[k]).diff(z, 2) - g * P * w_z[k]) / (2 * Sp * P)
        integrand = sp.simplify(expr.subs(z, zt) * dzdtau)
        wk1 = sp.expand(sp.integrate(integrand, (tau, 0, tau)))
        w_tau.append(wk1)
        w_z.append(sp.simplify(wk1.subs(tau, tau_of_z)))
        print(f"  w_{k + 1} done")
    polys = []
    for k, wkt in enumerate(w_tau):
        if k == 0:
            polys.append({0: sp.Integer(1)})
            continue
        p = sp.Poly(sp.expand(wkt), tau)
        polys.append({m[0]: c for m, c in zip(p.monoms(), p.coeffs())})
    return polys


# ----------------------------------------------------------------- step 2
def airy_constants(n):
    u = [sp.Integer(1)]
    for k in range(1, n + 1):
        u.append(u[-1] * sp.Rational((6 * k - 5) * (6 * k - 3) * (6 * k - 1),
                                     (2 * k - 1) * 216 * k))
    v = [sp.Integer(1)] + [sp.Rational(6 * k + 1, 1 - 6 * k) * u[k]
                           for k in range(1, n + 1)]
    return u, v


def uniform_coefficients(debye):
    tau, h = sp.symbols("tau h", positive=True)
    e = sp.symbols("e")  # 1/nu
    NORD = 2 * NS
    u, v = airy_constants(NORD + 1)
    xi = sp.Rational(2, 3) * h**3

    def wpoly(k):
        return sum(c * tau**m for m, c in debye[k].items())

    dser = sum(wpoly(k) * e**k for k in range(min(len(debye), NORD + 1)))
    aser = sum((-1)**m * u[m] * xi**(-m) * e**m for m in range(NORD + 1))
    bser = sum((-1)**m * v[m] * xi**(-m) * e**m for m in range(NORD + 1))

    Asym = [sp.Symbol(f"A{k}") for k in range(NS)]
    Bsym = [sp.Symbol(f"B{k}") for k in range(NS)]
    AS = sum(Asym[k] * e**(2 * k) for k in range(NS))
    BS = sum(Bsym[k] * e**(2 * k) for k in range(NS))
    expr = sp.expand(aser * AS - h * e * bser * BS - dser)

    sols = {}
    for order in range(NORD):
        co = expr.coeff(e, order).subs(sols)
        unknowns = [s for s in (Asym + Bsym) if co.has(s)]
        if not unknowns:
            assert sp.simplify(co) == 0
            continue
        s = unknowns[0]
        sols[s] = sp.expand(sp.simplify(sp.solve(sp.Eq(co, 0), s)[0]))
        print(f"  {s} done")
    return {str(s): val for s, val in sols.items()}


def monomial_table(expr):
    """[(coeff, tau_pow, h_pow)] with h_pow possibly negative (h = zeta^{1/2})."""
    tau, h = sp.symbols("tau h", positive=True)
    rows = []
    for t in sp.Add.make_args(sp.expand(expr)):
        c, rest = t.as_coeff_Mul()
        powers = rest.as_powers_dict() if rest != 1 else {}
        a = int(powers.get(tau, 0))
        b = int(powers.get(h, 0))
        extra = [k for k in powers if k not in (tau, h) and not k.is_Number]
        assert not extra, extra
        rows.append((c, a, b))
    rows.sort(key=lambda r: (r[2], r[1]))
    return rows


# ----------------------------------------------------------------- step 3
def _series_tools():
    N = NY

    def mul(a, b):
        out = [mp.mpf(0)] * N
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(N - i):
                if b[j] != 0:
                    out[i + j] += ai * b[j]
        return out

    def add(a, b):
        return [x + y for x, y in zip(a, b)]

    def scal(c, a):
        return [c * x for x in a]

    def fracpow(a, p):
        a0 = a[0]
        s = [x / a0 for x in a]
        s[0] = mp.mpf(0)
        l = [mp.mpf(0)] * N
        term = s[:]
        k = 1
        while k < N and any(x != 0 for x in term):
            l = add(l, scal(mp.mpf((-1) ** (k + 1)) / k, term))
            term = mul(term, s)
            k += 1
        l = scal(p, l)
        out = [mp.mpf(0)] * N
        out[0] = mp.mpf(1)
        term = out[:]
        k = 1
        while k < N:
            term = scal(mp.mpf(1) / k, mul(term, l))
            if all(abs(x) < mp.mpf(10) ** -70 for x in term):
                break
            out = add(out, term)
            k += 1
        return scal(a0 ** p, out)

    def integ(a):
        out = [mp.mpf(0)] * N
        for i in range(N - 1):
            out[i + 1] = a[i] / (i + 1)
        return out

    def compose(a, b):
        assert b[0] == 0
        out = [mp.mpf(0)] * N
        out[0] = a[0]
        bp = [mp.mpf(0)] * N
        bp[0] = mp.mpf(1)
        for k in range(1, N):
            bp = mul(bp, b)
            if a[k] != 0:
                out = add(out, scal(a[k], bp))
        return out

    return mul, add, scal, fracpow, integ, compose


def taylor_tables(uniform):
    mp.mp.dps = 60
    N = NY
    mul, add, scal, fracpow, integ, compose = _series_tools()
    one = [mp.mpf(0)] * N
    one[0] = mp.mpf(1)

    def ypow(k):
        v = [mp.mpf(0)] * N
        v[k] = mp.mpf(1)
        return v

    # z = 1 + y^2
    two_eps = add(scal(2, one), ypow(2))                 # 2 + y^2
    onep = add(one, ypow(2))                             # 1 + y^2
    dacos = mul(fracpow(onep, mp.mpf(-1)), fracpow(two_eps, mp.mpf("-0.5")))
    acos_ser = integ(scal(2, dacos))                     # acos(1/z)
    xi = add(mul(ypow(1), fracpow(two_eps, mp.mpf("0.5"))), scal(-1, acos_ser))
    lead = 2 * mp.sqrt(2) / 3
    ratio = [mp.mpf(0)] * N
    for i in range(3, N):
        ratio[i - 3] = xi[i] / lead                      # xi / (lead y^3)
    zeta = scal(mp.mpf(2) ** (mp.mpf(1) / 3), mul(ypow(2), fracpow(ratio, mp.mpf(2) / 3)))
    Tser = fracpow(two_eps, mp.mpf("-0.5"))              # tau = y^{-1} Tser

    tau_s, h_s = sp.symbols("tau h", positive=True)
    series_u = {}
    for name, expr in uniform.items():
        acc = {}
        for c, a, b in monomial_table(expr):
            acc[(a, b)] = acc.get((a, b), mp.mpf(0)) + mp.mpf(str(sp.N(c, 50)))
        NEG = 40
        buf = [mp.mpf(0)] * (N + NEG)
        for (a, b), c in acc.items():
            ser = mul(fracpow(Tser, mp.mpf(a)) if a else one,
                      fracpow(ratio, mp.mpf(b) / 3) if b else one)
            ser = scal(c * mp.mpf(2) ** (mp.mpf(b) / 6), ser)
            off = b - a
            for i, x in enumerate(ser):
                idx = i + off + NEG
                if 0 <= idx < N + NEG:
                    buf[idx] += x
        for i in range(NEG):
            assert abs(buf[i]) < mp.mpf(10) ** -22, (name, i - NEG, buf[i])
        ser_y = buf[NEG:]
        for i in range(1, N, 2):
            assert abs(ser_y[i]) < mp.mpf(10) ** -22, (name, i)
        su = [ser_y[2 * i] for i in range(N // 2)]
        series_u[name] = su + [mp.mpf(0)] * (N - len(su))

    zeta_u = [zeta[2 * i] for i in range(N // 2)] + [mp.mpf(0)] * (N - N // 2)
    # invert zeta(u): U(Z) with zeta_u(U(Z)) = Z
    U = [mp.mpf(0)] * N
    U[1] = 1 / zeta_u[1]
    dzu = [(i + 1) * zeta_u[i + 1] if i + 1 < N else mp.mpf(0) for i in range(N)]
    for _ in range(10):
        F = compose(zeta_u, U)
        F[1] -= 1
        corr = mul(F, fracpow(compose(dzu, U), mp.mpf(-1)))
        U = [a - b for a, b in zip(U, corr)]
    F = compose(zeta_u, U)
    assert max(abs(F[i] - (1 if i == 1 else 0)) for i in range(16)) < mp.mpf(10) ** -40

    taylor = {}
    for name, su in series_u.items():
        comp = compose(su, U)
        taylor[name] = [float(c) for c in comp[:14]]
    zeta_w = [float(c) for c in zeta_u[:20]]
    z_of_zeta = [float(c) for c in U[:20]]
    return taylor, zeta_w, z_of_zeta


def main():
    print("step 1: Debye recursion")
    debye = debye_coefficients()
    print("step 2: Airy matching")
    uniform = uniform_coefficients(debye)
    print("step 3: turning-point Taylor series")
    taylor, zeta_w, z_of_zeta = taylor_tables(uniform)

    mono = {name: [(float(sp.N(c, 30)), a, b) for c, a, b in monomial_table(expr)]
            for name, expr in uniform.items()}
    debye_out = [{int(m): str(c) for m, c in d.items()} for d in debye]

    with open(OUT, "w") as fh:
        fh.write('"""Generated by scripts/generate_bessel_tables.py -- do not edit.\n\n'
                 "Coefficient tables for the uniform Airy-type expansion of the scaled\n"
                 "imaginary-order modified Bessel kernels (see specfun.py).\n"
                 '"""\n\n')
        fh.write("# Debye coefficients w_k as {tau_power: rational_string}\n")
        fh.write(f"DEBYE_W = {json.dumps(debye_out)}\n\n")
        fh.write("# A_k/B_k closed forms as [(coeff, tau_power, h_power)], h = zeta^(1/2)\n")
        fh.write("AB_MONOMIALS = {\n")
        for name in sorted(mono):
            fh.write(f"    {name!r}: {mono[name]!r},\n")
        fh.write("}\n\n")
        fh.write("# Taylor coefficients of A_k/B_k about zeta = 0\n")
        fh.write("AB_TAYLOR = {\n")
        for name in sorted(taylor):
            fh.write(f"    {name!r}: {taylor[name]!r},\n")
        fh.write("}\n\n")
        fh.write("# zeta(z) Taylor coefficients in w = z - 1 (zeta = sum c_n w^n)\n")
        fh.write(f"ZETA_OF_W = {zeta_w!r}\n\n")
        fh.write("# inverse map: z - 1 = sum c_n zeta^n\n")
        fh.write(f"W_OF_ZETA = {z_of_zeta!r}\n")
    print(f"wrote {os.path.normpath(OUT)}")


if __name__ == "__main__":
    main()
