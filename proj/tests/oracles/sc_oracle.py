"""High-precision reference values for the triangle map tests.

Integrates k / eta along explicit paths with mpmath tanh-sinh quadrature at
40 digits. The sheet-0 branch is xi^(4/5) (a - xi)^(3/10) (b - xi)^(9/10)
with principal powers, boundary values taken from the upper half-plane.
"""
import mpmath as mp

mp.mp.dps = 40
a = 2 * mp.cos(2 * mp.pi / 5)
b = 2 * mp.cos(mp.pi / 5)


def eta0(z):
    z = mp.mpc(z)
    w1 = z
    w2 = a - z
    w3 = b - z
    # upper-side limits on the real axis
    if mp.im(z) == 0:
        w1 = mp.mpc(mp.re(w1), mp.mpf('1e-60') * 0)  # +0
        l1 = mp.log(abs(w1)) + 1j * (mp.pi if mp.re(w1) < 0 else 0)
        l2 = mp.log(abs(w2)) + 1j * (-mp.pi if mp.re(w2) < 0 else 0)
        l3 = mp.log(abs(w3)) + 1j * (-mp.pi if mp.re(w3) < 0 else 0)
    else:
        l1, l2, l3 = mp.log(w1), mp.log(w2), mp.log(w3)
    return mp.exp(mp.mpf(8) / 10 * l1 + mp.mpf(3) / 10 * l2 + mp.mpf(9) / 10 * l3)


SING = {0: mp.mpf(-8) / 10, 1: mp.mpf(-3) / 10, 2: mp.mpf(-9) / 10}


def _sing_index(z):
    for i, s in enumerate((mp.mpf(0), a, b)):
        if abs(mp.mpc(z) - s) < mp.mpf('1e-30'):
            return i
    return None


def _eta_near(i, w):
    """eta0 at z = s_i + w, with the singular factor built from w directly."""
    s = (mp.mpf(0), a, b)[i]
    z = s + w
    factors = [z, a - z, b - z]
    factors[i] = w if i == 0 else -w
    logs = []
    for j, f in enumerate(factors):
        f = mp.mpc(f)
        if mp.im(f) == 0:
            sign = 1 if j == 0 else -1
            logs.append(mp.log(abs(f)) + 1j * (sign * mp.pi if mp.re(f) < 0 else 0))
        else:
            logs.append(mp.log(f))
    e = (mp.mpf(8) / 10, mp.mpf(3) / 10, mp.mpf(9) / 10)
    return mp.exp(sum(ei * li for ei, li in zip(e, logs)))


def _segment(p, q):
    """Integral of 1/eta over [p, q], desingularised at exact prevertex ends.

    A singular end s with integrand exponent alpha is removed by the
    substitution z = s + (q - s) t^(1/(1+alpha)).
    """
    p, q = mp.mpc(p), mp.mpc(q)
    ip, iq = _sing_index(p), _sing_index(q)
    if ip is not None and iq is not None:
        m = (p + q) / 2
        return _segment(p, m) + _segment(m, q)
    if iq is not None:
        return -_segment(q, p)
    if ip is None:
        return mp.quad(lambda t: (q - p) / eta0(p + (q - p) * t), [0, 1])
    pw = 1 / (1 + SING[ip])
    d = q - p

    def g(s):
        if s == 0:
            s = mp.mpf("1e-200")
        return d * pw * s ** (pw - 1) / _eta_near(ip, d * s ** pw)
    return mp.quad(g, [0, 1])


def integral(path):
    return sum(_segment(path[i], path[i + 1]) for i in range(len(path) - 1))


Fa = integral([0, a])
k = a / Fa
print("a        =", mp.nstr(a, 20))
print("b        =", mp.nstr(b, 20))
print("calF(a)  =", mp.nstr(Fa, 20))
print("k        =", mp.nstr(k, 20))
Fb = k * integral([0, a, b])
print("F_T(b)   =", mp.nstr(Fb, 20), " B =", mp.nstr(b * mp.exp(1j * mp.pi / 5), 20))
for xi, path in [(mp.mpc(0.3, 0.4), [0, mp.mpc(0.3, 0.4)]),
                 (mp.mpc(1.0, 1.0), [0, mp.mpc(1.0, 1.0)]),
                 (mp.mpc(-0.5, 0.2), [0, mp.mpc(-0.5, 0.2)]),
                 (mp.mpc(0.62, 0.01), [0, 1j, mp.mpc(0.62, 0.01)]),
                 (mp.mpc(2.0, 0.5), [0, 2j, mp.mpc(2.0, 0.5)])]:
    print("F_T(%s) =" % mp.nstr(xi, 6), mp.nstr(k * integral(path), 20))
print("F_T(-1)  =", mp.nstr(k * integral([0, -1]), 20))
print("F_T(0.3) =", mp.nstr(k * integral([0, 0.3]), 20))
print("F_T(1.2) =", mp.nstr(k * integral([0, a, 1.2]), 20))

if __name__ == "__main__":
    # path-independence cross-checks of the values above
    for xi in [mp.mpc(0.3, 0.4), mp.mpc(1.0, 1.0), mp.mpc(-0.5, 0.2), mp.mpc(0.62, 0.01), mp.mpc(2.0, 0.5)]:
        p1 = k * integral([0, 2j, xi])
        p2 = k * integral([0, a, xi])
        print("check", mp.nstr(xi, 4), mp.nstr(p1, 20), mp.nstr(abs(p1 - p2), 3))
