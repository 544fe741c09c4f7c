"""Independent oracle: brute-force subset enumeration with Python Fractions.

Used to freeze expected values into the C++ tests. Shares no code with the
library.
"""
from fractions import Fraction as F
from itertools import combinations
from math import comb, prod


def sigma(x, j):
    n = len(x)
    if j < 0 or j > n:
        return F(0)
    return sum((prod(c) for c in combinations(x, j)), F(0))


def E(x, j):
    n = len(x)
    if j < 0 or j > n:
        return F(0)
    return sigma(x, j) / comb(n, j)


def gen_nm(x, a, k):
    return (a * E(x, k) + E(x, k + 1)) ** 2 - (a * E(x, k - 1) + E(x, k)) * (
        a * E(x, k + 1) + E(x, k + 2))


def combo(x, coeffs):
    s = lambda off: sum((c * E(x, i + 1 + off) for i, c in enumerate(coeffs)), F(0))
    return s(0) ** 2 - s(-1) * s(1)


def quant(x, a, k, th):
    s = lambda j: sigma(x, j)
    return (1 - th) * (a * s(k) + s(k + 1)) ** 2 - (a * s(k - 1) + s(k)) * (
        a * s(k + 1) + s(k + 2))


def liu_ren(x, a, k):
    s = lambda j: sigma(x, j)
    return (s(k) + a * s(k - 1)) ** 2 - (s(k - 1) + a * s(k - 2)) * (s(k + 1) + a * s(k))


def consts(n, k):
    a, b, c, d = (comb(n, k - 1), comb(n, k), comb(n, k + 1), comb(n, k + 2))
    den = F(6 * a * c**3 + 6 * b**3 * d - 4 * b**2 * c**2)
    th1 = 3 * (2 * a * c**3 + 2 * b**3 * d - b**2 * c**2 - 3 * a * b * c * d) / den
    th2 = c**2 * (3 * a * c - b**2) ** 2 / den
    t = F(b * (3 * b * d - c**2), c * (3 * a * c - b**2))
    A1 = b**2 * (1 - th1) - 2 * th2
    A2 = c**2 * (1 - th1) - 2 * t**2 * th2
    A3 = 18 * t * th2 - 9 * a * d
    return dict(abcd=(a, b, c, d), th1=th1, th2=th2, t=t, A1=A1, A2=A2, A3=A3,
                disc=A1 * A2 - A3**2 / 36)


def L(z, al, n, k):
    a, b, c, d = (comb(n, k - 1), comb(n, k), comb(n, k + 1), comb(n, k + 2))
    s1, s2, s3 = sigma(z, 1), sigma(z, 2), sigma(z, 3)
    return (al * b * s1 + c * s2) ** 2 - (3 * al * a + b * s1) * (al * c * s2 + 3 * d * s3)


def disc3(c0, c1, c2, c3):
    return (18 * c0 * c1 * c2 * c3 - 4 * c1**3 * c3 + c1**2 * c2**2
            - 4 * c0 * c2**3 - 27 * c0**2 * c3**2)


if __name__ == "__main__":
    x = [F(4), F(4), F(1, 4), F(1, 4)]
    print("sigma mixed", [str(sigma(x, j)) for j in range(5)])
    print("E mixed", [str(E(x, j)) for j in range(5)])
    print("combo", combo(x, [1, 0, 1]))
    print("newton k=2", E(x, 2) ** 2 - E(x, 1) * E(x, 3))
    print("newton (1,2,3) k=1", E([1, 2, 3], 1) ** 2 - E([1, 2, 3], 0) * E([1, 2, 3], 2))
    print("E(1,2,3,4)", [str(E([F(v) for v in (1, 2, 3, 4)], j)) for j in range(5)])
    print("gen_nm 95/18?", gen_nm([F(v) for v in (1, 2, 3, 4)], F(1), 1))
    print("gen_nm ratio", gen_nm([F(v) for v in (-2, -2, -2, 7)], F(2), 1))
    print("quant K0", quant([F(1), F(2), F(3)], F(-1), 0, F(1, 2)))
    print("N3K1", quant([F(1), F(2), F(3)], F(1), 1, F(1, 2)))
    print("liu_ren (1,2,3) k2 a1", liu_ren([F(1), F(2), F(3)], F(1), 2))
    print("liu_ren (2,2,2) k2 a1", liu_ren([F(2)] * 3, F(1), 2))
    for nk in [(4, 1), (5, 2), (4, 2), (6, 2)]:
        c = consts(*nk)
        print(nk, {k: (str(v) if not isinstance(v, tuple) else v) for k, v in c.items()})
    for nk in [(4, 1), (5, 2), (4, 2)]:
        a, b, c, d = consts(*nk)["abcd"]
        print("lemma31", nk, 3 * b * d - c**2, 3 * a * c - b**2,
              2 * a * c**3 + 2 * b**3 * d - b**2 * c**2 - 3 * a * b * c * d)
    print("L alpha0", L([F(1), F(2), F(3)], F(0), 4, 1))
    print("L 1,2,3 a1", L([F(1), F(2), F(3)], F(1), 4, 1))
    c = consts(4, 1)
    z = [F(1)] * 3
    V = c["A1"] * 3 + c["A2"] * 3 + c["A3"]
    print("V(1,1,1)", V)
    # remark
    print("remark k0", (F(-1) + 2) ** 2 - (F(-1) * 2 + 4))
    x = [F(2)] * 3
    print("remark n3 k2", gen_nm(x, F(-1), 2))
    # cubic (1,2,3,4),k=1
    xx = [F(v) for v in (1, 2, 3, 4)]
    cub = (E(xx, 0), -3 * E(xx, 1), 3 * E(xx, 2), -E(xx, 3))
    print("cubic", [str(v) for v in cub], "disc", disc3(*cub))
    xx = [F(1), F(-1), F(0)]
    print("cubic (1,-1,0)", [str(v) for v in (E(xx, 0), -3 * E(xx, 1), 3 * E(xx, 2), -E(xx, 3))])
    y = [F(1), F(-1), F(0), F(0), F(0)]
    print("degenerate E", [str(E(y, j)) for j in range(6)])
    # W(1,2,3), alpha0,t1
    z = [1, 2, 3]
    print("W", (1 - 2) ** 2 * 9 + (1 - 3) ** 2 * 4 + (2 - 3) ** 2 * 1)
    f1 = lambda n, k: -2 * k * k + 2 * (n - 2) * k + (n - 3)
    print("f1(5,1)", f1(5, 1))
